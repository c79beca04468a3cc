#ifndef DORDER_IO_HPP
#define DORDER_IO_HPP

#include "dorder/fraction.hpp"
#include "dorder/poly.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dorder {

// Parse diagnostic with position information. what() carries the full
// "line L, col C: message" rendering.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t col);
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_, col_;
};

// Polynomial text grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := NAME ('^' UINT)?
//   coeff  := UINT | UINT '/' UINT
// Variable names must be declared in the context.
Poly parse_poly(std::string_view text, const ContextPtr& ctx, std::size_t line = 1,
                std::size_t col_offset = 0);

// Fraction text: `expr` or `(expr)/(expr)`; the context must be pure field.
Fraction parse_fraction(std::string_view text, const ContextPtr& ctx,
                        std::size_t line = 1, std::size_t col_offset = 0);

// Comma-separated rationals, e.g. "1,-2/3,0".
std::vector<Rational> parse_rational_csv(std::string_view text);

// Canonical serialization: terms in dominance-descending order, factors in
// declared variable order. Re-parses to the same value.
std::string to_string(const Poly& p);
std::string to_string(const Fraction& x);

// Context header lines as they appear in files and reports.
std::string generators_line(const Context& ctx);
std::string base_ring_line(const Context& ctx);

// A polynomial file:
//   generators: u, t
//   base_ring: Z[u]          (optional; default Z)
//   vars: X1, X2             (optional; indeterminate block)
//   poly: X2 - X1^2          (one per line)
struct PolyFile {
    ContextPtr ctx;
    std::vector<Poly> polys;
};

// A point file:
//   generators: u, t
//   base_ring: Z
//   coords: t, (t^3+1)/(t)
struct PointFile {
    ContextPtr ctx; // pure field
    std::vector<Fraction> coords;
};

PolyFile parse_poly_file(std::istream& in);
PointFile parse_point_file(std::istream& in);
PolyFile load_poly_file(const std::string& path);
PointFile load_point_file(const std::string& path);

// Context from command-line flags: a generator list "u, t", a base ring
// "Z" or "Z[u]", and an optional indeterminate list.
ContextPtr make_cli_context(const std::string& generators, const std::string& base_ring,
                            const std::string& vars = "");

} // namespace dorder

#endif
