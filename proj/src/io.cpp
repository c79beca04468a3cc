#include "dorder/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dorder {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t col)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + message),
      line_(line), col_(col) {}

namespace {

struct Token {
    enum class Kind { Number, Name, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t col = 0;
};

class Lexer {
public:
    Lexer(std::string_view text, std::size_t line, std::size_t col_offset)
        : text_(text), line_(line), col_offset_(col_offset) {
        advance();
    }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        fail_at(message, tok_.col);
    }

    [[noreturn]] void fail_at(const std::string& message, std::size_t col) const {
        throw ParseError(message, line_, col);
    }

    std::size_t line() const { return line_; }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_.col = col_offset_ + pos_ + 1;
        if (pos_ >= text_.size()) {
            tok_ = {Token::Kind::End, "", tok_.col};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = {Token::Kind::Number, std::string(text_.substr(start, pos_ - start)),
                    col_offset_ + start + 1};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::Name, std::string(text_.substr(start, pos_ - start)),
                    col_offset_ + start + 1};
            return;
        }
        tok_ = {Token::Kind::Symbol, std::string(1, c), col_offset_ + pos_ + 1};
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;
    std::size_t line_;
    std::size_t col_offset_;
};

bool is_symbol(const Token& t, char c) {
    return t.kind == Token::Kind::Symbol && t.text[0] == c;
}

Int parse_uint(Lexer& lex, const char* what) {
    if (lex.peek().kind != Token::Kind::Number) lex.fail(std::string("expected ") + what);
    return Int(lex.take().text);
}

// factor := NAME ('^' UINT)?
void parse_factor(Lexer& lex, const ContextPtr& ctx, Exponents& exps) {
    Token name = lex.take();
    auto var = ctx->index_of(name.text);
    if (!var)
        lex.fail_at("unknown variable '" + name.text + "'", name.col);
    std::uint64_t power = 1;
    if (is_symbol(lex.peek(), '^')) {
        lex.take();
        Int p = parse_uint(lex, "exponent");
        if (p > 0xffffffffu) lex.fail("exponent too large");
        power = p.convert_to<std::uint64_t>();
    }
    Exponents one = Exponents::unit(ctx->nvars(), *var,
                                    static_cast<std::uint32_t>(power));
    exps = exps.plus(one);
}

// term := coeff ('*' factor)* | factor ('*' factor)*
void parse_term(Lexer& lex, const ContextPtr& ctx, int term_sign, Poly& acc) {
    Rational coeff(term_sign);
    Exponents exps(ctx->nvars());
    bool any = false;
    if (lex.peek().kind == Token::Kind::Number) {
        Int num = parse_uint(lex, "number");
        Int den(1);
        if (is_symbol(lex.peek(), '/')) {
            lex.take();
            den = parse_uint(lex, "denominator");
            if (den == 0) lex.fail("zero denominator");
        }
        coeff *= Rational(num, den);
        any = true;
    } else if (lex.peek().kind == Token::Kind::Name) {
        parse_factor(lex, ctx, exps);
        any = true;
    } else {
        lex.fail("expected coefficient or variable");
    }
    while (is_symbol(lex.peek(), '*')) {
        lex.take();
        if (lex.peek().kind != Token::Kind::Name) lex.fail("expected variable after '*'");
        parse_factor(lex, ctx, exps);
    }
    (void)any;
    acc = acc + Poly::monomial(ctx, std::move(exps), std::move(coeff));
}

// expr := ('+'|'-')? term (('+'|'-') term)*
Poly parse_expr(Lexer& lex, const ContextPtr& ctx) {
    Poly acc(ctx);
    int sign = 1;
    if (is_symbol(lex.peek(), '+') || is_symbol(lex.peek(), '-')) {
        sign = lex.take().text[0] == '-' ? -1 : 1;
    }
    parse_term(lex, ctx, sign, acc);
    while (is_symbol(lex.peek(), '+') || is_symbol(lex.peek(), '-')) {
        sign = lex.take().text[0] == '-' ? -1 : 1;
        parse_term(lex, ctx, sign, acc);
    }
    return acc;
}

Poly parse_paren_expr(Lexer& lex, const ContextPtr& ctx) {
    if (!is_symbol(lex.peek(), '(')) lex.fail("expected '('");
    lex.take();
    Poly p = parse_expr(lex, ctx);
    if (!is_symbol(lex.peek(), ')')) lex.fail("expected ')'");
    lex.take();
    return p;
}

Fraction parse_fraction_tokens(Lexer& lex, const ContextPtr& ctx) {
    if (is_symbol(lex.peek(), '(')) {
        Poly num = parse_paren_expr(lex, ctx);
        if (!is_symbol(lex.peek(), '/')) return Fraction(std::move(num));
        lex.take();
        Poly den = parse_paren_expr(lex, ctx);
        if (den.is_zero()) lex.fail("zero denominator");
        return Fraction(std::move(num), std::move(den));
    }
    return Fraction(parse_expr(lex, ctx));
}

void expect_end(Lexer& lex) {
    if (lex.peek().kind != Token::Kind::End)
        lex.fail("unexpected trailing input '" + lex.peek().text + "'");
}

// ---------------------------------------------------------------------
// Serialization

void append_term(std::string& out, const Context& ctx, const Exponents& e,
                 const Rational& c, bool first) {
    int s = sign(c);
    if (first) {
        if (s < 0) out += "-";
    } else {
        out += s < 0 ? " - " : " + ";
    }
    Rational mag = s < 0 ? Rational(-c) : c;
    std::string factors;
    for (std::size_t i = 0; i < ctx.nvars(); ++i) {
        if (e[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += ctx.var_name(i);
        if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
        out += to_string(mag);
    } else {
        if (mag != 1) out += to_string(mag) + "*";
        out += factors;
    }
}

} // namespace

Poly parse_poly(std::string_view text, const ContextPtr& ctx, std::size_t line,
                std::size_t col_offset) {
    Lexer lex(text, line, col_offset);
    Poly p = parse_expr(lex, ctx);
    expect_end(lex);
    return p;
}

Fraction parse_fraction(std::string_view text, const ContextPtr& ctx, std::size_t line,
                        std::size_t col_offset) {
    Lexer lex(text, line, col_offset);
    Fraction f = parse_fraction_tokens(lex, ctx);
    expect_end(lex);
    return f;
}

std::vector<Rational> parse_rational_csv(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(
            start, comma == std::string_view::npos ? text.size() - start : comma - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string_view::npos)
            throw std::invalid_argument("empty entry in rational list");
        out.push_back(parse_rational(piece.substr(a, b - a + 1)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        append_term(out, *p.context(), it->first, it->second, first);
        first = false;
    }
    return out;
}

std::string to_string(const Fraction& x) {
    if (x.den().is_constant() && x.den().constant_value() == 1)
        return to_string(x.num());
    return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

std::string generators_line(const Context& ctx) {
    std::string out = "generators:";
    for (std::size_t i = 0; i < ctx.ngens(); ++i)
        out += (i == 0 ? " " : ", ") + ctx.var_name(i);
    return out;
}

std::string base_ring_line(const Context& ctx) {
    std::string out = "base_ring: Z";
    if (ctx.base_cutoff() > 0) {
        out += "[";
        for (std::size_t i = 0; i < ctx.base_cutoff(); ++i)
            out += (i == 0 ? "" : ", ") + ctx.var_name(i);
        out += "]";
    }
    return out;
}

// ---------------------------------------------------------------------
// File loading

namespace {

struct HeaderLine {
    std::string key;
    std::string value;
    std::size_t line_no;
    std::size_t value_col;
};

std::vector<std::string> split_csv_names(const std::string& value, std::size_t line_no) {
    std::vector<std::string> names;
    std::size_t start = 0;
    bool any_content = value.find_first_not_of(" \t") != std::string::npos;
    if (!any_content) return names;
    while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        std::string piece = value.substr(
            start, comma == std::string::npos ? value.size() - start : comma - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw ParseError("empty name in list", line_no, start + 1);
        names.push_back(piece.substr(a, b - a + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return names;
}

struct RawFile {
    std::vector<HeaderLine> lines;
};

RawFile read_lines(std::istream& in) {
    RawFile raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos || line[a] == '#') continue;
        std::size_t colon = line.find(':', a);
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value'", line_no, a + 1);
        std::string key = line.substr(a, colon - a);
        std::size_t kb = key.find_last_not_of(" \t");
        key = key.substr(0, kb + 1);
        raw.lines.push_back({key, line.substr(colon + 1), line_no, colon + 2});
    }
    return raw;
}

// generators/base_ring header shared by all file kinds.
ContextPtr parse_header(const RawFile& raw, std::vector<std::string> indets,
                        std::size_t* consumed_vars_line) {
    std::vector<std::string> gens;
    bool saw_gens = false;
    std::size_t base_cutoff = 0;
    std::vector<std::string> base_names;
    bool saw_base = false;
    for (const auto& h : raw.lines) {
        if (h.key == "generators") {
            if (saw_gens) throw ParseError("duplicate 'generators'", h.line_no, 1);
            gens = split_csv_names(h.value, h.line_no);
            saw_gens = true;
        } else if (h.key == "base_ring") {
            if (saw_base) throw ParseError("duplicate 'base_ring'", h.line_no, 1);
            std::string v = h.value;
            std::size_t a = v.find_first_not_of(" \t");
            std::size_t b = v.find_last_not_of(" \t");
            if (a == std::string::npos)
                throw ParseError("empty base_ring", h.line_no, h.value_col);
            v = v.substr(a, b - a + 1);
            if (v == "Z") {
                base_names.clear();
            } else if (v.size() >= 3 && v[0] == 'Z' && v[1] == '[' && v.back() == ']') {
                base_names = split_csv_names(v.substr(2, v.size() - 3), h.line_no);
            } else {
                throw ParseError("base_ring must be 'Z' or 'Z[g1, ...]'", h.line_no,
                                 h.value_col);
            }
            saw_base = true;
        } else if (h.key == "vars") {
            if (consumed_vars_line) {
                if (*consumed_vars_line != 0)
                    throw ParseError("duplicate 'vars'", h.line_no, 1);
                indets = split_csv_names(h.value, h.line_no);
                *consumed_vars_line = h.line_no;
            }
        }
    }
    if (!saw_gens) throw ParseError("missing 'generators' header", 1, 1);
    base_cutoff = base_names.size();
    for (std::size_t i = 0; i < base_names.size(); ++i) {
        if (i >= gens.size() || gens[i] != base_names[i])
            throw ParseError("base_ring generators must be a prefix of 'generators'", 1, 1);
    }
    return Context::make(std::move(gens), base_cutoff, std::move(indets));
}

} // namespace

PolyFile parse_poly_file(std::istream& in) {
    RawFile raw = read_lines(in);
    std::size_t vars_line = 0;
    ContextPtr ctx = parse_header(raw, {}, &vars_line);
    PolyFile file;
    file.ctx = ctx;
    for (const auto& h : raw.lines) {
        if (h.key == "poly")
            file.polys.push_back(parse_poly(h.value, ctx, h.line_no, h.value_col - 1));
        else if (h.key == "coords")
            throw ParseError("'coords' not allowed in a polynomial file", h.line_no, 1);
    }
    return file;
}

PointFile parse_point_file(std::istream& in) {
    RawFile raw = read_lines(in);
    for (const auto& h : raw.lines)
        if (h.key == "vars")
            throw ParseError("point files must not declare 'vars'", h.line_no, 1);
    ContextPtr ctx = parse_header(raw, {}, nullptr);
    PointFile file;
    file.ctx = ctx;
    bool saw_coords = false;
    for (const auto& h : raw.lines) {
        if (h.key == "poly")
            throw ParseError("'poly' not allowed in a point file", h.line_no, 1);
        if (h.key != "coords") continue;
        if (saw_coords) throw ParseError("duplicate 'coords'", h.line_no, 1);
        saw_coords = true;
        // Comma-split at paren depth zero, then parse each fraction.
        std::size_t depth = 0, start = 0;
        const std::string& v = h.value;
        auto flush = [&](std::size_t end) {
            std::string_view piece(v.data() + start, end - start);
            file.coords.push_back(
                parse_fraction(piece, ctx, h.line_no, h.value_col - 1 + start));
            start = end + 1;
        };
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == '(') ++depth;
            else if (v[i] == ')') { if (depth) --depth; }
            else if (v[i] == ',' && depth == 0) flush(i);
        }
        flush(v.size());
    }
    if (!saw_coords) throw ParseError("missing 'coords' line", 1, 1);
    return file;
}

namespace {

template <typename T>
T load_file(const std::string& path, T (*parse)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse(in);
}

} // namespace

PolyFile load_poly_file(const std::string& path) {
    return load_file(path, parse_poly_file);
}

PointFile load_point_file(const std::string& path) {
    return load_file(path, parse_point_file);
}

ContextPtr make_cli_context(const std::string& generators, const std::string& base_ring,
                            const std::string& vars) {
    std::istringstream in("generators: " + generators + "\nbase_ring: " + base_ring +
                          (vars.empty() ? "" : "\nvars: " + vars) + "\n");
    RawFile raw = read_lines(in);
    std::size_t vars_line = 0;
    return parse_header(raw, {}, &vars_line);
}

} // namespace dorder
