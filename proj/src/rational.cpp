#include "dorder/rational.hpp"

#include <stdexcept>

namespace dorder {

Rational pow(const Rational& x, std::uint64_t e) {
    Rational result(1);
    Rational base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Int height(const Rational& x) {
    Int n = boost::multiprecision::abs(numerator(x));
    Int d = denominator(x);
    return n > d ? n : d;
}

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](Int& out) {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
    };
    Int num, den(1);
    digits(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        digits(den);
        if (den == 0) throw std::invalid_argument("zero denominator in rational");
    }
    if (i != text.size()) throw bad();
    if (neg) num = -num;
    return Rational(num, den);
}

} // namespace dorder
