#ifndef DORDER_EXPONENTS_HPP
#define DORDER_EXPONENTS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dorder {

// Exponent vector of a monomial. Length is fixed by the owning context;
// componentwise addition is overflow-checked.
class Exponents {
public:
    Exponents() = default;
    explicit Exponents(std::size_t n) : e_(n, 0) {}
    explicit Exponents(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    static Exponents unit(std::size_t n, std::size_t i, std::uint32_t power = 1);

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const;

    // Componentwise sum; throws std::overflow_error on wraparound.
    Exponents plus(const Exponents& o) const;

    // Sum of entries in [first, first + count).
    std::uint64_t degree_span(std::size_t first, std::size_t count) const;

    bool operator==(const Exponents& o) const { return e_ == o.e_; }

private:
    std::vector<std::uint32_t> e_;
};

// The dominance term order: lexicographic with the LAST position most
// significant, so that each later generator outranks everything built
// from the earlier ones.
bool dominance_less(const Exponents& a, const Exponents& b);

struct DominanceLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return dominance_less(a, b);
    }
};

} // namespace dorder

#endif
