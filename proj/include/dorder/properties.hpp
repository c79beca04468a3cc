#ifndef DORDER_PROPERTIES_HPP
#define DORDER_PROPERTIES_HPP

#include "dorder/gen.hpp"
#include "dorder/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dorder {

struct FamilyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string note;
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<FamilyResult> families;
    std::string warning;

    bool all_pass() const {
        for (const auto& f : families)
            if (f.failures != 0) return false;
        return true;
    }
};

// Negative-control hook: FlipCompareSign inverts the comparison used by
// the total-order family, which must then report failures.
enum class Mutation { None, FlipCompareSign };

// Executes every module's invariant families with seeded generators.
// `trials` scales the per-family effort; 0 is a vacuous pass with a
// warning.
SuiteResult run_property_suite(std::uint64_t seed, std::size_t trials,
                               Mutation mutation = Mutation::None);

// A point whose coordinates have pairwise distinct leading monomials plus
// finite-or-infinitesimal perturbations, so that every nonzero integer
// combination of coordinates is infinite. Used by theorem-conformance
// checks; `arity` at most 5.
SpecPoint clearance_alpha(Gen& gen, const ContextPtr& field, std::size_t arity);

// Random nonconstant member of M[X1..Xn] over the given ring context.
Poly random_m_corpus_poly(Gen& gen, const ContextPtr& ring, std::uint32_t max_deg,
                          long long coeff_bound);

} // namespace dorder

#endif
