#ifndef RANKBARRIERS_ELUSIVE_HPP
#define RANKBARRIERS_ELUSIVE_HPP

#include <optional>

#include "rankbarriers/poly.hpp"

namespace rankbarriers {

// True iff {1, p_1, ..., p_m} is linearly independent over Q, decided by
// the rank of the stacked coefficient matrix.  Inputs must be univariate.
bool is_linearly_elusive(const std::vector<Poly>& polys);

// True iff target = sum_i c_i * gens[i] for naturals c_i with sum <= d.
// Generator exponents must be nonnegative rationals.
bool dspan_member(const Rational& target, const std::vector<Rational>& gens,
                  std::uint64_t d);

// How one target exponent is produced: e_i alone, or e_i + e_j (i <= j,
// equality meaning a doubled exponent).
struct CoverPattern {
    std::uint32_t i = 0;
    std::optional<std::uint32_t> j;
};

struct CoverAssignment {
    std::vector<CoverPattern> patterns; // one per target, in input order
    std::vector<Rational> exponents;    // e_1..e_r, all >= 0
};

// Decide whether nonnegative rational exponents e_1..e_r exist such that
// every target lies in {e_i} ∪ {e_i + e_j}: enumerate all pattern
// assignments, solve each induced linear system exactly, and test the
// solution set for a nonnegative point.  Deterministic first-found order;
// exhaustive, hence a decision procedure.  Caps: <= 6 targets, r <= 3.
std::optional<CoverAssignment> monomial_cover_feasible(
    const std::vector<Rational>& targets, std::size_t r);

} // namespace rankbarriers

#endif
