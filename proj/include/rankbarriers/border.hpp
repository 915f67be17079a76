#ifndef RANKBARRIERS_BORDER_HPP
#define RANKBARRIERS_BORDER_HPP

#include <optional>

#include "rankbarriers/tensor.hpp"

namespace rankbarriers {

// Tensor with entries in Q[eps]; arithmetic stays exact (no truncation).
using EpsTensor = Tensor<EpsPoly>;
using EpsVec = std::vector<EpsPoly>;

// Lift a rational tensor to constant eps-polynomial entries.
EpsTensor eps_tensor_from(const Tensor<Rational>& t);

// Certificate that eps^{q-1} * t = T1 + eps^q * T2 where
// T1 = sum of the r simple eps-tensors built from t1_factors.
struct DegenerationWitness {
    std::size_t r = 0;
    std::size_t q = 1;
    // r tuples; tuple i holds one factor vector per tensor slot.
    std::vector<std::vector<EpsVec>> t1_factors;
    EpsTensor t2;
};

// Sum of the simple eps-tensors described by the witness factors.
EpsTensor witness_t1(const DegenerationWitness& w,
                     const std::vector<std::size_t>& dims);

// Checks the identity eps^{q-1} * t = T1 + eps^q * T2 coefficientwise at
// every eps-degree.  Shape mismatches throw; a failed identity returns false.
bool verify_degeneration(const Tensor<Rational>& t,
                         const DegenerationWitness& w);

// Search cap; 0 picks the RANKBARRIERS_MAX_SEARCH environment variable or a
// built-in default.
std::size_t degeneration_search_cap(std::size_t requested);

// Deterministic search for a witness with at most r simple terms: factor
// vector entries are eps-polynomials of degree <= eps_deg_max with
// coefficients drawn from coeff_pool.  Candidates are tried by increasing q,
// then increasing total eps-degree, then lexicographic pool order; every hit
// is re-checked with verify_degeneration before being returned.
std::optional<DegenerationWitness> search_degeneration(
    const Tensor<Rational>& t, std::size_t r, std::size_t q_max,
    unsigned eps_deg_max, const std::vector<Rational>& coeff_pool,
    std::size_t work_cap = 0);

// Generator count of a submodule presentation: an upper bound for its rank
// (minimality is not decided).
std::size_t module_rank_upper(const std::vector<EpsVec>& generators);

} // namespace rankbarriers

#endif
