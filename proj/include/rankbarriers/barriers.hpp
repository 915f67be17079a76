#ifndef RANKBARRIERS_BARRIERS_HPP
#define RANKBARRIERS_BARRIERS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rankbarriers/grading.hpp"

namespace rankbarriers {

// Upper bounds on the potency (best achievable amplification mu(V)/mu(S))
// of linear lower-bound methods of the respective target kinds.  All exact
// big integers; arguments are validated (n >= 1, d >= 1, k >= 2).

// Methods into matrix spaces, source the d-fold tensor power of F^n.
BigInt pot_bound_matrix_tensor(std::uint64_t n, std::uint64_t d);

// Monomial-count pieces of the symmetric-source matrix-method bound:
// monomials of degree <= floor(d/2), resp. <= d - floor(d/2) - 1.
BigInt y_monomial_count(std::uint64_t n, std::uint64_t d);
BigInt z_monomial_count(std::uint64_t n, std::uint64_t d);

// Methods into matrix spaces, source degree-d forms in n variables.
BigInt pot_bound_matrix_waring(std::uint64_t n, std::uint64_t d);

// Methods into order-k tensor spaces.
BigInt pot_bound_tk_tensor(std::uint64_t n, std::uint64_t d, std::uint64_t k);
BigInt pot_bound_tk_waring(std::uint64_t n, std::uint64_t d, std::uint64_t k);

// Methods into degree-k symmetric (Waring) target spaces: an extra
// 2^(k-1) over the order-k tensor-target bounds.
BigInt pot_bound_wk_tensor(std::uint64_t n, std::uint64_t d, std::uint64_t k);
BigInt pot_bound_wk_waring(std::uint64_t n, std::uint64_t d, std::uint64_t k);

// Border-rank variants: same values as the rank versions.
BigInt pot_bound_border_tk_tensor(std::uint64_t n, std::uint64_t d,
                                  std::uint64_t k);
BigInt pot_bound_border_tk_waring(std::uint64_t n, std::uint64_t d,
                                  std::uint64_t k);

// Rank of a subspace product: min over positions p of the product of the
// remaining dimensions.
BigInt basic_subspace_bound(const std::vector<std::uint64_t>& dims);

// Potency reachable by plain flattenings / groupings (no barrier slack).
BigInt trivial_flattening_potency(std::uint64_t n, std::uint64_t d);
BigInt trivial_tk_potency(std::uint64_t n, std::uint64_t d, std::uint64_t k);

// Block-graded refinement: Y + Z with monomials counted per variable block
// (block i of size nvec[i], block degree <= dvec[i]), total degree
// <= floor(D/2) resp. <= D - floor(D/2) - 1 where D = sum(dvec).
BigInt smh_bound(const std::vector<std::uint64_t>& nvec,
                 const std::vector<std::uint64_t>& dvec);

// Closed forms of smh_bound specializations (cross-checked in tests):
// symmetric source of degree d in m variables ...
BigInt improved_waring_bound(std::uint64_t m, std::uint64_t d);
// ... d-fold tensor power of F^m ...
BigInt improved_tensor_bound(std::uint64_t m, std::uint64_t d);
// ... and a 3-factor space F^n1 x F^n2 x F^n3.
BigInt triple_tensor_bound(std::uint64_t n1, std::uint64_t n2,
                           std::uint64_t n3);

// Degree in n of a bound that is polynomial in n, extracted by exact finite
// differences of samples at n = 1..max_deg+2.
int growth_exponent_in_n(const std::function<BigInt(std::uint64_t)>& f,
                         int max_deg);

// Human-facing result of a bound computation.
struct BoundReport {
    std::string formula;
    std::map<std::string, std::string> params;
    BigInt value;
    std::vector<std::string> notes;
};

} // namespace rankbarriers

#endif
