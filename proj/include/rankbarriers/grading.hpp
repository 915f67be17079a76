#ifndef RANKBARRIERS_GRADING_HPP
#define RANKBARRIERS_GRADING_HPP

#include <cstdint>
#include <vector>

#include "rankbarriers/scalars.hpp"

namespace rankbarriers {

// Multi-degree: one natural number per variable block.
using MultiDeg = std::vector<std::uint64_t>;

// Ordered set partition of {0..d-1} into k (possibly empty) blocks,
// each block listed ascending.
using SetPartition = std::vector<std::vector<std::uint32_t>>;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
// d! / (e_1! ... e_n!) for sum(e) == d.
BigInt multinomial(std::uint64_t d, const std::vector<std::uint32_t>& e);
BigInt bigint_pow(const BigInt& base, std::uint64_t exp);

// Set multi-degree of an exponent vector with respect to consecutive
// variable blocks of the given sizes.  Throws ShapeError when the block
// sizes do not partition the exponent positions.
MultiDeg sm_deg(const std::vector<std::uint32_t>& exponents,
                const std::vector<std::size_t>& block_sizes);

// Component-wise partial order on multi-degrees of equal length.
bool multideg_leq(const MultiDeg& a, const MultiDeg& b);

// Zero-one multi-degree -> ascending list of supported positions.
// Throws DomainError when an entry is neither 0 nor 1.
std::vector<std::uint32_t> support_subset(const MultiDeg& f);

// Ascending duplicate-free positions < k -> zero-one multi-degree.
MultiDeg indicator_vector(const std::vector<std::uint32_t>& subset,
                          std::size_t k);

// All ordered partitions of {0..d-1} into k possibly-empty blocks, in
// lexicographic order of the element->block assignment function.
// Exactly k^d results; throws SizeError beyond the cap.
std::vector<SetPartition> enumerate_set_partitions(std::size_t d, std::size_t k,
                                                   std::size_t cap = 1u << 22);

// All length-k tuples of naturals summing to d, ascending lexicographic.
// Exactly binomial(d+k-1, k-1) results.
std::vector<std::vector<std::uint32_t>> enumerate_weak_compositions(
    std::size_t d, std::size_t k, std::size_t cap = 1u << 22);

// Number of monomials of total degree <= max_deg in n variables
// (0 when max_deg < 0).
BigInt count_monomials_leq(std::uint64_t n, std::int64_t max_deg);

// Number of monomials of total degree exactly d in n variables.
BigInt count_monomials_eq(std::uint64_t n, std::uint64_t d);

// Number of block-graded monomials: variable blocks of sizes nvec, degree in
// block i at most dvec[i], total degree at most max_deg.
BigInt count_smh_monomials(const std::vector<std::uint64_t>& nvec,
                           const std::vector<std::uint64_t>& dvec,
                           std::int64_t max_deg);

// Product over the non-maximal parts of mu of binomial(n + mu_j - 1, mu_j);
// the dropped part is the first one attaining the maximum.
BigInt upsilon(const std::vector<std::uint32_t>& mu, std::uint64_t n);

// All exponent vectors over n variables of total degree exactly d, in
// lexicographic descending order (so (d,0,...,0) comes first).
std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::size_t n,
                                                            std::size_t d);

} // namespace rankbarriers

#endif
