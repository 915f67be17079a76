#ifndef RANKBARRIERS_METHODS_HPP
#define RANKBARRIERS_METHODS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankbarriers/spaces.hpp"

namespace rankbarriers {

// A coordinatized source or target space: either an order-d tensor product
// of F^(dims[i]) or the space of degree-d forms in n variables (monomial
// basis, lexicographic descending exponents).
struct SpaceDescriptor {
    enum class Kind { tensor, waring };

    Kind kind = Kind::tensor;
    std::vector<std::size_t> dims; // tensor kind
    std::size_t n = 0, d = 0;      // waring kind

    static SpaceDescriptor tensor_space(std::vector<std::size_t> dims);
    static SpaceDescriptor waring_space(std::size_t n, std::size_t d);

    std::size_t dimension() const;
    // Number of tensor factors, or the degree of the forms.
    std::size_t degree() const;
    bool is_matrix_space() const {
        return kind == Kind::tensor && dims.size() == 2;
    }

    bool operator==(const SpaceDescriptor& o) const {
        return kind == o.kind && dims == o.dims && n == o.n && d == o.d;
    }
};

// A linear lower-bound method: a linear map between coordinatized spaces.
struct RankMethod {
    SpaceDescriptor source;
    SpaceDescriptor target;
    Matrix<Rational> matrix; // target.dimension() rows, source.dimension() cols
};

void validate_method(const RankMethod& m);

std::vector<Rational> apply(const RankMethod& m,
                            const std::vector<Rational>& coords);

// Coordinates <-> concrete elements of a tensor-kind space.
Tensor<Rational> tensor_from_coords(const SpaceDescriptor& s,
                                    const std::vector<Rational>& coords);
std::vector<Rational> coords_from_tensor(const SpaceDescriptor& s,
                                         const Tensor<Rational>& t);

// The method that flattens the d-fold power of F^n along the given
// (0-based, ascending) positions; a coordinate permutation.
RankMethod make_flattening_method(std::size_t n, std::size_t d,
                                  const std::vector<std::size_t>& left);

// The method that regroups the d-fold power of F^n into k blocks.
RankMethod make_grouping_method(
    std::size_t n, std::size_t d,
    const std::vector<std::vector<std::uint32_t>>& parts);

struct SampleConfig {
    std::size_t trials = 50;
    std::int64_t coeff_bound = 5;
    std::uint64_t seed = 0;
};

// Largest target rank seen over sampled simples (integer coefficients in
// [-coeff_bound, coeff_bound]); a certified lower estimate of mu(S), hence
// potency computed from it is an upper estimate.  Requires a matrix target;
// throws OracleUnavailableError otherwise.
std::size_t mu_on_simples_sampled(const RankMethod& m, const SampleConfig& cfg);

// Sampled potency estimate: max target rank over random source points
// divided by the sampled mu(S).  Throws DegenerateMethodError when every
// sampled simple maps to zero.
Rational measured_potency_sampled(const RankMethod& m, const SampleConfig& cfg);

// A certified statement rank_S(v) >= ceil(rank(phi(v)) / mu_S).
struct RankCertificate {
    std::string element;
    std::size_t measured_rank = 0;
    std::size_t mu_s = 0;
    BigInt lower_bound;
};

RankCertificate lower_bound_certificate(const RankMethod& m,
                                        const std::vector<Rational>& coords,
                                        std::size_t mu_s,
                                        const std::string& element_id);

// Exact brute-force tensor rank over a prime field: least r <= r_max with a
// decomposition into r simples, or nullopt.  Factors are enumerated with the
// first factor unnormalized and the rest normalized to leading coefficient 1
// (covers all scalar multiples); throws SizeError past the cap.
std::optional<std::size_t> brute_trank(const Tensor<Fp>& t, std::size_t r_max,
                                       std::size_t cap = 1u << 24);

// Same for Waring rank of a degree-d form; requires p > d.
std::optional<std::size_t> brute_wrank(const HomogPoly<Fp>& f, std::uint64_t p,
                                       std::size_t r_max,
                                       std::size_t cap = 1u << 24);

// Exhaustively measured potency over F_p: mu(V) over the whole image
// subspace, mu(S) over every simple source element.
struct PotencyMeasurement {
    std::size_t mu_v = 0;
    std::size_t mu_s = 0;
};

PotencyMeasurement measured_potency_exhaustive_fp(const RankMethod& m,
                                                  std::uint64_t p,
                                                  std::size_t oracle_r_max = 8,
                                                  std::size_t cap = 1u << 24);

// Sampled mu(S) over F_p; works for any target kind small enough for the
// brute-force oracles.
std::size_t mu_on_simples_sampled_fp(const RankMethod& m, std::uint64_t p,
                                     const SampleConfig& cfg,
                                     std::size_t oracle_r_max = 8,
                                     std::size_t cap = 1u << 24);

} // namespace rankbarriers

#endif
