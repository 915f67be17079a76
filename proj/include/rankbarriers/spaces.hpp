#ifndef RANKBARRIERS_SPACES_HPP
#define RANKBARRIERS_SPACES_HPP

#include <cstdint>
#include <vector>

#include "rankbarriers/tensor.hpp"

namespace rankbarriers {

// Scalar from a big integer, shaped like an existing element.
inline Rational scalar_from_bigint(const BigInt& v, const Rational&) {
    return Rational(v);
}
inline Fp scalar_from_bigint(const BigInt& v, const Fp& like) {
    BigInt m = v % BigInt(static_cast<unsigned long>(like.modulus()));
    if (sgn(m) < 0) m += BigInt(static_cast<unsigned long>(like.modulus()));
    return Fp(m.get_ui(), like.modulus());
}

// d-th power of the linear form with the given coefficients, expanded via
// multinomial coefficients.  Valid in any characteristic.
template <typename T>
HomogPoly<T> power_of_linear(const std::vector<T>& ell, std::size_t d) {
    if (ell.empty()) throw ShapeError("linear form needs >= 1 coefficient");
    HomogPoly<T> f(ell.size(), d);
    for (const auto& e : monomials_of_degree(ell.size(), d)) {
        T c = scalar_from_bigint(multinomial(d, e), ell[0]);
        for (std::size_t i = 0; i < ell.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) {
                T p = c * ell[i];
                c = p;
            }
        f.add_coeff(e, c);
    }
    return f;
}

// One weighted linear form of a power-sum decomposition.
struct GlynnTerm {
    Rational c;
    std::vector<Rational> ell; // coefficients over all n variables
};

// Decomposition of the squarefree monomial x_{vars[0]} ... x_{vars[d-1]}
// (in n variables) as a sum of 2^(d-1) weighted d-th powers of linear
// forms: coefficient (prod delta)/(2^(d-1) d!), form sum_k delta_k x_k,
// with delta ranging over {1} x {1,-1}^(d-1).
std::vector<GlynnTerm> glynn_decompose(std::size_t d,
                                       const std::vector<std::size_t>& vars,
                                       std::size_t n);

// The target monomial of the decomposition above.
HomogPoly<Rational> squarefree_monomial(std::size_t d,
                                        const std::vector<std::size_t>& vars,
                                        std::size_t n);

// Expand sum_i c_i ell_i^d and compare with the target monomial.
bool glynn_expansion_matches(const std::vector<GlynnTerm>& terms,
                             std::size_t d,
                             const std::vector<std::size_t>& vars,
                             std::size_t n);

// Symmetric embedding of a degree-k form in n variables into the k-fold
// tensor power: the entry at an index tuple with content e is
// coeff(e) / multinomial(k, e).  Sends ell^k to the simple tensor
// ell x ... x ell.
Tensor<Rational> comon_embed(const HomogPoly<Rational>& f,
                             std::size_t cap = std::size_t(1) << 22);

// Inverse on symmetric tensors: coefficient of x^e is the sum of the
// entries over all index tuples of content e.  Throws SymmetryError when
// the tensor is not symmetric, ShapeError on unequal local dimensions.
HomogPoly<Rational> comon_project(const Tensor<Rational>& t);

// Entry-wise reductions mod p.  Throw CharacteristicError when a
// denominator vanishes mod p.
Tensor<Fp> tensor_mod(const Tensor<Rational>& t, std::uint64_t p);
HomogPoly<Fp> homog_poly_mod(const HomogPoly<Rational>& f, std::uint64_t p);

// Coordinates of a degree-d form in the monomial basis ordered as
// monomials_of_degree(n, d) (lexicographic descending exponents).
std::vector<Rational> coords_of_poly(const HomogPoly<Rational>& f);
HomogPoly<Rational> poly_from_coords(std::size_t n, std::size_t d,
                                     const std::vector<Rational>& coords);

} // namespace rankbarriers

#endif
