#ifndef RANKBARRIERS_SERIES_HPP
#define RANKBARRIERS_SERIES_HPP

#include <optional>
#include <utility>

#include "rankbarriers/poly.hpp"

namespace rankbarriers {

// Univariate power series around a rational center, truncated at a fixed
// order: coefficients of (z - center)^k for k = 0..order.
class UniSeries {
public:
    UniSeries(const Rational& center, std::size_t order)
        : center_(center), c_(order + 1, Rational(0)) {}
    UniSeries(const Rational& center, std::vector<Rational> coeffs)
        : center_(center), c_(std::move(coeffs)) {
        if (c_.empty()) throw ShapeError("series needs >= 1 coefficient");
    }

    const Rational& center() const { return center_; }
    std::size_t order() const { return c_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }
    void set_coeff(std::size_t k, const Rational& v) {
        if (k >= c_.size()) throw ShapeError("coefficient index beyond order");
        c_[k] = v;
    }

    UniSeries truncated(std::size_t order) const;

    UniSeries operator+(const UniSeries& o) const;
    UniSeries operator-(const UniSeries& o) const;
    UniSeries operator*(const UniSeries& o) const;
    UniSeries scaled(const Rational& c) const;
    // Multiplicative inverse; requires a nonzero constant term.
    UniSeries inverse() const;

    bool operator==(const UniSeries& o) const {
        return center_ == o.center_ && c_ == o.c_;
    }
    bool operator!=(const UniSeries& o) const { return !(*this == o); }

private:
    void check_center(const UniSeries& o) const {
        if (center_ != o.center_)
            throw DomainError("series centers do not match");
    }
    Rational center_;
    std::vector<Rational> c_;
};

// Composition outer(inner): requires inner's constant term to equal outer's
// center (so the substituted series starts inside outer's disk).  The result
// is a series around inner's center.
UniSeries series_compose(const UniSeries& outer, const UniSeries& inner);

// Multivariate power series around a rational center, truncated at a fixed
// total degree.
class MultiSeries {
public:
    MultiSeries(std::size_t n, std::vector<Rational> center, std::size_t trunc);

    static MultiSeries from_poly(const Poly& p,
                                 const std::vector<Rational>& center,
                                 std::size_t trunc);
    // Reinterpret a univariate expansion as a series in one coordinate
    // around 0 (the coefficients carry over verbatim).
    static MultiSeries from_uni(const UniSeries& s);

    std::size_t n() const { return n_; }
    const std::vector<Rational>& center() const { return center_; }
    std::size_t trunc() const { return trunc_; }
    const std::map<std::vector<std::uint32_t>, Rational>& terms() const {
        return c_;
    }

    Rational coeff(const std::vector<std::uint32_t>& e) const;
    void set_coeff(const std::vector<std::uint32_t>& e, const Rational& v);

    bool is_zero() const { return c_.empty(); }

    MultiSeries truncated(std::size_t trunc) const;

    MultiSeries operator+(const MultiSeries& o) const;
    MultiSeries operator-(const MultiSeries& o) const;
    MultiSeries operator*(const MultiSeries& o) const;
    MultiSeries scaled(const Rational& c) const;

    bool operator==(const MultiSeries& o) const {
        return n_ == o.n_ && center_ == o.center_ && trunc_ == o.trunc_ &&
               c_ == o.c_;
    }
    bool operator!=(const MultiSeries& o) const { return !(*this == o); }

private:
    void check_compatible(const MultiSeries& o) const;
    std::size_t n_;
    std::vector<Rational> center_;
    std::size_t trunc_;
    std::map<std::vector<std::uint32_t>, Rational> c_;
};

// Compose a series in k variables with k argument series sharing shape;
// argument i must have constant term equal to outer's center coordinate i.
MultiSeries series_compose(const MultiSeries& outer,
                           const std::vector<MultiSeries>& inners);

// Evaluate a polynomial in r variables at r argument series (shared shape).
MultiSeries poly_eval_series(const Poly& p,
                             const std::vector<MultiSeries>& args);

// y as an algebraic function of z: a bivariate vanishing polynomial
// P(z, y) (variable 0 is z, variable 1 is y), an expansion center c and a
// seed b0 with P(c, b0) = 0.
struct AlgebraicFunctionSpec {
    Poly p = Poly(2);
    Rational center;
    Rational seed;
};

// Power-series solution y(z) = b0 + ... around the center, to the given
// order, by Newton iteration with doubling precision.  Throws BadSeedError
// when P(c, b0) != 0 and NonEtaleError when dP/dy (c, b0) = 0.
UniSeries hensel_lift(const AlgebraicFunctionSpec& spec, std::size_t order);

// Polynomial in y_1..y_r whose coefficients are multivariate series in z.
struct SeriesPoly {
    std::size_t r = 0;
    std::map<std::vector<std::uint32_t>, MultiSeries> terms;
};

MultiSeries series_poly_eval(const SeriesPoly& f,
                             const std::vector<MultiSeries>& ys);

// Solve F_i(y_1..y_r) = 0 order by order from a seed with invertible
// constant Jacobian.  All coefficient series must share shape; the result
// series share it too.
std::vector<MultiSeries> newton_system_lift(const std::vector<SeriesPoly>& eqs,
                                            const std::vector<Rational>& seed,
                                            std::size_t order);

// Check L(z + c) = M(p_1(z), ..., p_r(z)) as series identities up to the
// given total degree (all p_i centered at 0).
bool verify_transfer(const PolyMap& L, const PolyMap& M,
                     const std::vector<Rational>& center,
                     const std::vector<MultiSeries>& p, std::size_t order);

// Check L(z + c) = sum_{i<a} factor_series[i][0] x ... x factor_series[i][k-1]
// coordinate-wise, where L maps into the coordinates of a tensor space with
// the given dimensions.
bool verify_rank_transfer(
    const PolyMap& L, std::size_t a, const std::vector<Rational>& center,
    const std::vector<std::vector<std::vector<MultiSeries>>>& factor_series,
    const std::vector<std::size_t>& target_dims, std::size_t order);

// Deterministic search for a regular expansion point of P(z, y) = 0: try
// centers 0, 1, -1, 2, -2, ... and rational seeds; returns (center, seed)
// with P(c, b0) = 0 and dP/dy (c, b0) != 0, or nullopt within the budget.
std::optional<std::pair<Rational, Rational>> find_regular_seed(
    const Poly& p, std::size_t center_budget);

} // namespace rankbarriers

#endif
