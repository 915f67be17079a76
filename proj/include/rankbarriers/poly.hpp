#ifndef RANKBARRIERS_POLY_HPP
#define RANKBARRIERS_POLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "rankbarriers/errors.hpp"
#include "rankbarriers/scalars.hpp"

namespace rankbarriers {

// Sparse multivariate polynomial over the rationals (no degree bound).
class Poly {
public:
    explicit Poly(std::size_t n) : n_(n) {
        if (n == 0) throw ShapeError("polynomial needs >= 1 variable");
    }
    static Poly constant(std::size_t n, const Rational& c);
    static Poly variable(std::size_t n, std::size_t i);

    std::size_t n() const { return n_; }
    const std::map<std::vector<std::uint32_t>, Rational>& terms() const {
        return terms_;
    }

    void set_coeff(const std::vector<std::uint32_t>& e, const Rational& c);
    void add_coeff(const std::vector<std::uint32_t>& e, const Rational& c);
    Rational coeff(const std::vector<std::uint32_t>& e) const;

    bool is_zero() const { return terms_.empty(); }
    std::uint64_t total_degree() const; // 0 for the zero polynomial

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly pow(std::uint64_t k) const;

    Rational eval(const std::vector<Rational>& point) const;
    // Formal partial derivative with respect to variable i.
    Poly partial(std::size_t i) const;
    // Substitute z_i -> z_i + c_i.
    Poly shift(const std::vector<Rational>& c) const;

    bool operator==(const Poly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    std::size_t n_;
    std::map<std::vector<std::uint32_t>, Rational> terms_;
};

// Polynomial map F^n_in -> F^n_out with one component per output coordinate.
struct PolyMap {
    std::size_t n_in = 0;
    std::size_t n_out = 0;
    std::vector<Poly> components;
};

void validate_polymap(const PolyMap& m);

// Roots in Q of a univariate polynomial given by its coefficient list
// (ascending powers), via the rational root bound.  Ascending order.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

} // namespace rankbarriers

#endif
