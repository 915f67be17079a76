#ifndef RANKBARRIERS_SCALARS_HPP
#define RANKBARRIERS_SCALARS_HPP

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "rankbarriers/errors.hpp"

namespace rankbarriers {

// Exact arbitrary-precision rational.  Always stored reduced with a positive
// denominator (GMP keeps mpq_class canonical under arithmetic).
using Rational = mpq_class;
using BigInt = mpz_class;

// Construct a reduced rational from numerator/denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

// Serialize as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

// Parse "p/q" or "p" (optional leading '-').  Throws ValidationError on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Deterministic primality test (trial division; moduli here are small).
bool is_prime_u64(std::uint64_t n);

// Prime-field element.  Carries its modulus so mixed-modulus arithmetic is
// rejected instead of silently wrong.
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(std::uint64_t value, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return with(v_ == 0 ? 0 : p_ - v_); }
    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inv() const;

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    Fp with(std::uint64_t v) const {
        Fp r;
        r.v_ = v;
        r.p_ = p_;
        return r;
    }
    void check_same(const Fp& o) const {
        if (p_ != o.p_) throw DomainError("mixed prime-field moduli");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

// Reduce a rational mod p.  Throws CharacteristicError when the denominator
// vanishes mod p.
Fp reduce_mod(const Rational& x, std::uint64_t p);

// Polynomial in one nilpotent-free formal variable eps over the rationals.
// Exact: never truncated by arithmetic.  Not a field (no division).
class EpsPoly {
public:
    EpsPoly() = default;
    EpsPoly(const Rational& constant);
    EpsPoly(int constant) : EpsPoly(Rational(constant)) {}
    static EpsPoly monomial(const Rational& c, unsigned deg);

    // Coefficient list by eps-degree; empty means zero, no trailing zeros.
    const std::vector<Rational>& coeffs() const { return c_; }
    // Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t k) const;

    EpsPoly operator-() const;
    EpsPoly operator+(const EpsPoly& o) const;
    EpsPoly operator-(const EpsPoly& o) const;
    EpsPoly operator*(const EpsPoly& o) const;
    EpsPoly& operator+=(const EpsPoly& o) { return *this = *this + o; }
    EpsPoly& operator-=(const EpsPoly& o) { return *this = *this - o; }
    EpsPoly& operator*=(const EpsPoly& o) { return *this = *this * o; }

    // Multiply by eps^k.
    EpsPoly shifted(unsigned k) const;
    // True when eps^k divides this polynomial.
    bool divisible_by_eps_pow(unsigned k) const;
    // Exact quotient by eps^k; throws DomainError when not divisible.
    EpsPoly div_eps_pow(unsigned k) const;
    // Truncation mod eps^k (coefficients 0..k-1).
    EpsPoly truncated(unsigned k) const;

    bool operator==(const EpsPoly& o) const { return c_ == o.c_; }
    bool operator!=(const EpsPoly& o) const { return !(*this == o); }

private:
    void trim();
    std::vector<Rational> c_;
};

// Scalar-kind traits used by the generic linear algebra.
template <typename T>
struct is_field : std::false_type {};
template <>
struct is_field<Rational> : std::true_type {};
template <>
struct is_field<Fp> : std::true_type {};
template <typename T>
inline constexpr bool is_field_v = is_field<T>::value;

// Additive/multiplicative identities shaped like an existing element
// (Fp needs the modulus carried over).
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline EpsPoly zero_like(const EpsPoly&) { return EpsPoly(); }
inline EpsPoly one_like(const EpsPoly&) { return EpsPoly(Rational(1)); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const EpsPoly& x) { return x.is_zero(); }

} // namespace rankbarriers

#endif
