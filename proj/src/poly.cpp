#include "rankbarriers/poly.hpp"

#include <algorithm>

namespace rankbarriers {

Poly Poly::constant(std::size_t n, const Rational& c) {
    Poly p(n);
    p.set_coeff(std::vector<std::uint32_t>(n, 0), c);
    return p;
}

Poly Poly::variable(std::size_t n, std::size_t i) {
    if (i >= n) throw ShapeError("variable index out of range");
    Poly p(n);
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    p.set_coeff(e, Rational(1));
    return p;
}

void Poly::set_coeff(const std::vector<std::uint32_t>& e, const Rational& c) {
    if (e.size() != n_) throw ShapeError("exponent vector length mismatch");
    if (sgn(c) == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void Poly::add_coeff(const std::vector<std::uint32_t>& e, const Rational& c) {
    if (e.size() != n_) throw ShapeError("exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (sgn(c) != 0) terms_[e] = c;
        return;
    }
    Rational s = it->second + c;
    if (sgn(s) == 0)
        terms_.erase(it);
    else
        it->second = s;
}

Rational Poly::coeff(const std::vector<std::uint32_t>& e) const {
    if (e.size() != n_) throw ShapeError("exponent vector length mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    if (n_ != o.n_) throw ShapeError("polynomial arity mismatch");
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_coeff(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (n_ != o.n_) throw ShapeError("polynomial arity mismatch");
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_coeff(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (n_ != o.n_) throw ShapeError("polynomial arity mismatch");
    Poly r(n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<std::uint32_t> e(n_);
            for (std::size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            Rational prod = c1 * c2;
            r.add_coeff(e, prod);
        }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(n_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, v] : terms_) {
        Rational s = v * c;
        r.set_coeff(e, s);
    }
    return r;
}

Poly Poly::pow(std::uint64_t k) const {
    Poly r = Poly::constant(n_, Rational(1));
    for (std::uint64_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != n_) throw ShapeError("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) {
                Rational t = term * point[i];
                term = t;
            }
        Rational s = acc + term;
        acc = s;
    }
    return acc;
}

Poly Poly::partial(std::size_t i) const {
    if (i >= n_) throw ShapeError("variable index out of range");
    Poly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        std::vector<std::uint32_t> f(e);
        f[i] -= 1;
        Rational d = c * Rational(static_cast<long>(e[i]));
        r.add_coeff(f, d);
    }
    return r;
}

Poly Poly::shift(const std::vector<Rational>& c) const {
    if (c.size() != n_) throw ShapeError("shift vector arity mismatch");
    Poly r(n_);
    for (const auto& [e, coef] : terms_) {
        // expand prod_i (z_i + c_i)^{e_i}
        Poly term = Poly::constant(n_, coef);
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            Poly lin = Poly::variable(n_, i) + Poly::constant(n_, c[i]);
            term = term * lin.pow(e[i]);
        }
        r = r + term;
    }
    return r;
}

void validate_polymap(const PolyMap& m) {
    if (m.components.size() != m.n_out)
        throw ShapeError("polynomial map needs one component per output");
    for (const auto& p : m.components)
        if (p.n() != m.n_in)
            throw ShapeError("polynomial map component arity mismatch");
}

namespace {

std::vector<BigInt> positive_divisors(const BigInt& x) {
    BigInt a = abs(x);
    std::vector<BigInt> divs;
    for (BigInt d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            BigInt q = a / d;
            if (q != d) divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // trim leading zeros (highest powers)
    std::vector<Rational> c(coeffs);
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    std::vector<Rational> roots;
    if (c.empty()) throw DomainError("zero polynomial has every root");
    if (c.size() == 1) return roots;
    auto eval = [&](const Rational& x) {
        Rational acc(0);
        for (std::size_t k = c.size(); k-- > 0;) {
            Rational t = acc * x + c[k];
            acc = t;
        }
        return acc;
    };
    // strip factors of z
    std::size_t low = 0;
    while (low < c.size() && sgn(c[low]) == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    // integer-scaled coefficients for the rational root bound
    BigInt scale(1);
    for (std::size_t k = low; k < c.size(); ++k) {
        BigInt den = c[k].get_den();
        BigInt g = gcd(scale, den);
        scale = scale / g * den;
    }
    BigInt a0 = BigInt(c[low].get_num()) * (scale / BigInt(c[low].get_den()));
    BigInt alead =
        BigInt(c.back().get_num()) * (scale / BigInt(c.back().get_den()));
    for (const BigInt& p : positive_divisors(a0))
        for (const BigInt& q : positive_divisors(alead)) {
            Rational cand = make_rational(p, q);
            if (sgn(eval(cand)) == 0) roots.push_back(cand);
            Rational neg = -cand;
            if (sgn(eval(neg)) == 0) roots.push_back(neg);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace rankbarriers
