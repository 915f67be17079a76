#include "rankbarriers/scalars.hpp"

#include <cctype>

namespace rankbarriers {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

std::string to_string(const BigInt& x) {
    return x.get_str();
}

Rational rational_from_string(const std::string& s) {
    // Accept [-]digits or [-]digits/[-]digits, nothing else.
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ValidationError("malformed rational: '" + s + "'");
    BigInt n(num), d(den);
    if (sgn(d) == 0)
        throw ValidationError("zero denominator in rational: '" + s + "'");
    return make_rational(n, d);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (std::uint64_t f = 11; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

Fp::Fp(std::uint64_t value, std::uint64_t p) {
    if (!is_prime_u64(p)) throw DomainError("modulus is not prime");
    p_ = p;
    v_ = value % p;
}

Fp Fp::operator+(const Fp& o) const {
    check_same(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return with(s);
}

Fp Fp::operator-(const Fp& o) const {
    check_same(o);
    return with(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_);
}

Fp Fp::operator*(const Fp& o) const {
    check_same(o);
    return with(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(v_) * o.v_) % p_));
}

Fp Fp::inv() const {
    if (v_ == 0) throw DomainError("division by zero in prime field");
    // Extended Euclid on (v, p).
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_),
                 newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return with(static_cast<std::uint64_t>(t));
}

Fp Fp::operator/(const Fp& o) const {
    check_same(o);
    return *this * o.inv();
}

Fp reduce_mod(const Rational& x, std::uint64_t p) {
    if (!is_prime_u64(p)) throw DomainError("modulus is not prime");
    BigInt num = x.get_num();
    BigInt den = x.get_den();
    BigInt pz(static_cast<unsigned long>(p));
    BigInt dm = den % pz;
    if (sgn(dm) == 0)
        throw CharacteristicError("denominator vanishes mod " + std::to_string(p));
    BigInt nm = num % pz;
    if (sgn(nm) < 0) nm += pz;
    Fp n(nm.get_ui(), p);
    Fp d(dm.get_ui(), p);
    return n / d;
}

EpsPoly::EpsPoly(const Rational& constant) {
    if (sgn(constant) != 0) c_.push_back(constant);
}

EpsPoly EpsPoly::monomial(const Rational& c, unsigned deg) {
    EpsPoly r;
    if (sgn(c) != 0) {
        r.c_.assign(deg + 1, Rational(0));
        r.c_[deg] = c;
    }
    return r;
}

Rational EpsPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

void EpsPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
    EpsPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        Rational s = r.c_[i] + o.c_[i];
        r.c_[i] = s;
    }
    r.trim();
    return r;
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const {
    return *this + (-o);
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
    if (c_.empty() || o.c_.empty()) return EpsPoly();
    EpsPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            Rational s = r.c_[i + j] + c_[i] * o.c_[j];
            r.c_[i + j] = s;
        }
    r.trim();
    return r;
}

EpsPoly EpsPoly::shifted(unsigned k) const {
    if (c_.empty() || k == 0) {
        EpsPoly r(*this);
        return r;
    }
    EpsPoly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

bool EpsPoly::divisible_by_eps_pow(unsigned k) const {
    for (std::size_t i = 0; i < c_.size() && i < k; ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

EpsPoly EpsPoly::div_eps_pow(unsigned k) const {
    if (!divisible_by_eps_pow(k))
        throw DomainError("polynomial not divisible by requested eps power");
    EpsPoly r;
    if (c_.size() > k) r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

EpsPoly EpsPoly::truncated(unsigned k) const {
    EpsPoly r;
    r.c_.assign(c_.begin(),
                c_.begin() + std::min<std::size_t>(c_.size(), k));
    r.trim();
    return r;
}

} // namespace rankbarriers
