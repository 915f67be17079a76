#include "rankbarriers/grading.hpp"

#include <algorithm>

#include "rankbarriers/errors.hpp"

namespace rankbarriers {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt multinomial(std::uint64_t d, const std::vector<std::uint32_t>& e) {
    std::uint64_t sum = 0;
    for (auto x : e) sum += x;
    if (sum != d) throw DomainError("multinomial exponents do not sum to degree");
    BigInt r = factorial(d);
    for (auto x : e) r /= factorial(x);
    return r;
}

BigInt bigint_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

MultiDeg sm_deg(const std::vector<std::uint32_t>& exponents,
                const std::vector<std::size_t>& block_sizes) {
    std::size_t total = 0;
    for (auto b : block_sizes) total += b;
    if (total != exponents.size())
        throw ShapeError("block sizes do not partition the exponent vector");
    MultiDeg deg;
    deg.reserve(block_sizes.size());
    std::size_t pos = 0;
    for (auto b : block_sizes) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < b; ++i) s += exponents[pos + i];
        deg.push_back(s);
        pos += b;
    }
    return deg;
}

bool multideg_leq(const MultiDeg& a, const MultiDeg& b) {
    if (a.size() != b.size())
        throw ShapeError("multi-degrees of different lengths are incomparable");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<std::uint32_t> support_subset(const MultiDeg& f) {
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > 1) throw DomainError("support expects a zero-one vector");
        if (f[i] == 1) s.push_back(static_cast<std::uint32_t>(i));
    }
    return s;
}

MultiDeg indicator_vector(const std::vector<std::uint32_t>& subset,
                          std::size_t k) {
    MultiDeg f(k, 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= k) throw DomainError("subset element out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw DomainError("subset must be strictly ascending");
        f[subset[i]] = 1;
    }
    return f;
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t d, std::size_t k,
                                                   std::size_t cap) {
    if (d == 0 || k == 0) throw DomainError("set partitions need d,k >= 1");
    BigInt total = bigint_pow(BigInt(static_cast<unsigned long>(k)), d);
    if (total > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("set-partition enumeration exceeds cap");
    std::vector<SetPartition> out;
    out.reserve(total.get_ui());
    std::vector<std::uint32_t> assign(d, 0); // element -> block
    for (;;) {
        SetPartition part(k);
        for (std::size_t i = 0; i < d; ++i)
            part[assign[i]].push_back(static_cast<std::uint32_t>(i));
        out.push_back(std::move(part));
        // next assignment in lexicographic order
        std::size_t i = d;
        bool done = true;
        while (i > 0) {
            --i;
            if (assign[i] + 1 < k) {
                ++assign[i];
                std::fill(assign.begin() + i + 1, assign.end(), 0);
                done = false;
                break;
            }
            assign[i] = 0;
        }
        if (done) return out;
    }
}

std::vector<std::vector<std::uint32_t>> enumerate_weak_compositions(
    std::size_t d, std::size_t k, std::size_t cap) {
    if (k == 0) throw DomainError("weak compositions need k >= 1");
    BigInt total = binomial(d + k - 1, k - 1);
    if (total > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("weak-composition enumeration exceeds cap");
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(total.get_ui());
    std::vector<std::uint32_t> mu(k, 0);
    // recursive lexicographic ascending enumeration
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
        if (pos + 1 == k) {
            mu[pos] = remaining;
            out.push_back(mu);
            return;
        }
        for (std::uint32_t v = 0; v <= remaining; ++v) {
            mu[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, static_cast<std::uint32_t>(d));
    return out;
}

BigInt count_monomials_leq(std::uint64_t n, std::int64_t max_deg) {
    if (max_deg < 0) return BigInt(0);
    return binomial(n + static_cast<std::uint64_t>(max_deg),
                    static_cast<std::uint64_t>(max_deg));
}

BigInt count_monomials_eq(std::uint64_t n, std::uint64_t d) {
    if (n == 0) return BigInt(d == 0 ? 1 : 0);
    return binomial(n + d - 1, d);
}

BigInt count_smh_monomials(const std::vector<std::uint64_t>& nvec,
                           const std::vector<std::uint64_t>& dvec,
                           std::int64_t max_deg) {
    if (nvec.size() != dvec.size())
        throw ShapeError("block sizes and block degree caps differ in length");
    if (max_deg < 0) return BigInt(0);
    std::uint64_t cap = static_cast<std::uint64_t>(max_deg);
    // counts[t] = number of monomial prefixes of total degree t
    std::vector<BigInt> counts(cap + 1, BigInt(0));
    counts[0] = 1;
    for (std::size_t b = 0; b < nvec.size(); ++b) {
        std::vector<BigInt> next(cap + 1, BigInt(0));
        for (std::uint64_t t = 0; t <= cap; ++t) {
            if (counts[t] == 0) continue;
            std::uint64_t dmax = std::min(dvec[b], cap - t);
            for (std::uint64_t s = 0; s <= dmax; ++s)
                next[t + s] += counts[t] * count_monomials_eq(nvec[b], s);
        }
        counts.swap(next);
    }
    BigInt total(0);
    for (const auto& c : counts) total += c;
    return total;
}

BigInt upsilon(const std::vector<std::uint32_t>& mu, std::uint64_t n) {
    if (mu.empty()) throw DomainError("upsilon needs a nonempty composition");
    if (n == 0) throw DomainError("upsilon needs n >= 1");
    std::size_t l = 0;
    for (std::size_t j = 1; j < mu.size(); ++j)
        if (mu[j] > mu[l]) l = j;
    BigInt r(1);
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (j == l) continue;
        r *= binomial(n + mu[j] - 1, mu[j]);
    }
    return r;
}

std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::size_t n,
                                                            std::size_t d) {
    std::vector<std::vector<std::uint32_t>> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<std::uint32_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
        if (pos + 1 == n) {
            e[pos] = remaining;
            out.push_back(e);
            return;
        }
        for (std::int64_t v = remaining; v >= 0; --v) {
            e[pos] = static_cast<std::uint32_t>(v);
            self(self, pos + 1, remaining - static_cast<std::uint32_t>(v));
        }
    };
    rec(rec, 0, static_cast<std::uint32_t>(d));
    return out;
}

} // namespace rankbarriers
