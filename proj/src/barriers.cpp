#include "rankbarriers/barriers.hpp"

#include "rankbarriers/errors.hpp"

namespace rankbarriers {

namespace {

void check_nd(std::uint64_t n, std::uint64_t d) {
    if (n < 1) throw DomainError("bound needs n >= 1");
    if (d < 1) throw DomainError("bound needs d >= 1");
}

void check_ndk(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    check_nd(n, d);
    if (k < 2) throw DomainError("bound needs target order k >= 2");
}

BigInt upow(std::uint64_t base, std::uint64_t exp) {
    return bigint_pow(BigInt(static_cast<unsigned long>(base)), exp);
}

} // namespace

BigInt pot_bound_matrix_tensor(std::uint64_t n, std::uint64_t d) {
    check_nd(n, d);
    return upow(2, d) * upow(n, d / 2);
}

BigInt y_monomial_count(std::uint64_t n, std::uint64_t d) {
    check_nd(n, d);
    return count_monomials_leq(n, static_cast<std::int64_t>(d / 2));
}

BigInt z_monomial_count(std::uint64_t n, std::uint64_t d) {
    check_nd(n, d);
    return count_monomials_leq(
        n, static_cast<std::int64_t>(d) - static_cast<std::int64_t>(d / 2) - 1);
}

BigInt pot_bound_matrix_waring(std::uint64_t n, std::uint64_t d) {
    return y_monomial_count(n, d) + z_monomial_count(n, d);
}

BigInt pot_bound_tk_tensor(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    check_ndk(n, d, k);
    return upow(k, d) * upow(n, (k - 1) * d / k);
}

BigInt pot_bound_tk_waring(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    check_ndk(n, d, k);
    BigInt total(0);
    for (const auto& mu : enumerate_weak_compositions(d, k))
        total += upsilon(mu, n);
    return total;
}

BigInt pot_bound_wk_tensor(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    return upow(2, k - 1) * pot_bound_tk_tensor(n, d, k);
}

BigInt pot_bound_wk_waring(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    return upow(2, k - 1) * pot_bound_tk_waring(n, d, k);
}

BigInt pot_bound_border_tk_tensor(std::uint64_t n, std::uint64_t d,
                                  std::uint64_t k) {
    return pot_bound_tk_tensor(n, d, k);
}

BigInt pot_bound_border_tk_waring(std::uint64_t n, std::uint64_t d,
                                  std::uint64_t k) {
    return pot_bound_tk_waring(n, d, k);
}

BigInt basic_subspace_bound(const std::vector<std::uint64_t>& dims) {
    if (dims.empty()) throw DomainError("subspace bound needs >= 1 factor");
    for (auto d : dims)
        if (d < 1) throw DomainError("subspace dimensions must be >= 1");
    BigInt best(0);
    for (std::size_t p = 0; p < dims.size(); ++p) {
        BigInt prod(1);
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (i != p) prod *= BigInt(static_cast<unsigned long>(dims[i]));
        if (p == 0 || prod < best) best = prod;
    }
    return best;
}

BigInt trivial_flattening_potency(std::uint64_t n, std::uint64_t d) {
    check_nd(n, d);
    return upow(n, d / 2);
}

BigInt trivial_tk_potency(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    check_ndk(n, d, k);
    return upow(n, (k - 1) * d / k);
}

BigInt smh_bound(const std::vector<std::uint64_t>& nvec,
                 const std::vector<std::uint64_t>& dvec) {
    if (nvec.empty() || nvec.size() != dvec.size())
        throw ShapeError("block sizes and degrees must be nonempty and aligned");
    for (auto n : nvec)
        if (n < 1) throw DomainError("block sizes must be >= 1");
    std::uint64_t total_deg = 0;
    for (auto d : dvec) {
        if (d < 1) throw DomainError("block degrees must be >= 1");
        total_deg += d;
    }
    BigInt y = count_smh_monomials(nvec, dvec,
                                   static_cast<std::int64_t>(total_deg / 2));
    BigInt z = count_smh_monomials(nvec, dvec,
                                   static_cast<std::int64_t>(total_deg) -
                                       static_cast<std::int64_t>(total_deg / 2) -
                                       1);
    return y + z;
}

BigInt improved_waring_bound(std::uint64_t m, std::uint64_t d) {
    if (m < 2) throw DomainError("improved bound needs >= 2 variables");
    check_nd(m - 1, d);
    std::uint64_t n = m - 1;
    if (d % 2 == 1) {
        std::uint64_t k = (d - 1) / 2;
        return 2 * binomial(n + k, k);
    }
    std::uint64_t k = (d - 2) / 2;
    return binomial(n + k, k) + binomial(n + k + 1, k + 1);
}

BigInt improved_tensor_bound(std::uint64_t m, std::uint64_t d) {
    if (m < 2) throw DomainError("improved bound needs local dimension >= 2");
    check_nd(m - 1, d);
    std::uint64_t n = m - 1;
    BigInt total(0);
    if (d % 2 == 1) {
        for (std::uint64_t i = 0; i <= d / 2; ++i)
            total += binomial(d, i) * upow(n, i);
        return 2 * total;
    }
    for (std::uint64_t i = 0; i + 1 <= d / 2; ++i)
        total += binomial(d, i) * upow(n, i);
    total = 2 * total;
    total += binomial(d, d / 2) * upow(n, d / 2);
    return total;
}

BigInt triple_tensor_bound(std::uint64_t n1, std::uint64_t n2,
                           std::uint64_t n3) {
    if (n1 < 2 || n2 < 2 || n3 < 2)
        throw DomainError("triple bound needs all dimensions >= 2");
    return BigInt(2) * (BigInt(static_cast<unsigned long>(n1)) +
                        BigInt(static_cast<unsigned long>(n2)) +
                        BigInt(static_cast<unsigned long>(n3))) -
           4;
}

int growth_exponent_in_n(const std::function<BigInt(std::uint64_t)>& f,
                         int max_deg) {
    if (max_deg < 0) throw DomainError("maximum degree must be >= 0");
    std::vector<BigInt> vals;
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(max_deg) + 2; ++n)
        vals.push_back(f(n));
    int deg = -1;
    auto all_zero = [&] {
        for (const auto& v : vals)
            if (v != 0) return false;
        return true;
    };
    while (!all_zero()) {
        ++deg;
        if (deg > max_deg)
            throw DomainError("values are not polynomial of the stated degree");
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
            vals[i] = vals[i + 1] - vals[i];
        vals.pop_back();
    }
    return deg;
}

} // namespace rankbarriers
