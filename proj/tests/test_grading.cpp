#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "rankbarriers/grading.hpp"

using namespace rankbarriers;

namespace {

// Pascal-triangle oracle, independent of the library implementation.
BigInt binom_oracle(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigInt(0);
    std::vector<BigInt> row{BigInt(1)};
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::vector<BigInt> next(i + 1, BigInt(1));
        for (std::uint64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

// Count exponent vectors in {0..cap}^n with total degree <= / == bound by
// direct odometer enumeration.
std::uint64_t count_exps(std::size_t n, std::uint64_t cap, std::uint64_t bound,
                         bool exact) {
    std::vector<std::uint64_t> e(n, 0);
    std::uint64_t count = 0;
    for (;;) {
        std::uint64_t s = 0;
        for (auto x : e) s += x;
        if (exact ? s == bound : s <= bound) ++count;
        std::size_t j = n;
        bool done = true;
        while (j > 0) {
            --j;
            if (++e[j] <= cap) {
                done = false;
                break;
            }
            e[j] = 0;
        }
        if (done) break;
    }
    return count;
}

} // namespace

TEST_CASE("binomial and factorial match the Pascal oracle") {
    for (std::uint64_t n = 0; n <= 12; ++n)
        for (std::uint64_t k = 0; k <= n + 2; ++k)
            CHECK(binomial(n, k) == binom_oracle(n, k));
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(3, {1, 1, 1}) == 6);
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK(multinomial(4, {4, 0}) == 1);
    CHECK(multinomial(5, {2, 1, 2}) == 30);
    // d! / prod e_i! computed directly
    for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; b <= 3; ++b)
            for (std::uint32_t c = 0; c <= 3; ++c) {
                BigInt expect = factorial(a + b + c) /
                                (factorial(a) * factorial(b) * factorial(c));
                CHECK(multinomial(a + b + c, {a, b, c}) == expect);
            }
}

TEST_CASE("bigint power") {
    CHECK(bigint_pow(BigInt(2), 10) == 1024);
    CHECK(bigint_pow(BigInt(7), 0) == 1);
    CHECK(bigint_pow(BigInt(0), 3) == 0);
    CHECK(bigint_pow(BigInt(-3), 3) == -27);
}

TEST_CASE("set multi-degree of blocked exponent vectors") {
    CHECK(sm_deg({1, 0, 0, 1}, {2, 2}) == MultiDeg{1, 1});
    CHECK(sm_deg({0, 0, 0, 0}, {2, 2}) == MultiDeg{0, 0});
    CHECK(sm_deg({2, 1, 0, 0}, {2, 2}) == MultiDeg{3, 0});
    CHECK(sm_deg({1, 2, 3}, {1, 1, 1}) == MultiDeg{1, 2, 3});
    CHECK_THROWS_AS(sm_deg({1, 0, 0}, {2, 2}), ShapeError);
}

TEST_CASE("component-wise partial order is a partial order") {
    std::mt19937_64 rng(23);
    auto rand_deg = [&] {
        MultiDeg d(3);
        for (auto& x : d) x = rng() % 4;
        return d;
    };
    for (int t = 0; t < 200; ++t) {
        MultiDeg a = rand_deg(), b = rand_deg(), c = rand_deg();
        CHECK(multideg_leq(a, a));
        if (multideg_leq(a, b) && multideg_leq(b, a)) CHECK(a == b);
        if (multideg_leq(a, b) && multideg_leq(b, c)) CHECK(multideg_leq(a, c));
    }
}

TEST_CASE("support subsets and indicator vectors are inverse") {
    CHECK(support_subset({1, 0, 1}) == std::vector<std::uint32_t>{0, 2});
    CHECK(support_subset({0, 0, 0}).empty());
    CHECK(indicator_vector({0, 1}, 2) == MultiDeg{1, 1});
    CHECK(indicator_vector({}, 3) == MultiDeg{0, 0, 0});
    CHECK_THROWS_AS(support_subset({2, 0}), DomainError);

    // round trip over every subset of {0..4}
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
        std::vector<std::uint32_t> subset;
        for (std::uint32_t i = 0; i < 5; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        MultiDeg ind = indicator_vector(subset, 5);
        CHECK(support_subset(ind) == subset);
        CHECK(indicator_vector(support_subset(ind), 5) == ind);
    }
}

TEST_CASE("ordered set partitions: count, order, validity") {
    CHECK(enumerate_set_partitions(2, 2).size() == 4);
    CHECK(enumerate_set_partitions(1, 7).size() == 7);
    CHECK(enumerate_set_partitions(3, 3).size() == 27);

    auto sp22 = enumerate_set_partitions(2, 2);
    // lexicographic over assignment functions: (0,0),(0,1),(1,0),(1,1)
    CHECK(sp22[0] == SetPartition{{0, 1}, {}});
    CHECK(sp22[1] == SetPartition{{0}, {1}});
    CHECK(sp22[2] == SetPartition{{1}, {0}});
    CHECK(sp22[3] == SetPartition{{}, {0, 1}});

    for (std::size_t d = 1; d <= 4; ++d)
        for (std::size_t k = 1; k <= 3; ++k) {
            auto parts = enumerate_set_partitions(d, k);
            CHECK(BigInt(parts.size()) == bigint_pow(BigInt(k), d));
            std::set<SetPartition> distinct(parts.begin(), parts.end());
            CHECK(distinct.size() == parts.size());
            for (const auto& p : parts) {
                REQUIRE(p.size() == k);
                // blocks ascending and their indicators sum to all-ones
                MultiDeg total(d, 0);
                for (const auto& blk : p) {
                    CHECK(std::is_sorted(blk.begin(), blk.end()));
                    MultiDeg ind = indicator_vector(blk, d);
                    for (std::size_t i = 0; i < d; ++i) total[i] += ind[i];
                }
                CHECK(total == MultiDeg(d, 1));
            }
        }

    CHECK_THROWS_AS(enumerate_set_partitions(0, 2), DomainError);
    CHECK_THROWS_AS(enumerate_set_partitions(2, 0), DomainError);
    CHECK_THROWS_AS(enumerate_set_partitions(30, 2, 100), SizeError);
}

TEST_CASE("weak compositions: count, order, validity") {
    CHECK(enumerate_weak_compositions(3, 3).size() == 10);
    CHECK(enumerate_weak_compositions(5, 1) ==
          std::vector<std::vector<std::uint32_t>>{{5}});
    CHECK(enumerate_weak_compositions(2, 2) ==
          std::vector<std::vector<std::uint32_t>>{{0, 2}, {1, 1}, {2, 0}});

    for (std::size_t d = 1; d <= 6; ++d)
        for (std::size_t k = 1; k <= 4; ++k) {
            auto comps = enumerate_weak_compositions(d, k);
            CHECK(BigInt(comps.size()) == binomial(d + k - 1, k - 1));
            CHECK(std::is_sorted(comps.begin(), comps.end()));
            for (const auto& mu : comps) {
                REQUIRE(mu.size() == k);
                std::uint64_t s = 0;
                for (auto x : mu) s += x;
                CHECK(s == d);
            }
        }

    // zero distributes in exactly one way; zero parts is meaningless
    CHECK(enumerate_weak_compositions(0, 2) ==
          std::vector<std::vector<std::uint32_t>>{{0, 0}});
    CHECK_THROWS_AS(enumerate_weak_compositions(1, 0), DomainError);
    CHECK_THROWS_AS(enumerate_weak_compositions(100, 5, 10), SizeError);
}

TEST_CASE("monomial counting matches brute enumeration") {
    CHECK(count_monomials_leq(2, 1) == 3);
    CHECK(count_monomials_leq(5, 0) == 1);
    CHECK(count_monomials_leq(3, 2) == 10);
    CHECK(count_monomials_leq(3, -1) == 0);
    CHECK(count_monomials_leq(3, -7) == 0);

    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t dd = 0; dd <= 5; ++dd) {
            CHECK(count_monomials_leq(n, static_cast<std::int64_t>(dd)) ==
                  count_exps(n, dd, dd, false));
            CHECK(count_monomials_eq(n, dd) == count_exps(n, dd, dd, true));
        }
}

TEST_CASE("upsilon drops exactly one maximal part") {
    CHECK(upsilon({3, 0, 0}, 2) == 1);
    CHECK(upsilon({2, 1, 0}, 2) == 2);
    CHECK(upsilon({1, 1, 1}, 2) == 4);
    CHECK(upsilon({0, 3, 0}, 2) == 1);

    // hand oracle: product over j != l of C(n+mu_j-1, mu_j), any argmax l
    auto oracle = [](const std::vector<std::uint32_t>& mu, std::uint64_t n,
                     std::size_t l) {
        BigInt prod(1);
        for (std::size_t j = 0; j < mu.size(); ++j)
            if (j != l) prod *= binomial(n + mu[j] - 1, mu[j]);
        return prod;
    };
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::uint32_t> mu(1 + rng() % 4);
        for (auto& x : mu) x = rng() % 4;
        std::uint64_t n = 1 + rng() % 4;
        std::uint32_t mx = *std::max_element(mu.begin(), mu.end());
        // the product value does not depend on which argmax is dropped
        for (std::size_t l = 0; l < mu.size(); ++l)
            if (mu[l] == mx) CHECK(upsilon(mu, n) == oracle(mu, n, l));
    }
}

TEST_CASE("upsilon sum over weak compositions of (3,3) at n=2") {
    // parts: 3 permutations of (3,0,0) -> 1; 6 of (2,1,0) -> 2; (1,1,1) -> 4
    BigInt total(0);
    std::size_t ones = 0, twos = 0, fours = 0;
    for (const auto& mu : enumerate_weak_compositions(3, 3)) {
        BigInt u = upsilon(mu, 2);
        total += u;
        if (u == 1) ++ones;
        if (u == 2) ++twos;
        if (u == 4) ++fours;
    }
    CHECK(ones == 3);
    CHECK(twos == 6);
    CHECK(fours == 1);
    CHECK(total == 19);
}

TEST_CASE("block-graded monomial counts match brute enumeration") {
    CHECK(count_smh_monomials({2, 2}, {1, 1}, 0) == 1);
    CHECK(count_smh_monomials({3}, {4}, 2) == count_monomials_leq(3, 2));
    CHECK(count_smh_monomials({3}, {1}, 5) == count_monomials_leq(3, 1));
    CHECK(count_smh_monomials({2, 2}, {1, 1}, -1) == 0);

    // brute oracle: odometer over all variables, per-block degree caps
    auto brute = [](const std::vector<std::uint64_t>& nvec,
                    const std::vector<std::uint64_t>& dvec,
                    std::int64_t bound) -> std::uint64_t {
        if (bound < 0) return 0;
        std::size_t vars = 0;
        for (auto n : nvec) vars += n;
        std::vector<std::uint64_t> e(vars, 0);
        std::uint64_t maxd = 0;
        for (auto d : dvec) maxd = std::max(maxd, d);
        std::uint64_t count = 0;
        for (;;) {
            bool ok = true;
            std::uint64_t total = 0, pos = 0;
            for (std::size_t b = 0; b < nvec.size() && ok; ++b) {
                std::uint64_t s = 0;
                for (std::uint64_t i = 0; i < nvec[b]; ++i) s += e[pos + i];
                pos += nvec[b];
                if (s > dvec[b]) ok = false;
                total += s;
            }
            if (ok && total <= static_cast<std::uint64_t>(bound)) ++count;
            std::size_t j = vars;
            bool done = true;
            while (j > 0) {
                --j;
                if (++e[j] <= maxd) {
                    done = false;
                    break;
                }
                e[j] = 0;
            }
            if (done) break;
        }
        return count;
    };

    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
        cases = {{{2, 2}, {1, 1}},   {{1, 2, 1}, {2, 1, 3}},
                 {{3}, {4}},         {{2, 1}, {2, 2}},
                 {{1, 1, 1}, {1, 1, 1}}};
    for (const auto& [nvec, dvec] : cases) {
        std::uint64_t dsum = 0;
        for (auto d : dvec) dsum += d;
        for (std::int64_t bound = 0; bound <= static_cast<std::int64_t>(dsum);
             ++bound)
            CHECK(count_smh_monomials(nvec, dvec, bound) ==
                  brute(nvec, dvec, bound));
    }

    // all blocks of size n with degree caps 1: sum_{i<=D} C(d,i) n^i
    for (std::uint64_t n = 1; n <= 4; ++n)
        for (std::size_t d = 1; d <= 5; ++d)
            for (std::uint64_t D = 0; D <= d; ++D) {
                BigInt expect(0);
                for (std::uint64_t i = 0; i <= D; ++i)
                    expect += binomial(d, i) * bigint_pow(BigInt(n), i);
                CHECK(count_smh_monomials(
                          std::vector<std::uint64_t>(d, n),
                          std::vector<std::uint64_t>(d, 1),
                          static_cast<std::int64_t>(D)) == expect);
            }

    CHECK_THROWS_AS(count_smh_monomials({2}, {1, 1}, 1), ShapeError);
    // no blocks leaves only the empty monomial
    CHECK(count_smh_monomials({}, {}, 1) == 1);
    CHECK(count_smh_monomials({}, {}, -1) == 0);
}

TEST_CASE("degree-d monomial enumeration is lex-descending and complete") {
    auto ms = monomials_of_degree(3, 2);
    CHECK(BigInt(ms.size()) == binomial(3 + 2 - 1, 2));
    CHECK(ms.front() == std::vector<std::uint32_t>{2, 0, 0});
    CHECK(ms.back() == std::vector<std::uint32_t>{0, 0, 2});
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ms[i] > ms[i + 1]);

    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t d = 0; d <= 4; ++d) {
            auto all = monomials_of_degree(n, d);
            CHECK(BigInt(all.size()) == count_monomials_eq(n, d));
            std::set<std::vector<std::uint32_t>> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            for (const auto& e : all) {
                std::uint64_t s = 0;
                for (auto x : e) s += x;
                CHECK(s == d);
            }
        }
}
