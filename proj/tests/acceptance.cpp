// Acceptance gate: one timed criterion per line, PASS/FAIL verdicts, and a
// nonzero exit when anything fails or overruns its pinned budget.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rankbarriers/barriers.hpp"
#include "rankbarriers/border.hpp"
#include "rankbarriers/elusive.hpp"
#include "rankbarriers/grading.hpp"
#include "rankbarriers/methods.hpp"
#include "rankbarriers/series.hpp"
#include "rankbarriers/spaces.hpp"

using namespace rankbarriers;

namespace {

struct Criterion {
    std::string label;
    long budget_ms;
    std::function<void()> body; // throws std::runtime_error on failure
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

Tensor<Rational> w_tensor() {
    Tensor<Rational> t({2, 2, 2}, Rational(0));
    t.at({0, 0, 1}) = Rational(1);
    t.at({0, 1, 0}) = Rational(1);
    t.at({1, 0, 0}) = Rational(1);
    return t;
}

EpsPoly ep(long c0, long c1) {
    EpsPoly p;
    p = p + EpsPoly::monomial(Rational(c0), 0);
    p = p + EpsPoly::monomial(Rational(c1), 1);
    return p;
}

DegenerationWitness hand_w_witness() {
    DegenerationWitness w;
    w.r = 2;
    w.q = 2;
    EpsVec curve = {ep(1, 0), ep(0, 1)};
    EpsVec minus_e1 = {ep(-1, 0), ep(0, 0)};
    EpsVec e1 = {ep(1, 0), ep(0, 0)};
    w.t1_factors = {{curve, curve, curve}, {minus_e1, e1, e1}};
    w.t2 = EpsTensor({2, 2, 2}, EpsPoly());
    w.t2.at({0, 1, 1}) = ep(-1, 0);
    w.t2.at({1, 0, 1}) = ep(-1, 0);
    w.t2.at({1, 1, 0}) = ep(-1, 0);
    w.t2.at({1, 1, 1}) = ep(0, -1);
    return w;
}

// ---- criterion bodies -----------------------------------------------------

void crit_product_decomposition() {
    for (std::size_t d = 1; d <= 6; ++d) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < d; ++i) vars.push_back(i);
        auto terms = glynn_decompose(d, vars, d);
        expect(terms.size() == (std::size_t{1} << (d - 1)),
               "term count != 2^(d-1) at d=" + std::to_string(d));
        Rational expected_abs =
            Rational(1) / Rational(BigInt(std::size_t{1} << (d - 1)) *
                                   factorial(d));
        HomogPoly<Rational> acc(d, d);
        for (const auto& t : terms) {
            Rational a = t.c;
            if (sgn(a) < 0) {
                Rational neg = -a;
                a = neg;
            }
            expect(a == expected_abs,
                   "|coefficient| mismatch at d=" + std::to_string(d));
            acc = acc + power_of_linear(t.ell, d).scaled(t.c);
        }
        auto residual = acc - squarefree_monomial(d, vars, d);
        expect(residual.is_zero(),
               "nonzero expansion residual at d=" + std::to_string(d));
    }
}

void crit_formula_recovery() {
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (std::uint64_t d = 1; d <= 12; ++d) {
            BigInt expected =
                bigint_pow(2, d) * bigint_pow(BigInt(n), d / 2);
            expect(pot_bound_tk_tensor(n, d, 2) == expected,
                   "order-2 bound != 2^d n^(d/2) at n=" + std::to_string(n) +
                       ", d=" + std::to_string(d));
        }
}

void crit_growth_table() {
    const std::vector<std::vector<int>> table = {
        {1, 1, 2, 2}, {2, 2, 2, 2}, {2, 2, 3, 3}};
    for (std::uint64_t d = 3; d <= 5; ++d) {
        std::vector<std::function<BigInt(std::uint64_t)>> fns = {
            [d](std::uint64_t n) { return trivial_flattening_potency(n, d); },
            [d](std::uint64_t n) {
                return pot_bound_matrix_tensor(n, d);
            },
            [d](std::uint64_t n) { return trivial_tk_potency(n, d, 3); },
            [d](std::uint64_t n) { return pot_bound_tk_tensor(n, d, 3); }};
        for (std::size_t col = 0; col < 4; ++col) {
            int got = growth_exponent_in_n(fns[col], 8);
            expect(got == table[d - 3][col],
                   "exponent table mismatch at d=" + std::to_string(d) +
                       ", column " + std::to_string(col));
        }
    }
}

void crit_counting_cross_checks() {
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t d = 1; d <= 8; ++d) {
            std::vector<std::uint64_t> nvec(d, n), dvec(d, 1);
            expect(smh_bound(nvec, dvec) == improved_tensor_bound(n + 1, d),
                   "all-linear-block bound mismatch at n=" +
                       std::to_string(n) + ", d=" + std::to_string(d));
            expect(smh_bound({n}, {d}) == improved_waring_bound(n + 1, d),
                   "single-block bound mismatch at n=" + std::to_string(n) +
                       ", d=" + std::to_string(d));
        }
    expect(improved_tensor_bound(2, 3) == BigInt(8),
           "three-factor bound at the smallest case != 8");
    expect(triple_tensor_bound(2, 2, 2) == BigInt(8),
           "2(n1+n2+n3)-4 != 8 at (2,2,2)");
}

void crit_flattening_potency() {
    auto m = make_flattening_method(2, 3, {1});
    auto pm = measured_potency_exhaustive_fp(m, 2);
    expect(pm.mu_s == 1, "flattening mu on simples != 1");
    expect(pm.mu_v == 2, "flattening mu on the full space != 2");
    expect(BigInt(pm.mu_v / pm.mu_s) <= pot_bound_matrix_tensor(2, 3),
           "measured potency exceeds the order-1 barrier");

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> dist(-5, 5);
    SampleConfig cfg;
    cfg.trials = 40;
    Rational barrier(pot_bound_matrix_tensor(2, 3)); // 16
    for (int trial = 0; trial < 20; ++trial) {
        RankMethod rm;
        rm.source = SpaceDescriptor::tensor_space({2, 2, 2});
        rm.target = SpaceDescriptor::tensor_space({4, 4});
        rm.matrix = Matrix<Rational>(16, 8, Rational(0));
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                rm.matrix.at(i, j) = Rational(dist(rng));
        cfg.seed = 9000 + static_cast<std::uint64_t>(trial);
        Rational pot;
        try {
            pot = measured_potency_sampled(rm, cfg);
        } catch (const DegenerateMethodError&) {
            continue; // vanishing on every sampled simple certifies nothing
        }
        expect(pot <= barrier,
               "random method potency exceeds the barrier at trial " +
                   std::to_string(trial));
    }
}

void crit_transfer_demo() {
    Poly p(2); // y^2 - z
    p.set_coeff({0, 2}, Rational(1));
    p.set_coeff({1, 0}, Rational(-1));
    auto sol = hensel_lift({p, Rational(1), Rational(1)}, 32);

    // substitution oracle: P(1 + t, sol(t)) = 0 mod t^33
    UniSeries z(sol.center(), 32);
    z.set_coeff(0, Rational(1));
    z.set_coeff(1, Rational(1));
    UniSeries residual = z.scaled(Rational(-1)) + sol * sol;
    for (std::size_t k = 0; k <= 32; ++k)
        expect(residual.coeff(k) == Rational(0),
               "substitution residual at order " + std::to_string(k));

    PolyMap L{1, 1, {Poly::variable(1, 0)}};
    Poly ysq(1);
    ysq.set_coeff({2}, Rational(1));
    PolyMap M{1, 1, {ysq}};
    auto sol16 = hensel_lift({p, Rational(1), Rational(1)}, 16);
    expect(verify_transfer(L, M, {Rational(1)},
                           {MultiSeries::from_uni(sol16)}, 16),
           "transfer identity failed at order 16");

    bool raised = false;
    try {
        hensel_lift({p, Rational(0), Rational(0)}, 4);
    } catch (const NonEtaleError&) {
        raised = true;
    }
    expect(raised, "critical center 0 did not raise the regularity error");
}

void crit_border_rank() {
    auto t = w_tensor();
    expect(verify_degeneration(t, hand_w_witness()),
           "explicit two-term order-2 witness rejected");

    auto found = search_degeneration(
        t, 2, 2, 1, {Rational(0), Rational(1), Rational(-1)});
    expect(found.has_value(), "search found no witness");
    expect(found->q == 2, "search witness has unexpected order");
    expect(verify_degeneration(t, *found), "search witness fails verification");

    auto r = brute_trank(tensor_mod(t, 2), 3);
    expect(r.has_value() && *r == 3, "exhaustive rank over F_2 != 3");
    expect(!brute_trank(tensor_mod(t, 2), 2).has_value(),
           "rank-2 decomposition found where none exists");
}

void crit_elusive_toys() {
    std::vector<Poly> fam;
    for (std::uint32_t k = 1; k <= 12; ++k) {
        Poly zk(1);
        zk.set_coeff({k}, Rational(1));
        fam.push_back(zk);
        expect(is_linearly_elusive(fam),
               "moment family dependent at m=" + std::to_string(k));
    }

    auto infeasible = monomial_cover_feasible(
        {Rational(1), Rational(3), Rational(9), Rational(27)}, 2);
    expect(!infeasible.has_value(), "geometric targets reported coverable");

    auto feasible = monomial_cover_feasible(
        {Rational(1), Rational(2), Rational(3), Rational(4)}, 2);
    expect(feasible.has_value(), "arithmetic targets reported uncoverable");
    for (const auto& e : feasible->exponents)
        expect(e >= Rational(0), "cover witness has a negative exponent");
    std::vector<Rational> targets{Rational(1), Rational(2), Rational(3),
                                  Rational(4)};
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& pat = feasible->patterns[i];
        Rational v = feasible->exponents[pat.i];
        if (pat.j) {
            Rational s = v + feasible->exponents[*pat.j];
            v = s;
        }
        expect(v == targets[i],
               "cover witness misses target " + std::to_string(i));
    }
}

void crit_consistency_suite() {
    // every tensor in the smallest cube over F_2 has rank at most 3
    std::size_t max_rank = 0;
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
        Tensor<Fp> t({2, 2, 2}, Fp(0, 2));
        for (std::size_t b = 0; b < 8; ++b)
            if (mask & (1u << b)) t.entries()[b] = Fp(1, 2);
        auto r = brute_trank(t, 4);
        expect(r.has_value(), "rank search failed on a 2x2x2 tensor");
        expect(*r <= 3, "a 2x2x2 tensor over F_2 exceeded rank 3");
        max_rank = std::max(max_rank, *r);
    }
    expect(max_rank == 3, "no 2x2x2 tensor over F_2 reached rank 3");

    // rank + kernel dimension = column count on random rational matrices
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> dim(1, 6), val(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t rows = static_cast<std::size_t>(dim(rng));
        std::size_t cols = static_cast<std::size_t>(dim(rng));
        Matrix<Rational> m(rows, cols, Rational(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Rational(val(rng));
        auto kernel = mat_kernel(m);
        expect(mat_rank(m) + kernel.size() == cols,
               "rank-nullity failed at trial " + std::to_string(trial));
        for (const auto& k : kernel) {
            auto img = mat_vec(m, k);
            for (const auto& x : img)
                expect(x == Rational(0), "kernel vector not annihilated");
        }
    }

    // cross-module invariants, one per module
    std::uniform_int_distribution<long> small(-4, 4);
    auto rvec = [&](std::size_t n) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(small(rng)));
        return v;
    };

    // grading: the weighted-composition sum behind the order-3 power bound
    BigInt check(0);
    for (const auto& mu : enumerate_weak_compositions(3, 3))
        check += upsilon(mu, 2);
    expect(check == pot_bound_tk_waring(2, 3, 3),
           "composition-sum identity failed at (2,3,3)");
    expect(check == BigInt(19), "order-3 power bound at (2,3,3) != 19");

    // spaces: embed/project round trip and simple-power flattening rank
    for (int trial = 0; trial < 5; ++trial) {
        HomogPoly<Rational> f(2, 3);
        f.set_coeff({3, 0}, Rational(small(rng)));
        f.add_coeff({2, 1}, Rational(small(rng)));
        f.add_coeff({1, 2}, Rational(small(rng)));
        f.add_coeff({0, 3}, Rational(small(rng)));
        expect(comon_project(comon_embed(f)) == f,
               "embed/project round trip failed");
        auto ell = rvec(2);
        auto emb = comon_embed(power_of_linear(ell, 3));
        expect(mat_rank(flatten(emb, {0})) <= 1,
               "embedded power has flattening rank > 1");
    }

    // methods: the flattening method equals the tensor-level flattening
    auto fm = make_flattening_method(2, 3, {0});
    for (int trial = 0; trial < 5; ++trial) {
        Tensor<Rational> t({2, 2, 2}, Rational(0));
        for (auto& e : t.entries()) e = Rational(small(rng));
        auto img = rankbarriers::apply(fm, coords_from_tensor(fm.source, t));
        expect(img == flatten(t, {0}).entries(),
               "flattening method disagrees with reshaping");
    }

    // barriers: border variants coincide and halving doubles per order
    for (std::uint64_t n = 1; n <= 4; ++n)
        for (std::uint64_t d = 1; d <= 4; ++d)
            for (std::uint64_t k = 2; k <= 3; ++k) {
                expect(pot_bound_border_tk_tensor(n, d, k) ==
                           pot_bound_tk_tensor(n, d, k),
                       "border bound differs from the rank bound");
                expect(pot_bound_wk_tensor(n, d, k) ==
                           bigint_pow(2, k - 1) *
                               pot_bound_tk_tensor(n, d, k),
                       "power-method bound is not 2^(k-1) times the "
                       "tensor-method bound");
            }

    // series: the lift satisfies its own equation (square root, order 8)
    Poly sq(2);
    sq.set_coeff({0, 2}, Rational(1));
    sq.set_coeff({1, 0}, Rational(-1));
    auto sol = hensel_lift({sq, Rational(4), Rational(2)}, 8);
    UniSeries z(sol.center(), 8);
    z.set_coeff(0, Rational(4));
    z.set_coeff(1, Rational(1));
    auto res = sol * sol - z;
    for (std::size_t k = 0; k <= 8; ++k)
        expect(res.coeff(k) == Rational(0), "lift residual nonzero");

    // border: the matrix identity has an exact two-term certificate
    Tensor<Rational> id({2, 2}, Rational(0));
    id.at({0, 0}) = Rational(1);
    id.at({1, 1}) = Rational(1);
    auto wid = search_degeneration(id, 2, 1, 0, {Rational(0), Rational(1)});
    expect(wid.has_value() && wid->q == 1 && verify_degeneration(id, *wid),
           "identity matrix lacks an exact order-1 certificate");

    // elusive: span membership is monotone in the combination budget
    for (std::uint64_t d = 1; d <= 6; ++d) {
        bool small_d = dspan_member(Rational(5), {Rational(1), Rational(2)}, d);
        bool large_d =
            dspan_member(Rational(5), {Rational(1), Rational(2)}, d + 1);
        expect(!small_d || large_d, "span membership not monotone in d");
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"product-to-powers decomposition, d = 1..6, exact residual", 1000,
         crit_product_decomposition},
        {"order-2 bound recovers 2^d n^(d/2) for n, d <= 12", 1000,
         crit_formula_recovery},
        {"growth-exponent table for d = 3, 4, 5", 1000, crit_growth_table},
        {"blocked monomial counts match closed forms, d <= 8, n <= 6", 5000,
         crit_counting_cross_checks},
        {"flattening potency over F_2 and 20 sampled rational methods", 60000,
         crit_flattening_potency},
        {"series lift, substitution oracle, and transfer identity", 1000,
         crit_transfer_demo},
        {"border-rank witness: verify, re-discover, exceed exact rank", 60000,
         crit_border_rank},
        {"elusive families and monomial covers", 30000, crit_elusive_toys},
        {"exhaustive rank sweep, rank-nullity, cross-module invariants",
         300000, crit_consistency_suite},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        bool ok = error.empty() && ms <= c.budget_ms;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " — criterion " << (i + 1)
                  << ": " << c.label << " (" << ms << " ms, budget "
                  << c.budget_ms << " ms)";
        if (!error.empty()) std::cout << " — " << error;
        else if (ms > c.budget_ms) std::cout << " — budget exceeded";
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
