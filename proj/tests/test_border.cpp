#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "rankbarriers/border.hpp"
#include "rankbarriers/methods.hpp"

using namespace rankbarriers;

namespace {

// e1 e1 e2 + e1 e2 e1 + e2 e1 e1 in coordinates
Tensor<Rational> w_tensor() {
    Tensor<Rational> t({2, 2, 2}, Rational(0));
    t.at({0, 0, 1}) = Rational(1);
    t.at({0, 1, 0}) = Rational(1);
    t.at({1, 0, 0}) = Rational(1);
    return t;
}

EpsPoly ep(const Rational& c0, const Rational& c1 = Rational(0)) {
    EpsPoly p;
    p = p + EpsPoly::monomial(c0, 0);
    p = p + EpsPoly::monomial(c1, 1);
    return p;
}

EpsVec evec(const Rational& a0, const Rational& a1, const Rational& b0,
            const Rational& b1) {
    return {ep(a0, b0), ep(a1, b1)};
}

// [e1 + eps*e2, e1 + eps*e2, e1 + eps*e2] and [-e1, e1, e1]: the classic
// two-term curve through the rank-3 tensor above at approximation order 2.
DegenerationWitness hand_w_witness() {
    DegenerationWitness w;
    w.r = 2;
    w.q = 2;
    w.t1_factors = {
        {evec(Rational(1), Rational(0), Rational(0), Rational(1)),
         evec(Rational(1), Rational(0), Rational(0), Rational(1)),
         evec(Rational(1), Rational(0), Rational(0), Rational(1))},
        {evec(Rational(-1), Rational(0), Rational(0), Rational(0)),
         evec(Rational(1), Rational(0), Rational(0), Rational(0)),
         evec(Rational(1), Rational(0), Rational(0), Rational(0))}};
    w.t2 = EpsTensor({2, 2, 2}, EpsPoly());
    w.t2.at({0, 1, 1}) = ep(Rational(-1));
    w.t2.at({1, 0, 1}) = ep(Rational(-1));
    w.t2.at({1, 1, 0}) = ep(Rational(-1));
    w.t2.at({1, 1, 1}) = ep(Rational(0), Rational(-1));
    return w;
}

} // namespace

TEST_CASE("rational tensors lift to constant eps entries") {
    auto t = w_tensor();
    auto e = eps_tensor_from(t);
    CHECK(e.dims() == t.dims());
    for (std::size_t i = 0; i < t.entries().size(); ++i) {
        CHECK(e.entries()[i].coeff(0) == t.entries()[i]);
        if (sgn(t.entries()[i]) == 0)
            CHECK(e.entries()[i].is_zero());
        else
            CHECK(e.entries()[i].degree() == 0);
    }
}

TEST_CASE("hand-built degeneration certificate verifies") {
    auto w = hand_w_witness();
    CHECK(verify_degeneration(w_tensor(), w));

    // T1 really is the sum of the two simple eps-tensors
    auto t1 = witness_t1(w, {2, 2, 2});
    EpsTensor manual({2, 2, 2}, EpsPoly());
    for (const auto& tuple : w.t1_factors) {
        Tensor<EpsPoly> s = simple_tensor<EpsPoly>(tuple);
        manual = manual + s;
    }
    CHECK(t1 == manual);

    // the same T1 cannot certify order q = 1
    auto w1 = w;
    w1.q = 1;
    CHECK_FALSE(verify_degeneration(w_tensor(), w1));
}

TEST_CASE("exact decompositions are order-1 certificates") {
    Tensor<Rational> id({2, 2}, Rational(0));
    id.at({0, 0}) = Rational(1);
    id.at({1, 1}) = Rational(1);
    DegenerationWitness w;
    w.r = 2;
    w.q = 1;
    w.t1_factors = {{{ep(Rational(1)), ep(Rational(0))},
                     {ep(Rational(1)), ep(Rational(0))}},
                    {{ep(Rational(0)), ep(Rational(1))},
                     {ep(Rational(0)), ep(Rational(1))}}};
    w.t2 = EpsTensor({2, 2}, EpsPoly());
    CHECK(verify_degeneration(id, w));
}

TEST_CASE("certificate shape violations throw") {
    auto w = hand_w_witness();
    auto bad_r = w;
    bad_r.r = 3;
    CHECK_THROWS_AS(verify_degeneration(w_tensor(), bad_r), ShapeError);
    auto bad_q = w;
    bad_q.q = 0;
    CHECK_THROWS_AS(verify_degeneration(w_tensor(), bad_q), DomainError);
    auto bad_t2 = w;
    bad_t2.t2 = EpsTensor({2, 2}, EpsPoly());
    CHECK_THROWS_AS(verify_degeneration(w_tensor(), bad_t2), ShapeError);
    auto bad_vec = w;
    bad_vec.t1_factors[0][0].pop_back();
    CHECK_THROWS_AS(verify_degeneration(w_tensor(), bad_vec), ShapeError);
}

TEST_CASE("search finds the order-2 two-term certificate") {
    auto t = w_tensor();
    auto found = search_degeneration(t, 2, 2, 1,
                                     {Rational(0), Rational(1), Rational(-1)});
    REQUIRE(found.has_value());
    CHECK(found->r == 2);
    CHECK(found->q == 2);
    CHECK(verify_degeneration(t, *found));

    // deterministic: a second run returns the identical certificate
    auto again = search_degeneration(t, 2, 2, 1,
                                     {Rational(0), Rational(1), Rational(-1)});
    REQUIRE(again.has_value());
    CHECK(again->q == found->q);
    CHECK(again->t1_factors == found->t1_factors);
    CHECK(again->t2 == found->t2);
}

TEST_CASE("search respects rank obstructions on matrices") {
    std::vector<Rational> pool{Rational(0), Rational(1), Rational(-1)};

    Tensor<Rational> id({2, 2}, Rational(0));
    id.at({0, 0}) = Rational(1);
    id.at({1, 1}) = Rational(1);
    CHECK_FALSE(search_degeneration(id, 1, 2, 1, pool).has_value());

    Tensor<Rational> had({2, 2}, Rational(0));
    had.at({0, 0}) = Rational(1);
    had.at({0, 1}) = Rational(1);
    had.at({1, 0}) = Rational(1);
    had.at({1, 1}) = Rational(-1);
    CHECK_FALSE(search_degeneration(had, 1, 2, 1, pool).has_value());

    Tensor<Rational> wide({2, 3}, Rational(0));
    wide.at({0, 0}) = Rational(1);
    wide.at({1, 1}) = Rational(1);
    CHECK_FALSE(search_degeneration(wide, 1, 2, 1, pool).has_value());

    // matrix approximation order collapses: a rank-1 matrix is found at q=1
    Tensor<Rational> rk1({2, 2}, Rational(0));
    rk1.at({0, 0}) = Rational(1);
    rk1.at({0, 1}) = Rational(1);
    auto f = search_degeneration(rk1, 1, 2, 1, pool);
    REQUIRE(f.has_value());
    CHECK(f->q == 1);
    CHECK(verify_degeneration(rk1, *f));

    // and the identity is found with two terms without any eps at all
    auto g = search_degeneration(id, 2, 1, 0, {Rational(0), Rational(1)});
    REQUIRE(g.has_value());
    CHECK(g->q == 1);
    CHECK(g->t2.is_zero());
    CHECK(verify_degeneration(id, *g));
}

TEST_CASE("search edge cases") {
    std::vector<Rational> pool{Rational(0), Rational(1)};

    Tensor<Rational> zero({2, 2}, Rational(0));
    auto wz = search_degeneration(zero, 0, 1, 0, pool);
    REQUIRE(wz.has_value());
    CHECK(wz->r == 0);
    CHECK(verify_degeneration(zero, *wz));

    Tensor<Rational> rk1({2, 2}, Rational(0));
    rk1.at({0, 0}) = Rational(1);
    CHECK_FALSE(search_degeneration(rk1, 0, 1, 0, pool).has_value());

    CHECK_THROWS_AS(search_degeneration(rk1, 1, 0, 0, pool), DomainError);
    CHECK_THROWS_AS(search_degeneration(rk1, 1, 1, 0, {}), DomainError);
}

TEST_CASE("search work caps abort oversized enumerations") {
    std::vector<Rational> pool{Rational(0), Rational(1), Rational(-1)};
    CHECK_THROWS_AS(search_degeneration(w_tensor(), 2, 2, 1, pool, 10),
                    SizeError);

    Tensor<Rational> m({2, 2}, Rational(0));
    m.at({0, 0}) = Rational(1);
    CHECK_THROWS_AS(
        search_degeneration(m, 4, 1, 0, {Rational(0), Rational(1)}, 100),
        SizeError);
}

TEST_CASE("search cap resolution order") {
    unsetenv("RANKBARRIERS_MAX_SEARCH");
    CHECK(degeneration_search_cap(0) == 2000000);
    CHECK(degeneration_search_cap(17) == 17);
    setenv("RANKBARRIERS_MAX_SEARCH", "123", 1);
    CHECK(degeneration_search_cap(0) == 123);
    CHECK(degeneration_search_cap(17) == 17); // explicit request wins
    unsetenv("RANKBARRIERS_MAX_SEARCH");
    CHECK(degeneration_search_cap(0) == 2000000);
}

TEST_CASE("module generator counts bound the rank") {
    CHECK(module_rank_upper({}) == 0);
    EpsVec v = {ep(Rational(1)), ep(Rational(0), Rational(1))};
    CHECK(module_rank_upper({v}) == 1);
    CHECK(module_rank_upper({v, v}) == 2);
}
