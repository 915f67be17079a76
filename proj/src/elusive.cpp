#include "rankbarriers/elusive.hpp"

#include <algorithm>

#include "rankbarriers/grading.hpp"
#include "rankbarriers/matrix.hpp"

namespace rankbarriers {

bool is_linearly_elusive(const std::vector<Poly>& polys) {
    if (polys.empty()) throw ShapeError("need >= 1 polynomial");
    std::uint32_t max_deg = 0;
    for (const auto& p : polys) {
        if (p.n() != 1) throw ShapeError("polynomials must be univariate");
        for (const auto& [e, c] : p.terms()) max_deg = std::max(max_deg, e[0]);
    }
    const std::size_t m = polys.size();
    Matrix<Rational> coeffs(m + 1, max_deg + 1, Rational(0));
    coeffs.at(0, 0) = Rational(1);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [e, c] : polys[i].terms()) coeffs.at(i + 1, e[0]) = c;
    return mat_rank(coeffs) == m + 1;
}

namespace {

bool dspan_search(const Rational& remaining,
                  const std::vector<Rational>& gens, std::size_t from,
                  std::uint64_t budget) {
    if (sgn(remaining) == 0) return true;
    if (from == gens.size() || budget == 0) return false;
    Rational left = remaining;
    for (std::uint64_t c = 0; c <= budget; ++c) {
        if (dspan_search(left, gens, from + 1, budget - c)) return true;
        Rational next = left - gens[from];
        left = next;
    }
    return false;
}

} // namespace

bool dspan_member(const Rational& target, const std::vector<Rational>& gens,
                  std::uint64_t d) {
    for (const auto& g : gens)
        if (sgn(g) < 0) throw DomainError("generator exponents must be >= 0");
    BigInt combos = binomial(d + gens.size(), gens.size());
    if (combos > 50000000ul)
        throw SizeError("degree-span enumeration exceeds the work cap");
    return dspan_search(target, gens, 0, d);
}

namespace {

// One linear constraint a . t + c >= 0 on the free parameters t.
using Constraint = std::vector<Rational>; // a_0..a_{f-1}, then c

// Exact Fourier-Motzkin feasibility with witness extraction: eliminate the
// last variable, solve the rest, then pick a value inside its interval.
std::optional<std::vector<Rational>> fm_feasible(
    std::vector<Constraint> cons, std::size_t f) {
    if (f == 0) {
        for (const auto& c : cons)
            if (sgn(c.back()) < 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    std::vector<Constraint> lower, upper, rest;
    for (auto& c : cons) {
        int s = sgn(c[f - 1]);
        if (s > 0)
            lower.push_back(c);
        else if (s < 0)
            upper.push_back(c);
        else {
            c.erase(c.begin() + (f - 1));
            rest.push_back(std::move(c));
        }
    }
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            // combine a_lo*t + r_lo >= 0 (a_lo > 0) with a_up*t + r_up >= 0
            // (a_up < 0) into a_lo*r_up - a_up*r_lo >= 0
            Constraint c(f); // f-1 coefficients plus the constant
            for (std::size_t k = 0; k < f; ++k) {
                Rational v = lo[f - 1] * up[k == f - 1 ? f : k] -
                             up[f - 1] * lo[k == f - 1 ? f : k];
                c[k] = v;
            }
            rest.push_back(std::move(c));
        }
    auto inner = fm_feasible(std::move(rest), f - 1);
    if (!inner) return std::nullopt;
    auto eval_rest = [&](const Constraint& c) {
        Rational v = c[f];
        for (std::size_t k = 0; k + 1 < f; ++k) {
            Rational t = v + c[k] * (*inner)[k];
            v = t;
        }
        return v;
    };
    bool has_lo = false, has_hi = false;
    Rational lo_val(0), hi_val(0);
    for (const auto& c : lower) {
        Rational bound = -eval_rest(c) / c[f - 1];
        if (!has_lo || bound > lo_val) lo_val = bound;
        has_lo = true;
    }
    for (const auto& c : upper) {
        Rational bound = -eval_rest(c) / c[f - 1];
        if (!has_hi || bound < hi_val) hi_val = bound;
        has_hi = true;
    }
    if (has_lo && has_hi && lo_val > hi_val) return std::nullopt;
    Rational pick = has_lo ? lo_val : (has_hi ? hi_val : Rational(0));
    inner->push_back(pick);
    return inner;
}

// Nonnegative solution of A e = b, or nullopt.
std::optional<std::vector<Rational>> solve_nonnegative(
    const Matrix<Rational>& a, const std::vector<Rational>& b) {
    auto particular = mat_solve(a, b);
    if (!particular) return std::nullopt;
    auto kernel = mat_kernel(a);
    const std::size_t f = kernel.size();
    std::vector<Constraint> cons;
    for (std::size_t l = 0; l < a.cols(); ++l) {
        Constraint c(f + 1);
        for (std::size_t k = 0; k < f; ++k) c[k] = kernel[k][l];
        c[f] = (*particular)[l];
        cons.push_back(std::move(c));
    }
    auto ts = fm_feasible(std::move(cons), f);
    if (!ts) return std::nullopt;
    std::vector<Rational> e = *particular;
    for (std::size_t k = 0; k < f; ++k)
        for (std::size_t l = 0; l < e.size(); ++l) {
            Rational v = e[l] + (*ts)[k] * kernel[k][l];
            e[l] = v;
        }
    return e;
}

} // namespace

std::optional<CoverAssignment> monomial_cover_feasible(
    const std::vector<Rational>& targets, std::size_t r) {
    if (targets.empty()) throw ShapeError("need >= 1 target exponent");
    if (r < 1) throw DomainError("need >= 1 exponent slot");
    for (const auto& t : targets)
        if (sgn(t) <= 0) throw DomainError("target exponents must be > 0");
    if (targets.size() > 6 || r > 3)
        throw SizeError("cover search capped at 6 targets and r <= 3");

    std::vector<CoverPattern> patterns;
    for (std::uint32_t i = 0; i < r; ++i) patterns.push_back({i, std::nullopt});
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = i; j < r; ++j) patterns.push_back({i, j});

    const std::size_t m = targets.size();
    std::vector<std::size_t> choice(m, 0);
    bool done = false;
    while (!done) {
        Matrix<Rational> a(m, r, Rational(0));
        for (std::size_t t = 0; t < m; ++t) {
            const CoverPattern& pat = patterns[choice[t]];
            Rational v = a.at(t, pat.i) + 1;
            a.at(t, pat.i) = v;
            if (pat.j) {
                Rational w = a.at(t, *pat.j) + 1;
                a.at(t, *pat.j) = w;
            }
        }
        auto e = solve_nonnegative(a, targets);
        if (e) {
            CoverAssignment out;
            for (std::size_t t = 0; t < m; ++t)
                out.patterns.push_back(patterns[choice[t]]);
            out.exponents = *e;
            return out;
        }
        done = true;
        for (std::size_t t = m; t-- > 0;) {
            if (++choice[t] < patterns.size()) {
                done = false;
                break;
            }
            choice[t] = 0;
        }
    }
    return std::nullopt;
}

} // namespace rankbarriers
