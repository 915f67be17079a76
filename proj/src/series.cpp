#include "rankbarriers/series.hpp"

#include <algorithm>

#include "rankbarriers/grading.hpp"
#include "rankbarriers/matrix.hpp"
#include "rankbarriers/tensor.hpp"

namespace rankbarriers {

UniSeries UniSeries::truncated(std::size_t order) const {
    std::vector<Rational> c(c_.begin(),
                            c_.begin() + std::min(c_.size(), order + 1));
    c.resize(order + 1, Rational(0));
    return UniSeries(center_, std::move(c));
}

UniSeries UniSeries::operator+(const UniSeries& o) const {
    check_center(o);
    std::size_t ord = std::min(order(), o.order());
    UniSeries r(center_, ord);
    for (std::size_t k = 0; k <= ord; ++k) {
        Rational s = c_[k] + o.c_[k];
        r.c_[k] = s;
    }
    return r;
}

UniSeries UniSeries::operator-(const UniSeries& o) const {
    check_center(o);
    std::size_t ord = std::min(order(), o.order());
    UniSeries r(center_, ord);
    for (std::size_t k = 0; k <= ord; ++k) {
        Rational s = c_[k] - o.c_[k];
        r.c_[k] = s;
    }
    return r;
}

UniSeries UniSeries::operator*(const UniSeries& o) const {
    check_center(o);
    std::size_t ord = std::min(order(), o.order());
    UniSeries r(center_, ord);
    for (std::size_t i = 0; i <= ord && i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= ord && j < o.c_.size(); ++j) {
            Rational s = r.c_[i + j] + c_[i] * o.c_[j];
            r.c_[i + j] = s;
        }
    }
    return r;
}

UniSeries UniSeries::scaled(const Rational& c) const {
    UniSeries r(*this);
    for (auto& x : r.c_) {
        Rational s = x * c;
        x = s;
    }
    return r;
}

UniSeries UniSeries::inverse() const {
    if (sgn(c_[0]) == 0)
        throw DomainError("series with zero constant term has no inverse");
    UniSeries r(center_, order());
    r.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) {
            if (i < c_.size()) {
                Rational t = acc + c_[i] * r.c_[k - i];
                acc = t;
            }
        }
        Rational v = -acc / c_[0];
        r.c_[k] = v;
    }
    return r;
}

UniSeries series_compose(const UniSeries& outer, const UniSeries& inner) {
    if (inner.coeff(0) != outer.center())
        throw DomainError(
            "composition needs the inner constant term to equal the outer center");
    std::size_t ord = std::min(outer.order(), inner.order());
    // t = inner - center has zero constant term; Horner over outer coeffs
    UniSeries t = inner.truncated(ord);
    t.set_coeff(0, Rational(0));
    UniSeries acc(inner.center(), ord);
    for (std::size_t k = outer.order() + 1; k-- > 0;) {
        acc = acc * t;
        Rational c0 = acc.coeff(0) + outer.coeff(k);
        acc.set_coeff(0, c0);
    }
    return acc;
}

MultiSeries::MultiSeries(std::size_t n, std::vector<Rational> center,
                         std::size_t trunc)
    : n_(n), center_(std::move(center)), trunc_(trunc) {
    if (n == 0) throw ShapeError("series needs >= 1 variable");
    if (center_.size() != n_)
        throw ShapeError("series center arity mismatch");
}

MultiSeries MultiSeries::from_poly(const Poly& p,
                                   const std::vector<Rational>& center,
                                   std::size_t trunc) {
    MultiSeries s(p.n(), center, trunc);
    Poly shifted = p.shift(center);
    for (const auto& [e, c] : shifted.terms()) {
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        if (deg <= trunc) s.c_[e] = c;
    }
    return s;
}

MultiSeries MultiSeries::from_uni(const UniSeries& s) {
    MultiSeries m(1, {Rational(0)}, s.order());
    for (std::size_t k = 0; k <= s.order(); ++k)
        if (sgn(s.coeff(k)) != 0)
            m.c_[{static_cast<std::uint32_t>(k)}] = s.coeff(k);
    return m;
}

Rational MultiSeries::coeff(const std::vector<std::uint32_t>& e) const {
    if (e.size() != n_) throw ShapeError("exponent vector length mismatch");
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

void MultiSeries::set_coeff(const std::vector<std::uint32_t>& e,
                            const Rational& v) {
    if (e.size() != n_) throw ShapeError("exponent vector length mismatch");
    std::uint64_t deg = 0;
    for (auto x : e) deg += x;
    if (deg > trunc_) throw ShapeError("coefficient beyond truncation order");
    if (sgn(v) == 0)
        c_.erase(e);
    else
        c_[e] = v;
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
    if (n_ != o.n_) throw ShapeError("series arity mismatch");
    if (center_ != o.center_) throw DomainError("series centers do not match");
}

MultiSeries MultiSeries::truncated(std::size_t trunc) const {
    MultiSeries r(n_, center_, trunc);
    for (const auto& [e, c] : c_) {
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        if (deg <= trunc) r.c_[e] = c;
    }
    return r;
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
    check_compatible(o);
    MultiSeries r = truncated(std::min(trunc_, o.trunc_));
    for (const auto& [e, c] : o.c_) {
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        if (deg > r.trunc_) continue;
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
            r.c_[e] = c;
        } else {
            Rational s = it->second + c;
            if (sgn(s) == 0)
                r.c_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const {
    return *this + o.scaled(Rational(-1));
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
    check_compatible(o);
    MultiSeries r(n_, center_, std::min(trunc_, o.trunc_));
    for (const auto& [e1, c1] : c_) {
        std::uint64_t d1 = 0;
        for (auto x : e1) d1 += x;
        if (d1 > r.trunc_) continue;
        for (const auto& [e2, c2] : o.c_) {
            std::uint64_t d2 = 0;
            for (auto x : e2) d2 += x;
            if (d1 + d2 > r.trunc_) continue;
            std::vector<std::uint32_t> e(n_);
            for (std::size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                Rational prod = c1 * c2;
                if (sgn(prod) != 0) r.c_[e] = prod;
            } else {
                Rational s = it->second + c1 * c2;
                if (sgn(s) == 0)
                    r.c_.erase(it);
                else
                    it->second = s;
            }
        }
    }
    return r;
}

MultiSeries MultiSeries::scaled(const Rational& c) const {
    MultiSeries r(n_, center_, trunc_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, v] : c_) {
        Rational s = v * c;
        r.c_[e] = s;
    }
    return r;
}

MultiSeries series_compose(const MultiSeries& outer,
                           const std::vector<MultiSeries>& inners) {
    if (inners.size() != outer.n())
        throw ShapeError("composition needs one inner series per variable");
    for (std::size_t i = 0; i < inners.size(); ++i) {
        std::vector<std::uint32_t> zero(inners[i].n(), 0);
        if (inners[i].coeff(zero) != outer.center()[i])
            throw DomainError(
                "composition needs inner constant terms to equal the outer center");
    }
    // reduce to polynomial evaluation of the centered expansion
    Poly p(outer.n());
    for (const auto& [e, c] : outer.terms()) p.set_coeff(e, c);
    std::vector<MultiSeries> shifted;
    shifted.reserve(inners.size());
    for (std::size_t i = 0; i < inners.size(); ++i) {
        MultiSeries s = inners[i];
        std::vector<std::uint32_t> zero(s.n(), 0);
        s.set_coeff(zero, Rational(0));
        shifted.push_back(std::move(s));
    }
    return poly_eval_series(p, shifted);
}

MultiSeries poly_eval_series(const Poly& p,
                             const std::vector<MultiSeries>& args) {
    if (args.empty()) throw ShapeError("evaluation needs >= 1 argument series");
    if (args.size() != p.n())
        throw ShapeError("argument count does not match polynomial arity");
    std::size_t n = args[0].n();
    std::size_t trunc = args[0].trunc();
    for (const auto& a : args) {
        if (a.n() != n || a.center() != args[0].center())
            throw ShapeError("argument series must share shape");
        trunc = std::min(trunc, a.trunc());
    }
    MultiSeries acc(n, args[0].center(), trunc);
    MultiSeries one(n, args[0].center(), trunc);
    one.set_coeff(std::vector<std::uint32_t>(n, 0), Rational(1));
    // cache powers of each argument
    std::vector<std::vector<MultiSeries>> pows(args.size(),
                                               std::vector<MultiSeries>{});
    auto power = [&](std::size_t i, std::uint32_t k) -> const MultiSeries& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(one);
        while (cache.size() <= k) cache.push_back(cache.back() * args[i]);
        return cache[k];
    };
    for (const auto& [e, c] : p.terms()) {
        MultiSeries term = one.scaled(c);
        for (std::size_t i = 0; i < args.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

namespace {

UniSeries eval_bivariate(const Poly& p, const UniSeries& zs,
                         const UniSeries& ys) {
    UniSeries acc(zs.center(), std::min(zs.order(), ys.order()));
    UniSeries one(acc.center(), acc.order());
    one.set_coeff(0, Rational(1));
    std::vector<UniSeries> zpow{one}, ypow{one};
    auto power = [&](std::vector<UniSeries>& cache, const UniSeries& base,
                     std::uint32_t k) -> const UniSeries& {
        while (cache.size() <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };
    for (const auto& [e, c] : p.terms()) {
        UniSeries term = one.scaled(c);
        if (e[0] > 0) term = term * power(zpow, zs, e[0]);
        if (e[1] > 0) term = term * power(ypow, ys, e[1]);
        acc = acc + term;
    }
    return acc;
}

} // namespace

UniSeries hensel_lift(const AlgebraicFunctionSpec& spec, std::size_t order) {
    if (spec.p.n() != 2)
        throw ShapeError("lifting needs a bivariate vanishing polynomial");
    const Rational& c = spec.center;
    const Rational& b0 = spec.seed;
    Rational at_seed = spec.p.eval({c, b0});
    if (sgn(at_seed) != 0)
        throw BadSeedError("seed does not satisfy the equation at the center");
    Poly py = spec.p.partial(1);
    Rational slope = py.eval({c, b0});
    if (sgn(slope) == 0)
        throw NonEtaleError(
            "linearization is singular at the seed (critical point)");

    // z as a series around the center: c + t
    auto z_series = [&](std::size_t ord) {
        UniSeries z(c, ord);
        z.set_coeff(0, c);
        if (ord >= 1) z.set_coeff(1, Rational(1));
        return z;
    };

    UniSeries y(c, std::size_t(0));
    y.set_coeff(0, b0);
    std::size_t prec = 1; // y is exact mod t^prec
    while (prec < order + 1) {
        std::size_t next = std::min(2 * prec, order + 1);
        UniSeries yext = y.truncated(next - 1);
        UniSeries z = z_series(next - 1);
        UniSeries f = eval_bivariate(spec.p, z, yext);
        UniSeries fy = eval_bivariate(py, z, yext);
        // Newton step: y <- y - f / f_y
        UniSeries delta = f * fy.inverse();
        y = yext - delta;
        prec = next;
    }
    return y.truncated(order);
}

MultiSeries series_poly_eval(const SeriesPoly& f,
                             const std::vector<MultiSeries>& ys) {
    if (ys.size() != f.r)
        throw ShapeError("argument count does not match unknown count");
    if (f.terms.empty())
        throw DomainError("series polynomial needs >= 1 term");
    const MultiSeries& shape = f.terms.begin()->second;
    MultiSeries acc(shape.n(), shape.center(), shape.trunc());
    MultiSeries one(shape.n(), shape.center(), shape.trunc());
    one.set_coeff(std::vector<std::uint32_t>(shape.n(), 0), Rational(1));
    std::vector<std::vector<MultiSeries>> pows(ys.size(),
                                               std::vector<MultiSeries>{});
    auto power = [&](std::size_t i, std::uint32_t k) -> const MultiSeries& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(one);
        while (cache.size() <= k) cache.push_back(cache.back() * ys[i]);
        return cache[k];
    };
    for (const auto& [e, coeff_series] : f.terms) {
        if (e.size() != f.r)
            throw ShapeError("series polynomial exponent arity mismatch");
        MultiSeries term = coeff_series;
        for (std::size_t i = 0; i < ys.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

std::vector<MultiSeries> newton_system_lift(const std::vector<SeriesPoly>& eqs,
                                            const std::vector<Rational>& seed,
                                            std::size_t order) {
    const std::size_t r = eqs.size();
    if (r == 0) throw ShapeError("system needs >= 1 equation");
    if (seed.size() != r)
        throw ShapeError("square system needs one seed entry per equation");
    for (const auto& f : eqs)
        if (f.r != r) throw ShapeError("system must be square");
    if (eqs[0].terms.empty()) throw DomainError("equations need >= 1 term");
    const MultiSeries& shape = eqs[0].terms.begin()->second;
    const std::size_t n = shape.n();
    const std::vector<Rational>& center = shape.center();
    std::vector<std::uint32_t> zero_exp(n, 0);

    // constant-term Jacobian d eqs_i / d y_j at (center, seed)
    auto eval_const = [&](const SeriesPoly& f,
                          const std::vector<Rational>& y) {
        Rational acc(0);
        for (const auto& [e, cs] : f.terms) {
            Rational term = cs.coeff(zero_exp);
            for (std::size_t j = 0; j < r; ++j)
                for (std::uint32_t k = 0; k < e[j]; ++k) {
                    Rational t = term * y[j];
                    term = t;
                }
            Rational s = acc + term;
            acc = s;
        }
        return acc;
    };
    for (const auto& f : eqs)
        if (sgn(eval_const(f, seed)) != 0)
            throw BadSeedError("seed does not solve the system at the center");

    Matrix<Rational> jac(r, r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        for (const auto& [e, cs] : eqs[i].terms) {
            for (std::size_t j = 0; j < r; ++j) {
                if (e[j] == 0) continue;
                Rational term = cs.coeff(zero_exp) *
                                Rational(static_cast<long>(e[j]));
                for (std::size_t l = 0; l < r; ++l) {
                    std::uint32_t pow = (l == j) ? e[l] - 1 : e[l];
                    for (std::uint32_t k = 0; k < pow; ++k) {
                        Rational t = term * seed[l];
                        term = t;
                    }
                }
                Rational s = jac.at(i, j) + term;
                jac.at(i, j) = s;
            }
        }
    }
    if (mat_rank(jac) != r)
        throw NonEtaleError("constant Jacobian is singular at the seed");

    std::vector<MultiSeries> y;
    for (std::size_t j = 0; j < r; ++j) {
        MultiSeries s(n, center, order);
        s.set_coeff(zero_exp, seed[j]);
        y.push_back(std::move(s));
    }

    // order-by-order: degree-m coefficients solve J0 x = -[F(y)]_m
    for (std::size_t m = 1; m <= order; ++m) {
        std::vector<MultiSeries> vals;
        vals.reserve(r);
        for (const auto& f : eqs) vals.push_back(series_poly_eval(f, y));
        for (const auto& e : monomials_of_degree(n, m)) {
            std::vector<Rational> rhs;
            rhs.reserve(r);
            bool nonzero = false;
            for (std::size_t i = 0; i < r; ++i) {
                Rational v = -vals[i].coeff(e);
                if (sgn(v) != 0) nonzero = true;
                rhs.push_back(v);
            }
            if (!nonzero) continue;
            auto sol = mat_solve(jac, rhs);
            // jac is invertible, so the system is always solvable
            for (std::size_t j = 0; j < r; ++j)
                if (sgn((*sol)[j]) != 0) y[j].set_coeff(e, (*sol)[j]);
        }
    }
    return y;
}

bool verify_transfer(const PolyMap& L, const PolyMap& M,
                     const std::vector<Rational>& center,
                     const std::vector<MultiSeries>& p, std::size_t order) {
    validate_polymap(L);
    validate_polymap(M);
    if (L.n_out != M.n_out)
        throw ShapeError("maps must share the output space");
    if (center.size() != L.n_in)
        throw ShapeError("center arity does not match the source map");
    if (p.size() != M.n_in)
        throw ShapeError("need one series per inner variable");
    for (const auto& ps : p) {
        if (ps.n() != L.n_in)
            throw ShapeError("series arity does not match the source variables");
        for (const auto& c : ps.center())
            if (sgn(c) != 0)
                throw DomainError("transfer series must be centered at 0");
        if (ps.trunc() < order)
            throw DomainError("series truncated below the requested order");
    }
    std::vector<Rational> zero_center(L.n_in, Rational(0));
    for (std::size_t i = 0; i < L.n_out; ++i) {
        MultiSeries lhs = MultiSeries::from_poly(L.components[i].shift(center),
                                                 zero_center, order);
        MultiSeries rhs = poly_eval_series(M.components[i], p).truncated(order);
        if (lhs != rhs) return false;
    }
    return true;
}

bool verify_rank_transfer(
    const PolyMap& L, std::size_t a, const std::vector<Rational>& center,
    const std::vector<std::vector<std::vector<MultiSeries>>>& factor_series,
    const std::vector<std::size_t>& target_dims, std::size_t order) {
    validate_polymap(L);
    if (center.size() != L.n_in)
        throw ShapeError("center arity does not match the source map");
    std::size_t total = 1;
    for (auto d : target_dims) {
        if (d == 0) throw ShapeError("target dimensions must be positive");
        total *= d;
    }
    if (L.n_out != total)
        throw ShapeError("map output does not match the tensor coordinates");
    if (factor_series.size() != a)
        throw ShapeError("need one factor tuple per simple term");
    for (const auto& tuple : factor_series) {
        if (tuple.size() != target_dims.size())
            throw ShapeError("factor tuple arity does not match tensor order");
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            if (tuple[j].size() != target_dims[j])
                throw ShapeError("factor vector length does not match dimension");
            for (const auto& s : tuple[j]) {
                if (s.n() != L.n_in)
                    throw ShapeError("factor series arity mismatch");
                for (const auto& c : s.center())
                    if (sgn(c) != 0)
                        throw DomainError("transfer series must be centered at 0");
                if (s.trunc() < order)
                    throw DomainError("series truncated below the requested order");
            }
        }
    }
    std::vector<Rational> zero_center(L.n_in, Rational(0));
    std::vector<std::size_t> idx(target_dims.size(), 0);
    std::size_t flat = 0;
    do {
        MultiSeries lhs = MultiSeries::from_poly(
            L.components[flat].shift(center), zero_center, order);
        MultiSeries rhs(L.n_in, zero_center, order);
        for (std::size_t i = 0; i < a; ++i) {
            MultiSeries term = factor_series[i][0][idx[0]].truncated(order);
            for (std::size_t j = 1; j < target_dims.size(); ++j)
                term = term * factor_series[i][j][idx[j]];
            rhs = rhs + term;
        }
        if (lhs != rhs) return false;
        ++flat;
    } while (next_multi(target_dims, idx));
    return true;
}

std::optional<std::pair<Rational, Rational>> find_regular_seed(
    const Poly& p, std::size_t center_budget) {
    if (p.n() != 2)
        throw ShapeError("seed search needs a bivariate vanishing polynomial");
    Poly py = p.partial(1);
    for (std::size_t step = 0; step < center_budget; ++step) {
        long mag = static_cast<long>((step + 1) / 2);
        Rational c(step % 2 == 1 ? mag : -mag);
        // univariate coefficients of y -> p(c, y)
        std::uint32_t ydeg = 0;
        for (const auto& [e, coef] : p.terms()) ydeg = std::max(ydeg, e[1]);
        std::vector<Rational> uni(ydeg + 1, Rational(0));
        for (const auto& [e, coef] : p.terms()) {
            Rational term = coef;
            for (std::uint32_t k = 0; k < e[0]; ++k) {
                Rational t = term * c;
                term = t;
            }
            Rational s = uni[e[1]] + term;
            uni[e[1]] = s;
        }
        bool all_zero = true;
        for (const auto& u : uni)
            if (sgn(u) != 0) all_zero = false;
        if (all_zero) continue;
        for (const Rational& b0 : rational_roots(uni))
            if (sgn(py.eval({c, b0})) != 0) return std::make_pair(c, b0);
    }
    return std::nullopt;
}

} // namespace rankbarriers
