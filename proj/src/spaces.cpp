#include "rankbarriers/spaces.hpp"

#include <algorithm>

namespace rankbarriers {

namespace {

void check_vars(std::size_t d, const std::vector<std::size_t>& vars,
                std::size_t n) {
    if (d < 1) throw DomainError("degree must be >= 1");
    if (vars.size() != d) throw ShapeError("need exactly d variable positions");
    if (d > n) throw DomainError("squarefree monomial needs d <= n");
    std::vector<bool> seen(n, false);
    for (auto v : vars) {
        if (v >= n) throw ShapeError("variable position out of range");
        if (seen[v]) throw DomainError("variable positions must be distinct");
        seen[v] = true;
    }
}

} // namespace

std::vector<GlynnTerm> glynn_decompose(std::size_t d,
                                       const std::vector<std::size_t>& vars,
                                       std::size_t n) {
    check_vars(d, vars, n);
    // normalization 1 / (2^(d-1) d!)
    BigInt denom = bigint_pow(BigInt(2), d - 1) * factorial(d);
    Rational base = make_rational(BigInt(1), denom);
    std::vector<GlynnTerm> terms;
    terms.reserve(std::size_t(1) << (d - 1));
    for (std::size_t mask = 0; mask < (std::size_t(1) << (d - 1)); ++mask) {
        GlynnTerm t;
        t.ell.assign(n, Rational(0));
        int sign = 1;
        t.ell[vars[0]] = 1;
        for (std::size_t k = 1; k < d; ++k) {
            bool minus = (mask >> (k - 1)) & 1;
            t.ell[vars[k]] = minus ? Rational(-1) : Rational(1);
            if (minus) sign = -sign;
        }
        t.c = sign > 0 ? base : -base;
        terms.push_back(std::move(t));
    }
    return terms;
}

HomogPoly<Rational> squarefree_monomial(std::size_t d,
                                        const std::vector<std::size_t>& vars,
                                        std::size_t n) {
    check_vars(d, vars, n);
    HomogPoly<Rational> m(n, d);
    std::vector<std::uint32_t> e(n, 0);
    for (auto v : vars) e[v] += 1;
    m.set_coeff(e, Rational(1));
    return m;
}

bool glynn_expansion_matches(const std::vector<GlynnTerm>& terms,
                             std::size_t d,
                             const std::vector<std::size_t>& vars,
                             std::size_t n) {
    HomogPoly<Rational> acc(n, d);
    for (const auto& t : terms) {
        HomogPoly<Rational> p = power_of_linear(t.ell, d).scaled(t.c);
        acc = acc + p;
    }
    return acc == squarefree_monomial(d, vars, n);
}

Tensor<Rational> comon_embed(const HomogPoly<Rational>& f, std::size_t cap) {
    const std::size_t m = f.n();
    const std::size_t k = f.d();
    if (k < 1) throw DomainError("embedding needs degree >= 1");
    std::size_t size = 1;
    for (std::size_t j = 0; j < k; ++j) {
        if (size > cap / m) throw SizeError("embedding target too large");
        size *= m;
    }
    std::vector<std::size_t> dims(k, m);
    Tensor<Rational> t(dims, Rational(0));
    std::vector<std::size_t> idx(k, 0);
    std::size_t flat = 0;
    do {
        std::vector<std::uint32_t> content(m, 0);
        for (auto i : idx) content[i] += 1;
        Rational c = f.coeff(content);
        if (sgn(c) != 0) {
            Rational v = c / Rational(multinomial(k, content));
            t.entries()[flat] = v;
        }
        ++flat;
    } while (next_multi(dims, idx));
    return t;
}

HomogPoly<Rational> comon_project(const Tensor<Rational>& t) {
    const auto& dims = t.dims();
    const std::size_t k = dims.size();
    const std::size_t m = dims[0];
    for (auto d : dims)
        if (d != m) throw ShapeError("symmetric tensor needs equal dimensions");
    // symmetry: each entry must match its sorted-index representative
    std::vector<std::size_t> idx(k, 0);
    std::size_t flat = 0;
    do {
        std::vector<std::size_t> rep(idx);
        std::sort(rep.begin(), rep.end());
        if (t.entries()[flat] != t.at(rep))
            throw SymmetryError("tensor is not symmetric");
        ++flat;
    } while (next_multi(dims, idx));
    HomogPoly<Rational> f(m, k);
    std::fill(idx.begin(), idx.end(), 0);
    flat = 0;
    do {
        const Rational& v = t.entries()[flat++];
        if (sgn(v) != 0) {
            std::vector<std::uint32_t> content(m, 0);
            for (auto i : idx) content[i] += 1;
            f.add_coeff(content, v);
        }
    } while (next_multi(dims, idx));
    return f;
}

Tensor<Fp> tensor_mod(const Tensor<Rational>& t, std::uint64_t p) {
    Tensor<Fp> out(t.dims(), Fp(0, p));
    for (std::size_t i = 0; i < t.size(); ++i)
        out.entries()[i] = reduce_mod(t.entries()[i], p);
    return out;
}

HomogPoly<Fp> homog_poly_mod(const HomogPoly<Rational>& f, std::uint64_t p) {
    HomogPoly<Fp> out(f.n(), f.d());
    for (const auto& [e, c] : f.terms()) out.set_coeff(e, reduce_mod(c, p));
    return out;
}

std::vector<Rational> coords_of_poly(const HomogPoly<Rational>& f) {
    auto mons = monomials_of_degree(f.n(), f.d());
    std::vector<Rational> coords;
    coords.reserve(mons.size());
    for (const auto& e : mons) coords.push_back(f.coeff(e));
    return coords;
}

HomogPoly<Rational> poly_from_coords(std::size_t n, std::size_t d,
                                     const std::vector<Rational>& coords) {
    auto mons = monomials_of_degree(n, d);
    if (coords.size() != mons.size())
        throw ShapeError("coordinate vector length does not match monomial count");
    HomogPoly<Rational> f(n, d);
    for (std::size_t i = 0; i < mons.size(); ++i)
        f.set_coeff(mons[i], coords[i]);
    return f;
}

} // namespace rankbarriers
