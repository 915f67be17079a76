#include "rankbarriers/methods.hpp"

#include <algorithm>
#include <random>

namespace rankbarriers {

namespace {

std::int64_t sample_int(std::mt19937_64& rng, std::int64_t bound) {
    // explicit modulo so the stream is identical across platforms
    std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<std::int64_t>(rng() % span) - bound;
}

std::vector<Fp> coords_of_poly_fp(const HomogPoly<Fp>& f, std::uint64_t p) {
    auto mons = monomials_of_degree(f.n(), f.d());
    std::vector<Fp> coords;
    coords.reserve(mons.size());
    Fp zero(0, p);
    for (const auto& e : mons) coords.push_back(f.coeff(e, zero));
    return coords;
}

bool all_zero(const std::vector<Fp>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Target rank of a coordinate vector over F_p, using exact elimination for
// matrix targets and the brute-force oracles otherwise.
std::size_t target_rank_fp(const SpaceDescriptor& target,
                           const std::vector<Fp>& coords, std::uint64_t p,
                           std::size_t oracle_r_max, std::size_t cap) {
    if (target.is_matrix_space()) {
        Matrix<Fp> m(target.dims[0], target.dims[1], coords);
        return mat_rank(m);
    }
    if (target.kind == SpaceDescriptor::Kind::tensor) {
        Tensor<Fp> t(target.dims, coords);
        auto r = brute_trank(t, oracle_r_max, cap);
        if (!r)
            throw OracleUnavailableError(
                "brute-force tensor rank oracle exhausted at r_max");
        return *r;
    }
    // waring target
    auto mons = monomials_of_degree(target.n, target.d);
    HomogPoly<Fp> f(target.n, target.d);
    for (std::size_t i = 0; i < mons.size(); ++i) f.set_coeff(mons[i], coords[i]);
    auto r = brute_wrank(f, p, oracle_r_max, cap);
    if (!r)
        throw OracleUnavailableError(
            "brute-force Waring rank oracle exhausted at r_max");
    return *r;
}

std::vector<Fp> apply_fp(const Matrix<Fp>& m, const std::vector<Fp>& v) {
    return mat_vec(m, v);
}

// All vectors of F_p^n whose first nonzero coordinate is 1 (projective
// representatives), plus optionally every nonzero vector.
std::vector<std::vector<Fp>> fp_vectors(std::size_t n, std::uint64_t p,
                                        bool normalized_only) {
    std::vector<std::vector<Fp>> out;
    std::vector<std::uint64_t> code(n, 0);
    for (;;) {
        std::uint64_t lead = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (code[i] != 0) {
                lead = code[i];
                break;
            }
        if (lead != 0 && (!normalized_only || lead == 1)) {
            std::vector<Fp> v;
            v.reserve(n);
            for (auto c : code) v.emplace_back(c, p);
            out.push_back(std::move(v));
        }
        std::size_t j = n;
        bool done = true;
        while (j > 0) {
            --j;
            if (++code[j] < p) {
                done = false;
                break;
            }
            code[j] = 0;
        }
        if (done) return out;
    }
}

// Multiset search for a sum of at most r candidates equal to `target`.
bool sum_search(const std::vector<std::vector<Fp>>& candidates,
                std::vector<Fp> residual, std::size_t r, std::size_t start) {
    if (all_zero(residual)) return true;
    if (r == 0) return false;
    for (std::size_t i = start; i < candidates.size(); ++i) {
        std::vector<Fp> next(residual);
        bool nonzero = false;
        for (std::size_t t = 0; t < next.size(); ++t) {
            next[t] -= candidates[i][t];
            if (!next[t].is_zero()) nonzero = true;
        }
        if (!nonzero) return true;
        if (r > 1 && sum_search(candidates, std::move(next), r - 1, i))
            return true;
    }
    return false;
}

std::optional<std::size_t> minimal_sum_rank(
    const std::vector<std::vector<Fp>>& candidates,
    const std::vector<Fp>& target, std::size_t r_max, std::size_t cap) {
    if (all_zero(target)) return 0;
    BigInt n_cands(static_cast<unsigned long>(candidates.size()));
    BigInt work = binomial(candidates.size() + r_max - 1, r_max);
    if (work > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("brute-force rank search exceeds cap");
    for (std::size_t r = 1; r <= r_max; ++r)
        if (sum_search(candidates, target, r, 0)) return r;
    return std::nullopt;
}

} // namespace

SpaceDescriptor SpaceDescriptor::tensor_space(std::vector<std::size_t> dims) {
    if (dims.empty()) throw ShapeError("tensor space needs >= 1 factor");
    for (auto d : dims)
        if (d == 0) throw ShapeError("tensor space dimensions must be positive");
    SpaceDescriptor s;
    s.kind = Kind::tensor;
    s.dims = std::move(dims);
    return s;
}

SpaceDescriptor SpaceDescriptor::waring_space(std::size_t n, std::size_t d) {
    if (n == 0) throw ShapeError("form space needs >= 1 variable");
    if (d == 0) throw DomainError("form space needs degree >= 1");
    SpaceDescriptor s;
    s.kind = Kind::waring;
    s.n = n;
    s.d = d;
    return s;
}

std::size_t SpaceDescriptor::dimension() const {
    if (kind == Kind::tensor) {
        std::size_t s = 1;
        for (auto d : dims) {
            if (s > (std::size_t(1) << 28) / d) throw SizeError("space too large");
            s *= d;
        }
        return s;
    }
    BigInt c = count_monomials_eq(n, d);
    if (c > BigInt(1u << 28)) throw SizeError("space too large");
    return c.get_ui();
}

std::size_t SpaceDescriptor::degree() const {
    return kind == Kind::tensor ? dims.size() : d;
}

void validate_method(const RankMethod& m) {
    if (m.matrix.rows() != m.target.dimension() ||
        m.matrix.cols() != m.source.dimension())
        throw ShapeError("method matrix shape does not match its spaces");
}

std::vector<Rational> apply(const RankMethod& m,
                            const std::vector<Rational>& coords) {
    validate_method(m);
    return mat_vec(m.matrix, coords);
}

Tensor<Rational> tensor_from_coords(const SpaceDescriptor& s,
                                    const std::vector<Rational>& coords) {
    if (s.kind != SpaceDescriptor::Kind::tensor)
        throw DomainError("coordinates do not describe a tensor space");
    return Tensor<Rational>(s.dims, coords);
}

std::vector<Rational> coords_from_tensor(const SpaceDescriptor& s,
                                         const Tensor<Rational>& t) {
    if (s.kind != SpaceDescriptor::Kind::tensor || s.dims != t.dims())
        throw ShapeError("tensor does not live in the described space");
    return t.entries();
}

RankMethod make_flattening_method(std::size_t n, std::size_t d,
                                  const std::vector<std::size_t>& left) {
    if (n == 0 || d == 0) throw DomainError("flattening needs n,d >= 1");
    std::vector<bool> in_left(d, false);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] >= d) throw ShapeError("flattening position out of range");
        if (i > 0 && left[i] <= left[i - 1])
            throw ShapeError("flattening positions must be strictly ascending");
        in_left[left[i]] = true;
    }
    if (left.empty() || left.size() == d)
        throw DomainError("flattening needs a nonempty proper subset of positions");
    std::vector<std::size_t> sdims(d, n);
    std::size_t rows = 1, cols = 1;
    for (std::size_t j = 0; j < d; ++j) (in_left[j] ? rows : cols) *= n;

    RankMethod m;
    m.source = SpaceDescriptor::tensor_space(sdims);
    m.target = SpaceDescriptor::tensor_space({rows, cols});
    m.matrix =
        Matrix<Rational>(rows * cols, m.source.dimension(), Rational(0));
    std::vector<std::size_t> idx(d, 0);
    std::size_t flat = 0;
    do {
        std::size_t r = 0, c = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (in_left[j])
                r = r * n + idx[j];
            else
                c = c * n + idx[j];
        }
        m.matrix.at(r * cols + c, flat++) = 1;
    } while (next_multi(sdims, idx));
    return m;
}

RankMethod make_grouping_method(
    std::size_t n, std::size_t d,
    const std::vector<std::vector<std::uint32_t>>& parts) {
    if (n == 0 || d == 0) throw DomainError("grouping needs n,d >= 1");
    std::vector<std::size_t> sdims(d, n);
    // validate by regrouping a throwaway zero tensor
    Tensor<Rational> probe(sdims, Rational(0));
    Tensor<Rational> shaped = group(probe, parts);

    RankMethod m;
    m.source = SpaceDescriptor::tensor_space(sdims);
    m.target = SpaceDescriptor::tensor_space(shaped.dims());
    m.matrix = Matrix<Rational>(shaped.size(), probe.size(), Rational(0));
    std::vector<std::size_t> idx(d, 0);
    std::size_t flat = 0;
    do {
        std::vector<std::size_t> nidx(parts.size(), 0);
        for (std::size_t b = 0; b < parts.size(); ++b)
            for (auto p : parts[b]) nidx[b] = nidx[b] * n + idx[p];
        m.matrix.at(flat_index(shaped.dims(), nidx), flat++) = 1;
    } while (next_multi(sdims, idx));
    return m;
}

namespace {

// Sampled simple source elements in coordinates, over Q.
std::vector<Rational> sample_simple_coords(const SpaceDescriptor& source,
                                           std::mt19937_64& rng,
                                           std::int64_t bound) {
    if (source.kind == SpaceDescriptor::Kind::tensor) {
        std::vector<std::vector<Rational>> factors;
        for (auto dim : source.dims) {
            std::vector<Rational> v;
            v.reserve(dim);
            for (std::size_t i = 0; i < dim; ++i)
                v.emplace_back(static_cast<long>(sample_int(rng, bound)));
            factors.push_back(std::move(v));
        }
        return simple_tensor(factors).entries();
    }
    std::vector<Rational> ell;
    ell.reserve(source.n);
    for (std::size_t i = 0; i < source.n; ++i)
        ell.emplace_back(static_cast<long>(sample_int(rng, bound)));
    return coords_of_poly(power_of_linear(ell, source.d));
}

std::size_t matrix_target_rank(const RankMethod& m,
                               const std::vector<Rational>& out) {
    Matrix<Rational> mat(m.target.dims[0], m.target.dims[1], out);
    return mat_rank(mat);
}

} // namespace

std::size_t mu_on_simples_sampled(const RankMethod& m,
                                  const SampleConfig& cfg) {
    validate_method(m);
    if (!m.target.is_matrix_space())
        throw OracleUnavailableError(
            "sampled mu over Q needs a matrix target (use the F_p variant "
            "with the brute-force oracles otherwise)");
    std::mt19937_64 rng(cfg.seed);
    std::size_t best = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        auto coords = sample_simple_coords(m.source, rng, cfg.coeff_bound);
        best = std::max(best, matrix_target_rank(m, rankbarriers::apply(m, coords)));
    }
    return best;
}

Rational measured_potency_sampled(const RankMethod& m,
                                  const SampleConfig& cfg) {
    validate_method(m);
    if (!m.target.is_matrix_space())
        throw OracleUnavailableError("sampled potency over Q needs a matrix target");
    std::size_t mu_s = mu_on_simples_sampled(m, cfg);
    if (mu_s == 0)
        throw DegenerateMethodError(
            "method vanished on every sampled simple; potency undefined");
    std::mt19937_64 rng(cfg.seed + 1);
    std::size_t mu_v = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        std::vector<Rational> coords;
        coords.reserve(m.source.dimension());
        for (std::size_t i = 0; i < m.source.dimension(); ++i)
            coords.emplace_back(static_cast<long>(sample_int(rng, cfg.coeff_bound)));
        mu_v = std::max(mu_v, matrix_target_rank(m, rankbarriers::apply(m, coords)));
    }
    return make_rational(BigInt(static_cast<unsigned long>(mu_v)),
                         BigInt(static_cast<unsigned long>(mu_s)));
}

RankCertificate lower_bound_certificate(const RankMethod& m,
                                        const std::vector<Rational>& coords,
                                        std::size_t mu_s,
                                        const std::string& element_id) {
    validate_method(m);
    if (mu_s == 0)
        throw DegenerateMethodError("mu_S = 0 certifies nothing");
    if (!m.target.is_matrix_space())
        throw OracleUnavailableError("certificates need a matrix target");
    RankCertificate cert;
    cert.element = element_id;
    cert.measured_rank = matrix_target_rank(m, rankbarriers::apply(m, coords));
    cert.mu_s = mu_s;
    cert.lower_bound =
        BigInt(static_cast<unsigned long>((cert.measured_rank + mu_s - 1) / mu_s));
    return cert;
}

std::optional<std::size_t> brute_trank(const Tensor<Fp>& t, std::size_t r_max,
                                       std::size_t cap) {
    std::uint64_t p = t.entries()[0].modulus();
    // candidate simples: first factor any nonzero vector, the rest
    // normalized projective representatives (covers every scalar multiple)
    std::vector<std::vector<std::vector<Fp>>> factor_choices;
    BigInt count(1);
    for (std::size_t j = 0; j < t.order(); ++j) {
        factor_choices.push_back(fp_vectors(t.dims()[j], p, j > 0));
        count *= BigInt(static_cast<unsigned long>(factor_choices.back().size()));
    }
    if (count > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("brute-force tensor rank candidate set exceeds cap");
    std::vector<std::vector<Fp>> candidates;
    candidates.reserve(count.get_ui());
    std::vector<std::size_t> pick(t.order(), 0);
    std::vector<std::size_t> radix;
    for (const auto& fc : factor_choices) radix.push_back(fc.size());
    for (;;) {
        std::vector<std::vector<Fp>> factors;
        factors.reserve(t.order());
        for (std::size_t j = 0; j < t.order(); ++j)
            factors.push_back(factor_choices[j][pick[j]]);
        candidates.push_back(simple_tensor(factors).entries());
        if (!next_multi(radix, pick)) break;
    }
    return minimal_sum_rank(candidates, t.entries(), r_max, cap);
}

std::optional<std::size_t> brute_wrank(const HomogPoly<Fp>& f, std::uint64_t p,
                                       std::size_t r_max, std::size_t cap) {
    if (p <= f.d())
        throw CharacteristicError(
            "Waring rank over F_p needs p > d (degree not invertible)");
    auto ells = fp_vectors(f.n(), p, true);
    std::vector<std::vector<Fp>> candidates;
    BigInt count = BigInt(static_cast<unsigned long>(ells.size())) *
                   BigInt(static_cast<unsigned long>(p - 1));
    if (count > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("brute-force Waring rank candidate set exceeds cap");
    candidates.reserve(count.get_ui());
    for (const auto& ell : ells) {
        auto base = coords_of_poly_fp(power_of_linear(ell, f.d()), p);
        for (std::uint64_t c = 1; c < p; ++c) {
            std::vector<Fp> scaled(base);
            Fp fc(c, p);
            for (auto& x : scaled) x *= fc;
            candidates.push_back(std::move(scaled));
        }
    }
    return minimal_sum_rank(candidates, coords_of_poly_fp(f, p), r_max, cap);
}

PotencyMeasurement measured_potency_exhaustive_fp(const RankMethod& m,
                                                  std::uint64_t p,
                                                  std::size_t oracle_r_max,
                                                  std::size_t cap) {
    validate_method(m);
    Matrix<Fp> mat = matrix_mod(m.matrix, p);
    PotencyMeasurement out;

    // mu(S): every simple source element (all scalings included).
    if (m.source.kind == SpaceDescriptor::Kind::tensor) {
        std::vector<std::vector<std::vector<Fp>>> factor_choices;
        BigInt count(1);
        for (auto dim : m.source.dims) {
            factor_choices.push_back(fp_vectors(dim, p, false));
            count *=
                BigInt(static_cast<unsigned long>(factor_choices.back().size()));
        }
        if (count > BigInt(static_cast<unsigned long>(cap)))
            throw SizeError("exhaustive simple enumeration exceeds cap");
        std::vector<std::size_t> radix;
        for (const auto& fc : factor_choices) radix.push_back(fc.size());
        std::vector<std::size_t> pick(radix.size(), 0);
        for (;;) {
            std::vector<std::vector<Fp>> factors;
            for (std::size_t j = 0; j < radix.size(); ++j)
                factors.push_back(factor_choices[j][pick[j]]);
            auto img = apply_fp(mat, simple_tensor(factors).entries());
            out.mu_s = std::max(
                out.mu_s, target_rank_fp(m.target, img, p, oracle_r_max, cap));
            if (!next_multi(radix, pick)) break;
        }
    } else {
        auto ells = fp_vectors(m.source.n, p, true);
        for (const auto& ell : ells) {
            auto coords = coords_of_poly_fp(power_of_linear(ell, m.source.d), p);
            auto img = apply_fp(mat, coords);
            out.mu_s = std::max(
                out.mu_s, target_rank_fp(m.target, img, p, oracle_r_max, cap));
        }
    }

    // mu(V): maximum over the image subspace, enumerated from a basis of
    // the column space.
    Matrix<Fp> tr = mat.transposed();
    auto ech = detail::echelon(tr);
    std::vector<std::vector<Fp>> basis;
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
        std::vector<Fp> row;
        row.reserve(mat.rows());
        for (std::size_t j = 0; j < mat.rows(); ++j) row.push_back(ech.m.at(i, j));
        basis.push_back(std::move(row));
    }
    BigInt combos = bigint_pow(BigInt(static_cast<unsigned long>(p)),
                               basis.size());
    if (combos > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("exhaustive image enumeration exceeds cap");
    std::vector<std::uint64_t> code(basis.size(), 0);
    Fp zero(0, p);
    for (;;) {
        std::vector<Fp> v(mat.rows(), zero);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (code[b] == 0) continue;
            Fp c(code[b], p);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * basis[b][j];
        }
        out.mu_v =
            std::max(out.mu_v, target_rank_fp(m.target, v, p, oracle_r_max, cap));
        std::size_t j = basis.size();
        bool done = true;
        while (j > 0) {
            --j;
            if (++code[j] < p) {
                done = false;
                break;
            }
            code[j] = 0;
        }
        if (done) break;
    }
    return out;
}

std::size_t mu_on_simples_sampled_fp(const RankMethod& m, std::uint64_t p,
                                     const SampleConfig& cfg,
                                     std::size_t oracle_r_max,
                                     std::size_t cap) {
    validate_method(m);
    Matrix<Fp> mat = matrix_mod(m.matrix, p);
    std::mt19937_64 rng(cfg.seed);
    std::size_t best = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        std::vector<Fp> coords;
        if (m.source.kind == SpaceDescriptor::Kind::tensor) {
            std::vector<std::vector<Fp>> factors;
            for (auto dim : m.source.dims) {
                std::vector<Fp> v;
                v.reserve(dim);
                for (std::size_t i = 0; i < dim; ++i) v.emplace_back(rng() % p, p);
                factors.push_back(std::move(v));
            }
            coords = simple_tensor(factors).entries();
        } else {
            std::vector<Fp> ell;
            ell.reserve(m.source.n);
            for (std::size_t i = 0; i < m.source.n; ++i)
                ell.emplace_back(rng() % p, p);
            coords = coords_of_poly_fp(power_of_linear(ell, m.source.d), p);
        }
        auto img = apply_fp(mat, coords);
        best = std::max(best,
                        target_rank_fp(m.target, img, p, oracle_r_max, cap));
    }
    return best;
}

} // namespace rankbarriers
