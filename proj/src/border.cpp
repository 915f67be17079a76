#include "rankbarriers/border.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "rankbarriers/grading.hpp"

namespace rankbarriers {

EpsTensor eps_tensor_from(const Tensor<Rational>& t) {
    EpsTensor out(t.dims(), EpsPoly());
    for (std::size_t i = 0; i < t.size(); ++i)
        out.entries()[i] = EpsPoly(t.entries()[i]);
    return out;
}

EpsTensor witness_t1(const DegenerationWitness& w,
                     const std::vector<std::size_t>& dims) {
    if (w.t1_factors.size() != w.r)
        throw ShapeError("witness term count differs from its declared r");
    EpsTensor acc(dims, EpsPoly());
    for (const auto& tuple : w.t1_factors) {
        if (tuple.size() != dims.size())
            throw ShapeError("witness factor tuple arity mismatch");
        for (std::size_t j = 0; j < dims.size(); ++j)
            if (tuple[j].size() != dims[j])
                throw ShapeError("witness factor vector length mismatch");
        acc = acc + simple_tensor(tuple);
    }
    return acc;
}

bool verify_degeneration(const Tensor<Rational>& t,
                         const DegenerationWitness& w) {
    if (w.q < 1) throw DomainError("degeneration order must be >= 1");
    if (w.t2.dims() != t.dims())
        throw ShapeError("witness remainder shape mismatch");
    EpsTensor t1 = witness_t1(w, t.dims());
    unsigned q = static_cast<unsigned>(w.q);
    for (std::size_t i = 0; i < t.size(); ++i) {
        EpsPoly lhs = EpsPoly::monomial(t.entries()[i], q - 1);
        EpsPoly rhs = t1.entries()[i] + w.t2.entries()[i].shifted(q);
        if (lhs != rhs) return false;
    }
    return true;
}

std::size_t degeneration_search_cap(std::size_t requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("RANKBARRIERS_MAX_SEARCH")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 2000000;
}

std::size_t module_rank_upper(const std::vector<EpsVec>& generators) {
    return generators.size();
}

namespace {

void append_rational(std::string& buf, const Rational& x) {
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    char tmp[24];
    if (num.fits_slong_p()) {
        auto [p, ec] = std::to_chars(tmp, tmp + sizeof tmp, num.get_si());
        buf.append(tmp, p);
    } else {
        buf += num.get_str();
    }
    if (den != 1) {
        buf += '/';
        if (den.fits_slong_p()) {
            auto [p, ec] = std::to_chars(tmp, tmp + sizeof tmp, den.get_si());
            buf.append(tmp, p);
        } else {
            buf += den.get_str();
        }
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Candidate simple eps-tensors: one coefficient-pool choice per
// (slot, coordinate, eps-degree) cell; cells ordered lexicographically with
// the last cell fastest, so raw indices run in lexicographic pool order.
// Per-slot tables hold every factor vector one slot can take, in that order.
struct CandidateSpace {
    std::vector<std::size_t> dims;
    unsigned degp1 = 1;

    struct Slot {
        std::vector<EpsVec> vecs;
        std::vector<unsigned> tdeg; // summed entry degrees
    };
    std::vector<Slot> slots;
    std::vector<std::uint64_t> stride; // raw = sum slot_choice[j]*stride[j]
    std::uint64_t count = 0;

    CandidateSpace(const std::vector<std::size_t>& dims_, unsigned eps_deg_max,
                   const std::vector<Rational>& pool)
        : dims(dims_), degp1(eps_deg_max + 1) {
        for (std::size_t j = 0; j < dims.size(); ++j) {
            Slot slot;
            const std::size_t cells = dims[j] * degp1;
            std::vector<std::size_t> dig(cells, 0);
            bool done = false;
            while (!done) {
                EpsVec v(dims[j]);
                unsigned deg = 0;
                for (std::size_t i = 0; i < dims[j]; ++i) {
                    EpsPoly e;
                    for (unsigned l = 0; l < degp1; ++l) {
                        const Rational& c = pool[dig[i * degp1 + l]];
                        if (sgn(c) != 0) e += EpsPoly::monomial(c, l);
                    }
                    if (e.degree() > 0) deg += static_cast<unsigned>(e.degree());
                    v[i] = std::move(e);
                }
                slot.vecs.push_back(std::move(v));
                slot.tdeg.push_back(deg);
                done = true;
                for (std::size_t c = cells; c-- > 0;) {
                    if (++dig[c] < pool.size()) {
                        done = false;
                        break;
                    }
                    dig[c] = 0;
                }
            }
            slots.push_back(std::move(slot));
        }
        stride.assign(dims.size(), 1);
        count = 1;
        for (std::size_t j = dims.size(); j-- > 0;) {
            stride[j] = count;
            count *= slots[j].vecs.size();
        }
    }

    std::vector<std::size_t> choices(std::uint64_t raw) const {
        std::vector<std::size_t> c(dims.size());
        for (std::size_t j = 0; j < dims.size(); ++j) {
            c[j] = static_cast<std::size_t>(raw / stride[j]);
            raw %= stride[j];
        }
        return c;
    }

    std::vector<EpsVec> factors(std::uint64_t raw) const {
        auto c = choices(raw);
        std::vector<EpsVec> fs;
        fs.reserve(dims.size());
        for (std::size_t j = 0; j < dims.size(); ++j)
            fs.push_back(slots[j].vecs[c[j]]);
        return fs;
    }

    unsigned total_eps_degree(std::uint64_t raw) const {
        unsigned deg = 0;
        for (std::size_t j = 0; j < dims.size(); ++j) {
            deg += slots[j].tdeg[raw / stride[j]];
            raw %= stride[j];
        }
        return deg;
    }
};

// Candidates at one degeneration order q, enumerable by rank: increasing
// total eps-degree, ties in raw (lexicographic pool) order.  Truncations
// mod eps^q are indexed by a sorted (hash, rank) table for residual lookups.
struct QLevel {
    const CandidateSpace& space;
    unsigned q;
    std::vector<std::uint32_t> order; // rank -> raw index
    std::vector<std::pair<std::uint64_t, std::uint32_t>> hindex;

    QLevel(const CandidateSpace& sp, unsigned q_) : space(sp), q(q_) {
        std::vector<unsigned> tdeg(space.count);
        order.resize(space.count);
        for (std::uint64_t i = 0; i < space.count; ++i) {
            order[i] = static_cast<std::uint32_t>(i);
            tdeg[i] = space.total_eps_degree(i);
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) {
                             return tdeg[a] < tdeg[b];
                         });
        std::vector<std::uint32_t> rank_of_raw(space.count);
        for (std::uint32_t r = 0; r < space.count; ++r)
            rank_of_raw[order[r]] = r;

        // depth-first over slot choices, reusing partial outer products
        hindex.reserve(space.count);
        std::string key;
        std::vector<EpsPoly> unit{EpsPoly(1)};
        auto rec = [&](auto&& self, std::size_t j, std::uint64_t raw_base,
                       const std::vector<EpsPoly>& partial) -> void {
            if (j == space.dims.size()) {
                key.clear();
                append_entries(key, partial);
                hindex.emplace_back(fnv1a(key), rank_of_raw[raw_base]);
                return;
            }
            const auto& slot = space.slots[j];
            for (std::size_t s = 0; s < slot.vecs.size(); ++s) {
                std::vector<EpsPoly> next(partial.size() * space.dims[j]);
                for (std::size_t e = 0; e < partial.size(); ++e)
                    for (std::size_t i = 0; i < space.dims[j]; ++i)
                        next[e * space.dims[j] + i] =
                            (partial[e] * slot.vecs[s][i]).truncated(q);
                self(self, j + 1, raw_base + s * space.stride[j], next);
            }
        };
        rec(rec, 0, 0, unit);
        std::sort(hindex.begin(), hindex.end());
    }

    void append_entries(std::string& buf,
                        const std::vector<EpsPoly>& entries) const {
        for (const auto& e : entries) {
            for (unsigned k = 0; k < q; ++k) {
                append_rational(buf, e.coeff(k));
                buf += ',';
            }
            buf += ';';
        }
    }

    std::vector<EpsPoly> trunc_of_rank(std::uint32_t rank) const {
        auto c = space.choices(order[rank]);
        std::vector<EpsPoly> partial{EpsPoly(1)};
        for (std::size_t j = 0; j < space.dims.size(); ++j) {
            const EpsVec& v = space.slots[j].vecs[c[j]];
            std::vector<EpsPoly> next(partial.size() * space.dims[j]);
            for (std::size_t e = 0; e < partial.size(); ++e)
                for (std::size_t i = 0; i < space.dims[j]; ++i)
                    next[e * space.dims[j] + i] = (partial[e] * v[i]).truncated(q);
            partial = std::move(next);
        }
        return partial;
    }
};

struct Searcher {
    const Tensor<Rational>& t;
    const QLevel& level;

    // Entries of eps^{q-1} t - prefix_sum, truncated mod eps^q.
    std::vector<EpsPoly> residual(const std::vector<EpsPoly>& prefix_sum) const {
        std::vector<EpsPoly> out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            EpsPoly target = EpsPoly::monomial(t.entries()[i], level.q - 1);
            out[i] = (target - prefix_sum[i]).truncated(level.q);
        }
        return out;
    }

    std::optional<DegenerationWitness> close(
        const std::vector<std::uint32_t>& prefix,
        const std::vector<EpsPoly>& prefix_sum) const {
        std::vector<EpsPoly> needed = residual(prefix_sum);
        std::string key;
        level.append_entries(key, needed);
        std::uint64_t h = fnv1a(key);
        auto lo = std::lower_bound(level.hindex.begin(), level.hindex.end(),
                                   std::make_pair(h, std::uint32_t(0)));
        std::uint32_t min_rank = prefix.empty() ? 0 : prefix.back();
        for (auto it = lo; it != level.hindex.end() && it->first == h; ++it) {
            std::uint32_t rank = it->second;
            if (rank < min_rank) continue;
            if (level.trunc_of_rank(rank) != needed) continue;
            DegenerationWitness w;
            w.q = level.q;
            for (auto pr : prefix)
                w.t1_factors.push_back(
                    level.space.factors(level.order[pr]));
            w.t1_factors.push_back(level.space.factors(level.order[rank]));
            w.r = w.t1_factors.size();
            EpsTensor t1 = witness_t1(w, t.dims());
            bool divisible = true;
            std::vector<EpsPoly> quot(t.size());
            for (std::size_t i = 0; i < t.size() && divisible; ++i) {
                EpsPoly target = EpsPoly::monomial(t.entries()[i], level.q - 1);
                EpsPoly diff = target - t1.entries()[i];
                if (!diff.divisible_by_eps_pow(level.q))
                    divisible = false;
                else
                    quot[i] = diff.div_eps_pow(level.q);
            }
            if (!divisible) continue;
            w.t2 = EpsTensor(t.dims(), std::move(quot));
            if (verify_degeneration(t, w)) return w;
        }
        return std::nullopt;
    }

    std::optional<DegenerationWitness> extend(
        std::size_t remaining, std::uint32_t start,
        std::vector<std::uint32_t>& prefix,
        const std::vector<EpsPoly>& sum) const {
        if (remaining == 1) return close(prefix, sum);
        for (std::uint32_t rank = start; rank < level.order.size(); ++rank) {
            std::vector<EpsPoly> cand = level.trunc_of_rank(rank);
            for (std::size_t i = 0; i < cand.size(); ++i)
                cand[i] += sum[i];
            prefix.push_back(rank);
            auto found = extend(remaining - 1, rank, prefix, cand);
            if (found) return found;
            prefix.pop_back();
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<DegenerationWitness> search_degeneration(
    const Tensor<Rational>& t, std::size_t r, std::size_t q_max,
    unsigned eps_deg_max, const std::vector<Rational>& coeff_pool,
    std::size_t work_cap) {
    if (coeff_pool.empty()) throw DomainError("coefficient pool is empty");
    if (q_max < 1) throw DomainError("degeneration order bound must be >= 1");
    const std::size_t cap = degeneration_search_cap(work_cap);

    if (t.is_zero()) {
        DegenerationWitness w;
        w.r = 0;
        w.q = 1;
        w.t2 = EpsTensor(t.dims(), EpsPoly());
        return w;
    }
    if (r == 0) return std::nullopt;

    std::size_t coords = 0;
    for (auto d : t.dims()) coords += d;
    BigInt total = bigint_pow(BigInt(coeff_pool.size()),
                              coords * (eps_deg_max + 1));
    if (total > static_cast<unsigned long>(cap) || total > 0xfffffffful)
        throw SizeError("degeneration candidate space exceeds the search cap");
    if (r >= 2) {
        BigInt prefixes = binomial(total.get_ui() + r - 2, r - 1);
        if (prefixes > static_cast<unsigned long>(cap))
            throw SizeError("degeneration prefix space exceeds the search cap");
    }

    CandidateSpace space(t.dims(), eps_deg_max, coeff_pool);
    for (unsigned q = 1; q <= q_max; ++q) {
        QLevel level(space, q);
        Searcher searcher{t, level};
        for (std::size_t s = 1; s <= r; ++s) {
            std::vector<std::uint32_t> prefix;
            std::vector<EpsPoly> zero(t.size());
            auto found = searcher.extend(s, 0, prefix, zero);
            if (found) return found;
        }
    }
    return std::nullopt;
}

} // namespace rankbarriers
