#include "rankbarriers/io.hpp"

namespace rankbarriers {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object())
        throw ValidationError(std::string("expected an object with '") + key +
                              "'");
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

std::uint64_t need_uint(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned())
        throw ValidationError(std::string("field '") + key +
                              "' must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::vector<std::size_t> need_size_list(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_array())
        throw ValidationError(std::string("field '") + key +
                              "' must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : v) {
        if (!x.is_number_unsigned())
            throw ValidationError(std::string("field '") + key +
                                  "' must hold nonnegative integers");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

std::vector<std::uint32_t> need_exp(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_array())
        throw ValidationError(std::string("field '") + key +
                              "' must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& x : v) {
        if (!x.is_number_unsigned())
            throw ValidationError("exponents must be nonnegative integers");
        out.push_back(x.get<std::uint32_t>());
    }
    return out;
}

std::vector<Rational> rational_list(const Json& v, const char* what) {
    if (!v.is_array())
        throw ValidationError(std::string(what) + " must be an array");
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(rational_from_json(x));
    return out;
}

} // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON input");
    return j;
}

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer() && !j.is_number_float())
        return Rational(j.get<long>());
    throw ValidationError("scalars must be strings like \"p/q\"");
}

Json matrix_to_json(const Matrix<Rational>& m) {
    Json entries = Json::array();
    for (const auto& e : m.entries()) entries.push_back(rational_to_json(e));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix<Rational> matrix_from_json(const Json& j) {
    std::size_t rows = need_uint(j, "rows");
    std::size_t cols = need_uint(j, "cols");
    std::vector<Rational> entries = rational_list(need(j, "entries"), "entries");
    if (entries.size() != rows * cols)
        throw ValidationError("matrix entry count does not match rows*cols");
    return Matrix<Rational>(rows, cols, std::move(entries));
}

Json tensor_to_json(const Tensor<Rational>& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries()) entries.push_back(rational_to_json(e));
    return Json{{"dims", t.dims()}, {"entries", entries}};
}

Tensor<Rational> tensor_from_json(const Json& j) {
    auto dims = need_size_list(j, "dims");
    auto entries = rational_list(need(j, "entries"), "entries");
    std::size_t expect = 1;
    for (auto d : dims) {
        if (d == 0) throw ValidationError("tensor dimensions must be positive");
        expect *= d;
    }
    if (dims.empty() || entries.size() != expect)
        throw ValidationError("tensor entry count does not match dims");
    return Tensor<Rational>(std::move(dims), std::move(entries));
}

Json homog_poly_to_json(const HomogPoly<Rational>& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"exp", e}, {"c", rational_to_json(c)}});
    return Json{{"n", f.n()}, {"d", f.d()}, {"terms", terms}};
}

HomogPoly<Rational> homog_poly_from_json(const Json& j) {
    std::size_t n = need_uint(j, "n");
    std::size_t d = need_uint(j, "d");
    HomogPoly<Rational> f(n, d);
    const Json& terms = need(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    for (const auto& t : terms)
        f.add_coeff(need_exp(t, "exp"), rational_from_json(need(t, "c")));
    return f;
}

Json space_to_json(const SpaceDescriptor& s) {
    if (s.kind == SpaceDescriptor::Kind::tensor)
        return Json{{"kind", "tensor"}, {"dims", s.dims}};
    return Json{{"kind", "waring"}, {"n", s.n}, {"d", s.d}};
}

SpaceDescriptor space_from_json(const Json& j) {
    const Json& kind = need(j, "kind");
    if (kind == "tensor")
        return SpaceDescriptor::tensor_space(need_size_list(j, "dims"));
    if (kind == "waring")
        return SpaceDescriptor::waring_space(need_uint(j, "n"),
                                             need_uint(j, "d"));
    throw ValidationError("space kind must be \"tensor\" or \"waring\"");
}

Json method_to_json(const RankMethod& m) {
    return Json{{"source", space_to_json(m.source)},
                {"target", space_to_json(m.target)},
                {"matrix", matrix_to_json(m.matrix)}};
}

RankMethod method_from_json(const Json& j) {
    RankMethod m{space_from_json(need(j, "source")),
                 space_from_json(need(j, "target")),
                 matrix_from_json(need(j, "matrix"))};
    validate_method(m);
    return m;
}

Json eps_poly_to_json(const EpsPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

EpsPoly eps_poly_from_json(const Json& j) {
    auto coeffs = rational_list(j, "eps-polynomial");
    EpsPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        out += EpsPoly::monomial(coeffs[k], static_cast<unsigned>(k));
    return out;
}

Json eps_tensor_to_json(const EpsTensor& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries()) entries.push_back(eps_poly_to_json(e));
    return Json{{"dims", t.dims()}, {"entries", entries}};
}

EpsTensor eps_tensor_from_json(const Json& j) {
    auto dims = need_size_list(j, "dims");
    const Json& entries = need(j, "entries");
    if (!entries.is_array()) throw ValidationError("'entries' must be an array");
    std::size_t expect = 1;
    for (auto d : dims) {
        if (d == 0) throw ValidationError("tensor dimensions must be positive");
        expect *= d;
    }
    if (dims.empty() || entries.size() != expect)
        throw ValidationError("tensor entry count does not match dims");
    std::vector<EpsPoly> out;
    for (const auto& e : entries) out.push_back(eps_poly_from_json(e));
    return EpsTensor(std::move(dims), std::move(out));
}

Json witness_to_json(const DegenerationWitness& w) {
    Json terms = Json::array();
    for (const auto& tuple : w.t1_factors) {
        Json slots = Json::array();
        for (const auto& vec : tuple) {
            Json v = Json::array();
            for (const auto& e : vec) v.push_back(eps_poly_to_json(e));
            slots.push_back(v);
        }
        terms.push_back(slots);
    }
    return Json{{"r", w.r},
                {"q", w.q},
                {"t1_factors", terms},
                {"t2", eps_tensor_to_json(w.t2)}};
}

DegenerationWitness witness_from_json(const Json& j) {
    DegenerationWitness w;
    w.r = need_uint(j, "r");
    w.q = need_uint(j, "q");
    const Json& terms = need(j, "t1_factors");
    if (!terms.is_array())
        throw ValidationError("'t1_factors' must be an array");
    for (const auto& tuple : terms) {
        if (!tuple.is_array())
            throw ValidationError("witness factor tuples must be arrays");
        std::vector<EpsVec> slots;
        for (const auto& vec : tuple) {
            if (!vec.is_array())
                throw ValidationError("witness factor vectors must be arrays");
            EpsVec v;
            for (const auto& e : vec) v.push_back(eps_poly_from_json(e));
            slots.push_back(std::move(v));
        }
        w.t1_factors.push_back(std::move(slots));
    }
    w.t2 = eps_tensor_from_json(need(j, "t2"));
    return w;
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", e}, {"c", rational_to_json(c)}});
    return Json{{"n", p.n()}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
    Poly p(need_uint(j, "n"));
    const Json& terms = need(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    for (const auto& t : terms) {
        auto e = need_exp(t, "exp");
        if (e.size() != p.n())
            throw ValidationError("exponent arity does not match 'n'");
        Rational c = p.coeff(e) + rational_from_json(need(t, "c"));
        p.set_coeff(e, c);
    }
    return p;
}

Json polymap_to_json(const PolyMap& m) {
    Json comps = Json::array();
    for (const auto& c : m.components) comps.push_back(poly_to_json(c));
    return Json{
        {"n_in", m.n_in}, {"n_out", m.n_out}, {"components", comps}};
}

PolyMap polymap_from_json(const Json& j) {
    PolyMap m;
    m.n_in = need_uint(j, "n_in");
    m.n_out = need_uint(j, "n_out");
    const Json& comps = need(j, "components");
    if (!comps.is_array())
        throw ValidationError("'components' must be an array");
    for (const auto& c : comps) m.components.push_back(poly_from_json(c));
    validate_polymap(m);
    return m;
}

Json multi_series_to_json(const MultiSeries& s) {
    Json center = Json::array();
    for (const auto& c : s.center()) center.push_back(rational_to_json(c));
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json{{"exp", e}, {"c", rational_to_json(c)}});
    return Json{{"n", s.n()},
                {"center", center},
                {"trunc", s.trunc()},
                {"terms", terms}};
}

MultiSeries multi_series_from_json(const Json& j) {
    std::size_t n = need_uint(j, "n");
    auto center = rational_list(need(j, "center"), "'center'");
    std::size_t trunc = need_uint(j, "trunc");
    MultiSeries s(n, std::move(center), trunc);
    const Json& terms = need(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    for (const auto& t : terms) {
        auto e = need_exp(t, "exp");
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        if (e.size() != n || deg > trunc)
            throw ValidationError("series term outside the truncation shape");
        Rational c = s.coeff(e) + rational_from_json(need(t, "c"));
        s.set_coeff(e, c);
    }
    return s;
}

Json bound_report_to_json(const BoundReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return Json{{"formula", r.formula},
                {"params", params},
                {"value", r.value.get_str()},
                {"notes", r.notes}};
}

Json certificate_to_json(const RankCertificate& c) {
    return Json{{"element", c.element},
                {"measured_rank", c.measured_rank},
                {"mu_s", c.mu_s},
                {"lower_bound", c.lower_bound.get_str()}};
}

Json cover_assignment_to_json(const CoverAssignment& a) {
    Json patterns = Json::array();
    for (const auto& p : a.patterns) {
        if (p.j)
            patterns.push_back(Json{{"kind", "pair"}, {"i", p.i}, {"j", *p.j}});
        else
            patterns.push_back(Json{{"kind", "single"}, {"i", p.i}});
    }
    Json exps = Json::array();
    for (const auto& e : a.exponents) exps.push_back(rational_to_json(e));
    return Json{{"patterns", patterns}, {"exponents", exps}};
}

} // namespace rankbarriers
