// Command-line front end: every subcommand reads flags (and JSON files or
// stdin where noted), prints a single-line JSON result on stdout, and exits
// 0 on success, 2 on rejected input, 1 on an internal failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankbarriers/io.hpp"

namespace rb = rankbarriers;
using rb::Json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw rb::ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::string join_uints(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

struct BoundArgs {
    std::string formula;
    std::uint64_t n = 0, d = 0, k = 2, m = 0;
    std::vector<std::uint64_t> dims, nvec, dvec;
};

void run_bound(const BoundArgs& a) {
    rb::BoundReport rep;
    rep.formula = a.formula;
    auto need = [&](const char* name, std::uint64_t v) {
        if (v == 0)
            throw rb::ValidationError(std::string("formula '") + a.formula +
                                      "' needs --" + name);
        rep.params[name] = std::to_string(v);
        return v;
    };
    if (a.formula == "matrix-tensor") {
        rep.value = rb::pot_bound_matrix_tensor(need("n", a.n), need("d", a.d));
    } else if (a.formula == "matrix-waring") {
        rep.value = rb::pot_bound_matrix_waring(need("n", a.n), need("d", a.d));
    } else if (a.formula == "tk-tensor") {
        rep.value = rb::pot_bound_tk_tensor(need("n", a.n), need("d", a.d),
                                            need("k", a.k));
    } else if (a.formula == "tk-waring") {
        rep.value = rb::pot_bound_tk_waring(need("n", a.n), need("d", a.d),
                                            need("k", a.k));
    } else if (a.formula == "wk-tensor") {
        rep.value = rb::pot_bound_wk_tensor(need("n", a.n), need("d", a.d),
                                            need("k", a.k));
    } else if (a.formula == "wk-waring") {
        rep.value = rb::pot_bound_wk_waring(need("n", a.n), need("d", a.d),
                                            need("k", a.k));
    } else if (a.formula == "border-tk-tensor") {
        rep.value = rb::pot_bound_border_tk_tensor(
            need("n", a.n), need("d", a.d), need("k", a.k));
        rep.notes.push_back("border variant; equals the rank-method bound");
    } else if (a.formula == "border-tk-waring") {
        rep.value = rb::pot_bound_border_tk_waring(
            need("n", a.n), need("d", a.d), need("k", a.k));
        rep.notes.push_back("border variant; equals the rank-method bound");
    } else if (a.formula == "basic-subspace") {
        rep.value = rb::basic_subspace_bound(a.dims);
        rep.params["dims"] = join_uints(a.dims);
    } else if (a.formula == "trivial-flattening") {
        rep.value =
            rb::trivial_flattening_potency(need("n", a.n), need("d", a.d));
    } else if (a.formula == "trivial-tk") {
        rep.value = rb::trivial_tk_potency(need("n", a.n), need("d", a.d),
                                           need("k", a.k));
    } else if (a.formula == "smh") {
        rep.value = rb::smh_bound(a.nvec, a.dvec);
        rep.params["nvec"] = join_uints(a.nvec);
        rep.params["dvec"] = join_uints(a.dvec);
    } else if (a.formula == "improved-waring") {
        rep.value = rb::improved_waring_bound(need("m", a.m), need("d", a.d));
    } else if (a.formula == "improved-tensor") {
        rep.value = rb::improved_tensor_bound(need("m", a.m), need("d", a.d));
    } else if (a.formula == "triple") {
        if (a.dims.size() != 3)
            throw rb::ValidationError("formula 'triple' needs --dims n1,n2,n3");
        rep.value = rb::triple_tensor_bound(a.dims[0], a.dims[1], a.dims[2]);
        rep.params["dims"] = join_uints(a.dims);
    } else {
        throw rb::ValidationError("unknown formula: " + a.formula);
    }
    emit(rb::bound_report_to_json(rep));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for tensor/Waring rank lower-bound methods"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for sampled operations");

    // bound
    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "evaluate a potency/bound formula");
    bound->add_option("--formula", ba.formula, "formula name")->required();
    bound->add_option("--n", ba.n);
    bound->add_option("--d", ba.d);
    bound->add_option("--k", ba.k);
    bound->add_option("--m", ba.m);
    bound->add_option("--dims", ba.dims)->delimiter(',');
    bound->add_option("--nvec", ba.nvec)->delimiter(',');
    bound->add_option("--dvec", ba.dvec)->delimiter(',');
    bound->callback([&] { run_bound(ba); });

    // flatten-rank
    std::string fr_tensor;
    std::vector<std::size_t> fr_left;
    auto* frank = app.add_subcommand(
        "flatten-rank", "rank of a flattening, with the induced lower bound");
    frank->add_option("--tensor", fr_tensor, "tensor JSON file or -")
        ->required();
    frank->add_option("--left", fr_left, "row-group positions (0-based)")
        ->required()
        ->delimiter(',');
    frank->callback([&] {
        auto t = rb::tensor_from_json(rb::parse_json(slurp(fr_tensor)));
        auto m = rb::flatten(t, fr_left);
        std::size_t rank = rb::mat_rank(m);
        rb::RankCertificate cert{"input tensor", rank, 1,
                                 rb::BigInt(static_cast<unsigned long>(rank))};
        emit(Json{{"dims", t.dims()},
                  {"left", fr_left},
                  {"rows", m.rows()},
                  {"cols", m.cols()},
                  {"rank", rank},
                  {"certificate", rb::certificate_to_json(cert)}});
    });

    // glynn
    std::uint64_t gl_d = 0, gl_n = 0;
    std::vector<std::size_t> gl_vars;
    auto* glynn = app.add_subcommand(
        "glynn", "power-sum decomposition of a squarefree monomial");
    glynn->add_option("--d", gl_d, "number of factors")->required();
    glynn->add_option("--n", gl_n, "ambient variable count (default d)");
    glynn->add_option("--vars", gl_vars, "variable indices (default 0..d-1)")
        ->delimiter(',');
    glynn->callback([&] {
        std::size_t n = gl_n ? gl_n : gl_d;
        std::vector<std::size_t> vars = gl_vars;
        if (vars.empty())
            for (std::size_t i = 0; i < gl_d; ++i) vars.push_back(i);
        auto terms = rb::glynn_decompose(gl_d, vars, n);
        Json jterms = Json::array();
        for (const auto& t : terms) {
            Json ell = Json::array();
            for (const auto& c : t.ell) ell.push_back(rb::rational_to_json(c));
            jterms.push_back(
                Json{{"c", rb::rational_to_json(t.c)}, {"ell", ell}});
        }
        bool ok = rb::glynn_expansion_matches(terms, gl_d, vars, n);
        emit(Json{{"d", gl_d},
                  {"n", n},
                  {"count", terms.size()},
                  {"terms", jterms},
                  {"verified", ok}});
    });

    // comon
    std::string cm_poly, cm_tensor;
    auto* comon = app.add_subcommand(
        "comon", "symmetric embedding of forms into tensors, and back");
    comon->add_option("--poly", cm_poly, "form JSON to embed (file or -)");
    comon->add_option("--tensor", cm_tensor,
                      "symmetric tensor JSON to project (file or -)");
    comon->callback([&] {
        if (cm_poly.empty() == cm_tensor.empty())
            throw rb::ValidationError(
                "pass exactly one of --poly (embed) or --tensor (project)");
        if (!cm_poly.empty()) {
            auto f = rb::homog_poly_from_json(rb::parse_json(slurp(cm_poly)));
            emit(Json{{"tensor", rb::tensor_to_json(rb::comon_embed(f))}});
        } else {
            auto t = rb::tensor_from_json(rb::parse_json(slurp(cm_tensor)));
            emit(Json{{"poly", rb::homog_poly_to_json(rb::comon_project(t))}});
        }
    });

    // brute-rank
    std::string br_tensor, br_poly;
    std::uint64_t br_p = 2;
    std::size_t br_rmax = 6;
    auto* brute = app.add_subcommand(
        "brute-rank", "exhaustive rank over a prime field");
    brute->add_option("--tensor", br_tensor, "tensor JSON (file or -)");
    brute->add_option("--poly", br_poly, "form JSON (file or -)");
    brute->add_option("--p", br_p, "prime modulus");
    brute->add_option("--rmax", br_rmax, "largest rank tried");
    brute->callback([&] {
        if (br_tensor.empty() == br_poly.empty())
            throw rb::ValidationError(
                "pass exactly one of --tensor or --poly");
        std::optional<std::size_t> r;
        if (!br_tensor.empty()) {
            auto t = rb::tensor_from_json(rb::parse_json(slurp(br_tensor)));
            r = rb::brute_trank(rb::tensor_mod(t, br_p), br_rmax);
        } else {
            auto f = rb::homog_poly_from_json(rb::parse_json(slurp(br_poly)));
            r = rb::brute_wrank(rb::homog_poly_mod(f, br_p), br_p, br_rmax);
        }
        Json out{{"p", br_p}, {"r_max", br_rmax}};
        out["rank"] = r ? Json(*r) : Json(nullptr);
        emit(out);
    });

    // degenerate
    auto* degen = app.add_subcommand(
        "degenerate", "border-rank degeneration certificates");
    degen->require_subcommand(1);
    std::string dg_tensor, dg_witness;
    auto* dgv = degen->add_subcommand("verify", "check a witness");
    dgv->add_option("--tensor", dg_tensor, "tensor JSON (file or -)")
        ->required();
    dgv->add_option("--witness", dg_witness, "witness JSON (file or -)")
        ->required();
    dgv->callback([&] {
        auto t = rb::tensor_from_json(rb::parse_json(slurp(dg_tensor)));
        auto w = rb::witness_from_json(rb::parse_json(slurp(dg_witness)));
        emit(Json{{"verified", rb::verify_degeneration(t, w)},
                  {"r", w.r},
                  {"q", w.q}});
    });
    std::string ds_tensor;
    std::size_t ds_r = 1, ds_qmax = 2, ds_cap = 0;
    unsigned ds_degmax = 1;
    std::vector<std::string> ds_pool{"0", "1", "-1"};
    auto* dgs = degen->add_subcommand("search", "search for a witness");
    dgs->add_option("--tensor", ds_tensor, "tensor JSON (file or -)")
        ->required();
    dgs->add_option("--r", ds_r, "simple-term budget")->required();
    dgs->add_option("--qmax", ds_qmax, "largest degeneration order tried");
    dgs->add_option("--degmax", ds_degmax, "largest eps-degree per entry");
    dgs->add_option("--pool", ds_pool, "coefficient pool")->delimiter(',');
    dgs->add_option("--cap", ds_cap,
                    "work cap (0: RANKBARRIERS_MAX_SEARCH or built-in)");
    dgs->callback([&] {
        auto t = rb::tensor_from_json(rb::parse_json(slurp(ds_tensor)));
        std::vector<rb::Rational> pool;
        for (const auto& s : ds_pool)
            pool.push_back(rb::rational_from_string(s));
        auto w = rb::search_degeneration(t, ds_r, ds_qmax, ds_degmax, pool,
                                         ds_cap);
        Json out{{"found", w.has_value()}};
        out["witness"] = w ? rb::witness_to_json(*w) : Json(nullptr);
        emit(out);
    });

    // transfer
    std::string tr_demo, tr_input;
    std::size_t tr_order = 16;
    auto* transfer = app.add_subcommand(
        "transfer", "verify series identities L(z+c) = M(p(z))");
    transfer->add_option("--demo", tr_demo, "built-in instance (sqrt)");
    transfer->add_option("--input", tr_input,
                         "JSON with L, M, center, p (file or -)");
    transfer->add_option("--order", tr_order, "truncation order");
    transfer->callback([&] {
        if (tr_demo.empty() == tr_input.empty())
            throw rb::ValidationError(
                "pass exactly one of --demo or --input");
        rb::PolyMap L, M;
        std::vector<rb::Rational> center;
        std::vector<rb::MultiSeries> p;
        if (!tr_demo.empty()) {
            if (tr_demo != "sqrt")
                throw rb::ValidationError("unknown demo: " + tr_demo);
            rb::Poly pz(2);
            pz.set_coeff({0, 2}, rb::Rational(1));
            pz.set_coeff({1, 0}, rb::Rational(-1));
            auto seedpt = rb::find_regular_seed(pz, 9);
            if (!seedpt) throw rb::NonEtaleError("no regular seed found");
            auto series = rb::hensel_lift({pz, seedpt->first, seedpt->second},
                                          tr_order);
            L.n_in = L.n_out = 1;
            L.components.push_back(rb::Poly::variable(1, 0));
            M.n_in = M.n_out = 1;
            rb::Poly ysq(1);
            ysq.set_coeff({2}, rb::Rational(1));
            M.components.push_back(ysq);
            center.push_back(seedpt->first);
            p.push_back(rb::MultiSeries::from_uni(series));
        } else {
            Json j = rb::parse_json(slurp(tr_input));
            L = rb::polymap_from_json(j.contains("L") ? j.at("L") : Json());
            M = rb::polymap_from_json(j.contains("M") ? j.at("M") : Json());
            if (!j.contains("center") || !j.at("center").is_array())
                throw rb::ValidationError("missing 'center' array");
            for (const auto& c : j.at("center"))
                center.push_back(rb::rational_from_json(c));
            if (!j.contains("p") || !j.at("p").is_array())
                throw rb::ValidationError("missing 'p' series array");
            for (const auto& s : j.at("p"))
                p.push_back(rb::multi_series_from_json(s));
        }
        bool ok = rb::verify_transfer(L, M, center, p, tr_order);
        Json jc = Json::array();
        for (const auto& c : center) jc.push_back(rb::rational_to_json(c));
        emit(Json{{"verified", ok}, {"order", tr_order}, {"center", jc}});
    });

    // elusive
    auto* elusive = app.add_subcommand(
        "elusive", "linear elusiveness and monomial-cover toys");
    elusive->require_subcommand(1);
    std::vector<std::string> el_targets;
    std::size_t el_r = 1;
    auto* cover = elusive->add_subcommand(
        "cover", "cover targets by exponents e_i and sums e_i+e_j");
    cover->add_option("--targets", el_targets, "target exponents")
        ->required()
        ->delimiter(',');
    cover->add_option("--r", el_r, "number of exponent slots")->required();
    cover->callback([&] {
        std::vector<rb::Rational> targets;
        for (const auto& s : el_targets)
            targets.push_back(rb::rational_from_string(s));
        auto a = rb::monomial_cover_feasible(targets, el_r);
        Json out{{"feasible", a.has_value()}};
        out["assignment"] = a ? rb::cover_assignment_to_json(*a) : Json(nullptr);
        emit(out);
    });
    std::string el_polys;
    auto* indep = elusive->add_subcommand(
        "indep", "linear independence of {1, p_1..p_m}");
    indep->add_option("--polys", el_polys,
                      "JSON array of univariate polynomials (file or -)")
        ->required();
    indep->callback([&] {
        Json j = rb::parse_json(slurp(el_polys));
        if (!j.is_array())
            throw rb::ValidationError("input must be a JSON array");
        std::vector<rb::Poly> polys;
        for (const auto& pj : j) polys.push_back(rb::poly_from_json(pj));
        emit(Json{{"elusive", rb::is_linearly_elusive(polys)}});
    });
    std::string el_target;
    std::vector<std::string> el_gens;
    std::uint64_t el_d = 0;
    auto* dspan = elusive->add_subcommand(
        "dspan", "membership in the bounded monomial span");
    dspan->add_option("--target", el_target, "target exponent")->required();
    dspan->add_option("--gens", el_gens, "generator exponents")
        ->required()
        ->delimiter(',');
    dspan->add_option("--d", el_d, "combination size bound")->required();
    dspan->callback([&] {
        std::vector<rb::Rational> gens;
        for (const auto& s : el_gens)
            gens.push_back(rb::rational_from_string(s));
        bool member = rb::dspan_member(rb::rational_from_string(el_target),
                                       gens, el_d);
        emit(Json{{"member", member}});
    });

    // count
    std::string ct_what;
    std::uint64_t ct_n = 0, ct_d = 0, ct_k = 0;
    std::int64_t ct_bound = -1;
    std::vector<std::uint64_t> ct_nvec, ct_dvec;
    bool ct_list = false;
    auto* count = app.add_subcommand("count", "grading enumerations");
    count->add_option("--what", ct_what,
                      "weak-compositions | set-partitions | monomials-eq | "
                      "monomials-leq | smh-monomials")
        ->required();
    count->add_option("--n", ct_n);
    count->add_option("--d", ct_d);
    count->add_option("--k", ct_k);
    count->add_option("--bound", ct_bound, "total-degree bound");
    count->add_option("--nvec", ct_nvec)->delimiter(',');
    count->add_option("--dvec", ct_dvec)->delimiter(',');
    count->add_flag("--list", ct_list, "include the enumerated items");
    count->callback([&] {
        Json out{{"what", ct_what}};
        if (ct_what == "weak-compositions") {
            auto items = rb::enumerate_weak_compositions(ct_d, ct_k);
            out["count"] = rb::BigInt(items.size()).get_str();
            if (ct_list) out["items"] = items;
        } else if (ct_what == "set-partitions") {
            auto items = rb::enumerate_set_partitions(ct_d, ct_k);
            out["count"] = rb::BigInt(items.size()).get_str();
            if (ct_list) out["items"] = items;
        } else if (ct_what == "monomials-eq") {
            out["count"] = rb::count_monomials_eq(ct_n, ct_d).get_str();
        } else if (ct_what == "monomials-leq") {
            out["count"] = rb::count_monomials_leq(ct_n, ct_bound).get_str();
        } else if (ct_what == "smh-monomials") {
            out["count"] =
                rb::count_smh_monomials(ct_nvec, ct_dvec, ct_bound).get_str();
        } else {
            throw rb::ValidationError("unknown enumeration: " + ct_what);
        }
        emit(out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit(Json{{"error", e.what()}});
        return 2;
    } catch (const rb::Error& e) {
        emit(Json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(Json{{"error", e.what()}});
        return 1;
    }
    return 0;
}
