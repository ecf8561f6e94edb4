#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eis/selftest.hpp"
#include "eis/series.hpp"
#include "eis/sl2.hpp"
#include "eis/stalks.hpp"

using json = nlohmann::json; // std::map-backed: keys serialize sorted
using namespace eis;

namespace {

json schema_header() {
    return json{{"schema_version", "1"},
                {"convention", {{"shift", "v^k"}, {"tate_twist", "q^-n_nu"}}}};
}

json vec_json(const IVec& v) { return json(v); }

json mat_json(const IMat& m) {
    json out = json::array();
    for (auto& row : m) out.push_back(row);
    return out;
}

json laurent_json(const LaurentPoly& p) {
    json out = json::object();
    for (auto& [e, c] : p.coeffs()) out[std::to_string(e)] = c;
    return out;
}

json rational_json(const Rational& r) { return r.str(); }

json coeff_json(const SeriesCoeff& c) {
    json out = json::object();
    for (auto& [k, v] : c.terms) out[k.empty() ? "1" : k] = v.str();
    return out;
}

IVec parse_vec(const std::string& s, size_t expected) {
    IVec out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!isspace((unsigned char)ch)) {
            cur += ch;
        }
    }
    if (expected != 0 && out.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " comma-separated integers, got '" + s + "'");
    return out;
}

// CLI node subsets are 1-based
std::vector<int> parse_nodes(const std::string& s, int rank) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (long long x : parse_vec(s, 0)) {
        if (x < 1 || x > rank)
            throw std::invalid_argument("node index " + std::to_string(x) +
                                        " out of range 1.." + std::to_string(rank));
        out.push_back((int)x - 1);
    }
    return out;
}

CurveDatum load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open curve file '" + path + "'");
    json j;
    in >> j;
    long long q = j.at("q").get<long long>();
    int g = j.at("g").get<int>();
    if (j.contains("point_counts"))
        return CurveDatum::from_counts(q, g, j["point_counts"].get<std::vector<long long>>());
    if (j.contains("zeta_numerator"))
        return CurveDatum::from_numerator(q, g, j["zeta_numerator"].get<std::vector<long long>>());
    throw std::invalid_argument("curve file needs point_counts or zeta_numerator");
}

LocalSystemSpec load_locsys(const std::string& path) {
    LocalSystemSpec spec;
    if (path.empty()) {
        spec.by_multiple[0] = {true, {}};
        return spec;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open local-system file '" + path + "'");
    json j;
    in >> j;
    for (auto& [key, val] : j.at("characters").items()) {
        auto star = key.find('*');
        if (star == std::string::npos)
            throw std::invalid_argument("character key must look like 'k*nu': " + key);
        long long k = std::stoll(key.substr(0, star));
        LocalSystemSpec::Entry e;
        if (val.is_string() && val.get<std::string>() == "trivial") {
            e.trivial = true;
        } else {
            e.trivial = false;
            e.numerator = val.at("numerator").get<std::vector<long long>>();
        }
        spec.by_multiple[k] = e;
    }
    return spec;
}

std::string render(const json& out, bool table) {
    if (!table) return out.dump(2) + "\n";
    // flat key: value listing for terminals
    std::string text;
    std::function<void(const json&, std::string)> walk = [&](const json& j, std::string prefix) {
        if (j.is_object()) {
            for (auto& [k, v] : j.items()) walk(v, prefix.empty() ? k : prefix + "." + k);
        } else {
            text += prefix + ": " + j.dump() + "\n";
        }
    };
    walk(out, "");
    return text;
}

// golden mode: write the report on first use, byte-compare afterwards
int emit(const json& out, bool table, const std::string& golden_path) {
    std::string text = render(out, table);
    if (golden_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ifstream in(golden_path);
    if (!in) {
        std::ofstream create(golden_path);
        if (!create) {
            std::cerr << "error: cannot write golden file '" << golden_path << "'\n";
            return 1;
        }
        create << text;
        std::cout << "golden file written: " << golden_path << "\n";
        return 0;
    }
    std::string stored((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (stored != text) {
        std::cerr << "error: output differs from golden file '" << golden_path << "'\n";
        std::cout << text;
        return 1;
    }
    std::cout << text;
    return 0;
}

long long env_height(long long fallback) {
    const char* v = std::getenv("EISTOOL_HEIGHT");
    if (!v) return fallback;
    return std::stoll(v);
}

struct Common {
    std::string type = "A1";
    int n = 1;
    std::string levi;
    bool table = false;
};

std::shared_ptr<const MetaplecticDatum> build_md(const Common& c) {
    return MetaplecticDatum::build(RootDatum::build(CartanLabel::parse(c.type)), c.n);
}

json levi_json(const LeviDatum& l) {
    json out;
    json nodes = json::array();
    for (int i : l.levi_nodes()) nodes.push_back(i + 1);
    out["levi_nodes"] = nodes;
    json frees = json::array();
    for (int i : l.free_nodes()) frees.push_back(i + 1);
    out["quotient_coordinates"] = frees;
    out["lambda_m0_basis"] = mat_json(l.lambda_m0_basis());
    out["lambda_sharp_gp_basis"] = mat_json(l.lambda_sharp_gp());
    out["two_rho_minus_two_rho_m"] = vec_json(l.two_rho_diff());
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for twisted Eisenstein series data"};
    app.require_subcommand(1);

    Common c;
    bool table_mode = false;
    std::string golden_path;
    app.add_flag("--table", table_mode, "plain key:value output instead of JSON");
    app.add_option("--golden", golden_path,
                   "golden file: written when missing, byte-compared when present");

    auto add_common = [&](CLI::App* sub, bool with_levi = true) {
        sub->add_option("--type", c.type, "Cartan label, e.g. A2")->capture_default_str();
        sub->add_option("--n", c.n, "metaplectic degree")->capture_default_str();
        if (with_levi)
            sub->add_option("--levi", c.levi, "Levi node subset, 1-based, e.g. 1,2");
    };

    // ---- dual-group
    auto* sc_dual = app.add_subcommand("dual-group", "metaplectic dual group profile");
    add_common(sc_dual, false);

    // ---- levi
    auto* sc_levi = app.add_subcommand("levi", "Levi datum for a node subset");
    add_common(sc_levi);
    std::string theta_str;
    sc_levi->add_option("--theta", theta_str, "component degree in quotient coordinates");

    // ---- branch
    auto* sc_branch = app.add_subcommand("branch", "restriction multiplicities to a Levi");
    add_common(sc_branch);
    std::string lambda_str;
    sc_branch->add_option("--lambda", lambda_str, "dominant weight, coroot coordinates")->required();

    // ---- nilradical
    auto* sc_nil = app.add_subcommand("nilradical", "dual nilradical classes");
    add_common(sc_nil);

    // ---- sym
    auto* sc_sym = app.add_subcommand("sym", "graded symmetric powers of the nilradical");
    add_common(sc_sym);
    long long sym_m = 0;
    sc_sym->add_option("--theta", theta_str, "cone degree, quotient coordinates")->required();
    sc_sym->add_option("--m", sym_m, "symmetric power degree")->capture_default_str();

    // ---- stalk
    auto* sc_stalk = app.add_subcommand("stalk", "stalk shift polynomial for a decomposition");
    add_common(sc_stalk);
    std::vector<std::string> part_strs;
    sc_stalk->add_option("--part", part_strs, "decomposition part 'coords:count', repeatable")
        ->required();

    // ---- zastava
    auto* sc_zas = app.add_subcommand("zastava", "top graded module and degree bound");
    add_common(sc_zas);
    sc_zas->add_option("--theta", theta_str, "cone degree, quotient coordinates")->required();

    // ---- eis-series
    auto* sc_eis = app.add_subcommand("eis-series", "rank-one Eisenstein series identities");
    int eis_n = 2;
    long long eis_q = 2, eis_height = 6;
    int eis_g = 0;
    std::string curve_path, locsys_path, base_str = "0";
    sc_eis->add_option("--n", eis_n, "metaplectic degree")->capture_default_str();
    sc_eis->add_option("--q", eis_q, "field size (used when no curve file)")->capture_default_str();
    sc_eis->add_option("--g", eis_g, "genus (used when no curve file)")->capture_default_str();
    sc_eis->add_option("--curve", curve_path, "curve JSON file");
    sc_eis->add_option("--locsys", locsys_path, "local-system JSON file");
    sc_eis->add_option("--height", eis_height, "window height");
    sc_eis->add_option("--base", base_str, "window base point")->capture_default_str();

    // ---- constant-term
    auto* sc_ct = app.add_subcommand("constant-term", "rank-one constant term case analysis");
    long long ct_d = 0, ct_d1 = 0;
    int ct_n = 2, ct_g = 0;
    sc_ct->add_option("--d", ct_d, "target component degree")->required();
    sc_ct->add_option("--d1", ct_d1, "source component degree")->required();
    sc_ct->add_option("--n", ct_n, "metaplectic degree")->capture_default_str();
    sc_ct->add_option("--g", ct_g, "genus")->capture_default_str();
    sc_ct->add_option("--curve", curve_path, "curve JSON file");
    sc_ct->add_option("--locsys", locsys_path, "local-system JSON file");

    // ---- sl2 family
    auto* sc_sl2 = app.add_subcommand("sl2", "rank-one theta module operations");
    sc_sl2->require_subcommand(1);
    int sl2_n = 2, sl2_to = 2;
    long long sl2_m = 1, sl2_cell = 0, sl2_d = 0, sl2_r = 1, sl2_kmax = 12;
    int sl2_shift = 0;
    bool sl2_nontrivial = false;

    auto* sl2_hecke = sc_sl2->add_subcommand("hecke", "Hecke operator on a basis cell");
    sl2_hecke->add_option("--n", sl2_n)->capture_default_str();
    sl2_hecke->add_option("--m", sl2_m, "irreducible index (1 = fundamental)")->capture_default_str();
    sl2_hecke->add_option("--cell", sl2_cell)->capture_default_str();
    sl2_hecke->add_option("--shift", sl2_shift)->capture_default_str();

    auto* sl2_eigen = sc_sl2->add_subcommand("eigen", "theta eigen-property");
    sl2_eigen->add_option("--n", sl2_n)->capture_default_str();
    sl2_eigen->add_option("--m", sl2_m)->capture_default_str();

    auto* sl2_eis = sc_sl2->add_subcommand("eis", "Eisenstein expansion in cells");
    sl2_eis->add_option("--n", sl2_n)->capture_default_str();
    sl2_eis->add_option("--d", sl2_d)->capture_default_str();
    sl2_eis->add_flag("--nontrivial", sl2_nontrivial, "nontrivial rank-one system");
    sl2_eis->add_option("--kmax", sl2_kmax)->capture_default_str();

    auto* sl2_stalks = sc_sl2->add_subcommand("stalks", "stalk shifts on deeper strata");
    sl2_stalks->add_option("--n", sl2_n)->capture_default_str();
    sl2_stalks->add_option("--d", sl2_d)->capture_default_str();
    sl2_stalks->add_option("--r", sl2_r)->capture_default_str();

    auto* sl2_transport = sc_sl2->add_subcommand("transport", "cross-degree identification");
    sl2_transport->add_option("--n", sl2_n)->capture_default_str();
    sl2_transport->add_option("--to", sl2_to)->capture_default_str();
    sl2_transport->add_option("--cell", sl2_cell)->capture_default_str();

    auto* sl2_parity = sc_sl2->add_subcommand("parity", "central parity of a degree");
    sl2_parity->add_option("--n", sl2_n)->capture_default_str();
    sl2_parity->add_option("--d", sl2_d)->capture_default_str();

    // ---- selftest
    auto* sc_self = app.add_subcommand("selftest", "run the invariant suite");

    // accept top-level flags after the subcommand as well
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* node) {
        for (auto* sub : node->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        json out = schema_header();

        if (sc_dual->parsed()) {
            auto md = build_md(c);
            auto prof = md->dual_group_profile();
            out["type"] = c.type;
            out["n"] = c.n;
            out["N"] = md->big_n();
            out["h_dual"] = md->base().h_dual();
            out["iota"] = mat_json(md->base().iota());
            out["lambda_sharp"] = mat_json(md->lambda_sharp_basis());
            out["delta"] = vec_json(md->delta());
            json roots = json::array();
            for (auto& r : md->dual_simple_roots()) roots.push_back(r);
            out["dual_simple_roots"] = roots;
            out["dual_cartan"] = mat_json(md->dual_cartan());
            out["dual_type"] = prof.dual_type.str();
            out["cocenter"] = prof.cocenter.str();
            out["cocenter_order"] = prof.cocenter.order();
            out["center_order"] = prof.center_order_g;
            out["xi"] = {{"injective", prof.xi_injective},
                         {"surjective_onto_Cn", prof.xi_surjective_onto_cn}};
        } else if (sc_levi->parsed()) {
            auto md = build_md(c);
            auto levi = md->build_levi(parse_nodes(c.levi, md->base().rank()));
            out["type"] = c.type;
            out["n"] = c.n;
            out["levi"] = levi_json(levi);
            if (!theta_str.empty()) {
                IVec theta = parse_vec(theta_str, levi.free_nodes().size());
                out["theta"] = vec_json(theta);
                out["kappa_m"] = vec_json(levi.kappa_m(theta));
                out["component_nonvanishing"] = levi.component_nonvanishing(theta);
            }
        } else if (sc_branch->parsed()) {
            auto md = build_md(c);
            auto levi = md->build_levi(parse_nodes(c.levi, md->base().rank()));
            IVec lambda = parse_vec(lambda_str, md->base().rank());
            auto full = DualGroup::full(md);
            auto result = branch(full, DualGroup::levi(levi), lambda);
            out["type"] = c.type;
            out["n"] = c.n;
            out["lambda"] = vec_json(lambda);
            json pieces = json::array();
            for (auto& [hw, m] : result)
                pieces.push_back(json{{"highest_weight", hw}, {"multiplicity", m}});
            out["pieces"] = pieces;
        } else if (sc_nil->parsed()) {
            auto md = build_md(c);
            auto levi = md->build_levi(parse_nodes(c.levi, md->base().rank()));
            auto nil = nilradical(levi);
            out["type"] = c.type;
            out["n"] = c.n;
            out["levi"] = levi_json(levi);
            json classes = json::array();
            for (auto& cls : nil.classes) {
                json jc;
                jc["class_representative"] = vec_json(cls.class_rep);
                jc["theta"] = vec_json(cls.theta);
                jc["highest_weight"] = vec_json(cls.highest_weight);
                jc["dim"] = cls.dim();
                json ws = json::array();
                for (auto& w : cls.weights) ws.push_back(w);
                jc["weights"] = ws;
                classes.push_back(jc);
            }
            out["classes"] = classes;
        } else if (sc_sym->parsed()) {
            auto md = build_md(c);
            auto levi = md->build_levi(parse_nodes(c.levi, md->base().rank()));
            auto nil = nilradical(levi);
            IVec theta = parse_vec(theta_str, levi.free_nodes().size());
            auto gs = graded_sym(nil, theta, sym_m);
            out["type"] = c.type;
            out["n"] = c.n;
            out["theta"] = vec_json(theta);
            out["m"] = sym_m;
            if (gs.cone_violation) {
                out["cone_violation"] = true;
                out["sym_dim"] = 0;
            } else {
                out["sym_dim"] = gs.sym_dim;
                out["sym_dims_by_degree"] = gs.sym_dims_by_degree;
                out["env_dim"] = gs.env_dim;
                json pieces = json::array();
                for (auto& [hw, m] : gs.env_character)
                    pieces.push_back(json{{"highest_weight", hw}, {"multiplicity", m}});
                out["env_character"] = pieces;
            }
        } else if (sc_stalk->parsed()) {
            auto md = build_md(c);
            auto levi = md->build_levi(parse_nodes(c.levi, md->base().rank()));
            auto nil = nilradical(levi);
            Decomposition dec;
            for (auto& ps : part_strs) {
                auto colon = ps.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("part must look like 'coords:count': " + ps);
                IVec part = parse_vec(ps.substr(0, colon), levi.free_nodes().size());
                long long count = std::stoll(ps.substr(colon + 1));
                dec.parts.push_back({part, count});
            }
            auto rep = stalk_poincare(nil, dec);
            out["type"] = c.type;
            out["n"] = c.n;
            out["vanishes"] = rep.vanishes;
            out["shift_polynomial"] = laurent_json(rep.shift_polynomial);
            json parts = json::array();
            for (auto& p : rep.parts)
                parts.push_back(json{{"theta", p.theta},
                                     {"count", p.count},
                                     {"sharp", p.sharp},
                                     {"sym_dims", p.sym_dims}});
            out["parts"] = parts;
        } else if (sc_zas->parsed()) {
            auto md = build_md(c);
            auto levi = md->build_levi(parse_nodes(c.levi, md->base().rank()));
            auto nil = nilradical(levi);
            IVec theta = parse_vec(theta_str, levi.free_nodes().size());
            auto z = zastava_top(nil, theta);
            out["type"] = c.type;
            out["n"] = c.n;
            out["theta"] = vec_json(theta);
            out["degree_bound"] = z.degree_bound;
            out["vanishes"] = z.vanishes;
            json pieces = json::array();
            for (auto& [hw, m] : z.top_module)
                pieces.push_back(json{{"highest_weight", hw}, {"multiplicity", m}});
            out["top_module"] = pieces;
            out["top_dim"] = z.top_dim;
        } else if (sc_eis->parsed()) {
            CurveDatum curve = curve_path.empty()
                                   ? (eis_g == 0 ? CurveDatum::from_counts(eis_q, 0, {})
                                                 : CurveDatum::from_counts(eis_q, 1, {eis_q + 1}))
                                   : load_curve(curve_path);
            LocalSystemSpec spec = load_locsys(locsys_path);
            if (locsys_path.empty()) spec.by_multiple[1] = {true, {}};
            auto rd = RootDatum::build(CartanLabel{Family::A, 1});
            auto md = MetaplecticDatum::build(rd, eis_n);
            auto nil = nilradical(md->build_levi({}));
            long long height = env_height(eis_height);
            IVec base = parse_vec(base_str, 1);
            auto cl = placeholder_eis_cl(*md, base, height);
            auto prod = eis_product(cl, nil, curve, spec, height);
            auto oracle = [&](const IVec& v) { return cl.at(v); };
            bool identity = true;
            json coeffs = json::object();
            for (auto& [mu, coeff] : prod.coeffs) {
                if (!(eis_sum(mu, oracle, nil, curve, spec, height) == coeff)) identity = false;
                coeffs[std::to_string(mu[0])] = coeff_json(coeff);
            }
            out["n"] = eis_n;
            out["q"] = curve.q;
            out["g"] = curve.g;
            out["zeta_numerator"] = curve.zeta_numerator;
            out["window"] = {{"base", base}, {"height", height}};
            out["modified_series"] = coeffs;
            out["sum_product_identity"] = identity;
        } else if (sc_ct->parsed()) {
            std::optional<CurveDatum> curve;
            std::optional<LocalSystemSpec> spec;
            if (!curve_path.empty()) {
                curve = load_curve(curve_path);
                spec = load_locsys(locsys_path);
                if (locsys_path.empty()) spec->by_multiple[1] = {true, {}};
            }
            auto rep = constant_term(ct_d, ct_d1, ct_n, ct_g,
                                     curve ? &*curve : nullptr, spec ? &*spec : nullptr);
            out["d"] = ct_d;
            out["d1"] = ct_d1;
            out["n"] = ct_n;
            out["g"] = ct_g;
            const char* kinds[] = {"zero", "single_sigma_ih", "single_ih", "triangle"};
            out["kind"] = kinds[(int)rep.kind];
            json pieces = json::array();
            for (auto& p : rep.pieces) {
                json jp;
                jp["sigma"] = p.sigma;
                jp["theta"] = p.theta_m;
                jp["b_size"] = p.b_size;
                jp["shift"] = p.shift;
                if (p.ih_dims) {
                    jp["ih_dims"] = *p.ih_dims;
                    jp["ih_internal_shift"] = p.ih_internal_shift;
                }
                pieces.push_back(jp);
            }
            out["pieces"] = pieces;
        } else if (sc_sl2->parsed()) {
            auto ctx = SL2Context::make(sl2_n);
            out["n"] = sl2_n;
            out["e"] = ctx.e;
            if (sl2_hecke->parsed()) {
                auto elt = ThetaElement::cell(sl2_cell, sl2_shift);
                auto res = hecke_of_irreducible(ctx, sl2_m, elt);
                out["m"] = sl2_m;
                out["input"] = elt.str();
                out["result"] = res.str();
                json cells = json::array();
                for (auto& [key, mult] : res.coeffs)
                    cells.push_back(json{{"cell", key.first},
                                         {"degree", key.first * ctx.e},
                                         {"shift", key.second},
                                         {"mult", mult}});
                out["cells"] = cells;
            } else if (sl2_eigen->parsed()) {
                auto rep = theta_eigen_check(ctx, sl2_m);
                out["m"] = sl2_m;
                out["aut"] = rep.aut.str();
                out["eigen_poly"] = rep.eigen_poly.str();
                out["eigen_poly_coeffs"] = laurent_json(rep.eigen_poly);
                out["holds"] = rep.holds;
            } else if (sl2_eis->parsed()) {
                auto res = eis_expand(ctx, sl2_d, sl2_nontrivial, sl2_kmax);
                out["d"] = sl2_d;
                out["nontrivial"] = sl2_nontrivial;
                out["k_max"] = sl2_kmax;
                out["result"] = res.str();
            } else if (sl2_stalks->parsed()) {
                auto entry = stalk_table(ctx, sl2_d, sl2_r);
                out["d"] = sl2_d;
                out["r"] = sl2_r;
                out["vanishes"] = entry.vanishes;
                if (!entry.vanishes) out["shift"] = entry.shift;
            } else if (sl2_transport->parsed()) {
                auto to = SL2Context::make(sl2_to);
                auto elt = ThetaElement::cell(sl2_cell);
                auto moved = transport(ctx, to, elt);
                bool commutes = transport(ctx, to, fundamental_hecke(ctx, elt)) ==
                                fundamental_hecke(to, moved);
                out["to_n"] = sl2_to;
                out["cell"] = sl2_cell;
                out["image"] = moved.str();
                out["hecke_commutes"] = commutes;
            } else if (sl2_parity->parsed()) {
                auto p = parity(ctx, sl2_d);
                out["d"] = sl2_d;
                out["parity"] = p == ParityClass::plus    ? "+"
                                : p == ParityClass::minus ? "-"
                                                          : "n/a";
            }
        } else if (sc_self->parsed()) {
            auto result = run_selftest();
            json checks = json::array();
            for (auto& chk : result.checks) {
                std::cout << (chk.passed ? "PASS " : "FAIL ") << chk.name
                          << (chk.detail.empty() ? "" : " -- " + chk.detail) << "\n";
                checks.push_back(json{{"name", chk.name}, {"passed", chk.passed}});
            }
            return result.all_passed() ? 0 : 2;
        }

        return emit(out, table_mode, golden_path);
    } catch (const FalsificationError& ex) {
        std::cerr << "internal invariant violated: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::logic_error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
