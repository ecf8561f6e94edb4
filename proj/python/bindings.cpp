#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eis/selftest.hpp"
#include "eis/series.hpp"
#include "eis/sl2.hpp"
#include "eis/stalks.hpp"

namespace py = pybind11;
using namespace eis;

namespace {

std::shared_ptr<const MetaplecticDatum> make_md(const std::string& type, int n) {
    return MetaplecticDatum::build(RootDatum::build(CartanLabel::parse(type)), n);
}

py::dict profile_dict(const std::string& type, int n) {
    auto md = make_md(type, n);
    auto prof = md->dual_group_profile();
    py::dict out;
    out["type"] = type;
    out["n"] = n;
    out["N"] = md->big_n();
    out["h_dual"] = md->base().h_dual();
    out["iota"] = md->base().iota();
    out["kappa"] = md->base().kappa();
    out["lambda_sharp"] = md->lambda_sharp_basis();
    out["delta"] = md->delta();
    out["dual_simple_roots"] = md->dual_simple_roots();
    out["dual_cartan"] = md->dual_cartan();
    out["dual_type"] = prof.dual_type.str();
    out["cocenter"] = prof.cocenter.str();
    out["cocenter_order"] = prof.cocenter.order();
    out["center_order"] = prof.center_order_g;
    out["xi_injective"] = prof.xi_injective;
    out["xi_surjective_onto_Cn"] = prof.xi_surjective_onto_cn;
    return out;
}

py::dict weights_dict(const std::map<IVec, long long>& m) {
    py::dict out;
    for (auto& [w, mult] : m) out[py::tuple(py::cast(w))] = mult;
    return out;
}

py::dict character_dict(const std::string& type, int n, const IVec& nu) {
    auto md = make_md(type, n);
    auto dg = DualGroup::full(md);
    auto ch = irreducible_character(dg, nu);
    py::dict out;
    out["highest_weight"] = nu;
    out["dim"] = ch.dim();
    out["weights"] = weights_dict(ch.mult);
    return out;
}

py::dict branch_dict(const std::string& type, int n, const std::vector<int>& levi_nodes,
                     const IVec& lambda) {
    auto md = make_md(type, n);
    std::vector<int> nodes0;
    for (int i : levi_nodes) nodes0.push_back(i - 1);
    auto levi = md->build_levi(nodes0);
    auto out = branch(DualGroup::full(md), DualGroup::levi(levi), lambda);
    return weights_dict(out);
}

py::dict sym_dict(const std::string& type, int n, const std::vector<int>& levi_nodes,
                  const IVec& theta, long long m) {
    auto md = make_md(type, n);
    std::vector<int> nodes0;
    for (int i : levi_nodes) nodes0.push_back(i - 1);
    auto nil = nilradical(md->build_levi(nodes0));
    auto gs = graded_sym(nil, theta, m);
    py::dict out;
    out["cone_violation"] = gs.cone_violation;
    out["sym_dim"] = gs.sym_dim;
    out["sym_dims_by_degree"] = gs.sym_dims_by_degree;
    out["env_dim"] = gs.env_dim;
    out["env_character"] = weights_dict(gs.env_character);
    return out;
}

py::dict laurent_dict(const LaurentPoly& p) {
    py::dict out;
    for (auto& [e, c] : p.coeffs()) out[py::int_(e)] = c;
    return out;
}

py::dict stalk_dict(const std::string& type, int n, const std::vector<int>& levi_nodes,
                    const std::vector<std::pair<IVec, long long>>& parts) {
    auto md = make_md(type, n);
    std::vector<int> nodes0;
    for (int i : levi_nodes) nodes0.push_back(i - 1);
    auto nil = nilradical(md->build_levi(nodes0));
    Decomposition dec;
    dec.parts = parts;
    auto rep = stalk_poincare(nil, dec);
    py::dict out;
    out["vanishes"] = rep.vanishes;
    out["shift_polynomial"] = laurent_dict(rep.shift_polynomial);
    out["shift_polynomial_str"] = rep.shift_polynomial.str();
    return out;
}

py::dict eis_identity_dict(int n, long long q, int g, long long height, long long base) {
    CurveDatum curve =
        g == 0 ? CurveDatum::from_counts(q, 0, {}) : CurveDatum::from_counts(q, 1, {q + 1});
    auto md = make_md("A1", n);
    auto nil = nilradical(md->build_levi({}));
    LocalSystemSpec spec;
    spec.by_multiple[1] = {true, {}};
    auto cl = placeholder_eis_cl(*md, IVec{base}, height);
    auto prod = eis_product(cl, nil, curve, spec, height);
    auto oracle = [&](const IVec& v) { return cl.at(v); };
    bool identity = true;
    py::dict coeffs;
    for (auto& [mu, coeff] : prod.coeffs) {
        if (!(eis_sum(mu, oracle, nil, curve, spec, height) == coeff)) identity = false;
        py::dict terms;
        for (auto& [name, val] : coeff.terms) terms[py::str(name.empty() ? "1" : name)] = val.str();
        coeffs[py::int_(mu[0])] = terms;
    }
    py::dict out;
    out["identity"] = identity;
    out["coefficients"] = coeffs;
    return out;
}

py::dict sl2_eigen_dict(int n, long long m) {
    auto rep = theta_eigen_check(SL2Context::make(n), m);
    py::dict out;
    out["holds"] = rep.holds;
    out["eigen_poly"] = rep.eigen_poly.str();
    out["eigen_poly_coeffs"] = laurent_dict(rep.eigen_poly);
    out["aut"] = rep.aut.str();
    return out;
}

py::dict sl2_hecke_dict(int n, long long m, long long cell, int shift) {
    auto ctx = SL2Context::make(n);
    auto res = hecke_of_irreducible(ctx, m, ThetaElement::cell(cell, shift));
    py::dict cells;
    for (auto& [key, mult] : res.coeffs)
        cells[py::make_tuple(key.first, key.second)] = mult;
    py::dict out;
    out["result"] = res.str();
    out["cells"] = cells;
    return out;
}

py::dict sl2_stalk_dict(int n, long long d, long long r) {
    auto entry = stalk_table(SL2Context::make(n), d, r);
    py::dict out;
    out["vanishes"] = entry.vanishes;
    if (!entry.vanishes) out["shift"] = entry.shift;
    return out;
}

py::dict constant_term_dict(long long d, long long d1, int n, int g) {
    auto rep = constant_term(d, d1, n, g);
    const char* kinds[] = {"zero", "single_sigma_ih", "single_ih", "triangle"};
    py::dict out;
    out["kind"] = kinds[(int)rep.kind];
    py::list pieces;
    for (auto& p : rep.pieces) {
        py::dict jp;
        jp["sigma"] = p.sigma;
        jp["theta"] = p.theta_m;
        jp["b_size"] = p.b_size;
        jp["shift"] = p.shift;
        pieces.append(jp);
    }
    out["pieces"] = pieces;
    return out;
}

py::list selftest_list() {
    auto res = run_selftest();
    py::list out;
    for (auto& c : res.checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
    return out;
}

} // namespace

PYBIND11_MODULE(_eiscore, m) {
    m.doc() = "exact computations for twisted Eisenstein series data";

    m.def("dual_group", &profile_dict, py::arg("type"), py::arg("n"),
          "metaplectic dual group profile for a Cartan label and degree");
    m.def("irreducible_character", &character_dict, py::arg("type"), py::arg("n"), py::arg("nu"));
    m.def("branch", &branch_dict, py::arg("type"), py::arg("n"), py::arg("levi"),
          py::arg("lambda_"), "restriction multiplicities to a standard Levi (1-based nodes)");
    m.def("graded_sym", &sym_dict, py::arg("type"), py::arg("n"), py::arg("levi"),
          py::arg("theta"), py::arg("m"));
    m.def("stalk_poincare", &stalk_dict, py::arg("type"), py::arg("n"), py::arg("levi"),
          py::arg("parts"));
    m.def("eis_identity", &eis_identity_dict, py::arg("n"), py::arg("q"), py::arg("g"),
          py::arg("height") = 6, py::arg("base") = 0,
          "check the sum/product identity over a window; returns the modified series");
    m.def("sl2_eigen", &sl2_eigen_dict, py::arg("n"), py::arg("m"));
    m.def("sl2_hecke", &sl2_hecke_dict, py::arg("n"), py::arg("m"), py::arg("cell"),
          py::arg("shift") = 0);
    m.def("sl2_stalk", &sl2_stalk_dict, py::arg("n"), py::arg("d"), py::arg("r"));
    m.def("constant_term", &constant_term_dict, py::arg("d"), py::arg("d1"), py::arg("n"),
          py::arg("g"));
    m.def("selftest", &selftest_list, "run the invariant suite; returns (name, ok, detail) rows");
}
