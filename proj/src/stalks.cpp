#include "eis/stalks.hpp"

#include <functional>
#include <stdexcept>

namespace eis {

namespace {

bool cone_leq(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool in_cone(const IVec& a) {
    for (long long x : a)
        if (x < 0) return false;
    return true;
}

} // namespace

std::vector<KostantElement> enumerate_b_theta(const NilradicalDatum& nil, const IVec& theta) {
    if (!in_cone(theta))
        throw std::invalid_argument("theta outside the positive cone");
    std::vector<KostantElement> out;
    std::vector<long long> counts(nil.classes.size(), 0);
    std::function<void(size_t, IVec)> rec = [&](size_t idx, IVec remaining) {
        if (idx == nil.classes.size()) {
            if (is_zero(remaining)) {
                KostantElement e;
                e.counts = counts;
                e.theta = theta;
                out.push_back(e);
            }
            return;
        }
        const IVec& step = nil.classes[idx].theta;
        for (long long k = 0;; ++k) {
            IVec used = scale(k, step);
            if (!cone_leq(used, remaining)) break;
            counts[idx] = k;
            rec(idx + 1, sub(remaining, used));
        }
        counts[idx] = 0;
    };
    rec(0, theta);
    return out;
}

StalkReport stalk_poincare(const NilradicalDatum& nil, const Decomposition& dec) {
    StalkReport rep;
    rep.shift_polynomial = LaurentPoly(1);

    for (auto& [theta_m, n_m] : dec.parts) {
        if (n_m <= 0 || is_zero(theta_m) || !in_cone(theta_m))
            throw std::invalid_argument("invalid decomposition part");
        StalkReport::Part part;
        part.theta = theta_m;
        part.count = n_m;
        part.sharp = nil.levi.in_lambda_sharp_gp(theta_m);
        if (part.sharp) {
            auto gs = graded_sym(nil, theta_m, 0);
            part.sym_dims = gs.sym_dims_by_degree;
        }
        rep.parts.push_back(std::move(part));
    }

    for (auto& part : rep.parts) {
        if (!part.sharp) {
            rep.vanishes = true;
            rep.shift_polynomial = LaurentPoly();
            return rep;
        }
        LaurentPoly factor;
        for (size_t i = 0; i < part.sym_dims.size(); ++i)
            factor.add_term(2 * (int)i, part.sym_dims[i]);
        rep.shift_polynomial = rep.shift_polynomial * factor.pow(part.count);
    }
    rep.shift_polynomial = rep.shift_polynomial.shifted(-(int)dec.size());
    rep.shift_polynomial.assert_nonnegative("stalk_poincare");
    rep.vanishes = rep.shift_polynomial.is_zero();
    return rep;
}

ZastavaTop zastava_top(const NilradicalDatum& nil, const IVec& theta) {
    if (!in_cone(theta))
        throw std::invalid_argument("theta outside the positive cone");
    ZastavaTop out;
    IVec lifted = nil.levi.lift(theta);
    out.degree_bound = RootDatum::eval(nil.levi.two_rho_diff(), lifted);

    auto bs = enumerate_b_theta(nil, theta);
    if (bs.empty()) {
        out.vanishes = true;
        return out;
    }
    auto gs = graded_sym(nil, theta, 0);
    out.top_module = gs.env_character;
    out.top_dim = gs.env_dim;
    out.vanishes = gs.env_dim == 0;
    return out;
}

} // namespace eis
