#include "eis/sl2.hpp"

#include <stdexcept>

namespace eis {

SL2Context SL2Context::make(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SL2Context c;
    c.n = n;
    c.even = n % 2 == 0;
    c.e = c.even ? n / 2 : n;
    return c;
}

ThetaElement ThetaElement::cell(long long k, int shift, long long mult) {
    ThetaElement e;
    e.add(k, shift, mult);
    return e;
}

void ThetaElement::add(long long k, int shift, long long mult) {
    if (k < 0) throw std::invalid_argument("negative stratum index");
    if (mult == 0) return;
    auto key = std::make_pair(k, shift);
    auto it = coeffs.find(key);
    long long v = (it == coeffs.end() ? 0 : it->second) + mult;
    if (v < 0)
        throw FalsificationError("negative coefficient in theta module element");
    if (v == 0) {
        if (it != coeffs.end()) coeffs.erase(it);
    } else {
        coeffs[key] = v;
    }
}

ThetaElement ThetaElement::operator+(const ThetaElement& o) const {
    ThetaElement r = *this;
    for (auto& [key, m] : o.coeffs) r.add(key.first, key.second, m);
    return r;
}

ThetaElement ThetaElement::operator-(const ThetaElement& o) const {
    ThetaElement r = *this;
    for (auto& [key, m] : o.coeffs) r.add(key.first, key.second, -m);
    return r;
}

ThetaElement ThetaElement::shifted(int by) const {
    ThetaElement r;
    for (auto& [key, m] : coeffs) r.coeffs[{key.first, key.second + by}] = m;
    return r;
}

ThetaElement ThetaElement::scaled(const LaurentPoly& p) const {
    ThetaElement r;
    for (auto& [key, m] : coeffs)
        for (auto& [exp, c] : p.coeffs()) r.add(key.first, key.second + exp, m * c);
    return r;
}

ThetaElement ThetaElement::truncated(long long maxc) const {
    ThetaElement r;
    for (auto& [key, m] : coeffs)
        if (key.first <= maxc) r.coeffs[key] = m;
    return r;
}

long long ThetaElement::max_cell() const {
    long long mx = -1;
    for (auto& [key, m] : coeffs) {
        (void)m;
        mx = std::max(mx, key.first);
    }
    return mx;
}

std::string ThetaElement::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto& [key, m] : coeffs) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += "IC_" + std::to_string(key.first);
        if (key.second != 0) out += "[" + std::to_string(key.second) + "]";
    }
    return out;
}

ThetaElement fundamental_hecke(const SL2Context& ctx, const ThetaElement& elt) {
    ThetaElement out;
    for (auto& [key, m] : elt.coeffs) {
        auto [k, r] = key;
        if (ctx.even) {
            if (k >= 2) {
                out.add(k + 1, r, m);
                out.add(k - 1, r, m);
            } else if (k == 1) {
                out.add(0, r + 1, m);
                out.add(0, r - 1, m);
            } else {
                out.add(1, r + 1, m);
                out.add(1, r - 1, m);
            }
        } else {
            if (k >= 2) {
                out.add(k + 1, r, m);
                out.add(k, r, m);
                out.add(k - 1, r, m);
            } else if (k == 1) {
                out.add(0, r + 1, m);
                out.add(0, r - 1, m);
                out.add(2, r, m);
            } else {
                out.add(0, r + 2, m);
                out.add(0, r, m);
                out.add(0, r - 2, m);
            }
        }
    }
    return out;
}

ThetaElement hecke_of_irreducible(const SL2Context& ctx, long long m, const ThetaElement& elt) {
    if (m < 0) throw std::invalid_argument("irreducible index must be nonnegative");
    // rank-one tensor recursion lifted to operators, applied iteratively
    ThetaElement prev2 = elt;
    if (m == 0) return prev2;
    ThetaElement prev1 = fundamental_hecke(ctx, elt);
    for (long long i = 2; i <= m; ++i) {
        ThetaElement next = fundamental_hecke(ctx, prev1) - prev2;
        if (!ctx.even) next = next - prev1;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

LaurentPoly principal_character(const SL2Context& ctx, long long m) {
    auto base = RootDatum::build(CartanLabel{Family::A, 1});
    auto md = MetaplecticDatum::build(base, ctx.n);
    auto dg = DualGroup::full(md);
    IVec gen{ctx.even ? ctx.e : ctx.n};
    Character ch = irreducible_character(dg, scale(m, gen));
    LaurentPoly p;
    for (auto& [mu, mult] : ch.mult) p.add_term((int)md->dual_pairing(mu, 0), mult);
    return p;
}

EigenReport theta_eigen_check(const SL2Context& ctx, long long m) {
    EigenReport rep;
    rep.aut = ThetaElement::cell(0);
    if (ctx.even) rep.aut = rep.aut + ThetaElement::cell(1);
    rep.eigen_poly = principal_character(ctx, m);
    ThetaElement lhs = hecke_of_irreducible(ctx, m, rep.aut);
    ThetaElement rhs = rep.aut.scaled(rep.eigen_poly);
    rep.holds = lhs == rhs;
    return rep;
}

ThetaElement eis_expand(const SL2Context& ctx, long long d, bool e_nontrivial, long long k_max) {
    if (d < 0 || d % ctx.e != 0)
        throw std::invalid_argument("component vanishes: degree must lie in eZ, e = " +
                                    std::to_string(ctx.e));
    ThetaElement out;
    if (d > 0) {
        if (e_nontrivial) {
            out.add(d / ctx.e, 0, 1);
            return out;
        }
        for (long long deg = d; deg / ctx.e <= k_max; deg += ctx.n) out.add(deg / ctx.e, 0, 1);
        return out;
    }
    if (e_nontrivial)
        throw std::invalid_argument("degree zero requires the trivial system");
    out.add(0, 1, 1);
    out.add(0, -1, 1);
    for (long long deg = 2 * ctx.n; deg / ctx.e <= k_max; deg += ctx.n) out.add(deg / ctx.e, 0, 1);
    return out;
}

StalkEntry stalk_table(const SL2Context& ctx, long long d, long long r) {
    if (d < 0 || d % ctx.e != 0)
        throw std::invalid_argument("basis degree must lie in eZ>=0");
    if (r <= d)
        throw std::invalid_argument("stalk table describes strata deeper than the support degree");
    StalkEntry out;
    if (d > 0) {
        if ((r - d) % ctx.n != 0) return out;
        out.vanishes = false;
        out.shift = 2 * (r - d) / ctx.n;
        return out;
    }
    if (r % ctx.n != 0) return out;
    out.vanishes = false;
    out.shift = 2 * r / ctx.n - 1;
    return out;
}

ParityClass parity(const SL2Context& ctx, long long d) {
    if (!ctx.even) return ParityClass::not_applicable;
    if (d % ctx.e != 0)
        throw std::invalid_argument("degree must lie in eZ");
    return d % ctx.n == 0 ? ParityClass::plus : ParityClass::minus;
}

ThetaElement transport(const SL2Context& from, const SL2Context& to, const ThetaElement& elt) {
    if (from.even != to.even)
        throw std::invalid_argument("transport requires n of equal parity");
    return elt;
}

} // namespace eis
