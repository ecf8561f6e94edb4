#include "eis/root_datum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eis {

CartanLabel CartanLabel::make(Family f, int rank) {
    auto reject = [&](const std::string& bound) {
        throw std::invalid_argument("inadmissible Cartan label " +
                                    std::string(1, (char)f) + std::to_string(rank) +
                                    ": requires " + bound);
    };
    switch (f) {
        case Family::A: if (rank < 1) reject("rank >= 1"); break;
        case Family::B: if (rank < 2) reject("rank >= 2"); break;
        case Family::C: if (rank < 2) reject("rank >= 2"); break;
        case Family::D: if (rank < 4) reject("rank >= 4"); break;
        case Family::E: if (rank < 6 || rank > 8) reject("rank in {6,7,8}"); break;
        case Family::F: if (rank != 4) reject("rank = 4"); break;
        case Family::G: if (rank != 2) reject("rank = 2"); break;
    }
    return CartanLabel{f, rank};
}

CartanLabel CartanLabel::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Cartan label '" + s + "'");
    char f = s[0];
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad Cartan family '" + s + "'");
    int rank;
    try {
        rank = std::stoi(s.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad Cartan rank '" + s + "'");
    }
    return make((Family)f, rank);
}

std::string CartanLabel::str() const {
    return std::string(1, (char)family) + std::to_string(rank);
}

IMat bourbaki_cartan(Family f, int rank) {
    IMat a(rank, IVec(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
            a[rank - 2][rank - 1] = -2; // last root short
            a[rank - 1][rank - 2] = -1;
            break;
        case Family::C:
            for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
            a[rank - 2][rank - 1] = -1; // last root long
            a[rank - 1][rank - 2] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
            edge(rank - 3, rank - 1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4
            edge(0, 2);
            for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case Family::F:
            edge(0, 1);
            a[1][2] = -2;
            a[2][1] = -1;
            edge(2, 3);
            break;
        case Family::G:
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

long long RootDatum::iota_pair(const IVec& a, const IVec& b) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += a[i] * iota_[i][j] * b[j];
    return s;
}

long long RootDatum::simple_root_value(const IVec& mu, int i) const {
    long long s = 0;
    for (int k = 0; k < rank_; ++k) s += mu[k] * cartan_[k][i];
    return s;
}

long long RootDatum::eval(const IVec& functional, const IVec& mu) {
    long long s = 0;
    for (size_t k = 0; k < mu.size(); ++k) s += functional[k] * mu[k];
    return s;
}

IVec RootDatum::reflect(int i, IVec mu) const {
    mu[i] -= simple_root_value(mu, i);
    return mu;
}

IVec RootDatum::act(const WeylElement& w, IVec mu) const {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) mu = reflect(*it, mu);
    return mu;
}

IVec RootDatum::act_on_functional(const WeylElement& w, const IVec& f) const {
    // evaluate f on w^{-1} applied to each basis coroot
    WeylElement winv = w.inverse();
    IVec out(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, 0);
        e[i] = 1;
        out[i] = eval(f, act(winv, e));
    }
    return out;
}

RootDatum::Dominance RootDatum::dominance(const IVec& mu) const {
    IVec x = mu;
    std::vector<int> applied;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank_; ++i) {
            if (simple_root_value(x, i) < 0) {
                x = reflect(i, x);
                applied.push_back(i);
                moved = true;
            }
        }
    }
    WeylElement w;
    w.word.assign(applied.rbegin(), applied.rend());
    return Dominance{applied.empty(), x, w};
}

long long RootDatum::weyl_order() const {
    long long r = rank_;
    auto fact = [](long long k) {
        long long f = 1;
        for (long long i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (label_.family) {
        case Family::A: return fact(r + 1);
        case Family::B:
        case Family::C: return (1ll << r) * fact(r);
        case Family::D: return (1ll << (r - 1)) * fact(r);
        case Family::G: return 12;
        case Family::F: return 1152;
        case Family::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    }
    return 0;
}

RootDatum RootDatum::build(const CartanLabel& label) {
    CartanLabel checked = CartanLabel::make(label.family, label.rank);
    RootDatum rd;
    rd.label_ = checked;
    rd.rank_ = checked.rank;
    int r = rd.rank_;

    // pairing matrix on the coroot basis: transpose of the Bourbaki Cartan
    // matrix of the root system
    rd.cartan_ = transpose(bourbaki_cartan(checked.family, r));

    // coroot lengths from the symmetry constraint d_j * c[i][j] = d_i * c[j][i],
    // normalized so that short coroots get length 2d = 2
    {
        std::vector<Rational> d(r, Rational(0));
        d[0] = Rational(1);
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    if (i == j || rd.cartan_[i][j] == 0) continue;
                    if (!d[i].is_zero() && d[j].is_zero()) {
                        // d_j * c[i][j] = d_i * c[j][i]
                        d[j] = d[i] * Rational(rd.cartan_[j][i], rd.cartan_[i][j]);
                        progress = true;
                    }
                }
        }
        long long denom = 1;
        for (auto& x : d) denom = std::lcm(denom, x.den());
        IVec di(r);
        long long mn = 0;
        for (int i = 0; i < r; ++i) {
            di[i] = (d[i] * Rational(denom)).to_integer();
            if (mn == 0 || di[i] < mn) mn = di[i];
        }
        for (auto& x : di) {
            if (x % mn != 0)
                throw FalsificationError("coroot length normalization failed for " + checked.str());
            x /= mn;
        }
        rd.d_ = di;
    }

    rd.iota_.assign(r, IVec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            // iota(alpha_i, alpha_j) = d_j * <alpha_i, alphacheck_j>
            rd.iota_[i][j] = rd.d_[j] * rd.cartan_[i][j];
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (rd.iota_[i][j] != rd.iota_[j][i])
                throw FalsificationError("iota not symmetric for " + checked.str());

    // close the simple coroots under simple reflections
    {
        std::set<IVec> all;
        std::vector<IVec> frontier;
        for (int i = 0; i < r; ++i) {
            IVec e(r, 0);
            e[i] = 1;
            all.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (auto& v : frontier)
                for (int i = 0; i < r; ++i) {
                    IVec u = rd.reflect(i, v);
                    if (all.insert(u).second) next.push_back(u);
                }
            frontier = std::move(next);
        }
        for (auto& v : all) {
            bool nonneg = true, nonpos = true;
            for (long long x : v) {
                if (x < 0) nonneg = false;
                if (x > 0) nonpos = false;
            }
            if (!nonneg && !nonpos)
                throw FalsificationError("mixed-sign coroot generated for " + checked.str());
            if (nonneg && !is_zero(v)) rd.pos_coroots_.push_back(v);
        }
        std::sort(rd.pos_coroots_.begin(), rd.pos_coroots_.end());
    }

    // each positive coroot alpha determines the root 2*iota(alpha,.)/iota(alpha,alpha)
    for (auto& a : rd.pos_coroots_) {
        long long len = rd.iota_pair(a, a);
        IVec f(r);
        for (int i = 0; i < r; ++i) {
            IVec e(r, 0);
            e[i] = 1;
            long long num = 2 * rd.iota_pair(a, e);
            if (num % len != 0)
                throw FalsificationError("non-integral root functional for " + checked.str());
            f[i] = num / len;
        }
        rd.pos_roots_.push_back(f);
    }

    rd.rho_check_.assign(r, 1);

    // kappa = -sum over positive roots of 2 (root x root); h_dual from kappa = -2 h iota
    {
        IMat s(r, IVec(r, 0));
        for (auto& f : rd.pos_roots_)
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) s[i][j] += 2 * f[i] * f[j];
        long long h = 0;
        for (int i = 0; i < r && h == 0; ++i)
            for (int j = 0; j < r && h == 0; ++j)
                if (rd.iota_[i][j] != 0) {
                    if (s[i][j] % (2 * rd.iota_[i][j]) != 0)
                        throw FalsificationError("dual Coxeter number not integral for " + checked.str());
                    h = s[i][j] / (2 * rd.iota_[i][j]);
                }
        rd.h_dual_ = h;
        rd.kappa_.assign(r, IVec(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (s[i][j] != 2 * h * rd.iota_[i][j])
                    throw FalsificationError("kappa != -2 h iota for " + checked.str());
                rd.kappa_[i][j] = -s[i][j];
            }
    }

    // longest element: any w with w(-P) dominant for strictly dominant P
    {
        IVec p(r, 0);
        for (auto& a : rd.pos_coroots_) p = eis::add(p, a);
        auto dom = rd.dominance(scale(-1, p));
        if (dom.representative != p)
            throw FalsificationError("w0 computation failed for " + checked.str());
        rd.w0_ = dom.w;
    }

    return rd;
}

} // namespace eis
