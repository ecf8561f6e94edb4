#include "eis/metaplectic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eis {

// ---------------------------------------------------------------- abelian

FiniteAbelianGroup FiniteAbelianGroup::quotient(int ambient_rank,
                                                const std::vector<IVec>& relations) {
    FiniteAbelianGroup g;
    g.ambient_rank_ = ambient_rank;
    // relation matrix with the relations as columns
    IMat rel(ambient_rank, IVec(relations.size(), 0));
    for (size_t c = 0; c < relations.size(); ++c)
        for (int r = 0; r < ambient_rank; ++r) rel[r][c] = relations[c][r];
    auto snf = smith_normal_form(rel);
    g.u_ = snf.u;
    g.u_inv_ = snf.u_inv;
    g.factors_.assign(ambient_rank, 0);
    IVec f = snf.factors();
    for (size_t i = 0; i < f.size(); ++i) g.factors_[i] = f[i];
    return g;
}

bool FiniteAbelianGroup::is_finite() const {
    for (long long d : factors_) if (d == 0) return false;
    return true;
}

long long FiniteAbelianGroup::order() const {
    long long o = 1;
    for (long long d : factors_) {
        if (d == 0) throw std::logic_error("FiniteAbelianGroup: infinite group has no order");
        o *= d;
    }
    return o;
}

IVec FiniteAbelianGroup::class_coords(const IVec& x) const {
    IVec y = mat_vec(u_, x);
    for (int i = 0; i < ambient_rank_; ++i) {
        if (factors_[i] > 0) {
            y[i] %= factors_[i];
            if (y[i] < 0) y[i] += factors_[i];
        } else if (factors_[i] == 1) {
            y[i] = 0;
        }
    }
    return y;
}

bool FiniteAbelianGroup::same_class(const IVec& x, const IVec& y) const {
    return class_coords(x) == class_coords(y);
}

bool FiniteAbelianGroup::is_trivial_class(const IVec& x) const {
    return is_zero(class_coords(x));
}

std::vector<IVec> FiniteAbelianGroup::elements() const {
    if (!is_finite()) throw std::logic_error("FiniteAbelianGroup: cannot enumerate infinite group");
    std::vector<IVec> ys{IVec(ambient_rank_, 0)};
    for (int i = 0; i < ambient_rank_; ++i) {
        std::vector<IVec> next;
        for (auto& y : ys)
            for (long long v = 0; v < factors_[i]; ++v) {
                IVec z = y;
                z[i] = v;
                next.push_back(z);
            }
        ys = std::move(next);
    }
    std::vector<IVec> out;
    for (auto& y : ys) out.push_back(mat_vec(u_inv_, y));
    return out;
}

long long FiniteAbelianGroup::n_torsion_order(long long n) const {
    long long o = 1;
    for (long long d : factors_)
        if (d > 0) o *= std::gcd(d, n);
        else throw std::logic_error("FiniteAbelianGroup: n-torsion of infinite group");
    return o;
}

std::string FiniteAbelianGroup::str() const {
    std::string out;
    for (long long d : factors_) {
        if (d == 1) continue;
        if (!out.empty()) out += " x ";
        out += d == 0 ? "Z" : "Z/" + std::to_string(d);
    }
    return out.empty() ? "trivial" : out;
}

// ------------------------------------------------------------ metaplectic

std::shared_ptr<const MetaplecticDatum> MetaplecticDatum::build(const RootDatum& base, int n) {
    if (n < 1) throw std::invalid_argument("metaplectic parameter n must be >= 1");
    auto md_owner = std::make_shared<MetaplecticDatum>();
    MetaplecticDatum& md = *md_owner;
    md.base_ = base;
    md.n_ = n;
    md.big_n_ = 2 * base.h_dual() * n;
    int r = base.rank();

    // Lambda-sharp = { mu : iota(mu, alpha_i) in nZ } via SNF of iota
    {
        auto snf = smith_normal_form(base.iota());
        IVec f = snf.factors();
        // columns of V scaled by n/gcd(d_i, n) generate the sublattice
        IMat gens;
        for (int i = 0; i < r; ++i) {
            long long mult = n / std::gcd(f[i], (long long)n);
            IVec g(r);
            for (int k = 0; k < r; ++k) g[k] = snf.v[k][i] * mult;
            gens.push_back(g);
        }
        md.sharp_hnf_ = hermite_row_basis(gens);
        if ((int)md.sharp_hnf_.size() != r)
            throw FalsificationError("Lambda-sharp basis not full rank");
    }

    md.delta_.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        // denominator of iota(alpha_i,alpha_i)/(2n) = d_i/n in lowest terms
        long long di = base.coroot_length(i);
        md.delta_[i] = n / std::gcd(di, (long long)n);
        IVec beta(r, 0);
        beta[i] = md.delta_[i];
        md.dual_simple_.push_back(beta);
    }

    md.dual_cartan_.assign(r, IVec(r, 0));
    for (int i = 0; i < r; ++i) {
        long long len = base.iota_pair(md.dual_simple_[i], md.dual_simple_[i]);
        for (int j = 0; j < r; ++j) {
            long long num = 2 * base.iota_pair(md.dual_simple_[i], md.dual_simple_[j]);
            if (num % len != 0)
                throw FalsificationError("dual Cartan entry not integral");
            md.dual_cartan_[i][j] = num / len;
        }
    }

    // close dual simple roots under the dual reflections
    {
        std::set<IVec> all(md.dual_simple_.begin(), md.dual_simple_.end());
        std::vector<IVec> frontier(md.dual_simple_.begin(), md.dual_simple_.end());
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (auto& v : frontier)
                for (int i = 0; i < r; ++i) {
                    IVec u = md.dual_reflect(i, v);
                    if (all.insert(u).second) next.push_back(u);
                }
            frontier = std::move(next);
        }
        for (auto& v : all) {
            bool nonneg = true;
            for (long long x : v) if (x < 0) { nonneg = false; break; }
            if (nonneg && !is_zero(v)) md.dual_pos_roots_.push_back(v);
        }
        std::sort(md.dual_pos_roots_.begin(), md.dual_pos_roots_.end());
    }

    md.rho_n_.assign(r, Rational(0));
    for (auto& v : md.dual_pos_roots_)
        for (int i = 0; i < r; ++i) md.rho_n_[i] += Rational(v[i], 2);

    // C*(G) = (weight tuples) / (simple-root tuples)
    {
        std::vector<IVec> rels;
        for (int j = 0; j < r; ++j) {
            IVec col(r);
            for (int i = 0; i < r; ++i) col[i] = base.cartan()[i][j];
            rels.push_back(col);
        }
        md.cstar_g_ = FiniteAbelianGroup::quotient(r, rels);
    }

    // center representatives: rational coweights c with integral root values,
    // one for each class of the dual of C*(G)
    {
        IMat ct = transpose(base.cartan());
        std::vector<IVec> rels;
        for (int j = 0; j < r; ++j) {
            IVec col(r);
            for (int i = 0; i < r; ++i) col[i] = ct[i][j];
            rels.push_back(col);
        }
        auto classes = FiniteAbelianGroup::quotient(r, rels);
        for (auto& k : classes.elements()) {
            std::vector<Rational> b(r);
            for (int i = 0; i < r; ++i) b[i] = Rational(k[i]);
            md.center_reps_.push_back(solve_rational(ct, b));
        }
    }

    return md_owner;
}

bool MetaplecticDatum::in_lambda_sharp(const IVec& mu) const {
    for (int i = 0; i < base_.rank(); ++i) {
        IVec e(base_.rank(), 0);
        e[i] = 1;
        if (base_.iota_pair(mu, e) % n_ != 0) return false;
    }
    return true;
}

void MetaplecticDatum::require_lambda_sharp(const IVec& mu) const {
    for (int i = 0; i < base_.rank(); ++i) {
        IVec e(base_.rank(), 0);
        e[i] = 1;
        long long v = base_.iota_pair(mu, e);
        if (v % n_ != 0)
            throw std::invalid_argument(
                "vector outside Lambda-sharp: iota(mu, alpha_" + std::to_string(i + 1) +
                ") = " + std::to_string(v) + " is not divisible by n = " + std::to_string(n_));
    }
}

long long MetaplecticDatum::dual_pairing(const IVec& mu, int i) const {
    long long len = base_.iota_pair(dual_simple_[i], dual_simple_[i]);
    long long num = 2 * base_.iota_pair(dual_simple_[i], mu);
    if (num % len != 0)
        throw std::invalid_argument("dual pairing not integral: vector outside Lambda-sharp");
    return num / len;
}

IVec MetaplecticDatum::dual_reflect(int i, IVec mu) const {
    long long c = dual_pairing(mu, i);
    return sub(mu, scale(c, dual_simple_[i]));
}

DualGroupProfile MetaplecticDatum::dual_group_profile() const {
    DualGroupProfile p;
    int r = base_.rank();

    // classify the dual Cartan matrix by permutation match against references
    {
        std::vector<CartanLabel> candidates;
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
            try {
                candidates.push_back(CartanLabel::make(f, r));
            } catch (const std::invalid_argument&) {
            }
        }
        bool found = false;
        std::vector<int> perm(r);
        for (auto& cand : candidates) {
            IMat ref = transpose(bourbaki_cartan(cand.family, r));
            for (int i = 0; i < r; ++i) perm[i] = i;
            do {
                bool ok = true;
                for (int i = 0; i < r && ok; ++i)
                    for (int j = 0; j < r && ok; ++j)
                        if (dual_cartan_[perm[i]][perm[j]] != ref[i][j]) ok = false;
                if (ok) {
                    p.dual_type = cand;
                    found = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (found) break;
        }
        if (!found) throw FalsificationError("dual Cartan matrix is not of finite type");
    }

    // cocenter = Lambda-sharp / <dual positive roots>, in Lambda-sharp coordinates
    {
        IMat basis_t(r, IVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) basis_t[i][j] = sharp_hnf_[j][i];
        std::vector<IVec> rels;
        for (auto& root : dual_simple_) {
            auto c = solve_integer(basis_t, root);
            if (!c) throw FalsificationError("dual root not in Lambda-sharp");
            rels.push_back(*c);
        }
        p.cocenter = FiniteAbelianGroup::quotient(r, rels);
    }

    p.center_order_g = cstar_g_.order();

    // the class map into C*(G): check injectivity and the image against the
    // n-torsion subgroup
    {
        IMat basis_t(r, IVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) basis_t[i][j] = sharp_hnf_[j][i];
        std::set<IVec> images;
        bool injective = true;
        for (auto& cls : p.cocenter.elements()) {
            IVec mu = mat_vec(basis_t, cls); // ambient coords of a representative
            CentralCharacter chi = xi_character(mu);
            if (!images.insert(chi.class_coords).second) injective = false;
        }
        p.xi_injective = injective;
        long long image_order = (long long)images.size();
        p.xi_surjective_onto_cn = image_order == cstar_g_.n_torsion_order(n_);
        if (!injective)
            throw FalsificationError("xi is not injective on the cocenter");
    }

    return p;
}

CentralCharacter MetaplecticDatum::xi_character(const IVec& nu) const {
    require_lambda_sharp(nu);
    int r = base_.rank();
    CentralCharacter chi;
    chi.weight.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        chi.weight[i] = base_.iota_pair(nu, e) / n_;
    }
    chi.class_coords = cstar_g_.class_coords(chi.weight);
    chi.trivial = is_zero(chi.class_coords);
    return chi;
}

CentralCharacter MetaplecticDatum::central_twist(const IVec& nu) const {
    return xi_character(nu);
}

IVec MetaplecticDatum::twisted_weyl_shift(const WeylElement& w) const {
    int r = base_.rank();
    // act on rho_n over Q; the difference must be integral and in Lambda-sharp
    std::vector<Rational> x = rho_n_;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int i = *it;
        Rational c(0);
        for (int k = 0; k < r; ++k) c += x[k] * Rational(base_.cartan()[k][i]);
        x[i] -= c;
    }
    IVec out(r);
    for (int i = 0; i < r; ++i) {
        Rational d = x[i] - rho_n_[i];
        if (!d.is_integer())
            throw FalsificationError("twisted Weyl shift is not integral");
        out[i] = d.to_integer();
    }
    if (!in_lambda_sharp(out))
        throw FalsificationError("twisted Weyl shift escapes Lambda-sharp");
    return out;
}

LeviDatum MetaplecticDatum::build_levi(const std::vector<int>& levi_nodes) const {
    int r = base_.rank();
    LeviDatum l;
    l.datum_ = shared_from_this();
    l.levi_nodes_ = levi_nodes;
    std::sort(l.levi_nodes_.begin(), l.levi_nodes_.end());
    for (int i : l.levi_nodes_)
        if (i < 0 || i >= r) throw std::invalid_argument("Levi node index out of range");
    for (int i = 0; i < r; ++i)
        if (!std::binary_search(l.levi_nodes_.begin(), l.levi_nodes_.end(), i))
            l.free_nodes_.push_back(i);

    // Lambda_{M,0} = kernel of mu -> (<mu, alphacheck_i>)_{i in J_M}
    {
        if (l.levi_nodes_.empty()) {
            l.lambda_m0_ = identity_mat(r);
        } else {
            IMat cons(l.levi_nodes_.size(), IVec(r));
            for (size_t a = 0; a < l.levi_nodes_.size(); ++a)
                for (int k = 0; k < r; ++k) cons[a][k] = base_.cartan()[k][l.levi_nodes_[a]];
            auto snf = smith_normal_form(cons);
            // kernel generated by columns of V beyond the rank
            IVec f = snf.factors();
            size_t rank = 0;
            for (long long d : f) if (d != 0) ++rank;
            std::vector<IVec> ker;
            for (int c = (int)rank; c < r; ++c) {
                IVec g(r);
                for (int k = 0; k < r; ++k) g[k] = snf.v[k][c];
                ker.push_back(g);
            }
            l.lambda_m0_ = hermite_row_basis(ker);
        }
    }

    // well-definedness of kappa_M: kappa(alpha_i) vanishes on Lambda_{M,0}
    for (int i : l.levi_nodes_)
        for (auto& b : l.lambda_m0_) {
            long long v = 0;
            for (int k = 0; k < r; ++k) v += base_.kappa()[i][k] * b[k];
            if (v != 0) throw FalsificationError("kappa_M is not well-defined");
        }

    // image of Lambda-sharp in the quotient coordinates
    {
        std::vector<IVec> gens;
        for (auto& row : sharp_hnf_) gens.push_back(l.project(row));
        l.sharp_gp_hnf_ = hermite_row_basis(gens);
        if (l.sharp_gp_hnf_.size() != l.free_nodes_.size())
            throw FalsificationError("Lambda-sharp image does not have finite index");
    }

    // 2(rho - rho_M) as a functional tuple
    {
        IVec two_rho(r, 0), two_rho_m(r, 0);
        for (auto& f : base_.positive_roots())
            for (int k = 0; k < r; ++k) two_rho[k] += f[k];
        // Levi positive roots: positive coroots supported on the Levi nodes
        for (size_t idx = 0; idx < base_.positive_coroots().size(); ++idx) {
            const IVec& a = base_.positive_coroots()[idx];
            bool in_levi = true;
            for (int i : l.free_nodes_)
                if (a[i] != 0) { in_levi = false; break; }
            if (in_levi)
                for (int k = 0; k < r; ++k) two_rho_m[k] += base_.positive_roots()[idx][k];
        }
        l.two_rho_diff_ = sub(two_rho, two_rho_m);
    }

    // longest element of W_M by the dominance trick inside the Levi
    {
        IVec p(r, 0);
        for (size_t idx = 0; idx < base_.positive_coroots().size(); ++idx) {
            const IVec& a = base_.positive_coroots()[idx];
            bool in_levi = true;
            for (int i : l.free_nodes_)
                if (a[i] != 0) { in_levi = false; break; }
            if (in_levi) p = eis::add(p, a);
        }
        IVec x = scale(-1, p);
        std::vector<int> applied;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i : l.levi_nodes_)
                if (base_.simple_root_value(x, i) < 0) {
                    x = base_.reflect(i, x);
                    applied.push_back(i);
                    moved = true;
                }
        }
        if (x != p) throw FalsificationError("Levi longest element computation failed");
        l.w0_m_.word.assign(applied.rbegin(), applied.rend());
    }

    return l;
}

IVec LeviDatum::project(const IVec& mu) const {
    IVec out;
    out.reserve(free_nodes_.size());
    for (int i : free_nodes_) out.push_back(mu[i]);
    return out;
}

IVec LeviDatum::lift(const IVec& theta) const {
    IVec out(datum().base().rank(), 0);
    for (size_t k = 0; k < free_nodes_.size(); ++k) out[free_nodes_[k]] = theta[k];
    return out;
}

bool LeviDatum::in_lambda_sharp_gp(const IVec& theta) const {
    return hnf_contains(sharp_gp_hnf_, theta);
}

IVec LeviDatum::kappa_m(const IVec& theta) const {
    IVec tilde = lift(theta);
    IVec out;
    for (auto& b : lambda_m0_) {
        long long v = 0;
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = 0; j < tilde.size(); ++j)
                v += b[i] * datum().base().kappa()[i][j] * tilde[j];
        out.push_back(v);
    }
    return out;
}

bool LeviDatum::component_nonvanishing(const IVec& theta) const {
    long long n_big = datum().big_n();
    for (long long v : kappa_m(theta))
        if (v % n_big != 0) return false;
    return true;
}

} // namespace eis
