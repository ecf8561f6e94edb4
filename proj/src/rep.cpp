#include "eis/rep.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace eis {

DualGroup::DualGroup(std::shared_ptr<const MetaplecticDatum> md, std::vector<int> nodes)
    : md_(std::move(md)), nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    int r = md_->base().rank();
    for (auto& root : md_->dual_positive_roots()) {
        bool supported = true;
        for (int i = 0; i < r && supported; ++i)
            if (root[i] != 0 && !std::binary_search(nodes_.begin(), nodes_.end(), i))
                supported = false;
        if (supported) pos_roots_.push_back(root);
    }
    rho_.assign(r, Rational(0));
    for (auto& root : pos_roots_)
        for (int i = 0; i < r; ++i) rho_[i] += Rational(root[i], 2);
}

DualGroup DualGroup::full(std::shared_ptr<const MetaplecticDatum> md) {
    std::vector<int> all(md->base().rank());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return DualGroup(std::move(md), all);
}

DualGroup DualGroup::levi(const LeviDatum& l) {
    return DualGroup(l.datum().shared_from_this(), l.levi_nodes());
}

bool DualGroup::dominant(const IVec& mu) const {
    for (int i : nodes_)
        if (md_->dual_pairing(mu, i) < 0) return false;
    return true;
}

void DualGroup::require_dominant(const IVec& mu) const {
    for (int i : nodes_) {
        long long p = md_->dual_pairing(mu, i);
        if (p < 0)
            throw std::invalid_argument(
                "weight not dominant: pairing with dual simple root " + std::to_string(i + 1) +
                " is " + std::to_string(p));
    }
}

IVec DualGroup::reflect(int node, IVec mu) const { return md_->dual_reflect(node, mu); }

IVec DualGroup::dominant_representative(IVec mu) const {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : nodes_)
            if (md_->dual_pairing(mu, i) < 0) {
                mu = reflect(i, mu);
                moved = true;
            }
    }
    return mu;
}

bool DualGroup::root_leq(const IVec& nu, const IVec& mu) const {
    // mu - nu must be a nonnegative integer combination of the node dual
    // simple roots; those are delta_i * alpha_i, so coordinates decide
    IVec d = sub(mu, nu);
    int r = ambient_rank();
    for (int i = 0; i < r; ++i) {
        bool node = std::binary_search(nodes_.begin(), nodes_.end(), i);
        if (!node) {
            if (d[i] != 0) return false;
        } else {
            long long delta = md_->delta()[i];
            if (d[i] % delta != 0 || d[i] < 0) return false;
        }
    }
    return true;
}

Rational DualGroup::iota_q(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    Rational s(0);
    const IMat& iota = md_->base().iota();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) s += a[i] * Rational(iota[i][j]) * b[j];
    }
    return s;
}

namespace {

std::vector<Rational> to_q(const IVec& v) {
    std::vector<Rational> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

std::vector<Rational> add_q(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// Weyl dimension formula over the positive roots of g.
long long weyl_dimension(const DualGroup& g, const IVec& nu) {
    Rational dim(1);
    auto nu_rho = add_q(to_q(nu), g.rho());
    for (auto& root : g.positive_roots()) {
        auto r_q = to_q(root);
        dim *= g.iota_q(nu_rho, r_q) / g.iota_q(g.rho(), r_q);
    }
    return dim.to_integer();
}

} // namespace

Character irreducible_character(const DualGroup& g, const IVec& nu) {
    g.md().require_lambda_sharp(nu);
    g.require_dominant(nu);

    // full weight set: breadth-first simple-root descent, pruned by the
    // saturation criterion dom(mu) <= nu
    std::set<IVec> weights{nu};
    std::deque<IVec> queue{nu};
    while (!queue.empty()) {
        IVec mu = queue.front();
        queue.pop_front();
        for (int i : g.nodes()) {
            IVec cand = sub(mu, g.md().dual_simple_roots()[i]);
            if (weights.count(cand)) continue;
            if (!g.root_leq(g.dominant_representative(cand), nu)) continue;
            weights.insert(cand);
            queue.push_back(cand);
        }
    }

    std::vector<IVec> dominants;
    for (auto& w : weights)
        if (g.dominant(w)) dominants.push_back(w);

    // descending order: smaller gap(nu - mu) first
    auto gap = [&](const IVec& mu) {
        long long h = 0;
        for (size_t i = 0; i < mu.size(); ++i) h += nu[i] - mu[i];
        return h;
    };
    std::sort(dominants.begin(), dominants.end(), [&](const IVec& a, const IVec& b) {
        long long ga = gap(a), gb = gap(b);
        if (ga != gb) return ga < gb;
        return a < b;
    });

    std::map<IVec, long long> dom_mult;
    auto nu_rho = add_q(to_q(nu), g.rho());
    Rational casimir_top = g.iota_q(nu_rho, nu_rho);

    for (auto& mu : dominants) {
        if (mu == nu) {
            dom_mult[mu] = 1;
            continue;
        }
        Rational num(0);
        for (auto& root : g.positive_roots()) {
            IVec probe = mu;
            while (true) {
                probe = eis::add(probe, root);
                if (!weights.count(probe)) break;
                auto it = dom_mult.find(g.dominant_representative(probe));
                if (it == dom_mult.end())
                    throw FalsificationError("Freudenthal lookup hit an unprocessed weight");
                num += Rational(2 * it->second) * g.iota_q(to_q(probe), to_q(root));
            }
        }
        auto mu_rho = add_q(to_q(mu), g.rho());
        Rational den = casimir_top - g.iota_q(mu_rho, mu_rho);
        if (den.is_zero())
            throw FalsificationError("Freudenthal denominator vanished");
        Rational m = num / den;
        if (!m.is_integer() || m.to_integer() <= 0)
            throw FalsificationError("Freudenthal produced a non-positive multiplicity");
        dom_mult[mu] = m.to_integer();
    }

    Character ch;
    ch.highest = nu;
    ch.irreducible = true;
    for (auto& w : weights) ch.mult[w] = dom_mult.at(g.dominant_representative(w));

    if (ch.dim() != weyl_dimension(g, nu))
        throw FalsificationError("character dimension disagrees with the Weyl dimension formula");
    return ch;
}

long long weight_multiplicity(const DualGroup& g, const IVec& nu, const IVec& mu) {
    return irreducible_character(g, nu).at(mu);
}

std::map<IVec, long long> decompose(const DualGroup& g, std::map<IVec, long long> character) {
    std::map<IVec, long long> out;
    while (!character.empty()) {
        // drop zero entries
        for (auto it = character.begin(); it != character.end();)
            it = it->second == 0 ? character.erase(it) : std::next(it);
        if (character.empty()) break;

        // a maximal weight in the root order restricted to the node span
        const IVec* top = nullptr;
        for (auto& [w, m] : character) {
            (void)m;
            bool maximal = true;
            for (auto& [v, mv] : character) {
                (void)mv;
                if (v != w && g.root_leq(w, v)) { maximal = false; break; }
            }
            if (maximal) { top = &w; break; }
        }
        if (!top) throw FalsificationError("no maximal weight during decomposition");
        IVec hw = *top;
        long long mult = character[hw];
        if (mult < 0)
            throw FalsificationError("negative multiplicity during decomposition");
        if (!g.dominant(hw))
            throw FalsificationError("maximal weight is not dominant during decomposition");
        Character irr = irreducible_character(g, hw);
        for (auto& [w, m] : irr.mult) {
            auto it = character.find(w);
            long long have = it == character.end() ? 0 : it->second;
            long long left = have - mult * m;
            if (left < 0)
                throw FalsificationError("negative multiplicity during decomposition");
            if (left == 0) {
                if (it != character.end()) character.erase(it);
            } else {
                character[w] = left;
            }
        }
        out[hw] += mult;
    }
    return out;
}

std::map<IVec, long long> branch(const DualGroup& full, const DualGroup& levi, const IVec& lambda) {
    Character ch = irreducible_character(full, lambda);
    std::map<IVec, long long> rest(ch.mult.begin(), ch.mult.end());
    auto out = decompose(levi, std::move(rest));

    // bookkeeping check: multiplicities weighted by dimensions recover dim V
    long long total = 0;
    for (auto& [nu, m] : out) total += m * weyl_dimension(levi, nu);
    if (total != ch.dim())
        throw FalsificationError("branching multiplicities do not add up to the dimension");
    return out;
}

const NilClass* NilradicalDatum::class_by_theta(const IVec& theta) const {
    for (auto& c : classes)
        if (c.theta == theta) return &c;
    return nullptr;
}

NilradicalDatum nilradical(const LeviDatum& levi) {
    if (levi.is_full_group())
        throw std::invalid_argument("nilradical requires a proper parabolic");
    const MetaplecticDatum& md = levi.datum();
    int r = md.base().rank();

    NilradicalDatum nd{levi, DualGroup::levi(levi), {}};

    // quotient of the weight lattice by the Levi dual root lattice
    std::vector<IVec> levi_roots;
    for (int i : levi.levi_nodes()) levi_roots.push_back(md.dual_simple_roots()[i]);
    LatticeQuotient q(r, levi_roots);

    std::map<IVec, std::vector<IVec>> grouped;
    for (auto& root : md.dual_positive_roots()) {
        bool outside = false;
        for (int i : levi.free_nodes())
            if (root[i] != 0) { outside = true; break; }
        if (outside) grouped[q.reduce(root)].push_back(root);
    }

    for (auto& [rep, weights] : grouped) {
        NilClass cls;
        cls.class_rep = rep;
        cls.weights = weights;
        cls.theta = levi.project(weights.front());

        // unique maximal weight in the Levi root order
        const IVec* top = nullptr;
        for (auto& w : weights) {
            bool maximal = true;
            for (auto& v : weights)
                if (v != w && nd.levi_group.root_leq(w, v)) { maximal = false; break; }
            if (maximal) {
                if (top) throw FalsificationError(
                    "nilradical class has two maximal weights; irreducibility fails");
                top = &w;
            }
        }
        if (!top || !nd.levi_group.dominant(*top))
            throw FalsificationError("nilradical class has no dominant maximal weight");
        cls.highest_weight = *top;

        // the class must be exactly the irreducible with that highest weight
        Character irr = irreducible_character(nd.levi_group, cls.highest_weight);
        std::map<IVec, long long> as_mult;
        for (auto& w : weights) as_mult[w] += 1;
        if (as_mult != irr.mult)
            throw FalsificationError(
                "nilradical class is not an irreducible Levi module (weights differ)");

        nd.classes.push_back(std::move(cls));
    }

    std::sort(nd.classes.begin(), nd.classes.end(),
              [](const NilClass& a, const NilClass& b) { return a.class_rep < b.class_rep; });

    // distinct classes must map to distinct cone degrees
    for (size_t i = 0; i < nd.classes.size(); ++i)
        for (size_t j = i + 1; j < nd.classes.size(); ++j)
            if (nd.classes[i].theta == nd.classes[j].theta)
                throw FalsificationError("class-to-cone map is not injective on J");

    // every dual simple root outside the Levi heads its own class
    for (int i : levi.free_nodes()) {
        IVec beta = md.dual_simple_roots()[i];
        bool found = false;
        for (auto& c : nd.classes)
            for (auto& w : c.weights)
                if (w == beta) { found = true; break; }
        if (!found)
            throw FalsificationError("dual simple root missing from the nilradical classes");
    }

    return nd;
}

namespace {

bool cone_leq(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

GradedSym graded_sym(const NilradicalDatum& nil, const IVec& theta, long long m) {
    GradedSym out;
    for (long long t : theta)
        if (t < 0) {
            out.cone_violation = true;
            return out;
        }

    long long height = 0;
    for (long long t : theta) height += t;

    // route 1: direct symmetric-power count over projected weights
    {
        // dp[count][partial sum <= theta componentwise]
        std::vector<std::map<IVec, long long>> dp(height + 1);
        dp[0][IVec(theta.size(), 0)] = 1;
        for (auto& cls : nil.classes)
            for (auto& w : cls.weights) {
                IVec p = nil.levi.project(w);
                // unbounded knapsack in increasing count order
                for (long long c = 0; c + 1 <= height; ++c)
                    for (auto& [vec, cnt] : dp[c]) {
                        IVec nv = eis::add(vec, p);
                        if (!cone_leq(nv, theta)) continue;
                        dp[c + 1][nv] += cnt;
                    }
            }
        out.sym_dims_by_degree.assign(height + 1, 0);
        for (long long c = 0; c <= height; ++c) {
            auto it = dp[c].find(theta);
            out.sym_dims_by_degree[c] = it == dp[c].end() ? 0 : it->second;
        }
        out.sym_dim = m >= 0 && m <= height ? out.sym_dims_by_degree[m] : 0;
        for (long long v : out.sym_dims_by_degree) out.env_dim += v;
    }

    // route 2: sum over J-assignments of products of symmetric-power binomials
    {
        long long total = 0;
        std::vector<const NilClass*> cls;
        for (auto& c : nil.classes) cls.push_back(&c);
        auto binom = [](long long d, long long k) {
            // C(d + k - 1, k)
            Rational r(1);
            for (long long i = 1; i <= k; ++i) r *= Rational(d + i - 1, i);
            return r.to_integer();
        };
        std::function<void(size_t, IVec, long long, long long)> rec =
            [&](size_t idx, IVec remaining, long long count_left, long long acc) {
                if (idx == cls.size()) {
                    if (is_zero(remaining) && count_left == 0) total += acc;
                    return;
                }
                const NilClass& c = *cls[idx];
                for (long long k = 0; k <= count_left; ++k) {
                    IVec used = scale(k, c.theta);
                    if (!cone_leq(used, remaining)) break;
                    rec(idx + 1, sub(remaining, used), count_left - k, acc * binom(c.dim(), k));
                }
            };
        rec(0, theta, m, 1);
        out.sym_dim_by_classes = m >= 0 ? total : 0;
    }

    if (out.sym_dim != out.sym_dim_by_classes)
        throw FalsificationError("graded symmetric dimensions disagree between the two routes");

    // Levi-module decomposition of U(u)_theta from the full weight character
    {
        IVec zero_full(nil.levi.datum().base().rank(), 0);
        std::map<IVec, long long> dp; // full-lattice vector -> count
        dp[zero_full] = 1;
        for (auto& cls : nil.classes)
            for (auto& w : cls.weights) {
                IVec p = nil.levi.project(w);
                std::map<IVec, long long> ndp = dp;
                // iterate in increasing multiples; bounded by cone_leq on projections
                std::map<IVec, long long> frontier = dp;
                while (!frontier.empty()) {
                    std::map<IVec, long long> added;
                    for (auto& [vec, cnt] : frontier) {
                        IVec nv = eis::add(vec, w);
                        if (!cone_leq(nil.levi.project(nv), theta)) continue;
                        added[nv] += cnt;
                    }
                    for (auto& [vec, cnt] : added) ndp[vec] += cnt;
                    frontier = std::move(added);
                }
                dp = std::move(ndp);
            }
        std::map<IVec, long long> theta_char;
        for (auto& [vec, cnt] : dp)
            if (nil.levi.project(vec) == theta) theta_char[vec] += cnt;
        long long total = 0;
        for (auto& [vec, cnt] : theta_char) { (void)vec; total += cnt; }
        if (total != out.env_dim)
            throw FalsificationError("enveloping character total disagrees with graded dimensions");
        out.env_character = decompose(nil.levi_group, std::move(theta_char));
    }

    return out;
}

bool check_positive(const NilradicalDatum& nil, const std::map<IVec, long long>& character,
                    long long search_bound) {
    const RootDatum& base = nil.levi.datum().base();
    auto constituents = decompose(nil.levi_group, character);

    for (auto& [hw, mult] : constituents) {
        (void)mult;
        // search mu = hw + sum c_i alpha_i over Levi nodes, dominant for the
        // Levi, with w0_M(mu) in the nonnegative coroot cone
        bool found = false;
        const std::vector<int>& nodes = nil.levi.levi_nodes();
        std::vector<long long> c(nodes.size(), 0);
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (found) return;
            if (idx == nodes.size()) {
                IVec mu = hw;
                for (size_t k = 0; k < nodes.size(); ++k) mu[nodes[k]] += c[k];
                for (int i : nodes)
                    if (base.simple_root_value(mu, i) < 0) return;
                IVec img = base.act(nil.levi.w0_m(), mu);
                for (long long x : img)
                    if (x < 0) return;
                found = true;
                return;
            }
            for (long long v = 0; v <= search_bound && !found; ++v) {
                c[idx] = v;
                rec(idx + 1);
            }
        };
        rec(0);
        if (!found) return false;
    }
    return true;
}

} // namespace eis
