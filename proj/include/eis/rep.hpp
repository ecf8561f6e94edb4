#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eis/metaplectic.hpp"

namespace eis {

// Root data of the metaplectic dual group restricted to a node subset;
// nodes = all gives the full dual group, a proper subset gives its
// standard Levi. Weights live in Lambda-sharp throughout.
class DualGroup {
public:
    DualGroup(std::shared_ptr<const MetaplecticDatum> md, std::vector<int> nodes);
    static DualGroup full(std::shared_ptr<const MetaplecticDatum> md);
    static DualGroup levi(const LeviDatum& l);

    const MetaplecticDatum& md() const { return *md_; }
    const std::vector<int>& nodes() const { return nodes_; }
    const std::vector<IVec>& positive_roots() const { return pos_roots_; }
    const std::vector<Rational>& rho() const { return rho_; }
    int ambient_rank() const { return md_->base().rank(); }

    bool dominant(const IVec& mu) const;
    void require_dominant(const IVec& mu) const;
    IVec reflect(int node, IVec mu) const;
    IVec dominant_representative(IVec mu) const;

    // mu - nu as a nonnegative combination of the node simple roots?
    bool root_leq(const IVec& nu, const IVec& mu) const;

    Rational iota_q(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

private:
    std::shared_ptr<const MetaplecticDatum> md_;
    std::vector<int> nodes_;
    std::vector<IVec> pos_roots_;
    std::vector<Rational> rho_;
};

// Finitely supported multiplicity map on Lambda-sharp.
struct Character {
    std::map<IVec, long long> mult;
    IVec highest;        // dominant highest weight when irreducible
    bool irreducible = false;

    long long dim() const {
        long long s = 0;
        for (auto& [w, m] : mult) { (void)w; s += m; }
        return s;
    }
    long long at(const IVec& w) const {
        auto it = mult.find(w);
        return it == mult.end() ? 0 : it->second;
    }
};

// Freudenthal character of the irreducible with highest weight nu.
Character irreducible_character(const DualGroup& g, const IVec& nu);

// convenience: single weight multiplicity
long long weight_multiplicity(const DualGroup& g, const IVec& nu, const IVec& mu);

// Decomposition of a (virtual) character into irreducibles by repeated
// leading-term extraction; aborts on a negative multiplicity.
std::map<IVec, long long> decompose(const DualGroup& g, std::map<IVec, long long> character);

// Restriction multiplicities dim Hom_{Levi}(U^nu, V^lambda).
std::map<IVec, long long> branch(const DualGroup& full, const DualGroup& levi, const IVec& lambda);

// One isotypic piece of the nilradical module, keyed by its class in the
// cocenter of the Levi dual group.
struct NilClass {
    IVec class_rep;           // canonical representative mod Levi root lattice
    std::vector<IVec> weights;
    IVec highest_weight;
    IVec theta;               // image in the quotient cone coordinates
    long long dim() const { return (long long)weights.size(); }
};

struct NilradicalDatum {
    LeviDatum levi;
    DualGroup levi_group;
    std::vector<NilClass> classes; // J, sorted by class_rep

    const NilClass* class_by_theta(const IVec& theta) const;
};

// Weights of the dual nilradical grouped by cocenter class, with the
// irreducibility and injectivity guarantees checked.
NilradicalDatum nilradical(const LeviDatum& levi);

struct GradedSym {
    long long sym_dim = 0;              // dim (Sym^m u)_theta
    long long sym_dim_by_classes = 0;   // same number via the class-product route
    std::map<IVec, long long> env_character; // Levi-irreducible decomposition of U(u)_theta
    long long env_dim = 0;
    std::vector<long long> sym_dims_by_degree; // index m -> dim (Sym^m u)_theta
    bool cone_violation = false;
};

GradedSym graded_sym(const NilradicalDatum& nil, const IVec& theta, long long m);

// Positivity of a Levi character in the sense of extension by zero from the
// nonnegative cone; search_bound caps the cone scan.
bool check_positive(const NilradicalDatum& nil, const std::map<IVec, long long>& character,
                    long long search_bound = 12);

} // namespace eis
