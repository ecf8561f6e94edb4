#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eis/rational.hpp"
#include "eis/root_datum.hpp"

namespace eis {

// Finitely generated abelian quotient Z^rank / <relations>, with canonical
// class representatives via Smith normal form.
class FiniteAbelianGroup {
public:
    static FiniteAbelianGroup quotient(int ambient_rank, const std::vector<IVec>& relations);

    int ambient_rank() const { return ambient_rank_; }
    // invariant factors d_1 | d_2 | ...; 0 marks a free factor
    const IVec& invariant_factors() const { return factors_; }
    bool is_finite() const;
    long long order() const; // throws if infinite

    // canonical coordinates of the class of x (length = ambient rank)
    IVec class_coords(const IVec& x) const;
    bool same_class(const IVec& x, const IVec& y) const;
    bool is_trivial_class(const IVec& x) const;

    // all classes, as ambient representatives (finite case only)
    std::vector<IVec> elements() const;

    // torsion subgroup order of the n-torsion
    long long n_torsion_order(long long n) const;

    std::string str() const; // "trivial", "Z/2", "Z/2 x Z/4", ...

private:
    int ambient_rank_ = 0;
    IMat u_;     // SNF row transform
    IMat u_inv_;
    IVec factors_; // length = ambient rank; 0 means free
};

// Quotient of Z^rank by a sublattice, canonical representatives via HNF.
// Used for cocenter classes that may have free rank.
class LatticeQuotient {
public:
    LatticeQuotient() = default;
    LatticeQuotient(int rank, const std::vector<IVec>& sublattice_gens)
        : rank_(rank), hnf_(hermite_row_basis(IMat(sublattice_gens.begin(), sublattice_gens.end()))) {}

    IVec reduce(const IVec& x) const { return hnf_reduce(hnf_, x); }
    bool same_class(const IVec& x, const IVec& y) const { return reduce(x) == reduce(y); }
    const IMat& sublattice_hnf() const { return hnf_; }
    int rank() const { return rank_; }

private:
    int rank_ = 0;
    IMat hnf_;
};

// A character of the center of G, recorded as an integral weight taken
// modulo the root lattice; evaluation on central elements is by pairing
// with rational coweight representatives, giving an exact argument in Q/Z.
struct CentralCharacter {
    IVec weight;       // value tuple on the coroot basis
    IVec class_coords; // canonical class in (weight lattice)/(root lattice)
    bool trivial;

    // argument in [0,1): character value is e^{2 pi i arg}
    Rational arg_on(const std::vector<Rational>& coweight_rep) const {
        Rational s(0);
        for (size_t i = 0; i < weight.size(); ++i) s += Rational(weight[i]) * coweight_rep[i];
        return s.mod1();
    }

    // the z -> chi(z^{-1}) convention used for torus-component gradings
    Rational arg_on_inverse(const std::vector<Rational>& coweight_rep) const {
        return (-arg_on(coweight_rep)).mod1();
    }
};

class MetaplecticDatum;

// Standard Levi data attached to a subset of Dynkin nodes.
class LeviDatum {
public:
    const MetaplecticDatum& datum() const { return *datum_; }
    const std::vector<int>& levi_nodes() const { return levi_nodes_; }
    const std::vector<int>& free_nodes() const { return free_nodes_; }
    bool is_full_group() const { return free_nodes_.empty(); }

    // quotient coordinates: drop the Levi-node entries
    IVec project(const IVec& mu) const;
    IVec lift(const IVec& theta) const;

    const IMat& lambda_m0_basis() const { return lambda_m0_; }     // rows
    const IMat& lambda_sharp_gp() const { return sharp_gp_hnf_; }  // HNF rows
    bool in_lambda_sharp_gp(const IVec& theta) const;

    // kappa_M(theta) as the value tuple on the basis of Lambda_{M,0}
    IVec kappa_m(const IVec& theta) const;
    bool component_nonvanishing(const IVec& theta) const;

    // 2(rho_check - rho_check_M) as a functional tuple on the coroot basis
    const IVec& two_rho_diff() const { return two_rho_diff_; }

    // longest Weyl element of the Levi
    const WeylElement& w0_m() const { return w0_m_; }

private:
    friend class MetaplecticDatum;
    std::shared_ptr<const MetaplecticDatum> datum_;
    std::vector<int> levi_nodes_;
    std::vector<int> free_nodes_;
    IMat lambda_m0_;
    IMat sharp_gp_hnf_;
    IVec two_rho_diff_;
    WeylElement w0_m_;
};

struct DualGroupProfile {
    CartanLabel dual_type{Family::A, 1};
    FiniteAbelianGroup cocenter;
    long long center_order_g = 0; // order of Z(G)
    bool xi_injective = false;
    bool xi_surjective_onto_cn = false;
};

// Metaplectic datum attached to (root datum, n): the sublattice on which
// the twisted Hecke theory lives, together with the dual-group root data.
class MetaplecticDatum : public std::enable_shared_from_this<MetaplecticDatum> {
public:
    static std::shared_ptr<const MetaplecticDatum> build(const RootDatum& base, int n);

    const RootDatum& base() const { return base_; }
    int n() const { return n_; }
    long long big_n() const { return big_n_; } // 2 * h_dual * n

    const IMat& lambda_sharp_basis() const { return sharp_hnf_; } // HNF rows
    bool in_lambda_sharp(const IVec& mu) const;
    // names the first violated pairing if mu is outside
    void require_lambda_sharp(const IVec& mu) const;

    const IVec& delta() const { return delta_; }
    const std::vector<IVec>& dual_simple_roots() const { return dual_simple_; }
    const IMat& dual_cartan() const { return dual_cartan_; }
    const std::vector<IVec>& dual_positive_roots() const { return dual_pos_roots_; }
    const std::vector<Rational>& rho_n() const { return rho_n_; }

    // <mu, beta_i^vee> for the i-th dual simple root
    long long dual_pairing(const IVec& mu, int i) const;
    IVec dual_reflect(int i, IVec mu) const;

    DualGroupProfile dual_group_profile() const;

    CentralCharacter xi_character(const IVec& nu) const;
    // character by which the Hecke operator at nu shifts a center-graded
    // object; identical underlying weight, inverse convention exposed for
    // the torus-side grading
    CentralCharacter central_twist(const IVec& nu) const;

    IVec twisted_weyl_shift(const WeylElement& w) const;

    LeviDatum build_levi(const std::vector<int>& levi_nodes) const;

    // the center of G: rational coweight representatives, class group
    const std::vector<std::vector<Rational>>& center_reps() const { return center_reps_; }
    const FiniteAbelianGroup& cstar_g() const { return cstar_g_; }

private:
    RootDatum base_;
    int n_ = 1;
    long long big_n_ = 0;
    IMat sharp_hnf_;
    IVec delta_;
    std::vector<IVec> dual_simple_;
    IMat dual_cartan_;
    std::vector<IVec> dual_pos_roots_;
    std::vector<Rational> rho_n_;
    FiniteAbelianGroup cstar_g_;                     // weight lattice / root lattice
    std::vector<std::vector<Rational>> center_reps_; // rational coweights
};

} // namespace eis
