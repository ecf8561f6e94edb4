#pragma once

#include <string>
#include <vector>

#include "eis/intmat.hpp"

namespace eis {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanLabel {
    Family family;
    int rank;

    // admissible ranks per family; throws std::invalid_argument otherwise
    static CartanLabel make(Family f, int rank);
    static CartanLabel parse(const std::string& s); // "A1", "B3", ...
    std::string str() const;

    friend bool operator==(const CartanLabel& a, const CartanLabel& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

struct WeylElement {
    // word of simple-reflection indices (0-based), applied right to left
    std::vector<int> word;

    static WeylElement identity() { return {}; }
    WeylElement then(const WeylElement& inner) const {
        WeylElement w = *this;
        w.word.insert(w.word.end(), inner.word.begin(), inner.word.end());
        return w;
    }
    WeylElement inverse() const {
        WeylElement w;
        w.word.assign(word.rbegin(), word.rend());
        return w;
    }
};

// Simple simply-connected root datum over the coroot basis.
// The coweight lattice is Z^rank with basis the simple coroots; weights
// (functionals) are stored as the tuple of their values on that basis.
class RootDatum {
public:
    static RootDatum build(const CartanLabel& label);

    const CartanLabel& label() const { return label_; }
    int rank() const { return rank_; }

    // cartan()[i][j] = value of the j-th simple root on the i-th simple coroot
    const IMat& cartan() const { return cartan_; }
    const IMat& iota() const { return iota_; }
    const IMat& kappa() const { return kappa_; }
    long long h_dual() const { return h_dual_; }

    // iota(alpha_i, alpha_i) = 2 * coroot_length(i)
    long long coroot_length(int i) const { return d_[i]; }

    const std::vector<IVec>& positive_coroots() const { return pos_coroots_; }
    // positive roots as value tuples on the coroot basis
    const std::vector<IVec>& positive_roots() const { return pos_roots_; }
    const IVec& rho_check() const { return rho_check_; }  // (1,...,1)
    const WeylElement& w0() const { return w0_; }

    long long iota_pair(const IVec& a, const IVec& b) const;
    // value of the i-th simple root on mu
    long long simple_root_value(const IVec& mu, int i) const;
    // value of a stored functional on mu
    static long long eval(const IVec& functional, const IVec& mu);

    IVec reflect(int i, IVec mu) const;
    IVec act(const WeylElement& w, IVec mu) const;
    // action on functionals: (w f)(mu) = f(w^{-1} mu)
    IVec act_on_functional(const WeylElement& w, const IVec& f) const;

    struct Dominance {
        bool is_dominant;
        IVec representative;
        WeylElement w; // w * mu = representative
    };
    Dominance dominance(const IVec& mu) const;

    long long weyl_order() const;

private:
    CartanLabel label_{Family::A, 1};
    int rank_ = 0;
    IMat cartan_;
    IVec d_;
    IMat iota_;
    IMat kappa_;
    long long h_dual_ = 0;
    std::vector<IVec> pos_coroots_;
    std::vector<IVec> pos_roots_;
    IVec rho_check_;
    WeylElement w0_;
};

// Cartan matrix of the root system of the given type, entries
// a[i][j] = <beta_i, beta_j^vee> in Bourbaki numbering.
IMat bourbaki_cartan(Family f, int rank);

} // namespace eis
