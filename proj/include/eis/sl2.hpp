#pragma once

#include <map>
#include <vector>

#include "eis/laurent.hpp"
#include "eis/rep.hpp"

namespace eis {

// Rank-one specialization: degrees live in eZ with e = n (n odd) or n/2
// (n even); the cell index k = d/e labels the stratum.
struct SL2Context {
    int n = 1;
    int e = 1;
    bool even = false;

    static SL2Context make(int n);
};

// Nonnegative combination of basis cells with integer shifts; negative
// coefficients abort, they contradict the semisimple grading.
struct ThetaElement {
    std::map<std::pair<long long, int>, long long> coeffs; // (cell, shift) -> mult

    static ThetaElement cell(long long k, int shift = 0, long long mult = 1);

    bool operator==(const ThetaElement& o) const { return coeffs == o.coeffs; }
    bool empty() const { return coeffs.empty(); }

    void add(long long k, int shift, long long mult);
    ThetaElement operator+(const ThetaElement& o) const;
    // subtraction aborts on a negative result
    ThetaElement operator-(const ThetaElement& o) const;
    ThetaElement shifted(int by) const;
    ThetaElement scaled(const LaurentPoly& p) const;
    // drop cells with index > bound
    ThetaElement truncated(long long max_cell) const;
    long long max_cell() const;

    std::string str() const; // "IC_0[1] + IC_0[-1] + IC_4"-style with cell degrees
};

// action of the generating Hecke operator on cells
ThetaElement fundamental_hecke(const SL2Context& ctx, const ThetaElement& elt);

// operator attached to the m-th irreducible of the rank-one dual group,
// via the tensor-product recursion from the fundamental one
ThetaElement hecke_of_irreducible(const SL2Context& ctx, long long m, const ThetaElement& elt);

struct EigenReport {
    ThetaElement aut;
    LaurentPoly eigen_poly;
    bool holds = false;
};

// the theta element is a Hecke eigenvector with the principal-grading
// character of the m-th irreducible as eigenvalue
EigenReport theta_eigen_check(const SL2Context& ctx, long long m);

// principal-grading character of the m-th irreducible, computed from the
// rank-one metaplectic dual root datum
LaurentPoly principal_character(const SL2Context& ctx, long long m);

// degree-d Eisenstein contribution, truncated at cell index k_max
ThetaElement eis_expand(const SL2Context& ctx, long long d, bool e_nontrivial, long long k_max);

struct StalkEntry {
    bool vanishes = true;
    long long shift = 0;
};

// restriction of the degree-d basis sheaf to the stratum of degree r > d
StalkEntry stalk_table(const SL2Context& ctx, long long d, long long r);

enum class ParityClass { plus, minus, not_applicable };
ParityClass parity(const SL2Context& ctx, long long d);

// cross-n identification on cells; requires equal parity of n
ThetaElement transport(const SL2Context& from, const SL2Context& to, const ThetaElement& elt);

} // namespace eis
