#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eis/rep.hpp"

namespace eis {

// Smooth projective curve over F_q, recorded by the numerator of its zeta
// function; all coefficients exact integers.
struct CurveDatum {
    long long q = 2;
    int g = 0;
    std::vector<long long> zeta_numerator; // P(s) = sum a_k s^k, degree 2g, a_0 = 1

    // reconstruct the numerator from #X(F_{q^k}) for k = 1..g
    static CurveDatum from_counts(long long q, int g, const std::vector<long long>& counts);
    static CurveDatum from_numerator(long long q, int g, std::vector<long long> numerator);

    long long point_count(int k) const; // #X(F_{q^k})
    // s-expansion of P(s)/((1-s)(1-qs)) up to degree K
    std::vector<long long> zeta_coefficients(int K) const;

private:
    void validate() const;
};

// Rank-one L-function data per symmetric-power character: either the curve
// zeta (trivial system) or a polynomial numerator of degree 2g-2.
struct LocalSystemSpec {
    struct Entry {
        bool trivial = true;
        std::vector<long long> numerator; // used when !trivial
    };
    // keyed by the positive multiple k of the base character
    std::map<long long, Entry> by_multiple;

    const Entry& entry_for_multiple(long long k) const;
    // coefficient of s^j in L(s) for the k-th multiple
    long long l_coefficient(const CurveDatum& curve, long long k, int j) const;
};

// Coefficient in the completed group ring: a rational plus a rational
// combination of opaque placeholder symbols.
struct SeriesCoeff {
    std::map<std::string, Rational> terms; // "" keys the scalar part

    static SeriesCoeff scalar(const Rational& r);
    static SeriesCoeff symbol(const std::string& name);

    bool is_zero() const;
    bool is_scalar() const;
    SeriesCoeff operator+(const SeriesCoeff& o) const;
    SeriesCoeff operator-(const SeriesCoeff& o) const;
    SeriesCoeff operator*(const SeriesCoeff& o) const; // throws on symbol*symbol
    bool operator==(const SeriesCoeff& o) const;
    std::string str() const;
};

// Lambda-sharp indexed series truncated to a height window: coefficients are
// kept for mu with mu >= base coordinatewise and sum(mu - base) <= height.
struct FormalSeries {
    IVec base;
    long long height = 0;
    std::map<IVec, SeriesCoeff> coeffs;

    static FormalSeries one(const IVec& base_point, long long height);
    bool in_window(const IVec& mu) const;
    SeriesCoeff at(const IVec& mu) const;
    void set(const IVec& mu, const SeriesCoeff& c);

    FormalSeries operator+(const FormalSeries& o) const; // same base required
    FormalSeries operator*(const FormalSeries& o) const; // windows intersect
};

// L(E*, nu, t) as a series supported on multiples of nu, coefficient at
// t^{k nu} equal to [s^k] L(s) / q^k.
FormalSeries l_series(const CurveDatum& curve, const LocalSystemSpec& spec,
                      const IVec& nu, long long multiple_of_base, long long height);

// the product-form modified Eisenstein series over the window
FormalSeries eis_product(const FormalSeries& eis_cl, const NilradicalDatum& nil,
                         const CurveDatum& curve, const LocalSystemSpec& spec,
                         long long height);

// the sum-form coefficient at mu, given classical coefficients by oracle;
// assignments are enumerated up to the stated cone height
SeriesCoeff eis_sum(const IVec& mu, const std::function<SeriesCoeff(const IVec&)>& eis_cl_oracle,
                    const NilradicalDatum& nil, const CurveDatum& curve,
                    const LocalSystemSpec& spec, long long window_height);

// classical Eisenstein series with opaque placeholder coefficients
FormalSeries placeholder_eis_cl(const IVec& base, long long height);
// same, with support restricted to the sublattice components
FormalSeries placeholder_eis_cl(const MetaplecticDatum& md, const IVec& base, long long height);

// graded dimensions of the k-th super symmetric power of a three-term
// complex with dims (h0, h1, h2) in degrees 0, 1, 2
std::vector<long long> sym_power_complex(long long h0, long long h1, long long h2, long long k);

// constant-term case analysis for the rank-one module
struct ConstantTermReport {
    enum class Kind { Zero, SingleSigmaIH, SingleIH, Triangle };
    struct Piece {
        bool sigma = false;     // image under the inversion map
        long long theta_m = 0;  // theta = theta_m * alpha
        long long b_size = 0;   // theta_m / n
        long long shift = 0;    // stratum shift, v-convention
        // present when local-system data was supplied
        std::optional<std::vector<long long>> ih_dims;
        long long ih_internal_shift = 0;
    };
    Kind kind = Kind::Zero;
    std::vector<Piece> pieces; // sigma piece first for triangles
};

ConstantTermReport constant_term(long long d, long long d1, int n, int g,
                                 const CurveDatum* curve = nullptr,
                                 const LocalSystemSpec* spec = nullptr);

} // namespace eis
