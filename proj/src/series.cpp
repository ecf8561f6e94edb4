#include "eis/series.hpp"

#include <algorithm>
#include <numeric>

namespace eis {

// ---------------------------------------------------------------- curves

void CurveDatum::validate() const {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    if ((int)zeta_numerator.size() != 2 * g + 1)
        throw std::invalid_argument("zeta numerator must have degree 2g");
    if (zeta_numerator[0] != 1)
        throw std::invalid_argument("zeta numerator must have constant term 1");
    // functional equation a_{2g-k} = q^{g-k} a_k
    for (int k = 0; k <= g; ++k) {
        long long lhs = zeta_numerator[2 * g - k];
        long long pw = 1;
        for (int i = 0; i < g - k; ++i) pw *= q;
        if (lhs != pw * zeta_numerator[k])
            throw std::invalid_argument(
                "zeta numerator violates the functional equation at degree " + std::to_string(k));
    }
}

CurveDatum CurveDatum::from_counts(long long q, int g, const std::vector<long long>& counts) {
    if ((int)counts.size() != g)
        throw std::invalid_argument("expected exactly g point counts");
    CurveDatum c;
    c.q = q;
    c.g = g;
    c.zeta_numerator.assign(2 * g + 1, 0);
    c.zeta_numerator[0] = 1;

    std::vector<long long> b(g + 1, 0);
    long long qk = 1;
    for (int k = 1; k <= g; ++k) {
        qk *= q;
        b[k] = counts[k - 1] - qk - 1;
        // Weil bound |N_k - q^k - 1| <= 2 g sqrt(q^k)
        if (b[k] * b[k] > 4ll * g * g * qk)
            throw std::invalid_argument("point count violates the Weil bound at k = " +
                                        std::to_string(k));
    }
    for (int k = 1; k <= g; ++k) {
        long long s = b[k];
        for (int j = 1; j < k; ++j) s += c.zeta_numerator[j] * b[k - j];
        if (s % k != 0)
            throw std::invalid_argument("point counts are inconsistent: non-integral zeta "
                                        "coefficient at degree " + std::to_string(k));
        c.zeta_numerator[k] = s / k;
    }
    for (int k = 0; k < g; ++k) {
        long long pw = 1;
        for (int i = 0; i < g - k; ++i) pw *= q;
        c.zeta_numerator[2 * g - k] = pw * c.zeta_numerator[k];
    }
    c.validate();
    for (int k = 1; k <= g; ++k)
        if (c.point_count(k) != counts[k - 1])
            throw FalsificationError("zeta reconstruction failed to reproduce the point counts");
    return c;
}

CurveDatum CurveDatum::from_numerator(long long q, int g, std::vector<long long> numerator) {
    CurveDatum c;
    c.q = q;
    c.g = g;
    numerator.resize(2 * g + 1, 0);
    c.zeta_numerator = std::move(numerator);
    c.validate();
    return c;
}

long long CurveDatum::point_count(int k) const {
    // power sums of the inverse roots from the Newton recurrence
    std::vector<long long> p(k + 1, 0);
    for (int m = 1; m <= k; ++m) {
        long long s = m <= 2 * g ? m * zeta_numerator[m] : 0;
        for (int j = 1; j < m; ++j)
            if (m - j >= 1 && j <= 2 * g) s += zeta_numerator[j] * p[m - j];
        p[m] = -s;
    }
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    return qk + 1 - p[k];
}

std::vector<long long> CurveDatum::zeta_coefficients(int K) const {
    std::vector<long long> out(K + 1, 0);
    std::vector<long long> qpow(K + 1, 1);
    for (int i = 1; i <= K; ++i) qpow[i] = qpow[i - 1] * q;
    // P(s) * sum_{a} s^a * sum_{b} q^b s^b
    for (int m = 0; m <= K; ++m) {
        long long s = 0;
        for (int j = 0; j <= std::min(m, 2 * g); ++j) {
            // sum over a + b = m - j of q^b
            long long geom = 0;
            for (int bdeg = 0; bdeg <= m - j; ++bdeg) geom += qpow[bdeg];
            s += zeta_numerator[j] * geom;
        }
        out[m] = s;
    }
    return out;
}

// ---------------------------------------------------------- local systems

const LocalSystemSpec::Entry& LocalSystemSpec::entry_for_multiple(long long k) const {
    auto it = by_multiple.find(k);
    if (it != by_multiple.end()) return it->second;
    it = by_multiple.find(0); // default entry
    if (it != by_multiple.end()) return it->second;
    throw std::invalid_argument("local system data missing for character " +
                                std::to_string(k) + "*nu");
}

long long LocalSystemSpec::l_coefficient(const CurveDatum& curve, long long k, int j) const {
    const Entry& e = entry_for_multiple(k);
    if (e.trivial) {
        auto z = curve.zeta_coefficients(j);
        return z[j];
    }
    if (curve.g == 0)
        throw std::invalid_argument("genus zero admits only the trivial local system");
    if ((int)e.numerator.size() > std::max(0, 2 * curve.g - 1))
        throw std::invalid_argument("local system numerator degree exceeds 2g-2");
    return j < (int)e.numerator.size() ? e.numerator[j] : 0;
}

// ----------------------------------------------------------- coefficients

SeriesCoeff SeriesCoeff::scalar(const Rational& r) {
    SeriesCoeff c;
    if (!r.is_zero()) c.terms[""] = r;
    return c;
}

SeriesCoeff SeriesCoeff::symbol(const std::string& name) {
    SeriesCoeff c;
    c.terms[name] = Rational(1);
    return c;
}

bool SeriesCoeff::is_zero() const { return terms.empty(); }

bool SeriesCoeff::is_scalar() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
}

SeriesCoeff SeriesCoeff::operator+(const SeriesCoeff& o) const {
    SeriesCoeff r = *this;
    for (auto& [k, v] : o.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) r.terms[k] = v;
        else {
            it->second += v;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

SeriesCoeff SeriesCoeff::operator-(const SeriesCoeff& o) const {
    SeriesCoeff neg;
    for (auto& [k, v] : o.terms) neg.terms[k] = -v;
    return *this + neg;
}

SeriesCoeff SeriesCoeff::operator*(const SeriesCoeff& o) const {
    SeriesCoeff r;
    for (auto& [ka, va] : terms)
        for (auto& [kb, vb] : o.terms) {
            if (!ka.empty() && !kb.empty())
                throw std::logic_error("SeriesCoeff: product of two placeholder terms");
            std::string key = ka.empty() ? kb : ka;
            Rational v = va * vb;
            auto it = r.terms.find(key);
            if (it == r.terms.end()) r.terms[key] = v;
            else {
                it->second += v;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    return r;
}

bool SeriesCoeff::operator==(const SeriesCoeff& o) const { return terms == o.terms; }

std::string SeriesCoeff::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [k, v] : terms) {
        if (!out.empty()) out += " + ";
        if (k.empty()) out += v.str();
        else if (v == Rational(1)) out += k;
        else out += v.str() + "*" + k;
    }
    return out;
}

// ----------------------------------------------------------------- series

FormalSeries FormalSeries::one(const IVec& base_point, long long height) {
    FormalSeries s;
    s.base = base_point;
    s.height = height;
    s.coeffs[base_point] = SeriesCoeff::scalar(Rational(1));
    return s;
}

bool FormalSeries::in_window(const IVec& mu) const {
    long long h = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < base[i]) return false;
        h += mu[i] - base[i];
    }
    return h <= height;
}

SeriesCoeff FormalSeries::at(const IVec& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? SeriesCoeff{} : it->second;
}

void FormalSeries::set(const IVec& mu, const SeriesCoeff& c) {
    if (!in_window(mu))
        throw std::invalid_argument("series coefficient outside the declared window");
    if (c.is_zero()) coeffs.erase(mu);
    else coeffs[mu] = c;
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
    if (base != o.base)
        throw std::invalid_argument("series sum requires a common base point");
    FormalSeries r;
    r.base = base;
    r.height = std::min(height, o.height);
    for (auto& [mu, c] : coeffs)
        if (r.in_window(mu)) r.coeffs[mu] = c;
    for (auto& [mu, c] : o.coeffs) {
        if (!r.in_window(mu)) continue;
        auto s = r.at(mu) + c;
        if (s.is_zero()) r.coeffs.erase(mu);
        else r.coeffs[mu] = s;
    }
    return r;
}

FormalSeries FormalSeries::operator*(const FormalSeries& o) const {
    FormalSeries r;
    r.base = add(base, o.base);
    r.height = std::min(height, o.height);
    for (auto& [mu, c] : coeffs)
        for (auto& [nu, d] : o.coeffs) {
            IVec t = add(mu, nu);
            if (!r.in_window(t)) continue;
            auto s = r.at(t) + c * d;
            if (s.is_zero()) r.coeffs.erase(t);
            else r.coeffs[t] = s;
        }
    return r;
}

FormalSeries l_series(const CurveDatum& curve, const LocalSystemSpec& spec,
                      const IVec& nu, long long multiple_of_base, long long height) {
    long long step = 0;
    for (long long x : nu) step += x;
    if (step <= 0) throw std::invalid_argument("L-series direction must have positive height");

    FormalSeries s;
    s.base = IVec(nu.size(), 0);
    s.height = height;
    long long qk = 1;
    for (long long k = 0; k * step <= height; ++k) {
        long long c = spec.l_coefficient(curve, multiple_of_base, (int)k);
        if (c != 0) s.coeffs[scale(k, nu)] = SeriesCoeff::scalar(Rational(c, qk));
        qk *= curve.q;
    }
    return s;
}

namespace {

// J data for the principal case: each class is one-dimensional; returns the
// class weights together with their multiples of the primitive ray degree
std::vector<std::pair<IVec, long long>> principal_j(const NilradicalDatum& nil) {
    if (!nil.levi.levi_nodes().empty())
        throw std::invalid_argument("Eisenstein series identities require the principal case");
    std::vector<std::pair<IVec, long long>> out;
    long long gcd_h = 0;
    std::vector<long long> heights;
    for (auto& cls : nil.classes) {
        if (cls.dim() != 1)
            throw FalsificationError("principal nilradical class is not one-dimensional");
        long long h = 0;
        for (long long x : cls.theta) h += x;
        heights.push_back(h);
        gcd_h = std::gcd(gcd_h, h);
    }
    bool collinear = true;
    for (size_t i = 1; i < nil.classes.size(); ++i) {
        // collinear rays iff all thetas are multiples of the shortest one
        IVec a = nil.classes[i].theta, b = nil.classes[0].theta;
        for (size_t k = 0; k < a.size(); ++k)
            for (size_t l = 0; l < a.size(); ++l)
                if (a[k] * b[l] != a[l] * b[k]) collinear = false;
    }
    for (size_t i = 0; i < nil.classes.size(); ++i) {
        long long mult = collinear && gcd_h > 0 ? heights[i] / gcd_h : 0;
        out.emplace_back(nil.classes[i].weights.front(), mult);
    }
    return out;
}

} // namespace

FormalSeries placeholder_eis_cl(const IVec& base, long long height) {
    FormalSeries s;
    s.base = base;
    s.height = height;
    // one opaque symbol per lattice point of the window
    std::function<void(IVec, long long)> fill = [&](IVec mu, long long left) {
        std::string name = "cl[";
        for (size_t i = 0; i < mu.size(); ++i)
            name += (i ? "," : "") + std::to_string(mu[i]);
        name += "]";
        s.coeffs[mu] = SeriesCoeff::symbol(name);
        if (left == 0) return;
        for (size_t i = 0; i < mu.size(); ++i) {
            IVec up = mu;
            up[i] += 1;
            if (!s.coeffs.count(up)) fill(up, left - 1);
        }
    };
    fill(base, height);
    // the recursion fills the simplex; prune anything beyond the window
    for (auto it = s.coeffs.begin(); it != s.coeffs.end();)
        it = s.in_window(it->first) ? std::next(it) : s.coeffs.erase(it);
    return s;
}

FormalSeries placeholder_eis_cl(const MetaplecticDatum& md, const IVec& base, long long height) {
    md.require_lambda_sharp(base);
    FormalSeries s = placeholder_eis_cl(base, height);
    for (auto it = s.coeffs.begin(); it != s.coeffs.end();)
        it = md.in_lambda_sharp(it->first) ? std::next(it) : s.coeffs.erase(it);
    return s;
}

FormalSeries eis_product(const FormalSeries& eis_cl, const NilradicalDatum& nil,
                         const CurveDatum& curve, const LocalSystemSpec& spec,
                         long long height) {
    FormalSeries acc = eis_cl;
    acc.height = std::min(acc.height, height);
    for (auto& [nu, mult] : principal_j(nil))
        acc = acc * l_series(curve, spec, nu, mult, height);
    return acc;
}

SeriesCoeff eis_sum(const IVec& mu, const std::function<SeriesCoeff(const IVec&)>& eis_cl_oracle,
                    const NilradicalDatum& nil, const CurveDatum& curve,
                    const LocalSystemSpec& spec, long long window_height) {
    auto j = principal_j(nil);
    SeriesCoeff total;
    long long budget = window_height;
    std::function<void(size_t, IVec, Rational)> rec = [&](size_t idx, IVec target, Rational factor) {
        if (idx == j.size()) {
            total = total + eis_cl_oracle(target) * SeriesCoeff::scalar(factor);
            return;
        }
        auto& [nu, mult] = j[idx];
        long long step = 0;
        for (long long x : nu) step += x;
        long long qk = 1;
        for (long long k = 0; k * step <= budget; ++k) {
            long long c = spec.l_coefficient(curve, mult, (int)k);
            if (c != 0) rec(idx + 1, sub(target, scale(k, nu)), factor * Rational(c, qk));
            qk *= curve.q;
        }
    };
    rec(0, mu, Rational(1));
    return total;
}

std::vector<long long> sym_power_complex(long long h0, long long h1, long long h2, long long k) {
    if (k < 0) throw std::invalid_argument("symmetric power degree must be nonnegative");
    auto sym_binom = [](long long d, long long m) {
        Rational r(1);
        for (long long i = 1; i <= m; ++i) r *= Rational(d + i - 1, i);
        return r.to_integer();
    };
    auto ext_binom = [](long long d, long long m) {
        if (m > d) return 0ll;
        Rational r(1);
        for (long long i = 1; i <= m; ++i) r *= Rational(d - i + 1, i);
        return r.to_integer();
    };
    std::vector<long long> dims(2 * k + h1 + 1, 0);
    for (long long a = 0; a <= k; ++a)
        for (long long b = 0; a + b <= k; ++b) {
            long long c = k - a - b;
            long long v = sym_binom(h0, a) * ext_binom(h1, b) * sym_binom(h2, c);
            if (v != 0) dims[b + 2 * c] += v;
        }
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

ConstantTermReport constant_term(long long d, long long d1, int n, int g,
                                 const CurveDatum* curve, const LocalSystemSpec* spec) {
    long long e = n % 2 == 1 ? n : n / 2;
    if (d1 % e != 0)
        throw std::invalid_argument("component degree d1 must lie in eZ (e = " +
                                    std::to_string(e) + ")");
    ConstantTermReport rep;
    auto mod = [&](long long x) { return ((x % n) + n) % n; };
    if (mod(d - d1) != 0) return rep; // Zero, both divisibility gates fail together

    auto make_piece = [&](bool sigma, long long theta_m, long long shift) {
        ConstantTermReport::Piece p;
        p.sigma = sigma;
        p.theta_m = theta_m;
        if (theta_m % n != 0)
            throw FalsificationError("constant term stratum degree escaped nZ");
        p.b_size = theta_m / n;
        p.shift = shift;
        if (curve && spec) {
            long long k = p.b_size;
            const auto& entry = spec->entry_for_multiple(1);
            long long h0 = entry.trivial ? 1 : 0;
            long long h1 = entry.trivial ? 2ll * g : 2ll * g - 2;
            long long h2 = entry.trivial ? 1 : 0;
            p.ih_dims = sym_power_complex(h0, h1, h2, k);
            p.ih_internal_shift = k;
        }
        return p;
    };

    if (d1 > std::max(d, -d)) {
        rep.kind = ConstantTermReport::Kind::Zero;
    } else if (d < d1) { // then d1 <= -d
        rep.kind = ConstantTermReport::Kind::SingleSigmaIH;
        long long m = -(d + d1);
        rep.pieces.push_back(make_piece(true, m, -(m / n)));
    } else if (d1 > -d) { // and d >= d1
        rep.kind = ConstantTermReport::Kind::SingleIH;
        long long m = d - d1;
        rep.pieces.push_back(make_piece(false, m, 2 - 2ll * g + m / n));
    } else { // d1 <= min(d, -d)
        rep.kind = ConstantTermReport::Kind::Triangle;
        long long m_sigma = -(d + d1);
        long long m_ih = d - d1;
        rep.pieces.push_back(make_piece(true, m_sigma, -(m_sigma / n)));
        rep.pieces.push_back(make_piece(false, m_ih, 2 - 2ll * g + m_ih / n));
    }
    return rep;
}

} // namespace eis
