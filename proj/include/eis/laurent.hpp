#pragma once

#include <map>
#include <string>

#include "eis/errors.hpp"

namespace eis {

// Laurent polynomial in one variable v with integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long c) { if (c != 0) c_[0] = c; }

    static LaurentPoly monomial(int exp, long long coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    const std::map<int, long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    long long coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        auto it = c_.find(exp);
        if (it == c_.end()) c_[exp] = coeff;
        else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.c_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.c_) r.add_term(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int by) const {
        LaurentPoly r;
        for (auto& [e, c] : c_) r.c_[e + by] = c;
        return r;
    }

    LaurentPoly pow(long long k) const {
        LaurentPoly r(1);
        for (long long i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool nonnegative() const {
        for (auto& [e, c] : c_) { (void)e; if (c < 0) return false; }
        return true;
    }

    void assert_nonnegative(const std::string& where) const {
        if (!nonnegative())
            throw FalsificationError(where + ": negative Laurent coefficient in " + str());
    }

    // descending exponents, e.g. "v^2+1+v^-2", "2v+3"
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            long long c = it->second;
            int e = it->first;
            if (!out.empty()) out += c >= 0 ? "+" : "-";
            else if (c < 0) out += "-";
            long long a = c < 0 ? -c : c;
            if (e == 0) out += std::to_string(a);
            else {
                if (a != 1) out += std::to_string(a);
                out += "v";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, long long> c_;
};

} // namespace eis
