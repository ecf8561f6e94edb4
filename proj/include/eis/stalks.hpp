#pragma once

#include "eis/laurent.hpp"
#include "eis/rep.hpp"

namespace eis {

// theta = sum of n_m copies of theta_m, all parts nonzero in the positive cone
struct Decomposition {
    std::vector<std::pair<IVec, long long>> parts;

    long long size() const {
        long long s = 0;
        for (auto& [t, n] : parts) { (void)t; s += n; }
        return s;
    }
    IVec total(size_t dim) const {
        IVec t(dim, 0);
        for (auto& [part, n] : parts) t = add(t, scale(n, part));
        return t;
    }
};

// nonnegative J-assignment over a nilradical datum
struct KostantElement {
    std::vector<long long> counts; // parallel to nil.classes
    IVec theta;
    long long size() const {
        long long s = 0;
        for (long long c : counts) s += c;
        return s;
    }
};

std::vector<KostantElement> enumerate_b_theta(const NilradicalDatum& nil, const IVec& theta);

struct StalkReport {
    bool vanishes = false;
    LaurentPoly shift_polynomial;
    struct Part {
        IVec theta;
        long long count;
        bool sharp; // theta in the image lattice
        std::vector<long long> sym_dims; // index i -> dim Sym^i(u)_theta
    };
    std::vector<Part> parts;
};

// graded stalk data for one stratum decomposition; shifts recorded as
// powers of v, one [k] contributing v^k
StalkReport stalk_poincare(const NilradicalDatum& nil, const Decomposition& dec);

struct ZastavaTop {
    long long degree_bound = 0;  // <theta, 2(rho - rho_M)>
    std::map<IVec, long long> top_module; // Levi decomposition of U(u)_theta
    long long top_dim = 0;
    bool vanishes = false;
};

ZastavaTop zastava_top(const NilradicalDatum& nil, const IVec& theta);

} // namespace eis
