#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace marcwt {

// Channel parameters of the Gaussian model
//   Yr = X1 + X2 + Zr,   Y = X1 + X2 + Xr + Z1,   Z = X1 + X2 + Xr + Z2
// with noise variances nr, n1, n2 and transmit powers p1, p2, pr.
struct GaussianScenario {
    double p1 = 0, p2 = 0, pr = 0;
    double nr = 0, n1 = 0, n2 = 0;

    void validate() const;  // throws std::domain_error on violation
};

// How the channel inputs are generated, which fixes the joint covariance.
struct DfSuperposition {
    // Xr = V1 + V2 with Var(V1) = gamma*pr, Var(V2) = (1-gamma)*pr;
    // X1 = sqrt((1-alpha)p1/(gamma*pr)) V1 + X10, X10 ~ N(0, alpha*p1);
    // X2 mirrors with beta and V2.
    double gamma = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
};
struct IndependentFullPower {};
struct IndependentWithCompression {
    double q = 0;  // Yrhat = Yr + Zq with Var(Zq) = q > 0
};
using InputStructure = std::variant<DfSuperposition, IndependentFullPower, IndependentWithCompression>;

enum class GaussVar { X1, X2, Xr, Yr, Y, Z, Yrhat, V1, V2 };

struct Covariance {
    std::vector<GaussVar> vars;  // ordered
    std::vector<double> m;       // row-major vars.size() x vars.size()

    int dim() const { return static_cast<int>(vars.size()); }
    double at(int i, int j) const { return m[static_cast<std::size_t>(i) * vars.size() + j]; }
    int index_of(GaussVar v) const;  // throws std::domain_error if absent
};

// Raised when a requested mutual information is infinite or undefined
// because a principal submatrix is singular (pivot below 1e-12).
struct singular_mi_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Joint covariance of (X1, X2, Xr, Yr, Y, Z [, Yrhat][, V1, V2]).
// Yrhat is appended for the compression structure, V1/V2 for DF.
Covariance assemble_covariance(const GaussianScenario& s, const InputStructure& structure);

// I(A;B|C) = 1/2 log2( det S_{A∪C} det S_{B∪C} / (det S_C det S_{A∪B∪C}) ),
// det over the empty set is 1. Throws singular_mi_error on degeneracy.
double gaussian_cond_mi(const Covariance& cov,
                        std::span<const GaussVar> a,
                        std::span<const GaussVar> b,
                        std::span<const GaussVar> c = {});

}  // namespace marcwt
