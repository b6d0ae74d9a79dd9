#pragma once

#include <stdexcept>
#include <string>

#include "marcwt/gaussian.hpp"
#include "marcwt/geometry.hpp"

namespace marcwt {

// Raised when a bound's standing hypothesis does not hold for the given
// inputs (e.g. the degraded outer bound with n2 < n1).
struct not_applicable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GaussBranch { G1, G2, G3, G4 };
const char* to_string(GaussBranch b);

struct OuterParams {
    double alpha = 0, beta1 = 0, beta2 = 0, gamma = 0;  // all in [0,1]
    void validate() const;
};

// Decode-forward pentagon at relay power split gamma (alpha = beta = 1,
// where the per-user caps are maximal). nr = 0 sends the relay-observation
// terms to +infinity so each min resolves to the destination term.
RatePentagon df_pentagon(const GaussianScenario& s, double gamma);

// Convex closure of df_pentagon over a uniform gamma grid with endpoints.
RateRegion df_region(const GaussianScenario& s, int gamma_steps);

struct NfResult {
    GaussBranch branch;    // G1 iff n1 <= n2 (tie resolves to G1)
    RatePentagon pentagon;
    double rr;             // relay noise rate; for G2 reported as I(Xr;Y)
};
NfResult nf_region(const GaussianScenario& s);

struct CfResult {
    GaussBranch branch;    // G3 iff n1 <= n2
    RateRegion region;     // G3: hull over the R* grid; G4: single pentagon
    bool feasible;
    double r_star_max;     // G3 only; 0 on G4
    double q;
};
CfResult cf_region(const GaussianScenario& s, double q, int r_star_steps);

// Degraded outer bound (requires n2 >= n1; throws not_applicable_error).
RatePentagon outer_pentagon(const GaussianScenario& s, const OuterParams& p);
RateRegion outer_region(const GaussianScenario& s, int steps_per_axis);

// No-relay baseline: two-user Gaussian multiple-access wiretap region.
RatePentagon baseline_region(const GaussianScenario& s);

// Named scenarios of the numerical study: p1=5, p2=6, pr=20, n1=2, n2=14,
// with nr = 5, 2.3, 1.6, 0 for ids 2..5; q defaults to 200 alongside.
GaussianScenario figure_scenario(int id);
inline constexpr double kFigureQ = 200.0;

}  // namespace marcwt
