#include "marcwt/gauss_regions.hpp"

#include <cmath>
#include <limits>

namespace marcwt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double hl2(double x) { return 0.5 * std::log2(x); }
double hl2p(double x) { return 0.5 * std::log2(1.0 + x); }

// 1/2 log2(1 + p/nr): the transmitter->relay link term. A noiseless link
// (nr = 0) carries unbounded information unless the input itself is silent,
// so the min picks its finite (destination) argument.
double relay_link(double p, double nr) {
    if (p == 0) return 0;
    if (nr == 0) return kInf;
    return hl2p(p / nr);
}

void check_fraction(double v, const char* name) {
    if (!(std::isfinite(v) && v >= 0 && v <= 1))
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

}  // namespace

const char* to_string(GaussBranch b) {
    switch (b) {
        case GaussBranch::G1: return "G1";
        case GaussBranch::G2: return "G2";
        case GaussBranch::G3: return "G3";
        case GaussBranch::G4: return "G4";
    }
    return "?";
}

void OuterParams::validate() const {
    check_fraction(alpha, "OuterParams.alpha");
    check_fraction(beta1, "OuterParams.beta1");
    check_fraction(beta2, "OuterParams.beta2");
    check_fraction(gamma, "OuterParams.gamma");
}

RatePentagon df_pentagon(const GaussianScenario& s, double gamma) {
    s.validate();
    check_fraction(gamma, "gamma");
    const double leak = s.p1 + s.p2 + s.pr + s.n2;
    RatePentagon p;
    p.r1_cap = std::min(relay_link(s.p1, s.nr), hl2p((s.p1 + gamma * s.pr) / s.n1)) -
               hl2(leak / (s.p2 + s.pr + s.n2));
    p.r2_cap = std::min(relay_link(s.p2, s.nr), hl2p((s.p2 + (1.0 - gamma) * s.pr) / s.n1)) -
               hl2(leak / (s.p1 + s.pr + s.n2));
    p.sum_cap = std::min(relay_link(s.p1 + s.p2, s.nr), hl2p((s.p1 + s.p2 + s.pr) / s.n1)) -
                hl2(leak / (s.pr + s.n2));
    return p;
}

RateRegion df_region(const GaussianScenario& s, int gamma_steps) {
    if (gamma_steps < 2) throw std::domain_error("df_region: gamma_steps must be >= 2");
    std::vector<RateRegion> parts;
    parts.reserve(static_cast<std::size_t>(gamma_steps));
    for (int i = 0; i < gamma_steps; ++i) {
        const double g = static_cast<double>(i) / (gamma_steps - 1);
        parts.push_back(pentagon_vertices(df_pentagon(s, g)));
    }
    return hull_union(parts);
}

NfResult nf_region(const GaussianScenario& s) {
    s.validate();
    NfResult out{};
    if (s.n1 <= s.n2) {
        out.branch = GaussBranch::G1;
        out.rr = std::min({hl2p(s.pr / (s.p1 + s.p2 + s.n1)),
                           hl2p(s.pr / (s.p2 + s.n2)),
                           hl2p(s.pr / (s.p1 + s.n2))});
        out.pentagon.r1_cap = hl2p(s.p1 / s.n1) - hl2p((s.p1 + s.pr) / (s.p2 + s.n2)) + out.rr;
        out.pentagon.r2_cap = hl2p(s.p2 / s.n1) - hl2p((s.p2 + s.pr) / (s.p1 + s.n2)) + out.rr;
        out.pentagon.sum_cap =
            hl2p((s.p1 + s.p2) / s.n1) - hl2p((s.p1 + s.p2 + s.pr) / s.n2) + out.rr;
    } else {
        out.branch = GaussBranch::G2;
        out.rr = hl2p(s.pr / (s.p1 + s.p2 + s.n1));
        out.pentagon.r1_cap = hl2p(s.p1 / s.n1) - hl2p(s.p1 / (s.p2 + s.n2));
        out.pentagon.r2_cap = hl2p(s.p2 / s.n1) - hl2p(s.p2 / (s.p1 + s.n2));
        out.pentagon.sum_cap = hl2p((s.p1 + s.p2) / s.n1) - hl2p((s.p1 + s.p2) / s.n2);
    }
    return out;
}

CfResult cf_region(const GaussianScenario& s, double q, int r_star_steps) {
    s.validate();
    if (!(std::isfinite(q) && q > 0)) throw std::domain_error("cf_region: q must be > 0");
    if (r_star_steps < 1) throw std::domain_error("cf_region: r_star_steps must be >= 1");

    CfResult out{};
    out.q = q;
    // Both displays share the compressed-observation gain on the receiver terms.
    const double gain = (q + s.n1 + s.nr) / (s.n1 * (s.nr + q));

    if (s.n1 <= s.n2) {
        out.branch = GaussBranch::G3;
        const double rr_min = std::min({hl2p(s.pr / (s.p1 + s.p2 + s.n1)),
                                        hl2p(s.pr / (s.p2 + s.n2)),
                                        hl2p(s.pr / (s.p1 + s.n2))});
        out.r_star_max = rr_min - hl2p((s.p1 + s.p2 + s.nr) / q);
        out.feasible = out.r_star_max >= 0;
        if (!out.feasible) {
            out.region = RateRegion::empty_region();
            return out;
        }
        const double base_r1 = hl2p(s.p1 * gain) - hl2p((s.p1 + s.pr) / (s.p2 + s.n2));
        const double base_r2 = hl2p(s.p2 * gain) - hl2p((s.p2 + s.pr) / (s.p1 + s.n2));
        const double base_sum = hl2p((s.p1 + s.p2) * gain) - hl2p((s.p1 + s.p2 + s.pr) / s.n2);
        std::vector<RateRegion> parts;
        for (int i = 0; i < r_star_steps; ++i) {
            const double rs = r_star_steps == 1
                                  ? out.r_star_max
                                  : out.r_star_max * static_cast<double>(i) / (r_star_steps - 1);
            parts.push_back(pentagon_vertices({base_r1 + rs, base_r2 + rs, base_sum + rs}));
        }
        out.region = hull_union(parts);
    } else {
        out.branch = GaussBranch::G4;
        const double load = s.p1 + s.p2;
        const double q_need = load * load + load * (s.nr + s.n1) + s.nr * s.n1;
        out.feasible = s.pr > 0 ? q >= q_need / s.pr : q_need == 0;
        out.r_star_max = 0;
        if (!out.feasible) {
            out.region = RateRegion::empty_region();
            return out;
        }
        RatePentagon p;
        p.r1_cap = hl2p(s.p1 * gain) - hl2p(s.p1 / (s.p2 + s.n2));
        p.r2_cap = hl2p(s.p2 * gain) - hl2p(s.p2 / (s.p1 + s.n2));
        p.sum_cap = hl2p(load * gain) - hl2p(load / s.n2);
        out.region = pentagon_vertices(p);
    }
    return out;
}

RatePentagon outer_pentagon(const GaussianScenario& s, const OuterParams& p) {
    s.validate();
    p.validate();
    if (s.n2 < s.n1)
        throw not_applicable_error("outer bound not applicable (non-degraded): n2 < n1");
    const double a1 = s.pr * (p.alpha + p.beta1 - p.alpha * p.beta1) + p.beta1 * s.p2;
    const double a2 = s.pr * (p.alpha + p.beta2 - p.alpha * p.beta2) + p.beta2 * s.p1;
    const double c = s.n2 + std::max(a1, a2);
    const double total = s.p1 + s.p2 + s.pr;
    const double wiretap = c + p.gamma * (total + s.n2 - c);
    const double receiver = c + p.gamma * (total + s.n1 - c);
    RatePentagon out;
    out.r1_cap = hl2p(a2 / s.n1) - hl2(wiretap / (s.n2 + a1));
    out.r2_cap = hl2p(a1 / s.n1) - hl2(wiretap / (s.n2 + a2));
    out.sum_cap = hl2(receiver / s.n1) - hl2(wiretap / (s.n2 + p.alpha * s.pr));
    return out;
}

RateRegion outer_region(const GaussianScenario& s, int steps_per_axis) {
    if (steps_per_axis < 2) throw std::domain_error("outer_region: steps_per_axis must be >= 2");
    std::vector<RatePoint> pts;
    const int n = steps_per_axis;
    auto frac = [n](int i) { return static_cast<double>(i) / (n - 1); };
    for (int ia = 0; ia < n; ++ia)
        for (int ib1 = 0; ib1 < n; ++ib1)
            for (int ib2 = 0; ib2 < n; ++ib2)
                for (int ig = 0; ig < n; ++ig) {
                    OuterParams p{frac(ia), frac(ib1), frac(ib2), frac(ig)};
                    RateRegion r = pentagon_vertices(outer_pentagon(s, p));
                    pts.insert(pts.end(), r.vertices().begin(), r.vertices().end());
                }
    return RateRegion::from_points(std::move(pts));
}

RatePentagon baseline_region(const GaussianScenario& s) {
    s.validate();
    RatePentagon p;
    p.r1_cap = hl2p(s.p1 / s.n1) - hl2p(s.p1 / (s.n2 + s.p2));
    p.r2_cap = hl2p(s.p2 / s.n1) - hl2p(s.p2 / (s.n2 + s.p1));
    p.sum_cap = hl2p((s.p1 + s.p2) / s.n1) - hl2p((s.p1 + s.p2) / s.n2);
    return p;
}

GaussianScenario figure_scenario(int id) {
    GaussianScenario s{5, 6, 20, 0, 2, 14};
    switch (id) {
        case 2: s.nr = 5.0; break;
        case 3: s.nr = 2.3; break;
        case 4: s.nr = 1.6; break;
        case 5: s.nr = 0.0; break;
        default: throw std::domain_error("figure id must be 2, 3, 4, or 5");
    }
    return s;
}

}  // namespace marcwt
