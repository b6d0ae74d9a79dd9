#include "marcwt/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace marcwt {

namespace {

constexpr double kPivotTol = 1e-12;

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0; }

}  // namespace

void GaussianScenario::validate() const {
    if (!finite_nonneg(p1) || !finite_nonneg(p2) || !finite_nonneg(pr))
        throw std::domain_error("GaussianScenario: powers must be finite and >= 0");
    if (!finite_nonneg(nr)) throw std::domain_error("GaussianScenario: nr must be finite and >= 0");
    if (!(std::isfinite(n1) && n1 > 0) || !(std::isfinite(n2) && n2 > 0))
        throw std::domain_error("GaussianScenario: n1 and n2 must be finite and > 0");
}

int Covariance::index_of(GaussVar v) const {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw std::domain_error("Covariance: variable not present in this structure");
    return static_cast<int>(it - vars.begin());
}

Covariance assemble_covariance(const GaussianScenario& s, const InputStructure& structure) {
    s.validate();

    const auto* df = std::get_if<DfSuperposition>(&structure);
    const auto* comp = std::get_if<IndependentWithCompression>(&structure);
    if (df) {
        auto frac = [](double v) { return std::isfinite(v) && v >= 0 && v <= 1; };
        if (!frac(df->gamma) || !frac(df->alpha) || !frac(df->beta))
            throw std::domain_error("DfSuperposition: gamma, alpha, beta must lie in [0,1]");
    }
    if (comp && !(std::isfinite(comp->q) && comp->q > 0))
        throw std::domain_error("IndependentWithCompression: q must be > 0");

    std::vector<GaussVar> vars = {GaussVar::X1, GaussVar::X2, GaussVar::Xr,
                                  GaussVar::Yr, GaussVar::Y, GaussVar::Z};
    if (comp) vars.push_back(GaussVar::Yrhat);
    if (df) {
        vars.push_back(GaussVar::V1);
        vars.push_back(GaussVar::V2);
    }

    // Signal covariances among the inputs and the DF components. The mixed
    // terms sqrt((1-alpha) p1 gamma pr) are the superposition coefficients
    // multiplied through; the product form is exact at gamma in {0,1} too
    // (the vanished component simply decorrelates).
    const double g = df ? df->gamma : 0.0;
    const double s1 = df ? std::sqrt((1.0 - df->alpha) * s.p1 * g * s.pr) : 0.0;
    const double s2 = df ? std::sqrt((1.0 - df->beta) * s.p2 * (1.0 - g) * s.pr) : 0.0;

    auto input_cov = [&](GaussVar a, GaussVar b) -> double {
        if (a == b) {
            switch (a) {
                case GaussVar::X1: return s.p1;
                case GaussVar::X2: return s.p2;
                case GaussVar::Xr: return s.pr;
                case GaussVar::V1: return g * s.pr;
                case GaussVar::V2: return (1.0 - g) * s.pr;
                default: return 0;
            }
        }
        auto pair = [&](GaussVar x, GaussVar y) { return (a == x && b == y) || (a == y && b == x); };
        if (pair(GaussVar::X1, GaussVar::V1) || pair(GaussVar::X1, GaussVar::Xr)) return s1;
        if (pair(GaussVar::X2, GaussVar::V2) || pair(GaussVar::X2, GaussVar::Xr)) return s2;
        if (pair(GaussVar::Xr, GaussVar::V1)) return g * s.pr;
        if (pair(GaussVar::Xr, GaussVar::V2)) return (1.0 - g) * s.pr;
        return 0;
    };

    // Outputs as sums of inputs plus noise; Yrhat reuses Yr's relay noise.
    auto components = [](GaussVar v) -> std::vector<GaussVar> {
        switch (v) {
            case GaussVar::Yr:
            case GaussVar::Yrhat: return {GaussVar::X1, GaussVar::X2};
            case GaussVar::Y:
            case GaussVar::Z: return {GaussVar::X1, GaussVar::X2, GaussVar::Xr};
            default: return {v};
        }
    };
    auto noise_cov = [&](GaussVar a, GaussVar b) -> double {
        auto is_relay_obs = [](GaussVar v) { return v == GaussVar::Yr || v == GaussVar::Yrhat; };
        if (is_relay_obs(a) && is_relay_obs(b)) {
            double n = s.nr;
            if (a == GaussVar::Yrhat && b == GaussVar::Yrhat) n += comp ? comp->q : 0;
            return n;
        }
        if (a == b && a == GaussVar::Y) return s.n1;
        if (a == b && a == GaussVar::Z) return s.n2;
        return 0;
    };

    const int n = static_cast<int>(vars.size());
    Covariance cov;
    cov.vars = vars;
    cov.m.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double v = noise_cov(vars[i], vars[j]);
            for (GaussVar a : components(vars[i]))
                for (GaussVar b : components(vars[j])) v += input_cov(a, b);
            cov.m[static_cast<std::size_t>(i) * n + j] = v;
            cov.m[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    for (int i = 0; i < n; ++i)
        if (cov.at(i, i) < 0)
            throw std::logic_error("assemble_covariance: negative variance (internal consistency)");
    return cov;
}

namespace {

// log2 of the determinant of the principal submatrix indexed by `idx`;
// partial-pivot elimination, pivots under 1e-12 mean a degenerate block.
double logdet2(const Covariance& cov, const std::vector<int>& idx) {
    const int n = static_cast<int>(idx.size());
    if (n == 0) return 0.0;
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = cov.at(idx[i], idx[j]);

    double acc = 0;
    bool negative = false;
    for (int k = 0; k < n; ++k) {
        int piv_row = k;
        double best = std::abs(m[static_cast<std::size_t>(k) * n + k]);
        for (int r = k + 1; r < n; ++r) {
            double v = std::abs(m[static_cast<std::size_t>(r) * n + k]);
            if (v > best) {
                best = v;
                piv_row = r;
            }
        }
        if (best < kPivotTol)
            throw singular_mi_error("infinite or undefined mutual information: singular covariance block");
        if (piv_row != k) {
            for (int c = 0; c < n; ++c)
                std::swap(m[static_cast<std::size_t>(k) * n + c], m[static_cast<std::size_t>(piv_row) * n + c]);
            negative = !negative;
        }
        const double piv = m[static_cast<std::size_t>(k) * n + k];
        if (piv < 0) negative = !negative;
        acc += std::log2(std::abs(piv));
        for (int r = k + 1; r < n; ++r) {
            const double f = m[static_cast<std::size_t>(r) * n + k] / piv;
            for (int c = k + 1; c < n; ++c)
                m[static_cast<std::size_t>(r) * n + c] -= f * m[static_cast<std::size_t>(k) * n + c];
        }
    }
    if (negative)
        throw singular_mi_error("infinite or undefined mutual information: indefinite covariance block");
    return acc;
}

std::vector<int> resolve(const Covariance& cov, std::span<const GaussVar> set) {
    std::vector<int> idx;
    idx.reserve(set.size());
    for (GaussVar v : set) idx.push_back(cov.index_of(v));
    return idx;
}

}  // namespace

double gaussian_cond_mi(const Covariance& cov,
                        std::span<const GaussVar> a,
                        std::span<const GaussVar> b,
                        std::span<const GaussVar> c) {
    if (a.empty() || b.empty()) throw std::domain_error("gaussian_cond_mi: A and B must be non-empty");
    std::set<GaussVar> seen;
    for (auto set : {a, b, c})
        for (GaussVar v : set)
            if (!seen.insert(v).second)
                throw std::domain_error("gaussian_cond_mi: variable sets must be pairwise disjoint");

    const auto ia = resolve(cov, a), ib = resolve(cov, b), ic = resolve(cov, c);
    auto join = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> out = x;
        out.insert(out.end(), y.begin(), y.end());
        return out;
    };
    const double ld_ac = logdet2(cov, join(ia, ic));
    const double ld_bc = logdet2(cov, join(ib, ic));
    const double ld_c = logdet2(cov, ic);
    const double ld_abc = logdet2(cov, join(join(ia, ib), ic));
    return 0.5 * (ld_ac + ld_bc - ld_c - ld_abc);
}

}  // namespace marcwt
