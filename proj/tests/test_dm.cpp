#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "marcwt/dm.hpp"
#include "marcwt/gauss_regions.hpp"

using namespace marcwt;

namespace {

// Binary entropy values used by the worked examples below.
constexpr double kH11 = 0.499915958164528;    // H(0.11)
constexpr double kH25 = 0.8112781244591328;   // H(0.25)
constexpr double kH30 = 0.8812908992306927;   // H(0.30)
constexpr double kH375 = 0.9544340029249649;  // H(0.375)

ConditionalPmf bern(const std::string& name, double p) {
    return ConditionalPmf({{name, 2}}, 0, {1 - p, p});
}

ConditionalPmf unit(const std::string& name) {
    return ConditionalPmf({{name, 1}}, 0, {1.0});
}

// P(Y,Yr,Z | X1,X2,Xr) from a per-cell filler that writes weights into the
// (y, yr, z) block, z fastest.
ConditionalPmf make_channel(int ny, int nyr, int nz,
                            const std::function<void(int, int, int, std::vector<double>&)>& cell) {
    std::vector<double> probs;
    std::vector<double> block;
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int xr = 0; xr < 2; ++xr) {
                block.assign(static_cast<std::size_t>(ny) * nyr * nz, 0.0);
                cell(x1, x2, xr, block);
                probs.insert(probs.end(), block.begin(), block.end());
            }
    return ConditionalPmf({{"X1", 2}, {"X2", 2}, {"Xr", 2}, {"Y", ny}, {"Yr", nyr}, {"Z", nz}},
                          3, std::move(probs));
}

std::size_t slot(int y, int yr, int z, int nyr, int nz) {
    return (static_cast<std::size_t>(y) * nyr + yr) * nz + z;
}

// Y = 2(X1^X2) + Xr, Yr = X1^X2, Z = X1 ^ Bernoulli(0.11).
ConditionalPmf df_example_channel(bool const_z) {
    const int nz = const_z ? 1 : 2;
    return make_channel(4, 2, nz, [=](int x1, int x2, int xr, std::vector<double>& c) {
        const int s = x1 ^ x2, y = 2 * s + xr;
        if (const_z) {
            c[slot(y, s, 0, 2, nz)] = 1.0;
        } else {
            c[slot(y, s, x1, 2, nz)] = 0.89;
            c[slot(y, s, x1 ^ 1, 2, nz)] = 0.11;
        }
    });
}

DmFactorization df_example(bool const_z = false) {
    DmFactorization f;
    f.theorem = DmTheorem::T1;
    f.factors.emplace("V1", bern("V1", 0.5));
    f.factors.emplace("V2", bern("V2", 0.5));
    f.factors.emplace("X1|V1",
                      ConditionalPmf({{"V1", 2}, {"X1", 2}}, 1, {0.75, 0.25, 0.25, 0.75}));
    f.factors.emplace("X2|V2",
                      ConditionalPmf({{"V2", 2}, {"X2", 2}}, 1, {0.75, 0.25, 0.25, 0.75}));
    f.factors.emplace("Xr|V1,V2", ConditionalPmf({{"V1", 2}, {"V2", 2}, {"Xr", 2}}, 2,
                                                 {1, 0, 0, 1, 0, 1, 1, 0}));
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr", df_example_channel(const_z));
    return f;
}

bool caps_close(const RatePentagon& p, double r1, double r2, double s, double tol = 1e-9) {
    return std::fabs(p.r1_cap - r1) < tol && std::fabs(p.r2_cap - r2) < tol &&
           std::fabs(p.sum_cap - s) < tol;
}

ConditionalPmf random_stochastic(std::vector<Variable> vars, int given, std::mt19937& rng) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::size_t cell = 1, cells = 1;
    for (std::size_t i = 0; i < vars.size(); ++i)
        (static_cast<int>(i) < given ? cells : cell) *= static_cast<std::size_t>(vars[i].size);
    std::vector<double> probs(cells * cell);
    for (std::size_t c = 0; c < cells; ++c) {
        double total = 0;
        for (std::size_t k = 0; k < cell; ++k) total += (probs[c * cell + k] = unif(rng));
        for (std::size_t k = 0; k < cell; ++k) probs[c * cell + k] /= total;
    }
    return ConditionalPmf(std::move(vars), given, std::move(probs));
}

// Random channel that factors as P(Y,Yr|X1,X2,Xr) P(Z|Y), hence is degraded.
ConditionalPmf random_degraded_channel(std::mt19937& rng, int ny, int nyr, int nz) {
    ConditionalPmf front = random_stochastic(
        {{"X1", 2}, {"X2", 2}, {"Xr", 2}, {"Y", ny}, {"Yr", nyr}}, 3, rng);
    ConditionalPmf tail = random_stochastic({{"Y", ny}, {"Z", nz}}, 1, rng);
    return make_channel(ny, nyr, nz, [&](int x1, int x2, int xr, std::vector<double>& c) {
        for (int y = 0; y < ny; ++y)
            for (int yr = 0; yr < nyr; ++yr) {
                const int fo[] = {x1, x2, xr, y, yr};
                for (int z = 0; z < nz; ++z) {
                    const int to[] = {y, z};
                    c[slot(y, yr, z, nyr, nz)] = front.value(fo) * tail.value(to);
                }
            }
    });
}

DmFactorization random_t1(std::mt19937& rng, const ConditionalPmf& channel) {
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    DmFactorization f;
    f.theorem = DmTheorem::T1;
    f.factors.emplace("V1", bern("V1", unif(rng)));
    f.factors.emplace("V2", bern("V2", unif(rng)));
    f.factors.emplace("X1|V1", random_stochastic({{"V1", 2}, {"X1", 2}}, 1, rng));
    f.factors.emplace("X2|V2", random_stochastic({{"V2", 2}, {"X2", 2}}, 1, rng));
    f.factors.emplace("Xr|V1,V2", random_stochastic({{"V1", 2}, {"V2", 2}, {"Xr", 2}}, 2, rng));
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr", channel);
    return f;
}

// The matching outer-bound factorization: constant U, same input marginal.
DmFactorization matched_t41(const DmFactorization& t1) {
    const JointPmf joint = compose(t1);
    const JointPmf inputs = marginalize(joint, {"X1", "X2", "Xr"});
    DmFactorization f;
    f.theorem = DmTheorem::T41;
    f.factors.emplace("U,X1,X2,Xr",
                      ConditionalPmf({{"U", 1}, {"X1", 2}, {"X2", 2}, {"Xr", 2}}, 0,
                                     inputs.probs()));
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr", t1.factors.at("Y,Yr,Z|X1,X2,Xr"));
    return f;
}

}  // namespace

TEST_CASE("conditional table validation") {
    CHECK_THROWS_AS(ConditionalPmf({}, 0, {}), std::domain_error);
    CHECK_THROWS_AS(ConditionalPmf({{"X", 2}}, 1, {0.5, 0.5}), std::domain_error);  // no outputs
    CHECK_THROWS_AS(ConditionalPmf({{"X", 0}}, 0, {}), std::domain_error);
    CHECK_THROWS_AS(ConditionalPmf({{"X", 2}, {"X", 2}}, 1, {1, 0, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(ConditionalPmf({{"X", 2}}, 0, {0.5}), std::domain_error);  // wrong length
    CHECK_THROWS_AS(ConditionalPmf({{"X", 2}}, 0, {0.7, 0.4}), std::domain_error);  // cell sum
    CHECK_THROWS_AS(ConditionalPmf({{"X", 2}}, 0, {-0.1, 1.1}), std::domain_error);
    // Per-cell normalization: second given cell does not sum to 1.
    CHECK_THROWS_AS(ConditionalPmf({{"V", 2}, {"X", 2}}, 1, {0.5, 0.5, 0.6, 0.6}),
                    std::domain_error);
    ConditionalPmf ok({{"V", 2}, {"X", 2}}, 1, {0.25, 0.75, 1.0, 0.0});
    CHECK(ok.given_count() == 1);
    const int outcome[] = {0, 1};
    CHECK(ok.value(outcome) == doctest::Approx(0.75));
    const int bad_len[] = {0};
    CHECK_THROWS_AS(ok.value(bad_len), std::domain_error);
    const int out_of_range[] = {0, 2};
    CHECK_THROWS_AS(ok.value(out_of_range), std::domain_error);
}

TEST_CASE("factor sets are validated during composition") {
    CHECK(required_factors(DmTheorem::T1).size() == 6);
    CHECK(required_factors(DmTheorem::T2).size() == 4);
    CHECK(required_factors(DmTheorem::T3).size() == 5);
    CHECK(required_factors(DmTheorem::T41).size() == 2);

    DmFactorization f = df_example();
    CHECK_NOTHROW(compose(f));

    DmFactorization missing = df_example();
    missing.factors.erase("V2");
    CHECK_THROWS_AS(compose(missing), std::domain_error);

    DmFactorization extra = df_example();
    extra.factors.emplace("Q", bern("Q", 0.5));
    CHECK_THROWS_AS(compose(extra), std::domain_error);

    // A table whose variables disagree with its signature is rejected.
    DmFactorization mismatched = df_example();
    mismatched.factors.insert_or_assign("X1|V1", bern("X1", 0.5));
    CHECK_THROWS_AS(compose(mismatched), std::domain_error);

    // Alphabet sizes must be consistent across factors.
    DmFactorization inconsistent = df_example();
    inconsistent.factors.insert_or_assign(
        "X1|V1", ConditionalPmf({{"V1", 3}, {"X1", 2}}, 1, {1, 0, 0, 1, 0.5, 0.5}));
    CHECK_THROWS_AS(compose(inconsistent), std::domain_error);
}

TEST_CASE("composition produces the expected joint") {
    const JointPmf j = compose(df_example());
    REQUIRE(j.variables().size() == 8);
    CHECK(j.variables()[0].name == "V1");
    CHECK(j.variables()[4].name == "Xr");
    CHECK(j.variables()[5].size == 4);  // Y
    CHECK(j.size() == 512);
    const JointPmf xr = marginalize(j, {"Xr"});
    CHECK(xr.probs()[1] == doctest::Approx(0.5).epsilon(1e-12));
    // Xr is the parity of (V1, V2), so it determines them jointly with V1.
    CHECK(cond_mutual_info(j, {"V2"}, {"Xr"}, {"V1"}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("decode-forward caps on the superposition example") {
    CHECK(caps_close(theorem1_pentagon(df_example()),
                     0.3111940826236609, 0.8112781244591328, 0.4543499610894931));
    // Without a wiretapper the subtrahends vanish.
    CHECK(caps_close(theorem1_pentagon(df_example(true)), kH25, kH25, kH375));
    // Theorem tag must match the evaluator.
    DmFactorization wrong = df_example();
    wrong.theorem = DmTheorem::T2;
    CHECK_THROWS_AS(theorem1_pentagon(wrong), std::domain_error);
}

TEST_CASE("decode-forward degenerates to the no-relay region") {
    // Constant relay chain and Yr = Y: the caps collapse to the two-user form.
    DmFactorization f;
    f.theorem = DmTheorem::T1;
    f.factors.emplace("V1", unit("V1"));
    f.factors.emplace("V2", unit("V2"));
    f.factors.emplace("X1|V1", ConditionalPmf({{"V1", 1}, {"X1", 2}}, 1, {0.5, 0.5}));
    f.factors.emplace("X2|V2", ConditionalPmf({{"V2", 1}, {"X2", 2}}, 1, {0.5, 0.5}));
    f.factors.emplace("Xr|V1,V2", ConditionalPmf({{"V1", 1}, {"V2", 1}, {"Xr", 1}}, 2, {1.0}));
    std::vector<double> probs;
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2) {
            // Xr has a single value; Y = Yr = X1^X2; Z = X1 ^ Bernoulli(0.11).
            std::vector<double> block(2 * 2 * 2, 0.0);
            const int s = x1 ^ x2;
            block[(s * 2 + s) * 2 + x1] = 0.89;
            block[(s * 2 + s) * 2 + (x1 ^ 1)] = 0.11;
            probs.insert(probs.end(), block.begin(), block.end());
        }
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr",
                      ConditionalPmf({{"X1", 2}, {"X2", 2}, {"Xr", 1}, {"Y", 2}, {"Yr", 2}, {"Z", 2}},
                                     3, std::move(probs)));
    CHECK(caps_close(theorem1_pentagon(f), kH11, 1.0, kH11, 1e-12));
}

TEST_CASE("noise-forwarding branches") {
    // Helpful relay: Y sees Xr cleanly, the wiretapper sees an erased copy.
    DmFactorization f;
    f.theorem = DmTheorem::T2;
    f.factors.emplace("X1", bern("X1", 0.5));
    f.factors.emplace("X2", bern("X2", 0.5));
    f.factors.emplace("Xr", bern("Xr", 0.5));
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr",
                      make_channel(8, 1, 9, [](int x1, int x2, int xr, std::vector<double>& c) {
                          const int y = 4 * x1 + 2 * x2 + xr;
                          c[slot(y, 0, y, 1, 9)] = 0.5;
                          c[slot(y, 0, 8, 1, 9)] = 0.5;
                      }));
    Theorem2Result r = theorem2_region(f);
    CHECK(r.branch == DmBranch::L1);
    CHECK(std::string(to_string(r.branch)) == "L1");
    CHECK(r.rr == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(caps_close(r.pentagon, 0.5, 0.5, 1.0));

    // Useless relay link: the wiretapper decodes Xr, the receiver ignores it.
    DmFactorization g;
    g.theorem = DmTheorem::T2;
    g.factors.emplace("X1", bern("X1", 0.5));
    g.factors.emplace("X2", bern("X2", 0.5));
    g.factors.emplace("Xr", bern("Xr", 0.5));
    g.factors.emplace("Y,Yr,Z|X1,X2,Xr",
                      make_channel(2, 1, 2, [](int x1, int x2, int xr, std::vector<double>& c) {
                          c[slot(x1 ^ x2, 0, xr, 1, 2)] = 1.0;
                      }));
    Theorem2Result r2 = theorem2_region(g);
    CHECK(r2.branch == DmBranch::L2);
    CHECK(r2.rr == doctest::Approx(0.0));
    CHECK(caps_close(r2.pentagon, 1.0, 1.0, 1.0));

    DmFactorization wrong = g;
    wrong.theorem = DmTheorem::T1;
    CHECK_THROWS_AS(theorem2_region(wrong), std::domain_error);
}

namespace {

// Yr = 2 X1 + X2, Y = 2(X1^X2) + Xr, Z = Xr ^ Bernoulli(0.11); the quantizer
// flips the high bit of Yr with probability e.
DmFactorization compression_example(double e, bool relay_reaches_y = true) {
    DmFactorization f;
    f.theorem = DmTheorem::T3;
    f.factors.emplace("X1", bern("X1", 0.5));
    f.factors.emplace("X2", bern("X2", 0.5));
    f.factors.emplace("Xr", bern("Xr", 0.5));
    const int ny = relay_reaches_y ? 4 : 2;
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr",
                      make_channel(ny, 4, 2, [=](int x1, int x2, int xr, std::vector<double>& c) {
                          const int yr = 2 * x1 + x2;
                          const int y = relay_reaches_y ? 2 * (x1 ^ x2) + xr : x1 ^ x2;
                          c[slot(y, yr, xr, 4, 2)] = 0.89;
                          c[slot(y, yr, xr ^ 1, 4, 2)] = 0.11;
                      }));
    std::vector<double> q;
    for (int yr = 0; yr < 4; ++yr)
        for (int xr = 0; xr < 2; ++xr) {
            const int high = yr >> 1;
            q.push_back(high == 0 ? 1 - e : e);  // P(Yrhat = 0)
            q.push_back(high == 0 ? e : 1 - e);
        }
    f.factors.emplace("Yrhat|Yr,Xr",
                      ConditionalPmf({{"Yr", 4}, {"Xr", 2}, {"Yrhat", 2}}, 2, std::move(q)));
    return f;
}

}  // namespace

TEST_CASE("compress-forward with a helpful relay link") {
    const double r_star_max_expected = kH30 - kH11;  // 0.3813749410661647
    DmFactorization f = compression_example(0.3);
    Theorem3Result base = theorem3_region(f);
    CHECK(base.branch == DmBranch::L3);
    CHECK(std::string(to_string(base.branch)) == "L3");
    CHECK(base.feasible);
    CHECK(base.r_star_max == doctest::Approx(r_star_max_expected).epsilon(1e-9));
    CHECK(caps_close(base.pentagon, kH11, kH11, 1 - kH30 + kH11));

    // The caps shift affinely with the noise-injection rate.
    f.r_star = base.r_star_max - 1e-9;
    Theorem3Result shifted = theorem3_region(f);
    CHECK(shifted.feasible);
    CHECK(shifted.pentagon.r1_cap ==
          doctest::Approx(base.pentagon.r1_cap + f.r_star).epsilon(1e-9));

    f.r_star = base.r_star_max + 1e-6;
    Theorem3Result beyond = theorem3_region(f);
    CHECK_FALSE(beyond.feasible);
    CHECK(pentagon_vertices(beyond.pentagon).is_empty());

    f.r_star = -0.25;
    CHECK_THROWS_AS(theorem3_region(f), std::domain_error);
    f.r_star = std::nan("");
    CHECK_THROWS_AS(theorem3_region(f), std::domain_error);

    DmFactorization wrong = compression_example(0.3);
    wrong.theorem = DmTheorem::T2;
    CHECK_THROWS_AS(theorem3_region(wrong), std::domain_error);
}

TEST_CASE("compress-forward noise-injection sweep") {
    DmFactorization f = compression_example(0.3);
    RateRegion swept = theorem3_rstar_sweep(f, 21);
    CHECK_FALSE(swept.is_empty());
    CHECK(support(swept, 1, 0) == doctest::Approx(kH30).epsilon(1e-9));
    CHECK(support(swept, 0, 1) == doctest::Approx(kH30).epsilon(1e-9));
    CHECK(support(swept, 1, 1) == doctest::Approx(1.0).epsilon(1e-9));
    // A single step lands on the largest feasible injection rate.
    RateRegion top = theorem3_rstar_sweep(f, 1);
    CHECK(contains(swept, top, 1e-12));
    CHECK(support(top, 1, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(theorem3_rstar_sweep(f, 0), std::domain_error);
}

TEST_CASE("compress-forward without a relay-to-receiver link") {
    // The receiver never sees Xr; a pure-noise quantizer costs nothing.
    DmFactorization free_quant = compression_example(0.5, false);
    Theorem3Result ok = theorem3_region(free_quant);
    CHECK(ok.branch == DmBranch::L4);
    CHECK(ok.feasible);
    CHECK(ok.r_star_max == 0.0);
    CHECK(caps_close(ok.pentagon, 1.0, 1.0, 1.0));
    RateRegion region = theorem3_rstar_sweep(free_quant, 21);
    CHECK(area(region) == doctest::Approx(0.5).epsilon(1e-9));

    // A meaningful quantizer needs link rate the receiver does not have.
    DmFactorization stuck = compression_example(0.3, false);
    Theorem3Result bad = theorem3_region(stuck);
    CHECK(bad.branch == DmBranch::L4);
    CHECK_FALSE(bad.feasible);
    CHECK(theorem3_rstar_sweep(stuck, 21).is_empty());
}

TEST_CASE("pure-noise quantizer at full injection matches noise forwarding") {
    DmFactorization f = compression_example(0.5);
    Theorem3Result probe = theorem3_region(f);
    REQUIRE(probe.branch == DmBranch::L3);
    f.r_star = probe.r_star_max;
    Theorem3Result full = theorem3_region(f);
    REQUIRE(full.feasible);

    DmFactorization nf;
    nf.theorem = DmTheorem::T2;
    nf.factors.emplace("X1", f.factors.at("X1"));
    nf.factors.emplace("X2", f.factors.at("X2"));
    nf.factors.emplace("Xr", f.factors.at("Xr"));
    nf.factors.emplace("Y,Yr,Z|X1,X2,Xr", f.factors.at("Y,Yr,Z|X1,X2,Xr"));
    Theorem2Result target = theorem2_region(nf);
    REQUIRE(target.branch == DmBranch::L1);
    CHECK(std::fabs(full.pentagon.r1_cap - target.pentagon.r1_cap) < 1e-12);
    CHECK(std::fabs(full.pentagon.r2_cap - target.pentagon.r2_cap) < 1e-12);
    CHECK(std::fabs(full.pentagon.sum_cap - target.pentagon.sum_cap) < 1e-12);
}

TEST_CASE("degraded outer bound on a clean chain") {
    DmFactorization f;
    f.theorem = DmTheorem::T41;
    std::vector<double> joint(8, 0.125);
    f.factors.emplace("U,X1,X2,Xr",
                      ConditionalPmf({{"U", 1}, {"X1", 2}, {"X2", 2}, {"Xr", 2}}, 0, joint));
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr",
                      make_channel(4, 2, 2, [](int x1, int x2, int xr, std::vector<double>& c) {
                          const int s = x1 ^ x2, y = 2 * s + xr;
                          c[slot(y, s, s, 2, 2)] = 0.89;
                          c[slot(y, s, s ^ 1, 2, 2)] = 0.11;
                      }));
    CHECK(caps_close(theorem41_outer(f), 2.0, 2.0, 1.4999159581645274));

    // The same joint with a wiretap that is not a noisier copy of Y.
    DmFactorization broken = f;
    broken.factors.insert_or_assign("Y,Yr,Z|X1,X2,Xr", df_example_channel(false));
    CHECK_THROWS_AS(theorem41_outer(broken), not_applicable_error);
    try {
        theorem41_outer(broken);
    } catch (const not_applicable_error& e) {
        CHECK(std::string(e.what()).find("degraded") != std::string::npos);
    }

    DmFactorization wrong = f;
    wrong.theorem = DmTheorem::T1;
    CHECK_THROWS_AS(theorem41_outer(wrong), std::domain_error);
}

TEST_CASE("outer bound dominates decode-forward on random degraded channels") {
    std::mt19937 rng(60251);
    std::uniform_int_distribution<int> osize(2, 3);
    for (int trial = 0; trial < 10; ++trial) {
        ConditionalPmf channel = random_degraded_channel(rng, osize(rng), osize(rng), osize(rng));
        DmFactorization t1 = random_t1(rng, channel);
        RatePentagon inner = theorem1_pentagon(t1);
        RatePentagon outer = theorem41_outer(matched_t41(t1));
        CHECK(outer.r1_cap >= inner.r1_cap - 1e-9);
        CHECK(outer.r2_cap >= inner.r2_cap - 1e-9);
        CHECK(outer.sum_cap >= inner.sum_cap - 1e-9);
        CHECK(contains(pentagon_vertices(outer), pentagon_vertices(inner), 1e-9));
    }
}

TEST_CASE("input sweep validation and nesting") {
    ConditionalPmf channel = df_example_channel(false);
    CHECK_THROWS_AS(sweep_best_region(channel, DmTheorem::T2, 1), std::domain_error);
    CHECK_THROWS_AS(sweep_best_region(channel, DmTheorem::T2, 22), std::domain_error);
    CHECK_THROWS_AS(sweep_best_region(channel, DmTheorem::T41, 5), std::domain_error);

    // Wrong kernel shapes are rejected.
    CHECK_THROWS_AS(sweep_best_region(bern("X1", 0.5), DmTheorem::T2, 3), std::domain_error);
    ConditionalPmf ternary({{"X1", 3}, {"X2", 2}, {"Xr", 2}, {"Y", 2}, {"Yr", 2}, {"Z", 2}},
                           3, std::vector<double>(3 * 2 * 2 * 8, 0.125));
    CHECK_THROWS_AS(sweep_best_region(ternary, DmTheorem::T2, 3), std::domain_error);

    RateRegion coarse = sweep_best_region(channel, DmTheorem::T2, 3);
    RateRegion fine = sweep_best_region(channel, DmTheorem::T2, 5);
    CHECK_FALSE(coarse.is_empty());
    CHECK(contains(fine, coarse, 1e-9));

    // The uniform-input operating point lies on the grid.
    DmFactorization uniform;
    uniform.theorem = DmTheorem::T2;
    uniform.factors.emplace("X1", bern("X1", 0.5));
    uniform.factors.emplace("X2", bern("X2", 0.5));
    uniform.factors.emplace("Xr", bern("Xr", 0.5));
    uniform.factors.emplace("Y,Yr,Z|X1,X2,Xr", channel);
    CHECK(contains(coarse, pentagon_vertices(theorem2_region(uniform).pentagon), 1e-9));
}

TEST_CASE("input sweeps cover each bound's worked example") {
    ConditionalPmf df_chan = df_example_channel(false);
    RateRegion t1 = sweep_best_region(df_chan, DmTheorem::T1, 3);
    // The sweep uses degenerate relay components, so compare against the
    // matching uniform product factorization rather than the superposition.
    DmFactorization flat;
    flat.theorem = DmTheorem::T1;
    flat.factors.emplace("V1", unit("V1"));
    flat.factors.emplace("V2", unit("V2"));
    flat.factors.emplace("X1|V1", ConditionalPmf({{"V1", 1}, {"X1", 2}}, 1, {0.5, 0.5}));
    flat.factors.emplace("X2|V2", ConditionalPmf({{"V2", 1}, {"X2", 2}}, 1, {0.5, 0.5}));
    flat.factors.emplace("Xr|V1,V2",
                         ConditionalPmf({{"V1", 1}, {"V2", 1}, {"Xr", 2}}, 2, {0.5, 0.5}));
    flat.factors.emplace("Y,Yr,Z|X1,X2,Xr", df_chan);
    CHECK(contains(t1, pentagon_vertices(theorem1_pentagon(flat)), 1e-9));

    DmFactorization comp = compression_example(0.3);
    RateRegion t3 = sweep_best_region(comp.factors.at("Y,Yr,Z|X1,X2,Xr"), DmTheorem::T3, 3);
    // Grid point (0.5, 0.5, 0.5) with the independent quantizer reproduces the
    // pure-noise sweep, so the swept region must cover it.
    CHECK(contains(t3, theorem3_rstar_sweep(compression_example(0.5), 21), 1e-9));
}
