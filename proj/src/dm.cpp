#include "marcwt/dm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

#include "marcwt/gauss_regions.hpp"

namespace marcwt {

namespace {

constexpr double kSliceTol = 1e-12;
constexpr double kDegradedTol = 1e-9;
constexpr long long kMaxEntries = 10'000'000;

struct Signature {
    std::vector<std::string> outputs;
    std::vector<std::string> given;
};

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Signature parse_signature(const std::string& key) {
    Signature sig;
    const auto bar = key.find('|');
    sig.outputs = split_names(bar == std::string::npos ? key : key.substr(0, bar));
    if (bar != std::string::npos) sig.given = split_names(key.substr(bar + 1));
    for (const auto* part : {&sig.outputs, &sig.given})
        for (const auto& name : *part)
            if (name.empty())
                throw std::domain_error("factor signature '" + key + "' has an empty variable name");
    return sig;
}

std::vector<std::string> canonical_order(DmTheorem t) {
    switch (t) {
        case DmTheorem::T1:
            return {"V1", "V2", "X1", "X2", "Xr", "Y", "Yr", "Z"};
        case DmTheorem::T2:
            return {"X1", "X2", "Xr", "Y", "Yr", "Z"};
        case DmTheorem::T3:
            return {"X1", "X2", "Xr", "Y", "Yr", "Z", "Yrhat"};
        case DmTheorem::T41:
            return {"U", "X1", "X2", "Xr", "Y", "Yr", "Z"};
    }
    throw std::domain_error("unknown theorem");
}

double mi(const JointPmf& j, std::initializer_list<const char*> a, std::initializer_list<const char*> b,
          std::initializer_list<const char*> c = {}) {
    const auto names = [](std::initializer_list<const char*> xs) {
        return std::vector<std::string>(xs.begin(), xs.end());
    };
    return cond_mutual_info(j, names(a), names(b), names(c));
}

constexpr RatePentagon kEmptyPentagon{-1, -1, -1};

}  // namespace

ConditionalPmf::ConditionalPmf(std::vector<Variable> variables, int given_count, std::vector<double> probs)
    : vars_(std::move(variables)), given_(given_count), probs_(std::move(probs)) {
    if (vars_.empty()) throw std::domain_error("conditional table needs at least one variable");
    if (given_ < 0 || given_ >= static_cast<int>(vars_.size()))
        throw std::domain_error("conditional table must have at least one output variable");
    std::set<std::string> seen;
    long long total = 1;
    for (const auto& v : vars_) {
        if (v.name.empty()) throw std::domain_error("conditional table has an unnamed variable");
        if (!seen.insert(v.name).second)
            throw std::domain_error("duplicate variable '" + v.name + "' in conditional table");
        if (v.size < 1)
            throw std::domain_error("variable '" + v.name + "' has a non-positive alphabet size");
        total *= v.size;
        if (total > kMaxEntries) throw std::domain_error("conditional table is too large");
    }
    if (static_cast<long long>(probs_.size()) != total)
        throw std::domain_error("conditional table has " + std::to_string(probs_.size()) +
                                " entries, expected " + std::to_string(total));
    // Given variables come first and the last variable is fastest, so each
    // given cell is one contiguous block over the output variables.
    long long block = 1;
    for (std::size_t i = given_; i < vars_.size(); ++i) block *= vars_[i].size;
    for (long long cell = 0; cell < total / block; ++cell) {
        double sum = 0;
        for (long long k = 0; k < block; ++k) {
            const double p = probs_[cell * block + k];
            if (!(p >= 0.0))
                throw std::domain_error("conditional table has a negative or non-finite entry");
            sum += p;
        }
        if (std::abs(sum - 1.0) > kSliceTol) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "conditional cell %lld sums to %.12g, expected 1", cell, sum);
            throw std::domain_error(buf);
        }
    }
}

double ConditionalPmf::value(std::span<const int> outcome) const {
    if (outcome.size() != vars_.size())
        throw std::domain_error("outcome length does not match the conditional table");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (outcome[i] < 0 || outcome[i] >= vars_[i].size)
            throw std::domain_error("outcome value out of range for variable '" + vars_[i].name + "'");
        idx = idx * static_cast<std::size_t>(vars_[i].size) + static_cast<std::size_t>(outcome[i]);
    }
    return probs_[idx];
}

const char* to_string(DmTheorem t) {
    switch (t) {
        case DmTheorem::T1: return "T1";
        case DmTheorem::T2: return "T2";
        case DmTheorem::T3: return "T3";
        case DmTheorem::T41: return "T41";
    }
    return "?";
}

const char* to_string(DmBranch b) {
    switch (b) {
        case DmBranch::L1: return "L1";
        case DmBranch::L2: return "L2";
        case DmBranch::L3: return "L3";
        case DmBranch::L4: return "L4";
    }
    return "?";
}

const std::vector<std::string>& required_factors(DmTheorem t) {
    static const std::vector<std::string> t1{"V1", "V2", "X1|V1", "X2|V2", "Xr|V1,V2", "Y,Yr,Z|X1,X2,Xr"};
    static const std::vector<std::string> t2{"X1", "X2", "Xr", "Y,Yr,Z|X1,X2,Xr"};
    static const std::vector<std::string> t3{"X1", "X2", "Xr", "Y,Yr,Z|X1,X2,Xr", "Yrhat|Yr,Xr"};
    static const std::vector<std::string> t41{"U,X1,X2,Xr", "Y,Yr,Z|X1,X2,Xr"};
    switch (t) {
        case DmTheorem::T1: return t1;
        case DmTheorem::T2: return t2;
        case DmTheorem::T3: return t3;
        case DmTheorem::T41: return t41;
    }
    throw std::domain_error("unknown theorem");
}

JointPmf compose(const DmFactorization& f) {
    const auto& required = required_factors(f.theorem);
    for (const auto& key : required)
        if (!f.factors.count(key))
            throw std::domain_error(std::string("missing factor '") + key + "' for " + to_string(f.theorem));
    for (const auto& [key, table] : f.factors)
        if (std::find(required.begin(), required.end(), key) == required.end())
            throw std::domain_error(std::string("unexpected factor '") + key + "' for " + to_string(f.theorem));

    const std::vector<std::string> order = canonical_order(f.theorem);
    std::map<std::string, int> sizes;
    struct FactorRef {
        const ConditionalPmf* table;
        std::vector<std::size_t> positions;  // into the canonical order
    };
    std::vector<FactorRef> refs;
    for (const auto& key : required) {
        const ConditionalPmf& table = f.factors.at(key);
        const Signature sig = parse_signature(key);
        std::vector<std::string> expected = sig.given;
        expected.insert(expected.end(), sig.outputs.begin(), sig.outputs.end());
        const auto& tv = table.variables();
        if (tv.size() != expected.size() ||
            table.given_count() != static_cast<int>(sig.given.size()))
            throw std::domain_error("factor '" + key + "' table does not match its signature");
        FactorRef ref{&table, {}};
        for (std::size_t i = 0; i < tv.size(); ++i) {
            if (tv[i].name != expected[i])
                throw std::domain_error("factor '" + key + "' lists variable '" + tv[i].name +
                                        "' where '" + expected[i] + "' is expected");
            const auto pos = std::find(order.begin(), order.end(), tv[i].name);
            if (pos == order.end())
                throw std::domain_error("variable '" + tv[i].name + "' does not belong to " +
                                        to_string(f.theorem));
            const auto [it, inserted] = sizes.emplace(tv[i].name, tv[i].size);
            if (!inserted && it->second != tv[i].size)
                throw std::domain_error("variable '" + tv[i].name +
                                        "' has inconsistent alphabet sizes across factors");
            ref.positions.push_back(static_cast<std::size_t>(pos - order.begin()));
        }
        refs.push_back(std::move(ref));
    }

    std::vector<Variable> joint_vars;
    long long total = 1;
    for (const auto& name : order) {
        const auto it = sizes.find(name);
        if (it == sizes.end()) throw std::domain_error("no factor defines variable '" + name + "'");
        joint_vars.push_back({name, it->second});
        total *= it->second;
        if (total > kMaxEntries) throw std::domain_error("composed joint distribution is too large");
    }

    std::vector<double> probs(static_cast<std::size_t>(total));
    std::vector<int> outcome(joint_vars.size(), 0);
    std::vector<std::vector<int>> sub(refs.size());
    for (std::size_t r = 0; r < refs.size(); ++r) sub[r].resize(refs[r].positions.size());
    for (long long idx = 0; idx < total; ++idx) {
        double p = 1.0;
        for (std::size_t r = 0; r < refs.size() && p != 0.0; ++r) {
            auto& s = sub[r];
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = outcome[refs[r].positions[i]];
            p *= refs[r].table->value(s);
        }
        probs[static_cast<std::size_t>(idx)] = p;
        for (int d = static_cast<int>(joint_vars.size()) - 1; d >= 0; --d) {
            if (++outcome[static_cast<std::size_t>(d)] < joint_vars[static_cast<std::size_t>(d)].size) break;
            outcome[static_cast<std::size_t>(d)] = 0;
        }
    }
    return JointPmf(std::move(joint_vars), std::move(probs));
}

RatePentagon theorem1_pentagon(const DmFactorization& f) {
    if (f.theorem != DmTheorem::T1)
        throw std::domain_error("factorization does not target the decode-forward bound");
    const JointPmf j = compose(f);
    const double r1 = std::min(mi(j, {"X1"}, {"Yr"}, {"Xr", "X2", "V1", "V2"}),
                               mi(j, {"X1", "Xr"}, {"Y"}, {"X2", "V2"})) -
                      mi(j, {"X1"}, {"Z"});
    const double r2 = std::min(mi(j, {"X2"}, {"Yr"}, {"Xr", "X1", "V1", "V2"}),
                               mi(j, {"X2", "Xr"}, {"Y"}, {"X1", "V1"})) -
                      mi(j, {"X2"}, {"Z"});
    const double sum = std::min(mi(j, {"X1", "X2"}, {"Yr"}, {"Xr", "V1", "V2"}),
                                mi(j, {"X1", "X2", "Xr"}, {"Y"})) -
                       mi(j, {"X1", "X2"}, {"Z"});
    return {r1, r2, sum};
}

Theorem2Result theorem2_region(const DmFactorization& f) {
    if (f.theorem != DmTheorem::T2)
        throw std::domain_error("factorization does not target the noise-forward bound");
    const JointPmf j = compose(f);
    const double iy = mi(j, {"Xr"}, {"Y"});
    const double iz = mi(j, {"Xr"}, {"Z"});
    Theorem2Result res{DmBranch::L1, {}, 0};
    if (iy >= iz) {
        res.branch = DmBranch::L1;
        res.rr = std::min({iy, mi(j, {"Xr"}, {"Z"}, {"X1"}), mi(j, {"Xr"}, {"Z"}, {"X2"})});
        res.pentagon = {
            mi(j, {"X1"}, {"Y"}, {"X2", "Xr"}) - mi(j, {"X1", "Xr"}, {"Z"}) + res.rr,
            mi(j, {"X2"}, {"Y"}, {"X1", "Xr"}) - mi(j, {"X2", "Xr"}, {"Z"}) + res.rr,
            mi(j, {"X1", "X2"}, {"Y"}, {"Xr"}) - mi(j, {"X1", "X2", "Xr"}, {"Z"}) + res.rr};
    } else {
        res.branch = DmBranch::L2;
        res.rr = iy;
        res.pentagon = {
            mi(j, {"X1"}, {"Y"}, {"X2", "Xr"}) - mi(j, {"X1"}, {"Z"}, {"Xr"}),
            mi(j, {"X2"}, {"Y"}, {"X1", "Xr"}) - mi(j, {"X2"}, {"Z"}, {"Xr"}),
            mi(j, {"X1", "X2"}, {"Y"}, {"Xr"}) - mi(j, {"X1", "X2"}, {"Z"}, {"Xr"})};
    }
    return res;
}

Theorem3Result theorem3_region(const DmFactorization& f) {
    if (f.theorem != DmTheorem::T3)
        throw std::domain_error("factorization does not target the compress-forward bound");
    if (!(f.r_star >= 0)) throw std::domain_error("r_star must be a nonnegative number");
    const JointPmf j = compose(f);
    const double iy = mi(j, {"Xr"}, {"Y"});
    const double iz = mi(j, {"Xr"}, {"Z"});
    const double compression = mi(j, {"Yr"}, {"Yrhat"}, {"Xr"});
    Theorem3Result res{DmBranch::L3, kEmptyPentagon, false, 0};
    if (iy >= iz) {
        res.branch = DmBranch::L3;
        const double noise_budget =
            std::min({mi(j, {"Xr"}, {"Z"}, {"X1"}), mi(j, {"Xr"}, {"Z"}, {"X2"}), iy});
        res.r_star_max = noise_budget - compression;
        res.feasible = f.r_star <= res.r_star_max;
        if (res.feasible)
            res.pentagon = {
                mi(j, {"X1"}, {"Y", "Yrhat"}, {"X2", "Xr"}) - mi(j, {"X1", "Xr"}, {"Z"}) + f.r_star,
                mi(j, {"X2"}, {"Y", "Yrhat"}, {"X1", "Xr"}) - mi(j, {"X2", "Xr"}, {"Z"}) + f.r_star,
                mi(j, {"X1", "X2"}, {"Y", "Yrhat"}, {"Xr"}) - mi(j, {"X1", "X2", "Xr"}, {"Z"}) + f.r_star};
    } else {
        res.branch = DmBranch::L4;
        res.r_star_max = 0;  // the relay sends no pure noise on this branch
        res.feasible = iy >= compression;
        if (res.feasible)
            res.pentagon = {
                mi(j, {"X1"}, {"Y", "Yrhat"}, {"X2", "Xr"}) - mi(j, {"X1"}, {"Z"}, {"Xr"}),
                mi(j, {"X2"}, {"Y", "Yrhat"}, {"X1", "Xr"}) - mi(j, {"X2"}, {"Z"}, {"Xr"}),
                mi(j, {"X1", "X2"}, {"Y", "Yrhat"}, {"Xr"}) - mi(j, {"X1", "X2"}, {"Z"}, {"Xr"})};
    }
    return res;
}

RateRegion theorem3_rstar_sweep(const DmFactorization& f, int steps) {
    if (steps < 1) throw std::domain_error("the r_star sweep needs at least one step");
    DmFactorization probe = f;
    probe.r_star = 0;
    const Theorem3Result base = theorem3_region(probe);
    if (base.branch == DmBranch::L4)
        return base.feasible ? pentagon_vertices(base.pentagon) : RateRegion::empty_region();
    if (base.r_star_max < 0) return RateRegion::empty_region();
    // The caps are affine in r_star, so shift the base pentagon along the grid.
    std::vector<RatePoint> pts;
    for (int i = 0; i < steps; ++i) {
        const double rs = steps == 1 ? base.r_star_max : base.r_star_max * i / (steps - 1);
        const RatePentagon p{base.pentagon.r1_cap + rs, base.pentagon.r2_cap + rs,
                             base.pentagon.sum_cap + rs};
        const RateRegion reg = pentagon_vertices(p);
        pts.insert(pts.end(), reg.vertices().begin(), reg.vertices().end());
    }
    return RateRegion::from_points(std::move(pts));
}

RatePentagon theorem41_outer(const DmFactorization& f) {
    if (f.theorem != DmTheorem::T41)
        throw std::domain_error("factorization does not target the degraded outer bound");
    const JointPmf j = compose(f);

    // The bound presumes the chain (U,X1,X2,Xr,Yr) -> Y -> Z: reconstruct the
    // joint from P(Z|Y) and compare in total variation.
    const auto& vars = j.variables();
    const std::size_t ypos = j.index_of("Y"), zpos = j.index_of("Z");
    std::vector<std::string> head_names;
    for (const auto& v : vars)
        if (v.name != "Z") head_names.push_back(v.name);
    const JointPmf p_head = marginalize(j, head_names);
    const JointPmf p_yz = marginalize(j, {"Y", "Z"});
    const JointPmf p_y = marginalize(j, {"Y"});
    std::vector<int> outcome(vars.size(), 0);
    std::vector<int> head(head_names.size(), 0);
    double tv = 0, worst = -1;
    int worst_y = 0, worst_z = 0;
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (i != zpos) head[k++] = outcome[i];
        const int y = outcome[ypos], z = outcome[zpos];
        const std::array<int, 2> yz{y, z};
        const double py = p_y.probs()[static_cast<std::size_t>(y)];
        const double predicted =
            py > 0 ? p_head.probs()[p_head.flat_index(head)] * p_yz.probs()[p_yz.flat_index(yz)] / py
                   : 0.0;
        const double diff = std::abs(j.probs()[idx] - predicted);
        tv += diff;
        if (diff > worst) {
            worst = diff;
            worst_y = y;
            worst_z = z;
        }
        for (int d = static_cast<int>(vars.size()) - 1; d >= 0; --d) {
            if (++outcome[static_cast<std::size_t>(d)] < vars[static_cast<std::size_t>(d)].size) break;
            outcome[static_cast<std::size_t>(d)] = 0;
        }
    }
    tv *= 0.5;
    if (tv > kDegradedTol) {
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "outer bound requires the degraded chain (U,X1,X2,Xr,Yr) -> Y -> Z; "
                      "P(Z=%d|Y=%d) varies with the upstream variables (total variation %.3g)",
                      worst_z, worst_y, tv);
        throw not_applicable_error(buf);
    }

    const double r1 = mi(j, {"X1", "Xr"}, {"Y"}, {"X2", "U"}) - mi(j, {"X1"}, {"Z"}, {"U"});
    const double r2 = mi(j, {"X2", "Xr"}, {"Y"}, {"X1", "U"}) - mi(j, {"X2"}, {"Z"}, {"U"});
    const double sum = mi(j, {"X1", "X2", "Xr"}, {"Y"}, {"U"}) - mi(j, {"X1", "X2"}, {"Z"}, {"U"});
    return {r1, r2, sum};
}

namespace {

// Conditional table whose single binary output is Bernoulli(p_one) for every
// given cell; the given variables are all the leading ones.
ConditionalPmf bernoulli_given(std::vector<Variable> vars, double p_one) {
    long long cells = 1;
    for (std::size_t i = 0; i + 1 < vars.size(); ++i) cells *= vars[i].size;
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(cells) * 2);
    for (long long c = 0; c < cells; ++c) {
        probs.push_back(1 - p_one);
        probs.push_back(p_one);
    }
    const int given = static_cast<int>(vars.size()) - 1;
    return ConditionalPmf(std::move(vars), given, std::move(probs));
}

}  // namespace

RateRegion sweep_best_region(const ConditionalPmf& channel, DmTheorem theorem, int grid_resolution) {
    if (grid_resolution < 2 || grid_resolution > 21)
        throw std::domain_error("grid_resolution must be between 2 and 21");
    if (theorem == DmTheorem::T41)
        throw std::domain_error("the input sweep covers the inner bounds only");
    static const std::array<const char*, 6> expected{"X1", "X2", "Xr", "Y", "Yr", "Z"};
    const auto& cv = channel.variables();
    if (channel.given_count() != 3 || cv.size() != expected.size())
        throw std::domain_error("channel must be the Y,Yr,Z|X1,X2,Xr kernel");
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (cv[i].name != expected[i])
            throw std::domain_error("channel must be the Y,Yr,Z|X1,X2,Xr kernel");
    for (std::size_t i = 0; i < 3; ++i)
        if (cv[i].size != 2)
            throw std::domain_error("the input sweep supports binary input alphabets only");

    const auto grid_value = [&](int i) { return static_cast<double>(i) / (grid_resolution - 1); };
    std::vector<RatePoint> pts;
    const auto take = [&pts](const RateRegion& r) {
        pts.insert(pts.end(), r.vertices().begin(), r.vertices().end());
    };

    DmFactorization f;
    f.theorem = theorem;
    f.factors.emplace("Y,Yr,Z|X1,X2,Xr", channel);
    if (theorem == DmTheorem::T1) {
        f.factors.emplace("V1", ConditionalPmf({{"V1", 1}}, 0, {1.0}));
        f.factors.emplace("V2", ConditionalPmf({{"V2", 1}}, 0, {1.0}));
    }

    for (int ia = 0; ia < grid_resolution; ++ia)
        for (int ib = 0; ib < grid_resolution; ++ib)
            for (int ic = 0; ic < grid_resolution; ++ic) {
                const double a = grid_value(ia), b = grid_value(ib), c = grid_value(ic);
                switch (theorem) {
                    case DmTheorem::T1:
                        f.factors.insert_or_assign("X1|V1", bernoulli_given({{"V1", 1}, {"X1", 2}}, a));
                        f.factors.insert_or_assign("X2|V2", bernoulli_given({{"V2", 1}, {"X2", 2}}, b));
                        f.factors.insert_or_assign("Xr|V1,V2",
                                                   bernoulli_given({{"V1", 1}, {"V2", 1}, {"Xr", 2}}, c));
                        take(pentagon_vertices(theorem1_pentagon(f)));
                        break;
                    case DmTheorem::T2:
                        f.factors.insert_or_assign("X1", bernoulli_given({{"X1", 2}}, a));
                        f.factors.insert_or_assign("X2", bernoulli_given({{"X2", 2}}, b));
                        f.factors.insert_or_assign("Xr", bernoulli_given({{"Xr", 2}}, c));
                        take(pentagon_vertices(theorem2_region(f).pentagon));
                        break;
                    case DmTheorem::T3: {
                        f.factors.insert_or_assign("X1", bernoulli_given({{"X1", 2}}, a));
                        f.factors.insert_or_assign("X2", bernoulli_given({{"X2", 2}}, b));
                        f.factors.insert_or_assign("Xr", bernoulli_given({{"Xr", 2}}, c));
                        const int nyr = cv[4].size;
                        for (int ie = 0; ie < grid_resolution; ++ie) {
                            // Binary quantizer: upper half of the relay alphabet
                            // maps to 1, flipped with crossover e.
                            const double e = grid_value(ie);
                            std::vector<double> qp;
                            qp.reserve(static_cast<std::size_t>(nyr) * 4);
                            for (int yr = 0; yr < nyr; ++yr)
                                for (int xr = 0; xr < 2; ++xr) {
                                    const double p_one = 2 * yr >= nyr ? 1 - e : e;
                                    qp.push_back(1 - p_one);
                                    qp.push_back(p_one);
                                }
                            f.factors.insert_or_assign(
                                "Yrhat|Yr,Xr",
                                ConditionalPmf({{"Yr", nyr}, {"Xr", 2}, {"Yrhat", 2}}, 2, std::move(qp)));
                            take(theorem3_rstar_sweep(f, 21));
                        }
                        break;
                    }
                    case DmTheorem::T41:
                        break;  // rejected above
                }
            }
    return RateRegion::from_points(std::move(pts));
}

}  // namespace marcwt
