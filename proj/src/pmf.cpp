#include "marcwt/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace marcwt {

namespace {

constexpr std::size_t kMaxEntries = 10'000'000;
constexpr double kSumTol = 1e-12;
constexpr double kLogFloor = 1e-15;  // below this a probability contributes 0*log 0 = 0

}  // namespace

JointPmf::JointPmf(std::vector<Variable> variables, std::vector<double> probs)
    : vars_(std::move(variables)), probs_(std::move(probs)) {
    if (vars_.empty()) throw std::domain_error("JointPmf: no variables");
    std::set<std::string> seen;
    std::size_t total = 1;
    for (const auto& v : vars_) {
        if (v.name.empty()) throw std::domain_error("JointPmf: empty variable name");
        if (!seen.insert(v.name).second)
            throw std::domain_error("JointPmf: duplicate variable name '" + v.name + "'");
        if (v.size < 1) throw std::domain_error("JointPmf: variable '" + v.name + "' has size < 1");
        if (total > kMaxEntries / static_cast<std::size_t>(v.size))
            throw std::domain_error("JointPmf: alphabet-size product exceeds 10^7 entries");
        total *= static_cast<std::size_t>(v.size);
    }
    if (probs_.size() != total)
        throw std::domain_error("JointPmf: probs length " + std::to_string(probs_.size()) +
                                " does not match alphabet product " + std::to_string(total));
    double sum = 0;
    for (double p : probs_) {
        if (!(p >= 0.0))  // catches negatives and NaN
            throw std::domain_error("JointPmf: negative or non-finite probability entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::domain_error("JointPmf: entries sum to " + std::to_string(sum) + ", not 1");

    strides_.resize(vars_.size());
    std::size_t stride = 1;
    for (std::size_t i = vars_.size(); i-- > 0;) {
        strides_[i] = stride;
        stride *= static_cast<std::size_t>(vars_[i].size);
    }
}

bool JointPmf::has_variable(std::string_view name) const {
    return std::any_of(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.name == name; });
}

std::size_t JointPmf::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    throw std::domain_error("JointPmf: unknown variable '" + std::string(name) + "'");
}

std::size_t JointPmf::flat_index(std::span<const int> outcome) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(outcome[i]);
    return idx;
}

JointPmf marginalize(const JointPmf& pmf, const std::vector<std::string>& keep) {
    if (keep.empty()) throw std::domain_error("marginalize: keep set is empty");
    std::set<std::string> want(keep.begin(), keep.end());
    if (want.size() != keep.size()) throw std::domain_error("marginalize: duplicate names in keep set");
    for (const auto& name : keep) (void)pmf.index_of(name);

    const auto& vars = pmf.variables();
    std::vector<Variable> kept;
    std::vector<std::size_t> kept_pos;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (want.count(vars[i].name)) {
            kept.push_back(vars[i]);
            kept_pos.push_back(i);
        }
    }
    if (kept.size() == vars.size()) return pmf;

    std::size_t out_total = 1;
    for (const auto& v : kept) out_total *= static_cast<std::size_t>(v.size);
    std::vector<std::size_t> out_strides(kept.size());
    {
        std::size_t stride = 1;
        for (std::size_t i = kept.size(); i-- > 0;) {
            out_strides[i] = stride;
            stride *= static_cast<std::size_t>(kept[i].size);
        }
    }

    // Walk the full tensor once, carrying the mixed-radix outcome.
    std::vector<double> out(out_total, 0.0);
    std::vector<int> outcome(vars.size(), 0);
    const auto& probs = pmf.probs();
    for (std::size_t flat = 0; flat < probs.size(); ++flat) {
        std::size_t oidx = 0;
        for (std::size_t k = 0; k < kept_pos.size(); ++k)
            oidx += out_strides[k] * static_cast<std::size_t>(outcome[kept_pos[k]]);
        out[oidx] += probs[flat];
        for (std::size_t i = vars.size(); i-- > 0;) {
            if (++outcome[i] < vars[i].size) break;
            outcome[i] = 0;
        }
    }
    // Renormalization is deliberately absent: summation preserves the total.
    return JointPmf(std::move(kept), std::move(out));
}

double entropy(const JointPmf& pmf, const std::vector<std::string>& vars) {
    if (vars.empty()) throw std::domain_error("entropy: empty variable set");
    JointPmf marg = marginalize(pmf, vars);
    double h = 0;
    for (double p : marg.probs())
        if (p > kLogFloor) h -= p * std::log2(p);
    return h < 0 ? 0.0 : h;  // clip -0 noise
}

namespace {

double entropy_or_zero(const JointPmf& pmf, const std::vector<std::string>& vars) {
    return vars.empty() ? 0.0 : entropy(pmf, vars);
}

std::vector<std::string> concat(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

double cond_mutual_info(const JointPmf& pmf,
                        const std::vector<std::string>& a,
                        const std::vector<std::string>& b,
                        const std::vector<std::string>& c) {
    if (a.empty() || b.empty()) throw std::domain_error("cond_mutual_info: A and B must be non-empty");
    std::set<std::string> all;
    for (const auto* set : {&a, &b, &c})
        for (const auto& name : *set)
            if (!all.insert(name).second)
                throw std::domain_error("cond_mutual_info: variable '" + name + "' appears in two sets");
    return entropy_or_zero(pmf, concat(a, c)) + entropy_or_zero(pmf, concat(b, c)) -
           entropy_or_zero(pmf, c) - entropy_or_zero(pmf, concat(concat(a, b), c));
}

}  // namespace marcwt
