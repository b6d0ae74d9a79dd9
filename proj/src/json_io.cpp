#include "marcwt/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace marcwt {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
    throw std::domain_error(where.empty() ? msg : where + msg);
}

struct PmfDoc {
    std::vector<Variable> vars;
    std::vector<double> probs;
};

PmfDoc parse_pmf_doc(const nlohmann::json& doc, const std::string& where) {
    if (!doc.is_object()) fail(where, " must be an object");
    if (!doc.contains("variables") || !doc["variables"].is_array())
        fail(where, "/variables must be an array");
    PmfDoc out;
    std::size_t i = 0;
    for (const auto& v : doc["variables"]) {
        const std::string slot = where + "/variables/" + std::to_string(i++);
        if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
            fail(slot, "/name must be a string");
        if (!v.contains("size") || !v["size"].is_number_integer())
            fail(slot, "/size must be an integer");
        out.vars.push_back({v["name"].get<std::string>(), v["size"].get<int>()});
    }
    if (!doc.contains("probs") || !doc["probs"].is_array()) fail(where, "/probs must be an array");
    i = 0;
    for (const auto& p : doc["probs"]) {
        if (!p.is_number())
            fail(where, "/probs/" + std::to_string(i) + " must be a number");
        out.probs.push_back(p.get<double>());
        ++i;
    }
    return out;
}

int count_given(const std::string& signature) {
    const auto bar = signature.find('|');
    if (bar == std::string::npos) return 0;
    int n = 1;
    for (std::size_t i = bar + 1; i < signature.size(); ++i)
        if (signature[i] == ',') ++n;
    return n;
}

}  // namespace

JointPmf pmf_from_json(const nlohmann::json& doc, const std::string& where) {
    PmfDoc parsed = parse_pmf_doc(doc, where);
    try {
        return JointPmf(std::move(parsed.vars), std::move(parsed.probs));
    } catch (const std::domain_error& e) {
        fail(where, std::string(": ") + e.what());
    }
}

ConditionalPmf conditional_from_json(const std::string& signature,
                                     const nlohmann::json& doc,
                                     const std::string& where) {
    PmfDoc parsed = parse_pmf_doc(doc, where);
    try {
        return ConditionalPmf(std::move(parsed.vars), count_given(signature), std::move(parsed.probs));
    } catch (const std::domain_error& e) {
        fail(where, std::string(": ") + e.what());
    }
}

DmFactorization dm_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::domain_error("the factorization document must be an object");
    DmFactorization f;
    if (!doc.contains("theorem") || !doc["theorem"].is_string())
        throw std::domain_error("/theorem must be one of T1, T2, T3, T41");
    const std::string name = doc["theorem"].get<std::string>();
    if (name == "T1") f.theorem = DmTheorem::T1;
    else if (name == "T2") f.theorem = DmTheorem::T2;
    else if (name == "T3") f.theorem = DmTheorem::T3;
    else if (name == "T41") f.theorem = DmTheorem::T41;
    else throw std::domain_error("/theorem must be one of T1, T2, T3, T41, got '" + name + "'");
    if (!doc.contains("factors") || !doc["factors"].is_object())
        throw std::domain_error("/factors must be an object");
    for (const auto& [key, val] : doc["factors"].items())
        f.factors.emplace(key, conditional_from_json(key, val, "/factors/" + key));
    if (doc.contains("r_star")) {
        if (!doc["r_star"].is_number()) throw std::domain_error("/r_star must be a number");
        f.r_star = doc["r_star"].get<double>();
    }
    return f;
}

nlohmann::json region_report(const std::string& strategy,
                             const std::string& branch,
                             bool feasible,
                             const RateRegion& region,
                             nlohmann::json params) {
    nlohmann::json rep;
    rep["strategy"] = strategy;
    rep["branch"] = branch.empty() ? nlohmann::json() : nlohmann::json(branch);
    rep["feasible"] = feasible;
    if (region.is_empty())
        rep["caps_bits"] = nlohmann::json();
    else
        rep["caps_bits"] = {support(region, 1, 0), support(region, 0, 1), support(region, 1, 1)};
    rep["area_bits2"] = area(region);
    rep["params"] = std::move(params);
    return rep;
}

}  // namespace marcwt
