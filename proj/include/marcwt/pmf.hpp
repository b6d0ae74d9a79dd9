#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace marcwt {

struct Variable {
    std::string name;
    int size = 0;
};

// Finite joint distribution over named variables. The probability tensor is
// flat, indexed lexicographically with the last variable varying fastest.
// All information measures are exact summations in log base 2 (bits).
class JointPmf {
public:
    JointPmf(std::vector<Variable> variables, std::vector<double> probs);

    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }

    bool has_variable(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws std::domain_error if absent

    // Flat index of a full outcome (one value per variable, in variable order).
    std::size_t flat_index(std::span<const int> outcome) const;

private:
    std::vector<Variable> vars_;
    std::vector<double> probs_;
    std::vector<std::size_t> strides_;
};

// Sums out every variable not listed in `keep`. Result keeps the pmf's
// original variable order restricted to `keep`; `keep` must be non-empty.
JointPmf marginalize(const JointPmf& pmf, const std::vector<std::string>& keep);

// Shannon entropy H(vars) in bits; probabilities below 1e-15 contribute zero.
double entropy(const JointPmf& pmf, const std::vector<std::string>& vars);

// I(A;B|C) = H(A,C) + H(B,C) - H(C) - H(A,B,C), exact summation, bits.
// A and B non-empty; A, B, C pairwise disjoint; C may be empty.
double cond_mutual_info(const JointPmf& pmf,
                        const std::vector<std::string>& a,
                        const std::vector<std::string>& b,
                        const std::vector<std::string>& c = {});

}  // namespace marcwt
