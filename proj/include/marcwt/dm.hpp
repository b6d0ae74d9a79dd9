#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "marcwt/geometry.hpp"
#include "marcwt/pmf.hpp"

namespace marcwt {

// Conditional probability table P(outputs | given), stored in the JointPmf
// document layout: variables are the given ones first, then the outputs,
// probs flat with the last variable fastest. Every given-cell slice must sum
// to 1 within 1e-12. given_count == 0 makes this a plain pmf.
class ConditionalPmf {
public:
    ConditionalPmf(std::vector<Variable> variables, int given_count, std::vector<double> probs);

    const std::vector<Variable>& variables() const { return vars_; }
    int given_count() const { return given_; }
    const std::vector<double>& probs() const { return probs_; }
    double value(std::span<const int> outcome) const;  // outcome over all variables, given first

private:
    std::vector<Variable> vars_;
    int given_;
    std::vector<double> probs_;
};

enum class DmTheorem { T1, T2, T3, T41 };
enum class DmBranch { L1, L2, L3, L4 };
const char* to_string(DmTheorem t);
const char* to_string(DmBranch b);

// Factorized input distribution for one of the discrete-memoryless bounds.
// Factors are keyed by conditional signature ("X1|V1", "Y,Yr,Z|X1,X2,Xr", ...);
// the required key set depends on the theorem:
//   T1:  V1; V2; X1|V1; X2|V2; Xr|V1,V2; Y,Yr,Z|X1,X2,Xr
//   T2:  X1; X2; Xr; Y,Yr,Z|X1,X2,Xr
//   T3:  T2's factors plus Yrhat|Yr,Xr and r_star >= 0
//   T41: U,X1,X2,Xr; Y,Yr,Z|X1,X2,Xr
struct DmFactorization {
    DmTheorem theorem = DmTheorem::T1;
    std::map<std::string, ConditionalPmf> factors;
    double r_star = 0;
};

const std::vector<std::string>& required_factors(DmTheorem t);

// Multiplies the factors into a joint pmf over the theorem's canonical
// variable order (T1: V1,V2,X1,X2,Xr,Y,Yr,Z; T2: X1,X2,Xr,Y,Yr,Z;
// T3 appends Yrhat; T41: U,X1,X2,Xr,Y,Yr,Z). Validates the factor set.
JointPmf compose(const DmFactorization& f);

// Decode-forward caps:
//   r1  = min{ I(X1;Yr|Xr,X2,V1,V2), I(X1,Xr;Y|X2,V2) } - I(X1;Z)
//   r2  = min{ I(X2;Yr|Xr,X1,V1,V2), I(X2,Xr;Y|X1,V1) } - I(X2;Z)
//   sum = min{ I(X1,X2;Yr|Xr,V1,V2), I(X1,X2,Xr;Y) } - I(X1,X2;Z)
RatePentagon theorem1_pentagon(const DmFactorization& f);

struct Theorem2Result {
    DmBranch branch;       // L1 iff I(Xr;Y) >= I(Xr;Z); ties resolve to L1
    RatePentagon pentagon;
    double rr;             // L1: min{I(Xr;Y), I(Xr;Z|X1), I(Xr;Z|X2)}; L2: I(Xr;Y)
};
Theorem2Result theorem2_region(const DmFactorization& f);

struct Theorem3Result {
    DmBranch branch;       // L3 iff I(Xr;Y) >= I(Xr;Z); ties resolve to L3
    RatePentagon pentagon; // empty when infeasible
    bool feasible;
    double r_star_max;     // largest feasible R* on the branch (may be negative)
};
Theorem3Result theorem3_region(const DmFactorization& f);

// Hull of theorem3_region pentagons with R* swept over a uniform grid of
// `steps` points spanning [0, r_star_max]; empty when no R* is feasible.
RateRegion theorem3_rstar_sweep(const DmFactorization& f, int steps);

// Degraded outer bound for the supplied U-joint. Verifies the Markov chain
// (U,X1,X2,Xr,Yr) -> Y -> Z within total variation 1e-9; throws
// not_applicable_error naming the offending conditional when it fails.
RatePentagon theorem41_outer(const DmFactorization& f);

// Hull of per-theorem pentagons over a uniform grid of product input
// distributions (binary inputs only). T1 sweeps (P(X1),P(X2),P(Xr)) with
// degenerate V1, V2; T2 sweeps the same triple; T3 additionally sweeps a
// binary threshold quantizer crossover and R* (21 points in its feasible
// range). channel must be the Y,Yr,Z|X1,X2,Xr kernel.
RateRegion sweep_best_region(const ConditionalPmf& channel, DmTheorem theorem, int grid_resolution);

}  // namespace marcwt
