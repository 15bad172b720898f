#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aflt/sunit.hpp"

namespace aflt {

enum class Verdict { Holds, Fails, NotApplicable, Unknown };

/// "HOLDS", "FAILS", "NOT_APPLICABLE", "UNKNOWN".
std::string to_string(Verdict v);

/// Outcome of the bound test for one solution.
struct SolutionCheck {
    SUnitSolution solution;
    std::optional<std::size_t> witness;  // index into STSets::S of the first passing P in T
    long t = 0;                          // t at the witness, else the smallest t over T
    bool passes() const { return witness.has_value(); }
};

struct FieldVerdict {
    std::string field;
    Verdict verdict = Verdict::Unknown;
    STSets st;
    bool complete = false;
    std::vector<SolutionCheck> checks;
    std::optional<std::size_t> failing;  // first failing check, if any
};

/// 4 * ord_P(2) = 4e.
long criterion_bound(const PrimeIdeal & P);

/// Bound test for one solution: witness is the first P of T (in S order) with
/// t_P <= 4 ord_P(2).
SolutionCheck check_solution(const STSets & st, const SUnitSolution & s);

/*
 * A solution passes iff some P in T has t_P <= 4 ord_P(2).  Verdict:
 * NOT_APPLICABLE when T is empty, else UNKNOWN when the list is not known to
 * be complete, else FAILS if any solution fails, else HOLDS.
 */
FieldVerdict criterion_check(const NumberField & K, const STSets & st, const std::vector<SUnitSolution> & solutions,
                             bool complete);

/// j' = 2^8 (1 - lambda mu)^3 / (lambda mu)^2.  DegenerateLambda for lambda in {0, 1};
/// PreconditionViolation unless lambda + mu = 1.
FieldElement jprime(const FieldElement & lambda, const FieldElement & mu);

enum class ValuationPattern { BothNegative, LambdaZero, MuZero };

/// "(-t,-t)", "(0,t)", "(t,0)".
std::string to_string(ValuationPattern p);

struct CaseAnalysis {
    long t = 0;
    ValuationPattern pattern = ValuationPattern::BothNegative;
    std::optional<long> ord_jprime;  // direct valuation; empty when j' = 0
    long closed_form = 0;            // 8 ord_P(2) - 2t
    bool degenerate = false;         // t = 0: only ord_P(j') > 0 can be said
};

/// Valuation case split at P (index into st.S) for one solution.
CaseAnalysis case_analysis(const SUnitSolution & s, const STSets & st, std::size_t prime_index);

/// {field, verdict, complete, solutions: [{lambda, mu, valuations, witness_P, t, passes}], bound_per_P}.
nlohmann::ordered_json to_json(const FieldVerdict & v);

}  // namespace aflt
