#include "aflt/criterion.hpp"

#include <algorithm>
#include <limits>

#include "aflt/errors.hpp"

namespace aflt {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return "HOLDS";
    case Verdict::Fails:
        return "FAILS";
    case Verdict::NotApplicable:
        return "NOT_APPLICABLE";
    case Verdict::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

long criterion_bound(const PrimeIdeal & P)
{
    return 4L * ord_at(P, mpq_class(2));
}

SolutionCheck check_solution(const STSets & st, const SUnitSolution & s)
{
    SolutionCheck c{s, std::nullopt, st.T.empty() ? 0 : std::numeric_limits<long>::max()};
    for (std::size_t i = 0; i < st.S.size(); ++i) {
        if (!st.in_T(st.S[i]))
            continue;
        const long t = s.valuations.at(i).t();
        if (t <= criterion_bound(st.S[i])) {
            c.witness = i;
            c.t = t;
            break;
        }
        c.t = std::min(c.t, t);
    }
    return c;
}

FieldVerdict criterion_check(const NumberField & K, const STSets & st, const std::vector<SUnitSolution> & solutions,
                             bool complete)
{
    FieldVerdict out;
    out.field = K.id();
    out.st = st;
    out.complete = complete;

    std::vector<SUnitSolution> sorted = solutions;
    sort_solutions(sorted);
    for (const auto & s : sorted) {
        SolutionCheck c = check_solution(st, s);
        if (!c.passes() && !st.T.empty() && !out.failing)
            out.failing = out.checks.size();
        out.checks.push_back(std::move(c));
    }

    if (st.T.empty())
        out.verdict = Verdict::NotApplicable;
    else if (!complete)
        out.verdict = Verdict::Unknown;
    else if (out.failing)
        out.verdict = Verdict::Fails;
    else
        out.verdict = Verdict::Holds;
    return out;
}

FieldElement jprime(const FieldElement & lambda, const FieldElement & mu)
{
    const FieldElement one = FieldElement::one(lambda.field());
    if (lambda.is_zero() || lambda.is_one())
        fail(ErrorKind::DegenerateLambda, "lambda must not be 0 or 1");
    if (!(lambda + mu == one))
        fail(ErrorKind::PreconditionViolation, "lambda + mu must equal 1");
    const FieldElement lm = lambda * mu;
    const FieldElement u = one - lm;
    return FieldElement::integer(lambda.field(), 256) * u * u * u / (lm * lm);
}

std::string to_string(ValuationPattern p)
{
    switch (p) {
    case ValuationPattern::BothNegative:
        return "(-t,-t)";
    case ValuationPattern::LambdaZero:
        return "(0,t)";
    case ValuationPattern::MuZero:
        return "(t,0)";
    }
    return "?";
}

CaseAnalysis case_analysis(const SUnitSolution & s, const STSets & st, std::size_t prime_index)
{
    const PrimeIdeal & P = st.S.at(prime_index);
    const PrimeValuation & v = s.valuations.at(prime_index);
    CaseAnalysis c;
    c.t = v.t();
    if (c.t > 0 && v.ord_lambda == -c.t && v.ord_mu == -c.t)
        c.pattern = ValuationPattern::BothNegative;
    else if (v.ord_lambda == 0)
        c.pattern = ValuationPattern::LambdaZero;
    else if (v.ord_mu == 0)
        c.pattern = ValuationPattern::MuZero;
    else
        fail(ErrorKind::PreconditionViolation, "valuations violate the ultrametric inequality");
    c.degenerate = c.t == 0;
    c.closed_form = 8 * ord_at(P, mpq_class(2)) - 2 * c.t;
    const FieldElement j = jprime(s.lambda, s.mu);
    if (!j.is_zero())
        c.ord_jprime = ord_at(P, j);
    return c;
}

nlohmann::ordered_json to_json(const FieldVerdict & v)
{
    using json = nlohmann::ordered_json;
    json out;
    out["field"] = v.field;
    out["verdict"] = to_string(v.verdict);
    out["complete"] = v.complete;
    json sols = json::array();
    for (const auto & c : v.checks) {
        json s;
        s["lambda"] = c.solution.lambda.to_string();
        s["mu"] = c.solution.mu.to_string();
        json vals = json::object();
        for (std::size_t i = 0; i < v.st.S.size(); ++i)
            vals[v.st.S[i].label()] = {c.solution.valuations[i].ord_lambda, c.solution.valuations[i].ord_mu};
        s["valuations"] = vals;
        s["witness_P"] = c.witness ? json(v.st.S[*c.witness].label()) : json(nullptr);
        s["t"] = c.t;
        s["passes"] = c.passes();
        sols.push_back(s);
    }
    out["solutions"] = sols;
    json bounds = json::object();
    for (const auto & P : v.st.T)
        bounds[P.label()] = criterion_bound(P);
    out["bound_per_P"] = bounds;
    return out;
}

}  // namespace aflt
