#include "doctest.h"

#include <algorithm>
#include <random>

#include "aflt/criterion.hpp"
#include "aflt/frey.hpp"
#include "generators.hpp"
#include "test_support.hpp"

using namespace aflt;
using aflt::testing::kind_of;

namespace {

FieldElement el(const NumberField & K, std::string_view s) { return parse_element(K, s, true); }

SUnitSolution find(const std::vector<SUnitSolution> & sols, const FieldElement & l)
{
    auto it = std::find_if(sols.begin(), sols.end(), [&](const SUnitSolution & s) { return s.lambda == l; });
    REQUIRE(it != sols.end());
    return *it;
}

}  // namespace

TEST_CASE("criterion_check examples")
{
    auto K5 = NumberField::quadratic(-5);
    auto st5 = compute_ST(K5);
    auto v5 = criterion_check(K5, st5, solve_iq_ramified(K5), true);
    CHECK(v5.verdict == Verdict::Holds);
    REQUIRE(v5.checks.size() == 3);
    for (const auto & c : v5.checks) {
        CHECK(c.passes());
        CHECK(c.t == 2);
    }
    CHECK(criterion_bound(st5.S[0]) == 8);

    auto K3 = NumberField::quadratic(-3);
    auto st3 = compute_ST(K3);
    auto sols3 = bounded_search(K3, st3, sunit_describe(K3, st3), 2).solutions;
    CHECK(criterion_check(K3, st3, sols3, true).verdict == Verdict::NotApplicable);

    // Q(zeta16), lambda = 2^-40 is not an S-unit equation solution, so build
    // the failing entry by hand: t = 40 > 32.
    auto Z = NumberField::cyclotomic2(4);
    auto stz = compute_ST(Z);
    CHECK(criterion_bound(stz.S[0]) == 32);
    auto sols = bounded_search(Z, stz, sunit_describe(Z, stz), 1).solutions;
    SUnitSolution synthetic{el(Z, "2"), el(Z, "-1"), {{40, 0}}};
    sols.push_back(synthetic);
    auto vz = criterion_check(Z, stz, sols, true);
    CHECK(vz.verdict == Verdict::Fails);
    REQUIRE(vz.failing.has_value());
    CHECK(vz.checks[*vz.failing].t == 40);
    CHECK(vz.checks[*vz.failing].solution.valuations[0].ord_lambda == 40);
    CHECK(criterion_check(Z, stz, sols, false).verdict == Verdict::Unknown);
}

TEST_CASE("criterion_check is invariant under permutation and swapping")
{
    for (auto K : {NumberField::quadratic(-1), NumberField::quadratic(-7), NumberField::cyclotomic2(3)}) {
        auto st = compute_ST(K);
        auto sols = bounded_search(K, st, sunit_describe(K, st), 2).solutions;
        auto base = to_json(criterion_check(K, st, sols, true)).dump();
        std::mt19937_64 rng(9);
        for (int i = 0; i < 5; ++i) {
            std::shuffle(sols.begin(), sols.end(), rng);
            CHECK(to_json(criterion_check(K, st, sols, true)).dump() == base);
        }
        std::vector<SUnitSolution> swapped;
        for (const auto & s : sols)
            swapped.push_back(make_solution(st, s.mu));
        auto a = criterion_check(K, st, sols, true);
        auto b = criterion_check(K, st, swapped, true);
        CHECK(a.verdict == b.verdict);
        CHECK(to_json(a).dump() == to_json(b).dump());
    }
}

TEST_CASE("verdict json")
{
    auto K5 = NumberField::quadratic(-5);
    auto st5 = compute_ST(K5);
    auto j = to_json(criterion_check(K5, st5, solve_iq_ramified(K5), true));
    CHECK(j["verdict"] == "HOLDS");
    CHECK(j["field"] == "Q(sqrt(-5))");
    CHECK(j["solutions"].size() == 3);
    CHECK(j["solutions"][0]["lambda"] == "-1;0");
    CHECK(j["solutions"][0]["witness_P"] == "(2, 1+sqrt(-5))");
    CHECK(j["solutions"][0]["t"] == 2);
    CHECK(j["bound_per_P"]["(2, 1+sqrt(-5))"] == 8);
}

TEST_CASE("jprime examples")
{
    auto Q = NumberField::quadratic(-5);
    CHECK(jprime(el(Q, "2"), el(Q, "-1")) == el(Q, "1728"));
    CHECK(jprime(el(Q, "1/2"), el(Q, "1/2")) == el(Q, "1728"));
    auto Ki = NumberField::quadratic(-1);
    auto i = FieldElement::generator(Ki);
    CHECK(jprime(i, FieldElement::one(Ki) - i) == el(Ki, "128"));
    CHECK(kind_of([&] { jprime(el(Q, "0"), el(Q, "1")); }) == ErrorKind::DegenerateLambda);
    CHECK(kind_of([&] { jprime(el(Q, "1"), el(Q, "0")); }) == ErrorKind::DegenerateLambda);
    CHECK(kind_of([&] { jprime(el(Q, "2"), el(Q, "2")); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("case_analysis examples")
{
    auto K5 = NumberField::quadratic(-5);
    auto st5 = compute_ST(K5);
    auto sols5 = solve_iq_ramified(K5);
    auto half = case_analysis(find(sols5, el(K5, "1/2")), st5, 0);
    CHECK(half.t == 2);
    CHECK(half.pattern == ValuationPattern::BothNegative);
    CHECK(half.ord_jprime == 12);
    CHECK(half.closed_form == 12);
    auto two = case_analysis(find(sols5, el(K5, "2")), st5, 0);
    CHECK(two.pattern == ValuationPattern::MuZero);
    CHECK(two.ord_jprime == 12);

    auto Ki = NumberField::quadratic(-1);
    auto sti = compute_ST(Ki);
    auto ci = case_analysis(make_solution(sti, FieldElement::generator(Ki)), sti, 0);
    CHECK(ci.t == 1);
    CHECK(ci.pattern == ValuationPattern::LambdaZero);
    CHECK(ci.ord_jprime == 14);
    CHECK(ci.closed_form == 14);
    CHECK(to_string(ci.pattern) == "(0,t)");

    // Outside T: Q(sqrt(-3)), lambda = zeta6 gives t = 0 and j' = 0.
    auto K3 = NumberField::quadratic(-3);
    auto st3 = compute_ST(K3);
    auto c3 = case_analysis(make_solution(st3, el(K3, "1/2;1/2")), st3, 0);
    CHECK(c3.degenerate);
    CHECK_FALSE(c3.ord_jprime.has_value());
}

TEST_CASE("j' valuation identity and orbit invariance over many solutions")
{
    long count = 0;
    for (auto K : aflt::testing::sample_fields()) {
        if (K.degree() > 8)
            continue;
        auto st = compute_ST(K);
        auto sols = bounded_search(K, st, sunit_describe(K, st), K.degree() == 8 ? 2 : 3).solutions;
        for (const auto & s : sols) {
            auto orbit = lambda_orbit(s.lambda);
            for (const auto & l : orbit.values)
                CHECK(legendre_jprime(l) == orbit.jprime);
            CHECK(jprime(s.lambda, s.mu) == orbit.jprime);
            CHECK(jprime(s.mu, s.lambda) == orbit.jprime);
            for (std::size_t i = 0; i < st.S.size(); ++i) {
                auto c = case_analysis(s, st, i);
                if (!st.in_T(st.S[i]))
                    continue;
                CHECK(c.t >= 1);
                REQUIRE(c.ord_jprime.has_value());
                CHECK(*c.ord_jprime == c.closed_form);
                if (c.t < criterion_bound(st.S[i]))
                    CHECK(*c.ord_jprime > 0);
            }
            ++count;
        }
    }
    CHECK(count >= 500);
}
