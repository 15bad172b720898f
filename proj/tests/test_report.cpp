#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "aflt/report.hpp"
#include "test_support.hpp"

using namespace aflt;
using aflt::testing::kind_of;

namespace {

const std::filesystem::path kConfigs = AFLT_SOURCE_DIR "/configs";

}  // namespace

TEST_CASE("parse_field_config examples")
{
    auto q = parse_field_config_text("[field]\nkind = \"quadratic\"\nm = -5\n");
    CHECK(q.kind == FieldKind::Quadratic);
    CHECK(q.parameter == -5);
    CHECK_FALSE(q.search_box.has_value());

    auto c = parse_field_config_text("# comment\n[field]\nkind = cyclotomic2   # bare word\nk = 4\n");
    CHECK(c.kind == FieldKind::Cyclotomic2);
    CHECK(c.parameter == 4);

    CHECK(kind_of([] { parse_field_config_text("[field]\nkind = \"quadratic\"\nm = 12\n"); }) ==
          ErrorKind::UnsupportedField);
    CHECK(kind_of([] { parse_field_config_text("[field]\nkind = \"cubic\"\nm = 2\n"); }) ==
          ErrorKind::UnsupportedField);

    auto full = parse_field_config_text(
        "[field]\nkind = \"quadratic\"\nm = 17\n[sunit]\nextra_generators = [[\"1/2\", 3], [\"5\"]]\n"
        "search_box = 3\n[input]\nsolutions = \"list.txt\"\n",
        "/tmp/cfg");
    CHECK(full.search_box == 3);
    REQUIRE(full.extra_generators.size() == 2);
    CHECK(full.extra_generators[0] == std::vector<std::string>{"1/2", "3"});
    CHECK(full.solutions == std::filesystem::path("/tmp/cfg/list.txt"));
}

TEST_CASE("config diagnostics name the line")
{
    auto message = [](std::string_view text) {
        try {
            parse_field_config_text(text);
        } catch (const Error & e) {
            CHECK(e.kind() == ErrorKind::ParseError);
            return std::string(e.what());
        }
        FAIL("expected ParseError");
        return std::string();
    };
    CHECK(message("[field]\nkind = \"quadratic\"\nm = \n").find("line 3") != std::string::npos);
    CHECK(message("[field]\nkind = \"quadratic\"\nm = -5\n[oops]\n").find("line 4") != std::string::npos);
    CHECK(message("[field]\nkind = \"quadratic\"\nm = -5\nm = -6\n").find("duplicate") != std::string::npos);
    CHECK(message("kind = \"quadratic\"\n").find("outside") != std::string::npos);
    CHECK(message("[field]\nkind = \"quadratic\"\n").find("takes m") != std::string::npos);
    CHECK(message("[field]\nkind = \"quadratic\"\nm = -5\n[sunit]\nsearch_box = 0\n").find("search_box") !=
          std::string::npos);
    CHECK(message("[field]\nkind = \"quadratic\"\nm = \"x\"\n").find("integer") != std::string::npos);
    CHECK(kind_of([] { parse_field_config("/nonexistent/config.toml"); }) == ErrorKind::ParseError);
}

TEST_CASE("run_pipeline examples")
{
    auto r5 = run_pipeline(parse_field_config(kConfigs / "qsqrt-5.toml"));
    CHECK(r5.verdict.verdict == Verdict::Holds);
    CHECK(r5.verdict.checks.size() == 3);
    CHECK(r5.method == "exact");

    auto r3 = run_pipeline(parse_field_config(kConfigs / "qsqrt-3.toml"));
    CHECK(r3.verdict.verdict == Verdict::NotApplicable);

    FieldConfig z{FieldKind::Cyclotomic2, 4, {}, std::nullopt, std::nullopt};
    auto rz = run_pipeline(z, std::filesystem::path(AFLT_SOURCE_DIR "/tests/cli/data/three_entries.txt"));
    CHECK(rz.verdict.verdict == Verdict::Unknown);
    CHECK(rz.method == "solution-list");
    REQUIRE(rz.list.has_value());
    CHECK(rz.list->entries.size() == 3);
    CHECK(rz.verdict.checks.size() == 3);
    for (const auto & c : rz.verdict.checks) {
        CHECK(c.passes());
        CHECK(criterion_bound(rz.verdict.st.S[*c.witness]) == 32);
    }

    auto rzs = run_pipeline(parse_field_config(kConfigs / "zeta16.toml"));
    CHECK(rzs.method == "bounded-search+solution-list");
    CHECK(rzs.search_box == 3);
    CHECK(rzs.verdict.verdict == Verdict::Unknown);

    auto r17 = run_pipeline(parse_field_config(kConfigs / "qsqrt17.toml"));
    CHECK(r17.verdict.verdict == Verdict::Unknown);
    CHECK_FALSE(r17.verdict.checks.empty());

    FieldConfig bad{FieldKind::Quadratic, -7, {{"3"}}, std::nullopt, std::nullopt};
    CHECK(kind_of([&] { run_pipeline(bad); }) == ErrorKind::PreconditionViolation);
    FieldConfig extra{FieldKind::Quadratic, -7, {{"1/2", "1/2"}}, 1, std::nullopt};
    CHECK(run_pipeline(extra).group->generators.size() == 3);
}

TEST_CASE("run_survey examples and congruence cross-check")
{
    auto rows = run_survey(1, 10);
    std::vector<long> ds;
    for (const auto & r : rows)
        ds.push_back(r.d);
    CHECK(ds == std::vector<long>{1, 2, 3, 5, 6, 7, 10});
    for (const auto & r : rows) {
        if (r.d == 3)
            CHECK(r.verdict == Verdict::NotApplicable);
        else if (r.d == 7)
            CHECK(r.verdict == Verdict::Unknown);
        else
            CHECK(r.verdict == Verdict::Holds);
        if (r.d == 5) {
            CHECK(r.solutions == 3);
            CHECK(r.max_t == 2);
        }
        if (r.d == 3)
            CHECK_FALSE(r.max_t.has_value());
    }
    CHECK(kind_of([] { run_survey(5, 1); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { run_survey(0, 4); }) == ErrorKind::ParseError);

    for (const auto & r : run_survey(1, 100)) {
        auto S = factor_two(NumberField::quadratic(-r.d));
        switch (r.splitting) {
        case Splitting::Inert:
            CHECK((S.size() == 1 && S[0].e == 1 && S[0].f == 2));
            break;
        case Splitting::Split:
            CHECK((S.size() == 2 && S[0].f == 1 && S[1].f == 1));
            break;
        case Splitting::Ramified:
            CHECK((S.size() == 1 && S[0].e == 2 && S[0].f == 1));
            break;
        }
    }
}

TEST_CASE("reports are deterministic across thread counts")
{
    auto a = emit_report(run_survey(1, 60, 1), Format::Json);
    auto b = emit_report(run_survey(1, 60, 7), Format::Json);
    CHECK(a == b);
    auto cfg = parse_field_config(kConfigs / "qsqrt-7.toml");
    CHECK(emit_report(run_pipeline(cfg), Format::Csv) == emit_report(run_pipeline(cfg), Format::Csv));
}

TEST_CASE("emit_report formats")
{
    auto rows = run_survey(5, 6);
    CHECK(emit_report(rows, Format::Csv) == "d,splitting,verdict,solutions,max_t\n5,ramified,HOLDS,3,2\n"
                                            "6,ramified,HOLDS,3,2\n");
    auto json = nlohmann::json::parse(emit_report(run_pipeline(parse_field_config(kConfigs / "qsqrt-5.toml")),
                                                  Format::Json));
    CHECK(json["verdict"] == "HOLDS");
    CHECK(json["solutions"].size() == 3);
    CHECK(kind_of([] { parse_format("xml"); }) == ErrorKind::ParseError);
    CHECK(parse_format("text") == Format::Text);

    auto csv = emit_report(run_pipeline(parse_field_config(kConfigs / "qsqrt-5.toml")), Format::Csv);
    CHECK(csv.find("\"(2, 1+sqrt(-5))\"") != std::string::npos);
    CHECK(emit_split2(NumberField::quadratic(-5), Format::Csv) ==
          "field,splitting,P,e,f,in_T,bound\nQ(sqrt(-5)),ramified,\"(2, 1+sqrt(-5))\",2,1,true,8\n");
}

TEST_CASE("run_frey")
{
    auto K = NumberField::quadratic(-5);
    auto rep = run_frey(K, FieldElement::integer(K, 1), FieldElement::integer(K, 2), FieldElement::integer(K, 3), 5);
    CHECK(rep.curve.p == 5);
    bool saw_identity = false;
    for (const auto & row : rep.primes) {
        if (row.identity) {
            saw_identity = true;
            CHECK(row.identity->direct == -4);
            CHECK(row.identity->closed_form == -4);
        }
        if (row.prime.prime == 2)
            CHECK(row.conductor_bound == 14);
        if (row.prime.prime != 5)
            CHECK(row.inertia.has_value());
    }
    CHECK(saw_identity);
    REQUIRE(rep.normalized.has_value());
    auto j = nlohmann::json::parse(emit_report(rep, Format::Json));
    CHECK(j["p"] == 5);
    CHECK(emit_report(rep, Format::Csv).rfind("key,value\n", 0) == 0);
}
