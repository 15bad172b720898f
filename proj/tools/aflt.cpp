// aflt: S-unit equation and Frey curve toolkit, command-line front end.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aflt/errors.hpp"
#include "aflt/report.hpp"

namespace {

constexpr long kMaxExponent = 1000;

std::vector<aflt::FieldElement> parse_triple(const aflt::NumberField & K, const std::string & text)
{
    std::vector<aflt::FieldElement> out;
    std::size_t pos = 0;
    for (;;) {
        const auto comma = text.find(',', pos);
        out.push_back(aflt::parse_element(K, text.substr(pos, comma - pos), true));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.size() != 3)
        aflt::fail(aflt::ErrorKind::ParseError, "--triple needs exactly three elements a,b,c");
    return out;
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"aflt: S-unit equations, criterion checks and Frey curves over quadratic and 2-power cyclotomic fields"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string field_path;

    auto * check = app.add_subcommand("check", "Solve or verify the S-unit equation and check the valuation criterion");
    std::optional<std::string> solutions;
    std::optional<int> box;
    check->add_option("--field", field_path, "Field config file")->required();
    check->add_option("--solutions", solutions, "Solution list (one lambda per line)");
    check->add_option("--search-box", box, "Exponent bound for the bounded search");
    check->add_option("--format", format, "json, csv or text");

    auto * survey = app.add_subcommand("survey", "Survey Q(sqrt(-d)) for squarefree d in a range");
    long d_min = 0, d_max = 0;
    survey->add_option("--min", d_min, "Smallest d")->required();
    survey->add_option("--max", d_max, "Largest d")->required();
    survey->add_option("--format", format, "json, csv or text");

    auto * frey = app.add_subcommand("frey", "Frey curve invariants for a triple a,b,c");
    std::string triple;
    long p = 1;
    frey->add_option("--field", field_path, "Field config file")->required();
    frey->add_option("--triple", triple, "a,b,c with each element as c0;c1;...")->required();
    frey->add_option("--p", p, "Exponent")->required();
    frey->add_option("--format", format, "json, csv or text");

    auto * split2 = app.add_subcommand("split2", "Factorization of 2");
    split2->add_option("--field", field_path, "Field config file")->required();
    split2->add_option("--format", format, "json, csv or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        const aflt::Format fmt = aflt::parse_format(format);
        std::string out;
        if (*check) {
            const auto cfg = aflt::parse_field_config(field_path);
            std::optional<std::filesystem::path> sol_path;
            if (solutions)
                sol_path = *solutions;
            out = aflt::emit_report(aflt::run_pipeline(cfg, sol_path, box), fmt);
        } else if (*survey) {
            out = aflt::emit_report(aflt::run_survey(d_min, d_max), fmt);
        } else if (*frey) {
            if (p > kMaxExponent)
                aflt::fail(aflt::ErrorKind::PreconditionViolation,
                           "--p above " + std::to_string(kMaxExponent) + " is not supported");
            const auto K = aflt::config_field(aflt::parse_field_config(field_path));
            const auto t = parse_triple(K, triple);
            out = aflt::emit_report(aflt::run_frey(K, t[0], t[1], t[2], p), fmt);
        } else if (*split2) {
            out = aflt::emit_split2(aflt::config_field(aflt::parse_field_config(field_path)), fmt);
        }
        std::cout << out;
        return 0;
    } catch (const aflt::Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return aflt::exit_code(e.kind());
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
