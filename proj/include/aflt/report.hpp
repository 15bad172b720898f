#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aflt/criterion.hpp"
#include "aflt/frey.hpp"
#include "aflt/sunit.hpp"

namespace aflt {

/*
 * Field configuration file:
 *
 *   [field]
 *   kind = "quadratic"          # or "cyclotomic2"
 *   m = -5                      # k = 4 for cyclotomic2
 *   [sunit]
 *   extra_generators = [["1/2", "1/2"]]
 *   search_box = 2
 *   [input]
 *   solutions = "list.txt"      # relative to the config file
 *
 * Values are JSON literals; bare words are read as strings.
 */
struct FieldConfig {
    FieldKind kind = FieldKind::Quadratic;
    long parameter = 0;
    std::vector<std::vector<std::string>> extra_generators;
    std::optional<int> search_box;
    std::optional<std::filesystem::path> solutions;
};

/// ParseError (with line numbers) for malformed text, UnsupportedField for
/// parameters make_field rejects.
FieldConfig parse_field_config_text(std::string_view text, const std::filesystem::path & base_dir = {});
FieldConfig parse_field_config(const std::filesystem::path & path);

NumberField config_field(const FieldConfig & cfg);

std::string read_text_file(const std::filesystem::path & path);

enum class Splitting { Inert, Split, Ramified };
std::string to_string(Splitting s);

/// Splitting type of 2 read off factor_two.
Splitting splitting_of_two(const NumberField & K);

struct PipelineResult {
    NumberField field;
    FieldVerdict verdict;
    std::string method;  // "exact", "bounded-search", "solution-list" or a '+' combination
    std::optional<SUnitGroupDesc> group;
    std::optional<int> search_box;
    std::optional<ListReport> list;
};

/*
 * compute_ST, then the exact solver for imaginary quadratic fields with 2
 * ramified; otherwise bounded search (unless only a list is given) and list
 * verification; then criterion_check.  Overrides replace the config values.
 */
PipelineResult run_pipeline(const FieldConfig & cfg, std::optional<std::filesystem::path> solutions_override = {},
                            std::optional<int> box_override = {});

struct SurveyRow {
    long d = 0;
    Splitting splitting = Splitting::Inert;
    Verdict verdict = Verdict::Unknown;
    std::size_t solutions = 0;
    std::optional<long> max_t;  // over solutions and P in T; empty when T is empty
};

/// One row per squarefree d in [d_min, d_max] for Q(sqrt(-d)), ascending d.
/// ParseError unless 1 <= d_min <= d_max.
std::vector<SurveyRow> run_survey(long d_min, long d_max, unsigned threads = 0);

struct FreyReport {
    NumberField field;
    FreyCurve curve;
    struct PrimeRow {
        PrimeIdeal prime;
        std::optional<long> ord_j;  // empty when j = 0
        long conductor_bound = 0;
        std::optional<ValuationIdentity> identity;  // P above 2, f = 1, P | b, P coprime to ac
        std::optional<InertiaClassification> inertia;
    };
    std::vector<PrimeRow> primes;
    std::optional<NormalizedTriple> normalized;
};

/// Invariants of the Frey curve and the per-prime data at the primes above 2
/// and 3 and above the odd rational primes dividing N(abc).
FreyReport run_frey(const NumberField & K, const FieldElement & a, const FieldElement & b, const FieldElement & c,
                    long p);

enum class Format { Json, Csv, Text };

/// ParseError for anything but json, csv, text.
Format parse_format(std::string_view s);

std::string emit_report(const PipelineResult & r, Format f);
std::string emit_report(const std::vector<SurveyRow> & rows, Format f);
std::string emit_report(const FreyReport & r, Format f);
/// Factorization of 2 (the split2 command).
std::string emit_split2(const NumberField & K, Format f);

}  // namespace aflt
