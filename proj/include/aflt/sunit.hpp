#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aflt/field_element.hpp"
#include "aflt/prime_ideal.hpp"

namespace aflt {

/// S = primes above 2, T = those with residue degree 1.
struct STSets {
    std::vector<PrimeIdeal> S;
    std::vector<PrimeIdeal> T;

    bool in_T(const PrimeIdeal & P) const;
};

STSets compute_ST(const NumberField & K);

enum class Completeness { Exact, FiniteIndexSubgroup };

std::string to_string(Completeness c);

struct SUnitGroupDesc {
    FieldElement torsion_generator;
    long torsion_order = 0;
    std::vector<FieldElement> generators;
    Completeness completeness = Completeness::FiniteIndexSubgroup;
};

SUnitGroupDesc sunit_describe(const NumberField & K, const STSets & st);

/// Valuations of one solution at one prime of S.
struct PrimeValuation {
    long ord_lambda = 0;
    long ord_mu = 0;
    long t() const;  // max(|ord_lambda|, |ord_mu|)
};

struct SUnitSolution {
    FieldElement lambda;
    FieldElement mu;
    std::vector<PrimeValuation> valuations;  // parallel to STSets::S
};

/// Builds the solution for lambda (mu = 1 - lambda) and its valuation table.
/// Throws PreconditionViolation unless lambda, mu are both nonzero S-units.
SUnitSolution make_solution(const STSets & st, const FieldElement & lambda);

/*
 * x is an S-unit (S = primes above 2) iff its integral denominator is a power
 * of two and the norm of its integral part is +-2^k.  Throws ValuationOfZero
 * for x = 0.
 */
bool is_s_unit(const FieldElement & x);

/// Orders solutions by lambda in the canonical coordinate order.
void sort_solutions(std::vector<SUnitSolution> & sols);

/*
 * Complete solution set for imaginary quadratic Q(sqrt(-d)) with -d = 2, 3
 * (mod 4).  Throws WrongFamily for every other field.  The enumeration box
 * comes from the archimedean bound in docs/sunit_bounds.md.
 */
std::vector<SUnitSolution> solve_iq_ramified(const NumberField & K);

struct SearchResult {
    std::vector<SUnitSolution> solutions;
    bool complete = false;
};

/*
 * Enumerates lambda = torsion^j * prod gen_i^{e_i} with |e_i| <= box and keeps
 * those with 1 - lambda an S-unit.  Hits are closed under the six
 * substitutions lambda -> 1/lambda, 1-lambda, ... (all of which are again
 * solutions), deduplicated and sorted canonically.  Work is split across
 * `threads` workers (0 = hardware concurrency); output does not depend on it.
 */
SearchResult bounded_search(const NumberField & K, const STSets & st, const SUnitGroupDesc & desc, int box,
                            unsigned threads = 0);

/// One non-comment line of a solution-list file.
struct ListEntry {
    int line = 0;
    std::string text;
};

/// Splits solution-list text into entries; blank lines and '#' lines are skipped.
std::vector<ListEntry> parse_solution_list(std::string_view text);

enum class EntryStatus { Valid, NotSUnit, Degenerate, ParseError };

std::string to_string(EntryStatus s);

struct EntryReport {
    ListEntry entry;
    EntryStatus status = EntryStatus::ParseError;
    std::string message;
    std::optional<SUnitSolution> solution;  // set iff Valid
    long max_valuation = 0;                 // over S, valid entries only
};

struct ListReport {
    std::vector<EntryReport> entries;
    long global_max = 0;  // max over valid entries and P in S
    std::size_t valid_count() const;
};

/// Checks each entry independently; malformed entries are reported, not thrown.
ListReport verify_solution_list(const NumberField & K, const STSets & st, const std::vector<ListEntry> & entries);

}  // namespace aflt
