#include "aflt/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "aflt/errors.hpp"

namespace aflt {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::string strip_comment(std::string_view line)
{
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"' && (i == 0 || line[i - 1] != '\\'))
            in_string = !in_string;
        else if (line[i] == '#' && !in_string)
            return std::string(line.substr(0, i));
    }
    return std::string(line);
}

[[noreturn]] void config_error(int line, const std::string & what)
{
    fail(ErrorKind::ParseError, "config line " + std::to_string(line) + ": " + what);
}

json parse_value(const std::string & text, int line)
{
    try {
        return json::parse(text);
    } catch (const json::exception &) {
    }
    const bool bare = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char ch) {
        return std::isalnum(ch) || ch == '_' || ch == '-' || ch == '.';
    });
    if (!bare)
        config_error(line, "cannot parse value '" + text + "'");
    return text;
}

long as_integer(const json & v, int line, const std::string & key)
{
    if (!v.is_number_integer())
        config_error(line, key + " must be an integer");
    return v.get<long>();
}

std::string scalar_text(const json & v, int line)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long>());
    config_error(line, "generator coordinates must be strings or integers");
}

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string join_csv(const std::vector<std::string> & cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += csv_field(cells[i]);
    }
    return out + "\n";
}

std::string orders_text(const std::vector<long> & v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string opt_text(const std::optional<long> & v)
{
    return v ? std::to_string(*v) : std::string();
}

json opt_json(const std::optional<long> & v)
{
    return v ? json(*v) : json(nullptr);
}

bool in_ramified_family(const NumberField & K)
{
    if (!K.is_imaginary_quadratic())
        return false;
    const long r = ((K.parameter() % 4) + 4) % 4;
    return r == 2 || r == 3;
}

json group_json(const SUnitGroupDesc & g)
{
    json gens = json::array();
    for (const auto & x : g.generators)
        gens.push_back(x.to_string());
    return {{"torsion_generator", g.torsion_generator.to_string()},
            {"torsion_order", g.torsion_order},
            {"generators", gens},
            {"completeness", to_string(g.completeness)}};
}

}  // namespace

FieldConfig parse_field_config_text(std::string_view text, const fs::path & base_dir)
{
    FieldConfig cfg;
    std::optional<std::string> kind;
    std::optional<long> m, k;
    std::string section;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(strip_comment(raw));
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                config_error(line, "malformed section header");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            if (section != "field" && section != "sunit" && section != "input")
                config_error(line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            config_error(line, "expected key = value");
        const std::string key = trim(std::string_view(s).substr(0, eq));
        const std::string full = section + "." + key;
        if (section.empty())
            config_error(line, "key '" + key + "' outside of a section");
        if (!seen.insert(full).second)
            config_error(line, "duplicate key " + full);
        const json v = parse_value(trim(std::string_view(s).substr(eq + 1)), line);

        if (full == "field.kind") {
            if (!v.is_string())
                config_error(line, "kind must be a string");
            kind = v.get<std::string>();
        } else if (full == "field.m") {
            m = as_integer(v, line, key);
        } else if (full == "field.k") {
            k = as_integer(v, line, key);
        } else if (full == "sunit.extra_generators") {
            if (!v.is_array())
                config_error(line, "extra_generators must be an array of coordinate arrays");
            for (const auto & g : v) {
                if (!g.is_array())
                    config_error(line, "each extra generator must be an array of coordinates");
                std::vector<std::string> coords;
                for (const auto & c : g)
                    coords.push_back(scalar_text(c, line));
                cfg.extra_generators.push_back(std::move(coords));
            }
        } else if (full == "sunit.search_box") {
            long box = as_integer(v, line, key);
            if (box < 1)
                config_error(line, "search_box must be at least 1");
            cfg.search_box = static_cast<int>(box);
        } else if (full == "input.solutions") {
            if (!v.is_string())
                config_error(line, "solutions must be a path string");
            fs::path p = v.get<std::string>();
            cfg.solutions = p.is_absolute() ? p : base_dir / p;
        } else {
            config_error(line, "unknown key " + full);
        }
    }

    if (!kind)
        fail(ErrorKind::ParseError, "config: missing [field] kind");
    if (*kind == "quadratic") {
        if (!m || k)
            fail(ErrorKind::ParseError, "config: kind quadratic takes m (and not k)");
        cfg.kind = FieldKind::Quadratic;
        cfg.parameter = *m;
    } else if (*kind == "cyclotomic2") {
        if (!k || m)
            fail(ErrorKind::ParseError, "config: kind cyclotomic2 takes k (and not m)");
        cfg.kind = FieldKind::Cyclotomic2;
        cfg.parameter = *k;
    } else {
        fail(ErrorKind::UnsupportedField, "config: unsupported field kind '" + *kind + "'");
    }
    config_field(cfg);
    return cfg;
}

std::string read_text_file(const fs::path & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::ParseError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FieldConfig parse_field_config(const fs::path & path)
{
    return parse_field_config_text(read_text_file(path), path.parent_path());
}

NumberField config_field(const FieldConfig & cfg)
{
    return make_field(cfg.kind, cfg.parameter);
}

std::string to_string(Splitting s)
{
    switch (s) {
    case Splitting::Inert:
        return "inert";
    case Splitting::Split:
        return "split";
    case Splitting::Ramified:
        return "ramified";
    }
    return "?";
}

Splitting splitting_of_two(const NumberField & K)
{
    const auto S = factor_two(K);
    if (S.size() > 1)
        return Splitting::Split;
    return S[0].e > 1 ? Splitting::Ramified : Splitting::Inert;
}

PipelineResult run_pipeline(const FieldConfig & cfg, std::optional<fs::path> solutions_override,
                            std::optional<int> box_override)
{
    const NumberField K = config_field(cfg);
    const STSets st = compute_ST(K);
    SUnitGroupDesc desc = sunit_describe(K, st);
    for (const auto & coords : cfg.extra_generators) {
        std::string text;
        for (std::size_t i = 0; i < coords.size(); ++i)
            text += (i ? ";" : "") + coords[i];
        FieldElement g = parse_element(K, text, true);
        if (g.is_zero() || !is_s_unit(g))
            fail(ErrorKind::PreconditionViolation, "extra generator " + text + " is not an S-unit");
        desc.generators.push_back(g);
    }

    const auto sol_path = solutions_override ? solutions_override : cfg.solutions;
    const auto box = box_override ? box_override : cfg.search_box;
    if (box && *box < 1)
        fail(ErrorKind::ParseError, "search box must be at least 1");

    std::vector<SUnitSolution> sols;
    std::vector<std::string> method;
    std::optional<int> used_box;
    std::optional<ListReport> list;
    bool complete = false;

    if (in_ramified_family(K)) {
        sols = solve_iq_ramified(K);
        complete = true;
        method.push_back("exact");
    } else if (box || !sol_path) {
        used_box = box.value_or(K.degree() <= 8 ? 2 : 1);
        sols = bounded_search(K, st, desc, *used_box).solutions;
        method.push_back("bounded-search");
    }
    if (sol_path) {
        list = verify_solution_list(K, st, parse_solution_list(read_text_file(*sol_path)));
        method.push_back("solution-list");
        if (!complete) {
            std::set<std::string> have;
            for (const auto & s : sols)
                have.insert(s.lambda.to_string());
            for (const auto & e : list->entries)
                if (e.solution && have.insert(e.solution->lambda.to_string()).second)
                    sols.push_back(*e.solution);
        }
    }

    std::string m;
    for (std::size_t i = 0; i < method.size(); ++i)
        m += (i ? "+" : "") + method[i];
    return {K, criterion_check(K, st, sols, complete), m, desc, used_box, list};
}

std::vector<SurveyRow> run_survey(long d_min, long d_max, unsigned threads)
{
    if (d_min < 1 || d_min > d_max)
        fail(ErrorKind::ParseError,
             "survey range must satisfy 1 <= min <= max, got " + std::to_string(d_min) + ".." + std::to_string(d_max));
    std::vector<long> ds;
    for (long d = d_min; d <= d_max; ++d)
        if (is_squarefree(d))
            ds.push_back(d);

    std::vector<std::optional<SurveyRow>> rows(ds.size());
    std::vector<std::exception_ptr> errors(ds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < ds.size();) {
            try {
                const long d = ds[i];
                const long r = (((-d) % 8) + 8) % 8;
                const Splitting expected = r == 5 ? Splitting::Inert : r == 1 ? Splitting::Split : Splitting::Ramified;
                const NumberField K = NumberField::quadratic(-d);
                if (splitting_of_two(K) != expected)
                    fail(ErrorKind::PreconditionViolation, "factor_two disagrees with the congruence rule at d = " +
                                                               std::to_string(d));
                const STSets st = compute_ST(K);
                std::vector<SUnitSolution> sols;
                bool complete = false;
                if (expected == Splitting::Ramified) {
                    sols = solve_iq_ramified(K);
                    complete = true;
                } else {
                    sols = bounded_search(K, st, sunit_describe(K, st), 2, 1).solutions;
                }
                const FieldVerdict v = criterion_check(K, st, sols, complete);
                SurveyRow row{d, expected, v.verdict, sols.size(), std::nullopt};
                if (!st.T.empty())
                    for (const auto & s : sols)
                        for (std::size_t j = 0; j < st.S.size(); ++j)
                            if (st.in_T(st.S[j]))
                                row.max_t = std::max(row.max_t.value_or(0), s.valuations[j].t());
                rows[i] = row;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, ds.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();

    std::vector<SurveyRow> out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(*rows[i]);
    }
    return out;
}

FreyReport run_frey(const NumberField & K, const FieldElement & a, const FieldElement & b, const FieldElement & c,
                    long p)
{
    FreyReport rep{K, frey_invariants(a, b, c, p), {}, std::nullopt};

    std::set<long> rational_primes{2, 3};
    for (const auto & x : {a, b, c}) {
        mpz_class n = abs(norm(x).get_num());
        for (long l = 3; l <= 100000 && n > 1; l += 2)
            if (mpz_divisible_ui_p(n.get_mpz_t(), l)) {
                rational_primes.insert(l);
                while (mpz_divisible_ui_p(n.get_mpz_t(), l))
                    n /= l;
            }
    }
    for (long l : rational_primes)
        for (const auto & P : primes_above(K, l)) {
            FreyReport::PrimeRow row{P, std::nullopt, conductor_exponent_bound(P), std::nullopt, std::nullopt};
            if (!rep.curve.j.is_zero())
                row.ord_j = ord_at(P, rep.curve.j);
            if (P.prime == 2 && P.f == 1 && ord_at(P, b) > 0 && ord_at(P, a) == 0 && ord_at(P, c) == 0)
                row.identity = jval_identity(P, a, b, c, p);
            if (p >= 5 && is_prime(p) && P.prime != p)
                row.inertia = inertia_classify(row.ord_j ? JValuation::exact(*row.ord_j) : JValuation::nonnegative(), p);
            rep.primes.push_back(std::move(row));
        }
    if (K.is_imaginary_quadratic())
        rep.normalized = normalize_solution(a, b, c);
    return rep;
}

Format parse_format(std::string_view s)
{
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    if (s == "text")
        return Format::Text;
    fail(ErrorKind::ParseError, "unknown format '" + std::string(s) + "' (expected json, csv or text)");
}

std::string emit_report(const PipelineResult & r, Format f)
{
    const FieldVerdict & v = r.verdict;
    if (f == Format::Json) {
        json out = to_json(v);
        out["method"] = r.method;
        out["search_box"] = r.search_box ? json(*r.search_box) : json(nullptr);
        if (r.group)
            out["sunit_group"] = group_json(*r.group);
        if (r.list) {
            json entries = json::array();
            for (const auto & e : r.list->entries) {
                json j{{"line", e.entry.line}, {"text", e.entry.text}, {"status", to_string(e.status)}};
                j["message"] = e.message;
                if (e.solution) {
                    const SolutionCheck c = check_solution(v.st, *e.solution);
                    j["max_valuation"] = e.max_valuation;
                    j["t"] = c.t;
                    j["witness_P"] = c.witness ? json(v.st.S[*c.witness].label()) : json(nullptr);
                    j["passes"] = c.passes();
                }
                entries.push_back(j);
            }
            out["entries"] = entries;
            out["max_valuation"] = r.list->global_max;
        }
        return out.dump(2) + "\n";
    }

    if (f == Format::Csv) {
        std::string out = join_csv({"field", "verdict", "lambda", "mu", "witness_P", "t", "passes"});
        for (const auto & c : v.checks)
            out += join_csv({v.field, to_string(v.verdict), c.solution.lambda.to_string(), c.solution.mu.to_string(),
                             c.witness ? v.st.S[*c.witness].label() : "", std::to_string(c.t),
                             c.passes() ? "true" : "false"});
        return out;
    }

    std::ostringstream out;
    out << "field:     " << v.field << "\n";
    out << "verdict:   " << to_string(v.verdict) << "\n";
    out << "complete:  " << (v.complete ? "yes" : "no") << "\n";
    out << "method:    " << r.method;
    if (r.search_box)
        out << " (box " << *r.search_box << ")";
    out << "\n";
    for (const auto & P : v.st.S) {
        out << "prime:     " << P.label() << "  e=" << P.e << " f=" << P.f;
        if (v.st.in_T(P))
            out << "  bound=" << criterion_bound(P);
        out << "\n";
    }
    out << "solutions: " << v.checks.size() << "\n";
    for (const auto & c : v.checks) {
        out << "  lambda=" << c.solution.lambda.pretty() << "  mu=" << c.solution.mu.pretty() << "  t=" << c.t;
        if (c.witness)
            out << "  witness=" << v.st.S[*c.witness].label();
        out << "  " << (c.passes() ? "pass" : (v.st.T.empty() ? "n/a" : "FAIL")) << "\n";
    }
    if (r.list) {
        out << "list entries: " << r.list->entries.size() << " (" << r.list->valid_count()
            << " valid), max valuation " << r.list->global_max << "\n";
        for (const auto & e : r.list->entries) {
            out << "  line " << e.entry.line << ": " << to_string(e.status);
            if (e.solution) {
                const SolutionCheck c = check_solution(v.st, *e.solution);
                out << "  t=" << c.t << "  " << (c.passes() ? "pass" : "FAIL");
            } else {
                out << "  " << e.message;
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string emit_report(const std::vector<SurveyRow> & rows, Format f)
{
    if (f == Format::Json) {
        json arr = json::array();
        for (const auto & r : rows)
            arr.push_back({{"d", r.d},
                           {"splitting", to_string(r.splitting)},
                           {"verdict", to_string(r.verdict)},
                           {"solutions", r.solutions},
                           {"max_t", opt_json(r.max_t)}});
        return json{{"survey", arr}}.dump(2) + "\n";
    }
    if (f == Format::Csv) {
        std::string out = join_csv({"d", "splitting", "verdict", "solutions", "max_t"});
        for (const auto & r : rows)
            out += join_csv({std::to_string(r.d), to_string(r.splitting), to_string(r.verdict),
                             std::to_string(r.solutions), opt_text(r.max_t)});
        return out;
    }
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%6s  %-9s  %-15s  %9s  %5s\n", "d", "splitting", "verdict", "solutions", "max_t");
    out << buf;
    for (const auto & r : rows) {
        std::snprintf(buf, sizeof buf, "%6ld  %-9s  %-15s  %9zu  %5s\n", r.d, to_string(r.splitting).c_str(),
                      to_string(r.verdict).c_str(), r.solutions, r.max_t ? std::to_string(*r.max_t).c_str() : "-");
        out << buf;
    }
    return out.str();
}

std::string emit_report(const FreyReport & r, Format f)
{
    const FreyCurve & E = r.curve;
    if (f == Format::Json) {
        json model = json::array();
        for (const auto & x : E.model)
            model.push_back(x.to_string());
        json primes = json::array();
        for (const auto & row : r.primes) {
            json j{{"P", row.prime.label()}, {"ord_j", opt_json(row.ord_j)}, {"conductor_bound", row.conductor_bound}};
            j["valuation_identity"] =
                row.identity ? json{{"direct", row.identity->direct}, {"closed_form", row.identity->closed_form}}
                             : json(nullptr);
            j["inertia"] = row.inertia ? json{{"type", to_string(row.inertia->type)},
                                              {"orders", row.inertia->orders},
                                              {"assumption", row.inertia->assumption}}
                                       : json(nullptr);
            primes.push_back(j);
        }
        json out{{"field", r.field.id()},
                 {"triple", {E.a.to_string(), E.b.to_string(), E.c.to_string()}},
                 {"p", E.p},
                 {"c4", E.c4.to_string()},
                 {"delta", E.delta.to_string()},
                 {"j", E.j.to_string()},
                 {"model", model},
                 {"primes", primes}};
        out["normalized"] = r.normalized ? json{{"triple", {r.normalized->a.to_string(), r.normalized->b.to_string(),
                                                            r.normalized->c.to_string()}},
                                                {"scale", r.normalized->scale.to_string()},
                                                {"representative", r.normalized->representative.label()}}
                                         : json(nullptr);
        return out.dump(2) + "\n";
    }

    std::vector<std::pair<std::string, std::string>> kv{
        {"field", r.field.id()},        {"a", E.a.to_string()},         {"b", E.b.to_string()},
        {"c", E.c.to_string()},         {"p", std::to_string(E.p)},     {"c4", E.c4.to_string()},
        {"delta", E.delta.to_string()}, {"j", E.j.to_string()},
    };
    for (const auto & row : r.primes) {
        const std::string P = row.prime.label();
        kv.emplace_back("ord_j " + P, opt_text(row.ord_j));
        kv.emplace_back("conductor_bound " + P, std::to_string(row.conductor_bound));
        if (row.identity)
            kv.emplace_back("valuation_identity " + P,
                            std::to_string(row.identity->direct) + " = " + std::to_string(row.identity->closed_form));
        if (row.inertia)
            kv.emplace_back("inertia " + P, to_string(row.inertia->type) + " {" + orders_text(row.inertia->orders) + "}");
    }
    if (r.normalized) {
        kv.emplace_back("normalized", r.normalized->a.to_string() + " , " + r.normalized->b.to_string() + " , " +
                                          r.normalized->c.to_string());
        kv.emplace_back("normalized_scale", r.normalized->scale.to_string());
        kv.emplace_back("representative", r.normalized->representative.label());
    }
    std::string out;
    if (f == Format::Csv) {
        out = join_csv({"key", "value"});
        for (const auto & [k, v] : kv)
            out += join_csv({k, v});
        return out;
    }
    for (const auto & [k, v] : kv)
        out += k + ": " + v + "\n";
    return out;
}

std::string emit_split2(const NumberField & K, Format f)
{
    const STSets st = compute_ST(K);
    const Splitting s = splitting_of_two(K);
    if (f == Format::Json) {
        json primes = json::array();
        for (const auto & P : st.S)
            primes.push_back({{"P", P.label()},
                              {"e", P.e},
                              {"f", P.f},
                              {"in_T", st.in_T(P)},
                              {"bound", st.in_T(P) ? json(criterion_bound(P)) : json(nullptr)}});
        return json{{"field", K.id()}, {"splitting", to_string(s)}, {"primes", primes}}.dump(2) + "\n";
    }
    if (f == Format::Csv) {
        std::string out = join_csv({"field", "splitting", "P", "e", "f", "in_T", "bound"});
        for (const auto & P : st.S)
            out += join_csv({K.id(), to_string(s), P.label(), std::to_string(P.e), std::to_string(P.f),
                             st.in_T(P) ? "true" : "false", st.in_T(P) ? std::to_string(criterion_bound(P)) : ""});
        return out;
    }
    std::ostringstream out;
    out << K.id() << ": 2 is " << to_string(s) << "\n";
    for (const auto & P : st.S) {
        out << "  " << P.label() << "  e=" << P.e << " f=" << P.f;
        if (st.in_T(P))
            out << "  in T, bound " << criterion_bound(P);
        out << "\n";
    }
    return out.str();
}

}  // namespace aflt
