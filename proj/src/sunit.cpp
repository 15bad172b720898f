#include "aflt/sunit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "aflt/class_group.hpp"
#include "aflt/errors.hpp"
#include "aflt/ideal.hpp"

namespace aflt {

namespace {

bool is_power_of_two(const mpz_class & n)
{
    return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

long mod4(long m) { return ((m % 4) + 4) % 4; }

// Fundamental unit of a real quadratic field from the continued fraction of
// alpha = sqrt(m) or (1+sqrt(m))/2: the first convergent p/q with
// N(p - q*alpha) = +-1 gives it.  Returned as the conjugate, which is > 1.
FieldElement fundamental_unit(const NumberField & K)
{
    const long m = K.parameter();
    const bool half = K.has_half_integral_basis();
    const FieldElement alpha = half ? from_integral_basis(K, {0, 1}) : FieldElement::generator(K);
    mpz_class P = half ? 1 : 0;
    mpz_class Q = half ? 2 : 1;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), mpz_class(m).get_mpz_t());
    mpz_class p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    for (;;) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), mpz_class(P + s).get_mpz_t(), Q.get_mpz_t());
        mpz_class p = a * p1 + p2;
        mpz_class q = a * q1 + q2;
        FieldElement x = FieldElement::rational(K, mpq_class(p)) - FieldElement::rational(K, mpq_class(q)) * alpha;
        mpq_class n = norm(x);
        if (n == 1 || n == -1)
            return x.negate_generator();
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
        P = a * Q - P;
        Q = (m - P * P) / Q;
    }
}

// Small S-unit of a real quadratic field with ord_{S[0]} = j > 0 minimal and
// ord_{S[i]} = 0 elsewhere; used for the primes above 2 that are not (2).
std::optional<FieldElement> search_two_part(const STSets & st, const NumberField & K)
{
    constexpr long range = 40;
    std::optional<FieldElement> best;
    long best_j = 0;
    for (long a = -range; a <= range; ++a)
        for (long b = 1; b <= range; ++b) {
            FieldElement x = from_integral_basis(K, {a, b});
            if (!is_s_unit(x))
                continue;
            long j = ord_at(st.S[0], x);
            bool clean = j > 0;
            for (std::size_t i = 1; i < st.S.size() && clean; ++i)
                clean = ord_at(st.S[i], x) == 0;
            if (clean && (!best || j < best_j)) {
                best = x;
                best_j = j;
            }
        }
    return best;
}

FieldElement cyclotomic_one_minus(const NumberField & K, long a)
{
    return FieldElement::one(K) - FieldElement::generator_power(K, a);
}

std::vector<FieldElement> orbit_of(const FieldElement & l)
{
    const FieldElement one = FieldElement::one(l.field());
    const FieldElement m = one - l;
    return {l, l.inverse(), m, m.inverse(), l / (l - one), (l - one) / l};
}

struct CanonicalLess {
    bool operator()(const FieldElement & a, const FieldElement & b) const { return canonical_less(a, b); }
};

}  // namespace

bool STSets::in_T(const PrimeIdeal & P) const
{
    return std::any_of(T.begin(), T.end(), [&](const PrimeIdeal & Q) { return Q == P; });
}

STSets compute_ST(const NumberField & K)
{
    STSets st;
    st.S = factor_two(K);
    for (const auto & P : st.S)
        if (P.f == 1)
            st.T.push_back(P);
    return st;
}

std::string to_string(Completeness c)
{
    return c == Completeness::Exact ? "exact" : "finite-index-subgroup";
}

SUnitGroupDesc sunit_describe(const NumberField & K, const STSets & st)
{
    SUnitGroupDesc d{FieldElement::integer(K, -1), 2, {}, Completeness::Exact};
    if (K.kind() == FieldKind::Cyclotomic2) {
        const long order = 2L * K.degree();
        d.torsion_generator = FieldElement::generator(K);
        d.torsion_order = order;
        const FieldElement pi = cyclotomic_one_minus(K, 1);
        d.generators.push_back(pi);
        for (long a = 3; a < order / 2; a += 2)
            d.generators.push_back(cyclotomic_one_minus(K, a) / pi);
        // Q(zeta4) = Q(i): <i> x <1-i> is everything.
        d.completeness = order == 4 ? Completeness::Exact : Completeness::FiniteIndexSubgroup;
        return d;
    }

    const long m = K.parameter();
    if (m > 0) {
        d.completeness = Completeness::FiniteIndexSubgroup;
        d.generators.push_back(fundamental_unit(K));
        if (st.S.size() == 1 && st.S[0].e == 1) {
            d.generators.push_back(FieldElement::integer(K, 2));
        } else {
            auto x = search_two_part(st, K);
            if (st.S.size() == 2 || !x)
                d.generators.push_back(FieldElement::integer(K, 2));
            if (x)
                d.generators.push_back(*x);
        }
        return d;
    }

    if (m == -1) {
        d.torsion_generator = FieldElement::generator(K);
        d.torsion_order = 4;
        d.generators.push_back(from_integral_basis(K, {1, 1}));
    } else if (m == -2) {
        d.generators.push_back(FieldElement::generator(K));
    } else if (st.S.size() == 2) {
        // (2) = P P' with [P] of order k: S-units are torsion x <2, g> with (g) = P^k.
        Ideal P = Ideal::of_prime(st.S[0]);
        long k = class_order(P);
        Ideal Pk = Ideal::unit(K);
        for (long i = 0; i < k; ++i)
            Pk = Pk * P;
        d.generators.push_back(FieldElement::integer(K, 2));
        d.generators.push_back(*principal_generator(Pk));
    } else {
        if (m == -3) {
            d.torsion_generator = from_integral_basis(K, {0, 1});
            d.torsion_order = 6;
        }
        d.generators.push_back(FieldElement::integer(K, 2));
    }
    return d;
}

long PrimeValuation::t() const
{
    return std::max(std::labs(ord_lambda), std::labs(ord_mu));
}

bool is_s_unit(const FieldElement & x)
{
    if (x.is_zero())
        fail(ErrorKind::ValuationOfZero, "is_s_unit of zero");
    mpz_class D = integral_denominator(x);
    if (!is_power_of_two(D))
        return false;
    mpq_class n = norm(FieldElement::rational(x.field(), mpq_class(D)) * x);
    return is_power_of_two(abs(n.get_num())) && n.get_den() == 1;
}

SUnitSolution make_solution(const STSets & st, const FieldElement & lambda)
{
    const FieldElement mu = FieldElement::one(lambda.field()) - lambda;
    if (lambda.is_zero() || mu.is_zero())
        fail(ErrorKind::PreconditionViolation, "lambda must not be 0 or 1");
    if (!is_s_unit(lambda) || !is_s_unit(mu))
        fail(ErrorKind::PreconditionViolation, "lambda and mu must be S-units: " + lambda.to_string());
    SUnitSolution s{lambda, mu, {}};
    for (const auto & P : st.S)
        s.valuations.push_back({ord_at(P, lambda), ord_at(P, mu)});
    return s;
}

void sort_solutions(std::vector<SUnitSolution> & sols)
{
    std::sort(sols.begin(), sols.end(),
              [](const SUnitSolution & a, const SUnitSolution & b) { return canonical_less(a.lambda, b.lambda); });
}

std::vector<SUnitSolution> solve_iq_ramified(const NumberField & K)
{
    if (!K.is_imaginary_quadratic() || (mod4(K.parameter()) != 2 && mod4(K.parameter()) != 3))
        fail(ErrorKind::WrongFamily, "solve_iq_ramified needs Q(sqrt(-d)) with -d = 2, 3 mod 4, got " + K.id());
    const STSets st = compute_ST(K);
    const SUnitGroupDesc desc = sunit_describe(K, st);
    // lambda = torsion^a * g^b.  For d > 2, g = 2 and |b| <= 2; for d = 1, 2,
    // g generates the prime above 2 and |b| <= 4 (docs/sunit_bounds.md).
    const long box = K.parameter() < -2 ? 2 : 4;
    const FieldElement & g = desc.generators.at(0);
    std::vector<SUnitSolution> out;
    FieldElement tor = FieldElement::one(K);
    for (long a = 0; a < desc.torsion_order; ++a, tor *= desc.torsion_generator)
        for (long b = -box; b <= box; ++b) {
            FieldElement lambda = tor * g.pow(b);
            FieldElement mu = FieldElement::one(K) - lambda;
            if (!mu.is_zero() && is_s_unit(mu))
                out.push_back(make_solution(st, lambda));
        }
    sort_solutions(out);
    return out;
}

SearchResult bounded_search(const NumberField & K, const STSets & st, const SUnitGroupDesc & desc, int box,
                            unsigned threads)
{
    if (box < 1)
        fail(ErrorKind::PreconditionViolation, "search box must be at least 1");
    const std::size_t r = desc.generators.size();
    const long width = 2L * box + 1;

    // powers[i][e + box] = gen_i^e
    std::vector<std::vector<FieldElement>> powers(r);
    for (std::size_t i = 0; i < r; ++i)
        for (long e = -box; e <= box; ++e)
            powers[i].push_back(desc.generators[i].pow(e));
    std::vector<FieldElement> torsion;
    FieldElement tor = FieldElement::one(K);
    for (long j = 0; j < desc.torsion_order; ++j, tor *= desc.torsion_generator)
        torsion.push_back(tor);

    // One task per (torsion exponent, first exponent); the rest is an odometer.
    const long first_width = r == 0 ? 1 : width;
    const long tasks = desc.torsion_order * first_width;
    std::vector<std::vector<FieldElement>> hits(tasks);
    std::atomic<long> next{0};

    auto worker = [&] {
        for (long task; (task = next.fetch_add(1)) < tasks;) {
            FieldElement base = torsion[task / first_width];
            if (r > 0)
                base *= powers[0][task % first_width];
            const std::size_t rest = r == 0 ? 0 : r - 1;
            std::vector<long> digit(rest, 0);
            std::vector<FieldElement> prefix(rest + 1, base);
            for (std::size_t i = 0; i < rest; ++i)
                prefix[i + 1] = prefix[i] * powers[i + 1][0];
            for (;;) {
                const FieldElement & lambda = prefix[rest];
                if (!lambda.is_one()) {
                    FieldElement mu = FieldElement::one(K) - lambda;
                    if (is_s_unit(mu))
                        hits[task].push_back(lambda);
                }
                std::size_t pos = rest;
                while (pos > 0 && digit[pos - 1] == width - 1)
                    digit[--pos] = 0;
                if (pos == 0)
                    break;
                ++digit[pos - 1];
                for (std::size_t i = pos - 1; i < rest; ++i)
                    prefix[i + 1] = prefix[i] * powers[i + 1][digit[i]];
            }
        }
    };

    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<long>(n, tasks));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto & th : pool)
        th.join();

    std::set<FieldElement, CanonicalLess> lambdas;
    for (const auto & task_hits : hits)
        for (const auto & l : task_hits)
            for (auto & o : orbit_of(l))
                lambdas.insert(std::move(o));

    SearchResult res;
    for (const auto & l : lambdas)
        res.solutions.push_back(make_solution(st, l));
    res.complete = false;
    return res;
}

std::vector<ListEntry> parse_solution_list(std::string_view text)
{
    std::vector<ListEntry> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line.front() == '#')
            continue;
        out.push_back({line_no, std::string(line)});
    }
    return out;
}

std::string to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::Valid:
        return "valid";
    case EntryStatus::NotSUnit:
        return "not-s-unit";
    case EntryStatus::Degenerate:
        return "degenerate";
    case EntryStatus::ParseError:
        return "parse-error";
    }
    return "?";
}

std::size_t ListReport::valid_count() const
{
    return std::count_if(entries.begin(), entries.end(),
                         [](const EntryReport & e) { return e.status == EntryStatus::Valid; });
}

ListReport verify_solution_list(const NumberField & K, const STSets & st, const std::vector<ListEntry> & entries)
{
    ListReport report;
    for (const auto & entry : entries) {
        EntryReport r{entry, EntryStatus::ParseError, {}, std::nullopt, 0};
        std::optional<FieldElement> lambda;
        try {
            lambda = parse_element(K, entry.text, true);
        } catch (const Error & e) {
            r.message = e.what();
        }
        if (lambda) {
            FieldElement mu = FieldElement::one(K) - *lambda;
            if (lambda->is_zero() || mu.is_zero()) {
                r.status = EntryStatus::Degenerate;
                r.message = "lambda is 0 or 1";
            } else if (!is_s_unit(*lambda)) {
                r.status = EntryStatus::NotSUnit;
                r.message = "lambda is not an S-unit";
            } else if (!is_s_unit(mu)) {
                r.status = EntryStatus::NotSUnit;
                r.message = "mu is not an S-unit";
            } else {
                r.status = EntryStatus::Valid;
                r.solution = make_solution(st, *lambda);
                for (const auto & v : r.solution->valuations)
                    r.max_valuation = std::max(r.max_valuation, v.t());
                report.global_max = std::max(report.global_max, r.max_valuation);
            }
        }
        report.entries.push_back(std::move(r));
    }
    return report;
}

}  // namespace aflt
