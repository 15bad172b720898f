#include "aflt/frey.hpp"

#include <algorithm>

#include "aflt/class_group.hpp"
#include "aflt/errors.hpp"
#include "aflt/ideal.hpp"

namespace aflt {

FreyCurve frey_invariants(const FieldElement & a, const FieldElement & b, const FieldElement & c, long p)
{
    if (a.is_zero() || b.is_zero() || c.is_zero())
        fail(ErrorKind::TrivialSolution, "abc = 0");
    if (!is_integral(a) || !is_integral(b) || !is_integral(c))
        fail(ErrorKind::PreconditionViolation, "a, b, c must be integral");
    if (p < 1)
        fail(ErrorKind::PreconditionViolation, "exponent must be positive");
    const NumberField & K = a.field();
    const FieldElement A = a.pow(p), B = b.pow(p), C = c.pow(p);
    const FieldElement sixteen = FieldElement::integer(K, 16);
    FreyCurve E{a, b, c, p, sixteen * (B * B - A * C), sixteen * A * A * B * B * C * C, FieldElement::zero(K),
                {FieldElement::zero(K), B - A, FieldElement::zero(K), -(A * B), FieldElement::zero(K)}};
    E.j = E.c4 * E.c4 * E.c4 / E.delta;
    return E;
}

ValuationIdentity jval_identity(const PrimeIdeal & P, const FieldElement & a, const FieldElement & b,
                                const FieldElement & c, long p)
{
    if (P.prime != 2 || P.f != 1)
        fail(ErrorKind::PreconditionViolation, "P must lie above 2 with residue degree 1");
    if (a.is_zero() || b.is_zero() || c.is_zero())
        fail(ErrorKind::TrivialSolution, "abc = 0");
    const long vb = ord_at(P, b);
    if (vb <= 0 || ord_at(P, a) != 0 || ord_at(P, c) != 0)
        fail(ErrorKind::PreconditionViolation, "need P | b and P coprime to a and c");
    const FreyCurve E = frey_invariants(a, b, c, p);
    return {ord_at(P, E.j), 8 * ord_at(P, mpq_class(2)) - 2 * p * vb};
}

ValuationIdentity jval_odd_identity(const PrimeIdeal & m, const FieldElement & a, const FieldElement & b,
                                    const FieldElement & c, long p)
{
    if (m.prime == 2)
        fail(ErrorKind::PreconditionViolation, "m must be odd");
    if (a.is_zero() || b.is_zero() || c.is_zero())
        fail(ErrorKind::TrivialSolution, "abc = 0");
    std::array<long, 3> v{ord_at(m, a), ord_at(m, b), ord_at(m, c)};
    std::sort(v.begin(), v.end());
    const long t = v[2] - v[1];
    if (v[0] != v[1] || t < 1)
        fail(ErrorKind::PreconditionViolation, "need two equal valuations at m and a strictly larger third");
    const FreyCurve E = frey_invariants(a, b, c, p);
    return {ord_at(m, E.j), -2 * p * t};
}

std::string to_string(ReductionType r)
{
    return r == ReductionType::PotentiallyGood ? "potentially-good" : "potentially-multiplicative";
}

InertiaClassification inertia_classify(JValuation ord_q_j, long p)
{
    if (p < 5 || !is_prime(p))
        fail(ErrorKind::UnsupportedExponent, "p must be a prime >= 5, got " + std::to_string(p));
    InertiaClassification out;
    out.assumption = "q does not divide " + std::to_string(p);
    if (ord_q_j.is_nonnegative()) {
        out.type = ReductionType::PotentiallyGood;
        out.orders = {1, 2, 3, 4, 6, 8, 12, 24};
    } else {
        out.type = ReductionType::PotentiallyMultiplicative;
        if (*ord_q_j.value % p != 0)
            out.orders = {p, 2 * p};
        else
            out.orders = {1, 2};
    }
    return out;
}

long conductor_exponent_bound(const PrimeIdeal & q)
{
    return 2 + 3 * ord_at(q, mpq_class(3)) + 6 * ord_at(q, mpq_class(2));
}

FieldElement legendre_jprime(const FieldElement & l)
{
    const FieldElement one = FieldElement::one(l.field());
    if (l.is_zero() || l.is_one())
        fail(ErrorKind::DegenerateLambda, "lambda must not be 0 or 1");
    const FieldElement u = l * l - l + one;
    const FieldElement w = l * (one - l);
    return FieldElement::integer(l.field(), 256) * u * u * u / (w * w);
}

LambdaOrbit lambda_orbit(const FieldElement & l)
{
    const FieldElement one = FieldElement::one(l.field());
    if (l.is_zero() || l.is_one())
        fail(ErrorKind::DegenerateLambda, "lambda must not be 0 or 1");
    const FieldElement m = one - l;
    return {{l, l.inverse(), m, m.inverse(), l / (l - one), (l - one) / l}, legendre_jprime(l)};
}

NormalizedTriple normalize_solution(const FieldElement & a, const FieldElement & b, const FieldElement & c)
{
    const NumberField & K = a.field();
    if (!K.is_imaginary_quadratic())
        fail(ErrorKind::UnsupportedField, "normalize_solution needs an imaginary quadratic field, got " + K.id());
    if (a.is_zero() || b.is_zero() || c.is_zero())
        fail(ErrorKind::TrivialSolution, "abc = 0");
    const std::vector<FieldElement> gens{a, b, c};
    const Ideal G = Ideal::generated_by(K, gens);
    const QuadForm cls = ideal_to_reduced_form(G);
    for (const auto & m : representatives_H(K)) {
        const Ideal M = Ideal::of_prime(m);
        if (!(ideal_to_reduced_form(M) == cls))
            continue;
        // xi G = M with xi = gamma / N(G), (gamma) = M conj(G).
        const auto gamma = principal_generator(M * G.negate_generator());
        if (!gamma)
            fail(ErrorKind::PreconditionViolation, "class lookup inconsistent");
        const FieldElement xi = *gamma / FieldElement::rational(K, mpq_class(G.norm()));
        return {xi * a, xi * b, xi * c, xi, m};
    }
    fail(ErrorKind::PreconditionViolation, "no representative found for the class");
}

}  // namespace aflt
