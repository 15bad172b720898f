#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aflt/field_element.hpp"
#include "aflt/prime_ideal.hpp"

namespace aflt {

/// Long Weierstrass coefficients [a1, a2, a3, a4, a6].
using WeierstrassModel = std::array<FieldElement, 5>;

/*
 * Frey curve Y^2 = X(X - a^p)(X + b^p) of a triple (a, b, c).  The closed
 * forms c4 = 16(B^2 - AC), Delta = 16 A^2 B^2 C^2, j = c4^3 / Delta use
 * A = a^p, B = b^p, C = c^p and agree with the model's own invariants
 * whenever A + B + C = 0.
 */
struct FreyCurve {
    FieldElement a, b, c;
    long p = 1;
    FieldElement c4, delta, j;
    WeierstrassModel model;
};

/// Throws TrivialSolution if abc = 0, PreconditionViolation if a, b or c is
/// not integral or p < 1.
FreyCurve frey_invariants(const FieldElement & a, const FieldElement & b, const FieldElement & c, long p);

struct ValuationIdentity {
    long direct = 0;
    long closed_form = 0;
};

/// ord_P(j) against 8 ord_P(2) - 2p ord_P(b).  Requires P above 2 with f = 1,
/// ord_P(b) > 0 and ord_P(a) = ord_P(c) = 0 (PreconditionViolation otherwise).
ValuationIdentity jval_identity(const PrimeIdeal & P, const FieldElement & a, const FieldElement & b,
                                const FieldElement & c, long p);

/// ord_m(j) against -2pt at an odd prime m where two of ord_m(a), ord_m(b),
/// ord_m(c) are equal and the third exceeds them by t >= 1.
ValuationIdentity jval_odd_identity(const PrimeIdeal & m, const FieldElement & a, const FieldElement & b,
                                    const FieldElement & c, long p);

enum class ReductionType { PotentiallyGood, PotentiallyMultiplicative };

std::string to_string(ReductionType r);

/// ord_q(j) as an exact integer, or only known to be >= 0.
struct JValuation {
    std::optional<long> value;
    static JValuation exact(long v) { return {v}; }
    static JValuation nonnegative() { return {std::nullopt}; }
    bool is_nonnegative() const { return !value || *value >= 0; }
};

struct InertiaClassification {
    ReductionType type = ReductionType::PotentiallyGood;
    std::vector<long> orders;  // possible inertia image orders, ascending
    std::string assumption;    // what the caller must guarantee
};

/// Throws UnsupportedExponent unless p is a prime >= 5.
InertiaClassification inertia_classify(JValuation ord_q_j, long p);

/// 2 + 3 ord_q(3) + 6 ord_q(2).
long conductor_exponent_bound(const PrimeIdeal & q);

struct LambdaOrbit {
    /// lambda, 1/lambda, 1-lambda, 1/(1-lambda), lambda/(lambda-1), (lambda-1)/lambda
    std::array<FieldElement, 6> values;
    FieldElement jprime;
};

/// j' of the Legendre family: 2^8 (l^2 - l + 1)^3 / (l^2 (1-l)^2).
FieldElement legendre_jprime(const FieldElement & lambda);

/// Throws DegenerateLambda for lambda in {0, 1}.
LambdaOrbit lambda_orbit(const FieldElement & lambda);

struct NormalizedTriple {
    FieldElement a, b, c;
    FieldElement scale;       // xi with (a', b', c') = xi (a, b, c)
    PrimeIdeal representative;  // member of H with aZ_K + bZ_K + cZ_K equal to it
};

/// Scales (a, b, c) so that its gcd ideal is the H representative of its class.
/// Imaginary quadratic only (UnsupportedField); TrivialSolution if abc = 0.
NormalizedTriple normalize_solution(const FieldElement & a, const FieldElement & b, const FieldElement & c);

}  // namespace aflt
