#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "aflt/ideal.hpp"

namespace aflt {

/// Binary quadratic form A x^2 + B xy + C y^2 of negative discriminant.
struct QuadForm {
    mpz_class a, b, c;

    mpz_class discriminant() const { return b * b - 4 * a * c; }
    /// |B| <= A <= C, and B >= 0 when |B| = A or A = C.
    bool is_reduced() const;
    std::string to_string() const;
    bool operator==(const QuadForm & o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Gauss reduction of a positive definite form.
QuadForm reduce(QuadForm f);

/// (1, 0, -D/4) or (1, 1, (1-D)/4).
QuadForm principal_form(const mpz_class & D);

/// All primitive reduced forms of discriminant D < 0, ordered by (A, B).
std::vector<QuadForm> reduced_forms(const mpz_class & D);

// Class-group operations below require an imaginary quadratic field and
// throw UnsupportedField otherwise.  Classes are compared by reduced form.
using IdealIQ = Ideal;

/// Reduced form of the class of I (ideal [A, (-B + sqrt D)/2] <-> (A, B, C)).
QuadForm ideal_to_reduced_form(const IdealIQ & I);

long class_number(const NumberField & K);

/// A generator g with (g) = I, or nullopt when I is not principal.  Among the
/// unit multiples the one with lexicographically largest coordinates is returned.
std::optional<FieldElement> principal_generator(const IdealIQ & I);

/// Order of [I] in the class group.
long class_order(const IdealIQ & I);

/*
 * The set H: for each ideal class, the odd prime of smallest norm in it.
 * Among primes of equal norm the first in the primes_above ordering wins
 * (generator theta + r with the smallest r).  Returned in order of norm.
 */
std::vector<PrimeIdeal> representatives_H(const NumberField & K);

}  // namespace aflt
