#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "aflt/field_element.hpp"

namespace aflt {

/*
 * A prime of Z_K given by a two-element representation (l, generator).
 *
 * The cofactor is an integral element beta with beta*P contained in l*Z_K and
 * beta not in P; it drives the valuation algorithm for primes that share
 * their residue characteristic with other primes.
 */
struct PrimeIdeal {
    NumberField field;
    long prime = 0;  // residue characteristic l
    int e = 0;       // ramification index
    int f = 0;       // residue degree
    FieldElement generator;
    FieldElement cofactor;
    bool unique_above = false;  // the only prime of K above l
    int index = 0;              // position in the fixed ordering of primes above l

    mpz_class norm() const;
    /// E.g. "(2, 1+sqrt(-5))", "(1-z)" or "(3)".
    std::string label() const;
    bool operator==(const PrimeIdeal & o) const;
};

/*
 * All primes above a rational prime l, in a fixed order: by residue degree,
 * then by the reduced coefficients (constant term first) of the monic factor
 * h with P = (l, h(theta)).  For degree-one factors theta + r this is
 * ascending r.  Sum of e*f over the result equals the field degree.
 */
std::vector<PrimeIdeal> primes_above(const NumberField & field, long prime);

std::vector<PrimeIdeal> factor_two(const NumberField & field);

/// ord_P(x).  Throws ValuationOfZero for x = 0.
long ord_at(const PrimeIdeal & P, const FieldElement & x);

/// ord_P(q) = e * v_l(q) for a nonzero rational q.
long ord_at(const PrimeIdeal & P, const mpq_class & q);

namespace detail {
// The two valuation routes, exposed so they can be checked against each other.
long ord_by_norm(const PrimeIdeal & P, const FieldElement & x);
long ord_by_cofactor(const PrimeIdeal & P, const FieldElement & x);
}  // namespace detail

bool is_prime(long n);

}  // namespace aflt
