#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aflt {

enum class FieldKind { Quadratic, Cyclotomic2 };

struct Signature {
    int real = 0;     // r1
    int complex = 0;  // r2
    bool operator==(const Signature &) const = default;
};

/*
 * A supported number field K = Q(theta).  Both families are presented by a
 * binomial theta^n = c with n a power of two:
 *   quadratic   Q(sqrt m):     theta^2 = m
 *   cyclotomic2 Q(zeta_{2^k}): theta^{2^{k-1}} = -1
 * The handle is cheap to copy; the underlying data is immutable and shared.
 */
class NumberField {
public:
    static NumberField quadratic(long m);
    static NumberField cyclotomic2(int k);

    FieldKind kind() const;
    long parameter() const;
    int degree() const;
    Signature signature() const;
    const mpz_class & discriminant() const;

    /// Coefficients of the monic defining polynomial, constant term first.
    const std::vector<mpz_class> & defining_polynomial() const;

    /// The constant c in theta^n = c.
    const mpz_class & binomial_constant() const;

    bool is_quadratic() const { return kind() == FieldKind::Quadratic; }
    bool is_imaginary_quadratic() const { return is_quadratic() && parameter() < 0; }

    /// Quadratic field with m = 1 (mod 4): the ring of integers is Z[(1+theta)/2].
    bool has_half_integral_basis() const;

    /// Short identifier, e.g. "Q(sqrt(-5))" or "Q(zeta16)".
    std::string id() const;

    /// Printable name of theta, e.g. "sqrt(-5)" or "z".
    std::string generator_symbol() const;

    bool operator==(const NumberField & other) const;

private:
    struct Data;
    explicit NumberField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

/// make_field(kind, parameter): quadratic takes squarefree m not in {0,1};
/// cyclotomic2 takes 2 <= k <= 5.  Throws UnsupportedField otherwise.
NumberField make_field(FieldKind kind, long parameter);

bool is_squarefree(long m);

}  // namespace aflt
