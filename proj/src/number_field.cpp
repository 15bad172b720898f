#include "aflt/number_field.hpp"

#include "aflt/errors.hpp"

namespace aflt {

struct NumberField::Data {
    FieldKind kind;
    long parameter;
    int degree;
    Signature signature;
    mpz_class discriminant;
    mpz_class constant;
    std::vector<mpz_class> poly;
};

bool is_squarefree(long m)
{
    unsigned long a = m < 0 ? -static_cast<unsigned long>(m) : static_cast<unsigned long>(m);
    if (a == 0)
        return false;
    for (unsigned long p = 2; p * p <= a; ++p) {
        if (a % p != 0)
            continue;
        a /= p;
        if (a % p == 0)
            return false;
    }
    return true;
}

NumberField NumberField::quadratic(long m)
{
    if (m == 0 || m == 1)
        fail(ErrorKind::UnsupportedField, "quadratic parameter must not be 0 or 1");
    if (!is_squarefree(m))
        fail(ErrorKind::UnsupportedField, "quadratic parameter " + std::to_string(m) + " is not squarefree");
    auto d = std::make_shared<Data>();
    d->kind = FieldKind::Quadratic;
    d->parameter = m;
    d->degree = 2;
    d->signature = m > 0 ? Signature{2, 0} : Signature{0, 1};
    long r = ((m % 4) + 4) % 4;
    d->discriminant = r == 1 ? mpz_class(m) : mpz_class(4) * m;
    d->constant = m;
    d->poly = {mpz_class(-m), mpz_class(0), mpz_class(1)};
    return NumberField(std::move(d));
}

NumberField NumberField::cyclotomic2(int k)
{
    if (k < 2 || k > 5)
        fail(ErrorKind::UnsupportedField, "cyclotomic2 parameter k must satisfy 2 <= k <= 5");
    auto d = std::make_shared<Data>();
    d->kind = FieldKind::Cyclotomic2;
    d->parameter = k;
    int n = 1 << (k - 1);
    d->degree = n;
    d->signature = Signature{0, n / 2};
    // |disc Q(zeta_{2^k})| = 2^{(k-1) 2^{k-1}}, sign (-1)^{r2}.
    mpz_class disc;
    mpz_ui_pow_ui(disc.get_mpz_t(), 2, static_cast<unsigned long>((k - 1) * n));
    if ((n / 2) % 2 == 1)
        disc = -disc;
    d->discriminant = disc;
    d->constant = -1;
    d->poly.assign(n + 1, mpz_class(0));
    d->poly[0] = 1;
    d->poly[n] = 1;
    return NumberField(std::move(d));
}

NumberField make_field(FieldKind kind, long parameter)
{
    if (kind == FieldKind::Quadratic)
        return NumberField::quadratic(parameter);
    if (parameter < 2 || parameter > 5)
        fail(ErrorKind::UnsupportedField, "cyclotomic2 parameter k must satisfy 2 <= k <= 5");
    return NumberField::cyclotomic2(static_cast<int>(parameter));
}

FieldKind NumberField::kind() const { return data_->kind; }
long NumberField::parameter() const { return data_->parameter; }
int NumberField::degree() const { return data_->degree; }
Signature NumberField::signature() const { return data_->signature; }
const mpz_class & NumberField::discriminant() const { return data_->discriminant; }
const std::vector<mpz_class> & NumberField::defining_polynomial() const { return data_->poly; }
const mpz_class & NumberField::binomial_constant() const { return data_->constant; }

bool NumberField::has_half_integral_basis() const
{
    return is_quadratic() && ((parameter() % 4) + 4) % 4 == 1;
}

std::string NumberField::id() const
{
    if (is_quadratic())
        return "Q(sqrt(" + std::to_string(parameter()) + "))";
    return "Q(zeta" + std::to_string(1L << parameter()) + ")";
}

std::string NumberField::generator_symbol() const
{
    if (is_quadratic())
        return "sqrt(" + std::to_string(parameter()) + ")";
    return "z";
}

bool NumberField::operator==(const NumberField & other) const
{
    if (data_ == other.data_)
        return true;
    return data_->kind == other.data_->kind && data_->parameter == other.data_->parameter;
}

}  // namespace aflt
