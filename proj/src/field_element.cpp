#include "aflt/field_element.hpp"

#include <cctype>
#include <sstream>

#include "aflt/errors.hpp"

namespace aflt {

namespace {

using Poly = std::vector<mpz_class>;

// Product of two polynomials of length n reduced modulo theta^n = c.
Poly mul_binomial(const Poly & a, const Poly & b, const mpz_class & c)
{
    const size_t n = a.size();
    Poly full(2 * n - 1, mpz_class(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < n; ++j)
            if (b[j] != 0)
                full[i + j] += a[i] * b[j];
    }
    for (size_t k = full.size() - 1; k >= n; --k)
        if (full[k] != 0)
            full[k - n] += c * full[k];
    full.resize(n);
    return full;
}

// Splits a = E(theta^2) + theta*O(theta^2) and returns E^2 - theta^2 O^2 as a
// polynomial in phi = theta^2, an element of the index-2 subfield where
// phi^{n/2} = c.  This is x * x(-theta).
Poly relative_norm(const Poly & a, const mpz_class & c)
{
    const size_t h = a.size() / 2;
    Poly even(h), odd(h);
    for (size_t i = 0; i < h; ++i) {
        even[i] = a[2 * i];
        odd[i] = a[2 * i + 1];
    }
    Poly e2 = mul_binomial(even, even, c);
    Poly o2 = mul_binomial(odd, odd, c);
    Poly out(h);
    for (size_t i = 0; i < h; ++i)
        out[i] = e2[i];
    // phi * o2, wrapping phi^h = c.
    out[0] -= c * o2[h - 1];
    for (size_t i = 0; i + 1 < h; ++i)
        out[i + 1] -= o2[i];
    return out;
}

mpz_class norm_integral(Poly a, const mpz_class & c)
{
    while (a.size() > 1)
        a = relative_norm(a, c);
    return a[0];
}

// Returns (p, d) with a * p = d, d a nonzero integer.
std::pair<Poly, mpz_class> inverse_integral(const Poly & a, const mpz_class & c)
{
    if (a.size() == 1)
        return {Poly{mpz_class(1)}, a[0]};
    Poly conj = a;
    for (size_t i = 1; i < conj.size(); i += 2)
        conj[i] = -conj[i];
    auto [q, d] = inverse_integral(relative_norm(a, c), c);
    Poly lifted(a.size(), mpz_class(0));
    for (size_t i = 0; i < q.size(); ++i)
        lifted[2 * i] = q[i];
    return {mul_binomial(conj, lifted, c), d};
}

std::string trim(std::string_view s)
{
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

}  // namespace

FieldElement::FieldElement(NumberField field, const std::vector<mpq_class> & coordinates)
    : field_(std::move(field))
{
    if (static_cast<int>(coordinates.size()) != field_.degree())
        fail(ErrorKind::PreconditionViolation, "expected " + std::to_string(field_.degree()) + " coordinates");
    den_ = 1;
    for (const auto & q : coordinates)
        mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), q.get_den_mpz_t());
    num_.reserve(coordinates.size());
    for (const auto & q : coordinates)
        num_.push_back(q.get_num() * (den_ / q.get_den()));
    normalize();
}

FieldElement::FieldElement(NumberField field, std::vector<mpz_class> numerators, mpz_class denominator)
    : field_(std::move(field)), num_(std::move(numerators)), den_(std::move(denominator))
{
    if (static_cast<int>(num_.size()) != field_.degree())
        fail(ErrorKind::PreconditionViolation, "expected " + std::to_string(field_.degree()) + " coordinates");
    if (den_ == 0)
        fail(ErrorKind::DivisionByZero, "zero denominator");
    normalize();
}

FieldElement FieldElement::zero(const NumberField & field)
{
    return FieldElement(field, std::vector<mpz_class>(field.degree(), mpz_class(0)), mpz_class(1));
}

FieldElement FieldElement::one(const NumberField & field) { return rational(field, mpq_class(1)); }

FieldElement FieldElement::rational(const NumberField & field, const mpq_class & q)
{
    std::vector<mpz_class> num(field.degree(), mpz_class(0));
    num[0] = q.get_num();
    return FieldElement(field, std::move(num), q.get_den());
}

FieldElement FieldElement::generator(const NumberField & field) { return generator_power(field, 1); }

FieldElement FieldElement::generator_power(const NumberField & field, long k)
{
    const long n = field.degree();
    std::vector<mpz_class> num(n, mpz_class(0));
    if (field.kind() == FieldKind::Cyclotomic2) {
        // zeta has order 2n; zeta^n = -1.
        long r = ((k % (2 * n)) + 2 * n) % (2 * n);
        num[r % n] = r >= n ? -1 : 1;
        return FieldElement(field, std::move(num), mpz_class(1));
    }
    num[1] = 1;
    return FieldElement(field, std::move(num), mpz_class(1)).pow(k);
}

void FieldElement::normalize()
{
    mpz_class g = den_;
    for (const auto & v : num_) {
        if (g == 1)
            break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (den_ < 0)
        g = -g;
    if (g != 1) {
        for (auto & v : num_)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void FieldElement::check_same_field(const FieldElement & o) const
{
    if (!(field_ == o.field_))
        fail(ErrorKind::PreconditionViolation, "elements of different fields");
}

mpq_class FieldElement::coordinate(int i) const
{
    mpq_class q(num_.at(i), den_);
    q.canonicalize();
    return q;
}

std::vector<mpq_class> FieldElement::coordinates() const
{
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (int i = 0; i < degree(); ++i)
        out.push_back(coordinate(i));
    return out;
}

bool FieldElement::is_zero() const
{
    for (const auto & v : num_)
        if (v != 0)
            return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0)
            return false;
    return true;
}

bool FieldElement::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

mpq_class FieldElement::to_rational() const
{
    if (!is_rational())
        fail(ErrorKind::PreconditionViolation, "element is not rational");
    return coordinate(0);
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto & v : r.num_)
        v = -v;
    return r;
}

FieldElement & FieldElement::operator+=(const FieldElement & o)
{
    check_same_field(o);
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i)
            num_[i] += o.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

FieldElement & FieldElement::operator-=(const FieldElement & o) { return *this += -o; }

FieldElement & FieldElement::operator*=(const FieldElement & o)
{
    check_same_field(o);
    num_ = mul_binomial(num_, o.num_, field_.binomial_constant());
    den_ *= o.den_;
    normalize();
    return *this;
}

FieldElement & FieldElement::operator/=(const FieldElement & o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero");
    auto [p, d] = inverse_integral(num_, field_.binomial_constant());
    for (auto & v : p)
        v *= den_;
    return FieldElement(field_, std::move(p), std::move(d));
}

FieldElement FieldElement::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    FieldElement result = one(field_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

FieldElement FieldElement::negate_generator() const
{
    FieldElement r = *this;
    for (size_t i = 1; i < r.num_.size(); i += 2)
        r.num_[i] = -r.num_[i];
    return r;
}

bool FieldElement::operator==(const FieldElement & o) const
{
    return field_ == o.field_ && den_ == o.den_ && num_ == o.num_;
}

std::string FieldElement::to_string() const
{
    std::string out;
    for (int i = 0; i < degree(); ++i) {
        if (i > 0)
            out += ';';
        out += coordinate(i).get_str();
    }
    return out;
}

std::string FieldElement::pretty() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const std::string sym = field_.generator_symbol();
    for (int i = 0; i < degree(); ++i) {
        mpq_class q = coordinate(i);
        if (q == 0)
            continue;
        bool negative = q < 0;
        mpq_class a = abs(q);
        if (negative)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << '*';
        os << sym;
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

mpq_class norm(const FieldElement & x)
{
    mpz_class n = norm_integral(x.numerators(), x.field().binomial_constant());
    mpz_class d;
    mpz_pow_ui(d.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(x.degree()));
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::vector<mpq_class> integral_basis_coordinates(const FieldElement & x)
{
    auto c = x.coordinates();
    if (x.field().has_half_integral_basis()) {
        // a + b*theta = (a - b) + 2b * (1+theta)/2
        return {c[0] - c[1], 2 * c[1]};
    }
    return c;
}

FieldElement from_integral_basis(const NumberField & field, const std::vector<mpq_class> & coordinates)
{
    if (field.has_half_integral_basis()) {
        if (coordinates.size() != 2)
            fail(ErrorKind::PreconditionViolation, "expected 2 coordinates");
        mpq_class half = coordinates[1] / 2;
        return FieldElement(field, {coordinates[0] + half, half});
    }
    return FieldElement(field, coordinates);
}

std::vector<FieldElement> integral_basis(const NumberField & field)
{
    std::vector<FieldElement> out;
    const int n = field.degree();
    for (int i = 0; i < n; ++i) {
        std::vector<mpq_class> e(n, mpq_class(0));
        e[i] = 1;
        out.push_back(from_integral_basis(field, e));
    }
    return out;
}

mpz_class integral_denominator(const FieldElement & x)
{
    mpz_class d = 1;
    for (const auto & q : integral_basis_coordinates(x))
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    return d;
}

bool is_integral(const FieldElement & x) { return integral_denominator(x) == 1; }

int canonical_compare(const FieldElement & a, const FieldElement & b)
{
    for (int i = 0; i < a.degree(); ++i) {
        int s = cmp(a.numerators()[i] * b.denominator(), b.numerators()[i] * a.denominator());
        if (s != 0)
            return s < 0 ? -1 : 1;
    }
    return 0;
}

mpq_class parse_rational(std::string_view text)
{
    std::string s = trim(text);
    if (s.empty())
        fail(ErrorKind::ParseError, "empty rational");
    std::string body = s;
    std::string sign;
    if (body[0] == '-' || body[0] == '+') {
        if (body[0] == '-')
            sign = "-";
        body = body.substr(1);
    }
    auto slash = body.find('/');
    std::string p = body.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
        fail(ErrorKind::ParseError, "malformed rational '" + s + "'");
    mpz_class den(q, 10);
    if (den == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    mpq_class r(mpz_class(sign + p, 10), den);
    r.canonicalize();
    return r;
}

FieldElement parse_element(const NumberField & field, std::string_view text, bool allow_short)
{
    std::vector<mpq_class> coords;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(';', start);
        coords.push_back(parse_rational(text.substr(start, pos == std::string_view::npos ? text.size() - start : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    const size_t n = static_cast<size_t>(field.degree());
    if (coords.size() > n || (coords.size() < n && !allow_short))
        fail(ErrorKind::ParseError, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(coords.size()));
    coords.resize(n, mpq_class(0));
    return FieldElement(field, coords);
}

long integer_valuation(const mpz_class & z, long prime)
{
    if (z == 0)
        fail(ErrorKind::ValuationOfZero, "valuation of zero");
    mpz_class rest;
    mpz_class p(prime);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

long rational_valuation(const mpq_class & q, long prime)
{
    return integer_valuation(q.get_num(), prime) - integer_valuation(q.get_den(), prime);
}

}  // namespace aflt
