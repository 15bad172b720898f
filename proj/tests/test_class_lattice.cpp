#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "aflt/class_group.hpp"
#include "aflt/errors.hpp"
#include "aflt/prime_ideal.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace aflt;
using aflt::testing::kind_of;

namespace {

Ideal ideal2(const NumberField & K, long a, std::string_view g)
{
    std::vector<FieldElement> gens{FieldElement::integer(K, a), parse_element(K, g, true)};
    return Ideal::generated_by(K, gens);
}

QuadForm qf(long a, long b, long c) { return {a, b, c}; }

bool is_fundamental(long D)
{
    if (D % 4 == 1 || D % 4 == -3)
        return is_squarefree(D);
    if (D % 4 != 0)
        return false;
    long m = D / 4;
    return (m % 4 == 2 || m % 4 == -2 || m % 4 == 3 || m % 4 == -1) && is_squarefree(m);
}

long field_parameter(long D) { return D % 4 == 0 ? D / 4 : D; }

}  // namespace

TEST_CASE("Gauss reduction")
{
    CHECK(reduce(qf(3, 2, 2)) == qf(2, 2, 3));
    CHECK(reduce(qf(1, 0, 5)) == qf(1, 0, 5));
    CHECK(reduce(qf(6, 10, 5)).is_reduced());
    CHECK(reduce(qf(6, 10, 5)).discriminant() == -20);
    CHECK(principal_form(-20) == qf(1, 0, 5));
    CHECK(principal_form(-3) == qf(1, 1, 1));
    CHECK(qf(2, 2, 3).to_string() == "(2,2,3)");
}

TEST_CASE("ideal_to_reduced_form examples")
{
    auto K = NumberField::quadratic(-5);
    CHECK(ideal_to_reduced_form(ideal2(K, 2, "1;1")) == qf(2, 2, 3));
    CHECK(ideal_to_reduced_form(Ideal::unit(K)) == qf(1, 0, 5));
    // (3, 2, 2) is not reduced; it reduces to (2, 2, 3), the only non-principal class.
    CHECK(ideal_to_reduced_form(ideal2(K, 3, "1;1")) == reduce(qf(3, 2, 2)));
    CHECK(kind_of([&] { ideal_to_reduced_form(Ideal::unit(NumberField::quadratic(5))); }) == ErrorKind::UnsupportedField);
}

TEST_CASE("class numbers: examples, form enumeration and the analytic formula")
{
    CHECK(class_number(NumberField::quadratic(-1)) == 1);
    CHECK(class_number(NumberField::quadratic(-5)) == 2);
    CHECK(class_number(NumberField::quadratic(-14)) == 4);
    CHECK(kind_of([] { class_number(NumberField::quadratic(2)); }) == ErrorKind::UnsupportedField);
    CHECK(kind_of([] { class_number(NumberField::cyclotomic2(3)); }) == ErrorKind::UnsupportedField);

    for (long D = -3; D >= -400; --D) {
        if (!is_fundamental(D))
            continue;
        auto K = NumberField::quadratic(field_parameter(D));
        REQUIRE(K.discriminant() == D);
        long h = class_number(K);
        CHECK_MESSAGE(h == aflt::testing::analytic_class_number(D), "D=" << D);
        auto forms = reduced_forms(D);
        auto brute = aflt::testing::brute_reduced_forms(D);
        REQUIRE(forms.size() == brute.size());
        for (std::size_t i = 0; i < forms.size(); ++i)
            CHECK(forms[i] == qf(brute[i].a, brute[i].b, brute[i].c));
        for (const auto & f : forms) {
            CHECK(f.is_reduced());
            CHECK(f.discriminant() == D);
        }
    }
}

TEST_CASE("principal_generator examples")
{
    auto K = NumberField::quadratic(-5);
    auto P = factor_two(K)[0];
    auto I = Ideal::of_prime(P);
    CHECK_FALSE(principal_generator(I).has_value());
    auto g2 = principal_generator(I * I);
    REQUIRE(g2.has_value());
    CHECK(*g2 == FieldElement::integer(K, 2));
    auto s = FieldElement::generator(K);
    auto gs = principal_generator(Ideal::principal(s));
    REQUIRE(gs.has_value());
    CHECK(*gs == s);
    CHECK(class_order(I) == 2);
    CHECK(class_order(Ideal::unit(K)) == 1);
}

TEST_CASE("random principal ideals: principal form and generator round trip")
{
    std::mt19937_64 rng(5);
    std::vector<NumberField> fields{NumberField::quadratic(-1), NumberField::quadratic(-2),
                                    NumberField::quadratic(-3), NumberField::quadratic(-5),
                                    NumberField::quadratic(-14), NumberField::quadratic(-23),
                                    NumberField::quadratic(-47)};
    for (int i = 0; i < 140; ++i) {
        const auto & K = fields[i % fields.size()];
        FieldElement g = FieldElement::zero(K);
        while (g.is_zero())
            g = aflt::testing::random_integral(K, rng, 15);
        Ideal I = Ideal::principal(g);
        CHECK(ideal_to_reduced_form(I) == principal_form(K.discriminant()));
        auto h = principal_generator(I);
        REQUIRE(h.has_value());
        CHECK(Ideal::principal(*h) == I);
        // h / g is a unit.
        auto q = *h / g;
        CHECK(norm(q) == 1);
        CHECK(is_integral(q));
    }
}

TEST_CASE("form classes agree with principality of I * conj(J)")
{
    for (long m : {-5L, -14L, -23L, -26L}) {
        auto K = NumberField::quadratic(m);
        std::vector<Ideal> ideals;
        for (long l : {2L, 3L, 5L, 7L, 11L, 13L})
            for (const auto & P : primes_above(K, l))
                ideals.push_back(Ideal::of_prime(P));
        for (const auto & I : ideals)
            for (const auto & J : ideals) {
                bool same = ideal_to_reduced_form(I) == ideal_to_reduced_form(J);
                bool principal = principal_generator(I * J.negate_generator()).has_value();
                CHECK(same == principal);
            }
    }
}

TEST_CASE("representatives_H")
{
    auto Ki = NumberField::quadratic(-1);
    auto Hi = representatives_H(Ki);
    REQUIRE(Hi.size() == 1);
    CHECK(Hi[0].norm() == 5);
    CHECK(Hi[0].label() == "(5, 2+sqrt(-1))");
    CHECK(Ideal::of_prime(Hi[0]) == Ideal::principal(parse_element(Ki, "2;1")));

    auto K5 = NumberField::quadratic(-5);
    auto H5 = representatives_H(K5);
    REQUIRE(H5.size() == 2);
    std::set<std::string> labels{H5[0].label(), H5[1].label()};
    CHECK(labels.count("(5, sqrt(-5))") == 1);
    CHECK(labels.count("(3, 1+sqrt(-5))") == 1);

    auto H3 = representatives_H(NumberField::quadratic(-3));
    REQUIRE(H3.size() == 1);
    CHECK(H3[0].norm() == 3);

    CHECK(kind_of([] { representatives_H(NumberField::quadratic(3)); }) == ErrorKind::UnsupportedField);

    // One odd prime per class, each minimal among odd primes of its class.
    for (long m : {-5L, -14L, -21L, -23L, -30L, -47L, -71L}) {
        auto K = NumberField::quadratic(m);
        auto H = representatives_H(K);
        CHECK(static_cast<long>(H.size()) == class_number(K));
        std::map<std::string, long> class_min;
        for (long l = 3; l < 200; l += 2) {
            if (!is_prime(l))
                continue;
            for (const auto & P : primes_above(K, l)) {
                auto key = ideal_to_reduced_form(Ideal::of_prime(P)).to_string();
                long n = P.norm().get_si();
                if (!class_min.count(key) || n < class_min[key])
                    class_min[key] = n;
            }
        }
        std::set<std::string> seen;
        for (const auto & P : H) {
            CHECK(P.prime != 2);
            auto key = ideal_to_reduced_form(Ideal::of_prime(P)).to_string();
            CHECK(seen.insert(key).second);
            CHECK(P.norm() == class_min[key]);
        }
    }
}
