#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "orbiclass/errors.hpp"
#include "orbiclass/scalar.hpp"

using namespace orbiclass;

namespace {

// 2cos(72 deg) = zeta_5 + zeta_5^4
Scalar golden_conjugate() { return Scalar::make(5, {0, 1, 0, 0, 1}); }

// Floating-point evaluation of a real scalar; test-only oracle.
double approx(const Scalar& s) {
    double re = 0;
    for (std::size_t j = 0; j < s.coords().size(); ++j) {
        double c = static_cast<double>(s.coords()[j].numerator()) / static_cast<double>(s.coords()[j].denominator());
        re += c * std::cos(2 * std::numbers::pi * static_cast<double>(j) / s.conductor());
    }
    return re;
}

Scalar random_scalar(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> c(totient(m));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return Scalar::make(m, c);
}

}  // namespace

TEST_CASE("rational arithmetic promotes to big integers and back") {
    Rational big(std::int64_t{1} << 62);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK((sq / big) == big);
    CHECK((sq / big).is_small());
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(-3, 6) == Rational(1, -2));
    CHECK(Rational::parse("-12", "8") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1x"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(totient(20) == 8);
    CHECK(totient(60) == 16);
}

TEST_CASE("make_scalar") {
    SUBCASE("rational subfield") {
        Scalar s = Scalar::make(1, {Rational(3, 2)});
        CHECK(s.is_rational());
        CHECK(s.rational_value() == Rational(3, 2));
    }
    SUBCASE("golden ratio conjugate satisfies x^2 + x - 1 = 0") {
        Scalar x = golden_conjugate();
        CHECK(x.coords().size() == 4);
        CHECK((x * x + x) == Scalar(1));
    }
    SUBCASE("zeta_4 squares to -1") {
        Scalar i = Scalar::make(4, {0, 1});
        CHECK(i * i == Scalar(-1));
    }
    SUBCASE("rejects conductor zero") { CHECK_THROWS_AS(Scalar::make(0, {1}), Error); }
}

TEST_CASE("field operations") {
    CHECK(Scalar(Rational(1, 2)) + Scalar(Rational(1, 2)) == Scalar(1));
    Scalar x = golden_conjugate();
    CHECK(x.inverse() == x + Scalar(1));
    Scalar i = Scalar::zeta(4);
    CHECK(i * i == Scalar(-1));
    CHECK_THROWS_AS(Scalar(Rational(0), 5).inverse(), DivisionByZero);
    // operands at different conductors meet at the lcm
    Scalar sum = x + i;
    CHECK(sum.conductor() == 20);
    CHECK(sum - i == x);
}

TEST_CASE("is_real") {
    CHECK(Scalar(Rational(7, 3)).is_real());
    CHECK(golden_conjugate().is_real());
    CHECK_FALSE(Scalar::zeta(4).is_real());
    CHECK(Scalar::zeta(4).conj() == -Scalar::zeta(4));
}

TEST_CASE("compare_real") {
    Scalar x = golden_conjugate();
    CHECK(compare_real(Scalar(Rational(1, 2)), Scalar(Rational(1, 2))) == Ordering::equal);
    CHECK(compare_real(x, Scalar(1)) == Ordering::less);
    CHECK(compare_real(Scalar(0), x) == Ordering::less);
    CHECK_THROWS_AS(compare_real(Scalar::zeta(4), Scalar(0)), NotReal);

    // 2cos(2pi/7) against a rational just below and above it.
    Scalar c7 = Scalar::two_cos(7);
    CHECK(compare_real(c7, Scalar(Rational(1246979603717467LL, 1000000000000000LL))) == Ordering::greater);
    CHECK(compare_real(c7, Scalar(Rational(1246979603717468LL, 1000000000000000LL))) == Ordering::less);

    RealEnclosure e = enclose_real(x, 100);
    CHECK(e.lo <= e.hi);
    CHECK((e.hi - e.lo) * Rational(BigInt(1) << 100, BigInt(1)) <= Rational(1));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(20241016);
    for (int m : {1, 3, 4, 5, 8, 12, 20}) {
        for (int trial = 0; trial < 15; ++trial) {
            Scalar a = random_scalar(rng, m), b = random_scalar(rng, m), c = random_scalar(rng, m);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
            // promotion commutes with the operations
            int up = m * 3;
            CHECK((a * b).promote(up) == a.promote(up) * b.promote(up));
            CHECK((a + b).promote(up) == a.promote(up) + b.promote(up));
        }
    }
}

TEST_CASE("compare_real is a total order consistent with equality") {
    std::mt19937 rng(7);
    std::vector<Scalar> values;
    for (int m : {5, 8, 12}) {
        for (int k = 0; k < 6; ++k) {
            Scalar a = random_scalar(rng, m);
            values.push_back(a + a.conj());
        }
    }
    values.push_back(values.front());
    for (const auto& a : values) {
        for (const auto& b : values) {
            Ordering ab = compare_real(a, b), ba = compare_real(b, a);
            CHECK((ab == Ordering::equal) == (a == b));
            CHECK((ab == Ordering::less) == (ba == Ordering::greater));
            if (std::abs(approx(a) - approx(b)) > 1e-9)
                CHECK((ab == Ordering::less) == (approx(a) < approx(b)));
        }
    }
}
