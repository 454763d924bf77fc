#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbiclass {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/**
 * Exact rational number.
 *
 * Values whose reduced numerator and denominator fit in 64 bits are stored
 * inline; anything larger is promoted to an arbitrary-precision rational and
 * demoted again as soon as it fits. The representation is canonical, so
 * equality and hashing are structural.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigRational& value);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p", "p/q" or a decimal integer pair; throws ParseError.
    static Rational parse(const std::string& num, const std::string& den = "1");

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const { return !big_; }
    int sign() const;

    BigInt numerator() const;
    BigInt denominator() const;
    BigRational to_big() const;

    std::string num_string() const;
    std::string den_string() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::size_t hash() const;

private:
    void assign_big(BigRational value);
    void set_from_int128(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace orbiclass

template <>
struct std::hash<orbiclass::Rational> {
    std::size_t operator()(const orbiclass::Rational& r) const noexcept { return r.hash(); }
};
