#include "orbiclass/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "orbiclass/errors.hpp"

namespace orbiclass {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = -kMax;  // keep |value| symmetric so negation never overflows

unsigned __int128 abs128(__int128 v) { return v < 0 ? -static_cast<unsigned __int128>(v) : v; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max())
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt big_from_int128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = abs128(v);
    BigInt hi = static_cast<std::uint64_t>(u >> 64);
    BigInt r = (hi << 64) + static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min())
        set_from_int128(value, 1);
    else
        num_ = value;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    set_from_int128(num, den);
}

Rational::Rational(const BigRational& value) { assign_big(value); }

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    assign_big(BigRational(num, den));
}

Rational Rational::parse(const std::string& num, const std::string& den) {
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("malformed integer literal '" + s + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw ParseError("malformed integer literal '" + s + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    BigInt n = parse_int(num);
    BigInt d = parse_int(den);
    if (d == 0) throw ParseError("zero denominator in rational literal");
    return Rational(n, d);
}

void Rational::set_from_int128(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    unsigned __int128 g = gcd128(abs128(num), static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (num >= kMin && num <= kMax && den <= kMax) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
    } else {
        assign_big(BigRational(big_from_int128(num), big_from_int128(den)));
    }
}

void Rational::assign_big(BigRational value) {
    const BigInt& n = boost::multiprecision::numerator(value);
    const BigInt& d = boost::multiprecision::denominator(value);
    static const BigInt lo = BigInt(static_cast<std::int64_t>(kMin));
    static const BigInt hi = BigInt(static_cast<std::int64_t>(kMax));
    if (n >= lo && n <= hi && d <= hi) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const BigRational>(std::move(value));
    }
}

bool Rational::is_integer() const {
    return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
}

BigInt Rational::numerator() const {
    return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_);
}

BigInt Rational::denominator() const {
    return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_);
}

BigRational Rational::to_big() const { return big_ ? *big_ : BigRational(num_, den_); }

std::string Rational::num_string() const {
    return big_ ? boost::multiprecision::numerator(*big_).str() : std::to_string(num_);
}

std::string Rational::den_string() const {
    return big_ ? boost::multiprecision::denominator(*big_).str() : std::to_string(den_);
}

std::string Rational::to_string() const {
    if (is_integer()) return num_string();
    return num_string() + "/" + den_string();
}

Rational Rational::operator-() const {
    if (big_) return Rational(BigRational(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == rhs.den_) {
            set_from_int128(static_cast<__int128>(num_) + rhs.num_, den_);
        } else {
            set_from_int128(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                            static_cast<__int128>(den_) * rhs.den_);
        }
        return *this;
    }
    assign_big(to_big() + rhs.to_big());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        set_from_int128(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_big() * rhs.to_big());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    if (!big_ && !rhs.big_) {
        set_from_int128(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
        return *this;
    }
    assign_big(to_big() / rhs.to_big());
    return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    return a.to_big() < b.to_big();
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace orbiclass
