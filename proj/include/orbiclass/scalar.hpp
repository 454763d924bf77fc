#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "orbiclass/rational.hpp"

namespace orbiclass {

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Euler's totient, i.e. the degree of the m-th cyclotomic field.
int totient(int m);

int lcm_conductor(int a, int b);

/**
 * Element of the cyclotomic field Q(zeta_m).
 *
 * Stored as the dense coordinate vector of its reduced residue modulo the
 * m-th cyclotomic polynomial in the power basis 1, zeta, ..., zeta^(phi(m)-1).
 * Values at different conductors compare and combine after promotion to the
 * lcm conductor.
 */
class Scalar {
public:
    Scalar() : conductor_(1), coords_(1) {}
    Scalar(std::int64_t value) : conductor_(1), coords_{Rational(value)} {}  // NOLINT(implicit)
    Scalar(const Rational& value, int conductor = 1);  // NOLINT(implicit)

    /// Reduces an arbitrary-length coordinate sequence modulo Phi_m.
    static Scalar make(int conductor, std::vector<Rational> coords);
    /// zeta_m^power.
    static Scalar zeta(int conductor, int power = 1);
    /// 2 cos(2 pi k / m), i.e. zeta^k + zeta^-k.
    static Scalar two_cos(int conductor, int k = 1);

    int conductor() const { return conductor_; }
    std::span<const Rational> coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True iff the value lies in Q (only the constant coordinate is nonzero).
    bool is_rational() const;
    Rational rational_value() const;

    /// Re-expresses the value in Q(zeta_target); target must be a multiple of
    /// the current conductor.
    Scalar promote(int target) const;

    /// Image under zeta -> zeta^-1 (complex conjugation).
    Scalar conj() const;
    bool is_real() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Hash of the coordinates at the stored conductor. Only consistent with
    /// equality among scalars sharing a conductor.
    std::size_t coordinate_hash() const;

    /// Lexicographic order on (conductor, coordinates); used for canonical
    /// orderings, not for numeric comparison.
    friend std::strong_ordering canonical_order(const Scalar& a, const Scalar& b);

    std::string to_string() const;

    /// Adds the raw product polynomial of a and b (same conductor, length
    /// 2*phi-1) into acc; finish with reduce_into().
    static void accumulate_product(std::vector<Rational>& acc, const Scalar& a, const Scalar& b);
    static Scalar reduce_accumulator(int conductor, std::vector<Rational>& acc);

private:
    Scalar(int conductor, std::vector<Rational> coords, bool /*already reduced*/)
        : conductor_(conductor), coords_(std::move(coords)) {}

    int conductor_;
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class Ordering { less, equal, greater };

/**
 * Orders two real scalars. Equality is decided exactly; otherwise the
 * difference is enclosed in rational intervals whose width halves with every
 * refinement until its sign is certain. Throws NotReal for non-real input.
 */
Ordering compare_real(const Scalar& a, const Scalar& b);

/// Rational interval [lo, hi] guaranteed to contain the real scalar, of width
/// at most 2^-bits.
struct RealEnclosure {
    Rational lo;
    Rational hi;
};
RealEnclosure enclose_real(const Scalar& a, int bits);

}  // namespace orbiclass
