// Rigorous real enclosures for real cyclotomic scalars.
//
// A real element a = sum c_j zeta^j equals sum c_j cos(2 pi j / m). Every
// cosine is enclosed in a dyadic interval computed with integer arithmetic at
// a fixed number of fractional bits; lower bounds always round down and upper
// bounds always round up, so the enclosures hold at every precision.

#include <map>
#include <mutex>

#include "orbiclass/errors.hpp"
#include "orbiclass/scalar.hpp"

namespace orbiclass {

namespace {

struct Interval {
    BigInt lo;  // scaled by 2^bits
    BigInt hi;
};

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

// atan(1/k) scaled by 2^bits.
Interval atan_inverse(int k, int bits) {
    const BigInt one = BigInt(1) << bits;
    const BigInt k2 = BigInt(k) * k;
    BigInt power = k;  // k^(2n+1)
    Interval sum{0, 0};
    for (int n = 0;; ++n) {
        BigInt den = power * (2 * n + 1);
        BigInt lo = floor_div(one, den);
        BigInt hi = ceil_div(one, den);
        if (n % 2 == 0) {
            sum.lo += lo;
            sum.hi += hi;
        } else {
            sum.lo -= hi;
            sum.hi -= lo;
        }
        if (lo == 0) {
            // Alternating series with decreasing terms: tail bounded by next term < 1 ulp.
            sum.lo -= 1;
            sum.hi += 1;
            break;
        }
        power *= k2;
    }
    return sum;
}

Interval pi_enclosure(int bits) {
    // pi = 16 atan(1/5) - 4 atan(1/239)
    Interval a = atan_inverse(5, bits);
    Interval b = atan_inverse(239, bits);
    return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

// cos(2 pi j / m) for 0 <= j <= m/2, so the angle lies in [0, pi].
Interval cos_enclosure(int j, int m, int bits) {
    const BigInt one = BigInt(1) << bits;
    if (j == 0) return {one, one};
    Interval pi = pi_enclosure(bits);
    Interval x{floor_div(pi.lo * (2 * j), BigInt(m)), ceil_div(pi.hi * (2 * j), BigInt(m))};
    if (x.lo < 0) x.lo = 0;

    // Terms t_n = x^(2n) / (2n)!, all nonnegative; enclosed as [lo, hi].
    Interval term{one, one};
    Interval sum{0, 0};
    for (int n = 0;; ++n) {
        if (n % 2 == 0) {
            sum.lo += term.lo;
            sum.hi += term.hi;
        } else {
            sum.lo -= term.hi;
            sum.hi -= term.lo;
        }
        BigInt den = BigInt(2 * n + 1) * (2 * n + 2);
        Interval next{floor_div(floor_div(term.lo * x.lo, one) * x.lo, one * den),
                      ceil_div(ceil_div(term.hi * x.hi, one) * x.hi, one * den)};
        term = std::move(next);
        // From n >= 1 on the terms decrease since x^2 <= pi^2 < 12, so the
        // tail is bounded by the next term.
        if (n >= 1 && term.hi <= 1) {
            sum.lo -= term.hi;
            sum.hi += term.hi;
            break;
        }
    }
    return sum;
}

const Interval& cached_cos(int j, int m, int bits) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, Interval> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(j, m, bits);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, cos_enclosure(j, m, bits)).first;
    return it->second;
}

}  // namespace

RealEnclosure enclose_real(const Scalar& a, int bits) {
    if (!a.is_real()) throw NotReal("enclose_real: scalar " + a.to_string() + " is not real");
    if (a.is_rational()) return {a.coords()[0], a.coords()[0]};
    const int m = a.conductor();
    BigRational weight = 0;
    for (const auto& c : a.coords()) weight += c.abs().to_big();
    int guard = 8;
    while (BigRational(BigInt(1) << guard) < weight * 4) ++guard;

    for (int work = bits + guard;; work *= 2) {
        const BigInt scale = BigInt(1) << work;
        BigRational lo = 0, hi = 0;
        for (std::size_t j = 0; j < a.coords().size(); ++j) {
            const Rational& c = a.coords()[j];
            if (c.is_zero()) continue;
            int k = static_cast<int>(j % m);
            if (2 * k > m) k = m - k;
            const Interval& cs = cached_cos(k, m, work);
            BigRational clo(cs.lo, scale), chi(cs.hi, scale);
            BigRational cq = c.to_big();
            if (c.sign() > 0) {
                lo += cq * clo;
                hi += cq * chi;
            } else {
                lo += cq * chi;
                hi += cq * clo;
            }
        }
        if ((hi - lo) * BigRational(BigInt(1) << bits) <= 1) return {Rational(lo), Rational(hi)};
    }
}

Ordering compare_real(const Scalar& a, const Scalar& b) {
    if (!a.is_real() || !b.is_real()) throw NotReal("compare_real requires real scalars");
    Scalar diff = a - b;
    if (diff.is_zero()) return Ordering::equal;
    if (diff.is_rational()) return diff.coords()[0].sign() > 0 ? Ordering::greater : Ordering::less;
    // diff is a nonzero algebraic number, so refinement terminates.
    for (int bits = 64;; bits *= 2) {
        RealEnclosure e = enclose_real(diff, bits);
        if (e.lo.sign() > 0) return Ordering::greater;
        if (e.hi.sign() < 0) return Ordering::less;
    }
}

}  // namespace orbiclass
