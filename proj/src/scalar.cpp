#include "orbiclass/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "orbiclass/errors.hpp"

namespace orbiclass {

namespace {

struct FieldData {
    int conductor = 1;
    int degree = 1;
    std::vector<std::int64_t> phi;
    // powers[k] = zeta^k reduced, as sparse (index, coefficient) lists, k in [0, m).
    std::vector<std::vector<std::pair<int, std::int64_t>>> powers;
};

std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t q = num[i];
        quot[i - dn] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw InvariantViolation("cyclotomic division left a remainder");
    return quot;
}

std::unique_ptr<FieldData> build_field(int m) {
    auto data = std::make_unique<FieldData>();
    data->conductor = m;
    std::vector<std::int64_t> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
    data->phi = poly;
    data->degree = static_cast<int>(poly.size()) - 1;
    const int deg = data->degree;

    // Dense reduction of x^k, k in [0, m), built by repeated multiplication by x.
    std::vector<std::int64_t> cur(deg, 0);
    cur[0] = 1;
    data->powers.resize(m);
    for (int k = 0; k < m; ++k) {
        auto& sparse = data->powers[k];
        for (int i = 0; i < deg; ++i)
            if (cur[i] != 0) sparse.emplace_back(i, cur[i]);
        // cur <- x * cur mod phi
        std::int64_t top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i) cur[i] -= top * poly[i];
    }
    return data;
}

const FieldData& field(int m) {
    if (m < 1) throw Error("conductor must be a positive integer, got " + std::to_string(m));
    thread_local int last_m = 0;
    thread_local const FieldData* last = nullptr;
    if (m == last_m) return *last;

    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FieldData>> cache;
    const FieldData* result = nullptr;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) {
            result = it->second.get();
        }
    }
    if (!result) {
        // build_field recursively needs smaller conductors; build outside the lock.
        auto built = build_field(m);
        std::lock_guard<std::mutex> lock(mutex);
        auto [it, inserted] = cache.emplace(m, std::move(built));
        result = it->second.get();
    }
    last_m = m;
    last = result;
    return *result;
}

void add_scaled_power(std::vector<Rational>& out, const FieldData& f, int k, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [idx, coeff] : f.powers[k]) out[idx] += c * Rational(coeff);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) { return field(m).phi; }

int totient(int m) { return field(m).degree; }

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

Scalar::Scalar(const Rational& value, int conductor)
    : conductor_(conductor), coords_(field(conductor).degree) {
    coords_[0] = value;
}

Scalar Scalar::make(int conductor, std::vector<Rational> coords) {
    const FieldData& f = field(conductor);
    if (static_cast<int>(coords.size()) == f.degree) return Scalar(conductor, std::move(coords), true);
    std::vector<Rational> out(f.degree);
    for (std::size_t k = 0; k < coords.size(); ++k)
        add_scaled_power(out, f, static_cast<int>(k % conductor), coords[k]);
    return Scalar(conductor, std::move(out), true);
}

Scalar Scalar::zeta(int conductor, int power) {
    const FieldData& f = field(conductor);
    int k = ((power % conductor) + conductor) % conductor;
    std::vector<Rational> out(f.degree);
    add_scaled_power(out, f, k, Rational(1));
    return Scalar(conductor, std::move(out), true);
}

Scalar Scalar::two_cos(int conductor, int k) { return zeta(conductor, k) + zeta(conductor, -k); }

bool Scalar::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

bool Scalar::is_one() const { return is_rational() && coords_[0].is_one(); }

Rational Scalar::rational_value() const {
    if (!is_rational()) throw Error("scalar " + to_string() + " is not rational");
    return coords_[0];
}

Scalar Scalar::promote(int target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0)
        throw Error("cannot promote conductor " + std::to_string(conductor_) + " to " + std::to_string(target));
    const FieldData& f = field(target);
    const int step = target / conductor_;
    std::vector<Rational> out(f.degree);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        add_scaled_power(out, f, static_cast<int>((j * step) % target), coords_[j]);
    return Scalar(target, std::move(out), true);
}

Scalar Scalar::conj() const {
    const FieldData& f = field(conductor_);
    std::vector<Rational> out(f.degree);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        add_scaled_power(out, f, static_cast<int>((conductor_ - j % conductor_) % conductor_), coords_[j]);
    return Scalar(conductor_, std::move(out), true);
}

bool Scalar::is_real() const { return is_rational() || conj() == *this; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (conductor_ != rhs.conductor_) {
        int m = std::lcm(conductor_, rhs.conductor_);
        *this = promote(m);
        return *this += rhs.promote(m);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!rhs.coords_[i].is_zero()) coords_[i] += rhs.coords_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (conductor_ != rhs.conductor_) return *this += -rhs;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!rhs.coords_[i].is_zero()) coords_[i] -= rhs.coords_[i];
    return *this;
}

void Scalar::accumulate_product(std::vector<Rational>& acc, const Scalar& a, const Scalar& b) {
    const std::size_t n = a.coords_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& ai = a.coords_[i];
        if (ai.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& bj = b.coords_[j];
            if (bj.is_zero()) continue;
            acc[i + j] += ai * bj;
        }
    }
}

Scalar Scalar::reduce_accumulator(int conductor, std::vector<Rational>& acc) {
    const FieldData& f = field(conductor);
    std::vector<Rational> out(acc.begin(), acc.begin() + f.degree);
    for (std::size_t k = f.degree; k < acc.size(); ++k) {
        add_scaled_power(out, f, static_cast<int>(k % conductor), acc[k]);
    }
    return Scalar(conductor, std::move(out), true);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.conductor_ != b.conductor_) {
        int m = std::lcm(a.conductor_, b.conductor_);
        return a.promote(m) * b.promote(m);
    }
    if (b.is_rational()) {
        Scalar r = a;
        const Rational& q = b.coords_[0];
        for (auto& c : r.coords_)
            if (!c.is_zero()) c *= q;
        return r;
    }
    if (a.is_rational()) return b * a;
    std::vector<Rational> acc(2 * a.coords_.size() - 1);
    Scalar::accumulate_product(acc, a, b);
    return Scalar::reduce_accumulator(a.conductor_, acc);
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Scalar(coords_[0].inverse(), conductor_);
    // Solve (multiplication by this) * x = 1 over Q.
    const int d = static_cast<int>(coords_.size());
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    Scalar col = *this;
    const Scalar z = zeta(conductor_, 1);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = col.coords_[i];
        col = col * z;
    }
    m[0][d] = Rational(1);
    for (int c = 0; c < d; ++c) {
        int p = c;
        while (p < d && m[p][c].is_zero()) ++p;
        if (p == d) throw InvariantViolation("singular multiplication matrix for nonzero scalar");
        std::swap(m[p], m[c]);
        Rational inv = m[c][c].inverse();
        for (int k = c; k <= d; ++k)
            if (!m[c][k].is_zero()) m[c][k] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rational factor = m[r][c];
            for (int k = c; k <= d; ++k)
                if (!m[c][k].is_zero()) m[r][k] -= factor * m[c][k];
        }
    }
    std::vector<Rational> out(d);
    for (int i = 0; i < d; ++i) out[i] = m[i][d];
    return Scalar(conductor_, std::move(out), true);
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
    int m = std::lcm(a.conductor_, b.conductor_);
    return a.promote(m).coords_ == b.promote(m).coords_;
}

std::size_t Scalar::coordinate_hash() const {
    std::size_t h = static_cast<std::size_t>(conductor_);
    for (const auto& c : coords_) h = h * 1000003u ^ c.hash();
    return h;
}

std::strong_ordering canonical_order(const Scalar& a, const Scalar& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ <=> b.conductor_;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == b.coords_[i]) continue;
        return a.coords_[i] < b.coords_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (is_rational()) return coords_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coords_[i] << ")";
        if (i > 0) os << "*z" << conductor_ << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace orbiclass
