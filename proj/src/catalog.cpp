#include "orbiclass/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "orbiclass/errors.hpp"
#include "orbiclass/group.hpp"

namespace orbiclass {

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    FamilySpec parse_all() {
        FamilySpec spec = parse_spec();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    FamilySpec parse_spec() {
        skip_space();
        FamilySpec spec;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            spec.name += text_[pos_++];
        if (spec.name.empty()) fail("expected a family name");
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '(') {
            fail("expected '(' after family name");
        }
        ++pos_;
        skip_space();
        if (peek() == ')') {
            ++pos_;
            return spec;
        }
        for (;;) {
            skip_space();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
                std::size_t start = pos_;
                if (c == '-') ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                try {
                    spec.params.push_back(std::stoi(text_.substr(start, pos_ - start)));
                } catch (const std::exception&) {
                    fail("malformed integer parameter");
                }
            } else {
                spec.factors.push_back(parse_spec());
            }
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ')') {
                ++pos_;
                return spec;
            }
            fail("expected ',' or ')'");
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("family spec '" + text_ + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

int param(const FamilySpec& spec, std::size_t count, std::size_t i, int min_value) {
    if (spec.params.size() != count || !spec.factors.empty())
        throw ParseError(spec.name + " expects " + std::to_string(count) + " integer parameter(s)");
    int v = spec.params[i];
    if (v < min_value)
        throw ParseError(spec.name + ": parameter must be at least " + std::to_string(min_value));
    return v;
}

// Smallest conductor holding cos(2 pi / m) and sin(2 pi / m).
int rotation_conductor(int m) {
    if (m == 1 || m == 2 || m == 4) return 1;
    return std::lcm(m, 4);
}

Matrix transposition(std::size_t n, std::size_t a, std::size_t b) {
    Matrix p = Matrix::identity(n);
    p.set(a, a, Scalar(0));
    p.set(b, b, Scalar(0));
    p.set(a, b, Scalar(1));
    p.set(b, a, Scalar(1));
    return p;
}

Matrix coordinate_reflection(std::size_t n, std::size_t axis) {
    Matrix r = Matrix::identity(n);
    r.set(axis, axis, Scalar(-1));
    return r;
}

std::vector<Matrix> direct_sum(const std::vector<std::vector<Matrix>>& factors) {
    std::vector<std::size_t> sizes;
    for (const auto& f : factors) {
        if (f.empty()) throw InvariantViolation("direct_sum: factor without generators");
        sizes.push_back(f.front().rows());
    }
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& g : factors[i]) {
            std::vector<Matrix> blocks;
            for (std::size_t j = 0; j < factors.size(); ++j)
                blocks.push_back(j == i ? g : Matrix::identity(sizes[j]));
            out.push_back(Matrix::block_diagonal(blocks));
        }
    }
    int m = 1;
    for (const auto& g : out) m = std::lcm(m, g.conductor());
    for (auto& g : out) g = g.promote(m);
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) { return SpecParser(text).parse_all(); }

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << name << "(";
    bool first = true;
    for (int p : params) {
        os << (first ? "" : ", ") << p;
        first = false;
    }
    for (const auto& f : factors) {
        os << (first ? "" : ", ") << f.to_string();
        first = false;
    }
    os << ")";
    return os.str();
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "cyclic_rotation",         "dihedral",      "signed_permutation_reflections",
        "permutation_reflections", "rotation_subgroup", "binary_icosahedral",
        "negative_identity",       "trivial",       "reflection",
        "direct_sum"};
    return names;
}

Matrix plane_rotation(int m, int k) {
    if (m < 1) throw ParseError("rotation order must be positive");
    const int c = rotation_conductor(m);
    // lcm(m, 4) holds zeta_m and i; cos = (z + z^-1) / 2, sin = (z - z^-1) / (2i).
    const int work = std::lcm(m, 4);
    const Scalar z = Scalar::zeta(m, k).promote(work);
    const Scalar zi = Scalar::zeta(m, -k).promote(work);
    const Scalar two_i = Scalar::zeta(4).promote(work) * Scalar(2);
    Scalar cos = (z + zi) * Scalar(Rational(1, 2));
    Scalar sin = (z - zi) * two_i.inverse();
    if (c == 1) {
        cos = Scalar(cos.rational_value());
        sin = Scalar(sin.rational_value());
    }
    return Matrix(2, 2, {cos, -sin, sin, cos});
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Scalar golden_ratio() { return Scalar::make(5, {1, 1, 0, 0, 1}); }

std::vector<Quaternion> unit_icosians() {
    const Scalar half(Rational(1, 2), 5);
    const Scalar zero(Rational(0), 5), one(Rational(1), 5);
    const Scalar phi = golden_ratio();
    const Scalar phi_inv = phi - one;
    std::vector<Quaternion> out;
    auto push = [&](const std::array<Scalar, 4>& v) { out.push_back({v[0], v[1], v[2], v[3]}); };
    for (int axis = 0; axis < 4; ++axis)
        for (int s : {1, -1}) {
            std::array<Scalar, 4> v{zero, zero, zero, zero};
            v[axis] = Scalar(Rational(s), 5);
            push(v);
        }
    for (int mask = 0; mask < 16; ++mask) {
        std::array<Scalar, 4> v;
        for (int k = 0; k < 4; ++k) v[k] = (mask >> k) & 1 ? -half : half;
        push(v);
    }
    // Even permutations of (0, 1, phi^-1, phi) / 2 with all sign choices.
    const std::array<Scalar, 4> base{zero, half, phi_inv * half, phi * half};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b];
        if (inversions % 2) continue;
        for (int mask = 0; mask < 8; ++mask) {
            std::array<Scalar, 4> v;
            // signs on the three nonzero entries
            for (int k = 0; k < 4; ++k) {
                Scalar val = base[k];
                if (k > 0 && ((mask >> (k - 1)) & 1)) val = -val;
                v[perm[k]] = val;
            }
            push(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Matrix left_multiplication(const Quaternion& q) {
    const Scalar &a = q.w, &b = q.x, &c = q.y, &d = q.z;
    return Matrix(4, 4, {a, -b, -c, -d, b, a, -d, c, c, d, a, -b, d, -c, b, a});
}

std::vector<Quaternion> binary_icosahedral_generators() {
    const Scalar half(Rational(1, 2), 5);
    const Scalar zero(Rational(0), 5);
    const Scalar phi = golden_ratio();
    const Scalar phi_inv = phi - Scalar(Rational(1), 5);
    // (1 + i + j + k) / 2 of order 6 and (phi + phi^-1 i + j) / 2 of order 10.
    return {{half, half, half, half}, {phi * half, phi_inv * half, half, zero}};
}

std::vector<Matrix> make_family(const FamilySpec& spec) {
    const std::string& name = spec.name;
    if (name == "cyclic_rotation") {
        int m = param(spec, 1, 0, 1);
        return {plane_rotation(m)};
    }
    if (name == "dihedral") {
        int m = param(spec, 1, 0, 1);
        Matrix r = plane_rotation(m);
        return {r, Matrix::diagonal({Scalar(Rational(1), r.conductor()), Scalar(Rational(-1), r.conductor())})};
    }
    if (name == "signed_permutation_reflections") {
        const auto n = static_cast<std::size_t>(param(spec, 1, 0, 1));
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
        gens.push_back(coordinate_reflection(n, n - 1));
        return gens;
    }
    if (name == "permutation_reflections") {
        const auto n = static_cast<std::size_t>(param(spec, 1, 0, 1));
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
        if (gens.empty()) gens.push_back(Matrix::identity(n));
        return gens;
    }
    if (name == "rotation_subgroup") {
        if (spec.factors.size() != 1 || !spec.params.empty())
            throw ParseError("rotation_subgroup expects exactly one family argument");
        MatrixGroup g = orientation_subgroup(closure(make_family(spec.factors.front())));
        std::vector<Matrix> gens = g.generators();
        if (gens.empty()) gens.push_back(g.element(0));
        return gens;
    }
    if (name == "binary_icosahedral") {
        if (!spec.params.empty() || !spec.factors.empty()) throw ParseError("binary_icosahedral takes no arguments");
        std::vector<Matrix> gens;
        for (const auto& q : binary_icosahedral_generators()) gens.push_back(left_multiplication(q));
        return gens;
    }
    if (name == "negative_identity") {
        const auto n = static_cast<std::size_t>(param(spec, 1, 0, 1));
        return {-Matrix::identity(n)};
    }
    if (name == "trivial") {
        const auto n = static_cast<std::size_t>(param(spec, 1, 0, 1));
        return {Matrix::identity(n)};
    }
    if (name == "reflection") {
        const auto n = static_cast<std::size_t>(param(spec, 1, 0, 1));
        return {coordinate_reflection(n, 0)};
    }
    if (name == "direct_sum") {
        if (spec.factors.empty() || !spec.params.empty())
            throw ParseError("direct_sum expects one or more family arguments");
        std::vector<std::vector<Matrix>> factors;
        for (const auto& f : spec.factors) factors.push_back(make_family(f));
        return direct_sum(factors);
    }
    throw ParseError("unknown family '" + name + "'");
}

std::vector<Matrix> make_family(const std::string& text) { return make_family(FamilySpec::parse(text)); }

}  // namespace orbiclass
