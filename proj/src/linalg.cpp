#include "orbiclass/linalg.hpp"

#include <numeric>
#include <sstream>

#include "orbiclass/errors.hpp"

namespace orbiclass {

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Scalar sum;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
    return sum;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(rows * cols, Scalar(Rational(0), conductor)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw DimensionMismatch("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries_.size()));
    unify_conductor();
}

void Matrix::unify_conductor() {
    int m = 1;
    for (const auto& e : entries_) m = std::lcm(m, e.conductor());
    conductor_ = m;
    for (auto& e : entries_)
        if (e.conductor() != m) e = e.promote(m);
}

Matrix Matrix::identity(std::size_t n, int conductor) {
    Matrix m(n, n, conductor);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar(Rational(1), conductor);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
    const std::size_t n = diag.size();
    std::vector<Scalar> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = diag[i];
    return Matrix(n, n, std::move(entries));
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    std::vector<Scalar> entries(rows * columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) entries[r * columns.size() + c] = columns[c][r];
    }
    return Matrix(rows, columns.size(), std::move(entries));
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw DimensionMismatch("block_diagonal: blocks must be square");
        n += b.rows();
    }
    std::vector<Scalar> entries(n * n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) entries[(offset + r) * n + offset + c] = b(r, c);
        offset += b.rows();
    }
    return Matrix(n, n, std::move(entries));
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
    if (value.conductor() == conductor_) {
        entries_[r * cols_ + c] = value;
        return;
    }
    int m = std::lcm(conductor_, value.conductor());
    if (m != conductor_) *this = promote(m);
    entries_[r * cols_ + c] = value.promote(m);
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::promote(int conductor) const {
    if (conductor == conductor_) return *this;
    Matrix out = *this;
    for (auto& e : out.entries_) e = e.promote(conductor);
    out.conductor_ = conductor;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, conductor_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    if (a.conductor_ != b.conductor_) {
        int m = std::lcm(a.conductor_, b.conductor_);
        return a.promote(m) * b.promote(m);
    }
    const int m = a.conductor_;
    const std::size_t d = static_cast<std::size_t>(totient(m));
    Matrix out(a.rows_, b.cols_, m);
    std::vector<Rational> acc(2 * d - 1);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            bool any = false;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                const Scalar& y = b(k, j);
                if (y.is_zero()) continue;
                if (!any) {
                    std::fill(acc.begin(), acc.end(), Rational(0));
                    any = true;
                }
                Scalar::accumulate_product(acc, x, y);
            }
            if (any) out.entries_[i * b.cols_ + j] = Scalar::reduce_accumulator(m, acc);
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product: dimension mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Scalar sum;
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) sum += a(i, k) * v[k];
        out[i] = sum;
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
    std::vector<Scalar> entries(a.entries_.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a.entries_[i] + b.entries_[i];
    return Matrix(a.rows_, a.cols_, std::move(entries));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
    std::vector<Scalar> entries(a.entries_.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a.entries_[i] - b.entries_[i];
    return Matrix(a.rows_, a.cols_, std::move(entries));
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& e = (*this)(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_real() const {
    for (const auto& e : entries_)
        if (!e.is_real()) return false;
    return true;
}

bool Matrix::is_orthogonal() const { return is_square() && is_real() && (transpose() * *this).is_identity(); }

Scalar Matrix::determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Scalar(1);
    std::vector<Scalar> a = entries_;
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * n + c]; };
    Scalar prev(Rational(1), conductor_);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && at(p, k).is_zero()) ++p;
            if (p == n) return Scalar(Rational(0), conductor_);
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            negate = !negate;
        }
        const Scalar prev_inv = prev.inverse();
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) * prev_inv;
        prev = at(k, k);
    }
    Scalar det = at(n - 1, n - 1);
    return negate ? -det : det;
}

Echelon row_reduce(Matrix a) {
    Echelon result;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<Scalar> e(a.entries().begin(), a.entries().end());
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return e[r * cols + c]; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Prefer a rational pivot: its inverse is free.
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (at(i, c).is_zero()) continue;
            if (p == rows) p = i;
            if (at(i, c).is_rational()) {
                p = i;
                break;
            }
        }
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(at(p, k), at(r, k));
        const Scalar inv = at(r, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!at(r, k).is_zero()) at(r, k) = at(r, k) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            const Scalar factor = at(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!at(r, k).is_zero()) at(i, k) -= factor * at(r, k);
        }
        result.pivots.push_back(c);
        ++r;
    }
    result.reduced = Matrix(rows, cols, std::move(e));
    if (rows * cols == 0) result.reduced = Matrix(rows, cols, a.conductor());
    return result;
}

std::size_t Matrix::rank() const { return row_reduce(*this).pivots.size(); }

Matrix Matrix::inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n, conductor_);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.entries_[r * 2 * n + c] = (*this)(r, c);
        aug.entries_[r * 2 * n + n + r] = Scalar(Rational(1), conductor_);
    }
    Echelon ech = row_reduce(aug);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw DivisionByZero();
    Matrix inv(n, n, ech.reduced.conductor());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.entries_[r * n + c] = ech.reduced(r, n + c);
    return inv;
}

std::size_t Matrix::hash() const {
    std::size_t h = rows_ * 31 + cols_;
    for (const auto& e : entries_) h = h * 1099511628211ULL ^ e.coordinate_hash();
    return h;
}

std::strong_ordering canonical_order(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (auto c = canonical_order(a.entries_[i], b.entries_[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Echelon ech = row_reduce(Matrix::from_columns(vectors, ambient));
    for (std::size_t p : ech.pivots) s.basis_.push_back(vectors[p]);
    return s;
}

Subspace Subspace::whole(std::size_t ambient, int conductor) {
    std::vector<std::size_t> axes(ambient);
    std::iota(axes.begin(), axes.end(), 0);
    Subspace s = coordinate(ambient, axes);
    for (auto& v : s.basis_)
        for (auto& x : v) x = x.promote(conductor);
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& axes) {
    Subspace s(ambient);
    for (std::size_t a : axes) {
        Vector v(ambient);
        v.at(a) = Scalar(1);
        s.basis_.push_back(std::move(v));
    }
    return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace membership: ambient mismatch");
    if (is_zero_vector(v)) return true;
    if (basis_.empty()) return false;
    std::vector<Vector> cols = basis_;
    cols.push_back(v);
    return Matrix::from_columns(cols, ambient_).rank() == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace containment: ambient mismatch");
    if (other.basis_.empty()) return true;
    if (other.dim() > dim()) return false;
    std::vector<Vector> cols = basis_;
    cols.insert(cols.end(), other.basis_.begin(), other.basis_.end());
    return Matrix::from_columns(cols, ambient_).rank() == basis_.size();
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace sum: ambient mismatch");
    std::vector<Vector> cols = basis_;
    cols.insert(cols.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, cols);
}

bool Subspace::is_orthogonal_to(const Subspace& other) const {
    for (const auto& a : basis_)
        for (const auto& b : other.basis_)
            if (!dot(a, b).is_zero()) return false;
    return true;
}

Subspace kernel_basis(const Matrix& a) {
    Echelon ech = row_reduce(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    const int m = ech.reduced.conductor();
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, Scalar(Rational(0), m));
        v[free] = Scalar(Rational(1), m);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace orthogonal_complement(const Subspace& s) {
    const std::size_t n = s.ambient_dim();
    if (s.dim() == 0) return Subspace::whole(n);
    // Rows of B^T are the basis vectors; the complement is ker(B^T).
    return kernel_basis(s.basis_matrix().transpose());
}

std::optional<std::size_t> invariance_witness(const Matrix& g, const Subspace& s) {
    for (std::size_t i = 0; i < s.basis().size(); ++i)
        if (!s.contains(g * s.basis()[i])) return i;
    return std::nullopt;
}

Matrix restrict(const Matrix& g, const Subspace& s) {
    if (g.rows() != s.ambient_dim() || !g.is_square()) throw DimensionMismatch("restrict: dimension mismatch");
    if (auto w = invariance_witness(g, s))
        throw NotInvariant("restrict: subspace is not invariant (basis vector " + std::to_string(*w) + ")", *w);
    if (s.dim() == 0) return Matrix(0, 0, g.conductor());
    const Matrix b = s.basis_matrix();
    const Matrix bt = b.transpose();
    return (bt * b).inverse() * bt * g * b;
}

}  // namespace orbiclass
