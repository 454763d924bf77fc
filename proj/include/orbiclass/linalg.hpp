#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbiclass/scalar.hpp"

namespace orbiclass {

using Vector = std::vector<Scalar>;

Scalar dot(const Vector& a, const Vector& b);
bool is_zero_vector(const Vector& v);

/**
 * Dense row-major matrix over the cyclotomic field. All entries share the
 * matrix conductor; mixing conductors promotes to the lcm.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, int conductor = 1);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n, int conductor = 1);
    static Matrix diagonal(const std::vector<Scalar>& diag);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    /// Block-diagonal embedding of the given square blocks.
    static Matrix block_diagonal(const std::vector<Matrix>& blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int conductor() const { return conductor_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& value);
    const std::vector<Scalar>& entries() const { return entries_; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;

    Matrix promote(int conductor) const;
    Matrix transpose() const;
    Matrix operator-() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_identity() const;
    bool is_real() const;
    /// Real entries and transpose * self == identity.
    bool is_orthogonal() const;

    /// Fraction-free (Bareiss) determinant.
    Scalar determinant() const;
    std::size_t rank() const;
    Matrix inverse() const;

    std::size_t hash() const;
    friend std::strong_ordering canonical_order(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    void unify_conductor();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int conductor_ = 1;
    std::vector<Scalar> entries_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon row_reduce(Matrix a);

/**
 * Linear subspace of an ambient coordinate space, held as a basis of
 * linearly independent column vectors. Bases are never normalized.
 */
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    /// Spans the given vectors; dependent ones are dropped.
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient, int conductor = 1);
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& axes);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    /// ambient x dim matrix whose columns are the basis.
    Matrix basis_matrix() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b);

    Subspace operator+(const Subspace& other) const;
    bool is_orthogonal_to(const Subspace& other) const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

Subspace kernel_basis(const Matrix& a);
Subspace orthogonal_complement(const Subspace& s);

/// Index of the first basis vector b with g*b outside s, if any.
std::optional<std::size_t> invariance_witness(const Matrix& g, const Subspace& s);

/// Matrix of g on the g-invariant subspace s in the basis of s:
/// (B^T B)^-1 B^T g B. Throws NotInvariant with the offending basis index.
Matrix restrict(const Matrix& g, const Subspace& s);

}  // namespace orbiclass

template <>
struct std::hash<orbiclass::Matrix> {
    std::size_t operator()(const orbiclass::Matrix& m) const noexcept { return m.hash(); }
};
