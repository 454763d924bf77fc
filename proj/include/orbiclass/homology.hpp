#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbiclass/complex.hpp"
#include "orbiclass/rational.hpp"

namespace orbiclass {

/// Z^betti plus the cyclic groups Z/t for each torsion coefficient.
struct HomologyGroup {
    std::size_t betti = 0;
    /// Elementary divisors greater than 1, each dividing the next.
    std::vector<BigInt> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
    bool reduced = false;
    /// Degree of groups.front(): -1 for reduced homology, 0 otherwise.
    int first_degree = 0;
    std::vector<HomologyGroup> groups;

    /// Zero group outside the stored range.
    const HomologyGroup& at(int degree) const;
    int last_degree() const { return first_degree + static_cast<int>(groups.size()) - 1; }
    /// Reduced: Z in degree d and zero elsewhere. Unreduced: that of S^d.
    bool is_sphere(int d) const;
    /// Every reduced group vanishes (unreduced: Z in degree 0 only).
    bool is_acyclic() const;
    friend bool operator==(const HomologyResult& a, const HomologyResult& b);
};

/// Diagonal of the Smith normal form of an integer matrix given as sparse
/// rows of (column, value) pairs: the rank and the elementary divisors.
struct SmithForm {
    std::size_t rank = 0;
    /// Nonzero invariant factors in divisibility order, absolute values.
    std::vector<BigInt> divisors;
};

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;
SmithForm smith_normal_form(std::vector<SparseRow> rows, std::size_t cols);

/// Integral simplicial homology from boundary matrices.
HomologyResult homology(const SimplicialComplex& k, bool reduced = false);

/// Unreduced homology of the d-sphere.
HomologyResult sphere_homology(int d);

struct ManifoldCheck {
    bool yes = false;
    std::string reason;
    /// First failing face when the answer is no.
    std::optional<Face> witness;
    /// Boundary subcomplex (with-boundary tests only).
    SimplicialComplex boundary;
};

/**
 * Homology n-manifold test: K pure of dimension n and for every face sigma
 * of dimension d the reduced homology of link(sigma) is that of S^(n-d-1).
 * Local homology of a simplicial complex is constant on open simplices, so
 * checking faces decides every point. Faces are checked in order of
 * dimension, then lexicographically; the witness is the first failure.
 */
ManifoldCheck is_homology_manifold(const SimplicialComplex& k, int n);

/**
 * Homology n-manifold with boundary: each face is interior (sphere link) or
 * boundary (acyclic link); the boundary faces must form a homology
 * (n-1)-manifold subcomplex and the double along it a homology n-manifold.
 */
ManifoldCheck is_homology_manifold_with_boundary(const SimplicialComplex& k, int n);

/// The same tests restricted to the open star of one vertex, i.e. to the
/// faces containing it. With the apex of a cone this decides the open cone.
ManifoldCheck is_homology_manifold_near(const SimplicialComplex& k, Vertex v, int n);
ManifoldCheck is_homology_manifold_with_boundary_near(const SimplicialComplex& k, Vertex v, int n);

}  // namespace orbiclass
