#pragma once

#include <string>
#include <vector>

#include "orbiclass/complex.hpp"

namespace orbiclass {

/// A complex together with a group action on its vertices.
struct Fixture {
    std::string name;
    SimplicialComplex complex;
    SimplicialAction action;
    /// Dimension of the manifold the complex triangulates.
    int dimension = 0;
};

/// Boundary of the n-dimensional cross-polytope, a triangulated S^(n-1).
/// Vertex 2i is +e_i and 2i+1 is -e_i.
SimplicialComplex cross_polytope_boundary(int n);
/// Signed permutations of the coordinates: adjacent swaps and the last sign flip.
SimplicialAction signed_permutation_action(int n);
/// x -> -x on the cross-polytope.
SimplicialAction antipodal_action(int n);

/// Boundary of the (n+1)-simplex on vertices 0..n+1.
SimplicialComplex simplex_boundary(int n);
/// The full n-simplex.
SimplicialComplex simplex(int n);

/// m-cycle with the rotation by one step.
SimplicialComplex polygon(int m);
SimplicialAction polygon_rotation(int m);

/// Real projective plane as the quotient of the twice subdivided octahedron
/// by the antipodal map.
SimplicialComplex projective_plane();

/**
 * The 600-cell boundary: vertices are the 120 unit icosians in the order of
 * unit_icosians(), facets are the regular tetrahedra spanned by nearest
 * neighbours. Checked against the f-vector (120, 720, 1200, 600).
 */
SimplicialComplex six_hundred_cell();
/// Left multiplication by the two binary icosahedral generators.
SimplicialAction binary_icosahedral_action();

/// Names accepted by fixture(): octahedron, cross_polytope_<n>,
/// cross_polytope_<n>_antipodal, tetrahedron_boundary, triangle,
/// polygon_<m>, projective_plane, six_hundred_cell.
std::vector<std::string> fixture_names();
Fixture fixture(const std::string& name);

}  // namespace orbiclass
