#pragma once

#include <random>
#include <string>
#include <vector>

#include "orbiclass/complex.hpp"

namespace orbiclass {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

/// Spheres, a torus, RP^2, disks, balls, an annulus, a Moebius band and
/// several singular complexes.
std::vector<NamedComplex> property_corpus();

/// Random nonempty facet subset of a small sphere, circle or simplex.
SimplicialComplex random_facet_subset(std::mt19937& rng);

/// Each check returns true when both sides of the equivalence agree.

/// X x Y is a closed homology manifold iff X and Y are.
bool product_property(const SimplicialComplex& x, const SimplicialComplex& y);
/// For a closed homology manifold X: X x Y is a manifold with boundary iff Y
/// is, and then the boundary of X x Y is X x (boundary of Y).
bool product_boundary_property(const SimplicialComplex& x, const SimplicialComplex& y);
/// The open cone over X is a homology (n+1)-manifold at the apex iff X is a
/// homology n-manifold with the homology of S^n.
bool cone_property(const SimplicialComplex& x);
/// The open cone over X has nonempty boundary, equal to the cone over the
/// boundary of X, iff X is an acyclic manifold with nonempty boundary whose
/// boundary has the homology of a sphere. Requires dim X >= 1.
bool cone_boundary_property(const SimplicialComplex& x);
/// The double along L is invariant under exchanging the two copies.
bool double_symmetry(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace orbiclass
