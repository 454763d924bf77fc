#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbiclass {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free vertex list.
using Face = std::vector<Vertex>;

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept;
};

template <class T>
using FaceMap = std::unordered_map<Face, T, FaceHash>;

/**
 * Finite abstract simplicial complex given by its inclusion-maximal facets.
 *
 * Vertices are indices below vertex_count(); indices that occur in no facet
 * are allowed and ignored. The complex with no facets is the empty complex,
 * whose only face is the empty face (the (-1)-sphere for homology).
 * Faces of each dimension are enumerated on first use and cached.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Sorts and deduplicates vertex lists and drops non-maximal faces.
    SimplicialComplex(std::vector<Face> facets, std::size_t vertex_count = 0);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool empty() const { return facets_.empty(); }
    /// -1 for the empty complex.
    int dimension() const { return dimension_; }
    bool is_pure() const;

    /// Faces of dimension d in lexicographic order (d = -1 gives the empty face).
    const std::vector<Face>& faces(int d) const;
    /// Position of a face within faces(dim), or -1.
    std::ptrdiff_t face_index(const Face& f) const;
    bool contains_face(const Face& f) const { return face_index(f) >= 0; }
    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    /// Vertices occurring in some facet, ascending.
    std::vector<Vertex> vertices() const;
    /// Indices into facets() of the facets containing v.
    const std::vector<std::size_t>& facets_containing(Vertex v) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }

private:
    struct Cache;
    const Cache& cache() const;

    std::size_t vertex_count_ = 0;
    int dimension_ = -1;
    std::vector<Face> facets_;
    std::shared_ptr<Cache> cache_ = nullptr;
};

/// Public entry point: rejects an empty facet list or an empty facet.
SimplicialComplex build_complex(std::vector<Face> facets, std::size_t vertex_count = 0);

/// {tau : tau and sigma disjoint, tau u sigma in K}. Throws InvalidComplex if
/// sigma is not a face.
SimplicialComplex link(const SimplicialComplex& k, const Face& sigma);

/// Smallest subcomplex containing the given faces, on the same vertex set.
SimplicialComplex subcomplex(const SimplicialComplex& k, std::vector<Face> faces);

/// Where a vertex of a constructed complex came from.
struct VertexOrigin {
    enum class Kind { left, right, apex, pair };
    Kind kind = Kind::left;
    Vertex a = 0;
    Vertex b = 0;
    friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

struct Construction {
    SimplicialComplex complex;
    std::vector<VertexOrigin> origin;
    /// Only set by double_along when K had to be subdivided: carrier[a] is the
    /// face of K whose barycentre is the doubled vertex a.
    std::vector<Face> carrier;
};

/// Vertices of l are shifted past those of k.
Construction join(const SimplicialComplex& k, const SimplicialComplex& l);
/// Join with a point; the apex is the last vertex.
Construction cone(const SimplicialComplex& k);
/// Join with two points; the poles are the last two vertices.
Construction suspension(const SimplicialComplex& k);
/// Staircase triangulation of K x L using vertex order; vertex (x, y) has
/// index x * l.vertex_count() + y.
Construction product(const SimplicialComplex& k, const SimplicialComplex& l);
/// Two copies of K glued along the subcomplex L. Vertices outside L get a
/// second copy with index vertex_count + v. If some face of K outside L has
/// all its vertices in L, both are barycentrically subdivided first and the
/// doubled vertices are the barycentres (see Construction::carrier).
/// Throws InvalidComplex unless L is a subcomplex of K.
Construction double_along(const SimplicialComplex& k, const SimplicialComplex& l);

/// Vertex permutation exchanging the two copies of a double.
std::vector<Vertex> double_swap(const Construction& d);

struct Subdivision {
    SimplicialComplex complex;
    /// faces[i] is the face of the original complex that vertex i stands for.
    std::vector<Face> faces;
};

/// Barycentric subdivision: vertices are the nonempty faces of K, facets are
/// the maximal flags.
Subdivision barycentric_subdivision(const SimplicialComplex& k);

using Permutation = std::vector<Vertex>;

/// A group acting on vertices, given by generator permutations.
struct SimplicialAction {
    std::size_t vertex_count = 0;
    std::vector<Permutation> generators;
    std::vector<std::string> labels;
};

/// Throws InvalidAction unless every generator permutes the vertices and
/// maps facets to facets.
void validate_action(const SimplicialComplex& k, const SimplicialAction& a);

/// Action induced on a barycentric subdivision.
SimplicialAction subdivide_action(const Subdivision& sd, const SimplicialAction& a);

struct Quotient {
    /// Second barycentric subdivision of the input.
    SimplicialComplex subdivided;
    SimplicialComplex complex;
    /// Vertex of `subdivided` -> vertex of `complex` (orbit number).
    std::vector<Vertex> projection;
};

/// Quotient of the twice subdivided complex: vertices are vertex orbits,
/// faces are images of faces.
Quotient quotient(const SimplicialComplex& k, const SimplicialAction& a);

/// Orbit labels of vertices under the generated group, numbered by first
/// occurrence.
std::vector<Vertex> vertex_orbits(std::size_t vertex_count, const std::vector<Permutation>& generators);

}  // namespace orbiclass
