#include "orbiclass/properties.hpp"

#include <algorithm>

#include "orbiclass/fixtures.hpp"
#include "orbiclass/homology.hpp"

namespace orbiclass {

namespace {

SimplicialComplex without_open_star(const SimplicialComplex& k, Vertex v) {
    std::vector<Face> keep;
    for (const auto& f : k.facets())
        if (!std::binary_search(f.begin(), f.end(), v)) keep.push_back(f);
    return SimplicialComplex(std::move(keep), k.vertex_count());
}

bool closed_manifold(const SimplicialComplex& k) { return is_homology_manifold(k, k.dimension()).yes; }

Vertex apex(const Construction& c) { return static_cast<Vertex>(c.complex.vertex_count() - 1); }

}  // namespace

std::vector<NamedComplex> property_corpus() {
    const SimplicialComplex rp = projective_plane();
    return {
        {"two points", simplex_boundary(0)},
        {"triangle boundary", polygon(3)},
        {"square", polygon(4)},
        {"pentagon", polygon(5)},
        {"tetrahedron boundary", simplex_boundary(2)},
        {"octahedron", cross_polytope_boundary(3)},
        {"suspended square", suspension(polygon(4)).complex},
        {"four-simplex boundary", simplex_boundary(3)},
        {"projective plane", rp},
        {"torus", product(polygon(3), polygon(3)).complex},
        {"edge", simplex(1)},
        {"path", build_complex({{0, 1}, {1, 2}, {2, 3}})},
        {"triangle", simplex(2)},
        {"tetrahedron", simplex(3)},
        {"coned square", cone(polygon(4)).complex},
        {"annulus", product(polygon(3), simplex(1)).complex},
        {"moebius band", without_open_star(rp, 0)},
        {"bowtie", build_complex({{0, 1, 2}, {0, 3, 4}})},
        {"three triangles on an edge", build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})},
        {"figure eight", build_complex({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})},
        {"triangle with whisker", build_complex({{0, 1, 2}, {2, 3}})},
        {"tripod", build_complex({{0, 1}, {0, 2}, {0, 3}})},
        {"coned projective plane", cone(rp).complex},
        {"wedge of spheres",
         build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}})},
    };
}

SimplicialComplex random_facet_subset(std::mt19937& rng) {
    static const std::vector<SimplicialComplex> bases = {simplex_boundary(2), cross_polytope_boundary(3), polygon(5),
                                                         simplex(2),          simplex_boundary(0),        polygon(3)};
    const SimplicialComplex& base = bases[rng() % bases.size()];
    std::vector<Face> keep;
    for (const auto& f : base.facets())
        if (rng() % 4 != 0) keep.push_back(f);
    if (keep.empty()) keep.push_back(base.facets().front());
    return SimplicialComplex(std::move(keep), base.vertex_count());
}

bool product_property(const SimplicialComplex& x, const SimplicialComplex& y) {
    return closed_manifold(product(x, y).complex) == (closed_manifold(x) && closed_manifold(y));
}

bool product_boundary_property(const SimplicialComplex& x, const SimplicialComplex& y) {
    if (!closed_manifold(x)) return true;
    const ManifoldCheck in_y = is_homology_manifold_with_boundary(y, y.dimension());
    const ManifoldCheck in_p = is_homology_manifold_with_boundary(product(x, y).complex, x.dimension() + y.dimension());
    if (in_p.yes != in_y.yes) return false;
    if (!in_p.yes) return true;
    if (in_y.boundary.empty()) return in_p.boundary.empty();
    return in_p.boundary == product(x, in_y.boundary).complex;
}

bool cone_property(const SimplicialComplex& x) {
    const int n = x.dimension();
    const Construction c = cone(x);
    const bool expected = closed_manifold(x) && homology(x) == sphere_homology(n);
    return is_homology_manifold_near(c.complex, apex(c), n + 1).yes == expected;
}

bool cone_boundary_property(const SimplicialComplex& x) {
    const int dim = x.dimension();
    const ManifoldCheck in_x = is_homology_manifold_with_boundary(x, dim);
    const bool expected = in_x.yes && !in_x.boundary.empty() && homology(x, true).is_acyclic() &&
                          homology(in_x.boundary) == sphere_homology(dim - 1);
    const Construction c = cone(x);
    const ManifoldCheck at_apex = is_homology_manifold_with_boundary_near(c.complex, apex(c), dim + 1);
    const bool observed = at_apex.yes && !at_apex.boundary.empty();
    if (observed != expected) return false;
    if (!expected) return true;
    std::vector<Face> want;
    for (Face f : in_x.boundary.facets()) {
        f.push_back(apex(c));
        want.push_back(std::move(f));
    }
    std::vector<Face> got;
    for (const auto& f : at_apex.boundary.facets())
        if (std::binary_search(f.begin(), f.end(), apex(c))) got.push_back(f);
    return got == SimplicialComplex(std::move(want), c.complex.vertex_count()).facets();
}

bool double_symmetry(const SimplicialComplex& k, const SimplicialComplex& l) {
    const Construction d = double_along(k, l);
    const std::vector<Vertex> swap = double_swap(d);
    try {
        validate_action(d.complex, SimplicialAction{d.complex.vertex_count(), {swap}, {"swap"}});
    } catch (const std::exception&) {
        return false;
    }
    std::vector<Face> relabeled;
    for (const auto& f : d.complex.facets()) {
        Face g;
        for (Vertex v : f) g.push_back(swap[v]);
        relabeled.push_back(std::move(g));
    }
    const SimplicialComplex mirror(std::move(relabeled), d.complex.vertex_count());
    return mirror == d.complex && homology(mirror) == homology(d.complex);
}

}  // namespace orbiclass
