#include <random>
#include <set>

#include "doctest.h"
#include "orbiclass/fixtures.hpp"
#include "orbiclass/homology.hpp"
#include "orbiclass/properties.hpp"

using namespace orbiclass;

namespace {

struct Sample {
    std::string name;
    SimplicialComplex complex;
};

SimplicialComplex without_open_star(const SimplicialComplex& k, Vertex v) {
    std::vector<Face> keep;
    for (const auto& f : k.facets())
        if (!std::binary_search(f.begin(), f.end(), v)) keep.push_back(f);
    return SimplicialComplex(std::move(keep), k.vertex_count());
}

// Small complexes with a known mix of closed manifolds, manifolds with
// boundary and singular spaces.
std::vector<Sample> corpus() {
    std::vector<Sample> c;
    c.push_back({"two points", simplex_boundary(0)});
    c.push_back({"triangle boundary", polygon(3)});
    c.push_back({"square", polygon(4)});
    c.push_back({"pentagon", polygon(5)});
    c.push_back({"tetrahedron boundary", simplex_boundary(2)});
    c.push_back({"octahedron", cross_polytope_boundary(3)});
    c.push_back({"suspended square", suspension(polygon(4)).complex});
    c.push_back({"four-simplex boundary", simplex_boundary(3)});
    c.push_back({"projective plane", projective_plane()});
    c.push_back({"torus", product(polygon(3), polygon(3)).complex});
    c.push_back({"edge", simplex(1)});
    c.push_back({"path", build_complex({{0, 1}, {1, 2}, {2, 3}})});
    c.push_back({"triangle", simplex(2)});
    c.push_back({"tetrahedron", simplex(3)});
    c.push_back({"coned square", cone(polygon(4)).complex});
    c.push_back({"annulus", product(polygon(3), simplex(1)).complex});
    c.push_back({"moebius band", without_open_star(projective_plane(), 0)});
    c.push_back({"bowtie", build_complex({{0, 1, 2}, {0, 3, 4}})});
    c.push_back({"three triangles on an edge", build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})});
    c.push_back({"figure eight", build_complex({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}})});
    c.push_back({"triangle with whisker", build_complex({{0, 1, 2}, {2, 3}})});
    c.push_back({"tripod", build_complex({{0, 1}, {0, 2}, {0, 3}})});
    c.push_back({"coned projective plane", cone(projective_plane()).complex});
    c.push_back({"wedge of spheres", build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6},
                                                   {0, 5, 6}, {4, 5, 6}})});
    return c;
}

bool closed_manifold(const SimplicialComplex& k) { return is_homology_manifold(k, k.dimension()).yes; }

std::vector<Face> facets_of(const SimplicialComplex& k) { return k.facets(); }

SimplicialComplex random_complex(std::mt19937& rng) {
    static const std::vector<SimplicialComplex> bases = {simplex_boundary(2), cross_polytope_boundary(3), polygon(5),
                                                         simplex(2), simplex_boundary(0), polygon(3)};
    const SimplicialComplex& base = bases[rng() % bases.size()];
    std::vector<Face> keep;
    for (const auto& f : base.facets())
        if (rng() % 4 != 0) keep.push_back(f);
    if (keep.empty()) keep.push_back(base.facets().front());
    return SimplicialComplex(std::move(keep), base.vertex_count());
}

Vertex apex_of(const Construction& c) { return static_cast<Vertex>(c.complex.vertex_count() - 1); }

bool acyclic(const SimplicialComplex& k) { return homology(k, true).is_acyclic(); }

}  // namespace

TEST_CASE("corpus status is as expected") {
    const std::set<std::string> closed = {"two points",           "triangle boundary", "square",
                                          "pentagon",             "tetrahedron boundary", "octahedron",
                                          "suspended square",     "four-simplex boundary", "projective plane",
                                          "torus"};
    const std::set<std::string> bounded = {"edge",         "path",    "triangle",    "tetrahedron",
                                           "coned square", "annulus", "moebius band"};
    const auto samples = corpus();
    CHECK(samples.size() >= 20);
    for (const auto& s : samples) {
        CAPTURE(s.name);
        const int n = s.complex.dimension();
        CHECK(closed_manifold(s.complex) == closed.count(s.name) > 0);
        ManifoldCheck b = is_homology_manifold_with_boundary(s.complex, n);
        CHECK(b.yes == (closed.count(s.name) + bounded.count(s.name) > 0));
        if (bounded.count(s.name)) CHECK_FALSE(b.boundary.empty());
    }
}

TEST_CASE("product is a manifold exactly when both factors are") {
    const auto samples = corpus();
    std::vector<Sample> small;
    for (const auto& s : samples)
        if (s.complex.facets().size() <= 10) small.push_back(s);
    for (const auto& x : small)
        for (const auto& y : small) {
            CAPTURE(x.name);
            CAPTURE(y.name);
            const SimplicialComplex p = product(x.complex, y.complex).complex;
            CHECK(closed_manifold(p) == (closed_manifold(x.complex) && closed_manifold(y.complex)));
        }

    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        const SimplicialComplex x = random_complex(rng), y = random_complex(rng);
        CAPTURE(facets_of(x));
        CAPTURE(facets_of(y));
        const SimplicialComplex p = product(x, y).complex;
        CHECK(closed_manifold(p) == (closed_manifold(x) && closed_manifold(y)));
    }
}

TEST_CASE("product with a closed manifold has boundary from the other factor") {
    const std::vector<SimplicialComplex> closed = {simplex_boundary(0), polygon(3), polygon(4)};
    auto samples = corpus();
    std::mt19937 rng(13);
    for (int t = 0; t < 12; ++t) samples.push_back({"random", random_complex(rng)});
    for (const auto& x : closed)
        for (const auto& y : samples) {
            if (y.complex.facets().size() > 12) continue;
            CAPTURE(y.name);
            CAPTURE(facets_of(x));
            const int dy = y.complex.dimension();
            ManifoldCheck in_y = is_homology_manifold_with_boundary(y.complex, dy);
            const SimplicialComplex p = product(x, y.complex).complex;
            ManifoldCheck in_p = is_homology_manifold_with_boundary(p, x.dimension() + dy);
            CHECK(in_p.yes == in_y.yes);
            if (!in_p.yes) continue;
            if (in_y.boundary.empty()) {
                CHECK(in_p.boundary.empty());
            } else {
                CHECK(in_p.boundary == product(x, in_y.boundary).complex);
            }
        }
}

TEST_CASE("open cone is a manifold exactly over homology spheres") {
    for (const auto& s : corpus()) {
        CAPTURE(s.name);
        const int n = s.complex.dimension();
        const Construction c = cone(s.complex);
        const bool expected = closed_manifold(s.complex) && homology(s.complex) == sphere_homology(n);
        CHECK(is_homology_manifold_near(c.complex, apex_of(c), n + 1).yes == expected);
    }
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        const SimplicialComplex x = random_complex(rng);
        CAPTURE(facets_of(x));
        const int n = x.dimension();
        const Construction c = cone(x);
        const bool expected = closed_manifold(x) && homology(x) == sphere_homology(n);
        CHECK(is_homology_manifold_near(c.complex, apex_of(c), n + 1).yes == expected);
    }
}

TEST_CASE("open cone over the poincare sphere quotient") {
    const Quotient q = quotient(six_hundred_cell(), binary_icosahedral_action());
    const Construction c = cone(q.complex);
    CHECK(is_homology_manifold_near(c.complex, apex_of(c), 4).yes);
    const Construction rp = cone(projective_plane());
    CHECK_FALSE(is_homology_manifold_near(rp.complex, apex_of(rp), 3).yes);
}

TEST_CASE("open cone has boundary exactly over acyclic manifolds with sphere boundary") {
    auto samples = corpus();
    std::mt19937 rng(19);
    for (int t = 0; t < 30; ++t) samples.push_back({"random", random_complex(rng)});
    for (const auto& s : samples) {
        CAPTURE(s.name);
        CAPTURE(facets_of(s.complex));
        const int dim = s.complex.dimension();
        if (dim < 1) continue;
        ManifoldCheck x = is_homology_manifold_with_boundary(s.complex, dim);
        const bool expected = x.yes && !x.boundary.empty() && acyclic(s.complex) &&
                              homology(x.boundary) == sphere_homology(dim - 1);
        const Construction c = cone(s.complex);
        ManifoldCheck at_apex = is_homology_manifold_with_boundary_near(c.complex, apex_of(c), dim + 1);
        const bool observed = at_apex.yes && !at_apex.boundary.empty();
        CHECK(observed == expected);
        if (expected) {
            // the boundary near the apex is the cone over the boundary of X
            std::vector<Face> want;
            for (Face f : x.boundary.facets()) {
                f.push_back(apex_of(c));
                want.push_back(f);
            }
            std::vector<Face> got;
            for (const auto& f : at_apex.boundary.facets())
                if (std::binary_search(f.begin(), f.end(), apex_of(c))) got.push_back(f);
            CHECK(got == SimplicialComplex(want, c.complex.vertex_count()).facets());
        }
    }
}

TEST_CASE("double along a subcomplex has the swap symmetry") {
    std::mt19937 rng(23);
    auto samples = corpus();
    for (int t = 0; t < 20; ++t) samples.push_back({"random", random_complex(rng)});
    for (const auto& s : samples) {
        if (s.complex.facets().size() > 40) continue;
        CAPTURE(s.name);
        // random subcomplex: a handful of faces of random dimension
        std::vector<Face> chosen;
        for (int d = 0; d <= s.complex.dimension(); ++d)
            for (const auto& f : s.complex.faces(d))
                if (rng() % 5 == 0) chosen.push_back(f);
        if (chosen.empty()) chosen.push_back(s.complex.faces(0).front());
        const SimplicialComplex l = subcomplex(s.complex, chosen);
        const Construction d = double_along(s.complex, l);
        const std::vector<Vertex> swap = double_swap(d);
        CHECK_NOTHROW(validate_action(d.complex, SimplicialAction{d.complex.vertex_count(), {swap}, {"swap"}}));
        std::vector<Face> relabeled;
        for (const auto& f : d.complex.facets()) {
            Face g;
            for (Vertex v : f) g.push_back(swap[v]);
            relabeled.push_back(g);
        }
        const SimplicialComplex mirror(std::move(relabeled), d.complex.vertex_count());
        CHECK(mirror == d.complex);
        CHECK(homology(mirror) == homology(d.complex));
    }
}

TEST_CASE("quotient projection is simplicial and surjective") {
    for (const char* name : {"octahedron", "cross_polytope_3", "cross_polytope_2", "cross_polytope_2_antipodal",
                             "polygon_5", "polygon_6", "tetrahedron_boundary"}) {
        CAPTURE(name);
        const Fixture f = fixture(name);
        const Quotient q = quotient(f.complex, f.action);
        std::vector<char> hit(q.complex.vertex_count(), 0);
        for (Vertex v : q.subdivided.vertices()) hit[q.projection[v]] = 1;
        for (Vertex v : q.complex.vertices()) CHECK(hit[v]);
        std::set<Face> images;
        for (const auto& facet : q.subdivided.facets()) {
            Face img;
            for (Vertex v : facet) img.push_back(q.projection[v]);
            std::sort(img.begin(), img.end());
            CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
            CHECK(q.complex.contains_face(img));
            images.insert(img);
        }
        for (const auto& facet : q.complex.facets()) CHECK(images.count(facet));
        const auto fq = q.complex.f_vector(), fs = q.subdivided.f_vector();
        std::size_t total_q = 0, total_s = 0;
        for (auto x : fq) total_q += x;
        for (auto x : fs) total_s += x;
        CHECK(total_q <= total_s);
    }
}

TEST_CASE("library property checks agree on the shared corpus") {
    const auto shared = property_corpus();
    CHECK(shared.size() == corpus().size());
    std::mt19937 rng(29);
    for (const auto& s : shared) {
        CAPTURE(s.name);
        CHECK(cone_property(s.complex));
        if (s.complex.dimension() >= 1) CHECK(cone_boundary_property(s.complex));
        CHECK(double_symmetry(s.complex, subcomplex(s.complex, {s.complex.facets().front()})));
        CHECK(product_boundary_property(polygon(3), s.complex.facets().size() <= 12 ? s.complex : simplex(1)));
    }
    for (int t = 0; t < 10; ++t) CHECK(product_property(random_facet_subset(rng), random_facet_subset(rng)));
}
