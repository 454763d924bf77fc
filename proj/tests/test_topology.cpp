#include <numeric>
#include <random>

#include "doctest.h"
#include "orbiclass/catalog.hpp"
#include "orbiclass/errors.hpp"
#include "orbiclass/fixtures.hpp"
#include "orbiclass/group.hpp"
#include "orbiclass/homology.hpp"
#include "orbiclass/presentation.hpp"

using namespace orbiclass;

namespace {

HomologyGroup z(std::size_t betti = 1) { return {betti, {}}; }
HomologyGroup torsion(int t) { return {0, {BigInt(t)}}; }

// Test-only oracle: invariant factors as ratios of determinantal divisors
// (gcd of all k x k minors), by cofactor expansion on small matrices.
BigInt det(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        out += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
    }
    return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::vector<BigInt> oracle_invariant_factors(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<BigInt> d{1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        BigInt g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                std::vector<std::vector<BigInt>> m;
                for (auto r : rs) {
                    std::vector<BigInt> row;
                    for (auto c : cs) row.push_back(a[r][c]);
                    m.push_back(std::move(row));
                }
                BigInt x = det(m);
                if (x < 0) x = -x;
                g = boost::multiprecision::gcd(g, x);
            }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<BigInt> out;
    for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
    return out;
}

std::vector<SparseRow> to_sparse(const std::vector<std::vector<BigInt>>& a) {
    std::vector<SparseRow> rows;
    for (const auto& r : a) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s.emplace_back(c, r[c]);
        rows.push_back(std::move(s));
    }
    return rows;
}

Presentation coxeter(std::size_t n, const std::vector<std::vector<int>>& m) {
    Presentation p;
    p.generators = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Word w;
            const int a = static_cast<int>(i) + 1, b = static_cast<int>(j) + 1;
            for (int k = 0; k < m[i][j]; ++k) {
                w.push_back(a);
                if (i != j) w.push_back(b);
            }
            if (i == j) w = {a, a};
            p.relators.push_back(w);
        }
    return p;
}

}  // namespace

TEST_CASE("build_complex") {
    SimplicialComplex tri = build_complex({{0, 1, 2}});
    CHECK(tri.dimension() == 2);
    CHECK(tri.f_vector() == std::vector<std::size_t>{3, 3, 1});
    SimplicialComplex absorbed = build_complex({{0, 1}, {2, 1, 0}, {1}});
    CHECK(absorbed == tri);
    CHECK(simplex_boundary(2).facets().size() == 4);
    SimplicialComplex oct = cross_polytope_boundary(3);
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.facets().size() == 8);
    CHECK_THROWS_AS(build_complex({}), InvalidComplex);
    CHECK_THROWS_AS(build_complex({{}}), InvalidComplex);
}

TEST_CASE("homology examples") {
    HomologyResult oct = homology(cross_polytope_boundary(3));
    CHECK(oct.at(0) == z());
    CHECK(oct.at(1).is_zero());
    CHECK(oct.at(2) == z());
    CHECK(oct == sphere_homology(2));

    HomologyResult rp = homology(projective_plane());
    CHECK(rp.at(0) == z());
    CHECK(rp.at(1) == torsion(2));
    CHECK(rp.at(2).is_zero());

    HomologyResult pt = homology(build_complex({{0}}));
    CHECK(pt.at(0) == z());
    CHECK(pt.groups.size() == 1);
    CHECK(homology(build_complex({{0}}), true).is_acyclic());
    CHECK(homology(SimplicialComplex(), true).is_sphere(-1));

    HomologyResult torus = homology(product(polygon(3), polygon(3)).complex);
    CHECK(torus.at(1) == z(2));
    CHECK(torus.at(2) == z());
}

TEST_CASE("smith normal form against determinantal divisors") {
    std::vector<std::vector<BigInt>> textbook = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm snf = smith_normal_form(to_sparse(textbook), 3);
    CHECK(snf.divisors == std::vector<BigInt>{2, 6, 12});
    CHECK(snf.divisors == oracle_invariant_factors(textbook));

    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
        for (auto& r : a)
            for (auto& x : r) x = rng() % 3 == 0 ? 0 : static_cast<int>(rng() % 13) - 6;
        SmithForm s = smith_normal_form(to_sparse(a), cols);
        std::vector<BigInt> want = oracle_invariant_factors(a);
        CHECK(s.rank == want.size());
        CHECK(s.divisors == want);
    }
}

TEST_CASE("link examples") {
    SimplicialComplex oct = cross_polytope_boundary(3);
    SimplicialComplex lk = link(oct, {0});
    CHECK(lk.facets().size() == 4);
    CHECK(homology(lk) == sphere_homology(1));
    SimplicialComplex edge_link = link(simplex_boundary(2), {0, 1});
    CHECK(edge_link.facets() == std::vector<Face>{{2}, {3}});
    CHECK(link(oct, {0, 2, 4}).empty());
    CHECK_THROWS_AS(link(oct, {0, 1}), InvalidComplex);
}

TEST_CASE("constructions") {
    Construction interval = cone(SimplicialComplex(std::vector<Face>{{0}, {1}}));
    CHECK(interval.complex.facets() == std::vector<Face>{{0, 2}, {1, 2}});
    CHECK(interval.origin.back().kind == VertexOrigin::Kind::apex);

    SimplicialComplex tri = simplex(2);
    Construction dbl = double_along(tri, polygon(3));
    CHECK(homology(dbl.complex) == sphere_homology(2));
    CHECK(dbl.complex.facets().size() == 12);
    CHECK(dbl.carrier.size() == 7);
    Construction plain = double_along(simplex(1), SimplicialComplex(std::vector<Face>{{0}}, 2));
    CHECK(plain.carrier.empty());
    CHECK(plain.complex.facets() == std::vector<Face>{{0, 1}, {0, 3}});

    Construction susp = suspension(cross_polytope_boundary(3));
    CHECK(homology(susp.complex) == sphere_homology(3));

    CHECK_THROWS_AS(double_along(tri, SimplicialComplex(std::vector<Face>{{0, 5}})), InvalidComplex);

    Construction square = product(simplex(1), simplex(1));
    CHECK(square.complex.facets().size() == 2);
    CHECK(square.origin[3] == VertexOrigin{VertexOrigin::Kind::pair, 1, 1});
    CHECK(homology(join(polygon(3), polygon(3)).complex) == sphere_homology(3));
}

TEST_CASE("quotient examples") {
    SimplicialComplex tri = simplex(2);
    Quotient trivial = quotient(tri, SimplicialAction{3, {}, {}});
    Subdivision sd2 = barycentric_subdivision(barycentric_subdivision(tri).complex);
    CHECK(trivial.complex == sd2.complex);
    CHECK(trivial.complex.facets().size() == 36);

    Quotient rp = quotient(cross_polytope_boundary(3), antipodal_action(3));
    CHECK(homology(rp.complex).at(1) == torsion(2));
    CHECK(rp.complex.facets().size() * 2 == rp.subdivided.facets().size());

    Quotient circle = quotient(polygon(6), polygon_rotation(6));
    CHECK(homology(circle.complex) == sphere_homology(1));

    SimplicialAction bad{6, {{1, 0, 2, 3, 5, 4}, {0, 2, 1, 3, 4, 5}}, {}};
    CHECK_THROWS_AS(quotient(cross_polytope_boundary(3), bad), InvalidAction);
    CHECK_THROWS_AS(validate_action(cross_polytope_boundary(3), SimplicialAction{5, {}, {}}), InvalidAction);
}

TEST_CASE("homology manifold tests") {
    SimplicialComplex oct = cross_polytope_boundary(3);
    CHECK(is_homology_manifold(oct, 2).yes);

    Construction cone_rp = cone(projective_plane());
    const auto apex = static_cast<Vertex>(cone_rp.complex.vertex_count() - 1);
    ManifoldCheck c = is_homology_manifold_near(cone_rp.complex, apex, 3);
    CHECK_FALSE(c.yes);
    REQUIRE(c.witness);
    CHECK(*c.witness == Face{apex});
    CHECK_FALSE(is_homology_manifold(cone_rp.complex, 3).yes);

    ManifoldCheck tri = is_homology_manifold(simplex(2), 2);
    CHECK_FALSE(tri.yes);
    REQUIRE(tri.witness);

    ManifoldCheck tri_b = is_homology_manifold_with_boundary(simplex(2), 2);
    CHECK(tri_b.yes);
    CHECK(tri_b.boundary == polygon(3));

    ManifoldCheck oct_b = is_homology_manifold_with_boundary(oct, 2);
    CHECK(oct_b.yes);
    CHECK(oct_b.boundary.empty());

    ManifoldCheck cone_b = is_homology_manifold_with_boundary_near(cone_rp.complex, apex, 3);
    CHECK_FALSE(cone_b.yes);
    CHECK(*cone_b.witness == Face{apex});

    SimplicialComplex impure = build_complex({{0, 1, 2}, {2, 3}});
    CHECK(is_homology_manifold(impure, 2).reason == "not_pure");
}

TEST_CASE("fundamental group examples") {
    Presentation sphere = pi1_presentation(simplex_boundary(2));
    CHECK(coset_enumeration(simplify(sphere)).order == 1);
    CHECK(coset_enumeration(sphere).order == 1);

    Presentation rp = pi1_presentation(projective_plane());
    CHECK(abelian_invariants(rp) == std::vector<std::string>{"Z/2"});
    CHECK(coset_enumeration(simplify(rp)).order == 2);

    Presentation circle = pi1_presentation(polygon(3));
    CHECK(circle.generators == 1);
    CHECK(circle.relators.empty());
    CosetResult free = coset_enumeration(circle, 1000);
    CHECK_FALSE(free.closed);

    Presentation two_points;
    two_points.generators = 0;
    CHECK(coset_enumeration(two_points).order == 1);
    CHECK_THROWS_AS(pi1_presentation(SimplicialComplex(std::vector<Face>{{0}, {1}})), InvalidComplex);
}

TEST_CASE("coset enumeration matches group closure") {
    CHECK(coset_enumeration(Presentation{1, {{1, 1}}}).order == 2);
    // Coxeter presentations against the matrix groups they present
    CHECK(coset_enumeration(coxeter(3, {{1, 3, 2}, {3, 1, 4}, {2, 4, 1}})).order ==
          closure(make_family("signed_permutation_reflections(3)")).order());
    CHECK(coset_enumeration(coxeter(3, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}})).order ==
          closure(make_family("permutation_reflections(4)")).order());
    CHECK(coset_enumeration(coxeter(2, {{1, 7}, {7, 1}})).order == closure(make_family("dihedral(7)")).order());
    // (st)^2 = s^3 = t^5 presents the binary icosahedral group
    Presentation binary{2, {{1, 2, 1, 2, -1, -1, -1}, {1, 1, 1, -2, -2, -2, -2, -2}}};
    CHECK(coset_enumeration(binary).order == closure(make_family("binary_icosahedral()")).order());
    CHECK_FALSE(coset_enumeration(Presentation{2, {{1, 1}, {2, 2}}}, 500).closed);
    // s^2 = t^3 = (st)^5 is a central extension of order 19 * 120
    Presentation extension{2, {{1, 1, -2, -2, -2}, {1, 1, -2, -1, -2, -1, -2, -1, -2, -1, -2, -1}}};
    CHECK(abelian_invariants(extension) == std::vector<std::string>{"Z/19"});
    CHECK(coset_enumeration(extension).order == 2280);
}

TEST_CASE("simplification preserves the group") {
    std::mt19937 rng(3);
    const std::vector<Presentation> base = {coxeter(3, {{1, 3, 2}, {3, 1, 4}, {2, 4, 1}}),
                                            coxeter(2, {{1, 5}, {5, 1}}), Presentation{1, {{1, 1, 1}}}};
    for (const auto& p : base) {
        const std::size_t order = coset_enumeration(p).order;
        for (int t = 0; t < 5; ++t) {
            // add a redundant generator equal to a random word, plus a
            // conjugated copy of an existing relator
            Presentation q = p;
            q.generators += 1;
            Word def;
            for (int i = 0; i < 3; ++i) {
                int g = 1 + static_cast<int>(rng() % p.generators);
                def.push_back(rng() % 2 ? g : -g);
            }
            Word rel = def;
            rel.push_back(-static_cast<int>(q.generators));
            q.relators.push_back(rel);
            Word conj{static_cast<int>(q.generators)};
            const Word& r0 = p.relators[rng() % p.relators.size()];
            conj.insert(conj.end(), r0.begin(), r0.end());
            conj.push_back(-static_cast<int>(q.generators));
            q.relators.push_back(conj);
            Presentation s = simplify(q);
            CHECK(s.generators <= q.generators);
            CHECK(coset_enumeration(q).order == order);
            CHECK(coset_enumeration(s).order == order);
            CHECK(abelian_invariants(s) == abelian_invariants(p));
        }
    }
    CHECK(cyclically_reduce({1, 2, -2, 3, -1}) == Word{3});
}

TEST_CASE("fixtures") {
    SimplicialComplex cell = six_hundred_cell();
    CHECK(cell.f_vector() == std::vector<std::size_t>{120, 720, 1200, 600});
    CHECK(cell.euler_characteristic() == 0);
    CHECK(is_homology_manifold(cell, 3).yes);
    for (Vertex v : {Vertex{0}, Vertex{57}, Vertex{119}}) {
        SimplicialComplex lk = link(cell, {v});
        CHECK(lk.f_vector() == std::vector<std::size_t>{12, 30, 20});
        CHECK(homology(lk) == sphere_homology(2));
    }
    SimplicialAction left = binary_icosahedral_action();
    CHECK_NOTHROW(validate_action(cell, left));
    CHECK(vertex_orbits(120, left.generators) == std::vector<Vertex>(120, 0));

    for (const char* name : {"octahedron", "cross_polytope_4", "cross_polytope_2_antipodal", "tetrahedron_boundary",
                             "triangle", "polygon_5", "projective_plane"}) {
        CAPTURE(name);
        Fixture f = fixture(name);
        CHECK(f.complex.dimension() == f.dimension);
        CHECK_NOTHROW(validate_action(f.complex, f.action));
        HomologyResult h = homology(f.complex);
        long long alternating = 0;
        for (int d = 0; d <= f.dimension; ++d)
            alternating += (d % 2 ? -1 : 1) * static_cast<long long>(h.at(d).betti);
        CHECK(alternating == f.complex.euler_characteristic());
    }
    CHECK_THROWS_AS(fixture("dodecahedron"), ParseError);
}

TEST_CASE("poincare sphere quotient") {
    Quotient q = quotient(six_hundred_cell(), binary_icosahedral_action());
    CHECK(q.complex.facets().size() == 2880);
    HomologyResult h = homology(q.complex);
    CHECK(h == sphere_homology(3));
    CHECK(is_homology_manifold(q.complex, 3).yes);
    Presentation p = simplify(pi1_presentation(q.complex));
    CHECK(abelian_invariants(p).empty());
    CosetResult c = coset_enumeration(p);
    CHECK(c.closed);
    CHECK(c.order == 120);
}
