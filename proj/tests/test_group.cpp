#include <set>
#include <unordered_set>

#include "doctest.h"
#include "orbiclass/catalog.hpp"
#include "orbiclass/errors.hpp"
#include "orbiclass/group.hpp"

using namespace orbiclass;

namespace {

// Test-only brute force: repeatedly multiply every pair until nothing new
// appears. Independent of the breadth-first closure in the engine.
std::unordered_set<Matrix> brute_closure(const std::vector<Matrix>& gens) {
    std::unordered_set<Matrix> set(gens.begin(), gens.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Matrix> current(set.begin(), set.end());
        for (const auto& a : current)
            for (const auto& b : current)
                if (set.insert(a * b).second) grew = true;
    }
    return set;
}

std::size_t brute_derived_order(const MatrixGroup& g) {
    std::vector<Matrix> comms;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements()) comms.push_back(a.transpose() * b.transpose() * a * b);
    return brute_closure(comms).size();
}

}  // namespace

TEST_CASE("closure") {
    CHECK(closure({plane_rotation(5)}).order() == 5);
    auto b3 = make_family("signed_permutation_reflections(3)");
    CHECK(closure(b3).order() == brute_closure(b3).size());
    CHECK(closure(b3).order() == 48);
    auto ico = make_family("binary_icosahedral()");
    CHECK(closure(ico).order() == 120);
    CHECK(closure(ico).elements().front().is_identity());
}

TEST_CASE("closure errors") {
    Matrix shear(2, 2, {Scalar(1), Scalar(1), Scalar(0), Scalar(1)});
    try {
        closure({Matrix::identity(2), shear});
        FAIL("expected NonOrthogonalGenerator");
    } catch (const NonOrthogonalGenerator& e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(closure(make_family("signed_permutation_reflections(3)"), 10), CapExceeded);
    CHECK_THROWS_AS(closure({Matrix::identity(2), Matrix::identity(3)}), DimensionMismatch);
    // complex entries are rejected as non-real
    Matrix complex_diag = Matrix::diagonal({Scalar::zeta(4), Scalar::zeta(4).conj()});
    CHECK_THROWS_AS(closure({complex_diag}), NonOrthogonalGenerator);
}

TEST_CASE("classify_element") {
    CHECK(classify_element(Matrix::identity(3)) == ElementClass{ElementTag::identity, 0});
    CHECK(classify_element(Matrix::diagonal({Scalar(-1), Scalar(1), Scalar(1)})) ==
          ElementClass{ElementTag::reflection, 1});
    CHECK(classify_element(-Matrix::identity(3)) == ElementClass{ElementTag::other, 3});
    CHECK(classify_element(plane_rotation(5)) == ElementClass{ElementTag::rotation, 2});
}

TEST_CASE("generated_subgroup") {
    MatrixGroup b3 = closure(make_family("signed_permutation_reflections(3)"));
    CHECK(generated_subgroup(b3, {0}).order() == 1);
    auto refl = b3.indices_with_tag(ElementTag::reflection);
    CHECK(refl.size() == 9);
    CHECK(generated_subgroup(b3, refl).order() == 48);
    MatrixGroup neg = closure(make_family("negative_identity(3)"));
    CHECK(neg.indices_with_tag(ElementTag::reflection).empty());
    CHECK(generated_subgroup(neg, neg.indices_with_tag(ElementTag::reflection)).order() == 1);
}

TEST_CASE("derived_subgroup matches brute-force commutators") {
    MatrixGroup cyc = closure({plane_rotation(6)});
    CHECK(derived_subgroup(cyc).order() == 1);

    MatrixGroup b3 = closure(make_family("signed_permutation_reflections(3)"));
    std::size_t oracle = brute_derived_order(b3);
    CHECK(oracle == 12);  // frozen from the brute-force oracle
    CHECK(derived_subgroup(b3).order() == oracle);

    MatrixGroup ico = closure(make_family("binary_icosahedral()"));
    CHECK(derived_subgroup(ico).order() == 120);
}

TEST_CASE("restriction_kernel") {
    MatrixGroup b2 = closure(make_family("signed_permutation_reflections(2)"));
    CHECK(restriction_kernel(b2, Subspace(2)).order() == 8);
    CHECK(restriction_kernel(b2, Subspace::whole(2)).order() == 1);

    MatrixGroup g = closure(make_family("direct_sum(signed_permutation_reflections(2), binary_icosahedral())"));
    CHECK(g.order() == 960);
    MatrixGroup k = restriction_kernel(g, Subspace::coordinate(6, {0, 1}));
    CHECK(k.order() == 120);
    CHECK_THROWS_AS(restriction_kernel(b2, Subspace::coordinate(2, {0})), NotInvariant);
}

TEST_CASE("support_span") {
    CHECK(support_span({}, 3).dim() == 0);
    CHECK(support_span({Matrix::diagonal({Scalar(-1), Scalar(1), Scalar(1)})}, 3) == Subspace::coordinate(3, {0}));
    MatrixGroup g = closure(make_family("direct_sum(signed_permutation_reflections(2), trivial(2))"));
    std::vector<Matrix> refl;
    for (auto i : g.indices_with_tag(ElementTag::reflection)) refl.push_back(g.element(i));
    CHECK(refl.size() == 4);
    CHECK(support_span(refl, 4) == Subspace::coordinate(4, {0, 1}));
}

TEST_CASE("is_fixed_point_free") {
    CHECK(is_fixed_point_free(MatrixGroup(3), Subspace::whole(3)));
    MatrixGroup refl = closure({Matrix::diagonal({Scalar(-1), Scalar(1)})});
    CHECK_FALSE(is_fixed_point_free(refl, Subspace::whole(2)));
    MatrixGroup ico = closure(make_family("binary_icosahedral()"));
    CHECK(is_fixed_point_free(ico, Subspace::whole(4, 5)));
    for (std::size_t i = 1; i < ico.order(); ++i) CHECK(ico.fixed_codim(i) == 4);
}

TEST_CASE("orientation_subgroup") {
    MatrixGroup cyc = closure({plane_rotation(7)});
    CHECK(orientation_subgroup(cyc).order() == 7);
    MatrixGroup b3 = closure(make_family("signed_permutation_reflections(3)"));
    CHECK(orientation_subgroup(b3).order() == 24);
    MatrixGroup refl = closure({Matrix::diagonal({Scalar(-1), Scalar(1)})});
    CHECK(orientation_subgroup(refl).order() == 1);
}

TEST_CASE("group invariants") {
    for (const char* fam : {"dihedral(6)", "signed_permutation_reflections(3)", "permutation_reflections(4)",
                            "binary_icosahedral()", "rotation_subgroup(signed_permutation_reflections(3))"}) {
        CAPTURE(fam);
        auto gens = make_family(fam);
        MatrixGroup g = closure(gens);
        // deterministic under generator reordering (as sets)
        std::vector<Matrix> reversed(gens.rbegin(), gens.rend());
        MatrixGroup h = closure(reversed);
        CHECK(h.order() == g.order());
        CHECK(h.canonical_elements() == g.canonical_elements());
        // orientation subgroup index 1 or 2, Lagrange for computed subgroups
        std::size_t o = orientation_subgroup(g).order();
        CHECK((o == g.order() || 2 * o == g.order()));
        CHECK(g.order() % derived_subgroup(g).order() == 0);
        // conjugation invariance of the element classification
        for (std::size_t i = 0; i < g.order(); i += 7) {
            for (const auto& x : gens) {
                Matrix conj = x.transpose() * g.element(i) * x;
                CHECK(classify_element(conj) == g.element_class(i));
            }
        }
        for (const auto& e : g.elements()) {
            CHECK(e.is_orthogonal());
            Scalar det = e.determinant();
            CHECK((det == Scalar(1) || det == Scalar(-1)));
        }
    }
}
