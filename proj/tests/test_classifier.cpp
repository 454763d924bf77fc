#include <random>

#include "doctest.h"
#include "orbiclass/catalog.hpp"
#include "orbiclass/classifier.hpp"

using namespace orbiclass;

namespace {

MatrixGroup fam(const std::string& spec, std::size_t cap = kDefaultClosureCap) {
    return closure(make_family(spec), cap);
}

Matrix right_multiplication(const Quaternion& q) {
    const Scalar &a = q.w, &b = q.x, &c = q.y, &d = q.z;
    return Matrix(4, 4, {a, -b, -c, -d, b, a, d, -c, c, -d, a, b, d, c, -b, a});
}

Matrix random_signed_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q.set(i, perm[i], Scalar(rng() % 2 ? 1 : -1));
    return q;
}

MatrixGroup conjugate(const MatrixGroup& g, const Matrix& q) {
    std::vector<Matrix> gens;
    for (const auto& x : g.generators()) gens.push_back(q * x.promote(g.conductor()) * q.transpose());
    if (gens.empty()) gens.push_back(Matrix::identity(g.dim()));
    return closure(gens);
}

bool same_verdicts(const VerdictReport& a, const VerdictReport& b) {
    bool refusal_match = a.refusal.has_value() == b.refusal.has_value();
    if (refusal_match && a.refusal)
        refusal_match = a.refusal->step == b.refusal->step && a.refusal->reason == b.refusal->reason &&
                        a.refusal->witness_codim == b.refusal->witness_codim;
    return a.dimension == b.dimension && a.group_order == b.group_order && a.homology == b.homology &&
           a.topological == b.topological && a.pl == b.pl && a.lipschitz == b.lipschitz && a.model == b.model &&
           a.decomposition == b.decomposition && refusal_match;
}

void check_chain(const VerdictReport& r) {
    CHECK(r.pl == r.lipschitz);
    if (r.pl.yes) CHECK(r.topological.yes);
    if (r.topological.yes) CHECK(r.homology.yes);
    for (const auto* v : {&r.homology, &r.topological, &r.pl, &r.lipschitz})
        if (v->yes) CHECK(v->boundary_nonempty == r.decomposition.has_reflection);
}

}  // namespace

TEST_CASE("recognize_poincare") {
    MatrixGroup ico = fam("binary_icosahedral()");
    CHECK(check_poincare(ico, Subspace::whole(4)) == PoincareCheck::ok);

    std::vector<Matrix> right;
    for (const auto& q : binary_icosahedral_generators()) right.push_back(right_multiplication(q));
    CHECK(recognize_poincare(closure(right), Subspace::whole(4)));

    // cyclic of order 120 acting freely: rotation by the same angle in two planes
    Matrix r = plane_rotation(120);
    MatrixGroup cyc = closure({Matrix::block_diagonal({r, r})});
    CHECK(cyc.order() == 120);
    CHECK(is_fixed_point_free(cyc, Subspace::whole(4)));
    CHECK(check_poincare(cyc, Subspace::whole(4)) == PoincareCheck::not_perfect);

    // binary tetrahedral group
    const Scalar half(Rational(1, 2));
    MatrixGroup bt = closure({left_multiplication({half, half, half, half}),
                              left_multiplication({Scalar(0), Scalar(1), Scalar(0), Scalar(0)})});
    CHECK(bt.order() == 24);
    CHECK(check_poincare(bt, Subspace::whole(4)) == PoincareCheck::wrong_order);

    MatrixGroup big = fam("direct_sum(binary_icosahedral(), trivial(1))");
    CHECK(check_poincare(big, Subspace::coordinate(5, {0, 1, 2, 3})) == PoincareCheck::ok);
    CHECK(check_poincare(big, Subspace::whole(5)) == PoincareCheck::wrong_dimension);
    MatrixGroup flipped = fam("direct_sum(binary_icosahedral(), negative_identity(1))");
    CHECK(check_poincare(flipped, Subspace::coordinate(5, {0, 1, 2, 3})) == PoincareCheck::wrong_order);
}

TEST_CASE("decompose examples") {
    Decomposition triv = decompose(fam("trivial(3)"));
    CHECK(triv.succeeded());
    CHECK(triv.rr_part.order() == 1);
    CHECK(triv.poincare_count() == 0);

    Decomposition neg = decompose(fam("negative_identity(3)"));
    REQUIRE_FALSE(neg.succeeded());
    CHECK(neg.refusal->step == "minimal_support");
    CHECK(neg.refusal->witness_codim == 3);
    CHECK(*neg.refusal->witness == -Matrix::identity(3));

    Decomposition b2ico = decompose(fam("direct_sum(signed_permutation_reflections(2), binary_icosahedral())"));
    REQUIRE(b2ico.succeeded());
    CHECK(b2ico.rr_part.order() == 8);
    CHECK(b2ico.rr_support == Subspace::coordinate(6, {0, 1}));
    CHECK(b2ico.has_reflection);
    REQUIRE(b2ico.poincare_count() == 1);
    CHECK(b2ico.poincare_factors[0].support == Subspace::coordinate(6, {2, 3, 4, 5}));

    Decomposition two = decompose(fam("direct_sum(binary_icosahedral(), binary_icosahedral())", 20000));
    REQUIRE(two.succeeded());
    CHECK(two.rr_part.order() == 1);
    REQUIRE(two.poincare_count() == 2);
    CHECK(two.poincare_factors[0].support.is_orthogonal_to(two.poincare_factors[1].support));
    CHECK(two.poincare_factors[0].support + two.poincare_factors[1].support == Subspace::whole(8));
}

TEST_CASE("verdict examples") {
    VerdictReport refl = verdicts(closure({Matrix::diagonal({Scalar(-1), Scalar(1)})}));
    for (const auto* v : {&refl.homology, &refl.topological, &refl.pl, &refl.lipschitz}) {
        CHECK(v->yes);
        CHECK(v->boundary_nonempty);
    }
    CHECK(refl.model == ModelSpace::half_space);

    VerdictReport ico = verdicts(fam("binary_icosahedral()"));
    CHECK(ico.homology.yes);
    CHECK_FALSE(ico.homology.boundary_nonempty);
    CHECK_FALSE(ico.topological.yes);
    CHECK_FALSE(ico.pl.yes);
    CHECK(ico.model == ModelSpace::none);

    VerdictReport ico5 = verdicts(fam("direct_sum(binary_icosahedral(), trivial(1))"));
    CHECK(ico5.homology.yes);
    CHECK(ico5.topological.yes);
    CHECK_FALSE(ico5.pl.yes);
    CHECK(ico5.model == ModelSpace::full_space);

    VerdictReport ico5r = verdicts(fam("direct_sum(binary_icosahedral(), reflection(1))"));
    CHECK(ico5r.homology.yes);
    CHECK(ico5r.homology.boundary_nonempty);
    CHECK_FALSE(ico5r.topological.yes);
    CHECK_FALSE(ico5r.pl.yes);

    VerdictReport ico6r = verdicts(fam("direct_sum(binary_icosahedral(), reflection(2))"));
    CHECK(ico6r.topological.yes);
    CHECK(ico6r.topological.boundary_nonempty);
    CHECK(ico6r.model == ModelSpace::half_space);

    VerdictReport neg2 = verdicts(fam("negative_identity(2)"));
    CHECK(neg2.pl.yes);
    CHECK(neg2.topological.yes);
    CHECK_FALSE(neg2.pl.boundary_nonempty);
    CHECK(neg2.model == ModelSpace::full_space);

    for (int n : {3, 4, 5}) {
        VerdictReport neg = verdicts(fam("negative_identity(" + std::to_string(n) + ")"));
        CHECK_FALSE(neg.homology.yes);
        CHECK_FALSE(neg.topological.yes);
        CHECK_FALSE(neg.pl.yes);
        CHECK(neg.model == ModelSpace::none);
        REQUIRE(neg.refusal);
        CHECK(neg.refusal->witness_codim == static_cast<std::size_t>(n));
    }

    VerdictReport triv = verdicts(fam("trivial(4)"));
    CHECK(triv.pl.yes);
    CHECK_FALSE(triv.pl.boundary_nonempty);
}

TEST_CASE("reflection and rotation families are pl manifolds") {
    for (int m = 2; m <= 8; ++m) {
        VerdictReport r = verdicts(fam("dihedral(" + std::to_string(m) + ")"));
        CHECK(r.pl.yes);
        CHECK(r.pl.boundary_nonempty);
        VerdictReport c = verdicts(fam("cyclic_rotation(" + std::to_string(m) + ")"));
        CHECK(c.pl.yes);
        CHECK_FALSE(c.pl.boundary_nonempty);
    }
    for (const char* f : {"signed_permutation_reflections(3)", "permutation_reflections(4)", "reflection(3)"}) {
        VerdictReport r = verdicts(fam(f));
        CHECK(r.pl.yes);
        CHECK(r.pl.boundary_nonempty);
    }
}

TEST_CASE("conjugation invariance and implication chain") {
    std::mt19937 rng(7);
    for (const char* f :
         {"dihedral(5)", "cyclic_rotation(3)", "negative_identity(3)", "binary_icosahedral()",
          "direct_sum(binary_icosahedral(), reflection(1))", "rotation_subgroup(signed_permutation_reflections(3))",
          "direct_sum(cyclic_rotation(4), negative_identity(2))"}) {
        CAPTURE(f);
        MatrixGroup g = fam(f);
        VerdictReport base = verdicts(g);
        check_chain(base);
        for (int t = 0; t < 3; ++t) {
            Matrix q = random_signed_permutation(rng, g.dim());
            VerdictReport other = verdicts(conjugate(g, q));
            CHECK(same_verdicts(base, other));
        }
    }
}

TEST_CASE("product consistency") {
    const std::vector<std::string> parts = {"dihedral(3)", "reflection(1)", "cyclic_rotation(4)",
                                            "binary_icosahedral()", "trivial(1)", "negative_identity(2)"};
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a; b < parts.size(); ++b) {
            if (parts[a] == "binary_icosahedral()" && parts[b] == parts[a]) continue;  // covered above
            CAPTURE(parts[a]);
            CAPTURE(parts[b]);
            Decomposition d1 = decompose(fam(parts[a]));
            Decomposition d2 = decompose(fam(parts[b]));
            REQUIRE(d1.succeeded());
            REQUIRE(d2.succeeded());
            Decomposition sum = decompose(fam("direct_sum(" + parts[a] + ", " + parts[b] + ")"));
            REQUIRE(sum.succeeded());
            CHECK(sum.poincare_count() == d1.poincare_count() + d2.poincare_count());
            CHECK(sum.has_reflection == (d1.has_reflection || d2.has_reflection));
            check_chain(verdicts(sum));
        }
    }
}
