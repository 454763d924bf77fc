#include "doctest.h"
#include "orbiclass/catalog.hpp"
#include "orbiclass/errors.hpp"
#include "orbiclass/group.hpp"

using namespace orbiclass;

TEST_CASE("family spec parsing") {
    FamilySpec s = FamilySpec::parse(" direct_sum( dihedral(4), binary_icosahedral() ) ");
    CHECK(s.name == "direct_sum");
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].params == std::vector<int>{4});
    CHECK(s.to_string() == "direct_sum(dihedral(4), binary_icosahedral())");
    CHECK_THROWS_AS(FamilySpec::parse("dihedral(4"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("dihedral(4) x"), ParseError);
    CHECK_THROWS_AS(make_family("nonsense(2)"), ParseError);
    CHECK_THROWS_AS(make_family("dihedral(0)"), ParseError);
    CHECK_THROWS_AS(make_family("dihedral()"), ParseError);
    CHECK_THROWS_AS(make_family("binary_icosahedral(3)"), ParseError);
}

TEST_CASE("family orders") {
    CHECK(closure(make_family("cyclic_rotation(7)")).order() == 7);
    CHECK(closure(make_family("dihedral(5)")).order() == 10);
    CHECK(closure(make_family("signed_permutation_reflections(4)")).order() == 384);
    CHECK(closure(make_family("permutation_reflections(4)")).order() == 24);
    CHECK(closure(make_family("negative_identity(3)")).order() == 2);
    CHECK(closure(make_family("trivial(3)")).order() == 1);
    CHECK(closure(make_family("reflection(2)")).order() == 2);
}

TEST_CASE("minimal conductors") {
    CHECK(make_family("cyclic_rotation(4)").front().conductor() == 1);
    CHECK(make_family("cyclic_rotation(3)").front().conductor() == 12);
    CHECK(make_family("cyclic_rotation(5)").front().conductor() == 20);
    CHECK(make_family("binary_icosahedral()").front().conductor() == 5);
    CHECK(make_family("direct_sum(cyclic_rotation(3), binary_icosahedral())").front().conductor() == 60);
}

TEST_CASE("rotation_subgroup of dihedral is cyclic") {
    for (int m = 2; m <= 8; ++m) {
        CAPTURE(m);
        const std::string ms = std::to_string(m);
        MatrixGroup rot = closure(make_family("rotation_subgroup(dihedral(" + ms + "))"));
        MatrixGroup cyc = closure(make_family("cyclic_rotation(" + ms + ")"));
        CHECK(rot.canonical_elements() == cyc.canonical_elements());
    }
}

TEST_CASE("direct sum order is the product of orders") {
    const std::vector<std::string> parts = {"dihedral(3)", "cyclic_rotation(5)", "reflection(1)",
                                            "signed_permutation_reflections(2)", "binary_icosahedral()"};
    for (const auto& a : parts)
        for (const auto& b : parts) {
            if (a == b && a == "binary_icosahedral()") continue;
            CAPTURE(a);
            CAPTURE(b);
            auto ga = closure(make_family(a)), gb = closure(make_family(b));
            auto sum = make_family("direct_sum(" + a + ", " + b + ")");
            CHECK(sum.front().rows() == ga.dim() + gb.dim());
            CHECK(closure(sum).order() == ga.order() * gb.order());
        }
}

TEST_CASE("unit icosians") {
    auto units = unit_icosians();
    CHECK(units.size() == 120);
    for (const auto& q : units) CHECK(dot(q.to_vector(), q.to_vector()) == Scalar(1));
    // closed under multiplication
    for (std::size_t i = 0; i < units.size(); i += 11)
        for (std::size_t j = 0; j < units.size(); j += 7) {
            Quaternion p = units[i] * units[j];
            CHECK(std::find(units.begin(), units.end(), p) != units.end());
        }
    MatrixGroup g = closure(make_family("binary_icosahedral()"));
    for (const auto& q : units) CHECK(g.contains(left_multiplication(q)));
}
