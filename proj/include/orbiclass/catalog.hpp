#pragma once

#include <string>
#include <vector>

#include "orbiclass/linalg.hpp"

namespace orbiclass {

/// A named group family with integer parameters, or a direct sum of factors.
struct FamilySpec {
    std::string name;
    std::vector<int> params;
    std::vector<FamilySpec> factors;

    /// Parses e.g. "dihedral(4)" or
    /// "direct_sum(signed_permutation_reflections(2), binary_icosahedral())".
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

/// Names accepted by make_family.
const std::vector<std::string>& family_names();

/**
 * Generator matrices of a family, all of the same size and conductor.
 *
 *   cyclic_rotation and dihedral live in O(2) at the smallest conductor
 *   containing cos and sin of 2 pi / m; direct_sum block-embeds its factors
 *   and promotes to the lcm conductor.
 */
std::vector<Matrix> make_family(const FamilySpec& spec);
std::vector<Matrix> make_family(const std::string& text);

/// Rotation of the plane by 2 pi k / m.
Matrix plane_rotation(int m, int k = 1);

/// Quaternion w + x i + y j + z k over the cyclotomic field.
struct Quaternion {
    Scalar w, x, y, z;

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
    Vector to_vector() const { return {w, x, y, z}; }
};

/// The golden ratio (1 + sqrt 5) / 2 in Q(zeta_5).
Scalar golden_ratio();

/// The 120 unit icosians in a fixed deterministic order.
std::vector<Quaternion> unit_icosians();

/// 4x4 matrix of x -> q x in the basis 1, i, j, k.
Matrix left_multiplication(const Quaternion& q);

/// Generators of the binary icosahedral group acting by left multiplication.
std::vector<Quaternion> binary_icosahedral_generators();

}  // namespace orbiclass
