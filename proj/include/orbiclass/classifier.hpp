#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbiclass/group.hpp"

namespace orbiclass {

enum class PoincareCheck {
    ok,
    wrong_dimension,
    wrong_order,
    not_orientation_preserving,
    not_free,
    not_trivial_on_complement,
    not_perfect,
};

std::string to_string(PoincareCheck check);

/**
 * Recognizes a binary icosahedral group acting freely in SO(4) on s: s is
 * 4-dimensional, |k| = 120, every element has determinant 1 on the ambient
 * space and on s, the action on s minus the origin is free, the action on
 * the complement of s is trivial, and k is perfect. The unique perfect group
 * of order 120 is the binary icosahedral group, so no isomorphism test is
 * needed. Requires s to be k-invariant.
 */
PoincareCheck check_poincare(const MatrixGroup& k, const Subspace& s);
bool recognize_poincare(const MatrixGroup& k, const Subspace& s);

/// Why a decomposition failed, with the element that exposed it.
struct Refusal {
    std::string step;
    std::string reason;
    std::optional<Matrix> witness;
    std::size_t witness_codim = 0;
};

struct PoincareFactor {
    MatrixGroup group;
    Subspace support;
};

/// G = G_rr x P_1 x ... x P_k on pairwise orthogonal supports, or a refusal.
struct Decomposition {
    std::size_t dimension = 0;
    std::size_t group_order = 0;
    bool has_reflection = false;
    MatrixGroup rr_part;
    Subspace rr_support;
    std::vector<PoincareFactor> poincare_factors;
    std::optional<Refusal> refusal;

    bool succeeded() const { return !refusal.has_value(); }
    std::size_t poincare_count() const { return poincare_factors.size(); }
};

Decomposition decompose(const MatrixGroup& g);

enum class ModelSpace { full_space, half_space, none };
std::string to_string(ModelSpace model);
ModelSpace model_space_from_string(const std::string& text);

struct CategoryVerdict {
    bool yes = false;
    bool boundary_nonempty = false;
    friend bool operator==(const CategoryVerdict&, const CategoryVerdict&) = default;
};

/// Conjugation-invariant digest of a decomposition.
struct DecompositionSummary {
    bool succeeded = false;
    std::size_t rr_order = 0;
    std::size_t rr_support_dim = 0;
    bool has_reflection = false;
    std::vector<std::size_t> factor_orders;
    std::vector<std::size_t> factor_support_dims;
    friend bool operator==(const DecompositionSummary&, const DecompositionSummary&) = default;
};

/// Manifold-with-boundary answers for R^n / G in each category.
struct VerdictReport {
    std::size_t dimension = 0;
    std::size_t group_order = 0;
    CategoryVerdict homology;
    CategoryVerdict topological;
    CategoryVerdict pl;
    CategoryVerdict lipschitz;
    ModelSpace model = ModelSpace::none;
    DecompositionSummary decomposition;
    std::optional<Refusal> refusal;
};

VerdictReport verdicts(const Decomposition& d);
VerdictReport verdicts(const MatrixGroup& g);

}  // namespace orbiclass
