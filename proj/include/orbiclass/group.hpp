#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbiclass/linalg.hpp"

namespace orbiclass {

inline constexpr std::size_t kDefaultClosureCap = 100000;

enum class ElementTag { identity, reflection, rotation, other };

std::string to_string(ElementTag tag);

/// Orthogonal element classified by the codimension of its fixed space.
struct ElementClass {
    ElementTag tag = ElementTag::identity;
    std::size_t fixed_codim = 0;

    static ElementClass from_codim(std::size_t codim);
    friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

/// fixed_codim = rank(g - I).
ElementClass classify_element(const Matrix& g);

/// Span of the supports (Fix g)^perp of the given orthogonal elements, i.e.
/// of the column spaces of g - I. The zero subspace for empty input.
Subspace support_span(const std::vector<Matrix>& elements, std::size_t ambient);

/**
 * A finite group of orthogonal matrices, materialized element by element.
 *
 * Element 0 is always the identity. Elements are stored in breadth-first
 * discovery order, which depends only on the generator list.
 */
class MatrixGroup {
public:
    /// Trivial group in the given dimension.
    explicit MatrixGroup(std::size_t dim = 0, int conductor = 1);

    std::size_t dim() const { return dim_; }
    int conductor() const { return conductor_; }
    std::size_t order() const { return elements_.size(); }

    const std::vector<Matrix>& elements() const { return elements_; }
    const Matrix& element(std::size_t i) const { return elements_.at(i); }
    std::optional<std::size_t> index_of(const Matrix& g) const;
    bool contains(const Matrix& g) const { return index_of(g).has_value(); }

    /// Generators as matrices; a greedily chosen generating set when the
    /// group was built from a filtered element list.
    const std::vector<Matrix>& generators() const { return generators_; }

    /// rank(g_i - I), computed for all elements on first use.
    std::size_t fixed_codim(std::size_t i) const;
    ElementClass element_class(std::size_t i) const;

    /// Indices of the elements with the given tag, in element order.
    std::vector<std::size_t> indices_with_tag(ElementTag tag) const;
    bool has_reflection() const { return !indices_with_tag(ElementTag::reflection).empty(); }

    /// Builds the group structure over an element set already known to be a
    /// subgroup (closed under products). A generating set is chosen greedily
    /// in element order.
    static MatrixGroup from_closed_subset(std::size_t dim, int conductor, std::vector<Matrix> elements);

    /// Adds a generator and closes again; a no-op for members.
    void adjoin(const Matrix& g, std::size_t cap = kDefaultClosureCap);

    /// Elements sorted lexicographically by canonical form.
    std::vector<Matrix> canonical_elements() const;

    friend MatrixGroup closure(const std::vector<Matrix>& generators, std::size_t cap);

private:
    void insert(Matrix g);
    /// Closes under right multiplication by generators_, starting with the
    /// queue position `from` and additionally multiplying every element
    /// before `from` by the generators listed from `new_gens`.
    void close(std::size_t from, std::size_t new_gens, std::size_t cap);

    struct CodimCache;

    std::size_t dim_ = 0;
    int conductor_ = 1;
    std::vector<Matrix> elements_;
    std::vector<Matrix> generators_;
    std::unordered_map<Matrix, std::size_t> index_;
    std::shared_ptr<CodimCache> codims_;
};

/**
 * Breadth-first closure of real orthogonal generators of equal size.
 * Throws NonOrthogonalGenerator (with index), DimensionMismatch, or
 * CapExceeded when the group has more than `cap` elements.
 */
MatrixGroup closure(const std::vector<Matrix>& generators, std::size_t cap = kDefaultClosureCap);

MatrixGroup generated_subgroup(const MatrixGroup& g, const std::vector<std::size_t>& subset);
MatrixGroup derived_subgroup(const MatrixGroup& g);

/// {g : g v = v for all v in s}; s must be invariant (NotInvariant otherwise).
MatrixGroup restriction_kernel(const MatrixGroup& g, const Subspace& s);

/// True iff Fix(g) meets s only in 0 for every non-identity g.
bool is_fixed_point_free(const MatrixGroup& g, const Subspace& s);

/// {g : det g = 1}.
MatrixGroup orientation_subgroup(const MatrixGroup& g);

/// Throws NotInvariant unless every generator of g maps s into itself.
void require_invariant(const MatrixGroup& g, const Subspace& s);

}  // namespace orbiclass
