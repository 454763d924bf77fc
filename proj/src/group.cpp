#include "orbiclass/group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>

#include "orbiclass/errors.hpp"
#include "orbiclass/parallel.hpp"

namespace orbiclass {

namespace {

constexpr std::size_t kBatch = 2048;

Matrix inverse_orthogonal(const Matrix& g) { return g.transpose(); }

}  // namespace

std::string to_string(ElementTag tag) {
    switch (tag) {
        case ElementTag::identity: return "identity";
        case ElementTag::reflection: return "reflection";
        case ElementTag::rotation: return "rotation";
        case ElementTag::other: return "other";
    }
    return "other";
}

ElementClass ElementClass::from_codim(std::size_t codim) {
    ElementTag tag = codim == 0   ? ElementTag::identity
                     : codim == 1 ? ElementTag::reflection
                     : codim == 2 ? ElementTag::rotation
                                  : ElementTag::other;
    return {tag, codim};
}

ElementClass classify_element(const Matrix& g) {
    if (!g.is_square()) throw DimensionMismatch("classify_element: matrix must be square");
    return ElementClass::from_codim((g - Matrix::identity(g.rows(), g.conductor())).rank());
}

Subspace support_span(const std::vector<Matrix>& elements, std::size_t ambient) {
    std::vector<Vector> columns;
    for (const auto& g : elements) {
        if (g.rows() != ambient || !g.is_square()) throw DimensionMismatch("support_span: element size mismatch");
        // For orthogonal g the image of g - I is exactly (Fix g)^perp.
        Echelon ech = row_reduce((g - Matrix::identity(ambient, g.conductor())).transpose());
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) columns.push_back(ech.reduced.row(r));
    }
    return Subspace::span(ambient, columns);
}

struct MatrixGroup::CodimCache {
    std::once_flag once;
    std::vector<std::size_t> codims;
};

MatrixGroup::MatrixGroup(std::size_t dim, int conductor)
    : dim_(dim), conductor_(conductor), codims_(std::make_shared<CodimCache>()) {
    insert(Matrix::identity(dim, conductor));
}

void MatrixGroup::insert(Matrix g) {
    index_.emplace(g, elements_.size());
    elements_.push_back(std::move(g));
}

std::optional<std::size_t> MatrixGroup::index_of(const Matrix& g) const {
    if (g.rows() != dim_ || g.cols() != dim_) return std::nullopt;
    if (g.conductor() != conductor_) {
        if (g.conductor() != 0 && conductor_ % g.conductor() == 0) return index_of(g.promote(conductor_));
        return std::nullopt;
    }
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void MatrixGroup::close(std::size_t from, std::size_t new_gens, std::size_t cap) {
    auto process = [&](std::size_t begin, std::size_t end, std::size_t gen_begin) {
        const std::size_t ng = generators_.size() - gen_begin;
        if (ng == 0 || begin >= end) return;
        std::vector<Matrix> products((end - begin) * ng);
        parallel_for(end - begin, [&](std::size_t i) {
            for (std::size_t k = 0; k < ng; ++k)
                products[i * ng + k] = elements_[begin + i] * generators_[gen_begin + k];
        });
        for (auto& p : products) {
            if (index_.count(p)) continue;
            if (elements_.size() >= cap) throw CapExceeded(cap);
            insert(std::move(p));
        }
    };
    for (std::size_t pos = 0; pos < from; pos += kBatch) process(pos, std::min(from, pos + kBatch), new_gens);
    for (std::size_t pos = from; pos < elements_.size();) {
        const std::size_t end = std::min(elements_.size(), pos + kBatch);
        process(pos, end, 0);
        pos = end;
    }
}

void MatrixGroup::adjoin(const Matrix& g, std::size_t cap) {
    if (g.rows() != dim_ || g.cols() != dim_) throw DimensionMismatch("adjoin: generator size mismatch");
    if (contains(g)) return;
    const std::size_t old_gens = generators_.size();
    const std::size_t old_size = elements_.size();
    generators_.push_back(g.promote(std::lcm(g.conductor(), conductor_)));
    if (generators_.back().conductor() != conductor_)
        throw Error("adjoin: generator conductor does not divide the group conductor");
    codims_ = std::make_shared<CodimCache>();
    close(old_size, old_gens, cap);
}

MatrixGroup closure(const std::vector<Matrix>& generators, std::size_t cap) {
    if (cap < 1) throw Error("closure cap must be positive");
    if (generators.empty()) throw Error("closure needs at least one generator");
    const std::size_t n = generators.front().rows();
    int m = 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const Matrix& g = generators[i];
        if (g.rows() != n || g.cols() != n) throw DimensionMismatch("closure: generators differ in size");
        if (!g.is_orthogonal()) throw NonOrthogonalGenerator(i);
        m = std::lcm(m, g.conductor());
    }
    MatrixGroup group(n, m);
    for (const auto& g : generators) group.generators_.push_back(g.promote(m));
    group.close(0, 0, cap);
    return group;
}

std::size_t MatrixGroup::fixed_codim(std::size_t i) const {
    std::call_once(codims_->once, [this] {
        std::vector<std::size_t> codims(elements_.size());
        const Matrix id = Matrix::identity(dim_, conductor_);
        parallel_for(elements_.size(), [&](std::size_t k) { codims[k] = (elements_[k] - id).rank(); });
        codims_->codims = std::move(codims);
    });
    return codims_->codims.at(i);
}

ElementClass MatrixGroup::element_class(std::size_t i) const { return ElementClass::from_codim(fixed_codim(i)); }

std::vector<std::size_t> MatrixGroup::indices_with_tag(ElementTag tag) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (element_class(i).tag == tag) out.push_back(i);
    return out;
}

MatrixGroup MatrixGroup::from_closed_subset(std::size_t dim, int conductor, std::vector<Matrix> elements) {
    MatrixGroup group(dim, conductor);
    for (const auto& e : elements) {
        if (group.contains(e)) continue;
        group.adjoin(e, elements.size());
    }
    if (group.order() != elements.size())
        throw InvariantViolation("from_closed_subset: element list is not a subgroup");
    return group;
}

std::vector<Matrix> MatrixGroup::canonical_elements() const {
    std::vector<Matrix> sorted = elements_;
    std::sort(sorted.begin(), sorted.end(), [](const Matrix& a, const Matrix& b) { return canonical_order(a, b) < 0; });
    return sorted;
}

MatrixGroup generated_subgroup(const MatrixGroup& g, const std::vector<std::size_t>& subset) {
    MatrixGroup h(g.dim(), g.conductor());
    for (std::size_t i : subset) h.adjoin(g.element(i), g.order());
    return h;
}

MatrixGroup derived_subgroup(const MatrixGroup& g) {
    const auto& gens = g.generators();
    MatrixGroup d(g.dim(), g.conductor());
    for (const auto& x : gens)
        for (const auto& y : gens) d.adjoin(inverse_orthogonal(x) * inverse_orthogonal(y) * x * y, g.order());
    // Normal closure: the subgroup generated by commutators of generators and
    // all their conjugates is the full commutator subgroup.
    for (bool changed = true; changed;) {
        changed = false;
        const std::vector<Matrix> dgens = d.generators();
        for (const auto& c : dgens)
            for (const auto& x : gens) {
                Matrix conj = inverse_orthogonal(x) * c * x;
                if (!d.contains(conj)) {
                    d.adjoin(conj, g.order());
                    changed = true;
                }
            }
    }
    return d;
}

void require_invariant(const MatrixGroup& g, const Subspace& s) {
    for (const auto& gen : g.generators())
        if (auto w = invariance_witness(gen, s))
            throw NotInvariant("subspace is not invariant under the group (basis vector " + std::to_string(*w) + ")",
                               *w);
}

namespace {

MatrixGroup filter_subgroup(const MatrixGroup& g, const std::vector<char>& keep) {
    std::vector<Matrix> kept;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (keep[i]) kept.push_back(g.element(i));
    if (kept.size() == g.order()) return g;
    return MatrixGroup::from_closed_subset(g.dim(), g.conductor(), std::move(kept));
}

}  // namespace

MatrixGroup restriction_kernel(const MatrixGroup& g, const Subspace& s) {
    if (s.ambient_dim() != g.dim()) throw DimensionMismatch("restriction_kernel: ambient mismatch");
    require_invariant(g, s);
    if (s.dim() == 0) return g;
    std::vector<char> keep(g.order());
    parallel_for(g.order(), [&](std::size_t i) {
        const Matrix& e = g.element(i);
        bool fixes = true;
        for (const auto& v : s.basis())
            if (e * v != v) {
                fixes = false;
                break;
            }
        keep[i] = fixes;
    });
    return filter_subgroup(g, keep);
}

bool is_fixed_point_free(const MatrixGroup& g, const Subspace& s) {
    if (s.ambient_dim() != g.dim()) throw DimensionMismatch("is_fixed_point_free: ambient mismatch");
    require_invariant(g, s);
    if (s.dim() == 0) return true;
    const Matrix b = s.basis_matrix();
    const Matrix id = Matrix::identity(g.dim(), g.conductor());
    std::vector<char> ok(g.order(), 1);
    parallel_for(g.order(), [&](std::size_t i) {
        if (i == 0) return;
        // (g - I) is injective on s iff Fix(g) meets s trivially.
        ok[i] = ((g.element(i) - id) * b).rank() == s.dim();
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

MatrixGroup orientation_subgroup(const MatrixGroup& g) {
    std::vector<char> keep(g.order());
    parallel_for(g.order(), [&](std::size_t i) { keep[i] = g.element(i).determinant().is_one(); });
    return filter_subgroup(g, keep);
}

}  // namespace orbiclass
