#include "orbiclass/classifier.hpp"

#include <algorithm>

#include "orbiclass/errors.hpp"

namespace orbiclass {

namespace {

Vector operator-(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool fixes_pointwise(const Matrix& g, const Subspace& s) {
    for (const auto& v : s.basis())
        if (!is_zero_vector(g * v - v)) return false;
    return true;
}

Refusal refuse(std::string step, std::string reason, const MatrixGroup& g, std::optional<std::size_t> witness) {
    Refusal r{std::move(step), std::move(reason), std::nullopt, 0};
    if (witness) {
        r.witness = g.element(*witness);
        r.witness_codim = g.fixed_codim(*witness);
    }
    return r;
}

Refusal refuse(std::string step, std::string reason, const Matrix& witness) {
    return Refusal{std::move(step), std::move(reason), witness, classify_element(witness).fixed_codim};
}

MatrixGroup pointwise_stabilizer(const MatrixGroup& g, const Subspace& s) {
    std::vector<Matrix> kept;
    for (const auto& e : g.elements())
        if (fixes_pointwise(e, s)) kept.push_back(e);
    return MatrixGroup::from_closed_subset(g.dim(), g.conductor(), std::move(kept));
}

}  // namespace

std::string to_string(PoincareCheck check) {
    switch (check) {
        case PoincareCheck::ok: return "ok";
        case PoincareCheck::wrong_dimension: return "support_not_4_dimensional";
        case PoincareCheck::wrong_order: return "order_not_120";
        case PoincareCheck::not_orientation_preserving: return "determinant_not_1";
        case PoincareCheck::not_free: return "not_fixed_point_free";
        case PoincareCheck::not_trivial_on_complement: return "nontrivial_on_complement";
        case PoincareCheck::not_perfect: return "not_perfect";
    }
    return "unknown";
}

PoincareCheck check_poincare(const MatrixGroup& k, const Subspace& s) {
    if (s.dim() != 4) return PoincareCheck::wrong_dimension;
    if (k.order() != 120) return PoincareCheck::wrong_order;
    const Scalar one(1);
    for (const auto& e : k.elements()) {
        if (e.determinant() != one || restrict(e, s).determinant() != one)
            return PoincareCheck::not_orientation_preserving;
    }
    if (!is_fixed_point_free(k, s)) return PoincareCheck::not_free;
    const Subspace perp = orthogonal_complement(s);
    for (const auto& gen : k.generators())
        if (!fixes_pointwise(gen, perp)) return PoincareCheck::not_trivial_on_complement;
    if (derived_subgroup(k).order() != k.order()) return PoincareCheck::not_perfect;
    return PoincareCheck::ok;
}

bool recognize_poincare(const MatrixGroup& k, const Subspace& s) { return check_poincare(k, s) == PoincareCheck::ok; }

Decomposition decompose(const MatrixGroup& g) {
    const std::size_t n = g.dim();
    Decomposition d;
    d.dimension = n;
    d.group_order = g.order();
    d.has_reflection = g.has_reflection();
    d.rr_part = MatrixGroup(n, g.conductor());
    d.rr_support = Subspace(n);

    // (1) reflection-rotation subgroup and the span of its supports
    std::vector<std::size_t> rr = g.indices_with_tag(ElementTag::reflection);
    for (auto i : g.indices_with_tag(ElementTag::rotation)) rr.push_back(i);
    std::sort(rr.begin(), rr.end());
    MatrixGroup h = generated_subgroup(g, rr);
    std::vector<Matrix> rr_elements;
    for (auto i : rr) rr_elements.push_back(g.element(i));
    Subspace u = support_span(rr_elements, n);
    // U is G-invariant because the reflection-rotation elements form a
    // union of conjugacy classes; this is checked rather than assumed.
    if (std::any_of(g.generators().begin(), g.generators().end(),
                    [&](const Matrix& x) { return invariance_witness(x, u).has_value(); }))
        throw InvariantViolation("support of the reflection-rotation elements is not invariant");
    d.rr_part = h;
    d.rr_support = u;

    // (2) kernel of the action on U
    MatrixGroup k = restriction_kernel(g, u);

    // (3) internal direct product G = H x K
    for (std::size_t i = 1; i < k.order(); ++i) {
        if (h.contains(k.element(i))) {
            d.refusal = refuse("direct_product", "rr_part_meets_kernel", k, i);
            return d;
        }
    }
    if (h.order() * k.order() != g.order()) {
        d.refusal = refuse("direct_product", "order_mismatch", g, std::nullopt);
        return d;
    }
    const Subspace u_perp = orthogonal_complement(u);
    for (const auto& x : h.generators()) {
        if (!fixes_pointwise(x, u_perp)) {
            d.refusal = refuse("direct_product", "rr_part_moves_complement", x);
            return d;
        }
    }
    if (k.order() == 1) return d;

    // (4) minimal supports of the kernel
    std::size_t min_codim = n + 1;
    for (std::size_t i = 1; i < k.order(); ++i) min_codim = std::min(min_codim, k.fixed_codim(i));
    std::vector<std::size_t> minimal;
    for (std::size_t i = 1; i < k.order(); ++i)
        if (k.fixed_codim(i) == min_codim) minimal.push_back(i);
    if (min_codim != 4) {
        d.refusal = refuse("minimal_support", "minimal_support_not_4_dimensional", k, minimal.front());
        return d;
    }
    std::vector<Subspace> supports;
    std::vector<std::size_t> support_witness;
    for (auto i : minimal) {
        Subspace s = support_span({k.element(i)}, n);
        if (std::none_of(supports.begin(), supports.end(), [&](const Subspace& t) { return t == s; })) {
            supports.push_back(std::move(s));
            support_witness.push_back(i);
        }
    }
    for (std::size_t a = 0; a < supports.size(); ++a)
        for (std::size_t b = a + 1; b < supports.size(); ++b)
            if (!supports[a].is_orthogonal_to(supports[b])) {
                d.refusal = refuse("minimal_support", "minimal_supports_not_orthogonal", k, support_witness[b]);
                return d;
            }
    Subspace minimal_span(n);
    for (const auto& s : supports) minimal_span = minimal_span + s;
    Subspace kernel_support = support_span(k.generators(), n);
    if (!(minimal_span == kernel_support)) {
        d.refusal = refuse("minimal_support", "minimal_supports_do_not_span_kernel_support", k, std::nullopt);
        return d;
    }
    if (!(u + kernel_support == support_span(g.generators(), n))) {
        d.refusal = refuse("minimal_support", "supports_do_not_span_moved_part", g, std::nullopt);
        return d;
    }

    // (5) one Poincare factor per minimal support
    std::size_t product = 1;
    std::vector<Matrix> factor_generators;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        const Subspace& s = supports[i];
        MatrixGroup ki = pointwise_stabilizer(k, orthogonal_complement(s));
        PoincareCheck check = check_poincare(ki, s);
        if (check != PoincareCheck::ok) {
            d.refusal = refuse("poincare_factor", to_string(check), k, support_witness[i]);
            return d;
        }
        product *= ki.order();
        for (const auto& x : ki.generators()) factor_generators.push_back(x);
        d.poincare_factors.push_back({std::move(ki), s});
    }
    if (product != k.order() || closure(factor_generators, k.order()).order() != k.order()) {
        d.poincare_factors.clear();
        d.refusal = refuse("poincare_factor", "factors_do_not_generate_kernel", k, std::nullopt);
        return d;
    }
    return d;
}

std::string to_string(ModelSpace model) {
    switch (model) {
        case ModelSpace::full_space: return "full_space";
        case ModelSpace::half_space: return "half_space";
        case ModelSpace::none: return "none";
    }
    return "none";
}

ModelSpace model_space_from_string(const std::string& text) {
    if (text == "full_space") return ModelSpace::full_space;
    if (text == "half_space") return ModelSpace::half_space;
    if (text == "none") return ModelSpace::none;
    throw ParseError("unknown model space '" + text + "'");
}

VerdictReport verdicts(const Decomposition& d) {
    VerdictReport r;
    r.dimension = d.dimension;
    r.group_order = d.group_order;
    r.refusal = d.refusal;
    DecompositionSummary& s = r.decomposition;
    s.succeeded = d.succeeded();
    s.has_reflection = d.has_reflection;
    if (s.succeeded) {
        s.rr_order = d.rr_part.order();
        s.rr_support_dim = d.rr_support.dim();
        for (const auto& f : d.poincare_factors) {
            s.factor_orders.push_back(f.group.order());
            s.factor_support_dims.push_back(f.support.dim());
        }
    }

    const std::size_t k = d.poincare_count();
    const std::size_t n = d.dimension;
    const bool ok = d.succeeded();
    const bool topological =
        ok && (k != 1 || (n > 4 && !d.has_reflection) || (n > 5 && d.has_reflection));
    auto verdict = [&](bool yes) { return CategoryVerdict{yes, yes && d.has_reflection}; };
    r.homology = verdict(ok);
    r.topological = verdict(topological);
    r.pl = verdict(ok && k == 0);
    r.lipschitz = r.pl;
    // the model space is a statement about the topological quotient
    if (topological) r.model = d.has_reflection ? ModelSpace::half_space : ModelSpace::full_space;
    return r;
}

VerdictReport verdicts(const MatrixGroup& g) { return verdicts(decompose(g)); }

}  // namespace orbiclass
