// Acceptance runner: one PASS/FAIL line per criterion. Criteria 1-8 run
// twice with different worker counts; criterion 9 compares the transcripts.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "orbiclass/catalog.hpp"
#include "orbiclass/classifier.hpp"
#include "orbiclass/cli.hpp"
#include "orbiclass/fixtures.hpp"
#include "orbiclass/homology.hpp"
#include "orbiclass/io.hpp"
#include "orbiclass/parallel.hpp"
#include "orbiclass/presentation.hpp"
#include "orbiclass/properties.hpp"

using namespace orbiclass;

namespace {

// Pinned limits, in seconds unless noted.
constexpr double kReflectionRotationLimit = 5;
constexpr double kBinaryClosureLimit = 1;
constexpr double kTwoFactorLimit = 60;
constexpr std::size_t kTwoFactorCap = 20000;
constexpr double kRefusalLimit = 1;
constexpr double kPoincareSphereLimit = 600;
constexpr double kPoincareSphereMemoryGiB = 8;
constexpr double kNegativeControlLimit = 10;
constexpr double kPropertySuiteLimit = 60;
constexpr double kConjugationLimit = 30;
constexpr int kConjugationsPerGroup = 5;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string transcript;
    std::string detail;
    double seconds = 0;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    void record(const std::string& line) { transcript += line + "\n"; }
    void record(const Json& j) { transcript += j.dump() + "\n"; }
};

VerdictReport classify(const std::string& spec, std::size_t cap = kDefaultClosureCap) {
    return verdicts(closure(make_family(spec), cap));
}

bool all_yes(const VerdictReport& r) { return r.homology.yes && r.topological.yes && r.pl.yes && r.lipschitz.yes; }
bool all_no(const VerdictReport& r) { return !r.homology.yes && !r.topological.yes && !r.pl.yes && !r.lipschitz.yes; }

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << x;
    return o.str();
}

Outcome reflection_rotation_forward(std::uint64_t) {
    Outcome o;
    const auto start = Clock::now();
    std::size_t count = 0;
    auto pl_with_boundary = [&](const std::string& spec, bool boundary) {
        const VerdictReport r = classify(spec);
        o.record(report_to_json(r));
        ++count;
        o.require(r.pl.yes && r.lipschitz.yes && r.pl.boundary_nonempty == boundary &&
                      r.lipschitz.boundary_nonempty == boundary,
                  spec);
    };
    for (int m = 2; m <= 8; ++m) pl_with_boundary("dihedral(" + std::to_string(m) + ")", true);
    for (int n = 2; n <= 4; ++n) pl_with_boundary("signed_permutation_reflections(" + std::to_string(n) + ")", true);
    for (int m = 1; m <= 8; ++m) pl_with_boundary("cyclic_rotation(" + std::to_string(m) + ")", false);
    o.seconds = since(start);
    o.require(o.seconds < kReflectionRotationLimit, "time limit");
    o.detail = std::to_string(count) + " groups";
    return o;
}

Outcome poincare_discrimination(std::uint64_t) {
    Outcome o;
    const auto start = Clock::now();
    const auto closure_start = Clock::now();
    const MatrixGroup binary = closure(make_family("binary_icosahedral()"));
    const double closure_seconds = since(closure_start);
    o.require(binary.order() == 120, "2I has order 120");
    o.require(closure_seconds < kBinaryClosureLimit, "2I closure time");

    const VerdictReport in4 = verdicts(binary);
    o.record(report_to_json(in4));
    o.require(in4.homology.yes && !in4.homology.boundary_nonempty && !in4.topological.yes && !in4.pl.yes, "O(4)");

    const VerdictReport in5 = classify("direct_sum(binary_icosahedral(), trivial(1))");
    o.record(report_to_json(in5));
    o.require(in5.homology.yes && in5.topological.yes && !in5.pl.yes, "O(5) trivial block");

    const VerdictReport refl5 = classify("direct_sum(binary_icosahedral(), reflection(1))");
    o.record(report_to_json(refl5));
    o.require(refl5.homology.yes && refl5.homology.boundary_nonempty && !refl5.topological.yes && !refl5.pl.yes,
              "O(5) with reflection");

    const VerdictReport refl6 = classify("direct_sum(binary_icosahedral(), reflection(2))");
    o.record(report_to_json(refl6));
    o.require(refl6.topological.yes && refl6.topological.boundary_nonempty && !refl6.pl.yes, "O(6) with reflection");

    o.seconds = since(start);
    o.detail = "2I closure " + fmt(closure_seconds) + " s";
    return o;
}

Outcome two_poincare_factors(std::uint64_t) {
    Outcome o;
    const auto start = Clock::now();
    const MatrixGroup g = closure(make_family("direct_sum(binary_icosahedral(), binary_icosahedral())"), kTwoFactorCap);
    const VerdictReport r = verdicts(g);
    o.record(report_to_json(r));
    o.require(g.order() == 14400, "order 14400");
    o.require(r.decomposition.factor_orders.size() == 2, "k = 2");
    o.require(r.homology.yes && r.topological.yes && !r.topological.boundary_nonempty && !r.pl.yes, "verdicts");
    o.seconds = since(start);
    o.require(o.seconds < kTwoFactorLimit, "time limit");
    o.detail = "order " + std::to_string(g.order());
    return o;
}

Outcome refusal_soundness(std::uint64_t) {
    Outcome o;
    const auto start = Clock::now();
    for (int n : {3, 5}) {
        const VerdictReport r = classify("negative_identity(" + std::to_string(n) + ")");
        o.record(report_to_json(r));
        o.require(all_no(r) && r.refusal && r.refusal->witness &&
                      r.refusal->witness_codim == static_cast<std::size_t>(n),
                  "-I in dimension " + std::to_string(n));
    }
    const VerdictReport two = classify("negative_identity(2)");
    o.record(report_to_json(two));
    o.require(all_yes(two), "-I in dimension 2");
    const VerdictReport four = classify("negative_identity(4)");
    o.record(report_to_json(four));
    o.require(all_no(four) && four.refusal, "-I in dimension 4");
    o.seconds = since(start);
    o.require(o.seconds < kRefusalLimit, "time limit");
    return o;
}

double peak_rss_gib() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);  // ru_maxrss is in KiB
}

Outcome poincare_sphere(std::uint64_t) {
    Outcome o;
    const auto start = Clock::now();
    const SimplicialComplex cell = six_hundred_cell();
    o.record(Json(cell.f_vector()));
    o.require(cell.f_vector() == std::vector<std::size_t>{120, 720, 1200, 600}, "600-cell f-vector");
    o.require(is_homology_manifold(cell, 3).yes, "600-cell is a homology 3-manifold");

    const Quotient q = quotient(cell, binary_icosahedral_action());
    const HomologyResult h = homology(q.complex);
    o.record(Json(q.complex.f_vector()));
    o.record(homology_to_json(h));
    o.require(h == sphere_homology(3), "quotient homology (Z, 0, 0, Z)");

    const Presentation p = simplify(pi1_presentation(q.complex));
    const CosetResult c = coset_enumeration(p);
    o.record(p.to_string());
    o.record("order " + std::to_string(c.order) + " rows " + std::to_string(c.rows_used));
    o.require(c.closed && c.order == 120, "pi_1 order 120");

    o.seconds = since(start);
    const double mem = peak_rss_gib();
    o.require(o.seconds < kPoincareSphereLimit, "time limit");
    o.require(mem < kPoincareSphereMemoryGiB, "memory limit");
    o.detail = std::to_string(q.subdivided.facets().size()) + " subdivided facets, " +
               std::to_string(q.complex.facets().size()) + " quotient facets, peak " + fmt(mem) + " GiB";
    return o;
}

Outcome negative_control(std::uint64_t) {
    Outcome o;
    const auto start = Clock::now();
    const Quotient q = quotient(cross_polytope_boundary(3), antipodal_action(3));
    const HomologyResult h = homology(q.complex);
    o.record(homology_to_json(h));
    o.require(h.at(1) == HomologyGroup{0, {BigInt(2)}}, "H_1 = Z/2");
    const Construction c = cone(q.complex);
    const auto apex = static_cast<Vertex>(c.complex.vertex_count() - 1);
    const ManifoldCheck m = is_homology_manifold_near(c.complex, apex, 3);
    o.record(m.reason);
    o.require(!m.yes && m.witness && *m.witness == Face{apex}, "apex witness");
    o.require(!is_homology_manifold(c.complex, 3).yes, "closed cone fails too");
    o.seconds = since(start);
    o.require(o.seconds < kNegativeControlLimit, "time limit");
    return o;
}

Outcome property_suite(std::uint64_t seed) {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    auto corpus = property_corpus();
    for (int t = 0; t < 12; ++t) corpus.push_back({"random " + std::to_string(t), random_facet_subset(rng)});
    std::size_t checks = 0;
    auto check = [&](bool ok, const std::string& what) {
        ++checks;
        o.record((ok ? "ok " : "FAIL ") + what);
        o.require(ok, what);
    };

    std::vector<const NamedComplex*> small;
    for (const auto& s : corpus)
        if (s.complex.facets().size() <= 10) small.push_back(&s);
    for (const auto* x : small)
        for (const auto* y : small) check(product_property(x->complex, y->complex), "product " + x->name + " x " + y->name);

    for (const auto& x : {simplex_boundary(0), polygon(3), polygon(4)})
        for (const auto& y : corpus)
            if (y.complex.facets().size() <= 12)
                check(product_boundary_property(x, y.complex),
                      "boundary of " + std::to_string(x.facets().size()) + "-facet sphere x " + y.name);

    for (const auto& x : corpus) check(cone_property(x.complex), "cone over " + x.name);
    const Quotient q = quotient(six_hundred_cell(), binary_icosahedral_action());
    check(cone_property(q.complex), "cone over the Poincare sphere");

    for (const auto& x : corpus)
        if (x.complex.dimension() >= 1) check(cone_boundary_property(x.complex), "bounded cone over " + x.name);

    for (const auto& x : corpus) {
        if (x.complex.facets().size() > 40) continue;
        std::vector<Face> chosen;
        for (int d = 0; d <= x.complex.dimension(); ++d)
            for (const auto& f : x.complex.faces(d))
                if (rng() % 5 == 0) chosen.push_back(f);
        if (chosen.empty()) chosen.push_back(x.complex.faces(0).front());
        check(double_symmetry(x.complex, subcomplex(x.complex, chosen)), "double of " + x.name);
    }

    o.seconds = since(start);
    o.require(corpus.size() >= 20, "corpus size");
    o.require(o.seconds < kPropertySuiteLimit, "time limit");
    o.detail = std::to_string(corpus.size()) + " complexes, " + std::to_string(checks) + " checks";
    return o;
}

const std::vector<std::string>& catalog_groups() {
    static const std::vector<std::string> groups = {
        "trivial(3)",
        "reflection(3)",
        "cyclic_rotation(5)",
        "cyclic_rotation(8)",
        "dihedral(3)",
        "dihedral(5)",
        "dihedral(8)",
        "signed_permutation_reflections(2)",
        "signed_permutation_reflections(3)",
        "signed_permutation_reflections(4)",
        "permutation_reflections(3)",
        "permutation_reflections(4)",
        "rotation_subgroup(dihedral(6))",
        "rotation_subgroup(signed_permutation_reflections(3))",
        "binary_icosahedral()",
        "negative_identity(2)",
        "negative_identity(3)",
        "negative_identity(4)",
        "negative_identity(5)",
        "direct_sum(signed_permutation_reflections(2), binary_icosahedral())",
        "direct_sum(binary_icosahedral(), trivial(1))",
        "direct_sum(binary_icosahedral(), reflection(1))",
        "direct_sum(binary_icosahedral(), reflection(2))",
        "direct_sum(dihedral(3), cyclic_rotation(4))",
    };
    return groups;
}

// Report without the refusal witness, which lives in the conjugated basis.
Json invariant_part(const VerdictReport& r) {
    Json j = report_to_json(r);
    if (!j["refusal"].is_null()) j["refusal"].erase("witness");
    return j;
}

Outcome conjugation_invariance(std::uint64_t seed) {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);
    std::size_t reports = 0;
    for (const auto& spec : catalog_groups()) {
        const std::vector<Matrix> gens = make_family(spec);
        const VerdictReport base = verdicts(closure(gens));
        const Json reference = invariant_part(base);
        o.record(reference);
        for (int t = 0; t < kConjugationsPerGroup; ++t) {
            const VerdictReport r = verdicts(closure(conjugate_by_signed_permutation(gens, rng())));
            ++reports;
            o.require(invariant_part(r) == reference, spec + " conjugate " + std::to_string(t));
            o.require((!r.pl.yes || r.topological.yes) && (!r.topological.yes || r.homology.yes) &&
                          r.pl == r.lipschitz,
                      spec + " implication chain");
        }
    }
    o.seconds = since(start);
    o.require(o.seconds < kConjugationLimit, "time limit");
    o.detail = std::to_string(catalog_groups().size()) + " groups, " + std::to_string(reports) + " conjugates";
    return o;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Outcome(std::uint64_t)> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria 1-9"};
    std::uint64_t seed = 20240601;
    std::size_t threads = 4;
    app.add_option("--seed", seed, "seed for the random corpus and conjugations");
    app.add_option("--threads", threads, "worker threads of the first pass; the second uses 1");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "reflection-rotation groups give PL and Lipschitz manifolds", reflection_rotation_forward},
        {2, "one Poincare factor: dimension and reflection conditions", poincare_discrimination},
        {3, "two Poincare factors in O(8)", two_poincare_factors},
        {4, "refusal on -I", refusal_soundness},
        {5, "Poincare homology sphere from the 600-cell", poincare_sphere},
        {6, "cone over RP^2 is not a homology manifold", negative_control},
        {7, "product, cone and double properties", property_suite},
        {8, "conjugation invariance and implication chain", conjugation_invariance},
    };

    bool all = true;
    std::vector<std::string> first;
    set_thread_count(std::max<std::size_t>(threads, 1));
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run(seed);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        first.push_back(o.transcript);
        all = all && o.pass;
        std::string line = "criterion " + std::to_string(c.number) + ": " + (o.pass ? "PASS" : "FAIL") + "  " +
                           c.title + " (" + fmt(o.seconds) + " s" + (o.detail.empty() ? "" : "; " + o.detail) + ")";
        for (const auto& f : o.failures) line += "\n    failed: " + f;
        std::printf("%s\n", line.c_str());
        std::fflush(stdout);
    }

    set_thread_count(1);
    std::vector<int> differing;
    const auto start = Clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string again;
        try {
            again = criteria[i].run(seed).transcript;
        } catch (const std::exception& e) {
            again = std::string("exception: ") + e.what();
        }
        if (again != first[i]) differing.push_back(criteria[i].number);
    }
    const bool deterministic = differing.empty();
    all = all && deterministic;
    std::string line = std::string("criterion 9: ") + (deterministic ? "PASS" : "FAIL") +
                       "  reports identical with " + std::to_string(threads) + " and 1 threads (" +
                       fmt(since(start)) + " s)";
    for (int d : differing) line += "\n    failed: criterion " + std::to_string(d) + " differs";
    std::printf("%s\n", line.c_str());
    return all ? 0 : 1;
}
