#include "orbiclass/cli.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "orbiclass/catalog.hpp"
#include "orbiclass/errors.hpp"
#include "orbiclass/fixtures.hpp"
#include "orbiclass/homology.hpp"
#include "orbiclass/parallel.hpp"

namespace orbiclass {

namespace {

std::string render(const Json& j, OutputFormat format);

Json complex_summary(const SimplicialComplex& k) {
    return {{"vertices", k.vertex_count()},
            {"dimension", k.dimension()},
            {"facets", k.facets().size()},
            {"f_vector", k.f_vector()},
            {"euler_characteristic", k.euler_characteristic()}};
}

Json manifold_json(const ManifoldCheck& c, bool with_boundary) {
    Json j;
    j["yes"] = c.yes;
    j["reason"] = c.reason;
    j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    if (with_boundary && c.yes) {
        Json facets = Json::array();
        for (const auto& f : c.boundary.facets()) facets.push_back(f);
        j["boundary"] = std::move(facets);
    }
    return j;
}

struct Timer {
    bool on;
    std::string& sink;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    void mark(const std::string& what) {
        if (!on) return;
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream o;
        o.precision(3);
        o << std::fixed << "[" << s << " s] " << what << "\n";
        sink += o.str();
    }
};

void require_one_source(const RunConfig& c, bool allow_fixture) {
    const int sources = (c.input ? 1 : 0) + (c.family ? 1 : 0) + (allow_fixture && c.fixture ? 1 : 0);
    if (sources != 1)
        throw ParseError(allow_fixture ? "give exactly one of --input or --fixture"
                                       : "give exactly one of --input or --family");
}

void emit(const RunConfig& c, RunResult& r, const std::string& text) {
    if (c.output)
        write_file_atomic(*c.output, text);
    else
        r.out = text;
}

int cmd_classify(const RunConfig& c, RunResult& r, Timer& timer) {
    if (c.fixture) throw ParseError("classify takes --input or --family");
    require_one_source(c, false);
    GroupInput g = c.family ? group_from_family(*c.family) : group_from_json(parse_json(read_file(*c.input)));
    if (c.seed) g.generators = conjugate_by_signed_permutation(g.generators, *c.seed);
    const std::size_t cap = c.cap ? *c.cap : g.cap.value_or(kDefaultClosureCap);
    timer.mark("input read");
    const VerdictReport report = classify_group(g, cap);
    timer.mark("classified");
    emit(c, r, c.format == OutputFormat::json ? dump_json(report_to_json(report)) : report_to_text(report));
    return exit_code::ok;
}

int cmd_verify(const RunConfig& c, RunResult& r, Timer& timer) {
    if (c.family) throw ParseError("verify-complex takes --input or --fixture");
    require_one_source(c, true);
    SimplicialComplex k;
    std::optional<SimplicialAction> action;
    int n;
    if (c.fixture) {
        Fixture f = fixture(*c.fixture);
        k = f.complex;
        n = f.dimension;
        if (c.use_fixture_action) action = f.action;
    } else {
        if (c.use_fixture_action) throw ParseError("--quotient needs --fixture; use --action with --input");
        k = read_complex(read_file(*c.input));
        n = k.dimension();
    }
    if (c.dimension) n = *c.dimension;
    if (c.action) {
        if (action) throw ParseError("give either --action or --quotient");
        action = read_action(read_file(*c.action), k.vertex_count());
    }
    timer.mark("input read");

    bool all_closed = true;
    Json j;
    j["schema"] = kSchema;
    j["command"] = "verify-complex";
    if (c.fixture) j["fixture"] = *c.fixture;
    j["manifold_dimension"] = n;
    j["complex"] = complex_summary(k);
    j["homology"] = homology_to_json(homology(k));
    timer.mark("homology");
    j["homology_manifold"] = manifold_json(is_homology_manifold(k, n), false);
    j["homology_manifold_with_boundary"] = manifold_json(is_homology_manifold_with_boundary(k, n), true);
    timer.mark("manifold checks");
    if (c.pi1) {
        bool closed = true;
        j["pi1"] = pi1_report(k, c.coset_bound, closed);
        all_closed = all_closed && closed;
        timer.mark("pi1");
    }
    if (action) {
        const Quotient q = quotient(k, *action);
        timer.mark("quotient");
        Json qj;
        qj["generators"] = action->generators.size();
        qj["subdivided"] = {{"vertices", q.subdivided.vertex_count()}, {"facets", q.subdivided.facets().size()}};
        qj["complex"] = complex_summary(q.complex);
        qj["homology"] = homology_to_json(homology(q.complex));
        timer.mark("quotient homology");
        qj["homology_manifold"] = manifold_json(is_homology_manifold(q.complex, n), false);
        timer.mark("quotient manifold check");
        bool closed = true;
        qj["pi1"] = pi1_report(q.complex, c.coset_bound, closed);
        all_closed = all_closed && closed;
        timer.mark("quotient pi1");
        j["quotient"] = std::move(qj);
    }
    emit(c, r, render(j, c.format));
    return all_closed ? exit_code::ok : exit_code::bound_exceeded;
}

int cmd_quotient(const RunConfig& c, RunResult& r, Timer& timer) {
    if (c.family) throw ParseError("quotient takes --input or --fixture");
    require_one_source(c, true);
    SimplicialComplex k;
    SimplicialAction action;
    if (c.fixture) {
        Fixture f = fixture(*c.fixture);
        k = f.complex;
        action = f.action;
        if (c.action) action = read_action(read_file(*c.action), k.vertex_count());
    } else {
        if (!c.action) throw ParseError("quotient needs --action");
        k = read_complex(read_file(*c.input));
        action = read_action(read_file(*c.action), k.vertex_count());
    }
    const Quotient q = quotient(k, action);
    timer.mark("quotient");
    if (c.format == OutputFormat::text) {
        emit(c, r, complex_to_text(q.complex));
    } else {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "quotient";
        j["subdivided"] = {{"vertices", q.subdivided.vertex_count()}, {"facets", q.subdivided.facets().size()}};
        j["complex"] = complex_to_json(q.complex);
        j["projection"] = q.projection;
        emit(c, r, dump_json(j));
    }
    return exit_code::ok;
}

int cmd_catalog(const RunConfig& c, RunResult& r) {
    if (c.family) {
        GroupInput g = group_from_family(*c.family);
        if (c.cap) g.cap = *c.cap;
        if (c.format == OutputFormat::text) {
            std::ostringstream out;
            out << *g.family << ": dimension " << g.dimension << ", conductor " << g.conductor << ", "
                << g.generators.size() << " generators\n";
            for (const auto& m : g.generators) out << m.to_string() << "\n";
            emit(c, r, out.str());
        } else {
            emit(c, r, dump_json(group_to_json(g)));
        }
        return exit_code::ok;
    }
    if (c.fixture) {
        const Fixture f = fixture(*c.fixture);
        emit(c, r,
             c.format == OutputFormat::text
                 ? complex_to_text(f.complex)
                 : dump_json(Json{{"complex", complex_to_json(f.complex)}, {"action", action_to_json(f.action)}}));
        return exit_code::ok;
    }
    if (c.format == OutputFormat::text) {
        std::ostringstream out;
        out << "families:\n";
        for (const auto& name : family_names()) out << "  " << name << "\n";
        out << "fixtures:\n";
        for (const auto& name : fixture_names()) out << "  " << name << "\n";
        emit(c, r, out.str());
    } else {
        emit(c, r, dump_json(Json{{"schema", kSchema}, {"families", family_names()}, {"fixtures", fixture_names()}}));
    }
    return exit_code::ok;
}

std::string render_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_text(const Json& j, const std::string& indent, std::ostringstream& out) {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_text(value, indent + "  ", out);
        } else {
            out << indent << key << ": " << render_value(value) << "\n";
        }
    }
}

std::string render(const Json& j, OutputFormat format) {
    if (format == OutputFormat::json) return dump_json(j);
    std::ostringstream out;
    render_text(j, "", out);
    return out.str();
}

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
    if (dynamic_cast<const NonOrthogonalGenerator*>(&e)) return "NonOrthogonalGenerator";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
    if (dynamic_cast<const InvalidComplex*>(&e)) return "InvalidComplex";
    if (dynamic_cast<const InvalidAction*>(&e)) return "InvalidAction";
    if (dynamic_cast<const NotInvariant*>(&e)) return "NotInvariant";
    if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "InternalError";
}

int error_code(const std::exception& e) {
    if (dynamic_cast<const CapExceeded*>(&e)) return exit_code::bound_exceeded;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const NonOrthogonalGenerator*>(&e) ||
        dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const InvalidComplex*>(&e) ||
        dynamic_cast<const InvalidAction*>(&e) || dynamic_cast<const NotReal*>(&e))
        return exit_code::parse_error;
    return exit_code::internal_error;
}

}  // namespace

Command command_from_string(const std::string& name) {
    if (name == "classify") return Command::classify;
    if (name == "verify-complex") return Command::verify_complex;
    if (name == "quotient") return Command::quotient;
    if (name == "catalog") return Command::catalog;
    throw ParseError("unknown command '" + name + "'");
}

VerdictReport classify_group(const GroupInput& g, std::size_t cap) {
    if (g.generators.empty()) return verdicts(MatrixGroup(g.dimension, g.conductor));
    return verdicts(closure(g.generators, cap));
}

std::vector<Matrix> conjugate_by_signed_permutation(const std::vector<Matrix>& generators, unsigned long long seed) {
    if (generators.empty()) return {};
    const std::size_t n = generators.front().rows();
    const int m = generators.front().conductor();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix q(n, n, m);
    for (std::size_t i = 0; i < n; ++i) q.set(i, perm[i], Scalar(Rational(rng() % 2 ? 1 : -1), m));
    const Matrix qt = q.transpose();
    std::vector<Matrix> out;
    for (const auto& g : generators) out.push_back(q * g * qt);
    return out;
}

Json homology_to_json(const HomologyResult& h) {
    Json j = Json::array();
    for (int d = h.first_degree; d <= h.last_degree(); ++d) j.push_back(h.at(d).to_string());
    return j;
}

Json pi1_report(const SimplicialComplex& k, std::size_t bound, bool& closed) {
    Json j;
    if (homology(k).at(0).betti != 1) {
        j["connected"] = false;
        closed = true;
        return j;
    }
    const Presentation raw = pi1_presentation(k);
    const Presentation simple = simplify(raw);
    const CosetResult cosets = coset_enumeration(simple, bound);
    j["connected"] = true;
    j["generators"] = raw.generators;
    j["relators"] = raw.relators.size();
    j["simplified_generators"] = simple.generators;
    j["simplified_relators"] = simple.relators.size();
    j["simplified_length"] = simple.total_length();
    j["abelianization"] = abelian_invariants(simple);
    j["coset_bound"] = bound;
    j["closed"] = cosets.closed;
    j["order"] = cosets.closed ? Json(cosets.order) : Json(nullptr);
    j["rows_used"] = cosets.rows_used;
    closed = cosets.closed;
    return j;
}

RunResult run(const RunConfig& config) {
    RunResult r;
    Timer timer{config.verbose, r.err};
    try {
        if (config.cap && *config.cap == 0) throw ParseError("--cap must be positive");
        if (config.coset_bound == 0) throw ParseError("--coset-bound must be positive");
        if (config.threads) set_thread_count(config.threads);
        switch (config.command) {
            case Command::classify: r.code = cmd_classify(config, r, timer); break;
            case Command::verify_complex: r.code = cmd_verify(config, r, timer); break;
            case Command::quotient: r.code = cmd_quotient(config, r, timer); break;
            case Command::catalog: r.code = cmd_catalog(config, r); break;
        }
    } catch (const std::exception& e) {
        r.code = error_code(e);
        r.out.clear();
        if (config.format == OutputFormat::json) {
            Json err{{"schema", kSchema}, {"error", {{"type", error_type(e)}, {"message", e.what()}}}};
            if (auto* cap = dynamic_cast<const CapExceeded*>(&e)) err["error"]["cap"] = cap->cap();
            if (auto* gen = dynamic_cast<const NonOrthogonalGenerator*>(&e)) err["error"]["generator"] = gen->index();
            r.err += dump_json(err);
        } else {
            r.err += "error: " + error_type(e) + ": " + e.what() + "\n";
        }
    }
    return r;
}

}  // namespace orbiclass
