#include "orbiclass/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "orbiclass/catalog.hpp"
#include "orbiclass/errors.hpp"

namespace orbiclass {

namespace {

constexpr int kMaxConductor = 10000;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where + ": missing field '" + key + "'");
    return *it;
}

std::size_t natural(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

int conductor_from(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where + ": conductor must be an integer");
    const long long m = j.get<long long>();
    if (m < 1 || m > kMaxConductor) bad(where + ": conductor out of range");
    return static_cast<int>(m);
}

bool boolean(const Json& j, const std::string& where) {
    if (!j.is_boolean()) bad(where + ": expected true or false");
    return j.get<bool>();
}

std::string string_of(const Json& j, const std::string& where) {
    if (!j.is_string()) bad(where + ": expected a string");
    return j.get<std::string>();
}

Scalar coords_to_scalar(const Json& j, int conductor, const std::string& where) {
    if (!j.is_array()) bad(where + ": expected a coordinate list");
    const auto degree = static_cast<std::size_t>(totient(conductor));
    if (j.size() != degree)
        bad(where + ": expected " + std::to_string(degree) + " coordinates for conductor " +
            std::to_string(conductor));
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from_json(c));
    return Scalar::make(conductor, std::move(coords));
}

Json coords_json(const Scalar& s) {
    Json out = Json::array();
    for (const auto& c : s.coords()) out.push_back(rational_to_json(c));
    return out;
}

Json verdict_json(const CategoryVerdict& v) { return {{"yes", v.yes}, {"boundary_nonempty", v.boundary_nonempty}}; }

CategoryVerdict verdict_from(const Json& j, const std::string& where) {
    return {boolean(field(j, "yes", where), where), boolean(field(j, "boundary_nonempty", where), where)};
}

std::vector<std::size_t> naturals(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where + ": expected a list");
    std::vector<std::size_t> out;
    for (const auto& x : j) out.push_back(natural(x, where));
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

Vertex vertex_token(const std::string& t, std::size_t line) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
        bad("line " + std::to_string(line) + ": expected a vertex index, got '" + t + "'");
    return static_cast<Vertex>(std::stoul(t));
}

bool skip_line(const std::string& line) {
    const auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) bad("expected a rational literal");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational::parse(s);
    return Rational::parse(s.substr(0, slash), s.substr(slash + 1));
}

Json scalar_to_json(const Scalar& s) { return {{"conductor", s.conductor()}, {"coords", coords_json(s)}}; }

Scalar scalar_from_json(const Json& j) {
    const int m = conductor_from(field(j, "conductor", "scalar"), "scalar");
    return coords_to_scalar(field(j, "coords", "scalar"), m, "scalar");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& e = m(r, c);
            row.push_back(e.is_rational() ? rational_to_json(e.rational_value()) : coords_json(e));
        }
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"conductor", m.conductor()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    const std::size_t rows = natural(field(j, "rows", "matrix"), "matrix");
    const std::size_t cols = natural(field(j, "cols", "matrix"), "matrix");
    const int m = conductor_from(field(j, "conductor", "matrix"), "matrix");
    const Json& entries = field(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != rows) bad("matrix: expected " + std::to_string(rows) + " rows");
    std::vector<Scalar> values;
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != cols)
            bad("matrix: row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
        for (const auto& e : row)
            values.push_back(e.is_array() ? coords_to_scalar(e, m, "matrix entry") : Scalar(rational_from_json(e), m));
    }
    return Matrix(rows, cols, std::move(values)).promote(m);
}

Json group_to_json(const GroupInput& g) {
    Json j;
    j["dimension"] = g.dimension;
    j["conductor"] = g.conductor;
    if (g.family) j["family"] = *g.family;
    if (g.cap) j["cap"] = *g.cap;
    Json gens = Json::array();
    for (const auto& m : g.generators) gens.push_back(matrix_to_json(m.promote(g.conductor)));
    j["generators"] = std::move(gens);
    return j;
}

GroupInput group_from_json(const Json& j) {
    GroupInput g;
    g.dimension = natural(field(j, "dimension", "group"), "group");
    if (g.dimension == 0) bad("group: dimension must be at least 1");
    g.conductor = conductor_from(field(j, "conductor", "group"), "group");
    if (j.contains("family")) g.family = string_of(j["family"], "group family");
    if (j.contains("cap")) {
        g.cap = natural(j["cap"], "group cap");
        if (*g.cap == 0) bad("group: cap must be positive");
    }
    const Json& gens = field(j, "generators", "group");
    if (!gens.is_array()) bad("group: generators must be a list");
    for (const auto& x : gens) {
        Matrix m = matrix_from_json(x);
        if (m.rows() != g.dimension || m.cols() != g.dimension)
            bad("group: generator " + std::to_string(g.generators.size()) + " is not " +
                std::to_string(g.dimension) + " x " + std::to_string(g.dimension));
        if (g.conductor % m.conductor() != 0) bad("group: generator conductor does not divide the group conductor");
        g.generators.push_back(m.promote(g.conductor));
    }
    return g;
}

GroupInput group_from_family(const std::string& spec) {
    const FamilySpec parsed = FamilySpec::parse(spec);
    GroupInput g;
    g.generators = make_family(parsed);
    g.family = parsed.to_string();
    g.dimension = g.generators.front().rows();
    for (const auto& m : g.generators) g.conductor = std::lcm(g.conductor, m.conductor());
    for (auto& m : g.generators) m = m.promote(g.conductor);
    return g;
}

Json refusal_to_json(const Refusal& r) {
    Json j;
    j["step"] = r.step;
    j["reason"] = r.reason;
    j["witness_codim"] = r.witness_codim;
    j["witness"] = r.witness ? matrix_to_json(*r.witness) : Json(nullptr);
    return j;
}

Refusal refusal_from_json(const Json& j) {
    Refusal r;
    r.step = string_of(field(j, "step", "refusal"), "refusal step");
    r.reason = string_of(field(j, "reason", "refusal"), "refusal reason");
    r.witness_codim = natural(field(j, "witness_codim", "refusal"), "refusal");
    const Json& w = field(j, "witness", "refusal");
    if (!w.is_null()) r.witness = matrix_from_json(w);
    return r;
}

Json report_to_json(const VerdictReport& r) {
    Json j;
    j["schema"] = kSchema;
    j["dimension"] = r.dimension;
    j["group_order"] = r.group_order;
    j["homology"] = verdict_json(r.homology);
    j["topological"] = verdict_json(r.topological);
    j["pl"] = verdict_json(r.pl);
    j["lipschitz"] = verdict_json(r.lipschitz);
    j["model"] = to_string(r.model);
    const DecompositionSummary& d = r.decomposition;
    j["decomposition"] = {{"succeeded", d.succeeded},
                          {"rr_order", d.rr_order},
                          {"rr_support_dim", d.rr_support_dim},
                          {"has_reflection", d.has_reflection},
                          {"factor_orders", d.factor_orders},
                          {"factor_support_dims", d.factor_support_dims}};
    j["refusal"] = r.refusal ? refusal_to_json(*r.refusal) : Json(nullptr);
    return j;
}

VerdictReport report_from_json(const Json& j) {
    if (string_of(field(j, "schema", "report"), "report schema") != kSchema) bad("report: unsupported schema");
    VerdictReport r;
    r.dimension = natural(field(j, "dimension", "report"), "report");
    r.group_order = natural(field(j, "group_order", "report"), "report");
    r.homology = verdict_from(field(j, "homology", "report"), "homology");
    r.topological = verdict_from(field(j, "topological", "report"), "topological");
    r.pl = verdict_from(field(j, "pl", "report"), "pl");
    r.lipschitz = verdict_from(field(j, "lipschitz", "report"), "lipschitz");
    r.model = model_space_from_string(string_of(field(j, "model", "report"), "model"));
    const Json& d = field(j, "decomposition", "report");
    r.decomposition.succeeded = boolean(field(d, "succeeded", "decomposition"), "decomposition");
    r.decomposition.rr_order = natural(field(d, "rr_order", "decomposition"), "decomposition");
    r.decomposition.rr_support_dim = natural(field(d, "rr_support_dim", "decomposition"), "decomposition");
    r.decomposition.has_reflection = boolean(field(d, "has_reflection", "decomposition"), "decomposition");
    r.decomposition.factor_orders = naturals(field(d, "factor_orders", "decomposition"), "factor_orders");
    r.decomposition.factor_support_dims =
        naturals(field(d, "factor_support_dims", "decomposition"), "factor_support_dims");
    const Json& refusal = field(j, "refusal", "report");
    if (!refusal.is_null()) r.refusal = refusal_from_json(refusal);
    return r;
}

std::string report_to_text(const VerdictReport& r) {
    std::ostringstream out;
    out << "dimension    " << r.dimension << "\n";
    out << "group order  " << r.group_order << "\n";
    auto line = [&](const char* name, const CategoryVerdict& v) {
        out << name << (v.yes ? "yes" : "no");
        if (v.yes) out << (v.boundary_nonempty ? ", boundary nonempty" : ", boundary empty");
        out << "\n";
    };
    line("homology     ", r.homology);
    line("topological  ", r.topological);
    line("pl           ", r.pl);
    line("lipschitz    ", r.lipschitz);
    out << "model        " << to_string(r.model) << "\n";
    const DecompositionSummary& d = r.decomposition;
    if (d.succeeded) {
        out << "rr part      order " << d.rr_order << " on dimension " << d.rr_support_dim
            << (d.has_reflection ? ", with reflection" : ", no reflection") << "\n";
        for (std::size_t i = 0; i < d.factor_orders.size(); ++i)
            out << "poincare     order " << d.factor_orders[i] << " on dimension " << d.factor_support_dims[i] << "\n";
    }
    if (r.refusal) {
        out << "refused      " << r.refusal->step << ": " << r.refusal->reason;
        if (r.refusal->witness) out << " (witness fixed_codim " << r.refusal->witness_codim << ")";
        out << "\n";
        if (r.refusal->witness) out << r.refusal->witness->to_string() << "\n";
    }
    return out.str();
}

SimplicialComplex complex_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    std::optional<std::pair<long long, std::size_t>> header;
    std::vector<Face> facets;
    while (std::getline(in, line)) {
        ++number;
        if (skip_line(line)) continue;
        const auto t = tokens(line);
        if (!header) {
            if (t.size() != 4 || t[0] != "dim" || t[2] != "vertices")
                bad("line " + std::to_string(number) + ": expected header 'dim n vertices v'");
            try {
                header = {std::stoll(t[1]), std::stoull(t[3])};
            } catch (const std::exception&) {
                bad("line " + std::to_string(number) + ": malformed header numbers");
            }
            continue;
        }
        Face f;
        for (const auto& tok : t) {
            const Vertex v = vertex_token(tok, number);
            if (v >= header->second)
                bad("line " + std::to_string(number) + ": vertex " + tok + " exceeds the declared vertex count");
            f.push_back(v);
        }
        facets.push_back(std::move(f));
    }
    if (!header) bad("missing header 'dim n vertices v'");
    if (facets.empty()) bad("complex has no facets");
    SimplicialComplex k(std::move(facets), header->second);
    if (k.dimension() != header->first)
        bad("header declares dimension " + std::to_string(header->first) + " but the facets have dimension " +
            std::to_string(k.dimension()));
    return k;
}

std::string complex_to_text(const SimplicialComplex& k) {
    std::ostringstream out;
    out << "dim " << k.dimension() << " vertices " << k.vertex_count() << "\n";
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
    return out.str();
}

Json complex_to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (const auto& f : k.facets()) facets.push_back(f);
    return {{"dimension", k.dimension()}, {"vertices", k.vertex_count()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
    const Json& dim = field(j, "dimension", "complex");
    if (!dim.is_number_integer()) bad("complex: dimension must be an integer");
    const std::size_t vertices = natural(field(j, "vertices", "complex"), "complex");
    const Json& list = field(j, "facets", "complex");
    if (!list.is_array() || list.empty()) bad("complex: facets must be a nonempty list");
    std::vector<Face> facets;
    for (const auto& f : list) {
        const auto ids = naturals(f, "complex facet");
        Face face;
        for (auto v : ids) {
            if (v >= vertices) bad("complex: vertex " + std::to_string(v) + " exceeds the declared vertex count");
            face.push_back(static_cast<Vertex>(v));
        }
        facets.push_back(std::move(face));
    }
    SimplicialComplex k(std::move(facets), vertices);
    if (k.dimension() != dim.get<long long>()) bad("complex: declared dimension does not match the facets");
    return k;
}

SimplicialComplex read_complex(const std::string& text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') return complex_from_json(parse_json(text));
    return complex_from_text(text);
}

SimplicialAction action_from_text(const std::string& text, std::size_t vertex_count) {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    SimplicialAction a{vertex_count, {}, {}};
    while (std::getline(in, line)) {
        ++number;
        if (skip_line(line)) continue;
        auto t = tokens(line);
        std::string label;
        if (t.front().back() == ':') {
            label = t.front().substr(0, t.front().size() - 1);
            t.erase(t.begin());
        }
        if (t.size() != vertex_count)
            bad("line " + std::to_string(number) + ": permutation needs " + std::to_string(vertex_count) +
                " images, got " + std::to_string(t.size()));
        Permutation p;
        for (const auto& tok : t) p.push_back(vertex_token(tok, number));
        a.generators.push_back(std::move(p));
        a.labels.push_back(label);
    }
    return a;
}

std::string action_to_text(const SimplicialAction& a) {
    std::ostringstream out;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        if (g < a.labels.size() && !a.labels[g].empty()) out << a.labels[g] << ": ";
        for (std::size_t i = 0; i < a.generators[g].size(); ++i) out << (i ? " " : "") << a.generators[g][i];
        out << "\n";
    }
    return out.str();
}

Json action_to_json(const SimplicialAction& a) {
    Json gens = Json::array();
    for (std::size_t g = 0; g < a.generators.size(); ++g)
        gens.push_back({{"label", g < a.labels.size() ? a.labels[g] : ""}, {"images", a.generators[g]}});
    return {{"vertices", a.vertex_count}, {"generators", std::move(gens)}};
}

SimplicialAction action_from_json(const Json& j) {
    SimplicialAction a;
    a.vertex_count = natural(field(j, "vertices", "action"), "action");
    const Json& gens = field(j, "generators", "action");
    if (!gens.is_array()) bad("action: generators must be a list");
    for (const auto& g : gens) {
        a.labels.push_back(string_of(field(g, "label", "action generator"), "action label"));
        Permutation p;
        for (auto v : naturals(field(g, "images", "action generator"), "action images"))
            p.push_back(static_cast<Vertex>(v));
        if (p.size() != a.vertex_count) bad("action: permutation length differs from the vertex count");
        a.generators.push_back(std::move(p));
    }
    return a;
}

SimplicialAction read_action(const std::string& text, std::size_t vertex_count) {
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        SimplicialAction a = action_from_json(parse_json(text));
        if (a.vertex_count != vertex_count) bad("action: vertex count differs from the complex");
        return a;
    }
    return action_from_text(text, vertex_count);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp + "'");
        out << contents;
        if (!out.flush()) throw Error("cannot write '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace orbiclass
