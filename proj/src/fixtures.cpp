#include "orbiclass/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "orbiclass/catalog.hpp"
#include "orbiclass/errors.hpp"

namespace orbiclass {

namespace {

Permutation identity_perm(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    return p;
}

SimplicialAction no_action(const SimplicialComplex& k) { return {k.vertex_count(), {}, {}}; }

int suffix_number(const std::string& name, const std::string& prefix, const std::string& suffix = "") {
    if (name.size() <= prefix.size() + suffix.size() || name.compare(0, prefix.size(), prefix) != 0 ||
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
        return -1;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4) return -1;
    return std::stoi(digits);
}

}  // namespace

SimplicialComplex cross_polytope_boundary(int n) {
    if (n < 1) throw InvalidComplex("cross-polytope needs n >= 1");
    std::vector<Face> facets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Face f;
        for (int i = 0; i < n; ++i) f.push_back(static_cast<Vertex>(2 * i + ((mask >> i) & 1)));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(facets), 2 * static_cast<std::size_t>(n));
}

SimplicialAction signed_permutation_action(int n) {
    const std::size_t v = 2 * static_cast<std::size_t>(n);
    SimplicialAction a{v, {}, {}};
    for (int i = 0; i + 1 < n; ++i) {
        Permutation p = identity_perm(v);
        std::swap(p[2 * i], p[2 * i + 2]);
        std::swap(p[2 * i + 1], p[2 * i + 3]);
        a.generators.push_back(std::move(p));
        a.labels.push_back("swap_" + std::to_string(i) + "_" + std::to_string(i + 1));
    }
    Permutation flip = identity_perm(v);
    std::swap(flip[v - 2], flip[v - 1]);
    a.generators.push_back(std::move(flip));
    a.labels.push_back("flip_" + std::to_string(n - 1));
    return a;
}

SimplicialAction antipodal_action(int n) {
    const std::size_t v = 2 * static_cast<std::size_t>(n);
    Permutation p(v);
    for (std::size_t i = 0; i < v; ++i) p[i] = static_cast<Vertex>(i ^ 1);
    return {v, {p}, {"antipodal"}};
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<Face> facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        Face f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(static_cast<Vertex>(v));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex simplex(int n) {
    Face f(static_cast<std::size_t>(n) + 1);
    std::iota(f.begin(), f.end(), Vertex{0});
    return SimplicialComplex(std::vector<Face>{f});
}

SimplicialComplex polygon(int m) {
    if (m < 3) throw InvalidComplex("polygon needs at least 3 vertices");
    std::vector<Face> facets;
    for (int i = 0; i < m; ++i) facets.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m)});
    return SimplicialComplex(std::move(facets));
}

SimplicialAction polygon_rotation(int m) {
    Permutation p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[i] = static_cast<Vertex>((i + 1) % m);
    return {static_cast<std::size_t>(m), {p}, {"rotation"}};
}

SimplicialComplex projective_plane() { return quotient(cross_polytope_boundary(3), antipodal_action(3)).complex; }

SimplicialComplex six_hundred_cell() {
    const auto units = unit_icosians();
    const std::size_t n = units.size();
    std::vector<Vector> v;
    for (const auto& q : units) v.push_back(q.to_vector());

    // neighbours realise the largest inner product below 1
    const Scalar one(1);
    std::vector<Scalar> ip(n * n);
    std::optional<Scalar> best;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar x = dot(v[i], v[j]);
            if (!(x == one) && (!best || compare_real(x, *best) == Ordering::greater)) best = x;
            ip[i * n + j] = ip[j * n + i] = std::move(x);
        }
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && ip[i * n + j] == *best) adj[i].push_back(j);
    auto adjacent = [&](std::size_t a, std::size_t b) {
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    };
    std::vector<Face> facets;
    for (std::size_t a = 0; a < n; ++a)
        for (auto b : adj[a]) {
            if (b <= a) continue;
            for (auto c : adj[b]) {
                if (c <= b || !adjacent(a, c)) continue;
                for (auto d : adj[c]) {
                    if (d <= c || !adjacent(a, d) || !adjacent(b, d)) continue;
                    facets.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c),
                                      static_cast<Vertex>(d)});
                }
            }
        }
    SimplicialComplex k(std::move(facets), n);
    if (k.f_vector() != std::vector<std::size_t>{120, 720, 1200, 600})
        throw InvariantViolation("600-cell construction produced the wrong f-vector");
    return k;
}

SimplicialAction binary_icosahedral_action() {
    const auto units = unit_icosians();
    SimplicialAction a{units.size(), {}, {}};
    int label = 0;
    for (const auto& g : binary_icosahedral_generators()) {
        Permutation p(units.size());
        for (std::size_t i = 0; i < units.size(); ++i) {
            const Quaternion img = g * units[i];
            auto it = std::find(units.begin(), units.end(), img);
            if (it == units.end()) throw InvariantViolation("unit icosians not closed under the generators");
            p[i] = static_cast<Vertex>(it - units.begin());
        }
        a.generators.push_back(std::move(p));
        a.labels.push_back("left_" + std::to_string(label++));
    }
    return a;
}

std::vector<std::string> fixture_names() {
    return {"octahedron",   "cross_polytope_<n>", "cross_polytope_<n>_antipodal", "tetrahedron_boundary",
            "triangle",     "polygon_<m>",        "projective_plane",             "six_hundred_cell"};
}

Fixture fixture(const std::string& name) {
    Fixture f;
    f.name = name;
    if (name == "octahedron") {
        f.complex = cross_polytope_boundary(3);
        f.action = antipodal_action(3);
        f.dimension = 2;
    } else if (int n = suffix_number(name, "cross_polytope_", "_antipodal"); n >= 1) {
        f.complex = cross_polytope_boundary(n);
        f.action = antipodal_action(n);
        f.dimension = n - 1;
    } else if (int n2 = suffix_number(name, "cross_polytope_"); n2 >= 1) {
        f.complex = cross_polytope_boundary(n2);
        f.action = signed_permutation_action(n2);
        f.dimension = n2 - 1;
    } else if (name == "tetrahedron_boundary") {
        f.complex = simplex_boundary(2);
        f.action = no_action(f.complex);
        f.dimension = 2;
    } else if (name == "triangle") {
        f.complex = simplex(2);
        f.action = no_action(f.complex);
        f.dimension = 2;
    } else if (int m = suffix_number(name, "polygon_"); m >= 3) {
        f.complex = polygon(m);
        f.action = polygon_rotation(m);
        f.dimension = 1;
    } else if (name == "projective_plane") {
        f.complex = projective_plane();
        f.action = no_action(f.complex);
        f.dimension = 2;
    } else if (name == "six_hundred_cell") {
        f.complex = six_hundred_cell();
        f.action = binary_icosahedral_action();
        f.dimension = 3;
    } else {
        throw ParseError("unknown fixture '" + name + "'");
    }
    return f;
}

}  // namespace orbiclass
