#include "orbiclass/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "orbiclass/errors.hpp"

namespace orbiclass {

std::size_t FaceHash::operator()(const Face& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ f.size();
    for (Vertex v : f) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

struct SimplicialComplex::Cache {
    std::once_flag once;
    std::vector<std::vector<Face>> faces;  // faces[d] for d = 0..dim
    std::vector<FaceMap<std::size_t>> index;
    std::vector<std::vector<std::size_t>> vertex_facets;
};

namespace {

Face normalized(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool includes(const Face& big, const Face& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

const std::vector<Face>& empty_face_list() {
    static const std::vector<Face> list{Face{}};
    return list;
}

const std::vector<Face>& no_faces() {
    static const std::vector<Face> list;
    return list;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Face> facets, std::size_t vertex_count)
    : vertex_count_(vertex_count), cache_(std::make_shared<Cache>()) {
    std::vector<Face> input;
    input.reserve(facets.size());
    for (auto& f : facets) {
        Face g = normalized(std::move(f));
        if (g.empty()) continue;
        vertex_count_ = std::max<std::size_t>(vertex_count_, g.back() + 1);
        input.push_back(std::move(g));
    }
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());

    const bool uniform = std::all_of(input.begin(), input.end(),
                                     [&](const Face& f) { return f.size() == input.front().size(); });
    if (uniform) {
        facets_ = std::move(input);
    } else {
        // larger faces first, keep a face only if no kept face contains it
        std::vector<std::size_t> order(input.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return input[a].size() > input[b].size(); });
        std::vector<std::vector<std::size_t>> by_vertex(vertex_count_);
        std::vector<Face> kept;
        for (auto i : order) {
            const Face& f = input[i];
            bool covered = false;
            for (auto j : by_vertex[f.front()])
                if (includes(kept[j], f)) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            for (Vertex v : f) by_vertex[v].push_back(kept.size());
            kept.push_back(f);
        }
        std::sort(kept.begin(), kept.end());
        facets_ = std::move(kept);
    }
    for (const auto& f : facets_) dimension_ = std::max(dimension_, static_cast<int>(f.size()) - 1);
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return static_cast<int>(f.size()) - 1 == dimension_; });
}

const SimplicialComplex::Cache& SimplicialComplex::cache() const {
    if (!cache_) {
        static const Cache empty_cache;
        return empty_cache;
    }
    std::call_once(cache_->once, [this] {
        Cache& c = *cache_;
        const int dims = dimension_ + 1;
        std::vector<std::unordered_set<Face, FaceHash>> sets(dims);
        for (const auto& f : facets_) {
            const std::size_t s = f.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
                Face sub;
                for (std::size_t b = 0; b < s; ++b)
                    if (mask >> b & 1) sub.push_back(f[b]);
                sets[sub.size() - 1].insert(std::move(sub));
            }
        }
        c.faces.resize(dims);
        c.index.resize(dims);
        for (int d = 0; d < dims; ++d) {
            c.faces[d].assign(sets[d].begin(), sets[d].end());
            std::sort(c.faces[d].begin(), c.faces[d].end());
            c.index[d].reserve(c.faces[d].size());
            for (std::size_t i = 0; i < c.faces[d].size(); ++i) c.index[d].emplace(c.faces[d][i], i);
        }
        c.vertex_facets.resize(vertex_count_);
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (Vertex v : facets_[i]) c.vertex_facets[v].push_back(i);
    });
    return *cache_;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    if (d == -1) return empty_face_list();
    if (d < -1 || d > dimension_) return no_faces();
    return cache().faces[d];
}

std::ptrdiff_t SimplicialComplex::face_index(const Face& f) const {
    if (f.empty()) return 0;
    const int d = static_cast<int>(f.size()) - 1;
    if (d > dimension_) return -1;
    const auto& idx = cache().index[d];
    auto it = idx.find(f);
    return it == idx.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int d = 0; d <= dimension_; ++d) f.push_back(faces(d).size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension_; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(faces(d).size());
    return chi;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const auto& f : faces(0)) out.push_back(f.front());
    return out;
}

const std::vector<std::size_t>& SimplicialComplex::facets_containing(Vertex v) const {
    static const std::vector<std::size_t> none;
    if (v >= vertex_count_) return none;
    return cache().vertex_facets[v];
}

SimplicialComplex build_complex(std::vector<Face> facets, std::size_t vertex_count) {
    if (facets.empty()) throw InvalidComplex("complex needs at least one facet");
    for (const auto& f : facets)
        if (f.empty()) throw InvalidComplex("empty facet");
    return SimplicialComplex(std::move(facets), vertex_count);
}

SimplicialComplex link(const SimplicialComplex& k, const Face& sigma_in) {
    const Face sigma = normalized(sigma_in);
    if (sigma.empty()) return k;
    if (!k.contains_face(sigma)) throw InvalidComplex("link: not a face of the complex");
    std::vector<Face> out;
    for (auto i : k.facets_containing(sigma.front())) {
        const Face& f = k.facets()[i];
        if (!includes(f, sigma)) continue;
        Face rest;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
        out.push_back(std::move(rest));
    }
    return SimplicialComplex(std::move(out), k.vertex_count());
}

SimplicialComplex subcomplex(const SimplicialComplex& k, std::vector<Face> faces) {
    return SimplicialComplex(std::move(faces), k.vertex_count());
}

Construction join(const SimplicialComplex& k, const SimplicialComplex& l) {
    const auto nk = static_cast<Vertex>(k.vertex_count());
    const std::size_t nl = l.vertex_count();
    Construction c;
    for (Vertex v = 0; v < nk; ++v) c.origin.push_back({VertexOrigin::Kind::left, v, 0});
    for (Vertex v = 0; v < nl; ++v) c.origin.push_back({VertexOrigin::Kind::right, v, 0});
    std::vector<Face> left = k.facets(), right = l.facets();
    if (left.empty()) left.push_back({});
    if (right.empty()) right.push_back({});
    std::vector<Face> facets;
    for (const auto& f : left)
        for (const auto& g : right) {
            Face h = f;
            for (Vertex v : g) h.push_back(v + nk);
            facets.push_back(std::move(h));
        }
    c.complex = SimplicialComplex(std::move(facets), nk + nl);
    return c;
}

Construction cone(const SimplicialComplex& k) {
    Construction c = join(k, SimplicialComplex(std::vector<Face>{{0}}));
    c.origin.back() = {VertexOrigin::Kind::apex, 0, 0};
    return c;
}

Construction suspension(const SimplicialComplex& k) {
    Construction c = join(k, SimplicialComplex(std::vector<Face>{{0}, {1}}));
    const std::size_t n = c.origin.size();
    c.origin[n - 2] = {VertexOrigin::Kind::apex, 0, 0};
    c.origin[n - 1] = {VertexOrigin::Kind::apex, 1, 0};
    return c;
}

Construction product(const SimplicialComplex& k, const SimplicialComplex& l) {
    const auto nk = static_cast<Vertex>(k.vertex_count());
    const auto nl = static_cast<Vertex>(l.vertex_count());
    Construction c;
    for (Vertex x = 0; x < nk; ++x)
        for (Vertex y = 0; y < nl; ++y) c.origin.push_back({VertexOrigin::Kind::pair, x, y});
    std::vector<Face> facets;
    for (const auto& f : k.facets()) {
        for (const auto& g : l.facets()) {
            const std::size_t p = f.size() - 1, q = g.size() - 1;
            // each monotone lattice path from (0,0) to (p,q) is one facet
            std::vector<bool> steps(p + q, false);
            std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(q), true);
            std::sort(steps.begin(), steps.end());
            do {
                Face h;
                std::size_t i = 0, j = 0;
                h.push_back(f[i] * nl + g[j]);
                for (bool up : steps) {
                    up ? ++j : ++i;
                    h.push_back(f[i] * nl + g[j]);
                }
                facets.push_back(std::move(h));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    c.complex = SimplicialComplex(std::move(facets), static_cast<std::size_t>(nk) * nl);
    return c;
}

namespace {

bool is_full_subcomplex(const SimplicialComplex& k, const std::vector<bool>& in_l, const SimplicialComplex& l) {
    for (int d = 1; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d))
            if (std::all_of(f.begin(), f.end(), [&](Vertex v) { return in_l[v]; }) && !l.contains_face(f))
                return false;
    return true;
}

Construction glue_copies(const SimplicialComplex& k, const std::vector<bool>& in_l) {
    const auto n = static_cast<Vertex>(k.vertex_count());
    Construction c;
    for (Vertex v = 0; v < n; ++v) c.origin.push_back({VertexOrigin::Kind::left, v, 0});
    for (Vertex v = 0; v < n; ++v) c.origin.push_back({VertexOrigin::Kind::right, v, 0});
    std::vector<Face> facets = k.facets();
    for (const auto& f : k.facets()) {
        Face g;
        for (Vertex v : f) g.push_back(in_l[v] ? v : v + n);
        facets.push_back(std::move(g));
    }
    c.complex = SimplicialComplex(std::move(facets), 2 * static_cast<std::size_t>(n));
    return c;
}

}  // namespace

Construction double_along(const SimplicialComplex& k, const SimplicialComplex& l) {
    for (const auto& f : l.facets())
        if (!k.contains_face(f)) throw InvalidComplex("double: L is not a subcomplex of K");
    const auto n = static_cast<Vertex>(k.vertex_count());
    std::vector<bool> in_l(n, false);
    for (Vertex v : l.vertices()) {
        if (v >= n) throw InvalidComplex("double: L uses a vertex outside K");
        in_l[v] = true;
    }
    if (is_full_subcomplex(k, in_l, l)) return glue_copies(k, in_l);

    Subdivision sd = barycentric_subdivision(k);
    std::vector<bool> sd_in_l(sd.faces.size());
    for (std::size_t i = 0; i < sd.faces.size(); ++i) sd_in_l[i] = l.contains_face(sd.faces[i]);
    Construction c = glue_copies(sd.complex, sd_in_l);
    c.carrier = std::move(sd.faces);
    return c;
}

std::vector<Vertex> double_swap(const Construction& d) {
    const std::size_t total = d.complex.vertex_count();
    const std::size_t n = total / 2;
    std::vector<bool> used(total, false);
    for (Vertex v : d.complex.vertices()) used[v] = true;
    std::vector<Vertex> perm(total);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t v = 0; v < n; ++v)
        if (used[n + v]) std::swap(perm[v], perm[n + v]);
    return perm;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
    Subdivision sd;
    FaceMap<Vertex> index;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d)) {
            index.emplace(f, static_cast<Vertex>(sd.faces.size()));
            sd.faces.push_back(f);
        }
    std::vector<Face> facets;
    for (const auto& f : k.facets()) {
        Face perm = f;
        do {
            Face chain;
            Face prefix;
            for (Vertex v : perm) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(index.at(prefix));
            }
            facets.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.complex = SimplicialComplex(std::move(facets), sd.faces.size());
    return sd;
}

void validate_action(const SimplicialComplex& k, const SimplicialAction& a) {
    if (a.vertex_count != k.vertex_count())
        throw InvalidAction("action has " + std::to_string(a.vertex_count) + " vertices, complex has " +
                            std::to_string(k.vertex_count()));
    std::unordered_set<Face, FaceHash> facets(k.facets().begin(), k.facets().end());
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const Permutation& p = a.generators[g];
        if (p.size() != a.vertex_count)
            throw InvalidAction("generator " + std::to_string(g) + " has wrong length");
        std::vector<bool> seen(p.size(), false);
        for (Vertex v : p) {
            if (v >= p.size() || seen[v])
                throw InvalidAction("generator " + std::to_string(g) + " is not a permutation");
            seen[v] = true;
        }
        for (const auto& f : k.facets()) {
            Face img;
            for (Vertex v : f) img.push_back(p[v]);
            std::sort(img.begin(), img.end());
            if (!facets.count(img))
                throw InvalidAction("generator " + std::to_string(g) + " does not map facets to facets");
        }
    }
}

SimplicialAction subdivide_action(const Subdivision& sd, const SimplicialAction& a) {
    FaceMap<Vertex> index;
    index.reserve(sd.faces.size());
    for (std::size_t i = 0; i < sd.faces.size(); ++i) index.emplace(sd.faces[i], static_cast<Vertex>(i));
    SimplicialAction out;
    out.vertex_count = sd.faces.size();
    out.labels = a.labels;
    for (const auto& p : a.generators) {
        Permutation q(sd.faces.size());
        for (std::size_t i = 0; i < sd.faces.size(); ++i) {
            Face img;
            for (Vertex v : sd.faces[i]) img.push_back(p[v]);
            std::sort(img.begin(), img.end());
            auto it = index.find(img);
            if (it == index.end()) throw InvalidAction("action does not map faces to faces");
            q[i] = it->second;
        }
        out.generators.push_back(std::move(q));
    }
    return out;
}

std::vector<Vertex> vertex_orbits(std::size_t vertex_count, const std::vector<Permutation>& generators) {
    std::vector<Vertex> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& p : generators)
        for (Vertex v = 0; v < vertex_count; ++v) {
            Vertex a = find(v), b = find(p[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<Vertex> label(vertex_count);
    std::vector<Vertex> number(vertex_count, ~Vertex{0});
    Vertex next = 0;
    for (Vertex v = 0; v < vertex_count; ++v) {
        Vertex r = find(v);
        if (number[r] == ~Vertex{0}) number[r] = next++;
        label[v] = number[r];
    }
    return label;
}

Quotient quotient(const SimplicialComplex& k, const SimplicialAction& a) {
    validate_action(k, a);
    Subdivision sd1 = barycentric_subdivision(k);
    SimplicialAction a1 = subdivide_action(sd1, a);
    Subdivision sd2 = barycentric_subdivision(sd1.complex);
    SimplicialAction a2 = subdivide_action(sd2, a1);

    Quotient q;
    q.projection = vertex_orbits(sd2.complex.vertex_count(), a2.generators);
    const std::size_t orbit_count =
        q.projection.empty() ? 0 : *std::max_element(q.projection.begin(), q.projection.end()) + 1;
    std::vector<Face> facets;
    facets.reserve(sd2.complex.facets().size());
    for (const auto& f : sd2.complex.facets()) {
        Face img;
        for (Vertex v : f) img.push_back(q.projection[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw InvariantViolation("quotient map collapses a simplex of the second subdivision");
        facets.push_back(std::move(img));
    }
    q.complex = SimplicialComplex(std::move(facets), orbit_count);
    q.subdivided = std::move(sd2.complex);
    return q;
}

}  // namespace orbiclass
