#include "orbiclass/homology.hpp"

#include <algorithm>
#include <map>

#include "orbiclass/parallel.hpp"

namespace orbiclass {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

bool is_unit(const BigInt& x) { return x == 1 || x == -1; }

// row_a -= f * row_b, both sorted by column
SparseRow combine(const SparseRow& a, const SparseRow& b, const BigInt& f) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            BigInt v = a[i].second - f * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const BigInt* find_entry(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

// Dense Smith normal form with pivots of minimal absolute value.
std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        auto move_min_pivot = [&](bool whole) {
            std::size_t bi = rows, bj = cols;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (!whole && i != t && j != t) continue;
                    if (a[i][j] == 0) continue;
                    BigInt v = abs_big(a[i][j]);
                    if (bi == rows || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == rows) return false;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            return true;
        };
        if (!move_min_pivot(true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                move_min_pivot(false);
                continue;
            }
            // the pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs_big(a[t][t]));
    }
    return diag;
}

}  // namespace

SmithForm smith_normal_form(std::vector<SparseRow> rows, std::size_t cols) {
    for (auto& r : rows) {
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return e.second == 0; }), r.end());
    }
    std::vector<std::vector<std::size_t>> col_rows(cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& e : rows[i]) col_rows[e.first].push_back(i);
    std::vector<bool> active(rows.size(), true);

    SmithForm out;
    // Unit pivots: eliminate the column, then drop the pivot row and column.
    for (;;) {
        std::size_t best_row = rows.size(), best_col = 0, best_cost = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i].empty()) continue;
            if (best_row != rows.size() && rows[i].size() >= rows[best_row].size()) continue;
            for (const auto& e : rows[i]) {
                if (!is_unit(e.second)) continue;
                std::size_t cost = col_rows[e.first].size();
                if (best_row != i || cost < best_cost) {
                    best_row = i;
                    best_col = e.first;
                    best_cost = cost;
                }
            }
        }
        if (best_row == rows.size()) break;
        const SparseRow pivot = rows[best_row];
        const BigInt u = *find_entry(pivot, best_col);
        active[best_row] = false;
        std::vector<std::size_t> touched;
        for (auto r : col_rows[best_col]) {
            if (!active[r]) continue;
            const BigInt* x = find_entry(rows[r], best_col);
            if (!x) continue;
            const BigInt f = *x * u;
            rows[r] = combine(rows[r], pivot, f);
            for (const auto& e : rows[r]) {
                touched.push_back(e.first);
                col_rows[e.first].push_back(r);
            }
        }
        col_rows[best_col].clear();
        // deduplicate the row lists that grew
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (auto c : touched) {
            auto& list = col_rows[c];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        ++out.rank;
        out.divisors.push_back(1);
    }

    // Remaining block without unit entries.
    std::map<std::size_t, std::size_t> col_pos;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!active[i] || rows[i].empty()) continue;
        rest.push_back(i);
        for (const auto& e : rows[i]) col_pos.emplace(e.first, 0);
    }
    if (!rest.empty()) {
        std::size_t next = 0;
        for (auto& [c, p] : col_pos) p = next++;
        std::vector<std::vector<BigInt>> dense(rest.size(), std::vector<BigInt>(col_pos.size()));
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (const auto& e : rows[rest[i]]) dense[i][col_pos[e.first]] = e.second;
        std::vector<BigInt> d = dense_smith(std::move(dense));
        std::sort(d.begin(), d.end());
        out.rank += d.size();
        for (auto& x : d) out.divisors.push_back(std::move(x));
    }
    return out;
}

std::string HomologyGroup::to_string() const {
    std::string s;
    auto add = [&](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
    if (betti == 1) add("Z");
    if (betti > 1) add("Z^" + std::to_string(betti));
    for (const auto& t : torsion) add("Z/" + t.str());
    return s.empty() ? "0" : s;
}

const HomologyGroup& HomologyResult::at(int degree) const {
    static const HomologyGroup zero;
    const int i = degree - first_degree;
    if (i < 0 || i >= static_cast<int>(groups.size())) return zero;
    return groups[i];
}

bool HomologyResult::is_sphere(int d) const {
    for (int deg = first_degree; deg <= std::max(last_degree(), d); ++deg) {
        const HomologyGroup& g = at(deg);
        std::size_t want = 0;
        if (reduced) {
            want = deg == d ? 1 : 0;
        } else if (d >= 0) {
            want = (deg == 0) + (deg == d);
        }
        if (g.betti != want || !g.torsion.empty()) return false;
    }
    return true;
}

bool HomologyResult::is_acyclic() const {
    for (int deg = first_degree; deg <= last_degree(); ++deg) {
        const HomologyGroup& g = at(deg);
        const std::size_t want = (!reduced && deg == 0) ? 1 : 0;
        if (g.betti != want || !g.torsion.empty()) return false;
    }
    return true;
}

bool operator==(const HomologyResult& a, const HomologyResult& b) {
    if (a.reduced != b.reduced) return false;
    const int lo = std::min(a.first_degree, b.first_degree);
    const int hi = std::max(a.last_degree(), b.last_degree());
    for (int d = lo; d <= hi; ++d)
        if (!(a.at(d) == b.at(d))) return false;
    return true;
}

HomologyResult homology(const SimplicialComplex& k, bool reduced) {
    const int top = k.dimension();
    const int low = reduced ? -1 : 0;
    // boundary[k - low] : C_k -> C_{k-1}, for k = low + 1 .. top; slot 0 unused
    const int count = top - low + 1;
    std::vector<SmithForm> forms(std::max(count, 0) + 1);
    std::vector<int> degrees;
    for (int d = low + 1; d <= top; ++d) degrees.push_back(d);
    parallel_for(degrees.size(), [&](std::size_t idx) {
        const int d = degrees[idx];
        const auto& faces = k.faces(d);
        std::vector<SparseRow> rows;
        rows.reserve(faces.size());
        for (const auto& f : faces) {
            SparseRow row;
            for (std::size_t i = 0; i < f.size(); ++i) {
                Face sub;
                sub.reserve(f.size() - 1);
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != i) sub.push_back(f[j]);
                row.emplace_back(static_cast<std::size_t>(k.face_index(sub)), BigInt(i % 2 ? -1 : 1));
            }
            rows.push_back(std::move(row));
        }
        forms[d - low] = smith_normal_form(std::move(rows), k.faces(d - 1).size());
    });
    HomologyResult h;
    h.reduced = reduced;
    h.first_degree = low;
    auto rank_of = [&](int d) -> std::size_t {  // rank of the boundary out of degree d
        return d > low && d <= top ? forms[d - low].rank : 0;
    };
    for (int d = low; d <= std::max(top, low); ++d) {
        HomologyGroup g;
        const std::size_t chains = k.faces(d).size();
        g.betti = chains - rank_of(d) - rank_of(d + 1);
        if (d + 1 > low && d + 1 <= top)
            for (const auto& t : forms[d + 1 - low].divisors)
                if (t > 1) g.torsion.push_back(t);
        std::sort(g.torsion.begin(), g.torsion.end());
        h.groups.push_back(std::move(g));
    }
    return h;
}

HomologyResult sphere_homology(int d) {
    HomologyResult h;
    if (d < 0) return h;
    h.groups.resize(d + 1);
    h.groups[0].betti += 1;
    h.groups[d].betti += 1;
    return h;
}

namespace {

enum class LocalType { interior, boundary, singular };

LocalType local_type(const SimplicialComplex& k, const Face& sigma, int n) {
    HomologyResult h = homology(link(k, sigma), true);
    const int d = static_cast<int>(sigma.size()) - 1;
    if (h.is_sphere(n - d - 1)) return LocalType::interior;
    if (h.is_acyclic()) return LocalType::boundary;
    return LocalType::singular;
}

// Faces of k to inspect: everything, or the faces containing v.
std::vector<Face> faces_to_check(const SimplicialComplex& k, std::optional<Vertex> v) {
    std::vector<Face> out;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d))
            if (!v || std::binary_search(f.begin(), f.end(), *v)) out.push_back(f);
    return out;
}

std::optional<Face> purity_failure(const SimplicialComplex& k, int n, std::optional<Vertex> v) {
    for (const auto& f : k.facets()) {
        if (v && !std::binary_search(f.begin(), f.end(), *v)) continue;
        if (static_cast<int>(f.size()) - 1 != n) return f;
    }
    return std::nullopt;
}

ManifoldCheck no(std::string reason, std::optional<Face> witness) {
    ManifoldCheck c;
    c.reason = std::move(reason);
    c.witness = std::move(witness);
    return c;
}

ManifoldCheck manifold_check(const SimplicialComplex& k, int n, std::optional<Vertex> v) {
    if (v && k.facets_containing(*v).empty()) return no("vertex_not_in_complex", std::nullopt);
    if (!v && k.dimension() != n) return no("wrong_dimension", std::nullopt);
    if (auto f = purity_failure(k, n, v)) return no("not_pure", f);
    const std::vector<Face> faces = faces_to_check(k, v);
    std::vector<char> ok(faces.size());
    parallel_for(faces.size(), [&](std::size_t i) {
        const int d = static_cast<int>(faces[i].size()) - 1;
        ok[i] = homology(link(k, faces[i]), true).is_sphere(n - d - 1);
    });
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!ok[i]) return no("link_not_homology_sphere", faces[i]);
    ManifoldCheck c;
    c.yes = true;
    c.boundary = SimplicialComplex({}, k.vertex_count());
    return c;
}

ManifoldCheck with_boundary_check(const SimplicialComplex& k, int n, std::optional<Vertex> v) {
    if (v && k.facets_containing(*v).empty()) return no("vertex_not_in_complex", std::nullopt);
    if (!v && k.dimension() != n) return no("wrong_dimension", std::nullopt);
    if (auto f = purity_failure(k, n, v)) return no("not_pure", f);
    const std::vector<Face> faces = faces_to_check(k, v);
    std::vector<LocalType> type(faces.size());
    parallel_for(faces.size(), [&](std::size_t i) { type[i] = local_type(k, faces[i], n); });
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (type[i] == LocalType::singular) return no("link_neither_sphere_nor_acyclic", faces[i]);

    FaceMap<LocalType> by_face;
    std::vector<Face> boundary_faces;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        by_face.emplace(faces[i], type[i]);
        if (type[i] == LocalType::boundary) boundary_faces.push_back(faces[i]);
    }
    // boundary faces must be closed under taking (checked) subfaces
    for (const auto& f : boundary_faces) {
        for (std::size_t i = 0; i < f.size() && f.size() > 1; ++i) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = by_face.find(sub);
            if (it != by_face.end() && it->second != LocalType::boundary) return no("boundary_not_closed", sub);
        }
    }
    ManifoldCheck c;
    c.boundary = subcomplex(k, boundary_faces);
    if (!boundary_faces.empty()) {
        ManifoldCheck b = v ? manifold_check(c.boundary, n - 1, v) : manifold_check(c.boundary, n - 1, std::nullopt);
        if (!b.yes) return no("boundary_not_homology_manifold", b.witness);
        Construction dbl = double_along(k, c.boundary);
        const std::size_t half = dbl.complex.vertex_count() / 2;
        std::optional<Vertex> dv = v;
        if (v && !dbl.carrier.empty())
            dv = static_cast<Vertex>(std::find(dbl.carrier.begin(), dbl.carrier.end(), Face{*v}) - dbl.carrier.begin());
        ManifoldCheck d = manifold_check(dbl.complex, n, dv);
        if (!d.yes) {
            // report the face of k carrying the failing face of the double
            std::optional<Face> w;
            if (d.witness) {
                w.emplace();
                for (Vertex u : *d.witness) {
                    const auto base = static_cast<Vertex>(u % half);
                    if (dbl.carrier.empty()) w->push_back(base);
                    else w->insert(w->end(), dbl.carrier[base].begin(), dbl.carrier[base].end());
                }
                std::sort(w->begin(), w->end());
                w->erase(std::unique(w->begin(), w->end()), w->end());
            }
            return no("double_not_homology_manifold", w);
        }
    }
    c.yes = true;
    return c;
}

}  // namespace

ManifoldCheck is_homology_manifold(const SimplicialComplex& k, int n) { return manifold_check(k, n, std::nullopt); }

ManifoldCheck is_homology_manifold_with_boundary(const SimplicialComplex& k, int n) {
    return with_boundary_check(k, n, std::nullopt);
}

ManifoldCheck is_homology_manifold_near(const SimplicialComplex& k, Vertex v, int n) { return manifold_check(k, n, v); }

ManifoldCheck is_homology_manifold_with_boundary_near(const SimplicialComplex& k, Vertex v, int n) {
    return with_boundary_check(k, n, v);
}

}  // namespace orbiclass
