#include "orbiclass/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "orbiclass/errors.hpp"
#include "orbiclass/homology.hpp"

namespace orbiclass {

namespace {

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) x = -x;
    return out;
}

// Lexicographically least rotation of w or of its inverse.
Word canonical_relator(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse(w)}) {
        Word rot = base;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
    }
    return best;
}

std::size_t generator_of(int letter) { return static_cast<std::size_t>(std::abs(letter) - 1); }

struct Overflow {};

}  // namespace

std::size_t Presentation::total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "<" << generators << " generators | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
        if (i) os << ", ";
        for (int x : relators[i]) os << (x > 0 ? "g" : "G") << std::abs(x) - 1 << " ";
    }
    os << ">";
    return os.str();
}

Word cyclically_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Presentation pi1_presentation(const SimplicialComplex& k) {
    if (k.empty()) throw InvalidComplex("fundamental group of the empty complex");
    const auto& vertices = k.faces(0);
    const auto& edges = k.faces(1);
    std::map<Vertex, std::vector<std::size_t>> incident;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e][0]].push_back(e);
        incident[edges[e][1]].push_back(e);
    }
    // breadth-first spanning tree from the smallest vertex
    std::set<Vertex> reached{vertices.front().front()};
    std::vector<bool> in_tree(edges.size(), false);
    std::deque<Vertex> queue{vertices.front().front()};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (auto e : incident[v]) {
            Vertex w = edges[e][0] == v ? edges[e][1] : edges[e][0];
            if (reached.insert(w).second) {
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    if (reached.size() != vertices.size()) throw InvalidComplex("fundamental group of a disconnected complex");

    Presentation p;
    std::vector<int> letter(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!in_tree[e]) letter[e] = static_cast<int>(++p.generators);
    auto edge_letter = [&](Vertex a, Vertex b) {
        const int sign = a < b ? 1 : -1;
        Face f{std::min(a, b), std::max(a, b)};
        return sign * letter[static_cast<std::size_t>(k.face_index(f))];
    };
    for (const auto& t : k.faces(2)) {
        Word w;
        for (int x : {edge_letter(t[0], t[1]), edge_letter(t[1], t[2]), edge_letter(t[2], t[0])})
            if (x != 0) w.push_back(x);
        p.relators.push_back(std::move(w));
    }
    return p;
}

Presentation simplify(const Presentation& input) {
    std::vector<bool> alive(input.generators, true);
    std::vector<Word> rels = input.relators;

    auto normalize = [&] {
        std::set<Word> seen;
        std::vector<Word> out;
        for (const auto& r : rels) {
            Word c = cyclically_reduce(r);
            if (c.empty()) continue;
            c = canonical_relator(c);
            if (seen.insert(c).second) out.push_back(std::move(c));
        }
        std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        rels = std::move(out);
    };
    // replace generator g by the word `image` everywhere
    auto substitute = [&](std::size_t g, const Word& image) {
        const Word image_inv = inverse(image);
        for (auto& r : rels) {
            Word out;
            for (int x : r) {
                if (generator_of(x) != g) {
                    out.push_back(x);
                } else {
                    const Word& part = x > 0 ? image : image_inv;
                    out.insert(out.end(), part.begin(), part.end());
                }
            }
            r = std::move(out);
        }
        alive[g] = false;
    };

    // Union-find style map from generators to a signed letter or the identity.
    constexpr int kAlive = 0, kKilled = std::numeric_limits<int>::min();
    std::vector<int> image_of(input.generators, kAlive);
    std::function<int(int)> resolve = [&](int x) -> int {
        const std::size_t g = generator_of(x);
        const int target = image_of[g];
        if (target == kAlive) return x;
        if (target == kKilled) return 0;
        const int r = resolve(target);
        image_of[g] = r != 0 ? r : kKilled;
        return x > 0 ? r : -r;
    };
    // Length-1 relators kill generators and length-2 relators identify two of
    // them; one pass collects all of these, then every relator is rewritten.
    auto cheap_pass = [&] {
        bool changed = false;
        for (const auto& r : rels) {
            if (r.size() > 2) break;  // relators are sorted by length
            if (r.size() == 1) {
                const int x = resolve(r[0]);
                if (x != 0) image_of[generator_of(x)] = kKilled, changed = true;
                continue;
            }
            const int x = resolve(r[0]), y = resolve(r[1]);
            if (x == 0 && y == 0) continue;
            if (x == 0 || y == 0) {
                image_of[generator_of(x == 0 ? y : x)] = kKilled;
                changed = true;
            } else if (generator_of(x) != generator_of(y)) {
                // x y = 1: the later generator becomes the inverse of the other letter
                const int keep = generator_of(x) < generator_of(y) ? x : y;
                const int drop = keep == x ? y : x;
                image_of[generator_of(drop)] = drop > 0 ? -keep : keep;
                changed = true;
            }
        }
        if (!changed) return false;
        for (auto& r : rels) {
            Word out;
            for (int x : r)
                if (int y = resolve(x); y != 0) out.push_back(y);
            r = std::move(out);
        }
        for (std::size_t g = 0; g < input.generators; ++g)
            if (image_of[g] != kAlive) alive[g] = false;
        normalize();
        return true;
    };

    normalize();
    while (cheap_pass()) {
    }
    // from here on the total relator length may not exceed its current value
    const std::size_t limit = [&] {
        std::size_t n = 0;
        for (const auto& r : rels) n += r.size();
        return n;
    }();
    for (;;) {
        if (cheap_pass()) continue;
        // generator occurring once in a relator: solve for it
        std::size_t total = 0;
        std::vector<std::size_t> occurrences(input.generators, 0);
        for (const auto& r : rels) {
            total += r.size();
            for (int x : r) ++occurrences[generator_of(x)];
        }
        std::size_t best_rel = rels.size(), best_gen = 0;
        long long best_growth = 0;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const Word& r = rels[i];
            std::map<std::size_t, int> count;
            for (int x : r) ++count[generator_of(x)];
            for (const auto& [g, c] : count) {
                if (c != 1) continue;
                const long long len = static_cast<long long>(r.size());
                const long long growth =
                    static_cast<long long>(occurrences[g] - 1) * (len - 2) - len;
                if (best_rel == rels.size() || growth < best_growth) {
                    best_rel = i;
                    best_gen = g;
                    best_growth = growth;
                }
            }
        }
        if (best_rel == rels.size()) break;
        if (static_cast<long long>(total) + best_growth > static_cast<long long>(limit)) break;
        // r = u g^e v  =>  g^e = u^-1 v^-1  (as a cyclic word: g^e = (v u)^-1)
        Word r = rels[best_rel];
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
        auto pos = std::find_if(r.begin(), r.end(), [&](int x) { return generator_of(x) == best_gen; });
        const int e = *pos;
        Word rest(pos + 1, r.end());
        rest.insert(rest.end(), r.begin(), pos);
        Word image = inverse(rest);
        if (e < 0) image = rest;
        substitute(best_gen, image);
        normalize();
    }

    // renumber surviving generators
    std::vector<int> number(input.generators, 0);
    Presentation out;
    for (std::size_t g = 0; g < input.generators; ++g)
        if (alive[g]) number[g] = static_cast<int>(++out.generators);
    for (const auto& r : rels) {
        Word w;
        for (int x : r) w.push_back(x > 0 ? number[generator_of(x)] : -number[generator_of(x)]);
        out.relators.push_back(std::move(w));
    }
    return out;
}

CosetResult coset_enumeration(const Presentation& p, std::size_t bound) {
    const std::size_t cols = 2 * p.generators;
    auto column = [](int letter) {
        return static_cast<std::size_t>(2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0));
    };
    auto inv = [](std::size_t c) { return c ^ 1; };
    std::vector<std::vector<std::size_t>> rel_cols;
    for (const auto& r : p.relators) {
        std::vector<std::size_t> w;
        for (int x : r) w.push_back(column(x));
        if (!w.empty()) rel_cols.push_back(std::move(w));
    }

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> table(cols, none);  // row-major, cols entries per coset
    std::vector<std::size_t> parent{0};
    auto at = [&](std::size_t c, std::size_t x) -> std::size_t& { return table[c * cols + x]; };

    auto define = [&](std::size_t a, std::size_t x) {
        if (parent.size() >= bound) throw Overflow{};
        const std::size_t b = parent.size();
        parent.push_back(b);
        table.resize(table.size() + cols, none);
        at(a, x) = b;
        at(b, inv(x)) = a;
    };
    auto rep = [&](std::size_t c) {
        std::size_t r = c;
        while (parent[r] != r) r = parent[r];
        while (parent[c] != r) {
            std::size_t next = parent[c];
            parent[c] = r;
            c = next;
        }
        return r;
    };
    std::vector<std::size_t> queue;
    auto merge = [&](std::size_t a, std::size_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        parent[std::max(a, b)] = std::min(a, b);
        queue.push_back(std::max(a, b));
    };
    auto coincidence = [&](std::size_t a, std::size_t b) {
        queue.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const std::size_t g = queue[i];
            for (std::size_t x = 0; x < cols; ++x) {
                const std::size_t d = at(g, x);
                if (d == none) continue;
                at(d, inv(x)) = none;
                const std::size_t mu = rep(g), nu = rep(d);
                if (at(mu, x) != none) {
                    merge(nu, at(mu, x));
                } else if (at(nu, inv(x)) != none) {
                    merge(mu, at(nu, inv(x)));
                } else {
                    at(mu, x) = nu;
                    at(nu, inv(x)) = mu;
                }
            }
        }
    };
    auto scan_and_fill = [&](std::size_t a, const std::vector<std::size_t>& w) {
        std::size_t f = a, b = a;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, w[i]) != none) f = at(f, w[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(b, inv(w[j])) != none) b = at(b, inv(w[j--]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, inv(w[i])) = f;
                return;
            }
            define(f, w[i]);
        }
    };

    CosetResult result;
    try {
        for (std::size_t a = 0; a < parent.size(); ++a) {
            if (parent[a] != a) continue;
            for (const auto& w : rel_cols) {
                scan_and_fill(a, w);
                if (parent[a] != a) break;
            }
            if (parent[a] != a) continue;
            for (std::size_t x = 0; x < cols; ++x)
                if (at(a, x) == none) define(a, x);
        }
    } catch (const Overflow&) {
        result.rows_used = parent.size();
        return result;
    }
    result.closed = true;
    result.rows_used = parent.size();
    for (std::size_t a = 0; a < parent.size(); ++a) result.order += parent[a] == a;
    return result;
}

std::vector<std::string> abelian_invariants(const Presentation& p) {
    std::vector<SparseRow> rows;
    for (const auto& r : p.relators) {
        std::map<std::size_t, long long> sums;
        for (int x : r) sums[generator_of(x)] += x > 0 ? 1 : -1;
        SparseRow row;
        for (const auto& [g, s] : sums)
            if (s != 0) row.emplace_back(g, BigInt(s));
        rows.push_back(std::move(row));
    }
    SmithForm snf = smith_normal_form(std::move(rows), p.generators);
    std::vector<std::string> out;
    for (const auto& d : snf.divisors)
        if (d > 1) out.push_back("Z/" + d.str());
    for (std::size_t i = snf.rank; i < p.generators; ++i) out.push_back("Z");
    return out;
}

}  // namespace orbiclass
