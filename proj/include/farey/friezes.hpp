#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "farey/exact.hpp"
#include "farey/farey_graph.hpp"
#include "farey/tilings.hpp"

namespace farey {

// ---------------------------------------------------------------------------
// Positive rational friezes of width n over (1/N)Z. Storage is the N-scaled
// integer fundamental domain: rows[d][j] = N * m_{j+d, j} for 0 <= d <= n and
// one period 0 <= j < n. The bi-infinite tame extension satisfies
// m_{i+n, j} = m_{i, j+n} = -m_{i, j}.

struct Frieze {
    std::int64_t width = 0;  // n
    Int denom = 1;           // N
    Int gcd_k = 1;           // K
    std::vector<std::vector<Int>> rows;

    bool operator==(const Frieze&) const = default;

    /// N * m_{i,j} of the bi-infinite extension, any (i, j).
    Int ext(std::int64_t i, std::int64_t j) const {
        const std::int64_t n = width;
        std::int64_t d = i - j;
        int sign = 1;
        while (d > n) {
            d -= n;
            sign = -sign;
        }
        while (d < 0) {
            d += n;
            sign = -sign;
        }
        std::int64_t jm = j % n;
        if (jm < 0) jm += n;
        const Int& v = rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(jm)];
        return sign == 1 ? v : Int(-v);
    }

    Rat value(std::int64_t i, std::int64_t j) const { return make_rat(ext(i, j), denom); }
};

struct FriezeReport {
    bool ok = true;
    std::string message;
    std::int64_t i = 0, j = 0;
};

inline FriezeReport validate_frieze(const Frieze& f) {
    const std::int64_t n = f.width;
    if (n < 2) return {false, "width must be at least 2", 0, 0};
    if (f.denom < 1) return {false, "denominator must be positive", 0, 0};
    if (f.rows.size() != static_cast<std::size_t>(n + 1))
        return {false, "expected width+1 rows", 0, 0};
    for (const auto& row : f.rows)
        if (row.size() != static_cast<std::size_t>(n)) return {false, "ragged row storage", 0, 0};
    for (std::int64_t j = 0; j < n; ++j) {
        if (f.rows[0][static_cast<std::size_t>(j)] != 0)
            return {false, "top border row must vanish", j, j};
        if (f.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] != 0)
            return {false, "bottom border row must vanish", j + n, j};
        if (f.rows[1][static_cast<std::size_t>(j)] != f.denom)
            return {false, "second row must be all ones", j + 1, j};
        if (f.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)] != f.denom)
            return {false, "second-last row must be all ones", j + n - 1, j};
    }
    Int n2 = f.denom * f.denom;
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t d = 1; d < n; ++d) {
            std::int64_t i = j + d;
            if (f.ext(i, j) <= 0) return {false, "interior entry not positive", i, j};
            Int diamond =
                f.ext(i, j) * f.ext(i + 1, j + 1) - f.ext(i, j + 1) * f.ext(i + 1, j);
            if (diamond != n2)
                return {false,
                        "diamond rule violated: " + to_string(diamond) + " != " + to_string(n2),
                        i, j};
        }
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t d = 0; d <= n; ++d)
            if (f.ext(j + d, j) != f.ext(j, j + d - n))
                return {false, "glide symmetry violated", j + d, j};
    Int g = 0;
    for (const auto& row : f.rows)
        for (const Int& x : row) g = gcd_int(g, x);
    if (g != f.gcd_k) return {false, "stored gcd disagrees with the entries", 0, 0};
    return {};
}

inline void require_valid(const Frieze& f) {
    FriezeReport r = validate_frieze(f);
    if (!r.ok) throw validation_error("invalid frieze: " + r.message);
}

namespace detail {

inline bool values_strictly_clockwise(const std::vector<ExtRat>& vals) {
    if (vals.size() < 2) return false;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] == vals[0]) return false;
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        if (vals[i] == vals[i + 1]) return false;
        if (!cyclic_clockwise(vals[0], vals[i], vals[i + 1])) return false;
    }
    return true;
}

/// Window vertex of the bi-infinite extension a_{t+n} = -a_t of a closed
/// path presented as its first period plus the formal closing vertex.
inline FareyVertex closed_path_vertex(const FareyPath& p, std::int64_t t) {
    const std::int64_t n = static_cast<std::int64_t>(p.v.size()) - 1;
    std::int64_t off = t - p.base;
    std::int64_t q = off >= 0 ? off / n : -((-off + n - 1) / n);
    std::int64_t r = off - q * n;
    FareyVertex v = p.v[static_cast<std::size_t>(r)];
    return (q % 2 == 0) ? v : -v;
}

}  // namespace detail

/// True when the final vertex is -(first) and the first period is strictly
/// clockwise; the closing vertex is formal, not a distinct circle point.
inline bool is_closed_clockwise_path(const FareyPath& p) {
    PathReport rep = validate_path(p);
    if (!rep.ok) return false;
    if (p.v.size() < 4) return false;
    if (!(p.v.back() == -p.v.front())) return false;
    std::vector<ExtRat> vals;
    for (std::size_t t = 0; t + 1 < p.v.size(); ++t) vals.push_back(vertex_value(p.v[t]));
    return detail::values_strictly_clockwise(vals);
}

/// Theorem-B construction: N * m_{ij} = K (a_j b_i - b_j a_i) over the
/// bi-infinite extension of a minimal closed clockwise path; N = K * R.
inline Frieze frieze_from_path(const FareyPath& p, const Int& k) {
    if (k < 1) throw validation_error("frieze_from_path: K must be positive");
    if (!is_closed_clockwise_path(p))
        throw validation_error("frieze_from_path: path must be closed and clockwise");
    if (!is_minimal(p)) throw validation_error("frieze_from_path: path must be minimal");
    const std::int64_t n = static_cast<std::int64_t>(p.v.size()) - 1;
    Frieze f;
    f.width = n;
    f.denom = k * p.level;
    f.gcd_k = k;
    f.rows.assign(static_cast<std::size_t>(n + 1), std::vector<Int>(static_cast<std::size_t>(n)));
    for (std::int64_t d = 0; d <= n; ++d)
        for (std::int64_t j = 0; j < n; ++j) {
            FareyVertex vj = detail::closed_path_vertex(p, j);
            FareyVertex vi = detail::closed_path_vertex(p, j + d);
            f.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] =
                k * (vj.a * vi.b - vj.b * vi.a);
        }
    require_valid(f);
    return f;
}

/// Theorem-B inverse: scale to the N^2-tiling, decompose one period window,
/// and read off the closed clockwise path (the column path is its negative).
inline FareyPath path_from_frieze(const Frieze& f) {
    require_valid(f);
    const std::int64_t n = f.width;
    Tiling window(0, 0, static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i)
        for (std::int64_t j = 0; j <= n; ++j) window.at(i, j) = f.ext(i, j);
    TilingDecomposition dec = decompose_tiling(window);
    if (dec.l != 1) throw error("path_from_frieze: expected L = 1");
    if (dec.k != f.gcd_k) throw error("path_from_frieze: recovered gcd mismatch");
    if (dec.k * dec.gamma.level != f.denom)
        throw error("path_from_frieze: recovered level mismatch");
    for (std::size_t t = 0; t < dec.gamma.v.size(); ++t)
        if (!(dec.delta.v[t] == -dec.gamma.v[t]))
            throw error("path_from_frieze: column path is not the negated row path");
    if (!is_closed_clockwise_path(dec.gamma))
        throw error("path_from_frieze: recovered path is not closed clockwise");
    return dec.gamma;
}

/// One period of the third row as exact rationals, in the lexicographically
/// least rotation.
inline std::vector<Rat> quiddity_cycle(const Frieze& f) {
    require_valid(f);
    const std::int64_t n = f.width;
    std::vector<Rat> raw;
    for (std::int64_t j = 0; j < n; ++j) raw.push_back(f.value(j + 2, j));
    std::size_t best = 0;
    for (std::size_t s = 1; s < raw.size(); ++s) {
        for (std::size_t t = 0; t < raw.size(); ++t) {
            const Rat& a = raw[(s + t) % raw.size()];
            const Rat& b = raw[(best + t) % raw.size()];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::vector<Rat> out;
    for (std::size_t t = 0; t < raw.size(); ++t) out.push_back(raw[(best + t) % raw.size()]);
    return out;
}

/// Rebuild the frieze of width q.size() whose third row is the given
/// quiddity, via the row recurrence m_{i+1,j} = q_i m_{i,j} - m_{i-1,j}.
inline Frieze frieze_from_quiddity(const std::vector<Rat>& quiddity, const Int& denom) {
    const std::int64_t n = static_cast<std::int64_t>(quiddity.size());
    if (n < 2) throw validation_error("frieze_from_quiddity: need at least width 2");
    if (denom < 1) throw validation_error("frieze_from_quiddity: denominator must be positive");
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n + 1),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (std::int64_t j = 0; j < n; ++j) {
        m[0][static_cast<std::size_t>(j)] = 0;
        m[1][static_cast<std::size_t>(j)] = 1;
    }
    for (std::int64_t d = 2; d <= n; ++d)
        for (std::int64_t j = 0; j < n; ++j) {
            // Row recurrence m_{i+1,j} = lambda_i m_{i,j} - m_{i-1,j} with
            // lambda_i = q_{i-1}, so that the third row is the quiddity.
            const Rat& coef = quiddity[static_cast<std::size_t>((j + d - 2) % n)];
            m[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] =
                coef * m[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(j)] -
                m[static_cast<std::size_t>(d - 2)][static_cast<std::size_t>(j)];
        }
    Frieze f;
    f.width = n;
    f.denom = denom;
    f.rows.assign(static_cast<std::size_t>(n + 1), std::vector<Int>(static_cast<std::size_t>(n)));
    Int g = 0;
    for (std::int64_t d = 0; d <= n; ++d)
        for (std::int64_t j = 0; j < n; ++j) {
            Rat scaled = m[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] * Rat(denom);
            if (!is_integer(scaled))
                throw validation_error("frieze_from_quiddity: entries do not lie in (1/N)Z");
            f.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = rat_num(scaled);
            g = gcd_int(g, rat_num(scaled));
        }
    f.gcd_k = g;
    require_valid(f);
    return f;
}

// ---------------------------------------------------------------------------
// Triangulated polygons and Conway-Coxeter counting.

struct TriangulatedPolygon {
    int m = 0;  // vertex count, clockwise labels 0..m-1
    std::vector<std::pair<int, int>> diagonals;
};

inline void require_valid(const TriangulatedPolygon& p) {
    if (p.m < 3) throw validation_error("polygon needs at least 3 vertices");
    if (p.diagonals.size() != static_cast<std::size_t>(p.m - 3))
        throw validation_error("a full triangulation has m-3 diagonals");
    auto norm = [&](std::pair<int, int> d) {
        if (d.first > d.second) std::swap(d.first, d.second);
        return d;
    };
    for (std::size_t x = 0; x < p.diagonals.size(); ++x) {
        auto [u, v] = norm(p.diagonals[x]);
        if (u < 0 || v >= p.m) throw validation_error("diagonal endpoint out of range");
        if (v - u < 2 || (u == 0 && v == p.m - 1))
            throw validation_error("diagonal joins adjacent vertices");
        for (std::size_t y = x + 1; y < p.diagonals.size(); ++y) {
            auto [a, b] = norm(p.diagonals[y]);
            if (a == u && b == v) throw validation_error("duplicate diagonal");
            bool cross = (u < a && a < v && v < b) || (a < u && u < b && b < v);
            if (cross) throw validation_error("diagonals cross");
        }
    }
}

/// Faces of the triangulation: exactly the pairwise-adjacent vertex triples.
inline std::vector<std::array<int, 3>> triangulation_faces(const TriangulatedPolygon& p) {
    require_valid(p);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(p.m),
                                       std::vector<bool>(static_cast<std::size_t>(p.m), false));
    auto join = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    };
    for (int i = 0; i < p.m; ++i) join(i, (i + 1) % p.m);
    for (auto [u, v] : p.diagonals) join(u, v);
    std::vector<std::array<int, 3>> faces;
    for (int a = 0; a < p.m; ++a)
        for (int b = a + 1; b < p.m; ++b) {
            if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = b + 1; c < p.m; ++c)
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    faces.push_back({a, b, c});
        }
    return faces;
}

/// Farey distance between two polygon vertices by Conway-Coxeter counting:
/// seed 0 at u and 1 at its triangulation neighbours, then close each face
/// by the sum rule.
inline Int cc_farey_distance(const TriangulatedPolygon& p, int u, int v) {
    require_valid(p);
    if (u == v) throw validation_error("cc_farey_distance: vertices must differ");
    if (u < 0 || u >= p.m || v < 0 || v >= p.m)
        throw validation_error("cc_farey_distance: vertex out of range");
    auto faces = triangulation_faces(p);
    std::vector<std::optional<Int>> label(static_cast<std::size_t>(p.m));
    label[static_cast<std::size_t>(u)] = 0;
    for (const auto& f : faces)
        for (int t = 0; t < 3; ++t)
            if (f[static_cast<std::size_t>(t)] == u) {
                label[static_cast<std::size_t>(f[static_cast<std::size_t>((t + 1) % 3)])] = 1;
                label[static_cast<std::size_t>(f[static_cast<std::size_t>((t + 2) % 3)])] = 1;
            }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& f : faces) {
            int known = 0;
            for (int t = 0; t < 3; ++t)
                known += label[static_cast<std::size_t>(f[static_cast<std::size_t>(t)])].has_value();
            if (known != 2) continue;
            for (int t = 0; t < 3; ++t) {
                auto& slot = label[static_cast<std::size_t>(f[static_cast<std::size_t>(t)])];
                if (!slot) {
                    slot = *label[static_cast<std::size_t>(f[static_cast<std::size_t>((t + 1) % 3)])] +
                           *label[static_cast<std::size_t>(f[static_cast<std::size_t>((t + 2) % 3)])];
                    changed = true;
                }
            }
        }
    }
    if (!label[static_cast<std::size_t>(v)]) throw error("cc_farey_distance: propagation failed");
    return *label[static_cast<std::size_t>(v)];
}

// ---------------------------------------------------------------------------
// Weighted triangular polygons: marked vertices v_0..v_{k-1} in clockwise
// order with positive weights such that d_i w_{i-1} w_i is one constant N,
// where d_i is the Farey distance from v_{i-1} to v_i.

struct WeightedPolygon {
    TriangulatedPolygon poly;
    std::vector<std::pair<int, Int>> marked;  // (vertex, weight), clockwise
};

struct WeightedQuiddity {
    Int n;                    // the constant d_i w_{i-1} w_i
    std::vector<Int> values;  // quiddity of the N-scaled integer frieze
};

inline WeightedQuiddity weighted_polygon_quiddity(const WeightedPolygon& wp) {
    require_valid(wp.poly);
    const std::size_t k = wp.marked.size();
    if (k < 3) throw validation_error("weighted polygon needs at least 3 marked vertices");
    for (std::size_t i = 0; i < k; ++i) {
        if (wp.marked[i].second < 1) throw validation_error("weights must be positive");
        if (wp.marked[i].first < 0 || wp.marked[i].first >= wp.poly.m)
            throw validation_error("marked vertex out of range");
    }
    auto vert = [&](std::size_t i) { return wp.marked[i % k].first; };
    auto weight = [&](std::size_t i) -> const Int& { return wp.marked[i % k].second; };

    std::optional<Int> n;
    for (std::size_t i = 0; i < k; ++i) {
        Int d = cc_farey_distance(wp.poly, vert(i + k - 1), vert(i));
        Int prod = d * weight(i + k - 1) * weight(i);
        if (n && *n != prod)
            throw validation_error("inconsistent products d_i w_{i-1} w_i: " + to_string(prod) +
                                   " != " + to_string(*n));
        n = prod;
    }
    WeightedQuiddity out{*n, {}};
    for (std::size_t i = 0; i < k; ++i) {
        Int d2 = cc_farey_distance(wp.poly, vert(i + k - 1), vert(i + 1));
        out.values.push_back(d2 * weight(i + k - 1) * weight(i + 1));
    }
    return out;
}

}  // namespace farey
