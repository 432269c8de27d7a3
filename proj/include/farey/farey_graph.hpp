#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "farey/exact.hpp"

namespace farey {

// ---------------------------------------------------------------------------
// Vertices and paths of the generalized Farey graph F_R: vertices are integer
// pairs (a, b) with gcd(a, b) | R, directed edges (a,b) -> (c,d) when
// a*d - b*c = R. Index sets are intervals of integers containing 0 and 1.

struct FareyVertex {
    Int a, b;

    bool operator==(const FareyVertex&) const = default;
    FareyVertex operator-() const { return {-a, -b}; }
};

struct FareyPath {
    Int level = 1;             // R >= 1
    std::int64_t base = 0;     // index of the first vertex
    std::vector<FareyVertex> v;

    std::int64_t first_index() const { return base; }
    std::int64_t last_index() const { return base + static_cast<std::int64_t>(v.size()) - 1; }

    const FareyVertex& at(std::int64_t index) const {
        if (index < first_index() || index > last_index())
            throw validation_error("path index out of range");
        return v[static_cast<std::size_t>(index - base)];
    }

    bool operator==(const FareyPath&) const = default;
};

inline bool is_edge(const FareyVertex& u, const FareyVertex& w, const Int& level) {
    return u.a * w.b - u.b * w.a == level;
}

struct PathReport {
    bool ok = true;
    std::string message;
    std::int64_t index = 0;  // vertex index or left index of the failing pair
};

inline PathReport validate_path(const FareyPath& p) {
    if (p.level < 1) return {false, "level must be a positive integer", p.base};
    if (p.v.size() < 3) return {false, "path needs at least 3 vertices", p.base};
    if (!(p.first_index() <= 0 && p.last_index() >= 1))
        return {false, "index set must contain 0 and 1", p.base};
    for (std::int64_t i = p.first_index(); i <= p.last_index(); ++i) {
        const FareyVertex& x = p.at(i);
        if (x.a == 0 && x.b == 0) return {false, "vertex (0,0) at index " + std::to_string(i), i};
        if (p.level % gcd_int(x.a, x.b) != 0)
            return {false, "gcd(a,b) does not divide the level at index " + std::to_string(i), i};
    }
    for (std::int64_t i = p.first_index() + 1; i <= p.last_index(); ++i) {
        const FareyVertex& u = p.at(i - 1);
        const FareyVertex& w = p.at(i);
        Int d = u.a * w.b - u.b * w.a;
        if (d != p.level)
            return {false,
                    "violation at pair (" + std::to_string(i - 1) + "," + std::to_string(i) +
                        "): minor " + to_string(d) + " != " + to_string(p.level),
                    i - 1};
    }
    return {};
}

inline void require_valid(const FareyPath& p) {
    PathReport r = validate_path(p);
    if (!r.ok) throw validation_error("invalid path: " + r.message);
}

// ---------------------------------------------------------------------------
// Itineraries. lambda_i = (a_{i-1} b_{i+1} - b_{i-1} a_{i+1}) / R over the
// interior index set; equivalently the unique rationals with
// v_{i-1} + v_{i+1} = lambda_i * v_i.

struct Itinerary {
    Int level = 1;
    std::int64_t base = 0;  // first interior index
    std::vector<Rat> values;

    bool operator==(const Itinerary&) const = default;
};

inline Itinerary itinerary(const FareyPath& p) {
    require_valid(p);
    Itinerary it{p.level, p.base + 1, {}};
    it.values.reserve(p.v.size() - 2);
    for (std::int64_t i = p.first_index() + 1; i < p.last_index(); ++i) {
        const FareyVertex& prev = p.at(i - 1);
        const FareyVertex& next = p.at(i + 1);
        it.values.push_back(make_rat(prev.a * next.b - prev.b * next.a, p.level));
    }
    return it;
}

/// gcd over all pairs i < j of a_j b_i - b_j a_i equals 1.
inline bool is_minimal(const FareyPath& p) {
    require_valid(p);
    Int g = 0;
    for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
        for (std::size_t j = i + 1; j < p.v.size(); ++j) {
            g = gcd_int(g, p.v[j].a * p.v[i].b - p.v[j].b * p.v[i].a);
            if (g == 1) return true;
        }
    return g == 1;
}

/// Rebuild the path with the given itinerary whose first edge is (v0, v1);
/// the extent is the itinerary's interior range widened by one on each side.
inline FareyPath reconstruct_path(const Itinerary& it, const FareyVertex& v0,
                                  const FareyVertex& v1) {
    if (!is_edge(v0, v1, it.level))
        throw validation_error("reconstruct_path: the given pair is not an edge at this level");
    FareyPath p{it.level, it.base - 1, {v0, v1}};
    for (const Rat& lambda : it.values) {
        const FareyVertex& prev = p.v[p.v.size() - 2];
        const FareyVertex& cur = p.v.back();
        Rat ra = Rat(cur.a) * lambda - Rat(prev.a);
        Rat rb = Rat(cur.b) * lambda - Rat(prev.b);
        if (!is_integer(ra) || !is_integer(rb))
            throw validation_error("reconstruct_path: itinerary inconsistent with first edge");
        p.v.push_back({rat_num(ra), rat_num(rb)});
    }
    require_valid(p);
    return p;
}

/// Vertex-wise left action of m (det 1) on a path.
inline FareyPath apply_sl2(const Mat2& m, const FareyPath& p) {
    if (det2(m) != 1) throw validation_error("apply_sl2: determinant must be 1");
    FareyPath q = p;
    for (FareyVertex& x : q.v) {
        Int a = m.a * x.a + m.b * x.b;
        Int b = m.c * x.a + m.d * x.b;
        x = {a, b};
    }
    return q;
}

struct CanonicalPath {
    FareyPath path;   // = apply_sl2(witness, input)
    Mat2 witness;     // element of SL2(Z)
};

/// Canonical representative of the SL2(Z)-orbit of a minimal path. The matrix
/// with the first two vertices as rows is column-reduced to (r 0; s t) with
/// r, t > 0 and 0 <= s < t; that shape is unique in the orbit, so two minimal
/// paths at one level with equal itineraries canonicalize identically.
inline CanonicalPath canonicalize_minimal(const FareyPath& p) {
    if (!is_minimal(p)) throw validation_error("canonicalize_minimal: path is not minimal");
    const FareyVertex& w0 = p.v[0];
    const FareyVertex& w1 = p.v[1];
    // Column operations on rows (a0 b0; a1 b1), accumulated in y (right factor).
    Int x, ycoef;
    Int g = ext_gcd(w0.a, w0.b, x, ycoef);  // x*a0 + y*b0 = g > 0
    Mat2 y{x, -w0.b / g, ycoef, w0.a / g};  // det = 1, (a0 b0) * y = (g, 0)
    Int s = w1.a * y.a + w1.b * y.c;
    Int t = w1.a * y.b + w1.b * y.d;        // g * t = level
    if (t < 0) throw validation_error("canonicalize_minimal: internal sign error");
    // Shift s into [0, t): multiply by (1 0; k 1) on the right.
    Int k = -(s / t);
    if (s + k * t < 0) k += 1;
    Mat2 shift{1, 0, k, 1};
    y = y * shift;
    Mat2 witness = transpose(y);
    CanonicalPath res{apply_sl2(witness, p), witness};
    return res;
}

// ---------------------------------------------------------------------------
// Cyclic order on the extended reals, used for the positivity geometry. A
// vertex (a, b) is read as the point a/b, with b = 0 giving infinity; the
// points +-(a, b) coincide. Comparisons are exact cross-multiplications.

struct ExtRat {
    Int num, den;  // normalized: den > 0 and reduced, or (1, 0) for infinity

    bool is_infinity() const { return den == 0; }
    bool operator==(const ExtRat&) const = default;
};

inline ExtRat make_ext_rat(Int a, Int b) {
    if (a == 0 && b == 0) throw validation_error("extended rational 0/0");
    if (b == 0) return {1, 0};
    Int g = gcd_int(a, b);
    a /= g;
    b /= g;
    if (b < 0) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

inline ExtRat vertex_value(const FareyVertex& v) { return make_ext_rat(v.a, v.b); }

/// Linear comparison with infinity greatest: -1, 0, +1.
inline int ext_cmp(const ExtRat& x, const ExtRat& y) {
    if (x == y) return 0;
    if (x.is_infinity()) return 1;
    if (y.is_infinity()) return -1;
    Int lhs = x.num * y.den - y.num * x.den;
    return lhs < 0 ? -1 : 1;
}

/// True iff (p, q, r) is a clockwise triple on the circle R_inf. With the
/// inherited cyclic order, clockwise means some rotation of the triple is
/// strictly decreasing (infinity treated as the greatest element).
inline bool cyclic_clockwise(const ExtRat& p, const ExtRat& q, const ExtRat& r) {
    if (p == q || q == r || p == r)
        throw validation_error("cyclic_clockwise: points must be pairwise distinct");
    bool pq = ext_cmp(p, q) > 0;
    bool qr = ext_cmp(q, r) > 0;
    bool rp = ext_cmp(r, p) > 0;
    return (pq && qr) || (qr && rp) || (rp && pq);
}

/// Strictly clockwise vertex values completing less than one full cycle.
inline bool is_clockwise_path(const FareyPath& p) {
    require_valid(p);
    std::vector<ExtRat> vals;
    vals.reserve(p.v.size());
    for (const FareyVertex& x : p.v) vals.push_back(vertex_value(x));
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] == vals[0]) return false;
    if (vals.size() >= 2 && vals[1] == vals[0]) return false;
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        if (vals[i] == vals[i + 1]) return false;
        if (!cyclic_clockwise(vals[0], vals[i], vals[i + 1])) return false;
    }
    return true;
}

/// Compatibility of two clockwise paths: the limit 4-tuple
/// (g_-inf, g_inf, d_-inf, d_inf) is clockwise, where the adjacent
/// coincidences g_inf = d_-inf and d_inf = g_-inf are allowed. For finite
/// paths the limits are the endpoint values.
inline bool are_compatible(const FareyPath& g, const FareyPath& d) {
    if (!is_clockwise_path(g) || !is_clockwise_path(d)) return false;
    ExtRat pts[4] = {vertex_value(g.v.front()), vertex_value(g.v.back()),
                     vertex_value(d.v.front()), vertex_value(d.v.back())};
    // Collapse the two allowed coincidences; any other coincidence fails.
    std::vector<ExtRat> cyc;
    cyc.push_back(pts[0]);
    if (!(pts[1] == pts[0])) cyc.push_back(pts[1]);
    if (!(pts[2] == cyc.back())) cyc.push_back(pts[2]);
    if (!(pts[3] == cyc.back() || pts[3] == cyc.front())) cyc.push_back(pts[3]);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        for (std::size_t j = i + 1; j < cyc.size(); ++j)
            if (cyc[i] == cyc[j]) return false;
    if (cyc.size() <= 2) return true;
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
        if (!cyclic_clockwise(cyc[0], cyc[i], cyc[i + 1])) return false;
    return true;
}

/// L*delta: vertices (L*c_j, d_j), a path at level L*S.
inline FareyPath scale_path(const Int& l, const FareyPath& p) {
    if (l < 1) throw validation_error("scale_path: factor must be positive");
    require_valid(p);
    FareyPath q = p;
    q.level = p.level * l;
    for (FareyVertex& x : q.v) x.a *= l;
    return q;
}

// ---------------------------------------------------------------------------
// Horocycles. H(a, b) is centred at a/b with Euclidean diameter 1/b^2, and
// H(a, 0) is the horocycle at infinity of height a^2; H(-a,-b) = H(a,b).

struct Horocycle {
    ExtRat center;
    Rat size;  // diameter for finite centers, height at infinity

    bool operator==(const Horocycle&) const = default;
};

inline Horocycle horocycle(const FareyVertex& v) {
    if (v.a == 0 && v.b == 0) throw validation_error("horocycle: zero vertex");
    if (v.b == 0) return {ExtRat{1, 0}, Rat(v.a * v.a)};
    return {make_ext_rat(v.a, v.b), make_rat(1, v.b * v.b)};
}

/// |a*d - b*c|; two vertices are joined in F_R exactly when this equals R.
inline Int lambda_length(const FareyVertex& u, const FareyVertex& w) {
    return abs_int(u.a * w.b - u.b * w.a);
}

}  // namespace farey
