#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "farey/exact.hpp"
#include "farey/farey_graph.hpp"
#include "farey/tilings.hpp"

namespace farey {

// ---------------------------------------------------------------------------
// Bhargava cubes: 2x2x2 integer tensors. Axis order everywhere is
// (layer, row, column); a cube prints as two 2x2 layers side by side, and the
// JSON nesting is cube[layer][row][col].

struct BhargavaCube {
    std::array<Int, 8> m{};  // index (p0 << 2) | (p1 << 1) | p2

    Int& at(int p0, int p1, int p2) { return m[static_cast<std::size_t>(p0 * 4 + p1 * 2 + p2)]; }
    const Int& at(int p0, int p1, int p2) const {
        return m[static_cast<std::size_t>(p0 * 4 + p1 * 2 + p2)];
    }

    bool operator==(const BhargavaCube&) const = default;
    auto operator<=>(const BhargavaCube&) const = default;
};

/// The cube (1 0; 0 0 | 0 0; 0 1) of hyperdeterminant 1.
inline BhargavaCube cube_identity() {
    BhargavaCube c;
    c.at(0, 0, 0) = 1;
    c.at(1, 1, 1) = 1;
    return c;
}

/// Same with the last corner negated; hyperdeterminant 1 as well.
inline BhargavaCube cube_identity_dagger() {
    BhargavaCube c;
    c.at(0, 0, 0) = 1;
    c.at(1, 1, 1) = -1;
    return c;
}

/// Cayley hyperdeterminant, expanded form.
inline Int hyperdet(const BhargavaCube& c) {
    Int b = c.at(0, 0, 0) * c.at(1, 1, 1) - c.at(1, 0, 1) * c.at(0, 1, 0);
    Int cc = c.at(1, 0, 0) * c.at(0, 1, 1) - c.at(0, 0, 1) * c.at(1, 1, 0);
    Int d1 = c.at(0, 0, 0) * c.at(0, 1, 1) - c.at(0, 0, 1) * c.at(0, 1, 0);
    Int d2 = c.at(1, 0, 0) * c.at(1, 1, 1) - c.at(1, 0, 1) * c.at(1, 1, 0);
    Int sum = b + cc;
    return sum * sum - 4 * d1 * d2;
}

/// Equivalent determinant-difference form, kept as a cross-check.
inline Int hyperdet_det_form(const BhargavaCube& c) {
    Mat2 m1{c.at(0, 0, 0), c.at(0, 0, 1), c.at(0, 1, 0), c.at(0, 1, 1)};
    Mat2 m2{c.at(1, 0, 0), c.at(1, 0, 1), c.at(1, 1, 0), c.at(1, 1, 1)};
    Mat2 sum{m1.a + m2.a, m1.b + m2.b, m1.c + m2.c, m1.d + m2.d};
    Mat2 diff{m1.a - m2.a, m1.b - m2.b, m1.c - m2.c, m1.d - m2.d};
    Int half = det2(sum) - det2(diff);  // always divisible by 4... times 1/4 below
    return half * half / 4 - 4 * det2(m1) * det2(m2);
}

struct Sl2Triple {
    Mat2 t0 = Mat2::identity(), t1 = Mat2::identity(), t2 = Mat2::identity();

    bool operator==(const Sl2Triple&) const = default;

    friend Sl2Triple operator*(const Sl2Triple& x, const Sl2Triple& y) {
        return {x.t0 * y.t0, x.t1 * y.t1, x.t2 * y.t2};
    }
};

inline Sl2Triple inverse_triple(const Sl2Triple& t) {
    return {inverse_unimodular(t.t0), inverse_unimodular(t.t1), inverse_unimodular(t.t2)};
}

/// Left action: component i of the triple acts on cube axis i. General 2x2
/// integer matrices are allowed; then Det scales by (det t0 det t1 det t2)^2.
inline BhargavaCube act_triple(const Sl2Triple& t, const BhargavaCube& c) {
    auto entry = [](const Mat2& m, int y, int p) -> const Int& {
        return y == 0 ? (p == 0 ? m.a : m.b) : (p == 0 ? m.c : m.d);
    };
    BhargavaCube r;
    for (int y0 = 0; y0 < 2; ++y0)
        for (int y1 = 0; y1 < 2; ++y1)
            for (int y2 = 0; y2 < 2; ++y2) {
                Int acc = 0;
                for (int p0 = 0; p0 < 2; ++p0)
                    for (int p1 = 0; p1 < 2; ++p1)
                        for (int p2 = 0; p2 < 2; ++p2)
                            acc += entry(t.t0, y0, p0) * entry(t.t1, y1, p1) *
                                   entry(t.t2, y2, p2) * c.at(p0, p1, p2);
                r.at(y0, y1, y2) = acc;
            }
    return r;
}

inline bool stabilizes(const Sl2Triple& t, const BhargavaCube& c) {
    return act_triple(t, c) == c;
}

/// Stabilizer of the identity cube in SL2(Z)^3: the Klein four-group of
/// paired sign flips.
inline std::array<Sl2Triple, 4> unit_cube_stabilizer() {
    Mat2 i = Mat2::identity();
    Mat2 n = -i;
    return {Sl2Triple{i, i, i}, Sl2Triple{i, n, n}, Sl2Triple{n, i, n}, Sl2Triple{n, n, i}};
}

/// The six 2x2 cross sections of a cube (fix one axis at one index), in the
/// order (axis 0 idx 0, axis 0 idx 1, axis 1 idx 0, ..., axis 2 idx 1).
inline std::array<Int, 6> cube_cross_dets(const BhargavaCube& c) {
    auto det_fix0 = [&](int t) {
        return c.at(t, 0, 0) * c.at(t, 1, 1) - c.at(t, 0, 1) * c.at(t, 1, 0);
    };
    auto det_fix1 = [&](int t) {
        return c.at(0, t, 0) * c.at(1, t, 1) - c.at(0, t, 1) * c.at(1, t, 0);
    };
    auto det_fix2 = [&](int t) {
        return c.at(0, 0, t) * c.at(1, 1, t) - c.at(0, 1, t) * c.at(1, 0, t);
    };
    return {det_fix0(0), det_fix0(1), det_fix1(0), det_fix1(1), det_fix2(0), det_fix2(1)};
}

// ---------------------------------------------------------------------------
// Hypertilings: 3-D integer arrays indexed by three intervals (each holding
// 0 and 1) whose every contiguous 2x2x2 subblock shares one hyperdeterminant.

struct Hypertiling {
    std::array<std::int64_t, 3> base{0, 0, 0};
    std::array<std::size_t, 3> dim{0, 0, 0};
    std::vector<Int> e;

    Hypertiling() = default;
    Hypertiling(std::array<std::int64_t, 3> b, std::array<std::size_t, 3> d)
        : base(b), dim(d), e(d[0] * d[1] * d[2]) {}

    std::int64_t end(int axis) const {
        return base[static_cast<std::size_t>(axis)] +
               static_cast<std::int64_t>(dim[static_cast<std::size_t>(axis)]) - 1;
    }

    Int& at(std::int64_t x0, std::int64_t x1, std::int64_t x2) {
        return e[((static_cast<std::size_t>(x0 - base[0]) * dim[1]) +
                  static_cast<std::size_t>(x1 - base[1])) *
                     dim[2] +
                 static_cast<std::size_t>(x2 - base[2])];
    }
    const Int& at(std::int64_t x0, std::int64_t x1, std::int64_t x2) const {
        return e[((static_cast<std::size_t>(x0 - base[0]) * dim[1]) +
                  static_cast<std::size_t>(x1 - base[1])) *
                     dim[2] +
                 static_cast<std::size_t>(x2 - base[2])];
    }

    bool operator==(const Hypertiling&) const = default;
};

inline void require_index_convention(const Hypertiling& h) {
    for (int a = 0; a < 3; ++a) {
        if (h.dim[static_cast<std::size_t>(a)] < 3)
            throw validation_error("hypertiling needs length >= 3 on every axis");
        if (!(h.base[static_cast<std::size_t>(a)] <= 0 && h.end(a) >= 1))
            throw validation_error("hypertiling index ranges must contain 0 and 1");
    }
}

inline BhargavaCube subcube_at(const Hypertiling& h, std::int64_t x0, std::int64_t x1,
                               std::int64_t x2) {
    BhargavaCube c;
    for (int p0 = 0; p0 < 2; ++p0)
        for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2) c.at(p0, p1, p2) = h.at(x0 + p0, x1 + p1, x2 + p2);
    return c;
}

/// Common hyperdeterminant of all 2x2x2 subblocks; throws locating the first
/// disagreement.
inline Int verify_hypertiling(const Hypertiling& h) {
    for (int a = 0; a < 3; ++a)
        if (h.dim[static_cast<std::size_t>(a)] < 2)
            throw validation_error("verify_hypertiling: need at least 2 on every axis");
    Int n = hyperdet(subcube_at(h, h.base[0], h.base[1], h.base[2]));
    for (std::int64_t x0 = h.base[0]; x0 < h.end(0); ++x0)
        for (std::int64_t x1 = h.base[1]; x1 < h.end(1); ++x1)
            for (std::int64_t x2 = h.base[2]; x2 < h.end(2); ++x2) {
                Int d = hyperdet(subcube_at(h, x0, x1, x2));
                if (d != n)
                    throw validation_error(
                        "inconsistent hyperdeterminant at (" + std::to_string(x0) + "," +
                        std::to_string(x1) + "," + std::to_string(x2) + "): " + to_string(d) +
                        " != " + to_string(n));
            }
    return n;
}

inline std::optional<Int> hypertiling_determinant(const Hypertiling& h) {
    try {
        return verify_hypertiling(h);
    } catch (const validation_error&) {
        return std::nullopt;
    }
}

/// A 3x2 stack witnessing a synchronisation failure: columns are two
/// parallel 1x1x3 fibers of one 2x2x3-shaped subblock.
struct StackViolation {
    Int a, b, c, d, e, f;  // rows (a b; c d; e f): a*d - b*c != c*f - d*e
    int axis;
    std::array<std::int64_t, 3> corner;
};

inline std::vector<StackViolation> unsynchronised_stacks(const Hypertiling& h) {
    std::vector<StackViolation> out;
    // For each axis `a` giving the fiber direction, slide a 2x2x3 window and
    // compare all pairs of its four parallel fibers.
    for (int a = 0; a < 3; ++a) {
        int u = (a + 1) % 3, v = (a + 2) % 3;
        std::array<std::int64_t, 3> x;
        for (x[0] = h.base[0]; x[0] <= h.end(0); ++x[0])
            for (x[1] = h.base[1]; x[1] <= h.end(1); ++x[1])
                for (x[2] = h.base[2]; x[2] <= h.end(2); ++x[2]) {
                    std::size_t sa = static_cast<std::size_t>(a);
                    std::size_t su = static_cast<std::size_t>(u);
                    std::size_t sv = static_cast<std::size_t>(v);
                    if (x[sa] + 2 > h.end(a) || x[su] + 1 > h.end(u) || x[sv] + 1 > h.end(v))
                        continue;
                    std::array<std::array<std::int64_t, 3>, 4> offs;
                    int k = 0;
                    for (int du = 0; du < 2; ++du)
                        for (int dv = 0; dv < 2; ++dv) {
                            std::array<std::int64_t, 3> o = x;
                            o[su] += du;
                            o[sv] += dv;
                            offs[static_cast<std::size_t>(k++)] = o;
                        }
                    auto fiber = [&](const std::array<std::int64_t, 3>& o, int step) {
                        std::array<std::int64_t, 3> p = o;
                        p[sa] += step;
                        return h.at(p[0], p[1], p[2]);
                    };
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) {
                            Int av = fiber(offs[static_cast<std::size_t>(i)], 0);
                            Int bv = fiber(offs[static_cast<std::size_t>(j)], 0);
                            Int cv = fiber(offs[static_cast<std::size_t>(i)], 1);
                            Int dv = fiber(offs[static_cast<std::size_t>(j)], 1);
                            Int ev = fiber(offs[static_cast<std::size_t>(i)], 2);
                            Int fv = fiber(offs[static_cast<std::size_t>(j)], 2);
                            if (av * dv - bv * cv != cv * fv - dv * ev)
                                out.push_back({av, bv, cv, dv, ev, fv, a, x});
                        }
                }
    }
    return out;
}

inline bool is_synchronised(const Hypertiling& h) { return unsynchronised_stacks(h).empty(); }

/// 2-D restriction with inherited index offsets. Axis 0 sections keep
/// (rows, cols) = (axis 1, axis 2); the other two use the remaining axes in
/// increasing order.
inline Tiling cross_section(const Hypertiling& h, int axis, std::int64_t index) {
    if (axis < 0 || axis > 2) throw validation_error("cross_section: axis must be 0, 1 or 2");
    std::size_t sa = static_cast<std::size_t>(axis);
    if (index < h.base[sa] || index > h.end(axis))
        throw validation_error("cross_section: index out of range");
    int u = axis == 0 ? 1 : 0;
    int v = axis == 2 ? 1 : 2;
    std::size_t su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    Tiling t(h.base[su], h.base[sv], h.dim[su], h.dim[sv]);
    std::array<std::int64_t, 3> x;
    x[sa] = index;
    for (x[su] = h.base[su]; x[su] <= h.end(u); ++x[su])
        for (x[sv] = h.base[sv]; x[sv] <= h.end(v); ++x[sv])
            t.at(x[su], x[sv]) = h.at(x[0], x[1], x[2]);
    return t;
}

/// Tame: synchronised with every cross section a tame integer tiling.
inline bool is_tame_hypertiling(const Hypertiling& h, const Int& zero_bound = 0) {
    auto n = hypertiling_determinant(h);
    if (!n || *n == 0) return false;
    if (!is_synchronised(h)) return false;
    for (int a = 0; a < 3; ++a)
        for (std::int64_t i = h.base[static_cast<std::size_t>(a)]; i <= h.end(a); ++i)
            if (!is_tame(cross_section(h, a, i), zero_bound)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Three-term recurrences along each axis of a tame hypertiling.

struct HyperRecurrence {
    std::array<std::int64_t, 3> base{0, 0, 0};  // first interior index per axis
    std::array<std::vector<Rat>, 3> coeffs;
};

inline HyperRecurrence hyper_recurrence(const Hypertiling& h) {
    require_index_convention(h);
    HyperRecurrence rec;
    for (int a = 0; a < 3; ++a) {
        std::size_t sa = static_cast<std::size_t>(a);
        int u = (a + 1) % 3, v = (a + 2) % 3;
        std::size_t su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
        rec.base[sa] = h.base[sa] + 1;
        for (std::int64_t i = h.base[sa] + 1; i < h.end(a); ++i) {
            std::optional<Rat> coef;
            std::array<std::int64_t, 3> x;
            x[sa] = i;
            for (x[su] = h.base[su]; x[su] <= h.end(u); ++x[su])
                for (x[sv] = h.base[sv]; x[sv] <= h.end(v); ++x[sv]) {
                    std::array<std::int64_t, 3> lo = x, hi = x;
                    lo[sa] -= 1;
                    hi[sa] += 1;
                    Int num = h.at(lo[0], lo[1], lo[2]) + h.at(hi[0], hi[1], hi[2]);
                    const Int& mid = h.at(x[0], x[1], x[2]);
                    if (mid == 0) {
                        if (num != 0)
                            throw validation_error("hyper_recurrence: fiber violates recurrence");
                        continue;
                    }
                    Rat c = make_rat(num, mid);
                    if (coef && *coef != c)
                        throw validation_error("hyper_recurrence: inconsistent fibers");
                    coef = c;
                }
            if (!coef) throw validation_error("hyper_recurrence: zero slice, degenerate input");
            rec.coeffs[sa].push_back(*coef);
        }
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Theorem-D construction. The first path runs along axis 1 (rows), the
// second along axis 2 (columns), the third along axis 0 (layers); component
// slots of the cube pair up the same way.

inline Hypertiling construct_hypertiling(const BhargavaCube& a, const FareyPath& rows,
                                         const FareyPath& cols, const FareyPath& layers) {
    if (hyperdet(a) == 0) throw validation_error("construct_hypertiling: cube is singular");
    if (!is_minimal(rows) || !is_minimal(cols) || !is_minimal(layers))
        throw validation_error("construct_hypertiling: paths must be minimal");
    Hypertiling h({layers.base, rows.base, cols.base},
                  {layers.v.size(), rows.v.size(), cols.v.size()});
    auto comp = [](const FareyVertex& v, int p) -> const Int& { return p == 0 ? v.a : v.b; };
    for (std::int64_t x0 = h.base[0]; x0 <= h.end(0); ++x0)
        for (std::int64_t x1 = h.base[1]; x1 <= h.end(1); ++x1)
            for (std::int64_t x2 = h.base[2]; x2 <= h.end(2); ++x2) {
                Int acc = 0;
                for (int q0 = 0; q0 < 2; ++q0)
                    for (int q1 = 0; q1 < 2; ++q1)
                        for (int q2 = 0; q2 < 2; ++q2)
                            acc += a.at(q0, q1, q2) * comp(layers.at(x0), q0) *
                                   comp(rows.at(x1), q1) * comp(cols.at(x2), q2);
                h.at(x0, x1, x2) = acc;
            }
    return h;
}

struct HyperDecomposition {
    BhargavaCube cube;
    FareyPath rows, cols, layers;
};

namespace detail {

/// Unimodular W (det +1) whose rows 2.. annihilate the axis slices, found
/// from the Smith form of the slice relation matrix.
inline IntMatrix slice_killer(const std::vector<std::vector<Int>>& slices) {
    const std::size_t k = slices.size();
    const std::size_t w = slices[0].size();
    // Rational coordinates of slice x in the basis (slice 0, slice 1).
    std::size_t p = w, q = w;
    for (std::size_t i = 0; i < w && p == w; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            if (i == j) continue;
            if (slices[0][i] * slices[1][j] - slices[0][j] * slices[1][i] != 0) {
                p = i;
                q = j;
                break;
            }
        }
    if (p == w) throw validation_error("decompose_hypertiling: leading slices are dependent");
    Int dd = slices[0][p] * slices[1][q] - slices[0][q] * slices[1][p];

    IntMatrix rel(k - 2, k);
    for (std::size_t x = 2; x < k; ++x) {
        Rat lam = make_rat(slices[x][p] * slices[1][q] - slices[x][q] * slices[1][p], dd);
        Rat mu = make_rat(slices[0][p] * slices[x][q] - slices[0][q] * slices[x][p], dd);
        for (std::size_t i = 0; i < w; ++i)
            if (Rat(slices[x][i]) != lam * Rat(slices[0][i]) + mu * Rat(slices[1][i]))
                throw validation_error("decompose_hypertiling: slice is not a combination "
                                       "of the first two (input not tame)");
        Int eta = boost::multiprecision::lcm(rat_den(lam), rat_den(mu));
        Int ln = rat_num(lam) * (eta / rat_den(lam));
        Int mn = rat_num(mu) * (eta / rat_den(mu));
        Int g = gcd_int(gcd_int(eta, ln), mn);
        rel.at(x - 2, 0) = -ln / g;
        rel.at(x - 2, 1) = -mn / g;
        rel.at(x - 2, x) = eta / g;
    }

    SmithResult snf = smith_normal_form(rel);
    // rel = X D Y with D = (diag | 0): rows 0..k-3 of Y annihilate the
    // slices; move them below the two basis rows.
    IntMatrix wmat(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        wmat.at(0, j) = snf.v.at(k - 2, j);
        wmat.at(1, j) = snf.v.at(k - 1, j);
        for (std::size_t r = 0; r + 2 < k; ++r) wmat.at(r + 2, j) = snf.v.at(r, j);
    }
    if (det(wmat) == -1)
        for (std::size_t j = 0; j < k; ++j) wmat.at(2, j) = -wmat.at(2, j);
    // Annihilation check.
    for (std::size_t r = 2; r < k; ++r)
        for (std::size_t i = 0; i < w; ++i) {
            Int acc = 0;
            for (std::size_t x = 0; x < k; ++x) acc += wmat.at(r, x) * slices[x][i];
            if (acc != 0) throw error("decompose_hypertiling: annihilator failed");
        }
    return wmat;
}

inline std::vector<std::vector<Int>> axis_slices(const Hypertiling& h, int axis) {
    std::size_t sa = static_cast<std::size_t>(axis);
    int u = (axis + 1) % 3, v = (axis + 2) % 3;
    std::size_t su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    std::vector<std::vector<Int>> slices(h.dim[sa]);
    for (std::size_t off = 0; off < h.dim[sa]; ++off) {
        std::array<std::int64_t, 3> x;
        x[sa] = h.base[sa] + static_cast<std::int64_t>(off);
        slices[off].reserve(h.dim[su] * h.dim[sv]);
        for (x[su] = h.base[su]; x[su] <= h.end(u); ++x[su])
            for (x[sv] = h.base[sv]; x[sv] <= h.end(v); ++x[sv])
                slices[off].push_back(h.at(x[0], x[1], x[2]));
    }
    return slices;
}

/// Contract axis `axis` of h with the square matrix w (positions, not
/// indices): new(y, ...) = sum_x w[y][x] old(x, ...).
inline Hypertiling contract_axis(const Hypertiling& h, int axis, const IntMatrix& w) {
    std::size_t sa = static_cast<std::size_t>(axis);
    Hypertiling r(h.base, h.dim);
    std::array<std::int64_t, 3> y;
    for (y[0] = h.base[0]; y[0] <= h.end(0); ++y[0])
        for (y[1] = h.base[1]; y[1] <= h.end(1); ++y[1])
            for (y[2] = h.base[2]; y[2] <= h.end(2); ++y[2]) {
                std::size_t ypos = static_cast<std::size_t>(y[sa] - h.base[sa]);
                Int acc = 0;
                for (std::size_t x = 0; x < h.dim[sa]; ++x) {
                    std::array<std::int64_t, 3> src = y;
                    src[sa] = h.base[sa] + static_cast<std::int64_t>(x);
                    const Int& coef = w.at(ypos, x);
                    if (coef != 0) acc += coef * h.at(src[0], src[1], src[2]);
                }
                r.at(y[0], y[1], y[2]) = acc;
            }
    return r;
}

}  // namespace detail

/// Theorem-D inverse: recover a nonsingular cube and three minimal paths
/// with construct_hypertiling(cube, rows, cols, layers) == h exactly.
inline HyperDecomposition decompose_hypertiling(const Hypertiling& h) {
    require_index_convention(h);
    Int n = verify_hypertiling(h);
    if (n == 0) throw validation_error("decompose_hypertiling: N must be nonzero");

    std::array<IntMatrix, 3> wmat, umat;
    for (int a = 0; a < 3; ++a) {
        wmat[static_cast<std::size_t>(a)] = detail::slice_killer(detail::axis_slices(h, a));
        umat[static_cast<std::size_t>(a)] =
            inverse_unimodular(wmat[static_cast<std::size_t>(a)]);
    }
    Hypertiling reduced = h;
    for (int a = 0; a < 3; ++a)
        reduced = detail::contract_axis(reduced, a, wmat[static_cast<std::size_t>(a)]);
    for (std::int64_t x0 = reduced.base[0]; x0 <= reduced.end(0); ++x0)
        for (std::int64_t x1 = reduced.base[1]; x1 <= reduced.end(1); ++x1)
            for (std::int64_t x2 = reduced.base[2]; x2 <= reduced.end(2); ++x2)
                if ((x0 - reduced.base[0] > 1 || x1 - reduced.base[1] > 1 ||
                     x2 - reduced.base[2] > 1) &&
                    reduced.at(x0, x1, x2) != 0)
                    throw validation_error("decompose_hypertiling: residue outside the corner "
                                           "(input not tame)");
    BhargavaCube cube;
    for (int p0 = 0; p0 < 2; ++p0)
        for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2)
                cube.at(p0, p1, p2) =
                    reduced.at(reduced.base[0] + p0, reduced.base[1] + p1, reduced.base[2] + p2);

    // Cube slot q pairs with the axis-q' path: slot 0 <-> layers (axis 0),
    // slot 1 <-> rows (axis 1), slot 2 <-> cols (axis 2).
    auto extract_path = [&](int axis) {
        const IntMatrix& u = umat[static_cast<std::size_t>(axis)];
        std::vector<FareyVertex> verts(u.rows);
        for (std::size_t i = 0; i < u.rows; ++i) verts[i] = {u.at(i, 0), u.at(i, 1)};
        return verts;
    };
    std::array<std::vector<FareyVertex>, 3> verts{extract_path(0), extract_path(1),
                                                  extract_path(2)};
    std::array<Int, 3> level;
    for (int a = 0; a < 3; ++a) {
        auto& vv = verts[static_cast<std::size_t>(a)];
        Int first = vv[0].a * vv[1].b - vv[0].b * vv[1].a;
        if (first == 0) throw error("decompose_hypertiling: zero edge minor");
        if (first < 0) {
            // Flip the numerator column and compensate the cube slot.
            for (FareyVertex& x : vv) x.a = -x.a;
            for (int q0 = 0; q0 < 2; ++q0)
                for (int q1 = 0; q1 < 2; ++q1)
                    for (int q2 = 0; q2 < 2; ++q2) {
                        int qa = a == 0 ? q0 : a == 1 ? q1 : q2;
                        if (qa == 0) cube.at(q0, q1, q2) = -cube.at(q0, q1, q2);
                    }
        }
        level[static_cast<std::size_t>(a)] = abs_int(first);
    }

    HyperDecomposition dec{cube,
                           FareyPath{level[1], h.base[1], std::move(verts[1])},
                           FareyPath{level[2], h.base[2], std::move(verts[2])},
                           FareyPath{level[0], h.base[0], std::move(verts[0])}};
    require_valid(dec.rows);
    require_valid(dec.cols);
    require_valid(dec.layers);
    if (!is_minimal(dec.rows) || !is_minimal(dec.cols) || !is_minimal(dec.layers))
        throw error("decompose_hypertiling: extracted paths are not minimal");
    Int rst = dec.rows.level * dec.cols.level * dec.layers.level;
    if (rst * rst * hyperdet(dec.cube) != n)
        throw error("decompose_hypertiling: level identity failed");
    if (construct_hypertiling(dec.cube, dec.rows, dec.cols, dec.layers) != h)
        throw error("decompose_hypertiling: reconstruction mismatch");
    return dec;
}

// ---------------------------------------------------------------------------
// Constructive normalization: every cube of hyperdeterminant 1 is
// SL2(Z)^3-equivalent to the identity cube. Returns a witness triple t with
// act_triple(t, identity) == cube; every phase is validated by re-applying
// the accumulated product.

namespace detail {

inline Mat2 shear(int off, const Int& amount) {
    // off = 0: (1 x; 0 1), off = 1: (1 0; x 1)
    return off == 0 ? Mat2{1, amount, 0, 1} : Mat2{1, 0, amount, 1};
}

inline Sl2Triple slot_matrix(int slot, const Mat2& m) {
    Sl2Triple t;
    (slot == 0 ? t.t0 : slot == 1 ? t.t1 : t.t2) = m;
    return t;
}

}  // namespace detail

inline Sl2Triple normalize_unit_cube(const BhargavaCube& a) {
    if (hyperdet(a) != 1) throw validation_error("normalize_unit_cube: hyperdeterminant != 1");
    BhargavaCube cur = a;
    Sl2Triple witness;  // invariant: act_triple(witness, cur) == a

    auto apply = [&](int slot, const Mat2& m) {
        Sl2Triple t = detail::slot_matrix(slot, m);
        cur = act_triple(t, cur);
        Mat2 minv;  // inverse also for det -1: adj/det
        Int d = det2(m);
        Mat2 adj{m.d, -m.b, -m.c, m.a};
        if (d == 1)
            minv = adj;
        else if (d == -1)
            minv = -adj;
        else
            throw error("normalize_unit_cube: non-unimodular step");
        Mat2& w = slot == 0 ? witness.t0 : slot == 1 ? witness.t1 : witness.t2;
        w = w * minv;
    };

    // Phase 1: Smith-reduce the top layer to diag(1, alpha) using slots 1
    // (rows) and 2 (columns); gcd of the top layer is 1 since Det = 1.
    for (;;) {
        // Find smallest-magnitude nonzero entry of layer 0 and move it to (0,0).
        int bi = -1, bj = -1;
        Int best = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Int& x = cur.at(0, i, j);
                if (x == 0) continue;
                if (best == 0 || abs_int(x) < best) {
                    best = abs_int(x);
                    bi = i;
                    bj = j;
                }
            }
        if (bi == -1) throw error("normalize_unit_cube: zero top layer");
        if (bi == 1) apply(1, kJ);  // swap rows with det 1
        if (bj == 1) apply(2, kJ);

        Int pivot = cur.at(0, 0, 0);
        if (cur.at(0, 1, 0) != 0) {
            apply(1, detail::shear(1, -(cur.at(0, 1, 0) / pivot)));
            if (cur.at(0, 1, 0) != 0) continue;  // remainder became the new pivot
        }
        if (cur.at(0, 0, 1) != 0) {
            apply(2, detail::shear(1, -(cur.at(0, 0, 1) / pivot)));
            if (cur.at(0, 0, 1) != 0) continue;
        }
        if (cur.at(0, 1, 1) % pivot != 0) {
            apply(1, detail::shear(0, Int(1)));  // row0 += row1 exposes the remainder
            continue;
        }
        break;
    }
    if (cur.at(0, 0, 0) < 0) apply(1, -Mat2::identity());
    if (cur.at(0, 0, 0) != 1) throw error("normalize_unit_cube: top-layer gcd is not 1");

    // Phase 2: clear the bottom-layer (0,0) entry with a layer shear.
    apply(0, detail::shear(1, -cur.at(1, 0, 0)));

    Int alpha = cur.at(0, 1, 1);
    Int beta = cur.at(1, 0, 1);
    Int gamma = cur.at(1, 1, 0);
    Int delta = cur.at(1, 1, 1);
    if (delta * delta + 4 * alpha * beta * gamma != 1)
        throw error("normalize_unit_cube: reduced shape invariant failed");

    if (alpha == 0 || beta == 0 || gamma == 0) {
        // Elementary moves; delta = +-1 here.
        if (alpha != 0) {
            // Clear alpha with a layer shear (layer0 += c*layer1), then undo
            // the spill it leaves at (0,1,0) or (0,0,1).
            apply(0, detail::shear(0, -alpha * delta));
            if (cur.at(0, 1, 0) != 0) apply(1, detail::shear(1, -cur.at(0, 1, 0)));
            if (cur.at(0, 0, 1) != 0) apply(2, detail::shear(1, -cur.at(0, 0, 1)));
        }
        alpha = cur.at(0, 1, 1);
        if (alpha != 0) throw error("normalize_unit_cube: alpha not cleared");
        // Now the cube is (1 0; 0 0 | 0 beta; gamma delta): finish with shears.
        if (cur.at(1, 0, 1) != 0) apply(1, detail::shear(0, -cur.at(1, 0, 1) * delta));
        if (cur.at(1, 1, 0) != 0) apply(2, detail::shear(0, -cur.at(1, 1, 0) * delta));
        if (cur.at(1, 0, 0) != 0) apply(0, detail::shear(1, -cur.at(1, 0, 0)));
    } else {
        // Main branch: make alpha, beta, gamma, delta all negative with a
        // Q-pattern, then peel off the gcd triple.
        for (int pat = 0; pat < 8; ++pat) {
            Int na = alpha * (((pat >> 1) & 1) ? -1 : 1) * (((pat >> 2) & 1) ? -1 : 1);
            Int nb = beta * ((pat & 1) ? -1 : 1) * (((pat >> 2) & 1) ? -1 : 1);
            Int ng = gamma * ((pat & 1) ? -1 : 1) * (((pat >> 1) & 1) ? -1 : 1);
            Int nd = delta * ((pat & 1) ? -1 : 1) * (((pat >> 1) & 1) ? -1 : 1) *
                     (((pat >> 2) & 1) ? -1 : 1);
            if (na < 0 && nb < 0 && ng < 0 && nd < 0) {
                if (pat & 1) apply(0, kQ);
                if (pat & 2) apply(1, kQ);
                if (pat & 4) apply(2, kQ);
                break;
            }
        }
        alpha = cur.at(0, 1, 1);
        beta = cur.at(1, 0, 1);
        gamma = cur.at(1, 1, 0);
        delta = cur.at(1, 1, 1);
        if (!(alpha < 0 && beta < 0 && gamma < 0 && delta < 0))
            throw error("normalize_unit_cube: sign normalization failed");

        Int half_lo = (1 - delta) / 2, half_hi = (1 + delta) / 2;
        auto u_of = [&](const Int& x) {
            Int g = gcd_int(x, half_lo);
            Int hneg = -gcd_int(x, half_hi);
            return Mat2{hneg, g, (delta - 1) / (2 * g), (delta + 1) / (2 * hneg)};
        };
        Sl2Triple gcd_triple{u_of(alpha), u_of(beta), u_of(gamma)};
        if (act_triple(gcd_triple, cube_identity()) != cur)
            throw error("normalize_unit_cube: gcd triple does not reproduce the cube");
        apply(0, inverse_unimodular(gcd_triple.t0));
        apply(1, inverse_unimodular(gcd_triple.t1));
        apply(2, inverse_unimodular(gcd_triple.t2));
    }

    if (cur == cube_identity_dagger()) {
        // (J,J,J) maps the identity cube to the dagger variant.
        Sl2Triple jjj{kJ, kJ, kJ};
        BhargavaCube check = act_triple(jjj, cube_identity());
        if (check != cur) throw error("normalize_unit_cube: dagger correction failed");
        witness = witness * jjj;
        cur = cube_identity();
    }
    if (cur != cube_identity()) throw error("normalize_unit_cube: reduction did not reach I");

    // Fold away any det(-1) components with GL-stabilizers of the identity
    // cube: paired Q's for two flips, (J^-1 Q, J^-1 Q, J^-1 Q) for all three.
    for (int guard = 0; guard < 3; ++guard) {
        std::array<Int, 3> dets{det2(witness.t0), det2(witness.t1), det2(witness.t2)};
        int neg = (dets[0] < 0) + (dets[1] < 0) + (dets[2] < 0);
        if (neg == 0) break;
        Sl2Triple c;
        if (neg == 2) {
            if (dets[0] < 0) c.t0 = kQ;
            if (dets[1] < 0) c.t1 = kQ;
            if (dets[2] < 0) c.t2 = kQ;
        } else {
            Mat2 jq = inverse_unimodular(kJ) * kQ;
            c = {jq, jq, jq};
        }
        if (act_triple(c, cube_identity()) != cube_identity())
            throw error("normalize_unit_cube: determinant correction is not a stabilizer");
        witness = witness * c;
    }

    if (det2(witness.t0) != 1 || det2(witness.t1) != 1 || det2(witness.t2) != 1)
        throw error("normalize_unit_cube: witness is not in SL2^3");
    if (act_triple(witness, cube_identity()) != a)
        throw error("normalize_unit_cube: witness does not reproduce the input");
    return witness;
}

// ---------------------------------------------------------------------------
// Fibonacci family. F is memoized over Z with F_{-n} = (-1)^{n+1} F_n.

inline Int fibonacci(std::int64_t n) {
    bool neg = n < 0;
    std::int64_t k = neg ? -n : n;
    Int a = 0, b = 1;  // (F_i, F_{i+1})
    for (std::int64_t i = 0; i < k; ++i) {
        Int c = a + b;
        a = std::exchange(b, c);
    }
    if (neg && k % 2 == 0) a = -a;
    return a;
}

/// The closed-form hypertiling with entries F_{2(e + x0 + x1 + x2) - 1}.
inline Hypertiling fibonacci_hypertiling(std::int64_t e, std::array<std::int64_t, 3> base,
                                         std::array<std::size_t, 3> dim) {
    Hypertiling h(base, dim);
    for (std::int64_t x0 = h.base[0]; x0 <= h.end(0); ++x0)
        for (std::int64_t x1 = h.base[1]; x1 <= h.end(1); ++x1)
            for (std::int64_t x2 = h.base[2]; x2 <= h.end(2); ++x2)
                h.at(x0, x1, x2) = fibonacci(2 * (e + x0 + x1 + x2) - 1);
    return h;
}

/// The cube with corners F_{2(n + p0 + p1 + p2) - 3}; all six cross sections
/// have determinant 1 and the hyperdeterminant is 5.
inline BhargavaCube make_An(std::int64_t n) {
    BhargavaCube c;
    for (int p0 = 0; p0 < 2; ++p0)
        for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2)
                c.at(p0, p1, p2) = fibonacci(2 * (n + p0 + p1 + p2) - 3);
    return c;
}

/// {(a, b) : 1 <= a, b <= bound, ab | a^2 + b^2 + 1} by brute force.
inline std::set<std::pair<std::int64_t, std::int64_t>> fib_pair_oracle(std::int64_t bound) {
    if (bound < 1) throw validation_error("fib_pair_oracle: bound must be positive");
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t a = 1; a <= bound; ++a)
        for (std::int64_t b = 1; b <= bound; ++b)
            if ((a * a + b * b + 1) % (a * b) == 0) out.emplace(a, b);
    return out;
}

/// Exhaustive enumeration of cubes with |entries| <= bound whose six cross
/// sections all have determinant 1. Writing the layers as (a b; c d) and
/// (e f; g h), the section equations are
///   ad - bc = 1, eh - fg = 1, af - be = 1, ch - dg = 1, ag - ce = 1,
///   bh - df = 1.
/// No entry can vanish: a = 0 forces be = ce = -1, hence b = c, against
/// bc = -1; e = 0 forces af = ag = 1 so fg = 1, against fg = -1. The
/// remaining corners follow from (a, b, c, e) by exact division.
inline std::vector<BhargavaCube> sl2_cross_section_cubes(std::int64_t bound) {
    if (bound < 1) throw validation_error("sl2_cross_section_cubes: bound must be positive");
    std::vector<BhargavaCube> out;
    const std::int64_t lo = -bound, hi = bound;
    for (std::int64_t a = lo; a <= hi; ++a) {
        if (a == 0) continue;
        for (std::int64_t b = lo; b <= hi; ++b)
            for (std::int64_t c = lo; c <= hi; ++c) {
                if ((1 + b * c) % a != 0) continue;
                std::int64_t d = (1 + b * c) / a;
                if (d < lo || d > hi) continue;
                for (std::int64_t e = lo; e <= hi; ++e) {
                    if (e == 0) continue;
                    if ((1 + b * e) % a != 0 || (1 + c * e) % a != 0) continue;
                    std::int64_t f = (1 + b * e) / a;
                    std::int64_t g = (1 + c * e) / a;
                    if (f < lo || f > hi || g < lo || g > hi) continue;
                    if ((1 + f * g) % e != 0) continue;
                    std::int64_t h = (1 + f * g) / e;
                    if (h < lo || h > hi) continue;
                    if (c * h - d * g != 1 || b * h - d * f != 1) continue;
                    BhargavaCube cube;
                    cube.at(0, 0, 0) = a;
                    cube.at(0, 0, 1) = b;
                    cube.at(0, 1, 0) = c;
                    cube.at(0, 1, 1) = d;
                    cube.at(1, 0, 0) = e;
                    cube.at(1, 0, 1) = f;
                    cube.at(1, 1, 0) = g;
                    cube.at(1, 1, 1) = h;
                    out.push_back(cube);
                }
            }
    }
    return out;
}

/// Finite H-orbit of a cube: H is generated by single-slot J's together with
/// (Q,Q,Q), which acts by (-1)^{x0+x1+x2}. At most 32 distinct cubes.
inline std::vector<BhargavaCube> h_orbit(const BhargavaCube& c) {
    std::set<BhargavaCube> seen;
    std::array<Mat2, 4> jp{Mat2::identity(), kJ, kJ * kJ, kJ * kJ * kJ};
    for (const Mat2& a : jp)
        for (const Mat2& b : jp)
            for (const Mat2& d : jp) {
                BhargavaCube x = act_triple({a, b, d}, c);
                seen.insert(x);
                seen.insert(act_triple({kQ, kQ, kQ}, x));
            }
    return {seen.begin(), seen.end()};
}

/// Exhaustive search for SL2^3 triples with entries in [-bound, bound]
/// stabilizing the identity cube.
inline std::vector<Sl2Triple> stabilizer_search(std::int64_t bound) {
    std::vector<std::array<std::int64_t, 4>> sl2;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1) sl2.push_back({a, b, c, d});
    std::vector<Sl2Triple> out;
    auto fixes = [&](const std::array<std::int64_t, 4>& x, const std::array<std::int64_t, 4>& y,
                     const std::array<std::int64_t, 4>& z) {
        // act on I: entries I(0,0,0) = I(1,1,1) = 1.
        for (int q0 = 0; q0 < 2; ++q0)
            for (int q1 = 0; q1 < 2; ++q1)
                for (int q2 = 0; q2 < 2; ++q2) {
                    std::int64_t want = (q0 == 0 && q1 == 0 && q2 == 0)   ? 1
                                        : (q0 == 1 && q1 == 1 && q2 == 1) ? 1
                                                                          : 0;
                    std::int64_t got =
                        x[static_cast<std::size_t>(q0 * 2)] * y[static_cast<std::size_t>(q1 * 2)] *
                            z[static_cast<std::size_t>(q2 * 2)] +
                        x[static_cast<std::size_t>(q0 * 2 + 1)] *
                            y[static_cast<std::size_t>(q1 * 2 + 1)] *
                            z[static_cast<std::size_t>(q2 * 2 + 1)];
                    if (got != want) return false;
                }
        return true;
    };
    for (const auto& x : sl2)
        for (const auto& y : sl2)
            for (const auto& z : sl2)
                if (fixes(x, y, z))
                    out.push_back({Mat2{x[0], x[1], x[2], x[3]}, Mat2{y[0], y[1], y[2], y[3]},
                                   Mat2{z[0], z[1], z[2], z[3]}});
    return out;
}

}  // namespace farey
