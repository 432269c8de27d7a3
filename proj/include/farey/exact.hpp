#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace farey {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error hierarchy used throughout the library. parse_error maps to CLI exit
// code 2, validation_error to exit code 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// gcd of a nonempty list; all-zero lists yield 0.
inline Int gcd_all(const std::vector<Int>& values) {
    if (values.empty()) throw validation_error("gcd_all: empty list");
    Int g = 0;
    for (const Int& v : values) {
        g = gcd_int(g, v);
        if (g == 1) break;
    }
    return g;
}

/// x = ext_gcd(a, b, s, t) with s*a + t*b = x, x = gcd(a, b) >= 0.
inline Int ext_gcd(Int a, Int b, Int& s, Int& t) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = std::exchange(b, r);
        Int ns = s0 - q * s1;
        s0 = std::exchange(s1, ns);
        Int nt = t0 - q * t1;
        t0 = std::exchange(t1, nt);
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// ---------------------------------------------------------------------------
// 2x2 integer matrices, row-major (a b; c d).

struct Mat2 {
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    bool operator==(const Mat2&) const = default;

    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

inline Int det2(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

/// Inverse of a matrix with determinant +-1.
inline Mat2 inverse_unimodular(const Mat2& m) {
    Int det = det2(m);
    if (det != 1 && det != -1)
        throw validation_error("inverse_unimodular: determinant is not +-1");
    Mat2 adj{m.d, -m.b, -m.c, m.a};
    if (det == -1) adj = -adj;
    return adj;
}

inline const Mat2 kJ{0, 1, -1, 0};          // (0 1; -1 0)
inline const Mat2 kQ{1, 0, 0, -1};          // (1 0; 0 -1), det -1

inline Mat2 j_l(const Int& level) { return {0, 1, -level, 0}; }

// ---------------------------------------------------------------------------
// Dense rectangular integer matrices.

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> e;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    bool operator==(const IntMatrix&) const = default;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols != y.rows) throw validation_error("matrix product shape mismatch");
        IntMatrix r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                const Int& xik = x.at(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }
};

/// Exact determinant, fraction-free Bareiss elimination.
inline Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw validation_error("det: matrix not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

/// Inverse of a unimodular integer matrix (adjugate route; exact).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw validation_error("inverse_unimodular: |det| != 1");
    std::size_t n = m.rows;
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = d * cof;
        }
    return inv;
}

struct SmithResult {
    IntMatrix u, s, v;  // m = u * s * v, |det u| = |det v| = 1
};

/// Smith normal form with accumulated unimodular transforms. Pivots are
/// chosen as a smallest-magnitude nonzero entry of the active submatrix.
/// Diagonal entries come out nonnegative with d_i | d_{i+1}.
inline SmithResult smith_normal_form(const IntMatrix& m) {
    std::size_t k = m.rows, l = m.cols;
    SmithResult r{IntMatrix::identity(k), m, IntMatrix::identity(l)};
    IntMatrix& s = r.s;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;

    // Row op on s: row_i -= q*row_j, compensated by column op on u.
    auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < l; ++c) s.at(i, c) -= q * s.at(j, c);
        for (std::size_t c = 0; c < k; ++c) u.at(c, j) += q * u.at(c, i);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < k; ++c) s.at(c, i) -= q * s.at(c, j);
        for (std::size_t c = 0; c < l; ++c) v.at(j, c) += q * v.at(i, c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < l; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (std::size_t c = 0; c < k; ++c) std::swap(u.at(c, i), u.at(c, j));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < k; ++c) std::swap(s.at(c, i), s.at(c, j));
        for (std::size_t c = 0; c < l; ++c) std::swap(v.at(i, c), v.at(j, c));
    };

    std::size_t n = std::min(k, l);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest-magnitude nonzero pivot in the active submatrix.
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < k; ++i)
                for (std::size_t j = t; j < l; ++j) {
                    const Int& x = s.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs_int(x);
                    if (best == 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                t = n;  // remainder is zero
                break;
            }
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);
                row_op(i, t, q);
                if (s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < l; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                col_op(j, t, q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < k && divides; ++i)
                for (std::size_t j = t + 1; j < l && divides; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_op(t, i, Int(-1));  // row_t += row_i
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= n) break;
    }

    // Nonnegative diagonal: negate s row and compensate in u.
    for (std::size_t t = 0; t < n; ++t) {
        if (s.at(t, t) < 0) {
            for (std::size_t c = 0; c < l; ++c) s.at(t, c) = -s.at(t, c);
            for (std::size_t c = 0; c < k; ++c) u.at(c, t) = -u.at(c, t);
        }
    }
    return r;
}

}  // namespace farey
