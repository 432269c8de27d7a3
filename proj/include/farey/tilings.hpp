#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/exact.hpp"
#include "farey/farey_graph.hpp"

namespace farey {

// ---------------------------------------------------------------------------
// Finite integer tilings. Entries are indexed by two integer intervals, each
// containing 0 and 1; every contiguous 2x2 subblock must share one
// determinant N for the array to be an N-tiling.

struct Tiling {
    std::int64_t row_base = 0, col_base = 0;
    std::size_t nrows = 0, ncols = 0;
    std::vector<Int> e;

    Tiling() = default;
    Tiling(std::int64_t rb, std::int64_t cb, std::size_t nr, std::size_t nc)
        : row_base(rb), col_base(cb), nrows(nr), ncols(nc), e(nr * nc) {}

    std::int64_t row_end() const { return row_base + static_cast<std::int64_t>(nrows) - 1; }
    std::int64_t col_end() const { return col_base + static_cast<std::int64_t>(ncols) - 1; }

    Int& at(std::int64_t i, std::int64_t j) {
        return e[static_cast<std::size_t>(i - row_base) * ncols +
                 static_cast<std::size_t>(j - col_base)];
    }
    const Int& at(std::int64_t i, std::int64_t j) const {
        return e[static_cast<std::size_t>(i - row_base) * ncols +
                 static_cast<std::size_t>(j - col_base)];
    }

    bool in_range(std::int64_t i, std::int64_t j) const {
        return i >= row_base && i <= row_end() && j >= col_base && j <= col_end();
    }

    bool operator==(const Tiling&) const = default;
};

inline void require_index_convention(const Tiling& t) {
    if (t.nrows < 3 || t.ncols < 3)
        throw validation_error("tiling needs at least 3 rows and 3 columns");
    if (!(t.row_base <= 0 && t.row_end() >= 1 && t.col_base <= 0 && t.col_end() >= 1))
        throw validation_error("tiling index ranges must contain 0 and 1");
}

/// Common determinant of all 2x2 subblocks; throws naming the first offender.
inline Int verify_n_tiling(const Tiling& t) {
    if (t.nrows < 2 || t.ncols < 2) throw validation_error("verify_n_tiling: need at least 2x2");
    Int n = t.at(t.row_base, t.col_base) * t.at(t.row_base + 1, t.col_base + 1) -
            t.at(t.row_base, t.col_base + 1) * t.at(t.row_base + 1, t.col_base);
    for (std::int64_t i = t.row_base; i < t.row_end(); ++i)
        for (std::int64_t j = t.col_base; j < t.col_end(); ++j) {
            Int d = t.at(i, j) * t.at(i + 1, j + 1) - t.at(i, j + 1) * t.at(i + 1, j);
            if (d != n)
                throw validation_error("inconsistent 2x2 determinant at (" + std::to_string(i) +
                                       "," + std::to_string(j) + "): " + to_string(d) +
                                       " != " + to_string(n));
        }
    return n;
}

inline std::optional<Int> tiling_determinant(const Tiling& t) {
    try {
        return verify_n_tiling(t);
    } catch (const validation_error&) {
        return std::nullopt;
    }
}

namespace detail {

inline Int det3_at(const Tiling& t, std::int64_t i, std::int64_t j) {
    const Int& a = t.at(i, j);
    const Int& b = t.at(i, j + 1);
    const Int& c = t.at(i, j + 2);
    const Int& d = t.at(i + 1, j);
    const Int& e = t.at(i + 1, j + 1);
    const Int& f = t.at(i + 1, j + 2);
    const Int& g = t.at(i + 2, j);
    const Int& h = t.at(i + 2, j + 1);
    const Int& k = t.at(i + 2, j + 2);
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g);
}

/// Merge tau == r1 (mod m1) with tau == r2 (mod m2) into (r1, m1); both
/// moduli are positive.
inline bool merge_congruence(Int& r1, Int& m1, const Int& r2, const Int& m2) {
    Int s, t;
    Int g = ext_gcd(m1, m2, s, t);
    if ((r2 - r1) % g != 0) return false;
    Int lcm = m1 / g * m2;
    Int step = (r2 - r1) / g % (m2 / g) * (s % (m2 / g));
    Int r = (r1 + m1 * step) % lcm;
    if (r < 0) r += lcm;
    r1 = r;
    m1 = lcm;
    return true;
}

struct CompanionFamily {
    // b_i = p_i + q_i * tau_{run_i}; zero positions of `a` are pinned (q = 0).
    std::vector<Rat> p, q;
    std::vector<int> run;            // -1 for pinned positions
    int run_count = 0;
    std::vector<Int> tau0, taumod;   // integrality: tau_r == tau0[r] (mod taumod[r]); mod 0 = exactly
};

/// Solve a_{i-1} b_i - b_{i-1} a_i = level for b. Zero positions of `a` are
/// pinned by their adjacent constraints; each maximal nonzero run carries one
/// free integer parameter (solutions in a run differ by multiples of a).
inline std::optional<CompanionFamily> companion_family(const std::vector<Int>& a,
                                                       const Int& level) {
    const std::size_t n = a.size();
    CompanionFamily f;
    f.p.assign(n, Rat(0));
    f.q.assign(n, Rat(0));
    f.run.assign(n, -1);

    // Two adjacent zeros force level = 0: impossible.
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (a[i] == 0 && a[i + 1] == 0) return std::nullopt;
    if (n == 1) return std::nullopt;

    // Pin every zero position from both sides and check agreement.
    for (std::size_t z = 0; z < n; ++z) {
        if (a[z] != 0) continue;
        std::optional<Rat> pin;
        if (z + 1 < n) pin = Rat(-level) / Rat(a[z + 1]);      // constraint (z, z+1)
        if (z > 0) {
            Rat left = Rat(level) / Rat(a[z - 1]);             // constraint (z-1, z)
            if (pin && *pin != left) return std::nullopt;
            pin = left;
        }
        if (!is_integer(*pin)) return std::nullopt;
        f.p[z] = *pin;
    }

    // Propagate linear forms along each maximal nonzero run.
    for (std::size_t i = 0; i < n;) {
        if (a[i] == 0) {
            ++i;
            continue;
        }
        std::size_t lo = i;
        while (i < n && a[i] != 0) ++i;  // run = [lo, i)
        int r = f.run_count++;
        f.run[lo] = r;
        f.q[lo] = 1;
        f.p[lo] = 0;
        for (std::size_t j = lo + 1; j < i; ++j) {
            // a_{j-1} b_j - b_{j-1} a_j = level
            f.run[j] = r;
            f.q[j] = f.q[j - 1] * Rat(a[j]) / Rat(a[j - 1]);
            f.p[j] = (Rat(level) + f.p[j - 1] * Rat(a[j])) / Rat(a[j - 1]);
        }
    }

    // Integrality congruence per run: p_i + q_i * tau integral for all i in
    // the run, with tau itself integral (tau = b at the run head).
    f.tau0.assign(static_cast<std::size_t>(f.run_count), Int(0));
    f.taumod.assign(static_cast<std::size_t>(f.run_count), Int(1));
    for (std::size_t i = 0; i < n; ++i) {
        if (f.run[i] < 0) continue;
        std::size_t r = static_cast<std::size_t>(f.run[i]);
        // p + q*tau in Z  <=>  pn*qd + qn*pd*tau == 0 (mod pd*qd)
        Int pn = rat_num(f.p[i]), pd = rat_den(f.p[i]);
        Int qn = rat_num(f.q[i]), qd = rat_den(f.q[i]);
        Int mod = pd * qd;
        Int coef = qn * pd % mod;
        Int rhs = (-pn * qd) % mod;
        // coef * tau == rhs (mod mod)
        Int s, t;
        Int g = ext_gcd(coef, mod, s, t);
        if (g == 0) {
            if (rhs % mod != 0) return std::nullopt;
            continue;
        }
        if (rhs % g != 0) return std::nullopt;
        Int m2 = mod / g;
        Int r2 = (rhs / g % m2) * (s % m2) % m2;
        if (r2 < 0) r2 += m2;
        if (!merge_congruence(f.tau0[r], f.taumod[r], r2, m2)) return std::nullopt;
    }
    return f;
}

inline std::vector<Int> companion_instance(const CompanionFamily& f,
                                           const std::vector<Int>& taus) {
    std::vector<Int> b(f.p.size());
    for (std::size_t i = 0; i < f.p.size(); ++i) {
        Rat val = f.p[i];
        if (f.run[i] >= 0) val += f.q[i] * Rat(taus[static_cast<std::size_t>(f.run[i])]);
        if (!is_integer(val)) throw error("companion_instance: non-integral value");
        b[i] = rat_num(val);
    }
    return b;
}

inline Int pairwise_minor_gcd(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int g = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            g = gcd_int(g, a[j] * b[i] - b[j] * a[i]);
            if (g == 1) return g;
        }
    return g;
}

/// Find a companion making (a_i / b_i) a minimal path at `level`, if any.
/// Runs are adjusted over a small box when the parameter-independent minors
/// do not already witness minimality.
inline std::optional<std::vector<Int>> minimal_companion(const std::vector<Int>& a,
                                                         const Int& level) {
    auto fam = companion_family(a, level);
    if (!fam) return std::nullopt;
    const int runs = fam->run_count;
    std::vector<Int> taus(static_cast<std::size_t>(runs));
    for (int r = 0; r < runs; ++r) taus[static_cast<std::size_t>(r)] = fam->tau0[r];

    std::vector<Int> b = companion_instance(*fam, taus);
    if (pairwise_minor_gcd(a, b) == 1) return b;
    if (runs == 0) return std::nullopt;

    // Shift run parameters by their congruence modulus over a small box.
    const int box = 6;
    std::vector<int> idx(static_cast<std::size_t>(runs), -box);
    for (;;) {
        std::vector<Int> cand(taus);
        for (int r = 0; r < runs; ++r) {
            Int step = fam->taumod[r] == 0 ? Int(0) : fam->taumod[r];
            cand[static_cast<std::size_t>(r)] += step * idx[static_cast<std::size_t>(r)];
        }
        std::vector<Int> bb = companion_instance(*fam, cand);
        if (pairwise_minor_gcd(a, bb) == 1) return bb;
        int r = 0;
        while (r < runs && idx[static_cast<std::size_t>(r)] == box) {
            idx[static_cast<std::size_t>(r)] = -box;
            ++r;
        }
        if (r == runs) return std::nullopt;
        ++idx[static_cast<std::size_t>(r)];
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tame 0-tilings: m_ij = K a_i d_j with primitive a, d extending to minimal
// paths a_i/b_i in F_R and c_j/d_j in F_S. The paper pins no level bound, so
// levels are searched in 1..bound and the bound is surfaced in the report.

struct ZeroTameness {
    bool tame = false;
    Int k = 0;
    Int r = 0, s = 0;
    Int bound_r = 0, bound_s = 0;
    std::vector<Int> a, d;  // primitive factor vectors (row and column)
    std::vector<Int> b, c;  // companions
};

namespace detail {

inline Int default_zero_bound(const std::vector<Int>& v) {
    Int m = 0;
    for (const Int& x : v) m = std::max(m, abs_int(x));
    return m * m + 1;
}

inline std::optional<std::pair<Int, std::vector<Int>>> search_companion(
    const std::vector<Int>& a, const Int& bound) {
    for (Int level = 1; level <= bound; ++level) {
        auto b = minimal_companion(a, level);
        if (b) return std::make_pair(level, *b);
    }
    return std::nullopt;
}

}  // namespace detail

/// Rank-0/1 factorization and companion search for 0-tilings; `bound` of 0
/// selects max(|entries of the factor|)^2 + 1 per axis.
inline ZeroTameness analyze_zero_tiling(const Tiling& t, const Int& bound = 0) {
    ZeroTameness z;
    auto n = tiling_determinant(t);
    if (!n || *n != 0) return z;

    bool all_zero = true;
    for (const Int& x : t.e) all_zero &= x == 0;
    if (all_zero) return z;  // K a_i d_j with a path vector cannot vanish identically

    z.k = gcd_all(t.e);

    // Factor t / K as outer(a, d) with primitive integer vectors.
    std::int64_t pivot_row = t.row_base;
    bool found = false;
    for (std::int64_t i = t.row_base; i <= t.row_end() && !found; ++i)
        for (std::int64_t j = t.col_base; j <= t.col_end(); ++j)
            if (t.at(i, j) != 0) {
                pivot_row = i;
                found = true;
                break;
            }
    std::vector<Int> d;
    Int row_gcd = 0;
    for (std::int64_t j = t.col_base; j <= t.col_end(); ++j)
        row_gcd = gcd_int(row_gcd, t.at(pivot_row, j));
    for (std::int64_t j = t.col_base; j <= t.col_end(); ++j)
        d.push_back(t.at(pivot_row, j) / row_gcd);
    // Fix sign so the first nonzero of d is positive.
    for (const Int& x : d) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : d) y = -y;
        break;
    }
    std::int64_t dj = t.col_base;
    while (d[static_cast<std::size_t>(dj - t.col_base)] == 0) ++dj;
    std::vector<Int> a;
    for (std::int64_t i = t.row_base; i <= t.row_end(); ++i) {
        Int num = t.at(i, dj);
        Int den = z.k * d[static_cast<std::size_t>(dj - t.col_base)];
        if (num % den != 0) return z;
        a.push_back(num / den);
    }
    // Verify the factorization on every entry.
    for (std::int64_t i = t.row_base; i <= t.row_end(); ++i)
        for (std::int64_t j = t.col_base; j <= t.col_end(); ++j)
            if (t.at(i, j) != z.k * a[static_cast<std::size_t>(i - t.row_base)] *
                                  d[static_cast<std::size_t>(j - t.col_base)])
                return z;
    if (gcd_all(a) != 1) return z;

    z.a = a;
    z.d = d;
    z.bound_r = bound > 0 ? bound : detail::default_zero_bound(a);
    z.bound_s = bound > 0 ? bound : detail::default_zero_bound(d);

    auto rb = detail::search_companion(a, z.bound_r);
    if (!rb) return z;
    auto se = detail::search_companion(d, z.bound_s);
    if (!se) return z;
    z.r = rb->first;
    z.b = rb->second;
    z.s = se->first;
    z.c.reserve(se->second.size());
    for (const Int& x : se->second) z.c.push_back(-x);  // c_{j-1} d_j - d_{j-1} c_j = S
    z.tame = true;
    return z;
}

/// Tameness: for N != 0 every 3x3 subblock is singular; for N = 0 the
/// factorization-with-companions criterion above.
inline bool is_tame(const Tiling& t, const Int& zero_bound = 0) {
    auto n = tiling_determinant(t);
    if (!n) return false;
    if (t.nrows < 3 || t.ncols < 3) return false;
    if (*n == 0) return analyze_zero_tiling(t, zero_bound).tame;
    for (std::int64_t i = t.row_base; i + 2 <= t.row_end(); ++i)
        for (std::int64_t j = t.col_base; j + 2 <= t.col_end(); ++j)
            if (detail::det3_at(t, i, j) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Tameness parameters (K, L, R, S) with N = K^2 L R S. r is the gcd of the
// minors drawn from two consecutive columns, s from two consecutive rows, t
// over all minors; for N < 0 the three are negated so R, S stay positive.

struct TamenessParams {
    Int k, l, r, s;

    bool operator==(const TamenessParams&) const = default;
};

inline TamenessParams tameness_parameters(const Tiling& t, const Int& zero_bound = 0) {
    require_index_convention(t);
    Int n = verify_n_tiling(t);
    if (n == 0) {
        ZeroTameness z = analyze_zero_tiling(t, zero_bound);
        if (!z.tame) throw validation_error("tameness_parameters: not a tame 0-tiling");
        return {z.k, 0, z.r, z.s};
    }
    if (!is_tame(t)) throw validation_error("tameness_parameters: tiling is not tame");

    Int r_consec_cols = 0, s_consec_rows = 0, t_all = 0;
    for (std::int64_t i = t.row_base; i <= t.row_end(); ++i)
        for (std::int64_t i2 = i + 1; i2 <= t.row_end(); ++i2)
            for (std::int64_t j = t.col_base; j <= t.col_end(); ++j)
                for (std::int64_t j2 = j + 1; j2 <= t.col_end(); ++j2) {
                    Int minor = t.at(i, j) * t.at(i2, j2) - t.at(i, j2) * t.at(i2, j);
                    t_all = gcd_int(t_all, minor);
                    if (i2 == i + 1) s_consec_rows = gcd_int(s_consec_rows, minor);
                    if (j2 == j + 1) r_consec_cols = gcd_int(r_consec_cols, minor);
                }
    if (n < 0) {
        r_consec_cols = -r_consec_cols;
        s_consec_rows = -s_consec_rows;
        t_all = -t_all;
    }
    Int k = gcd_all(t.e);
    TamenessParams params{k, t_all / (k * k), n / r_consec_cols, n / s_consec_rows};
    if (k * k * params.l * params.r * params.s != n)
        throw error("tameness_parameters: internal identity K^2*L*R*S = N failed");
    return params;
}

// ---------------------------------------------------------------------------
// Row/column three-term recurrences of a tame tiling with N != 0:
// m_{i-1,j} + m_{i+1,j} = r_i m_{i,j} and m_{i,j-1} + m_{i,j+1} = s_j m_{i,j}.

struct RecurrenceCoefficients {
    std::int64_t row_base = 0, col_base = 0;  // first interior indices
    std::vector<Rat> r, s;
};

inline RecurrenceCoefficients recurrence_coefficients(const Tiling& t) {
    require_index_convention(t);
    Int n = verify_n_tiling(t);
    if (n == 0) throw validation_error("recurrence_coefficients: N must be nonzero");
    if (!is_tame(t)) throw validation_error("recurrence_coefficients: tiling is not tame");
    RecurrenceCoefficients rc{t.row_base + 1, t.col_base + 1, {}, {}};
    for (std::int64_t i = t.row_base + 1; i < t.row_end(); ++i) {
        std::optional<Rat> coef;
        for (std::int64_t j = t.col_base; j <= t.col_end(); ++j) {
            Int num = t.at(i - 1, j) + t.at(i + 1, j);
            if (t.at(i, j) == 0) {
                if (num != 0) throw validation_error("row recurrence violated");
                continue;
            }
            Rat c = make_rat(num, t.at(i, j));
            if (coef && *coef != c) throw validation_error("row recurrence inconsistent");
            coef = c;
        }
        if (!coef) throw validation_error("row recurrence undetermined (zero row)");
        rc.r.push_back(*coef);
    }
    for (std::int64_t j = t.col_base + 1; j < t.col_end(); ++j) {
        std::optional<Rat> coef;
        for (std::int64_t i = t.row_base; i <= t.row_end(); ++i) {
            Int num = t.at(i, j - 1) + t.at(i, j + 1);
            if (t.at(i, j) == 0) {
                if (num != 0) throw validation_error("column recurrence violated");
                continue;
            }
            Rat c = make_rat(num, t.at(i, j));
            if (coef && *coef != c) throw validation_error("column recurrence inconsistent");
            coef = c;
        }
        if (!coef) throw validation_error("column recurrence undetermined (zero column)");
        rc.s.push_back(*coef);
    }
    return rc;
}

// ---------------------------------------------------------------------------
// Theorem-A construction: m_ij = K (a_i d_j - L b_i c_j) for minimal paths
// gamma in F_R (rows) and delta in F_S (columns).

inline Tiling construct_tiling(const Int& k, const Int& l, const FareyPath& gamma,
                               const FareyPath& delta) {
    if (k < 1) throw validation_error("construct_tiling: K must be positive");
    if (l == 0) throw validation_error("construct_tiling: L must be nonzero");
    if (!is_minimal(gamma) || !is_minimal(delta))
        throw validation_error("construct_tiling: paths must be minimal");
    Tiling t(gamma.base, delta.base, gamma.v.size(), delta.v.size());
    for (std::int64_t i = gamma.first_index(); i <= gamma.last_index(); ++i)
        for (std::int64_t j = delta.first_index(); j <= delta.last_index(); ++j) {
            const FareyVertex& g = gamma.at(i);
            const FareyVertex& d = delta.at(j);
            t.at(i, j) = k * (g.a * d.b - l * g.b * d.a);
        }
    return t;
}

struct TilingDecomposition {
    Int k, l;
    FareyPath gamma, delta;
};

/// Theorem-A inverse via the Smith normal form of the entry matrix. The
/// result reconstructs the tiling exactly; the leading gamma vertex is
/// normalized to b >= 0 (and a > 0 when b = 0).
inline TilingDecomposition decompose_tiling(const Tiling& t) {
    require_index_convention(t);
    Int n = verify_n_tiling(t);
    if (n == 0) throw validation_error("decompose_tiling: N must be nonzero");
    TamenessParams params = tameness_parameters(t);

    IntMatrix m(t.nrows, t.ncols);
    for (std::size_t i = 0; i < t.nrows; ++i)
        for (std::size_t j = 0; j < t.ncols; ++j) m.at(i, j) = t.e[i * t.ncols + j];
    SmithResult snf = smith_normal_form(m);
    if (snf.s.at(0, 0) != params.k || snf.s.at(1, 1) != params.k * abs_int(params.l))
        throw error("decompose_tiling: Smith form disagrees with tameness parameters");
    for (std::size_t i = 2; i < std::min(t.nrows, t.ncols); ++i)
        if (snf.s.at(i, i) != 0) throw validation_error("decompose_tiling: rank exceeds 2");

    std::vector<FareyVertex> gv(t.nrows), dv(t.ncols);
    Int csign = params.l > 0 ? -1 : 1;
    for (std::size_t i = 0; i < t.nrows; ++i) gv[i] = {snf.u.at(i, 0), snf.u.at(i, 1)};
    for (std::size_t j = 0; j < t.ncols; ++j)
        dv[j] = {csign * snf.v.at(1, j), snf.v.at(0, j)};

    // Consecutive minors must be constantly +R / +S; a joint det(-1) fixup
    // flips both when they come out negative.
    Int first = gv[0].a * gv[1].b - gv[0].b * gv[1].a;
    if (first != params.r && first != -params.r)
        throw error("decompose_tiling: unexpected edge minor");
    if (first == -params.r) {
        for (FareyVertex& x : gv) x.b = -x.b;
        for (FareyVertex& x : dv) x.a = -x.a;
    }
    // Deterministic overall sign: first gamma vertex with b >= 0, a > 0 if b = 0.
    if (gv[0].b < 0 || (gv[0].b == 0 && gv[0].a < 0)) {
        for (FareyVertex& x : gv) x = -x;
        for (FareyVertex& x : dv) x = -x;
    }

    TilingDecomposition dec{params.k, params.l,
                            FareyPath{params.r, t.row_base, std::move(gv)},
                            FareyPath{params.s, t.col_base, std::move(dv)}};
    require_valid(dec.gamma);
    require_valid(dec.delta);
    if (!is_minimal(dec.gamma) || !is_minimal(dec.delta))
        throw error("decompose_tiling: extracted paths are not minimal");
    if (construct_tiling(dec.k, dec.l, dec.gamma, dec.delta) != t)
        throw error("decompose_tiling: reconstruction mismatch");
    return dec;
}

// ---------------------------------------------------------------------------
// Positivity (Theorem on compatible clockwise paths, N > 0).

enum class Sign { positive, negative, mixed };

inline Sign classify_sign(const Tiling& t) {
    bool pos = true, neg = true;
    for (const Int& x : t.e) {
        pos &= x > 0;
        neg &= x < 0;
    }
    if (pos) return Sign::positive;
    if (neg) return Sign::negative;
    return Sign::mixed;
}

/// Path-side positivity test: the tiling determined by (K, L, gamma, delta)
/// is positive or negative exactly when gamma and L*delta are compatible
/// clockwise paths.
inline Sign positivity_from_paths(const Int& k, const Int& l, const FareyPath& gamma,
                                  const FareyPath& delta) {
    if (l < 1) throw validation_error("positivity_from_paths: requires N > 0, so L >= 1");
    FareyPath ldelta = scale_path(l, delta);
    if (!are_compatible(gamma, ldelta)) return Sign::mixed;
    const FareyVertex& g = gamma.at(0);
    const FareyVertex& d = delta.at(0);
    Int entry = k * (g.a * d.b - l * g.b * d.a);
    if (entry == 0) throw error("positivity_from_paths: zero entry on compatible pair");
    return entry > 0 ? Sign::positive : Sign::negative;
}

// ---------------------------------------------------------------------------
// Correspondence between tame N^2-tilings over Z and SL2-tilings over (1/N)Z.

struct RationalTiling {
    Tiling numerators;  // entries are numerators over `denom`
    Int denom = 1;

    bool operator==(const RationalTiling&) const = default;
    Rat at(std::int64_t i, std::int64_t j) const { return make_rat(numerators.at(i, j), denom); }
};

inline RationalTiling scale_to_sl2(const Tiling& t) {
    Int n = verify_n_tiling(t);
    if (n <= 0) throw validation_error("scale_to_sl2: N must be a positive perfect square");
    Int root = boost::multiprecision::sqrt(n);
    if (root * root != n) throw validation_error("scale_to_sl2: N is not a perfect square");
    return {t, root};
}

inline Tiling scale_from_sl2(const RationalTiling& rt) {
    Int n = verify_n_tiling(rt.numerators);
    if (n != rt.denom * rt.denom)
        throw validation_error("scale_from_sl2: numerators are not an N^2-tiling");
    return rt.numerators;
}

}  // namespace farey
