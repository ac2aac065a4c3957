/**
 * linalg.hpp
 * Dense exact linear algebra over an ordered field F (Rat or Rt2):
 * vectors, matrices, Gaussian elimination, linear solves, null spaces,
 * and canonical scaling of rays/normals for deterministic output.
 */
#ifndef GPTLAB_LINALG_HPP
#define GPTLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "gptlab/qsqrt2.hpp"
#include "gptlab/rational.hpp"

namespace gptlab {

template <class F>
using Vec = std::vector<F>;

template <class F>
using Matrix = std::vector<Vec<F>>;

using VecQ = Vec<Rat>;
using VecR2 = Vec<Rt2>;

/** Per-field glue: conversions and the rational components of a value. */
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static double to_double(const Rat& x) { return rat_dbl(x); }
    static std::string to_string(const Rat& x) { return rat_str(x); }
    static Rat parse(const std::string& s) { return rat_parse(s); }
    static int sign(const Rat& x) { return rat_sign(x); }
    /** Rational coordinates of x in the basis {1} of F over Q. */
    static void flatten(const Rat& x, std::vector<Rat>& out) { out.push_back(x); }
    /** Rebuild from a positive rational scale: x * s. */
    static Rat scale(const Rat& x, const Rat& s) { return x * s; }
};

template <>
struct FieldOps<Rt2> {
    static double to_double(const Rt2& x) { return rt2_dbl(x); }
    static std::string to_string(const Rt2& x) { return rt2_str(x); }
    static Rt2 parse(const std::string& s) { return rt2_parse(s); }
    static int sign(const Rt2& x) { return x.sign(); }
    static void flatten(const Rt2& x, std::vector<Rat>& out) {
        out.push_back(x.a);
        out.push_back(x.b);
    }
    static Rt2 scale(const Rt2& x, const Rat& s) { return x * Rt2(s); }
};

template <class F>
int fsign(const F& x) { return FieldOps<F>::sign(x); }

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (fsign<F>(x) != 0) return false;
    return true;
}

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
    F acc{0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <class F>
Vec<F> vadd(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <class F>
Vec<F> vsub(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <class F>
Vec<F> vscale(const F& c, const Vec<F>& a) {
    Vec<F> r(a);
    for (auto& x : r) x *= c;
    return r;
}

/** Lexicographic comparison, used for all canonical orderings. */
template <class F>
bool lex_less(const Vec<F>& a, const Vec<F>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

/**
 * In-place reduced row echelon form with deterministic (first nonzero)
 * pivoting. Returns the pivot columns; rank = number of pivots.
 */
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && fsign<F>(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const F inv = F{1} / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || fsign<F>(m[i][c]) == 0) continue;
            const F f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return row_reduce(m).size();
}

/**
 * Solve A x = b exactly. Returns one solution (free variables set to 0),
 * or nullopt if inconsistent.
 */
template <class F>
std::optional<Vec<F>> solve_linear(Matrix<F> a, Vec<F> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = row_reduce(a);
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (fsign<F>(a[i][cols]) != 0) return std::nullopt;
    // A pivot in the augmented column also means inconsistent.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec<F> x(cols, F{0});
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

/** Basis of {x : A x = 0}, deterministic order (by free column index). */
template <class F>
std::vector<Vec<F>> nullspace(Matrix<F> a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    const auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(cols, F{0});
        v[f] = F{1};
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(v);
    }
    return basis;
}

/**
 * Canonicalize a ray/normal by a positive rational scale: the flattened
 * rational components become coprime integers. Two vectors are positive
 * multiples of each other iff they canonicalize identically.
 */
template <class F>
void canonicalize_direction(Vec<F>& v) {
    std::vector<Rat> parts;
    for (const auto& x : v) FieldOps<F>::flatten(x, parts);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& q : parts) {
        if (q == 0) continue;
        mpz_class n = abs(q.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return;  // zero vector
    Rat s(den_lcm, num_gcd);
    s.canonicalize();
    for (auto& x : v) x = FieldOps<F>::scale(x, s);
}

/** Affine hull of a point set: dimension and a direction basis. */
template <class F>
struct AffineHull {
    Vec<F> base;                 // one point of the set
    std::vector<Vec<F>> basis;   // independent directions spanning the hull
    std::size_t dim() const { return basis.size(); }
};

template <class F>
AffineHull<F> affine_hull(const std::vector<Vec<F>>& pts) {
    AffineHull<F> h;
    if (pts.empty()) return h;
    h.base = pts[0];
    Matrix<F> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(vsub(pts[i], pts[0]));
    if (dirs.empty()) return h;
    Matrix<F> reduced = dirs;
    const auto pivots = row_reduce(reduced);
    // The nonzero reduced rows themselves form an independent basis.
    for (std::size_t i = 0; i < pivots.size(); ++i) h.basis.push_back(reduced[i]);
    return h;
}

}  // namespace gptlab

#endif
