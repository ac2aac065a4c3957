/**
 * polytope.hpp
 * Exact V- and H-representations of convex polytopes and the conversions
 * between them (double description for vertex enumeration, polar duality
 * for facet enumeration), plus a caching Polytope wrapper.
 *
 * Conventions for determinism: homogenized constraint rows are inserted
 * in lexicographic order, vertices are reported in lexicographic order,
 * and every ray/normal is scaled so its flattened rational coordinates
 * are coprime integers.
 */
#ifndef GPTLAB_POLYTOPE_HPP
#define GPTLAB_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gptlab/errors.hpp"
#include "gptlab/lp.hpp"

namespace gptlab {

/** Irredundant vertex list, lexicographically sorted. */
template <class F>
struct VRep {
    std::vector<Vec<F>> vertices;
};

namespace detail {

/** Fixed-capacity bit set tracking which constraint rows a ray satisfies
 *  with equality. */
class TightSet {
  public:
    explicit TightSet(std::size_t nbits = 0) : bits_((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const {
        return (bits_[i / 64] >> (i % 64)) & 1;
    }
    TightSet intersect(const TightSet& o) const {
        TightSet r(*this);
        for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] &= o.bits_[w];
        return r;
    }
    bool contains(const TightSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if ((o.bits_[w] & ~bits_[w]) != 0) return false;
        return true;
    }
    bool operator==(const TightSet& o) const { return bits_ == o.bits_; }

  private:
    std::vector<std::uint64_t> bits_;
};

template <class F>
struct Ray {
    Vec<F> dir;  // canonicalized
    TightSet tight;
};

/** Span basis + extreme rays of a cone {y : row.y <= 0 for all rows}. */
template <class F>
struct ConeGenerators {
    std::vector<Vec<F>> lineality;
    std::vector<Ray<F>> rays;
};

/**
 * Incremental double description. Maintains the lineality space and the
 * extreme rays (modulo lineality) of the intersection processed so far;
 * tight sets are tracked against all inserted rows, which keeps the
 * combinatorial adjacency test valid throughout.
 */
template <class F>
ConeGenerators<F> cone_double_description(const Matrix<F>& rows) {
    ConeGenerators<F> g;
    if (rows.empty()) return g;
    const std::size_t n = rows[0].size();
    const std::size_t m = rows.size();
    for (std::size_t j = 0; j < n; ++j) {
        Vec<F> e(n, F{0});
        e[j] = F{1};
        g.lineality.push_back(e);
    }

    for (std::size_t k = 0; k < m; ++k) {
        const Vec<F>& a = rows[k];
        if (is_zero_vec(a)) continue;

        // Case 1: some lineality vector leaves the hyperplane a.y = 0.
        std::size_t hit = g.lineality.size();
        for (std::size_t i = 0; i < g.lineality.size(); ++i) {
            if (fsign<F>(dot(a, g.lineality[i])) != 0) {
                hit = i;
                break;
            }
        }
        if (hit != g.lineality.size()) {
            Vec<F> l0 = g.lineality[hit];
            F c0 = dot(a, l0);
            if (fsign<F>(c0) < 0) {
                l0 = vscale(F{-1}, l0);
                c0 = -c0;
            }
            std::vector<Vec<F>> new_lin;
            for (std::size_t i = 0; i < g.lineality.size(); ++i) {
                if (i == hit) continue;
                const F q = F(dot(a, g.lineality[i]) / c0);
                new_lin.push_back(vsub(g.lineality[i], vscale(q, l0)));
            }
            for (auto& r : g.rays) {
                const F q = F(dot(a, r.dir) / c0);
                r.dir = vsub(r.dir, vscale(q, l0));
                canonicalize_direction(r.dir);
                r.tight.set(k);  // projected rays lie inside the hyperplane
            }
            Ray<F> fresh;
            fresh.dir = vscale(F{-1}, l0);
            canonicalize_direction(fresh.dir);
            fresh.tight = TightSet(m);
            for (std::size_t p = 0; p < k; ++p) fresh.tight.set(p);
            g.rays.push_back(std::move(fresh));
            g.lineality = std::move(new_lin);
            continue;
        }

        // Case 2: lineality lies inside the hyperplane; split the rays.
        std::vector<std::size_t> pos, neg;
        std::vector<F> val(g.rays.size());
        for (std::size_t i = 0; i < g.rays.size(); ++i) {
            val[i] = dot(a, g.rays[i].dir);
            const int s = fsign<F>(val[i]);
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
            else g.rays[i].tight.set(k);
        }
        if (pos.empty()) continue;

        std::vector<Ray<F>> next;
        for (std::size_t i = 0; i < g.rays.size(); ++i) {
            if (fsign<F>(val[i]) <= 0) next.push_back(g.rays[i]);
        }
        for (const auto pi : pos) {
            for (const auto ni : neg) {
                const TightSet common = g.rays[pi].tight.intersect(g.rays[ni].tight);
                bool adjacent = true;
                for (std::size_t r = 0; r < g.rays.size(); ++r) {
                    if (r == pi || r == ni) continue;
                    if (g.rays[r].tight.contains(common)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Ray<F> w;
                w.dir = vsub(vscale(val[pi], g.rays[ni].dir), vscale(val[ni], g.rays[pi].dir));
                canonicalize_direction(w.dir);
                w.tight = common;
                w.tight.set(k);
                bool dup = false;
                for (const auto& ex : next) {
                    if (ex.dir == w.dir) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) next.push_back(std::move(w));
            }
        }
        g.rays = std::move(next);
    }
    return g;
}

/** Joint positive-scale canonicalization of (normal, bound). */
template <class F>
void canonicalize_halfspace(HalfSpace<F>& h) {
    Vec<F> joint = h.normal;
    joint.push_back(h.bound);
    canonicalize_direction(joint);
    h.bound = joint.back();
    joint.pop_back();
    h.normal = std::move(joint);
}

/** Equalities admit either sign; fix it so the vector is lex-positive. */
template <class F>
void canonicalize_equality(LinEq<F>& e) {
    Vec<F> joint = e.normal;
    joint.push_back(e.value);
    canonicalize_direction(joint);
    for (const auto& x : joint) {
        const int s = fsign<F>(x);
        if (s == 0) continue;
        if (s < 0)
            for (auto& y : joint) y = -y;
        break;
    }
    e.value = joint.back();
    joint.pop_back();
    e.normal = std::move(joint);
}

}  // namespace detail

/**
 * Enumerate the vertices of a bounded nonempty H-region.
 * Throws InfeasibleError / UnboundedError otherwise.
 */
template <class F>
VRep<F> hrep_to_vrep(const HRep<F>& region) {
    const std::size_t n = region.ambient_dim();
    if (n == 0) throw ValidationError("hrep_to_vrep: region has no coordinates");
    // Homogenize over y = (x, t): h.x <= m*t, equalities both ways, t >= 0.
    Matrix<F> rows;
    for (const auto& h : region.halfspaces) {
        Vec<F> row = h.normal;
        row.push_back(-h.bound);
        rows.push_back(std::move(row));
    }
    for (const auto& e : region.equalities) {
        Vec<F> row = e.normal;
        row.push_back(-e.value);
        rows.push_back(row);
        for (auto& x : row) x = -x;
        rows.push_back(std::move(row));
    }
    {
        Vec<F> row(n + 1, F{0});
        row[n] = F{-1};
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), lex_less<F>);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const auto cone = detail::cone_double_description(rows);
    VRep<F> out;
    bool recession = !cone.lineality.empty();
    for (const auto& r : cone.rays) {
        const F& t = r.dir[n];
        if (fsign<F>(t) == 0) {
            recession = true;
            continue;
        }
        Vec<F> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = F(r.dir[j] / t);
        out.vertices.push_back(std::move(v));
    }
    if (out.vertices.empty()) throw InfeasibleError("hrep_to_vrep: empty region");
    if (recession) throw UnboundedError("hrep_to_vrep: region unbounded");
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less<F>);
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    return out;
}

/**
 * Facet + affine-hull description of the convex hull of a point list.
 * The input need not be irredundant. Facets are scaled canonically and
 * sorted; equalities pin the affine hull.
 */
template <class F>
HRep<F> vrep_to_hrep(const std::vector<Vec<F>>& points) {
    if (points.empty()) throw ValidationError("vrep_to_hrep: need at least one vertex");
    const std::size_t n = points[0].size();
    HRep<F> out;

    const auto hull = affine_hull(points);
    const std::size_t k = hull.dim();

    // Affine-hull equalities: normals orthogonal to every hull direction.
    if (k < n) {
        Matrix<F> dirs = hull.basis;
        for (const auto& z : nullspace(dirs.empty() ? Matrix<F>(1, Vec<F>(n, F{0})) : dirs)) {
            LinEq<F> e{z, dot(z, points[0])};
            detail::canonicalize_equality(e);
            out.equalities.push_back(std::move(e));
        }
        std::sort(out.equalities.begin(), out.equalities.end(),
                  [](const LinEq<F>& x, const LinEq<F>& y) {
                      Vec<F> a = x.normal, b = y.normal;
                      a.push_back(x.value);
                      b.push_back(y.value);
                      return lex_less(a, b);
                  });
    }
    if (k == 0) return out;

    // Coordinates s of each point within the affine hull: base + B s.
    Matrix<F> bcols(n, Vec<F>(k));  // B as rows-of-columns layout
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) bcols[i][j] = hull.basis[j][i];
    std::vector<Vec<F>> svert;
    for (const auto& p : points) {
        const auto s = solve_linear(bcols, vsub(p, hull.base));
        if (!s) throw ValidationError("vrep_to_hrep: point off its own affine hull");
        svert.push_back(*s);
    }

    // Full-dimensional facet enumeration in hull coordinates via the polar
    // body about the vertex centroid.
    Vec<F> centroid(k, F{0});
    for (const auto& s : svert) centroid = vadd(centroid, s);
    const F inv_count = F{1} / F(static_cast<long>(svert.size()));
    centroid = vscale(inv_count, centroid);

    HRep<F> polar;
    for (const auto& s : svert)
        polar.halfspaces.push_back({vsub(s, centroid), F{1}});
    const VRep<F> pverts = hrep_to_vrep(polar);

    for (const auto& a : pverts.vertices) {
        // Facet in hull coordinates: a.(s - centroid) <= 1.
        const F beta = F{1} + dot(a, centroid);
        // Lift: h = B (B^T B)^{-1} a so that h.x = a.s + h.base.
        Matrix<F> gram(k, Vec<F>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                gram[i][j] = dot(hull.basis[i], hull.basis[j]);
        const auto y = solve_linear(gram, a);
        if (!y) throw ValidationError("vrep_to_hrep: singular Gram matrix");
        Vec<F> h(n, F{0});
        for (std::size_t j = 0; j < k; ++j)
            h = vadd(h, vscale((*y)[j], hull.basis[j]));
        HalfSpace<F> hs{h, beta + dot(h, hull.base)};
        detail::canonicalize_halfspace(hs);
        out.halfspaces.push_back(std::move(hs));
    }
    std::sort(out.halfspaces.begin(), out.halfspaces.end(),
              [](const HalfSpace<F>& x, const HalfSpace<F>& y) {
                  Vec<F> a = x.normal, b = y.normal;
                  a.push_back(x.bound);
                  b.push_back(y.bound);
                  return lex_less(a, b);
              });
    return out;
}

template <class F>
HRep<F> vrep_to_hrep(const VRep<F>& v) {
    return vrep_to_hrep(v.vertices);
}

/**
 * Convex polytope with cached canonical V- and H-representations.
 * Construction from points normalizes away redundant generators.
 */
template <class F>
class Polytope {
  public:
    static Polytope from_points(std::vector<Vec<F>> pts) {
        Polytope p;
        p.hrep_ = vrep_to_hrep(pts);
        return p;
    }
    static Polytope from_hrep(HRep<F> h) {
        Polytope p;
        p.hrep_ = std::move(h);
        return p;
    }

    const HRep<F>& hrep() const { return *hrep_; }

    const VRep<F>& vrep() const {
        if (!vrep_) {
            if (hrep_->halfspaces.empty() && !hrep_->equalities.empty()) {
                // Pure affine point set: solve the equalities directly.
                Matrix<F> a;
                Vec<F> b;
                for (const auto& e : hrep_->equalities) {
                    a.push_back(e.normal);
                    b.push_back(e.value);
                }
                const auto x = solve_linear(a, b);
                if (!x) throw InfeasibleError("Polytope: inconsistent equalities");
                // A unique point only if the nullspace is trivial.
                if (!nullspace(a).empty())
                    throw UnboundedError("Polytope: equalities leave free directions");
                vrep_ = VRep<F>{{*x}};
            } else {
                vrep_ = hrep_to_vrep(*hrep_);
            }
        }
        return *vrep_;
    }

    const std::vector<Vec<F>>& vertices() const { return vrep().vertices; }

    std::size_t ambient_dim() const {
        if (hrep_) return hrep_->ambient_dim();
        return vrep_->vertices[0].size();
    }

    std::size_t affine_dim() const { return affine_hull(vertices()).dim(); }

    /** Exact average of the vertices: a relative-interior point. */
    Vec<F> relative_interior_point() const {
        const auto& vs = vertices();
        Vec<F> c(ambient_dim(), F{0});
        for (const auto& v : vs) c = vadd(c, v);
        const F inv = F(F{1} / F(static_cast<long>(vs.size())));
        return vscale(inv, c);
    }

    bool contains(const Vec<F>& x) const {
        for (const auto& h : hrep_->halfspaces)
            if (fsign<F>(dot(h.normal, x) - h.bound) > 0) return false;
        for (const auto& e : hrep_->equalities)
            if (fsign<F>(dot(e.normal, x) - e.value) != 0) return false;
        return true;
    }

    /** Max of dir.x over the polytope with the attaining vertex indices. */
    std::pair<F, std::vector<std::size_t>> support(const Vec<F>& dir) const {
        const auto& vs = vertices();
        F best = dot(dir, vs[0]);
        for (const auto& v : vs) {
            const F val = dot(dir, v);
            if (val > best) best = val;
        }
        std::vector<std::size_t> arg;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (dot(dir, vs[i]) == best) arg.push_back(i);
        return {best, arg};
    }

    bool operator==(const Polytope& o) const { return vertices() == o.vertices(); }
    bool operator!=(const Polytope& o) const { return !(*this == o); }

  private:
    Polytope() = default;
    std::optional<HRep<F>> hrep_;
    mutable std::optional<VRep<F>> vrep_;
};

}  // namespace gptlab

#endif
