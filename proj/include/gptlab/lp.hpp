/**
 * lp.hpp
 * Exact linear programming over an ordered field. Two-phase primal
 * simplex with Bland's smallest-index pivot rule; free variables are
 * split into nonnegative pairs. The public optimizer additionally
 * purifies its witness to the lexicographically greatest point of the
 * optimal face, which is a vertex and is independent of the pivot path.
 */
#ifndef GPTLAB_LP_HPP
#define GPTLAB_LP_HPP

#include <cstddef>
#include <vector>

#include "gptlab/errors.hpp"
#include "gptlab/linalg.hpp"

namespace gptlab {

/** Closed half-space {x : normal.x <= bound}. */
template <class F>
struct HalfSpace {
    Vec<F> normal;
    F bound;
};

/** Hyperplane constraint {x : normal.x = value}. */
template <class F>
struct LinEq {
    Vec<F> normal;
    F value;
};

/** Intersection of half-spaces and hyperplanes. */
template <class F>
struct HRep {
    std::vector<HalfSpace<F>> halfspaces;
    std::vector<LinEq<F>> equalities;

    std::size_t ambient_dim() const {
        if (!halfspaces.empty()) return halfspaces[0].normal.size();
        if (!equalities.empty()) return equalities[0].normal.size();
        return 0;
    }
};

enum class LpSense { Max, Min };

template <class F>
struct LpResult {
    F value;
    Vec<F> witness;
};

namespace detail {

/**
 * Simplex over the standard form max c.y, A y <= b, y >= 0.
 * Dense tableau; reduced costs recomputed per scan (sizes here are small).
 */
template <class F>
class SimplexTableau {
  public:
    SimplexTableau(const Matrix<F>& a, const Vec<F>& b) {
        rows_ = a.size();
        structural_ = rows_ ? a[0].size() : 0;
        cols_ = structural_ + rows_ + 1;  // structural + slack + rhs
        tab_.assign(rows_, Vec<F>(cols_ + 1, F{0}));  // +1: phase-one column
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < structural_; ++j) tab_[i][j] = a[i][j];
            tab_[i][structural_ + i] = F{1};
            tab_[i][rhs_col()] = b[i];
            basis_[i] = structural_ + i;
        }
    }

    /** True if a feasible point exists; establishes a feasible basis. */
    bool make_feasible() {
        std::size_t worst = rows_;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (fsign<F>(tab_[i][rhs_col()]) < 0 &&
                (worst == rows_ || tab_[i][rhs_col()] < tab_[worst][rhs_col()]))
                worst = i;
        }
        if (worst == rows_) return true;
        // Auxiliary variable y0 with column -1 in every row; pivot it in at
        // the most negative row, minimize it, then pivot it back out.
        const std::size_t aux = aux_col();
        for (std::size_t i = 0; i < rows_; ++i) tab_[i][aux] = F{-1};
        aux_active_ = true;
        pivot(worst, aux);
        Vec<F> phase_obj(cols_ + 1, F{0});
        phase_obj[aux] = F{-1};
        run(phase_obj);
        const bool feasible = aux_value().first ? fsign<F>(aux_value().second) == 0 : true;
        if (!feasible) return false;
        drive_aux_out();
        aux_active_ = false;
        for (std::size_t i = 0; i < rows_; ++i) tab_[i][aux] = F{0};
        return true;
    }

    /** Maximize c over the current feasible basis. False if unbounded. */
    bool maximize(const Vec<F>& c) {
        Vec<F> obj(cols_ + 1, F{0});
        for (std::size_t j = 0; j < structural_ && j < c.size(); ++j) obj[j] = c[j];
        return run(obj);
    }

    Vec<F> solution() const {
        Vec<F> y(structural_, F{0});
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < structural_) y[basis_[i]] = tab_[i][rhs_col()];
        return y;
    }

  private:
    std::size_t rhs_col() const { return cols_ - 1; }
    std::size_t aux_col() const { return cols_; }

    std::pair<bool, F> aux_value() const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] == aux_col()) return {true, tab_[i][rhs_col()]};
        return {false, F{0}};
    }

    void drive_aux_out() {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] != aux_col()) continue;
            for (std::size_t j = 0; j + 1 < cols_; ++j) {
                if (fsign<F>(tab_[i][j]) != 0) {
                    pivot(i, j);
                    return;
                }
            }
            // Row reads 0 = 0 after elimination: redundant constraint.
            tab_.erase(tab_.begin() + i);
            basis_.erase(basis_.begin() + i);
            --rows_;
            return;
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const F inv = F{1} / tab_[row][col];
        for (auto& v : tab_[row]) v *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || fsign<F>(tab_[i][col]) == 0) continue;
            const F f = tab_[i][col];
            for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
    }

    /** Bland's rule simplex loop. False if unbounded above. */
    bool run(const Vec<F>& obj) {
        const std::size_t ncols = aux_active_ ? cols_ + 1 : cols_;
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (j == rhs_col() || is_basic(j)) continue;
                // Reduced cost r_j = obj_j - sum_i obj_{basis_i} * tab_{ij}.
                F r = obj[j];
                for (std::size_t i = 0; i < rows_; ++i) {
                    if (fsign<F>(obj[basis_[i]]) != 0)
                        r -= obj[basis_[i]] * tab_[i][j];
                }
                if (fsign<F>(r) > 0) {
                    enter = j;
                    break;  // Bland: smallest improving index
                }
            }
            if (enter == ncols) return true;  // optimal
            std::size_t leave = rows_;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (fsign<F>(tab_[i][enter]) <= 0) continue;
                if (leave == rows_) {
                    leave = i;
                    continue;
                }
                const F lhs = tab_[i][rhs_col()] * tab_[leave][enter];
                const F rhs = tab_[leave][rhs_col()] * tab_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave]))
                    leave = i;  // min ratio; Bland tie-break on basis index
            }
            if (leave == rows_) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    bool is_basic(std::size_t col) const {
        for (auto b : basis_)
            if (b == col) return true;
        return false;
    }

    std::size_t rows_ = 0, structural_ = 0, cols_ = 0;
    bool aux_active_ = false;
    Matrix<F> tab_;
    std::vector<std::size_t> basis_;
};

/** Standard-form data for a region over free variables x (split x = p - q). */
template <class F>
struct SplitProgram {
    Matrix<F> a;
    Vec<F> b;
    std::size_t dim;

    explicit SplitProgram(const HRep<F>& region) {
        dim = region.ambient_dim();
        auto add_row = [&](const Vec<F>& normal, const F& bound) {
            Vec<F> row(2 * dim);
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] = normal[j];
                row[dim + j] = -normal[j];
            }
            a.push_back(row);
            b.push_back(bound);
        };
        for (const auto& h : region.halfspaces) add_row(h.normal, h.bound);
        for (const auto& e : region.equalities) {
            add_row(e.normal, e.value);
            Vec<F> neg = vscale(F{-1}, e.normal);
            add_row(neg, -e.value);
        }
    }

    Vec<F> objective(const Vec<F>& c) const {
        Vec<F> obj(2 * dim, F{0});
        for (std::size_t j = 0; j < dim && j < c.size(); ++j) {
            obj[j] = c[j];
            obj[dim + j] = -c[j];
        }
        return obj;
    }

    Vec<F> unsplit(const Vec<F>& y) const {
        Vec<F> x(dim, F{0});
        for (std::size_t j = 0; j < dim; ++j) x[j] = y[j] - y[dim + j];
        return x;
    }
};

/** Value-only maximization; throws on infeasible/unbounded. */
template <class F>
LpResult<F> lp_max_raw(const Vec<F>& objective, const HRep<F>& region) {
    SplitProgram<F> prog(region);
    SimplexTableau<F> tab(prog.a, prog.b);
    if (!tab.make_feasible()) throw InfeasibleError("lp_optimize: empty region");
    if (!tab.maximize(prog.objective(objective)))
        throw UnboundedError("lp_optimize: objective unbounded");
    const Vec<F> x = prog.unsplit(tab.solution());
    return {dot(objective, x), x};
}

}  // namespace detail

/**
 * Optimum value without witness purification. Same exactness and error
 * behavior as lp_optimize; used in inner loops where only the value is
 * consumed.
 */
template <class F>
F lp_value(const Vec<F>& objective, const HRep<F>& region, LpSense sense) {
    if (sense == LpSense::Min) {
        Vec<F> neg = vscale(F{-1}, objective);
        return -detail::lp_max_raw(neg, region).value;
    }
    return detail::lp_max_raw(objective, region).value;
}

/**
 * Exact optimum of objective.x over the region. The witness is the
 * lexicographically greatest point of the optimal face, hence a vertex
 * of the region and identical across runs.
 */
template <class F>
LpResult<F> lp_optimize(const Vec<F>& objective, const HRep<F>& region, LpSense sense) {
    const Vec<F> c = sense == LpSense::Min ? vscale(F{-1}, objective) : objective;
    const F raw = detail::lp_max_raw(c, region).value;

    HRep<F> face = region;
    face.equalities.push_back({c, raw});
    Vec<F> point(region.ambient_dim(), F{0});
    for (std::size_t j = 0; j < region.ambient_dim(); ++j) {
        Vec<F> axis(region.ambient_dim(), F{0});
        axis[j] = F{1};
        const F xj = detail::lp_max_raw(axis, face).value;
        point[j] = xj;
        face.equalities.push_back({axis, xj});
    }
    const F value = sense == LpSense::Min ? -raw : raw;
    return {value, point};
}

}  // namespace gptlab

#endif
