/**
 * faces.hpp
 * Supporting hyperplanes, exposed faces, and point classification for
 * exact polytopes. A face is carried as its supporting functional plus
 * the generator vertices attaining the support value.
 */
#ifndef GPTLAB_FACES_HPP
#define GPTLAB_FACES_HPP

#include <vector>

#include "gptlab/polytope.hpp"

namespace gptlab {

/** Exposed face of a polytope: body ∩ {x : functional.x = level}. */
template <class F>
struct Face {
    Vec<F> functional;
    F level;
    std::vector<std::size_t> vertex_ids;  // indices into the polytope's vertices()
    std::size_t dimension = 0;

    std::vector<Vec<F>> points(const Polytope<F>& body) const {
        std::vector<Vec<F>> out;
        for (auto i : vertex_ids) out.push_back(body.vertices()[i]);
        return out;
    }
};

enum class PointClass {
    interior,
    boundary_non_extremal,
    extremal_exposed,
    extremal_not_exposed,
};

inline const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::interior: return "interior";
        case PointClass::boundary_non_extremal: return "boundary_non_extremal";
        case PointClass::extremal_exposed: return "extremal_exposed";
        case PointClass::extremal_not_exposed: return "extremal_not_exposed";
    }
    return "?";
}

/** Exposed face at a direction: argmax vertices of direction.x. */
template <class F>
Face<F> exposed_face_at(const Polytope<F>& body, const Vec<F>& direction) {
    if (is_zero_vec(direction))
        throw ZeroDirectionError("exposed_face_at: zero direction");
    auto [value, ids] = body.support(direction);
    Face<F> f;
    f.functional = direction;
    f.level = value;
    f.vertex_ids = std::move(ids);
    f.dimension = affine_hull(f.points(body)).dim();
    return f;
}

/** Support value and the exposed face attaining it. */
template <class F>
std::pair<F, Face<F>> support(const Polytope<F>& body, const Vec<F>& direction) {
    Face<F> f = exposed_face_at(body, direction);
    return {f.level, f};
}

/**
 * A functional exposing exactly the face of the body whose tight facet
 * set is that of x: the sum of all facet normals active at x.
 */
template <class F>
Face<F> minimal_face_through(const Polytope<F>& body, const Vec<F>& x) {
    Vec<F> h(body.ambient_dim(), F{0});
    F level{0};
    for (const auto& hs : body.hrep().halfspaces) {
        if (dot(hs.normal, x) == hs.bound) {
            h = vadd(h, hs.normal);
            level += hs.bound;
        }
    }
    Face<F> f;
    f.functional = std::move(h);
    f.level = level;
    const auto& vs = body.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (dot(f.functional, vs[i]) == f.level) f.vertex_ids.push_back(i);
    f.dimension = f.vertex_ids.empty() ? 0 : affine_hull(f.points(body)).dim();
    return f;
}

/**
 * Classify a point of a polytope. For polytopes every extremal point is
 * exposed, so only three of the four classes can occur.
 * Throws OutsideBodyError when x is not in the body.
 */
template <class F>
PointClass classify_point(const Polytope<F>& body, const Vec<F>& x) {
    if (!body.contains(x)) throw OutsideBodyError("classify_point: point outside body");
    bool tight = false;
    for (const auto& hs : body.hrep().halfspaces) {
        if (dot(hs.normal, x) == hs.bound) {
            tight = true;
            break;
        }
    }
    if (!tight) return PointClass::interior;  // relative interior
    for (const auto& v : body.vertices())
        if (v == x) return PointClass::extremal_exposed;
    return PointClass::boundary_non_extremal;
}

/**
 * Minimal exposed faces of a polytope: exactly its vertices, each with
 * an exposing functional (sum of the facet normals active there).
 */
template <class F>
std::vector<Face<F>> minimal_exposed_faces(const Polytope<F>& body) {
    std::vector<Face<F>> out;
    const auto& vs = body.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Face<F> f = minimal_face_through(body, vs[i]);
        f.vertex_ids = {i};
        f.dimension = 0;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace gptlab

#endif
