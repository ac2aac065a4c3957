/**
 * arcbody.hpp
 * Floating-point convex bodies generated by points and circular arcs.
 * Serves the curved examples (lens, stadium, octagon bulges) where exact
 * arithmetic over circles would be disproportionate. Support values and
 * exposed faces are computed analytically per arc; tightness tests use
 * an absolute tolerance (default 1e-9).
 */
#ifndef GPTLAB_ARCBODY_HPP
#define GPTLAB_ARCBODY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gptlab/errors.hpp"
#include "gptlab/faces.hpp"

namespace gptlab {

using VecD = std::vector<double>;

double dotd(const VecD& a, const VecD& b);
VecD addd(const VecD& a, const VecD& b);
VecD subd(const VecD& a, const VecD& b);
VecD scaled(double c, const VecD& a);
double normd(const VecD& a);
double distd(const VecD& a, const VecD& b);

/** Circular arc center + r(cos t * a + sin t * b), t in [theta0, theta1]. */
struct CircularArc {
    VecD center;
    double radius = 1.0;
    VecD a, b;  // orthonormal frame of the arc's plane
    double theta0 = 0.0, theta1 = 0.0;
    bool closed0 = true, closed1 = true;

    VecD point_at(double theta) const;
    /** Check |a|=|b|=1, a.b=0, theta0 < theta1 within tolerance. */
    void validate(double tol) const;
};

/** Exposed face of an arc body: attaining points and/or arc intervals. */
struct ArcFace {
    VecD functional;
    double level = 0.0;
    std::vector<VecD> points;  // attaining generator points / arc tangency points
    struct ArcPart {
        std::size_t arc_id;
        double t0, t1;
        bool closed0, closed1;
    };
    std::vector<ArcPart> arc_parts;  // nondegenerate sub-arcs attaining the level
    int dimension = 0;
};

/** Families recognized by minimal_exposed_faces_arc. */
struct MinimalFaceReport {
    std::vector<ArcFace> singleton_faces;  // exposed points
    std::vector<ArcFace> segment_faces;    // 1-dim flat minimal faces (closed)
    struct ArcFamily {
        std::size_t arc_id;
        double t0, t1;
        bool open0, open1;  // true when the endpoint is excluded from the family
    };
    std::vector<ArcFamily> arc_point_families;  // continuum of singleton faces
    std::vector<VecD> non_exposed_extremal_points;  // reported separately
};

/** Convex hull of point and arc generators, queried within a tolerance. */
class ArcBody {
  public:
    ArcBody(std::vector<VecD> points, std::vector<CircularArc> arcs, double tol = 1e-9);

    const std::vector<VecD>& points() const { return points_; }
    const std::vector<CircularArc>& arcs() const { return arcs_; }
    double tolerance() const { return tol_; }
    std::size_t ambient_dim() const { return dim_; }

    /** Max of direction.x over the body and the face attaining it. */
    std::pair<double, ArcFace> support(const VecD& direction) const;
    ArcFace exposed_face_at(const VecD& direction) const;

    /** Membership within slack (affine-hull distance included). */
    bool contains(const VecD& x, double slack) const;

    /** Interior/boundary/extremal classification; throws OutsideBodyError. */
    PointClass classify_point(const VecD& x) const;

    /** Affine hull dimension of the generators (within tolerance). */
    std::size_t affine_dim() const { return hull_basis_.size(); }
    VecD relative_interior_point() const;

    /** Minimal exposed faces for the supported families; throws
     *  UnsupportedFamilyError for other shapes. */
    MinimalFaceReport minimal_exposed_faces() const;

  private:
    friend struct ArcBodyProbe;
    struct Active;  // internal: active supporting directions at a point

    VecD to_plane(const VecD& x) const;       // hull coordinates (dim <= 2)
    VecD plane_dir(double theta) const;       // ambient direction of in-plane angle
    double gap(double theta, const VecD& x) const;  // support(theta) - h(theta).x
    std::vector<Active> active_normals(const VecD& x) const;

    MinimalFaceReport faces_point_hull() const;
    MinimalFaceReport faces_lens() const;
    MinimalFaceReport faces_stadium() const;
    MinimalFaceReport faces_octagon_bulges() const;

    std::vector<VecD> points_;
    std::vector<CircularArc> arcs_;
    double tol_;
    std::size_t dim_;
    VecD hull_origin_;
    std::vector<VecD> hull_basis_;  // orthonormal, from generators
};

}  // namespace gptlab

#endif
