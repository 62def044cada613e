#pragma once

#include <cstddef>
#include <vector>

namespace flexstiff {

/// Planar point. All geometry is in SI meters; config/report layers convert
/// to micrometers at the boundary.
struct Point2 {
    double x = 0.0;  // [m]
    double y = 0.0;  // [m]
};

/// Rectangular beam cross-section. `width` is the in-plane dimension that
/// bends, `thickness` the out-of-plane device-layer dimension.
struct CrossSection {
    double width = 0.0;      // [m]
    double thickness = 0.0;  // [m]

    /// In-plane second moment of area, I = t*w^3/12 [m^4].
    double inertia() const { return thickness * width * width * width / 12.0; }
    /// Axial area, A = w*t [m^2].
    double area() const { return width * thickness; }
};

/// Straight beam segment between two shared path vertices.
struct Segment {
    Point2 start;
    Point2 end;
    CrossSection section;

    double length() const;
};

/// Piecewise-straight planar beam path from anchor to tip. Consecutive
/// segments share their endpoint exactly (same double values, not nearly).
struct BeamPath {
    std::vector<Segment> segments;

    const Point2& anchor() const { return segments.front().start; }
    const Point2& tip() const { return segments.back().end; }
    double total_length() const;
};

/// Throws ValidationError if the path is empty, has a zero-length segment,
/// a non-positive section, or disconnected consecutive segments.
void validate_path(const BeamPath& path);

/// The nine named serpentine design variables plus device thickness and material.
/// Lengths in meters, modulus in Pa.
struct RssParams {
    int n_meanders = 1;          // N
    double l1 = 0.0;             // anchor lead-in length
    double l2 = 0.0;             // meander leg length
    double l3 = 0.0;             // near-side connector length
    double l4 = 0.0;             // far-side connector length
    double l5 = 0.0;             // tip lead-out length
    double w_o = 0.0;            // lead-in beam width (also the meander envelope)
    double w_p = 0.0;            // meander leg / lead-out width
    double w_pc = 0.0;           // connector width
    double thickness = 0.0;      // device layer thickness
    double youngs_modulus = 0.0; // [Pa]
};

/// Throws ValidationError naming the first non-positive/invalid field.
void validate_rss_params(const RssParams& params);

/// True when the meander legs fit inside the w_o envelope (l2 <= w_o).
/// Reported as a footprint diagnostic; the paper's own example violates it,
/// so it is not a validation error.
bool fits_envelope(const RssParams& params);

enum class SpringVariant { TypeA, TypeB };

/// Rigid in-plane motion: rotate about the origin, then translate.
struct PlanarTransform {
    double rotation = 0.0;  // [rad], counterclockwise
    Point2 translation;

    Point2 apply(const Point2& p) const;
};

/// Canonical serpentine path for TypeA:
///   anchor --l1 (+X, width w_o)--> N x [ leg l2 (-Y, w_p), connector l4 (+X, w_pc),
///   leg l2 (+Y, w_p), connector l3 (+X, w_pc) ] --l5 (+X, w_p)--> tip.
/// TypeB is the TypeA path mirrored about the X axis. Segment count is 2 + 4N.
BeamPath build_rss_path(const RssParams& params, SpringVariant variant);

/// Reflect about the X axis: (x, y) -> (x, -y). Involution; sections preserved.
BeamPath mirror_x(const BeamPath& path);

/// Apply a rigid transform to every vertex. Segment lengths are invariant.
BeamPath transform(const BeamPath& path, const PlanarTransform& t);

struct PathExtents {
    double x = 0.0;  // bounding-box size along X [m]
    double y = 0.0;  // bounding-box size along Y [m]
};

/// Bounding-box extents of the path centerline.
PathExtents path_extents(const BeamPath& path);

}  // namespace flexstiff
