#pragma once

#include <vector>

#include "flexstiff/castigliano.hpp"
#include "flexstiff/geometry.hpp"

namespace flexstiff {

/// How the two springs of a double-spring suspension relate:
///   Centrosymmetric — second spring is the 180-degree rotation of the first
///   (TypeA + TypeB seen from their own anchors); cancels K_xphi and K_yphi.
///   Axisymmetric — second spring is the mirror image across the transverse
///   axis through the reflector center (two TypeA); cancels K_xy and K_yphi.
enum class LayoutKind { Centrosymmetric, Axisymmetric };

/// Lengths entering the printed suspension formulas plus the spring frames.
struct SuspensionGeometry {
    double l_m = 0.0;    // reflector half-extent along the spring line [m]
    double l_rss = 0.0;  // spring extent along the spring line [m]
    PlanarTransform frame_left;   // spring 1 attachment (rotation + tip position)
    PlanarTransform frame_right;  // spring 2 attachment
};

enum class StiffnessProvenance { Table1, RigidBody };

/// Assembled suspension stiffness with the rule that produced it.
struct SuspensionStiffness {
    InPlaneMatrix K;
    StiffnessProvenance provenance = StiffnessProvenance::Table1;

    double k_x() const { return K.m(0, 0); }
    double k_y() const { return K.m(1, 1); }
    double k_phi() const { return K.m(2, 2); }
    double k_xy() const { return K.m(0, 1); }
    double k_xphi() const { return K.m(0, 2); }
    double k_yphi() const { return K.m(1, 2); }
};

/// The printed double-spring formulas, applied verbatim to TypeA constants:
///   both layouts:     K_x = 2k_x, K_y = 2k_y, K_phi = 2k_phi + 6k_phi(1 + l_m/l_rss)^2
///   centrosymmetric:  K_xy = 2k_xy,                 K_xphi = 0,  K_yphi = 0
///   axisymmetric:     K_xy = 0, K_xphi = 2k_xphi + 6k_xphi(1 + l_m/l_rss)^2, K_yphi = 0
SuspensionStiffness assemble_table1(const SpringConstants& type_a, LayoutKind layout,
                                    const SuspensionGeometry& geom);

/// One spring for the congruence assembly: stiffness in the spring's local
/// frame plus the attachment frame (rotation of that frame and the global
/// position of the spring tip).
struct PlacedSpring {
    InPlaneMatrix stiffness;  // local tip stiffness, kind Stiffness
    PlanarTransform frame;
};

/// Independent rigid-link assembly about `body_ref`:
///   K_body = sum_i T_i^T (R_i K_i R_i^T) T_i
/// where R_i rotates the spring stiffness to the global frame and T_i maps
/// body motion (dx, dy, phi) to the attachment-point motion at r_i =
/// frame.translation - body_ref (tip displacement = body displacement + phi z x r_i).
/// Throws ValidationError for a non-positive-definite input stiffness.
SuspensionStiffness assemble_rigid_body(const std::vector<PlacedSpring>& springs,
                                        const Point2& body_ref);

/// Two placed springs plus the rigid reflector, with both assembly results.
struct SuspensionModel {
    RssParams params;
    LayoutKind layout = LayoutKind::Centrosymmetric;
    SuspensionGeometry geom;
    Point2 reflector_center;
    BeamPath path_left;    // global frame, tip at (-l_m, 0)
    BeamPath path_right;   // global frame, tip at (+l_m, 0)
    SpringConstants type_a;
    SpringConstants type_b;

    SuspensionStiffness table1() const;
    SuspensionStiffness rigid_body() const;
};

/// Optional overrides for the Table-1 ratio terms; zero/absent means derived
/// (l_m from the reflector, l_rss from the spring X extent).
struct SuspensionOverrides {
    double l_m = 0.0;
    double l_rss = 0.0;
};

/// Builds both spring paths and attachment frames around a reflector of
/// half-extent `reflector_half_len` centered at the origin. Spring 1 is the
/// TypeA path with its tip at (-l_m, 0); spring 2 is rotated by pi with its
/// tip at (+l_m, 0) and uses the TypeA shape for the centrosymmetric layout
/// (its rotation is the TypeB shape seen from the right anchor) and the
/// TypeB shape for the axisymmetric layout (two TypeA seen from their anchors).
SuspensionModel build_suspension(const RssParams& params, LayoutKind layout,
                                 double reflector_half_len,
                                 const SuspensionOverrides& overrides = {});

}  // namespace flexstiff
