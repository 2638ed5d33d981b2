#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <span>

namespace dynamask {

using Point3 = Eigen::Vector3d;

/// Pinhole camera model. depth_scale is the number of raw depth units per
/// meter (5000 for TUM 16-bit depth images).
struct Intrinsics {
  double fx = 0, fy = 0;
  double cx = 0, cy = 0;
  int width = 0, height = 0;
  double depth_scale = 5000.0;

  bool contains(double u, double v) const {
    return u >= 0 && u < width && v >= 0 && v < height;
  }

  /// Throws ConfigError when any invariant is violated.
  void validate() const;
};

/// SE(3) rigid transform stored as unit quaternion + translation.
/// Convention: maps camera-frame points into the world frame,
/// p_world = R * p_cam + t.
struct Pose {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return Pose{}; }

  Point3 apply(const Point3& p) const { return rotation * p + translation; }

  Pose inverse() const {
    Pose out;
    out.rotation = rotation.conjugate();
    out.translation = -(out.rotation * translation);
    return out;
  }

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = rotation.toRotationMatrix();
    m.block<3, 1>(0, 3) = translation;
    return m;
  }
};

/// compose(a, b) maps p to a(b(p)). The quaternion is renormalized so that
/// chains over thousands of frames do not drift off the unit sphere.
Pose compose(const Pose& a, const Pose& b);
Pose invert(const Pose& a);
Point3 transform(const Pose& pose, const Point3& p);

/// Back-projects pixel (u, v) at metric depth into the camera frame:
/// ((u-cx)/fx*d, (v-cy)/fy*d, d). Throws InvalidDepthError when depth <= 0.
Point3 backproject(double u, double v, double depth_m, const Intrinsics& intr);

/// Projects a camera-frame point to pixel coordinates.
/// Throws InvalidDepthError when p.z() <= 0.
Eigen::Vector2d project(const Point3& p_cam, const Intrinsics& intr);

/// Least-squares rigid alignment: returns the SE(3) transform minimizing
/// sum ||dst_i - (R*src_i + t)||^2 over all pairs (Umeyama closed form,
/// reflection-corrected, no scale).
/// Throws DegenerateGeometryError for <3 pairs, mismatched lengths, or a
/// collinear source configuration.
Pose rigid_align(std::span<const Point3> src, std::span<const Point3> dst);

/// Rotation angle of a pose in radians, in [0, pi].
double rotation_angle(const Pose& pose);

}  // namespace dynamask
