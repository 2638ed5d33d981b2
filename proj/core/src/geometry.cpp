#include "dynamask/geometry.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "dynamask/errors.hpp"

namespace dynamask {

void Intrinsics::validate() const {
  if (!(fx > 0) || !(fy > 0)) throw ConfigError("intrinsics: focal lengths must be positive");
  if (!(cx > 0 && cx < width)) throw ConfigError("intrinsics: cx outside image");
  if (!(cy > 0 && cy < height)) throw ConfigError("intrinsics: cy outside image");
  if (!(depth_scale > 0)) throw ConfigError("intrinsics: depth_scale must be positive");
}

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = (a.rotation * b.rotation).normalized();
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

Pose invert(const Pose& a) { return a.inverse(); }

Point3 transform(const Pose& pose, const Point3& p) { return pose.apply(p); }

Point3 backproject(double u, double v, double depth_m, const Intrinsics& intr) {
  if (!(depth_m > 0)) throw InvalidDepthError("backproject: non-positive depth");
  return {(u - intr.cx) / intr.fx * depth_m, (v - intr.cy) / intr.fy * depth_m, depth_m};
}

Eigen::Vector2d project(const Point3& p_cam, const Intrinsics& intr) {
  if (!(p_cam.z() > 0)) throw InvalidDepthError("project: point behind camera");
  return {intr.fx * p_cam.x() / p_cam.z() + intr.cx,
          intr.fy * p_cam.y() / p_cam.z() + intr.cy};
}

Pose rigid_align(std::span<const Point3> src, std::span<const Point3> dst) {
  if (src.size() != dst.size())
    throw DegenerateGeometryError("rigid_align: point counts differ");
  const size_t n = src.size();
  if (n < 3) throw DegenerateGeometryError("rigid_align: need at least 3 point pairs");

  Eigen::Vector3d c_src = Eigen::Vector3d::Zero();
  Eigen::Vector3d c_dst = Eigen::Vector3d::Zero();
  for (size_t i = 0; i < n; ++i) {
    c_src += src[i];
    c_dst += dst[i];
  }
  c_src /= static_cast<double>(n);
  c_dst /= static_cast<double>(n);

  // Cross-covariance of the centered sets.
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  double src_spread = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector3d s = src[i] - c_src;
    h += s * (dst[i] - c_dst).transpose();
    src_spread += s.squaredNorm();
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();

  // Collinear sources leave the rotation about the line unconstrained:
  // the covariance collapses to rank 1. src_spread == 0 also means all
  // points coincide.
  if (src_spread <= 0.0 || sv(1) <= 1e-9 * sv(0))
    throw DegenerateGeometryError("rigid_align: degenerate (collinear) point configuration");

  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  if ((svd.matrixV() * svd.matrixU().transpose()).determinant() < 0) d(2, 2) = -1.0;
  const Eigen::Matrix3d r = svd.matrixV() * d * svd.matrixU().transpose();

  Pose out;
  out.rotation = Eigen::Quaterniond(r).normalized();
  out.translation = c_dst - r * c_src;
  return out;
}

double rotation_angle(const Pose& pose) {
  const double w = std::min(1.0, std::abs(pose.rotation.normalized().w()));
  return 2.0 * std::acos(w);
}

}  // namespace dynamask
