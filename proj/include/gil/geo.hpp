#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gil {

// Shared tolerances. Sign predicates and membership tests use kGeomEps,
// unit-norm checks use kNormEps, mass comparisons use kMeasEps.
inline constexpr double kNormEps = 1e-12;
inline constexpr double kGeomEps = 1e-9;
inline constexpr double kMeasEps = 1e-9;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error { using Error::Error; };
struct EmptyRegionError : Error { using Error::Error; };
struct AntipodalInputError : Error { using Error::Error; };
struct DegeneratePolygonError : Error { using Error::Error; };
struct NotOnBoundaryError : Error { using Error::Error; };
struct PartitionFailureError : Error { using Error::Error; };
struct HemisphereViolationError : Error { using Error::Error; };
struct HypothesisNotEstablishedError : Error { using Error::Error; };

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline double clamp_unit(double t) { return t < -1.0 ? -1.0 : (t > 1.0 ? 1.0 : t); }

// Unit direction on S^2. The constructor normalizes its input and rejects
// near-zero vectors, so the norm-1 invariant holds after construction.
class UnitVec {
 public:
  UnitVec() = default;
  explicit UnitVec(const Vec3& v) {
    const double n = norm(v);
    if (n < 1e-14) throw InputError("UnitVec: cannot normalize a near-zero vector");
    v_ = v / n;
  }
  UnitVec(double x, double y, double z) : UnitVec(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

 private:
  Vec3 v_{0.0, 0.0, 1.0};
};

inline UnitVec e1() { return UnitVec(1.0, 0.0, 0.0); }
inline UnitVec e2() { return UnitVec(0.0, 1.0, 0.0); }
inline UnitVec e3() { return UnitVec(0.0, 0.0, 1.0); }

// Deterministic orthonormal frame (t1, t2, n) for a unit n.
inline void tangent_frame(const Vec3& n, Vec3& t1, Vec3& t2) {
  if (std::abs(n.z) < 0.9) {
    t1 = Vec3{-n.y, n.x, 0.0};
  } else {
    t1 = Vec3{0.0, -n.z, n.y};
  }
  t1 = t1 / norm(t1);
  t2 = cross(n, t1);
}

struct Mat3 {
  // Row-major rotation matrix.
  double m[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  Vec3 apply(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
};

}  // namespace gil
