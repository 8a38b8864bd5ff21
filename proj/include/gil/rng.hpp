#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "gil/geo.hpp"

namespace gil {

// Seeded random substreams. Every consumer derives its own stream from a
// root seed, a textual label and an index, so results are reproducible and
// independent of evaluation order (concurrent evaluation included).
//
// Raw bits come from std::mt19937_64 (the engine is pinned by the standard);
// variates are produced here rather than with std::*_distribution, whose
// output is implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t root_seed, std::string_view label, std::uint64_t index = 0)
      : engine_(mix(root_seed, label, index)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::uint32_t uniform_index(std::uint32_t n) {
    return static_cast<std::uint32_t>(uniform() * n) % n;
  }

  // Uniform direction on S^2.
  Vec3 sphere() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * kPi);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

  // Uniform point in the open cap {v : v.center > cos(radius)}.
  Vec3 cap_point(const Vec3& center, double radius) {
    const double z = uniform(std::cos(radius), 1.0);
    const double phi = uniform(0.0, 2.0 * kPi);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec3 t1, t2;
    tangent_frame(center, t1, t2);
    return t1 * (s * std::cos(phi)) + t2 * (s * std::sin(phi)) + center * z;
  }

  // Uniform random rotation (Shoemake's quaternion method).
  Mat3 rotation() {
    const double u1 = uniform(), u2 = uniform(), u3 = uniform();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    const double qx = a * std::sin(2.0 * kPi * u2);
    const double qy = a * std::cos(2.0 * kPi * u2);
    const double qz = b * std::sin(2.0 * kPi * u3);
    const double qw = b * std::cos(2.0 * kPi * u3);
    Mat3 r;
    r.m[0] = 1 - 2 * (qy * qy + qz * qz);
    r.m[1] = 2 * (qx * qy - qz * qw);
    r.m[2] = 2 * (qx * qz + qy * qw);
    r.m[3] = 2 * (qx * qy + qz * qw);
    r.m[4] = 1 - 2 * (qx * qx + qz * qz);
    r.m[5] = 2 * (qy * qz - qx * qw);
    r.m[6] = 2 * (qx * qz - qy * qw);
    r.m[7] = 2 * (qy * qz + qx * qw);
    r.m[8] = 1 - 2 * (qx * qx + qy * qy);
    return r;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  static std::uint64_t mix(std::uint64_t root, std::string_view label, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the label
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return splitmix(splitmix(root ^ h) + index);
  }

  std::mt19937_64 engine_;
};

}  // namespace gil
