// Dense vector helpers used throughout the library.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace finsum {

using Vector = std::vector<double>;

inline Vector zeros(std::size_t d) { return Vector(d, 0.0); }

inline void check_dim(const Vector& v, std::size_t d, const char* what) {
  if (v.size() != d) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

inline double dot(const Vector& a, const Vector& b) {
  check_dim(b, a.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2_sq(const Vector& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return s;
}

inline double norm2(const Vector& a) { return std::sqrt(norm2_sq(a)); }

// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
  check_dim(y, x.size(), "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(Vector& x, double alpha) {
  for (double& v : x) v *= alpha;
}

inline Vector scaled(const Vector& x, double alpha) {
  Vector y = x;
  scale(y, alpha);
  return y;
}

inline Vector add(const Vector& a, const Vector& b) {
  Vector y = a;
  axpy(1.0, b, y);
  return y;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector y = a;
  axpy(-1.0, b, y);
  return y;
}

inline double dist2(const Vector& a, const Vector& b) {
  check_dim(b, a.size(), "dist2");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double t = a[i] - b[i];
    s += t * t;
  }
  return std::sqrt(s);
}

inline bool all_finite(const Vector& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace finsum
