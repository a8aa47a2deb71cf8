#pragma once

#include <algorithm>
#include <cmath>

#include "mvspace/multivector.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

inline mvspace::Multivector mv(const oracle::Coeffs& c) { return mvspace::Multivector(c); }
inline mvspace::Vector3 v3(const oracle::Vec& v) { return {v[0], v[1], v[2]}; }
inline oracle::Vec arr(const mvspace::Vector3& v) { return {v.x, v.y, v.z}; }

inline double max_diff(const oracle::Coeffs& a, const oracle::Coeffs& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline double max_diff(const mvspace::Vector3& a, const mvspace::Vector3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_diff(const mvspace::Vector3& a, const oracle::Vec& b) { return max_diff(a, v3(b)); }

// Part of v orthogonal to unit n, rescaled to unit length.
inline oracle::Vec orthogonal_unit(const oracle::Vec& v, const oracle::Vec& n) {
  const oracle::Vec p = oracle::sub(v, oracle::scale(n, oracle::dot(v, n)));
  return oracle::scale(p, 1.0 / std::sqrt(oracle::dot(p, p)));
}

}  // namespace testing_support
