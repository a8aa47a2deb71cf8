#include "mvspace/multivector.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>

#include "mvspace/errors.hpp"

namespace mvspace {

namespace {

using Table = std::array<std::array<ProductEntry, Multivector::kSize>, Multivector::kSize>;

// Generator bitmask of each stored blade and the sign relating the stored
// blade to the ascending-index product of its generators (e31 = -e1e3).
constexpr std::array<unsigned, Multivector::kSize> kMask = {0b000, 0b001, 0b010, 0b100,
                                                             0b110, 0b101, 0b011, 0b111};
constexpr std::array<int, Multivector::kSize> kOrientation = {1, 1, 1, 1, 1, -1, 1, 1};

// Sign from sorting the concatenated generator list of two ascending
// blades. Every generator squares to +1, so no metric factor appears.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

constexpr std::size_t index_of_mask(unsigned mask) {
  for (std::size_t k = 0; k < Multivector::kSize; ++k)
    if (kMask[k] == mask) return k;
  return Multivector::kSize;
}

constexpr Table build_table() {
  Table t{};
  for (std::size_t i = 0; i < Multivector::kSize; ++i) {
    for (std::size_t j = 0; j < Multivector::kSize; ++j) {
      const unsigned mask = kMask[i] ^ kMask[j];
      const std::size_t k = index_of_mask(mask);
      const int sign = kOrientation[i] * kOrientation[j] * reorder_sign(kMask[i], kMask[j]) * kOrientation[k];
      t[i][j] = {k, sign};
    }
  }
  return t;
}

constexpr Table kTable = build_table();

constexpr std::array<int, Multivector::kSize> kGrade = {0, 1, 1, 1, 2, 2, 2, 3};

Multivector::Coefficients checked(const Multivector::Coefficients& c, const char* op) {
  for (double x : c)
    if (!std::isfinite(x)) throw OverflowError(std::string("non-finite coefficient produced by ") + op);
  return c;
}

template <class F>
Multivector map_by_grade(const Multivector& m, F&& factor) {
  Multivector::Coefficients c = m.coefficients();
  for (std::size_t k = 0; k < Multivector::kSize; ++k) c[k] *= factor(kGrade[k]);
  return Multivector(c);
}

void require_vector(const Multivector& m, const char* what) {
  if (!is_grade(m, 1)) throw ArgumentError(std::string(what) + " must be a grade-1 multivector");
}

}  // namespace

const Table& product_table() { return kTable; }

Vector3 normalized(const Vector3& a) {
  const double n = norm(a);
  if (!(n > 0.0)) throw ArgumentError("cannot normalize a zero vector");
  return a / n;
}

void require_unit(const Vector3& a, const char* what, double tol) {
  if (!is_finite(a) || std::abs(norm(a) - 1.0) > tol)
    throw ArgumentError(std::string(what) + " must be a unit vector");
}

bool is_finite(const Vector3& a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }

Multivector::Multivector(const Coefficients& c) : c_(c) {
  for (double x : c_)
    if (!std::isfinite(x)) throw ArgumentError("multivector coefficients must be finite");
}

Multivector Multivector::scalar(double s) { return Multivector({s, 0, 0, 0, 0, 0, 0, 0}); }

Multivector Multivector::vector(const Vector3& v) { return Multivector({0, v.x, v.y, v.z, 0, 0, 0, 0}); }

Multivector Multivector::bivector(const Vector3& d) { return Multivector({0, 0, 0, 0, d.x, d.y, d.z, 0}); }

Multivector Multivector::pseudoscalar(double p) { return Multivector({0, 0, 0, 0, 0, 0, 0, p}); }

Multivector Multivector::basis(Blade b) {
  Coefficients c{};
  c[static_cast<std::size_t>(b)] = 1.0;
  return Multivector(c);
}

Multivector Multivector::from_parts(double s, const Vector3& v, const Vector3& d, double p) {
  return Multivector({s, v.x, v.y, v.z, d.x, d.y, d.z, p});
}

Multivector Multivector::operator-() const {
  Coefficients c = c_;
  for (double& x : c) x = -x;
  return Multivector(c);
}

Multivector Multivector::operator+(const Multivector& o) const {
  Coefficients c;
  for (std::size_t k = 0; k < kSize; ++k) c[k] = c_[k] + o.c_[k];
  return Multivector(checked(c, "addition"));
}

Multivector Multivector::operator-(const Multivector& o) const {
  Coefficients c;
  for (std::size_t k = 0; k < kSize; ++k) c[k] = c_[k] - o.c_[k];
  return Multivector(checked(c, "subtraction"));
}

Multivector Multivector::operator*(double s) const {
  Coefficients c;
  for (std::size_t k = 0; k < kSize; ++k) c[k] = c_[k] * s;
  return Multivector(checked(c, "scaling"));
}

Multivector Multivector::operator/(double s) const {
  if (s == 0.0) throw DivisionByZeroError("multivector divided by zero");
  Coefficients c;
  for (std::size_t k = 0; k < kSize; ++k) c[k] = c_[k] / s;
  return Multivector(checked(c, "division"));
}

Multivector Multivector::operator*(const Multivector& o) const {
  Coefficients c{};
  for (std::size_t i = 0; i < kSize; ++i) {
    if (c_[i] == 0.0) continue;
    for (std::size_t j = 0; j < kSize; ++j) {
      const ProductEntry& e = kTable[i][j];
      c[e.index] += e.sign * c_[i] * o.c_[j];
    }
  }
  return Multivector(checked(c, "geometric product"));
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

double Multivector::norm_squared() const {
  double s = 0.0;
  for (double x : c_) s += x * x;
  return s;
}

Multivector geometric_product(const Multivector& u, const Multivector& v) { return u * v; }

Multivector grade(const Multivector& m, int k) {
  if (k < 0 || k > 3) throw ArgumentError("grade must be 0, 1, 2 or 3, got " + std::to_string(k));
  return map_by_grade(m, [k](int g) { return g == k ? 1.0 : 0.0; });
}

Multivector reverse(const Multivector& m) {
  return map_by_grade(m, [](int g) { return g >= 2 ? -1.0 : 1.0; });
}

Multivector star(const Multivector& m) {
  return map_by_grade(m, [](int g) { return (g & 1) ? -1.0 : 1.0; });
}

bool is_grade(const Multivector& m, int k, double tol) {
  for (std::size_t i = 0; i < Multivector::kSize; ++i)
    if (kGrade[i] != k && std::abs(m[i]) > tol) return false;
  return true;
}

double dot(const Multivector& u, const Multivector& v) {
  require_vector(u, "dot: left operand");
  require_vector(v, "dot: right operand");
  return 0.5 * (u * v + v * u).scalar_part();
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  require_vector(u, "wedge: left operand");
  require_vector(v, "wedge: right operand");
  return 0.5 * (u * v - v * u);
}

Multivector wedge(const Vector3& u, const Vector3& v) { return wedge(Multivector::vector(u), Multivector::vector(v)); }

Vector3 vector_inverse(const Vector3& v) {
  const double n2 = dot(v, v);
  if (!(n2 > 0.0)) throw DivisionByZeroError("inverse of the zero vector");
  return v / n2;
}

Multivector vector_inverse(const Multivector& v) {
  require_vector(v, "vector_inverse");
  return Multivector::vector(vector_inverse(v.vector_part()));
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < Multivector::kSize; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) { return max_abs_diff(a, b) <= tol; }

std::ostream& operator<<(std::ostream& os, const Vector3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

std::ostream& operator<<(std::ostream& os, const Multivector& m) {
  static constexpr const char* kNames[] = {"", "e1", "e2", "e3", "e23", "e31", "e12", "e123"};
  os << m[std::size_t{0}];
  for (std::size_t k = 1; k < Multivector::kSize; ++k) os << (m[k] < 0 ? " - " : " + ") << std::abs(m[k]) << kNames[k];
  return os;
}

}  // namespace mvspace
