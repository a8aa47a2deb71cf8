#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace mvspace {

inline constexpr double kDefaultTolerance = 1e-12;

// Plain Cartesian three-vector. Used both for grade-1 content and for the
// dual (time-vector) coordinates of a bivector.
struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vector3 operator-() const { return {-x, -y, -z}; }
  constexpr Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vector3 operator/(double s) const { return {x / s, y / s, z / s}; }
  friend constexpr Vector3 operator*(double s, const Vector3& v) { return v * s; }

  constexpr bool operator==(const Vector3&) const = default;
};

constexpr double dot(const Vector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vector3& a) { return std::sqrt(dot(a, a)); }

// Throws ArgumentError on a zero vector.
Vector3 normalized(const Vector3& a);

// Throws ArgumentError unless |a| = 1 within `tol`. `what` names the argument.
void require_unit(const Vector3& a, const char* what, double tol = kDefaultTolerance);

bool is_finite(const Vector3& a);

// Basis blade order used for coefficient storage.
enum class Blade : std::size_t { scalar = 0, e1, e2, e3, e23, e31, e12, e123 };

// Real Cl(3,0) multivector
//
//   s + v1 e1 + v2 e2 + v3 e3 + b1 e23 + b2 e31 + b3 e12 + p e123
//
// The bivector coefficients (b1, b2, b3) are the components of the dual
// vector: b1 e23 + b2 e31 + b3 e12 = i (b1 e1 + b2 e2 + b3 e3) with
// i = e123. A time vector t therefore occupies the bivector slot as a
// plain component copy.
//
// Every constructor and arithmetic operation rejects non-finite results.
class Multivector {
 public:
  static constexpr std::size_t kSize = 8;
  using Coefficients = std::array<double, kSize>;

  constexpr Multivector() = default;
  // Throws ArgumentError if any coefficient is not finite.
  explicit Multivector(const Coefficients& c);

  static Multivector scalar(double s);
  static Multivector vector(const Vector3& v);
  // i * dual, i.e. dual.x e23 + dual.y e31 + dual.z e12.
  static Multivector bivector(const Vector3& dual);
  static Multivector pseudoscalar(double p);
  static Multivector basis(Blade b);
  static Multivector from_parts(double s, const Vector3& v, const Vector3& dual, double p);

  double operator[](Blade b) const { return c_[static_cast<std::size_t>(b)]; }
  double operator[](std::size_t i) const { return c_[i]; }
  const Coefficients& coefficients() const { return c_; }

  double scalar_part() const { return c_[0]; }
  Vector3 vector_part() const { return {c_[1], c_[2], c_[3]}; }
  Vector3 bivector_part() const { return {c_[4], c_[5], c_[6]}; }
  double trivector_part() const { return c_[7]; }

  Multivector operator-() const;
  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(double s) const;
  Multivector operator/(double s) const;
  friend Multivector operator*(double s, const Multivector& m) { return m * s; }

  // Geometric product.
  Multivector operator*(const Multivector& o) const;

  bool operator==(const Multivector&) const = default;

  // Largest absolute coefficient.
  double max_abs() const;
  // Sum of squared coefficients.
  double norm_squared() const;

 private:
  Coefficients c_{};
};

Multivector geometric_product(const Multivector& u, const Multivector& v);

// Grade-k projection, k in 0..3. Throws ArgumentError otherwise.
Multivector grade(const Multivector& m, int k);

// Negates grades 2 and 3.
Multivector reverse(const Multivector& m);

// Negates grades 1 and 3 (the automorphism psi -> psi*).
Multivector star(const Multivector& m);

bool is_grade(const Multivector& m, int k, double tol = 0.0);

// Symmetric and antisymmetric halves of the product of two grade-1
// multivectors. Non-vector input throws ArgumentError.
double dot(const Multivector& u, const Multivector& v);
Multivector wedge(const Multivector& u, const Multivector& v);
Multivector wedge(const Vector3& u, const Vector3& v);

// v / v^2. Throws DivisionByZeroError for the zero vector.
Vector3 vector_inverse(const Vector3& v);
Multivector vector_inverse(const Multivector& v);

// Max coefficient difference below `tol`.
bool approx_equal(const Multivector& a, const Multivector& b, double tol = kDefaultTolerance);

// Max coefficient difference.
double max_abs_diff(const Multivector& a, const Multivector& b);

std::ostream& operator<<(std::ostream& os, const Multivector& m);
std::ostream& operator<<(std::ostream& os, const Vector3& v);

// Precomputed product table entry: basis(i) * basis(j) = sign * basis(index).
struct ProductEntry {
  std::size_t index;
  int sign;
};

const std::array<std::array<ProductEntry, Multivector::kSize>, Multivector::kSize>& product_table();

}  // namespace mvspace
