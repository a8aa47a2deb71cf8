#include "mvspace/complex_like.hpp"

#include "mvspace/errors.hpp"

namespace mvspace {

ComplexLike ComplexLike::from_multivector(const Multivector& m, double tol) {
  const ComplexLike z{m.scalar_part(), m[Blade::e12]};
  if (max_abs_diff(m, z.lift()) > tol) throw ArgumentError("multivector is not of the form a + b e12");
  return z;
}

ComplexLike ComplexLike::operator/(const ComplexLike& o) const {
  const double d = o.norm_squared();
  if (d == 0.0) throw DivisionByZeroError("complex-like division by zero");
  const ComplexLike n = *this * o.conj();
  return {n.re / d, n.im / d};
}

}  // namespace mvspace
