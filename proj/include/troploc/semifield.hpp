#pragma once

#include <cmath>
#include <limits>

#include "troploc/errors.hpp"

namespace troploc {

// Comparison slack used wherever rational powers or long max/plus chains
// introduce rounding.  One knob for the whole library; the CLI exposes it
// as --tolerance.
inline double& tolerance() {
  static double eps = 1e-9;
  return eps;
}

/// Element of the max-plus semifield R_max,+.
///
/// |        set        |  (+)  | (*) | (+) neutral | (*) neutral |
/// | reals U {-inf}    |  max  |  +  |    -inf     |      0      |
///
/// The bottom element (the additive neutral) is stored as IEEE -inf.
/// +inf and NaN are rejected at construction, so downstream arithmetic
/// never sees them and multiplication by bottom can never produce NaN.
class TropScalar {
 public:
  // Default-constructed scalar is the bottom element.
  constexpr TropScalar() noexcept : v_(kNegInf) {}

  explicit TropScalar(double v) : v_(validated(v)) {}

  static constexpr TropScalar bottom() noexcept { return TropScalar(); }
  static TropScalar one() { return TropScalar(0.0); }

  double value() const { return v_; }
  bool is_bottom() const { return v_ == kNegInf; }
  bool is_finite() const { return v_ != kNegInf; }

  // (+) is max; idempotent.
  friend TropScalar operator+(TropScalar a, TropScalar b) {
    return unchecked(a.v_ < b.v_ ? b.v_ : a.v_);
  }

  // (*) is conventional +; bottom absorbs everything.
  friend TropScalar operator*(TropScalar a, TropScalar b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return unchecked(a.v_ + b.v_);
  }

  friend bool operator==(TropScalar a, TropScalar b) { return a.v_ == b.v_; }
  friend bool operator!=(TropScalar a, TropScalar b) { return a.v_ != b.v_; }
  friend bool operator<(TropScalar a, TropScalar b) { return a.v_ < b.v_; }
  friend bool operator<=(TropScalar a, TropScalar b) { return a.v_ <= b.v_; }
  friend bool operator>(TropScalar a, TropScalar b) { return a.v_ > b.v_; }
  friend bool operator>=(TropScalar a, TropScalar b) { return a.v_ >= b.v_; }

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  static double validated(double v) {
    if (std::isnan(v)) throw InvalidValue("NaN is not a semifield element");
    if (v == std::numeric_limits<double>::infinity())
      throw InvalidValue("+inf is not a semifield element");
    return v;
  }

  static TropScalar unchecked(double v) {
    TropScalar t;
    t.v_ = v;
    return t;
  }

  double v_;
};

/// Real-exponent power: x^alpha is alpha*x in conventional terms, so the
/// binomial identity (x (+) y)^a = x^a (+) y^a holds for a >= 0.
/// bottom^alpha is bottom for alpha > 0 and undefined otherwise.
inline TropScalar pow(TropScalar a, double alpha) {
  if (std::isnan(alpha) || std::isinf(alpha))
    throw InvalidValue("exponent must be finite");
  if (a.is_bottom()) {
    if (alpha > 0.0) return TropScalar::bottom();
    throw BottomPower("bottom raised to a nonpositive exponent");
  }
  return TropScalar(alpha * a.value());
}

/// Multiplicative inverse: conventional negation.
inline TropScalar inv(TropScalar a) { return pow(a, -1.0); }

}  // namespace troploc
