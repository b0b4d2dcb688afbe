#pragma once

#include <iosfwd>
#include <string>

namespace glq {

/// A real number or +infinity, with inf-addition (inf - inf = inf).
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : finite_(true), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtReal plus_infinity() {
    ExtReal r;
    r.finite_ = false;
    return r;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_plus_infinity() const { return !finite_; }
  /// The finite value; throws std::domain_error on +inf.
  double value() const;
  /// value() or +HUGE_VAL.
  double as_double() const;

  friend ExtReal operator+(ExtReal x, ExtReal y);
  /// x - y. inf - inf = inf; finite - inf is not representable and throws.
  friend ExtReal operator-(ExtReal x, ExtReal y);
  friend ExtReal operator*(double s, ExtReal x);

  friend bool operator==(ExtReal x, ExtReal y);
  friend bool operator<(ExtReal x, ExtReal y);
  friend bool operator<=(ExtReal x, ExtReal y) { return !(y < x); }

 private:
  bool finite_ = true;
  double value_ = 0.0;
};

std::string to_string(ExtReal x);
std::ostream& operator<<(std::ostream& os, ExtReal x);

}  // namespace glq
