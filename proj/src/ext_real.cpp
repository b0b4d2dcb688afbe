#include "glq/ext_real.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace glq {

double ExtReal::value() const {
  if (!finite_) throw std::domain_error("ExtReal: value of +inf requested");
  return value_;
}

double ExtReal::as_double() const { return finite_ ? value_ : HUGE_VAL; }

ExtReal operator+(ExtReal x, ExtReal y) {
  if (!x.finite_ || !y.finite_) return ExtReal::plus_infinity();
  return ExtReal(x.value_ + y.value_);
}

ExtReal operator-(ExtReal x, ExtReal y) {
  if (!x.finite_) return ExtReal::plus_infinity();
  if (!y.finite_) throw std::domain_error("ExtReal: finite minus +inf is -inf");
  return ExtReal(x.value_ - y.value_);
}

ExtReal operator*(double s, ExtReal x) {
  if (!x.finite_) {
    if (s > 0) return x;
    if (s == 0) return ExtReal(0.0);
    throw std::domain_error("ExtReal: negative multiple of +inf");
  }
  return ExtReal(s * x.value_);
}

bool operator==(ExtReal x, ExtReal y) {
  if (x.finite_ != y.finite_) return false;
  return !x.finite_ || x.value_ == y.value_;
}

bool operator<(ExtReal x, ExtReal y) {
  if (!x.finite_) return false;
  if (!y.finite_) return true;
  return x.value_ < y.value_;
}

std::string to_string(ExtReal x) {
  if (x.is_plus_infinity()) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << x.value();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << to_string(x); }

}  // namespace glq
