#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "lbx/errors.hpp"

namespace lbx {

// Norm exponent p in [1, inf]. Infinity is a distinct state, not a large
// float, so dual(1) == inf holds exactly.
class Exponent {
 public:
  explicit Exponent(double p) : value_(p), inf_(false) {
    if (!(p >= 1.0) || std::isinf(p))
      throw error("exponent must satisfy p >= 1 (use Exponent::infinity())");
  }

  static Exponent infinity() {
    Exponent e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }

  // Finite value; calling on p = inf is a programming error.
  double value() const {
    if (inf_) throw error("exponent is infinite");
    return value_;
  }

  // Value with inf mapped to +inf, for formulas like min{p, ln d}.
  double extended() const {
    return inf_ ? std::numeric_limits<double>::infinity() : value_;
  }

  Exponent dual() const {
    if (inf_) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    if (value_ == 2.0) return Exponent(2.0);
    return Exponent(value_ / (value_ - 1.0));
  }

  bool operator==(const Exponent& o) const {
    return inf_ == o.inf_ && (inf_ || value_ == o.value_);
  }
  bool operator!=(const Exponent& o) const { return !(*this == o); }

  std::string str() const {
    if (inf_) return "inf";
    std::string s = std::to_string(value_);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

 private:
  Exponent() : value_(0), inf_(true) {}
  double value_;
  bool inf_;
};

inline Exponent dual_exponent(const Exponent& p) { return p.dual(); }

}  // namespace lbx
