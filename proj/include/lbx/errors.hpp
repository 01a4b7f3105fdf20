#pragma once

#include <stdexcept>
#include <string>

namespace lbx {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_error : public error {
 public:
  dimension_error(std::size_t expected, std::size_t got)
      : error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

// Which precondition of the protocol an infeasible configuration violates.
enum class infeasible_reason {
  offset_budget,     // M * delta_bar <= mu * eps
  smoothing_radius,  // r <= delta_bar / 8
  smoothing_gap,     // eta <= eps * mu / 4
  support_overflow,  // M * L <= d
  domain,            // parameter outside its admissible range
};

inline const char* to_string(infeasible_reason r) {
  switch (r) {
    case infeasible_reason::offset_budget: return "offset_budget";
    case infeasible_reason::smoothing_radius: return "smoothing_radius";
    case infeasible_reason::smoothing_gap: return "smoothing_gap";
    case infeasible_reason::support_overflow: return "support_overflow";
    case infeasible_reason::domain: return "domain";
  }
  return "?";
}

class infeasible_error : public error {
 public:
  infeasible_error(infeasible_reason r, const std::string& inequality)
      : error(std::string("infeasible configuration [") + to_string(r) +
              "]: " + inequality),
        reason(r),
        inequality(inequality) {}
  infeasible_reason reason;
  std::string inequality;
};

class parse_error : public error {
 public:
  parse_error(const std::string& field_path, const std::string& what)
      : error("parse error at '" + field_path + "': " + what),
        field_path(field_path) {}
  std::string field_path;
};

// Raised when an iterative solver hits its cap; carries the best value found
// and a certified bound on how far it may be from the true optimum.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double best_value, double gap_bound)
      : error(what + " (best=" + std::to_string(best_value) +
              ", certified gap<=" + std::to_string(gap_bound) + ")"),
        best_value(best_value),
        gap_bound(gap_bound) {}
  double best_value;
  double gap_bound;
};

}  // namespace lbx
