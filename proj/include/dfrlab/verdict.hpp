#pragma once

#include <limits>
#include <optional>
#include <string>

namespace dfrlab {

enum class VerdictStatus { holds, fails, inconclusive };

std::string to_string(VerdictStatus s);

// Grid point (or index pair) at which a checked inequality is violated,
// together with the two compared values.
struct Witness {
  std::string inequality;  // human-readable form of the violated relation
  double where = 0.0;      // primary location (t, or index n)
  double where2 = 0.0;     // secondary location (z or second t), when relevant
  double lhs = 0.0;
  double rhs = 0.0;
};

// Outcome of a reliability-class or inequality check. `margin` is the
// smallest slack observed across the evaluated grid: positive means the
// inequality held with room to spare, negative means it was violated.
struct ClassVerdict {
  VerdictStatus status = VerdictStatus::inconclusive;
  std::optional<Witness> witness;
  double margin = std::numeric_limits<double>::infinity();
  std::string note;

  bool holds() const { return status == VerdictStatus::holds; }
  bool fails() const { return status == VerdictStatus::fails; }

  static ClassVerdict pass(double margin, std::string note = {});
  static ClassVerdict fail(Witness w, double margin, std::string note = {});
  static ClassVerdict unknown(std::string note);
};

}  // namespace dfrlab
