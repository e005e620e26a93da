#include "dfrlab/verdict.hpp"

#include <utility>

namespace dfrlab {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ClassVerdict ClassVerdict::pass(double margin, std::string note) {
  ClassVerdict v;
  v.status = VerdictStatus::holds;
  v.margin = margin;
  v.note = std::move(note);
  return v;
}

ClassVerdict ClassVerdict::fail(Witness w, double margin, std::string note) {
  ClassVerdict v;
  v.status = VerdictStatus::fails;
  v.witness = std::move(w);
  v.margin = margin;
  v.note = std::move(note);
  return v;
}

ClassVerdict ClassVerdict::unknown(std::string note) {
  ClassVerdict v;
  v.status = VerdictStatus::inconclusive;
  v.note = std::move(note);
  return v;
}

}  // namespace dfrlab
