#pragma once

#include <vector>

#include "disclab/poly.hpp"

namespace disclab {

/// The semialgebraic set K = {g = 0, p >= 0}. Compactness and closedness at
/// infinity are caller assertions and are never verified.
struct ConstraintSet {
  std::vector<Polynomial> equalities;
  std::vector<Polynomial> inequalities;
  bool compact = false;
  bool closed_at_infinity = false;

  bool unconstrained() const { return equalities.empty() && inequalities.empty(); }
};

}  // namespace disclab
