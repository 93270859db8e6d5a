#pragma once

#include "disclab/constraints.hpp"
#include "disclab/copositive.hpp"
#include "disclab/curve.hpp"
#include "disclab/degree.hpp"
#include "disclab/error.hpp"
#include "disclab/groebner.hpp"
#include "disclab/linalg.hpp"
#include "disclab/poly.hpp"
#include "disclab/resultant.hpp"
#include "disclab/scan.hpp"

namespace disclab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace disclab
