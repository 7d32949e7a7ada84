#pragma once

#include <string>

namespace supersdet {

enum class BoundaryCondition { Periodic, Antiperiodic };

inline std::string to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Periodic ? "periodic" : "antiperiodic";
}

}  // namespace supersdet
