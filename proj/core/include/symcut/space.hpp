#ifndef SYMCUT_SPACE_HPP
#define SYMCUT_SPACE_HPP

#include <map>
#include <string>

#include "symcut/roots.hpp"

namespace symcut {

enum class SpaceKind { TypeI, TypeII };

/// One simply connected compact irreducible symmetric space with concrete
/// parameters. For Type I `delta_type` is the root system of the complexified
/// algebra; for Type II it is the root system Δ* of the simple factor, and
/// Σ has the same type.
struct SpaceEntry {
  SpaceKind kind = SpaceKind::TypeI;
  std::string label;  // "A I", "BD I", "SU(n)", ...
  std::string space;  // instantiated name, e.g. "SU(5)/SO(5)"
  std::map<std::string, int> params;
  RootSystemType delta_type;
  RootSystemType sigma_type;
  bool halved = false;  // Type I only: (ψ,ψ) = ½(δ,δ)

  /// Σ non-reduced, or a center with one element: no quotient exists.
  bool no_forms() const;
};

}  // namespace symcut

#endif  // SYMCUT_SPACE_HPP
