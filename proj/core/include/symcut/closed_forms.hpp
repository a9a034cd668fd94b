#ifndef SYMCUT_CLOSED_FORMS_HPP
#define SYMCUT_CLOSED_FORMS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "symcut/rational.hpp"
#include "symcut/roots.hpp"

namespace symcut {

/// A closed-form squared coefficient q (length² = q/(ψ,ψ)) together with the
/// case it came from. `value` is empty when no closed form is known.
struct ClosedForm {
  std::string case_id;
  std::optional<Rational> value;
};

// Both functions take the canonical subgroup names produced by
// subgroup_name(): "full", "Z<k>", "gen=e<j>". They never look at the alcove;
// they are a separate code path from the polytope computation.
// Error(UnknownCase) for pairs outside the subgroup lattice of the center,
// including the trivial subgroup.

ClosedForm injectivity_closed_form(const RootSystemType& t, std::string_view gamma);
ClosedForm diameter_closed_form(const RootSystemType& t, std::string_view gamma);

}  // namespace symcut

#endif  // SYMCUT_CLOSED_FORMS_HPP
