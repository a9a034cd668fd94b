#ifndef SYMCUT_KILLING_HPP
#define SYMCUT_KILLING_HPP

#include <optional>

#include "symcut/center.hpp"
#include "symcut/space.hpp"

namespace symcut {

struct KillingScale {
  Rational delta_sq;
  Rational psi_sq;
  bool halved = false;
};

/// (δ,δ) = 4 / (|Δ| − |Δ ∩ δ⊥| + 6) from root enumeration.
Rational delta_norm(const RootSystemType& t);

/// The values listed per family, used as an independent reference.
std::optional<Rational> reference_delta_norm(const RootSystemType& t);

/// Type I: (δ,δ) of Δ, halved when the entry says so. Type II: ½(δ,δ) of Δ*.
KillingScale psi_norm(const SpaceEntry& entry);

/// ε with Ric = 1/(2ε). Throws Error(NonPositiveRicci) unless ric > 0.
Rational epsilon_from_ricci(const Rational& ric);

/// i(M)² = π²·ε·q_i and d(M)² = π²·ε·q_d.
struct MetricResult {
  Rational q_i;
  Rational q_d;
  Rational epsilon = 1;
  bool d_known = true;
  bool beyond_paper = false;  // no closed form for d exists; q_d comes from enumeration only
  std::string diameter_case;  // closed-form case label, empty if none

  Rational i_sq() const { return epsilon * q_i; }
  Rational d_sq() const { return epsilon * q_d; }
};

/// Combines the polytope values with the Killing scale. The diameter comes
/// from vertex enumeration when the rank is within `max_rank`; above it the
/// closed form is used, and d is unknown where no closed form exists.
/// Γ must be non-trivial.
MetricResult metric_result(const SpaceEntry& entry, const CenterGroup& g, const Subgroup& gamma,
                           const Rational& epsilon, int max_rank);

/// Same, for a bare Σ with a given (ψ,ψ).
MetricResult metric_result(const Rational& psi_sq, const CenterGroup& g, const Subgroup& gamma,
                           const Rational& epsilon, int max_rank);

}  // namespace symcut

#endif  // SYMCUT_KILLING_HPP
