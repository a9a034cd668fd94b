#include "symcut/killing.hpp"

#include "symcut/closed_forms.hpp"
#include "symcut/errors.hpp"
#include "symcut/polytope.hpp"

namespace symcut {

bool SpaceEntry::no_forms() const {
  return !sigma_type.reduced() || expected_center(sigma_type).order == 1;
}

Rational delta_norm(const RootSystemType& t) {
  const RootDatum d = build_datum(t);
  const long all = static_cast<long>(enumerate_roots(d).size());
  const long perp = count_orthogonal_to_highest(d);
  return frac(4, all - perp + 6);
}

std::optional<Rational> reference_delta_norm(const RootSystemType& t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return frac(1, n + 1);
    case Family::B: return frac(1, 2 * n - 1);
    case Family::C: return frac(1, n + 1);
    case Family::D: return frac(1, 2 * n - 2);
    case Family::E6: return frac(1, 12);
    case Family::E7: return frac(1, 18);
    case Family::E8: return frac(1, 30);
    case Family::F4: return frac(1, 9);
    case Family::G2: return frac(1, 4);
    case Family::BC: break;
  }
  return std::nullopt;
}

KillingScale psi_norm(const SpaceEntry& entry) {
  KillingScale k;
  k.delta_sq = delta_norm(entry.delta_type);
  k.halved = entry.kind == SpaceKind::TypeII || entry.halved;
  k.psi_sq = k.halved ? Rational(k.delta_sq / 2) : k.delta_sq;
  return k;
}

Rational epsilon_from_ricci(const Rational& ric) {
  if (ric <= 0) throw Error(ErrorKind::NonPositiveRicci, "Ricci curvature must be positive");
  return 1 / (2 * ric);
}

MetricResult metric_result(const Rational& psi_sq, const CenterGroup& g, const Subgroup& gamma,
                           const Rational& epsilon, int max_rank) {
  if (epsilon <= 0) throw Error(ErrorKind::BadInput, "epsilon must be positive");
  const RootSystemType& t = g.alcove.datum.type;
  const CutPolytope p = cut_polytope(g, gamma);
  MetricResult r;
  r.epsilon = epsilon;
  r.q_i = injectivity_value(p) / psi_sq;

  std::optional<Rational> closed;
  if (gamma.trivial()) {
    r.diameter_case = "trivial";
  } else {
    ClosedForm cf = diameter_closed_form(t, subgroup_name(g, gamma));
    r.diameter_case = cf.case_id;
    closed = cf.value;
    r.beyond_paper = !closed.has_value();
  }
  if (static_cast<int>(t.rank) <= max_rank) {
    r.q_d = diameter_value(p, max_rank) / psi_sq;
  } else if (closed) {
    r.q_d = *closed / psi_sq;
  } else {
    r.d_known = false;
    r.q_d = 0;
  }
  return r;
}

MetricResult metric_result(const SpaceEntry& entry, const CenterGroup& g, const Subgroup& gamma,
                           const Rational& epsilon, int max_rank) {
  if (!(g.alcove.datum.type == entry.sigma_type))
    throw Error(ErrorKind::BadInput, "center group does not belong to " + entry.space);
  return metric_result(psi_norm(entry).psi_sq, g, gamma, epsilon, max_rank);
}

}  // namespace symcut
