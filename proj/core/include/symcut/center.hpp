#ifndef SYMCUT_CENTER_HPP
#define SYMCUT_CENTER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "symcut/alcove.hpp"

namespace symcut {

/// Origin, or the alcove vertex e_j (0-based j) with d_j = 1.
struct CenterElement {
  static constexpr int kOrigin = -1;
  int index = kOrigin;

  bool origin() const { return index == kOrigin; }
  std::string name() const;  // "o" or "e<j+1>"
  bool operator==(const CenterElement&) const = default;
};

/// The center realized inside the alcove. Element 0 is always the origin;
/// the remaining elements follow vertex order.
struct CenterGroup {
  Alcove alcove;
  std::vector<CenterElement> elements;
  std::vector<std::vector<int>> cayley;
  std::vector<int> inverse;

  std::size_t order() const { return elements.size(); }
  int element_order(int a) const;
  bool cyclic() const;

  /// "Z1", "Z<n>" or "Z2+Z2".
  std::string structure() const;

  /// Barycentric coordinates of an element (zero vector for the origin).
  Vector coords(int a) const;

  /// Element index of vertex e_j, or -1.
  int find_vertex(int j) const;
};

/// Sorted member indices into CenterGroup::elements; always contains 0.
struct Subgroup {
  std::vector<int> members;

  std::size_t order() const { return members.size(); }
  bool trivial() const { return members.size() == 1; }
  bool contains(int a) const;
  bool operator==(const Subgroup&) const = default;
};

std::vector<CenterElement> center_elements(const RootDatum& d);

/// Folds barycentric coordinates c (x = Σ c_j e_j) into the alcove by simple
/// reflections and the affine reflection in (x,ψ) = 1. Each step reflects in
/// the most negative simple wall, lowest index first; only when all simple
/// walls hold is the ψ-wall used. Throws Error(NonTerminating) after
/// `max_steps` reflections.
Vector reduce_to_alcove(const Vector& c, const RootDatum& d, int max_steps = 10000);

/// Group law by reduction of e_a + e_b. Checks the group axioms and throws
/// Error(ReductionMismatch) if a reduced point is not a center element or the
/// resulting table is not an abelian group.
CenterGroup build_center_group(const RootDatum& d);

/// Smallest subgroup containing the given elements.
Subgroup generated_subgroup(const CenterGroup& g, const std::vector<int>& generators);

/// Every subgroup, ordered by size and then by member list.
std::vector<Subgroup> subgroups(const CenterGroup& g);

/// "trivial", "full", "Z<k>" (cyclic centers only) or "gen=e<j>".
std::string subgroup_name(const CenterGroup& g, const Subgroup& s);

/// Inverse of subgroup_name. Also accepts "Z<k>" when it names the full or
/// trivial group, "gen=e_{l-1}", "gen=e_l" and comma-separated generator
/// lists such as "gen=e1,e3". Names written for C2 are mapped onto B2.
/// Throws Error(BadInput) for unknown names.
Subgroup parse_subgroup(const CenterGroup& g, std::string_view name);

/// Order and isomorphism type listed for each family, kept independent of the
/// reduction algorithm for cross-checking.
struct ExpectedCenter {
  int order;
  std::string structure;
};
ExpectedCenter expected_center(const RootSystemType& t);

}  // namespace symcut

#endif  // SYMCUT_CENTER_HPP
