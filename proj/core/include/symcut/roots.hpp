#ifndef SYMCUT_ROOTS_HPP
#define SYMCUT_ROOTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "symcut/rational.hpp"

namespace symcut {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, BC };

std::string family_name(Family f);

/// Family plus rank of an irreducible root system.
///
/// Construct through make(); it enforces the rank bounds of each family and
/// rewrites C2 as B2 (the two systems are isomorphic), remembering the
/// original spelling in `written_as_c2`. BC is accepted as a label only;
/// every alcove or polytope operation rejects it.
struct RootSystemType {
  Family family = Family::A;
  int rank = 1;
  bool written_as_c2 = false;

  static RootSystemType make(Family family, int rank);

  /// "A3", "B2", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "BC1".
  static RootSystemType parse(std::string_view text);

  bool reduced() const { return family != Family::BC; }
  bool exceptional() const;
  std::string name() const;

  bool operator==(const RootSystemType& o) const {
    return family == o.family && rank == o.rank;
  }
};

/// Integer coefficients of a root over the simple roots.
using Root = std::vector<int>;

/// A reduced irreducible root system with the inner product normalized so
/// that long roots have squared length 2, i.e. gram(i, j) = 2(γi,γj)/(ψ,ψ).
///
/// Classical types live in the usual coordinate spaces (A_l inside the
/// sum-zero hyperplane of Q^{l+1}; B, C, D in Q^l). E6 and E7 carry no
/// preferred coordinates and use the simple roots themselves as the ambient
/// basis with `metric` equal to the Gram matrix; E8, F4 and G2 do the same.
struct RootDatum {
  RootSystemType type;
  Matrix metric;                   // ambient inner product, same normalization as gram
  std::vector<Vector> simple_roots;
  Matrix gram;
  std::vector<int> d_coeffs;       // highest root ψ = Σ d_i γ_i
  std::vector<Root> positive_roots;

  int rank() const { return type.rank; }

  Vector ambient(const Root& r) const;

  /// Normalized inner product of two roots given by coefficients.
  Rational inner(const Root& a, const Root& b) const;

  const Root& highest_root() const;
};

/// Throws Error(NonReducedType) for BC.
RootDatum build_datum(const RootSystemType& t);

/// All roots (positive and negative), generated by closing the simple roots
/// under the simple reflections. Sorted lexicographically.
std::vector<Root> enumerate_roots(const RootDatum& d);

/// |{α ∈ Δ : (α, δ) = 0}| with δ the highest root.
int count_orthogonal_to_highest(const RootDatum& d);

/// Classical number of positive roots for a family and rank.
int classical_positive_root_count(const RootSystemType& t);

}  // namespace symcut

#endif  // SYMCUT_ROOTS_HPP
