#ifndef SYMCUT_ALCOVE_HPP
#define SYMCUT_ALCOVE_HPP

#include <optional>
#include <vector>

#include "symcut/rational.hpp"
#include "symcut/roots.hpp"

namespace symcut {

/// The fundamental alcove {x : (x,γ_i) ≥ 0, (x,ψ) ≤ 1}.
///
/// Lengths carry an overall factor 1/(ψ,ψ) that is never expanded:
/// `vertices[j]` holds (ψ,ψ)·e_j in ambient coordinates and
/// gram_e(i, j) = (e_i,e_j)·(ψ,ψ). Pairings between a stored vertex v and an
/// ambient vector w use ½·vᵀ·metric·w, which is exact in these units.
struct Alcove {
  RootDatum datum;
  std::vector<Vector> vertices;
  Matrix gram_e;

  std::size_t rank() const { return vertices.size(); }

  /// (e_j, w) for an ambient vector w.
  Rational pair(std::size_t j, const Vector& w) const;
};

/// Throws Error(SingularGram) if the duality system cannot be solved.
Alcove build_alcove(const RootDatum& d);

/// E_ij = (e_i,e_j)·(ψ,ψ) = 2·(G⁻¹)_ij / (d_i d_j), the inverse Gram route.
Matrix gram_e(const RootDatum& d);

/// The same matrix from ambient dot products of the alcove vertices.
Matrix gram_e_ambient(const Alcove& a);

/// Entrywise closed forms for E as printed for A, B, C, D and the explicit
/// E6/E7 matrices. Empty for E8, F4, G2.
std::optional<Matrix> reference_gram_e(const RootSystemType& t);

/// Closed-form (ψ,ψ)·e_j in ambient coordinates for the classical families.
std::optional<std::vector<Vector>> reference_vertices(const RootSystemType& t);

}  // namespace symcut

#endif  // SYMCUT_ALCOVE_HPP
