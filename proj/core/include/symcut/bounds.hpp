#ifndef SYMCUT_BOUNDS_HPP
#define SYMCUT_BOUNDS_HPP

#include "symcut/rational.hpp"

namespace symcut {

/// Largest Σλ_i² over λ ∈ [a, b]^m with Σλ_i ≤ s, assuming 0 ≤ a, ma ≤ s ≤ mb.
///
/// The maximum puts k_b = ⌊(s − ma)/(b − a)⌋ coordinates at b,
/// k_a = ⌊(mb − s)/(b − a)⌋ at a and the remainder c = s − k_a·a − k_b·b in
/// at most one more slot, giving k_a·a² + k_b·b² + c².
Rational sum_of_squares_bound(long m, const Rational& a, const Rational& b, const Rational& s);

/// Σ_{k≤j} λ_k ≤ Σ_{k≤j} t_k for every j (vectors of equal length).
bool prefix_dominated(const Vector& lambda, const Vector& t);

/// Σ v_i².
Rational sum_of_squares(const Vector& v);

}  // namespace symcut

#endif  // SYMCUT_BOUNDS_HPP
