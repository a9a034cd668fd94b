#ifndef SYMCUT_POLYTOPE_HPP
#define SYMCUT_POLYTOPE_HPP

#include <string>
#include <vector>

#include "symcut/center.hpp"

namespace symcut {

enum class FacetKind { SimpleWall, PsiWall, CutWall };

struct FacetTag {
  FacetKind kind;
  int index = -1;  // 0-based simple root or cut vertex; unused for PsiWall

  /// "simple(i)", "psi", "cut(j)" with 1-based indices.
  std::string name() const;
  bool operator==(const FacetTag&) const = default;
};

/// a·c ≤ b in barycentric coordinates c.
struct Inequality {
  Vector a;
  Rational b;
  FacetTag tag;
};

/// P_Γ = △ ∩ {(x, e_j) ≤ ½(e_j, e_j) : e_j ∈ Γ}.
struct CutPolytope {
  const CenterGroup* group = nullptr;
  Subgroup gamma;
  std::vector<Inequality> inequalities;
  std::vector<int> cut_vertices;  // 0-based j with e_j ∈ Γ

  std::size_t dimension() const { return group->alcove.rank(); }
  const Matrix& gram_e() const { return group->alcove.gram_e; }
};

struct VertexSet {
  std::vector<Vector> vertices;          // sorted lexicographically
  std::vector<std::vector<int>> active;  // tight inequality indices per vertex
};

/// The group must outlive the polytope.
CutPolytope cut_polytope(const CenterGroup& g, const Subgroup& gamma);

/// Enumeration cap on the rank: SYMCUT_MAX_RANK if set, else 8.
int default_max_rank();

/// Exact vertex enumeration. Every vertex has l tight constraints with an
/// invertible coefficient matrix; since each simple wall fixes one coordinate
/// to zero, only the remaining rows need to be combined. Throws
/// Error(RankCapExceeded) when the rank is above `max_rank`.
VertexSet enumerate_vertices(const CutPolytope& p, int max_rank = default_max_rank());

/// cᵀ E c, i.e. (x, x)·(ψ,ψ).
Rational squared_norm(const CutPolytope& p, const Vector& c);
bool contains(const CutPolytope& p, const Vector& c);

/// q with i(P_Γ)² = q/(ψ,ψ): min(1, min over cut vertices of E_jj/4).
Rational injectivity_value(const CutPolytope& p);

/// q with d(P_Γ)² = q/(ψ,ψ): the largest squared norm over the vertices.
Rational diameter_value(const CutPolytope& p, int max_rank = default_max_rank());
Rational diameter_value(const CutPolytope& p, const VertexSet& vs);

struct CutLocusFacet {
  FacetTag tag;
  int dimension;  // affine dimension of the facet, from vertex active sets
  std::vector<int> vertices;
};

/// The ψ-wall and cut-wall facets, which make up the outer boundary P'_Γ.
/// Simple walls are excluded, as are walls that meet no vertex.
std::vector<CutLocusFacet> cut_locus_description(const CutPolytope& p, const VertexSet& vs);

}  // namespace symcut

#endif  // SYMCUT_POLYTOPE_HPP
