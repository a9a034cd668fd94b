#include "symcut/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "symcut/errors.hpp"

namespace symcut {

std::string FacetTag::name() const {
  switch (kind) {
    case FacetKind::SimpleWall: return "simple(" + std::to_string(index + 1) + ")";
    case FacetKind::PsiWall: return "psi";
    case FacetKind::CutWall: return "cut(" + std::to_string(index + 1) + ")";
  }
  return "?";
}

CutPolytope cut_polytope(const CenterGroup& g, const Subgroup& gamma) {
  const std::size_t l = g.alcove.rank();
  const Matrix& e = g.alcove.gram_e;
  CutPolytope p;
  p.group = &g;
  p.gamma = gamma;
  for (std::size_t i = 0; i < l; ++i)
    p.inequalities.push_back(
        {Rational(-1) * unit(l, i), 0, {FacetKind::SimpleWall, static_cast<int>(i)}});
  p.inequalities.push_back({Vector(l, Rational(1)), 1, {FacetKind::PsiWall}});
  for (int a : gamma.members) {
    if (a == 0) continue;
    const int j = g.elements.at(a).index;
    p.cut_vertices.push_back(j);
  }
  std::sort(p.cut_vertices.begin(), p.cut_vertices.end());
  for (int j : p.cut_vertices)
    p.inequalities.push_back({e.row(j), e(j, j) / 2, {FacetKind::CutWall, j}});
  return p;
}

int default_max_rank() {
  if (const char* env = std::getenv("SYMCUT_MAX_RANK")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 8;
}

bool contains(const CutPolytope& p, const Vector& c) {
  for (const auto& ineq : p.inequalities)
    if (dot(ineq.a, c) > ineq.b) return false;
  return true;
}

Rational squared_norm(const CutPolytope& p, const Vector& c) {
  return bilinear(c, p.gram_e(), c);
}

namespace {

// Calls f on every k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexSet enumerate_vertices(const CutPolytope& p, int max_rank) {
  const std::size_t l = p.dimension();
  if (static_cast<int>(l) > max_rank)
    throw Error(ErrorKind::RankCapExceeded,
                "rank " + std::to_string(l) + " exceeds the enumeration cap " +
                    std::to_string(max_rank) +
                    "; raise it with SYMCUT_MAX_RANK (the subset search grows "
                    "combinatorially)");
  // Rows l.. are the ψ-wall and the cut walls; rows 0..l-1 are c_i ≥ 0.
  const std::size_t extra = p.inequalities.size() - l;
  std::set<Vector> found;
  for (std::size_t s = 0; s <= std::min(l, extra); ++s) {
    for_each_subset(extra, s, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(l, s, [&](const std::vector<std::size_t>& free) {
        Matrix a(s, s);
        Vector b(s);
        for (std::size_t r = 0; r < s; ++r) {
          const Inequality& ineq = p.inequalities[l + rows[r]];
          for (std::size_t k = 0; k < s; ++k) a(r, k) = ineq.a[free[k]];
          b[r] = ineq.b;
        }
        auto x = solve(a, b);
        if (!x) return;
        Vector c = zeros(l);
        for (std::size_t k = 0; k < s; ++k) c[free[k]] = (*x)[k];
        if (contains(p, c)) found.insert(c);
      });
    });
  }
  VertexSet vs;
  vs.vertices.assign(found.begin(), found.end());
  for (const auto& c : vs.vertices) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < p.inequalities.size(); ++i)
      if (dot(p.inequalities[i].a, c) == p.inequalities[i].b) tight.push_back(static_cast<int>(i));
    vs.active.push_back(std::move(tight));
  }
  return vs;
}

Rational injectivity_value(const CutPolytope& p) {
  Rational q = 1;
  for (int j : p.cut_vertices) q = std::min(q, Rational(p.gram_e()(j, j) / 4));
  return q;
}

Rational diameter_value(const CutPolytope& p, const VertexSet& vs) {
  Rational best = 0;
  for (const auto& c : vs.vertices) best = std::max(best, squared_norm(p, c));
  return best;
}

Rational diameter_value(const CutPolytope& p, int max_rank) {
  return diameter_value(p, enumerate_vertices(p, max_rank));
}

std::vector<CutLocusFacet> cut_locus_description(const CutPolytope& p, const VertexSet& vs) {
  const std::size_t l = p.dimension();
  std::vector<CutLocusFacet> out;
  for (std::size_t i = l; i < p.inequalities.size(); ++i) {
    CutLocusFacet f{p.inequalities[i].tag, -1, {}};
    for (std::size_t v = 0; v < vs.vertices.size(); ++v)
      if (std::binary_search(vs.active[v].begin(), vs.active[v].end(), static_cast<int>(i)))
        f.vertices.push_back(static_cast<int>(v));
    if (f.vertices.empty()) continue;  // wall misses the polytope entirely
    Matrix diffs(f.vertices.size(), l);
    const Vector& base = vs.vertices[f.vertices[0]];
    for (std::size_t r = 0; r < f.vertices.size(); ++r)
      for (std::size_t k = 0; k < l; ++k) diffs(r, k) = vs.vertices[f.vertices[r]][k] - base[k];
    f.dimension = static_cast<int>(rank(diffs));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace symcut
