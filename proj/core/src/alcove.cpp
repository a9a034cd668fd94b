#include "symcut/alcove.hpp"

#include "symcut/errors.hpp"

namespace symcut {

Rational Alcove::pair(std::size_t j, const Vector& w) const {
  return bilinear(vertices.at(j), datum.metric, w) / 2;
}

namespace {

Matrix inverse_gram(const RootDatum& d) {
  auto inv = inverse(d.gram);
  if (!inv) throw Error(ErrorKind::SingularGram, d.type.name() + ": Gram matrix is singular");
  return *inv;
}

}  // namespace

Alcove build_alcove(const RootDatum& d) {
  if (!d.type.reduced())
    throw Error(ErrorKind::NonReducedType, d.type.name() + " has no alcove here");
  const Matrix ginv = inverse_gram(d);
  const std::size_t l = d.gram.rows();
  Alcove a;
  a.datum = d;
  // (e_j, γ_i) = δ_ij / d_j, solved through G⁻¹.
  for (std::size_t j = 0; j < l; ++j) {
    Vector v = zeros(d.metric.rows());
    for (std::size_t k = 0; k < l; ++k)
      if (ginv(k, j) != 0) v = v + ginv(k, j) * d.simple_roots[k];
    a.vertices.push_back(frac(2, d.d_coeffs[j]) * v);
  }
  for (auto& v : a.vertices)
    for (auto& x : v) x.canonicalize();
  a.gram_e = gram_e(d);
  return a;
}

Matrix gram_e(const RootDatum& d) {
  const Matrix ginv = inverse_gram(d);
  const std::size_t l = ginv.rows();
  Matrix e(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      e(i, j) = 2 * ginv(j, i) / (d.d_coeffs[i] * d.d_coeffs[j]);
      e(i, j).canonicalize();
    }
  return e;
}

Matrix gram_e_ambient(const Alcove& a) {
  const std::size_t l = a.rank();
  Matrix e(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) e(i, j) = a.pair(i, a.vertices[j]);
  return e;
}

std::optional<Matrix> reference_gram_e(const RootSystemType& t) {
  const int l = t.rank;
  Matrix e(l, l);
  // 1-based indices, i ≤ j; the matrix is filled symmetrically.
  auto set = [&](int i, int j, const Rational& v) {
    e(i - 1, j - 1) = v;
    e(j - 1, i - 1) = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) set(i, j, frac(2 * i * (l + 1 - j), l + 1));
      break;
    case Family::B:
      set(1, 1, 2);
      for (int j = 2; j <= l; ++j) set(1, j, 1);
      for (int i = 2; i <= l; ++i)
        for (int j = i; j <= l; ++j) set(i, j, frac(i, 2));
      break;
    case Family::C:
      for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) set(i, j, i);
      break;
    case Family::D:
      set(1, 1, 2);
      for (int j = 2; j <= l; ++j) set(1, j, 1);
      for (int i = 2; i <= l - 2; ++i)
        for (int j = i; j <= l; ++j) set(i, j, frac(i, 2));
      set(l - 1, l - 1, frac(l, 2));
      set(l, l, frac(l, 2));
      set(l - 1, l, frac(l - 2, 2));
      break;
    case Family::E6:
      e = Matrix{{8, 5, 4, 4, 4, 3}, {5, 5, 4, 4, 4, 3}, {4, 4, 4, 4, 4, 3},
                 {4, 4, 4, 5, 5, 3}, {4, 4, 4, 5, 8, 3}, {3, 3, 3, 3, 3, 3}}
              .scaled(frac(1, 3));
      break;
    case Family::E7:
      e = Matrix{{36, 24, 20, 18, 16, 12, 18}, {24, 24, 20, 18, 16, 12, 18},
                 {20, 20, 20, 18, 16, 12, 18}, {18, 18, 18, 18, 16, 12, 18},
                 {16, 16, 16, 16, 16, 12, 16}, {12, 12, 12, 12, 12, 12, 12},
                 {18, 18, 18, 18, 16, 12, 21}}
              .scaled(frac(1, 12));
      break;
    default:
      return std::nullopt;
  }
  return e;
}

std::optional<std::vector<Vector>> reference_vertices(const RootSystemType& t) {
  const int l = t.rank;
  std::vector<Vector> out;
  auto prefix = [](std::size_t dim, int j) {
    Vector v = zeros(dim);
    for (int k = 0; k < j; ++k) v[k] = 1;
    return v;
  };
  switch (t.family) {
    case Family::A:
      for (int j = 1; j <= l; ++j) {
        Vector v = zeros(l + 1);
        for (int k = 1; k <= l + 1; ++k) v[k - 1] = k <= j ? l + 1 - j : -j;
        out.push_back(frac(2, l + 1) * v);
      }
      break;
    case Family::B:
      out.push_back(Rational(2) * unit(l, 0));
      for (int j = 2; j <= l; ++j) out.push_back(prefix(l, j));
      break;
    case Family::C:
      for (int j = 1; j <= l; ++j) out.push_back(Rational(2) * prefix(l, j));
      break;
    case Family::D: {
      out.push_back(Rational(2) * unit(l, 0));
      for (int j = 2; j <= l - 2; ++j) out.push_back(prefix(l, j));
      Vector spin = prefix(l, l);
      spin[l - 1] = -1;
      out.push_back(spin);
      out.push_back(prefix(l, l));
      break;
    }
    default:
      return std::nullopt;
  }
  for (auto& v : out)
    for (auto& x : v) x.canonicalize();
  return out;
}

}  // namespace symcut
