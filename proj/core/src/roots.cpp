#include "symcut/roots.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "symcut/errors.hpp"

namespace symcut {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::BC: return "BC";
  }
  return "?";
}

namespace {

int fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

}  // namespace

RootSystemType RootSystemType::make(Family family, int rank) {
  RootSystemType t;
  t.family = family;
  t.rank = rank;
  const int fixed = fixed_rank(family);
  if (fixed != 0) {
    if (rank != fixed)
      throw Error(ErrorKind::RankOutOfRange,
                  family_name(family) + " has rank " + std::to_string(fixed));
    return t;
  }
  int min_rank = 1;
  switch (family) {
    case Family::B:
    case Family::C: min_rank = 2; break;
    case Family::D: min_rank = 4; break;
    default: break;
  }
  if (rank < min_rank)
    throw Error(ErrorKind::RankOutOfRange, family_name(family) + std::to_string(rank) +
                                               ": rank must be at least " +
                                               std::to_string(min_rank));
  if (family == Family::C && rank == 2) {
    t.family = Family::B;
    t.written_as_c2 = true;
  }
  return t;
}

RootSystemType RootSystemType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_')
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2})
    if (s == family_name(f)) return make(f, fixed_rank(f));
  Family family;
  std::string_view digits;
  if (s.rfind("BC", 0) == 0) {
    family = Family::BC;
    digits = std::string_view(s).substr(2);
  } else if (!s.empty() && std::string_view("ABCD").find(s[0]) != std::string_view::npos) {
    family = static_cast<Family>(s[0] - 'A');
    digits = std::string_view(s).substr(1);
  } else {
    throw Error(ErrorKind::BadInput, "unknown root system '" + std::string(text) + "'");
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::BadInput, "bad rank in root system '" + std::string(text) + "'");
  return make(family, rank);
}

bool RootSystemType::exceptional() const { return fixed_rank(family) != 0; }

std::string RootSystemType::name() const {
  if (exceptional()) return family_name(family);
  return family_name(family) + std::to_string(rank);
}

Vector RootDatum::ambient(const Root& r) const {
  Vector v = zeros(metric.rows());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) v = v + Rational(r[i]) * simple_roots[i];
  return v;
}

Rational RootDatum::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * gram(i, j);
  }
  return s;
}

const Root& RootDatum::highest_root() const {
  auto height = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
  return *std::max_element(positive_roots.begin(), positive_roots.end(),
                           [&](const Root& a, const Root& b) { return height(a) < height(b); });
}

namespace {

// Symmetric matrix from a Dynkin diagram: all simple roots of squared length
// `diag[i]`, bonds given as index pairs with the inner product value.
struct Bond {
  int i, j;
  Rational value;
};

Matrix gram_from_bonds(const std::vector<Rational>& diag, const std::vector<Bond>& bonds) {
  Matrix g(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) g(i, i) = diag[i];
  for (const auto& b : bonds) {
    g(b.i, b.j) = b.value;
    g(b.j, b.i) = b.value;
  }
  return g;
}

Matrix simply_laced(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Bond> bonds;
  for (auto [i, j] : edges) bonds.push_back({i, j, Rational(-1)});
  return gram_from_bonds(std::vector<Rational>(n, Rational(2)), bonds);
}

// Exceptional systems are described intrinsically by their Gram matrices.
Matrix exceptional_gram(Family f) {
  switch (f) {
    case Family::E6:  // chain 1-2-3-4-5, node 6 on node 3
      return simply_laced(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    case Family::E7:  // chain 1-2-3-4-5-6, node 7 on node 4
      return simply_laced(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
    case Family::E8:  // Bourbaki: chain 1-3-4-5-6-7-8, node 2 on node 4
      return simply_laced(8, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}});
    case Family::F4:
      return gram_from_bonds({2, 2, 1, 1},
                             {{0, 1, Rational(-1)}, {1, 2, Rational(-1)}, {2, 3, frac(-1, 2)}});
    case Family::G2:
      return gram_from_bonds({frac(2, 3), 2}, {{0, 1, Rational(-1)}});
    default:
      break;
  }
  throw Error(ErrorKind::BadInput, "not an exceptional family");
}

void classical_embedding(const RootSystemType& t, Matrix& metric, std::vector<Vector>& simple) {
  const int l = t.rank;
  const std::size_t dim = t.family == Family::A ? l + 1 : l;
  metric = Matrix::identity(dim);
  // C_l: (x_i, x_j) = (ψ,ψ)/4 δ_ij, long roots 2x_i.
  if (t.family == Family::C) metric = metric.scaled(frac(1, 2));
  simple.clear();
  for (int i = 0; i + 1 < l; ++i) simple.push_back(unit(dim, i) - unit(dim, i + 1));
  switch (t.family) {
    case Family::A: simple.push_back(unit(dim, l - 1) - unit(dim, l)); break;
    case Family::B: simple.push_back(unit(dim, l - 1)); break;
    case Family::C: simple.push_back(Rational(2) * unit(dim, l - 1)); break;
    case Family::D: simple.push_back(unit(dim, l - 2) + unit(dim, l - 1)); break;
    default: break;
  }
}

// ⟨β, α_i^∨⟩ = 2(β, α_i)/(α_i, α_i); always an integer for roots.
int cartan_pairing(const RootDatum& d, const Root& beta, std::size_t i) {
  Rational s = 0;
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (beta[k] != 0) s += beta[k] * d.gram(k, i);
  Rational v = 2 * s / d.gram(i, i);
  return static_cast<int>(v.get_num().get_si());
}

// Positive roots by root strings: β + α_i is a root iff q > 0 where
// q = p - ⟨β, α_i^∨⟩ and p is the length of the α_i-string below β.
std::vector<Root> positive_roots_by_strings(const RootDatum& d) {
  const std::size_t l = d.gram.rows();
  std::set<Root> known;
  std::vector<Root> level;
  for (std::size_t i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    level.push_back(r);
    known.insert(r);
  }
  std::vector<Root> all = level;
  while (!level.empty()) {
    std::set<Root> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < l; ++i) {
        Root up = beta;
        ++up[i];
        if (known.count(up) || next.count(up)) continue;
        int p = 0;
        Root down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - cartan_pairing(d, beta, i) > 0) next.insert(up);
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

RootDatum build_datum(const RootSystemType& t) {
  if (!t.reduced())
    throw Error(ErrorKind::NonReducedType, t.name() + " is not a reduced root system");
  // Re-validate in case the caller filled the struct by hand.
  const RootSystemType canon = RootSystemType::make(t.family, t.rank);
  RootDatum d;
  d.type = canon;
  d.type.written_as_c2 = t.written_as_c2 || canon.written_as_c2;
  if (canon.exceptional()) {
    d.metric = exceptional_gram(canon.family);
    for (int i = 0; i < canon.rank; ++i) d.simple_roots.push_back(unit(canon.rank, i));
  } else {
    classical_embedding(canon, d.metric, d.simple_roots);
  }
  const std::size_t l = d.simple_roots.size();
  d.gram = Matrix(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      d.gram(i, j) = bilinear(d.simple_roots[i], d.metric, d.simple_roots[j]);
  d.positive_roots = positive_roots_by_strings(d);
  const Root& top = d.highest_root();
  d.d_coeffs.assign(top.begin(), top.end());
  return d;
}

std::vector<Root> enumerate_roots(const RootDatum& d) {
  const std::size_t l = d.gram.rows();
  std::set<Root> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    if (seen.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      Root image = beta;
      image[i] -= cartan_pairing(d, beta, i);
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

int count_orthogonal_to_highest(const RootDatum& d) {
  const Vector top = d.ambient(d.highest_root());
  int count = 0;
  for (const auto& alpha : enumerate_roots(d))
    if (bilinear(d.ambient(alpha), d.metric, top) == 0) ++count;
  return count;
}

int classical_positive_root_count(const RootSystemType& t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C:
    case Family::BC: return t.family == Family::BC ? l * l + l : l * l;
    case Family::D: return l * (l - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  return 0;
}

}  // namespace symcut
