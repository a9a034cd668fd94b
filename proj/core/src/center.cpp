#include "symcut/center.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "symcut/errors.hpp"

namespace symcut {

std::string CenterElement::name() const {
  return origin() ? "o" : "e" + std::to_string(index + 1);
}

int CenterGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = cayley[x][a]) ++k;
  return a == 0 ? 1 : k;
}

bool CenterGroup::cyclic() const {
  for (std::size_t a = 0; a < order(); ++a)
    if (element_order(static_cast<int>(a)) == static_cast<int>(order())) return true;
  return false;
}

std::string CenterGroup::structure() const {
  if (cyclic()) return "Z" + std::to_string(order());
  if (order() == 4) return "Z2+Z2";
  return "order " + std::to_string(order());
}

Vector CenterGroup::coords(int a) const {
  const std::size_t l = alcove.rank();
  const CenterElement& e = elements.at(a);
  return e.origin() ? zeros(l) : unit(l, e.index);
}

int CenterGroup::find_vertex(int j) const {
  for (std::size_t a = 0; a < elements.size(); ++a)
    if (elements[a].index == j) return static_cast<int>(a);
  return -1;
}

bool Subgroup::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

std::vector<CenterElement> center_elements(const RootDatum& d) {
  std::vector<CenterElement> out{CenterElement{}};
  for (std::size_t j = 0; j < d.d_coeffs.size(); ++j)
    if (d.d_coeffs[j] == 1) out.push_back(CenterElement{static_cast<int>(j)});
  return out;
}

Vector reduce_to_alcove(const Vector& c, const RootDatum& d, int max_steps) {
  const std::size_t l = d.gram.rows();
  if (c.size() != l) throw Error(ErrorKind::BadInput, "reduce_to_alcove: dimension mismatch");
  Vector gd = zeros(l);  // (G d)_j, so that ψ has coordinates d_j (G d)_j
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t k = 0; k < l; ++k) gd[j] += d.gram(j, k) * d.d_coeffs[k];

  Vector x = c;
  for (int step = 0; step <= max_steps; ++step) {
    std::size_t worst = l;
    for (std::size_t i = 0; i < l; ++i)
      if (x[i] < 0 && (worst == l || x[i] < x[worst])) worst = i;
    if (worst != l) {
      const Rational coef = 2 * x[worst] / (d.d_coeffs[worst] * d.gram(worst, worst));
      for (std::size_t j = 0; j < l; ++j)
        if (d.gram(worst, j) != 0) x[j] -= coef * d.d_coeffs[j] * d.gram(worst, j);
      continue;
    }
    const Rational excess = sum(x) - 1;
    if (excess <= 0) return x;
    for (std::size_t j = 0; j < l; ++j) x[j] -= excess * d.d_coeffs[j] * gd[j];
  }
  throw Error(ErrorKind::NonTerminating,
              "alcove reduction exceeded " + std::to_string(max_steps) + " steps");
}

namespace {

int locate(const CenterGroup& g, const Vector& c) {
  for (std::size_t a = 0; a < g.elements.size(); ++a)
    if (g.coords(static_cast<int>(a)) == c) return static_cast<int>(a);
  throw Error(ErrorKind::ReductionMismatch, g.alcove.datum.type.name() + ": reduced point " +
                                                to_string(c) + " is not a center element");
}

void check_group(const CenterGroup& g) {
  const std::size_t n = g.order();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::ReductionMismatch, g.alcove.datum.type.name() + ": " + what);
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (g.cayley[0][a] != static_cast<int>(a)) fail("origin is not the identity");
    if (g.cayley[a][g.inverse[a]] != 0) fail("inverse table is inconsistent");
    for (std::size_t b = 0; b < n; ++b) {
      if (g.cayley[a][b] != g.cayley[b][a]) fail("group law is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (g.cayley[g.cayley[a][b]][c] != g.cayley[a][g.cayley[b][c]])
          fail("group law is not associative");
    }
  }
}

}  // namespace

CenterGroup build_center_group(const RootDatum& d) {
  CenterGroup g;
  g.alcove = build_alcove(d);
  g.elements = center_elements(d);
  const std::size_t n = g.elements.size();
  g.cayley.assign(n, std::vector<int>(n, 0));
  g.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ca = g.coords(static_cast<int>(a));
    for (std::size_t b = 0; b < n; ++b)
      g.cayley[a][b] = locate(g, reduce_to_alcove(ca + g.coords(static_cast<int>(b)), d));
    g.inverse[a] = locate(g, reduce_to_alcove(Rational(-1) * ca, d));
  }
  check_group(g);
  return g;
}

Subgroup generated_subgroup(const CenterGroup& g, const std::vector<int>& generators) {
  std::set<int> members{0};
  bool grew = true;
  for (int x : generators) members.insert(x);
  while (grew) {
    grew = false;
    const std::vector<int> snapshot(members.begin(), members.end());
    for (int a : snapshot)
      for (int b : snapshot) grew |= members.insert(g.cayley[a][b]).second;
  }
  return Subgroup{{members.begin(), members.end()}};
}

std::vector<Subgroup> subgroups(const CenterGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<int>> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> gens;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) gens.push_back(static_cast<int>(a));
    found.insert(generated_subgroup(g, gens).members);
  }
  std::vector<Subgroup> out;
  for (const auto& m : found) out.push_back(Subgroup{m});
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() < b.order();
  });
  return out;
}

std::string subgroup_name(const CenterGroup& g, const Subgroup& s) {
  if (s.trivial()) return "trivial";
  if (s.order() == g.order()) return "full";
  if (g.cyclic()) return "Z" + std::to_string(s.order());
  std::string name = "gen=";
  bool first = true;
  for (int a : s.members) {
    if (a == 0) continue;
    // Name the subgroup by a minimal generating set: any member whose
    // cyclic span is the whole subgroup, else every non-identity member.
    if (generated_subgroup(g, {a}) == s) return name + g.elements[a].name();
    if (!first) name += ",";
    name += g.elements[a].name();
    first = false;
  }
  return name;
}

namespace {

std::string trim_lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "e3", "e_3", "e_{3}", "e_l", "e_{l-1}" -> 1-based vertex index.
std::optional<int> parse_vertex(std::string tok, int l) {
  if (tok.empty() || tok[0] != 'e') return std::nullopt;
  std::string body;
  for (char c : tok.substr(1))
    if (c != '_' && c != '{' && c != '}') body += c;
  if (body == "l") return l;
  if (body == "l-1") return l - 1;
  return parse_int(body);
}

}  // namespace

Subgroup parse_subgroup(const CenterGroup& g, std::string_view name) {
  const std::string s = trim_lower(name);
  const RootDatum& d = g.alcove.datum;
  const int l = d.rank();
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::BadInput, "subgroup '" + std::string(name) + "' of " + d.type.name() +
                                          " (" + g.structure() + "): " + why);
  };
  if (s == "trivial" || s == "1" || s == "z1") return Subgroup{{0}};
  if (s == "full") return generated_subgroup(g, [&] {
      std::vector<int> all;
      for (std::size_t a = 0; a < g.order(); ++a) all.push_back(static_cast<int>(a));
      return all;
    }());
  if (s.size() > 1 && s[0] == 'z') {
    auto k = parse_int(std::string_view(s).substr(1));
    if (!k || *k <= 0) throw bad("malformed order");
    for (const auto& sub : subgroups(g))
      if (static_cast<int>(sub.order()) == *k) {
        if (!g.cyclic() && *k != 1 && *k != static_cast<int>(g.order()))
          throw bad("ambiguous in a non-cyclic center; use gen=...");
        return sub;
      }
    throw bad("no subgroup of that order");
  }
  if (s.rfind("gen=", 0) == 0) {
    std::vector<int> gens;
    std::string rest = s.substr(4);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      auto j = parse_vertex(rest.substr(pos, comma - pos), l);
      if (!j || *j < 1 || *j > l) throw bad("unknown generator");
      int vertex = *j;
      if (d.type.written_as_c2) vertex = 3 - vertex;  // C2 indices are reversed in B2
      const int a = g.find_vertex(vertex - 1);
      if (a < 0) throw bad("e" + std::to_string(vertex) + " is not a center element");
      gens.push_back(a);
      pos = comma + 1;
    }
    return generated_subgroup(g, gens);
  }
  throw bad("unknown name");
}

ExpectedCenter expected_center(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return {t.rank + 1, "Z" + std::to_string(t.rank + 1)};
    case Family::B:
    case Family::C:
    case Family::E7: return {2, "Z2"};
    case Family::D: return {4, t.rank % 2 == 0 ? "Z2+Z2" : "Z4"};
    case Family::E6: return {3, "Z3"};
    default: return {1, "Z1"};
  }
}

}  // namespace symcut
