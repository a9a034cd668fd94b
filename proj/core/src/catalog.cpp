#include "symcut/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "symcut/closed_forms.hpp"
#include "symcut/errors.hpp"

namespace symcut {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, what); }

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int to_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    bad("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

int param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) bad("parameter '" + name + "' is not set");
  return it->second;
}

int as_int(const Rational& r, std::string_view what) {
  if (r.get_den() != 1 || !r.get_num().fits_sint_p())
    bad(std::string(what) + " is not an integer: " + to_string(r));
  return static_cast<int>(r.get_num().get_si());
}

}  // namespace

// ---- expressions and conditions ----

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.text_ = std::string(text);
  const std::string s = strip(text);
  if (s.empty()) bad("empty expression");
  std::size_t pos = 0;
  while (pos < s.size()) {
    Term t{1, {}};
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') t.coef = -1;
      ++pos;
    } else if (pos != 0) {
      bad("malformed expression '" + e.text_ + "'");
    }
    bool need_factor = true;
    while (need_factor) {
      if (pos >= s.size()) bad("malformed expression '" + e.text_ + "'");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t end = pos;
        while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/'))
          ++end;
        t.coef *= parse_rational(s.substr(pos, end - pos));
        pos = end;
      } else if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
        std::string var(1, s[pos++]);
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          std::size_t end = ++pos;
          while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
          power = to_int(std::string_view(s).substr(pos, end - pos), e.text_);
          pos = end;
        }
        t.powers[var] += power;
      } else {
        bad("malformed expression '" + e.text_ + "'");
      }
      need_factor = pos < s.size() && s[pos] == '*';
      if (need_factor) ++pos;
    }
    e.terms_.push_back(std::move(t));
  }
  return e;
}

Rational Expr::eval(const Params& params) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (const auto& [var, power] : t.powers)
      for (int k = 0; k < power; ++k) v *= param(params, var);
    total += v;
  }
  return total;
}

Condition Condition::parse(std::string_view text) {
  Condition c;
  c.text_ = std::string(text);
  static const std::regex re(R"(^([a-z])(%([0-9]+))?(==|!=|<=|>=|<|>)(.+)$)");
  const std::string s = strip(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) bad("malformed condition '" + c.text_ + "'");
  c.var_ = m[1];
  c.mod_ = m[3].matched ? to_int(m[3].str(), c.text_) : 0;
  if (m[3].matched && c.mod_ <= 0) bad("bad modulus in '" + c.text_ + "'");
  c.op_ = m[4];
  c.rhs_ = Expr::parse(m[5].str());
  return c;
}

bool Condition::holds(const Params& params) const {
  int v = param(params, var_);
  if (mod_) v = ((v % mod_) + mod_) % mod_;
  const Rational value_ = rhs_->eval(params);
  if (op_ == "==") return v == value_;
  if (op_ == "!=") return v != value_;
  if (op_ == "<=") return v <= value_;
  if (op_ == ">=") return v >= value_;
  if (op_ == "<") return v < value_;
  return v > value_;
}

bool all_hold(const Conditions& cs, const Params& params) {
  return std::all_of(cs.begin(), cs.end(), [&](const Condition& c) { return c.holds(params); });
}

std::optional<std::optional<Rational>> Cell::eval(const Params& params) const {
  for (const auto& b : branches)
    if (all_hold(b.when, params)) {
      if (!b.value) return std::optional<Rational>{};
      return std::optional<Rational>{b.value->eval(params)};
    }
  return std::nullopt;
}

GammaSelector GammaSelector::parse(std::string_view text) {
  GammaSelector g;
  g.text = std::string(text);
  const std::string s = strip(text);
  if (s == "full") g.kind = Kind::Full;
  else if (s == "gen=e1") g.kind = Kind::GenE1;
  else if (s == "spinor") g.kind = Kind::Spinor;
  else if (s == "otherwise") g.kind = Kind::Otherwise;
  else if (s.rfind("Z:", 0) == 0) {
    g.kind = Kind::Cyclic;
    g.order = Expr::parse(s.substr(2));
  } else {
    bad("unknown subgroup selector '" + g.text + "'");
  }
  return g;
}

TypeSpec TypeSpec::parse(std::string_view text) {
  TypeSpec t;
  t.text = std::string(text);
  const std::string s = strip(text);
  const auto colon = s.find(':');
  t.family = s.substr(0, colon);
  if (colon != std::string::npos) t.rank = Expr::parse(s.substr(colon + 1));
  static const std::set<std::string> known{"A", "B", "C", "D", "BC", "so", "E6", "E7", "E8", "F4", "G2"};
  if (!known.count(t.family)) bad("unknown root system family in '" + t.text + "'");
  if (t.family.size() == 1 || t.family == "BC" || t.family == "so") {
    if (!t.rank) bad("missing rank in '" + t.text + "'");
  }
  return t;
}

RootSystemType TypeSpec::resolve(const Params& params) const {
  if (!rank) return RootSystemType::parse(family);
  const int r = as_int(rank->eval(params), "rank of " + text);
  if (family == "so") {
    // so(m): so(3) ≅ A1; so(4) ≅ A1 + A1, whose simple factors are A1; so(6) ≅ A3.
    if (r == 3 || r == 4) return RootSystemType::make(Family::A, 1);
    if (r == 6) return RootSystemType::make(Family::A, 3);
    if (r < 3) bad("so(" + std::to_string(r) + ") is not simple");
    return r % 2 ? RootSystemType::make(Family::B, (r - 1) / 2)
                 : RootSystemType::make(Family::D, r / 2);
  }
  return RootSystemType::parse(family + std::to_string(r));
}

// ---- templates ----

bool SpaceTemplate::accepts(const Params& p) const {
  for (const auto& name : params)
    if (!p.count(name)) return false;
  return all_hold(valid, p);
}

namespace {

std::string substitute(const std::string& pattern, const Params& params) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '$' || i + 1 >= pattern.size()) {
      out += pattern[i];
      continue;
    }
    std::string expr;
    if (pattern[i + 1] == '{') {
      const auto close = pattern.find('}', i);
      expr = pattern.substr(i + 2, close - i - 2);
      i = close;
    } else {
      expr = pattern.substr(i + 1, 1);
      ++i;
    }
    out += to_string(Expr::parse(expr).eval(params));
  }
  return out;
}

}  // namespace

SpaceEntry SpaceTemplate::instantiate(const Params& p) const {
  if (!accepts(p)) {
    std::string msg = label + " (" + space + ") requires";
    for (const auto& name : params) msg += " " + name;
    for (const auto& c : valid) msg += ", " + c.text();
    bad(msg);
  }
  SpaceEntry e;
  e.kind = kind;
  e.label = label;
  for (const auto& name : params) e.params[name] = p.at(name);
  e.space = substitute(space, e.params);
  e.delta_type = delta.resolve(e.params);
  e.sigma_type = sigma.resolve(e.params);
  e.halved = kind == SpaceKind::TypeI && halved && all_hold(halved_when, e.params);
  return e;
}

// ---- JSON ----

namespace {

Conditions conditions_from(const json& j) {
  Conditions out;
  if (j.is_null()) return out;
  for (const auto& c : j) out.push_back(Condition::parse(c.get<std::string>()));
  return out;
}

json conditions_to(const Conditions& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.text());
  return out;
}

Cell cell_from(const json& j) {
  Cell cell;
  auto branch = [](const json& when, const std::string& value) {
    Cell::Branch b{conditions_from(when), std::nullopt};
    if (value != "unknown") b.value = Expr::parse(value);
    return b;
  };
  if (j.is_string()) {
    cell.branches.push_back(branch(json(), j.get<std::string>()));
  } else {
    for (const auto& b : j) cell.branches.push_back(branch(b.value("when", json()), b.at("value")));
  }
  if (cell.branches.empty()) bad("empty table cell");
  return cell;
}

json cell_to(const Cell& c) {
  json out = json::array();
  for (const auto& b : c.branches)
    out.push_back({{"when", conditions_to(b.when)},
                   {"value", b.value ? b.value->text() : std::string("unknown")}});
  return out;
}

}  // namespace

Catalog Catalog::from_json(std::string_view text) {
  Catalog c;
  try {
    const json doc = json::parse(text);
    if (doc.value("schema_version", 0) != 1) bad("catalog schema_version must be 1");
    for (const auto& s : doc.at("spaces")) {
      SpaceTemplate t;
      t.table = s.at("table");
      const std::string kind = s.at("kind");
      if (kind != "I" && kind != "II") bad("space kind must be I or II");
      t.kind = kind == "I" ? SpaceKind::TypeI : SpaceKind::TypeII;
      t.label = s.at("label");
      t.space = s.at("space");
      t.params = s.value("params", std::vector<std::string>{});
      t.valid = conditions_from(s.value("valid", json()));
      t.delta = TypeSpec::parse(s.at("delta").get<std::string>());
      t.sigma = TypeSpec::parse(s.at("sigma").get<std::string>());
      t.halved = s.value("halved", false);
      t.halved_when = conditions_from(s.value("halved_when", json()));
      t.defaults = s.value("defaults", std::map<std::string, std::string>{});
      t.reading = s.value("reading", std::string());
      for (const auto& r : s.value("rows", json::array())) {
        TableRowTemplate row;
        row.gamma = GammaSelector::parse(r.at("gamma").get<std::string>());
        row.when = conditions_from(r.value("when", json()));
        row.i_sq = cell_from(r.at("i"));
        row.d_sq = cell_from(r.at("d"));
        t.rows.push_back(std::move(row));
      }
      c.templates_.push_back(std::move(t));
    }
  } catch (const json::exception& e) {
    bad(std::string("catalog JSON: ") + e.what());
  }
  c.validate();
  return c;
}

std::string Catalog::to_json() const {
  json spaces = json::array();
  for (const auto& t : templates_) {
    json rows = json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"gamma", r.gamma.text},
                      {"when", conditions_to(r.when)},
                      {"i", cell_to(r.i_sq)},
                      {"d", cell_to(r.d_sq)}});
    json s = {{"table", t.table},
              {"kind", t.kind == SpaceKind::TypeI ? "I" : "II"},
              {"label", t.label},
              {"space", t.space},
              {"params", t.params},
              {"valid", conditions_to(t.valid)},
              {"defaults", t.defaults},
              {"delta", t.delta.text},
              {"sigma", t.sigma.text},
              {"halved", t.halved},
              {"halved_when", conditions_to(t.halved_when)},
              {"rows", rows}};
    if (!t.reading.empty()) s["reading"] = t.reading;
    spaces.push_back(std::move(s));
  }
  return json({{"schema_version", 1}, {"spaces", spaces}}).dump(2) + "\n";
}

const Catalog& Catalog::builtin() {
  static const Catalog c = from_json(builtin_catalog_json());
  return c;
}

std::vector<int> parse_range(std::string_view text) {
  const std::string s = strip(text);
  std::vector<int> out;
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const int lo = to_int(std::string_view(s).substr(0, dots), s);
    const int hi = to_int(std::string_view(s).substr(dots + 2), s);
    if (hi < lo) bad("empty range '" + s + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(to_int(std::string_view(s).substr(pos, comma - pos), s));
    pos = comma + 1;
  }
  return out;
}

namespace {

// Every combination of the template's parameters drawn from the ranges.
std::vector<Params> instantiations(const SpaceTemplate& t,
                                   const std::map<std::string, std::vector<int>>& ranges) {
  std::vector<Params> out{Params{}};
  for (const auto& name : t.params) {
    std::vector<int> values;
    if (auto it = ranges.find(name); it != ranges.end()) values = it->second;
    else if (auto d = t.defaults.find(name); d != t.defaults.end()) values = parse_range(d->second);
    std::vector<Params> next;
    for (const auto& p : out)
      for (int v : values) {
        Params q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  std::erase_if(out, [&](const Params& p) { return !t.accepts(p); });
  return out;
}

std::vector<Subgroup> nontrivial_subgroups(const CenterGroup& g) {
  auto subs = subgroups(g);
  std::erase_if(subs, [](const Subgroup& s) { return s.trivial(); });
  return subs;
}

// Subgroups a printed row refers to, skipping those claimed by earlier rows.
std::vector<Subgroup> select(const CenterGroup& g, const TableRowTemplate& row,
                             const Params& params, std::vector<Subgroup>& claimed) {
  std::vector<Subgroup> picked;
  if (!all_hold(row.when, params)) return picked;
  const int l = g.alcove.datum.rank();
  auto gen = [&](int j) {
    const int a = g.find_vertex(j - 1);
    if (a < 0) return std::optional<Subgroup>{};
    return std::optional<Subgroup>{generated_subgroup(g, {a})};
  };
  using K = GammaSelector::Kind;
  switch (row.gamma.kind) {
    case K::Full:
      picked.push_back(parse_subgroup(g, "full"));
      break;
    case K::GenE1:
      if (auto s = gen(1)) picked.push_back(*s);
      break;
    case K::Spinor:
      if (g.alcove.datum.type.family == Family::D && l % 2 == 0)
        for (int j : {l - 1, l})
          if (auto s = gen(j)) picked.push_back(*s);
      break;
    case K::Cyclic: {
      const Rational k = row.gamma.order->eval(params);
      if (k.get_den() != 1 || k <= 1 || !g.cyclic()) break;
      for (const auto& s : nontrivial_subgroups(g))
        if (Rational(static_cast<long>(s.order())) == k) picked.push_back(s);
      break;
    }
    case K::Otherwise:
      picked = nontrivial_subgroups(g);
      break;
  }
  std::erase_if(picked, [&](const Subgroup& s) {
    return std::find(claimed.begin(), claimed.end(), s) != claimed.end();
  });
  claimed.insert(claimed.end(), picked.begin(), picked.end());
  return picked;
}

}  // namespace

void Catalog::validate() const {
  for (const auto& t : templates_) {
    if (t.table != "8.1" && t.table != "8.2") bad(t.label + ": table must be 8.1 or 8.2");
    for (const auto& name : t.params)
      if (!t.defaults.count(name)) bad(t.label + ": no default range for " + name);
    for (const auto& p : instantiations(t, {})) {
      const SpaceEntry e = t.instantiate(p);
      if (e.no_forms() != t.rows.empty())
        bad(t.label + " " + e.space + ": rows must be present exactly when forms exist");
      if (e.kind == SpaceKind::TypeII && !(e.delta_type == e.sigma_type))
        bad(t.label + ": Type II spaces have Sigma of the same type as Delta*");
      if (e.no_forms()) continue;
      const CenterGroup g = build_center_group(build_datum(e.sigma_type));
      std::vector<Subgroup> claimed;
      for (const auto& row : t.rows) {
        for (const auto& s : select(g, row, p, claimed)) {
          (void)s;
          if (!row.i_sq.eval(p) || !row.d_sq.eval(p))
            bad(t.label + " " + e.space + ": no branch of row " + row.gamma.text + " applies");
        }
      }
    }
  }
}

std::pair<const SpaceTemplate*, Params> Catalog::lookup(std::string_view name, Params params) const {
  std::string label(name);
  static const std::regex group(R"(^\s*(SU|Sp|Spin|SO)\s*\(\s*([0-9]+)\s*\)\s*$)");
  static const std::regex sphere(R"(^\s*(S|RP)\s*\^\s*([0-9]+)\s*$)");
  static const std::regex sphere_label(R"(^\s*(S|RP)\s*\^\s*q\s*$)");
  std::smatch m;
  std::optional<std::string> space_hint;
  if (std::regex_match(label, m, group)) {
    const std::string g = m[1];
    const int k = to_int(m[2].str(), label);
    if (g == "SU") label = "SU(n)", params["n"] = k;
    else if (g == "Sp") label = "Sp(n)", params["n"] = k;
    else if (k % 2) label = "Spin(2n+1)", params["n"] = (k - 1) / 2;
    else label = "Spin(2n)", params["n"] = k / 2;
  } else if (std::regex_match(label, m, sphere)) {
    params["q"] = to_int(m[2].str(), label);
    label = "BD I";
    space_hint = "S^$q";
  } else if (std::regex_match(label, m, sphere_label)) {
    label = "BD I";
    space_hint = "S^$q";
  }
  bool label_known = false;
  for (const auto& t : templates_) {
    if (t.label != label && t.space != label) continue;
    label_known = true;
    if (space_hint && t.space != *space_hint) continue;
    if (t.accepts(params)) return {&t, params};
  }
  if (!label_known) bad("unknown space '" + std::string(name) + "'; see 'symcut list'");
  std::string msg = "parameters do not fit any variant of '" + std::string(name) + "':";
  for (const auto& t : templates_)
    if (t.label == label) {
      msg += " " + t.space + " [";
      for (std::size_t i = 0; i < t.valid.size(); ++i) msg += (i ? ", " : "") + t.valid[i].text();
      msg += "]";
    }
  bad(msg);
}

// ---- forms and tables ----

std::string isometry_class(const CenterGroup& g, const Subgroup& s) {
  const RootSystemType& t = g.alcove.datum.type;
  const std::string name = subgroup_name(g, s);
  if (t.family == Family::D && t.rank % 2 == 0 && s.order() == 2) {
    if (t.rank == 4) return "order-2 (triality)";
    if (name != "gen=e1") return "spinor";
  }
  return name;
}

std::vector<CliffordKleinForm> enumerate_forms(const SpaceEntry& entry, const Rational& epsilon,
                                               int max_rank) {
  if (entry.no_forms())
    throw Error(ErrorKind::NoForms,
                entry.space + " has trivial center; it admits no non-simply-connected form");
  const CenterGroup g = build_center_group(build_datum(entry.sigma_type));
  std::vector<CliffordKleinForm> out;
  for (const auto& s : nontrivial_subgroups(g)) {
    CliffordKleinForm f;
    f.entry = entry;
    f.gamma = s;
    f.gamma_name = subgroup_name(g, s);
    f.result = metric_result(entry, g, s, epsilon, max_rank);
    f.isometry_class = isometry_class(g, s);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TableRow> table_rows(const Catalog& c, std::string_view which,
                                 const std::map<std::string, std::vector<int>>& ranges,
                                 const std::vector<std::string>& only, int max_rank) {
  if (which != "8.1" && which != "8.2") bad("table must be 8.1 or 8.2");
  std::vector<TableRow> out;
  for (const auto& t : c.templates()) {
    if (t.table != which || t.rows.empty()) continue;
    if (!only.empty() && std::find(only.begin(), only.end(), t.label) == only.end()) continue;
    for (const auto& p : instantiations(t, ranges)) {
      const SpaceEntry e = t.instantiate(p);
      const CenterGroup g = build_center_group(build_datum(e.sigma_type));
      std::vector<Subgroup> claimed;
      for (const auto& row : t.rows) {
        for (const auto& s : select(g, row, p, claimed)) {
          TableRow r;
          r.entry = e;
          r.gamma_label = row.gamma.text;
          r.gamma_name = subgroup_name(g, s);
          const auto i = row.i_sq.eval(p);
          const auto d = row.d_sq.eval(p);
          if (!i || !d) bad(t.label + " " + e.space + ": no branch of row " + row.gamma.text);
          r.printed_i = *i;
          r.printed_d = *d;
          r.computed = metric_result(e, g, s, 1, max_rank);
          r.reading = t.reading;
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

}  // namespace symcut
