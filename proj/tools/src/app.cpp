#include "app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include "render.hpp"
#include "symcut/catalog.hpp"
#include "symcut/errors.hpp"
#include "symcut/polytope.hpp"
#include "verify.hpp"

namespace symcut::cli {

using symcut::to_string;

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  int max_rank = 0;
  std::string catalog_path;
  std::string n, p, q;
};

struct InfoOptions {
  std::string space;
  std::string sigma;
  std::string psi_sq;
  std::string gamma = "full";
  std::string epsilon;
  std::string ricci;
};

struct TableOptions {
  std::string which;
  std::string only;
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, what); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!trim(part).empty()) out.push_back(trim(part));
  return out;
}

Rational rational_flag(const std::string& flag, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const std::invalid_argument&) {
    bad(flag + " expects p/q, got '" + value + "'");
  }
}

const Catalog& load_catalog(const Options& o, std::unique_ptr<Catalog>& owned) {
  if (o.catalog_path.empty()) return Catalog::builtin();
  std::ifstream in(o.catalog_path, std::ios::binary);
  if (!in) bad("cannot read catalog '" + o.catalog_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  owned = std::make_unique<Catalog>(Catalog::from_json(buf.str()));
  return *owned;
}

std::map<std::string, std::vector<int>> ranges(const Options& o) {
  std::map<std::string, std::vector<int>> out;
  for (auto [name, text] : {std::pair{"n", &o.n}, {"p", &o.p}, {"q", &o.q}})
    if (!text->empty()) out[name] = parse_range(*text);
  return out;
}

Params single_params(const Options& o) {
  Params out;
  for (const auto& [name, values] : ranges(o)) {
    if (values.size() != 1) bad("--" + name + " takes a single value here");
    out[name] = values.front();
  }
  return out;
}

int check_max_rank(int requested) {
  const int cap = default_max_rank();
  if (requested == 0) return cap;
  if (requested < 1) bad("--max-rank must be positive");
  if (requested > cap)
    throw Error(ErrorKind::RankCapExceeded,
                "--max-rank " + std::to_string(requested) + " exceeds the enumeration cap " +
                    std::to_string(cap) + " (raise it with SYMCUT_MAX_RANK)");
  return requested;
}

// A string, or null when the value is absent.
ordered_json maybe(bool present, const std::string& value) {
  return present ? ordered_json(value) : ordered_json(nullptr);
}

std::string rational_or_empty(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

std::string kind_name(SpaceKind k) { return k == SpaceKind::TypeI ? "I" : "II"; }

ordered_json json_vector(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string gamma_display(const SpaceEntry& e, const std::string& gamma_name) {
  const ExpectedCenter c = expected_center(e.sigma_type);
  const bool cyclic = c.structure != "Z2+Z2";
  if (gamma_name == "full") return cyclic ? "Z_" + std::to_string(c.order) : "full";
  if (gamma_name.size() > 1 && gamma_name[0] == 'Z') return "Z_" + gamma_name.substr(1);
  return gamma_name;
}

// ---- info ----

int cmd_info(const Options& o, const InfoOptions& io, std::ostream& out) {
  const int max_rank = check_max_rank(o.max_rank);
  std::unique_ptr<Catalog> owned;
  const Catalog& catalog = load_catalog(o, owned);

  Rational epsilon = 1;
  if (!io.epsilon.empty()) epsilon = rational_flag("--epsilon", io.epsilon);
  if (!io.ricci.empty()) epsilon = epsilon_from_ricci(rational_flag("--ricci", io.ricci));
  if (epsilon <= 0) bad("--epsilon must be positive");

  std::optional<SpaceEntry> entry;
  if (!io.space.empty()) {
    auto [tmpl, params] = catalog.lookup(io.space, single_params(o));
    entry = tmpl->instantiate(params);
  }
  RootSystemType sigma;
  Rational psi_sq;
  if (!io.sigma.empty()) {
    sigma = RootSystemType::parse(io.sigma);
    if (entry && !(entry->sigma_type == sigma))
      bad(entry->space + " has Σ = " + entry->sigma_type.name() + ", not " + sigma.name());
    if (!entry && io.psi_sq.empty())
      bad("a bare --sigma query needs --psi-sq to fix the Killing scale (ψ,ψ); "
          "or name the space as well, e.g. info S^3 --sigma A1");
  } else if (!entry) {
    bad("name a space (see 'symcut list') or give --sigma with --psi-sq");
  }
  if (entry) {
    if (entry->no_forms())
      throw Error(ErrorKind::NoForms, entry->space + " (Σ = " + entry->sigma_type.name() +
                                          ") has a trivial center and no proper quotients");
    sigma = entry->sigma_type;
    psi_sq = psi_norm(*entry).psi_sq;
  }
  if (!io.psi_sq.empty()) {
    if (entry) bad("--psi-sq only applies to bare --sigma queries");
    psi_sq = rational_flag("--psi-sq", io.psi_sq);
    if (psi_sq <= 0) bad("--psi-sq must be positive");
  }

  const CenterGroup g = build_center_group(build_datum(sigma));
  const Subgroup gamma = parse_subgroup(g, io.gamma);
  const std::string gamma_name = subgroup_name(g, gamma);
  const CutPolytope poly = cut_polytope(g, gamma);
  const VertexSet vs = enumerate_vertices(poly, max_rank);
  const auto facets = cut_locus_description(poly, vs);
  const MetricResult r = entry ? metric_result(*entry, g, gamma, epsilon, max_rank)
                               : metric_result(psi_sq, g, gamma, epsilon, max_rank);

  std::vector<std::string> gamma_members;
  for (int m : gamma.members) gamma_members.push_back(g.elements[m].name());
  std::vector<std::string> center_members;
  for (const auto& e : g.elements) center_members.push_back(e.name());
  const std::string iso = isometry_class(g, gamma);

  const Rational i_sq = r.i_sq();
  const Rational d_sq = r.d_sq();

  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    if (entry) {
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : entry->params) params[k] = v;
      j["space"] = {{"name", entry->space},
                    {"label", entry->label},
                    {"kind", kind_name(entry->kind)},
                    {"params", params},
                    {"delta", entry->delta_type.name()}};
    } else {
      j["space"] = nullptr;
    }
    j["sigma"] = sigma.name();
    j["gamma"] = {{"name", gamma_name}, {"members", gamma_members}, {"isometry_class", iso}};
    j["center"] = {{"order", g.order()}, {"structure", g.structure()}, {"elements", center_members}};
    ordered_json ineqs = ordered_json::array();
    for (const auto& q : poly.inequalities)
      ineqs.push_back({{"facet", q.tag.name()}, {"a", json_vector(q.a)}, {"b", to_string(q.b)}});
    ordered_json verts = ordered_json::array();
    for (const auto& v : vs.vertices) verts.push_back(json_vector(v));
    j["polytope"] = {{"coordinates", "barycentric"}, {"inequalities", ineqs}, {"vertices", verts}};
    ordered_json fs = ordered_json::array();
    for (const auto& f : facets)
      fs.push_back({{"facet", f.tag.name()}, {"dimension", f.dimension}, {"vertices", f.vertices}});
    j["cut_locus"] = {{"facets", fs}};
    ordered_json res;
    res["i_sq_coeff"] = to_string(i_sq);
    res["d_sq_coeff"] = maybe(r.d_known, to_string(d_sq));
    res["epsilon"] = to_string(epsilon);
    res["psi_sq"] = to_string(psi_sq);
    res["i_exact"] = exact_pi_sqrt(i_sq);
    res["d_exact"] = maybe(r.d_known, exact_pi_sqrt(d_sq));
    res["i_decimal"] = decimal_pi_sqrt(i_sq);
    res["d_decimal"] = maybe(r.d_known, decimal_pi_sqrt(d_sq));
    res["d_known"] = r.d_known;
    res["beyond_paper"] = r.beyond_paper;
    res["diameter_case"] = r.diameter_case;
    j["result"] = res;
    out << j.dump(2) << "\n";
    return kOk;
  }

  std::vector<std::vector<std::string>> rows;
  if (entry) rows.push_back({"space", entry->space + " [" + entry->label + ", Type " +
                                          kind_name(entry->kind) + "]"});
  rows.push_back({"sigma", sigma.name()});
  rows.push_back({"psi_sq", to_string(psi_sq)});
  rows.push_back({"center", g.structure() + " (order " + std::to_string(g.order()) + ")"});
  rows.push_back({"gamma", gamma_name + " (isometry class " + iso + ")"});
  rows.push_back({"epsilon", to_string(epsilon)});
  rows.push_back({"inequalities", std::to_string(poly.inequalities.size())});
  for (const auto& q : poly.inequalities)
    rows.push_back({"  " + q.tag.name(), inequality_text(q.a, q.b)});
  rows.push_back({"vertices", std::to_string(vs.vertices.size())});
  for (const auto& v : vs.vertices) rows.push_back({"", to_string(v)});
  rows.push_back({"cut locus facets", std::to_string(facets.size())});
  for (const auto& f : facets) {
    const std::size_t n = f.vertices.size();
    rows.push_back({"  " + f.tag.name(), "dim " + std::to_string(f.dimension) + ", " +
                                             std::to_string(n) + (n == 1 ? " vertex" : " vertices")});
  }
  rows.push_back({"i(M)", exact_pi_sqrt(i_sq) + " = " + pretty_pi_sqrt(i_sq) + " ≈ " +
                              decimal_pi_sqrt(i_sq)});
  std::string d = r.d_known ? exact_pi_sqrt(d_sq) + " = " + pretty_pi_sqrt(d_sq) + " ≈ " +
                                  decimal_pi_sqrt(d_sq)
                            : "unknown above --max-rank";
  if (r.beyond_paper) d += " (beyond the closed forms)";
  rows.push_back({"d(M)", d});

  if (o.format == "csv") {
    out << "key,value\n";
    for (const auto& row : rows) out << csv_field(trim(row[0])) << "," << csv_field(row[1]) << "\n";
  } else if (o.format == "md") {
    rows.insert(rows.begin(), {"key", "value"});
    out << markdown_table(rows);
  } else {
    out << text_table(rows);
  }
  return kOk;
}

// ---- table ----

int cmd_table(const Options& o, const TableOptions& to, std::ostream& out) {
  const int max_rank = check_max_rank(o.max_rank);
  std::unique_ptr<Catalog> owned;
  const Catalog& catalog = load_catalog(o, owned);
  if (to.which != "8.1" && to.which != "8.2") bad("table must be 8.1 or 8.2");
  const auto only = split_commas(to.only);
  for (const auto& label : only) {
    bool known = false;
    for (const auto& t : catalog.templates())
      known = known || (t.table == to.which && t.label == label && !t.rows.empty());
    if (!known) bad("no rows labelled '" + label + "' in table " + to.which);
  }
  const auto rows = table_rows(catalog, to.which, ranges(o), only, max_rank);
  if (rows.empty()) bad("no rows for the requested parameters");

  struct Line {
    const TableRow* row;
    std::string gamma, i, d, note;
  };
  std::vector<Line> lines;
  for (const auto& r : rows) {
    Line l{&r, gamma_display(r.entry, r.gamma_name), pretty_pi_sqrt(r.computed.q_i), "", ""};
    l.d = r.computed.d_known ? pretty_pi_sqrt(r.computed.q_d) : "unknown";
    std::vector<std::string> notes;
    if (!r.printed_i || *r.printed_i != r.computed.q_i)
      notes.push_back("printed i(M) " + (r.printed_i ? pretty_pi_sqrt(*r.printed_i) : "?") +
                      " differs");
    if (!r.printed_d)
      notes.push_back(r.computed.d_known ? "d(M) not in the table; computed by vertex enumeration"
                                         : "d(M) unknown");
    else if (r.computed.d_known && *r.printed_d != r.computed.q_d)
      notes.push_back("printed d(M) " + pretty_pi_sqrt(*r.printed_d) + " differs");
    for (std::size_t k = 0; k < notes.size(); ++k) l.note += (k ? "; " : "") + notes[k];
    lines.push_back(std::move(l));
  }

  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["table"] = to.which;
    ordered_json arr = ordered_json::array();
    for (const auto& l : lines) {
      const TableRow& r = *l.row;
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : r.entry.params) params[k] = v;
      arr.push_back(
          {{"label", r.entry.label},
           {"space", r.entry.space},
           {"params", params},
           {"sigma", r.entry.sigma_type.name()},
           {"gamma", r.gamma_name},
           {"printed", {{"i_sq_coeff", maybe(r.printed_i.has_value(), rational_or_empty(r.printed_i))},
                        {"d_sq_coeff", maybe(r.printed_d.has_value(), rational_or_empty(r.printed_d))}}},
           {"result",
            {{"i_sq_coeff", to_string(r.computed.q_i)},
             {"d_sq_coeff", maybe(r.computed.d_known, to_string(r.computed.q_d))},
             {"epsilon", "1"},
             {"i_exact", exact_pi_sqrt(r.computed.q_i)},
             {"d_exact", maybe(r.computed.d_known, exact_pi_sqrt(r.computed.q_d))},
             {"d_known", r.computed.d_known},
             {"beyond_paper", r.computed.beyond_paper}}},
           {"note", l.note}});
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (o.format == "csv") {
    out << "label,space,gamma,i_sq_coeff,d_sq_coeff,printed_i_sq,printed_d_sq,i,d,note\n";
    for (const auto& l : lines) {
      const TableRow& r = *l.row;
      out << csv_field(r.entry.label) << "," << csv_field(r.entry.space) << ","
          << csv_field(r.gamma_name) << "," << to_string(r.computed.q_i) << ","
          << (r.computed.d_known ? to_string(r.computed.q_d) : "") << ","
          << (r.printed_i ? to_string(*r.printed_i) : "") << ","
          << (r.printed_d ? to_string(*r.printed_d) : "") << "," << csv_field(l.i) << ","
          << csv_field(l.d) << "," << csv_field(l.note) << "\n";
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> cells{{"label", "space", "Γ", "i(M)", "d(M)", "note"}};
  for (const auto& l : lines)
    cells.push_back({l.row->entry.label, l.row->entry.space, l.gamma, l.i, l.d, l.note});
  out << (o.format == "md" ? markdown_table(cells) : text_table(cells));
  return kOk;
}

// ---- verify ----

int cmd_verify(const Options& o, std::ostream& out) {
  const int max_rank = check_max_rank(o.max_rank);
  std::unique_ptr<Catalog> owned;
  const Catalog& catalog = load_catalog(o, owned);
  const auto checks = run_verify(catalog, max_rank);
  int counts[3] = {0, 0, 0};
  for (const auto& c : checks) ++counts[static_cast<int>(c.status)];
  const bool ok = counts[static_cast<int>(CheckStatus::Fail)] == 0;

  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"cases", c.cases},
                     {"detail", c.detail}});
    ordered_json j;
    j["schema_version"] = 1;
    j["max_rank"] = max_rank;
    j["checks"] = arr;
    j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}};
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "name,status,cases,detail\n";
    for (const auto& c : checks)
      out << csv_field(c.name) << "," << to_string(c.status) << "," << c.cases << ","
          << csv_field(c.detail) << "\n";
  } else {
    std::vector<std::vector<std::string>> cells{{"status", "check", "detail"}};
    for (const auto& c : checks) {
      std::string s = to_string(c.status);
      for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      cells.push_back({s, c.name, c.detail});
    }
    if (o.format == "md") {
      out << markdown_table(cells);
    } else {
      cells.erase(cells.begin());
      out << text_table(cells);
    }
    out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- list ----

int cmd_list(const Options& o, std::ostream& out) {
  std::unique_ptr<Catalog> owned;
  const Catalog& catalog = load_catalog(o, owned);
  if (o.format == "json") {
    out << catalog.to_json();
    return kOk;
  }
  std::vector<std::vector<std::string>> cells{
      {"table", "label", "space", "params", "Δ", "Σ", "(ψ,ψ)", "forms"}};
  for (const auto& t : catalog.templates()) {
    std::string params;
    for (const auto& name : t.params) {
      if (!params.empty()) params += " ";
      params += name + "=" + t.defaults.at(name);
    }
    for (const auto& c : t.valid) params += (params.empty() ? "" : ", ") + c.text();
    std::string psi = t.kind == SpaceKind::TypeII ? "½(δ,δ)" : t.halved ? "½(δ,δ)" : "(δ,δ)";
    if (t.kind == SpaceKind::TypeI && t.halved && !t.halved_when.empty()) {
      psi += " if";
      for (const auto& c : t.halved_when) psi += " " + c.text();
    }
    cells.push_back({t.table, t.label, t.space, params, t.delta.text, t.sigma.text, psi,
                     t.rows.empty() ? "none" : std::to_string(t.rows.size()) + (t.rows.size() == 1 ? " row" : " rows")});
  }
  if (o.format == "csv") {
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
      out << "\n";
    }
  } else {
    out << (o.format == "md" ? markdown_table(cells) : text_table(cells));
  }
  return kOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::RankCapExceeded: return kResourceCap;
    case ErrorKind::SingularGram:
    case ErrorKind::NonTerminating:
    case ErrorKind::ReductionMismatch: return kVerifyFailed;
    default: return kBadInput;
  }
}

void add_common(CLI::App* cmd, Options& o, bool ranges_too) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md", "text"}));
  cmd->add_option("--catalog", o.catalog_path, "Catalog JSON to use instead of the built-in one");
  if (ranges_too) {
    cmd->add_option("--n", o.n, "Value or range of n, e.g. 4 or 2..8 or 3,5");
    cmd->add_option("--p", o.p, "Value or range of p");
    cmd->add_option("--q", o.q, "Value or range of q");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut loci, injectivity radii and diameters of compact symmetric spaces", "symcut"};
  app.require_subcommand(1);

  Options o;
  InfoOptions io;
  TableOptions to;

  auto* info = app.add_subcommand("info", "Cut polytope, i(M) and d(M) of one quotient");
  info->add_option("space", io.space, "Catalog label or name, e.g. \"E I\", SU(5), S^3");
  info->add_option("--sigma", io.sigma, "Restricted root system, e.g. A1, D5, E7");
  info->add_option("--psi-sq", io.psi_sq, "(ψ,ψ) for a bare --sigma query, p/q");
  info->add_option("--gamma", io.gamma, "Subgroup: full, Z<k>, gen=e<j>, trivial")
      ->capture_default_str();
  auto* eps = info->add_option("--epsilon", io.epsilon, "Metric scale ε as p/q (default 1)");
  auto* ric = info->add_option("--ricci", io.ricci, "Ricci constant as p/q; sets ε = 1/(2·Ric)");
  eps->excludes(ric);
  info->add_option("--max-rank", o.max_rank, "Vertex enumeration cap");
  add_common(info, o, true);

  auto* table = app.add_subcommand("table", "Reproduce table 8.1 or 8.2 at ε = 1");
  table->add_option("which", to.which, "8.1 or 8.2")->required();
  table->add_option("--only", to.only, "Comma-separated labels, e.g. \"E V,E VII\"");
  table->add_option("--max-rank", o.max_rank, "Vertex enumeration cap");
  add_common(table, o, true);

  auto* verify = app.add_subcommand("verify", "Check every computation against its closed form");
  verify->add_option("--max-rank", o.max_rank, "Skip checks above this rank");
  add_common(verify, o, false);

  auto* list = app.add_subcommand("list", "Show the catalog of spaces");
  add_common(list, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*info) return cmd_info(o, io, out);
    if (*table) return cmd_table(o, to, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_list(o, out);
  } catch (const Error& e) {
    err << "symcut: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "symcut: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "symcut: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace symcut::cli
