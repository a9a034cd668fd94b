#include "verify.hpp"

#include <functional>
#include <optional>

#include "symcut/alcove.hpp"
#include "symcut/closed_forms.hpp"
#include "symcut/errors.hpp"
#include "symcut/killing.hpp"
#include "symcut/polytope.hpp"

namespace symcut::cli {

using symcut::to_string;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

namespace {

struct FamilyRange {
  Family family;
  int min_rank;
  int max_rank;  // inclusive; fixed rank for the exceptional families
};

const std::vector<FamilyRange>& families() {
  static const std::vector<FamilyRange> all{
      {Family::A, 1, 8},  {Family::B, 2, 8},  {Family::C, 3, 8},  {Family::D, 4, 8},
      {Family::E6, 6, 6}, {Family::E7, 7, 7}, {Family::E8, 8, 8}, {Family::F4, 4, 4},
      {Family::G2, 2, 2}};
  return all;
}

// Returns an empty string on success, otherwise a description of the mismatch.
using CaseFn = std::function<std::string(const RootSystemType&)>;

void sweep(std::vector<Check>& out, const std::string& suite, int max_rank, const CaseFn& fn) {
  for (const auto& f : families()) {
    Check c;
    c.name = suite + "/" + family_name(f.family);
    const int hi = std::min(f.max_rank, max_rank);
    if (hi < f.min_rank) {
      c.status = CheckStatus::Skip;
      c.detail = "rank " + std::to_string(f.min_rank) + " is above --max-rank " +
                 std::to_string(max_rank);
      out.push_back(std::move(c));
      continue;
    }
    for (int l = f.min_rank; l <= hi && c.status == CheckStatus::Pass; ++l) {
      const RootSystemType t = RootSystemType::make(f.family, l);
      std::string failure;
      try {
        failure = fn(t);
      } catch (const std::exception& e) {
        failure = e.what();
      }
      ++c.cases;
      if (!failure.empty()) {
        c.status = CheckStatus::Fail;
        c.detail = t.name() + ": " + failure;
      }
    }
    if (c.status == CheckStatus::Pass)
      c.detail = f.min_rank == hi ? "rank " + std::to_string(hi)
                                  : "ranks " + std::to_string(f.min_rank) + ".." +
                                        std::to_string(hi);
    out.push_back(std::move(c));
  }
}

std::string killing_case(const RootSystemType& t) {
  const Rational got = delta_norm(t);
  const auto want = reference_delta_norm(t);
  if (!want || got != *want)
    return "(δ,δ) = " + to_string(got) + ", listed " + (want ? to_string(*want) : "none");
  return {};
}

std::string gram_case(const RootSystemType& t) {
  const RootDatum d = build_datum(t);
  const Alcove a = build_alcove(d);
  const Matrix lemma = gram_e(d);
  if (!(gram_e_ambient(a) == lemma)) return "ambient and inverse-Gram routes disagree";
  if (auto ref = reference_gram_e(t); ref && !(*ref == lemma))
    return "E = " + to_string(lemma) + ", printed " + to_string(*ref);
  if (auto ref = reference_vertices(t); ref && *ref != a.vertices)
    return "alcove vertices differ from the closed forms";
  return {};
}

int power(const CenterGroup& g, int a, int k) {
  int x = 0;
  for (int i = 0; i < k; ++i) x = g.cayley[x][a];
  return x;
}

std::string center_case(const RootSystemType& t) {
  const CenterGroup g = build_center_group(build_datum(t));
  const ExpectedCenter want = expected_center(t);
  if (static_cast<int>(g.order()) != want.order || g.structure() != want.structure)
    return "center " + g.structure() + ", expected " + want.structure;
  const int l = t.rank;
  if (t.family == Family::A) {
    const int e1 = g.find_vertex(0);
    for (int j = 1; j <= l; ++j)
      if (power(g, e1, j) != g.find_vertex(j - 1))
        return "e1^" + std::to_string(j) + " != e" + std::to_string(j);
  }
  if (t.family == Family::D && l % 2 == 1 &&
      power(g, g.find_vertex(l - 2), 2) != g.find_vertex(0))
    return "e_{l-1}^2 != e1";
  return {};
}

std::vector<Subgroup> nontrivial(const CenterGroup& g) {
  std::vector<Subgroup> out;
  for (auto& s : subgroups(g))
    if (!s.trivial()) out.push_back(std::move(s));
  return out;
}

std::string injectivity_case(const RootSystemType& t) {
  const CenterGroup g = build_center_group(build_datum(t));
  for (const auto& s : nontrivial(g)) {
    const std::string name = subgroup_name(g, s);
    const Rational got = injectivity_value(cut_polytope(g, s));
    const ClosedForm cf = injectivity_closed_form(t, name);
    if (!cf.value || got != *cf.value)
      return name + ": polytope " + to_string(got) + ", case " + cf.case_id + " gives " +
             (cf.value ? to_string(*cf.value) : "nothing");
  }
  return {};
}

std::string diameter_case(const RootSystemType& t, int max_rank) {
  const CenterGroup g = build_center_group(build_datum(t));
  for (const auto& s : nontrivial(g)) {
    const std::string name = subgroup_name(g, s);
    const ClosedForm cf = diameter_closed_form(t, name);
    if (!cf.value) continue;  // no closed form to compare against
    const Rational got = diameter_value(cut_polytope(g, s), max_rank);
    if (got != *cf.value)
      return name + ": vertices give " + to_string(got) + ", case " + cf.case_id + " gives " +
             to_string(*cf.value);
  }
  return {};
}

void table_checks(std::vector<Check>& out, const Catalog& catalog, int max_rank) {
  for (const char* which : {"8.1", "8.2"}) {
    std::vector<std::string> labels;
    for (const auto& t : catalog.templates())
      if (t.table == which && !t.rows.empty() &&
          std::find(labels.begin(), labels.end(), t.label) == labels.end())
        labels.push_back(t.label);
    for (const auto& label : labels) {
      Check c;
      c.name = std::string("table/") + which + "/" + label;
      int skipped = 0;
      try {
        for (const auto& r : table_rows(catalog, which, {}, {label}, max_rank)) {
          if (r.entry.sigma_type.rank > max_rank) {
            ++skipped;
            continue;
          }
          ++c.cases;
          std::string failure;
          if (!r.printed_i || *r.printed_i != r.computed.q_i)
            failure = "i² printed " + (r.printed_i ? to_string(*r.printed_i) : "none") +
                      ", computed " + to_string(r.computed.q_i);
          else if (r.printed_d && *r.printed_d != r.computed.q_d)
            failure = "d² printed " + to_string(*r.printed_d) + ", computed " +
                      to_string(r.computed.q_d);
          if (!failure.empty() && c.status == CheckStatus::Pass) {
            c.status = CheckStatus::Fail;
            c.detail = r.entry.space + " Γ=" + r.gamma_name + ": " + failure;
          }
        }
      } catch (const std::exception& e) {
        c.status = CheckStatus::Fail;
        c.detail = e.what();
      }
      if (c.status == CheckStatus::Pass) {
        if (c.cases == 0) {
          c.status = CheckStatus::Skip;
          c.detail = "every row has Σ above --max-rank " + std::to_string(max_rank);
        } else {
          c.detail = std::to_string(c.cases) + (c.cases == 1 ? " row" : " rows");
          if (skipped) c.detail += ", " + std::to_string(skipped) + " above --max-rank skipped";
        }
      }
      out.push_back(std::move(c));
    }
  }
}

}  // namespace

std::vector<Check> run_verify(const Catalog& catalog, int max_rank) {
  std::vector<Check> out;
  sweep(out, "killing", max_rank, killing_case);
  sweep(out, "gram", max_rank, gram_case);
  sweep(out, "center", max_rank, center_case);
  sweep(out, "injectivity", max_rank, injectivity_case);
  sweep(out, "diameter", max_rank,
        [max_rank](const RootSystemType& t) { return diameter_case(t, max_rank); });
  table_checks(out, catalog, max_rank);
  return out;
}

}  // namespace symcut::cli
