#ifndef SYMCUT_CATALOG_HPP
#define SYMCUT_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcut/killing.hpp"
#include "symcut/space.hpp"

namespace symcut {

using Params = std::map<std::string, int>;

/// Polynomial in the parameters with rational coefficients, written like
/// "3/8*n^2 - 1/2*n" or "p + q - 2".
class Expr {
 public:
  static Expr parse(std::string_view text);
  Rational eval(const Params& params) const;
  const std::string& text() const { return text_; }

 private:
  struct Term {
    Rational coef;
    std::map<std::string, int> powers;
  };
  std::vector<Term> terms_;
  std::string text_;
};

/// "n>=8", "p<=3", "n==4", "n%4==0", "n%2!=0", "q>p", ...
class Condition {
 public:
  static Condition parse(std::string_view text);
  bool holds(const Params& params) const;
  const std::string& text() const { return text_; }

 private:
  std::string var_;
  int mod_ = 0;
  std::string op_;
  std::optional<Expr> rhs_;
  std::string text_;
};

using Conditions = std::vector<Condition>;
bool all_hold(const Conditions& cs, const Params& params);

/// A printed table cell: the first branch whose conditions hold applies.
/// A branch without a value is printed as "unknown".
struct Cell {
  struct Branch {
    Conditions when;
    std::optional<Expr> value;
  };
  std::vector<Branch> branches;

  /// nullopt if no branch applies; an inner nullopt for "unknown".
  std::optional<std::optional<Rational>> eval(const Params& params) const;
};

/// Which subgroups a printed row refers to.
struct GammaSelector {
  enum class Kind { Cyclic, Full, GenE1, Spinor, Otherwise };
  Kind kind = Kind::Full;
  std::optional<Expr> order;  // Cyclic only
  std::string text;           // as written in the catalog, e.g. "Z:n/2"

  static GammaSelector parse(std::string_view text);
};

struct TableRowTemplate {
  GammaSelector gamma;
  Conditions when;
  Cell i_sq;  // squared coefficient of π at ε = 1
  Cell d_sq;
};

/// "A:n-1", "C:p", "so:p+q", "E6", "BC:p".
struct TypeSpec {
  std::string family;
  std::optional<Expr> rank;
  std::string text;

  static TypeSpec parse(std::string_view text);
  RootSystemType resolve(const Params& params) const;
};

struct SpaceTemplate {
  std::string table;  // "8.1" or "8.2"
  SpaceKind kind = SpaceKind::TypeI;
  std::string label;
  std::string space;  // name pattern; "$n" and "${2*n+1}" are substituted
  std::vector<std::string> params;
  Conditions valid;
  TypeSpec delta;
  TypeSpec sigma;
  bool halved = false;
  Conditions halved_when;
  std::map<std::string, std::string> defaults;  // "n" -> "2..8"
  std::string reading;  // how ambiguous printed conditions were read
  std::vector<TableRowTemplate> rows;

  bool accepts(const Params& params) const;
  SpaceEntry instantiate(const Params& params) const;
};

class Catalog {
 public:
  /// The classification as printed, parsed from embedded JSON and checked.
  static const Catalog& builtin();
  static Catalog from_json(std::string_view text);
  std::string to_json() const;

  const std::vector<SpaceTemplate>& templates() const { return templates_; }

  /// Finds the template for a label ("A I", "BD I", "SU(n)") or a concrete
  /// group name ("SU(5)", "Spin(8)", "Sp(3)", "S^3", "E6"), filling params
  /// implied by the name. Throws Error(BadInput) if nothing matches.
  std::pair<const SpaceTemplate*, Params> lookup(std::string_view name, Params params) const;

  /// Load-time consistency: Σ reduced exactly when rows exist and every row
  /// resolves to a subgroup at the default parameters.
  void validate() const;

 private:
  std::vector<SpaceTemplate> templates_;
};

/// "2..8" or "4" or "3,5,7".
std::vector<int> parse_range(std::string_view text);

struct CliffordKleinForm {
  SpaceEntry entry;
  Subgroup gamma;
  std::string gamma_name;
  MetricResult result;
  std::string isometry_class;
};

/// Isometry-class tag of a subgroup; forms related by a diagram symmetry of
/// D_l (the two spinor subgroups, and all three order-2 subgroups for D4)
/// share a tag.
std::string isometry_class(const CenterGroup& g, const Subgroup& s);

/// One form per non-trivial subgroup. Throws Error(NoForms) if there is none.
std::vector<CliffordKleinForm> enumerate_forms(const SpaceEntry& entry, const Rational& epsilon = 1,
                                               int max_rank = 8);

struct TableRow {
  SpaceEntry entry;
  std::string gamma_label;  // the printed row, e.g. "Z:n/2"
  std::string gamma_name;   // canonical subgroup name
  std::optional<Rational> printed_i;
  std::optional<Rational> printed_d;  // empty: the table prints "unknown"
  MetricResult computed;              // at ε = 1
  std::string reading;
};

/// Rows of table "8.1" or "8.2" instantiated over the given parameter ranges
/// (defaults from the catalog for parameters not listed). `only` restricts to
/// labels; empty means all.
std::vector<TableRow> table_rows(const Catalog& c, std::string_view which,
                                 const std::map<std::string, std::vector<int>>& ranges = {},
                                 const std::vector<std::string>& only = {}, int max_rank = 8);

/// Raw JSON of the built-in catalog.
std::string_view builtin_catalog_json();

}  // namespace symcut

#endif  // SYMCUT_CATALOG_HPP
