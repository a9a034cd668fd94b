#ifndef SYMCUT_TOOLS_VERIFY_HPP
#define SYMCUT_TOOLS_VERIFY_HPP

#include <string>
#include <vector>

#include "symcut/catalog.hpp"

namespace symcut::cli {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct Check {
  std::string name;    // "<suite>/<family or label>", e.g. "killing/A", "table/8.1/E VII"
  CheckStatus status = CheckStatus::Pass;
  int cases = 0;       // instances compared
  std::string detail;  // first failing case, or why it was skipped
};

/// The full invariant sweep over every family at ranks ≤ max_rank and every
/// catalog row whose Σ fits under the cap. Order of the result is fixed.
std::vector<Check> run_verify(const Catalog& catalog, int max_rank);

}  // namespace symcut::cli

#endif  // SYMCUT_TOOLS_VERIFY_HPP
