#ifndef SYMCUT_TOOLS_RENDER_HPP
#define SYMCUT_TOOLS_RENDER_HPP

#include <string>
#include <vector>

#include "symcut/rational.hpp"

namespace symcut::cli {

// A length L with L² = π²·r is rendered three ways.

/// "π*sqrt(27/2)"; the exact contract form.
std::string exact_pi_sqrt(const Rational& r);

/// "(3√6/2)π", "4π", "π/2"; square factors pulled out.
std::string pretty_pi_sqrt(const Rational& r);

/// π·√r to 12 significant digits. Advisory only.
std::string decimal_pi_sqrt(const Rational& r);

/// "2/3*c1 - c4 <= 1/3".
std::string inequality_text(const Vector& a, const Rational& b);

std::string csv_field(const std::string& s);

/// Rows of a Markdown table with a header rule after the first row.
std::string markdown_table(const std::vector<std::vector<std::string>>& rows);

/// Columns padded to their widest cell, two spaces apart.
std::string text_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace symcut::cli

#endif  // SYMCUT_TOOLS_RENDER_HPP
