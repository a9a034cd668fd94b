#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace symcut::cli {

std::string exact_pi_sqrt(const Rational& r) { return "π*sqrt(" + to_string(r) + ")"; }

std::string pretty_pi_sqrt(const Rational& r) {
  if (r == 0) return "0";
  // √(p/q) = √(pq)/q = a√b/q with b squarefree.
  mpz_class rest = r.get_num() * r.get_den();
  mpz_class a = 1;
  for (mpz_class k = 2; k * k <= rest; ++k)
    while (rest % (k * k) == 0) {
      rest /= k * k;
      a *= k;
    }
  mpq_class coef(a, r.get_den());
  coef.canonicalize();
  const mpz_class& num = coef.get_num();
  const mpz_class& den = coef.get_den();
  const std::string root = rest == 1 ? "" : "√" + rest.get_str();
  std::string head = num == 1 && !root.empty() ? root : num.get_str() + root;
  if (head == "1") head.clear();
  if (den == 1) return head + "π";
  if (root.empty()) return head + "π/" + den.get_str();
  return "(" + head + "/" + den.get_str() + ")π";
}

std::string decimal_pi_sqrt(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << std::numbers::pi * std::sqrt(r.get_d());
  return os.str();
}

std::string inequality_text(const Vector& a, const Rational& b) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Rational mag = abs(a[i]);
    if (out.empty()) out += a[i] < 0 ? "-" : "";
    else out += a[i] < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += "c" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " <= " + to_string(b);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string markdown_table(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += "|";
    for (const auto& cell : rows[r]) out += " " + cell + " |";
    out += "\n";
    if (r == 0) {
      out += "|";
      for (std::size_t c = 0; c < rows[0].size(); ++c) out += "---|";
      out += "\n";
    }
  }
  return out;
}

namespace {

// Display width in code points; every symbol we print is one column wide.
std::size_t width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; });
}

}  // namespace

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (w.size() <= c) w.push_back(0);
      w[c] = std::max(w[c], width(row[c]));
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(w[c] - width(row[c]) + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace symcut::cli
