#include "symcut/bounds.hpp"

#include <stdexcept>

namespace symcut {

namespace {

mpz_class floor_of(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

}  // namespace

Rational sum_of_squares_bound(long m, const Rational& a, const Rational& b, const Rational& s) {
  if (m <= 0 || a < 0 || b < a || s < m * a || s > m * b)
    throw std::invalid_argument("sum_of_squares_bound: need m > 0, 0 <= a <= b, ma <= s <= mb");
  if (a == b) return m * a * a;
  const Rational ka = floor_of((m * b - s) / (b - a));
  const Rational kb = floor_of((s - m * a) / (b - a));
  const Rational c = s - ka * a - kb * b;
  return ka * a * a + kb * b * b + c * c;
}

bool prefix_dominated(const Vector& lambda, const Vector& t) {
  if (lambda.size() != t.size()) throw std::invalid_argument("prefix_dominated: size mismatch");
  Rational sl = 0, st = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    sl += lambda[j];
    st += t[j];
    if (sl > st) return false;
  }
  return true;
}

Rational sum_of_squares(const Vector& v) { return dot(v, v); }

}  // namespace symcut
