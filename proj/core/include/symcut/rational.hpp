#ifndef SYMCUT_RATIONAL_HPP
#define SYMCUT_RATIONAL_HPP

// Exact rational scalars, vectors and dense matrices.
//
// Everything in symcut is computed over Q. Scalars are GMP rationals and are
// always kept in canonical form (gcd(p, q) = 1, q > 0).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcut {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// p/q in canonical form. Throws std::invalid_argument when q == 0.
Rational frac(long p, long q = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

/// Value rendered as "(a, b, c)".
std::string to_string(const Vector& v);

Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t k);
Rational dot(const Vector& a, const Vector& b);
Rational sum(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Matrix transpose() const;
  bool symmetric() const;

  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Rational& s) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// x^T M y.
Rational bilinear(const Vector& x, const Matrix& m, const Vector& y);

/// Solves A x = b by Gaussian elimination; empty when A is singular.
std::optional<Vector> solve(Matrix a, Vector b);

std::optional<Matrix> inverse(const Matrix& a);

Rational determinant(Matrix a);

/// Rank of the row space.
std::size_t rank(Matrix a);

/// Positive definiteness by Sylvester's criterion (leading minors).
bool positive_definite(const Matrix& a);

std::string to_string(const Matrix& m);

}  // namespace symcut

#endif  // SYMCUT_RATIONAL_HPP
