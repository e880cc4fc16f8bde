// matrix.hpp
//
// Dense matrices over Rational. Sizes here stay below a few hundred, so
// plain row-major storage and schoolbook algorithms are enough.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sphunit/rational.hpp"

namespace sphunit {



class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  bool is_symmetric() const;
  bool is_zero() const;
  std::string str() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(Matrix m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> nullspace(Matrix m);
// Throws DomainError("singular") when not invertible.
Matrix inverse(const Matrix& m);

struct Signature {
  int plus = 0, minus = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Signature of a symmetric matrix by congruence. Diagonal pivots first;
// if only off-diagonal mass remains, a 2x2 hyperbolic pivot gives (+1,-1).
Signature signature(Matrix s);

Rational dot(const Vec& a, const Vec& b);

}  // namespace sphunit
