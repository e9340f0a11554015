#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "padiceq/padic.hpp"
#include "padiceq/rational.hpp"

namespace padiceq {

/// Fixed-length vector in Q^d, viewed inside Q_p^d.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;
  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator*(const Rational& s, const Vector& v);

  friend bool operator==(const Vector&, const Vector&) = default;
  /// Lexicographic order on entries.
  friend bool operator<(const Vector& a, const Vector& b);

  std::string to_string() const;

 private:
  std::vector<Rational> entries_;
};

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector apply(const Vector& x) const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// <x, y> = sum x_i y_i. Bilinear and symmetric; no conjugation.
Rational inner_product(const Vector& x, const Vector& y);

/// max_i |x_i|_p.
PadicAbs sup_norm(const Vector& x, const Prime& p);

/// The d x d matrix of x -> sum_j <x, t_j> t_j, i.e. sum_j t_j t_j^T.
Matrix frame_operator(std::span<const Vector> vectors);

/// n x n matrix of pairings <t_j, t_k>.
Matrix gram_matrix(std::span<const Vector> vectors);

Rational trace(const Matrix& m);

/// Tr(M^2) = sum_{i,j} M_ij M_ji, computed without forming M^2.
Rational trace_of_square(const Matrix& m);

/// Columns t_1..t_n stacked as a d x n matrix.
Matrix as_columns(std::span<const Vector> vectors);

}  // namespace padiceq
