#include "padiceq/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "padiceq/errors.hpp"

namespace padiceq {

namespace {

std::size_t common_dimension(std::span<const Vector> vectors) {
  if (vectors.empty()) throw DimensionError("need at least one vector");
  const std::size_t d = vectors.front().size();
  for (std::size_t j = 1; j < vectors.size(); ++j) {
    if (vectors[j].size() != d) {
      throw DimensionError("vector " + std::to_string(j) + " has length " + std::to_string(vectors[j].size()) +
                           ", expected " + std::to_string(d));
    }
  }
  return d;
}

}  // namespace

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Vector Vector::operator-() const {
  Vector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = -entries_[i];
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in addition");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool operator<(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? ", " : "") << entries_[i];
  os << ")";
  return os.str();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch in addition");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch in subtraction");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch in product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Rational inner_product(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("inner product of vectors with lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
  Rational acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

PadicAbs sup_norm(const Vector& x, const Prime& p) {
  PadicAbs best = PadicAbs::zero();
  for (const auto& e : x.entries()) best = max(best, abs_p(e, p));
  return best;
}

Matrix frame_operator(std::span<const Vector> vectors) {
  const std::size_t d = common_dimension(vectors);
  Matrix s(d, d);
  for (const auto& t : vectors) {
    for (std::size_t i = 0; i < d; ++i) {
      if (t[i].is_zero()) continue;
      for (std::size_t j = i; j < d; ++j) s(i, j) += t[i] * t[j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) s(i, j) = s(j, i);
  }
  return s;
}

Matrix gram_matrix(std::span<const Vector> vectors) {
  common_dimension(vectors);
  const std::size_t n = vectors.size();
  Matrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      g(j, k) = inner_product(vectors[j], vectors[k]);
      g(k, j) = g(j, k);
    }
  }
  return g;
}

Rational trace(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("trace of a non-square matrix");
  Rational acc;
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

Rational trace_of_square(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("trace of a non-square matrix");
  const std::size_t n = m.rows();
  Rational acc;
  if (m.is_symmetric()) {
    for (std::size_t i = 0; i < n; ++i) {
      acc += m(i, i) * m(i, i);
      for (std::size_t j = i + 1; j < n; ++j) acc += Rational(2) * m(i, j) * m(i, j);
    }
    return acc;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * m(j, i);
  }
  return acc;
}

Matrix as_columns(std::span<const Vector> vectors) {
  const std::size_t d = common_dimension(vectors);
  Matrix t(d, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) t(i, j) = vectors[j][i];
  }
  return t;
}

}  // namespace padiceq
