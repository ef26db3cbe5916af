#ifndef RELCALC_MATRIX_HPP
#define RELCALC_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "relcalc/scalar.hpp"

namespace relcalc {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldTag& tag, std::size_t n);
Vec unit_vec(const FieldTag& tag, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
// Plain bilinear dot product (no conjugation); used for annihilators.
Scalar dot(const Vec& a, const Vec& b);
Vec concat(const Vec& a, const Vec& b);

// Dense row-major matrix over one exact field.
class Matrix {
 public:
  Matrix(FieldTag tag, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldTag& tag, std::size_t n);
  static Matrix from_rows(const FieldTag& tag, std::size_t cols,
                          const std::vector<Vec>& rows);

  const FieldTag& tag() const { return tag_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix conj_transpose() const;
  Vec apply(const Vec& x) const;  // m * x

  bool operator==(const Matrix& o) const;
  std::string str() const;

 private:
  FieldTag tag_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix canonical;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column indices
};

// Unique reduced row echelon form (Gauss-Jordan, exact arithmetic).
RrefResult rref(const Matrix& m);

// Outer product a * b^T (no conjugation; callers conjugate explicitly).
Matrix outer(const Vec& a, const Vec& b);

}  // namespace relcalc

#endif
