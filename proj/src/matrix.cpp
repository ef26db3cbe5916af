#include "relcalc/matrix.hpp"

#include <sstream>

namespace relcalc {

Vec zero_vec(const FieldTag& tag, std::size_t n) {
  return Vec(n, Scalar::zero(tag));
}

Vec unit_vec(const FieldTag& tag, std::size_t n, std::size_t i) {
  Vec v = zero_vec(tag, n);
  v.at(i) = Scalar::one(tag);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void check_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
}

Vec add(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = c * x;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  check_len(a, b);
  if (a.empty()) throw DimensionError("dot of empty vectors needs a field");
  Scalar s = Scalar::zero(a[0].tag());
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Matrix::Matrix(FieldTag tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(tag)) {}

Matrix Matrix::identity(const FieldTag& tag, std::size_t n) {
  Matrix m(tag, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(tag);
  return m;
}

Matrix Matrix::from_rows(const FieldTag& tag, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m(tag, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].tag() == tag)) throw FieldMismatchError("row entry field mismatch");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = m.data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = m.data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix m(tag_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
    }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(tag_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix m = transpose();
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = m.at(r, c).conj();
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vec y = zero_vec(tag_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) y[r] = y[r] + at(r, c) * x[c];
  return y;
}

bool Matrix::operator==(const Matrix& o) const {
  return tag_ == o.tag_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "[") << at(r, c).str();
    out << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) out << "[]";
  return out.str();
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) { piv = i; break; }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = inv * a.at(r, j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

Matrix outer(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) throw DimensionError("outer product of empty vector");
  Matrix m(a[0].tag(), a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m.at(i, j) = a[i] * b[j];
  return m;
}

}  // namespace relcalc
