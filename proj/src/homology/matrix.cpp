#include "gliaison/homology/matrix.hpp"

#include "gliaison/errors.hpp"

namespace gliaison {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (!ring_) throw UsageError("matrix without a ring");
  data_.assign(rows * cols, ring_->zero());
}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<Column>& cols) {
  Matrix m(std::move(ring), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw UsageError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (cols[j][i].ring() && cols[j][i].ring() != m.ring_)
        throw UsageError("matrix entry belongs to a different ring");
      if (!cols[j][i].is_zero()) m.at(i, j) = cols[j][i];
    }
  }
  return m;
}

Matrix Matrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows,
                         std::size_t cols) {
  Matrix m(std::move(ring), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].ring() && rows[i][j].ring() != m.ring_)
        throw UsageError("matrix entry belongs to a different ring");
      if (!rows[i][j].is_zero()) m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) { return scalar(ring, n, ring->one()); }

Matrix Matrix::scalar(RingPtr ring, std::size_t n, const Polynomial& p) {
  Matrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

Column Matrix::column(std::size_t j) const {
  if (j >= cols_) throw UsageError("column index out of range");
  return Column(data_.begin() + static_cast<std::ptrdiff_t>(j * rows_),
                data_.begin() + static_cast<std::ptrdiff_t>((j + 1) * rows_));
}

std::vector<Column> Matrix::columns() const {
  std::vector<Column> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

std::vector<Polynomial> Matrix::row(std::size_t i) const {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw UsageError("matrix shapes do not compose");
  if (ring_ != o.ring_) throw UsageError("matrices over different rings");
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t j = 0; j < o.cols_; ++j)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& b = o(k, j);
      if (b.is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Polynomial& a = (*this)(i, k);
        if (!a.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Column Matrix::operator*(const Column& v) const {
  if (v.size() != cols_) throw UsageError("vector length does not match matrix");
  Column out(rows_, ring_->zero());
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shapes differ");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shapes differ");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& p : r.data_) p = -p;
  return r;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw UsageError("row counts differ");
  Matrix r(ring_, rows_, cols_ + o.cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = (*this)(i, j);
  for (std::size_t j = 0; j < o.cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, cols_ + j) = o(i, j);
  return r;
}

Matrix Matrix::vconcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw UsageError("column counts differ");
  Matrix r(ring_, rows_ + o.rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i) r.at(rows_ + i, j) = o(i, j);
  }
  return r;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix r(ring_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = (*this)(i, idx[j]);
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(ring_, idx.size(), cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < idx.size(); ++i) r.at(i, j) = (*this)(idx[i], j);
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block out of range");
  Matrix r(ring_, nr, nc);
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < nr; ++i) r.at(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

bool Matrix::is_zero() const {
  for (auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", {" : "{";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    s += "}";
  }
  return s + "}";
}

Matrix reduce_mod(const Ring& ring, const Matrix& m) {
  if (!ring.has_modulus()) return m;
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = reduce_mod(ring, m(i, j));
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw UsageError("matrices over different rings");
  Matrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a(i, j);
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

}  // namespace gliaison
