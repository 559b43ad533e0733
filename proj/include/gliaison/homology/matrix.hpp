#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gliaison/groebner/module.hpp"

namespace gliaison {

// Column-major matrix of polynomials over one ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix from_columns(RingPtr ring, std::size_t rows, const std::vector<Column>& cols);
  static Matrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows,
                          std::size_t cols);
  static Matrix identity(RingPtr ring, std::size_t n);
  static Matrix scalar(RingPtr ring, std::size_t n, const Polynomial& p);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }
  Polynomial& at(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }

  Column column(std::size_t j) const;
  std::vector<Column> columns() const;
  std::vector<Polynomial> row(std::size_t i) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Column operator*(const Column& v) const;

  // [this | o] and [this ; o]
  Matrix hconcat(const Matrix& o) const;
  Matrix vconcat(const Matrix& o) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

Matrix reduce_mod(const Ring& ring, const Matrix& m);

// Block diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace gliaison
