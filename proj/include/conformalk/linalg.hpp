#pragma once

#include <map>
#include <optional>
#include <vector>

#include "conformalk/scalar.hpp"

namespace conformalk {

// Sparse row/column vector: index -> nonzero coefficient.
using SparseVec = std::map<int, GaussScalar>;

SparseVec sparse_sub_scaled(const SparseVec& a, const GaussScalar& c, const SparseVec& b);

// Incremental exact row-echelon reducer over Q(i). Rows are kept normalized
// (pivot coefficient 1) and indexed by pivot column; insertion order does not
// affect the final reduced row space. Deterministic: pivot = leading column.
class RowReducer {
 public:
  // Remainder of v after eliminating all current pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  // Insert a row; returns the new pivot column, or -1 if v reduced to zero.
  int insert(const SparseVec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  bool is_pivot(int col) const { return rows_.count(col) != 0; }

  // Back-substitute so every pivot column occurs in exactly one row (RREF).
  void normalize();

  // Kernel of the row space seen as a matrix with ncols columns. Requires
  // normalize(). One basis vector per free column, unit at that column;
  // canonical (RREF) basis, ordered by free column index.
  std::vector<SparseVec> nullspace(int ncols) const;

 private:
  std::map<int, SparseVec> rows_;
};

// Small dense exact matrix.
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}
  static Matrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  GaussScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const GaussScalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussScalar& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  std::vector<GaussScalar> apply(const std::vector<GaussScalar>& v) const;
  Matrix commutator(const Matrix& o) const;  // [this, o]

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;

 private:
  int r_, c_;
  std::vector<GaussScalar> a_;
};

// Exact solve A x = b; nullopt if inconsistent. If underdetermined, free
// variables are set to zero (RREF particular solution).
std::optional<std::vector<GaussScalar>> solve(const Matrix& A, const std::vector<GaussScalar>& b);

}  // namespace conformalk
