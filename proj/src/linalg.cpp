#include "conformalk/linalg.hpp"

namespace conformalk {

SparseVec sparse_sub_scaled(const SparseVec& a, const GaussScalar& c, const SparseVec& b) {
  // a - c*b
  SparseVec out = a;
  for (auto& [j, x] : b) {
    auto it = out.find(j);
    if (it == out.end()) {
      GaussScalar v = -(c * x);
      if (!v.is_zero()) out.emplace(j, std::move(v));
    } else {
      it->second -= c * x;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

SparseVec RowReducer::reduce(const SparseVec& v) const {
  SparseVec r = v;
  auto it = r.begin();
  while (it != r.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    r = sparse_sub_scaled(r, it->second, row->second);
    // All columns < col were already clean and stay clean (row has pivot col).
    it = r.lower_bound(col);
  }
  return r;
}

int RowReducer::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return -1;
  int piv = r.begin()->first;
  GaussScalar lead = r.begin()->second;
  if (!(lead == GaussScalar(1))) {
    for (auto& [j, x] : r) x /= lead;
  }
  rows_.emplace(piv, std::move(r));
  return piv;
}

void RowReducer::normalize() {
  // Eliminate each pivot column from all other rows, working right to left.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    int piv = it->first;
    for (auto& [p2, row] : rows_) {
      if (p2 == piv) continue;
      auto hit = row.find(piv);
      if (hit == row.end()) continue;
      row = sparse_sub_scaled(row, hit->second, it->second);
    }
  }
}

std::vector<SparseVec> RowReducer::nullspace(int ncols) const {
  std::vector<SparseVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (rows_.count(f)) continue;
    SparseVec v;
    v.emplace(f, GaussScalar(1));
    for (auto& [piv, row] : rows_) {
      auto it = row.find(f);
      if (it != row.end()) v.emplace(piv, -it->second);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussScalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const GaussScalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const GaussScalar& y = b.at(k, j);
        if (y.is_zero()) continue;
        m.at(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator*(const GaussScalar& c, const Matrix& a) {
  Matrix m(a.r_, a.c_);
  for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = c * a.a_[k];
  return m;
}

std::vector<GaussScalar> Matrix::apply(const std::vector<GaussScalar>& v) const {
  std::vector<GaussScalar> out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

Matrix Matrix::commutator(const Matrix& o) const { return (*this) * o - o * (*this); }

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < c_ && row < r_; ++col) {
    int sel = -1;
    for (int i = row; i < r_; ++i)
      if (!at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < c_; ++j) std::swap(at(sel, j), at(row, j));
    GaussScalar inv = at(row, col).inverse();
    for (int j = col; j < c_; ++j) at(row, j) *= inv;
    for (int i = 0; i < r_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      GaussScalar f = at(i, col);
      for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix tmp = *this;
  return static_cast<int>(tmp.rref().size());
}

std::optional<std::vector<GaussScalar>> solve(const Matrix& A, const std::vector<GaussScalar>& b) {
  Matrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> piv = aug.rref();
  for (int p : piv)
    if (p == A.cols()) return std::nullopt;  // inconsistent
  std::vector<GaussScalar> x(A.cols());
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(static_cast<int>(k), A.cols());
  return x;
}

}  // namespace conformalk
