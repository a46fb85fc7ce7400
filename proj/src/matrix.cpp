#include "legrep/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace legrep {

Mat Mat::identity(const Field& F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::scalar(const Field& F, int n, int v) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = v;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  Mat m(*F_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_->add(a_[i], o.a_[i]);
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  Mat m(*F_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_->sub(a_[i], o.a_[i]);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(c_ == o.r_);
  Mat m(*F_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      int v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.c_; ++j)
        m.at(i, j) = F_->add(m.at(i, j), F_->mul(v, o.at(k, j)));
    }
  return m;
}

Mat Mat::neg() const {
  Mat m(*F_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_->neg(a_[i]);
  return m;
}

Mat Mat::scaled(int v) const {
  Mat m(*F_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = F_->mul(a_[i], v);
  return m;
}

Mat Mat::transpose() const {
  Mat m(*F_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::pow(long e) const {
  assert(r_ == c_);
  Mat base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("negative power of a singular matrix");
    base = *inv;
    e = -e;
  }
  Mat r = identity(*F_, r_);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Mat::is_zero() const {
  for (int v : a_)
    if (v) return false;
  return true;
}

bool Mat::operator<(const Mat& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  if (c_ != o.c_) return c_ < o.c_;
  return a_ < o.a_;
}

Rref rref(Mat a) {
  const Field& F = a.field();
  Rref out;
  int rows = a.rows(), cols = a.cols();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (a.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
    int s = F.inv(a.at(row, col));
    for (int j = 0; j < cols; ++j) a.at(row, j) = F.mul(a.at(row, j), s);
    for (int i = 0; i < rows; ++i) {
      if (i == row || !a.at(i, col)) continue;
      int f = a.at(i, col);
      for (int j = 0; j < cols; ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.mat = std::move(a);
  return out;
}

int Mat::rank() const { return rref(*this).rank; }

std::optional<Mat> Mat::inverse() const {
  assert(r_ == c_);
  Mat aug(*F_, r_, 2 * r_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < r_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, r_ + i) = 1;
  }
  // [A|I] always has full row rank; A is invertible iff all pivots stay in
  // the left block.
  Rref rr = rref(aug);
  if (r_ > 0 && (rr.rank < r_ || rr.pivots[r_ - 1] != r_ - 1)) return std::nullopt;
  Mat inv(*F_, r_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) inv.at(i, j) = rr.mat.at(i, r_ + j);
  return inv;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows() && b.cols() == 1);
  const Field& F = a.field();
  Mat aug(F, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b.at(i, 0);
  }
  Rref rr = rref(aug);
  for (int i : rr.pivots)
    if (i == a.cols()) return std::nullopt; // pivot in the constant column
  Mat x(F, a.cols(), 1);
  for (size_t k = 0; k < rr.pivots.size(); ++k)
    x.at(rr.pivots[k], 0) = rr.mat.at(int(k), a.cols());
  return x;
}

std::vector<Mat> kernel_basis(const Mat& a) {
  const Field& F = a.field();
  Rref rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(F, a.cols(), 1);
    v.at(free, 0) = 1;
    for (size_t k = 0; k < rr.pivots.size(); ++k)
      v.at(rr.pivots[k], 0) = F.neg(rr.mat.at(int(k), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool advance_matrix(Mat& m) {
  const Field& F = m.field();
  for (int i = m.rows() - 1; i >= 0; --i)
    for (int j = m.cols() - 1; j >= 0; --j) {
      int idx = m.at(i, j) + 1;
      if (idx < F.q()) {
        m.at(i, j) = idx;
        return true;
      }
      m.at(i, j) = 0;
    }
  return false;
}

mpz_class gl_order(int n, long q) {
  mpz_class qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  mpz_class r = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

Mat vec_of(const Mat& m) {
  Mat v(m.field(), m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}

Mat mat_of(const Field& F, int n, const Mat& v) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v.at(i * n + j, 0);
  return m;
}

} // namespace legrep
