#pragma once

#include "legrep/field.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace legrep {

// Dense matrix over a Field. The field object must outlive every matrix
// built over it; matrices hold a raw pointer.
class Mat {
public:
  Mat() = default;
  Mat(const Field& F, int rows, int cols)
      : F_(&F), r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}

  static Mat identity(const Field& F, int n);
  static Mat scalar(const Field& F, int n, int v);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Field& field() const { return *F_; }

  int at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  int& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const std::vector<int>& data() const { return a_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat neg() const;
  Mat scaled(int v) const;
  Mat transpose() const;
  Mat pow(long e) const; // negative e inverts first (throws if singular)

  bool is_zero() const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  // Deterministic total order: dims, then row-major entry codes.
  bool operator<(const Mat& o) const;

  std::optional<Mat> inverse() const;
  int rank() const;

private:
  const Field* F_ = nullptr;
  int r_ = 0, c_ = 0;
  std::vector<int> a_;
};

struct Rref {
  Mat mat;
  std::vector<int> pivots;
  int rank = 0;
};

Rref rref(Mat a);

// One solution of A x = b with free variables set to 0, if consistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
// Column-vector basis of ker A, ordered by free column index.
std::vector<Mat> kernel_basis(const Mat& a);

// Odometer step through all matrices of fixed shape in lexicographic entry
// order; returns false after wrapping back to zero.
bool advance_matrix(Mat& m);

// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
mpz_class gl_order(int n, long q);

// Applies fn to every invertible n x n matrix, in lexicographic order.
template <class Fn> void for_each_gl(const Field& F, int n, Fn&& fn) {
  Mat m(F, n, n);
  do {
    if (m.rank() == n) fn(m);
  } while (advance_matrix(m));
}

// n^2 x n^2 matrix of the linear operator X -> op(X) on n x n matrices,
// with vec(X) laid out row-major.
template <class Fn> Mat operator_matrix(const Field& F, int n, Fn&& op) {
  Mat r(F, n * n, n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Mat e(F, n, n);
      e.at(u, v) = 1;
      Mat img = op(e);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i * n + j, u * n + v) = img.at(i, j);
    }
  return r;
}

Mat vec_of(const Mat& m);   // n x n -> n^2 x 1, row-major
Mat mat_of(const Field& F, int n, const Mat& v);

} // namespace legrep
