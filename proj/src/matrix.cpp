#include "sforge/matrix.hpp"

#include <algorithm>

namespace sforge {

namespace {

// v -= s * w
void axpy_sub(const Field& F, std::vector<Scalar>& v, const Scalar& s,
              const std::vector<Scalar>& w) {
  for (std::size_t j = 0; j < w.size(); ++j)
    v[j] = F.sub(v[j], F.mul(s, w[j]));
}

bool row_is_zero(const Field& F, const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!F.is_zero(x)) return false;
  return true;
}

// RREF restricted to the first limit columns (pivots only there); the tail
// columns ride along, which is how solve_left tracks its transform.
std::vector<int> rref_partial(const Field& F, Mat& A, int limit) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < limit && row < A.r; ++col) {
    int sel = -1;
    for (int i = row; i < A.r; ++i)
      if (!F.is_zero(A.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < A.c; ++j) std::swap(A.at(sel, j), A.at(row, j));
    Scalar piv_inv = F.inv(A.at(row, col));
    for (int j = 0; j < A.c; ++j) A.at(row, j) = F.mul(piv_inv, A.at(row, j));
    for (int i = 0; i < A.r; ++i) {
      if (i == row || F.is_zero(A.at(i, col))) continue;
      Scalar f = A.at(i, col);
      for (int j = 0; j < A.c; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Mat mat_identity(const Field& F, int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
  return I;
}

Mat add(const Field& F, const Mat& A, const Mat& B) {
  Mat C(A.r, A.c);
  for (std::size_t k = 0; k < A.d.size(); ++k) C.d[k] = F.add(A.d[k], B.d[k]);
  return C;
}

Mat sub(const Field& F, const Mat& A, const Mat& B) {
  Mat C(A.r, A.c);
  for (std::size_t k = 0; k < A.d.size(); ++k) C.d[k] = F.sub(A.d[k], B.d[k]);
  return C;
}

Mat neg(const Field& F, const Mat& A) {
  Mat C(A.r, A.c);
  for (std::size_t k = 0; k < A.d.size(); ++k) C.d[k] = F.neg(A.d[k]);
  return C;
}

Mat smul(const Field& F, const Scalar& s, const Mat& A) {
  Mat C(A.r, A.c);
  for (std::size_t k = 0; k < A.d.size(); ++k) C.d[k] = F.mul(s, A.d[k]);
  return C;
}

Mat mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.c != B.r) fail("Internal", "matrix dimension mismatch in mul");
  Mat C(A.r, B.c);
  for (int i = 0; i < A.r; ++i)
    for (int k = 0; k < A.c; ++k) {
      const Scalar& a = A.at(i, k);
      if (F.is_zero(a)) continue;
      for (int j = 0; j < B.c; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
    }
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.c, A.r);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat hstack(const Mat& A, const Mat& B) {
  if (A.r != B.r) fail("Internal", "hstack row mismatch");
  Mat C(A.r, A.c + B.c);
  for (int i = 0; i < A.r; ++i) {
    for (int j = 0; j < A.c; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.c; ++j) C.at(i, A.c + j) = B.at(i, j);
  }
  return C;
}

Mat vstack(const Mat& A, const Mat& B) {
  if (A.c != B.c) fail("Internal", "vstack column mismatch");
  Mat C(A.r + B.r, A.c);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.r; ++i)
    for (int j = 0; j < B.c; ++j) C.at(A.r + i, j) = B.at(i, j);
  return C;
}

bool equal(const Mat& A, const Mat& B) {
  return A.r == B.r && A.c == B.c && A.d == B.d;
}

bool is_zero(const Field& F, const Mat& A) {
  for (const auto& x : A.d)
    if (!F.is_zero(x)) return false;
  return true;
}

bool is_identity(const Field& F, const Mat& A) {
  if (A.r != A.c) return false;
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) {
      const Scalar& x = A.at(i, j);
      if (i == j ? !F.is_one(x) : !F.is_zero(x)) return false;
    }
  return true;
}

std::vector<int> rref(const Field& F, Mat& A) { return rref_partial(F, A, A.c); }

int rank(const Field& F, Mat A) { return (int)rref(F, A).size(); }

Mat left_kernel(const Field& F, const Mat& A) {
  // v A = 0  <=>  A^T v^T = 0; read the column kernel off RREF(A^T).
  Mat T = transpose(A);
  std::vector<int> piv = rref(F, T);
  std::vector<bool> is_piv(A.r, false);
  for (int p : piv) is_piv[p] = true;
  Mat K((int)(A.r - piv.size()), A.r);
  int out = 0;
  for (int j = 0; j < A.r; ++j) {
    if (is_piv[j]) continue;
    K.at(out, j) = F.one();
    for (std::size_t k = 0; k < piv.size(); ++k)
      K.at(out, piv[k]) = F.neg(T.at((int)k, j));
    ++out;
  }
  return K;
}

bool solve_left(const Field& F, const Mat& A, const Mat& B, Mat& X) {
  if (A.c != B.c) fail("Internal", "solve_left column mismatch");
  Mat M = hstack(A, mat_identity(F, A.r));
  std::vector<int> piv = rref_partial(F, M, A.c);
  X = Mat(B.r, A.r);
  for (int i = 0; i < B.r; ++i) {
    std::vector<Scalar> res = B.row(i);
    std::vector<Scalar> xr(A.r, F.zero());
    for (std::size_t k = 0; k < piv.size(); ++k) {
      Scalar coeff = res[piv[k]];
      if (F.is_zero(coeff)) continue;
      for (int j = 0; j < A.c; ++j)
        res[j] = F.sub(res[j], F.mul(coeff, M.at((int)k, j)));
      for (int j = 0; j < A.r; ++j)
        xr[j] = F.add(xr[j], F.mul(coeff, M.at((int)k, A.c + j)));
    }
    if (!row_is_zero(F, res)) return false;
    X.set_row(i, xr);
  }
  return true;
}

bool inverse(const Field& F, const Mat& A, Mat& Inv) {
  if (A.r != A.c) return false;
  if (!solve_left(F, A, mat_identity(F, A.r), Inv)) return false;
  return is_identity(F, mul(F, Inv, A));
}

bool Echelon::reduce(std::vector<Scalar>& v, std::vector<Scalar>* expr) const {
  if (expr) expr->assign(added_ + 1, F_.zero());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar coeff = v[pivots_[k]];
    if (F_.is_zero(coeff)) continue;
    axpy_sub(F_, v, coeff, rows_[k]);
    if (expr)
      for (std::size_t j = 0; j < exprs_[k].size(); ++j)
        (*expr)[j] = F_.add((*expr)[j], F_.mul(coeff, exprs_[k][j]));
  }
  return row_is_zero(F_, v);
}

bool Echelon::add_row(const std::vector<Scalar>& v, std::vector<Scalar>* combo) {
  std::vector<Scalar> r = v;
  std::vector<Scalar> expr;
  bool dead = reduce(r, &expr);
  int m = added_++;
  if (dead) {
    if (combo) combo->assign(expr.begin(), expr.begin() + m);
    return false;
  }
  int p = 0;
  while (F_.is_zero(r[p])) ++p;
  Scalar piv_inv = F_.inv(r[p]);
  for (auto& x : r) x = F_.mul(piv_inv, x);
  // expr holds the eliminated part: residual = v - expr . inputs
  for (auto& x : expr) x = F_.neg(F_.mul(piv_inv, x));
  expr.resize(m + 1, F_.zero());
  expr[m] = piv_inv;
  // keep stored rows fully reduced against the new pivot
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = rows_[k][p];
    if (F_.is_zero(c)) continue;
    axpy_sub(F_, rows_[k], c, r);
    exprs_[k].resize(m + 1, F_.zero());
    for (int j = 0; j <= m; ++j)
      exprs_[k][j] = F_.sub(exprs_[k][j], F_.mul(c, expr[j]));
  }
  rows_.push_back(r);
  exprs_.push_back(expr);
  pivots_.push_back(p);
  if (combo) *combo = expr;
  return true;
}

bool Echelon::contains(const std::vector<Scalar>& v, std::vector<Scalar>* combo) const {
  std::vector<Scalar> r = v;
  std::vector<Scalar> expr;
  bool in = reduce(r, combo ? &expr : nullptr);
  if (in && combo) combo->assign(expr.begin(), expr.begin() + added_);
  return in;
}

Mat Echelon::basis() const {
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivots_[a] < pivots_[b]; });
  Mat B((int)rows_.size(), width_);
  for (std::size_t i = 0; i < rows_.size(); ++i) B.set_row((int)i, rows_[order[i]]);
  return B;
}

}  // namespace sforge
