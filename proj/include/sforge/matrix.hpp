#pragma once

#include <vector>

#include "sforge/field.hpp"

namespace sforge {

// Dense matrix over a Field. Row-vector convention throughout the engine:
// module elements are rows, maps act on the right, so composing f then g
// multiplies as F * G. Zero-dimensional matrices are legal everywhere.
struct Mat {
  int r = 0, c = 0;
  std::vector<Scalar> d;

  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), d((std::size_t)rows * cols) {}

  Scalar& at(int i, int j) { return d[(std::size_t)i * c + j]; }
  const Scalar& at(int i, int j) const { return d[(std::size_t)i * c + j]; }

  std::vector<Scalar> row(int i) const {
    return std::vector<Scalar>(d.begin() + (std::size_t)i * c,
                               d.begin() + (std::size_t)(i + 1) * c);
  }
  void set_row(int i, const std::vector<Scalar>& v) {
    for (int j = 0; j < c; ++j) at(i, j) = v[j];
  }
};

Mat mat_identity(const Field& F, int n);
Mat add(const Field& F, const Mat& A, const Mat& B);
Mat sub(const Field& F, const Mat& A, const Mat& B);
Mat neg(const Field& F, const Mat& A);
Mat smul(const Field& F, const Scalar& s, const Mat& A);
Mat mul(const Field& F, const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
Mat hstack(const Mat& A, const Mat& B);
Mat vstack(const Mat& A, const Mat& B);
bool equal(const Mat& A, const Mat& B);
bool is_zero(const Field& F, const Mat& A);
bool is_identity(const Field& F, const Mat& A);

// In-place reduced row echelon form; returns pivot column indices in order.
std::vector<int> rref(const Field& F, Mat& A);
int rank(const Field& F, Mat A);

// Rows form the canonical basis (from RREF free columns) of {v : v A = 0}.
Mat left_kernel(const Field& F, const Mat& A);

// Solve X A = B. False if some row of B is outside the row space of A.
// When solvable the X returned is the canonical one built on A's pivot rows.
bool solve_left(const Field& F, const Mat& A, const Mat& B, Mat& X);

bool inverse(const Field& F, const Mat& A, Mat& Inv);

// Incremental row echelon with expression tracking: each stored echelon row
// remembers its combination over the rows fed in. Feeding order is part of
// the result, so callers get determinism for free.
class Echelon {
 public:
  explicit Echelon(const Field& F, int width) : F_(F), width_(width) {}

  // Returns true if v enlarged the span. combo, when given, receives the
  // expression of the reduced residual (new basis row) or of v itself over
  // previously added rows (when v was already in the span).
  bool add_row(const std::vector<Scalar>& v, std::vector<Scalar>* combo = nullptr);
  bool contains(const std::vector<Scalar>& v, std::vector<Scalar>* combo = nullptr) const;
  int rank() const { return (int)rows_.size(); }
  int width() const { return width_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  int added() const { return added_; }
  // Rows sorted by pivot column: the RREF of the span, so it only depends on
  // the subspace, not on the feed order.
  Mat basis() const;

 private:
  bool reduce(std::vector<Scalar>& v, std::vector<Scalar>* expr) const;

  Field F_;
  int width_;
  int added_ = 0;
  std::vector<std::vector<Scalar>> rows_;     // echelon rows, pivot = 1
  std::vector<std::vector<Scalar>> exprs_;    // row i over the added rows
  std::vector<int> pivots_;
};

}  // namespace sforge
