#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indepforge/scalar.hpp"

namespace indepforge {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec zero_vec(const Field& F, size_t n);

/// Dense matrix over an exact field, row-major.
class Mat {
 public:
  Mat(const Field& F, size_t rows, size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, F.zero()) {}

  static Mat identity(const Field& F, size_t n);
  static Mat from_rows(const Field& F, size_t cols,
                       const std::vector<Vec>& rows);

  const Field& field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Vec row(size_t r) const;
  void set_row(size_t r, const Vec& v);
  Vec col(size_t c) const;

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const;

  /// Stack rows of a below rows of this (same column count).
  Mat vstack(const Mat& below) const;
  /// Concatenate columns of right after columns of this (same row count).
  Mat hstack(const Mat& right) const;

 private:
  Field F_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Mat reduced;
  std::vector<size_t> pivot_cols;  // ascending
  size_t rank;
};

/// Reduced row echelon form with deterministic pivoting: sweep columns left
/// to right, take the topmost unused row with a nonzero entry.
RrefResult rref(Mat m);

size_t rank(const Mat& m);

/// Basis of the right kernel {x : M x = 0}, one vector per row, produced in
/// ascending free-column order (deterministic canonical form).
Mat kernel_basis(const Mat& m);

/// First echelon solution of M x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve_particular(const Mat& m, const Vec& b);

/// Linear subspace of k^n held as a canonical RREF row basis. Two equal
/// subspaces compare equal as matrices.
class Subspace {
 public:
  Subspace(const Field& F, size_t ambient)
      : F_(F), ambient_(ambient), rows_(F, 0, ambient) {}

  static Subspace span(const Field& F, size_t ambient,
                       const std::vector<Vec>& vectors);
  static Subspace from_kernel(const Mat& m);  // right kernel of m
  static Subspace full(const Field& F, size_t ambient);

  const Field& field() const { return F_; }
  size_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.rows(); }
  const Mat& basis() const { return rows_; }
  Vec basis_vector(size_t i) const { return rows_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  /// Canonical coset representative: v minus its projection on the pivot
  /// coordinates. reduce(v) == 0 iff v lies in the subspace.
  Vec reduce(Vec v) const;

  /// Constraint matrix C with: v in subspace iff C v = 0.
  Mat constraints() const;

 private:
  Field F_;
  size_t ambient_;
  Mat rows_;  // RREF basis, no zero rows
};

/// Coordinates for k^n / S: the non-pivot coordinates of S form a canonical
/// complement; project/lift move between ambient and quotient coordinates.
class QuotientMap {
 public:
  explicit QuotientMap(Subspace s);

  size_t ambient_dim() const { return sub_.ambient(); }
  size_t quotient_dim() const { return kept_.size(); }
  const Subspace& subspace() const { return sub_; }
  const std::vector<size_t>& kept_coords() const { return kept_; }

  Vec project(const Vec& v) const;  // ambient -> quotient coordinates
  Vec lift(const Vec& q) const;     // canonical section

  /// Matrix of the induced map on the quotient for an ambient endomorphism
  /// that preserves the subspace.
  Mat induced(const Mat& ambient_map) const;

 private:
  Subspace sub_;
  std::vector<size_t> kept_;
};

}  // namespace indepforge
