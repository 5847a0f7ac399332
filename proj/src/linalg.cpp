#include "indepforge/linalg.hpp"

#include <algorithm>

namespace indepforge {

Vec zero_vec(const Field& F, size_t n) { return Vec(n, F.zero()); }

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Mat Mat::identity(const Field& F, size_t n) {
  Mat m(F, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Mat Mat::from_rows(const Field& F, size_t cols, const std::vector<Vec>& rows) {
  Mat m(F, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec Mat::row(size_t r) const {
  return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void Mat::set_row(size_t r, const Vec& v) {
  if (v.size() != cols_)
    fail(ErrorCode::ValidationError, "row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

Vec Mat::col(size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_)
    fail(ErrorCode::ValidationError, "matrix product shape mismatch");
  Mat r(F_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& s = at(i, k);
      if (s.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += s * o.at(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_)
    fail(ErrorCode::ValidationError, "matrix apply shape mismatch");
  Vec r = zero_vec(F_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * x[j];
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(F_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Mat Mat::vstack(const Mat& below) const {
  if (cols_ != below.cols_)
    fail(ErrorCode::ValidationError, "vstack column mismatch");
  Mat r(F_, rows_ + below.rows_, cols_);
  for (size_t i = 0; i < rows_; ++i) r.set_row(i, row(i));
  for (size_t i = 0; i < below.rows_; ++i) r.set_row(rows_ + i, below.row(i));
  return r;
}

Mat Mat::hstack(const Mat& right) const {
  if (rows_ != right.rows_)
    fail(ErrorCode::ValidationError, "hstack row mismatch");
  Mat r(F_, rows_, cols_ + right.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < right.cols_; ++j)
      r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

RrefResult rref(Mat m) {
  const Field& F = m.field();
  std::vector<size_t> pivots;
  size_t pivot_row = 0;
  for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    size_t sel = m.rows();
    for (size_t r = pivot_row; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pivot_row, j));
    Scalar inv = m.at(pivot_row, c).inv();
    for (size_t j = c; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c);
      for (size_t j = c; j < m.cols(); ++j)
        m.at(r, j) -= f * m.at(pivot_row, j);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  size_t rk = pivots.size();
  return RrefResult{std::move(m), std::move(pivots), rk};
}

size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  const Field& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zero_vec(F, m.cols());
    v[fc] = F.one();
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.reduced.at(i, fc);
    rows.push_back(std::move(v));
  }
  return Mat::from_rows(F, m.cols(), rows);
}

std::optional<Vec> solve_particular(const Mat& m, const Vec& b) {
  if (b.size() != m.rows())
    fail(ErrorCode::ValidationError, "solve shape mismatch");
  Mat aug = m.hstack(Mat::from_rows(m.field(), 1, {b}).transpose());
  RrefResult r = rref(aug);
  const Field& F = m.field();
  Vec x = zero_vec(F, m.cols());
  for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[r.pivot_cols[i]] = r.reduced.at(i, m.cols());
  }
  return x;
}

Subspace Subspace::span(const Field& F, size_t ambient,
                        const std::vector<Vec>& vectors) {
  RrefResult r = rref(Mat::from_rows(F, ambient, vectors));
  Subspace s(F, ambient);
  Mat basis(F, r.rank, ambient);
  for (size_t i = 0; i < r.rank; ++i) basis.set_row(i, r.reduced.row(i));
  s.rows_ = std::move(basis);
  return s;
}

Subspace Subspace::from_kernel(const Mat& m) {
  Mat k = kernel_basis(m);
  std::vector<Vec> rows;
  rows.reserve(k.rows());
  for (size_t i = 0; i < k.rows(); ++i) rows.push_back(k.row(i));
  return span(m.field(), m.cols(), rows);
}

Subspace Subspace::full(const Field& F, size_t ambient) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < ambient; ++i) {
    Vec v = zero_vec(F, ambient);
    v[i] = F.one();
    rows.push_back(std::move(v));
  }
  return span(F, ambient, rows);
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_)
    fail(ErrorCode::ValidationError, "reduce: ambient mismatch");
  for (size_t i = 0; i < rows_.rows(); ++i) {
    // pivot column of row i = first nonzero entry (value 1)
    size_t pc = 0;
    while (pc < ambient_ && rows_.at(i, pc).is_zero()) ++pc;
    if (pc == ambient_) continue;
    if (v[pc].is_zero()) continue;
    Scalar f = v[pc];
    for (size_t j = pc; j < ambient_; ++j) v[j] -= f * rows_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && rows_ == o.rows_;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    fail(ErrorCode::ValidationError, "subspace sum: ambient mismatch");
  std::vector<Vec> rows;
  for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
  for (size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_vector(i));
  return span(F_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    fail(ErrorCode::ValidationError, "subspace intersect: ambient mismatch");
  Mat c = constraints().vstack(o.constraints());
  return from_kernel(c);
}

Mat Subspace::constraints() const {
  // v in rowspace(B) iff v is orthogonal to the right kernel of B.
  return kernel_basis(rows_);
}

QuotientMap::QuotientMap(Subspace s) : sub_(std::move(s)) {
  std::vector<bool> is_pivot(sub_.ambient(), false);
  for (size_t i = 0; i < sub_.dim(); ++i) {
    size_t pc = 0;
    while (pc < sub_.ambient() && sub_.basis().at(i, pc).is_zero()) ++pc;
    is_pivot[pc] = true;
  }
  for (size_t c = 0; c < sub_.ambient(); ++c)
    if (!is_pivot[c]) kept_.push_back(c);
}

Vec QuotientMap::project(const Vec& v) const {
  Vec red = sub_.reduce(v);
  Vec q;
  q.reserve(kept_.size());
  for (size_t c : kept_) q.push_back(red[c]);
  return q;
}

Vec QuotientMap::lift(const Vec& q) const {
  if (q.size() != kept_.size())
    fail(ErrorCode::ValidationError, "lift: quotient dim mismatch");
  Vec v = zero_vec(sub_.field(), sub_.ambient());
  for (size_t i = 0; i < kept_.size(); ++i) v[kept_[i]] = q[i];
  return v;
}

Mat QuotientMap::induced(const Mat& ambient_map) const {
  Mat m(sub_.field(), quotient_dim(), quotient_dim());
  for (size_t j = 0; j < quotient_dim(); ++j) {
    Vec e = zero_vec(sub_.field(), quotient_dim());
    e[j] = sub_.field().one();
    Vec img = project(ambient_map.apply(lift(e)));
    for (size_t i = 0; i < quotient_dim(); ++i) m.at(i, j) = img[i];
  }
  return m;
}

}  // namespace indepforge
