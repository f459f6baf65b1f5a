#include "latmod/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace latmod {

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (size() != o.size()) throw DimensionMismatch("vector add: size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (size() != o.size()) throw DimensionMismatch("vector sub: size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

std::string Vector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += c_[i].str();
  }
  return out + ")";
}

Scalar inner_product(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("inner product: size mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i].conj();
  return acc;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw DimensionMismatch("matrix from_rows: not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != n_) throw DimensionMismatch("matrix apply: size mismatch");
  Vector out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Scalar acc;
    for (std::size_t c = 0; c < n_; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out.at(r, c) = at(c, r).conj();
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (n_ != o.n_) throw DimensionMismatch("matrix add: size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (n_ != o.n_) throw DimensionMismatch("matrix sub: size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& c : a_) c *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix mul: size mismatch");
  Matrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

Matrix Matrix::devectorize(const Vector& v) {
  std::size_t n = 0;
  while (n * n < v.size()) ++n;
  if (n * n != v.size()) throw DimensionMismatch("devectorize: length not a square");
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
  return m;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < n_; ++r) {
    out << (r ? "; " : "[");
    for (std::size_t c = 0; c < n_; ++c) out << (c ? " " : "") << at(r, c).str();
  }
  out << "]";
  return out.str();
}

void rref(std::vector<Vector>& rows) {
  if (rows.empty()) return;
  const std::size_t w = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].reciprocal();
    for (std::size_t c = col; c < w; ++c) rows[rank][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (std::size_t c = col; c < w; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t width) {
  std::vector<Vector> work = rows;
  for (const auto& r : work)
    if (r.size() != width) throw DimensionMismatch("nullspace: row width mismatch");
  rref(work);

  std::vector<std::size_t> pivot_col(work.size());
  std::vector<bool> is_pivot(width, false);
  for (std::size_t r = 0; r < work.size(); ++r) {
    std::size_t c = 0;
    while (c < width && work[r][c].is_zero()) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }

  std::vector<Vector> basis;
  for (std::size_t j = 0; j < width; ++j) {
    if (is_pivot[j]) continue;
    Vector v(width);
    v[j] = Scalar(1);
    for (std::size_t r = 0; r < work.size(); ++r) v[pivot_col[r]] = -work[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vector> rows;
  rows.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = Scalar(1);
    rows.push_back(std::move(v));
  }
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::span(std::size_t ambient, std::vector<Vector> generators) {
  for (const auto& g : generators)
    if (g.size() != ambient) throw DimensionMismatch("span: generator size mismatch");
  rref(generators);
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = std::move(generators);
  return s;
}

Subspace Subspace::line(const Vector& v) { return span(v.size(), {v}); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("reduce: size mismatch");
  Vector out = v;
  for (const auto& row : rows_) {
    std::size_t p = 0;
    while (p < ambient_ && row[p].is_zero()) ++p;
    if (out[p].is_zero()) continue;
    Scalar f = out[p];
    for (std::size_t c = p; c < ambient_; ++c) out[c] -= f * row[c];
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vector& r) { return contains(r); });
}

Subspace Subspace::orth_complement() const {
  std::vector<Vector> constraints;
  constraints.reserve(rows_.size());
  for (const auto& row : rows_) {
    Vector c(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) c[i] = row[i].conj();
    constraints.push_back(std::move(c));
  }
  return span(ambient_, nullspace(constraints, ambient_));
}

Matrix Subspace::projector() const {
  const std::size_t k = dim(), n = ambient_;
  if (k == 0) return Matrix(n);
  // Gram matrix of the basis under the sesquilinear form; positive definite,
  // hence invertible, because the form is anisotropic over Q and Q[i].
  std::vector<Vector> gram;
  gram.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(2 * k);  // [G | I] for Gauss-Jordan inversion
    for (std::size_t j = 0; j < k; ++j) row[j] = inner_product(rows_[j], rows_[i]);
    row[k + i] = Scalar(1);
    gram.push_back(std::move(row));
  }
  rref(gram);
  if (gram.size() != k) throw std::logic_error("projector: singular Gram matrix");

  // P = C G^{-1} C^H with C the n x k matrix whose columns are the basis.
  Matrix p(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Scalar acc;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          acc += rows_[i][r] * gram[i][k + j] * rows_[j][c].conj();
      p.at(r, c) = acc;
    }
  return p;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("sum: ambient mismatch");
  std::vector<Vector> rows = a.rows_;
  rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
  return Subspace::span(a.ambient_, std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("intersect: ambient mismatch");
  const std::size_t da = a.dim(), db = b.dim(), n = a.ambient_;
  if (da == 0 || db == 0) return Subspace::zero(n);
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  // Solve sum_i x_i a_i = sum_j y_j b_j; ambient coordinates give the rows.
  std::vector<Vector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row(da + db);
    for (std::size_t i = 0; i < da; ++i) row[i] = a.rows_[i][r];
    for (std::size_t j = 0; j < db; ++j) row[da + j] = -b.rows_[j][r];
    rows.push_back(std::move(row));
  }
  std::vector<Vector> gens;
  for (const auto& sol : nullspace(rows, da + db)) {
    Vector g(n);
    for (std::size_t i = 0; i < da; ++i)
      if (!sol[i].is_zero()) g += sol[i] * a.rows_[i];
    gens.push_back(std::move(g));
  }
  return Subspace::span(n, std::move(gens));
}

Subspace apply(const Matrix& m, const Subspace& s) {
  std::vector<Vector> images;
  images.reserve(s.dim());
  for (const auto& row : s.basis()) images.push_back(m.apply(row));
  return Subspace::span(s.ambient(), std::move(images));
}

int Subspace::cmp(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t r = 0; r < a.rows_.size(); ++r)
    for (std::size_t c = 0; c < a.ambient_; ++c)
      if (int k = Scalar::cmp(a.rows_[r][c], b.rows_[r][c]); k != 0) return k;
  return 0;
}

std::string Subspace::str() const {
  if (is_zero()) return "0";
  if (is_full()) return "H";
  std::string out = "span{";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += ", ";
    out += rows_[r].str();
  }
  return out + "}";
}

}  // namespace latmod
