#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latmod/scalar.hpp"

namespace latmod {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : c_(n) {}
  Vector(std::initializer_list<Scalar> xs) : c_(xs) {}
  explicit Vector(std::vector<Scalar> xs) : c_(std::move(xs)) {}

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

// <v, w> = sum_i v[i] * conj(w[i]); linear in v, conjugate-linear in w.
// Positive definite over both supported fields.
Scalar inner_product(const Vector& v, const Vector& w);

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t size() const { return n_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  bool is_zero() const;

  Vector apply(const Vector& v) const;
  Matrix adjoint() const;  // conjugate transpose

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Row-major flattening to a vector of length n^2 and back; this is the
  // coordinate system in which operator spaces are canonicalized.
  Vector vectorize() const { return Vector(a_); }
  static Matrix devectorize(const Vector& v);

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form over the scalar field: pivots 1, pivot
// columns cleared elsewhere, rows ordered by pivot column, zero rows dropped.
// The result is the unique RREF basis of the input row space.
void rref(std::vector<Vector>& rows);

// Basis of {x : R x = 0} for the given constraint rows, each of length
// `width`. Deterministic: one basis vector per free column, ascending.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t width);

// A subspace of Q^n or Q[i]^n, held as its unique RREF basis. Equality of
// subspaces is entrywise equality of these bases; cmp() is a total order used
// for canonical element indexing (it refines dimension).
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::vector<Vector> generators);
  static Subspace line(const Vector& v);  // span of one vector

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }

  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  // Canonical residue of v modulo this subspace (zero iff v is a member).
  // Used as the concrete form of quotient-space coordinates.
  Vector reduce(const Vector& v) const;

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  Subspace orth_complement() const;
  Matrix projector() const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend Subspace apply(const Matrix& m, const Subspace& s);

  static int cmp(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) { return cmp(a, b) < 0; }

  std::string str() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;  // RREF, invariant enforced by all constructors
};

}  // namespace latmod
