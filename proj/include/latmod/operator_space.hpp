#pragma once

#include <utility>
#include <vector>

#include "latmod/linalg.hpp"
#include "latmod/parallel.hpp"

namespace latmod {

// A linear space of n x n operators, canonicalized as the RREF basis of the
// row-major vectorizations. Identity of spaces is entrywise identity of that
// basis. The unital / product-closed flags are only ever set by code that
// has verified them; span() leaves them unset.
class OperatorSpace {
 public:
  OperatorSpace() = default;

  static OperatorSpace zero(std::size_t n);
  static OperatorSpace full(std::size_t n);
  static OperatorSpace span(std::size_t n, const std::vector<Matrix>& generators);

  std::size_t ambient() const { return n_; }       // matrix side length
  std::size_t dim() const { return basis_.size(); }  // linear dimension
  const std::vector<Matrix>& basis() const { return basis_; }

  bool contains(const Matrix& m) const;
  bool contains(const OperatorSpace& other) const;

  // {T* : T in this}; an involution on spaces.
  OperatorSpace adjoint_space() const;

  // [S x] = span{T x : T in S} and [S E] = span{T v : T in S, v in E}.
  Subspace apply_vector(const Vector& x) const;
  Subspace apply(const Subspace& e) const;

  bool unital() const { return unital_; }
  bool product_closed() const { return product_closed_; }
  // Compute-and-record verifications.
  bool verify_unital();
  bool verify_product_closed();

  friend OperatorSpace sum(const OperatorSpace& a, const OperatorSpace& b);
  friend OperatorSpace intersect(const OperatorSpace& a, const OperatorSpace& b);

  friend bool operator==(const OperatorSpace& a, const OperatorSpace& b) {
    return a.n_ == b.n_ && a.vec_ == b.vec_;
  }
  friend bool operator!=(const OperatorSpace& a, const OperatorSpace& b) {
    return !(a == b);
  }

  const Subspace& vectorized() const { return vec_; }

 private:
  static OperatorSpace from_vectorized(std::size_t n, Subspace vec);

  std::size_t n_ = 0;
  Subspace vec_;                // subspace of the n^2-dim coordinate space
  std::vector<Matrix> basis_;   // devectorized canonical rows of vec_
  bool unital_ = false;
  bool product_closed_ = false;
};

// Exact solution space of {T : T E_k is contained in W_k for every k}.
// Constraint rows are assembled per pair (a parallel kernel) and reduced
// once; the result does not depend on the execution mode.
OperatorSpace solve_mapping_constraints(
    std::size_t n, const std::vector<std::pair<Subspace, Subspace>>& pairs,
    Exec mode = par::default_mode());

}  // namespace latmod
