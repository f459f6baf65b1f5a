#include "latmod/operator_space.hpp"

namespace latmod {

OperatorSpace OperatorSpace::from_vectorized(std::size_t n, Subspace vec) {
  OperatorSpace s;
  s.n_ = n;
  s.basis_.reserve(vec.dim());
  for (const auto& row : vec.basis()) s.basis_.push_back(Matrix::devectorize(row));
  s.vec_ = std::move(vec);
  return s;
}

OperatorSpace OperatorSpace::zero(std::size_t n) {
  return from_vectorized(n, Subspace::zero(n * n));
}

OperatorSpace OperatorSpace::full(std::size_t n) {
  auto s = from_vectorized(n, Subspace::full(n * n));
  s.unital_ = true;
  s.product_closed_ = true;
  return s;
}

OperatorSpace OperatorSpace::span(std::size_t n, const std::vector<Matrix>& generators) {
  std::vector<Vector> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != n) throw DimensionMismatch("operator span: size mismatch");
    rows.push_back(g.vectorize());
  }
  return from_vectorized(n, Subspace::span(n * n, std::move(rows)));
}

bool OperatorSpace::contains(const Matrix& m) const {
  if (m.size() != n_) throw DimensionMismatch("operator membership: size mismatch");
  return vec_.contains(m.vectorize());
}

bool OperatorSpace::contains(const OperatorSpace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("operator containment: size mismatch");
  return vec_.contains(other.vec_);
}

OperatorSpace OperatorSpace::adjoint_space() const {
  std::vector<Matrix> adj;
  adj.reserve(basis_.size());
  for (const auto& t : basis_) adj.push_back(t.adjoint());
  return span(n_, adj);
}

Subspace OperatorSpace::apply_vector(const Vector& x) const {
  std::vector<Vector> images;
  images.reserve(basis_.size());
  for (const auto& t : basis_) images.push_back(t.apply(x));
  return Subspace::span(n_, std::move(images));
}

Subspace OperatorSpace::apply(const Subspace& e) const {
  std::vector<Vector> images;
  images.reserve(basis_.size() * e.dim());
  for (const auto& t : basis_)
    for (const auto& v : e.basis()) images.push_back(t.apply(v));
  return Subspace::span(n_, std::move(images));
}

bool OperatorSpace::verify_unital() {
  unital_ = contains(Matrix::identity(n_));
  return unital_;
}

bool OperatorSpace::verify_product_closed() {
  product_closed_ = true;
  for (const auto& a : basis_) {
    for (const auto& b : basis_) {
      if (!contains(a * b)) {
        product_closed_ = false;
        return false;
      }
    }
  }
  return product_closed_;
}

OperatorSpace sum(const OperatorSpace& a, const OperatorSpace& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("operator sum: size mismatch");
  return OperatorSpace::from_vectorized(a.n_, sum(a.vec_, b.vec_));
}

OperatorSpace intersect(const OperatorSpace& a, const OperatorSpace& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("operator intersect: size mismatch");
  return OperatorSpace::from_vectorized(a.n_, intersect(a.vec_, b.vec_));
}

OperatorSpace solve_mapping_constraints(
    std::size_t n, const std::vector<std::pair<Subspace, Subspace>>& pairs, Exec mode) {
  for (const auto& [e, w] : pairs)
    if (e.ambient() != n || w.ambient() != n)
      throw DimensionMismatch("mapping constraints: ambient mismatch");

  // T E <= W  iff  <T v, u> = 0 for v in basis(E), u in basis(W-perp);
  // the row coefficient at unknown T[c][d] is v[d] * conj(u[c]).
  auto blocks = par::map_index<std::vector<Vector>>(mode, pairs.size(), [&](std::size_t k) {
    const auto& [e, w] = pairs[k];
    const Subspace wp = w.orth_complement();
    std::vector<Vector> rows;
    rows.reserve(e.dim() * wp.dim());
    for (const auto& v : e.basis())
      for (const auto& u : wp.basis()) {
        Vector row(n * n);
        for (std::size_t c = 0; c < n; ++c) {
          if (u[c].is_zero()) continue;
          const Scalar uc = u[c].conj();
          for (std::size_t d = 0; d < n; ++d) row[c * n + d] = v[d] * uc;
        }
        rows.push_back(std::move(row));
      }
    return rows;
  });

  std::vector<Vector> rows;
  for (auto& b : blocks) rows.insert(rows.end(), std::make_move_iterator(b.begin()),
                                     std::make_move_iterator(b.end()));
  return OperatorSpace::span(
      n, [&] {
        std::vector<Matrix> gens;
        for (const auto& sol : nullspace(rows, n * n))
          gens.push_back(Matrix::devectorize(sol));
        return gens;
      }());
}

}  // namespace latmod
