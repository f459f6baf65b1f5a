#pragma once

#include <initializer_list>
#include <vector>

#include "latmod/suite.hpp"

namespace latmod::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = Scalar(x);
  return v;
}

inline Subspace sp(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(vec(r));
  return Subspace::span(n, vs);
}

// {0, <e1>, H} in Q^2.
inline SubspaceLattice l2() {
  return SubspaceLattice::from_carrier(2, {sp(2, {{1, 0}})});
}

// Full nest 0 < <e1> < <e1,e2> < H in Q^3.
inline SubspaceLattice n3() {
  return SubspaceLattice::from_carrier(3, {sp(3, {{1, 0, 0}}), sp(3, {{1, 0, 0}, {0, 1, 0}})});
}

// Three distinct lines in Q^2: not distributive, not reflexive.
inline SubspaceLattice m3() {
  return SubspaceLattice::from_carrier(
      2, {sp(2, {{1, 0}}), sp(2, {{0, 1}}), sp(2, {{1, 1}})});
}

// Boolean pair of complementary lines in Q^2.
inline SubspaceLattice b2() {
  return SubspaceLattice::from_carrier(2, {sp(2, {{1, 0}}), sp(2, {{0, 1}})});
}

// Hom from an element-wise rule; every carrier element must be covered.
template <class F>
OrderHom hom_by(const SubspaceLattice& l, F&& f) {
  std::vector<Subspace> values;
  values.reserve(l.size());
  for (const auto& e : l.elements()) values.push_back(f(e));
  return OrderHom::from_values(l, values);
}

// The L2 "ideal" hom 0 -> 0, <e1> -> 0, H -> <e1>.
inline OrderHom l2_ideal_hom(const SubspaceLattice& l) {
  return hom_by(l, [](const Subspace& e) {
    if (e.is_full()) return sp(2, {{1, 0}});
    return Subspace::zero(2);
  });
}

// The L2 hom 0 -> 0, <e1> -> H, H -> H.
inline OrderHom l2_big_hom(const SubspaceLattice& l) {
  return hom_by(l, [](const Subspace& e) {
    return e.is_zero() ? Subspace::zero(2) : Subspace::full(2);
  });
}

}  // namespace latmod::testing
