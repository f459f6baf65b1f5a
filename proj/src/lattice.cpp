#include "latmod/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace latmod {

SubspaceLattice SubspaceLattice::closure(std::size_t ambient,
                                         std::vector<Subspace> generators,
                                         std::size_t cap, Exec mode) {
  std::set<Subspace> seen;
  std::vector<Subspace> elems;
  auto add = [&](Subspace s) {
    if (seen.insert(s).second) {
      elems.push_back(std::move(s));
      if (elems.size() > cap) throw CapExceeded("closure exceeds cap");
    }
  };
  add(Subspace::zero(ambient));
  add(Subspace::full(ambient));
  for (auto& g : generators) {
    if (g.ambient() != ambient) throw DimensionMismatch("closure: ambient mismatch");
    add(std::move(g));
  }

  // Worklist rounds: all pairs touching an element added since the last
  // round. Pair results are computed in parallel and merged in pair order,
  // so the outcome is independent of the execution mode.
  std::size_t settled = 0;
  while (settled < elems.size()) {
    const std::size_t frontier = elems.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = settled; j < frontier; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    settled = frontier;
    auto results = par::map_index<std::pair<Subspace, Subspace>>(
        mode, pairs.size(), [&](std::size_t k) {
          const auto& [i, j] = pairs[k];
          return std::make_pair(intersect(elems[i], elems[j]), sum(elems[i], elems[j]));
        });
    for (auto& [m, s] : results) {
      add(std::move(m));
      add(std::move(s));
    }
  }
  return index(ambient, std::move(elems), /*trust_closed=*/true, mode);
}

SubspaceLattice SubspaceLattice::from_carrier(std::size_t ambient,
                                              std::vector<Subspace> elements,
                                              Exec mode) {
  for (const auto& e : elements)
    if (e.ambient() != ambient) throw DimensionMismatch("carrier: ambient mismatch");
  elements.push_back(Subspace::zero(ambient));
  elements.push_back(Subspace::full(ambient));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return index(ambient, std::move(elements), /*trust_closed=*/false, mode);
}

SubspaceLattice SubspaceLattice::index(std::size_t ambient, std::vector<Subspace> elems,
                                       bool trust_closed, Exec mode) {
  SubspaceLattice L;
  L.ambient_ = ambient;
  std::sort(elems.begin(), elems.end());
  L.elems_ = std::move(elems);
  const std::size_t n = L.elems_.size();

  L.leq_.assign(n * n, 0);
  par::for_index(mode, n * n, [&](std::size_t k) {
    const std::size_t a = k / n, b = k % n;
    L.leq_[k] = L.elems_[b].contains(L.elems_[a]) ? 1 : 0;
  });

  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  std::atomic<bool> closed{true};
  par::for_index(mode, n * n, [&](std::size_t k) {
    const std::size_t a = k / n, b = k % n;
    if (b < a) return;  // symmetric; filled below
    auto mi = L.index_of(intersect(L.elems_[a], L.elems_[b]));
    auto ji = L.index_of(sum(L.elems_[a], L.elems_[b]));
    if (!mi || !ji) {
      closed.store(false);
      return;
    }
    L.meet_[a * n + b] = static_cast<std::uint32_t>(*mi);
    L.join_[a * n + b] = static_cast<std::uint32_t>(*ji);
  });
  if (!closed.load()) {
    if (trust_closed) throw std::logic_error("closure postcondition violated");
    throw LatticeError("carrier not closed");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      L.meet_[a * n + b] = L.meet_[b * n + a];
      L.join_[a * n + b] = L.join_[b * n + a];
    }
  // Canonical order puts dim 0 first and dim n last.
  if (!L.elems_.front().is_zero() || !L.elems_.back().is_full())
    throw std::logic_error("lattice bounds misplaced");
  return L;
}

std::optional<std::size_t> SubspaceLattice::index_of(const Subspace& s) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), s);
  if (it == elems_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

OrderHom OrderHom::from_values(const SubspaceLattice& L, std::vector<Subspace> values) {
  if (values.size() != L.size()) throw LatticeError("hom partial on carrier");
  for (const auto& v : values)
    if (v.ambient() != L.ambient()) throw DimensionMismatch("hom value ambient mismatch");
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b)
      if (a != b && L.leq(a, b) && !values[b].contains(values[a]))
        throw LatticeError("hom not monotone");
  OrderHom h;
  h.idx_.reserve(values.size());
  h.lattice_valued_ = true;
  for (const auto& v : values) {
    auto i = L.index_of(v);
    h.idx_.push_back(i ? static_cast<std::uint32_t>(*i) : kOutside);
    if (!i) h.lattice_valued_ = false;
  }
  h.values_ = std::move(values);
  return h;
}

OrderHom OrderHom::identity(const SubspaceLattice& L) {
  return from_values(L, L.elements());
}

bool OrderHom::pointwise_leq(const OrderHom& other) const {
  if (size() != other.size()) throw LatticeError("hom size mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (!other.values_[i].contains(values_[i])) return false;
  return true;
}

namespace {

// Containment pattern covers[F][E] = (phi(F) >= E), computed once per kernel;
// geometric tests are needed only when phi leaves the lattice.
std::vector<char> cover_table(const SubspaceLattice& L, const OrderHom& phi, Exec mode) {
  const std::size_t n = L.size();
  std::vector<char> covers(n * n);
  par::for_index(mode, n * n, [&](std::size_t k) {
    const std::size_t f = k / n, e = k % n;
    if (auto vi = phi.value_index(f))
      covers[k] = L.leq(e, *vi) ? 1 : 0;
    else
      covers[k] = phi.value(f).contains(L[e]) ? 1 : 0;
  });
  return covers;
}

std::vector<Subspace> gather(const SubspaceLattice& L, const std::vector<std::size_t>& idx) {
  std::vector<Subspace> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(L[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> e_minus_table(const SubspaceLattice& L, Exec mode) {
  return par::map_index<std::size_t>(mode, L.size(), [&](std::size_t e) {
    return L.join_where([&](std::size_t g) { return !L.leq(e, g); });
  });
}

std::vector<std::size_t> e_star_table(const SubspaceLattice& L, Exec mode) {
  const auto minus = e_minus_table(L, mode);
  return par::map_index<std::size_t>(mode, L.size(), [&](std::size_t e) {
    std::size_t acc = L.top_index();
    for (std::size_t f = 0; f < L.size(); ++f)
      if (!L.leq(f, e)) acc = L.meet(acc, minus[f]);
    return acc;
  });
}

std::vector<std::size_t> e_sharp_table(const SubspaceLattice& L, Exec mode) {
  const auto minus = e_minus_table(L, mode);
  return par::map_index<std::size_t>(mode, L.size(), [&](std::size_t e) {
    return L.join_where([&](std::size_t f) { return !L.leq(e, minus[f]); });
  });
}

Subspace e_minus(const SubspaceLattice& L, const Subspace& e) {
  auto i = L.index_of(e);
  if (!i) throw LatticeError("element not in carrier");
  return L[e_minus_table(L, Exec::serial)[*i]];
}

Subspace e_star(const SubspaceLattice& L, const Subspace& e) {
  auto i = L.index_of(e);
  if (!i) throw LatticeError("element not in carrier");
  return L[e_star_table(L, Exec::serial)[*i]];
}

Subspace e_sharp(const SubspaceLattice& L, const Subspace& e) {
  auto i = L.index_of(e);
  if (!i) throw LatticeError("element not in carrier");
  return L[e_sharp_table(L, Exec::serial)[*i]];
}

OrderHom hom_tilde(const SubspaceLattice& L, const OrderHom& phi, Exec mode) {
  if (phi.size() != L.size()) throw LatticeError("hom partial on carrier");
  const auto covers = cover_table(L, phi, mode);
  const std::size_t n = L.size();
  auto tilde = par::map_index<std::size_t>(mode, n, [&](std::size_t e) {
    return L.join_where([&](std::size_t f) { return !covers[f * n + e]; });
  });
  // Monotone for any phi: E <= E' shrinks the family being joined.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (L.leq(a, b) && !L.leq(tilde[a], tilde[b]))
        throw std::logic_error("hom_tilde monotonicity violated");
  return OrderHom::from_values(L, gather(L, tilde));
}

OrderHom hom_star(const SubspaceLattice& L, const OrderHom& phi, Exec mode) {
  const OrderHom tilde = hom_tilde(L, phi, mode);
  const std::size_t n = L.size();
  auto star = par::map_index<std::size_t>(mode, n, [&](std::size_t e) {
    std::size_t acc = L.top_index();
    for (std::size_t f = 0; f < n; ++f)
      if (!L.leq(f, e)) acc = L.meet(acc, *tilde.value_index(f));
    return acc;
  });
  return OrderHom::from_values(L, gather(L, star));
}

bool is_distributive(const SubspaceLattice& L, Exec mode) {
  const std::size_t n = L.size();
  std::atomic<bool> ok{true};
  par::for_index(mode, n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n && ok.load(std::memory_order_relaxed); ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          ok.store(false, std::memory_order_relaxed);
          return;
        }
  });
  return ok.load();
}

bool is_completely_distributive(const SubspaceLattice& L, Exec mode) {
  const auto sharp = e_sharp_table(L, mode);
  for (std::size_t e = 0; e < L.size(); ++e)
    if (sharp[e] != e) return false;
  return true;
}

bool is_commutative(const SubspaceLattice& L, Exec mode) {
  const std::size_t n = L.size();
  auto projectors = par::map_index<Matrix>(mode, n, [&](std::size_t i) {
    return L[i].projector();
  });
  std::atomic<bool> ok{true};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  par::for_index(mode, pairs.size(), [&](std::size_t k) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const auto& [a, b] = pairs[k];
    if (projectors[a] * projectors[b] != projectors[b] * projectors[a])
      ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

}  // namespace latmod
