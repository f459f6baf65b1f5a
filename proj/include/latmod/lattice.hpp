#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latmod/linalg.hpp"
#include "latmod/parallel.hpp"

namespace latmod {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : LatticeError {
  using LatticeError::LatticeError;
};

// A finite lattice of subspaces of a fixed ambient space, closed under sum
// and intersection and always containing 0 and H. Elements are stored in the
// canonical total order (dimension, then basis entries), so an element index
// is a stable identity; meet/join/containment are precomputed index tables.
class SubspaceLattice {
 public:
  SubspaceLattice() = default;

  // Meet/join closure of the generators plus {0, H}. Throws CapExceeded
  // ("closure exceeds cap") if the closed set would exceed `cap` elements.
  static SubspaceLattice closure(std::size_t ambient, std::vector<Subspace> generators,
                                 std::size_t cap = 512,
                                 Exec mode = par::default_mode());

  // Wraps an explicitly listed carrier; 0 and H are supplied if absent and
  // duplicates collapse. Throws LatticeError("carrier not closed") when some
  // pairwise meet or join is missing from the list.
  static SubspaceLattice from_carrier(std::size_t ambient, std::vector<Subspace> elements,
                                      Exec mode = par::default_mode());

  std::size_t size() const { return elems_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Subspace>& elements() const { return elems_; }
  const Subspace& operator[](std::size_t i) const { return elems_[i]; }

  std::size_t bottom_index() const { return 0; }
  std::size_t top_index() const { return elems_.size() - 1; }

  std::optional<std::size_t> index_of(const Subspace& s) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }

  // Fold helpers; empty families give the lattice conventions bottom / top.
  template <class Pred>
  std::size_t join_where(Pred&& keep) const {
    std::size_t acc = bottom_index();
    for (std::size_t i = 0; i < size(); ++i)
      if (keep(i)) acc = join(acc, i);
    return acc;
  }
  template <class Pred>
  std::size_t meet_where(Pred&& keep) const {
    std::size_t acc = top_index();
    for (std::size_t i = 0; i < size(); ++i)
      if (keep(i)) acc = meet(acc, i);
    return acc;
  }

 private:
  static SubspaceLattice index(std::size_t ambient, std::vector<Subspace> elems,
                               bool trust_closed, Exec mode);

  std::size_t ambient_ = 0;
  std::vector<Subspace> elems_;
  std::vector<char> leq_;
  std::vector<std::uint32_t> meet_, join_;
};

// A monotone map from a lattice into subspaces of the same ambient space.
// Values need not lie in the lattice; when they all do, an index form is
// kept so derived maps can run on the order tables.
class OrderHom {
 public:
  OrderHom() = default;

  // `values` aligned with L.elements(). Throws LatticeError("hom not
  // monotone") or on size/ambient mismatch ("hom partial on carrier").
  static OrderHom from_values(const SubspaceLattice& L, std::vector<Subspace> values);
  static OrderHom identity(const SubspaceLattice& L);

  std::size_t size() const { return values_.size(); }
  const Subspace& value(std::size_t i) const { return values_[i]; }
  bool lattice_valued() const { return lattice_valued_; }
  std::optional<std::size_t> value_index(std::size_t i) const {
    return idx_[i] == kOutside ? std::nullopt : std::optional<std::size_t>(idx_[i]);
  }

  friend bool operator==(const OrderHom& a, const OrderHom& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const OrderHom& a, const OrderHom& b) { return !(a == b); }

  // Pointwise order: this(E) <= other(E) for every E.
  bool pointwise_leq(const OrderHom& other) const;

 private:
  static constexpr std::uint32_t kOutside = ~std::uint32_t{0};
  std::vector<Subspace> values_;
  std::vector<std::uint32_t> idx_;
  bool lattice_valued_ = false;
};

// Derived order maps. The single-element forms evaluate one value; the table
// forms evaluate the whole carrier (a data-parallel kernel) and return
// element indices, which is always possible because joins and meets of
// carrier elements stay in the carrier.
std::vector<std::size_t> e_minus_table(const SubspaceLattice& L,
                                       Exec mode = par::default_mode());
std::vector<std::size_t> e_star_table(const SubspaceLattice& L,
                                      Exec mode = par::default_mode());
std::vector<std::size_t> e_sharp_table(const SubspaceLattice& L,
                                       Exec mode = par::default_mode());
Subspace e_minus(const SubspaceLattice& L, const Subspace& e);
Subspace e_star(const SubspaceLattice& L, const Subspace& e);
Subspace e_sharp(const SubspaceLattice& L, const Subspace& e);

// phi~(E) = join{F : phi(F) does not contain E}; phi~(0) = 0 comes out of the
// empty-join convention. Monotone for any phi (asserted); lattice-valued.
OrderHom hom_tilde(const SubspaceLattice& L, const OrderHom& phi,
                   Exec mode = par::default_mode());

// phi*(E) = meet{phi~(F) : F not<= E}; lattice-valued.
OrderHom hom_star(const SubspaceLattice& L, const OrderHom& phi,
                  Exec mode = par::default_mode());

// Distributive law checked over all element triples via the index tables.
bool is_distributive(const SubspaceLattice& L, Exec mode = par::default_mode());

// E = E# for every E; on finite subspace lattices this is equivalent to
// is_distributive, and the two implementations are kept independent so the
// suite can cross-check them.
bool is_completely_distributive(const SubspaceLattice& L,
                                Exec mode = par::default_mode());

// All pairs of element projectors commute.
bool is_commutative(const SubspaceLattice& L, Exec mode = par::default_mode());

}  // namespace latmod
