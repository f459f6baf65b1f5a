#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmod/modules.hpp"

namespace latmod {

struct DocError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModuleSpec {
  std::string name;
  Side side = Side::right;
  std::string hom;  // name of a declared hom
};

// A materialized workspace document: names resolved, bases parsed as exact
// scalars, the lattice built (explicit carriers re-validated as closed,
// generator lists closed under the cap), homs total on the carrier.
struct Workspace {
  Field field = Field::rationals;
  std::size_t dimension = 0;
  std::vector<std::pair<std::string, Subspace>> named;  // declaration order
  bool closed_from_generators = false;
  std::size_t cap = 512;
  SubspaceLattice lattice;
  std::vector<std::pair<std::string, OrderHom>> homs;
  std::vector<ModuleSpec> modules;
  std::uint64_t seed = 1;

  const OrderHom* find_hom(const std::string& name) const;
  const ModuleSpec* find_module(const std::string& name) const;
  const Subspace* find_subspace(const std::string& name) const;  // built-ins 0 and H included

  // Stable display name for a carrier element: a declared name when one
  // matches, "0"/"H" for the bounds, "E<index>" otherwise.
  std::string element_label(std::size_t index) const;
  std::vector<std::string> element_labels() const;
};

// Throws DocError with a field path on any structural, naming, scalar,
// closure, or monotonicity problem. A Q document must not contain any
// imaginary part.
Workspace parse_workspace(const std::string& text,
                          std::optional<std::size_t> cap_override = std::nullopt);
Workspace load_workspace(const std::string& path,
                         std::optional<std::size_t> cap_override = std::nullopt);

// Canonical document text: explicit closed carrier, scalars in canonical
// form, fixed key order. parse(serialize(ws)) reproduces the same workspace
// and serializes to the same bytes.
std::string serialize_workspace(const Workspace& ws);

}  // namespace latmod
