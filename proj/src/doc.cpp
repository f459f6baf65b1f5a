#include "latmod/doc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latmod {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocError(path + ": " + what);
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t as_count(const Json& j, const std::string& path, std::size_t lo, std::size_t hi) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v < lo || v > hi)
    fail(path, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<std::size_t>(v);
}

Scalar parse_scalar(const Json& j, const std::string& path, Field field) {
  if (!j.is_string()) fail(path, "expected a scalar string");
  Scalar s;
  try {
    s = Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
  if (field == Field::rationals && !s.is_real()) fail(path, "non-real scalar in a Q document");
  return s;
}

Vector parse_row(const Json& j, const std::string& path, std::size_t n, Field field) {
  if (!j.is_array()) fail(path, "expected an array of scalar strings");
  if (j.size() != n)
    fail(path, "row has " + std::to_string(j.size()) + " entries, ambient dimension is " +
                   std::to_string(n));
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = parse_scalar(j[k], path + "[" + std::to_string(k) + "]", field);
  return v;
}

Subspace parse_basis(const Json& j, const std::string& path, std::size_t n, Field field) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<Vector> rows;
  rows.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r)
    rows.push_back(parse_row(j[r], path + "[" + std::to_string(r) + "]", n, field));
  return Subspace::span(n, rows);
}

bool reserved_name(const std::string& name) { return name == "0" || name == "H"; }

}  // namespace

const OrderHom* Workspace::find_hom(const std::string& name) const {
  for (const auto& [hname, hom] : homs)
    if (hname == name) return &hom;
  return nullptr;
}

const ModuleSpec* Workspace::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const Subspace* Workspace::find_subspace(const std::string& name) const {
  for (const auto& [sname, sub] : named)
    if (sname == name) return &sub;
  if (lattice.size() > 0) {
    if (name == "0") return &lattice.elements()[lattice.bottom_index()];
    if (name == "H") return &lattice.elements()[lattice.top_index()];
  }
  return nullptr;
}

std::string Workspace::element_label(std::size_t index) const {
  return element_labels()[index];
}

std::vector<std::string> Workspace::element_labels() const {
  std::vector<std::string> labels(lattice.size());
  std::vector<std::string> used;
  auto taken = [&](const std::string& s) {
    if (std::find(used.begin(), used.end(), s) != used.end()) return true;
    for (const auto& [name, sub] : named)
      if (name == s) return true;
    return false;
  };
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::string label;
    for (const auto& [name, sub] : named)
      if (sub == lattice.elements()[i]) {
        label = name;
        break;
      }
    if (label.empty() && i == lattice.bottom_index()) label = "0";
    if (label.empty() && i == lattice.top_index()) label = "H";
    if (label.empty()) {
      label = "E" + std::to_string(i);
      while (taken(label)) label += "x";
    }
    labels[i] = label;
    used.push_back(label);
  }
  return labels;
}

Workspace parse_workspace(const std::string& text, std::optional<std::size_t> cap_override) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document", "expected a JSON object");

  Workspace ws;

  const Json& jf = member(j, "document", "field");
  if (!jf.is_string()) fail("field", "expected \"Q\" or \"Qi\"");
  std::string field_tag = jf.get<std::string>();
  if (field_tag == "Q")
    ws.field = Field::rationals;
  else if (field_tag == "Qi")
    ws.field = Field::gaussian_rationals;
  else
    fail("field", "expected \"Q\" or \"Qi\", got \"" + field_tag + "\"");

  ws.dimension = as_count(member(j, "document", "dimension"), "dimension", 1, 16);
  const std::size_t n = ws.dimension;

  if (j.contains("subspaces")) {
    const Json& js = j["subspaces"];
    if (!js.is_object()) fail("subspaces", "expected an object of named bases");
    for (auto it = js.begin(); it != js.end(); ++it) {
      const std::string& name = it.key();
      if (name.empty()) fail("subspaces", "empty name");
      if (reserved_name(name)) fail("subspaces." + name, "name is reserved");
      for (const auto& [prev, sub] : ws.named)
        if (prev == name) fail("subspaces." + name, "duplicate name");
      ws.named.emplace_back(name, parse_basis(it.value(), "subspaces." + name, n, ws.field));
    }
  }

  auto resolve = [&](const std::string& name, const std::string& path) -> Subspace {
    if (name == "0") return Subspace::zero(n);
    if (name == "H") return Subspace::full(n);
    for (const auto& [sname, sub] : ws.named)
      if (sname == name) return sub;
    fail(path, "unknown subspace name \"" + name + "\"");
  };

  const Json& jl = member(j, "document", "lattice");
  if (!jl.is_object()) fail("lattice", "expected an object");
  ws.cap = jl.contains("cap") ? as_count(jl["cap"], "lattice.cap", 2, 100000) : std::size_t{512};
  if (cap_override) ws.cap = *cap_override;
  const bool explicit_carrier = jl.contains("carrier");
  const bool generated = jl.contains("generators");
  if (explicit_carrier == generated)
    fail("lattice", "give exactly one of \"carrier\" or \"generators\"");
  const char* list_key = explicit_carrier ? "carrier" : "generators";
  const Json& jc = jl[list_key];
  if (!jc.is_array()) fail(std::string("lattice.") + list_key, "expected an array of names");
  std::vector<Subspace> subs;
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string path = std::string("lattice.") + list_key + "[" + std::to_string(k) + "]";
    if (!jc[k].is_string()) fail(path, "expected a subspace name");
    subs.push_back(resolve(jc[k].get<std::string>(), path));
  }
  if (generated) {
    if (!jl.contains("close") || !jl["close"].is_boolean() || !jl["close"].get<bool>())
      fail("lattice", "generators require \"close\": true");
    ws.closed_from_generators = true;
    try {
      ws.lattice = SubspaceLattice::closure(n, std::move(subs), ws.cap);
    } catch (const LatticeError& e) {
      fail("lattice", e.what());
    }
  } else {
    if (jl.contains("close")) fail("lattice", "\"close\" only applies to generators");
    try {
      ws.lattice = SubspaceLattice::from_carrier(n, std::move(subs));
    } catch (const LatticeError& e) {
      fail("lattice", e.what());
    }
  }

  if (j.contains("homs")) {
    const Json& jh = j["homs"];
    if (!jh.is_object()) fail("homs", "expected an object");
    for (auto it = jh.begin(); it != jh.end(); ++it) {
      const std::string& name = it.key();
      const std::string path = "homs." + name;
      if (name.empty()) fail("homs", "empty name");
      if (ws.find_hom(name)) fail(path, "duplicate name");
      const Json& jv = it.value();
      if (jv.is_string()) {
        if (jv.get<std::string>() != "identity") fail(path, "expected \"identity\" or a table");
        ws.homs.emplace_back(name, OrderHom::identity(ws.lattice));
        continue;
      }
      if (!jv.is_object()) fail(path, "expected \"identity\" or a table");
      std::vector<std::optional<Subspace>> assigned(ws.lattice.size());
      for (auto ht = jv.begin(); ht != jv.end(); ++ht) {
        const std::string entry = path + "." + ht.key();
        Subspace key = resolve(ht.key(), entry);
        auto idx = ws.lattice.index_of(key);
        if (!idx) fail(entry, "not a carrier element");
        if (assigned[*idx]) fail(entry, "element assigned twice");
        const Json& val = ht.value();
        if (val.is_string())
          assigned[*idx] = resolve(val.get<std::string>(), entry);
        else
          assigned[*idx] = parse_basis(val, entry, n, ws.field);
      }
      std::vector<Subspace> values;
      values.reserve(assigned.size());
      for (std::size_t i = 0; i < assigned.size(); ++i) {
        if (!assigned[i]) fail(path, "hom partial on carrier (no value for element " +
                                         std::to_string(i) + ")");
        values.push_back(*assigned[i]);
      }
      try {
        ws.homs.emplace_back(name, OrderHom::from_values(ws.lattice, std::move(values)));
      } catch (const LatticeError& e) {
        fail(path, e.what());
      }
    }
  }

  if (j.contains("modules")) {
    const Json& jm = j["modules"];
    if (!jm.is_object()) fail("modules", "expected an object");
    for (auto it = jm.begin(); it != jm.end(); ++it) {
      ModuleSpec spec;
      spec.name = it.key();
      const std::string path = "modules." + spec.name;
      if (spec.name.empty()) fail("modules", "empty name");
      if (ws.find_module(spec.name)) fail(path, "duplicate name");
      const Json& jv = it.value();
      if (!jv.is_object()) fail(path, "expected an object with \"side\" and \"hom\"");
      const Json& jside = member(jv, path, "side");
      if (!jside.is_string()) fail(path + ".side", "expected \"right\" or \"left\"");
      std::string side = jside.get<std::string>();
      if (side == "right")
        spec.side = Side::right;
      else if (side == "left")
        spec.side = Side::left;
      else
        fail(path + ".side", "expected \"right\" or \"left\", got \"" + side + "\"");
      const Json& jhom = member(jv, path, "hom");
      if (!jhom.is_string() || !ws.find_hom(jhom.get<std::string>()))
        fail(path + ".hom", "expected the name of a declared hom");
      spec.hom = jhom.get<std::string>();
      ws.modules.push_back(std::move(spec));
    }
  }

  if (j.contains("seeds")) {
    const Json& js = j["seeds"];
    if (!js.is_object()) fail("seeds", "expected an object");
    if (js.contains("default")) {
      if (!js["default"].is_number_unsigned()) fail("seeds.default", "expected an unsigned integer");
      ws.seed = js["default"].get<std::uint64_t>();
    }
  }

  return ws;
}

Workspace load_workspace(const std::string& path, std::optional<std::size_t> cap_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocError("cannot open document: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str(), cap_override);
}

std::string serialize_workspace(const Workspace& ws) {
  Json j = Json::object();
  j["field"] = ws.field == Field::rationals ? "Q" : "Qi";
  j["dimension"] = ws.dimension;

  const auto labels = ws.element_labels();
  auto basis_json = [](const Subspace& s) {
    Json rows = Json::array();
    for (const auto& v : s.basis()) {
      Json row = Json::array();
      for (std::size_t k = 0; k < v.size(); ++k) row.push_back(v[k].str());
      rows.push_back(std::move(row));
    }
    return rows;
  };

  Json subs = Json::object();
  for (const auto& [name, sub] : ws.named) subs[name] = basis_json(sub);
  for (std::size_t i = 0; i < ws.lattice.size(); ++i) {
    if (labels[i] == "0" || labels[i] == "H") continue;
    if (!subs.contains(labels[i])) subs[labels[i]] = basis_json(ws.lattice.elements()[i]);
  }
  j["subspaces"] = std::move(subs);

  Json carrier = Json::array();
  for (std::size_t i = 0; i < ws.lattice.size(); ++i) carrier.push_back(labels[i]);
  j["lattice"] = Json::object({{"carrier", std::move(carrier)}});

  auto value_name = [&](const Subspace& v) -> std::optional<std::string> {
    for (const auto& [name, sub] : ws.named)
      if (sub == v) return name;
    if (auto idx = ws.lattice.index_of(v)) return labels[*idx];
    if (v.is_zero()) return std::string("0");
    if (v.is_full()) return std::string("H");
    return std::nullopt;
  };

  if (!ws.homs.empty()) {
    Json homs = Json::object();
    for (const auto& [name, hom] : ws.homs) {
      Json table = Json::object();
      for (std::size_t i = 0; i < hom.size(); ++i) {
        if (auto vn = value_name(hom.value(i)))
          table[labels[i]] = *vn;
        else
          table[labels[i]] = basis_json(hom.value(i));
      }
      homs[name] = std::move(table);
    }
    j["homs"] = std::move(homs);
  }

  if (!ws.modules.empty()) {
    Json mods = Json::object();
    for (const auto& m : ws.modules)
      mods[m.name] = Json::object(
          {{"side", std::string(side_name(m.side))}, {"hom", m.hom}});
    j["modules"] = std::move(mods);
  }

  j["seeds"] = Json::object({{"default", ws.seed}});
  return j.dump(2) + "\n";
}

}  // namespace latmod
