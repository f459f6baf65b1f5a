#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latmod/doc.hpp"
#include "latmod/rankone.hpp"
#include "latmod/report.hpp"

namespace latmod {

struct SuiteOptions {
  std::uint64_t seed = 0;   // 0: take the document seed
  std::size_t trials = 0;   // 0: per-check default
  Exec mode = par::default_mode();
};

// Check ids in declaration (execution) order.
const std::vector<std::string>& known_checks();
bool is_known_check(const std::string& id);

// Runs one check over the workspace. Deterministic given the document bytes
// and options; a ConsistencyViolation inside the check is captured in the
// report (consistent = false), input problems throw DocError.
CheckReport run_check(const Workspace& ws, const std::string& id, const SuiteOptions& opt = {});

// Runs the requested checks (all of them when `ids` is empty) in declaration
// order and returns the reports in that order.
std::vector<CheckReport> run_suite(const Workspace& ws, const std::vector<std::string>& ids,
                                   const SuiteOptions& opt = {});

struct OracleTables {
  std::vector<std::size_t> e_minus, e_star, e_sharp;
  // Aligned with ws.homs; inner vectors indexed by carrier element.
  std::vector<std::vector<std::size_t>> tilde, star;
};

// Naive double-loop re-evaluation of every derived map straight from the
// defining joins and meets, written against the subspace primitives only
// (no order tables, no lattice kernels), as an independent witness.
OracleTables brute_force_oracles(const Workspace& ws);

// Reproducible random workspace: same arguments, same document bytes.
// `style` is "<carrier>-<hom>" with carrier one of nest | boolean | lines
// and hom one of lattice | projection | identity. The emitted document is
// fully explicit (closed carrier, total homs, one right and one left module
// over the same hom).
Workspace random_instance(std::size_t dim, std::size_t size_target, const std::string& style,
                          std::uint64_t seed);

}  // namespace latmod
