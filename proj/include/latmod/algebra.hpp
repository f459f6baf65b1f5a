#pragma once

#include <optional>

#include "latmod/lattice.hpp"
#include "latmod/operator_space.hpp"

namespace latmod {

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every operator leaving every carrier element invariant. Unital and product
// closed; both are re-verified on the result rather than assumed.
OperatorSpace alg(const SubspaceLattice& L, Exec mode = par::default_mode());

// T K <= K for every basis operator (hence for the whole space).
bool is_invariant(const OperatorSpace& space, const Subspace& k);

// [A x] = span{T x : T in A}. Contains x whenever A is unital.
Subspace cyclic_subspace(const OperatorSpace& a, const Vector& x);

enum class AuditVerdict { verified_up_to_sampling, counterexample };

struct AuditRecord {
  AuditVerdict verdict = AuditVerdict::verified_up_to_sampling;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  // Set on the counterexample verdict: a vector whose cyclic subspace under
  // alg(L) escapes the carrier, re-verified invariant before being reported.
  std::optional<Vector> witness;
  std::optional<Subspace> escaped;

  bool verified() const { return verdict == AuditVerdict::verified_up_to_sampling; }
};

// Randomized reflexivity audit of the carrier: samples vectors from a
// growing integer box (entries depend only on (seed, trial index), so the
// sharded parallel run reports the same lowest-index certificate as the
// serial one) and checks the cyclic subspace is a carrier element. A clean
// pass means L = Lat alg(L) up to sampling, never a proof.
AuditRecord audit_reflexive(const SubspaceLattice& L, std::size_t trials = 200,
                            std::uint64_t seed = 1, Exec mode = par::default_mode());

struct IntervalDecision {
  bool all_invariant = false;
  // On a negative decision: a concrete K with E <= K <= M not invariant.
  std::optional<Subspace> violating;
};

// Exact decision of "every K with E <= K <= M is invariant under `space`".
// dim(M cap E-perp) <= 1 reduces to the endpoints; otherwise each basis
// operator must act as a single scalar on (M cap E-perp) modulo E (if every
// vector of a space is an eigenvector, the eigenvalue is shared).
IntervalDecision lat_membership_interval(const OperatorSpace& space, const Subspace& e,
                                         const Subspace& m);

}  // namespace latmod
