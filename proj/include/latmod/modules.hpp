#pragma once

#include <optional>

#include "latmod/algebra.hpp"
#include "latmod/lattice.hpp"
#include "latmod/operator_space.hpp"

namespace latmod {

// Two independent computation routes disagreed where they are proven to
// coincide. Always a bug or a miscertified carrier, never ignorable.
struct ConsistencyViolation : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Side { right, left };

const char* side_name(Side s);

// An operator space determined by an order homomorphism over a finite
// carrier lattice standing for Lat A. The carrier is caller-supplied; the
// optional audit record is the evidence (sampling, not proof) that it really
// is Lat alg(carrier). Exactness claims downstream key off audited().
struct ModuleInstance {
  SubspaceLattice lattice;
  OperatorSpace algebra;
  OrderHom hom;
  OperatorSpace space;
  Side side = Side::right;
  std::optional<AuditRecord> audit;

  bool audited() const { return audit.has_value() && audit->verified(); }
};

// U = {T : T E <= phi(E) for every carrier E}, the solution space of the
// linear constraints (I - P_phi(E)) T P_E = 0. Verified on return to be a
// right A-submodule with the defining containments.
ModuleInstance module_from_hom_right(const SubspaceLattice& L, const OperatorSpace& a,
                                     const OrderHom& phi, Exec mode = par::default_mode());

// U = {T : T psi(E) <= E for every carrier E}. Solved directly and
// cross-checked against the adjoint route (a right module over the
// orthocomplemented carrier and the adjoint algebra, with the dual hom
// E-perp |-> psi(E)-perp); any mismatch throws ConsistencyViolation.
ModuleInstance module_from_hom_left(const SubspaceLattice& L, const OperatorSpace& a,
                                    const OrderHom& psi, Exec mode = par::default_mode());

// The canonical hom of an operator space over a carrier.
//   right: tau_r(E) = [U E]
//   left:  tau_l(E) = ([U* E-perp])-perp
// Monotone by construction; U = {0} is allowed and gives the constant map
// 0 (right) resp. H (left).
OrderHom tau_of(const OperatorSpace& u, const SubspaceLattice& L, Side side);

struct RefHull {
  OperatorSpace space;
  // True when a verified audit certified the carrier; otherwise the hull is
  // only an upper bound (it always contains the true reflexive hull).
  bool exact = false;
};

// Reflexive hull Ref U = {T : T x in [U x] for every x}, computed as the
// module of the canonical hom: U_{tau_r} (right) or U_{tau_l} (left). The
// containment Ref U <= result holds unconditionally; equality needs every
// cyclic subspace of A to lie in the carrier, which is what the audit
// samples for. A is used to re-verify the module preconditions.
RefHull ref_module(const OperatorSpace& u, const SubspaceLattice& L, const OperatorSpace& a,
                   Side side, const std::optional<AuditRecord>& audit = std::nullopt,
                   Exec mode = par::default_mode());

// Independent sampling oracle for the same hull: intersection over sampled
// x of {T : T x in [U x]}. Always contains Ref U; equality is generic.
// Samples are integer vectors in [-box, box], redrawn from a widened box
// when a duplicate comes up. Requires samples >= n^2 so the constraints can
// cut the full matrix space down to any possible hull.
OperatorSpace ref_sampling_oracle(const OperatorSpace& u, std::size_t samples,
                                  std::uint64_t seed, long long box = 9,
                                  Exec mode = par::default_mode());

// U equals the module of its own canonical hom. On an audited carrier this
// is exactly reflexivity of U as an operator space.
bool is_reflexive_module(const OperatorSpace& u, const SubspaceLattice& L,
                         const OperatorSpace& a, Side side,
                         Exec mode = par::default_mode());

// One-sided ideal test through the canonical-hom inequalities:
//   right: tau_r(E) <= E for every E;  left: tau_l(E) >= E for every E.
// Either is equivalent to U <= alg(carrier) outright, so whenever the
// instance algebra is alg(carrier) the verdict is cross-checked against
// direct containment plus basis products; divergence throws.
bool is_ideal(const ModuleInstance& inst, Exec mode = par::default_mode());

// Lat U membership for an arbitrary subspace P. Direct route: P invariant
// under every basis operator. Interval route: some carrier E has
// tau_r(E) <= P <= E (right) or E <= P <= tau_l(E) (left). The interval
// route implying the direct one is unconditional and always enforced; the
// converse needs the audited carrier and is enforced exactly then. Returns
// the direct verdict.
bool lat_module_membership(const ModuleInstance& inst, const Subspace& p);

}  // namespace latmod
