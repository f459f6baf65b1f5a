#include "doctest.h"
#include "helpers.hpp"
#include "latmod/rng.hpp"

using namespace latmod;
using namespace latmod::testing;

namespace {

ModuleInstance right_of(const SubspaceLattice& l, const OrderHom& phi) {
  return module_from_hom_right(l, alg(l), phi);
}
ModuleInstance left_of(const SubspaceLattice& l, const OrderHom& psi) {
  return module_from_hom_left(l, alg(l), psi);
}

}  // namespace

TEST_CASE("right module of the ideal hom is one matrix unit") {
  auto l = l2();
  auto inst = right_of(l, l2_ideal_hom(l));
  REQUIRE(inst.space.dim() == 1);
  CHECK(inst.space.basis()[0].str() == "[0 1; 0 0]");
  CHECK(inst.side == Side::right);
}

TEST_CASE("right module of the big hom is everything") {
  auto l = l2();
  auto inst = right_of(l, l2_big_hom(l));
  CHECK(inst.space.dim() == 4);
  CHECK(inst.space == OperatorSpace::full(2));
}

TEST_CASE("right module of the identity hom is the algebra") {
  auto l = l2();
  auto inst = right_of(l, OrderHom::identity(l));
  CHECK(inst.space == alg(l));
  auto m = m3();
  CHECK(module_from_hom_right(m, alg(m), OrderHom::identity(m)).space == alg(m));
}

TEST_CASE("left module goldens on L2") {
  auto l = l2();
  auto const_full = hom_by(l, [](const Subspace&) { return Subspace::full(2); });
  CHECK(left_of(l, const_full).space.dim() == 0);

  CHECK(left_of(l, OrderHom::identity(l)).space == alg(l));

  auto mid = hom_by(l, [](const Subspace& e) {
    return e.is_zero() ? Subspace::zero(2) : sp(2, {{1, 0}});
  });
  auto inst = left_of(l, mid);
  // {T : T e1 in <e1>}
  CHECK(inst.space.dim() == 3);
  for (const auto& t : inst.space.basis())
    CHECK(sp(2, {{1, 0}}).contains(t.apply(vec({1, 0}))));
}

TEST_CASE("left module construction cross-checks its adjoint route") {
  for (const auto& l : {l2(), n3(), b2(), m3()}) {
    CHECK_NOTHROW(left_of(l, OrderHom::identity(l)));
    auto bot = hom_by(l, [&](const Subspace& e) {
      return e.is_full() ? Subspace::full(l.ambient()) : Subspace::zero(l.ambient());
    });
    CHECK_NOTHROW(left_of(l, bot));
  }
}

TEST_CASE("canonical hom of the full space and of one matrix unit") {
  auto l = l2();
  OrderHom tau_full = tau_of(OperatorSpace::full(2), l, Side::right);
  CHECK(tau_full.value(0).is_zero());
  CHECK(tau_full.value(1).is_full());
  CHECK(tau_full.value(2).is_full());

  auto inst = right_of(l, l2_ideal_hom(l));
  OrderHom tau = tau_of(inst.space, l, Side::right);
  CHECK(tau.value(0).is_zero());
  CHECK(tau.value(1).is_zero());
  CHECK(tau.value(2) == sp(2, {{1, 0}}));

  OrderHom tau_zero = tau_of(OperatorSpace::zero(2), l, Side::right);
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(tau_zero.value(i).is_zero());
  OrderHom tau_zero_l = tau_of(OperatorSpace::zero(2), l, Side::left);
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(tau_zero_l.value(i).is_full());
}

TEST_CASE("hom modules are their own reflexive hulls") {
  auto l = l2();
  for (const auto& phi : {l2_ideal_hom(l), l2_big_hom(l), OrderHom::identity(l)}) {
    auto inst = right_of(l, phi);
    auto hull = ref_module(inst.space, l, inst.algebra, Side::right);
    CHECK(hull.space == inst.space);
    CHECK(!hull.exact);  // no audit attached
    auto audited = ref_module(inst.space, l, inst.algebra, Side::right,
                              audit_reflexive(l, 120, 5));
    CHECK(audited.exact);
    CHECK(audited.space == inst.space);
    CHECK(is_reflexive_module(inst.space, l, inst.algebra, Side::right));
  }
  for (const auto& psi : {OrderHom::identity(l)}) {
    auto inst = left_of(l, psi);
    CHECK(ref_module(inst.space, l, inst.algebra, Side::left).space == inst.space);
    CHECK(is_reflexive_module(inst.space, l, inst.algebra, Side::left));
  }
}

TEST_CASE("audit on a bad carrier never certifies the hull") {
  auto m = m3();
  auto inst = right_of(m, OrderHom::identity(m));
  auto hull = ref_module(inst.space, m, inst.algebra, Side::right,
                         audit_reflexive(m, 200, 1));
  CHECK(!hull.exact);
  CHECK(hull.space.contains(inst.space));
}

TEST_CASE("sampling oracle sandwiches the hull") {
  auto l = l2();
  // Containment holds for every sample set; equality can need samples on
  // thin strata, so it is asserted through the widening resample loop.
  for (const auto& phi : {l2_ideal_hom(l), l2_big_hom(l), OrderHom::identity(l)}) {
    auto inst = right_of(l, phi);
    auto hull = ref_module(inst.space, l, inst.algebra, Side::right);
    bool equal = false;
    std::size_t samples = 8;
    long long box = 9;
    for (std::size_t round = 0; round < 6 && !equal; ++round) {
      auto sampled = ref_sampling_oracle(inst.space, samples, Rng::derive(17, round), box);
      CHECK(sampled.contains(hull.space));
      equal = sampled == hull.space;
      samples *= 2;
      box *= 3;
    }
    CHECK(equal);
  }
  // The full space is its own hull under any sample set.
  CHECK(ref_sampling_oracle(OperatorSpace::full(2), 4, 1) == OperatorSpace::full(2));
  CHECK_THROWS_WITH_AS(ref_sampling_oracle(OperatorSpace::full(2), 3, 1),
                       "oracle needs at least n^2 samples", PreconditionError);
}

TEST_CASE("ideal test matches the hom shape") {
  auto l = l2();
  CHECK(is_ideal(right_of(l, l2_ideal_hom(l))));
  CHECK(!is_ideal(right_of(l, l2_big_hom(l))));
  CHECK(is_ideal(right_of(l, OrderHom::identity(l))));
  CHECK(is_ideal(left_of(l, OrderHom::identity(l))));
  // T up(E) <= E pins T to the single matrix unit, a left ideal.
  auto up = hom_by(l, [](const Subspace& e) {
    return e.is_zero() ? sp(2, {{1, 0}}) : Subspace::full(2);
  });
  CHECK(is_ideal(left_of(l, up)));
  // The bottom hom constrains nothing; all of M2 is not inside the algebra.
  auto bottom = hom_by(l, [](const Subspace&) { return Subspace::zero(2); });
  CHECK(!is_ideal(left_of(l, bottom)));
}

TEST_CASE("Lat of the matrix-unit module") {
  auto l = l2();
  auto inst = right_of(l, l2_ideal_hom(l));
  CHECK(lat_module_membership(inst, Subspace::zero(2)));
  CHECK(lat_module_membership(inst, sp(2, {{1, 0}})));
  CHECK(lat_module_membership(inst, Subspace::full(2)));
  CHECK(!lat_module_membership(inst, sp(2, {{0, 1}})));
  CHECK(!lat_module_membership(inst, sp(2, {{1, 1}})));
}

TEST_CASE("Lat membership with an audited carrier enforces both directions") {
  auto l = n3();
  auto inst = right_of(l, OrderHom::identity(l));
  inst.audit = audit_reflexive(l, 150, 11);
  REQUIRE(inst.audited());
  for (const auto& e : l.elements()) CHECK(lat_module_membership(inst, e));
  CHECK(!lat_module_membership(inst, sp(3, {{0, 1, 0}})));
}

TEST_CASE("module preconditions") {
  auto l = l2();
  auto scalars = alg(m3());  // unital but leaves <e2> out of its invariants? no:
  // scalars leave everything invariant, so use a non-unital space instead.
  OperatorSpace strict = OperatorSpace::span(
      2, {Matrix::from_rows({vec({0, 1}), vec({0, 0})})});
  CHECK_THROWS_WITH_AS(module_from_hom_right(l, strict, OrderHom::identity(l)),
                       "algebra not unital", PreconditionError);
  auto m = m3();
  CHECK_THROWS_WITH_AS(module_from_hom_right(l, alg(l), OrderHom::identity(m)),
                       "hom partial on carrier", PreconditionError);
  // alg(L2) does not leave <e2> invariant, so the B2 carrier paired with it
  // must be rejected.
  CHECK_THROWS_WITH_AS(module_from_hom_right(b2(), alg(l), OrderHom::identity(b2())),
                       "carrier not invariant under algebra", PreconditionError);
  CHECK(scalars.unital());
}

TEST_CASE("Gaussian carrier end to end") {
  Vector v(2);
  v[0] = Scalar(1);
  v[1] = Scalar(Rational(0), Rational(1));  // i
  auto line = Subspace::line(v);
  auto l = SubspaceLattice::from_carrier(2, {line});
  REQUIRE(l.size() == 3);
  auto a = alg(l);
  CHECK(a.dim() == 3);
  auto inst = module_from_hom_right(l, a, OrderHom::identity(l));
  CHECK(inst.space == a);
  CHECK(is_reflexive_module(a, l, a, Side::right));
  auto phi = hom_by(l, [&](const Subspace& e) {
    return e.is_full() ? line : Subspace::zero(2);
  });
  auto ideal = module_from_hom_right(l, a, phi);
  CHECK(ideal.space.dim() == 1);
  CHECK(is_ideal(ideal));
  CHECK(lat_module_membership(ideal, line));
}
