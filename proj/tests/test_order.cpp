#include <gtest/gtest.h>

#include "modlab/modlab.hpp"

using namespace modlab;
using namespace modlab::order;

namespace {

// The diamond M3: bottom 0, atoms 1 2 3, top 4.
BoundedLattice m3() { return BoundedLattice(FinitePoset::from_relation(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})); }

// The pentagon N5: 0 < a(1) < b(2) < 1(4), 0 < c(3) < 1.
BoundedLattice n5() { return BoundedLattice(FinitePoset::from_relation(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})); }

} // namespace

TEST(Poset, AxiomsChecked) {
  EXPECT_THROW(FinitePoset(2, {1, 1, 1, 1}), AxiomViolation);
  EXPECT_THROW(FinitePoset(2, {0, 0, 0, 1}), AxiomViolation);
  auto c = FinitePoset::chain(3);
  EXPECT_TRUE(c.le(0, 2));
  EXPECT_FALSE(c.le(2, 0));
  EXPECT_TRUE(is_monotone(c, c, {0, 0, 2}));
  EXPECT_FALSE(is_monotone(c, c, {2, 1, 0}));
}

TEST(BoundedLattice, JoinsAndMeets) {
  auto L = m3();
  EXPECT_EQ(L.bottom(), 0u);
  EXPECT_EQ(L.top(), 4u);
  EXPECT_EQ(L.join(1, 2), 4u);
  EXPECT_EQ(L.meet(1, 2), 0u);
  EXPECT_EQ(L.atoms().size(), 3u);
  EXPECT_EQ(n5().join(1, 3), 4u);
}

TEST(BoundedLattice, NonLatticeRejected) {
  // Two incomparable maximal elements: no top.
  EXPECT_THROW(BoundedLattice(FinitePoset::from_relation(3, {{0, 1}, {0, 2}})), AxiomViolation);
}

TEST(Action, AxiomsChecked) {
  auto P = FinitePoset::chain(1);
  // s.x must be below x.
  EXPECT_THROW(PosetAction(P, m3(), {4, 4, 4, 4, 4}), AxiomViolation);
  EXPECT_NO_THROW(PosetAction(P, m3(), {0, 1, 2, 3, 4}));
}

TEST(Action, FirstAndPrimeOnM3) {
  // s kills atom 1 and keeps everything else.
  auto L = m3();
  PosetAction a(FinitePoset::chain(1), L, {0, 0, 2, 3, 4});
  EXPECT_TRUE(is_first(a, 1));
  EXPECT_TRUE(is_first(a, 2));
  auto w = first_witness(a, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->z, 1u);
  EXPECT_THROW(is_first(a, 0), InvalidArgument);
  EXPECT_FALSE(is_prime(a, 0));
}

TEST(Action, BridgeAndPreservationHoldOnRandomInstances) {
  auto r = random_action_sweep(7, 200);
  EXPECT_EQ(r.instances, 200u);
  EXPECT_LE(r.largest_lattice, 8u);
  EXPECT_LE(r.largest_poset, 4u);
  EXPECT_TRUE(r.violations.empty()) << r.violations.front();
}

TEST(Action, RandomLatticesVaryInSize) {
  Rng rng(3);
  std::size_t smallest = 99, largest = 0;
  for (int i = 0; i < 200; ++i) {
    auto L = random_lattice(rng, 8);
    smallest = std::min(smallest, L.size());
    largest = std::max(largest, L.size());
  }
  EXPECT_LE(smallest, 2u);
  EXPECT_EQ(largest, 8u);
}

TEST(Action, SweepIsDeterministicPerSeed) {
  auto a = random_action_sweep(11, 50);
  auto b = random_action_sweep(11, 50);
  EXPECT_EQ(a.elements_checked, b.elements_checked);
}

TEST(Action, RestrictionToIntervalAndPullback) {
  auto L = n5();
  PosetAction a(FinitePoset::chain(2), L, {0, 0, 1, 0, 1, 0, 1, 2, 3, 4});
  auto r = restrict_action(a, 2);
  EXPECT_EQ(r.action.lattice().size(), 3u);
  auto pulled = pullback(a, FinitePoset::antichain(2), {1, 1});
  for (std::size_t x = 0; x < L.size(); ++x) EXPECT_EQ(pulled.act(0, x), a.act(1, x));
  EXPECT_THROW(pullback(a, FinitePoset::chain(2), {1, 0}), InvalidArgument);
}

TEST(ModuleAction, TopIsFirstExactlyWhenModuleIsFamilyFirst) {
  for (const auto& R : corpus_rings()) {
    auto u = generate_universe(R);
    std::vector<Preradical> family{Preradical::soc(), Preradical::rad()};
    for (const auto& I : enumerate_ideals(R, Sidedness::two_sided)) family.push_back(Preradical::trad(I));
    for (const auto& M : u.modules) {
      auto inst = module_action_instance(M, family);
      EXPECT_EQ(is_first(inst.action, inst.lattice.top()), is_A_first(M, family)) << M.description();
    }
  }
}

TEST(ModuleAction, EqualPreradicalsCollapse) {
  auto Z2 = regular_module(make_cyclic_ring(2));
  auto inst = module_action_instance(Z2, {Preradical::soc(), Preradical::one(), Preradical::rad()});
  // On submodules of a semisimple module soc = 1.
  EXPECT_EQ(inst.class_of[0], inst.class_of[1]);
  EXPECT_EQ(inst.action.poset().size(), 2u);
}
