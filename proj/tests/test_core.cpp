#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "modlab/modlab.hpp"
#include "oracles.hpp"

using namespace modlab;

namespace {

ElementSet set_of(std::size_t n, std::initializer_list<Elem> xs) { return ElementSet(n, xs); }

std::vector<FiniteRing> small_rings() {
  return {make_cyclic_ring(2), make_cyclic_ring(3), make_cyclic_ring(4), make_cyclic_ring(6),
          make_product_ring({make_cyclic_ring(2), make_cyclic_ring(2)}), make_matrix_ring(make_cyclic_ring(2), 2)};
}

} // namespace

TEST(ElementSet, CanonicalOrderIsSizeThenLexicographic) {
  CanonicalLess less;
  EXPECT_TRUE(less(set_of(4, {0}), set_of(4, {0, 3})));
  EXPECT_TRUE(less(set_of(4, {0, 1}), set_of(4, {0, 2})));
  EXPECT_FALSE(less(set_of(4, {0, 2}), set_of(4, {0, 1})));
  EXPECT_EQ(set_of(4, {0, 2}).to_string(), "{0,2}");
}

TEST(Ring, CyclicTables) {
  auto Z6 = make_cyclic_ring(6);
  EXPECT_EQ(Z6.order(), 6u);
  EXPECT_EQ(Z6.add(4, 5), 3u);
  EXPECT_EQ(Z6.mul(4, 5), 2u);
  EXPECT_EQ(Z6.neg(1), 5u);
  EXPECT_TRUE(Z6.is_commutative());
}

TEST(Ring, MatrixRingIsNoncommutative) {
  auto M2 = make_matrix_ring(make_cyclic_ring(2), 2);
  EXPECT_EQ(M2.order(), 16u);
  EXPECT_FALSE(M2.is_commutative());
  EXPECT_EQ(M2.mul(M2.one(), 7), 7u);
  EXPECT_EQ(M2.mul(9, M2.one()), 9u);
}

TEST(Ring, RawRingRejectsBrokenAxioms) {
  EXPECT_THROW(make_raw_ring({0, 1, 1, 0}, {0, 1, 1, 1}), AxiomViolation);
  EXPECT_NO_THROW(make_raw_ring({0, 1, 1, 0}, {0, 0, 0, 1}));
}

TEST(Ring, CapsAreEnforced) {
  EXPECT_THROW(make_cyclic_ring(32), CapExceeded);
  Caps c;
  c.ring_order = 64;
  EXPECT_NO_THROW(make_cyclic_ring(32, c));
}

TEST(Ideal, CyclicIdealsAreDivisorChains) {
  auto ideals = enumerate_ideals(make_cyclic_ring(8), Sidedness::two_sided);
  ASSERT_EQ(ideals.size(), 4u);
  EXPECT_EQ(ideals[1].carrier().to_string(), "{0,4}");
  EXPECT_EQ(ideals[2].carrier().to_string(), "{0,2,4,6}");
}

TEST(Ideal, MatrixRingHasFourNontrivialLeftIdealsAndIsSimple) {
  auto M2 = make_matrix_ring(make_cyclic_ring(2), 2);
  EXPECT_EQ(enumerate_ideals(M2, Sidedness::left).size(), 5u);
  EXPECT_EQ(enumerate_ideals(M2, Sidedness::two_sided).size(), 2u);
}

TEST(Ideal, QuotientRing) {
  auto Z8 = make_cyclic_ring(8);
  auto ideals = enumerate_ideals(Z8, Sidedness::two_sided);
  auto Q = quotient_ring(Z8, ideals[2]);
  EXPECT_EQ(Q.ring.order(), 2u);
  EXPECT_EQ(Q.projection[5], 1u);
}

TEST(Module, RegularAndQuotientAndSum) {
  auto Z4 = make_cyclic_ring(4);
  auto R = regular_module(Z4);
  auto two = make_submodule(R, set_of(4, {0, 2}));
  auto Q = quotient_module(two);
  EXPECT_EQ(Q.module.order(), 2u);
  auto D = direct_sum({Q.module, R});
  EXPECT_EQ(D.module.order(), 8u);
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(D.projections[1][D.injections[1][x]], x);
}

TEST(Module, RawModuleAxiomsChecked) {
  auto Z2 = make_cyclic_ring(2);
  EXPECT_NO_THROW(make_raw_module(Z2, {0, 1, 1, 0}, {0, 0, 0, 1}));
  EXPECT_THROW(make_raw_module(Z2, {0, 1, 1, 0}, {0, 0, 1, 1}), AxiomViolation);
}

TEST(Hom, MatchesAllFunctionsOracle) {
  for (const auto& R : small_rings()) {
    auto u = generate_universe(R);
    for (const auto& M : u.modules)
      for (const auto& N : u.modules) {
        if (std::pow(double(N.order()), double(M.order())) > 70000) continue;
        auto brute = oracle::all_function_homs(M, N);
        std::vector<std::vector<Elem>> engine;
        for (const auto& f : hom_set(M, N)) engine.push_back(f.table());
        std::sort(brute.begin(), brute.end());
        std::sort(engine.begin(), engine.end());
        EXPECT_EQ(brute, engine) << M.description() << " -> " << N.description();
      }
  }
}

TEST(Hom, CountsOverCyclicGroups) {
  auto Z4 = regular_module(make_cyclic_ring(4));
  auto Z8 = regular_module(make_cyclic_ring(8));
  EXPECT_EQ(endomorphisms(Z4).size(), 4u);
  EXPECT_EQ(endomorphisms(Z8).size(), 8u);
  auto M = direct_sum({Z4, Z4}).module;
  EXPECT_EQ(endomorphisms(M).size(), 256u);
}

TEST(Hom, IsomorphismDetection) {
  auto R = make_product_ring({make_cyclic_ring(2), make_cyclic_ring(2)});
  auto simples = simple_modules(R);
  ASSERT_EQ(simples.size(), 2u);
  EXPECT_FALSE(are_isomorphic(simples[0], simples[1]));
  EXPECT_FALSE(has_nonzero_morphism(simples[0], simples[1]));
}

TEST(Lattice, MatchesPowerSetOracle) {
  for (const auto& R : small_rings()) {
    auto u = generate_universe(R);
    std::vector<FiniteModule> mods{regular_module(R)};
    for (const auto& M : u.modules) mods.push_back(M);
    for (const auto& M : mods) {
      if (M.order() > 16) continue;
      auto brute = oracle::powerset_submodules(M);
      auto L = enumerate_submodules(M);
      std::vector<std::uint64_t> engine;
      for (std::size_t i = 0; i < L.size(); ++i) engine.push_back(oracle::mask_of(L.carrier(i)));
      std::sort(brute.begin(), brute.end());
      std::sort(engine.begin(), engine.end());
      EXPECT_EQ(brute, engine) << M.description();
    }
  }
}

TEST(Lattice, BottomTopJoinMeet) {
  auto M = direct_sum({regular_module(make_cyclic_ring(2)), regular_module(make_cyclic_ring(2))}).module;
  auto L = enumerate_submodules(M);
  ASSERT_EQ(L.size(), 5u);
  EXPECT_TRUE(L[L.bottom()].is_zero());
  EXPECT_TRUE(L[L.top()].is_whole());
  EXPECT_EQ(L.atoms().size(), 3u);
  EXPECT_EQ(L.join(1, 2), L.top());
  EXPECT_EQ(L.meet(1, 2), L.bottom());
  // Over Z2 only 0 and M are fully invariant in Z2 + Z2.
  EXPECT_EQ(L.fully_invariant_indices().size(), 2u);
}

TEST(Structure, Z4SocleAndRadical) {
  auto Z4 = regular_module(make_cyclic_ring(4));
  auto p = structural_predicates(Z4);
  EXPECT_EQ(p.socle.to_string(), "{0,2}");
  EXPECT_EQ(p.jacobson_radical.to_string(), "{0,2}");
  EXPECT_FALSE(p.is_semisimple);
  auto lp = lattice_predicates(p.socle);
  EXPECT_TRUE(lp.is_essential);
  EXPECT_TRUE(lp.is_superfluous);
  EXPECT_TRUE(lp.is_atom);
}

TEST(Structure, SemisimpleAndHomogeneous) {
  auto R = make_product_ring({make_cyclic_ring(2), make_cyclic_ring(2)});
  auto p = structural_predicates(regular_module(R));
  EXPECT_TRUE(p.is_semisimple);
  EXPECT_FALSE(p.is_homogeneous_semisimple);
  auto m = structural_predicates(regular_module(make_matrix_ring(make_cyclic_ring(2), 2)));
  EXPECT_TRUE(m.is_semisimple);
  EXPECT_TRUE(m.is_homogeneous_semisimple);
}

TEST(Structure, BaerCriterion) {
  auto Z4 = make_cyclic_ring(4);
  EXPECT_TRUE(is_injective(regular_module(Z4)));
  auto w = baer_failure(simple_modules(Z4)[0]);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->left_ideal.carrier().to_string(), "{0,2}");
  EXPECT_TRUE(is_injective(regular_module(make_cyclic_ring(6))));
}

TEST(Cogeneration, MatchesBoundedEmbeddingSearch) {
  for (const auto& R : small_rings()) {
    auto u = generate_universe(R);
    for (const auto& M : u.modules)
      for (const auto& N : u.modules) {
        if (std::pow(double(N.order()), double(M.order())) > 70000) continue;
        const bool brute = oracle::smallest_embedding_power(M, N, M.order() - 1).has_value();
        EXPECT_EQ(brute, cogenerates(N, M)) << N.description() << " cogenerates " << M.description();
      }
  }
}

TEST(Universe, DepthAndDedup) {
  auto Z4 = make_cyclic_ring(4);
  UniverseParams p;
  p.depth = 1;
  EXPECT_EQ(generate_universe(Z4, p).size(), 2u);
  p.depth = 2;
  auto u = generate_universe(Z4, p);
  EXPECT_EQ(u.size(), 5u);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) EXPECT_FALSE(are_isomorphic(u.modules[i], u.modules[j]));
}
