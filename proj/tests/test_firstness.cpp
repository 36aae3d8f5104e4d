#include <gtest/gtest.h>

#include "modlab/modlab.hpp"

using namespace modlab;

namespace {

FiniteModule zn(std::size_t n) { return regular_module(make_cyclic_ring(n)); }

FiniteModule sum(std::initializer_list<FiniteModule> parts) { return direct_sum(parts).module; }

// Independent definition: every nonzero submodule cogenerates M.
bool bjkn_by_definition(const FiniteModule& M) {
  auto L = enumerate_submodules(M);
  for (std::size_t i = 1; i < L.size(); ++i)
    if (!reject(as_module(L[i]).module, M).is_zero()) return false;
  return true;
}

} // namespace

TEST(Bjkn, Z4IsNotPrimeWithExactWitnesses) {
  auto r = bjkn_prime(zn(4));
  EXPECT_FALSE(r.value);
  EXPECT_FALSE(r.every_cyclic_cogenerates);
  EXPECT_FALSE(r.element_pairs);
  EXPECT_FALSE(r.products_nonzero);
  ASSERT_TRUE(r.non_cogenerating);
  EXPECT_EQ(r.non_cogenerating->to_string(), "{0,2}");
  ASSERT_TRUE(r.element_witness);
  EXPECT_EQ(r.element_witness->first, 2u);
}

TEST(Bjkn, SimpleAndHomogeneousSemisimpleArePrime) {
  EXPECT_TRUE(is_bjkn_prime(zn(2)));
  EXPECT_TRUE(is_bjkn_prime(sum({zn(3), zn(3)})));
  EXPECT_FALSE(is_bjkn_prime(zn(6)));
  auto R = make_matrix_ring(make_cyclic_ring(2), 2);
  EXPECT_TRUE(is_bjkn_prime(regular_module(R)));
}

TEST(Bjkn, AgreesWithDefinitionOnCorpus) {
  for (const auto& u : build_corpus())
    for (const auto& M : u.modules) EXPECT_EQ(is_bjkn_prime(M), bjkn_by_definition(M)) << M.description();
}

TEST(Bjkn, ZeroModuleRejected) {
  auto Z4 = zn(4);
  auto zero = as_module(zero_submodule(Z4)).module;
  EXPECT_THROW(bjkn_prime(zero), InvalidArgument);
  EXPECT_THROW(prime_module(zero), InvalidArgument);
  EXPECT_TRUE(is_A_fully_first(zero, {Preradical::soc()}));
}

TEST(Prime, RoutesAgreeAndWitness) {
  auto r = prime_module(zn(4));
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.by_annihilators, r.by_ideal_action);
  ASSERT_TRUE(r.ideal_witness);
  EXPECT_EQ(r.ideal_witness->first.carrier().to_string(), "{0,2}");
  EXPECT_TRUE(is_prime_module(zn(3)));
  EXPECT_TRUE(is_prime_module(sum({zn(2), zn(2)})));
}

TEST(Prime, BjknImpliesPrimeOnCorpus) {
  for (const auto& u : build_corpus())
    for (const auto& M : u.modules)
      if (is_bjkn_prime(M)) EXPECT_TRUE(is_prime_module(M)) << M.description();
}

TEST(Rpid, Z4IsRpidFirstButNotBjkn) {
  auto r = rpid_first(zn(4));
  EXPECT_TRUE(r.value);
  EXPECT_TRUE(r.pairwise);
  EXPECT_TRUE(r.family);
  EXPECT_FALSE(is_bjkn_prime(zn(4)));
}

TEST(Rpid, Z6IsNotRpidFirst) {
  auto r = rpid_first(zn(6));
  EXPECT_FALSE(r.value);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(has_nonzero_morphism(as_module(r.witness->first).module, as_module(r.witness->second).module));
}

TEST(Diuniform, Examples) {
  EXPECT_TRUE(is_diuniform(zn(4)));
  EXPECT_TRUE(is_diuniform(zn(8)));
  auto w = diuniformity_witness(zn(6));
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_fully_invariant(*w));
}

TEST(Retractable, Examples) {
  EXPECT_TRUE(is_retractable(zn(4)));
  auto S = simple_modules(make_cyclic_ring(4))[0];
  EXPECT_TRUE(is_retractable(sum({S, zn(4)})));
  EXPECT_THROW(sum({zn(2), zn(4)}), InvalidArgument);
}

TEST(EndomorphismRing, TableMatchesComposition) {
  auto M = sum({zn(2), zn(2)});
  auto E = endomorphism_ring(M);
  ASSERT_EQ(E.maps.size(), 16u);
  for (Elem a = 0; a < 16; ++a)
    for (Elem b = 0; b < 16; ++b) {
      auto ab = compose(E.maps[a], E.maps[b]);
      EXPECT_EQ(E.maps[E.ring.mul(a, b)].table(), ab.table());
    }
  EXPECT_TRUE(is_prime_ring(E.ring));
  EXPECT_TRUE(is_prime_endomorphism_ring(M));
}

TEST(EndomorphismRing, Z4IsNotPrimeZ3Is) {
  EXPECT_FALSE(is_prime_endomorphism_ring(zn(4)));
  EXPECT_TRUE(is_prime_endomorphism_ring(zn(3)));
  EXPECT_FALSE(is_prime_ring(make_cyclic_ring(4)));
  EXPECT_TRUE(is_prime_ring(make_matrix_ring(make_cyclic_ring(2), 2)));
}

TEST(Family, FirstAndFullyFirst) {
  auto Z4 = zn(4);
  auto ideals = enumerate_ideals(make_cyclic_ring(4), Sidedness::two_sided);
  std::vector<Preradical> soc{Preradical::soc()};
  EXPECT_TRUE(is_A_first(Z4, soc));
  std::vector<Preradical> trad{Preradical::trad(ideals[1])};
  auto w = A_first_witness(Z4, trad);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->submodule.to_string(), "{0,2}");
  // Prime modules are exactly the first modules for all t-radicals.
  for (const auto& u : build_corpus())
    for (const auto& M : u.modules) {
      std::vector<Preradical> fam;
      for (const auto& I : enumerate_ideals(u.ring, Sidedness::two_sided)) fam.push_back(Preradical::trad(I));
      EXPECT_EQ(is_A_first(M, fam), is_prime_module(M)) << M.description();
    }
}

TEST(Classes, IdentitiesHoldOnCorpus) {
  for (const auto& u : build_corpus()) {
    std::vector<Preradical> fam{Preradical::soc(), Preradical::rad()};
    for (const auto& M : u.modules) {
      EXPECT_TRUE(class_identity_violations(M, fam).empty()) << M.description();
      EXPECT_NO_THROW(class_membership(M, fam));
    }
  }
}

TEST(Report, AllVerdictsPresent) {
  auto rep = firstness_report(zn(4));
  EXPECT_EQ(rep.verdicts.size(), 6u);
  EXPECT_FALSE(rep.verdict("bjkn_prime"));
  EXPECT_TRUE(rep.verdict("rpid_first"));
  EXPECT_TRUE(rep.verdict("diuniform"));
  EXPECT_FALSE(rep.witnesses.empty());
}
