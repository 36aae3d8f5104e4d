#include <gtest/gtest.h>

#include "modlab/modlab.hpp"

using namespace modlab;

namespace {

const std::vector<Universe>& corpus() {
  static const auto c = build_corpus();
  return c;
}

const Universe& ring_universe(const std::string& desc) {
  for (const auto& u : corpus())
    if (u.ring.description() == desc) return u;
  throw InvalidArgument(desc);
}

RingClassification classify(const std::string& desc) {
  const auto& u = ring_universe(desc);
  return classify_ring(u.ring, u);
}

} // namespace

TEST(Classify, CyclicFour) {
  auto c = classify("cyclic(4)");
  EXPECT_FALSE(c.is_simple);
  EXPECT_FALSE(c.is_semisimple);
  EXPECT_TRUE(c.is_left_local);
  EXPECT_TRUE(c.is_left_semiartinian_on_universe);
  EXPECT_FALSE(c.is_V_ring);
  ASSERT_TRUE(c.baer_witness);
  EXPECT_EQ(c.baer_witness->left_ideal.carrier().to_string(), "{0,2}");
  EXPECT_TRUE(c.is_BKN_on_universe);
}

TEST(Classify, MatrixRing) {
  auto c = classify("matrix(cyclic(2),2)");
  EXPECT_TRUE(c.is_simple);
  EXPECT_TRUE(c.is_semisimple);
  EXPECT_TRUE(c.is_homogeneous_semisimple);
  EXPECT_TRUE(c.is_left_local);
  EXPECT_TRUE(c.is_V_ring);
  EXPECT_TRUE(c.is_BKN_on_universe);
  EXPECT_TRUE(c.witnesses.empty());
}

TEST(Classify, ProductAndCyclicSix) {
  for (const auto* r : {"product(cyclic(2),cyclic(2))", "cyclic(6)"}) {
    auto c = classify(r);
    EXPECT_TRUE(c.is_semisimple) << r;
    EXPECT_FALSE(c.is_homogeneous_semisimple) << r;
    EXPECT_FALSE(c.is_left_local) << r;
    EXPECT_TRUE(c.is_V_ring) << r;
    EXPECT_FALSE(c.is_BKN_on_universe) << r;
  }
}

TEST(Classify, WitnessForEveryFalseFlag) {
  for (const auto& u : corpus()) {
    auto c = classify_ring(u.ring, u);
    for (const auto& [flag, value] : c.flags()) {
      if (value) continue;
      bool found = false;
      for (const auto& w : c.witnesses) found = found || w.first == flag;
      EXPECT_TRUE(found) << u.ring.description() << " " << flag;
    }
  }
}

TEST(Theorems, AllVerdictsAgreeOnCorpus) {
  for (const auto& u : corpus())
    for (const auto& id : theorem_ids()) {
      auto v = verify_theorem(id, u.ring, u);
      EXPECT_TRUE(v.agree) << id << " on " << u.ring.description();
      EXPECT_EQ(v.universe_size, u.size());
      EXPECT_FALSE(v.sides.empty());
    }
}

TEST(Theorems, UnknownIdRejected) {
  const auto& u = ring_universe("cyclic(2)");
  EXPECT_THROW(verify_theorem("T99", u.ring, u), InvalidArgument);
}

TEST(Theorems, LeftExactFirstnessSplitsLocalFromNonLocal) {
  auto pos = verify_theorem("T14", ring_universe("cyclic(4)").ring, ring_universe("cyclic(4)"));
  for (const auto& s : pos.sides) EXPECT_TRUE(s.value);
  auto neg = verify_theorem("T14", ring_universe("product(cyclic(2),cyclic(2))").ring,
                            ring_universe("product(cyclic(2),cyclic(2))"));
  for (const auto& s : neg.sides) EXPECT_FALSE(s.value);
  EXPECT_FALSE(neg.witnesses.empty());
}

TEST(Theorems, BknConverseFailsOnZ4) {
  const auto& u = ring_universe("cyclic(4)");
  auto v = verify_theorem("Perror1", u.ring, u);
  EXPECT_EQ(v.kind, "implication");
  EXPECT_FALSE(v.sides[0].value);
  EXPECT_TRUE(v.sides[1].value);
  EXPECT_TRUE(v.agree);
}

TEST(Theorems, SimpleInHullIsSuperfluous) {
  auto Z4 = regular_module(make_cyclic_ring(4));
  EXPECT_TRUE(simple_superfluous_in_hull(socle(Z4)));
  auto Z8 = regular_module(make_cyclic_ring(8));
  EXPECT_TRUE(simple_superfluous_in_hull(socle(Z8)));
  // The simple Z4-module is not injective, and the socle of Z4 + Z4 is not simple.
  auto S = simple_modules(make_cyclic_ring(4))[0];
  EXPECT_THROW(simple_superfluous_in_hull(whole_module(S)), InvalidArgument);
  auto Z4Z4 = direct_sum({Z4, Z4}).module;
  EXPECT_THROW(simple_superfluous_in_hull(socle(Z4Z4)), InvalidArgument);
}

TEST(Witnesses, DiuniformNotBjknFoundOnZ4) {
  auto w = find_diuniform_not_bjkn(ring_universe("cyclic(4)"));
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_diuniform(*w));
  EXPECT_FALSE(is_bjkn_prime(*w));
}

TEST(Witnesses, PrimeNotBjknAbsentOnCorpus) {
  for (const auto& u : corpus()) EXPECT_FALSE(find_prime_not_bjkn(u).has_value()) << u.ring.description();
}

TEST(Corpus, ShapeAndSize) {
  EXPECT_EQ(corpus().size(), 7u);
  EXPECT_GE(corpus_module_count(corpus()), 30u);
}
