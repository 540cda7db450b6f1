// test_engine.cpp -- zero-sum search engine against the brute-force oracle
// and frozen small values.

#include "doctest.h"

#include <random>
#include <set>

#include "davkit/engine.hpp"
#include "oracle.hpp"

using namespace davkit;

TEST_SUITE_BEGIN("engine");

TEST_CASE("e_w basics") {
  // full weights always pair 1 with exp-1
  CHECK(e_w_constant(Group::elementary(3, 3), full_weights(Group::elementary(3, 3))) == 2);
  CHECK(e_w_constant(Group::cyclic(5), full_weights(Group::cyclic(5))) == 2);
  CHECK(e_w_constant(Group::cyclic(7), pm_weights(Group::cyclic(7))) == 2);
  // {1,2} mod 5: shortest is 1+2+2
  CHECK(e_w_constant(Group::cyclic(5), reduce_weights({1, 2}, Group::cyclic(5))) == 3);
  // classical weights need a full cycle
  CHECK(e_w_constant(Group::cyclic(7), classical_weights(Group::cyclic(7))) == 7);
  CHECK(e_w_constant(Group::cyclic(6), classical_weights(Group::cyclic(6))) == 6);
  CHECK(e_w_constant(Group({2, 4}), reduce_weights({1, 3}, Group({2, 4}))) == 2);

  Group c3 = Group::cyclic(3);
  CHECK_THROWS_AS(e_w_constant(c3, reduce_weights({3}, c3)), TrivialWeightsError);
}

TEST_CASE("e_w never exceeds the exponent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int ex = 2 + static_cast<int>(rng() % 11);
    Group g = Group::cyclic(ex);
    std::vector<long long> raw;
    for (int i = 0; i < 3; ++i) {
      long long wv = 1 + static_cast<long long>(rng() % (ex - 1));
      raw.push_back(wv);
    }
    WeightSet w = reduce_weights(raw, g);
    int e = e_w_constant(g, w);
    CHECK(e >= 1);
    CHECK(e <= ex);
    // cross-check: e is the least k with a zero k-combination
    auto zl = zero_weight_lengths(g, w, ex);
    REQUIRE_FALSE(zl.empty());
    CHECK(zl.front() == e);
  }
}

TEST_CASE("zero_weight_lengths") {
  Group c5 = Group::cyclic(5);
  CHECK(zero_weight_lengths(c5, reduce_weights({1, 2}, c5), 6) ==
        std::vector<int>{3, 4, 5, 6});
  Group c3 = Group::cyclic(3);
  CHECK(zero_weight_lengths(c3, classical_weights(c3), 7) ==
        std::vector<int>{3, 6});
  // trivial weights reach zero at every length
  CHECK(zero_weight_lengths(c3, reduce_weights({0, 1}, c3), 3) ==
        std::vector<int>{1, 2, 3});
}

TEST_CASE("shortest zero-subsum, small frozen cases") {
  Group g = Group::elementary(3, 2);
  WeightSet w = full_weights(g);
  Elem e1 = g.from_coords({1, 0});
  Elem e2 = g.from_coords({0, 1});

  // two independent lines admit nothing
  CHECK_FALSE(shortest_zero_subsum(Seq({e1, e2}), w, g).has_value());
  // a line taken twice dies at length 2: e1 + 2(2 e1) = 5 e1 = 2 e1 ... 1*e1 + 1*(2e1) = 0
  auto wit = shortest_zero_subsum(Seq({e1, g.scale(2, e1)}), w, g);
  REQUIRE(wit.has_value());
  CHECK(wit->support.length() == 2);
  CHECK(witness_valid(*wit, Seq({e1, g.scale(2, e1)}), w, g));

  // classical C_3: three ones
  Group c3 = Group::cyclic(3);
  Seq ones(std::vector<Elem>{1, 1, 1});
  auto w3 = shortest_zero_subsum(ones, classical_weights(c3), c3);
  REQUIRE(w3.has_value());
  CHECK(w3->support.length() == 3);
  CHECK(witness_valid(*w3, ones, classical_weights(c3), c3));

  // length cap cuts the search off
  CHECK_FALSE(shortest_zero_subsum(ones, classical_weights(c3), c3, 2).has_value());
}

TEST_CASE("shortest zero-subsum matches the oracle on random sequences") {
  std::mt19937 rng(11);
  Group g({2, 4});
  WeightSet w = reduce_weights({1, 3}, g);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<Elem> entries;
    for (int i = 0; i < n; ++i)
      entries.push_back(static_cast<Elem>(rng() % g.order()));
    Seq s(entries);
    auto wit = shortest_zero_subsum(s, w, g);
    int naive = oracle::shortest_subsum_len(g, w, s.entries());
    if (naive < 0) {
      CHECK_FALSE(wit.has_value());
    } else {
      REQUIRE(wit.has_value());
      CHECK(wit->support.length() == naive);
      CHECK(witness_valid(*wit, s, w, g));
    }
  }
}

TEST_CASE("max packing matches the oracle on random sequences") {
  std::mt19937 rng(13);
  for (auto fs : {std::vector<int>{3, 3}, std::vector<int>{8}}) {
    Group g(fs);
    WeightSet w = fs.size() == 2 ? full_weights(g) : reduce_weights({1, 3}, g);
    for (int trial = 0; trial < 150; ++trial) {
      int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Elem> entries;
      for (int i = 0; i < n; ++i)
        entries.push_back(static_cast<Elem>(rng() % g.order()));
      Seq s(entries);
      int naive = oracle::max_packing(g, w, s.entries());
      CHECK(max_packing_count(s, w, g, n + 1) == naive);
      if (naive >= 1) {
        auto pk = max_disjoint_packing(s, w, g, naive);
        REQUIRE(pk.has_value());
        CHECK(packing_valid(*pk, s, w, g, naive));
      }
      CHECK_FALSE(max_disjoint_packing(s, w, g, naive + 1).has_value());
    }
  }
}

TEST_CASE("packing validation rejects malformed certificates") {
  Group g = Group::cyclic(3);
  WeightSet w = full_weights(g);
  Seq s(std::vector<Elem>{1, 1, 2});
  // (1,2) with weights (1,1) is a valid part
  ZeroSubsumWitness part{Seq(std::vector<Elem>{1, 2}), {1, 1}};
  CHECK(witness_valid(part, s, w, g));
  // weight outside the set
  CHECK_FALSE(witness_valid({Seq(std::vector<Elem>{1, 2}), {1, 3}}, s, w, g));
  // non-zero sum
  CHECK_FALSE(witness_valid({Seq(std::vector<Elem>{1, 1}), {1, 1}}, s, w, g));
  // support not inside the parent
  CHECK_FALSE(witness_valid({Seq(std::vector<Elem>{2, 2}), {1, 1}}, s, w, g));
  // overlapping parts blow the multiplicity budget
  PackingWitness pw{{part, part}};
  CHECK_FALSE(packing_valid(pw, s, w, g, 2));
  CHECK(packing_valid({{part}}, s, w, g, 1));
}

TEST_CASE("s-constants: frozen small values") {
  // s_{A,<=2} closed form 1 + (p^r-1)/(p-1) at desk sizes
  CHECK(s_le_d(Group::cyclic(3), full_weights(Group::cyclic(3)), 2, 10) ==
        ConstantValue::fin(2));
  CHECK(s_le_d(Group::elementary(3, 2), full_weights(Group::elementary(3, 2)), 2, 10) ==
        ConstantValue::fin(5));
  Group c22 = Group::elementary(2, 2);
  CHECK(s_le_d(c22, full_weights(c22), 2, 10) == ConstantValue::fin(4));
  Group c23 = Group::elementary(2, 3);
  CHECK(s_le_d(c23, full_weights(c23), 2, 12) == ConstantValue::fin(8));
  Group c333 = Group::elementary(3, 3);
  CHECK(s_le_d(c333, full_weights(c333), 3, 10) == ConstantValue::fin(5));
  Group c553 = Group::elementary(5, 3);
  CHECK(s_le_d(c553, full_weights(c553), 3, 8) == ConstantValue::fin(7));

  // infinite below the e_w threshold
  Group c7 = Group::cyclic(7);
  CHECK(s_le_d(c7, classical_weights(c7), 6, 50).is_infinite());
  CHECK(s_le_d(c7, classical_weights(c7), 7, 50) == ConstantValue::fin(7));
  CHECK(s_le_d(c333, full_weights(c333), 1, 50).is_infinite());

  // search limit exhaustion reports unknown, never a guess
  ConstantValue u = s_le_d(Group::elementary(3, 2),
                           full_weights(Group::elementary(3, 2)), 2, 3);
  CHECK(u.is_unknown());
  CHECK(u.value == 3);

  // trivial group: minimum constraint length
  Group t((std::vector<int>{}));
  CHECK(s_constant(t, reduce_weights({1}, t), {3, 5}, 10) ==
        ConstantValue::fin(3));

  CHECK_THROWS_AS(s_constant(c7, full_weights(c7), {}, 5), BadArgsError);
  CHECK_THROWS_AS(s_constant(c7, full_weights(c7), {0, 2}, 5), BadArgsError);
}

TEST_CASE("s-constants match the oracle, including exact-length sets") {
  Group c3 = Group::cyclic(3);
  WeightSet a3 = full_weights(c3);
  for (const std::set<int>& L :
       {std::set<int>{2}, std::set<int>{1, 2}, std::set<int>{3}, std::set<int>{2, 3}}) {
    std::vector<int> lv(L.begin(), L.end());
    ConstantValue got = s_constant(c3, a3, lv, 12);
    int naive = oracle::s_value(c3, a3, L, 12);
    if (naive < 0) {
      CHECK_FALSE(got.is_finite());
    } else {
      CHECK(got == ConstantValue::fin(naive));
    }
  }
  // a weight set that is not closed and not symmetric
  Group c5 = Group::cyclic(5);
  WeightSet w12 = reduce_weights({1, 2}, c5);
  for (int d = 3; d <= 4; ++d) {
    ConstantValue got = s_le_d(c5, w12, d, 12);
    std::set<int> L;
    for (int l = 1; l <= d; ++l) L.insert(l);
    int naive = oracle::s_value(c5, w12, L, 12);
    REQUIRE(naive > 0);
    CHECK(got == ConstantValue::fin(naive));
  }
  // constraint lengths beyond any realizable subsum are vacuous, not an error
  CHECK(s_constant(c3, a3, {40}, 6).is_unknown());
  CHECK(s_constant(c3, classical_weights(c3), {2, 40}, 12).is_infinite());
}

TEST_CASE("multi-wise Davenport constants: frozen and oracle-checked") {
  Group c3 = Group::cyclic(3);
  WeightSet a3 = full_weights(c3);
  auto prof = d_profile(c3, a3, 3, 10);
  REQUIRE(prof.size() == 3);
  CHECK(prof[0] == ConstantValue::fin(2));
  CHECK(prof[1] == ConstantValue::fin(4));
  CHECK(prof[2] == ConstantValue::fin(6));

  Group c32 = Group::elementary(3, 2);
  auto prof2 = d_profile(c32, full_weights(c32), 2, 8);
  CHECK(prof2[0] == ConstantValue::fin(3));
  CHECK(prof2[1] == ConstantValue::fin(5));

  // classical C_2^2: Davenport 3, then pairs of repeats take over
  Group c22 = Group::elementary(2, 2);
  WeightSet w1 = classical_weights(c22);
  auto prof3 = d_profile(c22, w1, 2, 8);
  CHECK(prof3[0] == ConstantValue::fin(3));
  CHECK(prof3[1] == ConstantValue::fin(5));
  CHECK(oracle::d_value(c22, w1, 2, 8) == 5);

  // oracle agreement across weights on C_4
  Group c4 = Group::cyclic(4);
  for (auto raw : {std::vector<long long>{1}, std::vector<long long>{1, 3},
                   std::vector<long long>{2, 3}}) {
    WeightSet w = reduce_weights(raw, c4);
    for (int m = 1; m <= 2; ++m) {
      ConstantValue got = d_constant(c4, w, m, 12);
      int naive = oracle::d_value(c4, w, m, 12);
      REQUIRE(naive > 0);
      CHECK(got == ConstantValue::fin(naive));
    }
  }

  // trivial weights: every entry is its own zero-subsum
  WeightSet tw = reduce_weights({0, 1}, c4);
  auto proft = d_profile(c4, tw, 3, 6);
  CHECK(proft[0] == ConstantValue::fin(1));
  CHECK(proft[1] == ConstantValue::fin(2));
  CHECK(proft[2] == ConstantValue::fin(3));

  // limit exhaustion
  CHECK(d_constant(c3, a3, 3, 4).is_unknown());
  CHECK_THROWS_AS(d_constant(c3, a3, 0, 5), BadArgsError);
}

TEST_CASE("time budgets cut searches without corrupting results") {
  Group c12 = Group::cyclic(12);
  WeightSet w = classical_weights(c12);

  // an immediately expired budget reports no progress at all
  Group c16 = Group::elementary(2, 4);
  ConstantValue v = s_le_d(c16, full_weights(c16), 2, 48, 1e-12);
  CHECK(v.is_unknown());
  CHECK(v.value == 0);
  auto none = d_profile(c12, w, 3, 48, 1e-12);
  for (const ConstantValue& x : none) {
    CHECK(x.is_unknown());
    CHECK(x.value == 0);
  }

  // a generous budget leaves exact results untouched
  Group c9 = Group::elementary(3, 2);
  WeightSet f = full_weights(c9);
  CHECK(s_le_d(c9, f, 2, 64, 60.0) == ConstantValue::fin(5));
  auto prof = d_profile(c9, f, 3, 64, 60.0);
  CHECK(prof[0] == ConstantValue::fin(3));
  CHECK(prof[2] == ConstantValue::fin(7));

  // a tight budget settles a prefix and leaves an unknown tail; whatever
  // is settled must agree with the unbudgeted values D_m(C_12) = 12m
  auto part = d_profile(c12, w, 4, 48, 0.05);
  bool tail = false;
  for (int m = 1; m <= 4; ++m) {
    const ConstantValue& x = part[m - 1];
    if (x.is_unknown()) {
      tail = true;
      continue;
    }
    CHECK_FALSE(tail);  // finite entries form a prefix
    CHECK(x == ConstantValue::fin(12 * m));
  }
}

TEST_CASE("D and s interplay on one witness sequence") {
  // e1 e2 e3 (e1+e2) (e1+e3) (e2+e3) over C_3^3: shortest subsum has
  // length 3 and no two disjoint subsums fit
  Group g = Group::elementary(3, 3);
  WeightSet w = full_weights(g);
  Seq s = Seq::from_coord_lists(
      g, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto wit = shortest_zero_subsum(s, w, g);
  REQUIRE(wit.has_value());
  CHECK(wit->support.length() == 3);
  CHECK(max_packing_count(s, w, g, 3) == 1);
  auto one = max_disjoint_packing(s, w, g, 1);
  REQUIRE(one.has_value());
  CHECK(packing_valid(*one, s, w, g, 1));
  CHECK_FALSE(max_disjoint_packing(s, w, g, 2).has_value());
}

TEST_SUITE_END();
