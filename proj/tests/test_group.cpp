// test_group.cpp -- group construction, arithmetic, weights, sequences.

#include "doctest.h"

#include <algorithm>
#include <set>

#include "davkit/group.hpp"

using namespace davkit;

TEST_SUITE_BEGIN("group");

TEST_CASE("factor validation") {
  CHECK_THROWS_AS(Group({1}), BadFactorError);
  CHECK_THROWS_AS(Group({0, 2}), BadFactorError);
  CHECK_THROWS_AS(Group({-3}), BadFactorError);
  CHECK_THROWS_AS(Group({4, 2}), NonChainError);
  CHECK_THROWS_AS(Group({6, 3}), NonChainError);
  CHECK_THROWS_AS(Group({2, 3}), NonChainError);
  CHECK_NOTHROW(Group({2, 4}));
  CHECK_NOTHROW(Group({3, 3, 3}));
  CHECK_NOTHROW(Group(std::vector<int>{}));
}

TEST_CASE("order, exponent, rank") {
  Group g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.rank() == 2);
  CHECK_FALSE(g.is_elementary());

  Group e(Group::elementary(3, 2));
  CHECK(e.order() == 9);
  CHECK(e.exponent() == 3);
  CHECK(e.is_elementary());
  CHECK(e.prime() == 3);

  CHECK_FALSE(Group::cyclic(4).is_elementary());
  CHECK(Group::cyclic(5).is_elementary());

  Group t((std::vector<int>{}));
  CHECK(t.order() == 1);
  CHECK(t.exponent() == 1);
  CHECK(t.is_trivial());
}

TEST_CASE("element arithmetic round trips") {
  for (const auto& fs :
       {std::vector<int>{6}, std::vector<int>{2, 4}, std::vector<int>{3, 3}}) {
    Group g(fs);
    for (Elem a = 0; a < g.order(); ++a) {
      CHECK(g.add(a, g.neg(a)) == g.zero());
      CHECK(g.from_coords(g.coords(a)) == a);
      CHECK(g.scale(1, a) == a);
      CHECK(g.scale(g.exponent() + 1, a) == a);
      CHECK(g.scale(-1, a) == g.neg(a));
      for (Elem b = 0; b < g.order(); ++b) CHECK(g.add(a, b) == g.add(b, a));
    }
  }
}

TEST_CASE("element orders") {
  Group g({6});
  CHECK(g.order_of(g.from_coords({0})) == 1);
  CHECK(g.order_of(g.from_coords({1})) == 6);
  CHECK(g.order_of(g.from_coords({2})) == 3);
  CHECK(g.order_of(g.from_coords({3})) == 2);

  Group h({2, 4});
  CHECK(g.order_of(0) == 1);
  CHECK(h.order_of(h.from_coords({1, 0})) == 2);
  CHECK(h.order_of(h.from_coords({1, 2})) == 2);
  CHECK(h.order_of(h.from_coords({0, 1})) == 4);
  CHECK(h.order_of(h.from_coords({1, 1})) == 4);
}

TEST_CASE("subgroup ids name cyclic subgroups") {
  Group g({3, 3});
  Elem e1 = g.from_coords({1, 0});
  Elem e2 = g.from_coords({0, 1});
  CHECK(g.subgroup_id(e1) == g.subgroup_id(g.scale(2, e1)));
  CHECK(g.subgroup_id(e1) != g.subgroup_id(e2));
  CHECK(g.subgroup_id(g.zero()) == 0);

  // 13 lines in C_3^3: one id per cyclic subgroup of order 3
  Group h({3, 3, 3});
  std::set<Elem> ids;
  for (Elem a = 1; a < h.order(); ++a) ids.insert(h.subgroup_id(a));
  CHECK(ids.size() == 13);

  Group c4({4});
  CHECK(c4.subgroup_id(1) == c4.subgroup_id(3));
  CHECK(c4.subgroup_id(1) != c4.subgroup_id(2));
}

TEST_CASE("weight reduction") {
  Group g({5});
  WeightSet w = reduce_weights({1, -1}, g);
  CHECK(w.reduced == std::vector<int>{1, 4});
  CHECK_FALSE(w.trivial);
  CHECK(w.mult_closed);  // 4*4 = 16 = 1 mod 5

  WeightSet t = reduce_weights({5}, g);
  CHECK(t.trivial);

  WeightSet nc = reduce_weights({1, 2}, g);
  CHECK_FALSE(nc.mult_closed);  // 2*2 = 4 missing

  CHECK_THROWS_AS(reduce_weights({}, g), EmptyWeightsError);
}

TEST_CASE("full weights multiplicatively closed exactly for prime exponent") {
  CHECK(full_weights(Group::cyclic(5)).mult_closed);
  CHECK(full_weights(Group::elementary(3, 2)).mult_closed);
  CHECK_FALSE(full_weights(Group::cyclic(4)).mult_closed);  // 2*2 = 0 mod 4
  CHECK_FALSE(full_weights(Group::cyclic(6)).mult_closed);
  CHECK(full_weights(Group::cyclic(2)).reduced == std::vector<int>{1});
}

TEST_CASE("weight keywords") {
  Group g({3, 3});
  CHECK(parse_weights("full", g).reduced == std::vector<int>{1, 2});
  CHECK(parse_weights("pm", g).reduced == std::vector<int>{1, 2});
  CHECK(parse_weights("classical", g).reduced == std::vector<int>{1});
  CHECK(parse_weights("1,-1", g).reduced == std::vector<int>{1, 2});
  CHECK_THROWS_AS(parse_weights("1,x", g), FormatError);
  CHECK(weights_are_full(parse_weights("full", g), g));
  CHECK_FALSE(weights_are_full(parse_weights("classical", g), g));
  CHECK(weights_are_full(parse_weights("classical", Group::cyclic(2)),
                         Group::cyclic(2)));
}

TEST_CASE("sequences are canonically sorted multisets") {
  Group g({3, 3});
  Seq s = Seq::from_coord_lists(g, {{2, 1}, {1, 0}, {1, 0}, {0, 1}});
  CHECK(s.length() == 4);
  CHECK(std::is_sorted(s.entries().begin(), s.entries().end()));
  CHECK(s.multiplicity(g.from_coords({1, 0})) == 2);
  CHECK(s.multiplicity(g.from_coords({2, 2})) == 0);

  Seq sub = Seq::from_coord_lists(g, {{1, 0}, {2, 1}});
  CHECK(s.contains(sub));
  Seq rest = s.removed(sub);
  CHECK(rest.length() == 2);
  CHECK_FALSE(rest.contains(sub));
  CHECK_THROWS_AS(rest.removed(sub), BadArgsError);

  // negative coordinates reduce mod the factors
  CHECK(g.from_coords({-1, 0}) == g.from_coords({2, 0}));
}

TEST_CASE("weighted sums of a sequence") {
  Group g({3, 3});
  Elem e1 = g.from_coords({1, 0});

  // single entry: all weight multiples
  Seq one(std::vector<Elem>{e1});
  auto ws = weighted_sums(one, full_weights(g), g);
  CHECK(ws == std::vector<Elem>{e1, g.scale(2, e1)});

  // e1 twice with weights {1,2}: 1+1, 1+2, 2+2 give the whole line
  Seq two(std::vector<Elem>{e1, e1});
  auto ws2 = weighted_sums(two, full_weights(g), g);
  CHECK(ws2 == std::vector<Elem>{g.zero(), e1, g.scale(2, e1)});

  // an element of full order never hits zero with one non-trivial weight
  for (int w = 1; w < 3; ++w) {
    auto s = weighted_sums(one, reduce_weights({w}, g), g);
    CHECK(std::find(s.begin(), s.end(), g.zero()) == s.end());
  }

  CHECK(weighted_sums(Seq(), full_weights(g), g) ==
        std::vector<Elem>{g.zero()});
}

TEST_CASE("printing") {
  CHECK(Group({3, 3}).str() == "C3^2");
  CHECK(Group({2, 4}).str() == "C2 x C4");
  CHECK(Group({2, 2, 4}).str() == "C2^2 x C4");
  CHECK(Group(std::vector<int>{}).str() == "C1");
  Group g({3, 3});
  CHECK(g.elem_str(g.from_coords({1, 2})) == "(1,2)");
  Seq s = Seq::from_coord_lists(g, {{1, 0}, {0, 1}});
  CHECK(s.str(g) == "(1,0) (0,1)");
}

TEST_SUITE_END();
