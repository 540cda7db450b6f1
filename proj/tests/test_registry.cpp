#include "davkit/engine.hpp"
#include "davkit/registry.hpp"
#include "doctest.h"

using namespace davkit;

TEST_SUITE("registry") {

TEST_CASE("lookups hit the recorded rows") {
  Registry reg;

  auto v = reg.lookup("s_le2(C3^4)");
  REQUIRE(v.has_value());
  CHECK(v->exact());
  CHECK(v->lo == 41);

  auto b = reg.lookup("s_le3(C5^5)");
  REQUIRE(b.has_value());
  CHECK(!b->exact());
  CHECK(b->lo == 67);
  CHECK(b->hi == 89);

  auto eta7 = reg.lookup("s_le3(C3^7)");
  REQUIRE(eta7.has_value());
  CHECK(eta7->lo == 113);
  CHECK(eta7->hi == 137);

  CHECK(!reg.lookup("s_le9(C11^2)").has_value());
}

TEST_CASE("s lookups clamp into the stable tail") {
  Registry reg;
  Group g34 = Group::elementary(3, 4);
  auto tail = reg.lookup_s(g34, 9);
  REQUIRE(tail.has_value());
  CHECK(tail->lo == 5);  // rank + 1 from d = 5 on

  CHECK(reg.lookup_s(g34, 2)->lo == 41);
  CHECK(reg.lookup_s(g34, 4)->lo == 6);

  // binary closed forms are rows like any other
  Group g25 = Group::elementary(2, 5);
  CHECK(reg.lookup_s(g25, 2)->lo == 32);
  CHECK(reg.lookup_s(g25, 3)->lo == 17);
  CHECK(reg.lookup_s(g25, 5)->lo == 7);

  // gaps in the tables stay gaps
  CHECK(!reg.lookup_s(Group::elementary(3, 7), 5).has_value());
  CHECK(!reg.lookup_s(Group::cyclic(6), 2).has_value());
}

TEST_CASE("multi-wise ladders") {
  Registry reg;
  CHECK(reg.lookup_d(Group::cyclic(5), 4)->lo == 8);
  CHECK(reg.lookup_d(Group::elementary(3, 2), 4)->lo == 9);
  CHECK(reg.lookup_d(Group::elementary(7, 2), 5)->lo == 13);
  CHECK(reg.lookup_d(Group::elementary(3, 3), 6)->lo == 16);
  CHECK(reg.lookup("D_m0(C3^3)")->lo == 4);

  auto ma = reg.lookup("mA(C3^3)");
  REQUIRE(ma.has_value());
  CHECK(ma->lo == 5);
  CHECK(ma->misprint);
}

TEST_CASE("registry is internally consistent") {
  Registry reg;
  CHECK(reg.self_check().empty());
  for (const auto& kv : reg.entries()) {
    CHECK(!kv.id.empty());
    CHECK(!kv.source.empty());
    CHECK(kv.lo <= kv.hi);
  }
}

TEST_CASE("cross check statuses") {
  Registry reg;
  std::map<std::string, long long> computed{
      {"s_le3(C3^3)", 5},    // exact hit
      {"s_le3(C5^5)", 70},   // inside the recorded interval
      {"s_le3(C3^4)", 12},   // wrong on purpose
      {"mA(C3^3)", 4},       // derived value differs from the printed one
      {"D_m9(C13)", 3},      // nothing recorded
  };
  auto report = reg.cross_check(computed);
  REQUIRE(report.size() == computed.size());
  auto status_of = [&](const std::string& id) {
    for (const auto& line : report)
      if (line.id == id) return line.status;
    return CheckStatus::not_recorded;
  };
  CHECK(status_of("s_le3(C3^3)") == CheckStatus::pass);
  CHECK(status_of("s_le3(C5^5)") == CheckStatus::in_range);
  CHECK(status_of("s_le3(C3^4)") == CheckStatus::fail);
  CHECK(status_of("mA(C3^3)") == CheckStatus::noted_misprint);
  CHECK(status_of("D_m9(C13)") == CheckStatus::not_recorded);
  CHECK(check_status_str(CheckStatus::in_range) == "IN-RANGE");
}

TEST_CASE("registry rows match live engine values") {
  Registry reg;
  // s-values the layered search settles in milliseconds
  for (auto [p, r, d] : {std::array<int, 3>{2, 2, 2},
                         {2, 3, 2},
                         {3, 2, 2},
                         {3, 3, 3},
                         {5, 2, 2},
                         {5, 3, 3}}) {
    Group g = Group::elementary(p, r);
    ConstantValue got = s_le_d(g, full_weights(g), d, 16);
    auto kv = reg.lookup_s(g, d);
    REQUIRE(kv.has_value());
    REQUIRE(got.is_finite());
    CHECK(got.value == kv->lo);
  }

  // multi-wise ladders for the cyclic and rank-two shapes
  Group c3 = Group::cyclic(3);
  auto prof3 = d_profile(c3, full_weights(c3), 4, 10);
  for (int m = 1; m <= 4; ++m)
    CHECK(prof3[m - 1] == ConstantValue::fin(reg.lookup_d(c3, m)->lo));

  Group c32 = Group::elementary(3, 2);
  auto prof32 = d_profile(c32, full_weights(c32), 3, 9);
  for (int m = 1; m <= 3; ++m)
    CHECK(prof32[m - 1] == ConstantValue::fin(reg.lookup_d(c32, m)->lo));
}

}  // TEST_SUITE
