#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "davkit/asymptotics.hpp"
#include "davkit/codes.hpp"
#include "davkit/errors.hpp"
#include "doctest.h"

using namespace davkit;
using boost::multiprecision::cpp_int;

namespace {

// counts k-dimensional subspaces of F_p^n by canonicalizing the row space
// of every rank-k k x n matrix
long long brute_subspace_count(int n, int k, int p) {
  if (k == 0) return 1;
  long long total = 1;
  for (int i = 0; i < k * n; ++i) total *= p;
  std::set<std::vector<int>> seen;
  for (long long code = 0; code < total; ++code) {
    FpMatrix m(p, k, n);
    long long rest = code;
    for (int& x : m.a) {
      x = static_cast<int>(rest % p);
      rest /= p;
    }
    if (rref_in_place(m) < k) continue;
    seen.insert(m.a);
  }
  return static_cast<long long>(seen.size());
}

double ratio_against_growth(int p, const std::vector<VmPoint>& traj) {
  double M = static_cast<double>(traj.size());
  return traj.back().V / (2 * std::log(p) * M / std::log(M));
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("entropy endpoints and domain") {
  CHECK(entropy_hp(2, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy_hp(3, 2.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy_hp(7, 6.0 / 7.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy_hp(3, 0.0) == 0.0);
  CHECK(entropy_hp(5, 0.2) > 0.0);
  CHECK(entropy_hp(5, 0.2) < 1.0);

  CHECK_THROWS_AS(entropy_hp(2, 0.51), DomainError);
  CHECK_THROWS_AS(entropy_hp(3, -0.001), DomainError);
  CHECK_THROWS_AS(entropy_hp(4, 0.1), NotPrimeError);
}

TEST_CASE("bounding functions are non-increasing rate profiles") {
  for (int p : {2, 3, 5, 7}) {
    double t = static_cast<double>(p - 1) / p;
    for (BoundKind kind :
         {BoundKind::hamming, BoundKind::elias, BoundKind::mrrw1}) {
      CHECK(bounding_fn_eval(kind, p, 0.0) ==
            doctest::Approx(1.0).epsilon(1e-9));
      double prev = 2.0;
      for (int i = 0; i <= 1000; ++i) {
        double x = t * i / 1000;
        double v = bounding_fn_eval(kind, p, x);
        CHECK(v >= -1e-9);
        CHECK(v <= 1.0 + 1e-9);
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
    }
    CHECK(bounding_fn_eval(BoundKind::elias, p, t) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(bounding_fn_eval(BoundKind::hamming, 3, 0.9), DomainError);
}

TEST_CASE("gaussian binomials count subspaces") {
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(4, 2, 3) == 130);

  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(gaussian_binomial(n, k, 2) == brute_subspace_count(n, k, 2));
      if (k <= 2)
        CHECK(gaussian_binomial(n, k, 3) == brute_subspace_count(n, k, 3));
    }

  for (int p : {2, 3, 5})
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(gaussian_binomial(n, k, p) == gaussian_binomial(n, n - k, p));

  // [30 15]_3 overflows every fixed width; spot the leading digits
  std::string big = gaussian_binomial(30, 15, 3).str();
  CHECK(big.size() == 108);

  CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), BadArgsError);
  CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), BadArgsError);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 6), NotPrimeError);
}

TEST_CASE("random-coding lower coefficients") {
  CHECK(lower_coeff(3, 2) == doctest::Approx(1.365));
  CHECK(lower_coeff(5, 2) == doctest::Approx(1.464));
  CHECK(lower_coeff(7, 2) == doctest::Approx(1.517));
  for (int p : {2, 3, 5, 7})
    CHECK(lower_coeff(p, 1) == doctest::Approx(1.0));

  // the formula value at (5, 4); tables elsewhere drop the leading 2
  CHECK(lower_coeff(5, 4) == doctest::Approx(2.272));

  CHECK_THROWS_AS(lower_coeff(3, 0), BadArgsError);
  CHECK_THROWS_AS(lower_coeff(9, 2), NotPrimeError);
}

TEST_CASE("single recursion steps") {
  UpperStep s3 = next_upper_coeff(3, 1.001);
  CHECK(1.001 + s3.c == doctest::Approx(1.549).epsilon(1e-9));
  CHECK(s3.kind == BoundKind::mrrw1);

  UpperStep s7 = next_upper_coeff(7, 1.001);
  CHECK(1.001 + s7.c == doctest::Approx(1.779).epsilon(1e-9));
  CHECK(s7.kind == BoundKind::mrrw1);

  // restricting the function set can only weaken the step
  UpperStep ham = next_upper_coeff(3, 1.001, {BoundKind::hamming});
  CHECK(ham.c > s3.c);
  CHECK(ham.kind == BoundKind::hamming);

  CHECK_THROWS_AS(next_upper_coeff(3, 0.9), BadArgsError);
  CHECK_THROWS_AS(next_upper_coeff(3, 1.5, {}), BadArgsError);
}

TEST_CASE("coefficient tables match the frozen chains") {
  struct Expect {
    int p;
    std::vector<long long> lower, upper;  // milli-units
    std::vector<BoundKind> kinds;
  };
  const std::vector<Expect> want = {
      {3,
       {1365, 1693, 2000, 2290},
       {1549, 2085, 2610, 3112},
       {BoundKind::mrrw1, BoundKind::mrrw1, BoundKind::elias,
        BoundKind::elias}},
      {5,
       {1464, 1882, 2272, 2643},
       {1699, 2397, 3065, 3707},
       {BoundKind::mrrw1, BoundKind::mrrw1, BoundKind::elias,
        BoundKind::elias}},
      {7,
       {1517, 1982, 2418, 2833},
       {1779, 2563, 3311, 4032},
       {BoundKind::mrrw1, BoundKind::elias, BoundKind::elias,
        BoundKind::elias}},
  };

  for (const Expect& e : want) {
    CoeffTable t = coeff_table(e.p, 5);
    REQUIRE(t.rows.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(t.rows[i].m == i + 2);
      CHECK(std::llround(t.rows[i].lower * 1000) == e.lower[i]);
      CHECK(std::llround(t.rows[i].upper * 1000) == e.upper[i]);
      CHECK(t.rows[i].kind == e.kinds[i]);
      CHECK(t.rows[i].lower <= t.rows[i].upper);
      if (i) CHECK(t.rows[i - 1].upper < t.rows[i].upper);
    }
  }

  CHECK(coeff_table(5, 4).notes.size() == 1);
  CHECK(coeff_table(5, 3).notes.empty());
  CHECK(coeff_table(3, 5).notes.empty());

  std::string csv = coeff_table_csv(coeff_table(3, 3));
  CHECK(csv.find("m,lower,upper,kind\n") == 0);
  CHECK(csv.find("2,1.365,1.549,mrrw1\n") != std::string::npos);
  CHECK(csv.find("3,1.693,2.085,mrrw1\n") != std::string::npos);

  CHECK_THROWS_AS(coeff_table(3, 1), BadArgsError);
}

TEST_CASE("v_m trajectory") {
  auto traj = vm_sequence(3, 1000);
  REQUIRE(traj.size() == 1000);
  CHECK(traj[0].v == 1.0);
  CHECK(traj[0].V == 1.0);
  CHECK(traj[1].v == doctest::Approx(0.693333516).epsilon(1e-6));
  CHECK(traj[9].v == doctest::Approx(0.446944815).epsilon(1e-6));
  CHECK(traj[99].V == doctest::Approx(36.6158).epsilon(1e-4));
  CHECK(traj.back().V == doctest::Approx(265.1587).epsilon(1e-4));

  double cap = 4.0 / 3.0;
  double run = 0;
  for (const VmPoint& pt : traj) {
    CHECK(pt.v > 0);
    CHECK(pt.v <= cap + 1e-12);
    CHECK(pt.v <= 1.0 + 1e-12);  // v_1 is the largest term
    run += pt.v;
    CHECK(pt.V == doctest::Approx(run).epsilon(1e-12));
  }

  // re-substituted roots satisfy the defining equation
  for (int m : {1, 9, 99, 999}) {
    double prevV = traj[m].V - traj[m].v;
    double lhs = 1.0 / (prevV + traj[m].v);
    double rhs = entropy_hp(3, traj[m].v / (2 * (prevV + traj[m].v)));
    CHECK(std::fabs(lhs - rhs) < 1e-8);
  }

  double r100 = ratio_against_growth(3, vm_sequence(3, 100));
  CHECK(r100 == doctest::Approx(0.767433).epsilon(1e-4));

  auto traj5 = vm_sequence(5, 50);
  for (const VmPoint& pt : traj5) CHECK(pt.v <= 8.0 / 5.0 + 1e-12);

  CHECK_THROWS_AS(vm_sequence(3, 1), BadArgsError);
  CHECK_THROWS_AS(vm_sequence(10, 4), NotPrimeError);
}

TEST_CASE("random code sampling against the union bound") {
  ExistenceReport rep = random_code_existence_check(3, 5, 6, 2, 2000, 42);
  CHECK(rep.union_bound ==
        doctest::Approx(0.2646107470).epsilon(1e-8));
  CHECK(rep.guarantee);
  CHECK(rep.trials == 2000);
  CHECK(rep.inadmissible >= 0);
  CHECK(rep.observed <= rep.union_bound + 3 * rep.sigma);

  ExistenceReport again = random_code_existence_check(3, 5, 6, 2, 2000, 42);
  CHECK(again.inadmissible == rep.inadmissible);

  // with k >= 1 and m = 1 every code contains a nonzero word
  ExistenceReport one = random_code_existence_check(3, 2, 3, 1, 300, 7);
  CHECK(one.observed == 1.0);
  CHECK(!one.guarantee);  // bound is 3, so nothing is promised

  CHECK_THROWS_AS(random_code_existence_check(3, 8, 9, 2, 10, 1),
                  TooLargeError);
  CHECK_THROWS_AS(random_code_existence_check(13, 3, 4, 2, 10, 1),
                  TooLargeError);
  CHECK_THROWS_AS(random_code_existence_check(6, 2, 3, 1, 10, 1),
                  NotPrimeError);
  CHECK_THROWS_AS(random_code_existence_check(3, 4, 3, 1, 10, 1),
                  BadArgsError);
}

}  // TEST_SUITE
