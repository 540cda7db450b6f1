// asymptotics.hpp -- entropy, rate-bounding functions, and the numeric
// reproduction of the growth-coefficient tables.
//
// Everything here is double precision.  Table output follows the safe
// rounding convention: lower bounds round down, upper bounds round up,
// three decimals.  Bisections run to 1e-9 and the accepted root is then
// nudged past the strict inequality it has to satisfy.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace davkit {

// p-ary entropy on [0, (p-1)/p], extended by continuity with h_p(0) = 0.
// The maximum is 1, attained at the right endpoint.
double entropy_hp(int p, double x);

// The three asymptotic rate bounds, as non-increasing functions of the
// normalized minimum distance on [0, (p-1)/p].
enum class BoundKind { hamming, elias, mrrw1 };

std::string bound_kind_str(BoundKind k);

double bounding_fn_eval(BoundKind kind, int p, double x);

// Number of k-dimensional subspaces of F_p^n, exact.
boost::multiprecision::cpp_int gaussian_binomial(int n, int k, int p);

// Coefficient of r in the random-coding lower bound on D_{A,m}(C_p^r),
// log(p) * m / log(1 + m(p-1)), rounded down to three decimals.
double lower_coeff(int p, int m);

// One step of the upper-coefficient recursion: the smallest c with
// (b+c-1)/(b+c) > f(c/(b+c)) over the requested bounding functions,
// rounded up to three decimals, together with the function that won.
struct UpperStep {
  double c = 0;
  BoundKind kind = BoundKind::hamming;
};

UpperStep next_upper_coeff(int p, double b,
                           const std::vector<BoundKind>& kinds = {
                               BoundKind::hamming, BoundKind::elias,
                               BoundKind::mrrw1});

// Growth coefficients of D_{A,m}(C_p^r) in r, one row per m >= 2.
struct CoeffRow {
  int m = 0;
  double lower = 0;
  double upper = 0;
  BoundKind kind = BoundKind::hamming;
};

struct CoeffTable {
  int p = 0;
  std::vector<CoeffRow> rows;
  std::vector<std::string> notes;  // discrepancies against tabulated values
};

// Chains next_upper_coeff from b = 1.001 and pairs each row with the
// random-coding lower coefficient.
CoeffTable coeff_table(int p, int m_max);

// columns: m, lower, upper, kind
std::string coeff_table_csv(const CoeffTable& t);

// The v_m recursion: v_1 = 1 and each v_{m+1} solves
// 1/(V_m + v) = h_p(v / (2 (V_m + v))) with V_m the running sum.
struct VmPoint {
  double v = 0;
  double V = 0;
};

std::vector<VmPoint> vm_sequence(int p, int m_count);

// Empirical check of the random-code existence argument: sample uniform
// [n, n-r]_p codes and compare the m-inadmissible fraction against the
// union-bound estimate (1 + m(p-1))^n * p^{-rm}.
struct ExistenceReport {
  int p = 0, r = 0, n = 0, m = 0;
  long long trials = 0;
  long long inadmissible = 0;
  double observed = 0;     // inadmissible / trials
  double union_bound = 0;  // may exceed 1, in which case nothing is claimed
  double sigma = 0;        // binomial std deviation at the bound
  bool guarantee = false;  // union_bound < 1: admissible codes must exist
};

ExistenceReport random_code_existence_check(int p, int r, int n, int m,
                                            long long trials,
                                            unsigned long long seed);

}  // namespace davkit
