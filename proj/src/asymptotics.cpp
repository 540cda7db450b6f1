// asymptotics.cpp -- entropy, rate bounds, coefficient tables, v_m.

#include "davkit/asymptotics.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "davkit/codes.hpp"
#include "davkit/errors.hpp"
#include "davkit/numeric.hpp"

namespace davkit {

namespace {

bool prime(int p) {
  if (p < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!prime(p)) throw NotPrimeError("p = " + std::to_string(p));
}

double theta(int p) { return static_cast<double>(p - 1) / p; }

// entropy after the argument has been validated; tolerates the tiny
// excursions past the endpoints that the square roots above produce
double hp_clamped(int p, double x) {
  double t = theta(p);
  if (x < 1e-15) return 0.0;
  if (x > t) x = t;
  double lp = std::log(p);
  return -x * std::log(x / (p - 1)) / lp - (1 - x) * std::log1p(-x) / lp;
}

}  // namespace

double entropy_hp(int p, double x) {
  require_prime(p);
  double t = theta(p);
  if (x < -1e-12 || x > t + 1e-12)
    throw DomainError("x = " + std::to_string(x) + " outside [0, " +
                      std::to_string(t) + "]");
  return hp_clamped(p, x);
}

std::string bound_kind_str(BoundKind k) {
  switch (k) {
    case BoundKind::hamming:
      return "hamming";
    case BoundKind::elias:
      return "elias";
    default:
      return "mrrw1";
  }
}

double bounding_fn_eval(BoundKind kind, int p, double x) {
  require_prime(p);
  double t = theta(p);
  if (x < -1e-12 || x > t + 1e-12)
    throw DomainError("x = " + std::to_string(x) + " outside [0, " +
                      std::to_string(t) + "]");
  if (x < 0) x = 0;
  if (x > t) x = t;
  switch (kind) {
    case BoundKind::hamming:
      return 1 - hp_clamped(p, x / 2);
    case BoundKind::elias: {
      double inner = t * (t - x);
      if (inner < 0) inner = 0;
      return 1 - hp_clamped(p, t - std::sqrt(inner));
    }
    default: {
      double inner = (p - 1) * x * (1 - x);
      if (inner < 0) inner = 0;
      return hp_clamped(
          p, (p - 1 - (p - 2) * x - 2 * std::sqrt(inner)) / p);
    }
  }
}

boost::multiprecision::cpp_int gaussian_binomial(int n, int k, int p) {
  if (n < 0 || k < 0 || k > n) throw BadArgsError("need 0 <= k <= n");
  require_prime(p);
  using boost::multiprecision::cpp_int;
  cpp_int result = 1;
  cpp_int pn = 1;  // p^n
  for (int i = 0; i < n; ++i) pn *= p;
  cpp_int pk = 1;
  // every partial product is itself a subspace count, so each division
  // below is exact
  for (int i = 0; i < k; ++i) {
    cpp_int num = pn - 1;  // p^{n-i} - 1
    pk *= p;
    result = result * num / (pk - 1);
    pn /= p;
  }
  return result;
}

double lower_coeff(int p, int m) {
  require_prime(p);
  if (m < 1) throw BadArgsError("m must be >= 1");
  double v = std::log(p) * m /
             std::log1p(static_cast<double>(m) * (p - 1));
  return round_down_3(v);
}

namespace {

// the recursion inequality; past the right end of the domain every rate
// bound is vacuously 0
bool step_holds(int p, BoundKind kind, double b, double c) {
  double lhs = (b + c - 1) / (b + c);
  double x = c / (b + c);
  double fv = x >= theta(p) ? 0.0 : bounding_fn_eval(kind, p, x);
  return lhs > fv;
}

}  // namespace

UpperStep next_upper_coeff(int p, double b,
                           const std::vector<BoundKind>& kinds) {
  require_prime(p);
  if (b <= 1) throw BadArgsError("b must exceed 1");
  if (kinds.empty()) throw BadArgsError("no bounding functions given");

  bool found = false;
  double best = 0;
  BoundKind best_kind = kinds.front();
  for (BoundKind kind : kinds) {
    double lo = 1e-9, hi = 10.0;
    if (!step_holds(p, kind, b, hi)) continue;
    if (!step_holds(p, kind, b, lo)) {
      while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        (step_holds(p, kind, b, mid) ? hi : lo) = mid;
      }
    }
    if (!found || hi < best) {
      found = true;
      best = hi;
      best_kind = kind;
    }
  }
  if (!found)
    throw NoSolutionError("no c <= 10 satisfies the recursion at b = " +
                          std::to_string(b));
  return {round_up_3(best + 1e-9), best_kind};
}

CoeffTable coeff_table(int p, int m_max) {
  require_prime(p);
  if (m_max < 2) throw BadArgsError("m_max must be >= 2");

  CoeffTable t;
  t.p = p;
  double b = 1.001;
  for (int m = 2; m <= m_max; ++m) {
    UpperStep step = next_upper_coeff(p, b);
    b = std::round((b + step.c) * 1000.0) / 1000.0;
    t.rows.push_back({m, lower_coeff(p, m), b, step.kind});
  }
  if (p == 5 && m_max >= 4)
    t.notes.push_back(
        "lower coefficient at m = 4 is often tabulated as 1.272; the "
        "defining formula gives 2.272");
  return t;
}

std::string coeff_table_csv(const CoeffTable& t) {
  std::ostringstream out;
  out << "m,lower,upper,kind\n";
  char buf[64];
  for (const CoeffRow& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%d,%.3f,%.3f,%s\n", r.m, r.lower,
                  r.upper, bound_kind_str(r.kind).c_str());
    out << buf;
  }
  return out.str();
}

std::vector<VmPoint> vm_sequence(int p, int m_count) {
  require_prime(p);
  if (m_count < 2) throw BadArgsError("need at least two terms");

  std::vector<VmPoint> out;
  out.reserve(static_cast<std::size_t>(m_count));
  double V = 1.0;
  out.push_back({1.0, 1.0});
  double cap = 2 * theta(p);
  for (int m = 2; m <= m_count; ++m) {
    auto excess = [&](double v) {
      return 1.0 / (V + v) - hp_clamped(p, v / (2 * (V + v)));
    };
    double lo = 1e-15, hi = cap;
    if (!(excess(lo) > 0) || !(excess(hi) < 0))
      throw RootNotBracketedError("v_" + std::to_string(m));
    for (int it = 0; it < 100; ++it) {
      double mid = 0.5 * (lo + hi);
      (excess(mid) > 0 ? lo : hi) = mid;
    }
    double v = 0.5 * (lo + hi);
    V += v;
    out.push_back({v, V});
  }
  return out;
}

ExistenceReport random_code_existence_check(int p, int r, int n, int m,
                                            long long trials,
                                            unsigned long long seed) {
  require_prime(p);
  if (r < 1 || n < r) throw BadArgsError("need n >= r >= 1");
  if (m < 1 || trials < 1) throw BadArgsError("need m >= 1 and trials >= 1");
  long long size = 1;
  for (int i = 0; i < r; ++i) {
    size *= p;
    if (size > 2187) throw TooLargeError("p^r exceeds 3^7");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(0, p - 1);

  ExistenceReport rep;
  rep.p = p;
  rep.r = r;
  rep.n = n;
  rep.m = m;
  rep.trials = trials;

  for (long long t = 0; t < trials; ++t) {
    FpMatrix h(p, r, n);
    // full-rank rows make the draw uniform over [n, n-r]_p codes
    do {
      for (int& x : h.a) x = coef(rng);
    } while (fp_rank(h) < r);
    LinearCode c = code_from_pcm(h);
    if (!is_m_admissible(c, m).admissible) ++rep.inadmissible;
  }

  rep.observed = static_cast<double>(rep.inadmissible) / trials;
  rep.union_bound = std::pow(1.0 + static_cast<double>(m) * (p - 1), n) *
                    std::pow(p, -static_cast<double>(r) * m);
  double clamped = std::min(rep.union_bound, 1.0);
  rep.sigma = std::sqrt(clamped * (1 - clamped) /
                        static_cast<double>(trials));
  rep.guarantee = rep.union_bound < 1.0;
  return rep;
}

}  // namespace davkit
