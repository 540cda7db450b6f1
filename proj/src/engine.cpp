// engine.cpp -- layered exhaustive searches for weighted zero-sum constants.
//
// The two central searches (s-constants and multi-wise Davenport constants)
// walk counterexample layers: the canonical sorted sequences of length n
// admitting no forbidden structure.  A sorted prefix of a counterexample is
// itself a counterexample, so extending layer n-1 by elements >= the last
// entry visits every candidate exactly once.

#include "davkit/engine.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "davkit/elemset.hpp"

namespace davkit {

std::string ConstantValue::str() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "INF";
    default:
      return "unknown(searched to " + std::to_string(value) + ")";
  }
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Per-search state: scaled-element tables plus a reachability memo keyed by
// sorted sub-multisets.  The memo is shared across a whole layer search, so
// repeated small supports are tested once.
struct Ctx {
  const Group& g;
  const WeightSet& w;
  int order;
  std::vector<std::vector<Elem>> scaled;
  std::unordered_map<std::vector<Elem>, bool, VecHash> zero_memo;

  Ctx(const Group& g_, const WeightSet& w_)
      : g(g_), w(w_), order(static_cast<int>(g_.order())), scaled(order) {}

  const std::vector<Elem>& scaled_of(Elem e) {
    auto& v = scaled[e];
    if (v.empty()) {
      v.reserve(w.reduced.size());
      for (int wt : w.reduced) v.push_back(g.scale(wt, e));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return v;
  }

  ElemSet reach_step(const ElemSet& r, Elem e) {
    ElemSet nx(order);
    const auto& sc = scaled_of(e);
    r.for_each([&](Elem x) {
      for (Elem s : sc) nx.set(g.add(x, s));
    });
    return nx;
  }

  bool zero_reachable(const std::vector<Elem>& t) {
    auto it = zero_memo.find(t);
    if (it != zero_memo.end()) return it->second;
    ElemSet r(order);
    r.set(g.zero());
    for (Elem e : t) r = reach_step(r, e);
    bool z = r.contains_zero();
    zero_memo.emplace(t, z);
    return z;
  }

  // weight assignment certifying zero-reachability of t
  std::vector<int> weights_for(const std::vector<Elem>& t) {
    int n = static_cast<int>(t.size());
    std::vector<ElemSet> pre;
    pre.reserve(n + 1);
    ElemSet r(order);
    r.set(g.zero());
    pre.push_back(r);
    for (int i = 0; i < n; ++i) pre.push_back(reach_step(pre.back(), t[i]));
    assert(pre[n].contains_zero());
    std::vector<int> ws(n, -1);
    Elem target = g.zero();
    for (int i = n - 1; i >= 0; --i) {
      for (int wt : w.reduced) {
        Elem need = g.add(target, g.neg(g.scale(wt, t[i])));
        if (pre[i].test(need)) {
          ws[i] = wt;
          target = need;
          break;
        }
      }
      assert(ws[i] >= 0);
    }
    return ws;
  }
};

// distinct values of a sorted sequence with multiplicities
struct Distinct {
  std::vector<Elem> vals;
  std::vector<int> mult;
};

Distinct distinct_of(const Seq& s) {
  Distinct d;
  for (Elem e : s.entries()) {
    if (!d.vals.empty() && d.vals.back() == e)
      ++d.mult.back();
    else {
      d.vals.push_back(e);
      d.mult.push_back(1);
    }
  }
  return d;
}

std::vector<Elem> expand_counts(const Distinct& d,
                                const std::vector<int>& counts) {
  std::vector<Elem> t;
  for (std::size_t i = 0; i < d.vals.size(); ++i)
    t.insert(t.end(), counts[i], d.vals[i]);
  return t;
}

// Enumerates distinct sub-multisets of the values in `d` with total size k,
// in canonical order, until f returns true; returns whether f fired.
bool for_each_submultiset(const Distinct& d, int k,
                          const std::function<bool(std::vector<int>&)>& f) {
  int t = static_cast<int>(d.vals.size());
  std::vector<int> suffix(t + 1, 0);  // total multiplicity from index i on
  for (int i = t - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d.mult[i];
  std::vector<int> counts(t, 0);
  std::function<bool(int, int)> rec = [&](int i, int need) -> bool {
    if (need == 0) {
      for (int j = i; j < t; ++j) counts[j] = 0;
      return f(counts);
    }
    if (i == t || suffix[i] < need) return false;
    for (int c = std::min(d.mult[i], need); c >= 0; --c) {
      counts[i] = c;
      if (rec(i + 1, need - c)) return true;
    }
    counts[i] = 0;
    return false;
  };
  return rec(0, k);
}

// All minimal zero-reachable sub-multisets of s (no proper zero-reachable
// sub-multiset), as count vectors over distinct_of(s), sizes ascending.
// Only these matter for packings: any zero-subsum shrinks to a minimal one.
struct SupportList {
  Distinct d;
  std::vector<std::vector<int>> counts;
  std::vector<int> sizes;
};

bool dominates(const std::vector<int>& small, const std::vector<int>& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

SupportList minimal_supports(Ctx& cx, const Seq& s) {
  SupportList sl;
  sl.d = distinct_of(s);
  for (int k = 1; k <= s.length(); ++k) {
    for_each_submultiset(sl.d, k, [&](std::vector<int>& counts) {
      for (const auto& m : sl.counts)
        if (dominates(m, counts)) return false;  // contains a smaller support
      if (cx.zero_reachable(expand_counts(sl.d, counts))) {
        sl.counts.push_back(counts);
        sl.sizes.push_back(k);
      }
      return false;  // keep enumerating
    });
  }
  return sl;
}

// Branch-and-bound packing over minimal supports, chosen in index order.
struct Packer {
  const SupportList& sl;
  std::vector<int> rem;
  int rem_len;
  int cap;
  int best = 0;
  std::vector<int> stack, best_stack;

  Packer(const SupportList& sl_, int cap_)
      : sl(sl_), rem(sl_.d.mult), rem_len(0), cap(cap_) {
    for (int m : rem) rem_len += m;
  }

  void dfs(int start, int found) {
    if (found > best) {
      best = found;
      best_stack = stack;
    }
    if (best >= cap) return;
    for (std::size_t i = start; i < sl.counts.size(); ++i) {
      // supports are size-ascending: the cheapest still-usable part bounds
      // how many more can fit
      if (found + rem_len / sl.sizes[i] <= best) return;
      if (!dominates(sl.counts[i], rem)) continue;
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= sl.counts[i][j];
      rem_len -= sl.sizes[i];
      stack.push_back(static_cast<int>(i));
      dfs(static_cast<int>(i), found + 1);
      stack.pop_back();
      rem_len += sl.sizes[i];
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] += sl.counts[i][j];
      if (best >= cap) return;
    }
  }
};

int packing_count(Ctx& cx, const Seq& s, int cap) {
  if (s.empty() || cap <= 0) return 0;
  SupportList sl = minimal_supports(cx, s);
  if (sl.counts.empty()) return 0;
  Packer pk(sl, cap);
  pk.dfs(0, 0);
  return pk.best;
}

ZeroSubsumWitness witness_from(Ctx& cx, const std::vector<Elem>& t) {
  return ZeroSubsumWitness{Seq(t), cx.weights_for(t)};
}

// Does appending `last` (the maximal entry) to a known counterexample
// create a zero-subsum with length in L?  Any new subsum must use every
// copy of `last`, so only those are tested.
bool extension_has_subsum(Ctx& cx, const Seq& s2, Elem last,
                          const std::vector<int>& L) {
  int c = s2.multiplicity(last);
  std::vector<Elem> rest(s2.entries().begin(), s2.entries().end() - c);
  Distinct d = distinct_of(Seq(rest));
  for (int l : L) {
    if (l < c || l - c > static_cast<int>(rest.size())) continue;
    bool hit = for_each_submultiset(d, l - c, [&](std::vector<int>& counts) {
      std::vector<Elem> t = expand_counts(d, counts);
      t.insert(t.end(), c, last);  // last is maximal: stays sorted
      return cx.zero_reachable(t);
    });
    if (hit) return true;
  }
  return false;
}

// incremental F_p echelon basis for the span-dimension prune
struct Echelon {
  std::vector<std::vector<int>> rows;  // each with leading 1 at its pivot
  std::vector<int> pivots;

  // returns true (and extends) when v is independent of the rows
  bool add(std::vector<int> v, int p) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int c = v[pivots[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = (v[j] + (p - c) * rows[i][j]) % p;
    }
    int piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) return false;
    // normalize the pivot to 1
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (x * v[piv] % p == 1) {
        inv = x;
        break;
      }
    for (auto& x : v) x = x * inv % p;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

// Wall-clock cutoff for the layer searches.  Candidate loops poll in
// batches, so an expired deadline is noticed within a few extensions.
struct Deadline {
  std::chrono::steady_clock::time_point at{};
  bool armed = false;
  unsigned poll = 0;

  static Deadline in(double seconds) {
    Deadline d;
    if (seconds > 0) {
      d.at = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
      d.armed = true;
    }
    return d;
  }
  bool expired() {
    if (!armed) return false;
    if ((++poll & 63u) != 0) return false;
    return std::chrono::steady_clock::now() >= at;
  }
  bool expired_now() const {
    return armed && std::chrono::steady_clock::now() >= at;
  }
};

ConstantValue s_constant_impl(const Group& g, const WeightSet& w,
                              std::vector<int> L, long long limit,
                              Deadline& dl);

// With the full weight set, scaling a single entry by a unit mod exp(G)
// carries weighted zero-subsums to weighted zero-subsums bijectively, both
// of prescribed lengths and of disjoint packings.  The searches may then
// keep one element per unit orbit.
std::vector<char> orbit_least_alphabet(const Group& g, const WeightSet& w) {
  std::vector<char> keep(g.order(), 1);
  if (!weights_are_full(w, g)) return keep;
  int ex = g.exponent();
  for (Elem e = 0; e < g.order(); ++e)
    for (int u = 2; u < ex; ++u) {
      if (std::gcd(u, ex) != 1) continue;
      if (g.scale(u, e) < e) {
        keep[e] = 0;
        break;
      }
    }
  return keep;
}

// s-values of lower-rank elementary groups, for the span-dimension prune:
// a sequence spanning only dim < r dimensions lives in a subgroup
// isomorphic to C_p^dim and cannot be a counterexample once its length
// reaches the s-value there.
std::vector<long long> lower_rank_s(const Group& g, const WeightSet& w,
                                    const std::vector<int>& L,
                                    long long limit, Deadline& dl) {
  std::vector<long long> by_rank(g.rank(), -1);
  if (!g.is_elementary() || w.trivial || g.rank() < 2) return by_rank;
  for (int dim = 1; dim < g.rank(); ++dim) {
    Group h = Group::elementary(g.prime(), dim);
    WeightSet wh = reduce_weights(w.raw, h);
    ConstantValue v = s_constant_impl(h, wh, L, limit, dl);
    if (v.is_finite()) by_rank[dim] = v.value;
  }
  return by_rank;
}

ConstantValue s_constant_impl(const Group& g, const WeightSet& w,
                              std::vector<int> L, long long limit,
                              Deadline& dl) {
  if (L.empty()) throw BadArgsError("constraint set L must be non-empty");
  for (int l : L)
    if (l < 1) throw BadArgsError("constraint lengths must be >= 1");
  if (limit < 1) throw BadArgsError("search limit must be >= 1");
  std::sort(L.begin(), L.end());
  L.erase(std::unique(L.begin(), L.end()), L.end());

  // finite iff some constraint length admits a zero weight combination:
  // such subsums exist on any element repeated often enough, while an
  // element of full order defeats every other length
  std::vector<int> zl = zero_weight_lengths(g, w, L.back());
  bool finite = false;
  for (int l : L)
    if (std::binary_search(zl.begin(), zl.end(), l)) finite = true;
  if (!finite) return ConstantValue::inf();

  Ctx cx(g, w);
  std::vector<char> keep = orbit_least_alphabet(g, w);
  std::vector<long long> dim_prune = lower_rank_s(g, w, L, limit, dl);
  bool use_prune =
      std::any_of(dim_prune.begin(), dim_prune.end(), [](long long x) {
        return x >= 0;
      });

  struct Node {
    Seq s;
    Echelon ech;
  };
  std::vector<Node> layer(1);
  for (long long n = 1; n <= limit; ++n) {
    if (dl.expired_now()) return ConstantValue::unk(n - 1);
    std::vector<Node> next;
    for (const Node& node : layer) {
      if (dl.expired()) return ConstantValue::unk(n - 1);
      Elem start = node.s.empty() ? 0 : node.s.entries().back();
      for (Elem e = start; e < cx.order; ++e) {
        if (!keep[e]) continue;
        Node cand{node.s.appended(e), node.ech};
        if (use_prune) {
          cand.ech.add(g.coords(e), g.prime());
          int dim = static_cast<int>(cand.ech.rows.size());
          if (dim < g.rank() && dim_prune[dim] >= 0 && n >= dim_prune[dim])
            continue;  // inside a proper subgroup past its s-value
        }
        if (!extension_has_subsum(cx, cand.s, e, L))
          next.push_back(std::move(cand));
      }
    }
    if (next.empty()) return ConstantValue::fin(n);
    layer = std::move(next);
  }
  return ConstantValue::unk(limit);
}

}  // namespace

bool witness_valid(const ZeroSubsumWitness& wit, const Seq& parent,
                   const WeightSet& w, const Group& g) {
  if (wit.support.empty()) return false;
  if (!parent.contains(wit.support)) return false;
  if (wit.weights.size() != wit.support.entries().size()) return false;
  Elem sum = g.zero();
  for (std::size_t i = 0; i < wit.weights.size(); ++i) {
    if (!std::binary_search(w.reduced.begin(), w.reduced.end(),
                            wit.weights[i]))
      return false;
    sum = g.add(sum, g.scale(wit.weights[i], wit.support.entries()[i]));
  }
  return sum == g.zero();
}

bool packing_valid(const PackingWitness& pw, const Seq& parent,
                   const WeightSet& w, const Group& g, int target) {
  if (static_cast<int>(pw.parts.size()) < target || target < 1) return false;
  std::vector<Elem> combined;
  for (const auto& part : pw.parts) {
    if (!witness_valid(part, parent, w, g)) return false;
    combined.insert(combined.end(), part.support.entries().begin(),
                    part.support.entries().end());
  }
  return parent.contains(Seq(std::move(combined)));
}

int e_w_constant(const Group& g, const WeightSet& w) {
  if (w.trivial)
    throw TrivialWeightsError("weights contain 0 mod exp(G)");
  int ex = g.exponent();
  std::vector<char> cur(ex, 0), nxt(ex, 0);
  cur[0] = 1;
  for (int k = 1; k <= ex; ++k) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int x = 0; x < ex; ++x)
      if (cur[x])
        for (int wt : w.reduced) nxt[(x + wt) % ex] = 1;
    if (nxt[0]) return k;
    cur.swap(nxt);
  }
  // exp copies of any weight sum to zero, so this point is unreachable
  assert(false);
  return ex;
}

std::vector<int> zero_weight_lengths(const Group& g, const WeightSet& w,
                                     int cap) {
  int ex = g.exponent();
  std::vector<int> out;
  std::vector<char> cur(ex, 0), nxt(ex, 0);
  cur[0] = 1;
  for (int k = 1; k <= cap; ++k) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int x = 0; x < ex; ++x)
      if (cur[x])
        for (int wt : w.reduced) nxt[(x + wt) % ex] = 1;
    if (nxt[0]) out.push_back(k);
    cur.swap(nxt);
  }
  return out;
}

std::optional<ZeroSubsumWitness> shortest_zero_subsum(const Seq& s,
                                                      const WeightSet& w,
                                                      const Group& g,
                                                      int length_cap) {
  Ctx cx(g, w);
  Distinct d = distinct_of(s);
  int kmax = length_cap < 0 ? s.length() : std::min(length_cap, s.length());
  std::optional<ZeroSubsumWitness> out;
  for (int k = 1; k <= kmax && !out; ++k) {
    for_each_submultiset(d, k, [&](std::vector<int>& counts) {
      std::vector<Elem> t = expand_counts(d, counts);
      if (!cx.zero_reachable(t)) return false;
      out = witness_from(cx, t);
      return true;
    });
  }
  return out;
}

std::optional<PackingWitness> max_disjoint_packing(const Seq& s,
                                                   const WeightSet& w,
                                                   const Group& g,
                                                   int target) {
  if (target < 1) throw BadArgsError("packing target must be >= 1");
  Ctx cx(g, w);
  SupportList sl = minimal_supports(cx, s);
  if (sl.counts.empty()) return std::nullopt;
  Packer pk(sl, target);
  pk.dfs(0, 0);
  if (pk.best < target) return std::nullopt;
  PackingWitness pw;
  for (int idx : pk.best_stack)
    pw.parts.push_back(witness_from(cx, expand_counts(sl.d, sl.counts[idx])));
  return pw;
}

int max_packing_count(const Seq& s, const WeightSet& w, const Group& g,
                      int cap) {
  Ctx cx(g, w);
  return packing_count(cx, s, cap);
}

ConstantValue s_constant(const Group& g, const WeightSet& w,
                         const std::vector<int>& L, long long limit,
                         double time_budget_s) {
  Deadline dl = Deadline::in(time_budget_s);
  return s_constant_impl(g, w, L, limit, dl);
}

ConstantValue s_le_d(const Group& g, const WeightSet& w, int d,
                     long long limit, double time_budget_s) {
  if (d < 1) throw BadArgsError("constraint bound d must be >= 1");
  std::vector<int> L(d);
  for (int i = 0; i < d; ++i) L[i] = i + 1;
  return s_constant(g, w, L, limit, time_budget_s);
}

std::vector<ConstantValue> d_profile(const Group& g, const WeightSet& w,
                                     int m_max, long long limit,
                                     double time_budget_s) {
  if (m_max < 1) throw BadArgsError("m_max must be >= 1");
  if (limit < 1) throw BadArgsError("search limit must be >= 1");
  Ctx cx(g, w);
  Deadline dl = Deadline::in(time_budget_s);
  std::vector<char> keep = orbit_least_alphabet(g, w);
  std::vector<long long> maxn(m_max + 1, 0);
  std::vector<Seq> layer(1);
  int final_min_t = m_max;
  long long completed = 0;

  // Settles everything at or below the last completed layer's min packing
  // count: a full layer where every survivor packs >= m rules out longer
  // counterexamples for that m, since supersequences inherit packings.
  auto finish_at = [&](long long depth) {
    int settled = depth > 0 ? final_min_t : 0;
    std::vector<ConstantValue> out;
    for (int m = 1; m <= m_max; ++m)
      out.push_back(m <= settled ? ConstantValue::fin(maxn[m] + 1)
                                 : ConstantValue::unk(depth));
    return out;
  };

  for (long long n = 1; n <= limit; ++n) {
    if (dl.expired_now()) return finish_at(completed);
    std::vector<Seq> next;
    int min_t = m_max;
    for (const Seq& s : layer) {
      if (dl.expired()) return finish_at(completed);
      Elem start = s.empty() ? 0 : s.entries().back();
      for (Elem e = start; e < cx.order; ++e) {
        if (!keep[e]) continue;
        Seq cand = s.appended(e);
        int t = packing_count(cx, cand, m_max);
        if (t < m_max) {
          next.push_back(std::move(cand));
          min_t = std::min(min_t, t);
          for (int m = t + 1; m <= m_max; ++m) maxn[m] = n;
        }
      }
    }
    if (next.empty()) {
      std::vector<ConstantValue> out;
      for (int m = 1; m <= m_max; ++m)
        out.push_back(ConstantValue::fin(maxn[m] + 1));
      return out;
    }
    layer = std::move(next);
    final_min_t = min_t;
    completed = n;
  }
  return finish_at(limit);
}

ConstantValue d_constant(const Group& g, const WeightSet& w, int m,
                         long long limit, double time_budget_s) {
  return d_profile(g, w, m, limit, time_budget_s).back();
}

}  // namespace davkit
