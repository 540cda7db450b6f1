// capsets.cpp -- cap verification and the pinned-pair branch and bound.

#include "davkit/capsets.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "davkit/elemset.hpp"

namespace davkit {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

std::uint64_t point_key(const ProjPoint& v) {
  std::uint64_t h = 0;
  for (int x : v) h = h * 131 + static_cast<unsigned>(x);
  return h;
}

// index lookup for a canonical point list
std::unordered_map<std::uint64_t, int> index_points(
    const std::vector<ProjPoint>& pts) {
  std::unordered_map<std::uint64_t, int> idx;
  idx.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    idx.emplace(point_key(pts[i]), static_cast<int>(i));
  return idx;
}

}  // namespace

ProjPoint canonical_point(std::vector<int> v, int p) {
  int lead = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = ((v[i] % p) + p) % p;
    if (lead < 0 && v[i] != 0) lead = static_cast<int>(i);
  }
  if (lead < 0) throw BadArgsError("zero vector has no projective class");
  int inv = inv_mod(v[lead], p);
  for (auto& x : v) x = x * inv % p;
  return v;
}

std::vector<ProjPoint> projective_points(int p, int r) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p));
  if (r < 1) throw BadArgsError("r must be >= 1");
  std::vector<ProjPoint> pts;
  std::vector<int> v(r, 0);
  // lex enumeration keeps only vectors that are their own representative
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }) &&
          canonical_point(v, p) == v)
        pts.push_back(v);
      return;
    }
    for (int c = 0; c < p; ++c) {
      v[i] = c;
      self(self, i + 1);
    }
    v[i] = 0;
  };
  rec(rec, 0);
  return pts;
}

CapCheck is_cap(const std::vector<ProjPoint>& points, int p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p));
  auto idx = index_points(points);
  if (idx.size() != points.size()) {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw DuplicatePointError("points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
  }
  int r = points.empty() ? 0 : static_cast<int>(points[0].size());
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != r || canonical_point(pt, p) != pt)
      throw BadArgsError("points must be canonical and of equal dimension");

  // the line through points i and j meets a third listed point exactly when
  // a*pts[i] + pts[j] is one of them for some a in 1..p-1
  std::vector<int> acc(r);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (int a = 1; a < p; ++a) {
        for (int t = 0; t < r; ++t)
          acc[t] = (a * points[i][t] + points[j][t]) % p;
        if (std::all_of(acc.begin(), acc.end(), [](int x) { return !x; }))
          continue;  // only possible when i and j coincide projectively
        ProjPoint third = canonical_point(acc, p);
        auto it = idx.find(point_key(third));
        if (it == idx.end() || points[it->second] != third) continue;
        int k = it->second;
        if (k == static_cast<int>(i) || k == static_cast<int>(j)) continue;
        // a pts[i] + pts[j] = mu * third with mu the leading entry of acc
        int lead = 0;
        while (acc[lead] == 0) ++lead;
        CollinearTriple t{static_cast<int>(i), static_cast<int>(j), k,
                          {a, 1, (p - acc[lead]) % p}};
        return CapCheck{false, t};
      }
  return CapCheck{};
}

namespace {

struct CapSearch {
  int p, r, target;
  SearchMode mode;
  std::vector<ProjPoint> pts;
  std::unordered_map<std::uint64_t, int> idx;
  int n = 0;
  // third[i*n + j]: points collinear with the pair (i, j)
  std::vector<ElemSet> third;

  std::atomic<int> best{0};
  std::atomic<bool> done{false};
  std::mutex cap_mu;
  std::vector<int> best_cap;      // indices, under cap_mu
  long long best_branch = -1;     // smallest top branch attaining best

  void build() {
    pts = projective_points(p, r);
    idx = index_points(pts);
    n = static_cast<int>(pts.size());
    third.assign(static_cast<std::size_t>(n) * n, ElemSet(n));
    std::vector<int> acc(r);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        ElemSet& s = third[static_cast<std::size_t>(i) * n + j];
        for (int a = 1; a < p; ++a) {
          for (int t = 0; t < r; ++t) acc[t] = (a * pts[i][t] + pts[j][t]) % p;
          s.set(idx.at(point_key(canonical_point(acc, p))));
        }
        third[static_cast<std::size_t>(j) * n + i] = s;
      }
  }

  const ElemSet& line(int i, int j) const {
    return third[static_cast<std::size_t>(i) * n + j];
  }

  void offer(const std::vector<int>& chosen, long long branch) {
    int sz = static_cast<int>(chosen.size());
    int cur = best.load();
    while (cur < sz && !best.compare_exchange_weak(cur, sz)) {
    }
    std::lock_guard<std::mutex> lk(cap_mu);
    if (sz > static_cast<int>(best_cap.size()) ||
        (sz == static_cast<int>(best_cap.size()) &&
         (best_branch < 0 || branch < best_branch))) {
      best_cap = chosen;
      best_branch = branch;
      if (sz >= target && mode == SearchMode::find) done = true;
    }
  }

  // chosen holds point indices; forb the points no longer extendable
  void dfs(std::vector<int>& chosen, const ElemSet& forb, int start,
           long long branch) {
    if (static_cast<int>(chosen.size()) > best.load() ||
        (static_cast<int>(chosen.size()) >= target &&
         mode == SearchMode::find))
      offer(chosen, branch);
    if (done.load()) return;
    int room = 0;
    for (int q = start; q < n; ++q) room += !forb.test(q);
    if (static_cast<int>(chosen.size()) + room <= best.load() &&
        mode == SearchMode::prove)
      return;
    if (static_cast<int>(chosen.size()) + room < target &&
        mode == SearchMode::find)
      return;
    for (int q = start; q < n; ++q) {
      if (forb.test(q)) continue;
      ElemSet next = forb;
      next.set(q);
      for (int c : chosen) next.or_with(line(c, q));
      chosen.push_back(q);
      dfs(chosen, next, q + 1, branch);
      chosen.pop_back();
      if (done.load()) return;
    }
  }

  CapSearchResult run(int threads) {
    build();
    CapSearchResult res;
    res.mode = mode;
    res.target = target;

    std::vector<int> seed;
    ElemSet forb(n);
    // pin e1; pin e2 too when the dimension admits a second point
    ProjPoint e1(r, 0);
    e1[0] = 1;
    int q1 = idx.at(point_key(e1));
    seed.push_back(q1);
    forb.set(q1);
    if (r >= 2) {
      ProjPoint e2(r, 0);
      e2[1] = 1;
      int q2 = idx.at(point_key(e2));
      seed.push_back(q2);
      forb.set(q2);
      forb.or_with(line(q1, q2));
    }
    offer(seed, -1);

    if (threads <= 1) {
      dfs(seed, forb, 0, 0);
    } else {
      // fan out over the first free point
      std::vector<int> tops;
      for (int q = 0; q < n; ++q)
        if (!forb.test(q)) tops.push_back(q);
      std::atomic<std::size_t> cursor{0};
      auto worker = [&] {
        for (std::size_t w; (w = cursor.fetch_add(1)) < tops.size();) {
          if (done.load()) return;
          int q = tops[w];
          std::vector<int> chosen = seed;
          ElemSet f = forb;
          f.set(q);
          for (int c : chosen) f.or_with(line(c, q));
          chosen.push_back(q);
          dfs(chosen, f, q + 1, static_cast<long long>(w));
        }
      };
      std::vector<std::thread> pool;
      int tcount = std::min<int>(threads, static_cast<int>(tops.size()));
      pool.reserve(tcount);
      for (int t = 0; t < tcount; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      // seed alone (no extension) is already offered above
    }

    res.best = best.load();
    res.found = res.best >= target;
    res.proven = mode == SearchMode::prove;
    {
      std::lock_guard<std::mutex> lk(cap_mu);
      for (int i : best_cap) res.cap.push_back(pts[i]);
    }
    std::sort(res.cap.begin(), res.cap.end());
    return res;
  }
};

}  // namespace

CapSearchResult max_cap_search(int p, int r, int target, SearchMode mode,
                               int threads) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p));
  if (p == 2) throw EvenPError("caps require odd p; use the closed form");
  if (r < 1 || target < 1) throw BadArgsError("r and target must be >= 1");
  CapSearch cs{p, r, target, mode};
  return cs.run(std::max(1, threads));
}

Seq cap_to_sequence(const CapSet& c, const Group& g) {
  if (!g.is_elementary() || g.prime() != c.p || g.rank() != c.r)
    throw BadArgsError("group does not match the cap parameters");
  CapCheck chk = is_cap(c.points, c.p);
  if (!chk.ok) {
    const auto& t = *chk.triple;
    throw NotACapError("points " + std::to_string(t.i) + ", " +
                       std::to_string(t.j) + ", " + std::to_string(t.k) +
                       " are collinear");
  }
  std::vector<Elem> entries;
  entries.reserve(c.points.size());
  for (const auto& pt : c.points) entries.push_back(g.from_coords(pt));
  return Seq(std::move(entries));
}

CapSet sequence_to_cap(const Seq& s, const Group& g) {
  if (!g.is_elementary())
    throw BadArgsError("caps live over elementary p-groups");
  if (g.prime() == 2) throw EvenPError("caps require odd p");
  WeightSet w = full_weights(g);
  if (auto wit = shortest_zero_subsum(s, w, g, 3)) {
    int len = wit->support.length();
    if (len <= 2)
      throw HasShortSubsumError("zero-subsum of length " +
                                std::to_string(len));
    throw NotACapError("three entries are collinear");
  }
  CapSet c{g.prime(), g.rank(), {}};
  for (Elem e : s.entries())
    c.points.push_back(canonical_point(g.coords(e), g.prime()));
  std::sort(c.points.begin(), c.points.end());
  assert(is_cap(c.points, c.p).ok);
  return c;
}

CapSet parse_cap(std::istream& in) {
  int p, r, n;
  if (!(in >> p >> r >> n)) throw FormatError("expected header 'p r n'");
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p));
  if (r < 1 || n < 0) throw FormatError("bad dimensions");
  CapSet c{p, r, {}};
  for (int i = 0; i < n; ++i) {
    ProjPoint pt(r);
    for (int t = 0; t < r; ++t) {
      if (!(in >> pt[t])) throw FormatError("truncated point list");
      if (pt[t] < 0 || pt[t] >= p) throw FormatError("coordinate out of range");
    }
    c.points.push_back(std::move(pt));
  }
  return c;
}

void write_cap(const CapSet& c, std::ostream& out) {
  out << c.p << ' ' << c.r << ' ' << c.points.size() << '\n';
  for (const auto& pt : c.points) {
    for (int t = 0; t < c.r; ++t) {
      if (t) out << ' ';
      out << pt[t];
    }
    out << '\n';
  }
}

}  // namespace davkit
