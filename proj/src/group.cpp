// group.cpp -- finite abelian group arithmetic, weight sets, sequences.

#include "davkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "davkit/elemset.hpp"

namespace davkit {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr long long kMaxOrder = 1LL << 26;

}  // namespace

Group::Group(std::vector<int> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw BadFactorError("invariant factors must be >= 2, got " +
                           std::to_string(factors_[i]));
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw NonChainError(std::to_string(factors_[i - 1]) +
                          " does not divide " + std::to_string(factors_[i]));
  }
  stride_.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    stride_[i] = order_;
    order_ *= factors_[i];
    if (order_ > kMaxOrder) throw TooLargeError("group order exceeds 2^26");
  }
  exponent_ = factors_.empty() ? 1 : factors_.back();
  if (!factors_.empty() && is_prime(factors_[0]) &&
      std::all_of(factors_.begin(), factors_.end(),
                  [&](int f) { return f == factors_[0]; }))
    elem_p_ = factors_[0];
}

Elem Group::add(Elem a, Elem b) const {
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int ca = static_cast<int>((a / stride_[i]) % factors_[i]);
    int cb = static_cast<int>((b / stride_[i]) % factors_[i]);
    int c = ca + cb;
    if (c >= factors_[i]) c -= factors_[i];
    r += static_cast<Elem>(c * stride_[i]);
  }
  return r;
}

Elem Group::neg(Elem a) const {
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int c = static_cast<int>((a / stride_[i]) % factors_[i]);
    if (c != 0) c = factors_[i] - c;
    r += static_cast<Elem>(c * stride_[i]);
  }
  return r;
}

Elem Group::scale(long long w, Elem a) const {
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long long c = (a / stride_[i]) % factors_[i];
    long long ww = w % factors_[i];
    if (ww < 0) ww += factors_[i];
    r += static_cast<Elem>(((c * ww) % factors_[i]) * stride_[i]);
  }
  return r;
}

int Group::order_of(Elem a) const {
  long long ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int c = static_cast<int>((a / stride_[i]) % factors_[i]);
    int o = factors_[i] / std::gcd(c, factors_[i]);
    ord = std::lcm(ord, static_cast<long long>(o));
  }
  return static_cast<int>(ord);
}

std::vector<int> Group::coords(Elem a) const {
  std::vector<int> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    c[i] = static_cast<int>((a / stride_[i]) % factors_[i]);
  return c;
}

Elem Group::from_coords(const std::vector<int>& c) const {
  if (c.size() != factors_.size())
    throw BadArgsError("coordinate count does not match group rank");
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int x = c[i] % factors_[i];
    if (x < 0) x += factors_[i];
    r += static_cast<Elem>(x * stride_[i]);
  }
  return r;
}

Elem Group::subgroup_id(Elem a) const {
  if (subgroup_id_.empty()) subgroup_id_.assign(order_, -1);
  if (subgroup_id_[a] >= 0) return subgroup_id_[a];
  // walk the cyclic subgroup <a>; its generators are the members whose
  // order matches |<a>|, and the least of them names the subgroup
  std::vector<Elem> members;
  Elem x = a;
  while (x != 0) {
    members.push_back(x);
    x = add(x, a);
  }
  members.push_back(0);
  int size = static_cast<int>(members.size());
  Elem least = a;
  for (Elem h : members)
    if (order_of(h) == size && h < least) least = h;
  for (Elem h : members)
    if (order_of(h) == size) subgroup_id_[h] = least;
  subgroup_id_[0] = 0;
  return subgroup_id_[a];
}

std::string Group::elem_str(Elem a) const {
  std::ostringstream os;
  os << '(';
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::string Group::str() const {
  if (factors_.empty()) return "C1";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (i) os << " x ";
    os << 'C' << factors_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

WeightSet reduce_weights(std::vector<long long> raw, const Group& g) {
  if (raw.empty()) throw EmptyWeightsError("weight set must be non-empty");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  WeightSet w;
  w.raw = raw;
  int ex = g.exponent();
  for (long long x : raw) {
    int r = static_cast<int>(x % ex);
    if (r < 0) r += ex;
    w.reduced.push_back(r);
  }
  std::sort(w.reduced.begin(), w.reduced.end());
  w.reduced.erase(std::unique(w.reduced.begin(), w.reduced.end()),
                  w.reduced.end());
  w.trivial = w.reduced.front() == 0;
  w.mult_closed = true;
  for (int a : w.reduced)
    for (int b : w.reduced) {
      int pr = static_cast<int>((static_cast<long long>(a) * b) % ex);
      if (!std::binary_search(w.reduced.begin(), w.reduced.end(), pr)) {
        w.mult_closed = false;
        break;
      }
    }
  return w;
}

WeightSet full_weights(const Group& g) {
  std::vector<long long> raw;
  for (int x = 1; x < g.exponent(); ++x) raw.push_back(x);
  return reduce_weights(std::move(raw), g);
}

WeightSet pm_weights(const Group& g) { return reduce_weights({1, -1}, g); }

WeightSet classical_weights(const Group& g) { return reduce_weights({1}, g); }

WeightSet parse_weights(const std::string& spec, const Group& g) {
  if (spec == "full") return full_weights(g);
  if (spec == "pm") return pm_weights(g);
  if (spec == "classical") return classical_weights(g);
  std::vector<long long> raw;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw FormatError("bad weight '" + tok + "'");
    }
    if (pos != tok.size()) throw FormatError("bad weight '" + tok + "'");
    raw.push_back(v);
  }
  return reduce_weights(std::move(raw), g);
}

bool weights_are_full(const WeightSet& w, const Group& g) {
  if (g.exponent() < 2) return false;
  if (static_cast<int>(w.reduced.size()) != g.exponent() - 1) return false;
  return w.reduced.front() == 1 && w.reduced.back() == g.exponent() - 1;
}

Seq::Seq(std::vector<Elem> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

Seq Seq::from_coord_lists(const Group& g,
                          const std::vector<std::vector<int>>& lists) {
  std::vector<Elem> e;
  e.reserve(lists.size());
  for (const auto& c : lists) e.push_back(g.from_coords(c));
  return Seq(std::move(e));
}

int Seq::multiplicity(Elem g) const {
  auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), g);
  return static_cast<int>(hi - lo);
}

Seq Seq::appended(Elem g) const {
  Seq r = *this;
  r.entries_.insert(
      std::upper_bound(r.entries_.begin(), r.entries_.end(), g), g);
  return r;
}

bool Seq::contains(const Seq& sub) const {
  return std::includes(entries_.begin(), entries_.end(),
                       sub.entries_.begin(), sub.entries_.end());
}

Seq Seq::removed(const Seq& sub) const {
  if (!contains(sub)) throw BadArgsError("not a sub-multiset");
  Seq r;
  std::set_difference(entries_.begin(), entries_.end(), sub.entries_.begin(),
                      sub.entries_.end(), std::back_inserter(r.entries_));
  return r;
}

std::string Seq::str(const Group& g) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << g.elem_str(entries_[i]);
  }
  return os.str();
}

std::vector<Elem> weighted_sums(const Seq& s, const WeightSet& w,
                                const Group& g) {
  ElemSet reach(static_cast<int>(g.order()));
  reach.set(g.zero());
  for (Elem e : s.entries()) {
    std::vector<Elem> scaled;
    scaled.reserve(w.reduced.size());
    for (int wt : w.reduced) scaled.push_back(g.scale(wt, e));
    std::sort(scaled.begin(), scaled.end());
    scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
    ElemSet next(static_cast<int>(g.order()));
    reach.for_each([&](Elem x) {
      for (Elem t : scaled) next.set(g.add(x, t));
    });
    reach = next;
  }
  std::vector<Elem> out;
  out.reserve(reach.count());
  reach.for_each([&](Elem x) { out.push_back(x); });
  return out;
}

}  // namespace davkit
