// bounds.cpp -- lemma rules and the fixpoint ledger.

#include "davkit/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <memory>
#include <set>
#include <sstream>

#include "davkit/errors.hpp"
#include "davkit/registry.hpp"

namespace davkit {

namespace {

const Registry& shared_registry() {
  static const Registry r;
  return r;
}

std::string weights_label(const WeightSet& w, const Group& g) {
  if (weights_are_full(w, g)) return "full";
  std::string out = "{";
  for (std::size_t i = 0; i < w.reduced.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.reduced[i]);
  }
  return out + "}";
}

}  // namespace

std::string s_key(int d) { return "s_le" + std::to_string(d); }
std::string d_key(int m) { return "D_m" + std::to_string(m); }

// ---------------------------------------------------------------------------
// Single-rule helpers.

ExtInt crude_upper_s(const Group& g, const WeightSet& w, int d) {
  if (d < 1) throw BadArgsError("constraint d must be >= 1");
  if (w.trivial) return ExtInt::fin(1);
  int e = e_w_constant(g, w);
  if (d < e) return ExtInt::inf();
  return ExtInt::fin((static_cast<long long>(e) - 1) * g.order() + 1);
}

long long lower_D_from_s(int d, ExtInt s_of_d_minus_1, int m) {
  if (d < 2) throw BadArgsError("the length argument needs d >= 2");
  if (m < 1) throw BadArgsError("packing count m must be >= 1");
  long long want = static_cast<long long>(m) * d;
  long long l = s_of_d_minus_1.finite ? std::min(want, s_of_d_minus_1.v) : want;
  // ceil(l/d) = m exactly when l lies in ((m-1)d, md]
  if (l <= static_cast<long long>(m - 1) * d) return 0;
  return l;
}

long long recursive_upper_D(long long d_m,
                            const std::map<int, ExtInt>& s_table) {
  ExtInt best = ExtInt::inf();
  for (const auto& [d, s] : s_table) {
    if (d < 1) throw BadArgsError("s-table keys must be >= 1");
    if (!s.finite) continue;
    best = ext_min(best, ExtInt::fin(std::max(d_m + d, s.v)));
  }
  if (!best.finite)
    throw NoFiniteEntryError("every s-entry is infinite; no recursion step");
  return best.v;
}

long long subgroup_lower_D(long long d_m1_h, long long d_m2_q, int m, int m1,
                           int m2) {
  if (m1 < 1 || m2 < 1) throw BadArgsError("split parts must be >= 1");
  if (m < m1 + m2 - 1)
    throw BadSplitError("need m >= m1 + m2 - 1, got m=" + std::to_string(m) +
                        " against " + std::to_string(m1 + m2 - 1));
  return d_m1_h + d_m2_q - 1;
}

ExtInt subgroup_lower_s(ExtInt s_h, ExtInt s_q) {
  if (!s_h.finite || !s_q.finite) return ExtInt::inf();
  return ExtInt::fin(s_h.v + s_q.v - 1);
}

long long inductive_upper_D(const WeightSet& w, long long d_m_h,
                            const std::map<long long, long long>& d_table_q) {
  if (!w.mult_closed)
    throw NotMultClosedError("quotient induction needs mult-closed weights");
  auto it = d_table_q.find(d_m_h);
  if (it == d_table_q.end())
    throw BadArgsError("quotient ladder lacks index " +
                       std::to_string(d_m_h));
  return it->second;
}

InductiveS inductive_upper_s(const WeightSet& w, ExtInt s_h_l1, ExtInt s_q_l2,
                             const std::vector<int>& l1,
                             const std::vector<int>& l2) {
  if (!w.mult_closed)
    throw NotMultClosedError("quotient induction needs mult-closed weights");
  auto check = [](const std::vector<int>& l, const char* name) {
    if (l.empty()) throw BadArgsError(std::string(name) + " is empty");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] < 1) throw BadArgsError(std::string(name) + " has entry < 1");
      if (i && l[i] <= l[i - 1])
        throw BadArgsError(std::string(name) + " is not strictly increasing");
    }
  };
  check(l1, "L1");
  check(l2, "L2");

  // a subgroup that always yields an immediate hit contributes no factor
  if (s_h_l1 == ExtInt::fin(1)) return {s_q_l2, l2};

  std::set<int> all;
  for (int l : l1) {
    // sums of exactly l entries drawn from l2, repetition allowed
    std::set<int> cur = {0};
    for (int step = 0; step < l; ++step) {
      std::set<int> next;
      for (int c : cur)
        for (int x : l2) next.insert(c + x);
      cur.swap(next);
    }
    all.insert(cur.begin(), cur.end());
  }
  InductiveS out;
  out.lengths.assign(all.begin(), all.end());
  if (!s_h_l1.finite || !s_q_l2.finite) {
    out.bound = ExtInt::inf();
  } else {
    out.bound =
        ExtInt::fin(static_cast<long long>(l2.back()) * (s_h_l1.v - 1) +
                    s_q_l2.v);
  }
  return out;
}

ProgressionParams progression_extract(const std::map<int, long long>& values,
                                      int e, long long order) {
  if (e < 1) throw BadArgsError("difference must be >= 1");
  if (order < 1) throw BadArgsError("group order must be >= 1");
  if (values.size() < 2)
    throw RangeTooShortError("need at least two ladder points");
  int prev = values.begin()->first;
  if (prev < 0) throw BadArgsError("ladder indices must be >= 0");
  for (auto it = std::next(values.begin()); it != values.end(); ++it) {
    if (it->first != prev + 1)
      throw BadArgsError("ladder indices must be contiguous");
    prev = it->first;
  }

  int top_m = values.rbegin()->first;
  long long d0 = values.rbegin()->second - static_cast<long long>(e) * top_m;
  int m_w = top_m;
  for (auto it = std::next(values.rbegin()); it != values.rend(); ++it) {
    if (it->second != d0 + static_cast<long long>(e) * it->first) break;
    m_w = it->first;
  }
  if (m_w == top_m)
    throw RangeTooShortError(
        "only the top point lies on the progression; extend the ladder "
        "(stabilization is guaranteed within m <= " +
        std::to_string(order) + " for difference-2 closed weights)");
  return {e, d0, m_w};
}

// ---------------------------------------------------------------------------
// Fixpoint ledger.

namespace {

struct Key {
  int kind;  // 0 = s_{<=d}, 1 = D_m
  int idx;
  bool operator<(const Key& o) const {
    return kind != o.kind ? kind < o.kind : idx < o.idx;
  }
};

std::string key_name(Key k) {
  return k.kind == 0 ? s_key(k.idx) : d_key(k.idx);
}

struct Cell {
  BoundSide lo{ExtInt::fin(1), "init", {}};
  BoundSide hi{ExtInt::inf(), "init", {}};
};

std::string sided(const std::string& name, const char* side, ExtInt v) {
  return name + "." + side + "=" + v.str();
}

// One (group, weights) ledger plus its subgroup-shape children.  Children
// are fully solved before the parent sweeps, so parent rules read settled
// child values; the one feedback-free extension is ensure_d_key, which
// lets the quotient-induction rule demand a deeper child ladder.
class Fix {
 public:
  Fix(Group g, const WeightSet& w, const LedgerTargets& t, int depth)
      : g_(std::move(g)),
        w_(reduce_weights(w.raw, g_)),
        targets_(t),
        depth_(depth) {
    for (int d = 1; d <= t.d_max; ++d) cells_[{0, d}] = Cell{};
    for (int m = 1; m <= t.m_max; ++m) register_d(m);
    if (!w_.trivial && !g_.is_trivial()) e_ = e_w_constant(g_, w_);

    // split rules only make sense one shape per rank; deep towers are not
    // worth the exponential child fan-out
    if (g_.is_elementary() && g_.rank() >= 2 && g_.rank() <= 12 &&
        depth_ < 12) {
      for (int a = 1; a < g_.rank(); ++a) {
        auto child = std::make_unique<Fix>(
            Group::elementary(g_.factors()[0], a), w_, t, depth_ + 1);
        child->run();
        children_.push_back(std::move(child));
      }
    }
  }

  const Group& group() const { return g_; }

  void seed_fact(const ExternalFact& f) {
    Key k;
    if (!parse_key(f.constant, k))
      throw BadArgsError("unknown constant '" + f.constant + "'");
    std::vector<std::string> in = f.detail.empty()
                                      ? std::vector<std::string>{}
                                      : std::vector<std::string>{f.detail};
    if (!(f.lo == ExtInt::fin(1))) improve_lo(k, f.lo, f.rule, in);
    if (f.hi.finite) improve_hi(k, f.hi, f.rule, in);
  }

  void run() {
    int rounds = 0;
    do {
      changed_ = false;
      sweep();
      if (++rounds > 10000)
        throw std::logic_error("bound fixpoint failed to settle");
    } while (changed_);
  }

  // extends the D-ladder to index m for a quotient probe and re-settles;
  // the chain rules need every intermediate rung
  ExtInt ensure_d_hi(int m) {
    if (cells_.find({1, m}) == cells_.end()) {
      int top = 0;
      for (const auto& [k, c] : cells_)
        if (k.kind == 1) top = std::max(top, k.idx);
      for (int i = top + 1; i <= m; ++i) register_d(i);
      run();
    }
    return cells_[{1, m}].hi.value;
  }

  LedgerMap snapshot() const {
    LedgerMap out;
    for (const auto& [k, c] : cells_) {
      BoundLedger row;
      row.constant = key_name(k);
      row.lo = c.lo;
      row.hi = c.hi;
      out.emplace(row.constant, std::move(row));
    }
    return out;
  }

  const std::vector<std::unique_ptr<Fix>>& children() const {
    return children_;
  }

 private:
  Group g_;
  WeightSet w_;
  LedgerTargets targets_;
  int depth_;
  int e_ = 0;  // e_W(G); 0 when weights are trivial or the group is
  std::map<Key, Cell> cells_;
  std::vector<std::unique_ptr<Fix>> children_;
  bool changed_ = false;

  void register_d(int m) {
    Cell c;
    c.lo = {ExtInt::fin(m), "trivial",
            {std::to_string(m) + " disjoint parts need length " +
             std::to_string(m)}};
    cells_[{1, m}] = c;
  }

  bool parse_key(const std::string& name, Key& out) const {
    for (const auto& [k, c] : cells_)
      if (key_name(k) == name) {
        out = k;
        return true;
      }
    return false;
  }

  Cell& cell(Key k) { return cells_.at(k); }
  bool has(Key k) const { return cells_.find(k) != cells_.end(); }
  ExtInt lo(Key k) const { return cells_.at(k).lo.value; }
  ExtInt hi(Key k) const { return cells_.at(k).hi.value; }

  void improve_lo(Key k, ExtInt v, const std::string& rule,
                  std::vector<std::string> inputs) {
    Cell& c = cell(k);
    if (v <= c.lo.value) return;
    if (!(v <= c.hi.value))
      throw ContradictionError(key_name(k) + " over " + g_.str() +
                               ": lower " + v.str() + " (" + rule +
                               ") crosses upper " + c.hi.value.str() + " (" +
                               c.hi.rule + ")");
    c.lo = {v, rule, std::move(inputs)};
    changed_ = true;
  }

  void improve_hi(Key k, ExtInt v, const std::string& rule,
                  std::vector<std::string> inputs) {
    Cell& c = cell(k);
    if (c.hi.value <= v) return;
    if (v < c.lo.value)
      throw ContradictionError(key_name(k) + " over " + g_.str() +
                               ": upper " + v.str() + " (" + rule +
                               ") crosses lower " + c.lo.value.str() + " (" +
                               c.lo.rule + ")");
    c.hi = {v, rule, std::move(inputs)};
    changed_ = true;
  }

  void set_exact(Key k, long long v, const std::string& rule,
                 const std::vector<std::string>& inputs) {
    improve_lo(k, ExtInt::fin(v), rule, inputs);
    improve_hi(k, ExtInt::fin(v), rule, inputs);
  }

  std::vector<Key> s_keys() const {
    std::vector<Key> out;
    for (const auto& [k, c] : cells_)
      if (k.kind == 0) out.push_back(k);
    return out;
  }
  std::vector<Key> d_keys() const {
    std::vector<Key> out;
    for (const auto& [k, c] : cells_)
      if (k.kind == 1) out.push_back(k);
    return out;
  }

  void sweep() {
    if (g_.is_trivial() || w_.trivial) {
      // a zero weight (or the zero group) makes every entry its own hit
      const char* why = g_.is_trivial() ? "the group is trivial"
                                        : "0 lies in the reduced weights";
      for (Key k : s_keys()) set_exact(k, 1, "trivial-weights", {why});
      for (Key k : d_keys()) set_exact(k, k.idx, "trivial-weights", {why});
      return;
    }

    const long long n = g_.order();
    const std::string size_in = "|G|=" + std::to_string(n);
    const std::string e_in = "e_W=" + std::to_string(e_);

    // s_{W,<=d} = infinity below e_W, crudely bounded from e_W on
    for (Key k : s_keys()) {
      if (k.idx < e_) {
        improve_lo(k, ExtInt::inf(), "inf-below-ew",
                   {e_in, "d=" + std::to_string(k.idx)});
      } else {
        improve_hi(k, ExtInt::fin((static_cast<long long>(e_) - 1) * n + 1),
                   "crude-upper", {e_in, size_in});
      }
    }

    // no sequence over a nontrivial group is forced at length 1
    for (Key k : s_keys())
      improve_lo(k, ExtInt::fin(2), "trivial",
                 {"a generator alone has no zero-subsum"});

    const bool full = weights_are_full(w_, g_);
    if (g_.is_elementary() && full) {
      const long long p = g_.factors()[0];
      const int r = g_.rank();
      Key s2{0, 2};
      if (has(s2)) {
        long long v = 1 + (n - 1) / (p - 1);
        set_exact(s2, v, "s2-closed-form",
                  {"p=" + std::to_string(p), "r=" + std::to_string(r)});
      }
      set_exact({1, 1}, r + 1, "dav-full-weights",
                {"r=" + std::to_string(r)});
      if (targets_.use_registry) {
        for (Key k : s_keys())
          if (auto row = shared_registry().lookup_s(g_, k.idx)) {
            std::string src = "registry:" + row->source;
            if (row->misprint) src += " (corrected)";
            improve_lo(k, ExtInt::fin(row->lo), "registry", {src});
            improve_hi(k, ExtInt::fin(row->hi), "registry", {src});
          }
        for (Key k : d_keys())
          if (auto row = shared_registry().lookup_d(g_, k.idx)) {
            std::string src = "registry:" + row->source;
            improve_lo(k, ExtInt::fin(row->lo), "registry", {src});
            improve_hi(k, ExtInt::fin(row->hi), "registry", {src});
          }
      }
    }

    // constrained constants dominate the plain Davenport constant, and
    // match it once the constraint passes it
    Key d1{1, 1};
    for (Key k : s_keys()) {
      improve_lo(k, lo(d1), "s-at-dav", {sided(key_name(d1), "lo", lo(d1))});
      if (hi(d1).finite && k.idx >= hi(d1).v)
        improve_hi(k, hi(d1), "s-at-dav",
                   {sided(key_name(d1), "hi", hi(d1))});
    }

    // shrinking the allowed lengths never shrinks the constant
    for (Key k : s_keys()) {
      Key up{0, k.idx + 1};
      if (!has(up)) continue;
      improve_lo(k, lo(up), "monotone-s",
                 {sided(key_name(up), "lo", lo(up))});
      improve_hi(up, hi(k), "monotone-s",
                 {sided(key_name(k), "hi", hi(k))});
    }

    // a block of |G| entries always contains a one-weight zero-subsum
    for (Key k : d_keys()) {
      if (k.idx == 1) {
        improve_hi(k, ExtInt::fin(n), "crude-upper", {size_in});
      } else {
        Key below{1, k.idx - 1};
        if (has(below) && hi(below).finite)
          improve_hi(k, hi(below) + n, "crude-upper",
                     {sided(key_name(below), "hi", hi(below)), size_in});
      }
    }

    // packing m parts of length <= d inside a forced-hit prefix
    for (Key k : d_keys()) {
      improve_lo(k, ExtInt::fin(static_cast<long long>(k.idx) * e_),
                 "lb-from-s", {e_in, "m=" + std::to_string(k.idx)});
      for (Key sk : s_keys()) {
        int d = sk.idx + 1;
        long long l = lower_D_from_s(d, lo(sk), k.idx);
        if (l > 0)
          improve_lo(k, ExtInt::fin(l), "lb-from-s",
                     {sided(key_name(sk), "lo", lo(sk)),
                      "d=" + std::to_string(d)});
      }
    }

    // one further part is found inside a d-window or the whole prefix
    for (Key k : d_keys()) {
      Key up{1, k.idx + 1};
      if (!has(up) || !hi(k).finite) continue;
      for (Key sk : s_keys()) {
        if (!hi(sk).finite) continue;
        long long cand = std::max(hi(k).v + sk.idx, hi(sk).v);
        improve_hi(up, ExtInt::fin(cand), "ub-recursion",
                   {sided(key_name(k), "hi", hi(k)),
                    sided(key_name(sk), "hi", hi(sk)),
                    "d=" + std::to_string(sk.idx)});
      }
    }

    // each extra demanded part costs at least one element, two when the
    // weights are closed under products and a step-2 witness survives
    const bool step2 = w_.mult_closed && n > 1;
    for (Key k : d_keys()) {
      Key up{1, k.idx + 1};
      if (!has(up)) continue;
      improve_lo(up, lo(k) + 1, "monotone-D",
                 {sided(key_name(k), "lo", lo(k))});
      if (hi(up).finite)
        improve_hi(k, hi(up) + (-1), "monotone-D",
                   {sided(key_name(up), "hi", hi(up))});
      if (step2) {
        improve_lo(up, lo(k) + 2, "lb-step2",
                   {sided(key_name(k), "lo", lo(k)), "mult-closed"});
        if (hi(up).finite)
          improve_hi(k, hi(up) + (-2), "lb-step2",
                     {sided(key_name(up), "hi", hi(up)), "mult-closed"});
      }
    }

    for (const auto& hc : children_) {
      // pair each subgroup shape with the complementary quotient shape
      const Fix* qc = find_child(g_.rank() - hc->group().rank());
      if (qc == nullptr) continue;
      split_rules(*hc, *qc);
    }
  }

  const Fix* find_child(int rank) const {
    for (const auto& c : children_)
      if (c->group().rank() == rank) return c.get();
    return nullptr;
  }

  Fix* find_child_mut(int rank) {
    for (const auto& c : children_)
      if (c->group().rank() == rank) return c.get();
    return nullptr;
  }

  void split_rules(const Fix& h, const Fix& q) {
    const std::string hl = h.group().str() + ":";
    const std::string ql = q.group().str() + ":";

    for (Key k : s_keys()) {
      if (!h.has(k) || !q.has(k)) continue;
      ExtInt v = subgroup_lower_s(h.lo(k), q.lo(k));
      improve_lo(k, v, "add-subgroup-s",
                 {hl + sided(key_name(k), "lo", h.lo(k)),
                  ql + sided(key_name(k), "lo", q.lo(k))});
    }

    for (Key k : d_keys()) {
      int m = k.idx;
      for (int m1 = 1; m1 <= m; ++m1) {
        int m2 = m + 1 - m1;
        Key kh{1, m1}, kq{1, m2};
        if (!h.has(kh) || !q.has(kq)) continue;
        if (!h.lo(kh).finite || !q.lo(kq).finite) continue;
        long long v = subgroup_lower_D(h.lo(kh).v, q.lo(kq).v, m, m1, m2);
        improve_lo(k, ExtInt::fin(v), "add-subgroup-D",
                   {hl + sided(key_name(kh), "lo", h.lo(kh)),
                    ql + sided(key_name(kq), "lo", q.lo(kq))});
      }
    }

    if (!w_.mult_closed) return;

    Fix* qm = find_child_mut(q.group().rank());
    for (Key k : d_keys()) {
      if (!h.has(k) || !h.hi(k).finite) continue;
      long long kq = h.hi(k).v;
      if (kq > 64 || qm == nullptr) continue;
      ExtInt v = qm->ensure_d_hi(static_cast<int>(kq));
      improve_hi(k, v, "ind-quotient-D",
                 {hl + sided(key_name(k), "hi", h.hi(k)),
                  ql + sided(d_key(static_cast<int>(kq)), "hi", v),
                  "mult-closed"});
    }

    for (Key k : s_keys()) {
      for (int d1 = 2; d1 <= k.idx / 2; ++d1) {
        if (k.idx % d1 != 0) continue;
        int d2 = k.idx / d1;
        Key k1{0, d1}, k2{0, d2};
        if (!h.has(k1) || !q.has(k2)) continue;
        if (!h.hi(k1).finite || !q.hi(k2).finite) continue;
        long long v = d2 * (h.hi(k1).v - 1) + q.hi(k2).v;
        improve_hi(k, ExtInt::fin(v), "ind-quotient-s",
                   {hl + sided(key_name(k1), "hi", h.hi(k1)),
                    ql + sided(key_name(k2), "hi", q.hi(k2)),
                    "d=" + std::to_string(d1) + "*" + std::to_string(d2),
                    "mult-closed"});
      }
    }
  }
};

bool looks_like_key(const std::string& s) {
  return s.rfind("s_le", 0) == 0 || s.rfind("D_m", 0) == 0;
}

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (static_cast<unsigned char>(ch) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", ch);
      out += buf;
      continue;
    }
    out += ch;
  }
  out += '"';
}

void append_side_json(std::string& out, const char* side,
                      const BoundSide& bs) {
  out += "{\"side\":\"";
  out += side;
  out += "\",\"rule\":";
  append_json_string(out, bs.rule);
  out += ",\"inputs\":[";
  for (std::size_t i = 0; i < bs.inputs.size(); ++i) {
    if (i) out += ",";
    append_json_string(out, bs.inputs[i]);
  }
  out += "]}";
}

void append_entries_json(std::string& out, const LedgerMap& m) {
  out += "[";
  bool first = true;
  for (const auto& [name, row] : m) {
    if (!first) out += ",";
    first = false;
    out += "{\"constant\":";
    append_json_string(out, name);
    out += ",\"lo\":";
    out += row.lo.value.finite ? std::to_string(row.lo.value.v) : "null";
    out += ",\"hi\":";
    out += row.hi.value.finite ? std::to_string(row.hi.value.v) : "null";
    out += ",\"provenance\":[";
    append_side_json(out, "lo", row.lo);
    out += ",";
    append_side_json(out, "hi", row.hi);
    out += "]}";
  }
  out += "]";
}

// "D_m1.hi=4" -> local ref; "C3:D_m2.hi=5" -> ref into a child ledger
struct InputRef {
  std::string child;  // empty for local
  std::string constant;
};

bool parse_input_ref(const std::string& in, InputRef& out) {
  std::string body = in;
  out.child.clear();
  auto colon = in.find(':');
  if (colon != std::string::npos && looks_like_key(in.substr(colon + 1))) {
    out.child = in.substr(0, colon);
    body = in.substr(colon + 1);
  }
  if (!looks_like_key(body)) return false;
  auto dot = body.find('.');
  if (dot == std::string::npos) return false;
  out.constant = body.substr(0, dot);
  return true;
}

}  // namespace

const BoundLedger& LedgerResult::at(const std::string& constant) const {
  auto it = entries.find(constant);
  if (it == entries.end())
    throw BadArgsError("no ledger entry for '" + constant + "'");
  return it->second;
}

std::string LedgerResult::explain(const std::string& constant) const {
  std::ostringstream out;
  std::set<std::string> seen;

  struct Item {
    std::string child;  // empty = this ledger
    std::string constant;
    int depth;
  };
  std::vector<Item> queue = {{"", constant, 0}};

  while (!queue.empty()) {
    Item it = queue.front();
    queue.erase(queue.begin());
    std::string tag = it.child.empty() ? it.constant
                                       : it.child + ":" + it.constant;
    if (!seen.insert(tag).second || it.depth > 8) continue;

    const LedgerMap* map = &entries;
    if (!it.child.empty()) {
      auto c = children.find(it.child);
      if (c == children.end()) continue;
      map = &c->second;
    }
    auto row_it = map->find(it.constant);
    if (row_it == map->end()) continue;
    const BoundLedger& row = row_it->second;

    std::string pad(static_cast<std::size_t>(it.depth) * 2, ' ');
    out << pad << tag << " = [" << row.lo.value.str() << ", "
        << row.hi.value.str() << "]\n";
    for (const BoundSide* side : {&row.lo, &row.hi}) {
      out << pad << "  " << (side == &row.lo ? "lo " : "hi ")
          << side->value.str() << " by " << side->rule;
      if (!side->inputs.empty()) {
        out << ": ";
        for (std::size_t i = 0; i < side->inputs.size(); ++i) {
          if (i) out << "; ";
          out << side->inputs[i];
        }
      }
      out << "\n";
      for (const std::string& in : side->inputs) {
        InputRef ref;
        if (!parse_input_ref(in, ref)) continue;
        // child chains stay within their own ledger
        std::string child = ref.child.empty() ? it.child : ref.child;
        queue.push_back({child, ref.constant, it.depth + 1});
      }
    }
  }
  return out.str();
}

std::string LedgerResult::to_json() const {
  std::string out = "{\"group\":";
  append_json_string(out, group_label);
  out += ",\"weights\":";
  append_json_string(out, weights_label);
  out += ",\"entries\":";
  append_entries_json(out, entries);
  out += ",\"children\":{";
  bool first = true;
  for (const auto& [label, m] : children) {
    if (!first) out += ",";
    first = false;
    append_json_string(out, label);
    out += ":";
    append_entries_json(out, m);
  }
  out += "}}";
  return out;
}

LedgerResult ledger_fixpoint(const Group& g, const WeightSet& w,
                             const LedgerTargets& targets,
                             const std::vector<ExternalFact>& facts) {
  if (targets.d_max < 1 || targets.m_max < 1)
    throw BadArgsError("targets need d_max >= 1 and m_max >= 1");

  Fix root(g, w, targets, 0);
  for (const ExternalFact& f : facts) root.seed_fact(f);
  root.run();

  LedgerResult out;
  out.group_label = g.str();
  out.weights_label = weights_label(w, g);
  out.entries = root.snapshot();
  for (const auto& c : root.children())
    out.children.emplace(c->group().str(), c->snapshot());
  return out;
}

}  // namespace davkit
