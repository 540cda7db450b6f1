// registry.cpp -- the data itself plus lookup and consistency machinery.

#include "davkit/registry.hpp"

#include <cassert>

namespace davkit {

namespace {

long long ipow(int b, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

std::string group_name(int p, int r) {
  return r == 1 ? "C" + std::to_string(p)
                : "C" + std::to_string(p) + "^" + std::to_string(r);
}

}  // namespace

std::string check_status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::in_range:
      return "IN-RANGE";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::noted_misprint:
      return "NOTED-MISPRINT";
    default:
      return "NOT-RECORDED";
  }
}

std::string s_id(const Group& g, int d) {
  return "s_le" + std::to_string(d) + "(" + g.str() + ")";
}

std::string d_id(const Group& g, int m) {
  return "D_m" + std::to_string(m) + "(" + g.str() + ")";
}

void Registry::add_raw(KnownValue kv) {
  assert(index_.find(kv.id) == index_.end());
  index_.emplace(kv.id, entries_.size());
  entries_.push_back(std::move(kv));
}

void Registry::add_s(int p, int r, int d, long long lo, long long hi,
                     std::string source, bool misprint, std::string note) {
  s_rows_.push_back({p, r, d, entries_.size()});
  add_raw({"s_le" + std::to_string(d) + "(" + group_name(p, r) + ")", lo, hi,
           std::move(source), misprint, std::move(note)});
}

void Registry::add_d(int p, int r, int m, long long v, std::string source) {
  d_rows_.push_back({p, r, m, entries_.size()});
  add_raw({"D_m" + std::to_string(m) + "(" + group_name(p, r) + ")", v, v,
           std::move(source)});
}

Registry::Registry() {
  // closed forms for every tabulated shape: s_le2 = 1 + (p^r - 1)/(p - 1),
  // and the stable tail s_led = r + 1 once d >= r + 1
  for (int p : {2, 3, 5, 7}) {
    int rmax = p == 2 ? 10 : p == 3 ? 10 : p == 5 ? 5 : 4;
    for (int r = 1; r <= rmax; ++r) {
      long long s2 = 1 + (ipow(p, r) - 1) / (p - 1);
      if (r == 1) {
        add_s(p, 1, 2, 2, 2, "closed-form:s2");  // also the stable tail
        continue;
      }
      add_s(p, r, 2, s2, s2, "closed-form:s2");
      if (p == 2 && r >= 3)
        add_s(2, r, 3, 1 + ipow(2, r - 1), 1 + ipow(2, r - 1),
              "closed-form:s3");
      if (r == 2) {
        add_s(p, 2, 3, 3, 3, "closed-form:dav");
        continue;
      }
    }
  }

  // code-table diagonals, p = 3
  add_s(3, 3, 3, 5, 5, "code-tables");
  add_s(3, 3, 4, 4, 4, "closed-form:dav");
  add_s(3, 4, 3, 11, 11, "code-tables");
  add_s(3, 4, 4, 6, 6, "code-tables");
  add_s(3, 4, 5, 5, 5, "closed-form:dav");
  add_s(3, 5, 3, 21, 21, "code-tables");
  add_s(3, 5, 4, 12, 12, "code-tables");
  add_s(3, 5, 5, 7, 7, "code-tables");
  add_s(3, 5, 6, 6, 6, "closed-form:dav");
  add_s(3, 6, 3, 57, 57, "code-tables");
  add_s(3, 6, 4, 15, 15, "code-tables");
  add_s(3, 6, 5, 13, 13, "code-tables");
  add_s(3, 6, 6, 8, 8, "code-tables", true,
        "printed with subscript <= d instead of <= 6");
  add_s(3, 6, 7, 7, 7, "closed-form:dav", true,
        "printed as 8 for d >= 7; the stable tail gives 7");

  // eta bounds for ternary spaces, r = 7..10 (s_le3 = eta at exponent 3)
  add_s(3, 7, 3, 113, 137, "cap-tables");
  add_s(3, 8, 3, 249, 387, "cap-tables");
  add_s(3, 9, 3, 533, 1038, "cap-tables");
  add_s(3, 10, 3, 1217, 2817, "cap-tables");
  for (int r = 7; r <= 10; ++r)
    add_s(3, r, r + 1, r + 1, r + 1, "closed-form:dav");

  // code-table diagonals, p = 5
  add_s(5, 3, 3, 7, 7, "code-tables");
  add_s(5, 3, 4, 4, 4, "closed-form:dav");
  add_s(5, 4, 3, 27, 27, "code-tables");
  add_s(5, 4, 4, 7, 7, "code-tables");
  add_s(5, 4, 5, 5, 5, "closed-form:dav");
  add_s(5, 5, 3, 67, 89, "code-tables");
  add_s(5, 5, 4, 13, 13, "code-tables");
  add_s(5, 5, 5, 7, 7, "code-tables");
  add_s(5, 5, 6, 6, 6, "closed-form:dav");

  // code-table diagonals, p = 7
  add_s(7, 3, 3, 9, 9, "code-tables");
  add_s(7, 3, 4, 4, 4, "closed-form:dav");
  add_s(7, 4, 3, 51, 51, "code-tables");
  add_s(7, 4, 4, 9, 9, "code-tables");
  add_s(7, 4, 5, 5, 5, "closed-form:dav");

  // code-table diagonals, p = 2 (binary case, d >= 4)
  add_s(2, 3, 4, 4, 4, "closed-form:dav");
  add_s(2, 4, 4, 6, 6, "code-tables");
  add_s(2, 4, 5, 5, 5, "closed-form:dav");
  add_s(2, 5, 4, 7, 7, "code-tables");
  add_s(2, 5, 5, 7, 7, "code-tables");
  add_s(2, 5, 6, 6, 6, "closed-form:dav");
  add_s(2, 6, 4, 9, 9, "code-tables");
  add_s(2, 6, 5, 8, 8, "code-tables");
  add_s(2, 6, 6, 8, 8, "code-tables");
  add_s(2, 6, 7, 7, 7, "closed-form:dav", true,
        "printed with subscript <= 6 in place of the d >= 7 tail");
  add_s(2, 7, 4, 12, 12, "code-tables");
  add_s(2, 7, 5, 10, 10, "code-tables");
  add_s(2, 7, 6, 9, 9, "code-tables");
  add_s(2, 7, 7, 9, 9, "code-tables");
  add_s(2, 7, 8, 8, 8, "closed-form:dav");
  add_s(2, 8, 4, 18, 18, "code-tables");
  add_s(2, 8, 5, 13, 13, "code-tables");
  add_s(2, 8, 6, 10, 10, "code-tables");
  add_s(2, 8, 7, 10, 10, "code-tables");
  add_s(2, 8, 8, 10, 10, "code-tables");
  add_s(2, 8, 9, 9, 9, "closed-form:dav");
  add_s(2, 9, 4, 24, 24, "code-tables");
  add_s(2, 9, 5, 19, 19, "code-tables");
  add_s(2, 9, 6, 12, 12, "code-tables");
  add_s(2, 9, 7, 11, 11, "code-tables");
  add_s(2, 9, 8, 11, 11, "code-tables");
  add_s(2, 9, 9, 11, 11, "code-tables");
  add_s(2, 9, 10, 10, 10, "closed-form:dav");
  add_s(2, 10, 4, 34, 34, "code-tables");
  add_s(2, 10, 5, 25, 25, "code-tables");
  add_s(2, 10, 6, 16, 16, "code-tables");
  add_s(2, 10, 7, 13, 13, "code-tables");
  add_s(2, 10, 8, 12, 12, "code-tables");
  add_s(2, 10, 9, 12, 12, "code-tables");
  add_s(2, 10, 10, 12, 12, "code-tables");
  add_s(2, 10, 11, 11, 11, "closed-form:dav");

  // derived relation at exponent 3: s_A = g_A = 2 eta - 1
  for (int r = 3; r <= 10; ++r) {
    const KnownValue& eta = entries_[index_.at(
        "s_le3(" + group_name(3, r) + ")")];
    for (const char* kind : {"sA", "gA"})
      add_raw({std::string(kind) + "(" + group_name(3, r) + ")",
               2 * eta.lo - 1, 2 * eta.hi - 1, "eta-relation"});
  }

  // multi-wise ladders
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m <= 8; ++m) add_d(p, 1, m, 2 * m, "multiwise:cyclic");
    int c = (p + 2) / 3;  // ceil(p/3)
    for (int m = 1; m <= 6; ++m)
      add_d(p, 2, m, m <= c ? 3 * m : 2 * m + c, "multiwise:rank2");
    add_raw({"mA(" + group_name(p, 1) + ")", 1, 1, "multiwise:cyclic"});
    add_raw({"D_m0(" + group_name(p, 1) + ")", 0, 0, "multiwise:cyclic"});
    add_raw({"mA(" + group_name(p, 2) + ")", c, c, "multiwise:rank2"});
    add_raw({"D_m0(" + group_name(p, 2) + ")", c, c, "multiwise:rank2"});
  }
  const long long d333[] = {4, 7, 9, 12, 14, 16, 18, 20};
  for (int m = 1; m <= 8; ++m)
    add_d(3, 3, m, d333[m - 1], "multiwise:C3^3");
  add_raw({"D_m0(C3^3)", 4, 4, "multiwise:C3^3"});
  add_raw({"mA(C3^3)", 5, 5, "multiwise:C3^3", true,
           "the ladder is already arithmetic from m = 4 on"});
}

std::optional<KnownValue> Registry::lookup(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second];
}

std::optional<KnownValue> Registry::lookup_s(const Group& g, int d) const {
  if (!g.is_elementary() || d < 1) return std::nullopt;
  return lookup(s_id(g, std::min(d, g.rank() + 1)));
}

std::optional<KnownValue> Registry::lookup_d(const Group& g, int m) const {
  if (m < 1) return std::nullopt;
  return lookup(d_id(g, m));
}

std::vector<CheckLine> Registry::cross_check(
    const std::map<std::string, long long>& computed) const {
  std::vector<CheckLine> out;
  for (const auto& [id, got] : computed) {
    CheckLine line{id, got, CheckStatus::not_recorded, std::nullopt};
    if (auto kv = lookup(id)) {
      line.entry = kv;
      if (kv->exact())
        line.status = got == kv->lo ? CheckStatus::pass
                      : kv->misprint ? CheckStatus::noted_misprint
                                     : CheckStatus::fail;
      else
        line.status = kv->contains(got) ? CheckStatus::in_range
                                        : CheckStatus::fail;
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> Registry::self_check() const {
  std::vector<std::string> problems;
  auto complain = [&](const std::string& what) { problems.push_back(what); };

  for (const auto& kv : entries_)
    if (kv.lo > kv.hi) complain(kv.id + ": lo exceeds hi");

  for (const auto& row : s_rows_) {
    const KnownValue& kv = entries_[row.idx];
    if (row.d == 2 &&
        kv.lo != 1 + (ipow(row.p, row.r) - 1) / (row.p - 1))
      complain(kv.id + ": disagrees with the s_le2 closed form");
    if (row.d >= row.r + 1 && (kv.lo != row.r + 1 || kv.hi != row.r + 1))
      complain(kv.id + ": stable tail must equal rank + 1");
    // monotone in d whenever the next row exists
    for (const auto& other : s_rows_)
      if (other.p == row.p && other.r == row.r && other.d == row.d + 1) {
        const KnownValue& nx = entries_[other.idx];
        if (nx.lo > kv.lo || nx.hi > kv.hi)
          complain(kv.id + ": not monotone towards " + nx.id);
      }
  }

  for (int r = 3; r <= 10; ++r) {
    auto eta = lookup("s_le3(" + group_name(3, r) + ")");
    for (const char* kind : {"sA", "gA"}) {
      auto rel = lookup(std::string(kind) + "(" + group_name(3, r) + ")");
      if (!eta || !rel) continue;
      if (rel->lo != 2 * eta->lo - 1 || rel->hi != 2 * eta->hi - 1)
        complain(rel->id + ": eta relation violated");
    }
  }

  // fully weighted ladders climb by at least 2 per extra subsum
  for (const auto& row : d_rows_)
    for (const auto& other : d_rows_)
      if (other.p == row.p && other.r == row.r && other.m == row.m + 1 &&
          entries_[other.idx].lo < entries_[row.idx].lo + 2)
        complain(entries_[other.idx].id + ": ladder step below 2");

  return problems;
}

}  // namespace davkit
