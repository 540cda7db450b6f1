// bounds.hpp -- the bound calculus: lemma-shaped rules plus a fixpoint
// ledger that combines them.
//
// Each rule is a pure function from known bounds to a new bound.  The
// ledger keeps one interval [lo, hi] per constant, applies every rule
// until nothing shrinks, and records which rule produced each side so a
// derivation can be replayed.  Rules only ever tighten intervals, so the
// fixpoint is independent of application order; a crossing interval is an
// implementation bug and raises ContradictionError instead of clamping.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "davkit/engine.hpp"
#include "davkit/group.hpp"
#include "davkit/numeric.hpp"

namespace davkit {

// ---------------------------------------------------------------------------
// Single-rule helpers.  These are usable on their own; the ledger calls the
// same logic internally.

// s_{W,<=d}(G) is infinite below e_W(G) and at most (e_W - 1)|G| + 1 from
// e_W on.
ExtInt crude_upper_s(const Group& g, const WeightSet& w, int d);

// Largest l <= s_lower with ceil(l/d) = m, i.e. the best lower bound on
// D_{W,m}(G) obtainable from a lower bound on s_{W,<=d-1}(G).  Returns 0
// when no l with ceil(l/d) = m fits below s_lower.
long long lower_D_from_s(int d, ExtInt s_of_d_minus_1, int m);

// D_{W,m+1}(G) <= min over d of max{D_{W,m}(G) + d, s_{W,<=d}(G)}.
// Throws NoFiniteEntryError when no finite s-entry is available.
long long recursive_upper_D(long long d_m,
                            const std::map<int, ExtInt>& s_table);

// D_{W,m}(G) >= D_{W,m1}(H) + D_{W,m2}(G/H) - 1, valid for m >= m1+m2-1.
long long subgroup_lower_D(long long d_m1_h, long long d_m2_q, int m, int m1,
                           int m2);

// s_{W,<=d}(G) >= s_{W,<=d}(H) + s_{W,<=d}(G/H) - 1; an infinite side
// makes the whole bound infinite.
ExtInt subgroup_lower_s(ExtInt s_h, ExtInt s_q);

// D_{W,m}(G) <= D_{W,k}(G/H) with k = D_{W,m}(H), for W closed under
// multiplication mod exp(G).  The caller supplies the quotient ladder;
// a missing index k raises BadArgsError.
long long inductive_upper_D(const WeightSet& w, long long d_m_h,
                            const std::map<long long, long long>& d_table_q);

// Length sets are sorted, deduplicated, strictly positive.
struct InductiveS {
  ExtInt bound;
  std::vector<int> lengths;  // the constrained set the bound applies to
};

// s_{W,L}(G) <= (max L2)(s_{W,L1}(H) - 1) + s_{W,L2}(G/H) where L is the
// union over l in L1 of the l-fold sumsets of L2.  A subgroup with
// s_{W,L1}(H) = 1 contributes nothing: the bound collapses to the
// quotient value on L2 itself.
InductiveS inductive_upper_s(const WeightSet& w, ExtInt s_h_l1, ExtInt s_q_l2,
                             const std::vector<int>& l1,
                             const std::vector<int>& l2);

// Tail of an eventually arithmetic ladder m -> D_{W,m}(G).
struct ProgressionParams {
  int difference = 0;   // = e_W(G)
  long long d0 = 0;     // intercept: D_{W,m} = d0 + m * difference
  int m_w = 0;          // least m in range from which the formula holds
};

// Fits the progression to a contiguous ladder.  The difference is taken
// on trust (it equals e_W(G) for the ladders produced here); the intercept
// comes from the top entry and m_w is minimal over the supplied range.
// Fewer than two trailing points on the progression means the range does
// not reach past stabilization: RangeTooShortError.
ProgressionParams progression_extract(const std::map<int, long long>& values,
                                      int e, long long order);

// ---------------------------------------------------------------------------
// Fixpoint ledger.

// One side of an interval with the rule that last tightened it.  Inputs
// are rendered with the values they had when the rule fired, so a chain
// stays valid even after later improvements elsewhere.
struct BoundSide {
  ExtInt value;
  std::string rule;
  std::vector<std::string> inputs;
};

// Interval state of a single constant ("s_le2" or "D_m3") for a fixed
// group and weight set.  lo <= hi always.
struct BoundLedger {
  std::string constant;
  BoundSide lo;
  BoundSide hi;

  bool exact() const { return lo.value == hi.value; }
};

using LedgerMap = std::map<std::string, BoundLedger>;

// Which constants a fixpoint run tracks: s_{W,<=d} for d in [1, d_max]
// and D_{W,m} for m in [1, m_max].
struct LedgerTargets {
  int d_max = 4;
  int m_max = 4;
  bool use_registry = true;  // inject known-value rows for full weights
};

// Externally certified knowledge fed into the run, e.g. a packing witness
// ("witness") or an exhaustive machine check ("engine").  Sides the fact
// does not constrain stay at lo = 1 / hi = infinity.
struct ExternalFact {
  std::string constant;
  ExtInt lo = ExtInt::fin(1);
  ExtInt hi = ExtInt::inf();
  std::string rule;
  std::string detail;
};

struct LedgerResult {
  std::string group_label;
  std::string weights_label;
  LedgerMap entries;
  // Subgroup shapes used by the split rules, one ledger per C_p^s.
  std::map<std::string, LedgerMap> children;

  const BoundLedger& at(const std::string& constant) const;

  // Derivation chain for one constant: both sides, with referenced
  // constants expanded recursively.
  std::string explain(const std::string& constant) const;
  std::string to_json() const;
};

std::string s_key(int d);  // "s_le2"
std::string d_key(int m);  // "D_m3"

// Runs every applicable rule to the fixpoint.  Deterministic; raises
// ContradictionError if any interval crosses (external facts included).
LedgerResult ledger_fixpoint(const Group& g, const WeightSet& w,
                             const LedgerTargets& targets,
                             const std::vector<ExternalFact>& facts = {});

}  // namespace davkit
