// engine.hpp -- exact search for weighted zero-sum invariants.
//
// Everything here is exhaustive and certificate-producing.  Searches that
// can exceed their budget return an explicit unknown result instead of
// guessing; infinite constants are detected analytically before any
// enumeration starts.
#pragma once

#include <optional>
#include <vector>

#include "davkit/group.hpp"
#include "davkit/numeric.hpp"

namespace davkit {

// A weighted zero-subsum: a non-empty subsequence together with one weight
// per entry (as reduced residues) whose weighted sum is zero.
struct ZeroSubsumWitness {
  Seq support;
  std::vector<int> weights;  // parallel to support.entries()
};

bool witness_valid(const ZeroSubsumWitness& wit, const Seq& parent,
                   const WeightSet& w, const Group& g);

// Pairwise disjoint zero-subsums of a common parent sequence.
struct PackingWitness {
  std::vector<ZeroSubsumWitness> parts;
};

bool packing_valid(const PackingWitness& pw, const Seq& parent,
                   const WeightSet& w, const Group& g, int target);

// Result of a search that may be finite, provably infinite, or unresolved
// within the configured search limit.
struct ConstantValue {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  long long value = 0;  // the constant if finite; the exhausted limit if unknown

  static ConstantValue fin(long long v) {
    return ConstantValue{Kind::finite, v};
  }
  static ConstantValue inf() { return ConstantValue{Kind::infinite, 0}; }
  static ConstantValue unk(long long limit) {
    return ConstantValue{Kind::unknown, limit};
  }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }
  bool is_unknown() const { return kind == Kind::unknown; }
  bool operator==(const ConstantValue& o) const {
    return kind == o.kind && value == o.value;
  }
  std::string str() const;
};

// Least k >= 1 such that some k weights (repetition allowed) sum to zero
// mod exp(G).  Always <= exp(G).  Throws TrivialWeightsError when some
// weight is 0 mod exp(G).
int e_w_constant(const Group& g, const WeightSet& w);

// All k in [1, cap] such that some k weights sum to zero mod exp(G).
std::vector<int> zero_weight_lengths(const Group& g, const WeightSet& w,
                                     int cap);

// Shortest non-empty weighted zero-subsum of s, or nullopt if none exists
// (of length <= length_cap when length_cap >= 0).
std::optional<ZeroSubsumWitness> shortest_zero_subsum(const Seq& s,
                                                      const WeightSet& w,
                                                      const Group& g,
                                                      int length_cap = -1);

// A packing of `target` pairwise disjoint zero-subsums, or nullopt if the
// maximum packing is smaller.
std::optional<PackingWitness> max_disjoint_packing(const Seq& s,
                                                   const WeightSet& w,
                                                   const Group& g, int target);

// Size of a maximum packing, computed exactly but reported capped at `cap`
// (the search stops once cap disjoint parts are found).
int max_packing_count(const Seq& s, const WeightSet& w, const Group& g,
                      int cap);

// Smallest n such that every sequence of length n over G has a weighted
// zero-subsum whose length lies in L.  Counterexample layers are searched
// in canonical (sorted) order; `limit` caps the explored length.
//
// A positive `time_budget_s` bounds the wall clock: on expiry the result
// is unknown at the deepest fully completed length, exactly as if `limit`
// had been reached there.  Zero means no time bound.
ConstantValue s_constant(const Group& g, const WeightSet& w,
                         const std::vector<int>& L, long long limit,
                         double time_budget_s = 0);

// L = {1, ..., d}
ConstantValue s_le_d(const Group& g, const WeightSet& w, int d,
                     long long limit, double time_budget_s = 0);

// Smallest n such that every sequence of length n has m pairwise disjoint
// weighted zero-subsums.
ConstantValue d_constant(const Group& g, const WeightSet& w, int m,
                         long long limit, double time_budget_s = 0);

// d_constant for every m in [1, m_max], from a single layer search.
// Entries already settled when a time budget expires keep their exact
// values; the rest are unknown at the completed depth.
std::vector<ConstantValue> d_profile(const Group& g, const WeightSet& w,
                                     int m_max, long long limit,
                                     double time_budget_s = 0);

}  // namespace davkit
