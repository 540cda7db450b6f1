// group.hpp -- finite abelian groups, weight sets, and sequences.
//
// A group is given by its invariant factor chain a_1 | a_2 | ... | a_r,
// each a_i >= 2; elements are encoded as mixed-radix indices into the
// coordinate enumeration, so the trivial element is always index 0.
// Sequences are finite multisets of elements, kept sorted by index; the
// sorted form is the canonical representative used by all searches.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "davkit/errors.hpp"

namespace davkit {

using Elem = int;

class Group {
 public:
  // factors may be empty (the trivial group)
  explicit Group(std::vector<int> factors);

  static Group cyclic(int n) { return Group({n}); }
  static Group elementary(int p, int r) {
    return Group(std::vector<int>(static_cast<std::size_t>(r), p));
  }

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long long order() const { return order_; }
  int exponent() const { return exponent_; }
  bool is_trivial() const { return order_ == 1; }

  // true when rank >= 1 and all factors equal one prime p
  bool is_elementary() const { return elem_p_ != 0; }
  int prime() const { return elem_p_; }

  Elem zero() const { return 0; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem scale(long long w, Elem a) const;
  int order_of(Elem a) const;

  std::vector<int> coords(Elem a) const;
  // coordinates are reduced mod the factors, so negatives are accepted
  Elem from_coords(const std::vector<int>& c) const;

  // identifier of the cyclic subgroup <a>: the least element generating it.
  // Two elements share an id exactly when they generate the same subgroup.
  Elem subgroup_id(Elem a) const;

  std::string elem_str(Elem a) const;
  std::string str() const;  // e.g. "C3^2" or "C2 x C4"

 private:
  std::vector<int> factors_;
  std::vector<long long> stride_;
  long long order_ = 1;
  int exponent_ = 1;
  int elem_p_ = 0;
  mutable std::vector<Elem> subgroup_id_;  // lazy, -1 = not yet computed
};

// A weight set: raw integers plus their reduction mod exp(G).
struct WeightSet {
  std::vector<long long> raw;  // sorted, deduplicated
  std::vector<int> reduced;    // residues mod exp(G), sorted, deduplicated
  bool trivial = false;        // 0 lies in reduced: weighted subsums collapse
  bool mult_closed = false;    // reduced closed under products mod exp(G)
};

WeightSet reduce_weights(std::vector<long long> raw, const Group& g);
WeightSet full_weights(const Group& g);       // {1, ..., exp-1}
WeightSet pm_weights(const Group& g);         // {1, -1}
WeightSet classical_weights(const Group& g);  // {1}
// keyword ("full", "pm", "classical") or comma-separated integers
WeightSet parse_weights(const std::string& spec, const Group& g);
bool weights_are_full(const WeightSet& w, const Group& g);

// A sequence over G: a sorted multiset of element indices.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Elem> entries);
  static Seq from_coord_lists(const Group& g,
                              const std::vector<std::vector<int>>& lists);

  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Elem>& entries() const { return entries_; }
  int multiplicity(Elem g) const;

  Seq appended(Elem g) const;
  bool contains(const Seq& sub) const;       // sub-multiset test
  Seq removed(const Seq& sub) const;         // multiset difference
  bool operator==(const Seq& o) const { return entries_ == o.entries_; }

  std::string str(const Group& g) const;

 private:
  std::vector<Elem> entries_;
};

// The set of W-weighted sums of the full sequence (every entry receives
// some weight).  The empty sequence yields {0}.
std::vector<Elem> weighted_sums(const Seq& s, const WeightSet& w,
                                const Group& g);

}  // namespace davkit
