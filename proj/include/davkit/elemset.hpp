// elemset.hpp -- a flat bitset over the elements of a fixed finite group.
//
// The reachability computations sweep sets of group elements; a packed
// bitset keeps those sweeps cache-friendly for orders up to a few
// thousand.
#pragma once

#include <cstdint>
#include <vector>

namespace davkit {

class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void clear() {
    for (auto& x : w_) x = 0;
  }
  bool contains_zero() const { return !w_.empty() && (w_[0] & 1); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool operator==(const ElemSet& o) const { return w_ == o.w_; }

  // union with a set over the same universe
  void or_with(const ElemSet& o) {
    for (std::size_t b = 0; b < w_.size(); ++b) w_[b] |= o.w_[b];
  }

  // members with index strictly above i
  int count_above(int i) const {
    int c = 0;
    std::size_t b = static_cast<std::size_t>(i + 1) >> 6;
    if (b >= w_.size()) return 0;
    c += __builtin_popcountll(w_[b] & ~((std::uint64_t{1} << ((i + 1) & 63)) - 1));
    for (++b; b < w_.size(); ++b) c += __builtin_popcountll(w_[b]);
    return c;
  }

  // visits members in increasing element order
  template <class F>
  void for_each(F f) const {
    for (std::size_t b = 0; b < w_.size(); ++b) {
      std::uint64_t x = w_[b];
      while (x) {
        int i = static_cast<int>(b << 6) + __builtin_ctzll(x);
        f(i);
        x &= x - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace davkit
