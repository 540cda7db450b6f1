// capsets.hpp -- caps in PG(r-1, p): point sets with no three collinear.
//
// For odd p a cap of size n in PG(r-1, p) is the same thing as a length-n
// sequence over C_p^r that is squarefree up to scaling and carries no
// weighted zero-subsum of length at most three with all weights non-zero.
// Largest caps therefore pin down s_{<=3} values exactly.
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "davkit/engine.hpp"
#include "davkit/group.hpp"

namespace davkit {

// canonical representative of a 1-dim subspace of F_p^r: first non-zero
// coordinate scaled to 1
using ProjPoint = std::vector<int>;

ProjPoint canonical_point(std::vector<int> v, int p);  // BadArgsError on zero

// all (p^r - 1)/(p - 1) canonical points, lexicographic order
std::vector<ProjPoint> projective_points(int p, int r);

struct CapSet {
  int p = 3;
  int r = 1;
  std::vector<ProjPoint> points;  // canonical, sorted

  int size() const { return static_cast<int>(points.size()); }
};

// a vanishing combination a pts[i] + b pts[j] + c pts[k] with a, b, c != 0
struct CollinearTriple {
  int i = 0, j = 0, k = 0;
  std::array<int, 3> coeffs{};
};

struct CapCheck {
  bool ok = true;
  std::optional<CollinearTriple> triple;
};

// DuplicatePointError on repeats, BadArgsError on non-canonical input
CapCheck is_cap(const std::vector<ProjPoint>& points, int p);

enum class SearchMode { find, prove };

struct CapSearchResult {
  SearchMode mode = SearchMode::prove;
  int target = 0;
  bool found = false;           // a cap of size >= target exists
  bool proven = false;          // prove mode exhausted: best is the maximum
  int best = 0;                 // largest size seen
  std::vector<ProjPoint> cap;   // witness of that size
};

// Branch and bound over canonical points in lexicographic order, first two
// points pinned to e1 and e2 (the collineation group is transitive on
// ordered non-collinear pairs).  find mode stops once `target` is reached,
// prove mode exhausts and certifies the maximum.  Collinearity is served
// from precomputed per-pair bitsets.  With threads > 1 the top-level
// branches fan out over a pool sharing a monotone best size.
CapSearchResult max_cap_search(int p, int r, int target, SearchMode mode,
                               int threads = 1);  // EvenPError for p = 2

// caps <-> sequences over C_p^r (g must be elementary of matching shape)
Seq cap_to_sequence(const CapSet& c, const Group& g);       // NotACapError
CapSet sequence_to_cap(const Seq& s, const Group& g);       // see below
// sequence_to_cap: a weighted zero-subsum of length <= 2 (zero entries,
// repeats up to scaling) raises HasShortSubsumError; a length-3 one means a
// collinear triple and raises NotACapError.

// text format: first line "p r n", then n lines of r coordinates
CapSet parse_cap(std::istream& in);
void write_cap(const CapSet& c, std::ostream& out);

}  // namespace davkit
