// codes.hpp -- p-ary linear codes seen through their parity-check matrices.
//
// The bridge: a sequence over C_p^r that generates the group is the column
// list of a full-rank parity-check matrix, and weighted zero-subsums with
// all weights non-zero correspond to codewords supported exactly on the
// chosen columns.  Minimum distance and disjoint-support codewords
// therefore answer sequence questions and vice versa.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "davkit/engine.hpp"
#include "davkit/group.hpp"

namespace davkit {

// dense matrix over F_p, row-major
struct FpMatrix {
  int p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  FpMatrix() = default;
  FpMatrix(int p_, int rows_, int cols_)
      : p(p_), rows(rows_), cols(cols_),
        a(static_cast<std::size_t>(rows_) * cols_, 0) {}

  int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  int at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

// Gauss-Jordan over F_p (p prime, else NotPrimeError); returns the rank and
// optionally the pivot column list.  The matrix is reduced in place.
int rref_in_place(FpMatrix& m, std::vector<int>* pivot_cols = nullptr);
int fp_rank(FpMatrix m);

// basis of the right kernel of m, one row per basis vector (k x cols)
FpMatrix null_space(const FpMatrix& m);

// An [n, n-r]_p code given by a full-rank parity-check matrix.
struct LinearCode {
  FpMatrix pcm;  // r x n, rank r

  int p() const { return pcm.p; }
  int n() const { return pcm.cols; }
  int r() const { return pcm.rows; }
  int k() const { return pcm.cols - pcm.rows; }
};

LinearCode code_from_pcm(FpMatrix pcm);  // NotFullRankError when rank < rows

// columns = the sequence entries in canonical sorted order; the sequence
// must generate C_p^r (NotGeneratingError) and G must be elementary
LinearCode code_from_sequence(const Seq& s, const Group& g);
Seq sequence_from_code(const LinearCode& c, const Group& g);

// Minimum distance; INFINITY for the zero code (k = 0).  Codeword
// enumeration when p^k is small, otherwise growing column-subset checks.
ConstantValue min_distance(const LinearCode& c,
                           long long enum_threshold = 1LL << 22);

// m-admissibility: no m pairwise disjoint-support non-zero codewords.
// When inadmissible, `words` holds m disjoint-support codewords.
struct AdmissibleResult {
  bool admissible = true;
  std::vector<std::vector<int>> words;
};
AdmissibleResult is_m_admissible(const LinearCode& c, int m,
                                 long long enum_threshold = 1LL << 22);

// Largest n admitting an [n, n-r]_p code of minimum distance >= d+1 gives
// s_{<=d} = n + 1.  Exhaustive branch-and-bound over projective column
// sets; unknown when the cap n_limit is reached.
ConstantValue s_via_codes(int p, int r, int d, int n_limit);

// text format: first line "p n r", then r lines of n residues
FpMatrix parse_pcm(std::istream& in);
void write_pcm(const FpMatrix& m, std::ostream& out);

}  // namespace davkit
