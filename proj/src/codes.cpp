// codes.cpp -- F_p linear algebra, minimum distance, admissibility, and the
// column-set search behind s_via_codes.

#include "davkit/codes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <istream>
#include <ostream>
#include <unordered_map>

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
  return 0;  // unreachable for a != 0, p prime
}

// p^k capped at `cap` to avoid overflow
long long pow_capped(int p, int k, long long cap) {
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    v *= p;
    if (v > cap) return cap + 1;
  }
  return v;
}

}  // namespace

int rref_in_place(FpMatrix& m, std::vector<int>* pivot_cols) {
  if (!is_prime(m.p)) throw NotPrimeError(std::to_string(m.p));
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    int inv = inv_mod(m.at(rank, col), m.p);
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv % m.p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      int f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = (m.at(i, j) + (m.p - f) * m.at(rank, j)) % m.p;
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

int fp_rank(FpMatrix m) { return rref_in_place(m); }

FpMatrix null_space(const FpMatrix& m) {
  FpMatrix red = m;
  std::vector<int> pivots;
  int rank = rref_in_place(red, &pivots);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  FpMatrix basis(m.p, m.cols - rank, m.cols);
  int row = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = 1;
    for (int i = 0; i < rank; ++i)
      basis.at(row, pivots[i]) = (m.p - red.at(i, f)) % m.p;
    ++row;
  }
  return basis;
}

LinearCode code_from_pcm(FpMatrix pcm) {
  if (fp_rank(pcm) != pcm.rows)
    throw NotFullRankError("parity-check matrix must have full row rank");
  return LinearCode{std::move(pcm)};
}

LinearCode code_from_sequence(const Seq& s, const Group& g) {
  if (!g.is_elementary())
    throw BadArgsError("code bridge requires an elementary p-group");
  FpMatrix pcm(g.prime(), g.rank(), s.length());
  for (int j = 0; j < s.length(); ++j) {
    auto c = g.coords(s.entries()[j]);
    for (int i = 0; i < g.rank(); ++i) pcm.at(i, j) = c[i];
  }
  if (fp_rank(pcm) != g.rank())
    throw NotGeneratingError("sequence does not generate the group");
  return LinearCode{std::move(pcm)};
}

Seq sequence_from_code(const LinearCode& c, const Group& g) {
  if (!g.is_elementary() || g.prime() != c.p() || g.rank() != c.r())
    throw BadArgsError("group does not match the code parameters");
  std::vector<Elem> entries;
  for (int j = 0; j < c.n(); ++j) {
    std::vector<int> col(c.r());
    for (int i = 0; i < c.r(); ++i) col[i] = c.pcm.at(i, j);
    entries.push_back(g.from_coords(col));
  }
  return Seq(std::move(entries));
}

namespace {

// Odometer enumeration of non-zero codewords: stepping a base-p counter
// adds generator rows only, since resetting a digit from p-1 to 0 is the
// same as adding the row once more.  Visits each non-zero word exactly once.
template <class F>
void for_each_codeword(const FpMatrix& gen, F f) {
  int k = gen.rows, n = gen.cols, p = gen.p;
  if (k == 0) return;
  std::vector<int> digits(k, 0), word(n, 0);
  auto add_row = [&](int i) {
    for (int j = 0; j < n; ++j) word[j] = (word[j] + gen.at(i, j)) % p;
  };
  while (true) {
    int i = 0;
    while (i < k && digits[i] == p - 1) {
      digits[i] = 0;
      add_row(i);
      ++i;
    }
    if (i == k) return;  // wrapped to zero: done
    ++digits[i];
    add_row(i);
    if (!f(word)) return;
  }
}

}  // namespace

ConstantValue min_distance(const LinearCode& c, long long enum_threshold) {
  if (c.k() == 0) return ConstantValue::inf();
  if (pow_capped(c.p(), c.k(), enum_threshold) <= enum_threshold) {
    FpMatrix gen = null_space(c.pcm);
    int best = c.n() + 1;
    for_each_codeword(gen, [&](const std::vector<int>& word) {
      int wt = 0;
      for (int x : word) wt += x != 0;
      if (wt < best) best = wt;
      return best > 1;  // weight 1 cannot be beaten
    });
    assert(best <= c.n());
    return ConstantValue::fin(best);
  }
  // growing column subsets: the first size with a dependent subset is the
  // minimum distance
  for (int t = 1; t <= c.n(); ++t) {
    std::vector<int> idx(t);
    std::function<bool(int, int)> rec = [&](int pos, int lo) -> bool {
      if (pos == t) {
        FpMatrix sub(c.p(), c.r(), t);
        for (int j = 0; j < t; ++j)
          for (int i = 0; i < c.r(); ++i) sub.at(i, j) = c.pcm.at(i, idx[j]);
        return fp_rank(std::move(sub)) < t;
      }
      for (int j = lo; j <= c.n() - (t - pos); ++j) {
        idx[pos] = j;
        if (rec(pos + 1, j + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return ConstantValue::fin(t);
  }
  return ConstantValue::inf();  // k >= 1 never reaches here
}

AdmissibleResult is_m_admissible(const LinearCode& c, int m,
                                 long long enum_threshold) {
  if (m < 1) throw BadArgsError("m must be >= 1");
  if (c.n() > 64) throw TooLargeError("admissibility limited to n <= 64");
  AdmissibleResult res;
  if (c.k() == 0) return res;  // no non-zero codewords at all
  if (pow_capped(c.p(), c.k(), enum_threshold) > enum_threshold)
    throw TooLargeError("codeword enumeration beyond the threshold");

  // distinct supports; scalar multiples share one, keep one word each
  std::unordered_map<std::uint64_t, std::vector<int>> by_support;
  FpMatrix gen = null_space(c.pcm);
  for_each_codeword(gen, [&](const std::vector<int>& word) {
    std::uint64_t mask = 0;
    for (int j = 0; j < c.n(); ++j)
      if (word[j] != 0) mask |= std::uint64_t{1} << j;
    by_support.emplace(mask, word);
    return true;
  });
  std::vector<std::pair<std::uint64_t, const std::vector<int>*>> supports;
  supports.reserve(by_support.size());
  for (const auto& [mask, word] : by_support) supports.emplace_back(mask, &word);
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) {
              int ca = __builtin_popcountll(a.first);
              int cb = __builtin_popcountll(b.first);
              return ca != cb ? ca < cb : a.first < b.first;
            });

  std::vector<int> picked;
  std::function<bool(std::size_t, std::uint64_t)> rec =
      [&](std::size_t start, std::uint64_t used) -> bool {
    if (static_cast<int>(picked.size()) == m) return true;
    for (std::size_t i = start; i < supports.size(); ++i) {
      if (supports[i].first & used) continue;
      picked.push_back(static_cast<int>(i));
      if (rec(i + 1, used | supports[i].first)) return true;
      picked.pop_back();
    }
    return false;
  };
  if (rec(0, 0)) {
    res.admissible = false;
    for (int i : picked) res.words.push_back(*supports[i].second);
  }
  return res;
}

namespace {

// the canonical projective representative scales the first non-zero
// coordinate to 1; zero input is rejected
std::vector<int> canon_vec(std::vector<int> v, int p) {
  int lead = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) throw BadArgsError("zero vector has no projective class");
  int inv = inv_mod(v[lead], p);
  for (auto& x : v) x = x * inv % p;
  return v;
}

struct ColumnSearch {
  int p, r, d, n_limit;
  std::vector<std::vector<int>> pts;  // canonical reps, lex order
  std::unordered_map<std::uint64_t, int> pt_index;
  std::vector<char> forb;
  std::vector<int> chosen;
  int best = 0;

  std::uint64_t key(const std::vector<int>& v) const {
    std::uint64_t h = 0;
    for (int x : v) h = h * 131 + static_cast<unsigned>(x);
    return h;
  }

  void build_points() {
    std::vector<int> v(r, 0);
    // enumerate all non-zero vectors, keep canonical ones, lex order
    std::function<void(int)> rec = [&](int i) {
      if (i == r) {
        bool zero = std::all_of(v.begin(), v.end(), [](int x) { return !x; });
        if (!zero && canon_vec(v, p) == v) {
          pt_index.emplace(key(v), static_cast<int>(pts.size()));
          pts.push_back(v);
        }
        return;
      }
      for (int c = 0; c < p; ++c) {
        v[i] = c;
        rec(i + 1);
      }
      v[i] = 0;
    };
    rec(0);
  }

  // forbid every point expressible as an all-non-zero combination of q and
  // a subset of previously chosen columns of size <= d-2; records what was
  // newly forbidden so the caller can undo
  void forbid_with(int q, std::vector<int>& undo) {
    int limit = d - 2;
    std::vector<int> subset;
    std::function<void(std::size_t)> combos = [&](std::size_t start) {
      mark_combos(q, subset, undo);
      if (static_cast<int>(subset.size()) == limit) return;
      for (std::size_t i = start; i < chosen.size(); ++i) {
        subset.push_back(chosen[i]);
        combos(i + 1);
        subset.pop_back();
      }
    };
    combos(0);
  }

  void mark_combos(int q, const std::vector<int>& subset,
                   std::vector<int>& undo) {
    int t = static_cast<int>(subset.size());
    std::vector<int> coef(t + 1, 1);
    std::vector<int> acc(r);
    while (true) {
      for (int i = 0; i < r; ++i) {
        long long s = static_cast<long long>(coef[t]) * pts[q][i];
        for (int j = 0; j < t; ++j) s += static_cast<long long>(coef[j]) * pts[subset[j]][i];
        acc[i] = static_cast<int>(s % p);
      }
      auto it = pt_index.find(key(canon_vec(acc, p)));
      assert(it != pt_index.end());
      if (!forb[it->second]) {
        forb[it->second] = 1;
        undo.push_back(it->second);
      }
      int i = 0;
      while (i <= t && coef[i] == p - 1) coef[i++] = 1;
      if (i > t) break;
      ++coef[i];
    }
  }

  void add(int q, std::vector<int>& undo) {
    forbid_with(q, undo);
    chosen.push_back(q);
  }
  void remove(const std::vector<int>& undo) {
    chosen.pop_back();
    for (int i : undo) forb[i] = 0;
  }

  void dfs(int start) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) >= n_limit) return;
    int avail = 0;
    for (std::size_t i = start; i < pts.size(); ++i) avail += !forb[i];
    if (static_cast<int>(chosen.size()) + avail <= best) return;
    for (std::size_t i = start; i < pts.size(); ++i) {
      if (forb[i]) continue;
      std::vector<int> undo;
      add(static_cast<int>(i), undo);
      dfs(static_cast<int>(i) + 1);
      remove(undo);
      if (static_cast<int>(chosen.size()) + --avail <= best) return;
    }
  }
};

}  // namespace

ConstantValue s_via_codes(int p, int r, int d, int n_limit) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p));
  if (r < 1 || d < 1 || n_limit < 1) throw BadArgsError("r, d, n_limit must be >= 1");
  // distance d+1 <= 2 never pins anything down: repeated columns are free
  if (d < 2) return ConstantValue::inf();

  ColumnSearch cs{p, r, d, n_limit, {}, {}, {}, {}, 0};
  cs.build_points();
  cs.forb.assign(cs.pts.size(), 0);

  // column sets are GL-invariant and any two distinct projective points are
  // an independent pair, so a maximum set may be assumed to contain e1, e2
  std::vector<int> e1(r, 0), e2(r, 0);
  e1[0] = 1;
  std::vector<int> undo1, undo2;
  cs.add(cs.pt_index.at(cs.key(e1)), undo1);
  if (r >= 2) {
    e2[1] = 1;
    int q2 = cs.pt_index.at(cs.key(e2));
    assert(!cs.forb[q2]);
    cs.add(q2, undo2);
  }
  cs.dfs(0);
  cs.best = std::max(cs.best, static_cast<int>(cs.chosen.size()));

  if (cs.best >= n_limit) return ConstantValue::unk(n_limit);
  return ConstantValue::fin(cs.best + 1);
}

FpMatrix parse_pcm(std::istream& in) {
  int p, n, r;
  if (!(in >> p >> n >> r)) throw FormatError("expected header 'p n r'");
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p));
  if (n < 1 || r < 1) throw FormatError("bad dimensions");
  FpMatrix m(p, r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      int x;
      if (!(in >> x)) throw FormatError("truncated matrix body");
      if (x < 0 || x >= p) throw FormatError("entry out of range");
      m.at(i, j) = x;
    }
  return m;
}

void write_pcm(const FpMatrix& m, std::ostream& out) {
  out << m.p << ' ' << m.cols << ' ' << m.rows << '\n';
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
}

}  // namespace davkit
