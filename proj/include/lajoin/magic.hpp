#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lajoin {

struct MagicArray {
  enum class Kind { Square, Rectangle, NearlyRectangle };

  int rows = 0, cols = 0;
  std::vector<std::int64_t> entries;  // row-major
  Kind kind = Kind::Rectangle;
  std::vector<std::int64_t> row_constants;  // one per row for nearly rectangles, else a single value
  std::int64_t col_constant = 0;

  std::int64_t at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
  std::int64_t& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }

  std::int64_t row_target(int i) const { return row_constants.size() == 1 ? row_constants[0] : row_constants[i]; }

  MagicArray transposed() const {
    MagicArray t = *this;
    std::swap(t.rows, t.cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    if (kind != Kind::NearlyRectangle) {
      t.row_constants = {col_constant};
      t.col_constant = row_constants[0];
    }
    return t;
  }
};

inline std::string kind_name(MagicArray::Kind k) {
  switch (k) {
    case MagicArray::Kind::Square: return "square";
    case MagicArray::Kind::Rectangle: return "rectangle";
    case MagicArray::Kind::NearlyRectangle: return "nearly-rectangle";
  }
  return "?";
}

struct MagicCheck {
  bool ok = true;
  std::string reason;
};

// Recomputes every sum from the entries; the declared constants are only compared against.
inline MagicCheck check_magic_array(const MagicArray& M) {
  auto fail = [](std::string r) { return MagicCheck{false, std::move(r)}; };
  if (M.rows < 1 || M.cols < 1) return fail("empty array");
  const std::int64_t N = static_cast<std::int64_t>(M.rows) * M.cols;
  if (static_cast<std::int64_t>(M.entries.size()) != N) return fail("entry count differs from rows*cols");
  std::vector<char> seen(N + 1, 0);
  for (auto x : M.entries) {
    if (x < 1 || x > N) return fail("entry " + std::to_string(x) + " outside [1," + std::to_string(N) + "]");
    if (seen[x]++) return fail("entry " + std::to_string(x) + " repeated");
  }
  std::vector<std::int64_t> rs(M.rows, 0), cs(M.cols, 0);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      rs[i] += M.at(i, j);
      cs[j] += M.at(i, j);
    }
  for (int j = 0; j < M.cols; ++j)
    if (cs[j] != cs[0]) return fail("column " + std::to_string(j + 1) + " sums to " + std::to_string(cs[j]));
  if (M.col_constant != cs[0]) return fail("declared column constant " + std::to_string(M.col_constant) + " but columns sum to " + std::to_string(cs[0]));
  if (M.kind == MagicArray::Kind::NearlyRectangle) {
    if (M.rows % 2) return fail("nearly rectangle with odd row count");
    const std::int64_t lo = rs[0];
    for (int i = 0; i < M.rows; ++i) {
      const std::int64_t want = lo + (i % 2);
      if (rs[i] != want) return fail("row " + std::to_string(i + 1) + " sums to " + std::to_string(rs[i]));
    }
    if (static_cast<int>(M.row_constants.size()) != M.rows) return fail("need one declared constant per row");
    for (int i = 0; i < M.rows; ++i)
      if (M.row_constants[i] != rs[i]) return fail("declared row constant mismatch at row " + std::to_string(i + 1));
  } else {
    for (int i = 0; i < M.rows; ++i)
      if (rs[i] != rs[0]) return fail("row " + std::to_string(i + 1) + " sums to " + std::to_string(rs[i]));
    if (M.row_constants.size() != 1 || M.row_constants[0] != rs[0]) return fail("declared row constant mismatch");
    if (M.kind == MagicArray::Kind::Square && M.rows != M.cols) return fail("square kind on a non-square array");
  }
  return {};
}

namespace detail {

inline MagicArray blank(int rows, int cols, MagicArray::Kind kind) {
  MagicArray M;
  M.rows = rows;
  M.cols = cols;
  M.kind = kind;
  M.entries.assign(static_cast<size_t>(rows) * cols, 0);
  const std::int64_t N = static_cast<std::int64_t>(rows) * cols;
  M.row_constants = {cols * (N + 1) / 2};
  M.col_constant = rows * (N + 1) / 2;
  return M;
}

inline MagicArray checked(MagicArray M, const char* who) {
  auto c = check_magic_array(M);
  if (!c.ok) throw std::logic_error(std::string(who) + " produced an invalid array: " + c.reason);
  return M;
}

// platform-independent draws, so seeded output is the same everywhere
struct Draw {
  std::mt19937_64 eng;
  explicit Draw(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t lim = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = eng(); while (x >= lim);
    return x % n;
  }
  double unit() { return static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0); }
};

// Annealed swaps on a permutation of [1..rows*cols] until every row hits its target
// and every column hits col_target. Seeded, so the result is reproducible.
inline bool anneal(int rows, int cols, const std::vector<std::int64_t>& row_target, std::int64_t col_target,
                   std::uint64_t seed, std::vector<std::int64_t>& out) {
  const std::int64_t N = static_cast<std::int64_t>(rows) * cols;
  Draw rng(seed);
  const int kAttempts = 200;
  const std::int64_t kBudget = 3'000'000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::int64_t> a(N);
    std::iota(a.begin(), a.end(), 1);
    for (std::int64_t i = N - 1; i > 0; --i) std::swap(a[i], a[rng.below(i + 1)]);
    std::vector<std::int64_t> rs(rows, 0), cs(cols, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        rs[i] += a[i * cols + j];
        cs[j] += a[i * cols + j];
      }
    std::int64_t cost = 0;
    for (int i = 0; i < rows; ++i) cost += std::llabs(rs[i] - row_target[i]);
    for (int j = 0; j < cols; ++j) cost += std::llabs(cs[j] - col_target);
    double T = static_cast<double>(N) / 4.0;
    for (std::int64_t it = 0; it < kBudget; ++it) {
      if (cost == 0) {
        out = std::move(a);
        return true;
      }
      const std::int64_t p = static_cast<std::int64_t>(rng.below(N)), q = static_cast<std::int64_t>(rng.below(N));
      if (p == q) continue;
      const int i1 = static_cast<int>(p / cols), j1 = static_cast<int>(p % cols);
      const int i2 = static_cast<int>(q / cols), j2 = static_cast<int>(q % cols);
      const std::int64_t d = a[q] - a[p];
      std::int64_t delta = 0;
      if (i1 != i2)
        delta += std::llabs(rs[i1] + d - row_target[i1]) + std::llabs(rs[i2] - d - row_target[i2]) -
                 std::llabs(rs[i1] - row_target[i1]) - std::llabs(rs[i2] - row_target[i2]);
      if (j1 != j2)
        delta += std::llabs(cs[j1] + d - col_target) + std::llabs(cs[j2] - d - col_target) -
                 std::llabs(cs[j1] - col_target) - std::llabs(cs[j2] - col_target);
      if (delta <= 0 || rng.unit() < std::exp(-static_cast<double>(delta) / T)) {
        std::swap(a[p], a[q]);
        if (i1 != i2) rs[i1] += d, rs[i2] -= d;
        if (j1 != j2) cs[j1] += d, cs[j2] -= d;
        cost += delta;
      }
      if ((it & 255) == 0) T = std::max(0.3, T * 0.995);
    }
  }
  return false;
}

inline std::uint64_t size_seed(int rows, int cols, int kind) {
  return 0x6c616a6f696eULL ^ (static_cast<std::uint64_t>(rows) << 32) ^ (static_cast<std::uint64_t>(cols) << 8) ^
         static_cast<std::uint64_t>(kind);
}

inline std::vector<std::vector<int>> siamese_table(int order) {
  std::vector<std::vector<int>> t(order, std::vector<int>(order, 0));
  int r = 0, c = order / 2;
  for (int k = 1; k <= order * order; ++k) {
    t[r][c] = k;
    const int nr = (r - 1 + order) % order, nc = (c + 1) % order;
    if (t[nr][nc]) {
      r = (r + 1) % order;  // drop below the previous cell
    } else {
      r = nr;
      c = nc;
    }
  }
  return t;
}

// entry = cols*A + B + 1 where A runs over rows (mirrored per column) and B over columns (mirrored per row);
// needs both sides even and cols divisible by 4
inline MagicArray mirrored_blocks(int rows, int cols) {
  MagicArray M = blank(rows, cols, rows == cols ? MagicArray::Kind::Square : MagicArray::Kind::Rectangle);
  // column pattern symmetric under j -> cols-1-j, half of it flipped
  std::vector<int> colflip(cols, 0);
  for (int j = 0; j < cols / 2; ++j) colflip[j] = colflip[cols - 1 - j] = (j % 2);
  std::vector<int> rowflip(rows, 0);
  for (int i = 0; i < rows; ++i) rowflip[i] = i % 2;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const int A = colflip[j] ? rows - 1 - i : i;
      const int B = rowflip[i] ? cols - 1 - j : j;
      M.at(i, j) = static_cast<std::int64_t>(cols) * A + B + 1;
    }
  return M;
}


// ---- deterministic constructions for rectangles
//
// Rows come in complementary pairs (x above N+1-x), so every pair adds N+1 to each column.
// What is left is choosing which member of each pair goes on top so the top row hits its
// target: a subset-sum per pair of rows. Values are kept doubled (D = 2x - N - 1) so odd
// and even N look the same.

// indices of a subset of vals summing to target, or empty optional
inline std::optional<std::vector<char>> subset_with_sum(const std::vector<std::int64_t>& vals, std::int64_t target) {
  if (target < 0) return std::nullopt;
  const size_t W = static_cast<size_t>(target / 64 + 1);
  std::vector<std::vector<std::uint64_t>> reach(vals.size() + 1, std::vector<std::uint64_t>(W, 0));
  reach[0][0] = 1;
  for (size_t i = 0; i < vals.size(); ++i) {
    const auto& a = reach[i];
    auto& b = reach[i + 1];
    b = a;
    const std::int64_t v = vals[i];
    if (v > target) continue;
    const size_t ws = static_cast<size_t>(v / 64), bs = static_cast<size_t>(v % 64);
    for (size_t w = W; w-- > ws;) {
      std::uint64_t x = a[w - ws] << bs;
      if (bs && w - ws >= 1) x |= a[w - ws - 1] >> (64 - bs);
      b[w] |= x;
    }
  }
  auto has = [&](size_t i, std::int64_t t) { return (reach[i][t / 64] >> (t % 64)) & 1; };
  if (!has(vals.size(), target)) return std::nullopt;
  std::vector<char> pick(vals.size(), 0);
  std::int64_t t = target;
  for (size_t i = vals.size(); i-- > 0;)
    if (!has(i, t)) {
      pick[i] = 1;
      t -= vals[i];
    }
  return pick;
}

inline bool splittable(const std::vector<std::int64_t>& g, std::int64_t t) {
  std::int64_t tot = 0;
  for (auto x : g) tot += x;
  return (tot + t) % 2 == 0 && subset_with_sum(g, (tot + t) / 2).has_value();
}

// Deals vals (positive) into G groups of s and signs each group so it sums to t.
// Returns the signed groups, or nothing if the dealing could not be repaired.
inline std::optional<std::vector<std::vector<std::int64_t>>> signed_groups(std::vector<std::int64_t> vals, int G, int s,
                                                                           std::int64_t t) {
  std::sort(vals.begin(), vals.end());
  std::vector<std::vector<std::int64_t>> grp(G);
  for (int r = 0; r < s; ++r)  // boustrophedon keeps totals close; the drift avoids arithmetic progressions
    for (int k = 0; k < G; ++k) grp[k].push_back(vals[static_cast<size_t>(r) * G + ((r % 2 ? G - 1 - k : k) + r / 2) % G]);
  auto parity_bad = [&](int k) {
    std::int64_t tot = 0;
    for (auto x : grp[k]) tot += x;
    return ((tot + t) % 2 + 2) % 2 != 0;
  };
  std::vector<int> bad;
  for (int k = 0; k < G; ++k)
    if (parity_bad(k)) bad.push_back(k);
  if (bad.size() % 2) return std::nullopt;
  for (size_t p = 0; p < bad.size(); p += 2) {
    auto& A = grp[bad[p]];
    auto& B = grp[bad[p + 1]];
    bool done = false;
    for (int i = 0; i < s && !done; ++i)
      for (int j = 0; j < s && !done; ++j)
        if ((A[i] - B[j]) % 2) {
          std::swap(A[i], B[j]);
          done = true;
        }
    if (!done) return std::nullopt;
  }
  // Walk the groups in order; a swap only has to fix the current group, later ones may
  // break and get their turn. The last groups can only trade with groups already fixed.
  for (int a = 0; a < G; ++a) {
    if (splittable(grp[a], t)) continue;
    bool fixed = false;
    for (int b = a + 1; b < G && !fixed; ++b)
      for (int i = 0; i < s && !fixed; ++i)
        for (int j = 0; j < s && !fixed; ++j) {
          if ((grp[a][i] - grp[b][j]) % 2) continue;
          std::swap(grp[a][i], grp[b][j]);
          if (splittable(grp[a], t)) fixed = true;
          else std::swap(grp[a][i], grp[b][j]);
        }
    for (int b = 0; b < a && !fixed; ++b)
      for (int i = 0; i < s && !fixed; ++i)
        for (int j = 0; j < s && !fixed; ++j) {
          if ((grp[a][i] - grp[b][j]) % 2) continue;
          std::swap(grp[a][i], grp[b][j]);
          if (splittable(grp[a], t) && splittable(grp[b], t)) fixed = true;
          else std::swap(grp[a][i], grp[b][j]);
        }
    if (!fixed) return std::nullopt;
  }
  for (auto& g : grp) {
    std::int64_t tot = 0;
    for (auto x : g) tot += x;
    const auto pick = subset_with_sum(g, (tot + t) / 2);
    for (size_t i = 0; i < g.size(); ++i)
      if (!(*pick)[i]) g[i] = -g[i];
  }
  return grp;
}

// appends two rows per group: top gets (N+1+D)/2, bottom its complement
inline void put_pair_rows(MagicArray& M, int first_row, const std::vector<std::vector<std::int64_t>>& groups) {
  const std::int64_t N1 = static_cast<std::int64_t>(M.rows) * M.cols + 1;
  int r = first_row;
  for (const auto& g : groups) {
    for (int j = 0; j < M.cols; ++j) {
      M.at(r, j) = (N1 + g[j]) / 2;
      M.at(r + 1, j) = N1 - M.at(r, j);
    }
    r += 2;
  }
}

// 3 x n with offsets from the centre: row A is -h..h, rows B and C share the magnitudes
// L..L+2h, paired so each column sums to zero. Returns offsets, or nothing.
inline std::optional<std::vector<std::vector<std::int64_t>>> three_row_core(int n, std::int64_t L) {
  if (n == 3) {
    if (L != 2) return std::nullopt;
    return std::vector<std::vector<std::int64_t>>{{-3, 2, 1}, {4, 0, -4}, {-1, -2, 3}};  // Lo Shu minus 5
  }
  const int h = (n - 1) / 2;
  // pi moves x by pi(x) - x, and those displacements are exactly -h..h
  std::vector<std::int64_t> pi(n), items(n);
  std::int64_t T = 0;
  for (int x = 0; x < n; ++x) {
    pi[x] = x <= h ? 2 * x : 2 * x - 2 * h - 1;
    items[x] = pi[x] + x + 2 * L;
    T += x + L;
  }
  const auto pick = subset_with_sum(items, T);
  if (!pick) return std::nullopt;
  std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(n));
  for (int x = 0; x < n; ++x) {
    const std::int64_t P = pi[x] + L, Mx = x + L, d = P - Mx;
    const int j = static_cast<int>(h - d);
    rows[0][j] = -d;
    rows[1][j] = (*pick)[x] ? P : -Mx;
    rows[2][j] = (*pick)[x] ? -Mx : P;
  }
  return rows;
}


// Skolem-type pairs: pairs[d-1] = (a, a+d) for d = 1..n. Plain sequences fill 1..2n; hooked ones
// fill 1..2n-1 and 2n+1. Plain orders >= 8 come from the classical closed form, the rest from a
// most-constrained-first search (fast well past the sizes used here).
inline bool skolem_search(int n, int L, std::vector<int>& slot, std::vector<char>& used, int left, long& budget) {
  if (!left) return true;
  if (--budget < 0) return false;
  int bd = -1, bdc = 1 << 30, bp = -1, bpc = 1 << 30;
  for (int d = 1; d <= n; ++d) {
    if (used[d]) continue;
    int c = 0;
    for (int a = 1; a + d <= L; ++a) c += !slot[a] && !slot[a + d];
    if (!c) return false;
    if (c < bdc) bdc = c, bd = d;
  }
  for (int p = 1; p <= L; ++p) {
    if (slot[p]) continue;
    int c = 0;
    for (int d = 1; d <= n; ++d)
      if (!used[d]) c += (p + d <= L && !slot[p + d]) + (p - d >= 1 && !slot[p - d]);
    if (!c) return false;
    if (c < bpc) bpc = c, bp = p;
  }
  auto place = [&](int a, int d) {
    used[d] = 1;
    slot[a] = slot[a + d] = d;
    if (skolem_search(n, L, slot, used, left - 1, budget)) return true;
    used[d] = 0;
    slot[a] = slot[a + d] = 0;
    return false;
  };
  if (bdc <= bpc) {
    for (int a = L - bd; a >= 1; --a)
      if (!slot[a] && !slot[a + bd] && place(a, bd)) return true;
  } else {
    for (int d = n; d >= 1; --d) {
      if (used[d]) continue;
      if (bp + d <= L && !slot[bp + d] && place(bp, d)) return true;
      if (bp - d >= 1 && !slot[bp - d] && place(bp - d, d)) return true;
    }
  }
  return false;
}

inline std::optional<std::vector<std::pair<int, int>>> skolem_pairs(int n) {
  const bool hooked = n % 4 == 2 || n % 4 == 3;
  std::vector<std::pair<int, int>> P;
  const int s = n / 4;
  if (!hooked && n >= 8) {
    if (n % 4 == 0) {
      for (int r = 1; r <= 2 * s; ++r) P.emplace_back(4 * s + r - 1, 8 * s - r + 1);
      for (int r = 1; r < s; ++r) P.emplace_back(r, 4 * s - r - 1);
      for (int r = 1; r < s - 1; ++r) P.emplace_back(s + r + 1, 3 * s - r);
      P.emplace_back(s, s + 1);
      P.emplace_back(2 * s, 4 * s - 1);
      P.emplace_back(2 * s + 1, 6 * s);
    } else {
      for (int r = 1; r <= 2 * s; ++r) P.emplace_back(4 * s + r + 1, 8 * s - r + 3);
      for (int r = 1; r <= s; ++r) P.emplace_back(r, 4 * s - r + 1);
      for (int r = 1; r < s - 1; ++r) P.emplace_back(s + r + 2, 3 * s - r + 1);
      P.emplace_back(s + 1, s + 2);
      P.emplace_back(2 * s + 1, 6 * s + 2);
      P.emplace_back(2 * s + 2, 4 * s + 1);
    }
    std::sort(P.begin(), P.end(), [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
  } else {
    const int L = hooked ? 2 * n + 1 : 2 * n;
    std::vector<int> slot(L + 1, 0);
    std::vector<char> used(n + 1, 0);
    if (hooked) slot[2 * n] = -1;
    long budget = 2'000'000;
    if (!skolem_search(n, L, slot, used, n, budget)) return std::nullopt;
    P.assign(n, {0, 0});
    for (int p = L; p >= 1; --p)
      if (slot[p] > 0) P[slot[p] - 1].first = p;  // ends up at the smaller position
    for (int d = 1; d <= n; ++d) P[d - 1].second = P[d - 1].first + d;
  }
  // self-check: differences 1..n, positions as promised
  std::vector<char> seen(2 * n + 2, 0);
  for (int d = 1; d <= n; ++d) {
    const auto [a, b] = P[d - 1];
    if (b - a != d || a < 1 || b > 2 * n + 1 || seen[a]++ || seen[b]++) return std::nullopt;
  }
  if (hooked ? seen[2 * n] : seen[2 * n + 1]) return std::nullopt;
  return P;
}

// Nearly magic with few columns: each pair of rows gets a Skolem triple (signed to +-1),
// possibly an adjacent +- pair, and then quads of boustrophedon rows that cancel exactly.
// Works in t with D = 2t+1.
inline std::optional<MagicArray> skolem_nearly(int rows, int cols) {
  const int G = rows / 2, core = cols % 4 == 3 ? 3 : 5;
  if (cols < core) return std::nullopt;
  const auto P = skolem_pairs(G);
  if (!P) return std::nullopt;
  const bool hooked = G % 4 == 2 || G % 4 == 3;
  const std::int64_t want = core == 3 ? -1 : 1;  // the +- pair brings -2 in the 5-row case
  std::vector<std::vector<std::int64_t>> grp(G);
  for (int i = 1; i <= G; ++i) {
    // T = t + 1; triple (i, a+G, b+G) has C = A + B, except the hook which has C = A + B - 1
    std::int64_t A = i, B = P->at(i - 1).first + G, C = P->at(i - 1).second + G;
    const bool minus_one = hooked && C == 3 * G + 1;
    if (minus_one) C = 3 * G;
    const std::int64_t Da = 2 * (A - 1) + 1, Db = 2 * (B - 1) + 1, Dc = 2 * (C - 1) + 1;
    // C = A+B:   +a +b -c gives -1.   C = A+B-1:  -a -b +c gives -1.
    const std::int64_t sg = (minus_one ? -1 : 1) * (want == -1 ? 1 : -1);
    grp[i - 1] = {sg * Da, sg * Db, -sg * Dc};
  }
  std::int64_t t0 = 3 * static_cast<std::int64_t>(G);
  if (core == 5)
    for (int k = 0; k < G; ++k) {
      grp[k].push_back(2 * (t0 + 2 * k) + 1);
      grp[k].push_back(-(2 * (t0 + 2 * k + 1) + 1));
    }
  t0 += (core - 3) * static_cast<std::int64_t>(G);
  const int sign4[4] = {1, -1, -1, 1};
  for (int r = 0; r < cols - core; ++r)
    for (int k = 0; k < G; ++k) {
      const std::int64_t t = t0 + static_cast<std::int64_t>(r) * G + (r % 2 ? G - 1 - k : k);
      grp[k].push_back(sign4[r % 4] * (2 * t + 1));
    }
  MagicArray M = blank(rows, cols, MagicArray::Kind::NearlyRectangle);
  put_pair_rows(M, 0, grp);
  return M;
}

inline std::optional<MagicArray> paired_even(int rows, int cols, MagicArray::Kind kind, std::int64_t t) {
  MagicArray M = blank(rows, cols, kind);
  const std::int64_t N = static_cast<std::int64_t>(rows) * cols;
  std::vector<std::int64_t> D;
  for (std::int64_t x = 1; x < N; x += 2) D.push_back(x);
  auto g = signed_groups(D, rows / 2, cols, t);
  if (!g) return std::nullopt;
  put_pair_rows(M, 0, *g);
  return M;
}

inline std::optional<MagicArray> paired_odd(int rows, int cols) {
  if (rows < 3 || cols < 3) return std::nullopt;
  MagicArray M = blank(rows, cols, MagicArray::Kind::Rectangle);
  const std::int64_t N = static_cast<std::int64_t>(rows) * cols, K = (N - 1) / 2, c = (N + 1) / 2;
  const int h = (cols - 1) / 2;
  for (std::int64_t L = h + 1; L <= h + 4 && L + 2 * h <= K; ++L) {
    std::vector<std::int64_t> rest;
    for (std::int64_t d = h + 1; d <= K; ++d)
      if (d < L || d > L + 2 * h) rest.push_back(d);
    if (rows == 3 && !rest.empty()) continue;
    const auto core = three_row_core(cols, L);
    if (!core) continue;
    std::vector<std::vector<std::int64_t>> groups;
    if (rows > 3) {
      auto g = signed_groups(rest, (rows - 3) / 2, cols, 0);
      if (!g) continue;
      groups = std::move(*g);
      for (auto& grp : groups)
        for (auto& x : grp) x *= 2;  // put_pair_rows wants doubled offsets
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < cols; ++j) M.at(i, j) = c + (*core)[i][j];
    put_pair_rows(M, 3, groups);
    return M;
  }
  return std::nullopt;
}

inline std::optional<MagicArray> constructed_rectangle(int rows, int cols) {
  // fewer, longer row groups split far more easily, so build with the short side as rows
  const bool flip = rows > cols;
  const int r = flip ? cols : rows, c = flip ? rows : cols;
  std::optional<MagicArray> M;
  if (r % 2 == 0) M = paired_even(r, c, MagicArray::Kind::Rectangle, 0);
  else M = paired_odd(r, c);
  if (!M || !check_magic_array(*M).ok) return std::nullopt;
  return flip ? M->transposed() : *M;
}

}  // namespace detail

inline MagicArray siamese_magic_square(int order) {
  if (order < 3 || order % 2 == 0)
    throw usage_error("Siamese construction needs an odd order >= 3 (got " + std::to_string(order) + ")");
  MagicArray M = detail::blank(order, order, MagicArray::Kind::Square);
  auto t = detail::siamese_table(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) M.at(i, j) = t[i][j];
  return detail::checked(std::move(M), "siamese_magic_square");
}

inline MagicArray magic_square(int order) {
  if (order < 3) throw usage_error("magic squares need order >= 3 (got " + std::to_string(order) + ")");
  if (order % 2) return siamese_magic_square(order);
  if (order % 4 == 0) return detail::checked(detail::mirrored_blocks(order, order), "magic_square");
  // Strachey: four Siamese quadrants, then column swaps between the top and bottom halves
  const int h = order / 2, k = (order - 2) / 4;
  auto A = detail::siamese_table(h);
  MagicArray M = detail::blank(order, order, MagicArray::Kind::Square);
  const std::int64_t hh = static_cast<std::int64_t>(h) * h;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      M.at(i, j) = A[i][j];
      M.at(i + h, j + h) = A[i][j] + hh;
      M.at(i, j + h) = A[i][j] + 2 * hh;
      M.at(i + h, j) = A[i][j] + 3 * hh;
    }
  for (int i = 0; i < h; ++i) {
    for (int c = 0; c < k; ++c) {
      const int j = (i == h / 2) ? c + 1 : c;
      std::swap(M.at(i, j), M.at(i + h, j));
    }
    for (int c = 0; c < k - 1; ++c) {
      const int j = order - 1 - c;
      std::swap(M.at(i, j), M.at(i + h, j));
    }
  }
  return detail::checked(std::move(M), "magic_square");
}

inline MagicArray magic_rectangle(int rows, int cols) {
  if (rows < 2 || cols < 2)
    throw usage_error("magic rectangle needs both dimensions >= 2 (got " + std::to_string(rows) + "x" + std::to_string(cols) + ")");
  if ((rows + cols) % 2)
    throw usage_error("magic rectangle needs rows and cols of equal parity (got " + std::to_string(rows) + "x" + std::to_string(cols) + ")");
  if (rows == 2 && cols == 2) throw usage_error("no magic 2x2 rectangle exists");
  if (rows == cols) {
    MagicArray M = magic_square(rows);
    M.kind = MagicArray::Kind::Rectangle;
    return M;
  }
  if (rows % 2 == 0 && cols % 4 == 0) return detail::checked(detail::mirrored_blocks(rows, cols), "magic_rectangle");
  if (cols % 2 == 0 && rows % 4 == 0) return detail::checked(detail::mirrored_blocks(cols, rows).transposed(), "magic_rectangle");
  if (auto C = detail::constructed_rectangle(rows, cols)) return detail::checked(std::move(*C), "magic_rectangle");
  // a few small sizes defeat the pairing; a seeded search handles them
  MagicArray M = detail::blank(rows, cols, MagicArray::Kind::Rectangle);
  std::vector<std::int64_t> rt(rows, M.row_constants[0]);
  if (!detail::anneal(rows, cols, rt, M.col_constant, detail::size_seed(rows, cols, 1), M.entries))
    throw std::runtime_error("magic rectangle search exhausted for " + std::to_string(rows) + "x" + std::to_string(cols));
  return detail::checked(std::move(M), "magic_rectangle");
}

// odd rows (1-based) sum one less than even rows; columns constant
inline MagicArray nearly_magic_rectangle(int rows, int cols) {
  if (rows < 2 || rows % 2)
    throw usage_error("nearly magic rectangle needs an even row count >= 2 (got " + std::to_string(rows) + ")");
  if (cols < 3 || cols % 2 == 0)
    throw usage_error("nearly magic rectangle needs an odd column count >= 3 (got " + std::to_string(cols) + ")");
  MagicArray M = detail::blank(rows, cols, MagicArray::Kind::NearlyRectangle);
  const std::int64_t N = static_cast<std::int64_t>(rows) * cols;
  const std::int64_t lo = (cols * (N + 1) - 1) / 2;
  M.row_constants.assign(rows, lo);
  for (int i = 1; i < rows; i += 2) M.row_constants[i] = lo + 1;
  for (auto C : {detail::skolem_nearly(rows, cols), detail::paired_even(rows, cols, MagicArray::Kind::NearlyRectangle, -1)})
    if (C) {
      C->row_constants = M.row_constants;
      if (check_magic_array(*C).ok) return *C;
    }
  if (!detail::anneal(rows, cols, M.row_constants, M.col_constant, detail::size_seed(rows, cols, 2), M.entries))
    throw std::runtime_error("nearly magic rectangle search exhausted for " + std::to_string(rows) + "x" + std::to_string(cols));
  return detail::checked(std::move(M), "nearly_magic_rectangle");
}

// Removes column col_index (0-based; must be the middle one, whose entries are 1+2(n+1)(i-1))
// and reorders rows: last row first, each odd row i (1-based) moved to i+1, even rows stay.
// Returns a (2n+1) x 2n table; its kind/constants are not meaningful.
inline MagicArray drop_column_and_rotate(const MagicArray& M, int col_index) {
  if (M.rows != M.cols || M.rows < 3 || M.rows % 2 == 0) throw usage_error("expected an odd-order Siamese square");
  const int order = M.rows, n = (order - 1) / 2;
  const MagicArray ref = siamese_magic_square(order);
  if (ref.entries != M.entries) throw usage_error("input is not the Siamese square of order " + std::to_string(order));
  if (col_index != n)
    throw usage_error("column " + std::to_string(col_index) + " is not the middle column " + std::to_string(n));
  MagicArray P;
  P.rows = order;
  P.cols = order - 1;
  P.kind = MagicArray::Kind::Rectangle;
  P.entries.resize(static_cast<size_t>(P.rows) * P.cols);
  auto src_row = [&](int r1) {  // 1-based target row -> 1-based source row
    if (r1 == 1) return order;
    return r1 % 2 == 0 ? r1 : r1 - 2;
  };
  for (int r = 1; r <= order; ++r) {
    const int s = src_row(r) - 1;
    int c = 0;
    for (int j = 0; j < order; ++j)
      if (j != col_index) P.at(r - 1, c++) = M.at(s, j);
  }
  P.row_constants.clear();
  for (int i = 0; i < P.rows; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < P.cols; ++j) s += P.at(i, j);
    P.row_constants.push_back(s);
  }
  P.col_constant = 0;
  return P;
}

}  // namespace lajoin
