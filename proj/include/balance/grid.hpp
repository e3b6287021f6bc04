#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balance/exact.hpp"
#include "balance/poset.hpp"

namespace balance {

// Two-chain grid: rows are the elements a_1..a_m of the first chain (top to
// bottom), columns the elements b_1..b_n of the second. Cell (i,j) is red
// when a_i < b_j and blue when b_j < a_i. Red cells form a top- and
// right-justified staircase, blue cells a bottom- and left-justified one,
// and the two never overlap.
struct GridDiagram {
  int m = 0, n = 0;
  std::vector<int> red_row_lengths;   // per row, count of red cells (rightmost columns)
  std::vector<int> blue_col_heights;  // per column, count of blue cells (bottom rows)

  GridDiagram(int m_, int n_, std::vector<int> red, std::vector<int> blue)
      : m(m_), n(n_), red_row_lengths(std::move(red)), blue_col_heights(std::move(blue)) {
    if (m < 0 || n < 0 || static_cast<int>(red_row_lengths.size()) != m ||
        static_cast<int>(blue_col_heights.size()) != n) {
      throw input_error("grid shape sizes do not match dimensions");
    }
    for (int i = 0; i < m; ++i) {
      if (red_row_lengths[i] < 0 || red_row_lengths[i] > n) throw input_error("red row length out of range");
      if (i > 0 && red_row_lengths[i] > red_row_lengths[i - 1]) {
        throw input_error("red region is not top- and right-justified");
      }
    }
    for (int j = 0; j < n; ++j) {
      if (blue_col_heights[j] < 0 || blue_col_heights[j] > m) throw input_error("blue column height out of range");
      if (j > 0 && blue_col_heights[j] > blue_col_heights[j - 1]) {
        throw input_error("blue region is not bottom- and left-justified");
      }
    }
    for (int j = 1; j <= n; ++j) {
      if (red_col_height(j) + blue_col_heights[j - 1] > m) throw input_error("red and blue regions overlap");
    }
  }

  bool red_cell(int i, int j) const { return red_row_lengths[i - 1] >= n - j + 1; }
  bool blue_cell(int i, int j) const { return blue_col_heights[j - 1] >= m - i + 1; }

  // Number of red cells at the top of column j.
  int red_col_height(int j) const {
    int c = 0;
    while (c < m && red_row_lengths[c] >= n - j + 1) ++c;
    return c;
  }
  // Number of blue cells at the left of row i.
  int blue_row_length(int i) const {
    int c = 0;
    while (c < n && blue_col_heights[c] >= m - i + 1) ++c;
    return c;
  }
};

// Builds the grid of a poset with respect to a two-chain partition.
inline GridDiagram build_grid(const Poset& p, const TwoChainDecomposition& dec) {
  const int m = static_cast<int>(dec.chain_a.size());
  const int n = static_cast<int>(dec.chain_b.size());
  std::vector<char> seen(p.size(), 0);
  auto check_chain = [&](const std::vector<int>& chain) {
    for (size_t k = 0; k < chain.size(); ++k) {
      int v = chain[k];
      if (v < 0 || v >= p.size() || seen[v]) throw input_error("decomposition inconsistent with poset");
      seen[v] = 1;
      if (k > 0 && !p.less(chain[k - 1], v)) throw input_error("decomposition inconsistent with poset");
    }
  };
  check_chain(dec.chain_a);
  check_chain(dec.chain_b);
  if (m + n != p.size()) throw input_error("decomposition inconsistent with poset");

  std::vector<int> red(m, 0), blue(n, 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (p.less(dec.chain_a[i - 1], dec.chain_b[j - 1])) ++red[i - 1];
      if (p.less(dec.chain_b[j - 1], dec.chain_a[i - 1])) ++blue[j - 1];
    }
  }
  return GridDiagram(m, n, std::move(red), std::move(blue));
}

// Forward and backward lattice-path counts. t[i][j] counts monotone paths
// from (0,0) to point (i,j) that stay between the blue and red staircases;
// r[i][j] counts continuations to (m,n). The total t[m][n] equals the number
// of linear extensions.
struct PathTables {
  int m = 0, n = 0;
  std::vector<Integer> t, r;                        // (m+1) x (n+1), row-major
  std::vector<int> col_lo, col_hi, row_lo, row_hi;  // crossing windows, 1-based
  Integer extensions;

  const Integer& tt(int i, int j) const { return t[static_cast<size_t>(i) * (n + 1) + j]; }
  const Integer& rr(int i, int j) const { return r[static_cast<size_t>(i) * (n + 1) + j]; }
  Integer& tt(int i, int j) { return t[static_cast<size_t>(i) * (n + 1) + j]; }
  Integer& rr(int i, int j) { return r[static_cast<size_t>(i) * (n + 1) + j]; }

  // A right move into column j is allowed at rows col_lo[j]..col_hi[j]; a
  // down move across row i at columns row_lo[i]..row_hi[i].
  bool legal_right(int i, int j) const { return i >= col_lo[j] && i <= col_hi[j]; }
  bool legal_down(int i, int j) const { return j >= row_lo[i] && j <= row_hi[i]; }
};

inline PathTables path_tables(const GridDiagram& g) {
  PathTables pt;
  pt.m = g.m;
  pt.n = g.n;
  pt.col_lo.assign(g.n + 1, 0);
  pt.col_hi.assign(g.n + 1, 0);
  pt.row_lo.assign(g.m + 1, 0);
  pt.row_hi.assign(g.m + 1, 0);
  for (int j = 1; j <= g.n; ++j) {
    pt.col_lo[j] = g.red_col_height(j);
    pt.col_hi[j] = g.m - g.blue_col_heights[j - 1];
  }
  for (int i = 1; i <= g.m; ++i) {
    pt.row_lo[i] = g.blue_row_length(i);
    pt.row_hi[i] = g.n - g.red_row_lengths[i - 1];
  }
  pt.t.assign(static_cast<size_t>(g.m + 1) * (g.n + 1), Integer(0));
  pt.r.assign(static_cast<size_t>(g.m + 1) * (g.n + 1), Integer(0));
  pt.tt(0, 0) = 1;
  for (int i = 0; i <= g.m; ++i) {
    for (int j = 0; j <= g.n; ++j) {
      if (i == 0 && j == 0) continue;
      Integer v = 0;
      if (i > 0 && pt.legal_down(i, j)) v += pt.tt(i - 1, j);
      if (j > 0 && pt.legal_right(i, j)) v += pt.tt(i, j - 1);
      pt.tt(i, j) = v;
    }
  }
  pt.rr(g.m, g.n) = 1;
  for (int i = g.m; i >= 0; --i) {
    for (int j = g.n; j >= 0; --j) {
      if (i == g.m && j == g.n) continue;
      Integer v = 0;
      if (i < g.m && pt.legal_down(i + 1, j)) v += pt.rr(i + 1, j);
      if (j < g.n && pt.legal_right(i, j + 1)) v += pt.rr(i, j + 1);
      pt.rr(i, j) = v;
    }
  }
  pt.extensions = pt.tt(g.m, g.n);
  if (pt.extensions == 0 || pt.rr(0, 0) != pt.extensions) {
    throw verification_error("path tables inconsistent: forward and backward totals differ");
  }
  return pt;
}

namespace detail {

inline void check_cell_index(const PathTables& pt, int i, int j) {
  if (i < 1 || i > pt.m || j < 1 || j > pt.n) throw input_error("cell index out of range");
}

}  // namespace detail

// Paths passing below cell (i,j): these cross column j at some row >= i, and
// correspond to extensions placing a_i before b_j.
inline Integer count_below(const PathTables& pt, int i, int j) {
  detail::check_cell_index(pt, i, j);
  Integer sum = 0;
  for (int k = i; k <= pt.m; ++k) sum += pt.tt(k, j - 1) * pt.rr(k, j);
  return sum;
}

inline Integer count_above(const PathTables& pt, int i, int j) {
  detail::check_cell_index(pt, i, j);
  Integer sum = 0;
  for (int k = 0; k < i; ++k) sum += pt.tt(k, j - 1) * pt.rr(k, j);
  return sum;
}

namespace detail {

// below_counts[j-1][i-1] = count_below(i, j), computed with one suffix scan
// per column.
inline std::vector<std::vector<Integer>> below_by_column(const PathTables& pt) {
  std::vector<std::vector<Integer>> cols(pt.n);
  for (int j = 1; j <= pt.n; ++j) {
    std::vector<Integer>& col = cols[j - 1];
    col.assign(pt.m, Integer(0));
    Integer suffix = 0;
    for (int i = pt.m; i >= 1; --i) {
      suffix += pt.tt(i, j - 1) * pt.rr(i, j);
      col[i - 1] = suffix;
    }
  }
  return cols;
}

}  // namespace detail

// P(a_i < b_j) for all cells, indexed [i-1][j-1].
inline std::vector<std::vector<Rational>> probability_matrix(const PathTables& pt) {
  auto below = detail::below_by_column(pt);
  std::vector<std::vector<Rational>> prob(pt.m, std::vector<Rational>(pt.n));
  for (int i = 1; i <= pt.m; ++i) {
    for (int j = 1; j <= pt.n; ++j) prob[i - 1][j - 1] = Rational(below[j - 1][i - 1], pt.extensions);
  }
  return prob;
}

inline std::vector<std::vector<Rational>> probability_matrix(const GridDiagram& g) {
  return probability_matrix(path_tables(g));
}

// Balance constant by scanning all cells. The witness is the cell (i, j),
// read as the chain-element pair (a_i, b_j); on ties the lexicographically
// largest (i, j) is kept.
inline BalanceReport delta_grid(const PathTables& pt) {
  BalanceReport report;
  report.extension_count = pt.extensions;
  auto below = detail::below_by_column(pt);
  Integer best = 0;
  for (int i = 1; i <= pt.m; ++i) {
    for (int j = 1; j <= pt.n; ++j) {
      const Integer& b = below[j - 1][i - 1];
      Integer a = pt.extensions - b;
      const Integer& v = b < a ? b : a;
      if (v >= best && v > 0) {
        best = v;
        report.witness = {i, j};
      }
    }
  }
  report.delta = Rational(best, pt.extensions);
  return report;
}

inline BalanceReport delta_grid(const GridDiagram& g) { return delta_grid(path_tables(g)); }

// Cells with P(a_i < b_j) <= 1/2. They form a bottom- and left-justified
// staircase containing every blue cell and no red cell; its upper boundary
// is a monotone lattice path from (0,0) to (m,n).
struct SRegion {
  std::vector<int> s_col_heights;                  // per column, count of qualifying cells
  std::vector<std::pair<int, int>> boundary_path;  // vertices from (0,0) to (m,n)
};

inline SRegion s_region(const GridDiagram& g, const PathTables& pt) {
  auto below = detail::below_by_column(pt);
  SRegion s;
  s.s_col_heights.assign(g.n, 0);
  for (int j = 1; j <= g.n; ++j) {
    int h = 0;
    for (int i = g.m; i >= 1; --i) {
      if (2 * below[j - 1][i - 1] <= pt.extensions) {
        ++h;
      } else {
        break;
      }
    }
    // The qualifying set must be exactly the bottom block of the column.
    for (int i = 1; i <= g.m - h; ++i) {
      if (2 * below[j - 1][i - 1] <= pt.extensions) {
        throw verification_error("probability column is not monotone");
      }
    }
    s.s_col_heights[j - 1] = h;
    if (j > 1 && s.s_col_heights[j - 1] > s.s_col_heights[j - 2]) {
      throw verification_error("small-probability region is not a staircase");
    }
    if (h < g.blue_col_heights[j - 1]) throw verification_error("blue cell outside small-probability region");
    if (g.m - h < g.red_col_height(j)) throw verification_error("red cell inside small-probability region");
  }
  int row = 0;
  s.boundary_path.emplace_back(0, 0);
  for (int j = 1; j <= g.n; ++j) {
    int target = g.m - s.s_col_heights[j - 1];
    while (row < target) s.boundary_path.emplace_back(++row, j - 1);
    s.boundary_path.emplace_back(row, j);
  }
  while (row < g.m) s.boundary_path.emplace_back(++row, g.n);
  return s;
}

inline SRegion s_region(const GridDiagram& g) { return s_region(g, path_tables(g)); }

// Vertices where the poset splits as an ordinal sum: every element of the
// lower-left part lies below every element of the rest. Reported as (i, j)
// meaning the split puts a_1..a_i and b_1..b_j in the lower part.
inline std::vector<std::pair<int, int>> detect_direct_sum(const GridDiagram& g) {
  std::vector<std::pair<int, int>> splits;
  auto red_at = [&](int i, int j) {
    return i >= 1 && i <= g.m && j >= 1 && j <= g.n && g.red_cell(i, j);
  };
  auto blue_at = [&](int i, int j) {
    return i >= 1 && i <= g.m && j >= 1 && j <= g.n && g.blue_cell(i, j);
  };
  for (int i = 0; i <= g.m; ++i) {
    for (int j = 0; j <= g.n; ++j) {
      if ((i == 0 && j == 0) || (i == g.m && j == g.n)) continue;
      bool red = red_at(i, j) || red_at(i, j + 1) || red_at(i + 1, j) || red_at(i + 1, j + 1);
      bool blue = blue_at(i, j) || blue_at(i, j + 1) || blue_at(i + 1, j) || blue_at(i + 1, j + 1);
      if (red && blue) splits.emplace_back(i, j);
    }
  }
  // A colored corner cell splits off a single chain prefix or suffix.
  if (g.m >= 1 && g.n >= 1) {
    if (g.red_cell(1, 1)) splits.emplace_back(1, 0);
    if (g.blue_cell(1, 1)) splits.emplace_back(0, 1);
    if (g.red_cell(g.m, g.n)) splits.emplace_back(g.m, g.n - 1);
    if (g.blue_cell(g.m, g.n)) splits.emplace_back(g.m - 1, g.n);
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  return splits;
}

struct LogConcavityReport {
  bool pass = true;
  std::string failure;  // empty when pass
};

namespace detail {

inline bool logconcave_with_zeros(const std::vector<Integer>& c) {
  size_t first = c.size(), last = 0;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) {
      if (first == c.size()) first = k;
      last = k;
    }
  }
  for (size_t k = first; k <= last && k < c.size(); ++k) {
    if (c[k] == 0) return false;  // interior zero breaks the support block
  }
  for (size_t k = 1; k + 1 < c.size(); ++k) {
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  }
  return true;
}

}  // namespace detail

// Every row and column of both path tables is log-concave, zeros included.
inline LogConcavityReport check_log_concavity(const PathTables& pt) {
  LogConcavityReport rep;
  auto check = [&](const std::vector<Integer>& seq, const std::string& what) {
    if (!rep.pass) return;
    if (!detail::logconcave_with_zeros(seq)) {
      rep.pass = false;
      rep.failure = what;
    }
  };
  for (int i = 0; i <= pt.m; ++i) {
    std::vector<Integer> trow, rrow;
    for (int j = 0; j <= pt.n; ++j) {
      trow.push_back(pt.tt(i, j));
      rrow.push_back(pt.rr(i, j));
    }
    check(trow, "t row " + std::to_string(i));
    check(rrow, "r row " + std::to_string(i));
  }
  for (int j = 0; j <= pt.n; ++j) {
    std::vector<Integer> tcol, rcol;
    for (int i = 0; i <= pt.m; ++i) {
      tcol.push_back(pt.tt(i, j));
      rcol.push_back(pt.rr(i, j));
    }
    check(tcol, "t column " + std::to_string(j));
    check(rcol, "r column " + std::to_string(j));
  }
  return rep;
}

// Prefix sums of a positive log-concave sequence, asserted log-concave again.
inline std::vector<Integer> prefix_sums_logconcave(const std::vector<Integer>& c) {
  for (const Integer& v : c) {
    if (v <= 0) throw input_error("sequence must be positive");
  }
  for (size_t k = 1; k + 1 < c.size(); ++k) {
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) throw input_error("sequence must be log-concave");
  }
  std::vector<Integer> prefix;
  Integer acc = 0;
  for (const Integer& v : c) {
    acc += v;
    prefix.push_back(acc);
  }
  for (size_t k = 1; k + 1 < prefix.size(); ++k) {
    if (prefix[k] * prefix[k] < prefix[k - 1] * prefix[k + 1]) {
      throw verification_error("prefix sums lost log-concavity");
    }
  }
  return prefix;
}

// Text rendering: cells as '.', 'R', 'B'; vertices as '+', with '*' marking
// the boundary of the small-probability region. Row 0 is at the top.
inline std::string ascii_render(const GridDiagram& g, const SRegion* s = nullptr) {
  std::vector<std::string> canvas(2 * g.m + 1, std::string(2 * g.n + 1, ' '));
  for (int i = 0; i <= g.m; ++i) {
    for (int j = 0; j <= g.n; ++j) canvas[2 * i][2 * j] = '+';
  }
  if (s != nullptr) {
    for (auto [i, j] : s->boundary_path) canvas[2 * i][2 * j] = '*';
  }
  for (int i = 1; i <= g.m; ++i) {
    for (int j = 1; j <= g.n; ++j) {
      char c = '.';
      if (g.red_cell(i, j)) c = 'R';
      if (g.blue_cell(i, j)) c = 'B';
      canvas[2 * i - 1][2 * j - 1] = c;
    }
  }
  std::string out;
  for (const std::string& line : canvas) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace balance
