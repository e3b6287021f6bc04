#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "balance/exact.hpp"
#include "balance/grid.hpp"
#include "balance/poset.hpp"

// The T_n family: a sequence of width-2 posets, given here directly by their
// grid diagrams, whose balance constants decrease strictly toward
// (5864893 + 27*sqrt(57)) / 16812976 from above.  The diagram for T_n has
// 2n+21 rows and 2n+20 columns: a fixed corner block, n copies of a
// two-column band, and the 180-degree rotation of the corner block.  Path
// counts inside the bands obey the linear recurrence
//   a_{m+1} = 3 a_m + 3 b_m,   b_{m+1} = 4 a_m + 6 b_m,
// and everything else about the family (extension counts, the balancing
// pair, the limit constant) is expressed in terms of a_m and b_m.
//
// build_tn reconstructs each diagram from scratch and cross-checks every
// structural claim against freshly computed path tables before returning,
// so a TnFamily in hand is already verified.

namespace balance {

namespace tn_tables {

// Forward path counts t[i][j] for 0 <= i <= 11, 0 <= j <= 10: the top-left
// corner block, identical for every n.
inline constexpr long kCornerPaths[12][11] = {
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 5, 5, 0, 0, 0, 0, 0, 0, 0},
    {1, 4, 9, 14, 14, 0, 0, 0, 0, 0, 0},
    {0, 0, 9, 23, 37, 37, 37, 0, 0, 0, 0},
    {0, 0, 9, 32, 69, 106, 143, 0, 0, 0, 0},
    {0, 0, 0, 0, 69, 175, 318, 318, 318, 0, 0},
    {0, 0, 0, 0, 69, 244, 562, 880, 1198, 0, 0},
    {0, 0, 0, 0, 0, 0, 562, 1442, 2640, 2640, 0},
    {0, 0, 0, 0, 0, 0, 562, 2004, 4644, 7284, 7284},
    {0, 0, 0, 0, 0, 0, 0, 0, 4644, 11928, 19212},
    {0, 0, 0, 0, 0, 0, 0, 0, 4644, 16572, 35784},
};

// Forward path counts into the rotated corner block depend on n only through
// the last band anchors: t[(2n+21)-i][(2n+20)-j] equals
// kMirrorA[i][j] * a_{n+1} + kMirrorB[i][j] * b_{n+1}.
inline constexpr long kMirrorA[12][11] = {
    {16572, 5781, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {10791, 5781, 2184, 0, 0, 0, 0, 0, 0, 0, 0},
    {5010, 3597, 2184, 771, 0, 0, 0, 0, 0, 0, 0},
    {1413, 1413, 1413, 771, 300, 0, 0, 0, 0, 0, 0},
    {0, 0, 642, 471, 300, 129, 36, 0, 0, 0, 0},
    {0, 0, 171, 171, 171, 93, 36, 0, 0, 0, 0},
    {0, 0, 0, 0, 78, 57, 36, 15, 4, 0, 0},
    {0, 0, 0, 0, 21, 21, 21, 11, 4, 0, 0},
    {0, 0, 0, 0, 0, 0, 10, 7, 4, 1, 0},
    {0, 0, 0, 0, 0, 0, 3, 3, 3, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
};

inline constexpr long kMirrorB[12][11] = {
    {19212, 6702, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12510, 6702, 2532, 0, 0, 0, 0, 0, 0, 0, 0},
    {5808, 4170, 2532, 894, 0, 0, 0, 0, 0, 0, 0},
    {1638, 1638, 1638, 894, 348, 0, 0, 0, 0, 0, 0},
    {0, 0, 744, 546, 348, 150, 42, 0, 0, 0, 0},
    {0, 0, 198, 198, 198, 108, 42, 0, 0, 0, 0},
    {0, 0, 0, 0, 90, 66, 42, 18, 5, 0, 0},
    {0, 0, 0, 0, 24, 24, 24, 13, 5, 0, 0},
    {0, 0, 0, 0, 0, 0, 11, 8, 5, 2, 0},
    {0, 0, 0, 0, 0, 0, 3, 3, 3, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

// The 27 uncolored cells of the corner block.  For each, the count on the
// designated side (above when `above` is set, otherwise below) equals
// ca * a_{n+1} + cb * b_{n+1}; the opposite side is its complement in the
// extension count.
struct CornerCell {
  int i;
  int j;
  bool above;
  long ca;
  long cb;
};

inline constexpr CornerCell kCornerCells[27] = {
    {1, 1, true, 5781, 6702},    {2, 1, false, 5010, 5808},  {2, 2, true, 4368, 5064},
    {3, 1, false, 1413, 1638},   {3, 2, false, 5652, 6552},  {3, 3, true, 3855, 4470},
    {4, 3, false, 5778, 6696},   {4, 4, true, 4200, 4872},   {5, 3, false, 1539, 1782},
    {5, 4, false, 5472, 6336},   {5, 5, true, 4773, 5550},   {5, 6, true, 1332, 1554},
    {6, 5, false, 5382, 6210},   {6, 6, true, 5148, 6006},   {7, 5, false, 1449, 1656},
    {7, 6, false, 5124, 5856},   {7, 7, true, 4770, 5724},   {7, 8, true, 1272, 1590},
    {8, 7, false, 5620, 6182},   {8, 8, true, 4792, 5990},   {9, 7, false, 1686, 1686},
    {9, 8, false, 6012, 6012},   {9, 9, true, 2640, 5280},   {10, 9, false, 9288, 4644},
    {10, 10, true, 0, 7284},     {11, 9, false, 4644, 0},    {11, 10, false, 16572, 0},
};

}  // namespace tn_tables

// Band anchors and derived quantities.  Vectors are indexed 1..n+1 with
// slot 0 unused.
struct TnState {
  int n = 0;
  std::vector<Integer> a;
  std::vector<Integer> b;
  std::vector<Rational> f;  // f[m] = a[m] / b[m], strictly increasing
  Integer extensions;
};

struct TnGeometry {
  int n = 0;
  GridDiagram grid;
  PathTables tables;
};

struct TnFamily {
  TnGeometry geometry;
  TnState state;
};

// Limit of tn_delta(n) as n grows; every member stays strictly above it.
inline QuadraticNumber beta() {
  return QuadraticNumber(Rational(Integer(5864893), Integer(16812976)),
                         Rational(Integer(27), Integer(16812976)), 57);
}

// Limit of the anchor ratio a_m / b_m.
inline QuadraticNumber f_limit() {
  return QuadraticNumber(Rational(-3, 8), Rational(1, 8), 57);
}

namespace detail {

// Red column heights of the T_n diagram, indexed 1..2n+20 (slot 0 unused).
inline std::vector<int> tn_red_profile(int n) {
  const int cols = 2 * n + 20;
  constexpr int head[10] = {0, 1, 2, 3, 4, 4, 6, 6, 8, 9};
  constexpr int tail[10] = {0, 0, 2, 2, 4, 4, 6, 6, 8, 8};
  std::vector<int> rch(cols + 1, 0);
  for (int j = 1; j <= 10; ++j) rch[j] = head[j - 1];
  for (int j = 11; j <= 2 * n + 10; ++j) rch[j] = 2 * ((j - 9) / 2) + 8;
  for (int j = 2 * n + 11; j <= cols; ++j) rch[j] = 2 * n + 10 + tail[j - (2 * n + 11)];
  return rch;
}

}  // namespace detail

inline TnFamily build_tn(int n) {
  if (n < 1) throw input_error("family index must be at least 1");
  const int rows = 2 * n + 21;
  const int cols = 2 * n + 20;
  std::vector<int> rch = detail::tn_red_profile(n);

  std::vector<int> red(rows, 0), blue(cols, 0);
  for (int i = 1; i <= rows; ++i) {
    int count = 0;
    for (int j = 1; j <= cols; ++j) {
      if (rch[j] >= i) ++count;
    }
    red[i - 1] = count;
  }
  for (int j = 1; j <= cols; ++j) blue[j - 1] = rch[cols + 1 - j];

  GridDiagram grid(rows, cols, std::move(red), std::move(blue));
  PathTables pt = path_tables(grid);

  auto fail = [](const std::string& what) {
    throw verification_error("geometry reconstruction failed: " + what);
  };

  for (int i = 0; i <= 11; ++i) {
    for (int j = 0; j <= 10; ++j) {
      if (pt.tt(i, j) != tn_tables::kCornerPaths[i][j]) fail("corner path counts");
    }
  }
  for (int i = 0; i <= rows; ++i) {
    for (int j = 0; j <= cols; ++j) {
      if (pt.rr(i, j) != pt.tt(rows - i, cols - j)) fail("rotational symmetry");
    }
  }

  TnState st;
  st.n = n;
  st.a.assign(n + 2, Integer(0));
  st.b.assign(n + 2, Integer(0));
  st.f.assign(n + 2, Rational());
  for (int m = 1; m <= n + 1; ++m) {
    st.a[m] = pt.tt(2 * m + 8, 2 * m + 8);
    st.b[m] = pt.tt(2 * m + 9, 2 * m + 8);
    if (st.b[m] == 0) fail("vanishing band anchor");
    st.f[m] = Rational(st.a[m], st.b[m]);
  }
  st.extensions = pt.extensions;

  if (st.a[1] != 19212 || st.b[1] != 35784) fail("first band anchors");
  for (int m = 1; m <= n; ++m) {
    if (st.a[m + 1] != 3 * st.a[m] + 3 * st.b[m]) fail("anchor recurrence");
    if (st.b[m + 1] != 4 * st.a[m] + 6 * st.b[m]) fail("anchor recurrence");
    if (pt.tt(2 * m + 8, 2 * m + 9) != st.a[m]) fail("band interior counts");
    if (pt.tt(2 * m + 8, 2 * m + 10) != st.a[m]) fail("band interior counts");
    if (pt.tt(2 * m + 9, 2 * m + 9) != st.a[m] + st.b[m]) fail("band interior counts");
    if (pt.tt(2 * m + 10, 2 * m + 9) != st.a[m] + 2 * st.b[m]) fail("band interior counts");
    if (pt.tt(2 * m + 9, 2 * m + 10) != 2 * st.a[m] + st.b[m]) fail("band interior counts");
    if (pt.tt(2 * m + 11, 2 * m + 9) != st.a[m] + 3 * st.b[m]) fail("band interior counts");
    if (st.f[m] >= st.f[m + 1]) fail("anchor ratio not increasing");
  }
  if (st.extensions != 16572 * st.a[n + 1] + 19212 * st.b[n + 1]) fail("extension count formula");
  if (pt.rr(0, 1) != 5781 * st.a[n + 1] + 6702 * st.b[n + 1]) fail("balancing cell formula");

  return TnFamily{TnGeometry{n, std::move(grid), std::move(pt)}, std::move(st)};
}

// Balance constant of T_n, in closed form from the band anchors, checked
// against a full scan of the path tables.
inline Rational tn_delta(const TnFamily& fam) {
  const TnState& st = fam.state;
  Rational closed(5781 * st.a[st.n + 1] + 6702 * st.b[st.n + 1], st.extensions);
  BalanceReport scan = delta_grid(fam.geometry.tables);
  if (scan.delta != closed) throw verification_error("δ(T_n) claim violated");
  return closed;
}

inline Rational tn_delta(int n) { return tn_delta(build_tn(n)); }

// T_n as an abstract poset: elements 0..2n+20 form the first chain (top
// strand of the grid), elements 2n+21..4n+40 the second.  Cross relations
// are read off the path tables: a_i < b_j exactly when no extension puts
// b_j first, and conversely.
inline Poset tn_export_poset(int n) {
  TnFamily fam = build_tn(n);
  const PathTables& pt = fam.geometry.tables;
  const int m = pt.m;
  const int k = pt.n;
  std::vector<std::pair<int, int>> rels;
  for (int i = 1; i < m; ++i) rels.push_back({i - 1, i});
  for (int j = 1; j < k; ++j) rels.push_back({m + j - 1, m + j});
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (count_above(pt, i, j) == 0) {
        rels.push_back({i - 1, m + j - 1});
      } else if (count_below(pt, i, j) == 0) {
        rels.push_back({m + j - 1, i - 1});
      }
    }
  }
  return Poset::from_relations(m + k, rels);
}

// The chain decomposition matching tn_export_poset's element numbering.
inline TwoChainDecomposition tn_strand_decomposition(int n) {
  const int m = 2 * n + 21;
  const int k = 2 * n + 20;
  TwoChainDecomposition dec;
  dec.chain_a.resize(m);
  dec.chain_b.resize(k);
  for (int i = 0; i < m; ++i) dec.chain_a[i] = i;
  for (int j = 0; j < k; ++j) dec.chain_b[j] = m + j;
  return dec;
}

struct AppendixCheck {
  std::string name;
  int m = 0;  // band or term index; 0 for aggregate checks
  bool pass = true;
  std::string detail;
};

struct AppendixReport {
  int n = 0;
  bool pass = true;
  std::vector<AppendixCheck> checks;
};

namespace detail {

inline std::string cell_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

// Re-derives every tabulated fact about T_n from its path tables: the corner
// block, the mirrored corner coefficients, the 27 corner cell counts, the
// per-band strict inequalities that pin down the balancing pair, the anchor
// ratio interval, log-convexity of the b sequence, and the closed form for
// b_i.  `bound` caps n to keep runtimes predictable.
inline AppendixReport verify_appendix(int n, int bound = 200) {
  if (n < 1) throw input_error("family index must be at least 1");
  if (n > bound) throw input_error("family index exceeds verification bound");
  TnFamily fam = build_tn(n);
  const PathTables& pt = fam.geometry.tables;
  const TnState& st = fam.state;
  const Integer& an = st.a[n + 1];
  const Integer& bn = st.b[n + 1];
  const int rows = pt.m;
  const int cols = pt.n;

  AppendixReport rep;
  rep.n = n;
  auto add = [&rep](const std::string& name, int m, bool ok, std::string detail) {
    if (ok) detail.clear();
    rep.checks.push_back(AppendixCheck{name, m, ok, std::move(detail)});
    if (!ok) rep.pass = false;
  };

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= 11 && ok; ++i) {
      for (int j = 0; j <= 10 && ok; ++j) {
        if (pt.tt(i, j) != tn_tables::kCornerPaths[i][j]) {
          ok = false;
          detail = "t" + detail::cell_name(i, j) + " = " + pt.tt(i, j).get_str();
        }
      }
    }
    add("corner-table", 0, ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= 11 && ok; ++i) {
      for (int j = 0; j <= 10 && ok; ++j) {
        Integer want = tn_tables::kMirrorA[i][j] * an + tn_tables::kMirrorB[i][j] * bn;
        if (pt.tt(rows - i, cols - j) != want) {
          ok = false;
          detail = "t" + detail::cell_name(rows - i, cols - j) + " = " +
                   pt.tt(rows - i, cols - j).get_str() + ", expected " + want.get_str();
        }
      }
    }
    add("mirror-table", 0, ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<int, int>> listed;
    for (const auto& cell : tn_tables::kCornerCells) {
      Integer above = count_above(pt, cell.i, cell.j);
      Integer below = count_below(pt, cell.i, cell.j);
      Integer want = cell.ca * an + cell.cb * bn;
      const Integer& designated = cell.above ? above : below;
      const Integer& other = cell.above ? below : above;
      if (designated != want) {
        ok = false;
        detail = detail::cell_name(cell.i, cell.j) + " " + (cell.above ? "above" : "below") +
                 " = " + designated.get_str() + ", expected " + want.get_str() +
                 " (opposite side " + other.get_str() + ")";
        break;
      }
      listed.push_back({cell.i, cell.j});
    }
    if (ok) {
      std::vector<std::pair<int, int>> uncolored;
      for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= 10; ++j) {
          if (!fam.geometry.grid.red_cell(i, j) && !fam.geometry.grid.blue_cell(i, j)) {
            uncolored.push_back({i, j});
          }
        }
      }
      std::sort(listed.begin(), listed.end());
      if (uncolored != listed) {
        ok = false;
        detail = "uncolored corner cells do not match the tabulated list";
      }
    }
    add("corner-cells", 0, ok, detail);
  }

  {
    Integer top = 5781 * an + 6702 * bn;
    for (int m = 1; m <= n; ++m) {
      Integer lhs1 = st.a[m] * (st.a[n + 1 - m] + 3 * st.b[n + 1 - m]);
      Integer lhs2 = st.a[m] * st.b[n + 1 - m];
      Integer lhs3 = (2 * st.a[m] + st.b[m]) * st.b[n + 1 - m];
      bool ok = lhs1 < top && lhs2 < top && lhs3 < top;
      add("band-inequality", m, ok,
          "band products " + lhs1.get_str() + ", " + lhs2.get_str() + ", " + lhs3.get_str() +
              " vs " + top.get_str());
    }
  }

  {
    const Rational lo(194, 1927);
    const Rational hi(98, 167);
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= n + 1 && ok; ++m) {
      if (st.f[m] <= lo || st.f[m] >= hi) {
        ok = false;
        detail = "f_" + std::to_string(m) + " = " + to_string(st.f[m]);
      }
    }
    add("ratio-interval", 0, ok, detail);
  }

  if (n == 1) {
    add("log-convexity", 0, true, "");
  } else {
    for (int m = 1; m + 2 <= n + 1; ++m) {
      bool ok = st.b[m] * st.b[m + 2] >= st.b[m + 1] * st.b[m + 1];
      add("log-convexity", m, ok,
          "b_" + std::to_string(m) + " b_" + std::to_string(m + 2) + " < b_" +
              std::to_string(m + 1) + "^2");
    }
  }

  {
    const QuadraticNumber root(Rational(0), Rational(1), 57);
    const QuadraticNumber base(Rational(9, 2), Rational(1, 2), 57);
    const QuadraticNumber coef(Rational(12906), Rational(2542), 57);
    QuadraticNumber power(Rational(1));
    for (int i = 1; i <= n; ++i) {
      power = power * base;
      QuadraticNumber term = coef * power;
      QuadraticNumber value = (term - conjugate(term)) / root;
      bool ok = value.is_rational() && value.rational_part() == Rational(st.b[i]);
      add("closed-form", i, ok, "b_" + std::to_string(i) + " = " + st.b[i].get_str());
    }
  }

  return rep;
}

}  // namespace balance
