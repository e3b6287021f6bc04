#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "balance/exact.hpp"

namespace balance {

// Finite strict partial order on elements 0..size-1, stored as the full
// transitively closed less-than matrix.
class Poset {
 public:
  static Poset from_relations(int size, const std::vector<std::pair<int, int>>& relations) {
    if (size < 1) throw input_error("poset must have at least one element");
    Poset p;
    p.n_ = size;
    p.lt_.assign(static_cast<size_t>(size) * size, 0);
    for (auto [u, v] : relations) {
      if (u < 0 || u >= size || v < 0 || v >= size) throw input_error("relation index out of range");
      if (u == v) throw input_error("irreflexivity violated");
      p.lt_[static_cast<size_t>(u) * size + v] = 1;
    }
    // Warshall closure, then cycles show up on the diagonal.
    for (int k = 0; k < size; ++k) {
      for (int i = 0; i < size; ++i) {
        if (!p.lt_[static_cast<size_t>(i) * size + k]) continue;
        for (int j = 0; j < size; ++j) {
          if (p.lt_[static_cast<size_t>(k) * size + j]) p.lt_[static_cast<size_t>(i) * size + j] = 1;
        }
      }
    }
    for (int i = 0; i < size; ++i) {
      if (p.lt_[static_cast<size_t>(i) * size + i]) throw input_error("not a partial order: cycle detected");
    }
    return p;
  }

  // For callers that already hold a transitively closed less-than matrix;
  // verifies irreflexivity and antisymmetry, trusts closure.
  static Poset from_closed_matrix(int size, std::vector<uint8_t> lt) {
    if (size < 1) throw input_error("poset must have at least one element");
    if (lt.size() != static_cast<size_t>(size) * size) throw input_error("matrix size mismatch");
    Poset p;
    p.n_ = size;
    p.lt_ = std::move(lt);
    for (int u = 0; u < size; ++u) {
      if (p.lt_[static_cast<size_t>(u) * size + u]) throw input_error("irreflexivity violated");
      for (int v = u + 1; v < size; ++v) {
        if (p.lt_[static_cast<size_t>(u) * size + v] && p.lt_[static_cast<size_t>(v) * size + u]) {
          throw input_error("antisymmetry violated");
        }
      }
    }
    return p;
  }

  int size() const { return n_; }
  bool less(int u, int v) const { return lt_[static_cast<size_t>(u) * n_ + v] != 0; }
  bool comparable(int u, int v) const { return less(u, v) || less(v, u); }

  friend bool operator==(const Poset& x, const Poset& y) { return x.n_ == y.n_ && x.lt_ == y.lt_; }

 private:
  int n_ = 0;
  std::vector<uint8_t> lt_;
};

// Serialized generating relations are the covering pairs; the parser closes
// transitively, so round-trips are exact.
inline std::vector<std::pair<int, int>> cover_relations(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < p.size(); ++v) {
      if (!p.less(u, v)) continue;
      bool direct = true;
      for (int w = 0; w < p.size() && direct; ++w) {
        if (p.less(u, w) && p.less(w, v)) direct = false;
      }
      if (direct) covers.emplace_back(u, v);
    }
  }
  return covers;
}

inline std::string poset_to_text(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << "\n";
  for (auto [u, v] : cover_relations(p)) out << "rel " << u << " " << v << "\n";
  return out.str();
}

// Text format: a "poset <size>" header, then one "rel <u> <v>" line per
// generating relation (u < v, 0-indexed). Blank lines and '#' comments are
// ignored.
inline Poset parse_poset_text(std::istream& in) {
  std::string line;
  int size = -1;
  std::vector<std::pair<int, int>> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto want_end = [&] {
      std::string extra;
      if (ls >> extra) throw input_error("line " + std::to_string(lineno) + ": trailing tokens");
    };
    if (word == "poset") {
      if (size >= 0) throw input_error("line " + std::to_string(lineno) + ": duplicate poset header");
      if (!(ls >> size) || size < 1) throw input_error("line " + std::to_string(lineno) + ": bad poset size");
      want_end();
    } else if (word == "rel") {
      if (size < 0) throw input_error("line " + std::to_string(lineno) + ": rel before poset header");
      int u, v;
      if (!(ls >> u >> v)) throw input_error("line " + std::to_string(lineno) + ": bad rel line");
      want_end();
      rels.emplace_back(u, v);
    } else {
      throw input_error("line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
    }
  }
  if (size < 0) throw input_error("missing poset header");
  return Poset::from_relations(size, rels);
}

inline Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset_text(in);
}

namespace detail {

inline void check_oracle_limit(const Poset& p, int limit) {
  if (limit > 20) throw input_error("oracle limit exceeded: cap is 20");
  if (p.size() > limit) throw input_error("oracle limit exceeded");
}

// Backtracking over downset-free prefixes; visits every linear extension as
// a vector of elements in order.
template <class F>
void for_each_extension(const Poset& p, F&& visit) {
  const int n = p.size();
  std::vector<int> blocked(n, 0);  // predecessors not yet placed
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (p.less(u, v)) ++blocked[v];
    }
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(order.size()) == n) {
      visit(order);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || blocked[v] != 0) continue;
      used[v] = 1;
      order.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (p.less(v, w)) --blocked[w];
      }
      self(self);
      for (int w = 0; w < n; ++w) {
        if (p.less(v, w)) ++blocked[w];
      }
      order.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
}

}  // namespace detail

inline Integer count_extensions_oracle(const Poset& p, int limit = 10) {
  detail::check_oracle_limit(p, limit);
  unsigned long long count = 0;
  detail::for_each_extension(p, [&](const std::vector<int>&) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

// P(x precedes y) under the uniform distribution on linear extensions.
inline Rational pair_probability_oracle(const Poset& p, int x, int y, int limit = 10) {
  detail::check_oracle_limit(p, limit);
  if (x < 0 || x >= p.size() || y < 0 || y >= p.size()) throw input_error("element index out of range");
  if (x == y) return Rational(0);
  unsigned long long total = 0, before = 0;
  std::vector<int> pos(p.size());
  detail::for_each_extension(p, [&](const std::vector<int>& order) {
    ++total;
    for (int i = 0; i < p.size(); ++i) pos[order[i]] = i;
    if (pos[x] < pos[y]) ++before;
  });
  return Rational(Integer(static_cast<unsigned long>(before)), Integer(static_cast<unsigned long>(total)));
}

struct BalanceReport {
  Rational delta;
  std::optional<std::pair<int, int>> witness;  // absent when delta is 0
  Integer extension_count;
};

// Brute-force balance constant: max over pairs of min(P(x<y), P(y<x)),
// ties resolved to the lexicographically smallest ordered pair.
inline BalanceReport delta_oracle(const Poset& p, int limit = 10) {
  detail::check_oracle_limit(p, limit);
  const int n = p.size();
  std::vector<unsigned long long> cnt(static_cast<size_t>(n) * n, 0);
  unsigned long long total = 0;
  detail::for_each_extension(p, [&](const std::vector<int>& order) {
    ++total;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) cnt[static_cast<size_t>(order[i]) * n + order[j]] += 1;
    }
  });
  BalanceReport report;
  report.extension_count = Integer(static_cast<unsigned long>(total));
  unsigned long long best = 0;
  std::optional<std::pair<int, int>> witness;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      unsigned long long m = std::min(cnt[static_cast<size_t>(x) * n + y], cnt[static_cast<size_t>(y) * n + x]);
      if (m > best) {
        best = m;
        witness = {x, y};
      }
    }
  }
  report.delta = Rational(Integer(static_cast<unsigned long>(best)), Integer(static_cast<unsigned long>(total)));
  report.witness = witness;
  return report;
}

// Ordinal sum: everything in p lies below everything in q.
inline Poset direct_sum(const Poset& p, const Poset& q) {
  std::vector<std::pair<int, int>> rels;
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < p.size(); ++v) {
      if (p.less(u, v)) rels.emplace_back(u, v);
    }
  }
  for (int u = 0; u < q.size(); ++u) {
    for (int v = 0; v < q.size(); ++v) {
      if (q.less(u, v)) rels.emplace_back(p.size() + u, p.size() + v);
    }
  }
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < q.size(); ++v) rels.emplace_back(u, p.size() + v);
  }
  return Poset::from_relations(p.size() + q.size(), rels);
}

inline Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<std::pair<int, int>> rels;
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < p.size(); ++v) {
      if (p.less(u, v)) rels.emplace_back(u, v);
    }
  }
  for (int u = 0; u < q.size(); ++u) {
    for (int v = 0; v < q.size(); ++v) {
      if (q.less(u, v)) rels.emplace_back(p.size() + u, p.size() + v);
    }
  }
  return Poset::from_relations(p.size() + q.size(), rels);
}

inline bool is_chain(const Poset& p) {
  for (int u = 0; u < p.size(); ++u) {
    for (int v = u + 1; v < p.size(); ++v) {
      if (!p.comparable(u, v)) return false;
    }
  }
  return true;
}

struct TwoChainDecomposition {
  std::vector<int> chain_a;  // nonempty, listed in increasing order
  std::vector<int> chain_b;  // may be empty
};

struct WidthResult {
  int width = 0;
  std::optional<TwoChainDecomposition> decomposition;  // present iff width <= 2
};

// Dilworth via bipartite matching on the comparability relation: the minimum
// chain cover has size n - |max matching|, and equals the width.
inline WidthResult width_and_decompose(const Poset& p) {
  const int n = p.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> visited(n);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v = 0; v < n; ++v) {
      if (!p.less(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == -1 || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, u)) ++matched;
  }
  WidthResult result;
  result.width = n - matched;
  if (result.width > 2) return result;

  std::vector<int> succ(n, -1);
  std::vector<char> has_pred(n, 0);
  for (int v = 0; v < n; ++v) {
    if (match_right[v] != -1) {
      succ[match_right[v]] = v;
      has_pred[v] = 1;
    }
  }
  std::vector<std::vector<int>> chains;
  for (int u = 0; u < n; ++u) {
    if (has_pred[u]) continue;
    std::vector<int> chain;
    for (int v = u; v != -1; v = succ[v]) chain.push_back(v);
    chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  TwoChainDecomposition dec;
  dec.chain_a = chains[0];
  if (chains.size() > 1) dec.chain_b = chains[1];
  result.decomposition = std::move(dec);
  return result;
}

namespace detail {

inline std::vector<int> invariant_classes(const Poset& p) {
  const int n = p.size();
  std::vector<int> below(n, 0), above(n, 0), height(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (p.less(u, v)) {
        ++above[u];
        ++below[v];
      }
    }
  }
  // below-counts increase strictly along relations, so ordering by them is
  // topological.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return below[x] < below[y]; });
  for (int v : order) {
    for (int u = 0; u < n; ++u) {
      if (p.less(u, v)) height[v] = std::max(height[v], height[u] + 1);
    }
  }
  std::vector<std::tuple<int, int, int>> keys(n);
  for (int u = 0; u < n; ++u) keys[u] = {below[u], above[u], height[u]};
  std::vector<std::tuple<int, int, int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> cls(n);
  for (int u = 0; u < n; ++u) {
    cls[u] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[u]) - sorted.begin());
  }
  return cls;
}

// Interchangeable elements: incomparable, same class, and identical
// relations to every other element. Swapping two of them is an automorphism.
inline std::vector<int> twin_groups(const Poset& p, const std::vector<int>& cls) {
  const int n = p.size();
  std::vector<int> group(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (group[u] != -1) continue;
    group[u] = next;
    for (int v = u + 1; v < n; ++v) {
      if (group[v] != -1 || cls[v] != cls[u] || p.comparable(u, v)) continue;
      bool twin = true;
      for (int w = 0; w < n && twin; ++w) {
        if (w == u || w == v) continue;
        if (p.less(u, w) != p.less(v, w) || p.less(w, u) != p.less(w, v)) twin = false;
      }
      if (twin) group[v] = next;
    }
    ++next;
  }
  return group;
}

struct CanonState {
  const Poset& p;
  const std::vector<int>& cls;
  const std::vector<int>& twin;
  std::vector<int> prefix;
  std::vector<char> used;

  std::string chunk_for(int u) const {
    std::string c;
    c.reserve(prefix.size() + 1);
    c.push_back(static_cast<char>(cls[u]));
    for (int s : prefix) {
      char rel = p.less(s, u) ? 1 : (p.less(u, s) ? 2 : 0);
      c.push_back(rel);
    }
    return c;
  }

  // Minimal encoding of all completions of the current prefix. Only
  // candidates whose next chunk is minimal can start the minimal completion;
  // twins collapse to a single representative.
  std::string minimize() {
    const int n = p.size();
    if (static_cast<int>(prefix.size()) == n) return std::string();
    std::string best_chunk;
    std::vector<int> candidates;
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      std::string c = chunk_for(u);
      if (candidates.empty() || c < best_chunk) {
        best_chunk = std::move(c);
        candidates.assign(1, u);
      } else if (c == best_chunk) {
        candidates.push_back(u);
      }
    }
    std::vector<char> twin_seen;
    std::string best_tail;
    bool have_tail = false;
    for (int u : candidates) {
      if (static_cast<size_t>(twin[u]) >= twin_seen.size()) twin_seen.resize(twin[u] + 1, 0);
      if (twin_seen[twin[u]]) continue;
      twin_seen[twin[u]] = 1;
      used[u] = 1;
      prefix.push_back(u);
      std::string tail = minimize();
      prefix.pop_back();
      used[u] = 0;
      if (!have_tail || tail < best_tail) {
        best_tail = std::move(tail);
        have_tail = true;
      }
    }
    return best_chunk + best_tail;
  }
};

}  // namespace detail

// Isomorphism-invariant key: the lexicographically minimal relation-matrix
// encoding over element orderings compatible with the invariant classes.
inline std::string canonical_form(const Poset& p, int limit = 12) {
  if (p.size() > limit) throw input_error("canonical form size limit exceeded");
  std::vector<int> cls = detail::invariant_classes(p);
  std::vector<int> twin = detail::twin_groups(p, cls);
  detail::CanonState state{p, cls, twin, {}, std::vector<char>(p.size(), 0)};
  std::string body = state.minimize();
  std::string key;
  key.push_back(static_cast<char>(p.size()));
  key += body;
  return key;
}

inline std::string hex_key(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace balance
