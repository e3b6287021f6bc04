#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "balance/cases.hpp"
#include "balance/exact.hpp"
#include "balance/grid.hpp"
#include "balance/poset.hpp"

// Exhaustive sweep over small posets of width at most 2: every such poset
// arises from a pair of disjoint staircase regions in an m x n grid, so
// enumerating shape pairs and deduplicating by canonical form covers every
// isomorphism class.  The sweep computes the exact balance constant of each
// poset and checks the expected spectrum: chains at 0, nontrivial ordinal
// sums of single points and one-relation triples at exactly 1/3, and
// everything else strictly above lambda, leaving (1/3, lambda) empty.

namespace balance {

namespace detail {

// Appends the closed relation matrix poset for one shape pair: chain a of
// length m (elements 0..m-1), chain b of length n (elements m..m+n-1),
// cross relations read from the staircases.
inline Poset shape_pair_poset(int m, int n, const std::vector<int>& rrl, const std::vector<int>& bch) {
  const int size = m + n;
  std::vector<uint8_t> lt(static_cast<size_t>(size) * size, 0);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) lt[static_cast<size_t>(u) * size + v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) lt[static_cast<size_t>(m + u) * size + (m + v)] = 1;
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (rrl[i - 1] >= n - j + 1) {
        lt[static_cast<size_t>(i - 1) * size + (m + j - 1)] = 1;
      } else if (bch[j - 1] >= m - i + 1) {
        lt[static_cast<size_t>(m + j - 1) * size + (i - 1)] = 1;
      }
    }
  }
  return Poset::from_closed_matrix(size, std::move(lt));
}

// Non-increasing sequences with a per-position cap (itself non-increasing).
template <class F>
void for_each_staircase(const std::vector<int>& caps, std::vector<int>& cur, F&& emit) {
  if (cur.size() == caps.size()) {
    emit(cur);
    return;
  }
  const int pos = static_cast<int>(cur.size());
  int hi = caps[pos];
  if (pos > 0) hi = std::min(hi, cur[pos - 1]);
  for (int v = hi; v >= 0; --v) {
    cur.push_back(v);
    for_each_staircase(caps, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

// One poset per isomorphism class of width <= 2 on at most max_size
// elements, sorted by canonical key.
inline std::vector<Poset> enumerate_width2(int max_size) {
  if (max_size < 1) throw input_error("size bound must be at least 1");
  if (max_size > 12) throw input_error("size bound exceeds enumeration cap of 12");
  std::map<std::string, Poset> seen;
  for (int total = 1; total <= max_size; ++total) {
    for (int m = (total + 1) / 2; m <= total; ++m) {
      const int n = total - m;
      std::vector<int> red_caps(m, n);
      std::vector<int> rrl;
      detail::for_each_staircase(red_caps, rrl, [&](const std::vector<int>& red) {
        // Red column heights bound the blue ones column by column.
        std::vector<int> blue_caps(n);
        for (int j = 1; j <= n; ++j) {
          int rch = 0;
          for (int i = 0; i < m; ++i) {
            if (red[i] >= n - j + 1) ++rch;
          }
          blue_caps[j - 1] = m - rch;
        }
        std::vector<int> bch;
        detail::for_each_staircase(blue_caps, bch, [&](const std::vector<int>& blue) {
          Poset p = detail::shape_pair_poset(m, n, red, blue);
          std::string key = canonical_form(p);
          seen.emplace(std::move(key), std::move(p));
        });
      });
    }
  }
  std::vector<Poset> out;
  out.reserve(seen.size());
  for (auto& [key, p] : seen) out.push_back(std::move(p));
  return out;
}

// True when every block of the finest ordinal-sum factorization is a single
// element or the three-element poset with exactly one relation.  The blocks
// are the connected components of the incomparability graph.
inline bool is_aigner_family(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int u = 0; u < n; ++u) {
    if (comp[u] != -1) continue;
    std::vector<int> stack = {u};
    comp[u] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (comp[v] == -1 && v != x && !p.comparable(x, v)) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int u = 0; u < n; ++u) {
      if (comp[u] == c) members.push_back(u);
    }
    if (members.size() == 1) continue;
    if (members.size() != 3) return false;
    int comparable_pairs = 0;
    for (size_t x = 0; x < members.size(); ++x) {
      for (size_t y = x + 1; y < members.size(); ++y) {
        if (p.comparable(members[x], members[y])) ++comparable_pairs;
      }
    }
    if (comparable_pairs != 1) return false;
  }
  return true;
}

struct SpectrumRecord {
  std::string key;  // hex canonical key
  Rational delta;
  bool is_aigner = false;
  Poset witness;
};

struct SpectrumReport {
  int max_size = 0;
  std::vector<SpectrumRecord> records;           // sorted by key
  std::optional<SpectrumRecord> min_non_aigner;  // smallest delta outside the family
  std::vector<Rational> spectrum;                // distinct delta values, ascending
};

inline std::string spectrum_line(const SpectrumRecord& rec) {
  return rec.key + "\t" + to_string(rec.delta) + "\t" + (rec.is_aigner ? "1" : "0");
}

namespace detail {

inline Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw input_error("malformed fraction: " + text);
  Integer num, den;
  if (mpz_set_str(num.get_mpz_t(), text.substr(0, slash).c_str(), 10) != 0 ||
      mpz_set_str(den.get_mpz_t(), text.substr(slash + 1).c_str(), 10) != 0) {
    throw input_error("malformed fraction: " + text);
  }
  return Rational(num, den);
}

inline std::map<std::string, Rational> load_spectrum_cache(const std::string& path) {
  std::map<std::string, Rational> cached;
  std::ifstream in(path);
  if (!in.is_open()) return cached;  // absent cache: cold start
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw input_error("cache line " + std::to_string(lineno) + ": expected three fields");
    }
    const std::string flag = line.substr(tab2 + 1);
    if (flag != "0" && flag != "1") {
      throw input_error("cache line " + std::to_string(lineno) + ": bad flag");
    }
    cached[line.substr(0, tab1)] = parse_fraction(line.substr(tab1 + 1, tab2 - tab1 - 1));
  }
  return cached;
}

}  // namespace detail

// Computes the balance constant of every width <= 2 poset on at most
// max_size elements and checks the spectrum shape.  Any failure throws
// verification_error with the offending poset serialized in the message.
// A cache file (same line format as the report) supplies previously
// computed deltas by canonical key and is extended with new ones.
inline SpectrumReport gap_report(int max_size, int jobs = 1, const std::string& cache_path = "") {
  if (jobs < 1) throw input_error("worker count must be at least 1");
  std::vector<Poset> posets = enumerate_width2(max_size);

  std::map<std::string, Rational> cached;
  if (!cache_path.empty()) cached = detail::load_spectrum_cache(cache_path);

  const int count = static_cast<int>(posets.size());
  std::vector<SpectrumRecord> records(count);
  std::atomic<int> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  auto worker = [&] {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        const Poset& p = posets[i];
        SpectrumRecord rec;
        rec.key = hex_key(canonical_form(p));
        rec.is_aigner = is_aigner_family(p);
        const auto it = cached.find(rec.key);
        if (it != cached.end()) {
          rec.delta = it->second;
        } else {
          const WidthResult w = width_and_decompose(p);
          rec.delta = delta_grid(build_grid(p, *w.decomposition)).delta;
        }
        rec.witness = p;
        records[i] = std::move(rec);
      } catch (...) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
        cursor.store(count);
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SpectrumReport report;
  report.max_size = max_size;
  report.records = std::move(records);

  const QuadraticNumber lam = lambda_constant();
  const Rational third(1, 3);
  const Rational half(1, 2);
  auto dump = [](const std::string& what, const SpectrumRecord& rec) {
    throw verification_error(what + ": delta = " + to_string(rec.delta) + "\n" +
                             poset_to_text(rec.witness));
  };
  for (const SpectrumRecord& rec : report.records) {
    if (rec.delta.sign() < 0 || rec.delta > half) dump("balance constant out of range", rec);
    const bool chain = is_chain(rec.witness);
    if (chain) {
      if (rec.delta.sign() != 0) dump("chain with nonzero balance constant", rec);
      continue;
    }
    if (rec.delta < third) dump("balance constant below 1/3", rec);
    if (rec.is_aigner) {
      if (!(rec.delta == third)) dump("family member off 1/3", rec);
    } else if (quad_compare(QuadraticNumber(rec.delta), lam) != std::strong_ordering::greater) {
      dump("balance constant inside the forbidden gap", rec);
    }
    if (!rec.is_aigner && !report.min_non_aigner.has_value()) {
      report.min_non_aigner = rec;
    } else if (!rec.is_aigner && rec.delta < report.min_non_aigner->delta) {
      report.min_non_aigner = rec;
    }
  }

  std::vector<Rational> values;
  values.reserve(report.records.size());
  for (const SpectrumRecord& rec : report.records) values.push_back(rec.delta);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  report.spectrum = std::move(values);

  if (!cache_path.empty()) {
    std::ofstream out(cache_path, std::ios::app);
    if (!out.is_open()) throw input_error("cannot open cache file: " + cache_path);
    for (const SpectrumRecord& rec : report.records) {
      if (cached.find(rec.key) == cached.end()) out << spectrum_line(rec) << "\n";
    }
  }
  return report;
}

}  // namespace balance
