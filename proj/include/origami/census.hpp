#pragma once

// Brute-force census of degree-d origamis (transitive pairs (h, v) in S_d^2
// up to simultaneous conjugation), with a cross-check of the component table
// and of the constructions.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "origami/components.hpp"
#include "origami/invariants.hpp"
#include "origami/surface.hpp"

namespace origami {

inline constexpr int kDefaultCensusGuard = 7;

// Degree guard; ORIGAMI_FORGE_CENSUS_GUARD overrides the default.
inline int census_guard() {
  if (const char* env = std::getenv("ORIGAMI_FORGE_CENSUS_GUARD")) {
    try {
      const int g = std::stoi(env);
      if (g >= 1) return g;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("ORIGAMI_FORGE_CENSUS_GUARD must be a positive integer, got '") + env + "'");
  }
  return kDefaultCensusGuard;
}

struct CensusEntry {
  GridSurface surface;  // canonical form
  StratumSig stratum;
  ComponentLabel component = ComponentLabel::Unique;
  bool primitive = false;
  std::uint64_t class_size = 0;  // labelled pairs in the conjugacy class
  int h_class = 0;               // index into census_h_classes(d)
  bool hyperelliptic = false;    // an involution with 2g+2 fixed points exists
  int spin = -1;                 // -1 unless all zero orders are even
};

// Cycle types of h, largest parts first, in reverse lexicographic order.
inline std::vector<std::vector<int>> census_h_classes(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int mx) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, mx); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Label from the raw invariants, using the table only to name the class.
// A witness in a stratum without a hyperelliptic component is reported by
// cross_validate, not hidden here.
inline ComponentLabel census_label(const StratumSig& st, bool witness, int spin) {
  if (st.alpha.empty()) return ComponentLabel::Unique;
  if (witness && has_component(st, ComponentLabel::Hyperelliptic)) return ComponentLabel::Hyperelliptic;
  if (spin >= 0) return spin == 0 ? ComponentLabel::EvenSpin : ComponentLabel::OddSpin;
  if (has_component(st, ComponentLabel::NonHyperelliptic)) return ComponentLabel::NonHyperelliptic;
  return ComponentLabel::Unique;
}

inline CensusEntry census_entry(const GridSurface& s, int h_class) {
  const auto cr = canonicalize(s);
  const auto st = stratum(cr.surface);
  const bool witness = !st.alpha.empty() && hyperelliptic_witness(cr.surface).has_value();
  const int spin = !st.alpha.empty() && st.all_even() ? spin_parity(cr.surface).parity : -1;
  return CensusEntry{cr.surface,
                     st,
                     census_label(st, witness, spin),
                     is_primitive(cr.surface).primitive,
                     factorial(s.degree()) / static_cast<std::uint64_t>(cr.automorphisms),
                     h_class,
                     witness,
                     spin};
}

namespace detail {

inline bool census_less(const CensusEntry& x, const CensusEntry& y) {
  if (x.h_class != y.h_class) return x.h_class < y.h_class;
  if (x.stratum != y.stratum) return x.stratum < y.stratum;
  return x.surface.data().cells.size() == y.surface.data().cells.size()
             ? std::lexicographical_compare(
                   x.surface.data().cells.begin(), x.surface.data().cells.end(), y.surface.data().cells.begin(),
                   y.surface.data().cells.end(),
                   [](const Cell& p, const Cell& q) { return std::tie(p.right, p.top) < std::tie(q.right, q.top); })
             : x.surface.num_cells() < y.surface.num_cells();
}

inline void check_degree(int d) {
  const int guard = census_guard();
  if (d < 1 || d > guard)
    throw std::invalid_argument("census: degree " + std::to_string(d) + " outside 1.." + std::to_string(guard) +
                                " (raise ORIGAMI_FORGE_CENSUS_GUARD to go further)");
}

}  // namespace detail

// All classes whose h has cycle type census_h_classes(d)[k], sorted.
inline std::vector<CensusEntry> enumerate_h_class(int d, int k) {
  detail::check_degree(d);
  const auto classes = census_h_classes(d);
  if (k < 0 || k >= static_cast<int>(classes.size())) throw std::invalid_argument("census: bad h class index");
  std::vector<int> h;
  int start = 0;
  for (int p : classes[k]) {
    for (int j = 0; j < p; ++j) h.push_back(start + (j + 1) % p);
    start += p;
  }
  const Perm hp(h);
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 0);
  std::set<std::vector<int>> seen;
  std::vector<CensusEntry> out;
  do {
    const Perm vp(v);
    if (!is_transitive(hp, vp)) continue;
    const auto s = GridSurface::from_permutations(hp, vp);
    const auto canon = canonical_form(s);
    std::vector<int> key;
    for (const auto& c : canon.data().cells) {
      key.push_back(c.right);
      key.push_back(c.top);
    }
    if (!seen.insert(std::move(key)).second) continue;
    out.push_back(census_entry(s, k));
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end(), detail::census_less);
  return out;
}

// Parallel over h classes; the merged list does not depend on `jobs`.
inline std::vector<CensusEntry> enumerate(int d, int jobs = 1) {
  detail::check_degree(d);
  const int nk = static_cast<int>(census_h_classes(d).size());
  std::vector<std::vector<CensusEntry>> parts(static_cast<std::size_t>(nk));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next++) < nk;) parts[k] = enumerate_h_class(d, k);
  };
  jobs = std::max(1, std::min(jobs, nk));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CensusEntry> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

// Transitive pairs in S_d^2 by the standard recurrence on the orbit of 1:
// t_n = (n!)^2 - sum_{k<n} C(n-1,k-1) t_k ((n-k)!)^2.
inline std::uint64_t transitive_pair_count(int d) {
  if (d < 1 || d > 10) throw std::invalid_argument("transitive_pair_count: 1 <= d <= 10");
  std::vector<std::uint64_t> t(static_cast<std::size_t>(d + 1), 0);
  auto binom = [](int n, int k) {
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return b;
  };
  for (int n = 1; n <= d; ++n) {
    std::uint64_t f = factorial(n);
    std::uint64_t total = f * f;
    for (int k = 1; k < n; ++k) {
      const std::uint64_t g = factorial(n - k);
      total -= binom(n - 1, k - 1) * t[k] * g * g;
    }
    t[n] = total;
  }
  return t[d];
}

struct CrossValidation {
  int degree = 0;
  std::size_t entries = 0;
  std::uint64_t class_size_total = 0;
  std::uint64_t expected_total = 0;
  std::vector<std::string> rh_violations;       // (a)
  std::vector<std::string> missing_components;  // (b)
  std::vector<std::string> partition_mismatch;  // (c)
  std::vector<std::string> stray_witnesses;     // witness in a multi-component stratum without hyp component
  std::map<StratumSig, std::map<ComponentLabel, std::size_t>> partition;

  bool ok() const {
    return class_size_total == expected_total && rh_violations.empty() && missing_components.empty() &&
           partition_mismatch.empty() && stray_witnesses.empty();
  }
  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    out.push_back("degree " + std::to_string(degree) + ": " + std::to_string(entries) + " classes, " +
                  std::to_string(class_size_total) + " labelled pairs (expected " + std::to_string(expected_total) + ")");
    auto add = [&](const char* tag, const std::vector<std::string>& v) {
      out.push_back(std::string(tag) + (v.empty() ? ": ok" : ": " + std::to_string(v.size()) + " problem(s)"));
      for (const auto& x : v) out.push_back("  " + x);
    };
    add("(a) riemann-hurwitz", rh_violations);
    add("(b) existence", missing_components);
    add("(c) component partition", partition_mismatch);
    add("    hyperelliptic witnesses", stray_witnesses);
    for (const auto& [st, m] : partition) {
      std::string l = "  " + st.to_string() + ":";
      for (const auto& [c, n] : m) l += " " + to_string(c) + "=" + std::to_string(n);
      out.push_back(l);
    }
    return out;
  }
};

// (a) every primitive entry has d > max alpha; (b) every table component of
// every stratum that fits over one branch point at degree d (sum of
// alpha_i + 1 <= d) has a primitive entry; (c) labels seen per stratum equal
// the table.
inline CrossValidation cross_validate(int d, const std::vector<CensusEntry>& entries) {
  CrossValidation r;
  r.degree = d;
  r.entries = entries.size();
  r.expected_total = transitive_pair_count(d);
  std::map<StratumSig, std::set<ComponentLabel>> primitive_seen;
  for (const auto& e : entries) {
    r.class_size_total += e.class_size;
    ++r.partition[e.stratum][e.component];
    if (e.primitive) primitive_seen[e.stratum].insert(e.component);
    if (e.primitive && !e.stratum.alpha.empty() && e.stratum.max_order() >= d)
      r.rh_violations.push_back("primitive entry in " + e.stratum.to_string() + " at degree " + std::to_string(d));
    const auto table = components_of(e.stratum);
    if (e.hyperelliptic && table.size() > 1 && !has_component(e.stratum, ComponentLabel::Hyperelliptic))
      r.stray_witnesses.push_back("witness in " + e.stratum.to_string());
  }
  for (const auto& [st, m] : r.partition) {
    std::set<ComponentLabel> seen;
    for (const auto& [c, n] : m) seen.insert(c);
    const auto table = components_of(st);
    if (seen != std::set<ComponentLabel>(table.begin(), table.end())) {
      std::string l = st.to_string() + ": seen";
      for (auto c : seen) l += " " + to_string(c);
      l += ", table";
      for (auto c : table) l += " " + to_string(c);
      r.partition_mismatch.push_back(l);
    }
  }
  // Strata fitting over one branch point: partitions of 2g-2 with sum(alpha_i+1) <= d.
  for (int sum = 2; sum <= 2 * d; sum += 2)
    for (const auto& p : census_h_classes(sum)) {
      int load = 0;
      for (int x : p) load += x + 1;
      const StratumSig st(p);
      if (load > d || st.max_order() >= d) continue;
      for (auto c : components_of(st))
        if (!primitive_seen[st].count(c))
          r.missing_components.push_back("no primitive entry in " + st.to_string() + " " + to_string(c));
    }
  return r;
}

inline CrossValidation cross_validate(int d, int jobs = 1) { return cross_validate(d, enumerate(d, jobs)); }

}  // namespace origami
