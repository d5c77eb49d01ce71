#pragma once

// Degree-preserving surgeries that add zeros: one zero of order 2k, or a pair
// of odd zeros of orders 2k-1 and 2kp-1.
//
// The base cylinder C is the thin vertical strip around grid line x = a (in
// cell units).  Lifts of C are the vertical cylinders formed by column-a
// cells, i.e. orbits of `top` on those cells.  The marked point P sits at
// (a, 0); the horizontal segment for odd surgeries runs from (a, 0) to
// (a+1, 0), so both lines must be free of cone points.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/invariants.hpp"
#include "origami/surface.hpp"

namespace origami {

struct LiftComponent {
  std::vector<int> base_cells;  // column-a cells at height 0, ascending
  std::vector<int> cells;       // all column-a cells of the component
  int circumference = 0;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::string reason;
  std::optional<GridSurface> surface;  // refined working surface the report refers to
  int line = -1;                       // grid column a
  std::vector<LiftComponent> components;
  int c0 = -1;           // index into components
  std::vector<int> big;  // indices of circumference >= 2 components, by smallest cell
};

inline constexpr int kMaxSurgeryRefinement = 64;

namespace detail {

// x-coordinates (grid columns) carrying a cone point.
inline std::vector<char> cone_columns(const GridSurface& s) {
  const auto vs = vertex_structure(s);
  std::vector<int> corners(static_cast<std::size_t>(vs.count()), 0);
  for (int c = 0; c < s.num_cells(); ++c) ++corners[vs.bl(c)];
  std::vector<char> busy(static_cast<std::size_t>(s.rx()), 0);
  for (int v = 0; v < vs.count(); ++v)
    if (corners[v] > 1) busy[s.cell(vs.cells_at[v].front()).a] = 1;
  return busy;
}

inline AdmissibilityReport admissibility_at(const GridSurface& s, const HomologyBasis& hb, int line, int k) {
  AdmissibilityReport r;
  r.line = line;
  const int n = s.num_cells();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c0 = 0; c0 < n; ++c0) {
    if (seen[c0] || s.cell(c0).a != line) continue;
    LiftComponent comp;
    for (int c = c0; !seen[c]; c = s.top(c)) {
      seen[c] = 1;
      comp.cells.push_back(c);
      if (s.cell(c).b == 0) comp.base_cells.push_back(c);
    }
    std::sort(comp.base_cells.begin(), comp.base_cells.end());
    comp.circumference = static_cast<int>(comp.cells.size()) / s.ry();
    r.components.push_back(std::move(comp));
  }
  for (int i = 0; i < static_cast<int>(r.components.size()); ++i) {
    const auto& comp = r.components[i];
    if (comp.circumference >= 2) {
      r.big.push_back(i);
    } else if (r.c0 < 0) {
      DualChain core(n);
      for (int c : comp.cells) core.v[c] = 1;
      if (!is_null_homologous(s, core, hb)) r.c0 = i;
    }
  }
  if (r.c0 < 0) {
    r.reason = "no nonseparating circumference-1 lift";
  } else if (static_cast<int>(r.big.size()) < k) {
    r.reason = "only " + std::to_string(r.big.size()) + " lifts of circumference >= 2";
  } else {
    r.admissible = true;
  }
  return r;
}

}  // namespace detail

// Searches grid lines (refining horizontally as needed) for a base cylinder
// admissible for k.  With `needs_segment`, the next line must be free too.
inline AdmissibilityReport admissibility(const GridSurface& s, int k, bool needs_segment = false) {
  AdmissibilityReport fail;
  if (k < 1) {
    fail.reason = "k must be positive";
    return fail;
  }
  if (s.degree() < 2 * k + 1) {
    fail.reason = "degree " + std::to_string(s.degree()) + " < 2k+1";
    return fail;
  }
  fail.reason = "no branch-free vertical line";
  GridSurface w = refine_to_multiple(s, 4, 1);
  while (w.rx() <= kMaxSurgeryRefinement) {
    const auto busy = detail::cone_columns(w);
    const auto hb = homology_basis(w);
    for (int a = 0; a < w.rx(); ++a) {
      if (busy[a] || (needs_segment && busy[(a + 1) % w.rx()])) continue;
      auto r = detail::admissibility_at(w, hb, a, k);
      if (r.admissible) {
        r.surface = w;
        return r;
      }
      fail = std::move(r);
    }
    w = refine(w, 2, 1);
  }
  fail.admissible = false;
  return fail;
}

inline int predicted_parity_change(int k) {
  if (k < 1) throw std::invalid_argument("predicted_parity_change: k >= 1 required");
  return k % 2;
}

namespace detail {

inline void check_surgery(const GridSurface& before, const GridSurface& after, std::vector<int> added) {
  auto want = stratum(before).alpha;
  want.insert(want.end(), added.begin(), added.end());
  const StratumSig expect(want);
  const auto got = stratum(after);
  if (got != expect || after.degree() != before.degree() || genus(after) != expect.genus())
    throw std::logic_error("surgery post-check failed: expected " + expect.to_string() + ", got " + got.to_string());
}

}  // namespace detail

// Cuts one vertical segment (a full lift of sigma minus P) in each of
// C_0, C_1..C_k and reglues left of sigma_i to right of sigma_{i+1}.
inline GridSurface add_even_zero(const GridSurface& s, int k) {
  const auto r = admissibility(s, k);
  if (!r.admissible) throw std::invalid_argument("add_even_zero: not admissible for k=" + std::to_string(k) + ": " + r.reason);
  const GridSurface& w = *r.surface;
  std::vector<Slit> sigma{Slit{r.components[r.c0].base_cells.front(), w.ry()}};
  for (int i = 0; i < k; ++i) sigma.push_back(Slit{r.components[r.big[i]].base_cells.front(), w.ry()});
  GridSurface out = cut_and_reglue(w, {SlitFamily::cyclic(Direction::Vertical, sigma)});
  detail::check_surgery(w, out, {2 * k});
  return out;
}

// Equal case (kp == k): 2k horizontal segments, one in C_0, two in each of
// C_1..C_{k-1}, one in C_k, reglued top of tau_i to bottom of tau_{i+1}.
// Unequal case: 2kp segments over C_0..C_kp plus vertical segments in C_0
// and C_{kp+1}..C_k, each family cyclic.  P gets order 2k-1, Q order 2kp-1.
inline GridSurface add_odd_pair(const GridSurface& s, int k, int kp) {
  if (kp < 1 || kp > k) throw std::invalid_argument("add_odd_pair: need 1 <= kp <= k");
  const auto r = admissibility(s, k, true);
  if (!r.admissible) throw std::invalid_argument("add_odd_pair: not admissible for k=" + std::to_string(k) + ": " + r.reason);
  const GridSurface& w = *r.surface;
  auto comp = [&](int i) -> const LiftComponent& { return i == 0 ? r.components[r.c0] : r.components[r.big[i - 1]]; };
  std::vector<Slit> tau{Slit{comp(0).base_cells.front(), 1}};
  for (int i = 1; i < kp; ++i) {
    tau.push_back(Slit{comp(i).base_cells[0], 1});
    tau.push_back(Slit{comp(i).base_cells[1], 1});
  }
  tau.push_back(Slit{comp(kp).base_cells.front(), 1});
  std::vector<SlitFamily> fams{SlitFamily::cyclic(Direction::Horizontal, tau)};
  if (kp < k) {
    std::vector<Slit> sigma{Slit{comp(0).base_cells.front(), w.ry()}};
    for (int i = kp + 1; i <= k; ++i) sigma.push_back(Slit{comp(i).base_cells.front(), w.ry()});
    fams.push_back(SlitFamily::cyclic(Direction::Vertical, sigma));
  }
  GridSurface out = cut_and_reglue(w, fams);
  detail::check_surgery(w, out, {2 * k - 1, 2 * kp - 1});
  return out;
}

}  // namespace origami
