#pragma once

// Explicit torus covers: minimal-stratum covers H, O, E; the (g-1,g-1) slit
// torus chains; and the two-odd-zero base Z.

#include <stdexcept>
#include <string>
#include <vector>

#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

enum class MinimalKind { Hyp, Odd, Even };
enum class PairKind { Hyp, NonHyp, NonHypEven };

inline std::string to_string(MinimalKind k) {
  switch (k) {
    case MinimalKind::Hyp: return "hyp";
    case MinimalKind::Odd: return "odd";
    case MinimalKind::Even: return "even";
  }
  return "?";
}
inline std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::Hyp: return "hyp";
    case PairKind::NonHyp: return "nonhyp";
    case PairKind::NonHypEven: return "nonhyp_even";
  }
  return "?";
}
inline MinimalKind parse_minimal_kind(const std::string& s) {
  if (s == "hyp") return MinimalKind::Hyp;
  if (s == "odd") return MinimalKind::Odd;
  if (s == "even") return MinimalKind::Even;
  throw std::invalid_argument("unknown minimal kind '" + s + "'");
}
inline PairKind parse_pair_kind(const std::string& s) {
  if (s == "hyp") return PairKind::Hyp;
  if (s == "nonhyp") return PairKind::NonHyp;
  if (s == "nonhyp_even") return PairKind::NonHypEven;
  throw std::invalid_argument("unknown pair kind '" + s + "'");
}

namespace detail {

// 1-indexed cycles -> Perm of degree d.
inline Perm perm_of(int d, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) im[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) im[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  return Perm(std::move(im));
}

inline std::vector<int> range(int lo, int hi) {  // lo..hi inclusive
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// A k x 1 torus on an rx-refined grid: one row of k*rx cells.
inline GridData torus_strip(int k, int rx) {
  GridData g;
  g.rx = rx;
  g.ry = 1;
  const int n = k * rx;
  for (int i = 0; i < n; ++i) g.cells.push_back(Cell{i % rx, 0, (i + 1) % n, i});
  return g;
}

}  // namespace detail

// Single-zero cover in the "odd" shape for any g >= 1 (g = 1 is a k x 1
// torus, g = 2 the L-shaped degree-3 surface).  Extra squares 2g..d are
// inserted into the horizontal cycle after 2g-1, widening the vertical
// cylinder of square 2g-1.
inline GridSurface odd_shape_cover(int g, int d) {
  if (g < 1) throw std::invalid_argument("odd_shape_cover: g >= 1 required");
  if (d < 2 * g - 1) throw std::invalid_argument("odd_shape_cover: need d >= 2g-1");
  std::vector<int> hc;
  for (int i = 1; i <= 2 * g - 1; i += 2) hc.push_back(i);
  for (int i = 2 * g; i <= d; ++i) hc.push_back(i);
  std::vector<std::vector<int>> vc;
  for (int i = 1; i + 1 <= 2 * g - 2; i += 2) vc.push_back({i, i + 1});
  return GridSurface::from_permutations(detail::perm_of(d, {hc}), detail::perm_of(d, vc));
}

inline GridSurface minimal_cover(MinimalKind kind, int g, int d) {
  if (g < 2) throw std::invalid_argument("minimal_cover: g >= 2 required");
  if (d < 2 * g - 1) throw std::invalid_argument("minimal_cover: need d >= 2g-1");
  switch (kind) {
    case MinimalKind::Hyp: {
      std::vector<std::vector<int>> hc, vc;
      for (int i = 1; i + 1 <= 2 * g - 2; i += 2) hc.push_back({i, i + 1});
      for (int i = 2; i + 1 <= 2 * g - 3; i += 2) vc.push_back({i, i + 1});
      vc.push_back(detail::range(2 * g - 2, d));
      return GridSurface::from_permutations(detail::perm_of(d, hc), detail::perm_of(d, vc));
    }
    case MinimalKind::Odd:
      if (g < 3) throw std::invalid_argument("minimal_cover: odd component needs g >= 3");
      return odd_shape_cover(g, d);
    case MinimalKind::Even: {
      if (g < 4) throw std::invalid_argument("minimal_cover: even component needs g >= 4");
      std::vector<int> hc;
      for (int i = 1; i <= 2 * g - 1; i += 2) hc.push_back(i);
      for (int i = 2 * g; i <= d; ++i) hc.push_back(i);
      hc.push_back(4);
      std::vector<std::vector<int>> vc;
      for (int i = 1; i + 1 <= 2 * g - 2; i += 2) vc.push_back({i, i + 1});
      return GridSurface::from_permutations(detail::perm_of(d, {hc}), detail::perm_of(d, vc));
    }
  }
  throw std::invalid_argument("minimal_cover: bad kind");
}

// Stratum (g-1, g-1) from g horizontally slit tori on a 2 x 1 grid.  Slit
// torus j occupies cells of a contiguous block; torus 0 is k x 1 with
// k = d - g + 1, the rest are unit tori.  The slit of a torus is the bottom
// edge of its first cell; the complementary segment is the bottom edge of
// its second cell.
inline GridSurface equal_pair_cover(PairKind kind, int g, int d) {
  switch (kind) {
    case PairKind::Hyp:
      if (g < 2) throw std::invalid_argument("equal_pair_cover: hyp needs g >= 2");
      break;
    case PairKind::NonHyp:
      if (g < 3) throw std::invalid_argument("equal_pair_cover: nonhyp needs g >= 3");
      break;
    case PairKind::NonHypEven:
      if (g < 5 || g % 2 == 0) throw std::invalid_argument("equal_pair_cover: nonhyp_even needs odd g >= 5");
      break;
  }
  if (d < g) throw std::invalid_argument("equal_pair_cover: need d >= g");
  GridData all = detail::torus_strip(d - g + 1, 2);
  std::vector<int> first{0};
  for (int j = 1; j < g; ++j) {
    first.push_back(static_cast<int>(all.cells.size()));
    all = disjoint_union(all, detail::torus_strip(1, 2));
  }
  std::vector<SlitFamily> fams;
  if (kind == PairKind::Hyp) {
    // Consecutive tori swap-glued, alternating between the two half-edges,
    // so interior tori lose their whole horizontal geodesic at height 0.
    for (int j = 0; j + 1 < g; ++j) {
      const int off = j % 2;
      fams.push_back(SlitFamily::cyclic(Direction::Horizontal, {Slit{first[j] + off, 1}, Slit{first[j + 1] + off, 1}}));
    }
  } else if (kind == PairKind::NonHyp) {
    std::vector<Slit> ring;
    for (int j = 0; j < g; ++j) ring.push_back(Slit{first[j], 1});
    fams.push_back(SlitFamily::cyclic(Direction::Horizontal, ring));
  } else {
    // Swapping two complementary segments of the g-ring lowers the genus in
    // this model, so the even surface is built as a ring of tori 1..g-1 with
    // torus 0 attached to torus 1 along their complementary segments.
    std::vector<Slit> ring;
    for (int j = 1; j < g; ++j) ring.push_back(Slit{first[j], 1});
    fams.push_back(SlitFamily::cyclic(Direction::Horizontal, ring));
    fams.push_back(SlitFamily::cyclic(Direction::Horizontal, {Slit{first[0] + 1, 1}, Slit{first[1] + 1, 1}}));
  }
  GridSurface s(cut_and_reglue_data(std::move(all), fams));
  const auto st = stratum(s);
  if (st != StratumSig({g - 1, g - 1}) || s.degree() != d)
    throw std::logic_error("equal_pair_cover: construction produced " + st.to_string());
  return s;
}

// Z^d_{m,n}: the odd-shape cover of genus m and degree d-1 together with a
// unit torus, both on a 2 x 1 grid, slit along half-edges leaving the zero
// (2n-1 of them, in rotation order) and the torus origin, then reglued
// cyclically.  Stratum (2n-1, 2m-1).
inline GridSurface odd_pair_base(int m, int n, int d) {
  if (!(m >= n && n >= 1 && m >= 2)) throw std::invalid_argument("odd_pair_base: need m >= n >= 1 and m >= 2");
  if (d < 2 * m) throw std::invalid_argument("odd_pair_base: need d >= 2m");
  const GridSurface base = refine(odd_shape_cover(m, d - 1), 2, 1);
  const auto vs = vertex_structure(base);
  int zero = -1;
  for (int v = 0; v < vs.count(); ++v)
    if (static_cast<int>(vs.cells_at[v].size()) == 2 * m - 1) zero = v;
  if (zero < 0) throw std::logic_error("odd_pair_base: zero not found");
  // cells_at lists the cells around the vertex in rotation order, starting
  // from the smallest.
  const auto& around = vs.cells_at[zero];
  const int torus_cell = base.num_cells();
  const GridData all = disjoint_union(base.data(), detail::torus_strip(1, 2));
  const StratumSig want({2 * n - 1, 2 * m - 1});
  for (int reverse_order = 0; reverse_order < 2; ++reverse_order) {
    std::vector<Slit> slits;
    for (int i = 0; i < 2 * n - 1; ++i) {
      const int idx = reverse_order ? (static_cast<int>(around.size()) - i) % static_cast<int>(around.size()) : i;
      slits.push_back(Slit{around[idx], 1});
    }
    slits.push_back(Slit{torus_cell, 1});
    for (int flip = 0; flip < 2; ++flip) {
      auto fam = SlitFamily::cyclic(Direction::Horizontal, slits);
      if (flip) {
        const int k = static_cast<int>(slits.size());
        for (int i = 0; i < k; ++i) fam.target[i] = (i + k - 1) % k;
      }
      GridSurface s(cut_and_reglue_data(all, {fam}));
      if (stratum(s) == want) return s;
    }
  }
  throw std::logic_error("odd_pair_base: no slit ordering gives the two-zero stratum");
}

}  // namespace origami
