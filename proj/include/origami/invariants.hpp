#pragma once

// Homology, spin parity, primitivity and hyperellipticity of grid surfaces.
//
// Homology classes are integer 1-chains on the dual graph: one edge from each
// cell to its right neighbour (H) and one to its top neighbour (V).  Such a
// chain is a curve through cell centres and edge midpoints, so it never
// meets a vertex of the cell complex.

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/components.hpp"
#include "origami/intlin.hpp"
#include "origami/surface.hpp"

namespace origami {

struct DualChain {
  std::vector<long long> h;  // coefficient of cell -> right(cell)
  std::vector<long long> v;  // coefficient of cell -> top(cell)

  explicit DualChain(int n = 0) : h(static_cast<std::size_t>(n), 0), v(static_cast<std::size_t>(n), 0) {}

  DualChain& add(const DualChain& o, long long k) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      h[i] += k * o.h[i];
      v[i] += k * o.v[i];
    }
    return *this;
  }
  bool is_zero() const {
    return std::all_of(h.begin(), h.end(), [](long long x) { return x == 0; }) &&
           std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  }
  friend bool operator==(const DualChain&, const DualChain&) = default;
};

// Boundary is zero at every cell.
inline bool is_cycle(const GridSurface& s, const DualChain& x) {
  for (int c = 0; c < s.num_cells(); ++c) {
    const long long in = x.h[s.left(c)] + x.v[s.bottom(c)];
    const long long out = x.h[c] + x.v[c];
    if (in != out) return false;
  }
  return true;
}

// Algebraic intersection x . y, with (horizontal core) . (vertical core) = +1.
// Computed against a copy of y pushed diagonally off the cell centres: inside
// each cell the right leg of x crosses the bottom leg of y, and the top leg
// of x crosses the left leg of y.
inline long long intersection(const GridSurface& s, const DualChain& x, const DualChain& y) {
  long long total = 0;
  for (int c = 0; c < s.num_cells(); ++c) {
    total += x.h[c] * y.v[s.bottom(c)];
    total -= x.v[c] * y.h[s.left(c)];
  }
  return total;
}

// Holonomy in unit-torus coordinates.
inline PlaneVector holonomy(const GridSurface& s, const DualChain& x) {
  long long dx = 0, dy = 0;
  for (int c = 0; c < s.num_cells(); ++c) {
    dx += x.h[c];
    dy += x.v[c];
  }
  return {Rational(dx, s.rx()), Rational(dy, s.ry())};
}

// ---------------------------------------------------------------------------
// Closed paths through cell centres, as a start cell and a word in R/L/U/D.

struct Path {
  int start = 0;
  std::string moves;
  friend bool operator==(const Path&, const Path&) = default;
};

namespace detail {

inline int turn(char from, char to) {
  auto idx = [](char m) {
    switch (m) {
      case 'R': return 0;
      case 'U': return 1;
      case 'L': return 2;
      case 'D': return 3;
    }
    throw std::invalid_argument(std::string("unknown move '") + m + "'");
  };
  const int t = (idx(to) - idx(from) + 4) % 4;
  if (t == 1) return 1;
  if (t == 3) return -1;
  if (t == 0) return 0;
  throw std::invalid_argument("path has a backtrack");
}

inline char opposite(char m) {
  switch (m) {
    case 'R': return 'L';
    case 'L': return 'R';
    case 'U': return 'D';
    case 'D': return 'U';
  }
  throw std::invalid_argument(std::string("unknown move '") + m + "'");
}

}  // namespace detail

inline DualChain chain_of(const GridSurface& s, const Path& p) {
  DualChain x(s.num_cells());
  int c = p.start;
  for (char m : p.moves) {
    switch (m) {
      case 'R': ++x.h[c]; break;
      case 'U': ++x.v[c]; break;
      case 'L': --x.h[s.left(c)]; break;
      case 'D': --x.v[s.bottom(c)]; break;
      default: throw std::invalid_argument(std::string("unknown move '") + m + "'");
    }
    c = s.move(c, m);
  }
  return x;
}

// Rotation number of a closed path: (left turns - right turns) / 4, after
// cancelling backtracks.
inline long long cycle_index(const GridSurface& s, const Path& p) {
  if (p.start < 0 || p.start >= s.num_cells()) throw std::invalid_argument("cycle_index: bad start cell");
  int c = p.start;
  for (char m : p.moves) c = s.move(c, m);
  if (c != p.start) throw std::invalid_argument("cycle_index: path is not closed");
  std::string w;
  for (char m : p.moves) {
    if (!w.empty() && w.back() == detail::opposite(m))
      w.pop_back();
    else
      w.push_back(m);
  }
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[hi - 1] == detail::opposite(w[lo])) {
    ++lo;
    --hi;
  }
  w = w.substr(lo, hi - lo);
  if (w.empty()) throw std::invalid_argument("cycle_index: path is null-homotopic after simplification");
  long long total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += detail::turn(w[i], w[(i + 1) % w.size()]);
  if (total % 4 != 0) throw std::logic_error("cycle_index: total turning not a multiple of 4");
  return total / 4;
}

// Resolves a mod-2 cycle into disjoint simple closed paths.  Cells crossed
// twice are resolved without crossing: (left, top) and (bottom, right).
inline std::vector<Path> resolve_mod2(const GridSurface& s, const DualChain& x) {
  const int n = s.num_cells();
  auto odd = [](long long k) { return (k % 2 + 2) % 2 == 1; };
  // legs: 0=R, 1=U, 2=L, 3=D
  auto has_leg = [&](int c, int leg) {
    switch (leg) {
      case 0: return odd(x.h[c]);
      case 1: return odd(x.v[c]);
      case 2: return odd(x.h[s.left(c)]);
      default: return odd(x.v[s.bottom(c)]);
    }
  };
  auto partner = [&](int c, int in) {
    int deg = 0;
    for (int l = 0; l < 4; ++l) deg += has_leg(c, l);
    if (deg == 2) {
      for (int l = 0; l < 4; ++l)
        if (l != in && has_leg(c, l)) return l;
    }
    if (deg == 4) {
      static constexpr int pair[4] = {3, 2, 1, 0};  // R<->D, U<->L
      return pair[in];
    }
    throw std::logic_error("resolve_mod2: chain is not a mod-2 cycle");
  };
  static constexpr char move_of[4] = {'R', 'U', 'L', 'D'};
  // Edge id: 2*cell for H, 2*cell+1 for V.
  auto edge_of = [&](int c, int leg) {
    switch (leg) {
      case 0: return 2 * c;
      case 1: return 2 * c + 1;
      case 2: return 2 * s.left(c);
      default: return 2 * s.bottom(c) + 1;
    }
  };
  std::vector<char> done(static_cast<std::size_t>(2 * n), 0);
  std::vector<Path> out;
  for (int e = 0; e < 2 * n; ++e) {
    const int c0 = e / 2;
    const int leg0 = e % 2;
    if (done[e] || !(leg0 == 0 ? odd(x.h[c0]) : odd(x.v[c0]))) continue;
    Path p{c0, {}};
    int c = c0, leg = leg0;
    for (;;) {
      done[edge_of(c, leg)] = 1;
      p.moves.push_back(move_of[leg]);
      c = s.move(c, move_of[leg]);
      leg = partner(c, (leg + 2) % 4);
      if (c == c0 && leg == leg0) break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homology basis via tree-cotree decomposition followed by symplectic
// reduction of the intersection form over the integers.

struct HomologyBasis {
  std::vector<DualChain> cycles;              // a_1, b_1, ..., a_g, b_g
  std::vector<std::vector<long long>> pairing;  // cycles[i] . cycles[j]
  int genus() const { return static_cast<int>(cycles.size()) / 2; }
};

namespace detail {

// Generators of H_1: one fundamental cycle of a dual spanning tree per dual
// edge left over after also removing a primal spanning tree.
inline std::vector<DualChain> tree_cotree_generators(const GridSurface& s, int root) {
  const int n = s.num_cells();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);  // dual edge id
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<char> in_tree(static_cast<std::size_t>(2 * n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    // Neighbours through the four dual edges at c.
    const std::pair<int, int> nbrs[4] = {
        {s.right(c), 2 * c}, {s.top(c), 2 * c + 1}, {s.left(c), 2 * s.left(c)}, {s.bottom(c), 2 * s.bottom(c) + 1}};
    for (auto [y, e] : nbrs) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = c;
      parent_edge[y] = e;
      depth[y] = depth[c] + 1;
      in_tree[e] = 1;
      q.push(y);
    }
  }
  const auto vs = vertex_structure(s);
  std::vector<int> uf(static_cast<std::size_t>(vs.count()));
  for (int i = 0; i < vs.count(); ++i) uf[i] = i;
  auto find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  std::vector<int> leftover;
  for (int e = 0; e < 2 * n; ++e) {
    if (in_tree[e]) continue;
    const int c = e / 2;
    // Primal edge crossed by dual edge e: right edge of c (H) or top edge of c (V).
    const int p = e % 2 == 0 ? vs.br(s, c) : vs.tl(s, c);
    const int r = vs.tr(s, c);
    const int fp = find(p), fr = find(r);
    if (fp != fr) {
      uf[fp] = fr;
    } else {
      leftover.push_back(e);
    }
  }
  auto tree_path_to_root = [&](int c, DualChain& x, long long sign) {
    // Adds sign * (path from root to c).
    while (parent[c] != -1) {
      const int e = parent_edge[c];
      const int from = e / 2;
      const long long dir = (from == parent[c] && (e % 2 == 0 ? s.right(from) : s.top(from)) == c) ? 1 : -1;
      if (e % 2 == 0)
        x.h[from] += sign * dir;
      else
        x.v[from] += sign * dir;
      c = parent[c];
    }
  };
  std::vector<DualChain> gens;
  for (int e : leftover) {
    DualChain x(n);
    const int from = e / 2;
    const int to = e % 2 == 0 ? s.right(from) : s.top(from);
    if (e % 2 == 0)
      x.h[from] += 1;
    else
      x.v[from] += 1;
    tree_path_to_root(from, x, 1);   // root -> from
    tree_path_to_root(to, x, -1);    // to -> root
    gens.push_back(std::move(x));
  }
  return gens;
}

inline Int form(const std::vector<std::vector<long long>>& J, const std::vector<Int>& x, const std::vector<Int>& y) {
  Int total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (J[i][j] != 0 && y[j] != 0) row += J[i][j] * y[j];
    total += x[i] * row;
  }
  return total;
}

// Extended gcd over a list: returns (g, z) with sum z_j w_j = g >= 0.
inline std::pair<Int, std::vector<Int>> ext_gcd(const std::vector<Int>& w) {
  Int g = 0;
  std::vector<Int> z(w.size(), 0);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0) continue;
    // Combine (g, z) with w[j]: find s, t with s*g + t*w[j] = gcd.
    Int a = g, b = w[j], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      const Int q = floor_div(a, b);
      Int tmp = a - q * b; a = b; b = tmp;
      tmp = s0 - q * s1; s0 = s1; s1 = tmp;
      tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    for (auto& zi : z) zi *= s0;
    z[j] += t0;
    g = a;
  }
  return {g, z};
}

// Symplectic basis (e_1, f_1, ...) of Z^n for a unimodular alternating form.
inline std::vector<std::vector<Int>> symplectic_reduce(const std::vector<std::vector<long long>>& J) {
  const std::size_t n = J.size();
  std::vector<std::vector<Int>> basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  std::vector<std::vector<Int>> out;
  while (!basis.empty()) {
    std::vector<Int> e, f;
    bool found = false;
    for (std::size_t i = 0; i < basis.size() && !found; ++i)
      for (std::size_t j = i + 1; j < basis.size() && !found; ++j) {
        const Int m = form(J, basis[i], basis[j]);
        if (m == 1 || m == -1) {
          e = basis[i];
          f = basis[j];
          if (m == -1)
            for (auto& x : f) x = -x;
          found = true;
        }
      }
    if (!found) {
      e = basis[0];
      std::vector<Int> w;
      for (const auto& b : basis) w.push_back(form(J, e, b));
      auto [g, z] = ext_gcd(w);
      if (g != 1) throw std::logic_error("symplectic_reduce: intersection form is not unimodular");
      f.assign(n, 0);
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k < n; ++k) f[k] += z[j] * basis[j][k];
    }
    IntMatrix proj(basis.size(), n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Int bf = form(J, basis[j], f);
      const Int be = form(J, basis[j], e);
      for (std::size_t k = 0; k < n; ++k) proj(j, k) = basis[j][k] - bf * e[k] + be * f[k];
    }
    out.push_back(e);
    out.push_back(f);
    const auto hnf = hermite_normal_form(std::move(proj));
    basis.clear();
    for (std::size_t r = 0; r < hnf.rank; ++r) {
      std::vector<Int> row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = hnf.basis(r, k);
      basis.push_back(std::move(row));
    }
    if (out.size() + basis.size() != n)
      throw std::logic_error("symplectic_reduce: complement has the wrong rank");
  }
  return out;
}

}  // namespace detail

inline HomologyBasis homology_basis(const GridSurface& s, int root = 0) {
  const auto gens = detail::tree_cotree_generators(s, root % s.num_cells());
  const int g2 = static_cast<int>(gens.size());
  if (g2 != 2 * genus(s)) throw std::logic_error("homology_basis: generator count differs from 2g");
  std::vector<std::vector<long long>> J(static_cast<std::size_t>(g2), std::vector<long long>(static_cast<std::size_t>(g2)));
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < g2; ++j) J[i][j] = intersection(s, gens[i], gens[j]);
  const auto combos = detail::symplectic_reduce(J);
  HomologyBasis hb;
  for (const auto& coef : combos) {
    DualChain x(s.num_cells());
    for (int i = 0; i < g2; ++i)
      if (coef[i] != 0) x.add(gens[i], static_cast<long long>(coef[i]));
    hb.cycles.push_back(std::move(x));
  }
  hb.pairing.assign(static_cast<std::size_t>(g2), std::vector<long long>(static_cast<std::size_t>(g2)));
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < g2; ++j) hb.pairing[i][j] = intersection(s, hb.cycles[i], hb.cycles[j]);
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < g2; ++j) {
      const long long want = (i / 2 == j / 2) ? (i == j ? 0 : (i % 2 == 0 ? 1 : -1)) : 0;
      if (hb.pairing[i][j] != want) throw std::logic_error("homology_basis: pairing is not standard symplectic");
    }
  return hb;
}

// A class is nonzero in H_1 iff it pairs nontrivially with some basis cycle.
inline bool is_null_homologous(const GridSurface& s, const DualChain& x, const HomologyBasis& hb) {
  for (const auto& y : hb.cycles)
    if (intersection(s, x, y) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

struct SpinEvidence {
  HomologyBasis basis;
  std::vector<std::vector<Path>> curves;  // disjoint simple closed curves per basis element
  std::vector<long long> indices;         // effective index per basis element
  int parity = 0;
};

// Effective index of a multicurve: sum over components of (ind + 1), minus 1.
// For a single simple closed curve this is its index.
inline long long effective_index(const GridSurface& s, const std::vector<Path>& curves) {
  long long total = -1;
  for (const auto& p : curves) total += cycle_index(s, p) + 1;
  return total;
}

inline int parity_from_indices(const std::vector<long long>& idx) {
  long long sum = 0;
  for (std::size_t i = 0; i + 1 < idx.size(); i += 2) sum += ((idx[i] + 1) % 2) * ((idx[i + 1] + 1) % 2);
  return static_cast<int>(((sum % 2) + 2) % 2);
}

inline SpinEvidence spin_parity(const GridSurface& s, int root = 0) {
  const auto st = stratum(s);
  if (!st.all_even()) throw std::invalid_argument("spin_parity: stratum " + st.to_string() + " has an odd-order zero");
  SpinEvidence ev;
  ev.basis = homology_basis(s, root);
  for (const auto& x : ev.basis.cycles) {
    ev.curves.push_back(resolve_mod2(s, x));
    ev.indices.push_back(effective_index(s, ev.curves.back()));
  }
  ev.parity = parity_from_indices(ev.indices);
  return ev;
}

// ---------------------------------------------------------------------------

struct PrimitivityResult {
  bool primitive = false;
  LatticeBasis lattice;
};

inline PrimitivityResult is_primitive(const GridSurface& s) {
  const auto hb = homology_basis(s);
  std::vector<PlaneVector> periods;
  for (const auto& x : hb.cycles) periods.push_back(holonomy(s, x));
  PrimitivityResult r;
  r.lattice = lattice_of(periods);
  r.primitive = r.lattice.is_unit_square();
  return r;
}

// ---------------------------------------------------------------------------

struct InvolutionWitness {
  std::vector<int> rho;
  int fixed_cells = 0;
  int fixed_edge_midpoints = 0;
  int fixed_vertices = 0;
  int fixed_points() const { return fixed_cells + fixed_edge_midpoints + fixed_vertices; }
};

// Checks the defining equations of a rotation by pi and counts fixed points.
inline std::optional<InvolutionWitness> check_involution(const GridSurface& s, const std::vector<int>& rho) {
  const int n = s.num_cells();
  if (static_cast<int>(rho.size()) != n) return std::nullopt;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : rho) {
    if (x < 0 || x >= n || hit[x]) return std::nullopt;
    hit[x] = 1;
  }
  for (int c = 0; c < n; ++c) {
    if (s.right(rho[c]) != rho[s.left(c)] || s.top(rho[c]) != rho[s.bottom(c)]) return std::nullopt;
    if (rho[rho[c]] != c) return std::nullopt;
  }
  InvolutionWitness w;
  w.rho = rho;
  const auto vs = vertex_structure(s);
  for (int c = 0; c < n; ++c) {
    if (rho[c] == c) ++w.fixed_cells;
    if (rho[c] == s.right(c)) ++w.fixed_edge_midpoints;  // right edge of c reversed
    if (rho[c] == s.top(c)) ++w.fixed_edge_midpoints;    // top edge of c reversed
  }
  // The bottom-left corner of c goes to the top-right corner of rho(c).
  for (int v = 0; v < vs.count(); ++v) {
    const int c = vs.cells_at[v].front();
    if (vs.tr(s, rho[c]) == v) ++w.fixed_vertices;
  }
  return w;
}

// Searches rotations by pi of the cell complex; rho is fixed by the image of
// cell 0.  Accepts an involution with 2g+2 fixed points.  Branch points sit on
// grid vertices, so any involution with derivative -1 preserves the grid.
inline std::optional<InvolutionWitness> hyperelliptic_witness(const GridSurface& s) {
  const int n = s.num_cells();
  const int g = genus(s);
  for (int t = 0; t < n; ++t) {
    std::vector<int> rho(static_cast<std::size_t>(n), -1);
    rho[0] = t;
    std::queue<int> q;
    q.push(0);
    bool ok = true;
    while (!q.empty() && ok) {
      const int c = q.front();
      q.pop();
      const std::pair<int, int> next[4] = {{s.right(c), s.left(rho[c])},
                                           {s.left(c), s.right(rho[c])},
                                           {s.top(c), s.bottom(rho[c])},
                                           {s.bottom(c), s.top(rho[c])}};
      for (auto [x, y] : next) {
        if (rho[x] == -1) {
          rho[x] = y;
          q.push(x);
        } else if (rho[x] != y) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    auto w = check_involution(s, rho);
    if (w && w->fixed_points() == 2 * g + 2) return w;
  }
  return std::nullopt;
}

inline ComponentLabel classify_component(const GridSurface& s) {
  const auto st = stratum(s);
  if (st.alpha.empty()) return ComponentLabel::Unique;
  if (has_component(st, ComponentLabel::Hyperelliptic) && hyperelliptic_witness(s))
    return ComponentLabel::Hyperelliptic;
  if (st.all_even()) return spin_parity(s).parity == 0 ? ComponentLabel::EvenSpin : ComponentLabel::OddSpin;
  if (has_component(st, ComponentLabel::NonHyperelliptic)) return ComponentLabel::NonHyperelliptic;
  return ComponentLabel::Unique;
}

}  // namespace origami
