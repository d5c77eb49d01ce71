#pragma once

// Grid-tiled translation surfaces: a finite set of axis-aligned cells covering
// the unit torus refined into an rx x ry grid.  Each cell knows its grid
// position and its right and top neighbours; this is an origami on the
// refined grid together with the covering map to the torus.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/perm.hpp"

namespace origami {

enum class Direction { Horizontal, Vertical };

struct Cell {
  int a = 0, b = 0;  // torus position in Z_rx x Z_ry
  int right = 0;
  int top = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Unvalidated cell data; may be disconnected.  Used while assembling
// constructions before they are frozen into a GridSurface.
struct GridData {
  int rx = 1, ry = 1;
  std::vector<Cell> cells;
  friend bool operator==(const GridData&, const GridData&) = default;
};

class GridSurface {
public:
  explicit GridSurface(GridData data) : d_(std::move(data)) { validate(); }

  static GridSurface from_permutations(const Perm& h, const Perm& v) {
    if (h.degree() != v.degree()) throw std::invalid_argument("from_permutations: degree mismatch");
    if (!is_transitive(h, v))
      throw std::invalid_argument("from_permutations: <h,v> is not transitive (disconnected surface)");
    GridData g;
    g.cells.resize(static_cast<std::size_t>(h.degree()));
    for (int i = 0; i < h.degree(); ++i) g.cells[i] = Cell{0, 0, h(i), v(i)};
    return GridSurface(std::move(g));
  }

  int rx() const { return d_.rx; }
  int ry() const { return d_.ry; }
  int num_cells() const { return static_cast<int>(d_.cells.size()); }
  int degree() const { return num_cells() / (d_.rx * d_.ry); }
  const GridData& data() const { return d_; }
  const Cell& cell(int c) const { return d_.cells[static_cast<std::size_t>(c)]; }

  int right(int c) const { return cell(c).right; }
  int top(int c) const { return cell(c).top; }
  int left(int c) const { return left_[static_cast<std::size_t>(c)]; }
  int bottom(int c) const { return bottom_[static_cast<std::size_t>(c)]; }
  int move(int c, char dir) const {
    switch (dir) {
      case 'R': return right(c);
      case 'L': return left(c);
      case 'U': return top(c);
      case 'D': return bottom(c);
    }
    throw std::invalid_argument(std::string("unknown move '") + dir + "'");
  }

  Perm right_perm() const {
    std::vector<int> im;
    for (const auto& c : d_.cells) im.push_back(c.right);
    return Perm(std::move(im));
  }
  Perm top_perm() const {
    std::vector<int> im;
    for (const auto& c : d_.cells) im.push_back(c.top);
    return Perm(std::move(im));
  }

  friend bool operator==(const GridSurface& x, const GridSurface& y) { return x.d_ == y.d_; }

private:
  void validate() {
    if (d_.rx < 1 || d_.ry < 1) throw std::invalid_argument("GridSurface: rx, ry must be positive");
    const int n = num_cells();
    if (n == 0) throw std::invalid_argument("GridSurface: no cells");
    if (n % (d_.rx * d_.ry) != 0)
      throw std::invalid_argument("GridSurface: cell count not divisible by rx*ry");
    left_.assign(static_cast<std::size_t>(n), -1);
    bottom_.assign(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
      const Cell& x = cell(c);
      if (x.right < 0 || x.right >= n || x.top < 0 || x.top >= n)
        throw std::invalid_argument("GridSurface: neighbour index out of range");
      if (x.a < 0 || x.a >= d_.rx || x.b < 0 || x.b >= d_.ry)
        throw std::invalid_argument("GridSurface: position out of range");
      if (left_[x.right] != -1 || bottom_[x.top] != -1)
        throw std::invalid_argument("GridSurface: right/top are not bijections");
      left_[x.right] = c;
      bottom_[x.top] = c;
      const Cell& r = cell(x.right);
      const Cell& t = cell(x.top);
      if (r.a != (x.a + 1) % d_.rx || r.b != x.b)
        throw std::invalid_argument("GridSurface: right neighbour not at position + (1,0)");
      if (t.a != x.a || t.b != (x.b + 1) % d_.ry)
        throw std::invalid_argument("GridSurface: top neighbour not at position + (0,1)");
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      const int c = q.front();
      q.pop();
      for (int y : {right(c), top(c)})
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          q.push(y);
        }
    }
    if (count != n) throw std::invalid_argument("GridSurface: surface is disconnected");
  }

  GridData d_;
  std::vector<int> left_, bottom_;
};

// ---------------------------------------------------------------------------
// Vertices of the cell complex.
//
// The bottom-left corners of cells around a vertex are visited, going
// counterclockwise, by c -> top(right(bottom(left(c)))).  A vertex whose
// orbit has length m has cone angle 2*pi*m.

struct VertexStructure {
  std::vector<int> of_bottom_left;  // vertex id of each cell's bottom-left corner
  std::vector<std::vector<int>> cells_at;  // bottom-left cells of each vertex, in rotation order
  int count() const { return static_cast<int>(cells_at.size()); }

  int bl(int c) const { return of_bottom_left[static_cast<std::size_t>(c)]; }
  int br(const GridSurface& s, int c) const { return bl(s.right(c)); }
  int tl(const GridSurface& s, int c) const { return bl(s.top(c)); }
  int tr(const GridSurface& s, int c) const { return bl(s.top(s.right(c))); }
};

inline VertexStructure vertex_structure(const GridSurface& s) {
  VertexStructure vs;
  const int n = s.num_cells();
  vs.of_bottom_left.assign(static_cast<std::size_t>(n), -1);
  for (int c0 = 0; c0 < n; ++c0) {
    if (vs.of_bottom_left[c0] != -1) continue;
    const int id = vs.count();
    std::vector<int> orbit;
    for (int c = c0; vs.of_bottom_left[c] == -1; c = s.top(s.right(s.bottom(s.left(c))))) {
      vs.of_bottom_left[c] = id;
      orbit.push_back(c);
    }
    vs.cells_at.push_back(std::move(orbit));
  }
  return vs;
}

// ---------------------------------------------------------------------------

struct StratumSig {
  std::vector<int> alpha;  // ascending

  StratumSig() = default;
  explicit StratumSig(std::vector<int> parts) : alpha(std::move(parts)) {
    for (int x : alpha)
      if (x < 1) throw std::invalid_argument("stratum: zero orders must be positive");
    std::sort(alpha.begin(), alpha.end());
    if (sum() % 2 != 0) throw std::invalid_argument("stratum: sum of zero orders must be even");
  }
  int sum() const { return std::accumulate(alpha.begin(), alpha.end(), 0); }
  int genus() const { return sum() / 2 + 1; }
  int max_order() const { return alpha.empty() ? 0 : alpha.back(); }
  bool all_even() const {
    return std::all_of(alpha.begin(), alpha.end(), [](int x) { return x % 2 == 0; });
  }
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
    return out + ")";
  }
  friend bool operator==(const StratumSig&, const StratumSig&) = default;
  friend auto operator<=>(const StratumSig&, const StratumSig&) = default;
};

inline int euler_genus(const GridSurface& s, const VertexStructure& vs) {
  // V - E + F = 2 - 2g with F = N cells and E = 2N edges.
  const int chi = vs.count() - s.num_cells();
  return (2 - chi) / 2;
}

inline StratumSig stratum(const GridSurface& s) {
  const auto vs = vertex_structure(s);
  // Count incident corners per vertex; four corners make an angle of 2*pi.
  std::vector<int> corners(static_cast<std::size_t>(vs.count()), 0);
  for (int c = 0; c < s.num_cells(); ++c) {
    ++corners[vs.bl(c)];
    ++corners[vs.br(s, c)];
    ++corners[vs.tl(s, c)];
    ++corners[vs.tr(s, c)];
  }
  std::vector<int> parts;
  int excess = 0;
  for (int k : corners) {
    if (k % 4 != 0) throw std::logic_error("stratum: corner count not a multiple of 4");
    const int m = k / 4 - 1;
    if (m > 0) parts.push_back(m);
    excess += m;
  }
  const int g_angle = excess / 2 + 1;
  if (excess % 2 != 0 || g_angle != euler_genus(s, vs))
    throw std::logic_error("stratum: angle-sum genus disagrees with Euler characteristic");
  return StratumSig(std::move(parts));
}

inline int genus(const GridSurface& s) { return euler_genus(s, vertex_structure(s)); }

// ---------------------------------------------------------------------------

struct Cylinder {
  Direction direction = Direction::Horizontal;
  std::vector<int> cells;  // strip by strip, each strip in core order
  int circumference = 0;   // cells along the core
  int width = 0;           // strips across
};

inline std::vector<Cylinder> cylinders(const GridSurface& s, Direction dir) {
  const bool horiz = dir == Direction::Horizontal;
  auto along = [&](int c) { return horiz ? s.right(c) : s.top(c); };
  auto across = [&](int c) { return horiz ? s.top(c) : s.right(c); };
  auto back = [&](int c) { return horiz ? s.bottom(c) : s.left(c); };
  const int n = s.num_cells();

  // Strips: orbits of the `along` move.
  std::vector<int> strip_of(static_cast<std::size_t>(n), -1);
  std::vector<int> strip_min;
  for (int c0 = 0; c0 < n; ++c0) {
    if (strip_of[c0] != -1) continue;
    const int id = static_cast<int>(strip_min.size());
    for (int c = c0; strip_of[c] == -1; c = along(c)) strip_of[c] = id;
    strip_min.push_back(c0);
  }
  // A strip glues flat to the one across from it iff no singular vertex lies
  // on the common boundary.
  auto merges_up = [&](int strip) {
    const int c0 = strip_min[strip];
    int c = c0;
    do {
      if (across(along(c)) != along(across(c))) return false;
      c = along(c);
    } while (c != c0);
    return true;
  };
  const int ns = static_cast<int>(strip_min.size());
  std::vector<char> up(static_cast<std::size_t>(ns));
  for (int k = 0; k < ns; ++k) up[k] = merges_up(k);

  std::vector<char> used(static_cast<std::size_t>(ns), 0);
  std::vector<Cylinder> out;
  auto emit = [&](int start_strip) {
    Cylinder cyl;
    cyl.direction = dir;
    int c = strip_min[start_strip];
    int strip = start_strip;
    for (;;) {
      used[strip] = 1;
      int x = c;
      int len = 0;
      do {
        cyl.cells.push_back(x);
        x = along(x);
        ++len;
      } while (x != c);
      cyl.circumference = len;
      ++cyl.width;
      if (!up[strip]) break;
      c = across(c);
      strip = strip_of[c];
      if (strip == start_strip) break;
    }
    out.push_back(std::move(cyl));
  };
  // Start strips: those whose lower neighbour does not merge into them.
  for (int k = 0; k < ns; ++k) {
    const int below = strip_of[back(strip_min[k])];
    if (!up[below] && !used[k]) emit(k);
  }
  for (int k = 0; k < ns; ++k)
    if (!used[k]) emit(k);  // closed cylinders covering a whole torus
  std::sort(out.begin(), out.end(), [](const Cylinder& x, const Cylinder& y) {
    return *std::min_element(x.cells.begin(), x.cells.end()) <
           *std::min_element(y.cells.begin(), y.cells.end());
  });
  return out;
}

// ---------------------------------------------------------------------------

inline GridSurface refine(const GridSurface& s, int kx, int ky) {
  if (kx < 1 || ky < 1) throw std::invalid_argument("refine: factors must be positive");
  if (kx == 1 && ky == 1) return s;
  GridData g;
  g.rx = s.rx() * kx;
  g.ry = s.ry() * ky;
  const int per = kx * ky;
  auto id = [&](int c, int i, int j) { return c * per + j * kx + i; };
  g.cells.resize(static_cast<std::size_t>(s.num_cells() * per));
  for (int c = 0; c < s.num_cells(); ++c)
    for (int j = 0; j < ky; ++j)
      for (int i = 0; i < kx; ++i) {
        Cell& x = g.cells[id(c, i, j)];
        x.a = s.cell(c).a * kx + i;
        x.b = s.cell(c).b * ky + j;
        x.right = i + 1 < kx ? id(c, i + 1, j) : id(s.right(c), 0, j);
        x.top = j + 1 < ky ? id(c, i, j + 1) : id(s.top(c), i, 0);
      }
  return GridSurface(std::move(g));
}

// Refine so that rx and ry become multiples of the given values.
inline GridSurface refine_to_multiple(const GridSurface& s, int mx, int my) {
  const int kx = mx / std::gcd(s.rx(), mx);
  const int ky = my / std::gcd(s.ry(), my);
  return refine(s, kx, ky);
}

// Disjoint union at a common refinement; the result is unvalidated.
inline GridData disjoint_union(const GridData& x, const GridData& y) {
  if (x.rx != y.rx || x.ry != y.ry) throw std::invalid_argument("disjoint_union: grids differ");
  GridData g = x;
  const int off = static_cast<int>(x.cells.size());
  for (Cell c : y.cells) {
    c.right += off;
    c.top += off;
    g.cells.push_back(c);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Slits.
//
// A horizontal slit of length L starting at cell c runs along the bottom
// edges of c, right(c), ..., right^{L-1}(c).  A vertical slit runs along the
// left edges of c, top(c), ..., top^{L-1}(c).  Within a family, slits lie
// over the same torus segment; `target[i]` names the slit whose opposite
// side receives slit i:
//   horizontal: the top side of slit i is glued to the bottom side of slit target[i];
//   vertical:   the left side of slit i is glued to the right side of slit target[i].

struct Slit {
  int cell = 0;
  int length = 1;
};

struct SlitFamily {
  Direction direction = Direction::Horizontal;
  std::vector<Slit> slits;
  std::vector<int> target;

  static SlitFamily cyclic(Direction dir, std::vector<Slit> slits) {
    SlitFamily f;
    f.direction = dir;
    const int n = static_cast<int>(slits.size());
    for (int i = 0; i < n; ++i) f.target.push_back((i + 1) % n);
    f.slits = std::move(slits);
    return f;
  }
};

// Works on raw data so constructions can slit disconnected pieces.
inline GridData cut_and_reglue_data(GridData g, const std::vector<SlitFamily>& families) {
  const int n = static_cast<int>(g.cells.size());
  std::vector<int> left(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    left[g.cells[c].right] = c;
    bottom[g.cells[c].top] = c;
  }
  // Each edge is named by the cell above it (horizontal) or right of it (vertical).
  std::vector<char> used_h(static_cast<std::size_t>(n), 0), used_v(static_cast<std::size_t>(n), 0);
  std::vector<Cell> out = g.cells;
  for (const auto& fam : families) {
    const int k = static_cast<int>(fam.slits.size());
    if (static_cast<int>(fam.target.size()) != k)
      throw std::invalid_argument("cut_and_reglue: gluing size differs from slit count");
    std::vector<char> hit(static_cast<std::size_t>(k), 0);
    for (int t : fam.target) {
      if (t < 0 || t >= k || hit[t]) throw std::invalid_argument("cut_and_reglue: gluing is not a permutation");
      hit[t] = 1;
    }
    if (k == 0) continue;
    const bool horiz = fam.direction == Direction::Horizontal;
    const int len = fam.slits[0].length;
    std::vector<std::vector<int>> side(static_cast<std::size_t>(k));  // cells above / right of slit
    for (int i = 0; i < k; ++i) {
      if (fam.slits[i].length != len || len < 1)
        throw std::invalid_argument("cut_and_reglue: side-length mismatch within family");
      int c = fam.slits[i].cell;
      for (int j = 0; j < len; ++j) {
        auto& used = horiz ? used_h : used_v;
        if (used[c]) throw std::invalid_argument("cut_and_reglue: overlapping slits");
        used[c] = 1;
        side[i].push_back(c);
        c = horiz ? g.cells[c].right : g.cells[c].top;
      }
    }
    for (int i = 1; i < k; ++i)
      for (int j = 0; j < len; ++j) {
        const Cell& p = g.cells[side[i][j]];
        const Cell& q = g.cells[side[0][j]];
        if (p.a != q.a || p.b != q.b)
          throw std::invalid_argument("cut_and_reglue: slits do not lie over the same torus segment");
      }
    for (int i = 0; i < k; ++i) {
      const int t = fam.target[i];
      for (int j = 0; j < len; ++j) {
        if (horiz)
          out[bottom[side[t][j]]].top = side[i][j];
        else
          out[left[side[i][j]]].right = side[t][j];
      }
    }
  }
  g.cells = std::move(out);
  return g;
}

inline GridSurface cut_and_reglue(const GridSurface& s, const std::vector<SlitFamily>& families) {
  const int before = s.degree();
  GridSurface out(cut_and_reglue_data(s.data(), families));
  if (out.degree() != before) throw std::logic_error("cut_and_reglue: covering degree changed");
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: minimal breadth-first relabelling over all start cells,
// with positions translated so that the start cell sits at (0,0).

namespace detail {

inline std::vector<int> bfs_labelling(const GridSurface& s, int start) {
  const int n = s.num_cells();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  label[start] = 0;
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int c = order[head];
    for (int y : {s.right(c), s.top(c)})
      if (label[y] == -1) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
  }
  return order;  // order[k] = original cell with new label k
}

inline std::vector<int> encode(const GridSurface& s, const std::vector<int>& order) {
  const int n = s.num_cells();
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) label[order[k]] = k;
  const Cell& o = s.cell(order[0]);
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(4 * n));
  for (int k = 0; k < n; ++k) {
    const Cell& c = s.cell(order[k]);
    key.push_back(label[c.right]);
    key.push_back(label[c.top]);
    key.push_back((c.a - o.a + s.rx()) % s.rx());
    key.push_back((c.b - o.b + s.ry()) % s.ry());
  }
  return key;
}

}  // namespace detail

struct CanonicalResult {
  GridSurface surface;
  int automorphisms;  // start cells producing the minimal encoding
};

inline CanonicalResult canonicalize(const GridSurface& s) {
  std::vector<int> best;
  std::vector<int> best_order;
  int ties = 0;
  for (int start = 0; start < s.num_cells(); ++start) {
    auto order = detail::bfs_labelling(s, start);
    auto key = detail::encode(s, order);
    if (best.empty() || key < best) {
      best = std::move(key);
      best_order = std::move(order);
      ties = 1;
    } else if (key == best) {
      ++ties;
    }
  }
  GridData g;
  g.rx = s.rx();
  g.ry = s.ry();
  g.cells.resize(static_cast<std::size_t>(s.num_cells()));
  for (int k = 0; k < s.num_cells(); ++k)
    g.cells[k] = Cell{best[4 * k + 2], best[4 * k + 3], best[4 * k], best[4 * k + 1]};
  return {GridSurface(std::move(g)), ties};
}

inline GridSurface canonical_form(const GridSurface& s) { return canonicalize(s).surface; }

}  // namespace origami
