#pragma once

// SVG figure of a grid surface: one strip per horizontal orbit of cells,
// each cell labelled with its number and the number of the cell glued on top,
// cone points coloured by zero order.

#include <sstream>
#include <string>
#include <vector>

#include "origami/surface.hpp"

namespace origami {

inline std::string render_svg(const GridSurface& s, const std::string& title = "") {
  constexpr int kCell = 48, kGap = 28, kMargin = 24;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  const int n = s.num_cells();
  const auto vs = vertex_structure(s);
  std::vector<int> order(static_cast<std::size_t>(vs.count()), 0);
  for (int v = 0; v < vs.count(); ++v) order[v] = static_cast<int>(vs.cells_at[v].size()) - 1;

  std::vector<std::vector<int>> rows;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    if (seen[c]) continue;
    rows.emplace_back();
    for (int x = c; !seen[x]; x = s.right(x)) {
      seen[x] = 1;
      rows.back().push_back(x);
    }
  }
  std::size_t widest = 0;
  for (const auto& r : rows) widest = std::max(widest, r.size());
  const int width = 2 * kMargin + static_cast<int>(widest) * kCell + 160;
  const int height = 2 * kMargin + 20 + static_cast<int>(rows.size()) * (kCell + kGap);

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) o << "<text x=\"" << kMargin << "\" y=\"" << kMargin << "\" font-size=\"14\">" << title << "</text>\n";
  auto dot = [&](int x, int y, int v) {
    if (order[v] == 0) return;
    o << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << palette[(order[v] - 1) % 8] << "\"/>\n";
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int y0 = kMargin + 20 + static_cast<int>(r) * (kCell + kGap);
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      const int c = rows[r][k];
      const int x0 = kMargin + static_cast<int>(k) * kCell;
      o << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"#f4f4f4\" stroke=\"black\"/>\n";
      o << "<text x=\"" << x0 + kCell / 2 << "\" y=\"" << y0 + kCell / 2 + 5
        << "\" font-size=\"13\" text-anchor=\"middle\">" << c + 1 << "</text>\n";
      o << "<text x=\"" << x0 + kCell / 2 << "\" y=\"" << y0 + 11 << "\" font-size=\"9\" fill=\"#555\" text-anchor=\"middle\">"
        << s.top(c) + 1 << "</text>\n";
      o << "<text x=\"" << x0 + kCell / 2 << "\" y=\"" << y0 + kCell - 3
        << "\" font-size=\"9\" fill=\"#555\" text-anchor=\"middle\">" << s.bottom(c) + 1 << "</text>\n";
      dot(x0, y0 + kCell, vs.bl(c));
      dot(x0, y0, vs.tl(s, c));
    }
    const int last = rows[r].back();
    const int xe = kMargin + static_cast<int>(rows[r].size()) * kCell;
    dot(xe, y0 + kCell, vs.br(s, last));
    dot(xe, y0, vs.tr(s, last));
  }
  int ly = kMargin + 20;
  const int lx = width - 150;
  std::vector<char> used(9, 0);
  for (int v = 0; v < vs.count(); ++v)
    if (order[v] > 0) used[std::min(order[v], 8)] = 1;
  for (int k = 1; k <= 8; ++k) {
    if (!used[k]) continue;
    o << "<circle cx=\"" << lx << "\" cy=\"" << ly << "\" r=\"5\" fill=\"" << palette[(k - 1) % 8] << "\"/>\n";
    o << "<text x=\"" << lx + 12 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">zero of order " << k << (k == 8 ? "+" : "")
      << "</text>\n";
    ly += 18;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace origami
