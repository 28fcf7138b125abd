#pragma once

// Static SVG pictures of the generator staircase of a Sigma-set: stars for
// distinguished objects, dots for objects, hooked horizontal arrows for
// monos, double-headed vertical arrows for epis, a 2-arrow in each square.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "twoseg/error.hpp"
#include "twoseg/sigma.hpp"

namespace twoseg {

inline constexpr int kMaxRenderDegree = 5;

/// The (0,0) element reached by a vertical d_0 faces and b last horizontal faces.
inline int central_edge(const PreaugBisimplicialSet& d, int a, int b, int x) {
  for (; a > 0; --a) x = d.dv(a, b, 0, x);
  for (; b > 0; --b) x = d.dh(0, b, b, x);
  return x;
}

/// Largest a+1+b holding an element that is not a vertical or horizontal
/// degeneracy and whose central edge is not in the image of eps; 0 if none.
inline int generator_degree(const PreaugBisimplicialSet& d) {
  const int T = d.total_truncation;
  std::vector<bool> unit(d.size(0, 0), false);
  for (int y : d.eps) unit[y] = true;
  int best = 0;
  for (int a = 0; a < T; ++a)
    for (int b = 0; a + 1 + b <= T; ++b) {
      std::vector<bool> hit(d.size(a, b), false);
      if (a >= 1)
        for (const auto& tab : d.vdegen[a - 1][b])
          for (int y : tab) hit[y] = true;
      if (b >= 1)
        for (const auto& tab : d.hdegen[a][b - 1])
          for (int y : tab) hit[y] = true;
      for (int x = 0; x < d.size(a, b); ++x)
        if (!hit[x] && !unit[central_edge(d, a, b, x)]) {
          best = std::max(best, a + 1 + b);
          break;
        }
    }
  return best;
}

inline std::string render_svg(const PreaugBisimplicialSet& d) {
  if (d.total_truncation > kMaxRenderDegree)
    throw PreconditionError("render: total degree " + std::to_string(d.total_truncation) +
                            " exceeds " + std::to_string(kMaxRenderDegree) +
                            "; restrict the truncation to at most " +
                            std::to_string(kMaxRenderDegree) + " first");
  const int n = generator_degree(d);
  const int step = 60, margin = 40;
  const int cols = n + 1, rows = n + 1;
  const int width = 2 * margin + cols * step, height = 2 * margin + (rows - 1) * step;
  // Node (i, j), 0 <= i < j <= n+1, sits at column j-1, row i.
  auto px = [&](int j) { return margin + (j - 1) * step + step / 2; };
  auto py = [&](int i) { return margin + i * step; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<defs>\n"
     << "<marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L7,4 L0,8\" fill=\"none\" stroke=\"black\"/></marker>\n"
     << "<marker id=\"twohead\" markerWidth=\"12\" markerHeight=\"8\" refX=\"11\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L7,4 L0,8 M4,0 L11,4 L4,8\" fill=\"none\" stroke=\"black\"/></marker>\n"
     << "<marker id=\"hook\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M4,0 A4,4 0 0,0 4,8\" fill=\"none\" stroke=\"black\"/></marker>\n"
     << "</defs>\n";
  os << "<rect x=\"1\" y=\"1\" width=\"" << width - 2 << "\" height=\"" << height - 2
     << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  const int gap = 12;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      if (j + 1 <= n + 1)
        os << "<line x1=\"" << px(j) + gap << "\" y1=\"" << py(i) << "\" x2=\"" << px(j + 1) - gap
           << "\" y2=\"" << py(i) << "\" stroke=\"black\" marker-start=\"url(#hook)\" marker-end=\"url(#head)\"/>\n";
      if (i + 1 < j)
        os << "<line x1=\"" << px(j) << "\" y1=\"" << py(i) + gap << "\" x2=\"" << px(j) << "\" y2=\""
           << py(i + 1) - gap << "\" stroke=\"black\" marker-end=\"url(#twohead)\"/>\n";
      if (i + 1 < j && j + 1 <= n + 1) {
        int x1 = px(j) + step / 3, y1 = py(i) + step / 3, x2 = px(j + 1) - step / 3, y2 = py(i + 1) - step / 3;
        os << "<line x1=\"" << x1 - 2 << "\" y1=\"" << y1 + 2 << "\" x2=\"" << x2 - 2 << "\" y2=\"" << y2 + 2
           << "\" stroke=\"black\"/>\n";
        os << "<line x1=\"" << x1 + 2 << "\" y1=\"" << y1 - 2 << "\" x2=\"" << x2 + 2 << "\" y2=\"" << y2 - 2
           << "\" stroke=\"black\"/>\n";
        os << "<path d=\"M" << x2 - 6 << "," << y2 + 1 << " L" << x2 + 2 << "," << y2 + 2 << " L" << x2 + 1
           << "," << y2 - 6 << "\" fill=\"none\" stroke=\"black\"/>\n";
      }
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      if (j == i + 1)
        os << "<text x=\"" << px(j) << "\" y=\"" << py(i) + 6 << "\" text-anchor=\"middle\" "
           << "font-family=\"serif\" font-size=\"18\" class=\"star\">*</text>\n";
      else
        os << "<circle cx=\"" << px(j) << "\" cy=\"" << py(i) << "\" r=\"3\" fill=\"black\" class=\"dot\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

inline void render_grid(const PreaugBisimplicialSet& d, const std::string& path) {
  std::string svg = render_svg(d);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << svg;
}

} // namespace twoseg
