#include "ordmatch/render.hpp"

#include <algorithm>
#include <sstream>

namespace ordmatch {

std::string to_dot(const OrderedGraph& g) {
  std::ostringstream out;
  out << "graph ordered {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int v = 1; v <= g.n(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_arc_svg(const OrderedGraph& g) {
  const int spacing = 40;
  const int margin = 30;
  const int baseline_pad = 20;
  const int width = 2 * margin + spacing * (g.n() > 1 ? g.n() - 1 : 0);
  int max_span = 0;
  for (const Edge& e : g.edges()) max_span = std::max(max_span, e.v - e.u);
  const int height = baseline_pad + (max_span * spacing) / 2 + margin;
  const int baseline = height - baseline_pad;
  auto x_of = [&](int v) { return margin + (v - 1) * spacing; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  if (g.n() > 1)
    out << "<line x1=\"" << x_of(1) << "\" y1=\"" << baseline << "\" x2=\"" << x_of(g.n())
        << "\" y2=\"" << baseline << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (const Edge& e : g.edges()) {
    int x1 = x_of(e.u), x2 = x_of(e.v);
    int r = (x2 - x1) / 2;
    out << "<path d=\"M " << x1 << " " << baseline << " A " << r << " " << r << " 0 0 1 " << x2
        << " " << baseline << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
  }
  for (int v = 1; v <= g.n(); ++v) {
    out << "<circle cx=\"" << x_of(v) << "\" cy=\"" << baseline
        << "\" r=\"4\" fill=\"#000000\"/>\n";
    out << "<text x=\"" << x_of(v) << "\" y=\"" << baseline + 16
        << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ordmatch
