#include "cflow/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cflow {

namespace {

// Fixed two-decimal formatting keeps the output byte-stable across runs.
std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_sequence(const PointSequence& seq, double lambda,
                            const RenderSpec& spec) {
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale))
    throw std::invalid_argument("render_sequence: need finite scale > 0");
  if (!std::isfinite(lambda) || lambda < point_norms(seq).maxCoeff() - 1e-9)
    throw std::invalid_argument("render_sequence: lambda smaller than a point norm");

  const double margin = 40.0;
  const double half = lambda * spec.scale + margin;
  const double size = 2.0 * half;
  const auto sx = [&](Complex p) { return half + p.real() * spec.scale; };
  const auto sy = [&](Complex p) { return half - p.imag() * spec.scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(size) +
         "\" height=\"" + px(size) + "\" viewBox=\"0 0 " + px(size) + " " + px(size) +
         "\">\n";
  svg +=
      "<style>.ring{fill:none;stroke:#999;stroke-dasharray:4 3}"
      ".chord{stroke:#177245;stroke-width:1.5}"
      ".pt{fill:#123a77}"
      ".lbl{font:11px sans-serif;fill:#333;text-anchor:middle}</style>\n";
  if (spec.arrowheads)
    svg +=
        "<defs><marker id=\"arrow\" viewBox=\"0 0 6 6\" refX=\"5\" refY=\"3\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
        "<path d=\"M0 0L6 3L0 6Z\" fill=\"#177245\"/></marker></defs>\n";

  if (spec.show_circles) {
    svg += "<circle class=\"ring\" cx=\"" + px(half) + "\" cy=\"" + px(half) +
           "\" r=\"" + px(spec.scale) + "\"/>\n";
    svg += "<circle class=\"ring\" cx=\"" + px(half) + "\" cy=\"" + px(half) +
           "\" r=\"" + px(lambda * spec.scale) + "\"/>\n";
  }

  const int n = seq.size();
  for (int j = 0; j < n; ++j) {
    const Complex a = seq.point((j + n - 1) % n);
    const Complex b = seq.point(j);
    double x1 = sx(a), y1 = sy(a), x2 = sx(b), y2 = sy(b);
    const double len = std::hypot(x2 - x1, y2 - y1);
    if (spec.arrowheads && len > 1e-6) {
      // pull the line back so the arrowhead tip lands on the point
      x2 -= (x2 - x1) / len * 9.0;
      y2 -= (y2 - y1) / len * 9.0;
    }
    svg += "<line class=\"chord\" x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" +
           px(x2) + "\" y2=\"" + px(y2) + "\"";
    if (spec.arrowheads) svg += " marker-end=\"url(#arrow)\"";
    svg += "/>\n";
  }

  for (int j = 0; j < n; ++j) {
    const Complex p = seq.point(j);
    svg += "<circle class=\"pt\" cx=\"" + px(sx(p)) + "\" cy=\"" + px(sy(p)) +
           "\" r=\"3\"/>\n";
  }

  if (spec.show_labels) {
    for (int j = 0; j < n; ++j) {
      const Complex p = seq.point(j);
      // nudge the label radially outward; points at the origin get a fixed
      // horizontal offset instead
      const double r = std::abs(p);
      const Complex dir = r > 1e-9 ? p / r : Complex(1.0, 0.0);
      const double lx = sx(p) + dir.real() * 14.0;
      const double ly = sy(p) - dir.imag() * 14.0 + 4.0;
      svg += "<text class=\"lbl\" x=\"" + px(lx) + "\" y=\"" + px(ly) + "\">p" +
             std::to_string(j) + "</text>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace cflow
