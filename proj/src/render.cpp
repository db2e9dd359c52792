#include "numsg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace numsg {

GridModel grid_model(const NumericalSemigroup& s, const GridOptions& opts) {
  GridModel grid;
  const Value m = s.multiplicity();
  const Value q = s.depth();
  grid.rows = q + 1;
  grid.cols = m;
  grid.rho = s.rho();
  grid.depth = q;
  grid.shape_only = opts.shape_only;

  const auto& prims = s.primitives();
  const auto& pf = s.pseudo_frobenius_numbers();
  const auto n = static_cast<std::size_t>(grid.rows * grid.cols);
  grid.values.resize(n);
  grid.layers.resize(n);
  for (Value r = 0; r < grid.rows; ++r) {
    for (Value j = 0; j < grid.cols; ++j) {
      const Value v = -grid.rho + (q - r) * m + j;
      std::uint8_t bits = 0;
      if (v >= 0 && s.contains(v)) bits |= kLayerElement;
      if (v == s.conductor()) bits |= kLayerConductor;
      if (std::binary_search(prims.begin(), prims.end(), v)) {
        bits |= kLayerPrimitive;
      }
      if (opts.highlight_pf && std::binary_search(pf.begin(), pf.end(), v)) {
        bits |= kLayerPseudoFrobenius;
      }
      const auto idx = static_cast<std::size_t>(r * grid.cols + j);
      grid.values[idx] = v;
      grid.layers[idx] = bits;
    }
  }
  return grid;
}

namespace {

// Highest ranked first.
constexpr Layer kPrecedence[] = {kLayerPseudoFrobenius, kLayerPrimitive,
                                 kLayerConductor, kLayerElement};

const std::string& layer_colour(Layer l, const Palette& p) {
  switch (l) {
    case kLayerPseudoFrobenius: return p.pseudo_frobenius;
    case kLayerPrimitive: return p.primitive;
    case kLayerConductor: return p.conductor;
    case kLayerElement: return p.element;
  }
  return p.background;
}

std::string layer_classes(std::uint8_t bits) {
  if (bits == 0) return "background";
  std::string out;
  auto add = [&](const char* name) {
    if (!out.empty()) out += ' ';
    out += name;
  };
  if (bits & kLayerElement) add("element");
  if (bits & kLayerConductor) add("conductor");
  if (bits & kLayerPrimitive) add("primitive");
  if (bits & kLayerPseudoFrobenius) add("pseudo-frobenius");
  return out;
}

// "#RRGGBB" -> "RRGGBB"
std::string hex_digits(const std::string& colour) {
  return colour.size() == 7 && colour[0] == '#' ? colour.substr(1) : colour;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

CellPaint cell_paint(std::uint8_t layers, const Palette& palette) {
  CellPaint paint;
  for (Layer l : kPrecedence) {
    if (!(layers & l)) continue;
    if (paint.primary.empty()) {
      paint.primary = layer_colour(l, palette);
    } else {
      paint.secondary = layer_colour(l, palette);
      break;
    }
  }
  if (paint.primary.empty()) paint.primary = palette.background;
  return paint;
}

std::string emit_svg(const GridModel& grid, const Palette& palette) {
  constexpr int kCell = 28;
  const Value width = grid.cols * kCell;
  const Value height = grid.rows * kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  for (Value r = 0; r < grid.rows; ++r) {
    for (Value j = 0; j < grid.cols; ++j) {
      const Value v = grid.value(r, j);
      const std::uint8_t bits = grid.layer(r, j);
      const CellPaint paint = cell_paint(bits, palette);
      const Value x = j * kCell;
      const Value y = r * kCell;
      const std::string opacity =
          v < 0 ? " opacity=\"" + fixed(palette.negative_opacity) + "\"" : "";
      out << "<g" << opacity << ">";
      out << "<rect class=\"cell " << layer_classes(bits) << "\" x=\"" << x
          << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\""
          << kCell << "\" fill=\"" << paint.primary << "\" stroke=\""
          << palette.stroke << "\"/>";
      if (!paint.secondary.empty()) {
        out << "<polygon points=\"" << x + kCell << ',' << y << ' ' << x + kCell
            << ',' << y + kCell << ' ' << x << ',' << y + kCell
            << "\" fill=\"" << paint.secondary << "\"/>";
      }
      if (!grid.shape_only) {
        out << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2
            << "\" font-family=\"sans-serif\" font-size=\"10\" "
               "text-anchor=\"middle\" dominant-baseline=\"central\">"
            << v << "</text>";
      }
      out << "</g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string emit_tikz(const GridModel& grid, const Palette& palette) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=7mm,y=7mm]\n";
  out << "\\definecolor{nsgconductor}{HTML}{" << hex_digits(palette.conductor)
      << "}\n";
  out << "\\definecolor{nsgelement}{HTML}{" << hex_digits(palette.element)
      << "}\n";
  out << "\\definecolor{nsgprimitive}{HTML}{" << hex_digits(palette.primitive)
      << "}\n";
  out << "\\definecolor{nsgpf}{HTML}{" << hex_digits(palette.pseudo_frobenius)
      << "}\n";
  out << "\\definecolor{nsgbackground}{HTML}{" << hex_digits(palette.background)
      << "}\n";
  out << "\\definecolor{nsgstroke}{HTML}{" << hex_digits(palette.stroke)
      << "}\n";

  auto name = [&](const std::string& colour) -> std::string {
    if (colour == palette.pseudo_frobenius) return "nsgpf";
    if (colour == palette.primitive) return "nsgprimitive";
    if (colour == palette.conductor) return "nsgconductor";
    if (colour == palette.element) return "nsgelement";
    return "nsgbackground";
  };

  for (Value r = 0; r < grid.rows; ++r) {
    for (Value j = 0; j < grid.cols; ++j) {
      const Value v = grid.value(r, j);
      const CellPaint paint = cell_paint(grid.layer(r, j), palette);
      const Value x = j;
      const Value y = grid.rows - 1 - r;
      const std::string opacity =
          v < 0 ? ",fill opacity=" + fixed(palette.negative_opacity) : "";
      out << "\\fill[" << name(paint.primary) << opacity << "] (" << x << ','
          << y << ") rectangle ++(1,1);\n";
      if (!paint.secondary.empty()) {
        out << "\\fill[" << name(paint.secondary) << opacity << "] (" << x + 1
            << ',' << y + 1 << ") -- (" << x + 1 << ',' << y << ") -- (" << x
            << ',' << y << ") -- cycle;\n";
      }
      out << "\\node[draw=nsgstroke,minimum size=7mm,inner sep=0pt] at ("
          << x << ".5," << y << ".5) {";
      if (!grid.shape_only) out << v;
      out << "};\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace numsg
