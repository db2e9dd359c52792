#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

enum Layer : std::uint8_t {
  kLayerElement = 1u << 0,
  kLayerConductor = 1u << 1,
  kLayerPrimitive = 1u << 2,
  kLayerPseudoFrobenius = 1u << 3,
};

/// Renderer-independent picture of a semigroup: (q+1) rows by m columns.
/// Row 0 is the top row and holds the threshold interval; the bottom-left
/// cell holds -rho. A cell with no layer bits is background.
struct GridModel {
  Value rows = 1;
  Value cols = 1;
  Value rho = 0;
  Value depth = 0;
  bool shape_only = false;
  std::vector<Value> values;          // row-major
  std::vector<std::uint8_t> layers;   // row-major, Layer bits

  Value value(Value r, Value j) const {
    return values[static_cast<std::size_t>(r * cols + j)];
  }
  std::uint8_t layer(Value r, Value j) const {
    return layers[static_cast<std::size_t>(r * cols + j)];
  }
};

struct GridOptions {
  bool highlight_pf = false;
  bool shape_only = false;
};

GridModel grid_model(const NumericalSemigroup& s, const GridOptions& opts = {});

/// RGB hex colours ("#RRGGBB") per layer plus cell chrome.
struct Palette {
  std::string conductor = "#0000FF";
  std::string element = "#FF0000";
  std::string primitive = "#FF4D4D";
  std::string pseudo_frobenius = "#999999";
  std::string background = "#FFFFFF";
  std::string stroke = "#CCCCCC";
  /// Opacity for cells holding negative integers.
  double negative_opacity = 0.3;
};

/// The one or two colours a cell is painted with. When a cell carries
/// more than one layer it is split diagonally between the two highest
/// ranked layers (pseudo-Frobenius > primitive > conductor > element).
struct CellPaint {
  std::string primary;
  std::string secondary;  // empty when the cell is single-tone
};

CellPaint cell_paint(std::uint8_t layers, const Palette& palette);

std::string emit_svg(const GridModel& grid, const Palette& palette = {});
std::string emit_tikz(const GridModel& grid, const Palette& palette = {});

}  // namespace numsg
