#pragma once

#include <string>
#include <vector>

#include "k2forge/catalog/dispatch.hpp"
#include "k2forge/kernels/contour.hpp"

namespace k2forge {

struct PlotSpec {
  /// "x0,x1,y0,y1" as decimal strings.
  std::string window = "-2,2,-2,2";
  int grid = 512;
  bool overlays = true;
  /// Use the OpenMP kernels; output is identical either way.
  bool parallel = true;
};

/// Throws UsageError unless xmin < xmax, ymin < ymax and grid >= 16.
Window parse_window(const PlotSpec& spec);

struct PlotResult {
  std::string svg;
  std::vector<std::string> warnings;
};

/// SVG 1.1 drawing of the real locus of the record's curve with its
/// overlays and labeled affine points.
PlotResult render_svg(const CurveRecord& rec, const PlotSpec& spec);

/// Record to draw for a family member: the generated record, or for the
/// 2-torsion family without rational support its element-free scene.
CurveRecord plot_scene(const std::string& family_id, const ParamSet& params);

struct FigureConfig {
  std::string id;
  std::string family;
  ParamSet params;
  std::string window;
};

/// The five reference configurations.
const std::vector<FigureConfig>& reference_figures();
const FigureConfig& reference_figure(const std::string& id);

}  // namespace k2forge
