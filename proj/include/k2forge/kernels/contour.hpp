#pragma once

#include <vector>

#include "k2forge/algebra/bipoly.hpp"

namespace k2forge {

struct Window {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

/// F sampled on the (n+1) x (n+1) nodes of a uniform grid, row-major with
/// row j at y = ymin + j * dy.
struct GridValues {
  Window window;
  int n = 0;
  std::vector<double> v;
  double at(int i, int j) const { return v[static_cast<size_t>(j) * (n + 1) + i]; }
};

struct Segment {
  double x0, y0, x1, y1;
};

/// Double-precision copy of a polynomial for repeated evaluation.
class FloatPoly {
 public:
  explicit FloatPoly(const BiPoly& p);
  double eval(double x, double y) const;

 private:
  /// rows_[j][i] is the coefficient of x^i y^j.
  std::vector<std::vector<double>> rows_;
};

GridValues evaluate_grid_serial(const BiPoly& f, const Window& w, int n);
GridValues evaluate_grid_omp(const BiPoly& f, const Window& w, int n);

/// Zero contour by marching squares with linear interpolation along cell
/// edges; saddle cells are split by the sign of the cell average. Segments
/// come out in cell order (row by row), so both variants agree exactly.
std::vector<Segment> marching_squares_serial(const GridValues& g);
std::vector<Segment> marching_squares_omp(const GridValues& g);

}  // namespace k2forge
