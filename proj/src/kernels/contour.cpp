#include "k2forge/kernels/contour.hpp"

#include <array>

namespace k2forge {

FloatPoly::FloatPoly(const BiPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    auto [i, j] = m;
    if (rows_.size() <= static_cast<size_t>(j)) rows_.resize(j + 1);
    auto& row = rows_[j];
    if (row.size() <= static_cast<size_t>(i)) row.resize(i + 1, 0.0);
    row[i] = c.to_double();
  }
}

double FloatPoly::eval(double x, double y) const {
  double acc = 0;
  for (size_t j = rows_.size(); j-- > 0;) {
    double r = 0;
    for (size_t i = rows_[j].size(); i-- > 0;) r = r * x + rows_[j][i];
    acc = acc * y + r;
  }
  return acc;
}

namespace {

GridValues empty_grid(const Window& w, int n) {
  GridValues g;
  g.window = w;
  g.n = n;
  g.v.resize(static_cast<size_t>(n + 1) * (n + 1));
  return g;
}

void fill_row(GridValues& g, const FloatPoly& f, int j) {
  const Window& w = g.window;
  double y = w.ymin + (w.ymax - w.ymin) * j / g.n;
  for (int i = 0; i <= g.n; ++i) {
    double x = w.xmin + (w.xmax - w.xmin) * i / g.n;
    g.v[static_cast<size_t>(j) * (g.n + 1) + i] = f.eval(x, y);
  }
}

/// Crossing on the edge between nodes with values a at p and b at q.
std::array<double, 2> crossing(double a, double b, std::array<double, 2> p, std::array<double, 2> q) {
  double t = a / (a - b);
  return {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
}

void cell_segments(const GridValues& g, int i, int j, std::vector<Segment>& out) {
  const Window& w = g.window;
  double dx = (w.xmax - w.xmin) / g.n, dy = (w.ymax - w.ymin) / g.n;
  double x0 = w.xmin + i * dx, y0 = w.ymin + j * dy;
  // corners counter-clockwise from bottom-left
  std::array<double, 4> v = {g.at(i, j), g.at(i + 1, j), g.at(i + 1, j + 1), g.at(i, j + 1)};
  std::array<std::array<double, 2>, 4> p = {{{x0, y0}, {x0 + dx, y0}, {x0 + dx, y0 + dy}, {x0, y0 + dy}}};
  int code = 0;
  for (int k = 0; k < 4; ++k)
    if (v[k] > 0) code |= 1 << k;
  if (code == 0 || code == 15) return;
  auto edge = [&](int e) { return crossing(v[e], v[(e + 1) % 4], p[e], p[(e + 1) % 4]); };
  auto emit = [&](int e1, int e2) {
    auto a = edge(e1), b = edge(e2);
    out.push_back({a[0], a[1], b[0], b[1]});
  };
  // edge e joins corner e and corner e+1
  std::vector<int> cut;
  for (int e = 0; e < 4; ++e)
    if ((v[e] > 0) != (v[(e + 1) % 4] > 0)) cut.push_back(e);
  if (cut.size() == 2) {
    emit(cut[0], cut[1]);
    return;
  }
  double centre = (v[0] + v[1] + v[2] + v[3]) / 4;
  // saddle: corners 0 and 2 share a sign
  bool join_around_0 = (centre > 0) != (v[0] > 0);
  if (join_around_0) {
    emit(3, 0);
    emit(1, 2);
  } else {
    emit(0, 1);
    emit(2, 3);
  }
}

}  // namespace

GridValues evaluate_grid_serial(const BiPoly& f, const Window& w, int n) {
  GridValues g = empty_grid(w, n);
  FloatPoly fp(f);
  for (int j = 0; j <= n; ++j) fill_row(g, fp, j);
  return g;
}

GridValues evaluate_grid_omp(const BiPoly& f, const Window& w, int n) {
  GridValues g = empty_grid(w, n);
  FloatPoly fp(f);
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= n; ++j) fill_row(g, fp, j);
  return g;
}

std::vector<Segment> marching_squares_serial(const GridValues& g) {
  std::vector<Segment> out;
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.n; ++i) cell_segments(g, i, j, out);
  return out;
}

std::vector<Segment> marching_squares_omp(const GridValues& g) {
  std::vector<std::vector<Segment>> rows(g.n);
#pragma omp parallel for schedule(dynamic, 8)
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.n; ++i) cell_segments(g, i, j, rows[j]);
  std::vector<Segment> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace k2forge
