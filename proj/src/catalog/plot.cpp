#include "k2forge/catalog/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "k2forge/error.hpp"
#include "k2forge/families/families.hpp"

namespace k2forge {

namespace {

constexpr int kWidth = 640;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else if (c == '"')
      out += "&quot;";
    else
      out += c;
  }
  return out;
}

double parse_decimal(const std::string& s) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) throw UsageError("bad window coordinate '" + s + "'");
  return v;
}

struct Frame {
  Window w;
  int width, height;
  double px(double x) const { return (x - w.xmin) / (w.xmax - w.xmin) * width; }
  double py(double y) const { return height - (y - w.ymin) / (w.ymax - w.ymin) * height; }
};

std::string contour_path(const BiPoly& f, const Frame& fr, int n, bool parallel) {
  GridValues g = parallel ? evaluate_grid_omp(f, fr.w, n) : evaluate_grid_serial(f, fr.w, n);
  auto segs = parallel ? marching_squares_omp(g) : marching_squares_serial(g);
  std::string d;
  d.reserve(segs.size() * 28);
  for (const auto& s : segs) {
    d += "M" + fmt(fr.px(s.x0)) + " " + fmt(fr.py(s.y0)) + "L" + fmt(fr.px(s.x1)) + " " + fmt(fr.py(s.y1));
  }
  return d;
}

}  // namespace

Window parse_window(const PlotSpec& spec) {
  std::vector<double> v;
  std::stringstream ss(spec.window);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_decimal(item));
  if (v.size() != 4) throw UsageError("window needs four values x0,x1,y0,y1");
  Window w{v[0], v[1], v[2], v[3]};
  if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax)) throw UsageError("window needs xmin < xmax and ymin < ymax");
  if (spec.grid < 16) throw UsageError("grid must be at least 16");
  return w;
}

PlotResult render_svg(const CurveRecord& rec, const PlotSpec& spec) {
  Window w = parse_window(spec);
  Frame fr{w, kWidth, 0};
  double aspect = (w.ymax - w.ymin) / (w.xmax - w.xmin);
  fr.height = std::clamp(static_cast<int>(std::lround(kWidth * aspect)), 160, 1280);

  PlotResult res;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fr.width << "\" height=\""
     << fr.height << "\" viewBox=\"0 0 " << fr.width << " " << fr.height << "\">\n";
  std::string title = rec.family_id;
  for (const auto& [k, v] : rec.params) {
    title += " " + k + "=";
    for (size_t i = 0; i < v.size(); ++i) title += (i ? "," : "") + v[i].str();
  }
  os << "<title>" << escape(title) << "</title>\n";
  os << "<desc>" << escape(rec.curve.poly().str()) << " = 0</desc>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fr.width << "\" height=\"" << fr.height << "\" fill=\"white\"/>\n";

  os << "<g id=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  if (w.xmin < 0 && 0 < w.xmax)
    os << "<line x1=\"" << fmt(fr.px(0)) << "\" y1=\"0\" x2=\"" << fmt(fr.px(0)) << "\" y2=\"" << fr.height
       << "\"/>\n";
  if (w.ymin < 0 && 0 < w.ymax)
    os << "<line x1=\"0\" y1=\"" << fmt(fr.py(0)) << "\" x2=\"" << fr.width << "\" y2=\"" << fmt(fr.py(0))
       << "\"/>\n";
  os << "</g>\n";

  if (spec.overlays && !rec.overlays.empty()) {
    static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    os << "<g id=\"overlays\" fill=\"none\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\">\n";
    for (size_t k = 0; k < rec.overlays.size(); ++k) {
      const auto& o = rec.overlays[k];
      os << "<path class=\"overlay\" data-label=\"" << escape(o.label) << "\" stroke=\"" << colours[k % 6]
         << "\" d=\"" << contour_path(o.poly, fr, spec.grid, spec.parallel) << "\"><title>" << escape(o.label)
         << ": " << escape(o.poly.str()) << " = 0</title></path>\n";
    }
    os << "</g>\n";
  }

  std::string curve = contour_path(rec.curve.poly(), fr, spec.grid, spec.parallel);
  if (curve.empty()) res.warnings.push_back("the real locus does not meet the window");
  os << "<path id=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.6\" d=\"" << curve << "\"/>\n";

  os << "<g id=\"points\" font-family=\"sans-serif\" font-size=\"14\">\n";
  size_t shown = 0, affine = 0;
  for (const auto& p : rec.points) {
    if (!p.point.is_affine()) continue;
    ++affine;
    double x = p.point.x().to_double(), y = p.point.y().to_double();
    if (x < w.xmin || x > w.xmax || y < w.ymin || y > w.ymax) {
      res.warnings.push_back("point " + p.name + " lies outside the window");
      continue;
    }
    ++shown;
    os << "<circle class=\"marked\" data-label=\"" << escape(p.name) << "\" cx=\"" << fmt(fr.px(x)) << "\" cy=\""
       << fmt(fr.py(y)) << "\" r=\"3.5\" fill=\"#d62728\"/>\n";
    os << "<text x=\"" << fmt(fr.px(x) + 6) << "\" y=\"" << fmt(fr.py(y) - 6) << "\">" << escape(p.name)
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  if (affine > 0 && shown == 0) res.warnings.push_back("the window excludes all marked points");
  res.svg = os.str();
  return res;
}

CurveRecord plot_scene(const std::string& family_id, const ParamSet& params) {
  try {
    return generate(family_id, params);
  } catch (const RationalSupportError&) {
    if (family_id != "nekovar-2tor") throw;
    return nekovar_2tor_scene(canonical_params(family(family_id), params).front().second.front());
  }
}

const std::vector<FigureConfig>& reference_figures() {
  static const std::vector<FigureConfig> figs = {
      {"hyp-odd-three-tangents", "hyp-odd", {{"genus", {Rat(2)}}, {"a", {Rat(1), Rat(1, 2), Rat(1, 4)}}},
       "-0.5,1.5,-1.5,1.5"},
      {"quartic-ct-0", "quartic-ct", {{"t", {Rat(0)}}}, "-0.6,0.4,-0.6,0.2"},
      {"quartic-conic-pq", "quartic-conic-pq", {{"a", {Rat(1, 2)}}, {"b", {Rat(-1)}}}, "-0.5,0.5,-0.5,0.25"},
      {"nekovar-2tor-3/4", "nekovar-2tor", {{"r", {Rat(3, 4)}}}, "-2,2,-2,2"},
      {"nekovar-g2-1/2", "nekovar-g2", {{"r", {Rat(1, 2)}}}, "-1.5,1.5,-2,2"},
  };
  return figs;
}

const FigureConfig& reference_figure(const std::string& id) {
  for (const auto& f : reference_figures())
    if (f.id == id) return f;
  throw UsageError("unknown figure '" + id + "'");
}

}  // namespace k2forge
