#include "k2forge/catalog/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "k2forge/catalog/catalog.hpp"
#include "k2forge/catalog/plot.hpp"
#include "k2forge/error.hpp"
#include "k2forge/kernels/batch.hpp"

namespace k2forge {

namespace {

const std::vector<std::string> kParamFlags = {"genus", "d",  "a",  "eps", "free", "b",  "c", "t",
                                              "r",     "d1", "d2", "d3",  "d4",   "a1", "a2"};
const std::vector<std::string> kGridFlags = {"a", "eps", "free"};

struct ParamFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, std::string> grids;
  std::map<std::string, CLI::Option*> opts, grid_opts;

  void attach(CLI::App* app, bool with_grids) {
    for (const auto& n : kParamFlags) opts[n] = app->add_option("--" + n, values[n], "family parameter " + n);
    if (with_grids)
      for (const auto& n : kGridFlags)
        grid_opts[n] = app->add_option("--" + n + "-grid", grids[n], "tuples of " + n + " separated by ';'");
  }

  bool given(const std::string& n) const { return opts.at(n)->count() > 0; }

  ParamSet single() const {
    ParamSet p;
    for (const auto& n : kParamFlags)
      if (given(n)) p.emplace_back(n, parse_rat_list(values.at(n)));
    return p;
  }

  /// Choices per parameter for the catalog: ranges for scalars, grids or a
  /// single tuple for lists.
  std::vector<std::pair<std::string, std::vector<std::vector<Rat>>>> choices(const FamilySpec& f) const {
    std::vector<std::pair<std::string, std::vector<std::vector<Rat>>>> out;
    for (const auto& n : f.params) {
      bool list = std::find(f.lists.begin(), f.lists.end(), n) != f.lists.end();
      bool grid = list && grid_opts.count(n) && grid_opts.at(n)->count() > 0;
      if (grid && given(n)) throw UsageError("give either --" + n + " or --" + n + "-grid");
      if (grid) {
        out.emplace_back(n, parse_grid(grids.at(n)));
      } else if (given(n)) {
        if (list) {
          out.emplace_back(n, std::vector<std::vector<Rat>>{parse_rat_list(values.at(n))});
        } else {
          std::vector<std::vector<Rat>> vals;
          for (const auto& v : parse_range(values.at(n))) vals.push_back({v});
          out.emplace_back(n, vals);
        }
      } else if (std::find(f.optional.begin(), f.optional.end(), n) == f.optional.end()) {
        throw UsageError("family " + f.id + " needs --" + n);
      }
    }
    for (const auto& n : kParamFlags)
      if (given(n) && std::find(f.params.begin(), f.params.end(), n) == f.params.end())
        throw UsageError("family " + f.id + " takes no parameter --" + n);
    return out;
  }
};

std::string family_list() {
  std::string s;
  for (const auto& f : families()) s += (s.empty() ? "" : ", ") + f.id;
  return s;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("cannot write " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": malformed JSON: " + e.what());
  }
}

/// A record file or a catalog entry wrapping one.
CurveRecord load_record(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("record")) return record_from_json(j.at("record"));
  return record_from_json(j);
}

std::string params_text(const CurveRecord& rec) {
  std::string s;
  for (const auto& [k, v] : rec.params) {
    s += " " + k + "=";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  }
  return s;
}

int cmd_gen(const std::string& fam, const ParamFlags& pf, const std::string& out_path, std::ostream& out) {
  family(fam);
  CurveRecord rec = generate(fam, pf.single());
  std::string text = to_json(rec).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << rec.family_id << params_text(rec) << ": " << rec.elements.size() << " elements, "
        << (rec.pass() ? "PASS" : "FAIL") << " -> " << out_path << "\n";
  }
  return rec.pass() ? 0 : 3;
}

int cmd_verify(const std::string& path, bool parallel, std::ostream& out) {
  CurveRecord rec = load_record(path);
  out << "record: " << rec.family_id << params_text(rec) << "\n";
  out << "curve:  " << rec.curve.poly().str() << " = 0\n";
  for (const auto& p : rec.points)
    if (!is_on_curve(rec.curve, p.point))
      throw VerificationError("point " + p.name + " " + p.point.str() + " is not on the curve");
  out << "points: " << rec.points.size() << " on the curve\n";

  std::vector<VerifyJob> jobs;
  for (const auto& e : rec.elements) jobs.push_back({rec.curve, e.element});
  auto results = parallel ? batch_verify_omp(jobs) : batch_verify_serial(jobs);

  std::string failure;
  for (size_t k = 0; k < results.size(); ++k) {
    const auto& e = rec.elements[k];
    const auto& r = results[k];
    out << "\nelement " << e.name << " (" << e.element.terms.size() << " term"
        << (e.element.terms.size() == 1 ? "" : "s") << ")\n";
    if (!r.error.empty()) {
      out << "  error: " << r.error << "\n";
      if (failure.empty()) failure = "element " + e.name + ": " + r.error;
      continue;
    }
    out << "  " << std::left << std::setw(28) << "point" << std::setw(24) << "ord (f,h)"
        << "tame value\n";
    for (const auto& ce : r.certificate.entries) {
      std::string ords;
      for (size_t t = 0; t < ce.terms.size(); ++t)
        ords += (t ? ";" : "") + std::string("(") + std::to_string(ce.terms[t].ord_f) + "," +
                std::to_string(ce.terms[t].ord_h) + ")";
      out << "  " << std::setw(28) << ce.point.str() << std::setw(24) << ords << ce.tame_value.str() << "\n";
    }
    out << "  product = " << r.certificate.product.str() << "  " << r.certificate.verdict() << "\n";
    if (!r.certificate.pass && failure.empty()) {
      auto p = r.certificate.offending_point();
      failure = "element " + e.name + " fails" + (p ? " at " + p->str() : std::string(" in the product formula"));
    }
  }
  if (!failure.empty()) throw VerificationError(failure);
  out << "\nverdict: PASS (" << rec.elements.size() << " elements)\n";
  return 0;
}

int cmd_catalog(const std::string& fam, const ParamFlags& pf, const std::string& db, bool parallel,
                std::ostream& out) {
  const FamilySpec& f = family(fam);
  auto tuples = expand(pf.choices(f));
  CatalogRun run = run_catalog(fam, tuples, db, parallel);
  out << "tuples: " << run.tuples << ", added: " << run.added << ", duplicates: " << run.duplicates
      << ", errors: " << run.errors.size() << "\n";
  for (const auto& e : run.errors) out << "  " << e.kind << ": " << e.params << ": " << e.message << "\n";
  out << "error report: " << db << ".errors.jsonl\n";
  return 0;
}

int plot_one(const CurveRecord& rec, const PlotSpec& spec, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
  PlotResult res = render_svg(rec, spec);
  for (const auto& w : res.warnings) err << "warning: " << w << "\n";
  write_file(out_path, res.svg);
  out << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of K2 elements on plane curves", "k2forge"};
  app.require_subcommand(1);

  ParamFlags gen_flags, cat_flags, plot_flags;
  std::string gen_family, gen_out;
  auto* gen = app.add_subcommand("gen", "generate and certify a family member");
  gen->add_option("family", gen_family, "one of: " + family_list())->required();
  gen->add_option("--out", gen_out, "write the record JSON here instead of stdout");
  gen_flags.attach(gen, false);

  std::string verify_path;
  bool verify_serial = false;
  auto* verify = app.add_subcommand("verify", "re-verify every element of a stored record");
  verify->add_option("path", verify_path, "record JSON")->required();
  verify->add_flag("--serial", verify_serial, "verify elements one after another");

  std::string cat_family, cat_db;
  bool cat_serial = false;
  auto* catalog = app.add_subcommand("catalog", "generate records over parameter ranges into a JSON-lines catalog");
  catalog->add_option("family", cat_family, "one of: " + family_list())->required();
  catalog->add_option("--db", cat_db, "catalog file (JSON lines)")->required();
  catalog->add_flag("--serial", cat_serial, "generate one tuple at a time");
  cat_flags.attach(catalog, true);

  std::string plot_path, plot_family, plot_out, plot_figure, plot_dir;
  bool plot_all = false, plot_no_overlays = false, plot_serial = false;
  PlotSpec spec;
  auto* plot = app.add_subcommand("plot", "draw the real locus of a record as SVG");
  plot->add_option("path", plot_path, "record JSON");
  plot->add_option("--family", plot_family, "draw a family member given by parameter flags");
  plot->add_option("--figure", plot_figure, "draw a reference configuration");
  plot->add_flag("--all-figures", plot_all, "draw every reference configuration into --out-dir");
  plot->add_option("--out-dir", plot_dir, "directory for --all-figures");
  plot->add_option("--out", plot_out, "SVG file");
  auto* window_opt = plot->add_option("--window", spec.window, "x0,x1,y0,y1");
  plot->add_option("--grid", spec.grid, "cells per axis")->capture_default_str();
  plot->add_flag("--no-overlays", plot_no_overlays, "omit tangent lines and conics");
  plot->add_flag("--serial", plot_serial, "use the serial contour kernels");
  plot_flags.attach(plot, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  if (gen->parsed()) {
    return guarded(
        [&] {
          try {
            family(gen_family);
          } catch (const UsageError&) {
            err << gen->help();
            throw;
          }
          return cmd_gen(gen_family, gen_flags, gen_out, out);
        },
        err);
  }
  if (verify->parsed()) return guarded([&] { return cmd_verify(verify_path, !verify_serial, out); }, err);
  if (catalog->parsed()) {
    return guarded(
        [&] {
          try {
            family(cat_family);
          } catch (const UsageError&) {
            err << catalog->help();
            throw;
          }
          return cmd_catalog(cat_family, cat_flags, cat_db, !cat_serial, out);
        },
        err);
  }
  return guarded(
      [&] {
        spec.overlays = !plot_no_overlays;
        spec.parallel = !plot_serial;
        int sources = !plot_path.empty() + !plot_family.empty() + !plot_figure.empty() + plot_all;
        if (sources != 1) throw UsageError("plot needs exactly one of a record path, --family, --figure, --all-figures");
        if (plot_all) {
          if (plot_dir.empty()) throw UsageError("--all-figures needs --out-dir");
          std::filesystem::create_directories(plot_dir);
          for (const auto& f : reference_figures()) {
            PlotSpec s = spec;
            if (window_opt->count() == 0) s.window = f.window;
            std::string name = f.id;
            std::replace(name.begin(), name.end(), '/', '_');
            plot_one(plot_scene(f.family, f.params), s, plot_dir + "/" + name + ".svg", out, err);
          }
          return 0;
        }
        if (plot_out.empty()) throw UsageError("plot needs --out");
        if (!plot_figure.empty()) {
          const FigureConfig& f = reference_figure(plot_figure);
          if (window_opt->count() == 0) spec.window = f.window;
          return plot_one(plot_scene(f.family, f.params), spec, plot_out, out, err);
        }
        CurveRecord rec = plot_path.empty() ? plot_scene(plot_family, plot_flags.single()) : load_record(plot_path);
        return plot_one(rec, spec, plot_out, out, err);
      },
      err);
}

}  // namespace k2forge
