#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "radon/errors.hpp"
#include "radon/multipoly.hpp"
#include "radon/oscillatory.hpp"
#include "radon/report.hpp"
#include "radon/sublevel.hpp"
#include "radon/svg.hpp"

using namespace radon;

namespace {

struct PolySource {
  std::string file;
  std::string inline_text;
  int n = 0;

  MultiPoly load() const {
    std::string text = inline_text;
    int dim = n;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw input_error("cannot open polynomial file '" + file + "'");
      std::ostringstream body;
      std::string line;
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // optional "n = <int>" / "n: <int>" header line
        auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == 'n') {
          auto rest = line.find_first_not_of(" \t", first + 1);
          if (rest != std::string::npos && (line[rest] == '=' || line[rest] == ':')) {
            dim = std::stoi(line.substr(rest + 1));
            continue;
          }
        }
        body << line << ' ';
      }
      text = body.str();
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
      throw input_error("no polynomial given (use --poly or a polynomial file)");
    if (dim <= 0) throw input_error("dimension not given (use --n or an 'n = ...' file line)");
    return parse_poly(text, dim);
  }
};

void add_poly_options(CLI::App* cmd, PolySource& src) {
  cmd->add_option("file", src.file, "polynomial file (optional 'n = <int>' line + expression)");
  cmd->add_option("--poly", src.inline_text, "polynomial expression, e.g. 't1^2 + t2^2'");
  cmd->add_option("--n", src.n, "dimension of t-space");
}

struct CommonOpts {
  std::string config_file;
  std::string output;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config_file, "JSON configuration file");
  cmd->add_option("--output", c.output, "output file (default stdout)");
  auto* seed_opt = cmd->add_option_function<std::uint64_t>(
      "--seed", [&c](std::uint64_t v) { c.seed = v; }, "RNG seed");
  (void)seed_opt;
}

Json load_config(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error(std::string("malformed config JSON: ") + e.what());
  }
  return j;
}

void apply_config(const Json& cfg, PipelineOptions& opt) {
  if (cfg.contains("samples")) opt.sublevel.samples = cfg["samples"].get<long long>();
  if (cfg.contains("k_min")) opt.sublevel.k_min = cfg["k_min"].get<int>();
  if (cfg.contains("k_max")) opt.sublevel.k_max = cfg["k_max"].get<int>();
  if (cfg.contains("seed")) opt.sublevel.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("batches")) opt.sublevel.batches = cfg["batches"].get<int>();
  if (cfg.contains("control_fraction"))
    opt.sublevel.control_fraction = cfg["control_fraction"].get<double>();
  if (cfg.contains("radii")) {
    opt.radius_sweep.clear();
    for (const auto& r : cfg["radii"])
      opt.radius_sweep.push_back(r.is_string() ? rat_double(rat_parse(r.get<std::string>()))
                                               : r.get<double>());
  }
  if (cfg.contains("g_radius")) opt.g_radius = cfg["g_radius"].get<double>();
  if (cfg.contains("j0")) opt.decay_j0 = cfg["j0"].get<int>();
  if (cfg.contains("j1")) opt.decay_j1 = cfg["j1"].get<int>();
  if (cfg.contains("cutoff_radius")) opt.cutoff.radius = cfg["cutoff_radius"].get<double>();
  if (cfg.contains("sharp_cutoff")) opt.cutoff.smooth = !cfg["sharp_cutoff"].get<bool>();
  if (cfg.contains("quad_tol")) opt.quad.tol = cfg["quad_tol"].get<double>();
}

void emit(const CommonOpts& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(c.output);
    if (!out) throw input_error("cannot open output file '" + c.output + "'");
    out << text;
  }
}

std::optional<Rat> opt_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return rat_parse(s);
}

Region2 region2_from_json(const Json& j) {
  Region2 r;
  r.name = j.value("name", "");
  r.theorem = j.value("theorem", "");
  for (const auto& v : j.at("vertices"))
    r.vertices.push_back({rat_parse(v[0].get<std::string>()), rat_parse(v[1].get<std::string>())});
  if (j.contains("edges_open"))
    for (const auto& b : j["edges_open"]) r.edge_open.push_back(b.get<bool>());
  return r;
}

RegionFamily family_from_json(const Json& j) {
  std::vector<ConvexRegion3> tris;
  for (const auto& tj : j.at("triangles")) {
    ConvexRegion3 t;
    t.name = tj.value("name", "");
    t.theorem = j.value("theorem", "");
    for (const auto& vj : tj.at("vertices"))
      t.vertices.push_back({rat_parse(vj[0].get<std::string>()),
                            rat_parse(vj[1].get<std::string>()),
                            rat_parse(vj[2].get<std::string>())});
    tris.push_back(t);
  }
  // rebuild planes from the vertex data
  RegionFamily f;
  f.family = j.value("family", "");
  f.theorem = j.value("theorem", "");
  for (auto& t : tris) {
    // plane through the triangle's vertices, z-solvable by construction
    const Point3 &a = t.vertices[0], &b = t.vertices[1], &c = t.vertices[2];
    Rat ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    Rat vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    Plane3 pl{uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx, Rat(0)};
    if (pl.c < 0) {
      pl.a = -pl.a;
      pl.b = -pl.b;
      pl.c = -pl.c;
    }
    pl.e = pl.a * a.x + pl.b * a.y + pl.c * a.z;
    f.planes.push_back(pl);
    f.triangles.push_back(t);
  }
  return f;
}

int cmd_analyze(const PolySource& src, const CommonOpts& common, PipelineOptions opt,
                const std::vector<std::string>& patch_files) {
  Json cfg = load_config(common.config_file);
  apply_config(cfg, opt);
  if (common.seed) opt.sublevel.seed = *common.seed;
  if (!patch_files.empty()) {
    std::vector<MultiPoly> patches;
    patches.push_back(src.load());
    for (const auto& pf : patch_files) {
      PolySource ps;
      ps.file = pf;
      patches.push_back(ps.load());
      if (patches.back().dim != patches.front().dim)
        throw input_error("all patches must share the same dimension");
    }
    PatchResult pr = analyze_patches(patches, opt);
    emit(common, pr.json.dump(2));
    return 0;
  }
  AnalyzeResult res = analyze_surface(src.load(), opt);
  emit(common, res.json.dump(2));
  return 0;
}

int cmd_classify(const PolySource& src, const CommonOpts& common, PipelineOptions opt,
                 const std::string& p, const std::string& q, const std::string& s) {
  Json cfg = load_config(common.config_file);
  apply_config(cfg, opt);
  if (common.seed) opt.sublevel.seed = *common.seed;
  const Rat rp = rat_parse(p), rq = rat_parse(q), rs = rat_parse(s);
  if (!(rp > 1) || !(rq > 1))
    throw input_error("classification requires rationals 1 < p, q < infinity");
  AnalyzeResult res = analyze_surface(src.load(), opt);
  Point3 pt{Rat(1) / rp, Rat(1) / rq, rs};
  Classification c = classify(pt, res.bundle);
  std::ostringstream os;
  switch (c.verdict) {
    case Verdict::Bounded: os << "Bounded"; break;
    case Verdict::Unbounded: os << "Unbounded"; break;
    case Verdict::Unknown: os << "Unknown"; break;
  }
  if (!c.theorem.empty()) os << " [" << c.theorem << "]";
  if (c.interval_qualified) os << " (interval)";
  if (c.verdict == Verdict::Unknown) {
    // report the nearest licensed region boundaries
    if (res.bundle.h && res.bundle.h->exact && pt.y <= pt.x) {
      const Rat h = res.bundle.h->value;
      RegionFamily fam =
          h < Rat(1, res.bundle.n + 1) ? regions_Y(h, res.bundle.n) : regions_Y34(res.bundle.n);
      os << "; bounded below s = " << rat_str(fam.tent(pt.x, pt.y)) << " ["
         << fam.theorem << "]";
    }
    if (res.bundle.g && res.bundle.g->exact && res.bundle.o_exactness == Exactness::Exact) {
      const Rat g = res.bundle.g->value;
      const int m = std::max(res.bundle.o_value.value_or(0), 2);
      if (g <= Rat(1, m))
        os << "; unbounded above s = " << rat_str(g - (g + 1) * (pt.x - pt.y))
           << " [theorem 1.7]";
    }
  }
  if (!c.note.empty()) os << "; " << c.note;
  emit(common, os.str());
  return 0;
}

int cmd_sublevel(const PolySource& src, const CommonOpts& common, PipelineOptions opt,
                 const std::string& region_kind, double radius, bool star,
                 const std::string& csv_path) {
  Json cfg = load_config(common.config_file);
  apply_config(cfg, opt);
  if (common.seed) opt.sublevel.seed = *common.seed;
  MultiPoly S = src.load();
  validate_surface(S);
  MultiPoly target = S;
  bool absval = false;
  if (star) {
    target = star_polynomial(newton_polyhedron(S)).as_poly();
    absval = true;
  }
  EvalTable table(target, absval);
  RegionSpec region{region_kind == "cube" ? RegionSpec::Kind::Cube : RegionSpec::Kind::Ball,
                    S.dim, radius};
  SublevelCurve curve = sublevel_curve(table, region, opt.sublevel);
  GrowthFit fit = fit_growth(curve, S.dim);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw input_error("cannot open CSV output '" + csv_path + "'");
    write_curve_csv(out, curve);
  }
  Json j;
  j["input"] = {{"polynomial", S.str()}, {"n", S.dim}};
  if (star) j["star"] = target.str();
  j["curve"] = curve_json(curve);
  j["fit"] = fit_json(fit);
  emit(common, j.dump(2));
  return 0;
}

int cmd_decay(const PolySource& src, const CommonOpts& common, PipelineOptions opt,
              const std::string& direction, bool sharp, double cutoff_radius,
              const std::string& csv_path) {
  Json cfg = load_config(common.config_file);
  apply_config(cfg, opt);
  MultiPoly S = src.load();
  validate_surface(S);
  std::vector<double> dir;
  {
    std::istringstream is(direction);
    std::string tok;
    while (std::getline(is, tok, ',')) dir.push_back(std::stod(tok));
  }
  if ((int)dir.size() != S.dim + 1)
    throw input_error("--direction needs n+1 comma-separated components");
  CutoffSpec cut = opt.cutoff;
  if (sharp) cut.smooth = false;
  if (cutoff_radius > 0) cut.radius = cutoff_radius;
  DecayFit fit = decay_exponent(S, cut, dir, opt.decay_j0, opt.decay_j1, opt.quad);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw input_error("cannot open CSV output '" + csv_path + "'");
    write_decay_csv(out, fit);
  }
  Json j;
  j["input"] = {{"polynomial", S.str()}, {"n", S.dim}};
  j["decay"] = decay_json(fit);
  emit(common, j.dump(2));
  return 0;
}

int cmd_region(const CommonOpts& common, int n, const std::string& h, const std::string& g,
               int o, bool has_o, const std::string& eta) {
  Json doc = region_document(n, opt_rat(h), opt_rat(g),
                             has_o ? std::optional<int>(o) : std::nullopt, opt_rat(eta));
  emit(common, doc.dump(2));
  return 0;
}

int cmd_plot(const CommonOpts& common, const std::string& input, const std::string& select,
             const std::string& axis, const std::string& at) {
  std::ifstream in(input);
  if (!in) throw input_error("cannot open region JSON '" + input + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw input_error(std::string("malformed region JSON: ") + e.what());
  }
  const Json& regions = doc.contains("regions") ? doc["regions"] : doc;
  if (!regions.contains(select))
    throw input_error("selector '" + select + "' not present in the region document");
  const Json& sel = regions[select];
  std::string svg;
  if (sel.contains("triangles")) {
    if (axis.empty() || at.empty())
      throw input_error("3-D families need --axis z|x and --at <rational>");
    svg = svg_family_slice(family_from_json(sel), axis[0], rat_parse(at));
  } else {
    svg = svg_region2(region2_from_json(sel));
  }
  emit(common, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-polyhedron smoothing analysis for polynomial Radon transforms"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // frees -h / --h for the index override

  PolySource src;
  CommonOpts common;
  PipelineOptions opt;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full pipeline report (JSON)");
  analyze->set_help_flag("--help", "print help");
  add_poly_options(analyze, src);
  add_common(analyze, common);
  bool fits = false, decay = false;
  std::vector<std::string> patch_files;
  std::string ov_h, ov_g;
  int ov_o = -1;
  bool ov_o_set = false;
  analyze->add_flag("--fits", fits, "run the Monte-Carlo sublevel fits");
  analyze->add_flag("--decay", decay, "run the Fourier decay fit");
  analyze->add_option("--patch", patch_files, "additional patch files (global surface mode)");
  analyze->add_option("--h", ov_h, "override h with an exact rational");
  analyze->add_option("--g", ov_g, "override g with an exact rational");
  analyze->add_option_function<int>(
      "--o", [&](int v) { ov_o = v; ov_o_set = true; }, "override o(S), treated as exact");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify an exponent triple (p, q, s)");
  classify_cmd->set_help_flag("--help", "print help");
  add_poly_options(classify_cmd, src);
  add_common(classify_cmd, common);
  std::string p_str, q_str, s_str;
  classify_cmd->add_option("--p", p_str, "Lebesgue exponent p (rational)")->required();
  classify_cmd->add_option("--q", q_str, "Lebesgue exponent q (rational)")->required();
  classify_cmd->add_option("--s", s_str, "Sobolev order s (rational)")->required();
  bool cls_fits = false;
  classify_cmd->add_flag("--fits", cls_fits, "allow fitted indices when exact ones are unlicensed");
  classify_cmd->add_option("--h", ov_h, "override h with an exact rational");
  classify_cmd->add_option("--g", ov_g, "override g with an exact rational");
  classify_cmd->add_option_function<int>(
      "--o", [&](int v) { ov_o = v; ov_o_set = true; }, "override o(S), treated as exact");

  // sublevel
  auto* sublevel_cmd = app.add_subcommand("sublevel", "sublevel measure curve + growth fit");
  sublevel_cmd->set_help_flag("--help", "print help");
  add_poly_options(sublevel_cmd, src);
  add_common(sublevel_cmd, common);
  std::string region_kind = "ball";
  double radius = 0.5;
  bool star = false;
  std::string csv_path;
  sublevel_cmd->add_option("--region", region_kind, "ball | cube")
      ->check(CLI::IsMember({"ball", "cube"}));
  sublevel_cmd->add_option("--radius", radius, "region radius");
  sublevel_cmd->add_flag("--star", star, "measure the star polynomial S* instead of S");
  sublevel_cmd->add_option("--csv", csv_path, "write the curve as CSV");
  sublevel_cmd->add_option("--samples", opt.sublevel.samples, "samples per epsilon");
  sublevel_cmd->add_option("--kmin", opt.sublevel.k_min, "smallest dyadic exponent");
  sublevel_cmd->add_option("--kmax", opt.sublevel.k_max, "largest dyadic exponent");

  // decay
  auto* decay_cmd = app.add_subcommand("decay", "Fourier decay along a direction");
  decay_cmd->set_help_flag("--help", "print help");
  add_poly_options(decay_cmd, src);
  add_common(decay_cmd, common);
  std::string direction;
  bool sharp = false;
  double cutoff_radius = 0;
  std::string decay_csv;
  decay_cmd->add_option("--direction", direction, "n+1 comma-separated components")->required();
  decay_cmd->add_option("--j0", opt.decay_j0, "first ladder exponent");
  decay_cmd->add_option("--j1", opt.decay_j1, "last ladder exponent");
  decay_cmd->add_flag("--sharp", sharp, "use the sharp indicator cutoff");
  decay_cmd->add_option("--cutoff-radius", cutoff_radius, "cutoff support radius");
  decay_cmd->add_option("--csv", decay_csv, "write the ladder as CSV");

  // region
  auto* region_cmd = app.add_subcommand("region", "exact region document from given indices");
  region_cmd->set_help_flag("--help", "print help");
  add_common(region_cmd, common);
  int reg_n = 1;
  std::string reg_h, reg_g, reg_eta;
  int reg_o = 0;
  bool reg_o_set = false;
  region_cmd->add_option("--n", reg_n, "dimension of t-space")->required();
  region_cmd->add_option("--h", reg_h, "exact h (rational)");
  region_cmd->add_option("--g", reg_g, "exact g (rational)");
  region_cmd->add_option_function<int>(
      "--o", [&](int v) { reg_o = v; reg_o_set = true; }, "exact o(S)");
  region_cmd->add_option("--eta", reg_eta, "exact eta (rational)");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "SVG plot of a region or family slice");
  plot_cmd->set_help_flag("--help", "print help");
  add_common(plot_cmd, common);
  std::string plot_input, plot_select, plot_axis, plot_at;
  plot_cmd->add_option("--input", plot_input, "region JSON document")->required();
  plot_cmd->add_option("--select", plot_select, "region name, e.g. B, D, J, Y_family")
      ->required();
  plot_cmd->add_option("--axis", plot_axis, "slice axis for families: z | x");
  plot_cmd->add_option("--at", plot_at, "slice value (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    opt.run_fits = fits || cls_fits;
    opt.run_decay = decay;
    if (!ov_h.empty()) opt.override_h = rat_parse(ov_h);
    if (!ov_g.empty()) opt.override_g = rat_parse(ov_g);
    if (ov_o_set) opt.override_o = ov_o;
    if (analyze->parsed()) return cmd_analyze(src, common, opt, patch_files);
    if (classify_cmd->parsed()) return cmd_classify(src, common, opt, p_str, q_str, s_str);
    if (sublevel_cmd->parsed())
      return cmd_sublevel(src, common, opt, region_kind, radius, star, csv_path);
    if (decay_cmd->parsed())
      return cmd_decay(src, common, opt, direction, sharp, cutoff_radius, decay_csv);
    if (region_cmd->parsed())
      return cmd_region(common, reg_n, reg_h, reg_g, reg_o, reg_o_set, reg_eta);
    if (plot_cmd->parsed()) return cmd_plot(common, plot_input, plot_select, plot_axis, plot_at);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << '\n';
    return 3;
  } catch (const numerics_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
