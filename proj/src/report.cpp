#include "radon/report.hpp"

#include <cmath>

#include "radon/errors.hpp"

namespace radon {

Json rat_json(const Rat& r) { return rat_str(r); }

Json point3_json(const Point3& p) {
  return Json::array({rat_str(p.x), rat_str(p.y), rat_str(p.z)});
}

Json region2_json(const Region2& r) {
  Json j;
  j["name"] = r.name;
  j["theorem"] = r.theorem;
  Json verts = Json::array();
  for (const auto& [x, y] : r.vertices) verts.push_back(Json::array({rat_str(x), rat_str(y)}));
  j["vertices"] = verts;
  j["edges_open"] = r.edge_open;
  return j;
}

Json family_json(const RegionFamily& f) {
  Json j;
  j["family"] = f.family;
  j["theorem"] = f.theorem;
  Json tris = Json::array();
  for (size_t i = 0; i < f.triangles.size(); ++i) {
    const auto& t = f.triangles[i];
    Json tj;
    tj["name"] = t.name;
    Json verts = Json::array();
    for (const auto& v : t.vertices) verts.push_back(point3_json(v));
    tj["vertices"] = verts;
    const auto& pl = f.planes[i];
    tj["plane"] = {{"a", rat_str(pl.a)}, {"b", rat_str(pl.b)}, {"c", rat_str(pl.c)},
                   {"e", rat_str(pl.e)}};
    tris.push_back(tj);
  }
  j["triangles"] = tris;
  return j;
}

Json plane_json(const Plane3& p, const std::string& name) {
  Json j;
  j["name"] = name;
  j["equation"] = {{"a", rat_str(p.a)}, {"b", rat_str(p.b)}, {"c", rat_str(p.c)},
                   {"e", rat_str(p.e)}};
  return j;
}

Json fit_json(const GrowthFit& f) {
  Json j;
  j["h_est"] = f.h_est;
  j["d_est"] = f.d_est;
  j["ci"] = Json::array({f.ci_lo, f.ci_hi});
  j["residual"] = f.residual;
  j["points_used"] = f.points_used;
  j["provenance"] = "fitted";
  if (!f.warnings.empty()) j["warnings"] = f.warnings;
  return j;
}

Json curve_json(const SublevelCurve& c) {
  Json j;
  j["region"] = c.region.str();
  j["samples"] = c.samples;
  j["control_samples"] = c.control_samples;
  j["seed"] = c.seed;
  j["k"] = c.ks;
  j["epsilon"] = c.epsilons;
  j["measure"] = c.measures;
  j["stderr"] = c.stderrs;
  j["control_measure"] = c.control_measures;
  return j;
}

Json decay_json(const DecayFit& f) {
  Json j;
  j["direction"] = f.direction;
  j["exponent_est"] = f.exponent_est;
  j["residual"] = f.residual;
  j["points_used"] = f.points_used;
  j["j"] = f.js;
  j["xi"] = f.xis;
  j["magnitude"] = f.magnitudes;
  j["provenance"] = "fitted";
  return j;
}

Json zero_order_json(const ZeroOrderResult& o) {
  Json j;
  j["value"] = o.value;
  j["exactness"] = o.exactness == Exactness::Exact ? "exact" : "lower_bound";
  Json ws = Json::array();
  for (const auto& w : o.witnesses) {
    Json wj;
    wj["face"] = w.face_index;
    wj["point"] = w.point;
    wj["order"] = w.order;
    if (w.rational_point) {
      Json rp = Json::array();
      for (const auto& r : *w.rational_point) rp.push_back(rat_str(r));
      wj["rational_point"] = rp;
    }
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  return j;
}

Json newton_json(const NewtonPolyhedron& N, const Rat& distance) {
  Json j;
  j["support"] = N.support;
  j["vertices"] = N.vertices;
  Json faces = Json::array();
  for (const auto& f : N.compact_faces) {
    Json fj;
    fj["members"] = f.members;
    Json w = Json::array();
    for (const auto& x : f.weight) w.push_back(rat_str(x));
    fj["weight"] = w;
    fj["dim"] = f.dim;
    faces.push_back(fj);
  }
  j["faces"] = faces;
  j["distance"] = rat_str(distance);
  j["distance_provenance"] = "exact";
  Json star = Json::array();
  for (const auto& v : N.vertices) star.push_back(v);
  j["star_vertices"] = star;
  return j;
}

Json classification_json(const Classification& c) {
  Json j;
  switch (c.verdict) {
    case Verdict::Bounded: j["verdict"] = "Bounded"; break;
    case Verdict::Unbounded: j["verdict"] = "Unbounded"; break;
    case Verdict::Unknown: j["verdict"] = "Unknown"; break;
  }
  if (!c.theorem.empty()) j["theorem"] = c.theorem;
  if (c.interval_qualified) j["qualifier"] = "interval";
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

namespace {

Json index_json_exact(const Rat& v, const std::string& provenance) {
  Json j;
  j["value"] = rat_str(v);
  j["provenance"] = provenance;
  return j;
}

Json regions_section(int n, const std::optional<Rat>& h, const std::optional<Rat>& g,
                     std::optional<int> oS, const std::optional<Rat>& eta,
                     std::vector<std::string>* warnings) {
  Json regions;
  if (h) {
    regions["B"] = region2_json(region_B(*h, n));
    if (*h < rat(1, n + 1)) {
      RegionFamily yfam = regions_Y(*h, n);
      regions["Y_family"] = family_json(yfam);
      regions["J"] = region2_json(slice_s0(yfam));
    } else {
      regions["Y34_family"] = family_json(regions_Y34(n));
    }
    regions["plane_Q"] = plane_json(plane_Q(*h), "Q");
  }
  if (eta) {
    regions["D"] = region2_json(region_D(*eta, n));
    regions["plane_Q_eta"] = plane_json(plane_Q(*eta), "Q'");
  }
  if (g) {
    regions["plane_P"] = plane_json(plane_P(*g), "P");
    if (oS) {
      const int m = std::max(*oS, 2);
      if (*g < rat(1, m)) {
        regions["Z_family"] = family_json(regions_Z(*g, *oS));
      } else if (warnings) {
        warnings->push_back(
            "Z family skipped: g >= 1/max(o(S),2) violates the theorem 1.6 hypothesis");
      }
    }
  }
  return regions;
}

}  // namespace

Json region_document(int n, const std::optional<Rat>& h, const std::optional<Rat>& g,
                     std::optional<int> oS, const std::optional<Rat>& eta) {
  Json doc;
  doc["n"] = n;
  if (h) doc["h"] = rat_str(*h);
  if (g) doc["g"] = rat_str(*g);
  if (oS) doc["o"] = *oS;
  if (eta) doc["eta"] = rat_str(*eta);
  std::vector<std::string> warnings;
  doc["regions"] = regions_section(n, h, g, oS, eta, &warnings);
  if (!warnings.empty()) doc["warnings"] = warnings;
  return doc;
}

AnalyzeResult analyze_surface(const MultiPoly& S, const PipelineOptions& opt) {
  validate_surface(S);
  AnalyzeResult res;
  res.S = S;
  res.N = newton_polyhedron(S);
  res.distance = newton_distance(res.N);
  res.o = oscillation_order(S, res.N);
  res.predicted = predicted_h(res.distance, res.o);

  Json j;
  j["input"] = {{"polynomial", S.str()}, {"n", S.dim}, {"total_degree", S.total_degree()}};
  j["newton"] = newton_json(res.N, res.distance);
  j["zero_order"] = zero_order_json(res.o);

  res.bundle.n = S.dim;
  res.bundle.o_value = res.o.value;
  res.bundle.o_exactness = res.o.exactness;
  res.bundle.phi_nonneg = opt.phi_nonneg;
  res.bundle.phi_positive_at_origin = opt.phi_positive_at_origin;

  Json indices;
  if (res.predicted) {
    indices["predicted_h"] = index_json_exact(*res.predicted, "exact");
    indices["predicted_h"]["licensed_by"] = "o(S) <= d(S), so g = h = 1/d(S)";
  } else {
    indices["predicted_h"] = nullptr;
    indices["predicted_h_note"] =
        res.o.exactness == Exactness::Exact
            ? "o(S) > d(S): the cited identity g = h = 1/d(S) does not apply"
            : "o(S) is only a numerical lower bound; the prediction is not licensed";
  }

  if (opt.run_fits) {
    try {
      res.h_fit = estimate_h(S, opt.radius_sweep, opt.sublevel);
      Json hs;
      Json per = Json::array();
      for (size_t i = 0; i < res.h_fit->radii.size(); ++i) {
        Json e;
        e["radius"] = res.h_fit->radii[i];
        e["fit"] = fit_json(res.h_fit->fits[i]);
        per.push_back(e);
      }
      hs["per_radius"] = per;
      hs["stabilized"] = res.h_fit->stabilized;
      hs["chosen"] = fit_json(res.h_fit->chosen);
      indices["h_fit"] = hs;
    } catch (const std::exception& e) {
      indices["h_fit"] = std::string("skipped: ") + e.what();
      res.warnings.push_back(std::string("sublevel h fit skipped: ") + e.what());
    }
    try {
      res.g_fit = estimate_g(S, res.N, opt.g_radius, opt.sublevel);
      indices["g_fit"] = fit_json(res.g_fit->fit);
    } catch (const std::exception& e) {
      indices["g_fit"] = std::string("skipped: ") + e.what();
      res.warnings.push_back(std::string("sublevel g fit skipped: ") + e.what());
    }
  } else {
    indices["h_fit"] = "skipped: fits disabled";
    indices["g_fit"] = "skipped: fits disabled";
  }

  // Bundle indices: exact values when licensed (or overridden), fitted
  // intervals otherwise. Interval verdicts are never definitive.
  if (opt.override_h)
    res.bundle.h = IndexValue::of(*opt.override_h);
  else if (res.predicted)
    res.bundle.h = IndexValue::of(*res.predicted);
  else if (res.h_fit)
    res.bundle.h = IndexValue::interval(res.h_fit->chosen.ci_lo, res.h_fit->chosen.ci_hi);
  if (opt.override_g)
    res.bundle.g = IndexValue::of(*opt.override_g);
  else if (res.predicted)
    res.bundle.g = IndexValue::of(*res.predicted);
  else if (res.g_fit)
    res.bundle.g = IndexValue::interval(res.g_fit->fit.ci_lo, res.g_fit->fit.ci_hi);
  if (opt.override_o) {
    res.bundle.o_value = *opt.override_o;
    res.bundle.o_exactness = Exactness::Exact;
  }
  j["indices"] = indices;

  if (opt.run_decay) {
    try {
      std::vector<double> dir(S.dim + 1, 0.0);
      dir.back() = 1.0;
      res.decay = decay_exponent(S, opt.cutoff, dir, opt.decay_j0, opt.decay_j1, opt.quad);
      j["decay"] = decay_json(*res.decay);
    } catch (const std::exception& e) {
      j["decay"] = std::string("skipped: ") + e.what();
      res.warnings.push_back(std::string("decay stage skipped: ") + e.what());
    }
  } else {
    j["decay"] = "skipped: decay disabled";
  }

  std::optional<Rat> region_h, region_g;
  if (res.bundle.h && res.bundle.h->exact) region_h = res.bundle.h->value;
  if (res.bundle.g && res.bundle.g->exact) region_g = res.bundle.g->value;
  std::optional<int> region_o;
  if (res.bundle.o_exactness == Exactness::Exact)
    region_o = res.bundle.o_value;
  j["regions"] = regions_section(S.dim, region_h, region_g, region_o, std::nullopt,
                                 &res.warnings);
  if (!region_h)
    j["regions"]["note"] =
        "exact regions need an exact h; rerun with fits and read the fitted interval, or "
        "pass --h";

  // Consistency notes between the exact prediction and the fits.
  if (res.predicted && res.h_fit) {
    const double pred = rat_double(*res.predicted);
    if (std::fabs(res.h_fit->chosen.h_est - pred) > 0.07)
      res.warnings.push_back("fitted h disagrees with the exact prediction by more than 0.07");
  }
  if (res.h_fit && res.g_fit &&
      res.h_fit->chosen.h_est > res.g_fit->fit.h_est + 0.07)
    res.warnings.push_back("fitted h exceeds fitted g by more than 0.07 (h <= g must hold)");

  j["warnings"] = res.warnings;
  res.json = std::move(j);
  return res;
}

PatchResult analyze_patches(const std::vector<MultiPoly>& patches,
                            const PipelineOptions& opt) {
  if (patches.empty()) throw input_error("at least one patch is required");
  PatchResult out;
  std::vector<IndexValue> hs;
  Json parr = Json::array();
  for (const auto& p : patches) {
    out.patches.push_back(analyze_surface(p, opt));
    const auto& b = out.patches.back().bundle;
    if (!b.h)
      throw hypothesis_error(
          "patch '" + p.str() +
          "' has no usable h (prediction unlicensed and fits disabled); rerun with fits");
    hs.push_back(*b.h);
    parr.push_back(out.patches.back().json);
  }
  out.eta = eta_combine(hs);
  Json j;
  j["patches"] = parr;
  Json ej;
  if (out.eta.exact) {
    ej["value"] = rat_str(out.eta.value);
    ej["provenance"] = "exact";
  } else {
    ej["interval"] = Json::array({rat_double(out.eta.lo), rat_double(out.eta.hi)});
    ej["provenance"] = "fitted";
  }
  j["eta"] = ej;
  const int n = patches[0].dim;
  if (out.eta.exact) {
    j["regions"] = Json{};
    j["regions"]["D"] = region2_json(region_D(out.eta.value, n));
    j["regions"]["plane_Q_eta"] = plane_json(plane_Q(out.eta.value), "Q'");
    if (out.eta.value < rat(1, n + 1))
      j["regions"]["Y_family_eta"] = family_json(regions_Y(out.eta.value, n));
    else
      j["regions"]["Y34_family"] = family_json(regions_Y34(n));
  }
  out.json = std::move(j);
  return out;
}

}  // namespace radon
