#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radon/multipoly.hpp"
#include "radon/newton.hpp"
#include "radon/oscillatory.hpp"
#include "radon/regions.hpp"
#include "radon/sublevel.hpp"
#include "radon/zero_order.hpp"

namespace radon {

using Json = nlohmann::ordered_json;

struct PipelineOptions {
  bool run_fits = false;
  bool run_decay = false;
  SublevelOptions sublevel;
  QuadOptions quad;
  std::vector<double> radius_sweep = {0.5, 0.25, 0.125};
  double g_radius = 0.5;
  int decay_j0 = 4, decay_j1 = 14;
  CutoffSpec cutoff;
  bool phi_nonneg = true;
  bool phi_positive_at_origin = true;
  /// Optional user-supplied exact indices overriding the pipeline values
  /// (tagged "user-supplied" in the report).
  std::optional<Rat> override_h, override_g;
  std::optional<int> override_o;
};

/// The full analysis of one surface: newton -> zero order -> predicted h ->
/// optional sublevel/decay fits -> regions. Numerical stages that fail
/// leave an explicit "skipped" marker in the report instead of aborting
/// the pipeline.
struct AnalyzeResult {
  MultiPoly S;
  NewtonPolyhedron N;
  Rat distance;
  ZeroOrderResult o;
  std::optional<Rat> predicted;
  std::optional<HEstimate> h_fit;
  std::optional<GEstimate> g_fit;
  std::optional<DecayFit> decay;
  IndexBundle bundle;
  std::vector<std::string> warnings;
  Json json;
};

AnalyzeResult analyze_surface(const MultiPoly& S, const PipelineOptions& opt);

/// eta from a finite list of graph patches (each analyzed like a surface);
/// the D region and plane Q' are built from the combined index.
struct PatchResult {
  std::vector<AnalyzeResult> patches;
  IndexValue eta;
  Json json;
};
PatchResult analyze_patches(const std::vector<MultiPoly>& patches,
                            const PipelineOptions& opt);

// JSON pieces (all rationals serialized as exact "num/den" strings).
Json rat_json(const Rat& r);
Json point3_json(const Point3& p);
Json region2_json(const Region2& r);
Json family_json(const RegionFamily& f);
Json plane_json(const Plane3& p, const std::string& name);
Json fit_json(const GrowthFit& f);
Json curve_json(const SublevelCurve& c);
Json decay_json(const DecayFit& f);
Json zero_order_json(const ZeroOrderResult& o);
Json newton_json(const NewtonPolyhedron& N, const Rat& distance);
Json classification_json(const Classification& c);

/// Region document for `radonlab region`: every region licensed by the
/// given exact indices, with theorem tags and containing planes.
Json region_document(int n, const std::optional<Rat>& h, const std::optional<Rat>& g,
                     std::optional<int> oS, const std::optional<Rat>& eta);

}  // namespace radon
