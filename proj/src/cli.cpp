// Copyright 2026 The ctxgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctxgeo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ctxgeo/analysis.hpp"
#include "ctxgeo/geometry.hpp"
#include "ctxgeo/json_io.hpp"
#include "ctxgeo/search.hpp"

namespace ctxgeo {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool json = false;
  int threads = 1;
  std::optional<std::uint64_t> seed;
};

const char* verdict_words(Verdict v) {
  return v == Verdict::Forced ? "not contextual" : "potentially contextual";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

std::string contexts_text(const TwoContextGeometry& g) {
  std::ostringstream s;
  for (int c = 0; c < g.num_contexts(); ++c) s << (c ? " " : "") << "{" << join(g.context(c)) << "}";
  return s.str();
}

std::string validation_text(const ValidationReport& r) {
  std::ostringstream s;
  for (const auto& v : r.violations) s << "  " << to_string(v.kind) << ": " << v.message << "\n";
  return s.str();
}

const std::map<std::string, std::string>& known_geometries() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const auto& name : catalog_names()) {
      if (name == "mermin-peres-square") continue;  // same geometry as "grid"
      t.emplace(canonical_form(catalog(name).geometry), name);
    }
    return t;
  }();
  return table;
}

struct LoadedGeometry {
  TwoContextGeometry geometry;
  std::optional<std::map<int, std::string>> labeling;
};

LoadedGeometry load_geometry(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) {
    try {
      auto e = catalog(ref.substr(8));
      return {e.geometry, e.labeling};
    } catch (const std::out_of_range& ex) {
      throw UsageError(ex.what());
    }
  }
  Json j;
  GeometryData data;
  try {
    j = read_json_file(ref);
    data = geometry_from_json(j);
  } catch (const JsonFormatError& e) {
    throw UsageError(e.what());
  }
  auto report = validate(data);
  if (!report.ok()) throw UsageError(ref + ": invalid geometry\n" + validation_text(report));
  LoadedGeometry out{TwoContextGeometry::make(std::move(data)), std::nullopt};
  if (j.contains("labeling")) out.labeling = labeling_strings_from_json(j);
  return out;
}

Json analysis_json(const TwoContextGeometry& g, const ParityVerdict& v, std::optional<bool> planar) {
  Json j;
  j["points"] = g.num_points();
  j["contexts"] = g.num_contexts();
  j["context_size"] = g.context_size();
  std::string canon = g.num_contexts() <= kMaxCanonicalContexts ? canonical_form(g) : std::string();
  if (!canon.empty()) {
    j["canonical_form"] = to_hex(canon);
    std::string name = identify_geometry(canon);
    j["name"] = name.empty() ? Json(nullptr) : Json(name);
  }
  Json verdict = verdict_to_json(v);
  for (auto& [k, val] : verdict.items()) j[k] = val;
  if (planar) {
    j["planar"] = *planar;
    j["oracles_agree"] = (v.verdict == Verdict::Contingent) == !*planar;
  } else {
    j["planar"] = nullptr;
    j["oracles_agree"] = nullptr;
  }
  return j;
}

void print_analysis_text(std::ostream& out, const Json& a) {
  out << "geometry: " << a["points"].get<int>() << " points, " << a["contexts"].get<int>() << " contexts of "
      << a["context_size"].get<int>() << "\n";
  if (a.contains("name") && !a["name"].is_null()) out << "identified as: " << a["name"].get<std::string>() << "\n";
  Verdict v = a["verdict"] == "forced" ? Verdict::Forced : Verdict::Contingent;
  out << "verdict: " << a["verdict"].get<std::string>() << " (" << verdict_words(v) << ")\n";
  const auto& cert = a["certificate"];
  if (v == Verdict::Forced) {
    out << "certificate: parity functional is the sum of " << cert["relations"].size() << " context relations\n";
  } else {
    out << "certificate: odd-parity Gram assignment with " << cert["anticommuting_pairs"].size()
        << " anticommuting pairs\n";
  }
  if (a["planar"].is_null()) {
    out << "dual multigraph: planarity not computed (too many contexts)\n";
  } else {
    out << "dual multigraph: " << (a["planar"].get<bool>() ? "planar" : "non-planar") << "\n";
    out << "oracles agree: " << (a["oracles_agree"].get<bool>() ? "yes" : "no") << "\n";
  }
}

std::optional<bool> planarity_if_supported(const TwoContextGeometry& g) {
  if (g.num_contexts() > kMaxPlanarVertices) return std::nullopt;
  return is_planar(dual_multigraph(g));
}

int cmd_enumerate(const GlobalOptions& opt, int l, int p, bool matrices, std::ostream& out) {
  if (l < 2 || p < 3) throw UsageError("enumerate needs l >= 2 and p >= 3");
  if (l > kMaxCanonicalContexts) {
    throw UsageError("enumerate supports at most " + std::to_string(kMaxCanonicalContexts) + " contexts");
  }
  auto mats = enumerate_configuration_matrices(l, p);
  Json j;
  j["l"] = l;
  j["p"] = p;
  j["count"] = mats.size();
  Json list = Json::array();
  for (const auto& m : mats) {
    auto g = geometry_from_matrix(m);
    Json e = geometry_to_json(g);
    std::string canon = canonical_form(m);
    e["canonical_form"] = to_hex(canon);
    std::string name = identify_geometry(canon);
    e["name"] = name.empty() ? Json(nullptr) : Json(name);
    if (matrices) e["matrix"] = matrix_to_json(m);
    list.push_back(e);
  }
  j["geometries"] = list;
  if (opt.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "(" << l << "," << p << "): " << mats.size() << " geometr" << (mats.size() == 1 ? "y" : "ies")
      << " up to isomorphism\n";
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto& e = list[i];
    out << "#" << i + 1 << " points " << e["points"].get<int>() << " canonical " << e["canonical_form"].get<std::string>();
    if (!e["name"].is_null()) out << " (" << e["name"].get<std::string>() << ")";
    out << "\n  contexts: " << contexts_text(geometry_from_matrix(mats[i])) << "\n";
    if (matrices) {
      for (int r = 0; r < mats[i].size(); ++r) {
        out << "   ";
        for (int c = 0; c < mats[i].size(); ++c) out << " " << mats[i].at(r, c);
        out << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opt, const std::string& geometry_ref, const std::string& labeling_path,
               bool no_require_odd, bool allow_duplicates, std::ostream& out) {
  LoadedGeometry loaded = load_geometry(geometry_ref);
  std::map<int, std::string> strings;
  if (!labeling_path.empty()) {
    try {
      strings = labeling_strings_from_json(read_json_file(labeling_path));
    } catch (const JsonFormatError& e) {
      throw UsageError(e.what());
    }
  } else if (loaded.labeling) {
    strings = *loaded.labeling;
  } else {
    throw UsageError("no labeling given and the geometry file carries none");
  }
  Labeling lab;
  try {
    lab = parse_labeling(strings);
  } catch (const PauliParseError& e) {
    throw UsageError(std::string("bad observable: ") + e.what());
  }
  VerificationReport rep;
  try {
    rep = verify_labeling(loaded.geometry, lab, VerifyOptions{!allow_duplicates});
  } catch (const LabelingMismatch& e) {
    throw UsageError(e.what());
  }
  bool success = no_require_odd ? (rep.postulates.first_four() && (rep.distinct_labels || allow_duplicates))
                                : rep.is_contextual;
  if (opt.json) {
    Json j = report_to_json(rep);
    j["success"] = success;
    out << j.dump(2) << "\n";
  } else {
    const auto& g = loaded.geometry;
    for (int c = 0; c < g.num_contexts(); ++c) {
      out << "context " << c << " {";
      for (std::size_t k = 0; k < g.context(c).size(); ++k)
        out << (k ? " " : "") << format_observable(lab.at(g.context(c)[k]));
      int s = rep.per_context_sign[c];
      out << "}: " << (s > 0 ? "+Id" : s < 0 ? "-Id" : "undefined") << "\n";
    }
    auto pf = [](bool b) { return b ? "pass" : "fail"; };
    out << "negative contexts: " << rep.negative_count << " [" << join(rep.negative_contexts()) << "]\n";
    out << "postulates: 1' " << pf(rep.postulates.commuting_contexts) << ", 2 " << pf(rep.postulates.observables)
        << ", 3' " << pf(rep.postulates.two_contexts) << ", 4 " << pf(rep.postulates.identity_products) << ", 5 "
        << pf(rep.postulates.odd_negative) << "\n";
    out << "distinct labels: " << pf(rep.distinct_labels) << "\n";
    for (const auto& f : rep.failures) out << "failure: " << f << "\n";
    out << "verdict: " << (rep.is_contextual ? "contextual" : "not contextual") << "\n";
  }
  return success ? kExitOk : kExitDomainFailure;
}

int cmd_analyze(const GlobalOptions& opt, const std::string& geometry_ref, std::ostream& out) {
  LoadedGeometry loaded = load_geometry(geometry_ref);
  auto verdict = parity_analysis(loaded.geometry);
  auto planar = planarity_if_supported(loaded.geometry);
  Json a = analysis_json(loaded.geometry, verdict, planar);
  if (opt.json) {
    out << a.dump(2) << "\n";
  } else {
    print_analysis_text(out, a);
  }
  bool disagree = planar && !a["oracles_agree"].get<bool>();
  return disagree ? kExitDomainFailure : kExitOk;
}

struct SearchFlags {
  int qubits = 2;
  std::size_t max_solutions = 1;
  double budget = 60.0;
  bool allow_non_contextual = false;
  bool no_symmetry = false;
  bool allow_duplicates = false;
  std::string checkpoint;
  std::uint64_t progress_every = 1u << 22;
};

void write_checkpoint(const std::string& path, const SearchProgress& p, bool final_state) {
  Json j;
  j["nodes_explored"] = p.nodes_explored;
  j["depth"] = p.depth;
  j["solutions"] = p.solutions;
  j["elapsed_seconds"] = p.elapsed_seconds;
  j["final"] = final_state;
  std::ofstream f(path, std::ios::trunc);
  f << j.dump(2) << "\n";
}

int cmd_search(const GlobalOptions& opt, const std::string& geometry_ref, const SearchFlags& flags, std::ostream& out,
               std::ostream& err) {
  LoadedGeometry loaded = load_geometry(geometry_ref);
  if (flags.qubits < 1 || flags.qubits > kMaxSearchQubits) {
    throw UsageError("--qubits must be in 1.." + std::to_string(kMaxSearchQubits));
  }
  if (flags.max_solutions < 1) throw UsageError("--max-solutions must be at least 1");
  if (flags.budget <= 0) throw UsageError("--budget must be positive");

  SearchConfig cfg;
  cfg.n_qubits = flags.qubits;
  cfg.max_solutions = flags.max_solutions;
  cfg.require_contextual = !flags.allow_non_contextual;
  cfg.time_budget = std::chrono::duration<double>(flags.budget);
  cfg.seed = opt.seed;
  cfg.symmetry_reduction = !flags.no_symmetry;
  cfg.allow_duplicates = flags.allow_duplicates;
  cfg.threads = opt.threads;
  cfg.progress_interval = std::max<std::uint64_t>(1, flags.progress_every);
  cfg.on_progress = [&](const SearchProgress& p) {
    err << "progress: nodes " << p.nodes_explored << " depth " << p.depth << " solutions " << p.solutions
        << " elapsed " << std::fixed << std::setprecision(1) << p.elapsed_seconds << "s\n";
    err.unsetf(std::ios::floatfield);
    if (!flags.checkpoint.empty()) write_checkpoint(flags.checkpoint, p, false);
  };

  auto t0 = std::chrono::steady_clock::now();
  RealizationResult res = find_realization(loaded.geometry, cfg);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "search finished: nodes " << res.nodes_explored << " solutions " << res.solutions.size() << " exhausted "
      << (res.exhausted ? "yes" : "no") << "\n";
  if (!flags.checkpoint.empty()) {
    write_checkpoint(flags.checkpoint, SearchProgress{res.nodes_explored, 0, res.solutions.size(), elapsed}, true);
  }

  Json j;
  j["n_qubits"] = flags.qubits;
  j["require_contextual"] = cfg.require_contextual;
  j["nodes_explored"] = res.nodes_explored;
  j["exhausted"] = res.exhausted;
  j["timed_out"] = res.timed_out;
  Json sols = Json::array();
  for (const auto& lab : res.solutions) {
    auto rep = verify_labeling(loaded.geometry, lab, VerifyOptions{!flags.allow_duplicates});
    sols.push_back({{"labeling", labeling_to_json(lab)},
                    {"negative_count", rep.negative_count},
                    {"negative_contexts", rep.negative_contexts()},
                    {"is_contextual", rep.is_contextual}});
  }
  j["solutions"] = sols;
  if (opt.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "search at " << flags.qubits << " qubits: " << res.solutions.size() << " solution(s), nodes "
        << res.nodes_explored << ", exhausted " << (res.exhausted ? "yes" : "no") << ", timed out "
        << (res.timed_out ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < sols.size(); ++i) {
      out << "solution " << i + 1 << ":";
      for (const auto& [pt, op] : sols[i]["labeling"].items()) out << " " << pt << "=" << op.get<std::string>();
      out << " | negative contexts [" << join(sols[i]["negative_contexts"].get<std::vector<int>>()) << "] "
          << (sols[i]["is_contextual"].get<bool>() ? "contextual" : "not contextual") << "\n";
    }
  }
  return res.solutions.empty() ? kExitDomainFailure : kExitOk;
}

int cmd_census(const GlobalOptions& opt, int max_points, std::ostream& out) {
  if (max_points < 1 || max_points > kMaxCensusPoints) {
    throw UsageError("census supports 1.." + std::to_string(kMaxCensusPoints) + " points");
  }
  auto entries = contextuality_census(max_points, opt.threads);
  Json list = Json::array();
  Json contingent = Json::array();
  bool all_agree = true;
  for (const auto& e : entries) {
    std::string canon = canonical_form(e.geometry);
    std::string name = identify_geometry(canon);
    bool agree = (e.verdict.verdict == Verdict::Contingent) == !e.planar;
    all_agree = all_agree && agree;
    Json row;
    row["points"] = e.params.points();
    row["l"] = e.params.contexts;
    row["p"] = e.params.context_size;
    row["canonical_form"] = to_hex(canon);
    row["name"] = name.empty() ? Json(nullptr) : Json(name);
    row["verdict"] = to_string(e.verdict.verdict);
    row["planar"] = e.planar;
    row["oracles_agree"] = agree;
    row["contexts"] = e.geometry.contexts();
    if (e.verdict.verdict == Verdict::Contingent) {
      contingent.push_back({{"points", e.params.points()},
                            {"l", e.params.contexts},
                            {"p", e.params.context_size},
                            {"name", row["name"]},
                            {"canonical_form", row["canonical_form"]}});
    }
    list.push_back(row);
  }
  Json j;
  j["max_points"] = max_points;
  j["total"] = entries.size();
  j["entries"] = list;
  j["contingent"] = contingent;
  j["oracles_agree"] = all_agree;
  if (opt.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "census of 2-context-geometries with at most " << max_points << " points: " << entries.size()
        << " geometries\n";
    for (const auto& row : list) {
      out << std::setw(3) << row["points"].get<int>() << " pts (" << row["l"].get<int>() << ","
          << row["p"].get<int>() << ") " << std::left << std::setw(11) << row["verdict"].get<std::string>()
          << std::setw(11) << (row["planar"].get<bool>() ? "planar" : "non-planar") << std::right
          << (row["oracles_agree"].get<bool>() ? "agree" : "DISAGREE") << " "
          << row["canonical_form"].get<std::string>();
      if (!row["name"].is_null()) out << " " << row["name"].get<std::string>();
      out << "\n";
    }
    out << "contingent (potentially contextual):";
    if (contingent.empty()) out << " none";
    for (std::size_t i = 0; i < contingent.size(); ++i) {
      const auto& c = contingent[i];
      out << (i ? "," : "") << " "
          << (c["name"].is_null() ? "(" + std::to_string(c["l"].get<int>()) + "," +
                                        std::to_string(c["p"].get<int>()) + ")#" + c["canonical_form"].get<std::string>()
                                  : c["name"].get<std::string>())
          << " (" << c["points"].get<int>() << " points)";
    }
    out << "\n";
    out << "oracles agree: " << (all_agree ? "yes" : "no") << "\n";
  }
  return all_agree ? kExitOk : kExitDomainFailure;
}

int cmd_catalog(const GlobalOptions& opt, const std::string& name, std::ostream& out) {
  if (name.empty()) {
    Json list = Json::array();
    for (const auto& n : catalog_names()) {
      auto e = catalog(n);
      list.push_back({{"name", n},
                      {"points", e.geometry.num_points()},
                      {"contexts", e.geometry.num_contexts()},
                      {"context_size", e.geometry.context_size()},
                      {"labeled", e.labeling.has_value()},
                      {"provenance", e.provenance}});
    }
    if (opt.json) {
      out << list.dump(2) << "\n";
    } else {
      for (const auto& e : list) {
        out << std::left << std::setw(20) << e["name"].get<std::string>() << std::right << " (" << e["contexts"].get<int>()
            << "," << e["context_size"].get<int>() << ") " << std::setw(2) << e["points"].get<int>() << " points"
            << (e["labeled"].get<bool>() ? ", labeled" : "") << ": " << e["provenance"].get<std::string>() << "\n";
      }
    }
    return kExitOk;
  }
  CatalogEntry e = [&] {
    try {
      return catalog(name);
    } catch (const std::out_of_range& ex) {
      throw UsageError(ex.what());
    }
  }();
  out << catalog_entry_to_json(e).dump(opt.json ? 2 : -1) << "\n";
  return kExitOk;
}

int cmd_stargon(const GlobalOptions& opt, int p, int q, std::ostream& out) {
  StarPolygon sp = [&] {
    try {
      return star_polygon(p, q);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  auto verdict = parity_analysis(sp.geometry);
  auto planar = planarity_if_supported(sp.geometry);
  Json a = analysis_json(sp.geometry, verdict, planar);
  Json g = geometry_to_json(sp.geometry);
  if (opt.json) {
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["geometry"] = g;
    j["along_chord"] = sp.along_chord;
    j["analysis"] = a;
    out << j.dump(2) << "\n";
  } else {
    out << "{" << p << "/" << q << "} star polygon\n";
    out << g.dump() << "\n";
    print_analysis_text(out, a);
  }
  bool disagree = planar && !a["oracles_agree"].get<bool>();
  return disagree ? kExitDomainFailure : kExitOk;
}

}  // namespace

std::string identify_geometry(const std::string& canonical) {
  const auto& table = known_geometries();
  auto it = table.find(canonical);
  return it == table.end() ? std::string() : it->second;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kochen-Specker 2-context-geometries: enumerate, analyze, verify and search", "ctxgeo"};
  app.require_subcommand(1);
  GlobalOptions opt;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Randomize search branch order with this seed");
  app.add_flag("--json", opt.json, "Emit a single JSON document on standard output");
  app.add_option("--threads", opt.threads, "Worker threads for search and census")->check(CLI::Range(1, 256));

  int l = 0, p = 0, q = 0, max_points = 0;
  bool matrices = false, no_require_odd = false, allow_dup_verify = false;
  std::string geometry_ref, labeling_path, catalog_name;
  SearchFlags sflags;

  auto* enumerate = app.add_subcommand("enumerate", "List (l,p)-2-context-geometries up to isomorphism");
  enumerate->add_option("l", l, "Number of contexts")->required();
  enumerate->add_option("p", p, "Points per context")->required();
  enumerate->add_flag("--matrices", matrices, "Print configuration matrices");

  auto* verify = app.add_subcommand("verify", "Check a labeling against the contextuality postulates");
  verify->add_option("geometry", geometry_ref, "Geometry JSON file or catalog:<name>")->required();
  verify->add_option("labeling", labeling_path, "Labeling JSON file (default: labeling inside the geometry)");
  verify->add_flag("--no-require-odd", no_require_odd, "Succeed when postulates 1'-4 hold, ignoring parity");
  verify->add_flag("--allow-duplicates", allow_dup_verify, "Do not require pairwise distinct labels");

  auto* analyze = app.add_subcommand("analyze", "Parity verdict and dual-graph planarity of a geometry");
  analyze->add_option("geometry", geometry_ref, "Geometry JSON file or catalog:<name>")->required();

  auto* search = app.add_subcommand("search", "Search for explicit multi-qubit Pauli labelings");
  search->add_option("geometry", geometry_ref, "Geometry JSON file or catalog:<name>")->required();
  search->add_option("--qubits", sflags.qubits, "Number of qubits")->required();
  search->add_option("--max-solutions", sflags.max_solutions, "Stop after this many solutions");
  search->add_option("--budget", sflags.budget, "Time budget in seconds");
  search->add_flag("--allow-non-contextual", sflags.allow_non_contextual, "Accept labelings with even parity");
  search->add_flag("--no-symmetry", sflags.no_symmetry, "Do not fix the first context canonically");
  search->add_flag("--allow-duplicates", sflags.allow_duplicates, "Allow repeated operators");
  search->add_option("--checkpoint", sflags.checkpoint, "Write search counters to this JSON file");
  search->add_option("--progress-every", sflags.progress_every, "Nodes between progress lines");

  auto* census = app.add_subcommand("census", "Verdicts for every geometry up to a point count");
  census->add_option("max_points", max_points, "Largest number of points")->required();

  auto* cat = app.add_subcommand("catalog", "List catalog entries or emit one as JSON");
  cat->add_option("name", catalog_name, "Entry name");

  auto* stargon = app.add_subcommand("stargon", "Build the {p/q} star-polygon geometry and analyze it");
  stargon->add_option("p", p, "Vertices")->required();
  stargon->add_option("q", q, "Step")->required();

  for (auto* sub : {enumerate, verify, analyze, search, census, cat, stargon}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (seed_opt->count() > 0) opt.seed = seed;

  try {
    if (*enumerate) return cmd_enumerate(opt, l, p, matrices, out);
    if (*verify) return cmd_verify(opt, geometry_ref, labeling_path, no_require_odd, allow_dup_verify, out);
    if (*analyze) return cmd_analyze(opt, geometry_ref, out);
    if (*search) return cmd_search(opt, geometry_ref, sflags, out, err);
    if (*census) return cmd_census(opt, max_points, out);
    if (*cat) return cmd_catalog(opt, catalog_name, out);
    if (*stargon) return cmd_stargon(opt, p, q, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ctxgeo
