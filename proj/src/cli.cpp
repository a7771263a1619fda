#include "sphdist/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sphdist/errors.hpp"
#include "sphdist/moments.hpp"
#include "sphdist/montecarlo.hpp"
#include "sphdist/parallel.hpp"
#include "sphdist/polygon_dist.hpp"
#include "sphdist/seed_io.hpp"
#include "sphdist/tolerances.hpp"
#include "sphdist/tri_dist.hpp"

namespace sphdist {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Everything one command emits. CSV and JSON are two renderings of the same
// cells, so numeric payloads agree between formats.
struct Document {
  Json metadata;
  std::vector<std::string> diagnostics;
  std::vector<Table> tables;
  std::vector<std::pair<std::string, double>> footer;
  // Replaces the tabular JSON body when set (diagram export).
  std::optional<Json> json_body;
};

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
  } visitor;
  return std::visit(visitor, c);
}

Json json_cell(const Cell& c) {
  struct {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(double v) const { return v; }
    Json operator()(std::int64_t v) const { return v; }
    Json operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, c);
}

void write_csv(const Document& doc, std::ostream& os) {
  for (const auto& [key, value] : doc.metadata.items()) {
    os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (const auto& d : doc.diagnostics) os << "# diagnostic: " << d << '\n';
  for (const auto& t : doc.tables) {
    os << "# table: " << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
  }
  for (const auto& [key, value] : doc.footer) os << "# " << key << ": " << format_double(value) << '\n';
}

void write_json(const Document& doc, std::ostream& os) {
  Json j;
  j["metadata"] = doc.metadata;
  if (!doc.diagnostics.empty()) j["diagnostics"] = doc.diagnostics;
  if (doc.json_body) {
    for (const auto& [key, value] : doc.json_body->items()) j[key] = value;
  } else {
    for (const auto& t : doc.tables) {
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        Json r = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_cell(row[i]);
        rows.push_back(std::move(r));
      }
      j[t.name] = std::move(rows);
    }
  }
  for (const auto& [key, value] : doc.footer) j[key] = value;
  os << j.dump(2) << '\n';
}

struct Options {
  std::string seeds_path;
  std::string scenario;
  std::size_t m = 100;
  std::size_t upper_count = 75;
  double cap_height = 0.9;
  double radius = 1.0;
  std::uint64_t rng_seed = 12345;
  std::size_t samples = 10000;
  std::size_t reps = 100;
  std::size_t grid = 201;
  std::string format = "csv";
  std::string out = "-";
  unsigned threads = 0;  // 0 = all cores
  std::vector<double> triangle;
  int vertex = 0;
  std::vector<double> polygon;
  std::vector<double> pivot;
  std::vector<int> ks{1, 2, 3, 4};
  std::vector<int> cos_ks{2, 4, 6};
};

[[noreturn]] void invalid(const std::string& what) {
  throw GeometryError(ErrorKind::InvalidArgument, what);
}

std::vector<UnitVector> to_points(const std::vector<double>& xs, const char* flag) {
  if (xs.empty() || xs.size() % 3 != 0) {
    invalid(fmt::format("{} expects a multiple of 3 coordinates", flag));
  }
  std::vector<UnitVector> pts;
  for (std::size_t i = 0; i < xs.size(); i += 3) pts.emplace_back(xs[i], xs[i + 1], xs[i + 2]);
  return pts;
}

Json points_json(const std::vector<UnitVector>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back({p.x(), p.y(), p.z()});
  return a;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), sphere_(o.radius) {
    threads_ = o.threads == 0 ? default_threads() : o.threads;
    spec_.threads = threads_;
  }

  Document voronoi() {
    Document doc = header("voronoi");
    const SeedSet seeds = resolve_seeds(doc.metadata["config"]);
    const SphericalVoronoiDiagram d = build_diagram(seeds);

    Table cells{"cells", {"cell", "seed_x", "seed_y", "seed_z", "vertex_count", "area"}, {}};
    Table verts{"vertices", {"cell", "vertex", "x", "y", "z"}, {}};
    Json jseeds = points_json(seeds.seeds());
    Json jcells = Json::array();
    for (const auto& c : d.cells()) {
      const auto& s = seeds.seeds()[c.seed_index];
      const auto& ring = c.polygon.vertices();
      const auto idx = static_cast<std::int64_t>(c.seed_index);
      cells.rows.push_back({idx, s.x(), s.y(), s.z(), static_cast<std::int64_t>(ring.size()), c.area});
      for (std::size_t k = 0; k < ring.size(); ++k) {
        verts.rows.push_back({idx, static_cast<std::int64_t>(k), ring[k].x(), ring[k].y(), ring[k].z()});
      }
      jcells.push_back(Json{{"seed", idx}, {"area", c.area}, {"vertices", points_json(ring)}});
    }
    doc.tables = {std::move(cells), std::move(verts)};
    doc.json_body = Json{{"seeds", std::move(jseeds)}, {"cells", std::move(jcells)}};
    doc.footer.emplace_back("total_area", d.total_area());
    return doc;
  }

  Document distribution() {
    Document doc = header("distribution");
    const DistanceDistribution dist = resolve_distribution(doc.metadata["config"]);

    // Grid rows plus every breakpoint; coincident radii are merged and keep
    // the breakpoint mark.
    const double top = dist.support_max();
    std::vector<std::pair<double, bool>> radii;
    for (std::size_t i = 0; i < o_.grid; ++i) {
      radii.emplace_back(top * static_cast<double>(i) / static_cast<double>(o_.grid - 1), false);
    }
    radii.back().first = top;
    for (double b : dist.breakpoints()) radii.emplace_back(b, true);
    radii.emplace_back(top, true);
    std::sort(radii.begin(), radii.end());
    const double merge = Tolerances::breakpoint_merge * sphere_.radius();
    std::vector<std::pair<double, bool>> merged;
    for (const auto& [r, bp] : radii) {
      if (!merged.empty() && r - merged.back().first <= merge) {
        merged.back().second = merged.back().second || bp;
        if (bp) merged.back().first = r;
      } else {
        merged.emplace_back(r, bp);
      }
    }

    Table curve{"curve", {"r", "cdf", "pdf", "breakpoint"}, {}};
    for (const auto& [r, bp] : merged) {
      curve.rows.push_back({r, dist.cdf(r), dist.pdf(r), static_cast<std::int64_t>(bp)});
    }
    doc.tables.push_back(std::move(curve));
    return doc;
  }

  Document moments() {
    Document doc = header("moments");
    Json& config = doc.metadata["config"];
    config["k"] = o_.ks;
    config["cos"] = o_.cos_ks;
    config["nodes_per_panel"] = spec_.nodes_per_panel;
    for (int k : o_.ks) {
      if (k < 1) invalid("--k values must be >= 1");
    }
    for (int k : o_.cos_ks) {
      if (k < 1) invalid("--cos values must be >= 1");
    }
    const DistanceDistribution dist = resolve_distribution(config);
    const MomentReport rep = moment_report(dist, o_.ks, o_.cos_ks, spec_);

    Table t{"moments",
            {"quantity", "k", "method", "value", "closed_form", "quadrature", "doubling_change",
             "discrepancy"},
            {}};
    for (const auto& e : rep.distance) {
      t.rows.push_back({std::string("L^k"), std::int64_t{e.k}, std::string(to_string(e.method)), e.value,
                        std::monostate{}, e.value, e.doubling_change, std::monostate{}});
    }
    for (const auto& e : rep.cosine) {
      const bool closed = e.closed_form.has_value();
      t.rows.push_back({std::string("cos^k"), std::int64_t{e.k},
                        std::string(to_string(closed ? MomentMethod::ClosedForm : MomentMethod::Quadrature)),
                        closed ? *e.closed_form : e.quadrature,
                        closed ? Cell{*e.closed_form} : Cell{}, e.quadrature, e.doubling_change,
                        closed ? Cell{e.discrepancy} : Cell{}});
    }
    doc.tables.push_back(std::move(t));
    doc.diagnostics = rep.diagnostics;
    return doc;
  }

  Document table1() {
    Document doc = header("table1");
    Json& config = doc.metadata["config"];
    config["reps"] = o_.reps;
    config["samples"] = o_.samples;
    const RngStream rng(o_.rng_seed);
    const SeedSet seeds = resolve_seeds(config);
    const SphericalVoronoiDiagram d = build_diagram(seeds);
    const TableRow theory = theoretical_table_row(d, spec_);
    const AreReport rep = are_report(seeds, theory, o_.reps, o_.samples, rng, threads_);

    Table t{"table1", {"row"}, {}};
    for (const auto& name : table_column_names()) t.columns.push_back(name);
    auto add = [&](const char* label, const TableRow& values) {
      std::vector<Cell> row{std::string(label)};
      for (double v : values) row.emplace_back(v);
      t.rows.push_back(std::move(row));
    };
    add("Proposed Method", rep.theory);
    add("Mean MC", rep.mean_mc);
    add("Mean ARE", rep.mean_are);
    add("Max ARE", rep.max_are);
    add("STD ARE", rep.std_are);
    doc.tables.push_back(std::move(t));
    return doc;
  }

  Document simulate() {
    Document doc = header("simulate");
    doc.metadata["config"]["samples"] = o_.samples;
    const SeedSet seeds = resolve_seeds(doc.metadata["config"]);
    RngStream probes_rng = RngStream(o_.rng_seed).substream(1);
    const auto probes = sample_uniform_sphere(probes_rng, o_.samples);
    const auto dist = min_distances(seeds, probes);

    Table t{"samples", {"probe", "x", "y", "z", "nearest", "distance"}, {}};
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto& q = probes[i];
      t.rows.push_back({static_cast<std::int64_t>(i), q.x(), q.y(), q.z(),
                        static_cast<std::int64_t>(seeds.nearest(q)), dist[i]});
    }
    doc.tables.push_back(std::move(t));
    return doc;
  }

 private:
  Document header(const char* command) const {
    Document doc;
    doc.metadata["tool"] = "sphdist";
    doc.metadata["version"] = kToolVersion;
    doc.metadata["command"] = command;
    doc.metadata["rng_seed"] = o_.rng_seed;
    Json config;
    config["radius"] = o_.radius;
    config["format"] = o_.format;
    config["threads"] = threads_;
    doc.metadata["config"] = std::move(config);
    return doc;
  }

  SeedSet resolve_seeds(Json& config) const {
    if (!o_.seeds_path.empty() && !o_.scenario.empty()) invalid("pass only one of --seeds and --scenario");
    if (!o_.seeds_path.empty()) {
      config["seeds"] = o_.seeds_path;
      return SeedSet(read_seed_file(o_.seeds_path), sphere_);
    }
    if (!o_.scenario.empty()) {
      Scenario sc = Scenario::from_kind(parse_scenario_kind(o_.scenario));
      sc.m = o_.m;
      sc.upper_count = o_.upper_count;
      sc.cap_height = o_.cap_height;
      config["scenario"] = o_.scenario;
      config["m"] = sc.m;
      if (sc.kind == ScenarioKind::Sim2) config["upper_count"] = sc.upper_count;
      if (sc.kind == ScenarioKind::Sim3) config["cap_height"] = sc.cap_height;
      RngStream rng = RngStream(o_.rng_seed).substream(0);
      return generate_scenario(sc, rng, sphere_);
    }
    invalid("no seeds given: pass --seeds <file> or --scenario sim1|sim2|sim3");
  }

  DistanceDistribution resolve_distribution(Json& config) const {
    const int targets = !o_.triangle.empty() + !o_.polygon.empty();
    if (targets > 1) invalid("pass only one of --triangle and --polygon");
    if (!o_.triangle.empty()) {
      auto v = to_points(o_.triangle, "--triangle");
      if (v.size() != 3) invalid("--triangle expects exactly 9 coordinates");
      if (o_.vertex < 0 || o_.vertex > 2) invalid("--vertex must be 0, 1 or 2");
      std::rotate(v.begin(), v.begin() + o_.vertex, v.end());
      config["target"] = "triangle";
      config["triangle"] = o_.triangle;
      config["vertex"] = o_.vertex;
      return DistanceDistribution(CanonicalTriangle::from(SphericalTriangle(v[0], v[1], v[2], sphere_)));
    }
    if (!o_.polygon.empty()) {
      const auto ring = to_points(o_.polygon, "--polygon");
      std::vector<double> pivot_xyz = o_.pivot;
      if (pivot_xyz.empty()) {
        // Default pivot: normalized vertex centroid, interior for any convex ring.
        pivot_xyz.assign(3, 0.0);
        for (std::size_t i = 0; i < o_.polygon.size(); ++i) pivot_xyz[i % 3] += o_.polygon[i];
      }
      const auto pivot = to_points(pivot_xyz, "--pivot");
      if (pivot.size() != 1) invalid("--pivot expects exactly 3 coordinates");
      config["target"] = "polygon";
      config["polygon"] = o_.polygon;
      config["pivot"] = pivot_xyz;
      return decompose(ConvexSphericalPolygon(ring, pivot[0], sphere_)).distribution();
    }
    config["target"] = "seeds";
    return build_diagram(resolve_seeds(config)).distribution();
  }

  const Options& o_;
  Sphere sphere_;
  unsigned threads_;
  QuadratureSpec spec_;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seeds", o.seeds_path, "Seed file (x y z per line, or lat lon after '# format: latlon')");
  cmd->add_option("--scenario", o.scenario, "Generated seed scenario")
      ->check(CLI::IsMember({"sim1", "sim2", "sim3"}));
  cmd->add_option("--m", o.m, "Seed count for generated scenarios")->capture_default_str();
  cmd->add_option("--upper-count", o.upper_count, "sim2: seeds folded into the upper hemisphere")
      ->capture_default_str();
  cmd->add_option("--cap-height", o.cap_height, "sim3: seeds satisfy |z| >= this value")
      ->capture_default_str();
  cmd->add_option("--radius", o.radius, "Sphere radius")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--rng-seed", o.rng_seed, "Master random seed")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

void add_target(CLI::App* cmd, Options& o) {
  cmd->add_option("--triangle", o.triangle, "Triangle vertices as 9 numbers x y z x y z x y z")
      ->expected(9)
      ->allow_extra_args(false);
  cmd->add_option("--vertex", o.vertex, "Index of the triangle vertex distances are measured from")
      ->check(CLI::Range(0, 2));
  cmd->add_option("--polygon", o.polygon, "Convex polygon vertices as x y z triples")
      ->expected(9, 3 * 1024);
  cmd->add_option("--pivot", o.pivot, "Interior polygon point x y z (default: vertex centroid)")->expected(3);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact distance distributions and moments on the sphere", "sphdist"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* voronoi = app.add_subcommand("voronoi", "Spherical Voronoi diagram of a seed set");
  auto* distribution = app.add_subcommand("distribution", "CDF/PDF curve of a distance");
  auto* moments = app.add_subcommand("moments", "Distance and cosine moments");
  auto* table1 = app.add_subcommand("table1", "Moment table with Monte Carlo ARE columns");
  auto* simulate = app.add_subcommand("simulate", "Raw Monte Carlo minimum-distance samples");
  for (auto* cmd : {voronoi, distribution, moments, table1, simulate}) add_common(cmd, o);
  add_target(distribution, o);
  add_target(moments, o);
  distribution->add_option("--grid", o.grid, "Grid points")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
  moments->add_option("--k", o.ks, "Distance moment orders")->delimiter(',');
  moments->add_option("--cos", o.cos_ks, "Cosine moment orders")->delimiter(',');
  for (auto* cmd : {table1, simulate}) {
    cmd->add_option("--samples", o.samples, "Probe points per repetition")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  table1->add_option("--reps", o.reps, "Repetitions")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    Runner runner(o);
    Document doc;
    if (*voronoi) doc = runner.voronoi();
    if (*distribution) doc = runner.distribution();
    if (*moments) doc = runner.moments();
    if (*table1) doc = runner.table1();
    if (*simulate) doc = runner.simulate();

    std::ostringstream buf;
    if (o.format == "json") {
      write_json(doc, buf);
    } else {
      write_csv(doc, buf);
    }
    if (o.out == "-") {
      out << buf.str();
    } else {
      std::ofstream file(o.out);
      if (!file) throw IoError("cannot open output file '" + o.out + "'");
      file << buf.str();
      if (!file.flush()) throw IoError("failed writing output file '" + o.out + "'");
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace sphdist
