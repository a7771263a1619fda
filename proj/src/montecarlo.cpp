#include "sphdist/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "sphdist/errors.hpp"
#include "sphdist/parallel.hpp"

namespace sphdist {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double RngStream::uniform() {
  // 53 random bits mapped to [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(splitmix64(seed_ ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

UnitVector sample_uniform_sphere(RngStream& rng) {
  for (;;) {
    const double u = rng.uniform(-1.0, 1.0);
    const double v = rng.uniform(-1.0, 1.0);
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = 2.0 * std::sqrt(1.0 - s);
    return UnitVector(u * f, v * f, 1.0 - 2.0 * s);
  }
}

std::vector<UnitVector> sample_uniform_sphere(RngStream& rng, std::size_t n) {
  std::vector<UnitVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_uniform_sphere(rng));
  return out;
}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Sim1: return "sim1";
    case ScenarioKind::Sim2: return "sim2";
    case ScenarioKind::Sim3: return "sim3";
    case ScenarioKind::Custom: return "custom";
  }
  return "custom";
}

ScenarioKind parse_scenario_kind(const std::string& name) {
  if (name == "sim1") return ScenarioKind::Sim1;
  if (name == "sim2") return ScenarioKind::Sim2;
  if (name == "sim3") return ScenarioKind::Sim3;
  if (name == "custom") return ScenarioKind::Custom;
  throw GeometryError(ErrorKind::InvalidArgument, "unknown scenario '" + name + "'");
}

Scenario Scenario::from_kind(ScenarioKind kind) {
  Scenario s;
  s.kind = kind;
  return s;
}

void Scenario::validate() const {
  if (m < 4) throw GeometryError(ErrorKind::InvalidArgument, "scenario needs at least 4 seeds");
  if (kind == ScenarioKind::Sim2 && upper_count > m) {
    throw GeometryError(ErrorKind::InvalidArgument, "upper hemisphere count exceeds m");
  }
  if (kind == ScenarioKind::Sim3 && !(cap_height > 0.0 && cap_height < 1.0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "cap height must lie in (0, 1)");
  }
}

SeedSet generate_scenario(const Scenario& scenario, RngStream& rng, Sphere sphere) {
  scenario.validate();
  std::vector<UnitVector> seeds;
  seeds.reserve(scenario.m);
  switch (scenario.kind) {
    case ScenarioKind::Sim1:
      seeds = sample_uniform_sphere(rng, scenario.m);
      break;
    case ScenarioKind::Sim2:
      // Reflection through the xy-plane folds uniform points onto a hemisphere.
      for (std::size_t i = 0; i < scenario.m; ++i) {
        const UnitVector q = sample_uniform_sphere(rng);
        const double z = i < scenario.upper_count ? std::abs(q.z()) : -std::abs(q.z());
        seeds.emplace_back(q.x(), q.y(), z);
      }
      break;
    case ScenarioKind::Sim3: {
      const std::size_t north = scenario.m / 2;
      for (std::size_t i = 0; i < scenario.m; ++i) {
        for (;;) {
          const UnitVector q = sample_uniform_sphere(rng);
          const bool accept = i < north ? q.z() >= scenario.cap_height : q.z() <= -scenario.cap_height;
          if (accept) {
            seeds.push_back(q);
            break;
          }
        }
      }
      break;
    }
    case ScenarioKind::Custom:
      throw GeometryError(ErrorKind::InvalidArgument, "custom scenarios take explicit seeds");
  }
  return SeedSet(std::move(seeds), sphere);
}

bool triangle_contains(const CanonicalTriangle& t, const UnitVector& q) {
  const Vec3& p = t.p().vec();
  const Vec3& b = t.b().vec();
  const Vec3& c = t.c().vec();
  const double s = triple(p, b, c) > 0.0 ? 1.0 : -1.0;
  return s * triple(p, b, q.vec()) >= 0.0 && s * triple(b, c, q.vec()) >= 0.0 &&
         s * triple(c, p, q.vec()) >= 0.0;
}

TriangleSample sample_uniform_in_triangle(const CanonicalTriangle& t, RngStream& rng,
                                          std::size_t n, TriangleProposal proposal) {
  TriangleSample out;
  out.points.reserve(n);

  const UnitVector center(t.p().vec() + t.b().vec() + t.c().vec());
  const double radius = std::max({central_angle(center, t.p()), central_angle(center, t.b()),
                                  central_angle(center, t.c())});
  // A cap is geodesically convex only up to a hemisphere.
  const bool use_cap = proposal == TriangleProposal::BoundingCap && radius < 0.5 * std::numbers::pi;
  const double one_minus_cos = use_cap ? 2.0 * std::pow(std::sin(0.5 * radius), 2) : 2.0;
  Vec3 ref = std::abs(center.x()) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = (ref - center.vec() * ref.dot(center.vec())) /
                  (ref - center.vec() * ref.dot(center.vec())).norm();
  const Vec3 e2 = center.vec().cross(e1);

  while (out.points.size() < n) {
    ++out.proposals;
    UnitVector q = use_cap ? [&] {
      const double z = 1.0 - rng.uniform() * one_minus_cos;
      const double phi = 2.0 * std::numbers::pi * rng.uniform();
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      return UnitVector(center.vec() * z + e1 * (rho * std::cos(phi)) + e2 * (rho * std::sin(phi)));
    }()
                           : sample_uniform_sphere(rng);
    if (triangle_contains(t, q)) out.points.push_back(q);
  }
  return out;
}

std::vector<double> min_distances(const SeedSet& seeds, std::span<const UnitVector> probes) {
  std::vector<double> out;
  out.reserve(probes.size());
  const double radius = seeds.sphere().radius();
  for (const UnitVector& q : probes) {
    out.push_back(radius * central_angle(seeds.seeds()[seeds.nearest(q)], q));
  }
  return out;
}

std::vector<double> empirical_min_distance(const SeedSet& seeds, RngStream& rng, std::size_t n) {
  const auto probes = sample_uniform_sphere(rng, n);
  return min_distances(seeds, probes);
}

const std::array<std::string, kTableColumns>& table_column_names() {
  static const std::array<std::string, kTableColumns> names{
      "E(L2)", "E(L2^2)", "E(L2^3)", "E(L2^4)", "E(cos^2 L2)", "E(cos^4 L2)", "E(cos^6 L2)"};
  return names;
}

TableRow theoretical_table_row(const SphericalVoronoiDiagram& d, const QuadratureSpec& spec) {
  TableRow row{};
  for (int k = 1; k <= 4; ++k) row[k - 1] = distance_moment(d, k, spec);
  for (int i = 0; i < 3; ++i) row[4 + i] = cos_moment(d, 2 * (i + 1), MomentMethod::ClosedForm, spec);
  return row;
}

TableRow sample_table_row(std::span<const double> distances, double radius) {
  TableRow sums{};
  for (double l : distances) {
    const double c2 = std::pow(std::cos(l / radius), 2);
    sums[0] += l;
    sums[1] += l * l;
    sums[2] += l * l * l;
    sums[3] += l * l * l * l;
    sums[4] += c2;
    sums[5] += c2 * c2;
    sums[6] += c2 * c2 * c2;
  }
  for (double& s : sums) s /= static_cast<double>(distances.size());
  return sums;
}

AreReport are_report(const SeedSet& seeds, const TableRow& theory, std::size_t reps,
                     std::size_t samples, const RngStream& rng, unsigned threads) {
  if (reps < 1 || samples < 1) {
    throw GeometryError(ErrorKind::InvalidArgument, "repetitions and samples must be positive");
  }
  std::vector<TableRow> estimates(reps);
  parallel_for(reps, threads, [&](std::size_t i) {
    RngStream stream = rng.substream(i + 1);
    const auto distances = empirical_min_distance(seeds, stream, samples);
    estimates[i] = sample_table_row(distances, seeds.sphere().radius());
  });

  AreReport report;
  report.theory = theory;
  report.reps = reps;
  report.samples = samples;
  report.rng_seed = rng.seed();
  for (std::size_t c = 0; c < kTableColumns; ++c) {
    double sum_est = 0.0, sum_are = 0.0, max_are = 0.0;
    std::vector<double> ares(reps);
    for (std::size_t i = 0; i < reps; ++i) {
      ares[i] = std::abs((estimates[i][c] - theory[c]) / theory[c]);
      sum_est += estimates[i][c];
      sum_are += ares[i];
      max_are = std::max(max_are, ares[i]);
    }
    const double mean = sum_are / static_cast<double>(reps);
    double ss = 0.0;
    for (double a : ares) ss += (a - mean) * (a - mean);
    report.mean_mc[c] = sum_est / static_cast<double>(reps);
    report.mean_are[c] = mean;
    report.max_are[c] = max_are;
    report.std_are[c] = reps > 1 ? std::sqrt(ss / static_cast<double>(reps - 1)) : 0.0;
  }
  return report;
}

ScenarioRun run_scenario(const Scenario& scenario, std::size_t reps, std::size_t samples,
                         const RngStream& rng, unsigned threads) {
  RngStream seed_stream = rng.substream(0);
  SeedSet seeds = generate_scenario(scenario, seed_stream);
  SphericalVoronoiDiagram diagram = build_diagram(seeds);
  QuadratureSpec spec;
  spec.threads = threads;
  const TableRow theory = theoretical_table_row(diagram, spec);
  AreReport report = are_report(seeds, theory, reps, samples, rng, threads);
  return ScenarioRun{std::move(seeds), std::move(diagram), report};
}

}  // namespace sphdist
