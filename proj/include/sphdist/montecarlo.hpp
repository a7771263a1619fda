#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sphdist/moments.hpp"
#include "sphdist/sphere_core.hpp"
#include "sphdist/tri_dist.hpp"
#include "sphdist/voronoi.hpp"

namespace sphdist {

// Deterministic pseudorandom stream. Equal seeds give equal sequences, and
// substreams are derived from (seed, index) only.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  RngStream substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Marsaglia's rejection method.
UnitVector sample_uniform_sphere(RngStream& rng);
std::vector<UnitVector> sample_uniform_sphere(RngStream& rng, std::size_t n);

enum class ScenarioKind { Sim1, Sim2, Sim3, Custom };

const char* to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(const std::string& name);

struct Scenario {
  ScenarioKind kind = ScenarioKind::Sim1;
  std::size_t m = 100;
  // Sim2: how many of the m seeds are folded into the upper hemisphere.
  std::size_t upper_count = 75;
  // Sim3: seeds are drawn from the caps z >= cap_height and z <= -cap_height.
  double cap_height = 0.9;

  static Scenario from_kind(ScenarioKind kind);
  // Throws GeometryError(InvalidArgument).
  void validate() const;
};

// Seeds for Sim1-Sim3 on the given sphere. Custom scenarios have no generator.
SeedSet generate_scenario(const Scenario& scenario, RngStream& rng, Sphere sphere = Sphere{});

// Closed triangle membership (inner side of all three edge great circles).
bool triangle_contains(const CanonicalTriangle& t, const UnitVector& q);

enum class TriangleProposal {
  WholeSphere,  // uniform sphere points filtered by membership
  BoundingCap,  // uniform points of a cap around the triangle, then filtered
};

struct TriangleSample {
  std::vector<UnitVector> points;
  std::size_t proposals = 0;
};

// Uniform points of the triangle by rejection. The whole-sphere proposal
// costs about 4 pi / Omega draws per accepted point.
TriangleSample sample_uniform_in_triangle(const CanonicalTriangle& t, RngStream& rng,
                                          std::size_t n,
                                          TriangleProposal proposal = TriangleProposal::WholeSphere);

// Brute-force minimum arc distance from each probe to the seeds.
std::vector<double> min_distances(const SeedSet& seeds, std::span<const UnitVector> probes);
std::vector<double> empirical_min_distance(const SeedSet& seeds, RngStream& rng, std::size_t n);

// Sup-distance between the empirical CDF of `samples` and `cdf`.
template <class Cdf>
double ks_statistic(std::vector<double> samples, const Cdf& cdf);

// Column order of the moment table: E[L], E[L^2], E[L^3], E[L^4],
// E[cos^2 L], E[cos^4 L], E[cos^6 L].
inline constexpr std::size_t kTableColumns = 7;
using TableRow = std::array<double, kTableColumns>;
const std::array<std::string, kTableColumns>& table_column_names();

// Theoretical values of the table columns (cosine columns from closed forms).
TableRow theoretical_table_row(const SphericalVoronoiDiagram& d, const QuadratureSpec& spec = {});
// Sample moments of the table columns from minimum distances.
TableRow sample_table_row(std::span<const double> distances, double radius);

struct AreReport {
  TableRow theory{};
  TableRow mean_mc{};
  TableRow mean_are{};
  TableRow max_are{};
  TableRow std_are{};
  std::size_t reps = 0;
  std::size_t samples = 0;
  std::uint64_t rng_seed = 0;
};

// ARE = |sample - theory| / |theory| per column, aggregated over repetitions.
// Repetition i draws its probes from rng.substream(i + 1).
AreReport are_report(const SeedSet& seeds, const TableRow& theory, std::size_t reps,
                     std::size_t samples, const RngStream& rng, unsigned threads = 1);

struct ScenarioRun {
  SeedSet seeds;
  SphericalVoronoiDiagram diagram;
  AreReport report;
};

// One seed realization (from rng.substream(0)), its diagram and ARE report.
ScenarioRun run_scenario(const Scenario& scenario, std::size_t reps, std::size_t samples,
                         const RngStream& rng, unsigned threads = 1);

template <class Cdf>
double ks_statistic(std::vector<double> samples, const Cdf& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / n),
                  std::abs(static_cast<double>(i + 1) / n - f)});
  }
  return d;
}

}  // namespace sphdist
