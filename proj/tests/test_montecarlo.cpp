#include <gtest/gtest.h>

#include <cmath>

#include "sphdist/errors.hpp"
#include "sphdist/montecarlo.hpp"
#include "test_support.hpp"

using namespace sphdist;
using testing_support::kPi;

TEST(SampleUniformSphere, MomentsAndCapFraction) {
  RngStream rng(1);
  const std::size_t n = 1'000'000;
  const auto pts = sample_uniform_sphere(rng, n);
  double sx = 0, sy = 0, sz = 0;
  std::size_t cap = 0;
  for (const auto& p : pts) {
    EXPECT_NEAR(p.vec().norm(), 1.0, 1e-15);
    sx += p.x();
    sy += p.y();
    sz += p.z();
    cap += p.z() > 0.5;
  }
  const double bound = 4 / std::sqrt(n / 3.0);
  EXPECT_LT(std::abs(sx / n), bound);
  EXPECT_LT(std::abs(sy / n), bound);
  EXPECT_LT(std::abs(sz / n), bound);
  const double frac = static_cast<double>(cap) / n;
  EXPECT_LT(std::abs(frac - 0.25), 4 * std::sqrt(0.25 * 0.75 / n));
}

TEST(RngStream, Deterministic) {
  RngStream a(99), b(99), c(100);
  const auto pa = sample_uniform_sphere(a, 10);
  const auto pb = sample_uniform_sphere(b, 10);
  const auto pc = sample_uniform_sphere(c, 10);
  EXPECT_EQ(pa, pb);
  EXPECT_NE(pa, pc);
  RngStream s1 = a.substream(3), s2 = RngStream(99).substream(3), s3 = a.substream(4);
  EXPECT_EQ(s1.uniform(), s2.uniform());
  EXPECT_NE(RngStream(99).substream(3).uniform(), s3.uniform());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Scenario, Sim2HemisphereSplit) {
  RngStream rng(5);
  const SeedSet s = generate_scenario(Scenario::from_kind(ScenarioKind::Sim2), rng);
  ASSERT_EQ(s.size(), 100u);
  for (std::size_t i = 0; i < 75; ++i) EXPECT_GE(s.seeds()[i].z(), 0.0);
  for (std::size_t i = 75; i < 100; ++i) EXPECT_LE(s.seeds()[i].z(), 0.0);
}

TEST(Scenario, Sim3Caps) {
  RngStream rng(6);
  const SeedSet s = generate_scenario(Scenario::from_kind(ScenarioKind::Sim3), rng);
  ASSERT_EQ(s.size(), 100u);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_GE(s.seeds()[i].z(), 0.9);
  for (std::size_t i = 50; i < 100; ++i) EXPECT_LE(s.seeds()[i].z(), -0.9);
}

TEST(Scenario, Sim1UniformOverEqualAreaBands) {
  // 100 seed sets of 100 seeds, chi-square over 12 equal-area z bands.
  RngStream master(7);
  std::vector<double> counts(12, 0.0);
  for (int rep = 0; rep < 100; ++rep) {
    RngStream rng = master.substream(rep);
    const SeedSet s = generate_scenario(Scenario::from_kind(ScenarioKind::Sim1), rng);
    for (const auto& p : s.seeds()) counts[std::min(11, static_cast<int>((p.z() + 1) / 2 * 12))] += 1;
  }
  double chi2 = 0;
  for (double c : counts) chi2 += (c - 10000 / 12.0) * (c - 10000 / 12.0) / (10000 / 12.0);
  EXPECT_LT(chi2, 31.26);  // 0.1% critical value, 11 degrees of freedom
}

TEST(Scenario, Sim2HemisphereUniformity) {
  // Reflected seeds are uniform on their hemisphere: chi-square over 6 bands of |z|.
  RngStream master(8);
  std::vector<double> counts(6, 0.0);
  for (int rep = 0; rep < 100; ++rep) {
    RngStream rng = master.substream(rep);
    const SeedSet s = generate_scenario(Scenario::from_kind(ScenarioKind::Sim2), rng);
    for (const auto& p : s.seeds()) counts[std::min(5, static_cast<int>(std::abs(p.z()) * 6))] += 1;
  }
  double chi2 = 0;
  for (double c : counts) chi2 += (c - 10000 / 6.0) * (c - 10000 / 6.0) / (10000 / 6.0);
  EXPECT_LT(chi2, 20.52);  // 0.1% critical value, 5 degrees of freedom
}

TEST(Scenario, Validation) {
  Scenario s = Scenario::from_kind(ScenarioKind::Sim3);
  s.cap_height = 1.0;
  EXPECT_THROW(s.validate(), GeometryError);
  s = Scenario::from_kind(ScenarioKind::Sim2);
  s.upper_count = 101;
  EXPECT_THROW(s.validate(), GeometryError);
  EXPECT_EQ(parse_scenario_kind("sim2"), ScenarioKind::Sim2);
  EXPECT_STREQ(to_string(ScenarioKind::Sim3), "sim3");
  EXPECT_THROW(parse_scenario_kind("sim4"), GeometryError);
  RngStream rng(1);
  EXPECT_THROW(generate_scenario(Scenario::from_kind(ScenarioKind::Custom), rng), GeometryError);
}

TEST(SampleUniformInTriangle, OctantAcceptanceAndMean) {
  const CanonicalTriangle t = testing_support::octant();
  RngStream rng(9);
  const std::size_t n = 200000;
  const TriangleSample s = sample_uniform_in_triangle(t, rng, n);
  ASSERT_EQ(s.points.size(), n);
  const double rate = static_cast<double>(n) / static_cast<double>(s.proposals);
  const double se = std::sqrt(0.125 * 0.875 / static_cast<double>(s.proposals));
  EXPECT_LT(std::abs(rate - 0.125), 4 * se);
  double sum = 0, sum2 = 0;
  for (const auto& q : s.points) {
    EXPECT_TRUE(testing_support::inside_triangle(t.p().vec(), t.b().vec(), t.c().vec(), q.vec()));
    const double d = central_angle(t.p(), q);
    sum += d;
    sum2 += d * d;
  }
  const double mean = sum / n;
  EXPECT_LT(std::abs(mean - 1.0), 4 * std::sqrt((sum2 / n - mean * mean) / n));
}

TEST(SampleUniformInTriangle, BoundingCapProposalIsUniform) {
  testing_support::Rng trng(10);
  for (int i = 0; i < 5; ++i) {
    const CanonicalTriangle t = testing_support::random_triangle(trng);
    RngStream rng(10 + i);
    const TriangleSample s = sample_uniform_in_triangle(t, rng, 50000, TriangleProposal::BoundingCap);
    std::vector<double> d;
    for (const auto& q : s.points) d.push_back(central_angle(t.p(), q));
    EXPECT_LT(ks_statistic(d, [&](double r) { return t.cdf(r); }), testing_support::ks_critical_1pct(d.size()));
    EXPECT_LT(s.proposals, 50000u * 4 * kPi / t.area());
  }
}

TEST(MinDistance, Examples) {
  const SeedSet oct(testing_support::octahedron());
  const std::vector<UnitVector> probes{UnitVector(1, 0, 0), UnitVector(1, 1, 1)};
  const auto d = min_distances(oct, probes);
  EXPECT_EQ(d[0], 0.0);
  EXPECT_NEAR(d[1], std::acos(1 / std::sqrt(3.0)), 1e-15);
  const SeedSet big(testing_support::octahedron(), Sphere(2));
  EXPECT_NEAR(min_distances(big, probes)[1], 2 * std::acos(1 / std::sqrt(3.0)), 1e-14);
}

TEST(MinDistance, KolmogorovSmirnovAgainstDiagram) {
  RngStream rng(11);
  RngStream seeds_rng = rng.substream(0);
  const SeedSet seeds = generate_scenario(Scenario::from_kind(ScenarioKind::Sim1), seeds_rng);
  const auto d = build_diagram(seeds);
  RngStream probes = rng.substream(1);
  const auto dist = empirical_min_distance(seeds, probes, 100000);
  EXPECT_LT(ks_statistic(dist, [&](double r) { return d.cdf(r); }), testing_support::ks_critical_1pct(dist.size()));
}

TEST(KsStatistic, KnownValue) {
  // Uniform CDF on [0, 1] with samples at the midpoints of n cells: D = 1/(2n).
  std::vector<double> xs;
  for (int i = 0; i < 10; ++i) xs.push_back((i + 0.5) / 10);
  EXPECT_NEAR(ks_statistic(xs, [](double x) { return x; }), 0.05, 1e-15);
}

TEST(SampleTableRow, Columns) {
  const std::vector<double> d{0.5, 1.0};
  const TableRow row = sample_table_row(d, 1.0);
  EXPECT_NEAR(row[0], 0.75, 1e-15);
  EXPECT_NEAR(row[1], 0.625, 1e-15);
  EXPECT_NEAR(row[4], (std::pow(std::cos(0.5), 2) + std::pow(std::cos(1.0), 2)) / 2, 1e-15);
  EXPECT_EQ(table_column_names()[6], "E(cos^6 L2)");
}

class AreReportTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    RngStream rng(12);
    RngStream seeds_rng = rng.substream(0);
    seeds_ = new SeedSet(generate_scenario(Scenario::from_kind(ScenarioKind::Sim1), seeds_rng));
    const auto d = build_diagram(*seeds_);
    theory_ = theoretical_table_row(d);
  }
  static void TearDownTestSuite() { delete seeds_; }

  static SeedSet* seeds_;
  static TableRow theory_;
};

SeedSet* AreReportTest::seeds_ = nullptr;
TableRow AreReportTest::theory_{};

TEST_F(AreReportTest, DeterministicAcrossRunsAndThreads) {
  const RngStream rng(77);
  const AreReport a = are_report(*seeds_, theory_, 8, 2000, rng, 1);
  const AreReport b = are_report(*seeds_, theory_, 8, 2000, rng, 1);
  const AreReport c = are_report(*seeds_, theory_, 8, 2000, rng, 3);
  EXPECT_EQ(a.mean_are, b.mean_are);
  EXPECT_EQ(a.mean_mc, c.mean_mc);
  EXPECT_EQ(a.std_are, c.std_are);
  EXPECT_EQ(a.rng_seed, 77u);
  for (std::size_t k = 0; k < kTableColumns; ++k) {
    EXPECT_GE(a.mean_are[k], 0.0);
    EXPECT_LE(a.mean_are[k], a.max_are[k]);
  }
}

TEST_F(AreReportTest, UnbiasedOverRepetitions) {
  // Sample mean of the 100 estimates within 4 standard errors of theory,
  // standard error taken from the spread of ARE (|est - theory| / theory).
  const AreReport r = are_report(*seeds_, theory_, 100, 10000, RngStream(78));
  for (std::size_t k = 0; k < kTableColumns; ++k) {
    const double rms = std::sqrt(r.std_are[k] * r.std_are[k] + r.mean_are[k] * r.mean_are[k]) * theory_[k];
    EXPECT_LT(std::abs(r.mean_mc[k] - theory_[k]), 4 * rms / std::sqrt(100.0)) << table_column_names()[k];
  }
}

TEST_F(AreReportTest, ScalingLaw) {
  const AreReport small = are_report(*seeds_, theory_, 100, 10000, RngStream(79));
  const AreReport large = are_report(*seeds_, theory_, 100, 40000, RngStream(80));
  const double ratio = large.mean_are[0] / small.mean_are[0];
  EXPECT_GE(ratio, 0.35);
  EXPECT_LE(ratio, 0.65);
}

TEST(AreReport, LargeSampleConsistency) {
  const SeedSet oct(testing_support::octahedron());
  const auto d = build_diagram(oct);
  const AreReport r = are_report(oct, theoretical_table_row(d), 1, 10'000'000, RngStream(81));
  EXPECT_LT(r.mean_are[0], 0.002);
  EXPECT_EQ(r.std_are[0], 0.0);
  EXPECT_THROW(are_report(oct, r.theory, 0, 10, RngStream(1)), GeometryError);
}

TEST(RunScenario, Sim1Protocol) {
  const ScenarioRun run = run_scenario(Scenario::from_kind(ScenarioKind::Sim1), 10, 5000, RngStream(82));
  EXPECT_EQ(run.seeds.size(), 100u);
  EXPECT_EQ(run.report.reps, 10u);
  EXPECT_NEAR(run.report.theory[0], 0.176, 0.0176);
  EXPECT_LT(run.report.mean_are[0], 0.02);
}
