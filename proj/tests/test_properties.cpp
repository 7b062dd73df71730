#include <doctest.h>

#include "support/oracles.hpp"
#include "support/property_engine.hpp"

#include <conewright/errors.hpp>
#include <conewright/spaces.hpp>

namespace cw = conewright;
namespace ts = cw::testsupport;
using cw::Rat;

namespace {

void require_clean(const ts::PropertySummary& s, long long min_instances) {
  CAPTURE(s.name);
  CHECK(s.instances >= min_instances);
  for (const std::string& failure : s.failures) {
    FAIL_CHECK(s.name, ": ", failure);
  }
  CHECK(s.pass());
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("randomized and exhaustive sweeps all pass at full volume") {
  const auto summaries = ts::run_all_property_sweeps();
  long long total = 0;
  for (const auto& s : summaries) {
    require_clean(s, 1);
    total += s.instances;
  }
  CHECK(total >= 1000);
}

TEST_CASE("sweeps hold under fresh seeds") {
  require_clean(ts::ring_axiom_sweep(0x5eedf00dULL, 40), 8 * 40);
  require_clean(ts::bundle_identity_sweep(0xfeedbeefULL, 12), 10 * 12);
  require_clean(ts::integration_sweep(0xc0ffee11ULL, 10), 10 * 10);
}

TEST_CASE("strip oracle spot values") {
  // Two-row counts on the 4-space model: the square of the middle class.
  const int n = 4;
  ts::CycleVector x = ts::unit_class();
  x = ts::strip_multiply(n, 1, x);
  x = ts::strip_multiply(n, 1, x);
  x = ts::strip_multiply(n, 1, x);
  x = ts::strip_multiply(n, 1, x);
  CHECK(ts::oracle_integral(n, x) == 2);

  // The two degree-2 classes are mutually dual.
  ts::CycleVector a = ts::oracle_multiply(n, {2, 0}, ts::unit_class());
  CHECK(ts::oracle_integral(n, ts::oracle_multiply(n, {2, 0}, a)) == 1);
  CHECK(ts::oracle_integral(n, ts::oracle_multiply(n, {1, 1}, a)) == 0);

  // Pieri on the 5-space model: sigma_1^6 counts 5.
  ts::CycleVector y = ts::unit_class();
  for (int i = 0; i < 6; ++i) {
    y = ts::strip_multiply(5, 1, y);
  }
  CHECK(ts::oracle_integral(5, y) == 5);
}

TEST_CASE("complete-intersection oracle spot values") {
  // A 3-space is the empty intersection in itself.
  CHECK(ts::ci_degree({}) == 1);
  CHECK(ts::ci_euler(3, {}) == 4);

  // Quadric surface in 3-space: Euler number 4; quartic surface: 24.
  CHECK(ts::ci_euler(3, {2}) == 4);
  CHECK(ts::ci_euler(3, {4}) == 24);

  // The quintic threefold.
  CHECK(ts::ci_euler(4, {5}) == -200);

  // The anchored threefold sections.
  CHECK(ts::ci_euler(6, {2, 2, 3}) == -144);
  CHECK(ts::ci_euler(5, {2, 4}) == -176);

  // Second-Chern pairings of the smoothed models.
  CHECK(ts::ci_tangent_pairing(6, {2, 2, 3}, 2) == 60);
  CHECK(ts::ci_tangent_pairing(5, {2, 4}, 2) == 56);

  // Fourfold section pairing used by the cross-model tangent sweep.
  CHECK(ts::ci_tangent_pairing(6, {2, 2}, 2) == 20);

  CHECK_THROWS_AS(ts::ci_tangent_series(2, {2, 2, 2}), cw::ConfigError);
}

TEST_CASE("ring realization matches the combinatorial basis") {
  const auto& g = cw::spaces::get("gr24");
  // The box-filling class is the point.
  CHECK(g.ring->integrate(ts::ring_schubert(g, {2, 2})) == 1);
  // Determinantal identity for the mixed class.
  CHECK(ts::ring_schubert(g, {1, 1}) + ts::ring_schubert(g, {2, 0}) ==
        ts::ring_schubert(g, {1, 0}) * ts::ring_schubert(g, {1, 0}));

  const auto& g5 = cw::spaces::get("gr25");
  CHECK(g5.ring->integrate(ts::ring_schubert(g5, {3, 3})) == 1);
  CHECK(g5.ring->integrate(ts::ring_schubert(g5, {3, 1}) *
                           ts::ring_schubert(g5, {2, 0})) == 1);
}

}  // TEST_SUITE
