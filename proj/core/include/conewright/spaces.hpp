#pragma once

#include <conewright/chern.hpp>
#include <conewright/ring.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace conewright::spaces {

// A smooth projective variety with an explicit graded intersection-ring
// presentation, a distinguished degree-1 divisor class, tangent data, and an
// integration model. Two models may share one ring presentation: a model cut
// out of (or covering) an ambient space keeps the ambient presentation and
// adjusts only the functional, via
//     integrate(x) = degree_factor * ring->integrate(x * point_scale).
struct SpaceModel {
  std::string name;          // stable catalog key, e.g. "gr24"
  std::string display_name;  // human-readable, e.g. "Gr(2,4)"
  ring::RingHandle ring;
  int dimension;             // geometric dimension of the model
  int fano_index;            // divisibility of -K in Pic; 0 when not applicable
  ring::PolyClass hyperplane;
  chern::Bundle tangent;
  std::map<std::string, chern::Bundle> named_bundles;
  Rat degree_factor;
  ring::PolyClass point_scale;

  Rat integrate(const ring::PolyClass& x) const;
  const chern::Bundle& bundle(std::string_view bundle_name) const;
};

// Catalog lookup by key: p1..p5, gr24, gr25, blp4, v4, v5 (case-insensitive).
const SpaceModel& get(std::string_view name);
std::vector<std::string> catalog_names();

// Recomputes the model's functional through its upstream presentation and
// compares with SpaceModel::integrate; returns the common value and throws
// InternalError on disagreement.
Rat pushforward_check(const SpaceModel& model, const ring::PolyClass& x);

}  // namespace conewright::spaces
