#pragma once

#include <conewright/chern.hpp>
#include <conewright/spaces.hpp>

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace conewright::detcy {

// A pair of equal-rank bundles (E, F) on a fourfold M, defining the family of
// threefolds cut out by a generic morphism E^ -> F. L denotes the tautological
// divisor of the resolved model, H the pullback of the designated degree-1
// divisor on M. In Calabi-Yau mode the pair must satisfy
// c1(E) + c1(F) = c1(T_M).
struct PairConfig {
  const spaces::SpaceModel* space;
  chern::Bundle e, f;
  ring::PolyClass h;
  bool cy_mode;

  int n() const { return e.rank - 1; }
};

PairConfig make_config(const spaces::SpaceModel& space, chern::Bundle e,
                       chern::Bundle f, bool cy_mode = true,
                       std::optional<ring::PolyClass> h = std::nullopt);

// The pair with the roles of E and F exchanged (the second resolution of the
// same degeneracy locus).
PairConfig dual_config(const PairConfig& cfg);

// Total Chern class of the formal difference E - F^.
ring::PolyClass difference_class(const PairConfig& cfg);

// Intersection numbers {L^3, L^2 H, L H^2, H^3} of the resolved threefold:
// L^{3-k} H^k = integral over M of H^k c_{4-k}(E - F^).
std::array<Rat, 4> triple_products(const PairConfig& cfg);

// Number of ordinary double points of the degeneracy locus:
// integral of c2(F - E^)^2 - c1(F - E^) c3(F - E^).
Rat odp_count(const PairConfig& cfg);

// Pairings {c2(X).L, c2(X).H} of the second Chern class of the resolved
// threefold (Calabi-Yau mode only).
std::pair<Rat, Rat> c2_pairings(const PairConfig& cfg);

// Topological Euler number of a smooth anticanonical threefold section of a
// Fano fourfold: integral of c1(T) [c(T)/(1 + c1(T))]_3.
Rat anticanonical_euler(const spaces::SpaceModel& space);

// {chi_top, h^{2,1}} of the small resolution: chi = chi(anticanonical) +
// 2 odp, and h^{2,1} drops by one for each double point smoothed away.
std::pair<Rat, Rat> cy_hodge(const PairConfig& cfg);

// Degeneracy-locus class for a generic morphism E^ -> F where the rank drops
// to k: det( c_{rank F - k + j - i}(F - E^) ) of size (rank E - k).
ring::PolyClass porteous_class(const chern::Bundle& e, const chern::Bundle& f, int k);

// A full invariant row with integrality enforced.
struct InvariantRow {
  long long L3, L2H, LH2, H3, c2L, c2H, odp;
};
InvariantRow invariant_row(const PairConfig& cfg);

// The concrete families the tool studies, keyed by their ambient fourfold.
enum class CaseId { v4, v5, gr24 };
CaseId case_from_name(std::string_view name);
const char* case_name(CaseId id);
int case_fano_index(CaseId id);

// The Calabi-Yau pair on the ambient fourfold of the given family.
PairConfig case_config(CaseId id);
// The model on the far side of the flop: the projective-space pair for the
// quintic family, the blown-up pair for the Grassmannian family. The
// degree-4 family has no separate flop-side model.
PairConfig flop_side_config(CaseId id);

}  // namespace conewright::detcy
