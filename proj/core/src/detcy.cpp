#include <conewright/detcy.hpp>

#include <conewright/errors.hpp>

#include <string>
#include <utility>
#include <vector>

namespace conewright::detcy {

using chern::Bundle;
using ring::PolyClass;

PairConfig make_config(const spaces::SpaceModel& space, Bundle e, Bundle f,
                       bool cy_mode, std::optional<PolyClass> h) {
  if (space.dimension != 4) {
    throw ConfigError("determinantal pair needs a fourfold, got " + space.display_name +
                      " of dimension " + std::to_string(space.dimension));
  }
  if (e.total_chern.ring().get() != space.ring.get() ||
      f.total_chern.ring().get() != space.ring.get()) {
    throw ConfigError("pair bundles must live on " + space.display_name);
  }
  if (e.is_virtual || f.is_virtual) {
    throw ConfigError("pair bundles must be genuine");
  }
  if (e.rank != f.rank) {
    throw ConfigError("pair bundles must have equal rank, got " + std::to_string(e.rank) +
                      " and " + std::to_string(f.rank));
  }
  if (e.rank < 2) {
    throw ConfigError("pair bundles must have rank at least 2");
  }
  PolyClass divisor = h ? *h : space.hyperplane;
  if (divisor.is_zero() || !divisor.is_homogeneous(1)) {
    throw ConfigError("designated divisor must be homogeneous of degree 1");
  }
  if (cy_mode) {
    const PolyClass anticanonical = chern::chern_class(space.tangent, 1);
    if (chern::chern_class(e, 1) + chern::chern_class(f, 1) != anticanonical) {
      throw ConfigError("pair is not anticanonical on " + space.display_name +
                        ": c1(E) + c1(F) != c1(T)");
    }
  }
  return PairConfig{&space, std::move(e), std::move(f), std::move(divisor), cy_mode};
}

PairConfig dual_config(const PairConfig& cfg) {
  return PairConfig{cfg.space, cfg.f, cfg.e, cfg.h, cfg.cy_mode};
}

PolyClass difference_class(const PairConfig& cfg) {
  return chern::virtual_difference(cfg.e, chern::dual(cfg.f)).total_chern;
}

std::array<Rat, 4> triple_products(const PairConfig& cfg) {
  const PolyClass d = difference_class(cfg);
  std::array<Rat, 4> out;
  for (int k = 0; k <= 3; ++k) {
    out[static_cast<std::size_t>(k)] =
        cfg.space->integrate(cfg.h.pow(static_cast<unsigned>(k)) * d.component(4 - k));
  }
  return out;
}

Rat odp_count(const PairConfig& cfg) {
  const PolyClass g = chern::virtual_difference(cfg.f, chern::dual(cfg.e)).total_chern;
  return cfg.space->integrate(g.component(2) * g.component(2) -
                              g.component(1) * g.component(3));
}

std::pair<Rat, Rat> c2_pairings(const PairConfig& cfg) {
  if (!cfg.cy_mode) {
    throw ConfigError("c2 pairings are defined for Calabi-Yau pairs only");
  }
  const PolyClass c2t = chern::chern_class(cfg.space->tangent, 2);
  const PolyClass d = difference_class(cfg);
  const Rat c2l = cfg.space->integrate(c2t * d.component(2)) - odp_count(cfg);
  const Rat c2h = cfg.space->integrate(c2t * d.component(1) * cfg.h);
  return {c2l, c2h};
}

Rat anticanonical_euler(const spaces::SpaceModel& space) {
  if (space.dimension != 4) {
    throw ConfigError("anticanonical Euler number needs a fourfold");
  }
  const PolyClass ct = space.tangent.total_chern;
  const PolyClass c1 = ct.component(1);
  const PolyClass section = ct * (space.ring->one() + c1).inverse();
  return space.integrate(c1 * section.component(3));
}

std::pair<Rat, Rat> cy_hodge(const PairConfig& cfg) {
  if (!cfg.cy_mode) {
    throw ConfigError("Hodge numbers are defined for Calabi-Yau pairs only");
  }
  const Rat smooth_euler = anticanonical_euler(*cfg.space);
  if (!is_integer(smooth_euler) || to_int64(smooth_euler) % 2 != 0) {
    throw InternalError("anticanonical Euler number of " + cfg.space->display_name +
                        " is not even: " + rat_to_string(smooth_euler));
  }
  const Rat odp = odp_count(cfg);
  const Rat chi = smooth_euler + 2 * odp;
  // h^{2,1} of the smooth anticanonical model is 1 - chi/2 (h^{1,1} = 1 on an
  // ample section); the small resolution trades one modulus per node.
  const Rat h21_smooth = 1 - smooth_euler / 2;
  const Rat h21 = h21_smooth - odp + 1;
  return {chi, h21};
}

namespace {

PolyClass determinant(const std::vector<std::vector<PolyClass>>& m,
                      const ring::RingHandle& ring) {
  const std::size_t size = m.size();
  if (size == 0) {
    return ring->one();
  }
  if (size == 1) {
    return m[0][0];
  }
  // Cofactor expansion along the first row; the matrices are tiny.
  PolyClass det = ring->zero();
  for (std::size_t j = 0; j < size; ++j) {
    std::vector<std::vector<PolyClass>> minor;
    minor.reserve(size - 1);
    for (std::size_t i = 1; i < size; ++i) {
      std::vector<PolyClass> row;
      row.reserve(size - 1);
      for (std::size_t jj = 0; jj < size; ++jj) {
        if (jj != j) {
          row.push_back(m[i][jj]);
        }
      }
      minor.push_back(std::move(row));
    }
    const PolyClass term = m[0][j] * determinant(minor, ring);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

PolyClass porteous_class(const Bundle& e, const Bundle& f, int k) {
  if (e.total_chern.ring().get() != f.total_chern.ring().get()) {
    throw ConfigError("degeneracy-locus bundles must live on the same space");
  }
  if (k < 0 || k >= std::min(e.rank, f.rank)) {
    throw ConfigError("degeneracy rank " + std::to_string(k) +
                      " out of range for ranks " + std::to_string(e.rank) + ", " +
                      std::to_string(f.rank));
  }
  const ring::RingHandle& ring = e.total_chern.ring();
  const PolyClass g = chern::virtual_difference(f, chern::dual(e)).total_chern;
  const int size = e.rank - k;
  std::vector<std::vector<PolyClass>> m(
      static_cast<std::size_t>(size),
      std::vector<PolyClass>(static_cast<std::size_t>(size), ring->zero()));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int idx = f.rank - k + j - i;
      if (idx < 0 || idx > ring->top_degree()) {
        continue;  // classes outside [0, top] vanish
      }
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          (idx == 0) ? ring->one() : g.component(idx);
    }
  }
  return determinant(m, ring);
}

InvariantRow invariant_row(const PairConfig& cfg) {
  const std::array<Rat, 4> t = triple_products(cfg);
  const auto [c2l, c2h] = c2_pairings(cfg);
  const Rat odp = odp_count(cfg);
  return InvariantRow{to_int64(t[0]), to_int64(t[1]), to_int64(t[2]), to_int64(t[3]),
                      to_int64(c2l), to_int64(c2h), to_int64(odp)};
}

CaseId case_from_name(std::string_view name) {
  if (name == "v4") {
    return CaseId::v4;
  }
  if (name == "v5") {
    return CaseId::v5;
  }
  if (name == "gr24") {
    return CaseId::gr24;
  }
  throw ConfigError("unknown case '" + std::string(name) + "' (known: v4, v5, gr24)");
}

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::v4:
      return "v4";
    case CaseId::v5:
      return "v5";
    case CaseId::gr24:
      return "gr24";
  }
  throw ConfigError("invalid case id");
}

int case_fano_index(CaseId id) {
  return spaces::get(case_name(id)).fano_index;
}

PairConfig case_config(CaseId id) {
  const spaces::SpaceModel& space = spaces::get(case_name(id));
  const int rank = (id == CaseId::gr24) ? 3 : 2;
  return make_config(space, chern::trivial_bundle(space.ring, rank), space.bundle("F"));
}

PairConfig flop_side_config(CaseId id) {
  switch (id) {
    case CaseId::v4:
      throw ConfigError("the v4 family has no separate flop-side model");
    case CaseId::v5: {
      // On P^4: E = wedge^3 of T(-1), F = O^2 + O(1)^2.
      const spaces::SpaceModel& p4 = spaces::get("p4");
      const PolyClass h = p4.hyperplane;
      const Bundle t1 = chern::twist_by_line(p4.tangent, -h);
      const Bundle e = chern::exterior_top_minus_one(t1);
      const Bundle f = chern::whitney_sum(
          chern::trivial_bundle(p4.ring, 2),
          chern::twist_by_line(chern::trivial_bundle(p4.ring, 2), h));
      return make_config(p4, e, f, /*cy_mode=*/true);
    }
    case CaseId::gr24: {
      // On the blow-up: E = pullback of wedge^2 of T_{P^3}(-1), F = O(xi)^3,
      // with xi as the designated divisor. The pair is not anticanonical.
      const spaces::SpaceModel& bl = spaces::get("blp4");
      const PolyClass a = bl.ring->gen("a");
      const PolyClass xi = bl.ring->gen("x");
      const Bundle base = chern::make_bundle(
          3, bl.ring->one() + a + a * a + a * a * a, "f*(T(-1))");
      const Bundle e = chern::exterior_top_minus_one(base);
      const Bundle f =
          chern::twist_by_line(chern::trivial_bundle(bl.ring, 3), xi);
      return make_config(bl, e, f, /*cy_mode=*/false, xi);
    }
  }
  throw ConfigError("invalid case id");
}

}  // namespace conewright::detcy
