#include <conewright/birat.hpp>

#include <conewright/errors.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace conewright::birat {

using detcy::CaseId;

// ---------------------------------------------------------------------------
// Wall rendering
// ---------------------------------------------------------------------------

namespace {

void append_term(std::ostream& os, long long coefficient, const char* symbol) {
  if (coefficient != 1) {
    os << coefficient;
  }
  os << symbol;
}

}  // namespace

std::string Wall::text() const {
  if (a == 0 && b == 0) {
    return "0";
  }
  std::ostringstream os;
  if (a == 0) {
    append_term(os, b, "H");
  } else if (b == 0) {
    append_term(os, a, "L");
  } else if (a > 0) {
    append_term(os, a, "L");
    os << (b > 0 ? "+" : "-");
    append_term(os, b > 0 ? b : -b, "H");
  } else {
    // Leading term positive: render bH - |a|L.
    append_term(os, b, "H");
    os << "-";
    append_term(os, -a, "L");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Map2
// ---------------------------------------------------------------------------

Map2 Map2::identity() { return Map2{{{1, 0}, {0, 1}}}; }

Div2 Map2::apply(const Div2& d) const {
  return Div2{Rat(m[0][0]) * d.a + Rat(m[0][1]) * d.b,
              Rat(m[1][0]) * d.a + Rat(m[1][1]) * d.b};
}

Map2 Map2::compose(const Map2& rhs) const {
  Map2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    }
  }
  return out;
}

Map2 Map2::inverse() const {
  const long long d = det();
  if (d != 1 && d != -1) {
    throw ConfigError("divisor map is not unimodular");
  }
  return Map2{{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

long long Map2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

bool Map2::operator==(const Map2& rhs) const {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (m[i][j] != rhs.m[i][j]) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// TripleForm
// ---------------------------------------------------------------------------

TripleForm TripleForm::from_products(const std::array<Rat, 4>& products) {
  return TripleForm{products[0], products[1], products[2], products[3]};
}

TripleForm TripleForm::from_row(const detcy::InvariantRow& row) {
  return TripleForm{row.L3, row.L2H, row.LH2, row.H3};
}

Rat TripleForm::eval(const Div2& u, const Div2& v, const Div2& w) const {
  return t30 * u.a * v.a * w.a +
         t21 * (u.a * v.a * w.b + u.a * v.b * w.a + u.b * v.a * w.a) +
         t12 * (u.a * v.b * w.b + u.b * v.a * w.b + u.b * v.b * w.a) +
         t03 * u.b * v.b * w.b;
}

// ---------------------------------------------------------------------------
// Pushforward solver
// ---------------------------------------------------------------------------

namespace {

// Exact roots of qa x^2 + qb x + qc = 0. Degenerate linear cases are handled;
// irrational or complex roots abort the solve.
std::vector<Rat> quadratic_roots(const Rat& qa, const Rat& qb, const Rat& qc) {
  if (qa == 0) {
    if (qb == 0) {
      if (qc == 0) {
        throw SolverError("pushforward system is underdetermined");
      }
      return {};
    }
    return {-qc / qb};
  }
  const Rat disc = qb * qb - 4 * qa * qc;
  if (disc < 0) {
    throw SolverError("pushforward system has no real solution (discriminant " +
                      rat_to_string(disc) + ")");
  }
  const std::optional<Rat> root = exact_sqrt(disc);
  if (!root) {
    throw SolverError("pushforward system has irrational solutions (discriminant " +
                      rat_to_string(disc) + ")");
  }
  if (*root == 0) {
    return {-qb / (2 * qa)};
  }
  return {(-qb + *root) / (2 * qa), (-qb - *root) / (2 * qa)};
}

}  // namespace

SolveResult pushforward_solve(const TripleForm& source, const Div2& image_of_h,
                              const Rat& target_vww, const Rat& target_vvw) {
  const Div2 e_l{1, 0};
  const Div2 e_h{0, 1};
  const Div2& w = image_of_h;
  const Rat p = source.eval(e_l, w, w);
  const Rat q = source.eval(e_h, w, w);
  const Rat a = source.eval(e_l, e_l, w);
  const Rat b = source.eval(e_l, e_h, w);
  const Rat c = source.eval(e_h, e_h, w);

  SolveResult result;
  result.lin_L = p;
  result.lin_H = q;
  result.lin_rhs = target_vww;
  result.quad_LL = a;
  result.quad_LH = 2 * b;
  result.quad_HH = c;
  result.quad_rhs = target_vvw;

  std::vector<Div2> candidates;
  if (p != 0) {
    // Eliminate the L coordinate: x = (vww - q y) / p, then the quadratic in
    // y after clearing p^2.
    const Rat qa = a * q * q - 2 * b * p * q + c * p * p;
    const Rat qb = 2 * target_vww * (b * p - a * q);
    const Rat qc = a * target_vww * target_vww - target_vvw * p * p;
    for (const Rat& y : quadratic_roots(qa, qb, qc)) {
      candidates.push_back(Div2{(target_vww - q * y) / p, y});
    }
  } else if (q != 0) {
    const Rat y = target_vww / q;
    for (const Rat& x : quadratic_roots(a, 2 * b * y, c * y * y - target_vvw)) {
      candidates.push_back(Div2{x, y});
    }
  } else {
    throw SolverError("wall divisor pairs to zero with both basis divisors");
  }

  std::vector<Div2> admissible;
  for (const Div2& cand : candidates) {
    if (cand.a * cand.b < 0) {
      admissible.push_back(cand);
    } else {
      result.rejected.push_back(cand);
    }
  }
  if (admissible.empty()) {
    throw SolverError("no pushforward solution with opposite-sign coordinates");
  }
  if (admissible.size() > 1) {
    throw SolverError("ambiguous pushforward solution: two opposite-sign roots");
  }
  result.solution = admissible.front();

  // Re-check both invariant pairings on the chosen root.
  if (source.eval(result.solution, w, w) != target_vww ||
      source.eval(result.solution, result.solution, w) != target_vvw) {
    throw InternalError("pushforward solution fails re-verification");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Named matrices
// ---------------------------------------------------------------------------

Map2 chi_matrix(int fano_index) {
  if (fano_index < 1) {
    throw ConfigError("flop matrix needs a positive Fano index");
  }
  return Map2{{{-1, 0}, {fano_index, 1}}};
}

Map2 involution_matrix(const detcy::InvariantRow& row) {
  const TripleForm form = TripleForm::from_row(row);
  const Div2 ramp{1, -1};  // L - H, the fixed ray
  const Rat a_rat = form.eval(Div2{0, 1}, ramp, ramp);
  const long long a = to_int64(a_rat);
  const Map2 iota{{{a + 1, a}, {-(a + 2), -(a + 1)}}};
  if (iota.det() != -1 || !(iota.compose(iota) == Map2::identity()) ||
      !(iota.apply(ramp) == ramp)) {
    throw InternalError("involution matrix fails its defining identities");
  }
  return iota;
}

// ---------------------------------------------------------------------------
// Chamber assembly
// ---------------------------------------------------------------------------

namespace {

struct IntRay {
  long long a, b;
  bool operator==(const IntRay& rhs) const { return a == rhs.a && b == rhs.b; }
};

Int cross(const IntRay& u, const IntRay& v) {
  return Int(u.a) * v.b - Int(v.a) * u.b;
}

IntRay primitive_ray(const Div2& d) {
  if (d.a == 0 && d.b == 0) {
    throw InternalError("zero divisor cannot span a wall");
  }
  // Clear denominators and divide by the content; the direction is kept.
  const Int da = denominator(d.a);
  const Int db = denominator(d.b);
  const Int scale = da * db / gcd(da, db);
  Int na = numerator(d.a) * (scale / da);
  Int nb = numerator(d.b) * (scale / db);
  const Int g = gcd(abs(na), abs(nb));
  na /= g;
  nb /= g;
  return IntRay{to_int64(Rat(na)), to_int64(Rat(nb))};
}

// One birational model's nef cone, in its own divisor coordinates, plus the
// pushforward into the favored model's coordinates.
struct ModelChamber {
  std::string label;
  Div2 ray1, ray2;
  std::string kind1, kind2;
  Map2 to_favored;
};

struct OrientedChamber {
  std::string label;
  IntRay lo, hi;
  std::string kind_lo, kind_hi;
};

OrientedChamber orient(const ModelChamber& mc) {
  IntRay r1 = primitive_ray(mc.to_favored.apply(mc.ray1));
  IntRay r2 = primitive_ray(mc.to_favored.apply(mc.ray2));
  std::string k1 = mc.kind1;
  std::string k2 = mc.kind2;
  const Int x = cross(r1, r2);
  if (x == 0) {
    throw InternalError("chamber of " + mc.label + " is degenerate");
  }
  if (x < 0) {
    std::swap(r1, r2);
    std::swap(k1, k2);
  }
  return OrientedChamber{mc.label, r1, r2, std::move(k1), std::move(k2)};
}

ChamberDecomposition assemble(CaseId id, std::vector<ModelChamber> models) {
  std::vector<OrientedChamber> chambers;
  chambers.reserve(models.size());
  for (const ModelChamber& mc : models) {
    chambers.push_back(orient(mc));
  }
  // Angular order; all rays lie in a common half-plane, so the exact cross
  // product is a consistent comparator.
  std::sort(chambers.begin(), chambers.end(),
            [](const OrientedChamber& x, const OrientedChamber& y) {
              return cross(x.lo, y.lo) > 0;
            });

  ChamberDecomposition out;
  out.case_id = id;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const OrientedChamber& ch = chambers[i];
    if (i == 0) {
      out.walls.push_back(Wall{ch.lo.a, ch.lo.b, ch.kind_lo});
    } else {
      const OrientedChamber& prev = chambers[i - 1];
      if (!(prev.hi == ch.lo)) {
        throw InternalError("chamber gap or overlap between " + prev.label + " and " +
                            ch.label);
      }
      if (prev.kind_hi != ch.kind_lo) {
        throw InternalError("wall kind mismatch between " + prev.label + " and " +
                            ch.label);
      }
    }
    out.chambers.push_back(ch.label);
    out.walls.push_back(Wall{ch.hi.a, ch.hi.b, ch.kind_hi});
  }

  // The walls must be in strictly increasing angular position and span less
  // than a half turn.
  for (std::size_t i = 0; i + 1 < out.walls.size(); ++i) {
    const IntRay u{out.walls[i].a, out.walls[i].b};
    const IntRay v{out.walls[i + 1].a, out.walls[i + 1].b};
    if (cross(u, v) <= 0) {
      throw InternalError("walls out of strict angular order");
    }
  }
  if (cross(IntRay{out.walls.front().a, out.walls.front().b},
            IntRay{out.walls.back().a, out.walls.back().b}) <= 0) {
    throw InternalError("movable cone spans a half turn or more");
  }
  return out;
}

}  // namespace

ChamberDecomposition assemble_chambers(CaseId id) {
  const detcy::InvariantRow row = detcy::invariant_row(detcy::case_config(id));
  const TripleForm form = TripleForm::from_row(row);
  const int r = detcy::case_fano_index(id);
  const Map2 chi_to_favored = chi_matrix(r).inverse();
  const Div2 ray_l{1, 0};
  const Div2 ray_h{0, 1};
  const Div2 ray_lh{1, -1};

  std::vector<ModelChamber> models;
  switch (id) {
    case CaseId::v4: {
      const Map2 iota = involution_matrix(row);
      const char* k_edge = "edge (K3 fibration)";
      models.push_back({"X_F", ray_lh, ray_h, "involution", "flop", Map2::identity()});
      models.push_back({"X_E", ray_h, ray_l, "flop", k_edge, chi_to_favored});
      models.push_back({"X_F", ray_lh, ray_h, "involution", "flop", iota});
      models.push_back({"X_E", ray_h, ray_l, "flop", k_edge,
                        iota.compose(chi_to_favored)});
      break;
    }
    case CaseId::v5:
    case CaseId::gr24: {
      const bool quintic = (id == CaseId::v5);
      const char* k_edge =
          quintic ? "edge (K3 fibration)" : "edge (elliptic fibration)";
      // The far-side model pushes forward through the flop computed from its
      // own invariant row: the wall divisor maps to L - H, and the two
      // wall-invariant pairings determine the image of L'.
      const std::array<Rat, 4> far =
          detcy::triple_products(detcy::flop_side_config(id));
      const SolveResult theta =
          pushforward_solve(form, ray_lh, /*target_vww=*/far[2], /*target_vvw=*/far[1]);
      const Map2 theta_map{{{to_int64(theta.solution.a), 1},
                            {to_int64(theta.solution.b), -1}}};
      models.push_back({"X_F", ray_lh, ray_h, "flop", "flop", Map2::identity()});
      models.push_back({"X_E", ray_h, ray_l, "flop", k_edge, chi_to_favored});
      if (quintic) {
        models.push_back({"X_F+", ray_h, Div2{2, -1}, "flop", "flop", theta_map});
        models.push_back({"X_F++", Div2{2, -1}, ray_lh, "flop", k_edge, theta_map});
      } else {
        models.push_back({"X_F+", ray_h, ray_lh, "flop", k_edge, theta_map});
      }
      break;
    }
  }
  return assemble(id, std::move(models));
}

// ---------------------------------------------------------------------------
// Fibration and flop invariants
// ---------------------------------------------------------------------------

std::vector<FiberCheck> fiber_invariant_checks(CaseId id) {
  std::vector<FiberCheck> out;
  const auto add = [&out](std::string name, Rat expected, Rat computed) {
    const bool pass = (expected == computed);
    out.push_back(FiberCheck{std::move(name), std::move(expected), std::move(computed), pass});
  };

  const detcy::PairConfig cfg = detcy::case_config(id);
  const detcy::PairConfig dual = detcy::dual_config(cfg);
  const TripleForm form = TripleForm::from_products(detcy::triple_products(cfg));
  const Div2 ray_lh{1, -1};

  switch (id) {
    case CaseId::v4: {
      add("K3 fiber degree at the dual-side edge (c2.L)", 24,
          detcy::c2_pairings(dual).first);
      add("double-cover base degree ((L-H)^3)", 2, form.eval(ray_lh, ray_lh, ray_lh));
      add("zero divisor pairs to zero", 0,
          form.eval(Div2{0, 0}, Div2{1, 0}, Div2{0, 1}));
      break;
    }
    case CaseId::v5: {
      add("K3 fiber degree at the dual-side edge (c2.L)", 24,
          detcy::c2_pairings(dual).first);
      add("c2(T).c2(F) pairing", 53,
          cfg.space->integrate(chern::chern_class(cfg.space->tangent, 2) *
                               chern::chern_class(cfg.f, 2)));
      // Far edge: c2 . (L'-H') on the far-side model, corrected by the
      // pairing of the section class: it meets H' twice and 2L'-H' not at
      // all, so it meets L'-H' with multiplicity -1.
      const auto [c2l, c2h] = detcy::c2_pairings(detcy::flop_side_config(id));
      const Rat section_h = 2;
      const Rat section_2l_h = 0;
      const Rat section_lh = (section_2l_h + section_h) / 2 - section_h;
      add("K3 fiber degree at the far edge (c2.(L-H) + 2 correction)", 24,
          c2l - c2h + 2 * section_lh);
      break;
    }
    case CaseId::gr24: {
      add("elliptic fiber degree at the dual-side edge (L^2 H)", 5,
          detcy::triple_products(dual)[1]);
      const TripleForm far =
          TripleForm::from_products(detcy::triple_products(detcy::flop_side_config(id)));
      add("elliptic fiber degree at the far edge ((L-H)^2 H)", 5,
          far.eval(ray_lh, ray_lh, Div2{0, 1}));
      break;
    }
  }
  return out;
}

}  // namespace conewright::birat
