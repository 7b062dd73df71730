#include <conewright/spaces.hpp>

#include <conewright/errors.hpp>

#include <algorithm>
#include <cctype>
#include <utility>

namespace conewright::spaces {

using chern::Bundle;
using ring::PolyClass;
using ring::RingHandle;
using ring::RingPresentation;
using ring::Term;
using ring::TermList;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

PolyClass truncate_to(const PolyClass& x, int degree) {
  PolyClass out = x.ring()->zero();
  for (int k = 0; k <= degree; ++k) {
    out += x.component(k);
  }
  return out;
}

// --- projective space -------------------------------------------------------

SpaceModel build_projective_space(int n) {
  RingHandle ring = RingPresentation::make(
      "P" + std::to_string(n), {{"h", 1}},
      {TermList{{ring::Monomial{static_cast<unsigned>(n + 1)}, 1}}}, n,
      TermList{{ring::Monomial{static_cast<unsigned>(n)}, 1}});
  const PolyClass h = ring->gen("h");
  // Euler sequence: c(T) = (1+h)^{n+1}, truncated.
  const PolyClass ct = (ring->one() + h).pow(static_cast<unsigned>(n + 1));
  SpaceModel m{
      "p" + std::to_string(n), "P^" + std::to_string(n), ring, n,
      n + 1,  h, chern::make_bundle(n, ct, "T"), {}, 1, ring->one()};
  return m;
}

// --- Grassmannians of planes ------------------------------------------------

// Ring of Gr(2,n) on the Chern classes s1, s2 of the tautological subbundle:
// the relations say that the inverse of 1 + s1 + s2 terminates at degree n-2,
// i.e. its degree n-1 and n parts vanish. The inverse-series parts are the
// Chern classes of the quotient bundle.
std::vector<TermList> grassmann_relations(int n) {
  // i_d = -(s1 i_{d-1} + s2 i_{d-2}) as raw polynomials in s1, s2.
  std::vector<std::map<ring::Monomial, Rat>> inv(n + 1);
  inv[0] = {{{0, 0}, 1}};
  for (int d = 1; d <= n; ++d) {
    for (const auto& [m, c] : inv[d - 1]) {
      inv[d][{m[0] + 1, m[1]}] += -c;
    }
    if (d >= 2) {
      for (const auto& [m, c] : inv[d - 2]) {
        inv[d][{m[0], m[1] + 1}] += -c;
      }
    }
  }
  auto to_terms = [](const std::map<ring::Monomial, Rat>& poly) {
    TermList terms;
    for (const auto& [m, c] : poly) {
      terms.push_back(Term{m, c});
    }
    return terms;
  };
  return {to_terms(inv[n - 1]), to_terms(inv[n])};
}

RingHandle grassmann_ring(int n, const ring::Monomial& point_monomial) {
  const int top = 2 * (n - 2);
  return RingPresentation::make("Gr(2," + std::to_string(n) + ")",
                                {{"s1", 1}, {"s2", 2}}, grassmann_relations(n),
                                top, TermList{{point_monomial, 1}});
}

Bundle quotient_bundle(int n, const Bundle& sub) {
  // c(Q) = c(S)^{-1}: the defining sequence 0 -> S -> O^n -> Q -> 0.
  return chern::make_bundle(n - 2, sub.total_chern.inverse(), "Q");
}

SpaceModel build_gr24() {
  // Top-degree basis is {s2^2} and the point class integrates to 1.
  RingHandle ring = grassmann_ring(4, {0, 2});
  const PolyClass sigma1 = -ring->gen("s1");
  Bundle s = chern::make_bundle(2, ring->one() + ring->gen("s1") + ring->gen("s2"), "S");
  Bundle q = quotient_bundle(4, s);
  Bundle tangent = chern::tensor(chern::dual(s), q);
  tangent.label = "T";
  // F = S(2) + O(1), the rank-3 bundle whose sections cut out the family.
  Bundle f = chern::whitney_sum(chern::twist_by_line(s, sigma1 * Rat(2)),
                                chern::line_bundle(sigma1, "O(1)"));
  f.label = "F";
  SpaceModel m{"gr24", "Gr(2,4)", ring, 4, 4, sigma1, std::move(tangent),
               {}, 1, ring->one()};
  m.named_bundles.emplace("S", std::move(s));
  m.named_bundles.emplace("Q", std::move(q));
  m.named_bundles.emplace("F", std::move(f));
  return m;
}

SpaceModel build_gr25() {
  // Top-degree basis is {s2^3}; it is the point class.
  RingHandle ring = grassmann_ring(5, {0, 3});
  const PolyClass sigma1 = -ring->gen("s1");
  Bundle s = chern::make_bundle(2, ring->one() + ring->gen("s1") + ring->gen("s2"), "S");
  Bundle q = quotient_bundle(5, s);
  Bundle tangent = chern::tensor(chern::dual(s), q);
  tangent.label = "T";
  SpaceModel m{"gr25", "Gr(2,5)", ring, 6, 5, sigma1, std::move(tangent),
               {}, 1, ring->one()};
  m.named_bundles.emplace("S", std::move(s));
  m.named_bundles.emplace("Q", std::move(q));
  return m;
}

// --- blow-up of P^4 at a point ----------------------------------------------

SpaceModel build_blowup_p4() {
  // Presented as the P^1-bundle over P^3 with alpha the base hyperplane and
  // xi the degree-1 class with xi^2 = alpha xi (the pullback of the P^4
  // hyperplane under the blow-down). The point class is xi^4.
  RingHandle ring = RingPresentation::make(
      "Bl(P4)", {{"a", 1}, {"x", 1}},
      {TermList{{{4, 0}, 1}},                      // a^4 = 0
       TermList{{{0, 2}, 1}, {{1, 1}, -1}}},       // x^2 = a x
      4, TermList{{{0, 4}, 1}});
  const PolyClass alpha = ring->gen("a");
  const PolyClass xi = ring->gen("x");
  // Tangent from the bundle structure: the pullback of T_{P^3} plus the
  // relative line O(2 xi - alpha).
  const Bundle base_tangent =
      chern::make_bundle(3, (ring->one() + alpha).pow(4), "T_base");
  Bundle tangent = chern::whitney_sum(
      base_tangent, chern::line_bundle(xi * Rat(2) - alpha, "O(2x-a)"));
  tangent.label = "T";
  SpaceModel m{"blp4", "Bl(P4)", ring, 4, 0, xi, std::move(tangent), {}, 1,
               ring->one()};
  return m;
}

// --- del Pezzo fourfolds ----------------------------------------------------

SpaceModel build_v4(const SpaceModel& gr24) {
  // Double cover p: V4 -> Gr(2,4) branched in a quadratic section. The usable
  // classes are exactly the pullbacks, so the model shares the Grassmannian
  // presentation and doubles the integration functional. The tangent
  // character is ch(T of the base) - (e^{2H} - e^{H}).
  const RingHandle& ring = gr24.ring;
  const PolyClass h = gr24.hyperplane;
  const PolyClass ch =
      chern::to_character(gr24.tangent) -
      (chern::exp_class(h * Rat(2)) - chern::exp_class(h));
  Bundle tangent = chern::from_character(4, ch, "T");
  Bundle s = gr24.bundle("S");
  s.label = "S";
  Bundle f = chern::twist_by_line(chern::dual(s), h);
  f.label = "F";
  SpaceModel m{"v4", "V4", ring, 4, 3, h, std::move(tangent), {}, 2, ring->one()};
  m.named_bundles.emplace("S", std::move(s));
  m.named_bundles.emplace("F", std::move(f));
  return m;
}

SpaceModel build_v5(const SpaceModel& gr25) {
  // Codimension-2 linear section of Gr(2,5): shares the Grassmannian
  // presentation, integrates against the section class sigma1^2, and its
  // tangent classes divide out two hyperplane factors.
  const RingHandle& ring = gr25.ring;
  const PolyClass h = gr25.hyperplane;
  // Classes on the section live in degrees up to its dimension; the ambient
  // expression is truncated there before the rank check.
  const PolyClass ct = truncate_to(
      gr25.tangent.total_chern * (ring->one() + h).inverse().pow(2), 4);
  Bundle tangent = chern::make_bundle(4, ct, "T");
  Bundle s = gr25.bundle("S");
  s.label = "S";
  Bundle f = chern::twist_by_line(chern::dual(s), h);
  f.label = "F";
  SpaceModel m{"v5", "V5", ring, 4, 3, h, std::move(tangent), {}, 1, h * h};
  m.named_bundles.emplace("S", std::move(s));
  m.named_bundles.emplace("F", std::move(f));
  return m;
}

// --- catalog ----------------------------------------------------------------

struct Catalog {
  std::map<std::string, SpaceModel> models;
  std::vector<std::string> order;

  void add(SpaceModel m) {
    order.push_back(m.name);
    models.emplace(m.name, std::move(m));
  }
};

const Catalog& catalog() {
  static const Catalog instance = [] {
    Catalog c;
    for (int n = 1; n <= 5; ++n) {
      c.add(build_projective_space(n));
    }
    c.add(build_gr24());
    c.add(build_gr25());
    c.add(build_blowup_p4());
    c.add(build_v4(c.models.at("gr24")));
    c.add(build_v5(c.models.at("gr25")));
    return c;
  }();
  return instance;
}

}  // namespace

Rat SpaceModel::integrate(const ring::PolyClass& x) const {
  if (x.ring().get() != ring.get()) {
    throw ConfigError("class does not live on " + display_name);
  }
  return degree_factor * ring->integrate(x * point_scale);
}

const Bundle& SpaceModel::bundle(std::string_view bundle_name) const {
  const auto it = named_bundles.find(std::string(bundle_name));
  if (it == named_bundles.end()) {
    throw ConfigError(display_name + " has no bundle named '" +
                      std::string(bundle_name) + "'");
  }
  return it->second;
}

const SpaceModel& get(std::string_view name) {
  const Catalog& c = catalog();
  const auto it = c.models.find(lower(name));
  if (it == c.models.end()) {
    std::string known;
    for (const std::string& n : c.order) {
      known += (known.empty() ? "" : ", ") + n;
    }
    throw ConfigError("unknown space '" + std::string(name) + "' (known: " + known + ")");
  }
  return it->second;
}

std::vector<std::string> catalog_names() { return catalog().order; }

Rat pushforward_check(const SpaceModel& model, const ring::PolyClass& x) {
  // Route the functional through the upstream model: scale by the cycle class
  // of the derived model, integrate on the ambient space, and apply the
  // covering degree. Models without an upstream are their own oracle.
  Rat upstream;
  if (model.name == "v4") {
    upstream = Rat(2) * get("gr24").integrate(x);
  } else if (model.name == "v5") {
    upstream = get("gr25").integrate(x * model.point_scale);
  } else {
    upstream = model.degree_factor * model.ring->integrate(x * model.point_scale);
  }
  const Rat own = model.integrate(x);
  if (upstream != own) {
    throw InternalError("pushforward mismatch on " + model.display_name + ": upstream " +
                        rat_to_string(upstream) + " vs model " + rat_to_string(own));
  }
  return own;
}

}  // namespace conewright::spaces
