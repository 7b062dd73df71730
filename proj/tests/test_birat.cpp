#include <doctest.h>

#include <conewright/birat.hpp>
#include <conewright/detcy.hpp>
#include <conewright/errors.hpp>

#include <string>
#include <vector>

namespace cw = conewright;
using cw::Rat;
using cw::birat::Div2;
using cw::birat::Map2;
using cw::birat::TripleForm;
using cw::birat::Wall;
using cw::detcy::CaseId;

TEST_SUITE("birat") {

TEST_CASE("wall rendering") {
  CHECK(Wall{15, -17, ""}.text() == "15L-17H");
  CHECK(Wall{8, -9, ""}.text() == "8L-9H");
  CHECK(Wall{1, -1, ""}.text() == "L-H");
  CHECK(Wall{0, 1, ""}.text() == "H");
  CHECK(Wall{1, 0, ""}.text() == "L");
  CHECK(Wall{-1, 3, ""}.text() == "3H-L");
  CHECK(Wall{-2, 5, ""}.text() == "5H-2L");
  CHECK(Wall{2, 3, ""}.text() == "2L+3H");
  CHECK(Wall{1, 1, ""}.text() == "L+H");
  CHECK(Wall{0, -2, ""}.text() == "-2H");
  CHECK(Wall{3, 0, ""}.text() == "3L");
  CHECK(Wall{0, 0, ""}.text() == "0");
  CHECK(Wall{2, -1, "flop"}.same_ray(Wall{2, -1, "edge"}));
  CHECK_FALSE(Wall{2, -1, ""}.same_ray(Wall{-2, 1, ""}));
}

TEST_CASE("divisor maps") {
  const Map2 id = Map2::identity();
  CHECK(id.det() == 1);
  CHECK(id.apply(Div2{Rat(3), Rat(-5)}) == Div2{Rat(3), Rat(-5)});

  const Map2 m{{{9, 8}, {-10, -9}}};
  CHECK(m.det() == -1);
  CHECK(m.apply(Div2{1, 0}) == Div2{9, -10});
  CHECK(m.apply(Div2{0, 1}) == Div2{8, -9});
  CHECK(m.compose(m) == id);
  CHECK(m.inverse() == m);

  // Composition applies the right factor first.
  const Map2 shear{{{1, 1}, {0, 1}}};
  const Map2 swap{{{0, 1}, {1, 0}}};
  const Div2 d{2, 5};
  CHECK(shear.compose(swap).apply(d) == shear.apply(swap.apply(d)));
  CHECK(shear.inverse().compose(shear) == id);

  CHECK_THROWS_AS((Map2{{{2, 0}, {0, 1}}}.inverse()), cw::ConfigError);
}

TEST_CASE("cubic form evaluation") {
  const cw::detcy::InvariantRow row{80, 48, 26, 12, 0, 0, 0};
  const TripleForm form = TripleForm::from_row(row);
  const Div2 l{1, 0};
  const Div2 h{0, 1};

  CHECK(form.eval(l, l, l) == 80);
  CHECK(form.eval(l, l, h) == 48);
  CHECK(form.eval(l, h, h) == 26);
  CHECK(form.eval(h, h, h) == 12);

  // Fully symmetric in its three slots.
  const Div2 u{2, -1};
  const Div2 v{1, 3};
  const Div2 w{-1, 1};
  const Rat val = form.eval(u, v, w);
  CHECK(form.eval(v, u, w) == val);
  CHECK(form.eval(w, v, u) == val);
  CHECK(form.eval(u, w, v) == val);

  // Linear in each slot.
  CHECK(form.eval(u + v, v, w) == form.eval(u, v, w) + form.eval(v, v, w));
  CHECK(form.eval(u * Rat(3), v, w) == Rat(3) * val);

  // (L - H)^3 on the degree-4 family: the double-cover base degree.
  const Div2 lh{1, -1};
  CHECK(form.eval(lh, lh, lh) == 2);

  CHECK(TripleForm::from_products({80, 48, 26, 12}).eval(u, v, w) == val);
}

TEST_CASE("reflection matrices from the Fano index") {
  const Map2 m3 = cw::birat::chi_matrix(3);
  CHECK(m3 == Map2{{{-1, 0}, {3, 1}}});
  CHECK(m3.det() == -1);
  CHECK(m3.compose(m3) == Map2::identity());
  CHECK(m3.apply(Div2{0, 1}) == Div2{0, 1});  // fixes H
  CHECK(m3.apply(Div2{1, 0}) == Div2{-1, 3});

  CHECK(cw::birat::chi_matrix(4) == Map2{{{-1, 0}, {4, 1}}});
  CHECK_THROWS_AS(cw::birat::chi_matrix(0), cw::ConfigError);
  CHECK_THROWS_AS(cw::birat::chi_matrix(-2), cw::ConfigError);
}

TEST_CASE("double-cover involution of the degree-4 family") {
  const auto row = cw::detcy::invariant_row(cw::detcy::case_config(CaseId::v4));
  const Map2 iota = cw::birat::involution_matrix(row);
  CHECK(iota == Map2{{{9, 8}, {-10, -9}}});
  CHECK(iota.det() == -1);
  CHECK(iota.compose(iota) == Map2::identity());
  CHECK(iota.apply(Div2{1, -1}) == Div2{1, -1});  // fixes the covering ray

  // The construction depends only on the pairing a = H.(L-H)^2; a synthetic
  // row with the same pairing yields the same matrix.
  const cw::detcy::InvariantRow synthetic{0, 8, 0, 0, 0, 0, 0};
  CHECK(cw::birat::involution_matrix(synthetic) == iota);
}

TEST_CASE("pushforward solver reproduces the reflection coefficients") {
  struct System {
    CaseId id;
    std::array<Rat, 4> receiving;  // dual-side triple products
    long long lin_l, lin_h, lin_rhs;
    long long quad_lh, quad_hh, quad_rhs;
    Div2 solution;
    Div2 rejected;
  };
  const std::vector<System> systems = {
      {CaseId::v4, {0, 0, 10, 12}, 10, 12, 26, 20, 12, 48, Div2{-1, 3},
       Div2{1, Rat(4, 3)}},
      {CaseId::v5, {0, 0, 12, 15}, 12, 15, 33, 24, 15, 63, Div2{-1, 3},
       Div2{1, Rat(7, 5)}},
      {CaseId::gr24, {0, 5, 11, 8}, 11, 8, 21, 22, 8, 45, Div2{-1, 4},
       Div2{1, Rat(5, 4)}},
  };
  for (const System& sys : systems) {
    CAPTURE(cw::detcy::case_name(sys.id));
    const auto cfg = cw::detcy::case_config(sys.id);
    const auto primal = cw::detcy::triple_products(cfg);
    const auto dual = cw::detcy::triple_products(cw::detcy::dual_config(cfg));
    CHECK(dual == sys.receiving);

    // The wall divisor H maps to itself; the two pairings are read off the
    // favored side.
    const auto res = cw::birat::pushforward_solve(
        TripleForm::from_products(dual), Div2{0, 1},
        /*target_vww=*/primal[2], /*target_vvw=*/primal[1]);
    CHECK(res.solution == sys.solution);
    CHECK(res.lin_L == sys.lin_l);
    CHECK(res.lin_H == sys.lin_h);
    CHECK(res.lin_rhs == sys.lin_rhs);
    CHECK(res.quad_LH == sys.quad_lh);
    CHECK(res.quad_HH == sys.quad_hh);
    CHECK(res.quad_rhs == sys.quad_rhs);
    REQUIRE(res.rejected.size() == 1);
    CHECK(res.rejected[0] == sys.rejected);

    // The gr24 receiving side has a nonzero L^2 H, visible in the quadratic.
    if (sys.id == CaseId::gr24) {
      CHECK(res.quad_LL == 5);
    } else {
      CHECK(res.quad_LL == 0);
    }
  }
}

TEST_CASE("pushforward solver finds the far-side flops") {
  // Quintic family: the favored form receives the far model through the
  // wall L - H.
  {
    const auto primal = cw::detcy::triple_products(cw::detcy::case_config(CaseId::v5));
    const auto far =
        cw::detcy::triple_products(cw::detcy::flop_side_config(CaseId::v5));
    const auto res = cw::birat::pushforward_solve(
        TripleForm::from_products(primal), Div2{1, -1},
        /*target_vww=*/far[2], /*target_vvw=*/far[1]);
    CHECK(res.solution == Div2{5, -6});
    CHECK(res.lin_L == 17);
    CHECK(res.lin_H == 12);
    CHECK(res.lin_rhs == 13);
    CHECK(res.quad_LL == 47);
    CHECK(res.quad_LH == 60);
    CHECK(res.quad_HH == 18);
    CHECK(res.quad_rhs == 23);
    REQUIRE(res.rejected.size() == 1);
    CHECK(res.rejected[0] == Div2{Rat(1, 5), Rat(4, 5)});
  }
  {
    const auto primal =
        cw::detcy::triple_products(cw::detcy::case_config(CaseId::gr24));
    const auto far =
        cw::detcy::triple_products(cw::detcy::flop_side_config(CaseId::gr24));
    const auto res = cw::birat::pushforward_solve(
        TripleForm::from_products(primal), Div2{1, -1},
        /*target_vww=*/far[2], /*target_vvw=*/far[1]);
    CHECK(res.solution == Div2{5, -6});
    CHECK(res.lin_L == 16);
    CHECK(res.lin_H == 11);
    CHECK(res.lin_rhs == 14);
    CHECK(res.quad_LL == 40);
    CHECK(res.quad_LH == 48);
    CHECK(res.quad_HH == 13);
    CHECK(res.quad_rhs == 28);
    REQUIRE(res.rejected.size() == 1);
    CHECK(res.rejected[0] == Div2{Rat(3, 5), Rat(2, 5)});
  }
}

TEST_CASE("solver failure modes") {
  // Elimination through the L slot: P = 1, so b is the remaining unknown and
  // the reduced quadratic is -b^2 = vvw.
  const TripleForm probe{0, 0, 1, 1};
  const Div2 h{0, 1};

  // Complex pair.
  CHECK_THROWS_WITH_AS(cw::birat::pushforward_solve(probe, h, 0, 4),
                       "pushforward system has no real solution (discriminant -16)",
                       cw::SolverError);
  // Real but irrational pair.
  CHECK_THROWS_WITH_AS(cw::birat::pushforward_solve(probe, h, 0, -3),
                       "pushforward system has irrational solutions (discriminant 12)",
                       cw::SolverError);
  // Two admissible roots: (2, -2) and (-2, 2).
  CHECK_THROWS_WITH_AS(cw::birat::pushforward_solve(probe, h, 0, -4),
                       "ambiguous pushforward solution: two opposite-sign roots",
                       cw::SolverError);
  // Unique root (0, 0) violates the sign pattern.
  CHECK_THROWS_WITH_AS(cw::birat::pushforward_solve(probe, h, 0, 0),
                       "no pushforward solution with opposite-sign coordinates",
                       cw::SolverError);

  // Wall pairs to zero against both basis divisors.
  const TripleForm blind{1, 0, 0, 0};
  CHECK_THROWS_WITH_AS(cw::birat::pushforward_solve(blind, h, 1, 1),
                       "wall divisor pairs to zero with both basis divisors",
                       cw::SolverError);

  // P = 0 forces b from the linear equation; with no quadratic content left
  // the system cannot pin down a.
  const TripleForm thin{0, 0, 0, 1};
  CHECK_THROWS_WITH_AS(cw::birat::pushforward_solve(thin, h, 1, 1),
                       "pushforward system is underdetermined", cw::SolverError);

  // Same shape, but with consistent data and quadratic content: P = 0,
  // A != 0 solves a two-root quadratic in a; exactly one root is admissible.
  const TripleForm mixed{0, 1, 0, 1};
  const auto res = cw::birat::pushforward_solve(mixed, h, 1, 5);
  CHECK(res.solution == Div2{-2, 1});
  REQUIRE(res.rejected.size() == 1);
  CHECK(res.rejected[0] == Div2{2, 1});
}

TEST_CASE("chamber decompositions of the movable cones") {
  struct Expected {
    CaseId id;
    std::vector<std::string> walls;
    std::vector<std::string> kinds;
    std::vector<std::string> chambers;
  };
  const std::vector<Expected> cases = {
      {CaseId::v4,
       {"15L-17H", "8L-9H", "L-H", "H", "3H-L"},
       {"edge (K3 fibration)", "flop", "involution", "flop", "edge (K3 fibration)"},
       {"X_E", "X_F", "X_F", "X_E"}},
      {CaseId::v5,
       {"4L-5H", "9L-11H", "L-H", "H", "3H-L"},
       {"edge (K3 fibration)", "flop", "flop", "flop", "edge (K3 fibration)"},
       {"X_F++", "X_F+", "X_F", "X_E"}},
      {CaseId::gr24,
       {"4L-5H", "L-H", "H", "4H-L"},
       {"edge (elliptic fibration)", "flop", "flop", "edge (elliptic fibration)"},
       {"X_F+", "X_F", "X_E"}},
  };
  for (const Expected& want : cases) {
    CAPTURE(cw::detcy::case_name(want.id));
    const auto cd = cw::birat::assemble_chambers(want.id);
    CHECK(cd.case_id == want.id);
    REQUIRE(cd.walls.size() == want.walls.size());
    REQUIRE(cd.chambers.size() == want.walls.size() - 1);
    for (std::size_t i = 0; i < want.walls.size(); ++i) {
      CAPTURE(i);
      CHECK(cd.walls[i].text() == want.walls[i]);
      CHECK(cd.walls[i].kind == want.kinds[i]);
    }
    CHECK(cd.chambers == want.chambers);
  }
}

TEST_CASE("fibration and flop pairings along the walls") {
  for (CaseId id : {CaseId::v4, CaseId::v5, CaseId::gr24}) {
    CAPTURE(cw::detcy::case_name(id));
    const auto checks = cw::birat::fiber_invariant_checks(id);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(c.expected == c.computed);
    }
  }

  // The anchored fibration degrees, by name.
  const auto find = [](CaseId id, const std::string& name) {
    for (const auto& c : cw::birat::fiber_invariant_checks(id)) {
      if (c.name == name) {
        return c;
      }
    }
    FAIL("no check named ", name);
    return cw::birat::FiberCheck{};
  };
  CHECK(find(CaseId::v4, "K3 fiber degree at the dual-side edge (c2.L)").computed == 24);
  CHECK(find(CaseId::v4, "double-cover base degree ((L-H)^3)").computed == 2);
  CHECK(find(CaseId::v5, "K3 fiber degree at the dual-side edge (c2.L)").computed == 24);
  CHECK(find(CaseId::v5, "c2(T).c2(F) pairing").computed == 53);
  CHECK(find(CaseId::v5, "K3 fiber degree at the far edge (c2.(L-H) + 2 correction)")
            .computed == 24);
  CHECK(find(CaseId::gr24, "elliptic fiber degree at the dual-side edge (L^2 H)")
            .computed == 5);
  CHECK(find(CaseId::gr24, "elliptic fiber degree at the far edge ((L-H)^2 H)")
            .computed == 5);
}

}  // TEST_SUITE
