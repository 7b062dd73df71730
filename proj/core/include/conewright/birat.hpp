#pragma once

#include <conewright/detcy.hpp>

#include <string>
#include <vector>

namespace conewright::birat {

// A divisor class a L + b H with exact rational coordinates.
struct Div2 {
  Rat a, b;

  Div2 operator+(const Div2& rhs) const { return {a + rhs.a, b + rhs.b}; }
  Div2 operator-(const Div2& rhs) const { return {a - rhs.a, b - rhs.b}; }
  Div2 operator*(const Rat& s) const { return {a * s, b * s}; }
  bool operator==(const Div2& rhs) const { return a == rhs.a && b == rhs.b; }
};

// A wall of the chamber decomposition: a primitive integer ray in its
// geometric direction, plus the kind of contraction it carries.
struct Wall {
  long long a, b;
  std::string kind;

  // Renders like "15L-17H", "H", "3H-L": leading term positive, unit
  // coefficients omitted.
  std::string text() const;
  bool same_ray(const Wall& rhs) const { return a == rhs.a && b == rhs.b; }
};

// Integral linear map on divisor coordinates, acting on column vectors
// (a, b)^T. All maps between the birational models are unimodular.
struct Map2 {
  long long m[2][2];

  static Map2 identity();
  Div2 apply(const Div2& d) const;
  Map2 compose(const Map2& rhs) const;  // this after rhs
  Map2 inverse() const;
  long long det() const;
  bool operator==(const Map2& rhs) const;
};

// The cubic intersection form of a threefold with Picard rank 2, stored via
// the four triple products of the basis (L, H).
struct TripleForm {
  Rat t30, t21, t12, t03;  // L^3, L^2 H, L H^2, H^3

  static TripleForm from_products(const std::array<Rat, 4>& products);
  static TripleForm from_row(const detcy::InvariantRow& row);
  Rat eval(const Div2& u, const Div2& v, const Div2& w) const;
};

// Solves for the unknown image v = a L + b H of a divisor under a birational
// pushforward, given the source-side cubic form, the known image w of the
// wall divisor, and the two invariant pairings v.w.w and v.v.w. The linear
// equation eliminates one unknown; the remaining exact rational quadratic
// must have a unique root with a b < 0.
struct SolveResult {
  Div2 solution;
  // Expanded system, for reporting: lin_L a + lin_H b = lin_rhs and
  // quad_LL a^2 + quad_LH a b + quad_HH b^2 = quad_rhs.
  Rat lin_L, lin_H, lin_rhs;
  Rat quad_LL, quad_LH, quad_HH, quad_rhs;
  std::vector<Div2> rejected;  // rational roots that violate the sign pattern
};
SolveResult pushforward_solve(const TripleForm& source, const Div2& image_of_h,
                              const Rat& target_vww, const Rat& target_vvw);

// Pushforward matrix of the flop between the two determinantal resolutions:
// L -> -L + r H, H -> H, where r is the Fano index of the ambient fourfold.
// Self-inverse with determinant -1.
Map2 chi_matrix(int fano_index);

// Pushforward matrix of the double-cover involution of the degree-4 family:
// fixes L - H and sends H to a (L - H) - H with a = H.(L-H)^2.
Map2 involution_matrix(const detcy::InvariantRow& row);

// The movable cone of the family's favored resolution, decomposed into nef
// chambers of the birational models, assembled by pushing each model's nef
// cone through the chain of flop/involution identifications.
struct ChamberDecomposition {
  detcy::CaseId case_id;
  std::vector<Wall> walls;              // ordered by strict angular position
  std::vector<std::string> chambers;    // model labels; size = walls - 1
};
ChamberDecomposition assemble_chambers(detcy::CaseId id);

// Named exact checks of fibration degrees and flop-invariant pairings along
// the decomposition's edge and interior walls.
struct FiberCheck {
  std::string name;
  Rat expected, computed;
  bool pass;
};
std::vector<FiberCheck> fiber_invariant_checks(detcy::CaseId id);

}  // namespace conewright::birat
