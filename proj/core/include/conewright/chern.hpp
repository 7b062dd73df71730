#pragma once

#include <conewright/ring.hpp>

#include <string>

namespace conewright::chern {

// A vector bundle (or formal difference of bundles) on a space, represented
// by its rank and total Chern class. Genuine bundles have nonnegative rank
// and a total Chern class vanishing above the rank; formal differences are
// flagged virtual and support only additive operations and duals.
struct Bundle {
  int rank;
  ring::PolyClass total_chern;  // degree-0 part equal to 1
  std::string label;
  bool is_virtual;
};

// Constructs a genuine bundle; validates that the degree-0 part of the total
// Chern class is 1 and that components above the rank vanish.
Bundle make_bundle(int rank, const ring::PolyClass& total_chern, std::string label);
Bundle trivial_bundle(const ring::RingHandle& ring, int rank);
// Line bundle with the given first Chern class (homogeneous of degree 1).
Bundle line_bundle(const ring::PolyClass& c1, std::string label);

// k-th Chern class of the expression (zero above the carrier's top degree).
ring::PolyClass chern_class(const Bundle& e, int k);

// Direct sum: ranks add, total Chern classes multiply.
Bundle whitney_sum(const Bundle& e, const Bundle& f);
// Formal difference e - f: c(e) c(f)^{-1}, truncated; always virtual.
Bundle virtual_difference(const Bundle& e, const Bundle& f);
// Dual: c_k -> (-1)^k c_k.
Bundle dual(const Bundle& e);
// Twist of a genuine bundle by a line bundle with first Chern class lambda:
// c_k(E (x) L) = sum_i C(rank - i, k - i) c_i(E) lambda^{k-i}.
Bundle twist_by_line(const Bundle& e, const ring::PolyClass& lambda);
// Tensor product of genuine bundles, via multiplicativity of the character.
Bundle tensor(const Bundle& e, const Bundle& f);
// For a genuine bundle of rank r >= 2: the (r-1)-st exterior power, realized
// as dual(E) twisted by det E.
Bundle exterior_top_minus_one(const Bundle& e);

// Chern character as an inhomogeneous rational class; degree-0 part is the
// rank. Inverse direction recovers Chern classes through the Newton
// identities relating power sums and elementary symmetric functions.
ring::PolyClass to_character(const Bundle& e);
Bundle from_character(int rank, const ring::PolyClass& character, std::string label);

// exp of a class with zero degree-0 part: sum_k x^k / k!, truncated.
ring::PolyClass exp_class(const ring::PolyClass& x);

}  // namespace conewright::chern
