#pragma once

#include <conewright/spaces.hpp>

#include <map>
#include <utility>
#include <vector>

namespace conewright::testsupport {

// ---------------------------------------------------------------------------
// Combinatorial cycle-class oracle for rank-2 subspace Grassmannians.
//
// Classes are held in the sigma_{a,b} basis of partitions fitting in a
// 2 x (n-2) box, and multiplication is implemented purely combinatorially:
// multiplying by sigma_k adds a horizontal strip, and a general basis class
// acts through the two-row determinantal identity
//   x . sigma_{c,d} = strip_c(strip_d(x)) - strip_{c+1}(strip_{d-1}(x)).
// Nothing here touches the polynomial presentation, so agreement with the
// ring layer is an independent check of its arithmetic.
// ---------------------------------------------------------------------------

using Partition = std::pair<int, int>;  // (a, b) with a >= b >= 0
using CycleVector = std::map<Partition, Rat>;

// All partitions in the 2 x (n-2) box.
std::vector<Partition> box_partitions(int n);
CycleVector unit_class();
CycleVector strip_multiply(int n, int k, const CycleVector& x);
CycleVector oracle_multiply(int n, const Partition& mu, const CycleVector& x);
// Integral over the Grassmannian: the coefficient of the box-filling class.
Rat oracle_integral(int n, const CycleVector& x);

// The same cycle class realized inside a catalog ring presentation, through
// the quotient bundle's Chern classes and the determinantal identity.
ring::PolyClass ring_schubert(const spaces::SpaceModel& g, const Partition& p);

// ---------------------------------------------------------------------------
// Complete-intersection tangent oracle.
//
// For a smooth complete intersection of multidegree degs in a projective
// ambient_dim-space, the tangent series in the restricted hyperplane class h
// is (1+h)^{ambient_dim+1} / prod_i (1 + degs[i] h) truncated to the
// dimension, and h^{dim} integrates to prod_i degs[i]. Implemented with a
// small dense coefficient vector, independent of the ring layer.
// ---------------------------------------------------------------------------

std::vector<Rat> ci_tangent_series(int ambient_dim, const std::vector<int>& degs);
Rat ci_degree(const std::vector<int>& degs);
// The pairing c_k(T) . h^{dim - k} on the complete intersection.
Rat ci_tangent_pairing(int ambient_dim, const std::vector<int>& degs, int k);
// Topological Euler number: the top pairing.
Rat ci_euler(int ambient_dim, const std::vector<int>& degs);

}  // namespace conewright::testsupport
