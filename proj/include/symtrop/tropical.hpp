#pragma once

#include <string>
#include <vector>

#include "symtrop/cone.hpp"
#include "symtrop/partition.hpp"

namespace symtrop {

// Orthant Q_j = {x : x_j <= 0, x_i >= 0 for all i != j} (0-based j).
Cone orthant_q(int dim, int j);

// Smallest max-closed superset of m; v must be a strictly positive vector
// in the lineality space of m.
Cone max_closure(const Cone& m, const RatVec& v);

// Tropical conical hull: intersection over j of m + R*1 + Q_j.
Cone tcone(const Cone& m);

struct DoubleHullResult {
  Cone cone;
  int iterations;
};
// Fixpoint of alternating conic hull and max-closure. The overload without v
// searches the lineality space for a strictly positive vector.
DoubleHullResult double_hull(const Cone& s, const RatVec& v);
DoubleHullResult double_hull(const Cone& s);

// Tropicalized Vandermonde cell, from its facet description.
Cone trop_vandermonde(int d);
// The V-side data asserted for it: rays and lineality, for cross-checking.
std::pair<Matrix, Matrix> trop_vandermonde_vrep(int d);

// pi(d) x d matrix whose row for lambda |- d is its multiplicity vector.
Matrix trop_map_matrix(int d);
// Coordinate labels shared by all degree-2d dual-cone objects: even
// partitions of 2d in revlex order.
std::vector<Partition> even_coords(int d);

// Image of a cone under a linear map (rows of m are the output coords).
Cone apply_linear(const Matrix& m, const Cone& c);

// Tropicalized dual of the limit cone of even symmetric nonnegative forms.
Cone trop_bp_dual(int d);

// Defining half-space rows of T^(k) in degree 2d, deduped.
Matrix t_k_rows(int d, int k);
Cone t_k_cone(int d, int k);

struct TauResult {
  int tau;  // -1 when not found up to k_max
  bool certified;
};
TauResult stabilization_tau(int d, int k_max);

// Readable form of an inequality row, e.g. "y[2,2,2] + y[6] >= 2*y[4,2]".
std::string inequality_str(const RatVec& row, const std::vector<Partition>& coords);

}  // namespace symtrop
