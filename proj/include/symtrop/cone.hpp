#pragma once

#include <optional>
#include <vector>

#include "symtrop/rational.hpp"

namespace symtrop {

using Matrix = std::vector<RatVec>;

// Scale a rational vector to a primitive integer vector, keeping direction.
RatVec primitive(const RatVec& v);
// Lexicographic comparison of rational vectors.
bool lex_less(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);

// Rational polyhedral cone with lazily computed dual representations.
// H-side: {x : A x >= 0, E x = 0}; V-side: cone(rays) + span(lineality).
// Canonical representations are irredundant, primitive and sorted, so equal
// cones built along different routes print identically.
class Cone {
 public:
  static Cone from_inequalities(int dim, Matrix ineqs, Matrix eqs = {});
  static Cone from_rays(int dim, Matrix rays, Matrix lineality = {});

  int dim() const { return dim_; }
  const Matrix& inequalities() const;  // canonical facet rows
  const Matrix& equations() const;
  const Matrix& rays() const;  // canonical extreme rays (mod lineality)
  const Matrix& lineality() const;

  bool contains_point(const RatVec& x) const;
  bool contains(const Cone& other) const;

 private:
  int dim_ = 0;
  // As given (deduped/normalized), used for membership before canonicalizing.
  mutable std::optional<std::pair<Matrix, Matrix>> h_input_;  // ineqs, eqs
  mutable std::optional<std::pair<Matrix, Matrix>> v_input_;  // rays, lineality
  mutable std::optional<std::pair<Matrix, Matrix>> h_canon_;
  mutable std::optional<std::pair<Matrix, Matrix>> v_canon_;

  void ensure_v() const;
  void ensure_h() const;
  const std::pair<Matrix, Matrix>& any_h() const;
};

Cone dual(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone minkowski_sum(const Cone& a, const Cone& b);
bool cone_equal(const Cone& a, const Cone& b);

inline const Matrix& facets(const Cone& c) { return c.inequalities(); }
inline const Matrix& extreme_rays(const Cone& c) { return c.rays(); }
inline const Matrix& lineality_space(const Cone& c) { return c.lineality(); }

}  // namespace symtrop
