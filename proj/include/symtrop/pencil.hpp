#pragma once

#include <string>
#include <vector>

#include "symtrop/cone.hpp"
#include "symtrop/partition.hpp"
#include "symtrop/symfn.hpp"

namespace symtrop {

// One structured generator x^alpha * p_lambda of a term vector.
struct Term {
  std::vector<int> alpha;  // exponents on the first coords
  Partition lambda;        // even partition tail (any partition in the S case)
};

using Block = std::vector<std::vector<SymFn>>;

// Limit Gram pencil of an even-symmetric SOS cone: one symmetric block of
// symmetric functions per term vector.
struct GramPencil {
  int d = 0;  // half degree; entries are homogeneous of degree 2d
  SymGroup group = SymGroup::B;
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> vectors;
  std::vector<Block> blocks;
};

// n -> infinity limit of the scaled Reynolds average of the product of two
// structured terms: zero when supports differ or (B case) an exponent of
// alpha+alpha' is odd; otherwise prod_k mult_k(alpha+alpha')! times
// m_{alpha+alpha'} * p_{fuse(lambda,lambda')} in the power-sum basis.
SymFn limit_gram_entry(const Term& t1, const Term& t2, SymGroup group = SymGroup::B);

// Exact finite-n counterpart (n-scaled), the brute-force oracle for the
// limit: coefficient of m_{alpha+alpha'} * p_{fuse(lambda,lambda')}.
Rat finite_gram_coeff(const Term& t1, const Term& t2, int n, SymGroup group);

// kind: "B4", "B6", "B8", "B10", or "S4".
GramPencil build_pencil(const std::string& kind);

Block apply_congruence(const Block& block, const std::vector<RatVec>& a);

// Linearized tropicalization of the SOS cone presented by the pencil,
// in coordinates indexed by even partitions of 2d (revlex).
Cone trop_of_sos(const GramPencil& pencil);

std::string pencil_pretty(const GramPencil& pencil);

}  // namespace symtrop
