#pragma once

#include <string>
#include <vector>

#include "symtrop/pencil.hpp"
#include "symtrop/rational.hpp"

namespace symtrop {

struct RationalSymMatrix {
  int n = 0;
  std::vector<RatVec> entries;  // symmetric n x n

  static RationalSymMatrix from(std::vector<RatVec> rows);
};

// Coefficients (c_1..c_n) of det(tI + m) = t^n + c_1 t^{n-1} + ... + c_n,
// i.e. the elementary symmetric functions of the eigenvalues.
RatVec charpoly_elementary(const RationalSymMatrix& m);

// Exact PSD decision: all elementary symmetric functions of the spectrum
// are nonnegative.
bool is_psd(const RationalSymMatrix& m);

// Evaluate one pencil block at a dual vector indexed by the even partitions
// of 2d in revlex order.
RationalSymMatrix evaluate_block(const Block& block, const RatVec& point, int d);

bool dual_membership(const RatVec& point, const GramPencil& pencil);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};
using Report = std::vector<CheckResult>;

bool report_ok(const Report& r);
std::string report_str(const Report& r);

// Dual witness and coefficient vector of the degree-10 example.
RatVec decic_witness();
RatVec decic_coeffs();
SymFn decic_form();

Report verify_decic();
Report verify_quartic();
Report verify_sos4_extreme_rays(const std::vector<std::pair<Rat, Rat>>& samples);
Report verify_sos4_extreme_rays();  // default sample grid

}  // namespace symtrop
