#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symtrop/partition.hpp"
#include "symtrop/rational.hpp"

namespace symtrop {

// Homogeneous symmetric function in the power-sum basis: sparse map from
// partitions of `degree` to rational coefficients. The same container also
// carries polynomials in other indexed generator families (e_k, p_k of the
// Newton identities), where a key lists generator subscripts.
class SymFn {
 public:
  using Terms = std::map<Partition, Rat, RevlexGreater>;

  explicit SymFn(int degree = 0) : degree_(degree) {}
  static SymFn p(const Partition& lambda);  // basis element
  static SymFn constant(const Rat& c);      // degree 0

  int degree() const { return degree_; }
  const Terms& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rat& c);

  friend SymFn operator+(const SymFn& f, const SymFn& g);
  friend SymFn operator-(const SymFn& f, const SymFn& g);
  friend SymFn operator*(const Rat& s, const SymFn& f);
  friend SymFn operator*(const SymFn& f, const SymFn& g);  // p_multiply
  friend bool operator==(const SymFn& f, const SymFn& g) {
    return f.degree_ == g.degree_ && f.coeffs_ == g.coeffs_;
  }

  // Substitute p_k = sum x_i^k.
  Rat evaluate(const RatVec& x) const;

  std::string str() const;

 private:
  int degree_;
  Terms coeffs_;
};

SymFn p_multiply(const SymFn& f, const SymFn& g);

// Expansion of the monomial symmetric function m_lambda in power sums.
SymFn monomial_to_powersum(const Partition& lambda);
// Expansion of p_lambda in the monomial basis (coefficient of m_mu per key).
std::map<Partition, Rat, RevlexGreater> powersum_to_monomial(const Partition& lambda);

// Newton identities: element k-1 expresses p_k (resp. e_k) in the other
// family; keys of the returned SymFn are subscript multisets.
std::vector<SymFn> newton_p_from_e(int d);
std::vector<SymFn> newton_e_from_p(int d);

// p_lambda >= p_mu on the nonnegative orthant for every n.
bool binomial_inequality_holds(const Partition& lambda, const Partition& mu);

// Structured search for a nonnegative rational point with
// p_lambda(x) < p_mu(x); exists whenever the binomial inequality fails.
std::optional<RatVec> binomial_violation_witness(const Partition& lambda,
                                                 const Partition& mu);

// Reynolds-operator average of x^alpha * p_lambda over S_n or the signed
// permutations B_n, as coeff * m_mono * p_ppart (coeff may be zero).
struct FiniteSym {
  Rat coeff;
  Partition mono;
  Partition ppart;
};
enum class SymGroup { S, B };
FiniteSym finite_symmetrize(const std::vector<int>& alpha, const Partition& lambda,
                            int n, SymGroup group);

}  // namespace symtrop
