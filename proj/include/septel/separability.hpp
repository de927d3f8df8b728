#pragma once

// Deciders for separability in t: rational functions, hypergeometric and
// hyperexponential certificates, the two bivariate telescoper-existence
// tests, and a brute-force annihilator search used as a testing oracle.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "septel/linalg.hpp"
#include "septel/ore.hpp"
#include "septel/reductions.hpp"

namespace septel {

/// Raised for a = 0 in the hyperexponential/hypergeometric deciders.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SplitTerm {
  RatFunc t_part;      // in Q(t)
  RatFunc param_part;  // free of t
};

/// den = den_t * den_rest with den_t the largest divisor in Q[t]. When
/// den_rest is free of t the function is a sum of the listed split terms.
struct SplitWitness {
  MPoly den_t{1};
  MPoly den_rest{1};
  std::vector<SplitTerm> terms;
};

/// a = z * (sigma(p)/p) * (q/rhat) with p, q, rhat monic in t.
struct GPForm {
  RatFunc z;
  RatFunc p{1}, q{1}, rhat{1};

  RatFunc recombine() const;
};

/// a = D_t(g) + polypart + split_simple + nonsplit_num/nonsplit_den.
struct DiffSplitForm {
  RatFunc g;
  RatFunc polypart;
  RatFunc split_simple;
  MPoly nonsplit_num;
  MPoly nonsplit_den{1};
  /// Res_t(nonsplit_den, nonsplit_num - z * D_t(nonsplit_den)) in z_var.
  MPoly residue_resultant{1};
  VarId z_var = 1;

  RatFunc nonsplit() const { return RatFunc(nonsplit_num, nonsplit_den); }
  RatFunc recombine() const;
};

struct Witnesses {
  std::optional<SplitWitness> split;
  std::optional<GPForm> gp;
  std::optional<DiffSplitForm> diff;
  std::optional<ReductionResult> reduction;
  /// Residues e_i and the factors u_i with nonsplit part sum e_i u_i'/u_i.
  std::vector<std::pair<Int, MPoly>> log_parts;
};

struct Verdict {
  bool separable = false;
  std::optional<OrePoly> certificate;
  Witnesses witnesses;
  std::string diagnostics;
};

/// True iff q is a product of polynomials each in one block. Variables of q
/// outside every block form one extra block.
bool is_split(const MPoly& q, const std::vector<VarSet>& partition);

struct SplitPart {
  MPoly split;     // in Q[t]
  MPoly nonsplit;  // no nonconstant divisor in Q[t]
};
SplitPart split_part(const MPoly& d);

Verdict rational_separable(const RatFunc& f, OpKind kind);

GPForm gp_form(const RatFunc& a);
Verdict hypergeom_separable(const RatFunc& a);

DiffSplitForm diff_split_form(const RatFunc& a);
Verdict hyperexp_separable(const RatFunc& a);

/// Telescoper of type (S_t, D_x), resp. (D_t, S_x), for f in Q(t, x).
Verdict telescoper_exists_st_dx(const RatFunc& f);
Verdict telescoper_exists_dt_sx(const RatFunc& f);

/// Searches for L = sum l_i(t) op^i, deg l_i <= max_degree, order <= max_order,
/// annihilating the function with the given coordinates over a basis b on
/// which op acts by op(b_k) = sum_l action(k, l) b_l. Without an action matrix
/// the basis is {1}-like: zero for D, the identity for S. Smallest order
/// first, then smallest degree.
std::optional<OrePoly> brute_force_annihilator(const std::vector<RatFunc>& coords, OpKind kind, int max_order,
                                               int max_degree,
                                               const std::optional<Matrix<RatFunc>>& action = std::nullopt);

}  // namespace septel
