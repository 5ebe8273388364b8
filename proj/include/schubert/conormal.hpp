#pragma once

// Combinatorics of conormal varieties of Schubert varieties X_J(w) in a
// cominuscule Grassmannian. For w in W0 n W^J the dual element is
// v = iota(w0 w w_J), which lies in W_d n W^0.

#include <optional>
#include <vector>

#include "schubert/cominuscule.hpp"

namespace schubert {

// dim G/P = |Phi_0^+ \ Phi_J| and dim G/B = |Phi_0^+|.
int dim_gp(const CominusculeContext& ctx);
int dim_gb(const CominusculeContext& ctx);

// W0 n W^J and W_d n W^0, sorted by length then reduced word.
std::vector<AffineWeylElement> finite_min_reps(const CominusculeContext& ctx);
std::vector<AffineWeylElement> dual_min_reps(const CominusculeContext& ctx);

// Throw std::invalid_argument naming the violated condition.
void require_finite_min_rep(const CominusculeContext& ctx, const AffineWeylElement& w);
void require_dual_min_rep(const CominusculeContext& ctx, const AffineWeylElement& u);

AffineWeylElement v_of(const CominusculeContext& ctx, const AffineWeylElement& w);

// {alpha in Phi_0^+ : alpha >= alpha_d, w(alpha) > 0}, in affine coordinates.
std::vector<RootVector> conormal_roots(const CominusculeContext& ctx, const AffineWeylElement& w);

// v(alpha - delta) = -iota(w0 w(alpha)) for all alpha in Phi_0^+ \ Phi_J.
bool calc1_holds(const CominusculeContext& ctx, const AffineWeylElement& w);
// {alpha - delta : alpha in R} == {beta in Phi_d^- : v(beta) > 0}. Throws
// InvariantViolation if calc1_holds fails.
bool shift_check(const CominusculeContext& ctx, const AffineWeylElement& w);

struct SmoothnessReport
{
  bool c3 = false; // l(u^{-1} * u w_J) = l(u w_J)
  bool c4 = false; // (u w_J)^{-1}(alpha_i) < 0 for i in Supp(u)
  bool c5 = false; // inversions of u = Phi^+_L \ Phi^+_J
  bool c6 = false; // u = w_L w_{L n J}
  NodeSet support;
  AffineWeylElement w_l, w_lj;

  bool agree() const { return c3 == c4 && c4 == c5 && c5 == c6; }
};

SmoothnessReport is_smooth(const CominusculeContext& ctx, const AffineWeylElement& u);

struct ConormalReport
{
  AffineWeylElement w, v, wv;
  std::vector<RootVector> r;
  SmoothnessReport smooth;
  bool closure_is_schubert = false;
  // l(w * v^{-1} * v * w_J), Demazure products.
  int bookkeeping_length = 0;
  std::optional<std::vector<AffineWeylElement>> fibre_max;
  std::optional<std::vector<AffineWeylElement>> fibre_all;
};

// Computes v, wv, R and the predicate v^{-1} * v w_J == v w_J, checking it
// against criterion (6) for v together with the length bookkeeping
// l(w * v^{-1} * v * w_J) >= dim G/B (equality exactly when the predicate
// holds). Mismatches throw InvariantViolation.
ConormalReport closure_is_schubert(const CominusculeContext& ctx, const AffineWeylElement& w);

struct FibreResult
{
  std::vector<AffineWeylElement> maximal;
  std::vector<AffineWeylElement> all; // S itself
};

// Maximal elements of S = {u in W_d^0 : u <= (wv)^{D0}}. Requires the
// predicate of closure_is_schubert to hold; otherwise std::invalid_argument.
FibreResult fibre_maximal(const CominusculeContext& ctx, const AffineWeylElement& w);

// Psi = Phi_d^- \ Phi_J. Checks that sums of two elements of Psi are never
// roots, that Psi u {gamma} is closed, and that the elements u_+ and u_-
// send it into Phi^+ and Phi^- respectively. gamma must be alpha_i for i in
// D0 or -alpha_j for j in J.
bool nilpotent_set_check(const CominusculeContext& ctx, const RootVector& gamma);
std::vector<RootVector> psi(const CominusculeContext& ctx);

} // namespace schubert
