#include "schubert/conormal.hpp"

#include <algorithm>
#include <set>

namespace schubert {

namespace {

// Phi_0^+ \ Phi_J: the positive roots with alpha_d coefficient >= 1.
std::vector<RootVector> finite_roots_off_j(const CominusculeContext& ctx)
{
  std::vector<RootVector> out;
  for (const auto& a : positive_roots(ctx.diagram(), ctx.finite_nodes))
    if (ctx.diagram().coefficient(a, ctx.d) >= 1)
      out.push_back(a);
  return out;
}

std::vector<RootVector> sorted(std::vector<RootVector> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

int dim_gp(const CominusculeContext& ctx)
{
  return static_cast<int>(finite_roots_off_j(ctx).size());
}

int dim_gb(const CominusculeContext& ctx)
{
  return static_cast<int>(positive_roots(ctx.diagram(), ctx.finite_nodes).size());
}

std::vector<AffineWeylElement> finite_min_reps(const CominusculeContext& ctx)
{
  return ctx.group.enumerate_min_reps(ctx.finite_nodes, ctx.j);
}

std::vector<AffineWeylElement> dual_min_reps(const CominusculeContext& ctx)
{
  return ctx.group.enumerate_min_reps(ctx.dd, ctx.finite_nodes);
}

void require_finite_min_rep(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  const auto& W = ctx.group;
  if (!is_subset(W.support(w), ctx.finite_nodes))
    throw std::invalid_argument("w = [" + W.format(w) + "] is not in W0 (its support contains 0)");
  for (int k : ctx.j)
    if (W.right_descent(w, k))
      throw std::invalid_argument("w = [" + W.format(w) + "] is not in W^J: w(alpha_" +
                                  std::to_string(k) + ") < 0");
}

void require_dual_min_rep(const CominusculeContext& ctx, const AffineWeylElement& u)
{
  const auto& W = ctx.group;
  if (!is_subset(W.support(u), ctx.dd))
    throw std::invalid_argument("u = [" + W.format(u) + "] is not in W_d (its support contains " +
                                std::to_string(ctx.d) + ")");
  for (int k : ctx.finite_nodes)
    if (W.right_descent(u, k))
      throw std::invalid_argument("u = [" + W.format(u) + "] is not in W^0: u(alpha_" +
                                  std::to_string(k) + ") < 0");
}

AffineWeylElement v_of(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  return iota_elem(ctx, ctx.w0 * w * ctx.wj);
}

std::vector<RootVector> conormal_roots(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  require_finite_min_rep(ctx, w);
  std::vector<RootVector> out;
  for (const auto& a : finite_roots_off_j(ctx)) {
    if (ctx.diagram().coefficient(a, ctx.d) != 1)
      throw InvariantViolation(ctx.name() + ": root " + a.str() + " has alpha_d coefficient > 1");
    if (ctx.group.is_positive(ctx.group.act(w, a)))
      out.push_back(a);
  }
  return out;
}

bool calc1_holds(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  require_finite_min_rep(ctx, w);
  const auto& W = ctx.group;
  const auto v = v_of(ctx, w);
  const auto w0w = ctx.w0 * w;
  const auto delta = ctx.diagram().delta();
  for (const auto& a : finite_roots_off_j(ctx))
    if (W.act(v, a - delta) != -iota_root(ctx, W.act(w0w, a)))
      return false;
  return true;
}

bool shift_check(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  if (!calc1_holds(ctx, w))
    throw InvariantViolation(ctx.name() + ": v(alpha - delta) != -iota w0 w(alpha) for w = [" +
                             ctx.group.format(w) + "]");
  const auto& W = ctx.group;
  const auto v = v_of(ctx, w);
  const auto delta = ctx.diagram().delta();
  std::vector<RootVector> left;
  for (const auto& a : conormal_roots(ctx, w))
    left.push_back(a - delta);
  std::vector<RootVector> right;
  for (const auto& b : positive_roots(ctx.diagram(), ctx.dd))
    if (W.is_positive(W.act(v, -b)))
      right.push_back(-b);
  return sorted(left) == sorted(right);
}

SmoothnessReport is_smooth(const CominusculeContext& ctx, const AffineWeylElement& u)
{
  require_dual_min_rep(ctx, u);
  const auto& W = ctx.group;
  const auto& D = ctx.diagram();
  SmoothnessReport rep;
  rep.support = W.support(u);
  const auto uwj = u * ctx.wj;

  rep.c3 = W.length(W.demazure(u.inverse(), uwj)) == W.length(uwj);

  const auto uwj_inv = uwj.inverse();
  rep.c4 = std::all_of(rep.support.begin(), rep.support.end(),
                       [&](int i) { return W.sends_simple_negative(uwj_inv, i); });

  const auto inv = W.inversions(u, ctx.dd);
  if (static_cast<int>(inv.size()) != W.length(u))
    throw InvariantViolation(ctx.name() + ": inversion count of u differs from l(u)");
  std::vector<RootVector> expected;
  if (!rep.support.empty())
    for (const auto& a : positive_roots(D, rep.support))
      if (!is_subset(D.support(a), ctx.j))
        expected.push_back(a);
  rep.c5 = sorted(inv) == sorted(expected);

  rep.w_l = W.longest_element(rep.support);
  rep.w_lj = W.longest_element(set_intersection(rep.support, ctx.j));
  rep.c6 = u == rep.w_l * rep.w_lj;
  return rep;
}

ConormalReport closure_is_schubert(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  require_finite_min_rep(ctx, w);
  const auto& W = ctx.group;
  ConormalReport rep;
  rep.w = w;
  rep.v = v_of(ctx, w);
  rep.wv = w * rep.v;
  rep.r = conormal_roots(ctx, w);

  const int lw = W.length(w);
  const int lv = W.length(rep.v);
  auto fail = [&](const std::string& what) {
    throw InvariantViolation(ctx.name() + ", w = [" + W.format(w) + "]: " + what);
  };
  if (!ctx.group.is_min_rep(rep.v, ctx.finite_nodes) || !is_subset(W.support(rep.v), ctx.dd))
    fail("v is not in W_d^0");
  if (W.length(rep.wv) != lw + lv || lw + lv != dim_gp(ctx))
    fail("l(wv) = l(w) + l(v) = dim G/P fails");
  if (static_cast<int>(rep.r.size()) != lv)
    fail("|R| != l(v)");

  rep.smooth = is_smooth(ctx, rep.v);
  const auto vwj = rep.v * ctx.wj;
  rep.closure_is_schubert = W.demazure(rep.v.inverse(), vwj) == vwj;
  if (rep.closure_is_schubert != rep.smooth.c6)
    fail("predicate disagrees with criterion (6) for v");

  const auto prod = W.demazure(w, W.demazure(rep.v.inverse(), W.demazure(rep.v, ctx.wj)));
  rep.bookkeeping_length = W.length(prod);
  const int gb = dim_gb(ctx);
  if (rep.bookkeeping_length < gb)
    fail("l(w * v^-1 * v * w_J) < dim G/B");
  if ((rep.bookkeeping_length == gb) != rep.closure_is_schubert)
    fail("l(w * v^-1 * v * w_J) = dim G/B does not match the predicate");
  return rep;
}

FibreResult fibre_maximal(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  const auto rep = closure_is_schubert(ctx, w);
  if (!rep.closure_is_schubert)
    throw std::invalid_argument("the fibre decomposition needs X_J(w0 w w_J) smooth, but v = [" +
                                ctx.group.format(rep.v) + "] fails criterion (6)");
  const auto& W = ctx.group;
  const auto bound = W.min_rep(rep.wv, ctx.finite_nodes);
  FibreResult out;
  out.all = W.enumerate_min_reps(ctx.dd, ctx.finite_nodes, bound);
  for (const auto& u : out.all) {
    bool maximal = true;
    for (const auto& x : out.all)
      if (x != u && W.bruhat_leq(u, x)) {
        maximal = false;
        break;
      }
    if (maximal)
      out.maximal.push_back(u);
  }
  return out;
}

std::vector<RootVector> psi(const CominusculeContext& ctx)
{
  std::vector<RootVector> out;
  for (const auto& a : positive_roots(ctx.diagram(), ctx.dd))
    if (a[0] != 0)
      out.push_back(-a);
  return out;
}

bool nilpotent_set_check(const CominusculeContext& ctx, const RootVector& gamma)
{
  const auto& D = ctx.diagram();
  const auto& W = ctx.group;
  int node = -1;
  bool negated = false;
  for (int i : ctx.finite_nodes)
    if (gamma == D.simple_root(i))
      node = i;
  for (int j : ctx.j)
    if (gamma == -D.simple_root(j)) {
      node = j;
      negated = true;
    }
  if (node < 0)
    throw std::invalid_argument("gamma = " + gamma.str() +
                                " must be a simple root of D0 or the negative of one in J");

  const auto base = psi(ctx);
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b)
      if (is_root(D, base[a] + base[b]))
        return false;

  auto set = base;
  set.push_back(gamma);
  const std::set<RootVector> members(set.begin(), set.end());
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      const auto s = set[a] + set[b];
      if (is_root(D, s) && !members.count(s))
        return false;
    }

  AffineWeylElement u_plus, u_minus;
  if (node == ctx.d) {
    u_plus = ctx.wd;
    u_minus = W.simple(ctx.d);
  } else if (!negated) {
    u_plus = ctx.wd * W.simple(node);
    u_minus = W.simple(node);
  } else {
    u_plus = ctx.wd;
    u_minus = W.identity();
  }
  for (const auto& a : set) {
    if (!W.is_positive(W.act(u_plus, a)))
      return false;
    if (W.is_positive(W.act(u_minus, a)))
      return false;
  }
  return true;
}

} // namespace schubert
