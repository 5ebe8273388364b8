#include "schubert/cominuscule.hpp"

namespace schubert {

std::string CominusculeContext::name() const
{
  return d0.name() + ",d=" + std::to_string(d);
}

std::string CominusculePair::name() const
{
  return std::string(1, series) + std::to_string(rank) + ",d=" + std::to_string(d);
}

namespace {

// w acting on a coweight in the coroot basis: w(alpha_i^vee) = (w alpha_i)^vee.
CoweightVector act_coweight(const WeylGroup& fin, const AffineWeylElement& w, const CoweightVector& c)
{
  const auto& d = fin.diagram();
  CoweightVector out{std::vector<Rational>(d.size(), Rational(0))};
  for (int i : d.nodes()) {
    const auto& ci = c.coords[d.position(i)];
    if (ci == Rational(0))
      continue;
    const auto image = coroot(d, fin.act(w, d.simple_root(i)));
    for (std::size_t k = 0; k < out.coords.size(); ++k)
      out.coords[k] += ci * image.coords[k];
  }
  return out;
}

} // namespace

CominusculeContext build_context(char series, int rank, int d)
{
  auto d0 = DynkinDiagram::build(series, rank, false);
  if (!d0.has_node(d))
    throw std::invalid_argument("node " + std::to_string(d) + " is not in " + d0.name());
  auto affine = DynkinDiagram::build(series, rank, true);
  const int mark = affine.marks()[affine.position(d)];
  if (mark != 1)
    throw std::invalid_argument("alpha_" + std::to_string(d) + " of " + d0.name() +
                                " is not cominuscule: its coefficient in delta is " +
                                std::to_string(mark) + ", not 1");

  CominusculeContext ctx(d0, WeylGroup(affine));
  auto require = [&ctx](bool ok, const std::string& what) {
    if (!ok)
      throw InvariantViolation(ctx.name() + ": " + what);
  };
  ctx.d = d;
  const auto& D = ctx.diagram();
  const auto& W = ctx.group;
  ctx.finite_nodes = D.finite_nodes();
  ctx.j = set_difference(ctx.finite_nodes, {d});
  ctx.dd = set_difference(D.nodes(), {d});

  ctx.w0 = W.longest_element(ctx.finite_nodes);
  ctx.wj = W.longest_element(ctx.j);
  ctx.wd = W.longest_element(ctx.dd);

  const auto alpha0 = D.simple_root(0);
  const auto alphad = D.simple_root(d);
  ctx.theta0 = D.from_finite(highest_root(d0));
  require(ctx.theta0 == D.delta() - alpha0, "delta != alpha_0 + theta_0");
  ctx.thetad = D.delta() - alphad;
  require(ctx.thetad == highest_root(D, ctx.dd), "delta - alpha_d is not the highest root of D_d");

  require(W.act(ctx.wj, alphad) == ctx.theta0, "w_J(alpha_d) != theta_0");
  require(W.act(ctx.wj, alpha0) == ctx.thetad, "w_J(alpha_0) != theta_d");

  // iota
  ctx.iota.assign(D.size(), -1);
  ctx.iota[0] = d;
  ctx.iota[d] = 0;
  for (int k : ctx.j) {
    const auto image = -W.act(ctx.wj, D.simple_root(k));
    const auto supp = D.support(image);
    require(supp.size() == 1 && image == D.simple_root(supp[0]) && is_subset(supp, ctx.j),
            "-w_J(alpha_" + std::to_string(k) + ") is not a simple root of J");
    ctx.iota[k] = supp[0];
  }
  for (int a : D.nodes()) {
    require(ctx.iota[ctx.iota[a]] == a, "iota is not an involution");
    require(D.marks()[ctx.iota[a]] == D.marks()[a], "iota does not fix delta");
    for (int b : D.nodes()) {
      require(D.cartan(ctx.iota[a], ctx.iota[b]) == D.cartan(a, b), "iota does not preserve C");
      require(inner_form(D, D.simple_root(ctx.iota[a]), D.simple_root(ctx.iota[b])) ==
                  inner_form(D, D.simple_root(a), D.simple_root(b)),
              "iota does not preserve the form");
    }
  }

  // q = w0(varpi_d) - varpi_d
  const WeylGroup fin(d0);
  const auto varpi = fundamental_coweight(d0, d);
  const auto w0_fin = fin.longest_element(d0.nodes());
  auto q = act_coweight(fin, w0_fin, varpi);
  for (std::size_t k = 0; k < q.coords.size(); ++k)
    q.coords[k] -= varpi.coords[k];
  require(is_integral(q), "q is not in the coroot lattice");
  ctx.q = q;
  ctx.tauq = W.translation(q);
  require(W.act(ctx.tauq, D.delta()) == D.delta(), "tau_q moves delta");

  require(iota_elem(ctx, ctx.wj) == ctx.wj, "iota(w_J) != w_J");
  require(iota_elem(ctx, ctx.wd) == ctx.w0, "iota(w_d) != w_0");
  tau_q(ctx);
  return ctx;
}

AffineWeylElement iota_elem(const CominusculeContext& ctx, const AffineWeylElement& w)
{
  auto word = ctx.group.reduced_word(w);
  for (auto& s : word)
    s = ctx.iota[s];
  return ctx.group.evaluate(word);
}

RootVector iota_root(const CominusculeContext& ctx, const RootVector& r)
{
  auto out = RootVector::zero(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    out[ctx.iota[i]] = r[i];
  return out;
}

AffineWeylElement tau_q(const CominusculeContext& ctx)
{
  const auto& W = ctx.group;
  const auto by_word = W.min_rep(ctx.w0, ctx.j) * W.min_rep(ctx.wd, ctx.j);
  if (by_word != ctx.tauq)
    throw InvariantViolation(ctx.name() + ": tau_q != w0^J w_d^J");
  if (ctx.w0 * ctx.wj * ctx.wd * ctx.wj != ctx.tauq)
    throw InvariantViolation(ctx.name() + ": tau_q != w0 w_J w_d w_J");
  return ctx.tauq;
}

std::vector<CominusculePair> cominuscule_pairs(int max_rank, bool include_e7)
{
  std::vector<CominusculePair> out;
  for (int n = 1; n <= max_rank; ++n)
    for (int d = 1; d <= n; ++d)
      out.push_back({'A', n, d});
  for (int n = 2; n <= max_rank; ++n)
    out.push_back({'B', n, 1});
  for (int n = 2; n <= max_rank; ++n)
    out.push_back({'C', n, n});
  for (int n = 4; n <= max_rank; ++n)
    for (int d : {1, n - 1, n})
      out.push_back({'D', n, d});
  if (max_rank >= 6) {
    out.push_back({'E', 6, 1});
    out.push_back({'E', 6, 6});
  }
  if (max_rank >= 7 && include_e7)
    out.push_back({'E', 7, 7});
  return out;
}

} // namespace schubert
