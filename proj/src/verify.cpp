#include "schubert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "schubert/conormal.hpp"
#include "schubert/detvar.hpp"

namespace schubert {

namespace {

struct CheckFailure : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what)
{
  if (!ok)
    throw CheckFailure(what);
}

using Task = std::function<std::vector<CheckResult>()>;

// Runs body, turning a failure of any kind into a failed check.
CheckResult guarded(const std::string& id, const std::string& params, const std::function<std::string()>& body)
{
  CheckResult out{id, params, false, "", 0};
  try {
    out.detail = body();
    out.pass = true;
  } catch (const std::exception& e) {
    out.detail = e.what();
  }
  return out;
}

std::set<AffineWeylElement> filtered(const std::vector<AffineWeylElement>& all,
                                     const std::function<bool(const AffineWeylElement&)>& keep)
{
  std::set<AffineWeylElement> out;
  for (const auto& w : all)
    if (keep(w))
      out.insert(w);
  return out;
}

std::string wsontheta(const CominusculeContext& ctx)
{
  const auto& D = ctx.diagram();
  const auto& W = ctx.group;
  expect(ctx.theta0 == D.from_finite(highest_root(ctx.d0)), "theta_0 is not the highest root");
  expect(W.act(ctx.wj, D.simple_root(ctx.d)) == ctx.theta0, "w_J(alpha_d) != theta_0");
  expect(W.act(ctx.wj, D.simple_root(0)) == ctx.thetad, "w_J(alpha_0) != theta_d");
  return "w_J(alpha_d) = theta_0, w_J(alpha_0) = theta_d";
}

std::string form_inv(const CominusculeContext& ctx)
{
  const auto& D = ctx.diagram();
  for (int a : D.nodes()) {
    expect(D.marks()[ctx.iota[a]] == D.marks()[a], "iota moves a mark of delta");
    for (int b : D.nodes()) {
      expect(D.cartan(ctx.iota[a], ctx.iota[b]) == D.cartan(a, b), "Cartan entry not preserved");
      expect(inner_form(D, D.simple_root(ctx.iota[a]), D.simple_root(ctx.iota[b])) ==
                 inner_form(D, D.simple_root(a), D.simple_root(b)),
             "form not preserved");
    }
  }
  expect(iota_root(ctx, D.delta()) == D.delta(), "iota(delta) != delta");
  return std::to_string(D.size() * D.size()) + " Cartan entries and form values";
}

std::string iota_conj(const CominusculeContext& ctx)
{
  const auto& D = ctx.diagram();
  const auto& W = ctx.group;
  auto same_map = [&](const AffineWeylElement& w) {
    const auto iw = iota_elem(ctx, w);
    for (int b : D.nodes()) {
      const auto a = D.simple_root(b);
      if (W.act(iw, a) != iota_root(ctx, W.act(w, iota_root(ctx, a))))
        return false;
    }
    return true;
  };
  int count = 0;
  for (int i : D.nodes()) {
    expect(same_map(W.simple(i)), "iota s_" + std::to_string(i) + " iota differs");
    ++count;
  }
  for (const auto& w : finite_min_reps(ctx)) {
    expect(same_map(w), "iota w iota differs for w = " + W.format(w));
    ++count;
  }
  return std::to_string(count) + " elements";
}

std::string result_q(const CominusculeContext& ctx)
{
  const auto& W = ctx.group;
  const auto t = tau_q(ctx);
  expect(W.translation_part(t).coords == ctx.q.coords, "translation part of tau_q != q");
  expect(W.length(t) == W.length(W.min_rep(ctx.w0, ctx.j)) + W.length(W.min_rep(ctx.wd, ctx.j)),
         "l(tau_q) != l(w0^J) + l(w_d^J)");
  return "tau_q = " + W.format(t);
}

std::string vinwsd(const CominusculeContext& ctx)
{
  const auto& W = ctx.group;
  const auto w0_all = W.enumerate_min_reps(ctx.finite_nodes, {});
  const auto left = filtered(w0_all, [&](const auto& w) { return W.is_min_rep(w, ctx.j); });
  expect(left == filtered(w0_all, [&](const auto& w) { return W.is_min_rep(w, ctx.dd); }),
         "W0 n W^J != W0 n W^{D_d}");
  const auto fin = finite_min_reps(ctx);
  expect(left == std::set<AffineWeylElement>(fin.begin(), fin.end()), "finite_min_reps disagrees");

  const auto wd_all = W.enumerate_min_reps(ctx.dd, {});
  const auto right = filtered(wd_all, [&](const auto& u) { return W.is_min_rep(u, ctx.j); });
  expect(right == filtered(wd_all, [&](const auto& u) { return W.is_min_rep(u, ctx.finite_nodes); }),
         "W_d n W^J != W_d n W^0");
  const auto dual = dual_min_reps(ctx);
  expect(right == std::set<AffineWeylElement>(dual.begin(), dual.end()), "dual_min_reps disagrees");

  const int dim = dim_gp(ctx);
  for (const auto& w : fin) {
    const auto v = v_of(ctx, w);
    expect(right.count(v) == 1, "v not in W_d^0 for w = " + W.format(w));
    expect(W.length(w * v) == W.length(w) + W.length(v) && W.length(w * v) == dim,
           "l(wv) != l(w) + l(v) = dim G/P for w = " + W.format(w));
  }
  return std::to_string(w0_all.size()) + " + " + std::to_string(wd_all.size()) + " elements, " +
         std::to_string(fin.size()) + " in W0^J";
}

std::string sb_equiv(const CominusculeContext& ctx)
{
  int smooth = 0;
  const auto all = dual_min_reps(ctx);
  for (const auto& u : all) {
    const auto rep = is_smooth(ctx, u);
    expect(rep.agree(), "criteria disagree at u = " + ctx.group.format(u));
    smooth += rep.c6 ? 1 : 0;
  }
  return std::to_string(all.size()) + " elements, " + std::to_string(smooth) + " smooth";
}

std::string involution_bij(const CominusculeContext& ctx)
{
  const auto& W = ctx.group;
  const auto all = finite_min_reps(ctx);
  for (const auto& w : all) {
    expect(calc1_holds(ctx, w), "v(alpha - delta) != -iota w0 w(alpha) for w = " + W.format(w));
    expect(shift_check(ctx, w), "shift is not a bijection for w = " + W.format(w));
    expect(static_cast<int>(conormal_roots(ctx, w).size()) == W.length(v_of(ctx, w)),
           "|R| != l(v) for w = " + W.format(w));
  }
  return std::to_string(all.size()) + " elements";
}

std::string main_result(const CominusculeContext& ctx)
{
  const auto& W = ctx.group;
  const auto all = finite_min_reps(ctx);
  int schubert = 0;
  for (const auto& w : all) {
    const auto rep = closure_is_schubert(ctx, w);
    expect(rep.closure_is_schubert == rep.smooth.c6, "predicate != criterion (6) for w = " + W.format(w));
    expect(iota_elem(ctx, rep.v) == ctx.w0 * w * ctx.wj, "iota(v) != w0 w w_J for w = " + W.format(w));
    schubert += rep.closure_is_schubert ? 1 : 0;
  }
  return std::to_string(all.size()) + " elements, " + std::to_string(schubert) + " Schubert";
}

std::string nilp(const CominusculeContext& ctx)
{
  const auto& D = ctx.diagram();
  int count = 0;
  for (int i : ctx.finite_nodes) {
    expect(nilpotent_set_check(ctx, D.simple_root(i)), "fails for gamma = alpha_" + std::to_string(i));
    ++count;
  }
  for (int j : ctx.j) {
    expect(nilpotent_set_check(ctx, -D.simple_root(j)), "fails for gamma = -alpha_" + std::to_string(j));
    ++count;
  }
  return std::to_string(count) + " values of gamma";
}

std::vector<Task> pair_tasks(const std::string& id, int max_rank, bool include_e7,
                             std::string (*body)(const CominusculeContext&))
{
  std::vector<Task> out;
  for (const auto& p : cominuscule_pairs(max_rank, include_e7))
    out.push_back([id, p, body] {
      return std::vector<CheckResult>{
          guarded(id, p.name(), [&] { return body(build_context(p.series, p.rank, p.d)); })};
    });
  return out;
}

std::vector<Task> relation_tasks(int max_rank)
{
  std::vector<Task> out;
  for (int n = 4; n <= max_rank; ++n) {
    out.push_back([n] {
      std::vector<CheckResult> checks;
      const std::string tag = "n=" + std::to_string(n);
      try {
        for (const auto& c : check_relations(n))
          checks.push_back({"detvar-relations", tag + "," + c.name + (c.params.empty() ? "" : "," + c.params),
                            c.pass, "", 0});
      } catch (const std::exception& e) {
        checks.push_back({"detvar-relations", tag, false, e.what(), 0});
      }
      return checks;
    });
    out.push_back([n] {
      const std::string tag = "n=" + std::to_string(n) + ",length";
      return std::vector<CheckResult>{guarded("detvar-relations", tag, [n] {
        const WeylGroup fin(DynkinDiagram::build('D', n, false));
        std::mt19937 rng(static_cast<unsigned>(n));
        std::uniform_int_distribution<int> letter(1, n);
        for (int trial = 0; trial < 100; ++trial) {
          WeylWord word(3 * n);
          for (auto& s : word)
            s = letter(rng);
          const auto p = word_to_perm(n, word);
          expect(fin.length(fin.evaluate(word)) == inversion_length(p), "length mismatch at " + p.str());
          expect(to_element(fin, p) == fin.evaluate(word), "conversion mismatch at " + p.str());
        }
        return std::string("100 random words");
      })};
    });
  }
  return out;
}

std::vector<Task> nr_tasks(const std::string& id, int max_rank, std::string (*body)(int, int))
{
  std::vector<Task> out;
  for (int n = 4; n <= max_rank; ++n)
    for (int r = 0; r <= nbar(n); r += 2)
      out.push_back([id, n, r, body] {
        return std::vector<CheckResult>{guarded(
            id, "n=" + std::to_string(n) + ",r=" + std::to_string(r), [&] { return body(n, r); })};
      });
  return out;
}

std::string intersect_body(int n, int r)
{
  const auto ix = intersectw(n, r);
  expect(ix.dual_in_w0, "iota(v_{nbar-r}) is not in W0");
  expect(ix.min_rep == ix.target, "(w_r v_r)^{D0} != iota(w_{nbar-r})");
  expect(ix.product == ix.target, "w_r v_r iota(v_{nbar-r})^{-1} != iota(w_{nbar-r})");
  return "(w_r v_r)^{D0} = iota(w_" + std::to_string(nbar(n) - r) + ")";
}

std::string fibre_body(int n, int r)
{
  const auto f = fibre_rank(n, r);
  expect(f.rank == nbar(n) - r, "rank != nbar - r");
  expect(f.fibre_max == std::vector<AffineWeylElement>{f.iota_witness}, "fibre maximum is not iota(w_{nbar-r})");
  return "rank " + std::to_string(f.rank) + ", witness " + f.witness.str();
}

std::vector<Task> suite_tasks(const std::string& suite, int max_rank, bool include_e7)
{
  if (suite == "wsontheta")
    return pair_tasks(suite, max_rank, include_e7, wsontheta);
  if (suite == "form-inv")
    return pair_tasks(suite, max_rank, include_e7, form_inv);
  if (suite == "iota-conj")
    return pair_tasks(suite, max_rank, include_e7, iota_conj);
  if (suite == "result-q")
    return pair_tasks(suite, max_rank, include_e7, result_q);
  if (suite == "vinwsd")
    return pair_tasks(suite, max_rank, include_e7, vinwsd);
  if (suite == "sb-equiv")
    return pair_tasks(suite, max_rank, include_e7, sb_equiv);
  if (suite == "involution-bij")
    return pair_tasks(suite, max_rank, include_e7, involution_bij);
  if (suite == "main-result")
    return pair_tasks(suite, max_rank, include_e7, main_result);
  if (suite == "nilp")
    return pair_tasks(suite, max_rank, include_e7, nilp);
  if (suite == "detvar-relations")
    return relation_tasks(max_rank);
  if (suite == "intersectw")
    return nr_tasks(suite, max_rank, intersect_body);
  if (suite == "fibre-det")
    return nr_tasks(suite, max_rank, fibre_body);
  if (suite == "all") {
    std::vector<Task> out;
    for (const auto& name : suite_names())
      if (name != "all") {
        auto part = suite_tasks(name, max_rank, include_e7);
        out.insert(out.end(), part.begin(), part.end());
      }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

} // namespace

int VerificationReport::passed() const
{
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

int VerificationReport::failed() const
{
  return static_cast<int>(checks.size()) - passed();
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{
      "wsontheta", "form-inv",   "iota-conj",        "result-q",   "vinwsd",    "sb-equiv", "involution-bij",
      "main-result", "nilp",     "detvar-relations", "intersectw", "fibre-det", "all"};
  return names;
}

VerificationReport verify_suite(const std::string& suite, int max_rank, bool include_e7)
{
  if (max_rank < 1)
    throw std::invalid_argument("max rank must be >= 1");
  const auto tasks = suite_tasks(suite, max_rank, include_e7);

  // Tasks run in waves of hardware_concurrency() futures; results are
  // gathered in task order, so the report does not depend on scheduling.
  using Clock = std::chrono::steady_clock;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  VerificationReport report{suite, max_rank, include_e7, {}};
  for (std::size_t lo = 0; lo < tasks.size(); lo += width) {
    std::vector<std::future<std::vector<CheckResult>>> futures;
    for (std::size_t k = lo; k < std::min(tasks.size(), lo + width); ++k)
      futures.push_back(std::async(std::launch::async, [&task = tasks[k]] {
        const auto start = Clock::now();
        auto checks = task();
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        for (auto& c : checks)
          c.elapsed_ms = ms;
        return checks;
      }));
    for (auto& f : futures) {
      auto part = f.get();
      report.checks.insert(report.checks.end(), part.begin(), part.end());
    }
  }
  const auto& names = suite_names();
  auto rank = [&](const std::string& id) { return std::find(names.begin(), names.end(), id) - names.begin(); };
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [&](const auto& a, const auto& b) { return rank(a.id) < rank(b.id); });
  return report;
}

} // namespace schubert
