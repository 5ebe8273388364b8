#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/conormal.hpp"
#include "schubert/detvar.hpp"
#include "schubert/verify.hpp"

namespace schubert::cli {

namespace {

using Json = nlohmann::ordered_json;

char parse_type(const std::string& type)
{
  if (type.size() != 1 || type[0] < 'A' || type[0] > 'G')
    throw std::invalid_argument("--type must be one of A B C D E F G, got '" + type + "'");
  return type[0];
}

Json words(const WeylGroup& g, const std::vector<AffineWeylElement>& elems)
{
  auto out = Json::array();
  for (const auto& w : elems)
    out.push_back(g.format(w));
  return out;
}

Json smooth_json(const SmoothnessReport& s)
{
  return Json{{"c3", s.c3}, {"c4", s.c4}, {"c5", s.c5}, {"c6", s.c6}, {"L", s.support}};
}

// Words are space-separated node indices; type D also takes a signed
// permutation "[...]".
AffineWeylElement parse_element(const CominusculeContext& ctx, const std::string& text)
{
  const auto start = text.find_first_not_of(' ');
  if (start != std::string::npos && text[start] == '[') {
    if (ctx.d0.series() != 'D')
      throw std::invalid_argument("signed permutations are only accepted for type D");
    const auto p = SignedPermutation::parse(text);
    if (p.n() != ctx.d0.rank())
      throw std::invalid_argument("signed permutation has " + std::to_string(p.n()) + " entries, expected " +
                                  std::to_string(ctx.d0.rank()));
    return to_element(ctx.group, p);
  }
  return ctx.group.parse(text);
}

Json cmd_roots(char type, int rank, bool affine)
{
  const auto d = DynkinDiagram::build(type, rank, affine);
  Json out{{"type", std::string(1, type)}, {"rank", rank}, {"affine", affine}, {"name", d.name()}};
  out["nodes"] = d.nodes();
  out["cartan"] = d.cartan_matrix();
  if (affine) {
    out["marks"] = d.marks();
    out["delta"] = d.delta().coeffs();
  }
  auto roots = Json::array();
  for (const auto& r : d.finite_positive_roots())
    roots.push_back(r.coeffs());
  // Affine diagrams list the positive roots of the finite part, in finite
  // coordinates; the real roots are those plus multiples of delta.
  out["positive_roots"] = roots;
  out["num_positive_roots"] = d.finite_positive_roots().size();
  const auto fin = affine ? DynkinDiagram::build(type, rank, false) : d;
  out["highest_root"] = highest_root(fin).coeffs();
  out["cominuscule_nodes"] = cominuscule_nodes(fin);
  return out;
}

Json cmd_smooth(char type, int rank, int d, const std::string& u_text)
{
  const auto ctx = build_context(type, rank, d);
  const auto& W = ctx.group;
  const auto u = parse_element(ctx, u_text);
  const auto rep = is_smooth(ctx, u);
  if (!rep.agree())
    throw InvariantViolation("smoothness criteria disagree at u = " + W.format(u));
  Json out{{"type", std::string(1, type)}, {"rank", rank}, {"d", d}, {"u_word", W.format(u)}};
  out["smooth"] = smooth_json(rep);
  out["witness"] = Json{{"w_L", W.format(rep.w_l)}, {"w_LJ", W.format(rep.w_lj)}};
  return out;
}

Json cmd_conormal(char type, int rank, int d, const std::string& w_text, bool fibre, bool verbose)
{
  const auto ctx = build_context(type, rank, d);
  const auto& W = ctx.group;
  const auto& D = ctx.diagram();
  const auto w = parse_element(ctx, w_text);
  const auto rep = closure_is_schubert(ctx, w);

  Json out{{"type", std::string(1, type)}, {"rank", rank}, {"d", d}};
  out["w_word"] = W.format(w);
  if (type == 'D')
    out["w_perm"] = from_element(W, w).str();
  out["v_word"] = W.format(rep.v);
  out["wv_word"] = W.format(rep.wv);
  auto r = Json::array();
  for (const auto& a : rep.r)
    r.push_back(D.to_finite(a).coeffs());
  out["R"] = r;
  out["smooth"] = smooth_json(rep.smooth);
  out["closure_is_schubert"] = rep.closure_is_schubert;
  if (fibre) {
    if (rep.closure_is_schubert) {
      const auto f = fibre_maximal(ctx, w);
      out["fibre_max"] = words(W, f.maximal);
      if (verbose)
        out["fibre_all"] = words(W, f.all);
    } else {
      out["fibre_max"] = nullptr;
      out["fibre_refused"] = "X_J(w0 w w_J) is singular; no fibre decomposition";
    }
  }
  return out;
}

Json cmd_detvar(int n, int r)
{
  const auto f = fibre_rank(n, r);
  const auto ctx = build_context('D', n, n);
  const auto& W = ctx.group;
  Json out{{"n", n}, {"r", r}, {"nbar", nbar(n)}};
  out["w_r"] = w_r(n, r).str();
  out["w_r_word"] = W.format(to_element(W, w_r(n, r)));
  out["v_r_word"] = W.format(f.v);
  out["fibre_rank"] = f.rank;
  out["witness"] = f.witness.str();
  out["iota_witness_word"] = W.format(f.iota_witness);
  out["fibre_max"] = words(W, f.fibre_max);
  return out;
}

Json cmd_verify(const VerificationReport& rep, bool timing)
{
  Json out{{"suite", rep.suite}, {"max_rank", rep.max_rank}, {"include_e7", rep.include_e7}};
  auto checks = Json::array();
  for (const auto& c : rep.checks) {
    Json item{{"id", c.id}, {"params", c.params}, {"pass", c.pass}, {"detail", c.detail}};
    if (timing)
      item["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(item);
  }
  out["checks"] = checks;
  out["totals"] = Json{{"checks", rep.checks.size()}, {"passed", rep.passed()}, {"failed", rep.failed()}};
  out["pass"] = rep.pass();
  return out;
}

std::string plain(const Json& v)
{
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_text(std::ostream& out, const Json& obj)
{
  std::size_t width = 0;
  for (const auto& [key, value] : obj.items())
    width = std::max(width, key.size());
  for (const auto& [key, value] : obj.items())
    out << std::left << std::setw(static_cast<int>(width) + 2) << key + ":" << plain(value) << '\n';
}

void print_verify_text(std::ostream& out, const Json& rep)
{
  std::size_t id_w = 0, param_w = 0;
  for (const auto& c : rep["checks"]) {
    id_w = std::max(id_w, c["id"].get<std::string>().size());
    param_w = std::max(param_w, c["params"].get<std::string>().size());
  }
  for (const auto& c : rep["checks"]) {
    out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(id_w) + 2)
        << c["id"].get<std::string>() << std::setw(static_cast<int>(param_w) + 2) << c["params"].get<std::string>()
        << c["detail"].get<std::string>();
    if (c.contains("elapsed_ms"))
      out << "  (" << c["elapsed_ms"].get<double>() << " ms)";
    out << '\n';
  }
  const auto& t = rep["totals"];
  out << t["passed"] << "/" << t["checks"] << " checks passed\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Conormal varieties of Schubert varieties in cominuscule Grassmannians"};
  app.name("schubert");
  app.require_subcommand(1);

  std::string type;
  int rank = 0, d = 0, n = 0, r = 0, max_rank = 5;
  std::string word, suite;
  bool json = false, affine = false, fibre = false, verbose = false, include_e7 = false, timing = false;

  auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
  roots->add_option("--type", type, "A B C D E F G")->required();
  roots->add_option("--rank", rank)->required();
  roots->add_flag("--affine", affine, "Use the extended diagram");

  auto* smooth = app.add_subcommand("smooth", "Smoothness criteria for u in W_d n W^0");
  smooth->add_option("--type", type)->required();
  smooth->add_option("--rank", rank)->required();
  smooth->add_option("--comin", d, "Cominuscule node")->required();
  smooth->add_option("--u", word, "Reduced word, e.g. \"2 1 0\"")->required();

  auto* conormal = app.add_subcommand("conormal", "Conormal data of X_J(w)");
  conormal->add_option("--type", type)->required();
  conormal->add_option("--rank", rank)->required();
  conormal->add_option("--comin", d, "Cominuscule node")->required();
  conormal->add_option("--w", word, "Word, or a signed permutation for type D")->required();
  conormal->add_flag("--fibre", fibre, "Maximal elements of the fibre index set");
  conormal->add_flag("--verbose", verbose, "With --fibre, list the whole index set");

  auto* detvar = app.add_subcommand("detvar", "Skew-symmetric determinantal fibre");
  detvar->add_option("--n", n)->required();
  detvar->add_option("--r", r, "Even rank bound")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--max-rank", max_rank, "Default 5");
  verify->add_flag("--include-e7", include_e7);
  verify->add_flag("--timing", timing, "Report elapsed times");

  for (auto* sub : {roots, smooth, conormal, detvar, verify})
    sub->add_flag("--json", json, "JSON output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Json result;
    if (roots->parsed())
      result = cmd_roots(parse_type(type), rank, affine);
    else if (smooth->parsed())
      result = cmd_smooth(parse_type(type), rank, d, word);
    else if (conormal->parsed())
      result = cmd_conormal(parse_type(type), rank, d, word, fibre, verbose);
    else if (detvar->parsed())
      result = cmd_detvar(n, r);
    else {
      const auto start = std::chrono::steady_clock::now();
      const auto rep = verify_suite(suite, max_rank, include_e7);
      result = cmd_verify(rep, timing);
      if (timing)
        result["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (json)
        out << result.dump(2) << '\n';
      else
        print_verify_text(out, result);
      return rep.pass() ? 0 : 1;
    }
    if (json)
      out << result.dump(2) << '\n';
    else
      print_text(out, result);
    return 0;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace schubert::cli
