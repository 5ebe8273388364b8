// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time
// limit. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "schubert/detvar.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

struct Outcome
{
  bool pass;
  std::string note;
};

// Suite passes and its check count matches the expected sweep.
Outcome suite(const std::string& name, int max_rank, std::size_t expected)
{
  const auto rep = verify_suite(name, max_rank, false);
  std::ostringstream note;
  note << rep.passed() << "/" << rep.checks.size() << " checks";
  for (const auto& c : rep.checks)
    if (!c.pass) {
      note << "; first failure " << c.params << ": " << c.detail;
      break;
    }
  if (rep.checks.size() != expected)
    note << "; expected " << expected << " checks";
  return {rep.pass() && rep.checks.size() == expected, note.str()};
}

// Cominuscule pairs of rank <= 6 without E7: A 21, B 5, C 5, D 9, E6 2.
constexpr std::size_t pairs_rank6 = 42;
// Rank <= 5: A 15, B 4, C 4, D 6.
constexpr std::size_t pairs_rank5 = 29;

Outcome criterion10()
{
  const auto rep = verify_suite("detvar-relations", 8, false);
  // Every relation family must be exercised for both parities of n.
  std::map<std::string, std::set<int>> parities;
  for (const auto& c : rep.checks) {
    const int n = std::stoi(c.params.substr(2));
    const auto rest = c.params.substr(c.params.find(',') + 1);
    parities[rest.substr(0, rest.find(','))].insert(n % 2);
  }
  bool covered = true;
  for (const char* family :
       {"braid", "rel1", "rel2", "rel2-chain", "factor-wr", "factor-w0wrwJ", "wlj-string", "x-closed-form"})
    covered = covered && parities[family].size() == 2;
  std::ostringstream note;
  note << rep.passed() << "/" << rep.checks.size() << " checks, n = 4..8";
  if (!covered)
    note << "; a relation family misses a parity";
  return {rep.pass() && covered, note.str()};
}

Outcome criterion11()
{
  int checked = 0;
  for (int n = 4; n <= 7; ++n)
    for (int r = 0; r <= nbar(n); r += 2) {
      const auto ix = intersectw(n, r);
      if (!ix.holds())
        return {false, "intersection identity fails at n=" + std::to_string(n) + ", r=" + std::to_string(r)};
      const auto f = fibre_rank(n, r);
      if (f.rank != nbar(n) - r || f.fibre_max != std::vector<AffineWeylElement>{ix.target})
        return {false, "fibre rank or maximum wrong at n=" + std::to_string(n) + ", r=" + std::to_string(r)};
      ++checked;
    }
  return {checked == 14, std::to_string(checked) + " (n, r) pairs"};
}

Outcome criterion12()
{
  int compared = 0;
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    const WeylGroup g(DynkinDiagram::build(s, n, false));
    const auto all = oracle::all_elements(g);
    for (const auto& u : all)
      for (const auto& w : all) {
        if (g.bruhat_leq(u, w) != oracle::bruhat_leq(g, u, w))
          return {false, std::string("Bruhat order differs in ") + s + std::to_string(n)};
        ++compared;
      }
  }
  const WeylGroup a3(DynkinDiagram::build('A', 3, false));
  const auto all = oracle::all_elements(a3);
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto xy = a3.demazure(x, y);
      for (const auto& z : all)
        if (a3.demazure(xy, z) != a3.demazure(x, a3.demazure(y, z)))
          return {false, "Demazure product not associative on W(A3)"};
    }
  const WeylGroup d4(DynkinDiagram::build('D', 4, false));
  const auto signed4 = oracle::all_signed(4);
  for (const auto& p : signed4)
    if (d4.length(to_element(d4, p)) != oracle::signed_length(p))
      return {false, "type D length differs at " + p.str()};
  return {true, std::to_string(compared) + " Bruhat pairs, " + std::to_string(all.size() * all.size() * all.size()) +
                    " Demazure triples, " + std::to_string(signed4.size()) + " signed permutations"};
}

Outcome criterion13()
{
  const std::vector<std::vector<std::string>> calls{
      {"roots", "--type", "E", "--rank", "6", "--affine", "--json"},
      {"smooth", "--type", "D", "--rank", "4", "--comin", "4", "--u", "", "--json"},
      {"conormal", "--type", "D", "--rank", "4", "--comin", "4", "--w", "[3,4,7,8]", "--fibre", "--json"},
      {"detvar", "--n", "4", "--r", "2", "--json"},
      {"verify", "--suite", "result-q", "--max-rank", "4", "--json"},
  };
  for (const auto& args : calls) {
    std::ostringstream a, b, err;
    const int ca = cli::run(args, a, err);
    const int cb = cli::run(args, b, err);
    if (ca != 0 || cb != 0)
      return {false, args[0] + " exited " + std::to_string(ca) + ": " + err.str()};
    if (a.str() != b.str() || a.str().empty())
      return {false, args[0] + " output is not byte-stable"};
  }
  std::ostringstream out, err;
  const int code = cli::run({"verify", "--suite", "all", "--max-rank", "4"}, out, err);
  if (code != 0)
    return {false, "verify --suite all --max-rank 4 exited " + std::to_string(code)};
  return {true, "5 subcommands byte-stable; verify all exits 0"};
}

} // namespace

int main()
{
  struct Criterion
  {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "tau_q = w0^J w_d^J, rank <= 6", 60, [] { return suite("result-q", 6, pairs_rank6); }},
      {2, "w_J(alpha_d) = theta_0, w_J(alpha_0) = theta_d", 60, [] { return suite("wsontheta", 6, pairs_rank6); }},
      {3, "iota preserves C, the form and delta", 60, [] { return suite("form-inv", 6, pairs_rank6); }},
      {4, "iota conjugation on the root lattice", 60, [] { return suite("iota-conj", 6, pairs_rank6); }},
      {5, "coset equalities and l(wv) = l(w) + l(v)", 120, [] { return suite("vinwsd", 5, pairs_rank5); }},
      {6, "smoothness criteria agree", 120, [] { return suite("sb-equiv", 5, pairs_rank5); }},
      {7, "shift bijection and pointwise identity", 120, [] { return suite("involution-bij", 5, pairs_rank5); }},
      {8, "Schubert predicate and length bookkeeping", 120, [] { return suite("main-result", 5, pairs_rank5); }},
      {9, "nilpotent sets", 120, [] { return suite("nilp", 5, pairs_rank5); }},
      {10, "type D relations, n <= 8", 60, criterion10},
      {11, "intersection identity and fibre rank, n = 4..7", 300, criterion11},
      {12, "oracle equivalence", 120, criterion12},
      {13, "CLI contract", 120, criterion13},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %2d: %s  %-48s %7.2fs (limit %3.0fs)  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.what, s,
                c.limit_s, o.note.c_str(), in_time ? "" : "; over time limit");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
