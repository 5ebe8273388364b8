#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "schubert/conormal.hpp"
#include "schubert/detvar.hpp"

using namespace schubert;

using oracle::all_signed;
using oracle::signed_length;

TEST_CASE("signed permutation validation and parsing")
{
  CHECK(SignedPermutation::parse("[3,4,7,8]").str() == "[3,4,7,8]");
  CHECK(SignedPermutation::parse(" [ 2, 1,3,4 ]") == SignedPermutation(4, {2, 1, 3, 4}));
  CHECK_THROWS_AS(SignedPermutation(4, {1, 2, 3, 8}), std::invalid_argument); // odd sign changes
  CHECK_THROWS_AS(SignedPermutation(4, {1, 8, 3, 4}), std::invalid_argument); // 1 and mu(1)
  CHECK_THROWS_AS(SignedPermutation(4, {1, 2, 3, 9}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation(4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation::parse("3,4,7,8"), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation::parse("[3,x,7,8]"), std::invalid_argument);
  auto p = SignedPermutation(4, {3, 4, 7, 8});
  for (int i = 1; i <= 8; ++i)
    CHECK(p(9 - i) == 9 - p(i));
}

TEST_CASE("word_to_perm examples")
{
  CHECK(word_to_perm(4, {}) == SignedPermutation::identity(4));
  CHECK(word_to_perm(4, {1}) == SignedPermutation(4, {2, 1, 3, 4}));
  CHECK(word_to_perm(4, {4}) == SignedPermutation(4, {1, 2, 5, 6}));
  CHECK_THROWS_AS(word_to_perm(4, {5}), std::invalid_argument);
  CHECK_THROWS_AS(word_to_perm(4, {0}), std::invalid_argument);
  for (int n = 4; n <= 7; ++n) {
    WeylGroup fin(DynkinDiagram::build('D', n, false));
    NodeSet j;
    for (int i = 1; i < n; ++i)
      j.push_back(i);
    std::vector<int> rev;
    for (int i = n; i >= 1; --i)
      rev.push_back(i);
    CHECK(word_to_perm(n, fin.reduced_word(fin.longest_element(j))) == SignedPermutation(n, rev));
  }
}

TEST_CASE("perm_to_word round trips")
{
  CHECK(perm_to_word(SignedPermutation::identity(5)).empty());
  CHECK(perm_to_word(SignedPermutation(4, {2, 1, 3, 4})) == WeylWord{1});
  for (int n = 4; n <= 7; ++n) {
    std::vector<int> w0;
    for (int v = 2 * n; v >= n + 2; --v)
      w0.push_back(v);
    w0.push_back(nbar(n) + 1);
    auto word = perm_to_word(SignedPermutation(n, w0));
    CHECK(static_cast<int>(word.size()) == n * (n - 1));
    CHECK(word_to_perm(n, word) == SignedPermutation(n, w0));
  }
}

TEST_CASE("type D length agrees with inversions, n = 4 exhaustively")
{
  WeylGroup fin(DynkinDiagram::build('D', 4, false));
  auto all = all_signed(4);
  CHECK(all.size() == 192);
  for (const auto& p : all) {
    const auto w = to_element(fin, p);
    CHECK(fin.length(w) == signed_length(p));
    CHECK(inversion_length(p) == signed_length(p));
    CHECK(from_element(fin, w) == p);
  }
}

TEST_CASE("type D length on random words, n <= 7")
{
  std::mt19937 rng(7);
  for (int n = 5; n <= 7; ++n) {
    WeylGroup fin(DynkinDiagram::build('D', n, false));
    std::uniform_int_distribution<int> letter(1, n);
    for (int trial = 0; trial < 50; ++trial) {
      WeylWord word(20);
      for (auto& s : word)
        s = letter(rng);
      auto p = word_to_perm(n, word);
      auto w = fin.evaluate(word);
      CHECK(fin.length(w) == signed_length(p));
      CHECK(static_cast<int>(perm_to_word(p).size()) == signed_length(p));
      CHECK(to_element(fin, p) == w);
    }
  }
}

TEST_CASE("conversions in the affine group")
{
  auto ctx = build_context('D', 5, 5);
  auto p = SignedPermutation(5, {3, 4, 5, 9, 10});
  auto w = to_element(ctx.group, p);
  CHECK(from_element(ctx.group, w) == p);
  CHECK_THROWS_AS(from_element(ctx.group, ctx.group.simple(0)), std::invalid_argument);
  CHECK_THROWS_AS(to_element(WeylGroup(DynkinDiagram::build('A', 5, false)), p), std::invalid_argument);
}

TEST_CASE("w_r")
{
  CHECK(w_r(4, 2).str() == "[3,4,7,8]");
  CHECK(w_r(6, 0) == SignedPermutation::identity(6));
  CHECK(w_r(5, 4).str() == "[5,7,8,9,10]");
  CHECK_THROWS_AS(w_r(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(w_r(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(w_r(4, -2), std::invalid_argument);
  CHECK_THROWS_AS(w_r(3, 2), std::invalid_argument);
}

TEST_CASE("x_i")
{
  CHECK(x_word(4, 3) == WeylWord{4});
  CHECK(x_chain(4, 3) == word_to_perm(4, {4}));
  CHECK(x_word(4, 2) == WeylWord{3, 2, 4});
  CHECK(x_word(4, 1) == WeylWord{2, 1, 3, 2, 4});
  CHECK(x_chain(4, 2).str() == "[1,4,6,7]");
  CHECK(x_chain(4, 1) == w_r(4, 2));
  CHECK_THROWS_AS(x_word(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(x_word(4, 4), std::invalid_argument);
  for (int n = 4; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      CHECK(x_chain(n, i) == x_closed_form(n, i));
      CHECK(inversion_length(x_chain(n, i)) == 2 * (n - 1 - i) + 1);
    }
}

TEST_CASE("relations")
{
  for (int n = 4; n <= 8; ++n) {
    auto checks = check_relations(n);
    for (const auto& c : checks) {
      INFO(n, " ", c.name, " ", c.params);
      CHECK(c.pass);
    }
    auto count = [&](const std::string& name) {
      return std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.name == name; });
    };
    CHECK(count("rel1") == n - 4);
    CHECK(count("rel2") == nbar(n) - 3);
    CHECK(count("braid") == n * (n + 1) / 2);
    CHECK(count("wlj-string") == nbar(n) / 2 + 1);
  }
  CHECK_THROWS_AS(check_relations(3), std::invalid_argument);
}

TEST_CASE("intersection identity and fibre rank")
{
  for (int n = 4; n <= 7; ++n)
    for (int r = 0; r <= nbar(n); r += 2) {
      INFO(n, " ", r);
      CHECK(intersectw(n, r).holds());
      auto f = fibre_rank(n, r);
      CHECK(f.rank == nbar(n) - r);
      CHECK(f.witness == w_r(n, nbar(n) - r));
      CHECK(f.fibre_max.size() == 1);
    }
  CHECK(fibre_rank(4, 2).rank == 2);
  CHECK(fibre_rank(5, 2).rank == 2);
  auto top = fibre_rank(6, 6);
  CHECK(top.rank == 0);
  CHECK(top.witness == SignedPermutation::identity(6));
}

TEST_CASE("w_2 in D4 closes to a Schubert variety")
{
  auto ctx = build_context('D', 4, 4);
  auto w = to_element(ctx.group, w_r(4, 2));
  auto rep = closure_is_schubert(ctx, w);
  CHECK(rep.closure_is_schubert);
  auto fibre = fibre_maximal(ctx, w);
  CHECK(fibre.maximal == std::vector<AffineWeylElement>{iota_elem(ctx, to_element(ctx.group, w_r(4, 2)))});
}
