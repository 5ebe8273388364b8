#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

namespace {

WeylGroup group(char s, int n, bool affine = false)
{
  return WeylGroup(DynkinDiagram::build(s, n, affine));
}

WeylWord random_word(std::mt19937& rng, const NodeSet& nodes, int max_len)
{
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  WeylWord w(len(rng));
  for (auto& x : w)
    x = nodes[pick(rng)];
  return w;
}

} // namespace

TEST_CASE("simple reflections act as expected")
{
  auto g = group('A', 2);
  const auto& d = g.diagram();
  CHECK(g.act(g.simple(1), d.simple_root(1)) == -d.simple_root(1));
  CHECK(g.act(g.simple(1), d.simple_root(2)) == RootVector({1, 1}));

  auto a = group('A', 1, true);
  CHECK(a.act(a.simple(0), a.diagram().simple_root(0)) == -a.diagram().simple_root(0));
}

TEST_CASE("s_0 is (s_theta, -theta^vee)")
{
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    auto g = group(s, n, true);
    const auto fin = g.diagram().finite_part();
    const auto theta = highest_root(fin);
    auto minus_coroot = coroot(fin, theta);
    for (auto& c : minus_coroot.coords)
      c = -c;
    // s_theta located by brute force in the finite group
    auto f = WeylGroup(fin);
    std::optional<AffineWeylElement> s_theta;
    for (const auto& x : oracle::all_elements(f)) {
      bool ok = true;
      for (int j : fin.nodes()) {
        const auto a = fin.simple_root(j);
        const auto k = pairing(fin, a, coroot(fin, theta));
        ok = ok && f.act(x, a) == a - static_cast<int>(k.numerator()) * theta;
      }
      if (ok)
        s_theta = x;
    }
    REQUIRE(s_theta);
    CHECK(g.evaluate(f.reduced_word(*s_theta)) * g.translation(minus_coroot) == g.simple(0));
  }
}

TEST_CASE("length")
{
  auto g = group('A', 2);
  CHECK(g.length(g.identity()) == 0);
  CHECK(g.length(g.evaluate({1, 2, 1})) == 3);

  auto a = group('A', 1, true);
  auto t = a.translation(CoweightVector{{Rational(-1)}});
  CHECK(a.length(t) == 2);
  CHECK(t == a.evaluate({1, 0}));
}

TEST_CASE("reduced words round-trip")
{
  auto g = group('A', 2);
  CHECK(g.reduced_word(g.identity()).empty());
  auto w0 = g.longest_element({1, 2});
  auto word = g.reduced_word(w0);
  CHECK(word.size() == 3);
  CHECK(g.evaluate(word) == w0);
  auto a = group('A', 1, true);
  CHECK(a.reduced_word(a.simple(0)) == WeylWord{0});
  CHECK(a.format(a.evaluate({0, 1, 0})) == "0 1 0");
}

TEST_CASE("random words: length bounded by word length, reduced iff equal")
{
  std::mt19937 rng(11);
  for (auto [s, n, aff] : std::vector<std::tuple<char, int, bool>>{
           {'A', 4, false}, {'B', 3, true}, {'C', 4, false}, {'D', 5, true}, {'E', 6, false}, {'A', 6, true}}) {
    auto g = group(s, n, aff);
    for (int trial = 0; trial < 60; ++trial) {
      auto word = random_word(rng, g.nodes(), 12);
      auto w = g.evaluate(word);
      auto red = g.reduced_word(w);
      CHECK(red.size() <= word.size());
      CHECK(g.evaluate(red) == w);
      CHECK(g.length(g.evaluate(red)) == static_cast<int>(red.size()));
      if (!aff)
        CHECK(oracle::inversion_count(g, w) == static_cast<int>(red.size()));
    }
  }
}

TEST_CASE("group laws")
{
  std::mt19937 rng(5);
  auto g = group('C', 3, true);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = g.evaluate(random_word(rng, g.nodes(), 10));
    auto b = g.evaluate(random_word(rng, g.nodes(), 10));
    auto c = g.evaluate(random_word(rng, g.nodes(), 10));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == g.identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(g.act(a * b, g.diagram().simple_root(0)) == g.act(a, g.act(b, g.diagram().simple_root(0))));
    CHECK(g.act(a, g.diagram().delta()) == g.diagram().delta());
  }
}

TEST_CASE("act preserves the form; positivity rule matches coefficient signs")
{
  std::mt19937 rng(3);
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 4}, {'D', 4}, {'E', 6}, {'G', 2}}) {
    auto g = group(s, n, true);
    const auto& d = g.diagram();
    for (int trial = 0; trial < 40; ++trial) {
      auto w = g.evaluate(random_word(rng, g.nodes(), 12));
      auto x = g.evaluate(random_word(rng, g.nodes(), 8));
      auto y = g.evaluate(random_word(rng, g.nodes(), 8));
      auto a = g.act(x, d.simple_root(d.nodes()[trial % d.size()]));
      auto b = g.act(y, d.simple_root(d.nodes()[(trial + 1) % d.size()]));
      CHECK(inner_form(d, g.act(w, a), g.act(w, b)) == inner_form(d, a, b));
      CHECK(is_real_root(d, a));
      CHECK(g.is_positive(a) == a.nonneg_nonzero());
      CHECK(!g.is_positive(a) == a.nonpos_nonzero());
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword oracle")
{
  CHECK_FALSE(group('A', 2).bruhat_leq(group('A', 2).evaluate({1, 2}), group('A', 2).simple(2)));
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    auto g = group(s, n);
    auto all = oracle::all_elements(g);
    for (const auto& u : all) {
      CHECK(g.bruhat_leq(g.identity(), u));
      for (const auto& w : all)
        CHECK(g.bruhat_leq(u, w) == oracle::bruhat_leq(g, u, w));
    }
  }
}

TEST_CASE("Bruhat order in an affine group against the oracle")
{
  std::mt19937 rng(17);
  auto g = group('A', 2, true);
  for (int trial = 0; trial < 150; ++trial) {
    auto u = g.evaluate(random_word(rng, g.nodes(), 5));
    auto w = g.evaluate(random_word(rng, g.nodes(), 7));
    CHECK(g.bruhat_leq(u, w) == oracle::bruhat_leq(g, u, w));
  }
}

TEST_CASE("Demazure product")
{
  auto a1 = group('A', 1);
  CHECK(a1.demazure(a1.simple(1), a1.simple(1)) == a1.simple(1));
  auto a2 = group('A', 2);
  auto w = a2.evaluate({2, 1});
  CHECK(a2.demazure(a2.identity(), w) == w);
  CHECK(a2.demazure(a2.evaluate({1, 2}), a2.evaluate({2, 1})) == a2.evaluate({1, 2, 1}));

  auto g = group('A', 3);
  auto all = oracle::all_elements(g);
  for (const auto& u : all)
    for (const auto& v : all) {
      auto p = g.demazure(u, v);
      CHECK(p == oracle::demazure(g, u, v));
      // l(uv) = l(u) + l(v) iff u * v = uv
      CHECK((g.length(u * v) == g.length(u) + g.length(v)) == (p == u * v));
    }
}

TEST_CASE("Demazure product is associative")
{
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    auto g = group(s, n);
    auto all = oracle::all_elements(g);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto ab = g.demazure(a, b);
        for (const auto& c : all)
          CHECK(g.demazure(ab, c) == g.demazure(a, g.demazure(b, c)));
      }
  }
}

TEST_CASE("minimal representatives")
{
  auto g = group('A', 2);
  CHECK(g.min_rep(g.identity(), {2}) == g.identity());
  CHECK(g.min_rep(g.evaluate({1, 2}), {2}) == g.simple(1));
  CHECK(g.min_rep(g.evaluate({2}), {2}) == g.identity());

  std::mt19937 rng(23);
  auto h = group('D', 5, true);
  const NodeSet j{1, 2, 3, 4};
  for (int trial = 0; trial < 40; ++trial) {
    auto w = h.evaluate(random_word(rng, h.nodes(), 14));
    auto m = h.min_rep(w, j);
    CHECK(h.min_rep(m, j) == m);
    CHECK(h.is_min_rep(m, j));
    auto x = m.inverse() * w;
    CHECK(is_subset(h.support(x), j));
    CHECK(h.length(w) == h.length(m) + h.length(x));
  }
  CHECK_THROWS_AS(h.min_rep(h.identity(), h.nodes()), std::invalid_argument);
}

TEST_CASE("longest elements")
{
  auto a2 = group('A', 2);
  CHECK(a2.longest_element({1}) == a2.simple(1));
  CHECK(a2.length(a2.longest_element({1, 2})) == 3);
  auto d4 = group('D', 4);
  CHECK(d4.length(d4.longest_element(d4.nodes())) == 12);

  auto g = group('E', 6, true);
  for (const NodeSet& j : {NodeSet{0, 1, 3, 4}, NodeSet{1, 2, 3, 4, 5, 6}, NodeSet{0, 2, 4, 5, 6}}) {
    auto w = g.longest_element(j);
    CHECK(w * w == g.identity());
    for (const auto& a : positive_roots(g.diagram(), j)) {
      auto b = g.act(w, a);
      CHECK(b.nonpos_nonzero());
      CHECK(is_subset(g.diagram().support(b), j));
    }
  }
  CHECK_THROWS_AS(g.longest_element(g.nodes()), std::invalid_argument);
}

TEST_CASE("support")
{
  auto a3 = group('A', 3);
  CHECK(a3.support(a3.identity()).empty());
  CHECK(a3.support(a3.evaluate({1, 2, 1})) == NodeSet{1, 2});
  auto a2 = group('A', 2, true);
  auto theta = highest_root(a2.diagram().finite_part());
  auto q = coroot(a2.diagram().finite_part(), theta);
  for (auto& c : q.coords)
    c = -c;
  CHECK(a2.support(a2.translation(q)) == NodeSet{0, 1, 2});
}

TEST_CASE("support of inversions")
{
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3}, {'C', 4}, {'D', 4}}) {
    auto g = group(s, n);
    for (const auto& w : oracle::all_elements(g)) {
      auto supp = g.support(w);
      for (const auto& a : g.inversions(w, g.nodes()))
        CHECK(is_subset(g.diagram().support(a), supp));
    }
  }
}

TEST_CASE("enumerating minimal representatives")
{
  auto a1 = group('A', 1);
  CHECK(a1.enumerate_min_reps({1}, {1}).size() == 1);
  auto a3 = group('A', 3);
  CHECK(a3.enumerate_min_reps({1, 2, 3}, {1, 3}).size() == 6);
  auto d4 = group('D', 4);
  CHECK(d4.enumerate_min_reps({1, 2, 3, 4}, {1, 2, 3}).size() == 8);
  auto e6 = group('E', 6);
  CHECK(e6.enumerate_min_reps(e6.nodes(), {1, 2, 3, 4, 5}).size() == 27);

  auto aff = group('A', 2, true);
  auto reps = aff.enumerate_min_reps({0, 1}, {1});
  CHECK(reps.size() == 3);
  CHECK(reps.front() == aff.identity());

  // bounded enumeration equals filtering the unbounded one
  auto all = a3.enumerate_min_reps({1, 2, 3}, {2});
  CHECK(all.size() == 12);
  auto bound = a3.evaluate({1, 3, 2});
  auto below = a3.enumerate_min_reps({1, 2, 3}, {2}, bound);
  std::size_t expected = 0;
  for (const auto& x : all)
    expected += oracle::bruhat_leq(a3, x, bound) ? 1 : 0;
  CHECK(below.size() == expected);
  for (const auto& x : below)
    CHECK(oracle::bruhat_leq(a3, x, bound));

  CHECK_THROWS_AS(aff.enumerate_min_reps(aff.nodes(), {1}), std::invalid_argument);
}

TEST_CASE("word parsing")
{
  CHECK(parse_word("") == WeylWord{});
  CHECK(parse_word(" 2 1  3 2 ") == WeylWord{2, 1, 3, 2});
  CHECK_THROWS_AS(parse_word("2 x"), std::invalid_argument);
  CHECK_THROWS_AS(group('A', 2).parse("3"), std::invalid_argument);
  CHECK_THROWS_AS(group('A', 2).parse("0"), std::invalid_argument);
}
