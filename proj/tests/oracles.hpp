#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "schubert/detvar.hpp"
#include "schubert/weyl.hpp"

namespace oracle {

using schubert::AffineWeylElement;
using schubert::RootVector;
using schubert::WeylGroup;

// All elements of a finite Weyl group, by closure under right multiplication.
inline std::vector<AffineWeylElement> all_elements(const WeylGroup& g)
{
  std::set<AffineWeylElement> seen{g.identity()};
  std::deque<AffineWeylElement> queue{g.identity()};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (int s : g.nodes()) {
      auto y = x * g.simple(s);
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

// Number of positive roots made negative: the length, computed without
// descent stripping.
inline int inversion_count(const WeylGroup& g, const AffineWeylElement& w)
{
  int n = 0;
  for (const auto& a : schubert::positive_roots(g.diagram()))
    if (!g.act(w, a).nonneg_nonzero())
      ++n;
  return n;
}

// Elements obtained from subwords of the given word.
inline std::set<AffineWeylElement> subword_products(const WeylGroup& g,
                                                    const schubert::WeylWord& word)
{
  if (word.size() > 20)
    throw std::invalid_argument("subword oracle: word too long");
  std::set<AffineWeylElement> out;
  const unsigned long total = 1UL << word.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    auto x = g.identity();
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask & (1UL << i))
        x = x * g.simple(word[i]);
    out.insert(x);
  }
  return out;
}

// u <= w iff u is a subword product of a fixed reduced word of w.
inline bool bruhat_leq(const WeylGroup& g, const AffineWeylElement& u, const AffineWeylElement& w)
{
  return subword_products(g, g.reduced_word(w)).count(u) > 0;
}

// u * w as the unique Bruhat-maximum of {xy : x <= u, y <= w}; the maximum
// is located by length and its uniqueness checked.
inline AffineWeylElement demazure(const WeylGroup& g, const AffineWeylElement& u,
                                  const AffineWeylElement& w)
{
  const auto xs = subword_products(g, g.reduced_word(u));
  const auto ys = subword_products(g, g.reduced_word(w));
  std::set<AffineWeylElement> products;
  for (const auto& x : xs)
    for (const auto& y : ys)
      products.insert(x * y);
  int best = -1;
  std::vector<AffineWeylElement> top;
  for (const auto& p : products) {
    const int l = static_cast<int>(g.reduced_word(p).size());
    if (l > best) {
      best = l;
      top.clear();
    }
    if (l == best)
      top.push_back(p);
  }
  if (top.size() != 1)
    throw std::logic_error("demazure oracle: no unique maximum");
  for (const auto& p : products)
    if (!bruhat_leq(g, p, top.front()))
      throw std::logic_error("demazure oracle: maximum does not dominate");
  return top.front();
}

// e(v) as a signed unit vector: v <= n is +e_v, v > n is -e_{2n+1-v}.
inline std::vector<int> signed_unit(int n, int v)
{
  std::vector<int> out(n, 0);
  if (v <= n)
    out[v - 1] = 1;
  else
    out[2 * n - v] = -1;
  return out;
}

// Type D length of a signed permutation: the positive roots e_a +- e_b
// (a < b) sent to negative roots, computed on vectors. A root is positive
// when its first nonzero coordinate is.
inline int signed_length(const schubert::SignedPermutation& p)
{
  const int n = p.n();
  auto image = [&](int a, int b, int sign) {
    auto x = signed_unit(n, p(a));
    auto y = signed_unit(n, p(b));
    for (int k = 0; k < n; ++k)
      x[k] += sign * y[k];
    return x;
  };
  auto positive = [](const std::vector<int>& x) {
    for (int c : x)
      if (c != 0)
        return c > 0;
    return false;
  };
  int count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      count += (positive(image(a, b, -1)) ? 0 : 1) + (positive(image(a, b, 1)) ? 0 : 1);
  return count;
}

// Every element of W(D_n): permutations with an even number of sign changes.
inline std::vector<schubert::SignedPermutation> all_signed(int n)
{
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i + 1;
  std::vector<schubert::SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) % 2)
        continue;
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i)
        v[i] = mask & (1u << i) ? 2 * n + 1 - perm[i] : perm[i];
      out.emplace_back(n, v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

} // namespace oracle
