#include "schubert/detvar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schubert/conormal.hpp"

namespace schubert {

namespace {

int mu(int n, int v)
{
  return 2 * n + 1 - v;
}

// Swap the images of positions a and b (right multiplication by (a b)).
void swap_positions(std::vector<int>& full, int a, int b)
{
  std::swap(full[a - 1], full[b - 1]);
}

std::vector<int> full_form(const SignedPermutation& p)
{
  std::vector<int> out(2 * p.n());
  for (int i = 1; i <= 2 * p.n(); ++i)
    out[i - 1] = p(i);
  return out;
}

SignedPermutation from_full(int n, const std::vector<int>& full)
{
  return SignedPermutation(n, std::vector<int>(full.begin(), full.begin() + n));
}

SignedPermutation right_mul(const SignedPermutation& p, int i)
{
  const int n = p.n();
  auto full = full_form(p);
  if (i < n) {
    swap_positions(full, i, i + 1);
    swap_positions(full, 2 * n - i, 2 * n + 1 - i);
  } else {
    // s_n = r_n r_{n-1} r_{n+1} r_n exchanges n-1 <-> n+1 and n <-> n+2.
    swap_positions(full, n - 1, n + 1);
    swap_positions(full, n, n + 2);
  }
  return from_full(n, full);
}

bool right_descent(const SignedPermutation& p, int i)
{
  if (i < p.n())
    return p(i) > p(i + 1);
  return p(p.n() - 1) > p(p.n() + 1);
}

void check_index(int n, int i, const char* what)
{
  if (n < 4)
    throw std::invalid_argument(std::string(what) + ": D_n requires n >= 4");
  if (i < 1 || i > n - 1)
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n - 1));
}

void check_r(int n, int r)
{
  if (n < 4)
    throw std::invalid_argument("D_n requires n >= 4");
  if (r < 0 || r > nbar(n) || r % 2 != 0)
    throw std::invalid_argument("r = " + std::to_string(r) + " must be even with 0 <= r <= " +
                                std::to_string(nbar(n)));
}

std::vector<int> range(int lo, int hi)
{
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k)
    out.push_back(k);
  return out;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts)
{
  std::vector<int> out;
  for (const auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace

SignedPermutation::SignedPermutation(int n, std::vector<int> values) : n_(n), values_(std::move(values))
{
  if (n < 1)
    throw std::invalid_argument("signed permutation needs n >= 1");
  if (static_cast<int>(values_.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " values, got " +
                                std::to_string(values_.size()));
  std::vector<bool> seen(2 * n + 1, false);
  int negatives = 0;
  for (int v : values_) {
    if (v < 1 || v > 2 * n)
      throw std::invalid_argument("value " + std::to_string(v) + " outside 1.." + std::to_string(2 * n));
    if (seen[v] || seen[mu(n, v)])
      throw std::invalid_argument("value " + std::to_string(v) + " repeats up to sign");
    seen[v] = true;
    negatives += v > n ? 1 : 0;
  }
  if (negatives % 2 != 0)
    throw std::invalid_argument("odd number of sign changes: not in W(D_" + std::to_string(n) + ")");
}

SignedPermutation SignedPermutation::identity(int n)
{
  return SignedPermutation(n, range(1, n));
}

SignedPermutation SignedPermutation::parse(const std::string& text)
{
  auto s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("signed permutation must look like [3,4,7,8]: " + text);
  std::vector<int> values;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("bad entry '" + item + "' in " + text);
    values.push_back(std::stoi(item));
  }
  return SignedPermutation(static_cast<int>(values.size()), values);
}

int SignedPermutation::operator()(int i) const
{
  if (i <= n_)
    return values_[i - 1];
  return mu(n_, values_[mu(n_, i) - 1]);
}

std::string SignedPermutation::str() const
{
  std::string out = "[";
  for (std::size_t k = 0; k < values_.size(); ++k)
    out += (k ? "," : "") + std::to_string(values_[k]);
  return out + "]";
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b)
{
  if (a.n() != b.n())
    throw std::invalid_argument("signed permutations of different rank");
  std::vector<int> out(a.n());
  for (int i = 1; i <= a.n(); ++i)
    out[i - 1] = a(b(i));
  return SignedPermutation(a.n(), out);
}

int nbar(int n)
{
  return n - n % 2;
}

SignedPermutation word_to_perm(int n, const WeylWord& word)
{
  auto p = SignedPermutation::identity(n);
  for (int s : word) {
    if (s < 1 || s > n)
      throw std::invalid_argument("generator s_" + std::to_string(s) + " is not in W(D_" +
                                  std::to_string(n) + ")");
    p = right_mul(p, s);
  }
  return p;
}

WeylWord perm_to_word(const SignedPermutation& p)
{
  WeylWord stripped;
  auto w = p;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i <= p.n(); ++i)
      if (right_descent(w, i)) {
        w = right_mul(w, i);
        stripped.push_back(i);
        found = true;
        break;
      }
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

int inversion_length(const SignedPermutation& p)
{
  int count = 0;
  for (int a = 1; a <= p.n(); ++a)
    for (int b = a + 1; b <= p.n(); ++b) {
      count += p(a) > p(b) ? 1 : 0;
      count += p(a) > mu(p.n(), p(b)) ? 1 : 0;
    }
  return count;
}

AffineWeylElement to_element(const WeylGroup& g, const SignedPermutation& p)
{
  const auto& d = g.diagram();
  if (d.series() != 'D' || d.rank() != p.n())
    throw std::invalid_argument(d.name() + " does not contain W(D_" + std::to_string(p.n()) + ")");
  return g.evaluate(perm_to_word(p));
}

SignedPermutation from_element(const WeylGroup& g, const AffineWeylElement& w)
{
  const auto word = g.reduced_word(w);
  const int n = g.diagram().rank();
  if (std::find(word.begin(), word.end(), 0) != word.end())
    throw std::invalid_argument("element is not in the finite Weyl group");
  return word_to_perm(n, word);
}

SignedPermutation w_r(int n, int r)
{
  check_r(n, r);
  SignedPermutation out(n, concat({range(r + 1, n), range(2 * n - r + 1, 2 * n)}));
  for (int i = 1; i < n; ++i)
    if (right_descent(out, i))
      throw InvariantViolation("w_" + std::to_string(r) + " has right descent s_" + std::to_string(i));
  auto prod = SignedPermutation::identity(n);
  for (int i = r - 1; i >= 1; i -= 2)
    prod = prod * x_chain(n, i);
  if (prod != out)
    throw InvariantViolation("w_" + std::to_string(r) + " != x_{r-1} x_{r-3} ... x_1");
  return out;
}

WeylWord x_word(int n, int i)
{
  check_index(n, i, "x_i");
  WeylWord out{n};
  for (int k = n - 2; k >= i; --k)
    out.insert(out.begin(), {k + 1, k});
  return out;
}

SignedPermutation x_chain(int n, int i)
{
  return word_to_perm(n, x_word(n, i));
}

SignedPermutation x_closed_form(int n, int i)
{
  check_index(n, i, "x_i");
  return SignedPermutation(n, concat({range(1, i - 1), range(i + 2, n), {2 * n - i, 2 * n - i + 1}}));
}

std::vector<RelationCheck> check_relations(int n)
{
  if (n < 4)
    throw std::invalid_argument("D_n requires n >= 4");
  std::vector<RelationCheck> out;
  auto add = [&out](std::string name, std::string params, bool pass) {
    out.push_back({std::move(name), std::move(params), pass});
  };
  const int nb = nbar(n);
  const auto e = SignedPermutation::identity(n);
  const auto d0 = DynkinDiagram::build('D', n, false);
  const WeylGroup fin(d0);

  // Coxeter relations: s_i s_j has order m_ij.
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const int m = i == j ? 1 : d0.cartan(i, j) == 0 ? 2 : 3;
      const auto st = word_to_perm(n, {i, j});
      auto power = st;
      bool ok = true;
      for (int k = 1; k < m; ++k) {
        ok = ok && power != e;
        power = power * st;
      }
      add("braid", "i=" + std::to_string(i) + ",j=" + std::to_string(j), ok && power == e);
    }

  for (int i = 1; i <= n - 1; ++i) {
    const auto x = x_chain(n, i);
    const auto params = "i=" + std::to_string(i);
    add("x-closed-form", params, x == x_closed_form(n, i));
    add("x-length", params, inversion_length(x) == 2 * (n - 1 - i) + 1 &&
                                static_cast<int>(x_word(n, i).size()) == inversion_length(x));
  }

  for (int i = 1; i <= n - 4; ++i)
    add("rel1", "i=" + std::to_string(i),
        word_to_perm(n, {i + 2, i + 3}) * x_chain(n, i) == x_chain(n, i) * word_to_perm(n, {i, i + 1}));

  // rel2 lives in the affine group, where iota is defined.
  const auto ctx = build_context('D', n, n);
  const auto& W = ctx.group;
  auto ax = [&](int i) { return W.evaluate(x_word(n, i)); };
  auto iax = [&](int i) { return iota_elem(ctx, ax(i)); };
  for (int k = 3; k <= nb - 1; ++k)
    add("rel2", "k=" + std::to_string(k), iax(nb - k) * ax(k) == ax(k - 2) * iax(nb - k + 2));
  // Chained: iota(x_{nb-k}) x_k x_{k-2} ... x_j = x_{k-2} ... x_{j-2} iota(x_{nb-j+2}).
  for (int k = 3; k <= nb - 1; ++k)
    for (int j = 3 + (k - 3) % 2; j <= k; j += 2) {
      auto lhs = iax(nb - k);
      auto rhs = W.identity();
      for (int m = k; m >= j; m -= 2) {
        lhs = lhs * ax(m);
        rhs = rhs * ax(m - 2);
      }
      rhs = rhs * iax(nb - j + 2);
      add("rel2-chain", "k=" + std::to_string(k) + ",j=" + std::to_string(j), lhs == rhs);
    }

  const auto w0 = from_element(fin, fin.longest_element(d0.nodes()));
  const NodeSet jset = range(1, n - 1);
  const auto wj = from_element(fin, fin.longest_element(jset));
  {
    auto v = range(n + 2, 2 * n);
    std::reverse(v.begin(), v.end());
    v.push_back(nb + 1);
    add("w0-string", "", w0 == SignedPermutation(n, v));
  }
  {
    auto v = range(1, n);
    std::reverse(v.begin(), v.end());
    add("wJ-string", "", wj == SignedPermutation(n, v));
  }

  for (int r = 0; r <= nb; r += 2) {
    const auto params = "r=" + std::to_string(r);
    const auto wr = w_r(n, r);
    auto prod = e;
    for (int i = r - 1; i >= 1; i -= 2)
      prod = prod * x_chain(n, i);
    add("factor-wr", params, wr == prod && fin.is_min_rep(to_element(fin, wr), jset));

    const auto dual = w0 * wr * wj;
    prod = e;
    for (int i = nb - 1; i >= r + 1; i -= 2)
      prod = prod * x_chain(n, i);
    add("factor-w0wrwJ", params, dual == prod);

    // w0 w_r w_J = [1..r, nb+1, n+2..2n-r] = (w_L)^J with L = {r+1..n}. At
    // r = nb the left side is the identity, so L is empty there (for odd n,
    // {n} would give s_n).
    const NodeSet l = r < nb ? range(r + 1, n) : NodeSet{};
    const auto lmin = from_element(fin, fin.min_rep(fin.longest_element(l), jset));
    const auto expected = r < n ? SignedPermutation(n, concat({range(1, r), {nb + 1}, range(n + 2, 2 * n - r)}))
                                : e;
    add("wlj-string", params, dual == expected);
    add("wlj-min-rep", params, dual == lmin);
  }
  return out;
}

IntersectionCheck intersectw(int n, int r)
{
  check_r(n, r);
  const int nb = nbar(n);
  const auto ctx = build_context('D', n, n);
  const auto& W = ctx.group;
  const auto wr = to_element(W, w_r(n, r));
  const auto v = v_of(ctx, wr);
  const auto iv_dual = iota_elem(ctx, v_of(ctx, to_element(W, w_r(n, nb - r))));
  IntersectionCheck out;
  out.target = iota_elem(ctx, to_element(W, w_r(n, nb - r)));
  out.min_rep = W.min_rep(wr * v, ctx.finite_nodes);
  out.product = wr * v * iv_dual.inverse();
  out.dual_in_w0 = is_subset(W.support(iv_dual), ctx.finite_nodes);
  return out;
}

FibreRank fibre_rank(int n, int r)
{
  check_r(n, r);
  const int nb = nbar(n);
  const auto ctx = build_context('D', n, n);
  const auto& W = ctx.group;
  const auto wr = to_element(W, w_r(n, r));
  auto require = [&](bool ok, const std::string& what) {
    if (!ok)
      throw InvariantViolation("D" + std::to_string(n) + ", r=" + std::to_string(r) + ": " + what);
  };

  FibreRank out;
  out.rank = nb - r;
  out.witness = w_r(n, nb - r);
  out.iota_witness = iota_elem(ctx, to_element(W, out.witness));
  out.v = v_of(ctx, wr);

  // X_J(w0 w_r w_J) is smooth: w0 w_r w_J = [1..r, nbar+1, n+2..2n-r] = (w_L)^J.
  auto wlj = range(1, r);
  if (r < n) {
    wlj.push_back(nb + 1);
    for (int k = n + 2; k <= 2 * n - r; ++k)
      wlj.push_back(k);
  }
  require(ctx.w0 * wr * ctx.wj == to_element(W, SignedPermutation(n, wlj)), "w0 w_r w_J string mismatch");
  const auto report = closure_is_schubert(ctx, wr);
  require(report.smooth.c6 && report.closure_is_schubert, "conormal closure is not a Schubert variety");
  const auto fibre = fibre_maximal(ctx, wr);
  out.fibre_max = fibre.maximal;
  require(fibre.maximal == std::vector<AffineWeylElement>{out.iota_witness},
          "fibre maximum is not iota(w_{nbar-r})");

  const auto ix = intersectw(n, r);
  require(ix.product == ix.target, "w_r v_r iota(v_{nbar-r})^{-1} != iota(w_{nbar-r})");
  require(ix.min_rep == ix.target, "(w_r v_r)^{D0} != iota(w_{nbar-r})");
  return out;
}

} // namespace schubert
