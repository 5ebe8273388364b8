#include "schubert/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace schubert {

WeylWord parse_word(const std::string& text)
{
  WeylWord out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw std::invalid_argument("word letter '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

std::string format_word(const WeylWord& w)
{
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// AffineWeylElement

AffineWeylElement AffineWeylElement::identity(int n)
{
  AffineWeylElement e;
  e.n_ = n;
  e.data_.assign(2 * n * n + n, 0);
  for (int i = 0; i < n; ++i) {
    e.mat_ref(i, i) = 1;
    e.inv_ref(i, i) = 1;
  }
  return e;
}

AffineWeylElement AffineWeylElement::from_matrix(const std::vector<std::vector<int>>& m,
                                                 const std::vector<std::vector<int>>& minv)
{
  const auto n = static_cast<int>(m.size());
  auto e = identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      e.mat_ref(i, j) = m[i][j];
      e.inv_ref(i, j) = minv[i][j];
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k)
        s += m[i][k] * minv[k][j];
      if (s != (i == j ? 1 : 0))
        throw std::invalid_argument("from_matrix: matrices are not mutually inverse");
    }
  return e;
}

bool AffineWeylElement::is_translation_free() const
{
  for (int j = 0; j < n_; ++j)
    if (p(j) != 0)
      return false;
  return true;
}

AffineWeylElement AffineWeylElement::finite_part() const
{
  auto e = *this;
  for (int j = 0; j < n_; ++j)
    e.p_ref(j) = 0;
  return e;
}

AffineWeylElement AffineWeylElement::inverse() const
{
  AffineWeylElement e;
  e.n_ = n_;
  e.data_.assign(data_.size(), 0);
  const std::size_t nn = n_ * n_;
  std::copy(data_.begin() + nn, data_.begin() + 2 * nn, e.data_.begin());
  std::copy(data_.begin(), data_.begin() + nn, e.data_.begin() + nn);
  for (int j = 0; j < n_; ++j) {
    int s = 0;
    for (int i = 0; i < n_; ++i)
      s += e.mat(i, j) * p(i);
    e.p_ref(j) = -s;
  }
  return e;
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b)
{
  const int n = a.n_;
  if (b.n_ != n)
    throw std::invalid_argument("multiplying elements of different groups");
  AffineWeylElement c;
  c.n_ = n;
  c.data_.assign(a.data_.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int x = a.mat(i, k);
      const int y = b.inv(i, k);
      if (x != 0)
        for (int j = 0; j < n; ++j)
          c.mat_ref(i, j) += x * b.mat(k, j);
      if (y != 0)
        for (int j = 0; j < n; ++j)
          c.inv_ref(i, j) += y * a.inv(k, j);
    }
  for (int j = 0; j < n; ++j) {
    int s = b.p(j);
    for (int i = 0; i < n; ++i)
      s += b.mat(i, j) * a.p(i);
    c.p_ref(j) = s;
  }
  return c;
}

std::size_t AffineWeylElement::hash() const
{
  std::size_t h = static_cast<std::size_t>(n_);
  for (int x : data_)
    h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(DynkinDiagram d) : diagram_(std::move(d))
{
  const int n = diagram_.rank();
  const auto& c = diagram_.cartan_matrix();
  const int off = diagram_.affine() ? 1 : 0;

  if (diagram_.affine())
    for (int j = 1; j <= n; ++j)
      theta_.push_back(diagram_.marks()[j]);

  for (int node : diagram_.nodes()) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    auto g = AffineWeylElement::identity(n);
    if (node == 0) {
      // (s_theta, -theta^vee): s_theta(alpha_j) = alpha_j + C[0][j] theta.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m[i][j] = (i == j ? 1 : 0) + c[0][j + 1] * theta_[i];
      g = AffineWeylElement::from_matrix(m, m);
      for (int j = 0; j < n; ++j)
        g.p_ref(j) = c[0][j + 1];
    } else {
      const auto k = static_cast<std::size_t>(node - 1);
      for (int i = 0; i < n; ++i)
        m[i][i] = 1;
      for (int j = 0; j < n; ++j)
        m[k][j] -= c[k + off][j + off];
      g = AffineWeylElement::from_matrix(m, m);
    }
    gens_.push_back(std::move(g));
  }

  // Every generator must act on the simple roots as the Cartan reflection.
  for (int i : diagram_.nodes())
    for (int j : diagram_.nodes()) {
      const auto a = diagram_.simple_root(j);
      if (act(simple(i), a) != reflect(diagram_, i, a))
        throw InvariantViolation("generator s_" + std::to_string(i) + " of " + diagram_.name() +
                                 " disagrees with the Cartan reflection on alpha_" +
                                 std::to_string(j));
    }
}

AffineWeylElement WeylGroup::identity() const
{
  return AffineWeylElement::identity(rank());
}

const AffineWeylElement& WeylGroup::simple(int node) const
{
  return gens_[diagram_.position(node)];
}

AffineWeylElement WeylGroup::evaluate(const WeylWord& word) const
{
  auto w = identity();
  for (int s : word)
    w = w * simple(s);
  return w;
}

AffineWeylElement WeylGroup::parse(const std::string& text) const
{
  return evaluate(parse_word(text));
}

AffineWeylElement WeylGroup::translation(const CoweightVector& q) const
{
  if (!diagram_.affine())
    throw std::invalid_argument("translations live in affine Weyl groups only");
  const int n = rank();
  if (static_cast<int>(q.coords.size()) != n)
    throw std::invalid_argument("translation: coweight has wrong dimension");
  const auto& c = diagram_.cartan_matrix();
  auto t = identity();
  for (int j = 0; j < n; ++j) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      s += q.coords[i] * c[i + 1][j + 1];
    if (s.denominator() != 1)
      throw std::invalid_argument("translation: coweight does not pair integrally with alpha_" +
                                  std::to_string(j + 1));
    t.p_ref(j) = static_cast<int>(s.numerator());
  }
  return t;
}

CoweightVector WeylGroup::translation_part(const AffineWeylElement& w) const
{
  const int n = rank();
  const auto& c = diagram_.cartan_matrix();
  const int off = diagram_.affine() ? 1 : 0;
  RationalMatrix ct(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      ct[j][i] = c[i + off][j + off];
    rhs[i] = w.p(i);
  }
  auto x = solve(ct, rhs);
  if (!x)
    throw InvariantViolation("finite Cartan matrix is singular");
  return CoweightVector{*x};
}

RootVector WeylGroup::act(const AffineWeylElement& w, const RootVector& r) const
{
  const int n = rank();
  if (static_cast<int>(r.size()) != static_cast<int>(diagram_.size()))
    throw std::invalid_argument("act: root " + r.str() + " does not belong to " + diagram_.name());
  if (!diagram_.affine()) {
    auto out = RootVector::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out[i] += w.mat(i, j) * r[j];
    return out;
  }
  const int m = r[0];
  std::vector<int> f(n);
  for (int j = 0; j < n; ++j)
    f[j] = r[j + 1] - m * theta_[j];
  int m2 = m;
  for (int j = 0; j < n; ++j)
    m2 -= w.p(j) * f[j];
  auto out = RootVector::zero(n + 1);
  out[0] = m2;
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j)
      s += w.mat(i, j) * f[j];
    out[i + 1] = s + m2 * theta_[i];
  }
  return out;
}

bool WeylGroup::is_positive(const RootVector& r) const
{
  if (!diagram_.affine())
    return r.nonneg_nonzero();
  const int n = rank();
  const int m = r[0];
  if (m != 0)
    return m > 0;
  for (int j = 0; j < n; ++j)
    if (r[j + 1] != 0)
      return r[j + 1] > 0;
  return false;
}

bool WeylGroup::sends_simple_negative(const AffineWeylElement& w, int node) const
{
  const int n = rank();
  const auto pos = diagram_.position(node);
  if (!diagram_.affine()) {
    for (int i = 0; i < n; ++i)
      if (w.mat(i, pos) != 0)
        return w.mat(i, pos) < 0;
    throw InvariantViolation("Weyl matrix has a zero column");
  }
  if (node != 0) {
    const int m = -w.p(pos - 1);
    if (m != 0)
      return m < 0;
    for (int i = 0; i < n; ++i)
      if (w.mat(i, pos - 1) != 0)
        return w.mat(i, pos - 1) < 0;
    throw InvariantViolation("Weyl matrix has a zero column");
  }
  // alpha_0 = delta - theta
  int m = 1;
  for (int j = 0; j < n; ++j)
    m += w.p(j) * theta_[j];
  if (m != 0)
    return m < 0;
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j)
      s -= w.mat(i, j) * theta_[j];
    if (s != 0)
      return s < 0;
  }
  throw InvariantViolation("Weyl matrix kills theta");
}

AffineWeylElement WeylGroup::right_mul(const AffineWeylElement& w, int node) const
{
  return w * simple(node);
}

AffineWeylElement WeylGroup::left_mul(int node, const AffineWeylElement& w) const
{
  return simple(node) * w;
}

namespace {

// Smallest node with a right descent, or nullopt for the identity.
template <typename Pred>
std::optional<int> first_node(const NodeSet& nodes, Pred pred)
{
  for (int s : nodes)
    if (pred(s))
      return s;
  return std::nullopt;
}

} // namespace

int WeylGroup::length(const AffineWeylElement& w) const
{
  return static_cast<int>(reduced_word(w).size());
}

WeylWord WeylGroup::reduced_word(const AffineWeylElement& w) const
{
  WeylWord strips;
  auto x = w;
  while (auto s = first_node(nodes(), [&](int k) { return right_descent(x, k); })) {
    strips.push_back(*s);
    x = right_mul(x, *s);
  }
  if (x != identity())
    throw InvariantViolation("descent stripping did not reach the identity");
  std::reverse(strips.begin(), strips.end());
  return strips;
}

bool WeylGroup::bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& w) const
{
  // Lifting: for ws < w, u <= w iff (us < u ? us <= ws : u <= ws).
  auto a = u;
  auto b = w;
  while (true) {
    if (a == b)
      return true;
    auto s = first_node(nodes(), [&](int k) { return right_descent(b, k); });
    if (!s)
      return false;
    if (right_descent(a, *s))
      a = right_mul(a, *s);
    b = right_mul(b, *s);
  }
}

AffineWeylElement WeylGroup::demazure(const AffineWeylElement& u, const AffineWeylElement& w) const
{
  const auto word = reduced_word(u);
  auto x = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (!left_descent(x, *it))
      x = left_mul(*it, x);
  return x;
}

void WeylGroup::check_nodes(const NodeSet& j, const char* what) const
{
  for (int k : j)
    if (!diagram_.has_node(k))
      throw std::invalid_argument(std::string(what) + ": node " + std::to_string(k) +
                                  " is not in " + diagram_.name());
  if (!diagram_.finite_type(j))
    throw std::invalid_argument(std::string(what) + ": node set is not of finite type");
}

AffineWeylElement WeylGroup::min_rep(const AffineWeylElement& w, const NodeSet& j) const
{
  check_nodes(j, "min_rep");
  auto x = w;
  while (auto s = first_node(j, [&](int k) { return right_descent(x, k); }))
    x = right_mul(x, *s);
  return x;
}

bool WeylGroup::is_min_rep(const AffineWeylElement& w, const NodeSet& j) const
{
  return !first_node(j, [&](int k) { return right_descent(w, k); });
}

AffineWeylElement WeylGroup::longest_element(const NodeSet& j) const
{
  check_nodes(j, "longest_element");
  auto x = identity();
  while (auto s = first_node(j, [&](int k) { return !right_descent(x, k); }))
    x = right_mul(x, *s);
  return x;
}

NodeSet WeylGroup::support(const AffineWeylElement& w) const
{
  return make_node_set(reduced_word(w));
}

std::vector<AffineWeylElement>
WeylGroup::enumerate_min_reps(const NodeSet& l, const NodeSet& j,
                              const std::optional<AffineWeylElement>& bound) const
{
  check_nodes(l, "enumerate_min_reps");
  for (int k : j)
    if (!diagram_.has_node(k))
      throw std::invalid_argument("enumerate_min_reps: node " + std::to_string(k) +
                                  " is not in " + diagram_.name());

  // Every nontrivial y in W^J has a left descent s with sy in W^J, and the
  // bound is closed downward, so growing by left multiplication reaches all.
  std::unordered_set<AffineWeylElement, ElementHash> seen{identity()};
  std::deque<AffineWeylElement> queue{identity()};
  std::vector<AffineWeylElement> out{identity()};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    const auto xinv = x.inverse();
    for (int s : l) {
      if (sends_simple_negative(xinv, s))
        continue;
      auto y = left_mul(s, x);
      if (seen.count(y) || !is_min_rep(y, j))
        continue;
      if (bound && !bruhat_leq(y, *bound))
        continue;
      seen.insert(y);
      queue.push_back(y);
      out.push_back(std::move(y));
    }
  }
  std::vector<std::pair<WeylWord, AffineWeylElement>> keyed;
  keyed.reserve(out.size());
  for (auto& y : out)
    keyed.emplace_back(reduced_word(y), std::move(y));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  out.clear();
  for (auto& [word, y] : keyed)
    out.push_back(std::move(y));
  return out;
}

std::vector<RootVector> WeylGroup::inversions(const AffineWeylElement& w, const NodeSet& l) const
{
  std::vector<RootVector> out;
  for (const auto& a : positive_roots(diagram_, l))
    if (!is_positive(act(w, a)))
      out.push_back(a);
  return out;
}

} // namespace schubert
