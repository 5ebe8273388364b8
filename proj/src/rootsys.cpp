#include "schubert/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schubert {

// ---------------------------------------------------------------------------
// Node sets

NodeSet make_node_set(std::vector<int> nodes)
{
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b)
{
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b)
{
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b)
{
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const NodeSet& a, const NodeSet& b)
{
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// RootVector

bool RootVector::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool RootVector::nonneg_nonzero() const
{
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool RootVector::nonpos_nonzero() const
{
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c <= 0; });
}

int RootVector::height() const
{
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
}

RootVector RootVector::operator-() const
{
  RootVector r(*this);
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

RootVector& RootVector::operator+=(const RootVector& o)
{
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o)
{
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RootVector operator*(int k, RootVector a)
{
  for (auto& c : a.coeffs_)
    c *= k;
  return a;
}

std::string RootVector::str() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

bool root_leq(const RootVector& a, const RootVector& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Finite Cartan matrices

namespace {

using IntMatrix = std::vector<std::vector<int>>;

void bond(IntMatrix& c, int i, int j)
{
  c[i - 1][j - 1] = -1;
  c[j - 1][i - 1] = -1;
}

IntMatrix finite_cartan(char series, int n)
{
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid Dynkin type " + std::string(1, series) + std::to_string(n) +
                                ": " + why);
  };
  switch (series) {
  case 'A':
    if (n < 1)
      fail("A_n requires n >= 1");
    break;
  case 'B':
  case 'C':
    if (n < 2)
      fail(std::string(1, series) + "_n requires n >= 2");
    break;
  case 'D':
    if (n < 4)
      fail("D_n requires n >= 4");
    break;
  case 'E':
    if (n < 6 || n > 8)
      fail("E_n requires n in {6,7,8}");
    break;
  case 'F':
    if (n != 4)
      fail("F_n requires n = 4");
    break;
  case 'G':
    if (n != 2)
      fail("G_n requires n = 2");
    break;
  default:
    throw std::invalid_argument(std::string("unknown series '") + series + "' (expected A-G)");
  }

  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    c[i][i] = 2;

  switch (series) {
  case 'A':
    for (int i = 1; i < n; ++i)
      bond(c, i, i + 1);
    break;
  case 'B': // alpha_n short
    for (int i = 1; i < n; ++i)
      bond(c, i, i + 1);
    c[n - 1][n - 2] = -2;
    break;
  case 'C': // alpha_n long
    for (int i = 1; i < n; ++i)
      bond(c, i, i + 1);
    c[n - 2][n - 1] = -2;
    break;
  case 'D':
    for (int i = 1; i < n - 1; ++i)
      bond(c, i, i + 1);
    bond(c, n - 2, n);
    break;
  case 'E':
    bond(c, 1, 3);
    bond(c, 2, 4);
    for (int i = 3; i < n; ++i)
      bond(c, i, i + 1);
    break;
  case 'F': // alpha_1, alpha_2 long
    bond(c, 1, 2);
    bond(c, 2, 3);
    bond(c, 3, 4);
    c[2][1] = -2;
    break;
  case 'G': // alpha_1 short
    c[0][1] = -3;
    c[1][0] = -1;
    break;
  }
  return c;
}

RationalMatrix to_rational(const IntMatrix& m)
{
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int x : m[i])
      r[i].emplace_back(x);
  return r;
}

std::vector<int> compute_symmetrizer(const IntMatrix& c)
{
  const std::size_t n = c.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    d[start] = 1;
    seen[start] = true;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0 || seen[j])
          continue;
        d[j] = d[i] * Rational(c[i][j], c[j][i]);
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  long long lcm = 1;
  for (const auto& x : d)
    lcm = std::lcm(lcm, x.denominator());
  std::vector<long long> scaled;
  long long g = 0;
  for (const auto& x : d) {
    scaled.push_back(x.numerator() * (lcm / x.denominator()));
    g = std::gcd(g, scaled.back());
  }
  std::vector<int> out;
  for (auto x : scaled)
    out.push_back(static_cast<int>(x / g));
  return out;
}

// Positive roots of a finite Cartan matrix restricted to `active` positions,
// by closing the simple roots under simple reflections that stay positive.
std::vector<RootVector> closure_roots(const IntMatrix& c, const std::vector<std::size_t>& active)
{
  const std::size_t size = c.size();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (auto p : active) {
    auto r = RootVector::zero(size);
    r[p] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const auto beta = queue.front();
    queue.pop_front();
    for (auto i : active) {
      int pair = 0;
      for (std::size_t j = 0; j < size; ++j)
        pair += c[i][j] * beta[j];
      if (pair == 0)
        continue;
      auto image = beta;
      image[i] -= pair;
      if (!image.nonneg_nonzero())
        continue;
      if (seen.insert(image).second)
        queue.push_back(image);
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height())
      return a.height() < b.height();
    return a < b;
  });
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// DynkinDiagram

DynkinDiagram DynkinDiagram::build(char series, int rank, bool affine)
{
  DynkinDiagram d;
  d.series_ = series;
  d.rank_ = rank;
  d.affine_ = affine;
  const IntMatrix fin = finite_cartan(series, rank);
  {
    std::vector<std::size_t> all(rank);
    std::iota(all.begin(), all.end(), std::size_t{0});
    d.finite_positive_ = closure_roots(fin, all);
    std::sort(d.finite_positive_.begin(), d.finite_positive_.end());
  }

  if (!affine) {
    d.cartan_ = fin;
    for (int i = 1; i <= rank; ++i)
      d.nodes_.push_back(i);
  } else {
    std::vector<std::size_t> all(rank);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const auto roots = closure_roots(fin, all);
    const RootVector theta = roots.back();

    // alpha_0 = delta - theta: C[0][j] = -<alpha_j, theta^vee>,
    // C[j][0] = -<theta, alpha_j^vee>.
    const auto sym = compute_symmetrizer(fin);
    Rational theta_norm = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        theta_norm += Rational(theta[i] * theta[j] * sym[i] * fin[i][j]);
    std::vector<Rational> theta_coroot(rank);
    for (int i = 0; i < rank; ++i)
      theta_coroot[i] = Rational(2 * theta[i] * sym[i]) / theta_norm;

    d.cartan_.assign(rank + 1, std::vector<int>(rank + 1, 0));
    d.cartan_[0][0] = 2;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        d.cartan_[i + 1][j + 1] = fin[i][j];
    for (int j = 0; j < rank; ++j) {
      Rational pair = 0;
      for (int i = 0; i < rank; ++i)
        pair += theta_coroot[i] * fin[i][j];
      if (pair.denominator() != 1)
        throw std::logic_error("non-integral <alpha_j, theta^vee>");
      d.cartan_[0][j + 1] = -static_cast<int>(pair.numerator());
      int back = 0;
      for (int k = 0; k < rank; ++k)
        back += fin[j][k] * theta[k];
      d.cartan_[j + 1][0] = -back;
    }
    for (int i = 0; i <= rank; ++i)
      d.nodes_.push_back(i);

    // delta spans the kernel of C.
    const auto ker = kernel(to_rational(d.cartan_));
    if (ker.size() != 1)
      throw std::logic_error("affine Cartan matrix must have corank 1");
    long long lcm = 1;
    for (const auto& x : ker[0])
      lcm = std::lcm(lcm, x.denominator());
    long long g = 0;
    std::vector<long long> v;
    for (const auto& x : ker[0]) {
      v.push_back(x.numerator() * (lcm / x.denominator()));
      g = std::gcd(g, v.back());
    }
    if (v[0] < 0)
      g = -g;
    for (auto x : v)
      d.marks_.push_back(static_cast<int>(x / g));
  }
  d.symmetrizer_ = compute_symmetrizer(d.cartan_);
  d.validate();
  return d;
}

void DynkinDiagram::validate() const
{
  const std::size_t n = cartan_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2)
      throw std::logic_error("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (cartan_[i][j] > 0)
        throw std::logic_error("Cartan off-diagonal entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw std::logic_error("Cartan zero pattern must be symmetric");
      if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
        throw std::logic_error("symmetrizer does not symmetrize");
    }
  }
  if (!affine_) {
    const auto r = to_rational(cartan_);
    for (std::size_t k = 1; k <= n; ++k) {
      RationalMatrix minor(k);
      for (std::size_t i = 0; i < k; ++i)
        minor[i].assign(r[i].begin(), r[i].begin() + static_cast<long>(k));
      if (determinant(minor) <= Rational(0))
        throw std::logic_error("finite Cartan matrix must have positive leading minors");
    }
  } else {
    if (marks_.size() != n || marks_[0] != 1)
      throw std::logic_error("mark of alpha_0 must be 1");
    for (std::size_t i = 0; i < n; ++i) {
      if (marks_[i] <= 0)
        throw std::logic_error("marks must be positive");
      int s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += cartan_[i][j] * marks_[j];
      if (s != 0)
        throw std::logic_error("C * marks must vanish");
    }
  }
}

std::string DynkinDiagram::name() const
{
  return std::string(1, series_) + (affine_ ? "~" : "") + std::to_string(rank_);
}

NodeSet DynkinDiagram::finite_nodes() const
{
  NodeSet out;
  for (int i = 1; i <= rank_; ++i)
    out.push_back(i);
  return out;
}

bool DynkinDiagram::has_node(int node) const
{
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::size_t DynkinDiagram::position(int node) const
{
  if (!has_node(node))
    throw std::invalid_argument("node " + std::to_string(node) + " is not in " + name());
  return static_cast<std::size_t>(affine_ ? node : node - 1);
}

RootVector DynkinDiagram::delta() const
{
  if (!affine_)
    throw std::invalid_argument("delta is only defined for affine diagrams");
  return RootVector(marks_);
}

RootVector DynkinDiagram::simple_root(int node) const
{
  auto r = RootVector::zero(size());
  r[position(node)] = 1;
  return r;
}

NodeSet DynkinDiagram::support(const RootVector& r) const
{
  NodeSet out;
  for (std::size_t p = 0; p < r.size(); ++p)
    if (r[p] != 0)
      out.push_back(nodes_[p]);
  return out;
}

bool DynkinDiagram::connected(const NodeSet& nodes) const
{
  if (nodes.empty())
    return false;
  std::set<int> reached{nodes.front()};
  std::deque<int> queue{nodes.front()};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j : nodes)
      if (j != i && cartan(i, j) != 0 && reached.insert(j).second)
        queue.push_back(j);
  }
  return reached.size() == nodes.size();
}

bool DynkinDiagram::finite_type(const NodeSet& nodes) const
{
  for (int n : nodes)
    position(n);
  return !(affine_ && nodes.size() == nodes_.size());
}

DynkinDiagram DynkinDiagram::finite_part() const
{
  return build(series_, rank_, false);
}

RootVector DynkinDiagram::from_finite(const RootVector& r) const
{
  if (!affine_)
    return r;
  std::vector<int> c{0};
  c.insert(c.end(), r.coeffs().begin(), r.coeffs().end());
  return RootVector(std::move(c));
}

RootVector DynkinDiagram::to_finite(const RootVector& r) const
{
  if (!affine_)
    return r;
  if (r[0] != 0)
    throw std::invalid_argument("root " + r.str() + " involves alpha_0");
  return RootVector(std::vector<int>(r.coeffs().begin() + 1, r.coeffs().end()));
}

// ---------------------------------------------------------------------------
// Roots

std::vector<RootVector> positive_roots(const DynkinDiagram& d)
{
  return positive_roots(d, d.nodes());
}

std::vector<RootVector> positive_roots(const DynkinDiagram& d, const NodeSet& nodes)
{
  if (!d.finite_type(nodes))
    throw std::invalid_argument("positive_roots: node set of " + d.name() +
                                " is not of finite type (affine root systems are infinite)");
  std::vector<std::size_t> active;
  for (int n : nodes)
    active.push_back(d.position(n));
  return closure_roots(d.cartan_matrix(), active);
}

RootVector highest_root(const DynkinDiagram& d)
{
  return highest_root(d, d.nodes());
}

RootVector highest_root(const DynkinDiagram& d, const NodeSet& nodes)
{
  if (!d.connected(nodes))
    throw std::invalid_argument("highest_root: node set is not connected");
  const auto roots = positive_roots(d, nodes);
  std::vector<RootVector> maximal;
  for (const auto& a : roots) {
    bool dominated = false;
    for (const auto& b : roots)
      if (a != b && root_leq(a, b)) {
        dominated = true;
        break;
      }
    if (!dominated)
      maximal.push_back(a);
  }
  if (maximal.size() != 1)
    throw std::logic_error("highest_root: no unique maximal root");
  return maximal.front();
}

Rational inner_form(const DynkinDiagram& d, const RootVector& a, const RootVector& b)
{
  const auto& c = d.cartan_matrix();
  const auto& sym = d.symmetrizer();
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      s += static_cast<long long>(a[i]) * b[j] * sym[i] * c[i][j];
  }
  return Rational(s);
}

RootVector reflect(const DynkinDiagram& d, int node, const RootVector& r)
{
  const auto i = d.position(node);
  const auto& row = d.cartan_matrix()[i];
  int pair = 0;
  for (std::size_t j = 0; j < r.size(); ++j)
    pair += row[j] * r[j];
  auto out = r;
  out[i] -= pair;
  return out;
}

namespace {

bool in_finite_roots(const DynkinDiagram& d, const RootVector& r)
{
  const auto& roots = d.finite_positive_roots();
  return std::binary_search(roots.begin(), roots.end(), r.nonneg_nonzero() ? r : -r);
}

RootVector finite_component(const DynkinDiagram& d, const RootVector& r, int& delta_coeff)
{
  delta_coeff = r[0];
  std::vector<int> f(d.rank());
  for (int j = 1; j <= d.rank(); ++j)
    f[j - 1] = r[j] - delta_coeff * d.marks()[j];
  return RootVector(std::move(f));
}

} // namespace

bool is_real_root(const DynkinDiagram& d, const RootVector& r)
{
  if (r.is_zero())
    return false;
  if (!d.affine())
    return in_finite_roots(d, r);
  int m = 0;
  const auto f = finite_component(d, r, m);
  return !f.is_zero() && in_finite_roots(d, f);
}

bool is_root(const DynkinDiagram& d, const RootVector& r)
{
  if (is_real_root(d, r))
    return true;
  if (!d.affine() || r.is_zero())
    return false;
  int m = 0;
  return finite_component(d, r, m).is_zero() && m != 0;
}

NodeSet cominuscule_nodes(const DynkinDiagram& finite)
{
  const auto theta = highest_root(finite.finite_part());
  NodeSet out;
  for (int i = 1; i <= finite.rank(); ++i)
    if (theta[static_cast<std::size_t>(i - 1)] == 1)
      out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Coweights

Rational pairing(const DynkinDiagram& d, const RootVector& r, const CoweightVector& lambda)
{
  const auto& c = d.cartan_matrix();
  Rational s = 0;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) {
    if (lambda.coords[i] == Rational(0))
      continue;
    long long row = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
      row += static_cast<long long>(c[i][j]) * r[j];
    s += lambda.coords[i] * row;
  }
  return s;
}

CoweightVector fundamental_coweight(const DynkinDiagram& finite, int node)
{
  if (finite.affine())
    throw std::invalid_argument("fundamental_coweight expects a finite diagram");
  const auto n = finite.size();
  const auto& c = finite.cartan_matrix();
  // <alpha_j, sum_i x_i alpha_i^vee> = (C^T x)_j = [j == node]
  RationalMatrix ct(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ct[j][i] = c[i][j];
  std::vector<Rational> rhs(n, Rational(0));
  rhs[finite.position(node)] = 1;
  auto x = solve(ct, rhs);
  if (!x)
    throw std::logic_error("finite Cartan matrix is singular");
  return CoweightVector{*x};
}

CoweightVector coroot(const DynkinDiagram& d, const RootVector& alpha)
{
  const Rational norm = inner_form(d, alpha, alpha);
  if (norm <= Rational(0))
    throw std::invalid_argument("coroot: " + alpha.str() + " is not a real root");
  CoweightVector out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    out.coords.push_back(Rational(2 * alpha[i] * d.symmetrizer()[i]) / norm);
  return out;
}

bool is_integral(const CoweightVector& c)
{
  return std::all_of(c.coords.begin(), c.coords.end(),
                     [](const Rational& x) { return x.denominator() == 1; });
}

} // namespace schubert
