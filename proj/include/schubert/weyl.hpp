#pragma once

// Finite and affine Weyl groups.
//
// An element u.tau_q is stored as the integer matrix of u on the finite simple
// roots (with its inverse, to make inverses and left descents cheap) and the
// pairing vector p_j = <alpha_j, q>. The coroot coordinates of q are never
// needed for arithmetic; translation_part() recovers them on demand.
//
// With x = f + m*delta (f in the finite root lattice):
//   (u, p)(x)            = u(f) + (m - p.f) delta
//   (u, p) * (u', p')    = (u u', M_{u'}^T p + p')
//   (u, p)^{-1}          = (u^{-1}, -M_{u^{-1}}^T p)
// The generator s_0 is (s_theta, -theta^vee); WeylGroup's constructor checks
// that this reproduces the Cartan reflection on every simple root.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

// Thrown when an identity that holds by construction fails.
class InvariantViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

using WeylWord = std::vector<int>;

// "2 1 3 2" <-> {2,1,3,2}; the empty string is the identity.
WeylWord parse_word(const std::string& text);
std::string format_word(const WeylWord& w);

class AffineWeylElement
{
public:
  AffineWeylElement() = default;
  static AffineWeylElement identity(int n);
  // Pure finite element from its matrix and inverse.
  static AffineWeylElement from_matrix(const std::vector<std::vector<int>>& m,
                                       const std::vector<std::vector<int>>& minv);

  int rank() const { return n_; }
  // Coefficient of alpha_i in u(alpha_j), 0-based finite positions.
  int mat(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  int inv(std::size_t i, std::size_t j) const { return data_[n_ * n_ + i * n_ + j]; }
  int p(std::size_t j) const { return data_[2 * n_ * n_ + j]; }
  bool is_translation_free() const;

  AffineWeylElement finite_part() const;
  AffineWeylElement inverse() const;
  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement&, const AffineWeylElement&) = default;

  std::size_t hash() const;

private:
  friend class WeylGroup;
  int& mat_ref(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  int& inv_ref(std::size_t i, std::size_t j) { return data_[n_ * n_ + i * n_ + j]; }
  int& p_ref(std::size_t j) { return data_[2 * n_ * n_ + j]; }

  int n_ = 0;
  std::vector<int> data_;
};

struct ElementHash
{
  std::size_t operator()(const AffineWeylElement& w) const { return w.hash(); }
};

class WeylGroup
{
public:
  explicit WeylGroup(DynkinDiagram d);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  const NodeSet& nodes() const { return diagram_.nodes(); }

  AffineWeylElement identity() const;
  const AffineWeylElement& simple(int node) const;
  AffineWeylElement evaluate(const WeylWord& word) const;
  // Translation tau_q for q in the coroot basis of the finite part; q must
  // pair integrally with every finite simple root.
  AffineWeylElement translation(const CoweightVector& q) const;
  // q with w = u.tau_q, recovered by solving C^T q = p.
  CoweightVector translation_part(const AffineWeylElement& w) const;

  RootVector act(const AffineWeylElement& w, const RootVector& r) const;
  // Real root positivity: alpha + n delta > 0 iff n > 0, or n = 0 and
  // alpha in Phi_0^+. For finite diagrams this is the usual sign test.
  bool is_positive(const RootVector& r) const;
  // Sign of w(alpha_node) without building the vector.
  bool sends_simple_negative(const AffineWeylElement& w, int node) const;

  bool right_descent(const AffineWeylElement& w, int node) const
  {
    return sends_simple_negative(w, node);
  }
  bool left_descent(const AffineWeylElement& w, int node) const
  {
    return sends_simple_negative(w.inverse(), node);
  }

  AffineWeylElement right_mul(const AffineWeylElement& w, int node) const;
  AffineWeylElement left_mul(int node, const AffineWeylElement& w) const;

  int length(const AffineWeylElement& w) const;
  // Reduced word built by stripping right descents, smallest node first.
  WeylWord reduced_word(const AffineWeylElement& w) const;
  std::string format(const AffineWeylElement& w) const { return format_word(reduced_word(w)); }
  AffineWeylElement parse(const std::string& text) const;

  bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& w) const;
  AffineWeylElement demazure(const AffineWeylElement& u, const AffineWeylElement& w) const;

  // J must be of finite type (a proper subset when the diagram is affine).
  AffineWeylElement min_rep(const AffineWeylElement& w, const NodeSet& j) const;
  bool is_min_rep(const AffineWeylElement& w, const NodeSet& j) const;
  AffineWeylElement longest_element(const NodeSet& j) const;
  NodeSet support(const AffineWeylElement& w) const;

  // W_L intersected with W^J, optionally restricted to elements <= bound.
  // Sorted by length, then by reduced word.
  std::vector<AffineWeylElement>
  enumerate_min_reps(const NodeSet& l, const NodeSet& j,
                     const std::optional<AffineWeylElement>& bound = std::nullopt) const;

  // {alpha in Phi^+_L : w(alpha) < 0} for finite-type L.
  std::vector<RootVector> inversions(const AffineWeylElement& w, const NodeSet& l) const;

private:
  void check_nodes(const NodeSet& j, const char* what) const;

  DynkinDiagram diagram_;
  std::vector<int> theta_; // finite coordinates, empty for finite diagrams
  std::vector<AffineWeylElement> gens_; // indexed by position
};

} // namespace schubert

template <>
struct std::hash<schubert::AffineWeylElement>
{
  std::size_t operator()(const schubert::AffineWeylElement& w) const { return w.hash(); }
};
