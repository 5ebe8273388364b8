#pragma once

// Dynkin diagrams, root enumeration and the invariant form.
//
// Node labels follow the Bourbaki conventions: finite nodes are 1..n, the
// affine node is 0, D_n forks at n-2 with tips n-1 and n, and E_n carries
// the chain 1-3-4-5-... with node 2 attached to 4. Extended diagrams are
// derived from the finite one through the highest root, so every affine
// Cartan matrix here is the one with alpha_0 = delta - theta.
//
// A RootVector stores integer coefficients over the diagram's nodes in
// position order. For affine diagrams position == node label; for finite
// diagrams position == label - 1. Callers should go through
// DynkinDiagram::position() rather than assume either.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

using NodeSet = std::vector<int>; // sorted, duplicate-free node labels

NodeSet make_node_set(std::vector<int> nodes);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
bool is_subset(const NodeSet& a, const NodeSet& b);

class RootVector
{
public:
  RootVector() = default;
  explicit RootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static RootVector zero(std::size_t size) { return RootVector(std::vector<int>(size, 0)); }

  std::size_t size() const { return coeffs_.size(); }
  int operator[](std::size_t pos) const { return coeffs_[pos]; }
  int& operator[](std::size_t pos) { return coeffs_[pos]; }
  const std::vector<int>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // All coefficients >= 0 and not all zero.
  bool nonneg_nonzero() const;
  bool nonpos_nonzero() const;
  int height() const;

  RootVector operator-() const;
  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(int k, RootVector a);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string str() const;

private:
  std::vector<int> coeffs_;
};

// Componentwise order a <= b.
bool root_leq(const RootVector& a, const RootVector& b);

class DynkinDiagram
{
public:
  // Series A (n>=1), B (n>=2), C (n>=2), D (n>=4), E (n in 6,7,8),
  // F (n=4), G (n=2). Throws std::invalid_argument naming the violated
  // constraint.
  static DynkinDiagram build(char series, int rank, bool affine);

  char series() const { return series_; }
  int rank() const { return rank_; }
  bool affine() const { return affine_; }
  std::string name() const;

  std::size_t size() const { return nodes_.size(); }
  const NodeSet& nodes() const { return nodes_; }
  NodeSet finite_nodes() const; // 1..n
  bool has_node(int node) const;
  std::size_t position(int node) const;
  int node_at(std::size_t pos) const { return nodes_[pos]; }

  // C[i][j] = <alpha_j, alpha_i^vee>, indexed by node label.
  int cartan(int i, int j) const { return cartan_[position(i)][position(j)]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  // delta in the simple-root basis (affine only; empty otherwise).
  const std::vector<int>& marks() const { return marks_; }
  RootVector delta() const;
  // Minimal positive integers d with d_i C[i][j] symmetric.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  RootVector simple_root(int node) const;
  NodeSet support(const RootVector& r) const;
  int coefficient(const RootVector& r, int node) const { return r[position(node)]; }

  bool connected(const NodeSet& nodes) const;
  // Every proper subset of an affine diagram is of finite type; so is every
  // subset of a finite one.
  bool finite_type(const NodeSet& nodes) const;

  // Finite diagram D_0 underlying an affine diagram (or a copy of *this).
  DynkinDiagram finite_part() const;

  // Embeds a root of the finite part (positions 1..n) into this diagram's
  // coordinates, and back. Identity on finite diagrams.
  RootVector from_finite(const RootVector& r) const;
  RootVector to_finite(const RootVector& r) const;

  // Phi^+_0 in finite coordinates, sorted; computed once at build time.
  const std::vector<RootVector>& finite_positive_roots() const { return finite_positive_; }

private:
  DynkinDiagram() = default;
  void validate() const;

  char series_ = 'A';
  int rank_ = 0;
  bool affine_ = false;
  NodeSet nodes_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> marks_;
  std::vector<int> symmetrizer_;
  std::vector<RootVector> finite_positive_; // lexicographic order
};

// Phi^+ of the sub-diagram spanned by `nodes` (the whole diagram by
// default), in the ambient coordinates. Sorted by height, then
// lexicographically. Rejects node sets that are not of finite type.
std::vector<RootVector> positive_roots(const DynkinDiagram& d);
std::vector<RootVector> positive_roots(const DynkinDiagram& d, const NodeSet& nodes);

// Unique maximal positive root of a connected finite-type node set.
RootVector highest_root(const DynkinDiagram& d);
RootVector highest_root(const DynkinDiagram& d, const NodeSet& nodes);

// (a|b) with (alpha_i|alpha_j) = d_i C[i][j].
Rational inner_form(const DynkinDiagram& d, const RootVector& a, const RootVector& b);

// Simple reflection s_i(r) = r - <r, alpha_i^vee> alpha_i.
RootVector reflect(const DynkinDiagram& d, int node, const RootVector& r);

// Root test in the diagram's lattice. For affine diagrams this decomposes
// r = alpha + m*delta with alpha in the finite lattice; r is a real root iff
// alpha is in Phi_0, and an imaginary root iff alpha = 0 and m != 0.
bool is_real_root(const DynkinDiagram& d, const RootVector& r);
bool is_root(const DynkinDiagram& d, const RootVector& r);

// Nodes d of a finite diagram whose coefficient in the highest root is 1.
NodeSet cominuscule_nodes(const DynkinDiagram& finite);

// Coweights in the coroot basis {alpha_i^vee}, indexed by position.
struct CoweightVector
{
  std::vector<Rational> coords;
  friend bool operator==(const CoweightVector&, const CoweightVector&) = default;
};

// <r, lambda> = sum_i c_i C[i][j] r_j.
Rational pairing(const DynkinDiagram& d, const RootVector& r, const CoweightVector& lambda);
CoweightVector fundamental_coweight(const DynkinDiagram& finite, int node);
// Coroot of a root, alpha^vee = 2 alpha / (alpha|alpha), in the coroot basis.
CoweightVector coroot(const DynkinDiagram& d, const RootVector& alpha);
bool is_integral(const CoweightVector& c);

} // namespace schubert
