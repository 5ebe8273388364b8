#pragma once

// Type D_n Weyl group elements as signed permutations: w in S_{2n}
// commuting with mu(i) = 2n+1-i and having an even number of i <= n with
// w(i) > n, written by the string [w(1),...,w(n)]. Products compose
// functions, (ab)(i) = a(b(i)); s_i maps to r_i r_{2n-i} for i < n and s_n to
// r_n r_{n-1} r_{n+1} r_n, where r_k is the transposition (k k+1).
//
// The elements x_i are defined by x_{n-1} = s_n and x_i = s_{i+1} s_i x_{i+1};
// expanding the recursion gives the closed form
//   x_i = [1,...,i-1, i+2,...,n, 2n-i, 2n-i+1].

#include <string>
#include <vector>

#include "schubert/cominuscule.hpp"

namespace schubert {

class SignedPermutation
{
public:
  SignedPermutation() = default;
  // Throws std::invalid_argument if the values do not describe an element
  // of W(D_n).
  SignedPermutation(int n, std::vector<int> values);
  static SignedPermutation identity(int n);
  // "[3,4,7,8]"
  static SignedPermutation parse(const std::string& text);

  int n() const { return n_; }
  const std::vector<int>& values() const { return values_; }
  // w(i) for 1 <= i <= 2n.
  int operator()(int i) const;
  std::string str() const;

  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
  int n_ = 0;
  std::vector<int> values_;
};

int nbar(int n);

SignedPermutation word_to_perm(int n, const WeylWord& word);
// Reduced word by stripping right descents, smallest index first.
WeylWord perm_to_word(const SignedPermutation& p);
// Number of positive roots e_a - e_b, e_a + e_b (a < b) sent negative.
int inversion_length(const SignedPermutation& p);

// Conversions to the root-matrix model. The group may be W(D_n) or the
// affine W(D~_n); from_element requires an element of the finite part.
AffineWeylElement to_element(const WeylGroup& g, const SignedPermutation& p);
SignedPermutation from_element(const WeylGroup& g, const AffineWeylElement& w);

// [r+1,...,n, 2n-r+1,...,2n] for even 0 <= r <= nbar(n). Throws
// InvariantViolation unless it is in W^J and equals x_{r-1} x_{r-3} ... x_1.
SignedPermutation w_r(int n, int r);
WeylWord x_word(int n, int i);
SignedPermutation x_chain(int n, int i);
SignedPermutation x_closed_form(int n, int i);

struct RelationCheck
{
  std::string name;
  std::string params;
  bool pass = false;
};

// Braid relations of the embedding, rel1, rel2 and its chained form, the
// x_i closed form and lengths, the factorizations of w_r and w0 w_r w_J, and
// the string identity for w0 w_r w_J. Requires n >= 4.
std::vector<RelationCheck> check_relations(int n);

// Both sides of (w_r v_r)^{D0} = w_r v_r iota(v_{nbar-r})^{-1} = iota(w_{nbar-r}),
// computed in the affine group of the context (D, n, n).
struct IntersectionCheck
{
  AffineWeylElement min_rep;  // (w_r v_r)^{D0}
  AffineWeylElement product;  // w_r v_r iota(v_{nbar-r})^{-1}
  AffineWeylElement target;   // iota(w_{nbar-r})
  bool dual_in_w0 = false;    // iota(v_{nbar-r}) lies in W0

  bool holds() const { return dual_in_w0 && min_rep == target && product == target; }
};

IntersectionCheck intersectw(int n, int r);

struct FibreRank
{
  int rank = 0;
  SignedPermutation witness;       // w_{nbar - r}
  AffineWeylElement iota_witness;  // its image under iota, the fibre's maximum
  AffineWeylElement v;             // v_r
  std::vector<AffineWeylElement> fibre_max;
};

// Rank of the conormal fibre at 0 of the rank-<=r skew-symmetric
// determinantal variety, computed through the cominuscule context (D, n, n).
// Throws InvariantViolation if the fibre maximum is not iota(w_{nbar-r}) or
// if w_r v_r iota(v_{nbar-r})^{-1} != iota(w_{nbar-r}).
FibreRank fibre_rank(int n, int r);

} // namespace schubert
