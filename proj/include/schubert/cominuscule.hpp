#pragma once

// A finite diagram D0 with a cominuscule node d, its affine extension D, and
// the data attached to the pair: the diagram involution iota (swapping 0 and
// d, acting as -w_J on J = D0 \ {d}), the coweight q = w0(varpi_d) - varpi_d
// and the translation tau_q.

#include <string>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

struct CominusculeContext
{
  CominusculeContext(DynkinDiagram finite, WeylGroup affine_group)
      : d0(std::move(finite)), group(std::move(affine_group))
  {
  }

  DynkinDiagram d0;
  WeylGroup group; // affine Weyl group of the extension
  int d = 0;
  NodeSet finite_nodes; // D0 = {1..n}
  NodeSet j;            // D0 \ {d}
  NodeSet dd;           // D \ {d}
  std::vector<int> iota; // iota[node] for node in 0..n
  AffineWeylElement w0, wj, wd;
  RootVector theta0, thetad; // affine coordinates
  CoweightVector q;
  AffineWeylElement tauq;

  const DynkinDiagram& diagram() const { return group.diagram(); }
  std::string name() const;
};

// Throws std::invalid_argument for invalid types or non-cominuscule d (the
// message carries the coefficient of alpha_d in delta), and
// InvariantViolation if any of the identities checked during construction
// fails.
CominusculeContext build_context(char series, int rank, int d);

// Relabels a reduced word of w through iota.
AffineWeylElement iota_elem(const CominusculeContext& ctx, const AffineWeylElement& w);
// iota applied to a vector of the affine root lattice.
RootVector iota_root(const CominusculeContext& ctx, const RootVector& r);

// tau_q, computed as a translation and as w0^J w_d^J; throws
// InvariantViolation if they differ.
AffineWeylElement tau_q(const CominusculeContext& ctx);

struct CominusculePair
{
  char series;
  int rank;
  int d;
  std::string name() const;
};

// Every cominuscule pair of rank <= max_rank: all nodes of A_n, node 1 of
// B_n, node n of C_n, nodes 1, n-1, n of D_n, nodes 1 and 6 of E6, and node
// 7 of E7 when include_e7 is set.
std::vector<CominusculePair> cominuscule_pairs(int max_rank, bool include_e7);

} // namespace schubert
