#pragma once
//
// Integral Chevalley basis {X_gamma} ∪ {H_i} for the Lie algebra of a root
// datum, with structure constants N_{gamma,delta} of magnitude p+1 (p the
// chain-down length) and signs fixed by a deterministic search: free sign
// classes (one per zero-sum root triple up to negation) are enumerated in a
// fixed order and the first assignment satisfying the Jacobi identity on all
// basis triples is taken.  The resulting convention is canonical for this
// artifact; every downstream acceptance number is sign-independent.

#include <memory>
#include <vector>

#include "hwb/root_datum.hpp"

namespace hwb {

struct ChevalleyBasis {
  std::shared_ptr<const RootDatum> datum;
  int dim = 0; // num_roots + rank; basis order: X_0..X_{nr-1}, H_0..H_{r-1}

  // N[i][j] for root indices with root_i + root_j a root; 0 otherwise.
  std::vector<std::vector<long long>> N;

  // Dense bracket table of basis elements.
  std::vector<std::vector<std::vector<long long>>> table;

  static ChevalleyBasis build(std::shared_ptr<const RootDatum> datum);

  int num_roots() const { return datum->num_roots(); }
  std::vector<long long> bracket(const std::vector<long long>& a,
                                 const std::vector<long long>& b) const;

  // ad(X_root)^n / n! for n = 0..max_n as integer dim x dim matrices
  // (row-major action on column vectors); throws if the division is inexact.
  std::vector<std::vector<std::vector<long long>>> divided_powers(int root_idx,
                                                                  int max_n) const;

  bool verify_jacobi() const; // over all basis triples
};

} // namespace hwb
