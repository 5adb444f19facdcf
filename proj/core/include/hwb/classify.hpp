#pragma once
//
// Finite-field orbit classification of the fixed weight space attached to a
// central character: enumerate the F_{3^k}-points of the fixed support,
// partition them into orbits of the centralizer group (root groups of the
// centralizer subsystem plus the torus), and group orbits by geometric
// signatures (stabilizer dimension in the centralizer Lie algebra, minimal
// support pattern over the orbit, Springer-fiber point count of the orbit
// representative).  Signature classes stand in for geometric orbits; their
// count must be stable from k to k+1.

#include <memory>

#include "hwb/char_arith.hpp"
#include "hwb/exotic.hpp"

namespace hwb {

struct Signature {
  int sdim = 0;
  std::vector<int> support; // canonical minimal support (sorted V-coords)
  long long fiber = -1;     // -1 when the representative is not in V^-

  friend bool operator<(const Signature& a, const Signature& b) {
    if (a.sdim != b.sdim) return a.sdim < b.sdim;
    if (a.support != b.support) return a.support < b.support;
    return a.fiber < b.fiber;
  }
  friend bool operator==(const Signature& a, const Signature& b) = default;
};

struct SignatureClass {
  Signature sig;
  std::vector<int> rep;    // V-coordinates of the smallest representative
  std::string rep_render;
  long long points = 0;    // F_q-points in the class
  int orbit_count = 0;     // F_q-orbits merged into the class
};

struct ClassifyResult {
  int k = 1;
  std::vector<int> fixed_coords;       // V-coordinates of the fixed space
  std::vector<int> centralizer_roots;  // root indices
  std::vector<SignatureClass> classes;
  std::vector<int> point_class;        // class index per enumerated point id
  bool stability_checked = false;
  bool stable = false;

  long long encode_point(const std::vector<int>& x, int q) const;
};

ClassifyResult fixed_space_classify(std::shared_ptr<const ChevalleyBasis> cb,
                                    const CentralCharacter& a, int k,
                                    bool check_stability);

// Signature of a single point relative to a centralizer subsystem, computed
// over the geometry's own field (no orbit minimization).
Signature point_signature(const G2Geometry& geo, const std::vector<int>& centralizer_roots,
                          const std::vector<int>& x);

} // namespace hwb
