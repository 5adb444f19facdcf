#pragma once
//
// Characteristic-3 geometry of (G2, V = g_s ⊕ g/g_s) over F_{3^k}:
// Chevalley-formula root-group actions, Lie-algebra tangent computations,
// the exotic nilpotent orbit table, Borel-stabilizer solving, and Springer
// fiber point counts via the Bruhat cell decomposition.
//
// V coordinates: index = root index of the datum for the 12 root lines
// (short roots live in the g_s summand, long roots in g/g_s), then h_s
// (coordinate 12) and h_l (coordinate 13).

#include <memory>
#include <string>
#include <vector>

#include "hwb/chevalley.hpp"
#include "hwb/gf.hpp"

namespace hwb {

class G2Geometry {
public:
  using Vec = std::vector<int>; // field elements, length 14
  using Mat = std::vector<std::vector<int>>;

  G2Geometry(std::shared_ptr<const GF> field, std::shared_ptr<const ChevalleyBasis> cb);

  const GF& field() const { return *field_; }
  const RootDatum& datum() const { return *cb_->datum; }
  const ChevalleyBasis& chevalley() const { return *cb_; }
  int dim() const { return 14; }
  static constexpr int HS = 12;
  static constexpr int HL = 13;

  // 0 = g_s summand, 1 = g/g_s summand.
  int summand_of_coord(int c) const;

  // Parse/render representatives like "v2ab+vb" (root names a, b, ab, 2ab,
  // 3ab, 3a2b; "0" for the zero vector).
  Vec parse_rep(const std::string& s) const;
  std::string render(const Vec& v) const;

  // x_gamma(t) acting on V (block-diagonal on the two summands).
  const Mat& act_root_group(int root_idx, int t) const;
  // Torus point t with (alpha-basis) character values (v0, ..., v_{r-1}).
  Mat torus_matrix(const std::vector<int>& basis_values) const;
  // Derivative (Lie-algebra) action of the Chevalley generator on V.
  const Mat& lie_action(int basis_idx) const; // 0..11 = X_gamma, 12..13 = H

  Vec apply(const Mat& m, const Vec& v) const;

  // Group-scheme stabilizer dimension at x: 14 minus the rank of the reduced
  // tangent directions of the root-group orbit maps (the leading divided-power
  // image per root group) together with the torus directions.
  int stabilizer_dim(const Vec& x) const;
  // Same with the root groups restricted to a centralizer subgroup (given
  // root indices + the full torus); returns (#roots + 2) - rank.
  int stabilizer_dim_in(const Vec& x, const std::vector<int>& root_indices) const;

  struct BStabResult {
    int unipotent_dim = 0;       // log_q of the stabilizer count in U
    long long unipotent_count = 0;
    int torus_rank = 0;          // dimension of {t : gamma(t)=1 for gamma in supp}
    std::vector<int> factor_roots; // gamma in Phi^- with U_gamma fixing x pointwise
    bool t0_fixes = false;       // alpha(t0)=-1, beta(t0)=1
  };
  BStabResult b_stabilizer_solve(const Vec& x) const;

  // #{gB : supp(g^{-1}x) ⊆ V^-} over this field, cell by cell.
  long long fiber_point_count(const Vec& x) const;
  std::vector<long long> fiber_cell_counts(const Vec& x) const; // per Weyl element

  struct OrbitRecord {
    std::string rep;
    int stabilizer_dim;
    int component_group_order;
  };
  static std::vector<OrbitRecord> orbit_table();

private:
  std::shared_ptr<const GF> field_;
  std::shared_ptr<const ChevalleyBasis> cb_;

  std::vector<int> summand_of_coord_;
  std::vector<int> gs_local_, quot_local_; // V coord -> local index in its summand
  std::vector<std::vector<int>> vbasis_in_g_; // column vectors over F_3 (E then C)
  std::vector<std::vector<int>> basis_inv_;   // inverse of [E|C] over F_3
  std::vector<Mat> lie_v_;                    // derivative actions on V
  std::vector<std::vector<Mat>> divpow_v_;    // divided powers on V, [root][n]
  mutable std::vector<std::vector<Mat>> root_group_; // [root][t] group matrices
  std::vector<std::vector<std::vector<std::vector<long long>>>> divpow_;

  Mat to_v_matrix(const std::vector<std::vector<int>>& g_matrix) const;
  void build_root_group(int root_idx) const;
};

// Existence of a polynomial with nonnegative integer coefficients of degree
// <= max_deg taking the given values at q = 3 and q = 9.
bool fits_nonneg_polynomial(long long at3, long long at9, int max_deg);

} // namespace hwb
