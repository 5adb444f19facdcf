#pragma once
//
// Specialization of the affine Hecke algebra at a central character given by a
// rational point: quotient of the Laurent ring by the Weyl-invariant ideal
// <O_i - chi(O_i)> (dimension |W| by Pittie-Steinberg), the |W|^2-dimensional
// specialized algebra, and the simple-module count via the trace-form radical.
//
// The Laurent ring Q[x_1^{±1},...,x_r^{±1}] is presented as the polynomial
// ring Q[x_1,...,x_r,z] modulo the extra relation z·x_1···x_r = 1, which
// simultaneously clears denominators and saturates by the product of the
// variables; the Groebner order is degrevlex.

#include <memory>
#include <random>

#include "hwb/grobner.hpp"
#include "hwb/hecke.hpp"

namespace hwb {

class QuotientRing {
public:
  // s_point: rational (nonzero) value of e^{basis_j} for each j.
  QuotientRing(std::shared_ptr<const RootDatum> datum, std::vector<Rat> s_point);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Expo>& basis() const { return basis_; }
  const std::vector<Poly>& groebner() const { return gb_; }
  const RootDatum& datum() const { return *datum_; }
  const std::vector<Rat>& s_point() const { return s_point_; }
  // Weight (Laurent exponent) of a basis monomial.
  Weight basis_weight(int b) const;

  // Normal-form coordinates of the Laurent monomial e^{wt} (memoized).
  const std::vector<Rat>& nf_weight(const Weight& wt) const;
  // Coordinates of a Laurent element (q-exponents must all be zero).
  std::vector<Rat> reduce_element(const GroupAlgebraElement& f) const;

  // Is the quotient reduced (trace form of the commutative algebra
  // nondegenerate)?  True at regular points.
  bool is_reduced() const;

  // Ideal generators used (for reproducibility reports).
  const std::vector<Weight>& invariant_weights() const { return inv_weights_; }

private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<Rat> s_point_;
  std::vector<Poly> gb_;
  std::vector<Expo> basis_;
  std::map<Expo, int> basis_index_;
  std::vector<std::vector<std::vector<Rat>>> mult_matrix_; // per variable, column-major [var][col b] -> coords
  std::vector<Weight> inv_weights_;
  mutable std::map<Weight, std::vector<Rat>> nf_cache_;

  std::vector<Rat> reduce_poly_to_coords(const Poly& p) const;
};

using SparseVec = std::vector<std::pair<int, Rat>>;

struct FiniteDimAlgebra {
  int dim = 0;
  // sc[i][j] = coordinates of e_i * e_j.
  std::vector<std::vector<SparseVec>> sc;
  std::vector<Rat> unit;
  // Coordinate vectors of an algebra generating set (defaults to the basis).
  std::vector<std::vector<Rat>> generators;
  std::vector<std::string> labels;

  std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  bool check_associativity(int trials, std::mt19937_64& rng) const;
};

struct SimpleCountResult {
  int dim = 0;
  int radical_dim = 0;
  int simple_count = 0;
};

// Radical = kernel of the trace form (x,y) -> tr(L_{xy}); simple count =
// dim of the center of A/rad (valid over Q since char 0, counts simples over
// the algebraic closure).
SimpleCountResult count_simples(const FiniteDimAlgebra& A);

// H^aff specialized at the character: s_point as in QuotientRing, q_values the
// rational parameter values.  Basis {T_w ⊗ b}, dimension |W| * |W|.
FiniteDimAlgebra build_specialized(std::shared_ptr<const RootDatum> datum,
                                   const ParameterFunction& params,
                                   const std::vector<Rat>& s_point,
                                   const std::vector<Rat>& q_values);

// The W-orbit of a rational point (values of e^{basis_j}); used by the
// regular-character oracle: at a regular point the quotient is reduced and the
// orbit has exactly |W| distinct elements.
std::vector<std::vector<Rat>> orbit_points(const RootDatum& d, const std::vector<Rat>& s);

} // namespace hwb
