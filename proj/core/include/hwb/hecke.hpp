#pragma once
//
// The affine Hecke algebra H^aff_q in normal form sum_w T_w f_w (right
// coefficients f_w in A[X*]).  Multiplication rewrites right-to-left: e^lambda
// is moved past T_{s} via the Bernstein rule, T-words are reduced via the
// quadratic and braid rules.

#include <map>
#include <memory>

#include "hwb/laurent.hpp"
#include "hwb/root_datum.hpp"

namespace hwb {

struct HeckeContext {
  std::shared_ptr<const RootDatum> datum;
  ParameterFunction params;
  // When set, the parameters q_i have been specialized to these rationals and
  // all coefficients live in Q[X*] (zero q-exponents).
  std::optional<std::vector<Rat>> q_values;

  // q(alpha_i) as a coefficient: either the monomial q_i or its value.
  GroupAlgebraElement q_of_simple(int simple_pos) const;
  bool compatible(const HeckeContext& o) const;
};

class HeckeElement {
public:
  HeckeElement() = default;
  explicit HeckeElement(std::shared_ptr<const HeckeContext> ctx) : ctx_(std::move(ctx)) {}

  static HeckeElement zero(std::shared_ptr<const HeckeContext> ctx);
  static HeckeElement unit(std::shared_ptr<const HeckeContext> ctx); // T_e
  static HeckeElement T(std::shared_ptr<const HeckeContext> ctx, int w);
  static HeckeElement theta(std::shared_ptr<const HeckeContext> ctx,
                            const GroupAlgebraElement& f); // T_e f

  const std::shared_ptr<const HeckeContext>& context() const { return ctx_; }
  const std::map<int, GroupAlgebraElement>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  void add_term(int w, const GroupAlgebraElement& f);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const HeckeElement& o) const;
  bool operator==(const HeckeElement& o) const { return coords_ == o.coords_; }

  // Right multiplication helpers.
  HeckeElement mul_right_Ts(int simple_pos) const;
  HeckeElement mul_right_coeff(const GroupAlgebraElement& f) const;

  // Substitute q_i -> values; returns an element over the specialized context.
  HeckeElement specialize_params(const std::vector<Rat>& values) const;

  // Left-coefficient form sum_w g_w T_w (for the free-left-module tests).
  std::map<int, GroupAlgebraElement> to_left_coords() const;

  std::string render() const;

private:
  std::shared_ptr<const HeckeContext> ctx_;
  std::map<int, GroupAlgebraElement> coords_;
};

// sum_{mu in W lambda} T_e e^mu : a central element.
HeckeElement center_orbit_sum(std::shared_ptr<const HeckeContext> ctx, const Weight& lambda);

std::shared_ptr<const HeckeContext> make_context(std::shared_ptr<const RootDatum> datum,
                                                 ParameterFunction params);

} // namespace hwb
