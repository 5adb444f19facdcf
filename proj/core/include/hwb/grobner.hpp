#pragma once
// Minimal Buchberger engine over Q with degrevlex order, plus quotient-ring
// helpers (standard monomials and multiplication matrices) for zero-dimensional
// ideals.  Only small systems (<= 4 variables, |W| <= 12) are expected.

#include <map>
#include <vector>

#include "hwb/rational.hpp"

namespace hwb {

using Expo = std::vector<int>; // exponent vector, all entries >= 0

// Degrevlex: higher total degree wins; ties broken by the *last* variable with
// differing exponent, smaller exponent winning.
bool degrevlex_less(const Expo& a, const Expo& b);

// Term order for the map: leading (degrevlex-largest) term first.
struct DegrevlexGreater {
  bool operator()(const Expo& a, const Expo& b) const { return degrevlex_less(b, a); }
};

struct Poly {
  // Terms kept in descending degrevlex order; the leading term is begin().
  std::map<Expo, Rat, DegrevlexGreater> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Expo& e, const Rat& c);
  const Expo& lead() const;
  const Rat& lead_coeff() const;
  Poly scaled(const Rat& c) const;
  Poly times_mono(const Expo& e, const Rat& c) const;
  // In-place this -= g shifted by e and scaled by c.
  void sub_scaled_shifted(const Poly& g, const Expo& e, const Rat& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
};

// Reduced Groebner basis of the given generators.
std::vector<Poly> groebner_basis(std::vector<Poly> gens);

// Remainder of f modulo the basis (normal form).
Poly reduce(const Poly& f, const std::vector<Poly>& basis);

// Standard monomials of a zero-dimensional ideal; throws if more than `bound`
// are found (non-zero-dimensional or wrong generator set).
std::vector<Expo> standard_monomials(const std::vector<Poly>& basis, int nvars, int bound);

} // namespace hwb
