#pragma once
// Small finite fields F_{3^k}, k <= 4, with full addition/multiplication
// tables.  Elements are encoded 0..3^k-1 as base-3 digit strings of the
// coefficients of the representing polynomial; 0,1,2 are the prime subfield.
// The defining polynomials are the Conway polynomials, so the class of x
// (encoding 3) is a primitive element for k > 1.

#include <vector>

namespace hwb {

class GF {
public:
  explicit GF(int k);

  int degree() const { return k_; }
  int size() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int pow(int a, long long e) const;

  // The chosen multiplicative generator (2 for k=1, the class of x otherwise).
  int primitive() const { return prim_; }
  bool in_prime_field(int a) const { return a < 3; }

private:
  int k_ = 1;
  int q_ = 3;
  int prim_ = 2;
  std::vector<int> add_, mul_, neg_, inv_;
};

} // namespace hwb
