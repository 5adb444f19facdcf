#include "hwb/gf.hpp"

#include <stdexcept>

namespace hwb {

namespace {

// Conway polynomials over F_3: coefficients of x^0..x^{k-1} (monic part
// implicit), i.e. x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1}).
const int kConway[4][4] = {
    {1, 0, 0, 0}, // x + 1
    {2, 2, 0, 0}, // x^2 + 2x + 2
    {1, 2, 0, 0}, // x^3 + 2x + 1
    {2, 0, 0, 2}, // x^4 + 2x^3 + 2
};

void decode(int a, int k, int* digits) {
  for (int i = 0; i < k; ++i) {
    digits[i] = a % 3;
    a /= 3;
  }
}

int encode(const int* digits, int k) {
  int a = 0;
  for (int i = k - 1; i >= 0; --i) a = a * 3 + digits[i];
  return a;
}

} // namespace

GF::GF(int k) : k_(k) {
  if (k < 1 || k > 4) throw std::invalid_argument("GF degree must be 1..4");
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= 3;
  prim_ = (k == 1) ? 2 : 3;

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  int da[4], db[4], dr[8];
  for (int a = 0; a < q_; ++a) {
    decode(a, k_, da);
    for (int i = 0; i < k_; ++i) da[i] = (3 - da[i]) % 3;
    neg_[a] = encode(da, k_);
  }
  for (int a = 0; a < q_; ++a) {
    decode(a, k_, da);
    for (int b = 0; b < q_; ++b) {
      decode(b, k_, db);
      for (int i = 0; i < k_; ++i) dr[i] = (da[i] + db[i]) % 3;
      add_[a * q_ + b] = encode(dr, k_);
    }
  }
  for (int a = 0; a < q_; ++a) {
    decode(a, k_, da);
    for (int b = 0; b < q_; ++b) {
      decode(b, k_, db);
      for (int i = 0; i < 2 * k_; ++i) dr[i] = 0;
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) dr[i + j] = (dr[i + j] + da[i] * db[j]) % 3;
      // Reduce modulo the defining polynomial.
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        const int c = dr[d];
        if (c == 0) continue;
        dr[d] = 0;
        for (int i = 0; i < k_; ++i)
          dr[d - k_ + i] = (dr[d - k_ + i] + c * (3 - kConway[k_ - 1][i]) % 3 + 3) % 3;
      }
      mul_[a * q_ + b] = encode(dr, k_);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
  for (int a = 1; a < q_; ++a)
    if (inv_[a] == 0 || mul_[a * q_ + inv_[a]] != 1)
      throw std::logic_error("finite-field table construction failed");
}

int GF::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int GF::pow(int a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("inverse of zero");
    return e == 0 ? 1 : 0;
  }
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int out = 1;
  while (e > 0) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

} // namespace hwb
