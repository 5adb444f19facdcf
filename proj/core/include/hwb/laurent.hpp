#pragma once
//
// The coefficient ring A = Z[q_i^{±1}] and the group algebra A[X*], with the
// exact Demazure-type division operator.  Elements are finitely supported maps
// (weight, q-exponent vector) -> rational coefficient; all arithmetic is exact.

#include <map>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hwb/rational.hpp"
#include "hwb/root_datum.hpp"

#include <json.hpp>

namespace hwb {

// Exponent storage with inline capacity: rank and parameter count are at most
// 2 for every preset, so monomial keys never touch the heap in hot loops.
using ExpoVec = boost::container::small_vector<int, 4>;

struct Mono {
  ExpoVec wt; // exponent of e^lambda, length = rank
  ExpoVec qe; // exponents of the q_i, length = #parameters

  // Canonical display/storage order: lexicographic on (qe, wt).
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.qe != b.qe) return a.qe < b.qe;
    return a.wt < b.wt;
  }
  friend bool operator==(const Mono& a, const Mono& b) = default;
};

class GroupAlgebraElement {
public:
  GroupAlgebraElement() = default;

  static GroupAlgebraElement zero() { return {}; }
  static GroupAlgebraElement monomial(std::vector<int> wt, std::vector<int> qe,
                                      Rat coeff = Rat(1));
  static GroupAlgebraElement constant(int rank, int nparams, Rat c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }

  void add_term(const Mono& m, const Rat& c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-() const;
  GroupAlgebraElement scaled(const Rat& c) const;
  bool operator==(const GroupAlgebraElement& o) const { return terms_ == o.terms_; }

  // e^lambda |-> e^{w(lambda)}; q-exponents untouched.  Algebra automorphism.
  GroupAlgebraElement w_act(const RootDatum& d, int w) const;
  // Action of a single (not necessarily simple) reflection s_gamma.
  GroupAlgebraElement reflect(const RootDatum& d, int root_idx) const;

  // Substitute q_i -> values[i] (nonzero rationals); result has empty qe part
  // (all q-exponents zero).
  GroupAlgebraElement specialize_q(const std::vector<Rat>& values) const;
  // Evaluate e^{basis_j} -> point[j] (nonzero rationals) and q_i -> qvalues[i].
  Rat eval_at(const std::vector<Rat>& point, const std::vector<Rat>& qvalues) const;

  // All coefficients integers? (paper-level elements stay integral)
  bool is_integral() const;

  std::string render(const std::vector<std::string>& basis_names,
                     const std::vector<std::string>& qnames) const;
  nlohmann::json to_json() const;
  static GroupAlgebraElement from_json(const nlohmann::json& j);

private:
  std::map<Mono, Rat> terms_;
};

// Parameter function q : roots -> parameter index, constant on W-orbits.
class ParameterFunction {
public:
  static ParameterFunction constant(const RootDatum& d); // single parameter q
  static ParameterFunction by_length(const RootDatum& d); // short -> q1, long -> q2
  static ParameterFunction from_assignment(const RootDatum& d,
                                           std::vector<int> root_to_param);

  int num_params() const { return num_params_; }
  int param_of_root(int root_idx) const { return root_to_param_.at(root_idx); }
  int param_of_simple(const RootDatum& d, int simple_pos) const {
    return root_to_param_.at(d.simple_indices().at(simple_pos));
  }
  const std::vector<std::string>& names() const { return names_; }

private:
  int num_params_ = 0;
  std::vector<int> root_to_param_;
  std::vector<std::string> names_;
};

// D_alpha(e^lambda) = (e^lambda - e^{s_alpha(lambda) - alpha})/(1 - e^{-alpha}),
// extended additively; computed by the closed geometric-series formula, which
// is exact by construction (the division always terminates with remainder 0).
GroupAlgebraElement demazure(const RootDatum& d, int simple_pos,
                             const GroupAlgebraElement& f);

// (f - s_alpha(f))/(1 - e^{-alpha}): the exact division appearing in the
// Bernstein commutation rule (no exponent shift).
GroupAlgebraElement bernstein_diff(const RootDatum& d, int simple_pos,
                                   const GroupAlgebraElement& f);

// lambda^vee multiplier Prod (1 - e^{-lambda})^{dim M_lambda} over the listed
// module weights: each entry (wt, qe, mult) contributes (1 - q^{-qe} e^{-wt})^mult.
struct LambdaVeeEntry {
  std::vector<int> wt;
  std::vector<int> qe;
  int mult = 1;
};
GroupAlgebraElement lambda_vee(int rank, int nparams,
                               const std::vector<LambdaVeeEntry>& entries);

} // namespace hwb
