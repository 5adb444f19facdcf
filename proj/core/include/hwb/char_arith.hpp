#pragma once
//
// Exact arithmetic for central characters a = (s, (t_i)).  C^x is modeled as
// (Q/Z) ⊕ Z^m over a user-declared list of multiplicatively independent
// positive-real generators: a value is a torsion part (rational mod 1, the
// unit-circle exponent) plus an integer exponent vector over the generators.
// Subgroup membership and torsion questions reduce to integer linear algebra.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwb/intlin.hpp"
#include "hwb/laurent.hpp"
#include "hwb/root_datum.hpp"

namespace hwb {

struct CharValue {
  Rat tors;               // in [0,1): exponent of exp(2 pi i . )
  std::vector<Int> free;  // exponents over the generator list

  static CharValue one(int m) { return CharValue{Rat(0), std::vector<Int>(m, 0)}; }
  CharValue& operator+=(const CharValue& o);
  CharValue operator+(const CharValue& o) const;
  CharValue scaled(long long n) const;
  void normalize(); // reduce torsion mod 1
  bool is_one() const;
  bool operator==(const CharValue& o) const { return tors == o.tors && free == o.free; }

  nlohmann::json to_json(const std::vector<std::string>& generators) const;
  static CharValue from_json(const nlohmann::json& j,
                             const std::vector<std::string>& generators);
};

struct CentralCharacter {
  std::vector<std::string> generators;  // names of the free generators
  std::vector<CharValue> s_values;      // one per X*-basis coordinate
  std::vector<CharValue> t_values;      // one per Hecke parameter index

  int num_generators() const { return static_cast<int>(generators.size()); }

  nlohmann::json to_json(const std::vector<std::string>& basis_names) const;
  static CentralCharacter from_json(const nlohmann::json& j,
                                    const std::vector<std::string>& basis_names);

  // Rational specialization: substitute generator -> value; requires all
  // torsion parts zero.  Returns (s point, t point) or nullopt.
  std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>>
  specialize(const std::vector<Rat>& generator_values) const;
};

// lambda(s) * prod t_i^{eps_i}
CharValue char_eval(const CentralCharacter& a, const Weight& lambda,
                    const std::vector<int>& eps);
CharValue char_eval_weight(const CentralCharacter& a, const Weight& lambda);

// Rooted-representation descriptor: every root is assigned to a summand
// (= parameter index); each summand also carries one zero-weight line.
struct RootedRep {
  std::vector<int> summand_of_root; // per root index
  int num_summands = 0;

  static RootedRep by_length(const RootDatum& d); // short -> 0, long -> 1
};

struct FixedSupport {
  std::vector<std::pair<int, int>> root_lines; // (root index, summand)
  std::vector<int> zero_lines;                 // summands whose zero line is fixed
  int dim() const {
    return static_cast<int>(root_lines.size() + zero_lines.size());
  }
};

FixedSupport fixed_support(const RootDatum& d, const CentralCharacter& a,
                           const RootedRep& V);

// {gamma : gamma(s) = 1}
std::vector<int> centralizer_roots(const RootDatum& d, const CentralCharacter& a);

// Is <t_1, ..., t_k> torsion-free?  (Smith-normal-form decision.)
bool torsion_free_param_group(const CentralCharacter& a);

// Is v in the subgroup generated by the t_i?
bool in_param_group(const CentralCharacter& a, const CharValue& v);

struct ReductionPair {
  std::vector<int> qa_roots;                    // {gamma : gamma(s) in <t_i>}
  std::vector<std::pair<int, int>> fixed_rep;   // V^{S_a} root lines
  std::vector<int> zero_lines;                  // always all summands
};

ReductionPair reduction_pair(const RootDatum& d, const CentralCharacter& a,
                             const RootedRep& V);

enum class Finiteness { Finite, Infinite, Unknown };
const char* to_string(Finiteness f);

Finiteness finiteness_verdict(const RootDatum& d, const CentralCharacter& a,
                              const RootedRep& V);

bool is_positive_real(const CentralCharacter& a);

// Exhaustive Weyl-group check: every w preserving X*_a and acting trivially on
// X*(T-hat)/X*_a lies in the subgroup generated by the reflections s_gamma
// with gamma(a) = 1.
bool is_connected_centralizer(const RootDatum& d, const CentralCharacter& a);

} // namespace hwb
