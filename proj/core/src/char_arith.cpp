#include "hwb/char_arith.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hwb {

CharValue& CharValue::operator+=(const CharValue& o) {
  tors += o.tors;
  if (free.size() != o.free.size()) throw std::runtime_error("generator list mismatch");
  for (size_t i = 0; i < free.size(); ++i) free[i] += o.free[i];
  normalize();
  return *this;
}

CharValue CharValue::operator+(const CharValue& o) const {
  CharValue v = *this;
  v += o;
  return v;
}

CharValue CharValue::scaled(long long n) const {
  CharValue v = *this;
  v.tors *= n;
  for (auto& f : v.free) f *= n;
  v.normalize();
  return v;
}

void CharValue::normalize() {
  // Reduce torsion into [0, 1).
  Int num = rat_num(tors), den = rat_den(tors);
  Int r = num % den;
  if (r < 0) r += den;
  tors = Rat(r, den);
}

bool CharValue::is_one() const {
  if (tors != 0) return false;
  for (const auto& f : free)
    if (f != 0) return false;
  return true;
}

nlohmann::json CharValue::to_json(const std::vector<std::string>& generators) const {
  nlohmann::json j;
  std::ostringstream os;
  os << tors;
  j["tors"] = os.str();
  nlohmann::json fr = nlohmann::json::object();
  for (size_t i = 0; i < free.size(); ++i)
    if (free[i] != 0) fr[generators.at(i)] = free[i].convert_to<long long>();
  j["free"] = fr;
  return j;
}

CharValue CharValue::from_json(const nlohmann::json& j,
                               const std::vector<std::string>& generators) {
  CharValue v;
  v.tors = j.contains("tors") ? Rat(j.at("tors").get<std::string>()) : Rat(0);
  v.free.assign(generators.size(), Int(0));
  if (j.contains("free")) {
    for (auto it = j.at("free").begin(); it != j.at("free").end(); ++it) {
      auto pos = std::find(generators.begin(), generators.end(), it.key());
      if (pos == generators.end())
        throw std::runtime_error("unknown generator in character value: " + it.key());
      v.free[pos - generators.begin()] = Int(it.value().get<long long>());
    }
  }
  v.normalize();
  return v;
}

nlohmann::json CentralCharacter::to_json(const std::vector<std::string>& basis_names) const {
  nlohmann::json j;
  j["generators"] = generators;
  nlohmann::json s = nlohmann::json::object();
  for (size_t i = 0; i < s_values.size(); ++i)
    s[basis_names.at(i)] = s_values[i].to_json(generators);
  j["s"] = s;
  nlohmann::json t = nlohmann::json::array();
  for (const auto& tv : t_values) t.push_back(tv.to_json(generators));
  j["t"] = t;
  return j;
}

CentralCharacter CentralCharacter::from_json(const nlohmann::json& j,
                                             const std::vector<std::string>& basis_names) {
  CentralCharacter a;
  a.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& name : basis_names)
    a.s_values.push_back(CharValue::from_json(j.at("s").at(name), a.generators));
  for (const auto& t : j.at("t")) a.t_values.push_back(CharValue::from_json(t, a.generators));
  return a;
}

std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>>
CentralCharacter::specialize(const std::vector<Rat>& generator_values) const {
  if (generator_values.size() != generators.size()) return std::nullopt;
  for (const auto& g : generator_values)
    if (g == 0) return std::nullopt;
  auto value_of = [&](const CharValue& v) -> std::optional<Rat> {
    if (v.tors != 0) return std::nullopt;
    Rat acc(1);
    for (size_t i = 0; i < v.free.size(); ++i) {
      Int e = v.free[i];
      Rat base = generator_values[i];
      bool invert = e < 0;
      if (invert) e = -e;
      Rat p(1);
      for (Int k = 0; k < e; ++k) p *= base;
      acc *= invert ? Rat(1) / p : p;
    }
    return acc;
  };
  std::vector<Rat> s, t;
  for (const auto& v : s_values) {
    auto r = value_of(v);
    if (!r) return std::nullopt;
    s.push_back(*r);
  }
  for (const auto& v : t_values) {
    auto r = value_of(v);
    if (!r) return std::nullopt;
    t.push_back(*r);
  }
  return std::make_pair(std::move(s), std::move(t));
}

CharValue char_eval(const CentralCharacter& a, const Weight& lambda,
                    const std::vector<int>& eps) {
  CharValue acc = CharValue::one(a.num_generators());
  for (size_t j = 0; j < lambda.size(); ++j)
    if (lambda[j] != 0) acc += a.s_values.at(j).scaled(lambda[j]);
  for (size_t i = 0; i < eps.size(); ++i)
    if (eps[i] != 0) acc += a.t_values.at(i).scaled(eps[i]);
  return acc;
}

CharValue char_eval_weight(const CentralCharacter& a, const Weight& lambda) {
  return char_eval(a, lambda, {});
}

RootedRep RootedRep::by_length(const RootDatum& d) {
  RootedRep V;
  V.summand_of_root.resize(d.num_roots());
  bool has_long = false;
  for (int i = 0; i < d.num_roots(); ++i) {
    V.summand_of_root[i] = d.length_class(i) == RootLength::Short ? 0 : 1;
    has_long = has_long || V.summand_of_root[i] == 1;
  }
  V.num_summands = has_long ? 2 : 1;
  return V;
}

FixedSupport fixed_support(const RootDatum& d, const CentralCharacter& a,
                           const RootedRep& V) {
  FixedSupport out;
  for (int g = 0; g < d.num_roots(); ++g) {
    const int i = V.summand_of_root[g];
    if (char_eval_weight(a, d.root(g)) == a.t_values.at(i))
      out.root_lines.emplace_back(g, i);
  }
  for (int i = 0; i < V.num_summands; ++i)
    if (a.t_values.at(i).is_one()) out.zero_lines.push_back(i);
  return out;
}

std::vector<int> centralizer_roots(const RootDatum& d, const CentralCharacter& a) {
  std::vector<int> out;
  for (int g = 0; g < d.num_roots(); ++g)
    if (char_eval_weight(a, d.root(g)).is_one()) out.push_back(g);
  return out;
}

namespace {

Int lcm_int(const Int& a, const Int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

} // namespace

bool in_param_group(const CentralCharacter& a, const CharValue& v) {
  const int k = static_cast<int>(a.t_values.size());
  const int m = a.num_generators();
  Int d(1);
  for (const auto& t : a.t_values) d = lcm_int(d, rat_den(t.tors));
  d = lcm_int(d, rat_den(v.tors));
  // Rows: torsion (mod 1, via an extra column with coefficient d), then the
  // free generator exponents.
  IntMat A(1 + m, std::vector<Int>(k + 1, 0));
  std::vector<Int> b(1 + m, 0);
  for (int i = 0; i < k; ++i) {
    A[0][i] = rat_num(a.t_values[i].tors) * (d / rat_den(a.t_values[i].tors));
    for (int j = 0; j < m; ++j) A[1 + j][i] = a.t_values[i].free[j];
  }
  A[0][k] = d;
  b[0] = rat_num(v.tors) * (d / rat_den(v.tors));
  for (int j = 0; j < m; ++j) b[1 + j] = v.free[j];
  return int_solve(A, b);
}

bool torsion_free_param_group(const CentralCharacter& a) {
  const int k = static_cast<int>(a.t_values.size());
  const int m = a.num_generators();
  // Combinations with vanishing free part form the kernel of the free matrix;
  // the subgroup is torsion-free iff all of them also have vanishing torsion.
  IntMat F(m, std::vector<Int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) F[j][i] = a.t_values[i].free[j];
  IntMat K = int_kernel_basis(F);
  const int nk = K.empty() ? 0 : static_cast<int>(K[0].size());
  for (int c = 0; c < nk; ++c) {
    Rat tau(0);
    for (int i = 0; i < k; ++i) tau += a.t_values[i].tors * Rat(K[i][c]);
    if (rat_den(tau) != 1) return false; // nonzero element of Q/Z
  }
  return true;
}

ReductionPair reduction_pair(const RootDatum& d, const CentralCharacter& a,
                             const RootedRep& V) {
  ReductionPair out;
  for (int g = 0; g < d.num_roots(); ++g) {
    if (in_param_group(a, char_eval_weight(a, d.root(g)))) {
      out.qa_roots.push_back(g);
      out.fixed_rep.emplace_back(g, V.summand_of_root[g]);
    }
  }
  for (int i = 0; i < V.num_summands; ++i) out.zero_lines.push_back(i);
  return out;
}

const char* to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "Finite";
    case Finiteness::Infinite: return "Infinite";
    default: return "Unknown";
  }
}

Finiteness finiteness_verdict(const RootDatum& d, const CentralCharacter& a,
                              const RootedRep& V) {
  const auto cz = centralizer_roots(d, a);
  const auto fs = fixed_support(d, a, V);
  const int dim_group = d.rank() + static_cast<int>(cz.size());
  if (dim_group < fs.dim()) return Finiteness::Infinite;
  if (!torsion_free_param_group(a)) return Finiteness::Unknown;
  const auto rp = reduction_pair(d, a, V);
  if (static_cast<int>(rp.qa_roots.size()) == d.num_roots())
    return Finiteness::Finite; // reduction pair is the full (verified) preset
  // Type-A-like subsystem: a single length class, or rank <= 1.
  bool single_length = true;
  for (size_t i = 1; i < rp.qa_roots.size(); ++i)
    if (d.length_class(rp.qa_roots[i]) != d.length_class(rp.qa_roots[0]))
      single_length = false;
  IntMat M;
  for (int g : rp.qa_roots) {
    std::vector<Int> row;
    for (int c : d.root(g)) row.emplace_back(c);
    M.push_back(std::move(row));
  }
  const int rk = M.empty() ? 0 : int_rank(M);
  if (single_length || rk <= 1) return Finiteness::Finite;
  return Finiteness::Unknown;
}

bool is_positive_real(const CentralCharacter& a) {
  for (const auto& v : a.s_values)
    if (v.tors != 0) return false;
  for (const auto& v : a.t_values)
    if (v.tors != 0) return false;
  return true;
}

bool is_connected_centralizer(const RootDatum& d, const CentralCharacter& a) {
  const int r = d.rank();
  const int k = static_cast<int>(a.t_values.size());
  const int n = r + k;
  const int m = a.num_generators();

  auto eval_full = [&](const std::vector<Int>& x) {
    CharValue acc = CharValue::one(m);
    for (int j = 0; j < r; ++j)
      if (x[j] != 0) acc += a.s_values.at(j).scaled(x[j].convert_to<long long>());
    for (int i = 0; i < k; ++i)
      if (x[r + i] != 0) acc += a.t_values.at(i).scaled(x[r + i].convert_to<long long>());
    return acc;
  };

  // Generators of X*_a = {x : eval(x) = 1}: kernel of the evaluation map,
  // computed with an auxiliary column for the mod-1 torsion condition.
  Int dlcm(1);
  for (const auto& v : a.s_values) dlcm = lcm_int(dlcm, rat_den(v.tors));
  for (const auto& v : a.t_values) dlcm = lcm_int(dlcm, rat_den(v.tors));
  IntMat A(1 + m, std::vector<Int>(n + 1, 0));
  for (int c = 0; c < n; ++c) {
    const CharValue& v = c < r ? a.s_values[c] : a.t_values[c - r];
    A[0][c] = rat_num(v.tors) * (dlcm / rat_den(v.tors));
    for (int j = 0; j < m; ++j) A[1 + j][c] = v.free[j];
  }
  A[0][n] = dlcm;
  IntMat K = int_kernel_basis(A);
  const int nk = K.empty() ? 0 : static_cast<int>(K[0].size());
  std::vector<std::vector<Int>> lattice_gens;
  for (int c = 0; c < nk; ++c) {
    std::vector<Int> g(n);
    for (int row = 0; row < n; ++row) g[row] = K[row][c];
    lattice_gens.push_back(std::move(g));
  }

  // Reflection subgroup generated by {s_gamma : gamma(a) = 1}.
  std::set<int> subgroup{d.weyl_identity()};
  std::vector<int> refl_elts;
  for (int g : centralizer_roots(d, a)) {
    // Find the Weyl element acting as s_gamma.
    for (int w = 0; w < d.weyl_order(); ++w) {
      bool match = true;
      for (int j = 0; j < r && match; ++j) {
        Weight e(r, 0);
        e[j] = 1;
        match = d.act(w, e) == d.reflect(g, e);
      }
      if (match) {
        refl_elts.push_back(w);
        break;
      }
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w : std::vector<int>(subgroup.begin(), subgroup.end()))
      for (int s : refl_elts)
        if (subgroup.insert(d.weyl_mul(w, s)).second) grew = true;
  }

  for (int w = 0; w < d.weyl_order(); ++w) {
    // w acts on the first r coordinates of X*(T-hat) = Z^r ⊕ Z^k.
    auto act_full = [&](const std::vector<Int>& x) {
      Weight xr(r, 0);
      for (int j = 0; j < r; ++j) xr[j] = x[j].convert_to<int>();
      Weight img = d.act(w, xr);
      std::vector<Int> out(n);
      for (int j = 0; j < r; ++j) out[j] = img[j];
      for (int i = 0; i < k; ++i) out[r + i] = x[r + i];
      return out;
    };
    bool preserves = true;
    for (const auto& g : lattice_gens)
      if (!eval_full(act_full(g)).is_one()) { preserves = false; break; }
    if (!preserves) continue;
    bool trivial_on_quotient = true;
    for (int j = 0; j < n && trivial_on_quotient; ++j) {
      std::vector<Int> e(n, 0);
      e[j] = 1;
      auto img = act_full(e);
      for (int c = 0; c < n; ++c) img[c] -= e[c];
      trivial_on_quotient = eval_full(img).is_one();
    }
    if (!trivial_on_quotient) continue;
    if (!subgroup.count(w)) return false;
  }
  return true;
}

} // namespace hwb
