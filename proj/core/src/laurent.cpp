#include "hwb/laurent.hpp"

#include <sstream>


namespace hwb {

GroupAlgebraElement GroupAlgebraElement::monomial(std::vector<int> wt,
                                                  std::vector<int> qe, Rat coeff) {
  GroupAlgebraElement e;
  if (coeff != 0)
    e.terms_.emplace(Mono{ExpoVec(wt.begin(), wt.end()), ExpoVec(qe.begin(), qe.end())},
                     std::move(coeff));
  return e;
}

GroupAlgebraElement GroupAlgebraElement::constant(int rank, int nparams, Rat c) {
  return monomial(std::vector<int>(rank, 0), std::vector<int>(nparams, 0), std::move(c));
}

void GroupAlgebraElement::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rat& c) const {
  GroupAlgebraElement out;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m = m1;
      for (size_t i = 0; i < m.wt.size(); ++i) m.wt[i] += m2.wt[i];
      for (size_t i = 0; i < m.qe.size(); ++i) m.qe[i] += m2.qe[i];
      out.add_term(m, c1 * c2);
    }
  return out;
}

namespace {

long long pairing_inline(const RootDatum& d, const ExpoVec& wt, int root_idx) {
  const std::vector<int>& f = d.coroot_functional(root_idx);
  long long n = 0;
  for (size_t j = 0; j < wt.size(); ++j) n += static_cast<long long>(f[j]) * wt[j];
  return n;
}

} // namespace

GroupAlgebraElement GroupAlgebraElement::w_act(const RootDatum& d, int w) const {
  GroupAlgebraElement out;
  for (const auto& [m, c] : terms_) {
    const Weight img = d.act(w, Weight(m.wt.begin(), m.wt.end()));
    Mono t = m;
    t.wt.assign(img.begin(), img.end());
    out.add_term(t, c);
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::reflect(const RootDatum& d, int root_idx) const {
  // s_gamma(lambda) = lambda - <lambda, gamma^vee> gamma, computed in place.
  const Weight& a = d.root(root_idx);
  GroupAlgebraElement out;
  for (const auto& [m, c] : terms_) {
    const long long n = pairing_inline(d, m.wt, root_idx);
    Mono img = m;
    for (size_t j = 0; j < img.wt.size(); ++j) img.wt[j] -= static_cast<int>(n) * a[j];
    out.add_term(img, c);
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::specialize_q(const std::vector<Rat>& values) const {
  for (const auto& v : values)
    if (v == 0) throw std::runtime_error("parameter specialization must be nonzero");
  GroupAlgebraElement out;
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    for (size_t i = 0; i < m.qe.size(); ++i) {
      int e = m.qe[i];
      Rat base = values.at(i);
      if (e < 0) {
        base = Rat(1) / base;
        e = -e;
      }
      for (int k = 0; k < e; ++k) coeff *= base;
    }
    Mono img;
    img.wt = m.wt;
    img.qe.assign(m.qe.size(), 0);
    out.add_term(img, coeff);
  }
  return out;
}

Rat GroupAlgebraElement::eval_at(const std::vector<Rat>& point,
                                 const std::vector<Rat>& qvalues) const {
  auto ipow = [](Rat base, int e) {
    if (e < 0) {
      base = Rat(1) / base;
      e = -e;
    }
    Rat r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (size_t j = 0; j < m.wt.size(); ++j) v *= ipow(point.at(j), m.wt[j]);
    for (size_t i = 0; i < m.qe.size(); ++i) v *= ipow(qvalues.at(i), m.qe[i]);
    acc += v;
  }
  return acc;
}

bool GroupAlgebraElement::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (rat_den(c) != 1) return false;
  return true;
}

std::string GroupAlgebraElement::render(const std::vector<std::string>& basis_names,
                                        const std::vector<std::string>& qnames) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*e[";
    for (size_t j = 0; j < m.wt.size(); ++j) {
      if (j) os << ",";
      os << m.wt[j];
    }
    os << "]";
    for (size_t i = 0; i < m.qe.size(); ++i)
      if (m.qe[i] != 0)
        os << "*" << (i < qnames.size() ? qnames[i] : "q" + std::to_string(i + 1)) << "^"
           << m.qe[i];
    (void)basis_names;
  }
  return os.str();
}

nlohmann::json GroupAlgebraElement::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json t;
    t["wt"] = std::vector<int>(m.wt.begin(), m.wt.end());
    t["qe"] = std::vector<int>(m.qe.begin(), m.qe.end());
    std::ostringstream os;
    os << c;
    t["c"] = os.str();
    arr.push_back(std::move(t));
  }
  return arr;
}

GroupAlgebraElement GroupAlgebraElement::from_json(const nlohmann::json& j) {
  GroupAlgebraElement out;
  for (const auto& t : j) {
    Mono m;
    const auto wt = t.at("wt").get<std::vector<int>>();
    const auto qe = t.at("qe").get<std::vector<int>>();
    m.wt.assign(wt.begin(), wt.end());
    m.qe.assign(qe.begin(), qe.end());
    out.add_term(m, Rat(t.at("c").get<std::string>()));
  }
  return out;
}

// --- ParameterFunction ------------------------------------------------------

ParameterFunction ParameterFunction::constant(const RootDatum& d) {
  ParameterFunction p;
  p.num_params_ = 1;
  p.root_to_param_.assign(d.num_roots(), 0);
  p.names_ = {"q"};
  return p;
}

ParameterFunction ParameterFunction::by_length(const RootDatum& d) {
  ParameterFunction p;
  p.root_to_param_.resize(d.num_roots());
  bool has_long = false;
  for (int i = 0; i < d.num_roots(); ++i) {
    p.root_to_param_[i] = d.length_class(i) == RootLength::Short ? 0 : 1;
    has_long = has_long || p.root_to_param_[i] == 1;
  }
  p.num_params_ = has_long ? 2 : 1;
  p.names_ = has_long ? std::vector<std::string>{"q1", "q2"} : std::vector<std::string>{"q"};
  return p;
}

ParameterFunction ParameterFunction::from_assignment(const RootDatum& d,
                                                     std::vector<int> root_to_param) {
  if (static_cast<int>(root_to_param.size()) != d.num_roots())
    throw std::runtime_error("parameter assignment must cover every root");
  // Must be constant on W-orbits.
  for (int i = 0; i < d.num_roots(); ++i)
    for (int idx : d.root_orbit(i))
      if (root_to_param[idx] != root_to_param[i])
        throw std::runtime_error("parameter function is not constant on W-orbits");
  ParameterFunction p;
  int np = 0;
  for (int v : root_to_param) np = std::max(np, v + 1);
  p.num_params_ = np;
  p.root_to_param_ = std::move(root_to_param);
  for (int i = 0; i < np; ++i) p.names_.push_back("q" + std::to_string(i + 1));
  return p;
}

// --- Demazure-type operators ------------------------------------------------

namespace {

// Closed form of (e^lambda - e^{lambda - (n+1) alpha})/(1 - e^{-alpha}) where
// n = <lambda, alpha^vee> may be any integer:
//   n >= 0 : sum_{k=0..n} e^{lambda - k alpha}
//   n = -1 : 0
//   n <= -2: - sum_{k=1..-n-1} e^{lambda + k alpha}
void demazure_monomial(const RootDatum& d, int root_idx, const Mono& m, const Rat& c,
                       GroupAlgebraElement& out) {
  const long long n = pairing_inline(d, m.wt, root_idx);
  const Weight& a = d.root(root_idx);
  auto shifted = [&](long long k) {
    Mono t = m;
    for (size_t j = 0; j < t.wt.size(); ++j) t.wt[j] -= static_cast<int>(k) * a[j];
    return t;
  };
  if (n >= 0) {
    for (long long k = 0; k <= n; ++k) out.add_term(shifted(k), c);
  } else {
    for (long long k = 1; k <= -n - 1; ++k) out.add_term(shifted(-k), -c);
  }
}

// Closed form of (e^lambda - e^{s_alpha(lambda)})/(1 - e^{-alpha}):
//   n >= 0 : sum_{k=0..n-1} e^{lambda - k alpha}
//   n <  0 : - sum_{k=1..-n} e^{lambda + k alpha}
void bernstein_monomial(const RootDatum& d, int root_idx, const Mono& m, const Rat& c,
                        GroupAlgebraElement& out) {
  const long long n = pairing_inline(d, m.wt, root_idx);
  const Weight& a = d.root(root_idx);
  auto shifted = [&](long long k) {
    Mono t = m;
    for (size_t j = 0; j < t.wt.size(); ++j) t.wt[j] -= static_cast<int>(k) * a[j];
    return t;
  };
  if (n >= 0) {
    for (long long k = 0; k <= n - 1; ++k) out.add_term(shifted(k), c);
  } else {
    for (long long k = 1; k <= -n; ++k) out.add_term(shifted(-k), -c);
  }
}

} // namespace

GroupAlgebraElement demazure(const RootDatum& d, int simple_pos,
                             const GroupAlgebraElement& f) {
  const int root_idx = d.simple_indices().at(simple_pos);
  GroupAlgebraElement out;
  for (const auto& [m, c] : f.terms()) demazure_monomial(d, root_idx, m, c, out);
  return out;
}

GroupAlgebraElement bernstein_diff(const RootDatum& d, int simple_pos,
                                   const GroupAlgebraElement& f) {
  const int root_idx = d.simple_indices().at(simple_pos);
  GroupAlgebraElement out;
  for (const auto& [m, c] : f.terms()) bernstein_monomial(d, root_idx, m, c, out);
  return out;
}

GroupAlgebraElement lambda_vee(int rank, int nparams,
                               const std::vector<LambdaVeeEntry>& entries) {
  GroupAlgebraElement acc = GroupAlgebraElement::constant(rank, nparams, 1);
  for (const auto& e : entries) {
    std::vector<int> wt = e.wt, qe = e.qe;
    for (auto& v : wt) v = -v;
    for (auto& v : qe) v = -v;
    GroupAlgebraElement factor =
        GroupAlgebraElement::constant(rank, nparams, 1) -
        GroupAlgebraElement::monomial(wt, qe, Rat(1));
    for (int k = 0; k < e.mult; ++k) acc = acc * factor;
  }
  return acc;
}

} // namespace hwb
