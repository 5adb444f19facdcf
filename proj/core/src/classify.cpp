#include "hwb/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hwb {

namespace {

std::vector<int> support_of(const std::vector<int>& x) {
  std::vector<int> s;
  for (size_t c = 0; c < x.size(); ++c)
    if (x[c] != 0) s.push_back(static_cast<int>(c));
  return s;
}

bool support_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool in_vminus(const RootDatum& d, const std::vector<int>& x) {
  for (size_t c = 0; c < x.size(); ++c)
    if (x[c] != 0 && (c >= 12 || !d.in_negative_system(static_cast<int>(c)))) return false;
  return true;
}

} // namespace

long long ClassifyResult::encode_point(const std::vector<int>& x, int q) const {
  long long id = 0;
  for (size_t i = fixed_coords.size(); i-- > 0;) {
    id = id * q + x[fixed_coords[i]];
  }
  // Verify the point is supported on the fixed space.
  std::vector<char> fixed(x.size(), 0);
  for (int c : fixed_coords) fixed[c] = 1;
  for (size_t c = 0; c < x.size(); ++c)
    if (x[c] != 0 && !fixed[c])
      throw std::invalid_argument("point not supported on the fixed space");
  return id;
}

Signature point_signature(const G2Geometry& geo, const std::vector<int>& centralizer_roots,
                          const std::vector<int>& x) {
  Signature sig;
  sig.sdim = geo.stabilizer_dim_in(x, centralizer_roots);
  sig.support = support_of(x);
  sig.fiber = in_vminus(geo.datum(), x) ? geo.fiber_point_count(x) : -1;
  return sig;
}

ClassifyResult fixed_space_classify(std::shared_ptr<const ChevalleyBasis> cb,
                                    const CentralCharacter& a, int k,
                                    bool check_stability) {
  const RootDatum& d = *cb->datum;
  const RootedRep V = RootedRep::by_length(d);
  if (finiteness_verdict(d, a, V) != Finiteness::Finite)
    throw std::invalid_argument("classification requires a Finite verdict");

  ClassifyResult res;
  res.k = k;

  const FixedSupport fs = fixed_support(d, a, V);
  for (const auto& [root_idx, summand] : fs.root_lines) res.fixed_coords.push_back(root_idx);
  for (int summand : fs.zero_lines)
    res.fixed_coords.push_back(summand == 0 ? G2Geometry::HS : G2Geometry::HL);
  std::sort(res.fixed_coords.begin(), res.fixed_coords.end());
  const int m = static_cast<int>(res.fixed_coords.size());
  if (m > 6) throw std::runtime_error("fixed space too large to enumerate");

  res.centralizer_roots = centralizer_roots(d, a);

  auto field = std::make_shared<GF>(k);
  const int q = field->size();
  G2Geometry geo(field, cb);

  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= q;
    if (total > 40'000'000) throw std::runtime_error("fixed space too large to enumerate");
  }

  // Generators of the centralizer group restricted to the fixed space.
  std::vector<char> fixed_flag(14, 0);
  for (int c : res.fixed_coords) fixed_flag[c] = 1;
  std::vector<std::vector<std::vector<int>>> gens; // m x m matrices
  auto restrict_matrix = [&](const G2Geometry::Mat& M) {
    std::vector<std::vector<int>> R(m, std::vector<int>(m, 0));
    for (int j = 0; j < m; ++j) {
      const int cj = res.fixed_coords[j];
      for (int i = 0; i < 14; ++i) {
        if (M[i][cj] == 0) continue;
        if (!fixed_flag[i])
          throw std::logic_error("centralizer action does not preserve the fixed space");
      }
      for (int i = 0; i < m; ++i) R[i][j] = M[res.fixed_coords[i]][cj];
    }
    return R;
  };
  for (int g : res.centralizer_roots) {
    int b = 1; // F_3-basis elements of F_{3^k}: 1, x, x^2, ...
    for (int i = 0; i < k; ++i) {
      gens.push_back(restrict_matrix(geo.act_root_group(g, b)));
      b *= 3;
    }
  }
  const int prim = field->primitive();
  gens.push_back(restrict_matrix(geo.torus_matrix({prim, 1})));
  gens.push_back(restrict_matrix(geo.torus_matrix({1, prim})));

  auto apply_local = [&](const std::vector<std::vector<int>>& M, const std::vector<int>& v) {
    std::vector<int> out(m, 0);
    for (int j = 0; j < m; ++j) {
      if (v[j] == 0) continue;
      for (int i = 0; i < m; ++i)
        if (M[i][j] != 0) out[i] = field->add(out[i], field->mul(M[i][j], v[j]));
    }
    return out;
  };
  auto encode_local = [&](const std::vector<int>& v) {
    long long id = 0;
    for (int i = m - 1; i >= 0; --i) id = id * q + v[i];
    return id;
  };
  auto decode_local = [&](long long id) {
    std::vector<int> v(m, 0);
    for (int i = 0; i < m; ++i) {
      v[i] = static_cast<int>(id % q);
      id /= q;
    }
    return v;
  };
  auto to_full = [&](const std::vector<int>& v) {
    std::vector<int> x(14, 0);
    for (int i = 0; i < m; ++i) x[res.fixed_coords[i]] = v[i];
    return x;
  };

  // Orbit BFS over all points of the fixed space.
  std::vector<int> orbit_of(total, -1);
  struct Orbit {
    long long rep_id;
    long long size;
    std::vector<int> min_support;
  };
  std::vector<Orbit> orbits;
  for (long long start = 0; start < total; ++start) {
    if (orbit_of[start] != -1) continue;
    const int oid = static_cast<int>(orbits.size());
    Orbit orb{start, 0, {}};
    std::deque<long long> queue{start};
    orbit_of[start] = oid;
    bool have_support = false;
    while (!queue.empty()) {
      const long long id = queue.front();
      queue.pop_front();
      ++orb.size;
      const std::vector<int> v = decode_local(id);
      std::vector<int> supp = support_of(to_full(v));
      if (!have_support || support_less(supp, orb.min_support)) {
        orb.min_support = std::move(supp);
        have_support = true;
      }
      for (const auto& M : gens) {
        const long long nid = encode_local(apply_local(M, v));
        if (orbit_of[nid] == -1) {
          orbit_of[nid] = oid;
          queue.push_back(nid);
        }
      }
    }
    orbits.push_back(std::move(orb));
  }

  // Signatures per orbit; group orbits into classes.
  std::map<Signature, int> class_of_sig;
  std::vector<int> orbit_class(orbits.size(), -1);
  for (size_t o = 0; o < orbits.size(); ++o) {
    const std::vector<int> rep = to_full(decode_local(orbits[o].rep_id));
    Signature sig;
    sig.sdim = geo.stabilizer_dim_in(rep, res.centralizer_roots);
    sig.support = orbits[o].min_support;
    // Fiber counts are taken over the classification field itself so the
    // signature is constant on rational forms of one geometric class.
    if (in_vminus(d, rep)) sig.fiber = geo.fiber_point_count(rep);
    auto [it, inserted] = class_of_sig.emplace(sig, static_cast<int>(res.classes.size()));
    if (inserted) {
      SignatureClass cls;
      cls.sig = sig;
      cls.rep = rep;
      cls.rep_render = geo.render(rep);
      res.classes.push_back(std::move(cls));
    }
    const int ci = it->second;
    orbit_class[o] = ci;
    res.classes[ci].points += orbits[o].size;
    res.classes[ci].orbit_count += 1;
  }
  res.point_class.resize(total);
  for (long long id = 0; id < total; ++id) res.point_class[id] = orbit_class[orbit_of[id]];

  if (check_stability) {
    const ClassifyResult next = fixed_space_classify(cb, a, k + 1, false);
    res.stability_checked = true;
    auto key = [](const ClassifyResult& r) {
      std::vector<std::pair<int, std::vector<int>>> v;
      for (const auto& c : r.classes) v.emplace_back(c.sig.sdim, c.sig.support);
      std::sort(v.begin(), v.end());
      return v;
    };
    res.stable = (res.classes.size() == next.classes.size()) && (key(res) == key(next));
  }
  return res;
}

} // namespace hwb
