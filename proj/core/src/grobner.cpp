#include "hwb/grobner.hpp"

#include <algorithm>
#include <stdexcept>

namespace hwb {

bool degrevlex_less(const Expo& a, const Expo& b) {
  int da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

void Poly::add(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto [it, ins] = terms.emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

const Expo& Poly::lead() const {
  if (terms.empty()) throw std::logic_error("lead() of zero polynomial");
  return terms.begin()->first;
}

const Rat& Poly::lead_coeff() const {
  if (terms.empty()) throw std::logic_error("lead_coeff() of zero polynomial");
  return terms.begin()->second;
}

Poly Poly::scaled(const Rat& c) const {
  Poly p;
  if (c == 0) return p;
  for (const auto& [e, v] : terms) p.terms.emplace(e, v * c);
  return p;
}

Poly Poly::times_mono(const Expo& e, const Rat& c) const {
  Poly p;
  if (c == 0) return p;
  for (const auto& [t, v] : terms) {
    Expo s = t;
    for (size_t i = 0; i < s.size(); ++i) s[i] += e[i];
    p.terms.emplace(std::move(s), v * c);
  }
  return p;
}

void Poly::sub_scaled_shifted(const Poly& g, const Expo& e, const Rat& c) {
  Expo s(e.size());
  for (const auto& [t, v] : g.terms) {
    for (size_t i = 0; i < s.size(); ++i) s[i] = t[i] + e[i];
    add(s, -v * c);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  for (const auto& [e, c] : o.terms) p.add(e, c);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  for (const auto& [e, c] : o.terms) p.add(e, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      Expo e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      p.add(e, c1 * c2);
    }
  return p;
}

namespace {

bool divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo lcm_expo(const Expo& a, const Expo& b) {
  Expo e(a.size());
  for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

bool coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

} // namespace

namespace {

// Scale to an integer polynomial with content 1 and positive leading
// coefficient; keeps coefficient growth in check across the algorithm.
Poly make_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Int den(1);
  for (const auto& [e, c] : p.terms) den = lcm(den, denominator(c));
  Int num(0);
  for (const auto& [e, c] : p.terms) num = gcd(num, numerator(c) * (den / denominator(c)));
  Rat f(den, num);
  if (p.lead_coeff() < 0) f = -f;
  return p.scaled(f);
}

} // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem;
  Poly work = f;
  while (!work.is_zero()) {
    const Expo lt = work.lead();
    const Rat lc = work.lead_coeff();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const Expo& glt = g.lead();
      if (!divides(glt, lt)) continue;
      Expo q = lt;
      for (size_t i = 0; i < q.size(); ++i) q[i] -= glt[i];
      work.sub_scaled_shifted(g, q, lc / g.lead_coeff());
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add(lt, lc);
      work.terms.erase(lt);
    }
  }
  return rem;
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
  std::vector<Poly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(make_primitive(g));

  struct Pair {
    int i, j;
    Expo lcm;
  };
  std::vector<Pair> pairs;
  auto push_pair = [&](int i, int j) {
    const Expo &li = G[i].lead(), &lj = G[j].lead();
    if (coprime(li, lj)) return; // Buchberger's first criterion
    pairs.push_back({i, j, lcm_expo(li, lj)});
  };
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  while (!pairs.empty()) {
    // Normal selection: the pair with the degrevlex-smallest lcm first.
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (degrevlex_less(pairs[k].lcm, pairs[best].lcm)) best = k;
    const auto [i, j, l] = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    const Expo &li = G[i].lead(), &lj = G[j].lead();
    Expo qi = l, qj = l;
    for (size_t v = 0; v < l.size(); ++v) {
      qi[v] -= li[v];
      qj[v] -= lj[v];
    }
    Poly s = G[i].times_mono(qi, Rat(1) / G[i].lead_coeff());
    s.sub_scaled_shifted(G[j], qj, Rat(1) / G[j].lead_coeff());
    Poly r = reduce(s, G);
    if (!r.is_zero()) {
      const int n = static_cast<int>(G.size());
      G.push_back(make_primitive(r));
      for (int k = 0; k < n; ++k) push_pair(k, n);
      if (G.size() > 500) throw std::runtime_error("Groebner basis runaway");
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(G[j].lead(), G[i].lead()) &&
          !(G[i].lead() == G[j].lead() && j > i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Fully reduce each element against the others.
  std::vector<Poly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.scaled(Rat(1) / r.lead_coeff()));
  }
  return out;
}

std::vector<Expo> standard_monomials(const std::vector<Poly>& basis, int nvars, int bound) {
  std::vector<Expo> leads;
  for (const auto& g : basis) leads.push_back(g.lead());
  auto is_standard = [&](const Expo& e) {
    for (const auto& l : leads)
      if (divides(l, e)) return false;
    return true;
  };
  std::vector<Expo> out;
  std::vector<Expo> frontier{Expo(nvars, 0)};
  std::map<Expo, char> seen;
  seen[frontier[0]] = 1;
  while (!frontier.empty()) {
    Expo e = frontier.back();
    frontier.pop_back();
    if (!is_standard(e)) continue;
    out.push_back(e);
    if (static_cast<int>(out.size()) > bound)
      throw std::runtime_error("quotient dimension exceeds bound; ideal not zero-dimensional?");
    for (int v = 0; v < nvars; ++v) {
      Expo f = e;
      ++f[v];
      if (!seen.count(f)) {
        seen[f] = 1;
        frontier.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end(), degrevlex_less);
  return out;
}

} // namespace hwb
