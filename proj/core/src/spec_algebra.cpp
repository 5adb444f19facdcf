#include "hwb/spec_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hwb {

namespace {

Rat pow_rat(const Rat& base, long long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  long long n = e > 0 ? e : -e;
  Rat out(1);
  while (n > 0) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

Rat eval_weight(const std::vector<Rat>& s, const Weight& wt) {
  Rat out(1);
  for (size_t j = 0; j < s.size(); ++j) out *= pow_rat(s[j], wt[j]);
  return out;
}

// Laurent monomial e^{wt} as a monomial in (x_1..x_r, z) with z x_1...x_r = 1.
Expo expo_of_weight(const Weight& wt) {
  int c = 0;
  for (int v : wt) c = std::max(c, -v);
  Expo e(wt.size() + 1, c);
  for (size_t j = 0; j < wt.size(); ++j) e[j] = wt[j] + c;
  return e;
}

// Row-reduce in place; returns pivot columns.  Rows may be zeroed.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    const Rat inv = Rat(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (int c = 0; c < cols; ++c) m[i][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Kernel basis (vectors of length cols) of the row-major matrix.
std::vector<std::vector<Rat>> gauss_kernel(std::vector<std::vector<Rat>> m, int cols) {
  std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rat>> kernel;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

} // namespace

QuotientRing::QuotientRing(std::shared_ptr<const RootDatum> datum, std::vector<Rat> s_point)
    : datum_(std::move(datum)), s_point_(std::move(s_point)) {
  const int r = datum_->rank();
  if (static_cast<int>(s_point_.size()) != r)
    throw std::invalid_argument("s_point has wrong length");
  for (const Rat& v : s_point_)
    if (v == 0) throw std::invalid_argument("s_point coordinates must be nonzero");
  const int nvars = r + 1;
  const int nW = datum_->weyl_order();

  // Generator weights: fundamental weights when integral, else the lattice
  // basis itself; the orbit sums of these generate the invariants.
  std::vector<Weight> weights;
  for (const auto& fw : datum_->fundamental_weights())
    if (fw) weights.push_back(*fw);
  if (static_cast<int>(weights.size()) != r) {
    weights.clear();
    for (int j = 0; j < r; ++j) {
      Weight e(r, 0);
      e[j] = 1;
      weights.push_back(e);
    }
  }

  for (int attempt = 0; attempt < 2; ++attempt) {
    inv_weights_ = weights;
    std::vector<Poly> gens;
    for (const Weight& lam : inv_weights_) {
      Poly p;
      Rat chi(0);
      for (const Weight& mu : datum_->weyl_orbit(lam)) {
        p.add(expo_of_weight(mu), Rat(1));
        chi += eval_weight(s_point_, mu);
      }
      p.add(Expo(nvars, 0), -chi);
      gens.push_back(std::move(p));
    }
    Poly rel; // z * x_1...x_r - 1
    rel.add(Expo(nvars, 1), Rat(1));
    rel.add(Expo(nvars, 0), Rat(-1));
    gens.push_back(std::move(rel));

    gb_ = groebner_basis(std::move(gens));
    basis_ = standard_monomials(gb_, nvars, nW);
    if (static_cast<int>(basis_.size()) == nW) break;
    if (attempt == 1)
      throw std::runtime_error("quotient dimension != |W|");
    // Enlarge the generating set with the basis-weight orbit sums and retry.
    for (int j = 0; j < r; ++j) {
      Weight e(r, 0);
      e[j] = 1;
      if (std::find(weights.begin(), weights.end(), e) == weights.end())
        weights.push_back(e);
    }
  }

  basis_index_.clear();
  for (size_t b = 0; b < basis_.size(); ++b) basis_index_[basis_[b]] = static_cast<int>(b);

  mult_matrix_.assign(nvars, std::vector<std::vector<Rat>>(basis_.size()));
  for (int v = 0; v < nvars; ++v)
    for (size_t b = 0; b < basis_.size(); ++b) {
      Expo e = basis_[b];
      ++e[v];
      Poly p;
      p.add(e, Rat(1));
      mult_matrix_[v][b] = reduce_poly_to_coords(p);
    }
}

std::vector<Rat> QuotientRing::reduce_poly_to_coords(const Poly& p) const {
  const Poly r = reduce(p, gb_);
  std::vector<Rat> out(basis_.size(), Rat(0));
  for (const auto& [e, c] : r.terms) {
    auto it = basis_index_.find(e);
    if (it == basis_index_.end())
      throw std::logic_error("normal form outside the standard-monomial span");
    out[it->second] = c;
  }
  return out;
}

Weight QuotientRing::basis_weight(int b) const {
  const Expo& e = basis_.at(b);
  const int r = datum_->rank();
  Weight wt(r);
  for (int j = 0; j < r; ++j) wt[j] = e[j] - e[r];
  return wt;
}

const std::vector<Rat>& QuotientRing::nf_weight(const Weight& wt) const {
  auto it = nf_cache_.find(wt);
  if (it != nf_cache_.end()) return it->second;

  const int r = datum_->rank();
  int c = 0;
  for (int v : wt) c = std::max(c, -v);

  // e^{wt} = z^c * prod_j x_j^{wt_j + c}
  std::vector<Rat> v(basis_.size(), Rat(0));
  v[basis_index_.at(Expo(r + 1, 0))] = Rat(1);
  auto apply = [&](int var, int times) {
    for (int t = 0; t < times; ++t) {
      std::vector<Rat> next(basis_.size(), Rat(0));
      for (size_t b = 0; b < basis_.size(); ++b) {
        if (v[b] == 0) continue;
        const auto& col = mult_matrix_[var][b];
        for (size_t k = 0; k < col.size(); ++k)
          if (col[k] != 0) next[k] += v[b] * col[k];
      }
      v = std::move(next);
    }
  };
  for (int j = 0; j < r; ++j) apply(j, wt[j] + c);
  apply(r, c);

  return nf_cache_.emplace(wt, std::move(v)).first->second;
}

std::vector<Rat> QuotientRing::reduce_element(const GroupAlgebraElement& f) const {
  std::vector<Rat> out(basis_.size(), Rat(0));
  for (const auto& [m, c] : f.terms()) {
    for (int q : m.qe)
      if (q != 0)
        throw std::invalid_argument("reduce_element requires specialized coefficients");
    const auto& nf = nf_weight(Weight(m.wt.begin(), m.wt.end()));
    for (size_t k = 0; k < nf.size(); ++k)
      if (nf[k] != 0) out[k] += c * nf[k];
  }
  return out;
}

bool QuotientRing::is_reduced() const {
  const int n = dim();
  // Product coordinates m(b,c) via the multiplication matrices.
  std::vector<std::vector<std::vector<Rat>>> prod(n);
  for (int b = 0; b < n; ++b) {
    prod[b].resize(n);
    for (int c = 0; c < n; ++c) {
      std::vector<Rat> v(n, Rat(0));
      v[b] = Rat(1);
      const Expo& e = basis_[c];
      for (size_t var = 0; var < e.size(); ++var)
        for (int t = 0; t < e[var]; ++t) {
          std::vector<Rat> next(n, Rat(0));
          for (int i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            const auto& col = mult_matrix_[var][i];
            for (int k = 0; k < n; ++k)
              if (col[k] != 0) next[k] += v[i] * col[k];
          }
          v = std::move(next);
        }
      prod[b][c] = std::move(v);
    }
  }
  std::vector<Rat> tr(n, Rat(0));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) tr[b] += prod[b][c][c];
  std::vector<std::vector<Rat>> B(n, std::vector<Rat>(n, Rat(0)));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k)
        if (prod[b][c][k] != 0) B[b][c] += prod[b][c][k] * tr[k];
  return static_cast<int>(rref(B).size()) == n;
}

std::vector<std::vector<Rat>> orbit_points(const RootDatum& d, const std::vector<Rat>& s) {
  std::vector<std::vector<Rat>> out;
  for (int w = 0; w < d.weyl_order(); ++w) {
    const int wi = d.weyl_inverse(w);
    std::vector<Rat> p(d.rank());
    for (int j = 0; j < d.rank(); ++j) {
      Weight e(d.rank(), 0);
      e[j] = 1;
      p[j] = eval_weight(s, d.act(wi, e));
    }
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Rat> FiniteDimAlgebra::multiply(const std::vector<Rat>& a,
                                            const std::vector<Rat>& b) const {
  std::vector<Rat> out(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Rat f = a[i] * b[j];
      for (const auto& [k, c] : sc[i][j]) out[k] += f * c;
    }
  }
  return out;
}

bool FiniteDimAlgebra::check_associativity(int trials, std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> idx(0, dim - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto rand_vec = [&]() {
    std::vector<Rat> v(dim, Rat(0));
    for (int t = 0; t < 3; ++t) v[idx(rng)] += Rat(coeff(rng));
    return v;
  };
  for (int t = 0; t < trials; ++t) {
    const auto a = rand_vec(), b = rand_vec(), c = rand_vec();
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return false;
    if (multiply(unit, a) != a || multiply(a, unit) != a) return false;
  }
  return true;
}

SimpleCountResult count_simples(const FiniteDimAlgebra& A) {
  const int n = A.dim;
  SimpleCountResult res;
  res.dim = n;

  // Trace of left multiplication by each basis vector.
  std::vector<Rat> tau(n, Rat(0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (const auto& [idx, c] : A.sc[k][j])
        if (idx == j) tau[k] += c;

  // Trace form B_ij = tr(L_{e_i e_j}); radical = ker B.
  std::vector<std::vector<Rat>> B(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : A.sc[i][j]) B[i][j] += c * tau[k];

  std::vector<std::vector<Rat>> rad = gauss_kernel(B, n);
  res.radical_dim = static_cast<int>(rad.size());

  // Put the radical in RREF; quotient coordinates are the non-pivot entries.
  std::vector<int> pivots = rref(rad);
  std::vector<char> is_pivot(n, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const int nq = static_cast<int>(free_cols.size());

  auto project = [&](const std::vector<Rat>& v) {
    // v minus its radical component, read off on the free coordinates.
    std::vector<Rat> w = v;
    for (size_t r = 0; r < pivots.size(); ++r) {
      const Rat f = w[pivots[r]];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) w[c] -= f * rad[r][c];
    }
    std::vector<Rat> out(nq);
    for (int c = 0; c < nq; ++c) out[c] = w[free_cols[c]];
    return out;
  };
  auto lift = [&](const std::vector<Rat>& y) {
    std::vector<Rat> v(n, Rat(0));
    for (int c = 0; c < nq; ++c) v[free_cols[c]] = y[c];
    return v;
  };

  // Center of A/rad: commutant of the generator images.
  std::vector<std::vector<Rat>> gens = A.generators;
  if (gens.empty())
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = Rat(1);
      gens.push_back(std::move(e));
    }

  std::vector<std::vector<Rat>> C; // rows: constraints, cols: nq unknowns
  C.assign(gens.size() * nq, std::vector<Rat>(nq, Rat(0)));
  for (int u = 0; u < nq; ++u) {
    std::vector<Rat> y(nq, Rat(0));
    y[u] = Rat(1);
    const std::vector<Rat> v = lift(y);
    for (size_t g = 0; g < gens.size(); ++g) {
      std::vector<Rat> comm = A.multiply(gens[g], v);
      const std::vector<Rat> rg = A.multiply(v, gens[g]);
      for (int c = 0; c < n; ++c) comm[c] -= rg[c];
      const std::vector<Rat> pc = project(comm);
      for (int row = 0; row < nq; ++row) C[g * nq + row][u] = pc[row];
    }
  }
  res.simple_count = static_cast<int>(gauss_kernel(std::move(C), nq).size());
  return res;
}

// ---------------------------------------------------------------------------

FiniteDimAlgebra build_specialized(std::shared_ptr<const RootDatum> datum,
                                   const ParameterFunction& params,
                                   const std::vector<Rat>& s_point,
                                   const std::vector<Rat>& q_values) {
  if (static_cast<int>(q_values.size()) != params.num_params())
    throw std::invalid_argument("wrong number of parameter values");
  for (const Rat& q : q_values)
    if (q == 0) throw std::invalid_argument("parameter values must be nonzero");

  HeckeContext base{datum, params, q_values};
  auto ctx = std::make_shared<const HeckeContext>(std::move(base));

  QuotientRing QR(datum, s_point);
  const int nW = datum->weyl_order();
  const int nb = QR.dim();
  const int dim = nW * nb;
  const int nparams = params.num_params();

  FiniteDimAlgebra A;
  A.dim = dim;
  A.sc.assign(dim, std::vector<SparseVec>(dim));

  // Pure T_w T_u products (coefficients rational after specialization).
  std::vector<Rat> q_simple(datum->num_simple());
  for (int i = 0; i < datum->num_simple(); ++i)
    q_simple[i] = q_values[params.param_of_simple(*datum, i)];
  std::vector<std::vector<SparseVec>> tprod(nW, std::vector<SparseVec>(nW));
  for (int w = 0; w < nW; ++w)
    for (int u = 0; u < nW; ++u) {
      std::map<int, Rat> acc{{w, Rat(1)}};
      for (int s : datum->weyl(u).word) {
        std::map<int, Rat> next;
        const int sw = datum->simple_reflection(s);
        for (const auto& [v, c] : acc) {
          const int vs = datum->weyl_mul(v, sw);
          if (datum->weyl_length(vs) > datum->weyl_length(v)) {
            next[vs] += c;
          } else {
            next[v] += c * (q_simple[s] - 1);
            next[vs] += c * q_simple[s];
          }
        }
        for (auto it = next.begin(); it != next.end();)
          it = it->second == 0 ? next.erase(it) : std::next(it);
        acc = std::move(next);
      }
      for (const auto& [v, c] : acc) tprod[w][u].emplace_back(v, c);
    }

  // e^{mu_b} T_{w2} in normal form sum_u T_u g_u, for every basis monomial.
  const std::vector<int> qe0(nparams, 0);
  std::vector<std::vector<HeckeElement>> emu_t(nb, std::vector<HeckeElement>(nW));
  for (int b = 0; b < nb; ++b) {
    HeckeElement h = HeckeElement::theta(
        ctx, GroupAlgebraElement::monomial(QR.basis_weight(b), qe0));
    for (int w2 = 0; w2 < nW; ++w2) {
      HeckeElement cur = h;
      for (int s : datum->weyl(w2).word) cur = cur.mul_right_Ts(s);
      emu_t[b][w2] = std::move(cur);
    }
  }

  // (T_w e^{mu_bu})(T_{w2} e^{nu_bv}) = sum_{u2} (T_w T_{u2})(g_{u2} e^{nu_bv}).
  for (int bu = 0; bu < nb; ++bu)
    for (int w2 = 0; w2 < nW; ++w2) {
      const HeckeElement& h = emu_t[bu][w2];
      for (int bv = 0; bv < nb; ++bv) {
        const GroupAlgebraElement env =
            GroupAlgebraElement::monomial(QR.basis_weight(bv), qe0);
        std::map<int, std::vector<Rat>> red;
        for (const auto& [u2, g] : h.coords()) {
          std::vector<Rat> coords = QR.reduce_element(g * env);
          bool nonzero = false;
          for (const Rat& c : coords)
            if (c != 0) {
              nonzero = true;
              break;
            }
          if (nonzero) red.emplace(u2, std::move(coords));
        }
        for (int w = 0; w < nW; ++w) {
          const int i = w * nb + bu;
          const int j = w2 * nb + bv;
          std::vector<Rat> acc(dim, Rat(0));
          for (const auto& [u2, coords] : red)
            for (const auto& [v, c] : tprod[w][u2])
              for (int k = 0; k < nb; ++k)
                if (coords[k] != 0) acc[v * nb + k] += c * coords[k];
          SparseVec& out = A.sc[i][j];
          for (int k = 0; k < dim; ++k)
            if (acc[k] != 0) out.emplace_back(k, std::move(acc[k]));
        }
      }
    }

  const int b0 = [&]() {
    for (int b = 0; b < nb; ++b) {
      const Expo& e = QR.basis()[b];
      if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) return b;
    }
    throw std::logic_error("monomial 1 missing from the standard basis");
  }();

  A.unit.assign(dim, Rat(0));
  A.unit[0 * nb + b0] = Rat(1);

  // Algebra generators: the T_{s_i} and the theta images of the lattice basis.
  for (int i = 0; i < datum->num_simple(); ++i) {
    std::vector<Rat> g(dim, Rat(0));
    g[datum->simple_reflection(i) * nb + b0] = Rat(1);
    A.generators.push_back(std::move(g));
    A.labels.push_back("T_s" + std::to_string(i));
  }
  for (int j = 0; j < datum->rank(); ++j) {
    Weight e(datum->rank(), 0);
    e[j] = 1;
    const std::vector<Rat>& nf = QR.nf_weight(e);
    std::vector<Rat> g(dim, Rat(0));
    for (int k = 0; k < nb; ++k) g[0 * nb + k] = nf[k];
    A.generators.push_back(std::move(g));
    A.labels.push_back("theta_" + datum->basis_names()[j]);
  }

  return A;
}

} // namespace hwb
