#include "hwb/exotic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hwb {

namespace {

// Reduced row echelon basis over F_3 with insertion test.
struct F3Span {
  std::vector<std::vector<int>> rows; // reduced rows
  std::vector<int> pivots;

  bool insert(std::vector<int> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const int c = v[pivots[r]];
      if (c != 0)
        for (size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * rows[r][j]) % 3 + 3) % 3;
    }
    int p = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        p = static_cast<int>(j);
        break;
      }
    if (p < 0) return false;
    const int inv = v[p] == 1 ? 1 : 2;
    for (auto& x : v) x = (x * inv) % 3;
    for (size_t r = 0; r < rows.size(); ++r) {
      const int c = rows[r][p];
      if (c != 0)
        for (size_t j = 0; j < v.size(); ++j)
          rows[r][j] = ((rows[r][j] - c * v[j]) % 3 + 3) % 3;
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  bool contains(std::vector<int> v) const {
    F3Span copy = *this;
    return !copy.insert(std::move(v));
  }
};

// Invert a square matrix over F_3; throws if singular.
std::vector<std::vector<int>> invert_f3(std::vector<std::vector<int>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) throw std::logic_error("singular base-change matrix");
    std::swap(m[sel], m[col]);
    std::swap(inv[sel], inv[col]);
    const int f = m[col][col] == 1 ? 1 : 2;
    for (int j = 0; j < n; ++j) {
      m[col][j] = (m[col][j] * f) % 3;
      inv[col][j] = (inv[col][j] * f) % 3;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const int c = m[i][col];
      for (int j = 0; j < n; ++j) {
        m[i][j] = ((m[i][j] - c * m[col][j]) % 3 + 3) % 3;
        inv[i][j] = ((inv[i][j] - c * inv[col][j]) % 3 + 3) % 3;
      }
    }
  }
  return inv;
}

const std::vector<std::pair<std::string, Weight>>& root_names() {
  static const std::vector<std::pair<std::string, Weight>> names = {
      {"a", {1, 0}},    {"b", {0, 1}},    {"ab", {1, 1}},
      {"2ab", {2, 1}},  {"3ab", {3, 1}},  {"3a2b", {3, 2}},
      {"-a", {-1, 0}},  {"-b", {0, -1}},  {"-ab", {-1, -1}},
      {"-2ab", {-2, -1}}, {"-3ab", {-3, -1}}, {"-3a2b", {-3, -2}},
  };
  return names;
}

} // namespace

G2Geometry::G2Geometry(std::shared_ptr<const GF> field,
                       std::shared_ptr<const ChevalleyBasis> cb)
    : field_(std::move(field)), cb_(std::move(cb)) {
  const RootDatum& d = *cb_->datum;
  if (d.rank() != 2 || d.num_roots() != 12)
    throw std::invalid_argument("G2Geometry requires the G2 datum");
  const int gdim = cb_->dim; // 14

  // Divided powers of every root vector, reduced mod 3.
  divpow_.resize(12);
  for (int g = 0; g < 12; ++g) {
    auto dp = cb_->divided_powers(g, 3);
    divpow_[g].resize(dp.size());
    for (size_t n = 0; n < dp.size(); ++n) {
      divpow_[g][n].assign(gdim, std::vector<long long>(gdim, 0));
      for (int i = 0; i < gdim; ++i)
        for (int j = 0; j < gdim; ++j)
          divpow_[g][n][i][j] = ((dp[n][i][j] % 3) + 3) % 3;
    }
  }

  // g_s: smallest subspace mod 3 containing the short root vectors, stable
  // under ad and all divided powers (a G-submodule).
  F3Span gs;
  std::vector<std::vector<int>> frontier;
  for (int g = 0; g < 12; ++g) {
    if (d.length_class(g) != RootLength::Short) continue;
    std::vector<int> e(gdim, 0);
    e[g] = 1;
    if (gs.insert(e)) frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<int> v = std::move(frontier.back());
    frontier.pop_back();
    auto push = [&](std::vector<int> w) {
      bool nz = false;
      for (int x : w) nz |= (x != 0);
      if (nz && gs.insert(w)) frontier.push_back(std::move(w));
    };
    for (int i = 0; i < gdim; ++i) {
      std::vector<int> w(gdim, 0);
      for (int j = 0; j < gdim; ++j) {
        if (v[j] == 0) continue;
        const auto& col = cb_->table[i][j];
        for (int k = 0; k < gdim; ++k)
          w[k] = ((w[k] + static_cast<int>(col[k]) * v[j]) % 3 + 3) % 3;
      }
      push(std::move(w));
    }
    for (int g = 0; g < 12; ++g)
      for (size_t n = 1; n < divpow_[g].size(); ++n) {
        std::vector<int> w(gdim, 0);
        for (int k = 0; k < gdim; ++k)
          for (int j = 0; j < gdim; ++j)
            w[k] = (w[k] + static_cast<int>(divpow_[g][n][k][j]) * v[j]) % 3;
        push(std::move(w));
      }
  }
  if (static_cast<int>(gs.rows.size()) != 7)
    throw std::logic_error("g_s has unexpected dimension");

  // h_s: the Cartan part of g_s (eliminate the short-root unit vectors).
  std::vector<int> hs;
  for (const auto& row : gs.rows) {
    std::vector<int> v = row;
    for (int g = 0; g < 12; ++g)
      if (d.length_class(g) == RootLength::Short) v[g] = 0;
    for (int g = 0; g < 12; ++g)
      if (v[g] != 0) throw std::logic_error("g_s contains a long-root component");
    bool nz = false;
    for (int x : v) nz |= (x != 0);
    if (nz) {
      if (!hs.empty() && v != hs) throw std::logic_error("h_s not unique");
      hs = v;
    }
  }
  if (hs.empty()) throw std::logic_error("h_s not found");

  // h_l: a Cartan unit vector independent of h_s mod g_s.
  int hl_idx = -1;
  for (int j = 0; j < 2; ++j) {
    std::vector<int> e(gdim, 0);
    e[12 + j] = 1;
    if (!gs.contains(e)) {
      hl_idx = j;
      break;
    }
  }
  if (hl_idx < 0) throw std::logic_error("h_l not found");

  // V coordinates -> summands and local indices; base-change matrix [E|C].
  summand_of_coord_.assign(14, 0);
  gs_local_.assign(14, -1);
  quot_local_.assign(14, -1);
  vbasis_in_g_.assign(14, std::vector<int>(gdim, 0));
  int sloc = 0, qloc = 0;
  for (int g = 0; g < 12; ++g) {
    if (d.length_class(g) == RootLength::Short) {
      summand_of_coord_[g] = 0;
      gs_local_[g] = sloc;
      vbasis_in_g_[sloc][g] = 1;
      ++sloc;
    } else {
      summand_of_coord_[g] = 1;
      quot_local_[g] = qloc;
      vbasis_in_g_[7 + qloc][g] = 1;
      ++qloc;
    }
  }
  summand_of_coord_[HS] = 0;
  gs_local_[HS] = sloc;
  vbasis_in_g_[sloc] = hs;
  summand_of_coord_[HL] = 1;
  quot_local_[HL] = qloc;
  vbasis_in_g_[7 + qloc][12 + hl_idx] = 1;

  std::vector<std::vector<int>> bc(gdim, std::vector<int>(gdim, 0));
  for (int c = 0; c < gdim; ++c)
    for (int rrow = 0; rrow < gdim; ++rrow) bc[rrow][c] = vbasis_in_g_[c][rrow];
  basis_inv_ = invert_f3(std::move(bc));

  // Derivative actions on V.
  lie_v_.resize(gdim);
  for (int i = 0; i < gdim; ++i) {
    std::vector<std::vector<int>> ad(gdim, std::vector<int>(gdim, 0));
    for (int j = 0; j < gdim; ++j)
      for (int k = 0; k < gdim; ++k)
        ad[k][j] = ((static_cast<int>(cb_->table[i][j][k]) % 3) + 3) % 3;
    lie_v_[i] = to_v_matrix(ad);
  }
  divpow_v_.resize(12);
  for (int g = 0; g < 12; ++g)
    for (size_t n = 0; n < divpow_[g].size(); ++n) {
      std::vector<std::vector<int>> m(gdim, std::vector<int>(gdim, 0));
      for (int i = 0; i < gdim; ++i)
        for (int j = 0; j < gdim; ++j) m[i][j] = static_cast<int>(divpow_[g][n][i][j]);
      divpow_v_[g].push_back(to_v_matrix(m));
    }
  root_group_.resize(12);
}

int G2Geometry::summand_of_coord(int c) const { return summand_of_coord_.at(c); }

G2Geometry::Mat G2Geometry::to_v_matrix(const std::vector<std::vector<int>>& g_matrix) const {
  const GF& F = *field_;
  const int n = 14;
  // R = basis_inv * g_matrix * [E|C] in stacked local coordinates.
  Mat tmp(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) {
      int acc = 0;
      for (int j = 0; j < n; ++j)
        if (g_matrix[i][j] != 0 && vbasis_in_g_[c][j] != 0)
          acc = F.add(acc, F.mul(g_matrix[i][j], vbasis_in_g_[c][j]));
      tmp[i][c] = acc;
    }
  Mat R(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) {
      int acc = 0;
      for (int j = 0; j < n; ++j)
        if (basis_inv_[i][j] != 0 && tmp[j][c] != 0)
          acc = F.add(acc, F.mul(basis_inv_[i][j], tmp[j][c]));
      R[i][c] = acc;
    }
  // The map must preserve g_s (first 7 stacked columns -> first 7 rows).
  for (int i = 7; i < n; ++i)
    for (int c = 0; c < 7; ++c)
      if (R[i][c] != 0) throw std::logic_error("action does not preserve g_s");

  Mat out(n, std::vector<int>(n, 0));
  auto stacked = [&](int vc) {
    return summand_of_coord_[vc] == 0 ? gs_local_[vc] : 7 + quot_local_[vc];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (summand_of_coord_[i] == summand_of_coord_[j]) out[i][j] = R[stacked(i)][stacked(j)];
  return out;
}

void G2Geometry::build_root_group(int root_idx) const {
  const GF& F = *field_;
  auto& cache = root_group_[root_idx];
  cache.resize(F.size());
  for (int t = 0; t < F.size(); ++t) {
    std::vector<std::vector<int>> m(14, std::vector<int>(14, 0));
    int tn = 1;
    for (size_t n = 0; n < divpow_[root_idx].size(); ++n) {
      for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) {
          const int e = static_cast<int>(divpow_[root_idx][n][i][j]);
          if (e != 0) m[i][j] = F.add(m[i][j], F.mul(tn, e));
        }
      tn = F.mul(tn, t);
    }
    cache[t] = to_v_matrix(m);
  }
}

const G2Geometry::Mat& G2Geometry::act_root_group(int root_idx, int t) const {
  auto& cache = root_group_.at(root_idx);
  if (cache.empty()) build_root_group(root_idx);
  return cache.at(t);
}

G2Geometry::Mat G2Geometry::torus_matrix(const std::vector<int>& basis_values) const {
  const GF& F = *field_;
  const RootDatum& d = *cb_->datum;
  Mat m(14, std::vector<int>(14, 0));
  for (int g = 0; g < 12; ++g) {
    int v = 1;
    for (int c = 0; c < d.rank(); ++c) v = F.mul(v, F.pow(basis_values.at(c), d.root(g)[c]));
    m[g][g] = v;
  }
  m[HS][HS] = 1;
  m[HL][HL] = 1;
  return m;
}

const G2Geometry::Mat& G2Geometry::lie_action(int basis_idx) const {
  return lie_v_.at(basis_idx);
}

G2Geometry::Vec G2Geometry::apply(const Mat& m, const Vec& v) const {
  const GF& F = *field_;
  Vec out(14, 0);
  for (int j = 0; j < 14; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < 14; ++i)
      if (m[i][j] != 0) out[i] = F.add(out[i], F.mul(m[i][j], v[j]));
  }
  return out;
}

namespace {

// Rank over F of the matrix whose columns are `cols`.
int gf_rank(const GF& F, std::vector<std::vector<int>> cols) {
  if (cols.empty()) return 0;
  const int rows = static_cast<int>(cols[0].size());
  const int ncols = static_cast<int>(cols.size());
  std::vector<std::vector<int>> m(rows, std::vector<int>(ncols, 0));
  for (int j = 0; j < ncols; ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  int row = 0;
  for (int col = 0; col < ncols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    const int inv = F.inv(m[row][col]);
    for (int j = 0; j < ncols; ++j) m[row][j] = F.mul(m[row][j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const int c = m[i][col];
      for (int j = 0; j < ncols; ++j) m[i][j] = F.sub(m[i][j], F.mul(c, m[row][j]));
    }
    ++row;
  }
  return row;
}

} // namespace

namespace {
const std::vector<int>& all_roots12() {
  static const std::vector<int> v = [] {
    std::vector<int> r(12);
    for (int i = 0; i < 12; ++i) r[i] = i;
    return r;
  }();
  return v;
}
} // namespace

// Tangent direction contributed by the root group U_gamma at x: the leading
// (first nonvanishing) divided-power image D_n(x), n = 1..3.  In
// characteristic 3 the naive Lie action misses group directions whose lowest
// term is t^3 (e.g. x_alpha on the g/g_s summand), which would overestimate
// stabilizer dimensions; the leading term is exactly the reduced tangent
// direction of the one-parameter orbit map.
int G2Geometry::stabilizer_dim_in(const Vec& x, const std::vector<int>& root_indices) const {
  std::vector<std::vector<int>> cols;
  const Vec zero(14, 0);
  for (int g : root_indices) {
    for (size_t n = 1; n < divpow_v_[g].size(); ++n) {
      Vec col = apply(divpow_v_[g][n], x);
      if (col != zero) {
        cols.push_back(std::move(col));
        break;
      }
    }
  }
  cols.push_back(apply(lie_v_[12], x));
  cols.push_back(apply(lie_v_[13], x));
  return static_cast<int>(root_indices.size()) + 2 - gf_rank(*field_, std::move(cols));
}

int G2Geometry::stabilizer_dim(const Vec& x) const { return stabilizer_dim_in(x, all_roots12()); }

G2Geometry::BStabResult G2Geometry::b_stabilizer_solve(const Vec& x) const {
  const GF& F = *field_;
  const RootDatum& d = *cb_->datum;
  for (int c = 0; c < 14; ++c)
    if (x[c] != 0 && (c >= 12 || !d.in_negative_system(c)))
      throw std::invalid_argument("b_stabilizer_solve requires support in V^-");

  BStabResult res;
  const std::vector<int>& neg = d.negative_system();

  // Count the unipotent stabilizer by enumerating U = prod U_gamma.
  long long count = 0;
  std::function<void(size_t, const Vec&)> dfs = [&](size_t level, const Vec& v) {
    if (level == neg.size()) {
      if (v == x) ++count;
      return;
    }
    for (int t = 0; t < F.size(); ++t) dfs(level + 1, apply(act_root_group(neg[level], t), v));
  };
  dfs(0, x);
  res.unipotent_count = count;
  int dim = 0;
  long long c = count;
  while (c > 1 && c % F.size() == 0) {
    c /= F.size();
    ++dim;
  }
  if (c != 1) throw std::logic_error("unipotent stabilizer count is not a power of q");
  res.unipotent_dim = dim;

  // Root groups fixing x pointwise.
  for (int g : neg) {
    bool fixes = true;
    for (int t = 1; t < F.size() && fixes; ++t)
      fixes = (apply(act_root_group(g, t), x) == x);
    if (fixes) res.factor_roots.push_back(g);
  }

  // Torus stabilizer rank: corank of the support weights.
  std::vector<Weight> supp;
  for (int g = 0; g < 12; ++g)
    if (x[g] != 0) supp.push_back(d.root(g));
  int wrank = 0;
  {
    // Integer rank of a set of rank-2 weights.
    std::vector<Weight> basis;
    for (const auto& w : supp) {
      if (basis.empty()) {
        if (w[0] != 0 || w[1] != 0) basis.push_back(w);
      } else if (basis.size() == 1) {
        if (static_cast<long long>(basis[0][0]) * w[1] !=
            static_cast<long long>(basis[0][1]) * w[0])
          basis.push_back(w);
      }
    }
    wrank = static_cast<int>(basis.size());
  }
  res.torus_rank = d.rank() - wrank;

  res.t0_fixes = (apply(torus_matrix({F.neg(1), 1}), x) == x);
  return res;
}

std::vector<long long> G2Geometry::fiber_cell_counts(const Vec& x) const {
  const GF& F = *field_;
  const RootDatum& d = *cb_->datum;
  for (int c = 12; c < 14; ++c)
    if (x[c] != 0) throw std::invalid_argument("fiber counting requires support on root lines");

  std::vector<long long> out(d.weyl_order(), 0);
  const bool is_zero = std::all_of(x.begin(), x.end(), [](int c) { return c == 0; });
  for (int w = 0; w < d.weyl_order(); ++w) {
    if (is_zero) {
      // Every point of the cell works: q^{l(w)} flags.
      long long count = 1;
      for (int i = 0; i < d.weyl_length(w); ++i) count *= F.size();
      out[w] = count;
      continue;
    }
    const int wi = d.weyl_inverse(w);
    std::vector<int> cell_roots;
    std::vector<char> allowed(12, 0);
    for (int g : d.negative_system()) {
      if (d.in_negative_system(d.opposite(d.act_on_root(wi, g)))) cell_roots.push_back(g);
      allowed[d.act_on_root(w, g)] = 1;
    }
    allowed[HS] = allowed[HL] = 0;

    // Coordinates a root group can still write to (off-diagonal row support of
    // any of its matrices).  A forbidden coordinate that no remaining level
    // can change must already be zero, which prunes most branches early.
    auto modifiable = [&](int g) {
      std::vector<char> rows(14, 0);
      for (int t = 1; t < F.size(); ++t) {
        const Mat& M = act_root_group(g, t);
        for (int r = 0; r < 14; ++r)
          for (int c = 0; c < 14; ++c)
            if (c != r && M[r][c] != 0) rows[r] = 1;
      }
      return rows;
    };
    // frozen[l] = forbidden coordinates no level >= l can change.
    const size_t L = cell_roots.size();
    std::vector<std::vector<int>> frozen(L + 1);
    std::vector<char> can_change(14, 0);
    for (size_t l = L + 1; l-- > 0;) {
      for (int c = 0; c < 14; ++c)
        if (!allowed[c] && !can_change[c]) frozen[l].push_back(c);
      if (l == 0) break;
      const auto rows = modifiable(cell_roots[l - 1]);
      for (int c = 0; c < 14; ++c) can_change[c] = can_change[c] || rows[c];
    }

    // Level-by-level with state deduplication: distinct translates are far
    // fewer than parameter tuples whenever the stabilizer is positive-dim.
    std::map<Vec, long long> states{{x, 1}};
    for (size_t level = 0; level < L; ++level) {
      std::map<Vec, long long> next;
      for (const auto& [v, mult] : states) {
        bool dead = false;
        for (int c : frozen[level])
          if (v[c] != 0) {
            dead = true;
            break;
          }
        if (dead) continue;
        for (int t = 0; t < F.size(); ++t)
          next[apply(act_root_group(cell_roots[level], t), v)] += mult;
      }
      states = std::move(next);
    }
    long long count = 0;
    for (const auto& [v, mult] : states) {
      bool ok = true;
      for (int c : frozen[L])
        if (v[c] != 0) {
          ok = false;
          break;
        }
      if (ok) count += mult;
    }
    out[w] = count;
  }
  return out;
}

long long G2Geometry::fiber_point_count(const Vec& x) const {
  long long total = 0;
  for (long long c : fiber_cell_counts(x)) total += c;
  return total;
}

G2Geometry::Vec G2Geometry::parse_rep(const std::string& s) const {
  const RootDatum& d = *cb_->datum;
  Vec v(14, 0);
  if (s == "0" || s.empty()) return v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok == "hs") {
      v[HS] = field_->add(v[HS], 1);
      continue;
    }
    if (tok == "hl") {
      v[HL] = field_->add(v[HL], 1);
      continue;
    }
    if (tok.empty() || tok[0] != 'v')
      throw std::invalid_argument("bad representative token: " + tok);
    const std::string name = tok.substr(1);
    bool found = false;
    for (const auto& [nm, wt] : root_names())
      if (nm == name) {
        const auto idx = d.root_index(wt);
        if (!idx) throw std::logic_error("root name without root");
        v[*idx] = field_->add(v[*idx], 1);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown root name: " + name);
  }
  return v;
}

std::string G2Geometry::render(const Vec& v) const {
  const RootDatum& d = *cb_->datum;
  std::string out;
  auto append = [&](const std::string& name, int coeff) {
    if (coeff == 0) return;
    if (!out.empty()) out += "+";
    if (coeff != 1) out += std::to_string(coeff) + "*";
    out += name;
  };
  for (int g = 0; g < 12; ++g) {
    if (v[g] == 0) continue;
    std::string name = "v?";
    for (const auto& [nm, wt] : root_names())
      if (d.root_index(wt) && *d.root_index(wt) == g) {
        name = "v" + nm;
        break;
      }
    append(name, v[g]);
  }
  append("hs", v[HS]);
  append("hl", v[HL]);
  return out.empty() ? "0" : out;
}

std::vector<G2Geometry::OrbitRecord> G2Geometry::orbit_table() {
  return {
      {"0", 14, 1},        {"va", 8, 1},      {"vb", 8, 1},
      {"vab+vb", 6, 1},    {"v2ab+vb", 4, 2}, {"va+vb", 2, 1},
  };
}

bool fits_nonneg_polynomial(long long at3, long long at9, int max_deg) {
  std::function<bool(int, long long, long long)> rec = [&](int deg, long long c3,
                                                           long long c9) -> bool {
    if (deg < 0) return c3 == 0 && c9 == 0;
    long long p3 = 1, p9 = 1;
    for (int i = 0; i < deg; ++i) {
      p3 *= 3;
      p9 *= 9;
    }
    const long long hi = std::min(c3 / p3, c9 / p9);
    for (long long a = hi; a >= 0; --a)
      if (rec(deg - 1, c3 - a * p3, c9 - a * p9)) return true;
    return false;
  };
  return rec(max_deg, at3, at9);
}

} // namespace hwb
