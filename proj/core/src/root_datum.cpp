#include "hwb/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hwb/rational.hpp"

namespace hwb {

namespace {

// Solve M x = b exactly over the rationals; M square and invertible.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
  const int n = static_cast<int>(M.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (M[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::runtime_error("singular matrix in root-datum solve");
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    const Rat inv = Rat(1) / M[col][col];
    for (int j = col; j < n; ++j) M[col][j] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Rat f = M[r][col];
      for (int j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

bool rat_is_int(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }
int rat_to_int(const Rat& r) {
  return static_cast<int>(boost::multiprecision::numerator(r).convert_to<long long>());
}

} // namespace

long long RootDatum::pairing(const Weight& lambda, int idx) const {
  const auto& f = coroots_.at(idx);
  long long acc = 0;
  for (int j = 0; j < rank_; ++j) acc += static_cast<long long>(f[j]) * lambda[j];
  return acc;
}

Weight RootDatum::reflect(int root_idx, const Weight& lambda) const {
  const long long p = pairing(lambda, root_idx);
  Weight out = lambda;
  const Weight& a = roots_.at(root_idx);
  for (int j = 0; j < rank_; ++j) out[j] -= static_cast<int>(p) * a[j];
  return out;
}

std::optional<int> RootDatum::root_index(const Weight& v) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots_[i] == v) return i;
  return std::nullopt;
}

Weight RootDatum::act(int w, const Weight& lambda) const {
  const auto& m = weyl_.at(w).matrix;
  Weight out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += m[i * rank_ + j] * lambda[j];
  return out;
}

int RootDatum::act_on_root(int w, int root_idx) const {
  auto idx = root_index(act(w, roots_.at(root_idx)));
  if (!idx) throw std::runtime_error("Weyl action did not permute the roots");
  return *idx;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& lambda) const {
  std::set<Weight> seen;
  for (int w = 0; w < weyl_order(); ++w) seen.insert(act(w, lambda));
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<int> RootDatum::root_orbit(int root_idx) const {
  std::set<int> seen;
  for (int w = 0; w < weyl_order(); ++w) seen.insert(act_on_root(w, root_idx));
  return std::vector<int>(seen.begin(), seen.end());
}

int RootDatum::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  const int g = weyl_mul(simple_refl_.at(i), simple_refl_.at(j));
  int m = 1, cur = g;
  while (cur != weyl_identity()) {
    cur = weyl_mul(cur, g);
    ++m;
    if (m > 64) throw std::runtime_error("runaway Coxeter order");
  }
  return m;
}

std::vector<std::optional<Weight>> RootDatum::fundamental_weights() const {
  const int n = num_simple();
  std::vector<std::optional<Weight>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
    std::vector<Rat> b(n, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) M[r][c] = coroots_[simple_[r]][c];
    b[i] = 1;
    auto x = solve_linear(M, b);
    bool integral = true;
    Weight w(n, 0);
    for (int j = 0; j < n; ++j) {
      if (!rat_is_int(x[j])) { integral = false; break; }
      w[j] = rat_to_int(x[j]);
    }
    if (integral)
      out.emplace_back(std::move(w));
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

RootDatum RootDatum::build(int rank, std::vector<std::string> basis_names,
                           std::vector<Weight> simple_roots,
                           std::vector<std::vector<int>> cartan) {
  if (rank <= 0) throw std::runtime_error("rank must be positive");
  const int ns = static_cast<int>(simple_roots.size());
  if (static_cast<int>(cartan.size()) != ns || ns != rank)
    throw std::runtime_error("need exactly `rank` simple roots and a square Cartan matrix");
  for (int i = 0; i < ns; ++i)
    if (cartan[i][i] != 2) throw std::runtime_error("Cartan diagonal must be 2");

  RootDatum d;
  d.rank_ = rank;
  d.basis_names_ = std::move(basis_names);
  d.cartan_ = cartan;
  if (static_cast<int>(d.basis_names_.size()) != rank)
    throw std::runtime_error("basis name count must equal rank");

  // Simple coroot functionals f_i satisfy f_i · alpha_j = C[i][j]; solve
  // f_i = C_i · S^{-1} where S has the simple roots as columns.
  std::vector<std::vector<int>> simple_functionals(ns, std::vector<int>(rank, 0));
  for (int i = 0; i < ns; ++i) {
    std::vector<std::vector<Rat>> M(rank, std::vector<Rat>(rank));
    std::vector<Rat> b(rank, 0);
    // Solve S^T f = C_i row (so f · alpha_j = C[i][j]).
    for (int r = 0; r < rank; ++r)
      for (int c = 0; c < rank; ++c) M[r][c] = simple_roots[r][c];
    for (int r = 0; r < ns; ++r) b[r] = cartan[i][r];
    auto f = solve_linear(M, b);
    for (int j = 0; j < rank; ++j) {
      if (!rat_is_int(f[j]))
        throw std::runtime_error("coroot functional is not integral on X*; invalid datum");
      simple_functionals[i][j] = rat_to_int(f[j]);
    }
  }

  d.generate_roots(simple_roots, simple_functionals);
  d.classify_lengths();
  d.enumerate_weyl();
  d.validate();
  return d;
}

void RootDatum::generate_roots(const std::vector<Weight>& simples,
                               const std::vector<std::vector<int>>& simple_functionals) {
  const int ns = static_cast<int>(simples.size());
  std::map<Weight, int> index_of;
  auto add = [&](const Weight& r, const std::vector<int>& f) -> int {
    auto it = index_of.find(r);
    if (it != index_of.end()) return it->second;
    const int idx = static_cast<int>(roots_.size());
    roots_.push_back(r);
    coroots_.push_back(f);
    index_of.emplace(r, idx);
    if (roots_.size() > 1000)
      throw std::runtime_error("root closure did not terminate; non-crystallographic input");
    return idx;
  };
  for (int i = 0; i < ns; ++i) simple_.push_back(add(simples[i], simple_functionals[i]));

  // Reflection closure: s_i(r) = r - f_i(r) * alpha_i, and the functional of
  // the image is f_r composed with s_i.
  for (size_t head = 0; head < roots_.size(); ++head) {
    for (int i = 0; i < ns; ++i) {
      const Weight r = roots_[head];
      const std::vector<int> fr = coroots_[head];
      long long pi = 0;
      for (int j = 0; j < rank_; ++j) pi += static_cast<long long>(simple_functionals[i][j]) * r[j];
      Weight img = r;
      for (int j = 0; j < rank_; ++j) img[j] -= static_cast<int>(pi) * simples[i][j];
      long long fa = 0; // f_r(alpha_i)
      for (int j = 0; j < rank_; ++j) fa += static_cast<long long>(fr[j]) * simples[i][j];
      std::vector<int> fimg(rank_, 0);
      for (int j = 0; j < rank_; ++j)
        fimg[j] = fr[j] - static_cast<int>(fa) * simple_functionals[i][j];
      add(img, fimg);
    }
  }

  // Opposites and the "negative system" (non-negative simple-root combinations).
  opposite_.assign(num_roots(), -1);
  neg_flag_.assign(num_roots(), 0);
  for (int i = 0; i < num_roots(); ++i) {
    Weight neg = roots_[i];
    for (auto& c : neg) c = -c;
    auto it = index_of.find(neg);
    if (it == index_of.end()) throw std::runtime_error("roots do not come in +/- pairs");
    opposite_[i] = it->second;

    std::vector<std::vector<Rat>> M(rank_, std::vector<Rat>(rank_));
    std::vector<Rat> b(rank_);
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < static_cast<int>(simple_.size()); ++c)
        M[r][c] = roots_[simple_[c]][r];
    for (int r = 0; r < rank_; ++r) b[r] = roots_[i][r];
    auto coords = solve_linear(M, b);
    bool nonneg = true;
    for (auto& c : coords)
      if (c < 0) { nonneg = false; break; }
    if (nonneg) {
      neg_flag_[i] = 1;
      negative_system_.push_back(i);
    }
  }
  if (2 * negative_system_.size() != roots_.size())
    throw std::runtime_error("negative system does not contain half of the roots");

  // Coroot coordinates in the simple-coroot basis.
  coroot_coords_.resize(num_roots());
  for (int i = 0; i < num_roots(); ++i) {
    std::vector<std::vector<Rat>> M(rank_, std::vector<Rat>(rank_));
    std::vector<Rat> b(rank_);
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < static_cast<int>(simple_.size()); ++c)
        M[r][c] = simple_functionals[c][r];
    for (int r = 0; r < rank_; ++r) b[r] = coroots_[i][r];
    auto coords = solve_linear(M, b);
    std::vector<int> ic(rank_, 0);
    for (int j = 0; j < rank_; ++j) {
      if (!rat_is_int(coords[j])) throw std::runtime_error("coroot not in coroot lattice");
      ic[j] = rat_to_int(coords[j]);
    }
    coroot_coords_[i] = std::move(ic);
  }
}

void RootDatum::classify_lengths() {
  // Symmetrizer d_i with d_i C[i][j] = d_j C[j][i]; propagate along the
  // Coxeter graph.  Roots inherit the class of any simple root in their
  // W-orbit (every root is conjugate to a simple one).
  const int ns = num_simple();
  std::vector<Rat> dsym(ns, 0);
  dsym[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        if (dsym[i] != 0 && dsym[j] == 0) {
          dsym[j] = dsym[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
          changed = true;
        }
      }
  }
  for (int i = 0; i < ns; ++i)
    if (dsym[i] == 0) dsym[i] = 1; // disconnected component: default scale
  const Rat dmin = *std::min_element(dsym.begin(), dsym.end());

  // Assign per simple root, then spread via reflection closure (orbit of a
  // root under the generated reflections preserves length).
  lengths_.assign(num_roots(), RootLength::Short);
  std::vector<char> known(num_roots(), 0);
  for (int i = 0; i < ns; ++i) {
    lengths_[simple_[i]] = (dsym[i] == dmin) ? RootLength::Short : RootLength::Long;
    known[simple_[i]] = 1;
  }
  bool again = true;
  while (again) {
    again = false;
    for (int r = 0; r < num_roots(); ++r) {
      if (!known[r]) continue;
      for (int i = 0; i < ns; ++i) {
        Weight img = reflect(simple_[i], roots_[r]);
        int idx = *root_index(img);
        if (!known[idx]) {
          lengths_[idx] = lengths_[r];
          known[idx] = 1;
          again = true;
        }
      }
      int op = opposite_[r];
      if (!known[op]) {
        lengths_[op] = lengths_[r];
        known[op] = 1;
        again = true;
      }
    }
  }
  for (auto k : known)
    if (!k) throw std::runtime_error("length classification incomplete");
}

void RootDatum::enumerate_weyl() {
  const int ns = num_simple();
  const int r = rank_;
  // Simple reflection matrices (row-major).
  std::vector<std::vector<int>> smat(ns, std::vector<int>(r * r, 0));
  for (int i = 0; i < ns; ++i) {
    const auto& a = roots_[simple_[i]];
    const auto& f = coroots_[simple_[i]];
    for (int row = 0; row < r; ++row)
      for (int col = 0; col < r; ++col)
        smat[i][row * r + col] = (row == col ? 1 : 0) - f[col] * a[row];
  }
  auto matmul = [&](const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> C(r * r, 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j) C[i * r + j] += A[i * r + k] * B[k * r + j];
    return C;
  };
  auto length_of = [&](const std::vector<int>& M) {
    int l = 0;
    for (int idx : negative_system_) {
      Weight img(r, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) img[i] += M[i * r + j] * roots_[idx][j];
      auto found = root_index(img);
      if (!found) throw std::runtime_error("reflection image is not a root");
      if (!neg_flag_[*found]) ++l;
    }
    return l;
  };

  std::map<std::vector<int>, int> index_of;
  std::vector<int> identity(r * r, 0);
  for (int i = 0; i < r; ++i) identity[i * r + i] = 1;
  weyl_.push_back(WeylElement{{}, identity, 0});
  index_of[identity] = 0;

  // Breadth-first by length; candidate words are i :: word(w), keep lex-least.
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::map<std::vector<int>, std::vector<int>> best_word; // matrix -> word
    for (int widx : frontier) {
      for (int i = 0; i < ns; ++i) {
        auto M = matmul(smat[i], weyl_[widx].matrix);
        if (index_of.count(M)) continue;
        if (length_of(M) != weyl_[widx].length + 1) continue;
        std::vector<int> word;
        word.reserve(weyl_[widx].word.size() + 1);
        word.push_back(i);
        word.insert(word.end(), weyl_[widx].word.begin(), weyl_[widx].word.end());
        auto it = best_word.find(M);
        if (it == best_word.end() || word < it->second) best_word[M] = std::move(word);
      }
    }
    std::vector<int> next;
    for (auto& [M, word] : best_word) {
      const int idx = static_cast<int>(weyl_.size());
      weyl_.push_back(WeylElement{word, M, static_cast<int>(word.size())});
      index_of[M] = idx;
      next.push_back(idx);
    }
    frontier = std::move(next);
    if (weyl_.size() > 100000) throw std::runtime_error("Weyl group too large");
  }

  const int n = weyl_order();
  mul_table_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto M = matmul(weyl_[a].matrix, weyl_[b].matrix);
      auto it = index_of.find(M);
      if (it == index_of.end()) throw std::runtime_error("Weyl group not closed");
      mul_table_[a * n + b] = it->second;
    }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_table_[a * n + b] == 0) inverse_[a] = b;

  simple_refl_.resize(ns);
  for (int i = 0; i < ns; ++i) simple_refl_[i] = index_of.at(smat[i]);
}

void RootDatum::validate() const {
  for (int i = 0; i < num_roots(); ++i) {
    if (pairing(roots_[i], i) != 2)
      throw std::runtime_error("pairing <alpha, alpha^vee> != 2");
    // Reflections permute the root set.
    for (int j = 0; j < num_roots(); ++j)
      if (!root_index(reflect(i, roots_[j])))
        throw std::runtime_error("reflection does not permute roots");
  }
  // Length function: l(w s) = l(w) +/- 1.
  for (int w = 0; w < weyl_order(); ++w)
    for (int i = 0; i < num_simple(); ++i) {
      int ws = weyl_mul(w, simple_refl_[i]);
      if (std::abs(weyl_length(ws) - weyl_length(w)) != 1)
        throw std::runtime_error("length function inconsistent");
    }
}

std::shared_ptr<const RootDatum> RootDatum::preset(const std::string& name) {
  // Presets are cached so repeated calls share one instance; callers may rely
  // on pointer identity to pair auxiliary structures with their datum.
  if (name == "G2") {
    // Basis (alpha, beta): alpha short, beta long; <beta, alpha^vee> = -3.
    static const auto d = std::make_shared<const RootDatum>(
        build(2, {"alpha", "beta"}, {{1, 0}, {0, 1}}, {{2, -3}, {-1, 2}}));
    return d;
  }
  if (name == "A1") {
    // X* = Z with alpha = 2 (weight-lattice normalization of SL2).
    static const auto d = std::make_shared<const RootDatum>(build(1, {"w"}, {{2}}, {{2}}));
    return d;
  }
  if (name == "A2") {
    // Weight-lattice basis (w1, w2); alpha = 2w1 - w2, beta = -w1 + 2w2.
    static const auto d = std::make_shared<const RootDatum>(
        build(2, {"w1", "w2"}, {{2, -1}, {-1, 2}}, {{2, -1}, {-1, 2}}));
    return d;
  }
  throw std::runtime_error("unknown root-datum preset: " + name);
}

} // namespace hwb
