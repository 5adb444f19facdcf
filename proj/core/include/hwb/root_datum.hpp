#pragma once
//
// Root data, Weyl groups and root combinatorics for reduced crystallographic
// root systems, with presets for G2, A1 and A2.
//
// Roots are stored as integer vectors in a fixed basis of the character
// lattice X* ≅ Z^r.  For the G2 preset the basis is (alpha, beta), i.e. the
// root lattice itself.  Coroots are stored as pairing functionals: the row
// vector f with <lambda, gamma^vee> = f · lambda.
//
// Borel convention: throughout the geometry modules the Borel subgroup is the
// one whose roots are the *non-negative* integer combinations of the simple
// roots; that set is what `negative_system()` returns (it plays the role of
// Phi^- for the antispherical/exotic-cone picture while being combinatorially
// "positive").

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwb {

using Weight = std::vector<int>;

enum class RootLength { Short, Long };

struct WeylElement {
  std::vector<int> word;   // lexicographically least reduced word (simple indices)
  std::vector<int> matrix; // r x r row-major action on X*
  int length = 0;

  int length_of_word() const { return static_cast<int>(word.size()); }
};

class RootDatum {
public:
  // Build from rank, basis names, simple roots (as vectors in Z^r) and the
  // Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>.
  static RootDatum build(int rank, std::vector<std::string> basis_names,
                         std::vector<Weight> simple_roots,
                         std::vector<std::vector<int>> cartan);
  // Presets: "G2", "A1", "A2".
  static std::shared_ptr<const RootDatum> preset(const std::string& name);

  int rank() const { return rank_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Weight& root(int idx) const { return roots_.at(idx); }
  const std::vector<int>& coroot_functional(int idx) const { return coroots_.at(idx); }
  // <lambda, root(idx)^vee>
  long long pairing(const Weight& lambda, int idx) const;
  // Coordinates of root(idx)^vee in the basis of simple coroots.
  const std::vector<int>& coroot_coords(int idx) const { return coroot_coords_.at(idx); }

  const std::vector<int>& simple_indices() const { return simple_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  // Roots that are non-negative combinations of simple roots (see header note).
  const std::vector<int>& negative_system() const { return negative_system_; }
  bool in_negative_system(int idx) const { return neg_flag_.at(idx); }
  int opposite(int idx) const { return opposite_.at(idx); } // index of -root
  std::optional<int> root_index(const Weight& v) const;

  RootLength length_class(int idx) const { return lengths_.at(idx); }

  Weight reflect(int root_idx, const Weight& lambda) const;

  // --- Weyl group (enumerated once at construction) -------------------------
  int weyl_order() const { return static_cast<int>(weyl_.size()); }
  const WeylElement& weyl(int w) const { return weyl_.at(w); }
  int weyl_identity() const { return 0; }
  int weyl_mul(int a, int b) const { return mul_table_[a * weyl_order() + b]; }
  int weyl_inverse(int w) const { return inverse_.at(w); }
  int weyl_length(int w) const { return weyl_.at(w).length; }
  int simple_reflection(int simple_pos) const { return simple_refl_.at(simple_pos); }
  Weight act(int w, const Weight& lambda) const;
  int act_on_root(int w, int root_idx) const; // index of w(root)
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;
  std::vector<int> root_orbit(int root_idx) const;
  // Order of s_i s_j (Coxeter matrix entry), for braid relations.
  int coxeter_m(int simple_i, int simple_j) const;

  // Fundamental coweights dual pairing helper: solves <w_i, alpha_j^vee> =
  // delta_ij; returns weights if they are integral, otherwise nullopt entries.
  std::vector<std::optional<Weight>> fundamental_weights() const;

private:
  int rank_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<Weight> roots_;
  std::vector<std::vector<int>> coroots_;       // pairing functionals
  std::vector<std::vector<int>> coroot_coords_; // in simple-coroot basis
  std::vector<int> simple_;                     // indices into roots_
  std::vector<int> negative_system_;
  std::vector<char> neg_flag_;
  std::vector<int> opposite_;
  std::vector<RootLength> lengths_;
  std::vector<std::vector<int>> cartan_;

  std::vector<WeylElement> weyl_;
  std::vector<int> mul_table_;
  std::vector<int> inverse_;
  std::vector<int> simple_refl_;

  void generate_roots(const std::vector<Weight>& simples,
                      const std::vector<std::vector<int>>& simple_functionals);
  void classify_lengths();
  void enumerate_weyl();
  void validate() const;
};

} // namespace hwb
