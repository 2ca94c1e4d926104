#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace spancalc {

// Permutation of {0, ..., degree-1} in image form.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree) { return Perm(degree); }
  static Perm transposition(int degree, int i, int j);

  int degree() const { return (int)img_.size(); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // (a * b)(x) = a(b(x)); b is applied first.
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;

  // Same mapping, fixed points appended up to new_degree.
  Perm extended(int new_degree) const;
  // Embed into a carrier of size new_degree acting on [offset, offset+degree).
  Perm shifted(int offset, int new_degree) const;
  // Block-diagonal concatenation.
  static Perm block_diag(const Perm& a, const Perm& b);
  // Extract the action on [offset, offset+size); the block must be invariant.
  Perm block(int offset, int size) const;
  bool preserves_block(int offset, int size) const;

  std::vector<int> cycle_type() const;  // descending part sizes
  int order() const;
  std::string str() const;  // cycle notation, e.g. "(0 2 1)(3 4)"

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

// Finite permutation group stored as its full sorted element list.
// Desk scale by design: orders up to |S_8| = 40320.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  // Direct product of symmetric groups on consecutive blocks.
  static PermGroup young(const std::vector<int>& block_sizes);
  static PermGroup closure(int degree, std::vector<Perm> gens);
  // `elems` must already be a group; verified.
  static PermGroup from_elements(int degree, std::vector<Perm> elems);

  int degree() const { return degree_; }
  long long order() const { return (long long)elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& at(int i) const { return elems_[i]; }
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int index_of(const Perm& p) const;

  // Multiset of element orders; cheap abstract-isomorphism invariant.
  std::vector<int> element_order_multiset() const;
  // Abstract group isomorphism by generator-image backtracking.
  bool isomorphic_to(const PermGroup& other) const;

 private:
  bool pick_generators();

  int degree_ = 0;
  std::vector<Perm> elems_;
  std::vector<Perm> gens_;
};

// Some y in `ambient` with y * s_i * y^{-1} = t_i for all i, if any.
std::optional<Perm> find_conjugator(const PermGroup& ambient,
                                    const std::vector<Perm>& s,
                                    const std::vector<Perm>& t);

}  // namespace spancalc
