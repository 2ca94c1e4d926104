#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "spancalc/perm.hpp"
#include "spancalc/rational.hpp"

namespace spancalc {

// One isomorphism class of objects: a label, the automorphism group acting on
// a concrete carrier {0..degree-1}, and an optional integer profile (for the
// groupoid of finite colored sets the profile is the per-color count).
struct Component {
  std::string label;
  PermGroup aut;
  std::vector<int> profile;

  int total() const {
    int t = 0;
    for (int v : profile) t += v;
    return t;
  }
};

// Skeletal finite groupoid: one object per component, hom(x,x) = Aut(x),
// hom(x,y) empty for x != y.
class Groupoid {
 public:
  Groupoid() = default;
  explicit Groupoid(std::vector<Component> comps);

  int size() const { return (int)comps_.size(); }
  const Component& at(int i) const { return comps_[i]; }
  const std::vector<Component>& components() const { return comps_; }

  // Index of the component with this profile, or -1.
  int profile_index(const std::vector<int>& profile) const;

  // Groupoid cardinality: sum over components of 1/|Aut|.
  Rational cardinality() const;

 private:
  std::vector<Component> comps_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

// The groupoid of finite sets colored with `colors` colors, truncated to
// total cardinality <= max_card.  Components are ordered by total, then
// lexicographically by profile.  Cached: repeated calls share one instance.
GroupoidPtr fs_truncated(int max_card, int colors = 1);

// Trivial one-object groupoid (empty profile, trivial automorphisms).
GroupoidPtr point_groupoid();

// Functor between skeletal groupoids, tabulated: an object map and, per
// source component, an element-index map into the target component's Aut.
class GFunctor {
 public:
  GFunctor() = default;

  // Tabulate fn over every element; verifies functoriality on
  // (generator, element) pairs, which proves it on all products.
  static GFunctor tabulate(GroupoidPtr src, GroupoidPtr tgt,
                           std::vector<int> obj_map,
                           const std::function<Perm(int, const Perm&)>& fn);
  static GFunctor identity(GroupoidPtr g);

  // g after f.
  static GFunctor compose(const GFunctor& g, const GFunctor& f);

  const GroupoidPtr& src() const { return src_; }
  const GroupoidPtr& tgt() const { return tgt_; }

  int obj(int comp) const { return obj_[comp]; }
  int apply_idx(int comp, int elem_idx) const { return mor_[comp][elem_idx]; }
  Perm apply(int comp, const Perm& p) const;

  bool is_faithful() const;
  bool is_identity() const;
  // Element index in comp with F(elem) == target, or -1 (linear scan).
  int preimage_idx(int comp, const Perm& target) const;

 private:
  GroupoidPtr src_, tgt_;
  std::vector<int> obj_;
  std::vector<std::vector<int>> mor_;
};

// Natural isomorphism between parallel functors F, G with equal object maps
// (forced in a skeletal target): one automorphism per source component.
class NaturalIso {
 public:
  NaturalIso() = default;
  explicit NaturalIso(std::vector<Perm> comps) : comps_(std::move(comps)) {}

  static NaturalIso identity_for(const GFunctor& f);

  int size() const { return (int)comps_.size(); }
  const Perm& at(int i) const { return comps_[i]; }
  const std::vector<Perm>& comps() const { return comps_; }

  NaturalIso inverse() const;
  // Pointwise composite (b after a); both must have the same size.
  static NaturalIso compose(const NaturalIso& b, const NaturalIso& a);

  // eta_i * F(a) == G(a) * eta_i on generators, and eta_i in Aut(F(i)).
  bool is_natural(const GFunctor& f, const GFunctor& g) const;

  bool is_identity() const;

 private:
  std::vector<Perm> comps_;
};

// Equivalence of skeletal groupoids: a bijection of components matching
// automorphism groups up to abstract isomorphism.
bool groupoids_equivalent(const Groupoid& a, const Groupoid& b);

}  // namespace spancalc
