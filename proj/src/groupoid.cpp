#include "spancalc/groupoid.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spancalc {

Groupoid::Groupoid(std::vector<Component> comps) : comps_(std::move(comps)) {}

int Groupoid::profile_index(const std::vector<int>& profile) const {
  for (int i = 0; i < size(); ++i)
    if (comps_[i].profile == profile) return i;
  return -1;
}

Rational Groupoid::cardinality() const {
  Rational total(0);
  for (const Component& c : comps_)
    total = total + Rational(1, c.aut.order());
  return total;
}

namespace {

std::string profile_label(const std::vector<int>& profile) {
  if (profile.size() == 1) return std::to_string(profile[0]);
  std::string s = "(";
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile[i]);
  }
  return s + ")";
}

void enumerate_profiles(int colors, int total, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == colors - 1) {
    int used = 0;
    for (int v : cur) used += v;
    cur.push_back(total - used);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  int used = 0;
  for (int v : cur) used += v;
  for (int v = 0; v <= total - used; ++v) {
    cur.push_back(v);
    enumerate_profiles(colors, total, cur, out);
    cur.pop_back();
  }
}

}  // namespace

GroupoidPtr fs_truncated(int max_card, int colors) {
  static std::map<std::pair<int, int>, GroupoidPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(max_card, colors);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Component> comps;
  for (int total = 0; total <= max_card; ++total) {
    std::vector<std::vector<int>> profiles;
    std::vector<int> cur;
    enumerate_profiles(colors, total, cur, profiles);
    std::sort(profiles.begin(), profiles.end());
    for (auto& q : profiles)
      comps.push_back({profile_label(q), PermGroup::young(q), q});
  }
  auto g = std::make_shared<const Groupoid>(std::move(comps));
  cache[key] = g;
  return g;
}

GroupoidPtr point_groupoid() {
  static GroupoidPtr g =
      std::make_shared<const Groupoid>(std::vector<Component>{
          {"*", PermGroup::trivial(0), {}}});
  return g;
}

// ----------------------------------------------------------------- GFunctor

GFunctor GFunctor::tabulate(GroupoidPtr src, GroupoidPtr tgt,
                            std::vector<int> obj_map,
                            const std::function<Perm(int, const Perm&)>& fn) {
  GFunctor f;
  f.src_ = std::move(src);
  f.tgt_ = std::move(tgt);
  f.obj_ = std::move(obj_map);
  assert((int)f.obj_.size() == f.src_->size());
  f.mor_.resize(f.src_->size());
  for (int c = 0; c < f.src_->size(); ++c) {
    const PermGroup& a = f.src_->at(c).aut;
    const PermGroup& b = f.tgt_->at(f.obj_[c]).aut;
    f.mor_[c].resize(a.order());
    for (int i = 0; i < (int)a.order(); ++i) {
      int j = b.index_of(fn(c, a.at(i)));
      if (j < 0) throw std::invalid_argument("functor image outside Aut");
      f.mor_[c][i] = j;
    }
    // Identity to identity; multiplicativity on (generator, element) pairs
    // proves it everywhere by induction on word length.
    if (!b.at(f.mor_[c][a.index_of(Perm(a.degree()))]).is_identity())
      throw std::invalid_argument("functor does not preserve identity");
    for (const Perm& g : a.generators())
      for (int i = 0; i < (int)a.order(); ++i) {
        Perm lhs = b.at(f.mor_[c][a.index_of(g * a.at(i))]);
        Perm rhs = b.at(f.mor_[c][a.index_of(g)]) * b.at(f.mor_[c][i]);
        if (!(lhs == rhs))
          throw std::invalid_argument("functor not multiplicative");
      }
  }
  return f;
}

GFunctor GFunctor::identity(GroupoidPtr g) {
  GFunctor f;
  f.src_ = g;
  f.tgt_ = g;
  f.obj_.resize(g->size());
  f.mor_.resize(g->size());
  for (int c = 0; c < g->size(); ++c) {
    f.obj_[c] = c;
    f.mor_[c].resize(g->at(c).aut.order());
    for (int i = 0; i < (int)g->at(c).aut.order(); ++i) f.mor_[c][i] = i;
  }
  return f;
}

GFunctor GFunctor::compose(const GFunctor& g, const GFunctor& f) {
  assert(f.tgt_ == g.src_);
  GFunctor h;
  h.src_ = f.src_;
  h.tgt_ = g.tgt_;
  h.obj_.resize(f.obj_.size());
  h.mor_.resize(f.mor_.size());
  for (size_t c = 0; c < f.obj_.size(); ++c) {
    h.obj_[c] = g.obj_[f.obj_[c]];
    h.mor_[c].resize(f.mor_[c].size());
    for (size_t i = 0; i < f.mor_[c].size(); ++i)
      h.mor_[c][i] = g.mor_[f.obj_[c]][f.mor_[c][i]];
  }
  return h;
}

Perm GFunctor::apply(int comp, const Perm& p) const {
  const PermGroup& a = src_->at(comp).aut;
  int i = a.index_of(p);
  assert(i >= 0);
  return tgt_->at(obj_[comp]).aut.at(mor_[comp][i]);
}

bool GFunctor::is_faithful() const {
  for (const auto& m : mor_) {
    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return false;
  }
  return true;
}

bool GFunctor::is_identity() const {
  if (src_ != tgt_) return false;
  for (size_t c = 0; c < obj_.size(); ++c) {
    if (obj_[c] != (int)c) return false;
    for (size_t i = 0; i < mor_[c].size(); ++i)
      if (mor_[c][i] != (int)i) return false;
  }
  return true;
}

int GFunctor::preimage_idx(int comp, const Perm& target) const {
  const PermGroup& b = tgt_->at(obj_[comp]).aut;
  int want = b.index_of(target);
  if (want < 0) return -1;
  for (size_t i = 0; i < mor_[comp].size(); ++i)
    if (mor_[comp][i] == want) return (int)i;
  return -1;
}

// --------------------------------------------------------------- NaturalIso

NaturalIso NaturalIso::identity_for(const GFunctor& f) {
  std::vector<Perm> comps;
  comps.reserve(f.src()->size());
  for (int c = 0; c < f.src()->size(); ++c)
    comps.push_back(Perm(f.tgt()->at(f.obj(c)).aut.degree()));
  return NaturalIso(std::move(comps));
}

NaturalIso NaturalIso::inverse() const {
  std::vector<Perm> out;
  out.reserve(comps_.size());
  for (const Perm& p : comps_) out.push_back(p.inverse());
  return NaturalIso(std::move(out));
}

NaturalIso NaturalIso::compose(const NaturalIso& b, const NaturalIso& a) {
  assert(a.size() == b.size());
  std::vector<Perm> out;
  out.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) out.push_back(b.at(i) * a.at(i));
  return NaturalIso(std::move(out));
}

bool NaturalIso::is_natural(const GFunctor& f, const GFunctor& g) const {
  if (f.src() != g.src() || f.tgt() != g.tgt()) return false;
  if (size() != f.src()->size()) return false;
  for (int c = 0; c < size(); ++c) {
    if (f.obj(c) != g.obj(c)) return false;
    const PermGroup& b = f.tgt()->at(f.obj(c)).aut;
    if (!b.contains(comps_[c])) return false;
    for (const Perm& a : f.src()->at(c).aut.generators())
      if (!(comps_[c] * f.apply(c, a) == g.apply(c, a) * comps_[c]))
        return false;
  }
  return true;
}

bool NaturalIso::is_identity() const {
  for (const Perm& p : comps_)
    if (!p.is_identity()) return false;
  return true;
}

// -------------------------------------------------------------- equivalence

bool groupoids_equivalent(const Groupoid& a, const Groupoid& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  // Backtracking over component matchings; cheap invariants first.
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (a.at(i).aut.order() != b.at(j).aut.order()) continue;
      if (a.at(i).aut.element_order_multiset() !=
          b.at(j).aut.element_order_multiset())
        continue;
      if (!a.at(i).aut.isomorphic_to(b.at(j).aut)) continue;
      used[j] = 1;
      perm[i] = j;
      if (rec(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return rec(0);
}

}  // namespace spancalc
