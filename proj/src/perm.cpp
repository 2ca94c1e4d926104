#include "spancalc/perm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spancalc {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::transposition(int degree, int i, int j) {
  Perm p(degree);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  assert(a.degree() == b.degree());
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a.img_[b.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::extended(int new_degree) const {
  assert(new_degree >= degree());
  Perm p = *this;
  for (int i = degree(); i < new_degree; ++i) p.img_.push_back(i);
  return p;
}

Perm Perm::shifted(int offset, int new_degree) const {
  assert(offset + degree() <= new_degree);
  Perm p(new_degree);
  for (int i = 0; i < degree(); ++i) p.img_[offset + i] = offset + img_[i];
  return p;
}

Perm Perm::block_diag(const Perm& a, const Perm& b) {
  Perm p(a.degree() + b.degree());
  for (int i = 0; i < a.degree(); ++i) p.img_[i] = a.img_[i];
  for (int i = 0; i < b.degree(); ++i) p.img_[a.degree() + i] = a.degree() + b.img_[i];
  return p;
}

bool Perm::preserves_block(int offset, int size) const {
  for (int i = 0; i < size; ++i) {
    int v = img_[offset + i];
    if (v < offset || v >= offset + size) return false;
  }
  return true;
}

Perm Perm::block(int offset, int size) const {
  assert(preserves_block(offset, size));
  std::vector<int> img(size);
  for (int i = 0; i < size; ++i) img[i] = img_[offset + i] - offset;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) { seen[j] = 1; j = img_[j]; ++len; }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int Perm::order() const {
  long long o = 1;
  for (int len : cycle_type()) o = std::lcm(o, (long long)len);
  return (int)o;
}

std::string Perm::str() const {
  std::string s;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) { seen[i] = 1; continue; }
    s += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) s += " ";
      s += std::to_string(j);
      seen[j] = 1;
      j = img_[j];
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------- PermGroup

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.elems_ = {Perm(degree)};
  return g;
}

PermGroup PermGroup::symmetric(int degree) {
  PermGroup g;
  g.degree_ = degree;
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  do {
    g.elems_.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(g.elems_.begin(), g.elems_.end());
  g.pick_generators();
  return g;
}

PermGroup PermGroup::young(const std::vector<int>& block_sizes) {
  int degree = 0;
  for (int b : block_sizes) degree += b;
  std::vector<Perm> gens;
  int off = 0;
  for (int b : block_sizes) {
    for (int i = 0; i + 1 < b; ++i)
      gens.push_back(Perm::transposition(degree, off + i, off + i + 1));
    off += b;
  }
  return closure(degree, std::move(gens));
}

PermGroup PermGroup::closure(int degree, std::vector<Perm> gens) {
  std::set<Perm> elems;
  elems.insert(Perm(degree));
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = g * p;
        if (elems.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  PermGroup g;
  g.degree_ = degree;
  g.elems_.assign(elems.begin(), elems.end());
  g.gens_ = std::move(gens);
  if (g.gens_.empty()) g.gens_.push_back(Perm(degree));
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  PermGroup g;
  g.degree_ = degree;
  g.elems_ = std::move(elems);
  if (g.elems_.empty() || g.index_of(Perm(degree)) < 0)
    throw std::invalid_argument("element list lacks identity");
  if (!g.pick_generators())
    throw std::invalid_argument("element list is not a group");
  return g;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return -1;
  return (int)(it - elems_.begin());
}

bool PermGroup::pick_generators() {
  // Greedy: add elements until they generate the full element set.  The
  // closure of the chosen generators is an honest group, so equality with
  // elems_ certifies that elems_ is a group.
  gens_.clear();
  std::set<Perm> have;
  have.insert(Perm(degree_));
  for (const Perm& cand : elems_) {
    if (have.count(cand)) continue;
    gens_.push_back(cand);
    std::vector<Perm> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& p : frontier)
        for (const Perm& g : gens_) {
          Perm q = g * p;
          if (have.insert(q).second) next.push_back(q);
        }
      frontier = std::move(next);
    }
    if ((long long)have.size() >= order()) break;
  }
  if (gens_.empty()) gens_.push_back(Perm(degree_));
  if ((long long)have.size() != order()) return false;
  for (const Perm& p : elems_)
    if (!have.count(p)) return false;
  return true;
}

std::vector<int> PermGroup::element_order_multiset() const {
  std::vector<int> orders;
  orders.reserve(elems_.size());
  for (const Perm& p : elems_) orders.push_back(p.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace {

// Extend a partial homomorphism given on generators to the whole group;
// returns false on any conflict or non-injectivity.
bool extend_iso(const PermGroup& g, const std::vector<Perm>& gens,
                const std::vector<Perm>& images, const PermGroup& h) {
  std::map<Perm, Perm> map;
  map[Perm(g.degree())] = Perm(h.degree());
  std::vector<Perm> frontier = {Perm(g.degree())};
  std::set<Perm> hit;
  hit.insert(Perm(h.degree()));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier) {
      const Perm& fa = map.at(a);
      for (size_t i = 0; i < gens.size(); ++i) {
        Perm b = gens[i] * a;
        Perm fb = images[i] * fa;
        auto it = map.find(b);
        if (it != map.end()) {
          if (!(it->second == fb)) return false;
        } else {
          if (!hit.insert(fb).second) return false;  // not injective
          if (h.index_of(fb) < 0) return false;
          map.emplace(b, fb);
          next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return (long long)map.size() == g.order();
}

bool iso_backtrack(const PermGroup& g, const PermGroup& h,
                   const std::vector<Perm>& gens, std::vector<Perm>& images,
                   size_t depth) {
  if (depth == gens.size()) return extend_iso(g, gens, images, h);
  int want = gens[depth].order();
  for (const Perm& cand : h.elements()) {
    if (cand.order() != want) continue;
    images[depth] = cand;
    // Quick partial check before recursing deeper.
    std::vector<Perm> partial_g(gens.begin(), gens.begin() + depth + 1);
    std::vector<Perm> partial_i(images.begin(), images.begin() + depth + 1);
    PermGroup sub_g = PermGroup::closure(g.degree(), partial_g);
    PermGroup sub_h = PermGroup::closure(h.degree(), partial_i);
    if (sub_g.order() != sub_h.order()) continue;
    if (!extend_iso(sub_g, partial_g, partial_i, sub_h)) continue;
    if (iso_backtrack(g, h, gens, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool PermGroup::isomorphic_to(const PermGroup& other) const {
  if (order() != other.order()) return false;
  if (element_order_multiset() != other.element_order_multiset()) return false;
  if (order() == 1) return true;
  std::vector<Perm> images(gens_.size());
  return iso_backtrack(*this, other, gens_, images, 0);
}

std::optional<Perm> find_conjugator(const PermGroup& ambient,
                                    const std::vector<Perm>& s,
                                    const std::vector<Perm>& t) {
  assert(s.size() == t.size());
  for (const Perm& y : ambient.elements()) {
    bool ok = true;
    for (size_t i = 0; i < s.size() && ok; ++i)
      ok = (y * s[i] == t[i] * y);
    if (ok) return y;
  }
  return std::nullopt;
}

}  // namespace spancalc
