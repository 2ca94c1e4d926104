#include "spancalc/span.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "spancalc/parallel.hpp"

namespace spancalc {

Span identity_span(int max_card, int colors) {
  return flat_word_span({}, max_card, colors);
}

Span annihilation_span(int max_card, int color, int colors) {
  return flat_word_span({lower_letter(color)}, max_card, colors);
}

Span creation_span(int max_card, int color, int colors) {
  return flat_word_span({raise_letter(color)}, max_card, colors);
}

Span zero_span(int max_card, int colors, int degree) {
  auto boundary = fs_truncated(max_card, colors);
  auto apex = std::make_shared<const Groupoid>(std::vector<Component>{});
  Span s;
  s.source = boundary;
  s.target = boundary;
  s.apex = apex;
  s.left = GFunctor::tabulate(apex, boundary, {},
                              [](int, const Perm& p) { return p; });
  s.right = GFunctor::tabulate(apex, boundary, {},
                               [](int, const Perm& p) { return p; });
  s.max_card = max_card;
  s.colors = colors;
  s.degree = degree;
  s.exact_up_to = max_card;
  return s;
}

Span dagger(const Span& s) {
  Span d;
  d.source = s.target;
  d.target = s.source;
  d.apex = s.apex;
  d.left = s.right;
  d.right = s.left;
  d.max_card = s.max_card;
  d.colors = s.colors;
  d.degree = -s.degree;
  d.exact_up_to = s.exact_up_to + s.degree;
  if (s.word) d.word = dagger_word(*s.word);
  return d;
}

Span direct_sum(const Span& a, const Span& b) {
  if (a.source != b.source || a.target != b.target)
    throw std::invalid_argument("direct_sum: boundary mismatch");
  if (a.degree != b.degree)
    throw std::invalid_argument("direct_sum: degree mismatch");
  std::vector<Component> comps;
  for (const Component& c : a.apex->components()) comps.push_back(c);
  for (const Component& c : b.apex->components()) comps.push_back(c);
  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  int na = a.apex->size();
  std::vector<int> lobj, robj;
  for (int c = 0; c < a.apex->size(); ++c) {
    lobj.push_back(a.left.obj(c));
    robj.push_back(a.right.obj(c));
  }
  for (int c = 0; c < b.apex->size(); ++c) {
    lobj.push_back(b.left.obj(c));
    robj.push_back(b.right.obj(c));
  }
  Span s;
  s.source = a.source;
  s.target = a.target;
  s.apex = apex;
  s.left = GFunctor::tabulate(apex, a.target, lobj,
                              [&a, &b, na](int comp, const Perm& p) {
                                return comp < na ? a.left.apply(comp, p)
                                                 : b.left.apply(comp - na, p);
                              });
  s.right = GFunctor::tabulate(apex, a.source, robj,
                               [&a, &b, na](int comp, const Perm& p) {
                                 return comp < na
                                            ? a.right.apply(comp, p)
                                            : b.right.apply(comp - na, p);
                               });
  s.max_card = a.max_card;
  s.colors = a.colors;
  s.degree = a.degree;
  s.exact_up_to = std::min(a.exact_up_to, b.exact_up_to);
  return s;
}

namespace {

// One composite component: the pair of apex components it came from, the
// junction orbit, its stabilizer, and the representative junction.
struct PairResult {
  std::vector<Component> comps;
  std::vector<std::array<int, 2>> origin;  // (x in s.apex, y in t.apex)
  std::vector<Perm> rep;                   // junction representative
};

PairResult compose_pair(const Span& t, const Span& s, int x, int y) {
  PairResult res;
  int m = s.left.obj(x);  // middle boundary component
  const PermGroup& mid = s.target->at(m).aut;
  const PermGroup& ax = s.apex->at(x).aut;
  const PermGroup& ay = t.apex->at(y).aut;
  int dx = ax.degree(), dy = ay.degree();

  std::vector<int> comp_of(mid.order(), -1);
  for (int fi = 0; fi < (int)mid.order(); ++fi) {
    if (comp_of[fi] >= 0) continue;
    int comp = (int)res.comps.size();
    // Orbit BFS from f under (a, b) . f = r_T(b) f l_S(a)^{-1} on generators.
    std::vector<int> frontier = {fi};
    comp_of[fi] = comp;
    std::vector<int> orbit = {fi};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int cur : frontier) {
        const Perm f = mid.at(cur);
        for (const Perm& a : ax.generators()) {
          int im = mid.index_of(f * s.left.apply(x, a).inverse());
          if (comp_of[im] < 0) {
            comp_of[im] = comp;
            next.push_back(im);
            orbit.push_back(im);
          }
        }
        for (const Perm& b : ay.generators()) {
          int im = mid.index_of(t.right.apply(y, b) * f);
          if (comp_of[im] < 0) {
            comp_of[im] = comp;
            next.push_back(im);
            orbit.push_back(im);
          }
        }
      }
      frontier = std::move(next);
    }
    // Stabilizer pairs: for each a, all b with r_T(b) = f l_S(a) f^{-1}.
    // The b side is indexed by its leg image once, so each lookup is an
    // equal-range scan instead of a pass over the whole group.
    const Perm f = mid.at(fi);
    std::vector<Perm> stab;
    std::vector<std::pair<Perm, int>> by_image;
    by_image.reserve(ay.order());
    for (int bi = 0; bi < (int)ay.order(); ++bi)
      by_image.emplace_back(t.right.apply(y, ay.at(bi)), bi);
    std::sort(by_image.begin(), by_image.end());
    for (int ai = 0; ai < (int)ax.order(); ++ai) {
      const Perm& a = ax.at(ai);
      Perm want = f * s.left.apply(x, a) * f.inverse();
      auto it = std::lower_bound(by_image.begin(), by_image.end(),
                                 std::make_pair(want, -1));
      for (; it != by_image.end() && it->first == want; ++it)
        stab.push_back(Perm::block_diag(a, ay.at(it->second)));
    }
    PermGroup aut = PermGroup::from_elements(dx + dy, std::move(stab));
    if (aut.order() * (long long)orbit.size() != ax.order() * ay.order())
      throw std::logic_error("compose: orbit-stabilizer mismatch");
    res.comps.push_back({s.apex->at(x).label + "*" + t.apex->at(y).label +
                             "#" + std::to_string(comp),
                         std::move(aut),
                         {}});
    res.origin.push_back({x, y});
    res.rep.push_back(f);
  }
  return res;
}

Span assemble_composite(const Span& t, const Span& s,
                        const std::vector<PairResult>& parts) {
  std::vector<Component> comps;
  std::vector<std::array<int, 2>> origin;
  std::vector<Perm> rep;
  for (const auto& part : parts) {
    for (const auto& c : part.comps) comps.push_back(c);
    for (const auto& o : part.origin) origin.push_back(o);
    for (const auto& r : part.rep) rep.push_back(r);
  }
  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> lobj, robj;
  for (size_t c = 0; c < origin.size(); ++c) {
    lobj.push_back(t.left.obj(origin[c][1]));
    robj.push_back(s.right.obj(origin[c][0]));
  }
  auto split = [&s, origin](int comp, const Perm& p, bool first) {
    int dx = s.apex->at(origin[comp][0]).aut.degree();
    return first ? p.block(0, dx) : p.block(dx, p.degree() - dx);
  };
  Span out;
  out.source = s.source;
  out.target = t.target;
  out.apex = apex;
  out.left = GFunctor::tabulate(apex, t.target, lobj,
                                [&t, origin, split](int comp, const Perm& p) {
                                  return t.left.apply(origin[comp][1],
                                                      split(comp, p, false));
                                });
  out.right = GFunctor::tabulate(apex, s.source, robj,
                                 [&s, origin, split](int comp, const Perm& p) {
                                   return s.right.apply(origin[comp][0],
                                                        split(comp, p, true));
                                 });
  out.max_card = s.max_card;
  out.colors = s.colors;
  out.degree = s.degree + t.degree;
  out.exact_up_to = std::min(s.exact_up_to, t.exact_up_to - s.degree);
  return out;
}

}  // namespace

Span compose(const Span& t, const Span& s) {
  if (s.target != t.source)
    throw std::invalid_argument("compose: boundary mismatch");
  std::vector<std::array<int, 2>> pairs;
  for (int x = 0; x < s.apex->size(); ++x)
    for (int y = 0; y < t.apex->size(); ++y)
      if (s.left.obj(x) == t.right.obj(y)) pairs.push_back({x, y});
  std::vector<PairResult> parts(pairs.size());
#pragma omp parallel for schedule(dynamic) if (parallel_enabled())
  for (int i = 0; i < (int)pairs.size(); ++i)
    parts[i] = compose_pair(t, s, pairs[i][0], pairs[i][1]);
  return assemble_composite(t, s, parts);
}

Span compose_raw_triples(const Span& t, const Span& s) {
  if (s.target != t.source)
    throw std::invalid_argument("compose: boundary mismatch");
  std::vector<PairResult> parts;
  for (int x = 0; x < s.apex->size(); ++x)
    for (int y = 0; y < t.apex->size(); ++y) {
      if (s.left.obj(x) != t.right.obj(y)) continue;
      int m = s.left.obj(x);
      const PermGroup& mid = s.target->at(m).aut;
      const PermGroup& ax = s.apex->at(x).aut;
      const PermGroup& ay = t.apex->at(y).aut;
      // Exhaustive union-find over all triples under all pairs (a, b).
      std::vector<int> parent(mid.order());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (int fi = 0; fi < (int)mid.order(); ++fi)
        for (int ai = 0; ai < (int)ax.order(); ++ai)
          for (int bi = 0; bi < (int)ay.order(); ++bi) {
            Perm im = t.right.apply(y, ay.at(bi)) * mid.at(fi) *
                      s.left.apply(x, ax.at(ai)).inverse();
            int a = find(fi), b = find(mid.index_of(im));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
      PairResult res;
      std::map<int, int> root_to_comp;
      for (int fi = 0; fi < (int)mid.order(); ++fi) {
        int root = find(fi);
        if (root_to_comp.count(root)) continue;
        int comp = (int)res.comps.size();
        root_to_comp[root] = comp;
        const Perm f = mid.at(fi);
        std::vector<Perm> stab;
        for (int ai = 0; ai < (int)ax.order(); ++ai)
          for (int bi = 0; bi < (int)ay.order(); ++bi)
            if (t.right.apply(y, ay.at(bi)) * f *
                    s.left.apply(x, ax.at(ai)).inverse() ==
                f)
              stab.push_back(Perm::block_diag(ax.at(ai), ay.at(bi)));
        res.comps.push_back({s.apex->at(x).label + "*" + t.apex->at(y).label +
                                 "#" + std::to_string(comp),
                             PermGroup::from_elements(
                                 ax.degree() + ay.degree(), std::move(stab)),
                             {}});
        res.origin.push_back({x, y});
        res.rep.push_back(f);
      }
      parts.push_back(std::move(res));
    }
  return assemble_composite(t, s, parts);
}

namespace {

// Witness search for one component pair: u in Aut(left boundary) induces
// theta = l_b^{-1} . conj_u . l_a on generators; v must then conjugate the
// right legs the same way.  Requires faithful left legs.
bool components_match(const Span& a, const Span& b, int x, int y) {
  if (a.left.obj(x) != b.left.obj(y)) return false;
  if (a.right.obj(x) != b.right.obj(y)) return false;
  const PermGroup& ga = a.apex->at(x).aut;
  const PermGroup& gb = b.apex->at(y).aut;
  if (ga.order() != gb.order()) return false;
  const PermGroup& bl = a.target->at(a.left.obj(x)).aut;
  const PermGroup& br = a.source->at(a.right.obj(x)).aut;
  const auto& gens = ga.generators();
  for (const Perm& u : bl.elements()) {
    std::vector<Perm> theta_gens;
    bool ok = true;
    for (const Perm& g : gens) {
      int pre = b.left.preimage_idx(y, u * a.left.apply(x, g) * u.inverse());
      if (pre < 0) {
        ok = false;
        break;
      }
      theta_gens.push_back(gb.at(pre));
    }
    if (!ok) continue;
    std::vector<Perm> ra, rb;
    for (size_t i = 0; i < gens.size(); ++i) {
      ra.push_back(a.right.apply(x, gens[i]));
      rb.push_back(b.right.apply(y, theta_gens[i]));
    }
    if (find_conjugator(br, ra, rb)) return true;
  }
  return false;
}

bool match_groups(const std::vector<int>& xs, const std::vector<int>& ys,
                  const Span& a, const Span& b) {
  // xs, ys share a signature; find a perfect matching by backtracking with a
  // memoized compatibility matrix.
  int n = (int)xs.size();
  std::vector<std::vector<int>> compat(n, std::vector<int>(n, -1));
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (compat[i][j] < 0)
        compat[i][j] = components_match(a, b, xs[i], ys[j]) ? 1 : 0;
      if (!compat[i][j]) continue;
      used[j] = 1;
      if (rec(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool spans_isomorphic(const Span& a, const Span& b, int source_bound) {
  if (a.source != b.source || a.target != b.target)
    throw std::invalid_argument("spans_isomorphic: boundary mismatch");
  if (a.degree != b.degree) return false;
  if (!a.left.is_faithful() || !b.left.is_faithful())
    throw std::invalid_argument("spans_isomorphic: needs faithful left legs");

  using Sig = std::tuple<int, int, long long>;
  std::map<Sig, std::vector<int>> by_sig_a, by_sig_b;
  for (int x = 0; x < a.apex->size(); ++x)
    if (a.source->at(a.right.obj(x)).total() <= source_bound)
      by_sig_a[{a.right.obj(x), a.left.obj(x), a.apex->at(x).aut.order()}]
          .push_back(x);
  for (int y = 0; y < b.apex->size(); ++y)
    if (b.source->at(b.right.obj(y)).total() <= source_bound)
      by_sig_b[{b.right.obj(y), b.left.obj(y), b.apex->at(y).aut.order()}]
          .push_back(y);

  if (by_sig_a.size() != by_sig_b.size()) return false;
  for (const auto& [sig, xs] : by_sig_a) {
    auto it = by_sig_b.find(sig);
    if (it == by_sig_b.end() || it->second.size() != xs.size()) return false;
  }
  for (const auto& [sig, xs] : by_sig_a)
    if (!match_groups(xs, by_sig_b.at(sig), a, b)) return false;
  return true;
}

TamenessReport tameness_report(const Span& s) {
  TamenessReport r;
  r.left_faithful = s.left.is_faithful();
  r.right_faithful = s.right.is_faithful();
  r.components = s.apex->size();
  for (const Component& c : s.apex->components())
    r.max_aut_order = std::max(r.max_aut_order, c.aut.order());
  return r;
}

std::vector<SpanClassInfo> span_classes(const Span& s) {
  std::vector<SpanClassInfo> out;
  for (int c = 0; c < s.apex->size(); ++c) {
    SpanClassInfo info;
    info.comp = c;
    info.source_label = s.source->at(s.right.obj(c)).label;
    info.target_label = s.target->at(s.left.obj(c)).label;
    info.aut_order = s.apex->at(c).aut.order();
    info.source_total = s.source->at(s.right.obj(c)).total();
    out.push_back(info);
  }
  return out;
}

}  // namespace spancalc
