#include "spancalc/word.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "spancalc/parallel.hpp"
#include "spancalc/span.hpp"

namespace spancalc {

Word dagger_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.raise = !l.raise;
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += (w[i].raise ? "+" : "-");
    s += std::to_string(w[i].color);
  }
  return s;
}

std::vector<int> word_degree(const Word& w, int colors) {
  std::vector<int> d(colors, 0);
  for (const Letter& l : w) d[l.color] += l.raise ? 1 : -1;
  return d;
}

std::vector<int> word_offsets(const Word& w) {
  int k = (int)w.size();
  std::vector<int> t(k + 1, 0);
  for (int j = k - 1; j >= 0; --j) t[j] = t[j + 1] + (w[j].raise ? 1 : -1);
  return t;
}

int max_positive_offset(const Word& w) {
  int m = 0;
  for (int t : word_offsets(w)) m = std::max(m, t);
  return m;
}

std::optional<std::vector<std::vector<int>>> profiles_along(
    const Word& w, const std::vector<int>& source_profile) {
  int k = (int)w.size();
  std::vector<std::vector<int>> q(k + 1);
  q[k] = source_profile;
  for (int j = k - 1; j >= 0; --j) {
    q[j] = q[j + 1];
    q[j][w[j].color] += w[j].raise ? 1 : -1;
    if (q[j][w[j].color] < 0) return std::nullopt;
  }
  return q;
}

int block_offset(const std::vector<int>& profile, int color) {
  int off = 0;
  for (int c = 0; c < color; ++c) off += profile[c];
  return off;
}

Perm color_extend(const Perm& p, const std::vector<int>& q, int color) {
  int n = p.degree();
  int pos = block_offset(q, color) + q[color];
  std::vector<int> img(n + 1);
  auto ins = [pos](int i) { return i < pos ? i : i + 1; };
  for (int i = 0; i < n; ++i) img[ins(i)] = ins(p(i));
  img[pos] = pos;
  return Perm(img);
}

Perm letter_left_embed(const Letter& l, const std::vector<int>& x,
                       const Perm& a) {
  return l.raise ? color_extend(a, x, l.color) : a;
}

Perm letter_right_embed(const Letter& l, const std::vector<int>& x,
                        const Perm& a) {
  return l.raise ? a : color_extend(a, x, l.color);
}

namespace {

int total_of(const std::vector<int>& profile) {
  return std::accumulate(profile.begin(), profile.end(), 0);
}

using GElem = std::vector<Perm>;  // one automorphism per letter apex

GElem gelem_identity(const std::vector<int>& degrees) {
  GElem e;
  e.reserve(degrees.size());
  for (int d : degrees) e.push_back(Perm(d));
  return e;
}

GElem gelem_mult(const GElem& b, const GElem& a) {
  GElem out;
  out.reserve(a.size());
  for (size_t j = 0; j < a.size(); ++j) out.push_back(b[j] * a[j]);
  return out;
}

GElem gelem_inverse(const GElem& a) {
  GElem out;
  out.reserve(a.size());
  for (const Perm& p : a) out.push_back(p.inverse());
  return out;
}

Perm gelem_block_diag(const GElem& a) {
  Perm p(0);
  for (const Perm& q : a) p = Perm::block_diag(p, q);
  return p;
}

// Everything produced for one source class; component indices are
// class-local until the merge.
struct ClassResult {
  FlatSpanData::ClassData cd;
  std::vector<FlatSpanData::CompData> comps;
  std::vector<Component> apex_comps;
};

ClassResult build_class(const Word& w, const Groupoid& boundary, int s,
                        int max_card) {
  ClassResult res;
  int k = (int)w.size();
  auto qs = profiles_along(w, boundary.at(s).profile);
  if (!qs) return res;
  for (const auto& q : *qs)
    if (total_of(q) > max_card) return res;
  res.cd.active = true;
  res.cd.q = *qs;
  res.cd.x.resize(k);
  for (int j = 0; j < k; ++j)
    res.cd.x[j] = w[j].raise ? res.cd.q[j + 1] : res.cd.q[j];

  // Junction groups Aut(q_1..q_{k-1}) and letter groups Aut(x_j), all taken
  // from the shared boundary groupoid so element indexing is canonical.
  std::vector<const PermGroup*> jun(k);   // 1..k-1 used
  std::vector<const PermGroup*> lett(k);  // 0..k-1
  for (int j = 1; j < k; ++j)
    jun[j] = &boundary.at(boundary.profile_index(res.cd.q[j])).aut;
  std::vector<int> degrees(k);
  for (int j = 0; j < k; ++j) {
    lett[j] = &boundary.at(boundary.profile_index(res.cd.x[j])).aut;
    degrees[j] = total_of(res.cd.x[j]);
  }

  long long g_order = 1;
  for (int j = 0; j < k; ++j) g_order *= lett[j]->order();

  // Generators of the acting product group, as (slot, perm).
  std::vector<std::pair<int, Perm>> gens;
  for (int j = 0; j < k; ++j)
    for (const Perm& g : lett[j]->generators())
      if (!g.is_identity()) gens.emplace_back(j, g);

  // Action of a slot generator on a junction tuple:
  //   f_j   -> f_j . L_j(g)^{-1}        (junction on the letter's left)
  //   f_j+1 -> R_j(g) . f_j+1           (junction on the letter's right)
  auto act = [&](int slot, const Perm& g,
                 const std::vector<int>& tuple) {
    std::vector<int> out = tuple;
    const Perm gi = g.inverse();
    if (slot >= 1 && slot <= k - 1) {
      Perm f = jun[slot]->at(tuple[slot - 1]);
      out[slot - 1] =
          jun[slot]->index_of(f * letter_left_embed(w[slot], res.cd.x[slot], gi));
    }
    if (slot + 1 <= k - 1) {
      Perm f = jun[slot + 1]->at(tuple[slot]);
      out[slot] = jun[slot + 1]->index_of(
          letter_right_embed(w[slot], res.cd.x[slot], g) * f);
    }
    return out;
  };

  // Odometer over the tuple space in lex order; BFS each new orbit.
  std::vector<int> radix(std::max(0, k - 1));
  for (int j = 1; j < k; ++j) radix[j - 1] = (int)jun[j]->order();
  std::vector<int> seed(std::max(0, k - 1), 0);
  bool done = false;
  while (!done) {
    if (!res.cd.comp_of.count(seed)) {
      int comp = (int)res.comps.size();
      res.comps.push_back({s, seed});
      res.cd.comp_of[seed] = comp;
      res.cd.connect[seed] = gelem_identity(degrees);
      std::vector<std::vector<int>> frontier = {seed};
      std::vector<std::vector<int>> orbit = {seed};
      while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& t : frontier)
          for (const auto& [slot, g] : gens) {
            auto t2 = act(slot, g, t);
            if (res.cd.comp_of.count(t2)) continue;
            res.cd.comp_of[t2] = comp;
            GElem ge = gelem_identity(degrees);
            ge[slot] = g;
            res.cd.connect[t2] = gelem_mult(ge, res.cd.connect[t]);
            next.push_back(t2);
            orbit.push_back(t2);
          }
        frontier = std::move(next);
      }
      // Stabilizer of the seed via Schreier generators.
      std::set<Perm> stab_gens;
      for (const auto& t : orbit)
        for (const auto& [slot, g] : gens) {
          auto t2 = act(slot, g, t);
          GElem ge = gelem_identity(degrees);
          ge[slot] = g;
          GElem sg = gelem_mult(gelem_inverse(res.cd.connect[t2]),
                                gelem_mult(ge, res.cd.connect[t]));
          Perm bd = gelem_block_diag(sg);
          if (!bd.is_identity()) stab_gens.insert(bd);
        }
      int union_degree = 0;
      for (int d : degrees) union_degree += d;
      PermGroup stab = PermGroup::closure(
          union_degree, std::vector<Perm>(stab_gens.begin(), stab_gens.end()));
      if (stab.order() * (long long)orbit.size() != g_order)
        throw std::logic_error("orbit-stabilizer mismatch");
      res.apex_comps.push_back({boundary.at(s).label + "#" +
                                    std::to_string(comp),
                                std::move(stab),
                                {}});
    }
    // Advance the odometer.
    done = true;
    for (int j = (int)seed.size() - 1; j >= 0; --j) {
      if (++seed[j] < radix[j]) {
        done = false;
        break;
      }
      seed[j] = 0;
    }
    if (seed.empty()) done = true;
  }
  return res;
}

Span build_flat_word_span(const Word& w, int max_card, int colors) {
  auto boundary = fs_truncated(max_card, colors);
  int k = (int)w.size();

  if (k == 0) {
    Span s;
    s.source = s.target = s.apex = boundary;
    s.left = GFunctor::identity(boundary);
    s.right = GFunctor::identity(boundary);
    s.max_card = max_card;
    s.colors = colors;
    s.degree = 0;
    s.exact_up_to = max_card;
    s.word = w;
    auto data = std::make_shared<FlatSpanData>();
    data->word = w;
    data->max_card = max_card;
    data->colors = colors;
    data->classes.resize(boundary->size());
    for (int c = 0; c < boundary->size(); ++c) {
      data->classes[c].active = true;
      data->classes[c].q = {boundary->at(c).profile};
      data->classes[c].comp_of[{}] = c;
      data->classes[c].connect[{}] = {};
      data->comps.push_back({c, {}});
    }
    s.flat = data;
    return s;
  }

  std::vector<ClassResult> results(boundary->size());
#pragma omp parallel for schedule(dynamic) if (parallel_enabled())
  for (int s = 0; s < boundary->size(); ++s)
    results[s] = build_class(w, *boundary, s, max_card);

  auto data = std::make_shared<FlatSpanData>();
  data->word = w;
  data->max_card = max_card;
  data->colors = colors;
  data->classes.resize(boundary->size());
  std::vector<Component> apex_comps;
  for (int s = 0; s < boundary->size(); ++s) {
    ClassResult& r = results[s];
    int base = (int)data->comps.size();
    for (auto& [tuple, comp] : r.cd.comp_of) comp += base;
    data->classes[s] = std::move(r.cd);
    for (auto& c : r.comps) data->comps.push_back(std::move(c));
    for (auto& c : r.apex_comps) apex_comps.push_back(std::move(c));
  }
  auto apex = std::make_shared<const Groupoid>(std::move(apex_comps));

  std::vector<int> lobj(data->comps.size()), robj(data->comps.size());
  for (size_t c = 0; c < data->comps.size(); ++c) {
    const auto& cd = data->classes[data->comps[c].source_class];
    lobj[c] = boundary->profile_index(cd.q[0]);
    robj[c] = data->comps[c].source_class;
  }
  auto extract = [data](int comp, const Perm& p, int slot) {
    const auto& cd = data->classes[data->comps[comp].source_class];
    int off = 0;
    for (int j = 0; j < slot; ++j) off += total_of(cd.x[j]);
    return p.block(off, total_of(cd.x[slot]));
  };
  Word word_copy = w;
  GFunctor left = GFunctor::tabulate(
      apex, boundary, lobj, [data, extract, word_copy](int comp, const Perm& p) {
        const auto& cd = data->classes[data->comps[comp].source_class];
        return letter_left_embed(word_copy[0], cd.x[0], extract(comp, p, 0));
      });
  int last = k - 1;
  GFunctor right = GFunctor::tabulate(
      apex, boundary, robj,
      [data, extract, word_copy, last](int comp, const Perm& p) {
        const auto& cd = data->classes[data->comps[comp].source_class];
        return letter_right_embed(word_copy[last], cd.x[last],
                                  extract(comp, p, last));
      });

  Span s;
  s.source = boundary;
  s.target = boundary;
  s.apex = apex;
  s.left = std::move(left);
  s.right = std::move(right);
  s.max_card = max_card;
  s.colors = colors;
  int deg = 0;
  for (int d : word_degree(w, colors)) deg += d;
  s.degree = deg;
  s.exact_up_to = max_card - max_positive_offset(w);
  s.word = w;
  s.flat = data;
  return s;
}

}  // namespace

// Cached so every span of the same word shares one apex instance; functor
// composition and naturality checks compare groupoid pointers.
Span flat_word_span(const Word& w, int max_card, int colors) {
  using Key = std::tuple<Word, int, int>;
  static std::map<Key, Span> cache;
  static std::mutex mtx;
  Key key{w, max_card, colors};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Span s = build_flat_word_span(w, max_card, colors);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, std::move(s)).first->second;
}

Span flat_word_span_uncached(const Word& w, int max_card, int colors) {
  return build_flat_word_span(w, max_card, colors);
}

}  // namespace spancalc
