#include "spancalc/twocell.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spancalc {

namespace {

int total_of(const std::vector<int>& profile) {
  int t = 0;
  for (int v : profile) t += v;
  return t;
}

Perm blockdiag_all(const std::vector<Perm>& ps) {
  Perm out(0);
  for (const Perm& p : ps) out = Perm::block_diag(out, p);
  return out;
}

// The generator cells write identity mu/nu against a specific tuple; that is
// only sound when the tuple is its own orbit representative.
void require_own_rep(const std::vector<Perm>& conn) {
  for (const Perm& p : conn)
    if (!p.is_identity())
      throw std::logic_error("generator tuple is not its own rep");
}

// Inverse of color_extend: strip the added point, or nullopt if p is not an
// extension along (x, color).
std::optional<Perm> color_unextend(const Perm& p, const std::vector<int>& x,
                                   int color) {
  int pos = block_offset(x, color) + x[color];
  if (p(pos) != pos) return std::nullopt;
  int n = p.degree();
  std::vector<int> img(n - 1);
  auto grow = [pos](int i) { return i < pos ? i : i + 1; };
  auto shrink = [pos](int i) { return i < pos ? i : i - 1; };
  for (int i = 0; i < n - 1; ++i) img[i] = shrink(p(grow(i)));
  Perm b{std::move(img)};
  if (!(color_extend(b, x, color) == p)) return std::nullopt;
  return b;
}

int cell_source_class(const TwoCell& c, int z) {
  return c.src.right.obj(c.to_src.obj(z));
}

void require_words(const TwoCell& c) {
  if (!c.src.word || !c.src.flat || !c.tgt.word || !c.tgt.flat)
    throw std::invalid_argument("cell endpoints must be canonical word spans");
}

}  // namespace

TwoCell identity_cell(const Span& s) {
  TwoCell c;
  c.src = s;
  c.tgt = s;
  c.apex = s.apex;
  c.to_src = GFunctor::identity(s.apex);
  c.to_tgt = GFunctor::identity(s.apex);
  c.mu = NaturalIso::identity_for(s.left);
  c.nu = NaturalIso::identity_for(s.right);
  c.exact_up_to = s.exact_up_to;
  return c;
}

TwoCell zero_cell(const Span& src, const Span& tgt) {
  TwoCell c;
  c.src = src;
  c.tgt = tgt;
  c.apex = std::make_shared<const Groupoid>(std::vector<Component>{});
  c.to_src = GFunctor::tabulate(c.apex, src.apex, {},
                                [](int, const Perm& p) { return p; });
  c.to_tgt = GFunctor::tabulate(c.apex, tgt.apex, {},
                                [](int, const Perm& p) { return p; });
  c.exact_up_to = std::min(src.exact_up_to, tgt.exact_up_to);
  return c;
}

TwoCell converse(const TwoCell& c) {
  TwoCell out;
  out.src = c.tgt;
  out.tgt = c.src;
  out.apex = c.apex;
  out.to_src = c.to_tgt;
  out.to_tgt = c.to_src;
  out.mu = c.mu.inverse();
  out.nu = c.nu.inverse();
  out.exact_up_to = c.exact_up_to;
  return out;
}

TwoCell sum_cells(const TwoCell& a, const TwoCell& b) {
  if (!a.src.word || !b.src.word || !(*a.src.word == *b.src.word) ||
      !a.tgt.word || !b.tgt.word || !(*a.tgt.word == *b.tgt.word) ||
      a.src.max_card != b.src.max_card)
    throw std::invalid_argument("cell sum needs matching endpoints");
  int na = a.apex->size();
  std::vector<Component> comps;
  for (const Component& c : a.apex->components()) comps.push_back(c);
  for (const Component& c : b.apex->components()) comps.push_back(c);
  auto apex = std::make_shared<const Groupoid>(std::move(comps));

  std::vector<int> osrc, otgt;
  for (int z = 0; z < na; ++z) {
    osrc.push_back(a.to_src.obj(z));
    otgt.push_back(a.to_tgt.obj(z));
  }
  for (int z = 0; z < b.apex->size(); ++z) {
    osrc.push_back(b.to_src.obj(z));
    otgt.push_back(b.to_tgt.obj(z));
  }
  TwoCell out;
  out.src = a.src;
  out.tgt = a.tgt;
  out.apex = apex;
  out.to_src = GFunctor::tabulate(apex, a.src.apex, osrc,
                                  [&](int z, const Perm& p) {
                                    return z < na ? a.to_src.apply(z, p)
                                                  : b.to_src.apply(z - na, p);
                                  });
  out.to_tgt = GFunctor::tabulate(apex, a.tgt.apex, otgt,
                                  [&](int z, const Perm& p) {
                                    return z < na ? a.to_tgt.apply(z, p)
                                                  : b.to_tgt.apply(z - na, p);
                                  });
  std::vector<Perm> mu = a.mu.comps(), nu = a.nu.comps();
  mu.insert(mu.end(), b.mu.comps().begin(), b.mu.comps().end());
  nu.insert(nu.end(), b.nu.comps().begin(), b.nu.comps().end());
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to = std::min(a.exact_up_to, b.exact_up_to);
  return out;
}

// ------------------------------------------------------------------ vertical

TwoCell vertical_compose(const TwoCell& later, const TwoCell& first) {
  if (!first.tgt.word || !later.src.word ||
      !(*first.tgt.word == *later.src.word) ||
      first.tgt.max_card != later.src.max_card)
    throw std::invalid_argument("vertical composition needs a shared middle");
  const Span& mid = first.tgt;

  struct Rec {
    int za, zb;
    Perm mrep;
  };
  std::vector<Component> comps;
  std::vector<Rec> recs;
  std::map<int, int> per_class;

  for (int za = 0; za < first.apex->size(); ++za) {
    int wm = first.to_tgt.obj(za);
    const PermGroup& ga = first.apex->at(za).aut;
    for (int zb = 0; zb < later.apex->size(); ++zb) {
      if (later.to_src.obj(zb) != wm) continue;
      const PermGroup& gb = later.apex->at(zb).aut;
      const PermGroup& gm = mid.apex->at(wm).aut;

      // Orbits of the middle junction m under m -> to_src(b) m to_tgt(a)^-1.
      std::vector<char> seen(gm.order(), 0);
      for (int seed = 0; seed < (int)gm.order(); ++seed) {
        if (seen[seed]) continue;
        std::vector<int> orbit{seed};
        seen[seed] = 1;
        for (size_t h = 0; h < orbit.size(); ++h) {
          const Perm& m = gm.at(orbit[h]);
          for (const Perm& a : ga.generators()) {
            int t = gm.index_of(m * first.to_tgt.apply(za, a).inverse());
            if (!seen[t]) seen[t] = 1, orbit.push_back(t);
          }
          for (const Perm& b : gb.generators()) {
            int t = gm.index_of(later.to_src.apply(zb, b) * m);
            if (!seen[t]) seen[t] = 1, orbit.push_back(t);
          }
        }
        const Perm& mrep = gm.at(seed);
        std::vector<Perm> stab;
        for (const Perm& a : ga.elements()) {
          Perm want = mrep * first.to_tgt.apply(za, a) * mrep.inverse();
          int bi = later.to_src.preimage_idx(zb, want);
          if (bi >= 0)
            stab.push_back(Perm::block_diag(a, later.apex->at(zb).aut.at(bi)));
        }
        PermGroup g = PermGroup::from_elements(ga.degree() + gb.degree(),
                                               std::move(stab));
        if (g.order() * (long long)orbit.size() != ga.order() * gb.order())
          throw std::logic_error("orbit-stabilizer mismatch");
        int cls = cell_source_class(first, za);
        std::string label = first.src.source->at(cls).label + "#" +
                            std::to_string(per_class[cls]++);
        comps.push_back({label, std::move(g), {}});
        recs.push_back({za, zb, mrep});
      }
    }
  }

  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> osrc, otgt;
  std::vector<Perm> mu, nu;
  for (const Rec& r : recs) {
    osrc.push_back(first.to_src.obj(r.za));
    otgt.push_back(later.to_tgt.obj(r.zb));
    int wm = first.to_tgt.obj(r.za);
    mu.push_back(later.mu.at(r.zb) * mid.left.apply(wm, r.mrep) *
                 first.mu.at(r.za));
    nu.push_back(later.nu.at(r.zb) * mid.right.apply(wm, r.mrep) *
                 first.nu.at(r.za));
  }
  auto split = [&](int z, const Perm& p, bool a_side) {
    int da = first.apex->at(recs[z].za).aut.degree();
    return a_side ? p.block(0, da) : p.block(da, p.degree() - da);
  };
  TwoCell out;
  out.src = first.src;
  out.tgt = later.tgt;
  out.apex = apex;
  out.to_src =
      GFunctor::tabulate(apex, first.src.apex, osrc, [&](int z, const Perm& p) {
        return first.to_src.apply(recs[z].za, split(z, p, true));
      });
  out.to_tgt =
      GFunctor::tabulate(apex, later.tgt.apex, otgt, [&](int z, const Perm& p) {
        return later.to_tgt.apply(recs[z].zb, split(z, p, false));
      });
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to = std::min(first.exact_up_to, later.exact_up_to);
  return out;
}

// ------------------------------------------------------------------ whiskers

namespace {

// One endpoint of a whiskered component: where it lands in the new span's
// apex, how group elements transport there, and the boundary values of the
// connecting data that enter the new mu/nu.
struct WhiskerSide {
  int comp = -1;
  bool absorbed = false;  // old word empty: junction folded away
  Perm cperm;             // block-diagonal connecting element (if !absorbed)
  Perm lval, rval;        // left/right boundary values of the transport
};

// Locate the junction tuple of the whiskered word in the new span's tables.
//   right = true : tuple = old rep + [f];  left: tuple = [f] + old rep.
WhiskerSide locate_side(const Span& old_span, int old_comp, const Span& new_span,
                        int new_class, const Perm& f, const PermGroup& junction,
                        bool right_side) {
  const Word& w_old = *old_span.word;
  const auto& cls = new_span.flat->classes[new_class];
  if (!cls.active) throw std::logic_error("whisker hit an inactive class");
  WhiskerSide out;
  if (w_old.empty()) {
    out.absorbed = true;
    out.comp = cls.comp_of.at({});
    // Boundary values are supplied by the caller from f directly.
    return out;
  }
  std::vector<int> tuple;
  const std::vector<int>& rep = old_span.flat->comps[old_comp].rep;
  if (right_side) {
    tuple = rep;
    tuple.push_back(junction.index_of(f));
  } else {
    tuple.push_back(junction.index_of(f));
    tuple.insert(tuple.end(), rep.begin(), rep.end());
  }
  out.comp = cls.comp_of.at(tuple);
  const std::vector<Perm>& conn = cls.connect.at(tuple);
  out.cperm = blockdiag_all(conn);
  const Word& w_new = *new_span.word;
  out.lval = letter_left_embed(w_new.front(), cls.x.front(), conn.front());
  out.rval = letter_right_embed(w_new.back(), cls.x.back(), conn.back());
  return out;
}

}  // namespace

TwoCell whisker_right_letter(const TwoCell& c, const Letter& l) {
  require_words(c);
  const Word& ws = *c.src.word;
  const Word& wt = *c.tgt.word;
  int mc = c.src.max_card, colors = c.src.colors;
  Word ws2 = ws, wt2 = wt;
  ws2.push_back(l);
  wt2.push_back(l);
  Span s2 = flat_word_span(ws2, mc, colors);
  Span t2 = flat_word_span(wt2, mc, colors);
  auto bnd = c.src.source;

  struct Rec {
    int w;                    // old cell component
    Perm frep;                // junction representative in Aut(m)
    WhiskerSide ss, ts;
    int dx;                   // letter carrier size
    std::vector<int> xprof;
  };
  std::vector<Component> comps;
  std::vector<Rec> recs;
  std::map<int, int> per_class;

  for (int w = 0; w < c.apex->size(); ++w) {
    int gs = c.to_src.obj(w), gt = c.to_tgt.obj(w);
    int m = c.src.right.obj(gs);
    if (c.tgt.right.obj(gt) != m)
      throw std::logic_error("cell boundaries disagree");
    std::vector<int> pm = bnd->at(m).profile;
    std::vector<int> ps = pm;
    if (l.raise) {
      if (--ps[l.color] < 0) continue;  // no source class: empty fiber
    } else {
      ++ps[l.color];
      if (total_of(ps) > mc) continue;  // beyond the window
    }
    std::vector<int> px = l.raise ? ps : pm;
    int s2cls = bnd->profile_index(ps);
    const PermGroup& gm = bnd->at(m).aut;
    const PermGroup& gx = bnd->at(bnd->profile_index(px)).aut;
    const PermGroup& gw = c.apex->at(w).aut;

    auto rs = [&](const Perm& a) {
      return c.src.right.apply(gs, c.to_src.apply(w, a));
    };

    // Orbits of f in Aut(m) under f -> rs(a) f lle(b)^-1.
    std::vector<char> seen(gm.order(), 0);
    for (int seed = 0; seed < (int)gm.order(); ++seed) {
      if (seen[seed]) continue;
      std::vector<int> orbit{seed};
      seen[seed] = 1;
      for (size_t h = 0; h < orbit.size(); ++h) {
        const Perm& f = gm.at(orbit[h]);
        for (const Perm& a : gw.generators()) {
          int t = gm.index_of(rs(a) * f);
          if (!seen[t]) seen[t] = 1, orbit.push_back(t);
        }
        for (const Perm& b : gx.generators()) {
          int t = gm.index_of(f * letter_left_embed(l, px, b.inverse()));
          if (!seen[t]) seen[t] = 1, orbit.push_back(t);
        }
      }
      const Perm& frep = gm.at(seed);
      std::vector<Perm> stab;
      for (const Perm& a : gw.elements()) {
        Perm want = frep.inverse() * rs(a) * frep;  // must equal lle(b)
        std::optional<Perm> b =
            l.raise ? color_unextend(want, px, l.color)
                    : std::optional<Perm>(want);
        if (b && gx.contains(*b)) stab.push_back(Perm::block_diag(a, *b));
      }
      PermGroup g =
          PermGroup::from_elements(gw.degree() + gx.degree(), std::move(stab));
      if (g.order() * (long long)orbit.size() != gw.order() * gx.order())
        throw std::logic_error("orbit-stabilizer mismatch");

      Rec r;
      r.w = w;
      r.frep = frep;
      r.dx = gx.degree();
      r.xprof = px;
      r.ss = locate_side(c.src, gs, s2, s2cls, frep, gm, true);
      Perm ft = c.nu.at(w) * frep;
      r.ts = locate_side(c.tgt, gt, t2, s2cls, ft, gm, true);
      if (r.ss.absorbed) {
        r.ss.lval = frep;
        r.ss.rval = Perm(total_of(ps));
      }
      if (r.ts.absorbed) {
        r.ts.lval = ft;
        r.ts.rval = Perm(total_of(ps));
      }
      std::string label =
          bnd->at(s2cls).label + "#" + std::to_string(per_class[s2cls]++);
      comps.push_back({label, std::move(g), {}});
      recs.push_back(std::move(r));
    }
  }

  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> osrc, otgt;
  std::vector<Perm> mu, nu;
  for (const Rec& r : recs) {
    osrc.push_back(r.ss.comp);
    otgt.push_back(r.ts.comp);
    mu.push_back(r.ts.lval.inverse() * c.mu.at(r.w) * r.ss.lval);
    nu.push_back(r.ts.rval.inverse() * r.ss.rval);
  }
  auto transport = [&](const Rec& r, const WhiskerSide& side,
                       const GFunctor& fun, const Perm& p) {
    int dw = c.apex->at(r.w).aut.degree();
    Perm b = p.block(dw, r.dx);
    if (side.absorbed) return b;
    Perm ga = fun.apply(r.w, p.block(0, dw));
    return side.cperm.inverse() * Perm::block_diag(ga, b) * side.cperm;
  };
  TwoCell out;
  out.src = s2;
  out.tgt = t2;
  out.apex = apex;
  out.to_src = GFunctor::tabulate(apex, s2.apex, osrc, [&](int z, const Perm& p) {
    return transport(recs[z], recs[z].ss, c.to_src, p);
  });
  out.to_tgt = GFunctor::tabulate(apex, t2.apex, otgt, [&](int z, const Perm& p) {
    return transport(recs[z], recs[z].ts, c.to_tgt, p);
  });
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to =
      std::min({c.exact_up_to + (l.raise ? -1 : 1), s2.exact_up_to,
                t2.exact_up_to});
  return out;
}

TwoCell whisker_left_letter(const TwoCell& c, const Letter& l) {
  require_words(c);
  const Word& ws = *c.src.word;
  const Word& wt = *c.tgt.word;
  int mc = c.src.max_card, colors = c.src.colors;
  Word ws2{l}, wt2{l};
  ws2.insert(ws2.end(), ws.begin(), ws.end());
  wt2.insert(wt2.end(), wt.begin(), wt.end());
  Span s2 = flat_word_span(ws2, mc, colors);
  Span t2 = flat_word_span(wt2, mc, colors);
  auto bnd = c.src.source;

  struct Rec {
    int w;
    Perm frep;
    WhiskerSide ss, ts;
    int dx;
    std::vector<int> xprof;
  };
  std::vector<Component> comps;
  std::vector<Rec> recs;
  std::map<int, int> per_class;

  for (int w = 0; w < c.apex->size(); ++w) {
    int gs = c.to_src.obj(w), gt = c.to_tgt.obj(w);
    int m = c.src.left.obj(gs);
    if (c.tgt.left.obj(gt) != m)
      throw std::logic_error("cell boundaries disagree");
    std::vector<int> pm = bnd->at(m).profile;
    std::vector<int> q0 = pm;
    if (l.raise) {
      ++q0[l.color];
      if (total_of(q0) > mc) continue;  // beyond the window
    } else {
      if (--q0[l.color] < 0) continue;  // no target object: empty fiber
    }
    std::vector<int> px = l.raise ? pm : q0;
    int s2cls = c.src.flat->comps[gs].source_class;
    if (c.tgt.flat->comps[gt].source_class != s2cls)
      throw std::logic_error("cell boundaries disagree");
    const PermGroup& gm = bnd->at(m).aut;
    const PermGroup& gx = bnd->at(bnd->profile_index(px)).aut;
    const PermGroup& gw = c.apex->at(w).aut;

    auto ls = [&](const Perm& a) {
      return c.src.left.apply(gs, c.to_src.apply(w, a));
    };

    // Orbits of f in Aut(m) under f -> rle(b) f ls(a)^-1.
    std::vector<char> seen(gm.order(), 0);
    for (int seed = 0; seed < (int)gm.order(); ++seed) {
      if (seen[seed]) continue;
      std::vector<int> orbit{seed};
      seen[seed] = 1;
      for (size_t h = 0; h < orbit.size(); ++h) {
        const Perm& f = gm.at(orbit[h]);
        for (const Perm& a : gw.generators()) {
          int t = gm.index_of(f * ls(a).inverse());
          if (!seen[t]) seen[t] = 1, orbit.push_back(t);
        }
        for (const Perm& b : gx.generators()) {
          int t = gm.index_of(letter_right_embed(l, px, b) * f);
          if (!seen[t]) seen[t] = 1, orbit.push_back(t);
        }
      }
      const Perm& frep = gm.at(seed);
      std::vector<Perm> stab;
      for (const Perm& a : gw.elements()) {
        Perm want = frep * ls(a) * frep.inverse();  // must equal rle(b)
        std::optional<Perm> b =
            l.raise ? std::optional<Perm>(want)
                    : color_unextend(want, px, l.color);
        if (b && gx.contains(*b)) stab.push_back(Perm::block_diag(*b, a));
      }
      PermGroup g =
          PermGroup::from_elements(gx.degree() + gw.degree(), std::move(stab));
      if (g.order() * (long long)orbit.size() != gw.order() * gx.order())
        throw std::logic_error("orbit-stabilizer mismatch");

      Rec r;
      r.w = w;
      r.frep = frep;
      r.dx = gx.degree();
      r.xprof = px;
      r.ss = locate_side(c.src, gs, s2, s2cls, frep, gm, false);
      Perm ft = frep * c.mu.at(w).inverse();
      r.ts = locate_side(c.tgt, gt, t2, s2cls, ft, gm, false);
      if (r.ss.absorbed) {
        r.ss.lval = Perm(total_of(q0));
        r.ss.rval = frep.inverse();
      }
      if (r.ts.absorbed) {
        r.ts.lval = Perm(total_of(q0));
        r.ts.rval = ft.inverse();
      }
      std::string label =
          bnd->at(s2cls).label + "#" + std::to_string(per_class[s2cls]++);
      comps.push_back({label, std::move(g), {}});
      recs.push_back(std::move(r));
    }
  }

  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> osrc, otgt;
  std::vector<Perm> mu, nu;
  for (const Rec& r : recs) {
    osrc.push_back(r.ss.comp);
    otgt.push_back(r.ts.comp);
    mu.push_back(r.ts.lval.inverse() * r.ss.lval);
    nu.push_back(r.ts.rval.inverse() * c.nu.at(r.w) * r.ss.rval);
  }
  auto transport = [&](const Rec& r, const WhiskerSide& side,
                       const GFunctor& fun, const Perm& p) {
    Perm b = p.block(0, r.dx);
    if (side.absorbed) return b;
    int dw = c.apex->at(r.w).aut.degree();
    Perm ga = fun.apply(r.w, p.block(r.dx, dw));
    return side.cperm.inverse() * Perm::block_diag(b, ga) * side.cperm;
  };
  TwoCell out;
  out.src = s2;
  out.tgt = t2;
  out.apex = apex;
  out.to_src = GFunctor::tabulate(apex, s2.apex, osrc, [&](int z, const Perm& p) {
    return transport(recs[z], recs[z].ss, c.to_src, p);
  });
  out.to_tgt = GFunctor::tabulate(apex, t2.apex, otgt, [&](int z, const Perm& p) {
    return transport(recs[z], recs[z].ts, c.to_tgt, p);
  });
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to =
      std::min({c.exact_up_to, s2.exact_up_to, t2.exact_up_to});
  return out;
}

TwoCell whisker_right(const TwoCell& c, const Word& suffix) {
  TwoCell out = c;
  for (const Letter& l : suffix) out = whisker_right_letter(out, l);
  return out;
}

TwoCell whisker_left(const TwoCell& c, const Word& prefix) {
  TwoCell out = c;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    out = whisker_left_letter(out, *it);
  return out;
}

// ---------------------------------------------------------------- generators

TwoCell cup_lr(int max_card) {
  Span src = identity_span(max_card);
  Span tgt = flat_word_span({lower_letter(), raise_letter()}, max_card);
  auto bnd = src.source;

  struct Rec {
    int cls, tcomp;
    Perm cperm;
  };
  std::vector<Component> comps;
  std::vector<Rec> recs;
  for (int n = 0; n + 1 <= max_card; ++n) {
    const auto& cls = tgt.flat->classes[n];
    const PermGroup& mid = bnd->at(bnd->profile_index(cls.q[1])).aut;
    std::vector<int> tuple{mid.index_of(Perm(mid.degree()))};
    Rec r;
    r.cls = n;
    r.tcomp = cls.comp_of.at(tuple);
    require_own_rep(cls.connect.at(tuple));
    r.cperm = blockdiag_all(cls.connect.at(tuple));
    comps.push_back(bnd->at(n));
    recs.push_back(std::move(r));
  }
  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> osrc, otgt;
  std::vector<Perm> mu, nu;
  for (const Rec& r : recs) {
    osrc.push_back(r.cls);
    otgt.push_back(r.tcomp);
    mu.push_back(Perm(bnd->at(r.cls).aut.degree()));
    nu.push_back(Perm(bnd->at(r.cls).aut.degree()));
  }
  TwoCell out;
  out.src = src;
  out.tgt = tgt;
  out.apex = apex;
  out.to_src = GFunctor::tabulate(apex, src.apex, osrc,
                                  [](int, const Perm& p) { return p; });
  out.to_tgt =
      GFunctor::tabulate(apex, tgt.apex, otgt, [&](int z, const Perm& p) {
        const Rec& r = recs[z];
        return r.cperm.inverse() * Perm::block_diag(p, p) * r.cperm;
      });
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to = max_card - 1;
  return out;
}

TwoCell cup_rl(int max_card) {
  Span src = identity_span(max_card);
  Span tgt = flat_word_span({raise_letter(), lower_letter()}, max_card);
  auto bnd = src.source;

  struct Rec {
    int cls, tcomp;
  };
  std::vector<Component> comps;
  std::vector<Rec> recs;
  for (int n = 1; n <= max_card; ++n) {
    const auto& cls = tgt.flat->classes[n];
    const PermGroup& mid = bnd->at(bnd->profile_index(cls.q[1])).aut;
    std::vector<int> tuple{mid.index_of(Perm(mid.degree()))};
    int tcomp = cls.comp_of.at(tuple);
    require_own_rep(cls.connect.at(tuple));
    comps.push_back(tgt.apex->at(tcomp));
    recs.push_back({n, tcomp});
  }
  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> osrc, otgt;
  std::vector<Perm> mu, nu;
  for (const Rec& r : recs) {
    osrc.push_back(r.cls);
    otgt.push_back(r.tcomp);
    mu.push_back(Perm(bnd->at(r.cls).aut.degree()));
    nu.push_back(Perm(bnd->at(r.cls).aut.degree()));
  }
  TwoCell out;
  out.src = src;
  out.tgt = tgt;
  out.apex = apex;
  out.to_src =
      GFunctor::tabulate(apex, src.apex, osrc, [&](int z, const Perm& p) {
        int n = recs[z].cls;
        return p.block(0, n - 1).extended(n);
      });
  out.to_tgt = GFunctor::tabulate(apex, tgt.apex, otgt,
                                  [](int, const Perm& p) { return p; });
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to = max_card;
  return out;
}

TwoCell crossing_cell(int max_card) {
  Span src = flat_word_span({raise_letter(), lower_letter()}, max_card);
  Span tgt = flat_word_span({lower_letter(), raise_letter()}, max_card);
  auto bnd = src.source;

  struct Rec {
    int n, scomp, tcomp;
    Perm cperm;
  };
  std::vector<Component> comps;
  std::vector<Rec> recs;
  for (int n = 1; n + 1 <= max_card; ++n) {
    const auto& scls = src.flat->classes[n];
    const PermGroup& smid = bnd->at(bnd->profile_index(scls.q[1])).aut;
    std::vector<int> stuple{smid.index_of(Perm(smid.degree()))};
    int scomp = scls.comp_of.at(stuple);
    require_own_rep(scls.connect.at(stuple));

    const auto& tcls = tgt.flat->classes[n];
    const PermGroup& tmid = bnd->at(bnd->profile_index(tcls.q[1])).aut;
    std::vector<int> tuple{tmid.index_of(Perm::transposition(n + 1, n - 1, n))};
    Rec r;
    r.n = n;
    r.scomp = scomp;
    r.tcomp = tcls.comp_of.at(tuple);
    require_own_rep(tcls.connect.at(tuple));
    r.cperm = blockdiag_all(tcls.connect.at(tuple));
    comps.push_back(src.apex->at(scomp));
    recs.push_back(std::move(r));
  }
  auto apex = std::make_shared<const Groupoid>(std::move(comps));
  std::vector<int> osrc, otgt;
  std::vector<Perm> mu, nu;
  for (const Rec& r : recs) {
    osrc.push_back(r.scomp);
    otgt.push_back(r.tcomp);
    mu.push_back(Perm(r.n));
    nu.push_back(Perm(r.n));
  }
  TwoCell out;
  out.src = src;
  out.tgt = tgt;
  out.apex = apex;
  out.to_src = GFunctor::tabulate(apex, src.apex, osrc,
                                  [](int, const Perm& p) { return p; });
  out.to_tgt =
      GFunctor::tabulate(apex, tgt.apex, otgt, [&](int z, const Perm& p) {
        const Rec& r = recs[z];
        Perm a = p.block(0, r.n - 1).extended(r.n);
        return r.cperm.inverse() * Perm::block_diag(a, a) * r.cperm;
      });
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  out.exact_up_to = max_card - 1;
  return out;
}

TwoCell symmetry_cell(bool raise, int max_card) {
  Letter l = raise ? raise_letter() : lower_letter();
  Span sp = flat_word_span({l, l}, max_card);
  TwoCell out = identity_cell(sp);
  std::vector<Perm> mu, nu;
  for (int z = 0; z < sp.apex->size(); ++z) {
    int n = sp.source->at(sp.flat->comps[z].source_class).total();
    if (raise) {
      mu.push_back(Perm::transposition(n + 2, n, n + 1));
      nu.push_back(Perm(n));
    } else {
      mu.push_back(Perm(n - 2));
      nu.push_back(Perm::transposition(n, n - 2, n - 1));
    }
  }
  out.mu = NaturalIso(std::move(mu));
  out.nu = NaturalIso(std::move(nu));
  return out;
}

// ------------------------------------------------------------------ auditing

bool twocell_valid(const TwoCell& c) {
  GFunctor lsrc = GFunctor::compose(c.src.left, c.to_src);
  GFunctor ltgt = GFunctor::compose(c.tgt.left, c.to_tgt);
  GFunctor rsrc = GFunctor::compose(c.src.right, c.to_src);
  GFunctor rtgt = GFunctor::compose(c.tgt.right, c.to_tgt);
  return c.mu.is_natural(lsrc, ltgt) && c.nu.is_natural(rsrc, rtgt);
}

bool cell_is_zero(const TwoCell& c, int bound) {
  for (int z = 0; z < c.apex->size(); ++z)
    if (c.src.source->at(cell_source_class(c, z)).total() <= bound)
      return false;
  return true;
}

namespace {

// Witness for one component pair: a connecting automorphism sigma on the
// source-apex side whose induced tau closes both pasted triangles and
// conjugates the transported automorphism group correctly.
bool cells_match_at(const TwoCell& a, const TwoCell& b, int za, int zb) {
  if (a.to_src.obj(za) != b.to_src.obj(zb) ||
      a.to_tgt.obj(za) != b.to_tgt.obj(zb))
    return false;
  const PermGroup& ga = a.apex->at(za).aut;
  const PermGroup& gb = b.apex->at(zb).aut;
  if (ga.order() != gb.order()) return false;
  int gobj = a.to_src.obj(za), jobj = a.to_tgt.obj(za);
  const PermGroup& sa = a.src.apex->at(gobj).aut;
  const PermGroup& ta = a.tgt.apex->at(jobj).aut;
  for (const Perm& sigma : sa.elements()) {
    Perm ltau = b.mu.at(zb) * a.src.left.apply(gobj, sigma) *
                a.mu.at(za).inverse();
    int ti = a.tgt.left.preimage_idx(jobj, ltau);
    if (ti < 0) continue;
    const Perm& tau = ta.at(ti);
    if (!(b.nu.at(zb) * a.src.right.apply(gobj, sigma) ==
          a.tgt.right.apply(jobj, tau) * a.nu.at(za)))
      continue;
    bool ok = true;
    for (const Perm& g : ga.generators()) {
      Perm want = sigma * a.to_src.apply(za, g) * sigma.inverse();
      int hi = b.to_src.preimage_idx(zb, want);
      if (hi < 0) {
        ok = false;
        break;
      }
      const Perm& h = gb.at(hi);
      if (!(b.to_tgt.apply(zb, h) ==
            tau * a.to_tgt.apply(za, g) * tau.inverse())) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool match_cells(const std::vector<int>& za, const std::vector<int>& zb,
                 std::vector<int>& assign, size_t i,
                 std::vector<std::vector<int>>& compat, const TwoCell& a,
                 const TwoCell& b) {
  if (i == za.size()) return true;
  for (size_t j = 0; j < zb.size(); ++j) {
    if (assign[j] >= 0) continue;
    int& c = compat[i][j];
    if (c == -1) c = cells_match_at(a, b, za[i], zb[j]) ? 1 : 0;
    if (!c) continue;
    assign[j] = (int)i;
    if (match_cells(za, zb, assign, i + 1, compat, a, b)) return true;
    assign[j] = -1;
  }
  return false;
}

}  // namespace

bool equivalent_two_cells(const TwoCell& a, const TwoCell& b, int bound) {
  if (!a.src.word || !b.src.word || !(*a.src.word == *b.src.word) ||
      !a.tgt.word || !b.tgt.word || !(*a.tgt.word == *b.tgt.word) ||
      a.src.max_card != b.src.max_card)
    throw std::invalid_argument("cells are not parallel");
  std::vector<int> za, zb;
  for (int z = 0; z < a.apex->size(); ++z)
    if (a.src.source->at(cell_source_class(a, z)).total() <= bound)
      za.push_back(z);
  for (int z = 0; z < b.apex->size(); ++z)
    if (b.src.source->at(cell_source_class(b, z)).total() <= bound)
      zb.push_back(z);
  if (za.size() != zb.size()) return false;
  std::vector<int> assign(zb.size(), -1);
  std::vector<std::vector<int>> compat(za.size(),
                                       std::vector<int>(zb.size(), -1));
  return match_cells(za, zb, assign, 0, compat, a, b);
}

}  // namespace spancalc
