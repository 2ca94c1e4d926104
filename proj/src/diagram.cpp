#include "spancalc/diagram.hpp"

#include <chrono>
#include <set>
#include <stdexcept>
#include <utility>

#include "spancalc/parallel.hpp"

namespace spancalc {

namespace {

const Letter kRaise = raise_letter();
const Letter kLower = lower_letter();

// Rewrites w in place by one layer, checking the matched letters.
void apply_layer(Word& w, const Layer& layer) {
  Word src = gen_source_word(layer.gen);
  Word tgt = gen_target_word(layer.gen);
  if (layer.pos < 0 ||
      layer.pos + static_cast<int>(src.size()) > static_cast<int>(w.size()))
    throw std::invalid_argument("layer position out of range for " +
                                gen_name(layer.gen) + " in " + word_str(w));
  for (std::size_t i = 0; i < src.size(); ++i)
    if (!(w[layer.pos + i] == src[i]))
      throw std::invalid_argument("layer " + gen_name(layer.gen) +
                                  " does not match " + word_str(w));
  w.erase(w.begin() + layer.pos, w.begin() + layer.pos + src.size());
  w.insert(w.begin() + layer.pos, tgt.begin(), tgt.end());
}

}  // namespace

Word gen_source_word(Gen g) {
  switch (g) {
    case Gen::CupLR:
    case Gen::CupRL:
      return {};
    case Gen::CapLR:
    case Gen::CrossingConv:
      return {kLower, kRaise};
    case Gen::CapRL:
    case Gen::Crossing:
      return {kRaise, kLower};
    case Gen::SymRaise:
      return {kRaise, kRaise};
    case Gen::SymLower:
      return {kLower, kLower};
  }
  throw std::logic_error("unknown generator");
}

Word gen_target_word(Gen g) {
  switch (g) {
    case Gen::CapLR:
    case Gen::CapRL:
      return {};
    case Gen::CupLR:
    case Gen::Crossing:
      return {kLower, kRaise};
    case Gen::CupRL:
    case Gen::CrossingConv:
      return {kRaise, kLower};
    case Gen::SymRaise:
      return {kRaise, kRaise};
    case Gen::SymLower:
      return {kLower, kLower};
  }
  throw std::logic_error("unknown generator");
}

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::CupLR: return "cup-lr";
    case Gen::CapLR: return "cap-lr";
    case Gen::CupRL: return "cup-rl";
    case Gen::CapRL: return "cap-rl";
    case Gen::Crossing: return "crossing";
    case Gen::CrossingConv: return "crossing-conv";
    case Gen::SymRaise: return "sym-raise";
    case Gen::SymLower: return "sym-lower";
  }
  throw std::logic_error("unknown generator");
}

TwoCell gen_cell(Gen g, int max_card) {
  switch (g) {
    case Gen::CupLR: return cup_lr(max_card);
    case Gen::CapLR: return converse(cup_lr(max_card));
    case Gen::CupRL: return cup_rl(max_card);
    case Gen::CapRL: return converse(cup_rl(max_card));
    case Gen::Crossing: return crossing_cell(max_card);
    case Gen::CrossingConv: return converse(crossing_cell(max_card));
    case Gen::SymRaise: return symmetry_cell(true, max_card);
    case Gen::SymLower: return symmetry_cell(false, max_card);
  }
  throw std::logic_error("unknown generator");
}

Gen converse_gen(Gen g) {
  switch (g) {
    case Gen::CupLR: return Gen::CapLR;
    case Gen::CapLR: return Gen::CupLR;
    case Gen::CupRL: return Gen::CapRL;
    case Gen::CapRL: return Gen::CupRL;
    case Gen::Crossing: return Gen::CrossingConv;
    case Gen::CrossingConv: return Gen::Crossing;
    case Gen::SymRaise: return Gen::SymRaise;
    case Gen::SymLower: return Gen::SymLower;
  }
  throw std::logic_error("unknown generator");
}

Word term_target_word(const CellTerm& term) {
  Word w = term.source;
  for (const Layer& layer : term.layers) apply_layer(w, layer);
  return w;
}

CellTerm mirror_term(const CellTerm& term) {
  CellTerm out;
  out.source = term_target_word(term);
  for (auto it = term.layers.rbegin(); it != term.layers.rend(); ++it)
    out.layers.push_back({converse_gen(it->gen), it->pos});
  return out;
}

Span eval_one_cell(const Word& w, int max_card) {
  if (max_card < static_cast<int>(w.size()))
    throw std::invalid_argument(
        "window too small: " + word_str(w) + " needs max_card >= " +
        std::to_string(w.size()));
  return flat_word_span(w, max_card, 1);
}

TwoCell eval_term(const CellTerm& term, int max_card) {
  Word w = term.source;
  bool have = false;
  TwoCell acc;
  for (const Layer& layer : term.layers) {
    Word prefix(w.begin(), w.begin() + layer.pos);
    apply_layer(w, layer);
    Word suffix(w.begin() + layer.pos + gen_target_word(layer.gen).size(),
                w.end());
    TwoCell cell = gen_cell(layer.gen, max_card);
    cell = whisker_right(cell, suffix);
    cell = whisker_left(cell, prefix);
    acc = have ? vertical_compose(cell, acc) : std::move(cell);
    have = true;
  }
  if (!have) return identity_cell(flat_word_span(term.source, max_card, 1));
  return acc;
}

TwoCell eval_terms(const std::vector<CellTerm>& terms, int max_card) {
  if (terms.empty()) throw std::invalid_argument("relation side has no terms");
  TwoCell acc = eval_term(terms.front(), max_card);
  for (std::size_t i = 1; i < terms.size(); ++i)
    acc = sum_cells(acc, eval_term(terms[i], max_card));
  return acc;
}

namespace {

int profile_total(const std::vector<int>& profile) {
  int t = 0;
  for (int v : profile) t += v;
  return t;
}

std::string profile_str(const std::vector<int>& profile) {
  if (profile.size() == 1) return std::to_string(profile[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile[i]);
  }
  return s + ")";
}

// Profile path of an apex component, source to target, with its
// automorphism group order.
std::string history_str(const Span& s, int comp) {
  const auto& cd = s.flat->classes[s.flat->comps[comp].source_class];
  std::string out;
  for (int j = static_cast<int>(cd.q.size()) - 1; j >= 0; --j) {
    if (!out.empty()) out += " -> ";
    out += profile_str(cd.q[j]);
  }
  return out + " (aut " + std::to_string(s.apex->at(comp).aut.order()) + ")";
}

HistoryTrace trace_cell(const TwoCell& cell, const Word& src_word,
                        const Word& tgt_word, int boundary_class) {
  if (!cell.src.flat || !cell.tgt.flat)
    throw std::logic_error("history tables missing");
  const GroupoidPtr& boundary = cell.src.source;
  if (boundary_class < 0 || boundary_class >= boundary->size())
    throw std::invalid_argument("class outside window");

  HistoryTrace tr;
  tr.source = src_word;
  tr.target = tgt_word;
  tr.boundary_class = boundary_class;
  std::vector<int> src_local(cell.src.apex->size(), -1);
  std::vector<int> tgt_local(cell.tgt.apex->size(), -1);
  for (int c = 0; c < cell.src.apex->size(); ++c)
    if (cell.src.flat->comps[c].source_class == boundary_class) {
      src_local[c] = static_cast<int>(tr.source_histories.size());
      tr.source_histories.push_back(history_str(cell.src, c));
      tr.source_auts.push_back(cell.src.apex->at(c).aut.order());
    }
  for (int c = 0; c < cell.tgt.apex->size(); ++c)
    if (cell.tgt.flat->comps[c].source_class == boundary_class) {
      tgt_local[c] = static_cast<int>(tr.target_histories.size());
      tr.target_histories.push_back(history_str(cell.tgt, c));
      tr.target_auts.push_back(cell.tgt.apex->at(c).aut.order());
    }
  std::set<std::pair<int, int>> pairs;
  for (int m = 0; m < cell.apex->size(); ++m) {
    int sc = src_local[cell.to_src.obj(m)];
    if (sc < 0) continue;
    pairs.insert({sc, tgt_local[cell.to_tgt.obj(m)]});
  }
  tr.related.assign(pairs.begin(), pairs.end());
  return tr;
}

}  // namespace

HistoryTrace trace_histories(const CellTerm& term, int boundary_class,
                             int max_card) {
  return trace_cell(eval_term(term, max_card), term.source,
                    term_target_word(term), boundary_class);
}

std::string render_histories(const CellTerm& term, int max_card, int bound) {
  TwoCell cell = eval_term(term, max_card);
  Word tgt_word = term_target_word(term);
  const GroupoidPtr& boundary = cell.src.source;
  std::string out;
  for (int c = 0; c < boundary->size(); ++c) {
    if (profile_total(boundary->at(c).profile) > bound) continue;
    HistoryTrace tr = trace_cell(cell, term.source, tgt_word, c);
    out += "class " + boundary->at(c).label + ": " + word_str(tr.source) +
           " => " + word_str(tr.target) + "\n";
    for (std::size_t i = 0; i < tr.source_histories.size(); ++i)
      out += "  src " + std::to_string(i) + ": " + tr.source_histories[i] +
             "\n";
    for (std::size_t i = 0; i < tr.target_histories.size(); ++i)
      out += "  tgt " + std::to_string(i) + ": " + tr.target_histories[i] +
             "\n";
    if (tr.source_histories.empty() && tr.target_histories.empty()) {
      out += "  (no histories)\n";
      continue;
    }
    std::vector<bool> src_hit(tr.source_histories.size(), false);
    std::vector<bool> tgt_hit(tr.target_histories.size(), false);
    for (auto [i, j] : tr.related) {
      src_hit[i] = tgt_hit[j] = true;
      out += "  src " + std::to_string(i) + " ~ tgt " + std::to_string(j) +
             "\n";
    }
    for (std::size_t i = 0; i < src_hit.size(); ++i)
      if (!src_hit[i]) out += "  src " + std::to_string(i) + " ~ nothing\n";
    for (std::size_t j = 0; j < tgt_hit.size(); ++j)
      if (!tgt_hit[j]) out += "  nothing ~ tgt " + std::to_string(j) + "\n";
  }
  return out;
}

std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::Equal: return "equal";
    case RelationKind::NotEqual: return "not-equal";
    case RelationKind::Zero: return "zero";
    case RelationKind::Identity: return "identity";
    case RelationKind::NotIdentity: return "not-identity";
  }
  throw std::logic_error("unknown relation kind");
}

RelationResult check_relation(const Relation& rel, int max_card) {
  auto start = std::chrono::steady_clock::now();
  RelationResult res;
  res.name = rel.name;
  res.kind = rel.kind;

  TwoCell lhs = eval_terms(rel.lhs, max_card);
  res.lhs_components = lhs.apex->size();
  switch (rel.kind) {
    case RelationKind::Zero: {
      res.bound = lhs.exact_up_to;
      res.pass = cell_is_zero(lhs, res.bound);
      break;
    }
    case RelationKind::Identity:
    case RelationKind::NotIdentity: {
      TwoCell id =
          identity_cell(flat_word_span(rel.lhs.front().source, max_card, 1));
      res.rhs_components = id.apex->size();
      res.bound = std::min(lhs.exact_up_to, id.exact_up_to);
      bool eq = equivalent_two_cells(lhs, id, res.bound);
      res.pass = (rel.kind == RelationKind::Identity) ? eq : !eq;
      break;
    }
    case RelationKind::Equal:
    case RelationKind::NotEqual: {
      TwoCell rhs = eval_terms(rel.rhs, max_card);
      res.rhs_components = rhs.apex->size();
      res.bound = std::min(lhs.exact_up_to, rhs.exact_up_to);
      bool eq = equivalent_two_cells(lhs, rhs, res.bound);
      res.pass = (rel.kind == RelationKind::Equal) ? eq : !eq;
      break;
    }
  }
  res.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return res;
}

std::vector<RelationResult> check_catalog(const std::vector<Relation>& catalog,
                                          int max_card) {
  std::vector<RelationResult> out(catalog.size());
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < catalog.size(); ++i)
      out[i] = check_relation(catalog[i], max_card);
  } else {
    for (std::size_t i = 0; i < catalog.size(); ++i)
      out[i] = check_relation(catalog[i], max_card);
  }
  return out;
}

std::vector<Relation> heisenberg_catalog() {
  const Word none{};
  const Word r{kRaise};
  const Word l{kLower};
  const Word lr{kLower, kRaise};
  const Word rl{kRaise, kLower};
  const Word rr{kRaise, kRaise};
  const Word ll{kLower, kLower};
  const Word rrr{kRaise, kRaise, kRaise};
  const Word lll{kLower, kLower, kLower};

  std::vector<Relation> cat;
  auto add = [&cat](std::string name, std::vector<CellTerm> lhs,
                    std::vector<CellTerm> rhs, RelationKind kind) {
    cat.push_back({std::move(name), std::move(lhs), std::move(rhs), kind});
  };

  // Splitting of the lower-raise composite: the cup-cap pair is a splitting
  // of the identity and the crossing pair the complementary projector.
  add("cup-cap-identity", {{none, {{Gen::CupLR, 0}, {Gen::CapLR, 0}}}}, {},
      RelationKind::Identity);
  add("crossing-is-split-mono",
      {{rl, {{Gen::Crossing, 0}, {Gen::CrossingConv, 0}}}}, {},
      RelationKind::Identity);
  add("cap-absorbs-crossing", {{rl, {{Gen::Crossing, 0}, {Gen::CapLR, 0}}}},
      {}, RelationKind::Zero);
  add("crossing-blocks-cup", {{none, {{Gen::CupLR, 0}, {Gen::CrossingConv, 0}}}},
      {}, RelationKind::Zero);
  add("lower-raise-decomposition",
      {{lr, {{Gen::CapLR, 0}, {Gen::CupLR, 0}}},
       {lr, {{Gen::CrossingConv, 0}, {Gen::Crossing, 0}}}},
      {}, RelationKind::Identity);
  add("projector-is-not-identity",
      {{lr, {{Gen::CrossingConv, 0}, {Gen::Crossing, 0}}}}, {},
      RelationKind::NotIdentity);
  add("unit-pairing-is-not-identity",
      {{none, {{Gen::CupRL, 0}, {Gen::CapRL, 0}}}}, {},
      RelationKind::NotIdentity);

  // Snake identities: both composites of a unit and a counit straighten out.
  add("snake-lower-right", {{l, {{Gen::CupRL, 1}, {Gen::CapLR, 0}}}}, {},
      RelationKind::Identity);
  add("snake-raise-left", {{r, {{Gen::CupRL, 0}, {Gen::CapLR, 1}}}}, {},
      RelationKind::Identity);
  add("snake-raise-right", {{r, {{Gen::CupLR, 1}, {Gen::CapRL, 0}}}}, {},
      RelationKind::Identity);
  add("snake-lower-left", {{l, {{Gen::CupLR, 0}, {Gen::CapRL, 1}}}}, {},
      RelationKind::Identity);

  // Symmetric group relations for the strand symmetries.
  add("symmetry-raise-involution",
      {{rr, {{Gen::SymRaise, 0}, {Gen::SymRaise, 0}}}}, {},
      RelationKind::Identity);
  add("symmetry-lower-involution",
      {{ll, {{Gen::SymLower, 0}, {Gen::SymLower, 0}}}}, {},
      RelationKind::Identity);
  add("braid-raise",
      {{rrr, {{Gen::SymRaise, 0}, {Gen::SymRaise, 1}, {Gen::SymRaise, 0}}}},
      {{rrr, {{Gen::SymRaise, 1}, {Gen::SymRaise, 0}, {Gen::SymRaise, 1}}}},
      RelationKind::Equal);
  add("braid-lower",
      {{lll, {{Gen::SymLower, 0}, {Gen::SymLower, 1}, {Gen::SymLower, 0}}}},
      {{lll, {{Gen::SymLower, 1}, {Gen::SymLower, 0}, {Gen::SymLower, 1}}}},
      RelationKind::Equal);
  add("crossings-do-not-commute",
      {{rrr, {{Gen::SymRaise, 0}, {Gen::SymRaise, 1}}}},
      {{rrr, {{Gen::SymRaise, 1}, {Gen::SymRaise, 0}}}},
      RelationKind::NotEqual);

  // A closed loop with a twist on the through strand vanishes.
  add("twist-vanishes",
      {{r, {{Gen::CupLR, 0}, {Gen::SymRaise, 1}, {Gen::CapLR, 0}}}}, {},
      RelationKind::Zero);
  // The adjunction unit does not slide through a crossing: pushing the new
  // pair past the lower strand is a genuinely different cell.
  add("unit-does-not-slide-past-lower",
      {{l, {{Gen::CupRL, 0}, {Gen::SymLower, 1}, {Gen::Crossing, 0}}}},
      {{l, {{Gen::CupRL, 1}}}}, RelationKind::NotEqual);
  return cat;
}

}  // namespace spancalc
