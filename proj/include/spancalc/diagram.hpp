#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spancalc/twocell.hpp"

namespace spancalc {

// Generator 2-cells of the one-color diagram calculus.  Cup/cap names give
// the boundary letters left to right; Conv marks the converse direction.
enum class Gen {
  CupLR,         // e => "- +"
  CapLR,         // "- +" => e
  CupRL,         // e => "+ -"
  CapRL,         // "+ -" => e
  Crossing,      // "+ -" => "- +"
  CrossingConv,  // "- +" => "+ -"
  SymRaise,      // "+ +" => "+ +"
  SymLower,      // "- -" => "- -"
};

Word gen_source_word(Gen g);
Word gen_target_word(Gen g);
std::string gen_name(Gen g);
TwoCell gen_cell(Gen g, int max_card);
Gen converse_gen(Gen g);

// One generator applied at a word position, identity elsewhere: the letters
// [pos, pos + |gen source|) must match the generator's source word and are
// rewritten to its target word.
struct Layer {
  Gen gen;
  int pos = 0;
};

// Vertical composite of whiskered generator layers, listed bottom up:
// layers[0] acts on `source` first.  No layers means the identity cell.
struct CellTerm {
  Word source;
  std::vector<Layer> layers;
};

// Word after all layer rewrites; throws if some layer does not match.
Word term_target_word(const CellTerm& term);

// The term read upside down: every layer conversed, in reverse order.
CellTerm mirror_term(const CellTerm& term);

// Span of a one-cell word; the window must cover the word length so every
// stage of the composite is represented.
Span eval_one_cell(const Word& w, int max_card);

TwoCell eval_term(const CellTerm& term, int max_card);

// Sum of parallel terms (at least one).
TwoCell eval_terms(const std::vector<CellTerm>& terms, int max_card);

// The relation a 2-cell induces between the histories of its boundary words
// over one source-boundary class.  A history is an apex component of a word
// span, rendered as its profile path with its automorphism group order.
struct HistoryTrace {
  Word source, target;
  int boundary_class = 0;
  std::vector<std::string> source_histories;
  std::vector<std::string> target_histories;
  std::vector<long long> source_auts, target_auts;
  std::vector<std::pair<int, int>> related;  // indices into the two lists
};

HistoryTrace trace_histories(const CellTerm& term, int boundary_class,
                             int max_card);

// One block per boundary class of total <= bound, unrelated histories
// spelled out as "nothing".
std::string render_histories(const CellTerm& term, int max_card, int bound);

// What a relation asserts about its sides.  One-sided kinds compare the left
// side against the zero or identity cell on its own boundary.
enum class RelationKind { Equal, NotEqual, Zero, Identity, NotIdentity };

std::string relation_kind_name(RelationKind k);

struct Relation {
  std::string name;
  std::vector<CellTerm> lhs;
  std::vector<CellTerm> rhs;  // empty for one-sided kinds
  RelationKind kind = RelationKind::Equal;
};

struct RelationResult {
  std::string name;
  RelationKind kind = RelationKind::Equal;
  bool pass = false;
  int bound = 0;  // source-class window the comparison covered
  std::size_t lhs_components = 0;
  std::size_t rhs_components = 0;
  double millis = 0.0;
};

RelationResult check_relation(const Relation& rel, int max_card);

// Checks every relation at the given truncation; OpenMP-parallel over
// relations, results in catalog order.
std::vector<RelationResult> check_catalog(const std::vector<Relation>& catalog,
                                          int max_card);

// The defining relations of the calculus plus negative controls that pin
// down which composites must NOT collapse.
std::vector<Relation> heisenberg_catalog();

}  // namespace spancalc
