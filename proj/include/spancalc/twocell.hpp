#pragma once

#include "spancalc/span.hpp"

namespace spancalc {

// 2-cell between parallel spans: a groupoid over both apexes together with
// natural isomorphisms filling the two boundary triangles.
//
//   to_src : apex -> src.apex,  to_tgt : apex -> tgt.apex
//   mu : src.left  . to_src  =>  tgt.left  . to_tgt   (target boundary)
//   nu : src.right . to_src  =>  tgt.right . to_tgt   (source boundary)
//
// The cell is complete on source classes of total <= exact_up_to.
struct TwoCell {
  Span src, tgt;
  GroupoidPtr apex;
  GFunctor to_src, to_tgt;
  NaturalIso mu, nu;
  int exact_up_to = 0;
};

TwoCell identity_cell(const Span& s);
TwoCell zero_cell(const Span& src, const Span& tgt);

// Swap source and target, inverting mu and nu.
TwoCell converse(const TwoCell& c);

// later . first, glued over the shared middle span (matched by word).
TwoCell vertical_compose(const TwoCell& later, const TwoCell& first);

// Horizontal composition with a single generator span on the right
// (acting first) or on the left (acting last).  Source and target spans must
// be canonical word spans with classification tables.
TwoCell whisker_right_letter(const TwoCell& c, const Letter& l);
TwoCell whisker_left_letter(const TwoCell& c, const Letter& l);
TwoCell whisker_right(const TwoCell& c, const Word& suffix);
TwoCell whisker_left(const TwoCell& c, const Word& prefix);

// Disjoint union of apexes over shared source and target words.
TwoCell sum_cells(const TwoCell& a, const TwoCell& b);

// ---- generator cells -------------------------------------------------

// e => "- +": splits the identity off the lower-raise composite.
TwoCell cup_lr(int max_card);
// e => "+ -": unit of the raising-lowering adjunction.
TwoCell cup_rl(int max_card);
// "+ -" => "- +": the crossing embedding of the composite the other way.
TwoCell crossing_cell(int max_card);
// "l l" => "l l": swaps the two strands of a doubled letter.
TwoCell symmetry_cell(bool raise, int max_card);

// ---- auditing and comparison ------------------------------------------

// Functor and naturality audit; construction already enforces most of it.
bool twocell_valid(const TwoCell& c);

// No apex components over source classes of total <= bound.
bool cell_is_zero(const TwoCell& c, int bound);

// Equivalence of parallel 2-cells over the same words, restricted to source
// classes of total <= bound.  Finds an explicit witness: an equivalence of
// apexes with connecting isomorphisms respecting both pasted triangles.
bool equivalent_two_cells(const TwoCell& a, const TwoCell& b, int bound);

}  // namespace spancalc
