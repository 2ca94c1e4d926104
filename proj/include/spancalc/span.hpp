#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spancalc/groupoid.hpp"
#include "spancalc/word.hpp"

namespace spancalc {

// Span of groupoids S : source => target, legs left : apex -> target and
// right : apex -> source.  Boundaries are truncations of the groupoid of
// finite colored sets; the span is exact (agrees with the untruncated
// composite) on source classes of total <= exact_up_to.
struct Span {
  GroupoidPtr source, target, apex;
  GFunctor left, right;
  int max_card = 0;
  int colors = 1;
  int degree = 0;  // target total minus source total, on every component
  int exact_up_to = 0;
  std::optional<Word> word;
  std::shared_ptr<const FlatSpanData> flat;
};

// Canonical bracketing-free composite of generator spans for a word, with
// classification tables.  Deterministic: components are ordered by source
// class, then by lexicographically smallest junction tuple.
Span flat_word_span(const Word& w, int max_card, int colors = 1);

// The same build without the process-wide cache.  Spans built this way do
// not share apex instances with anything else, so use only for timing.
Span flat_word_span_uncached(const Word& w, int max_card, int colors = 1);

Span identity_span(int max_card, int colors = 1);
Span zero_span(int max_card, int colors, int degree);
Span annihilation_span(int max_card, int color = 0, int colors = 1);
Span creation_span(int max_card, int color = 0, int colors = 1);

// Swap the two legs.
Span dagger(const Span& s);

// Componentwise disjoint union; boundaries and degree must agree.
Span direct_sum(const Span& a, const Span& b);

// Composite t . s (s acts first) by orbit classification of junction
// triples.  OpenMP-parallel over component pairs.
Span compose(const Span& t, const Span& s);

// Serial reference: classify raw triples by exhaustive pairwise action and
// union-find, no orbit transversal bookkeeping.
Span compose_raw_triples(const Span& t, const Span& s);

// Equivalence of spans over the same boundaries, restricted to apex
// components whose source class total is <= source_bound.  Finds an explicit
// witness: a component matching with automorphism-group isomorphisms
// intertwining both legs up to conjugation.
bool spans_isomorphic(const Span& a, const Span& b, int source_bound);

struct TamenessReport {
  bool left_faithful = false;
  bool right_faithful = false;
  int components = 0;
  long long max_aut_order = 0;
};
TamenessReport tameness_report(const Span& s);

struct SpanClassInfo {
  int comp = -1;
  std::string source_label, target_label;
  long long aut_order = 0;
  int source_total = 0;
};
std::vector<SpanClassInfo> span_classes(const Span& s);

}  // namespace spancalc
