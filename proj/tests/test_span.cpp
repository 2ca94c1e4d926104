#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spancalc/span.hpp"

using namespace spancalc;

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("dagger swaps the legs") {
  Span cre = creation_span(4);
  Span d = dagger(cre);
  CHECK(d.degree == -1);
  CHECK(d.source == cre.target);
  CHECK(d.target == cre.source);
  CHECK(d.word == Word{lower_letter()});
  CHECK(d.exact_up_to == 4);
  CHECK(spans_isomorphic(d, annihilation_span(4), 4));
  // Dagger is an involution on the nose.
  Span dd = dagger(d);
  CHECK(dd.word == cre.word);
  CHECK(dd.exact_up_to == cre.exact_up_to);
  CHECK(spans_isomorphic(dd, cre, 3));
}

TEST_CASE("direct sums") {
  int mc = 4;
  Span id = identity_span(mc);
  Span rl = flat_word_span({raise_letter(), lower_letter()}, mc);
  Span sum = direct_sum(rl, id);
  CHECK(sum.apex->size() == rl.apex->size() + id.apex->size());
  CHECK(sum.degree == 0);
  CHECK(sum.left.is_faithful());
  CHECK(spans_isomorphic(sum, direct_sum(id, rl), mc));
  CHECK_FALSE(spans_isomorphic(sum, id, mc));

  Span z = zero_span(mc, 1, 0);
  CHECK(spans_isomorphic(direct_sum(id, z), id, mc));
  CHECK_THROWS(direct_sum(id, creation_span(mc)));  // degree mismatch
}

TEST_CASE("commutation relation as spans") {
  // The composite "- +" decomposes as "+ -" plus the identity.
  int mc = 6;
  Span lhs = flat_word_span({lower_letter(), raise_letter()}, mc);
  Span rhs = direct_sum(flat_word_span({raise_letter(), lower_letter()}, mc),
                        identity_span(mc));
  int bound = std::min(lhs.exact_up_to, rhs.exact_up_to);
  CHECK(bound == 5);
  CHECK(spans_isomorphic(lhs, rhs, bound));
  // Witness robustness: the relation fails against wrong right-hand sides.
  CHECK_FALSE(spans_isomorphic(
      lhs, flat_word_span({raise_letter(), lower_letter()}, mc), bound));
  CHECK_FALSE(spans_isomorphic(lhs, identity_span(mc), bound));
  CHECK_FALSE(spans_isomorphic(
      lhs,
      direct_sum(flat_word_span({raise_letter(), lower_letter()}, mc),
                 flat_word_span({raise_letter(), lower_letter()}, mc)),
      bound));
}

TEST_CASE("composition bookkeeping") {
  int mc = 5;
  Span cre = creation_span(mc);
  Span ann = annihilation_span(mc);
  Span c = compose(ann, cre);
  CHECK(c.degree == 0);
  CHECK(c.exact_up_to == 4);
  CHECK(c.max_card == mc);
  Span c2 = compose(cre, cre);
  CHECK(c2.degree == 2);
  CHECK(c2.exact_up_to == 3);
}

TEST_CASE("double coset composition matches raw triple classification") {
  int mc = 4;
  std::vector<Span> basics = {identity_span(mc), creation_span(mc),
                              annihilation_span(mc)};
  for (const Span& t : basics)
    for (const Span& s : basics) {
      Span fast = compose(t, s);
      Span slow = compose_raw_triples(t, s);
      REQUIRE(fast.apex->size() == slow.apex->size());
      // Same classification: matching component signatures in order.
      for (int c = 0; c < fast.apex->size(); ++c) {
        CHECK(fast.left.obj(c) == slow.left.obj(c));
        CHECK(fast.right.obj(c) == slow.right.obj(c));
        CHECK(fast.apex->at(c).aut.order() == slow.apex->at(c).aut.order());
      }
      int bound = std::min(fast.exact_up_to, slow.exact_up_to);
      CHECK(spans_isomorphic(fast, slow, bound));
    }
}

TEST_CASE("tameness report") {
  Span s = flat_word_span({lower_letter(), raise_letter()}, 5);
  auto r = tameness_report(s);
  CHECK(r.left_faithful);
  CHECK(r.right_faithful);
  CHECK(r.components == s.apex->size());
  // Classes up to 4 are active (the intermediate needs n+1 <= 5).
  CHECK(r.max_aut_order == factorial(4));
}

TEST_CASE("span class summary") {
  Span s = flat_word_span({lower_letter(), raise_letter()}, 3);
  auto classes = span_classes(s);
  REQUIRE((int)classes.size() == s.apex->size());
  CHECK(classes[0].source_label == "0");
  CHECK(classes[0].target_label == "0");
  CHECK(classes[0].aut_order == 1);
  long long max_aut = 0;
  for (const auto& c : classes) {
    CHECK(c.source_total <= 2);  // class 3 needs intermediate total 4
    max_aut = std::max(max_aut, c.aut_order);
  }
  CHECK(max_aut == 2);
}
