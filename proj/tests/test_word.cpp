#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spancalc/span.hpp"
#include "spancalc/word.hpp"

using namespace spancalc;

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Word w_lower_raise() { return {lower_letter(), raise_letter()}; }
Word w_raise_lower() { return {raise_letter(), lower_letter()}; }

}  // namespace

TEST_CASE("word helpers") {
  Word w = {lower_letter(0), raise_letter(1)};
  CHECK(word_str(w) == "-0 +1");
  CHECK(word_str({}) == "e");
  Word d = dagger_word(w);
  CHECK(d == Word{lower_letter(1), raise_letter(0)});
  CHECK(dagger_word(d) == w);
  CHECK(word_degree(w, 2) == std::vector<int>{-1, 1});

  // Offsets along "- +": t_2 = 0 at the source, t_1 = +1, t_0 = 0.
  Word lr = w_lower_raise();
  CHECK(word_offsets(lr) == std::vector<int>{0, 1, 0});
  CHECK(max_positive_offset(lr) == 1);
  CHECK(max_positive_offset(w_raise_lower()) == 0);
  CHECK(max_positive_offset({raise_letter(), raise_letter()}) == 2);

  auto q = profiles_along(lr, {2});
  REQUIRE(q.has_value());
  CHECK(*q == std::vector<std::vector<int>>{{2}, {3}, {2}});
  CHECK_FALSE(profiles_along(w_raise_lower(), {0}).has_value());
}

TEST_CASE("color_extend layout") {
  // Profile (2,1): carrier = [c0 c0 c1]; extending color 0 puts the new
  // point at index 2 and shifts the color-1 point to 3.
  Perm p = Perm::transposition(3, 0, 1);
  Perm e0 = color_extend(p, {2, 1}, 0);
  CHECK(e0.degree() == 4);
  CHECK(e0(0) == 1);
  CHECK(e0(2) == 2);
  CHECK(e0(3) == 3);
  Perm e1 = color_extend(p, {2, 1}, 1);
  CHECK(e1(3) == 3);
  CHECK(e1(0) == 1);
  // One color reduces to plain extension.
  CHECK(color_extend(p, {3}, 0) == p.extended(4));
}

TEST_CASE("identity span") {
  Span id = identity_span(4);
  CHECK(id.apex == id.source);
  CHECK(id.left.is_identity());
  CHECK(id.right.is_identity());
  CHECK(id.degree == 0);
  CHECK(id.exact_up_to == 4);
  REQUIRE(id.flat);
  CHECK(id.flat->comps.size() == 5);
}

TEST_CASE("single letter spans") {
  Span cre = creation_span(4);
  // Active source classes 0..3 (target must fit in the window).
  REQUIRE(cre.apex->size() == 4);
  for (int n = 0; n <= 3; ++n) {
    CHECK(cre.apex->at(n).aut.order() == factorial(n));
    CHECK(cre.right.obj(n) == n);
    CHECK(cre.left.obj(n) == n + 1);
  }
  CHECK(cre.degree == 1);
  CHECK(cre.exact_up_to == 3);
  CHECK(cre.left.is_faithful());
  CHECK(cre.right.is_faithful());
  // Left leg extends by a fixed point, right leg is the identity.
  Perm t = Perm::transposition(2, 0, 1);
  CHECK(cre.left.apply(2, t) == Perm::transposition(3, 0, 1));
  CHECK(cre.right.apply(2, t) == t);

  Span ann = annihilation_span(4);
  REQUIRE(ann.apex->size() == 4);  // classes 1..4; class 0 has empty fiber
  CHECK(ann.degree == -1);
  CHECK(ann.exact_up_to == 4);
  for (int c = 0; c < 4; ++c) {
    CHECK(ann.right.obj(c) == c + 1);
    CHECK(ann.left.obj(c) == c);
  }
}

TEST_CASE("two-letter composite: lowering after raising") {
  // "- +" maps n -> n through n+1; two orbits per class n >= 1.
  Span s = flat_word_span(w_lower_raise(), 6);
  CHECK(s.degree == 0);
  CHECK(s.exact_up_to == 5);
  std::map<int, std::vector<long long>> auts_by_class;
  for (int c = 0; c < s.apex->size(); ++c)
    auts_by_class[s.right.obj(c)].push_back(s.apex->at(c).aut.order());
  for (auto& [cls, v] : auts_by_class) std::sort(v.begin(), v.end());
  REQUIRE(auts_by_class.size() == 6);  // classes 0..5
  CHECK(auts_by_class[0] == std::vector<long long>{1});
  for (int n = 1; n <= 5; ++n) {
    CHECK(auts_by_class[n] ==
          std::vector<long long>{factorial(n - 1), factorial(n)});
  }
  // Junction table covers the whole of Aut(n+1) per class.
  REQUIRE(s.flat);
  for (int n = 0; n <= 5; ++n) {
    const auto& cd = s.flat->classes[n];
    REQUIRE(cd.active);
    CHECK((long long)cd.comp_of.size() == factorial(n + 1));
  }
  CHECK_FALSE(s.flat->classes[6].active);  // needs intermediate total 7
}

TEST_CASE("two-letter composite: raising after lowering") {
  // "+ -" maps n -> n through n-1; empty over class 0, one orbit otherwise.
  Span s = flat_word_span(w_raise_lower(), 6);
  CHECK(s.exact_up_to == 6);
  std::map<int, std::vector<long long>> auts_by_class;
  for (int c = 0; c < s.apex->size(); ++c)
    auts_by_class[s.right.obj(c)].push_back(s.apex->at(c).aut.order());
  CHECK(auts_by_class.count(0) == 0);
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(auts_by_class.count(n) == 1);
    CHECK(auts_by_class[n] == std::vector<long long>{factorial(n - 1)});
  }
}

TEST_CASE("flat span agrees with generic composition") {
  int mc = 5;
  Span cre = creation_span(mc);
  Span ann = annihilation_span(mc);
  // Composite acts right to left: "- +" is ann after cre.
  Span generic = compose(ann, cre);
  Span flat = flat_word_span(w_lower_raise(), mc);
  CHECK(generic.degree == flat.degree);
  CHECK(generic.exact_up_to == flat.exact_up_to);
  CHECK(spans_isomorphic(generic, flat, flat.exact_up_to));

  Span generic2 = compose(cre, ann);
  Span flat2 = flat_word_span(w_raise_lower(), mc);
  CHECK(spans_isomorphic(generic2, flat2, flat2.exact_up_to));

  // Three letters: "- + +" both ways, bracketed both ways.
  Span flat3 = flat_word_span({lower_letter(), raise_letter(), raise_letter()},
                              mc);
  Span g3a = compose(compose(ann, cre), cre);
  Span g3b = compose(ann, compose(cre, cre));
  int bound = flat3.exact_up_to;
  CHECK(spans_isomorphic(g3a, flat3, bound));
  CHECK(spans_isomorphic(g3b, flat3, bound));
  CHECK(spans_isomorphic(g3a, g3b, bound));
}

TEST_CASE("colored flat spans") {
  // Raise color 1, lower color 0 on two-colored sets.
  Word w = {raise_letter(1), lower_letter(0)};
  Span s = flat_word_span(w, 3, 2);
  CHECK(s.degree == 0);
  for (int c = 0; c < s.apex->size(); ++c) {
    const auto& src = s.source->at(s.right.obj(c)).profile;
    const auto& tgt = s.target->at(s.left.obj(c)).profile;
    CHECK(src[0] - 1 == tgt[0]);
    CHECK(src[1] + 1 == tgt[1]);
  }
  // No components over profiles with no color-0 points.
  CHECK(s.source->profile_index({0, 2}) >= 0);
  for (int c = 0; c < s.apex->size(); ++c)
    CHECK(s.source->at(s.right.obj(c)).profile[0] >= 1);
}

TEST_CASE("identity absorption under generic composition") {
  int mc = 4;
  Span id = identity_span(mc);
  Span cre = creation_span(mc);
  CHECK(spans_isomorphic(compose(cre, id), cre, cre.exact_up_to));
  CHECK(spans_isomorphic(compose(id, cre), cre, cre.exact_up_to));
}
