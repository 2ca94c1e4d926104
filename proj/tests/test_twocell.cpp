#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spancalc/twocell.hpp"

using namespace spancalc;

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Every constructor in this module must yield a cell whose mu and nu are
// natural between the pasted leg functors.
TwoCell checked(TwoCell c) {
  REQUIRE(twocell_valid(c));
  return c;
}

int joint_bound(const TwoCell& a, const TwoCell& b) {
  return std::min(a.exact_up_to, b.exact_up_to);
}

bool same_cell(const TwoCell& a, const TwoCell& b) {
  return equivalent_two_cells(a, b, joint_bound(a, b));
}

}  // namespace

TEST_CASE("generator cells are valid and sized as predicted") {
  int mc = 4;
  TwoCell cup = checked(cup_lr(mc));
  CHECK(cup.apex->size() == mc);  // classes 0..mc-1
  CHECK(cup.exact_up_to == mc - 1);
  CHECK(cup.to_src.is_faithful());
  CHECK(cup.to_tgt.is_faithful());
  for (int z = 0; z < cup.apex->size(); ++z)
    CHECK(cup.apex->at(z).aut.order() == factorial(z));

  TwoCell unit = checked(cup_rl(mc));
  CHECK(unit.apex->size() == mc);  // classes 1..mc
  CHECK(unit.exact_up_to == mc);
  for (int z = 0; z < unit.apex->size(); ++z)
    CHECK(unit.apex->at(z).aut.order() == factorial(z));  // S_{n-1}, n = z+1

  TwoCell cross = checked(crossing_cell(mc));
  CHECK(cross.apex->size() == mc - 1);  // classes 1..mc-1
  CHECK(cross.exact_up_to == mc - 1);
  CHECK(cross.to_tgt.is_faithful());

  TwoCell sr = checked(symmetry_cell(true, mc));
  CHECK(sr.exact_up_to == mc - 2);
  CHECK_FALSE(sr.mu.is_identity());
  CHECK(sr.nu.is_identity());
  TwoCell sl = checked(symmetry_cell(false, mc));
  CHECK(sl.exact_up_to == mc);
  CHECK(sl.mu.is_identity());
  CHECK_FALSE(sl.nu.is_identity());
}

TEST_CASE("identity, zero, converse") {
  int mc = 4;
  Span lr = flat_word_span({lower_letter(), raise_letter()}, mc);
  TwoCell id = checked(identity_cell(lr));
  CHECK(same_cell(id, id));

  TwoCell z = checked(zero_cell(lr, lr));
  CHECK(cell_is_zero(z, mc));
  CHECK_FALSE(cell_is_zero(id, mc - 1));
  CHECK_FALSE(same_cell(id, z));
  CHECK(same_cell(z, zero_cell(lr, lr)));

  TwoCell cross = checked(crossing_cell(mc));
  TwoCell cc = checked(converse(converse(cross)));
  CHECK(same_cell(cc, cross));
}

TEST_CASE("vertical composition against the splitting relations") {
  int mc = 4;
  TwoCell cup = cup_lr(mc);
  TwoCell cross = crossing_cell(mc);
  Span e = identity_span(mc);
  Span lr = flat_word_span({lower_letter(), raise_letter()}, mc);
  Span rl = flat_word_span({raise_letter(), lower_letter()}, mc);

  // cap . cup = id on the empty word.
  TwoCell cap_cup = checked(vertical_compose(converse(cup), cup));
  CHECK(same_cell(cap_cup, identity_cell(e)));

  // cap . crossing and crossing-cap . cup vanish: the fixed and moved
  // components of the lower-raise composite do not meet.
  CHECK(cell_is_zero(checked(vertical_compose(converse(cup), cross)), mc));
  CHECK(cell_is_zero(checked(vertical_compose(converse(cross), cup)), mc));

  // crossing-cap . crossing = id on the raise-lower composite.
  TwoCell back = checked(vertical_compose(converse(cross), cross));
  CHECK(same_cell(back, identity_cell(rl)));

  // The two projectors sum to the identity of the lower-raise composite...
  TwoCell p1 = checked(vertical_compose(cup, converse(cup)));
  TwoCell p2 = checked(vertical_compose(cross, converse(cross)));
  CHECK(same_cell(sum_cells(p1, p2), identity_cell(lr)));
  // ...and neither one alone is it.
  CHECK_FALSE(same_cell(p1, identity_cell(lr)));
  CHECK_FALSE(same_cell(p2, identity_cell(lr)));
}

TEST_CASE("whiskering by a letter absorbs identities") {
  int mc = 4;
  TwoCell ide = identity_cell(identity_span(mc));
  for (Letter l : {raise_letter(), lower_letter()}) {
    TwoCell r = checked(whisker_right_letter(ide, l));
    CHECK(same_cell(r, identity_cell(flat_word_span({l}, mc))));
    TwoCell lw = checked(whisker_left_letter(ide, l));
    CHECK(same_cell(lw, identity_cell(flat_word_span({l}, mc))));
  }
  // Whiskering the identity cell of a longer word stays the identity cell.
  TwoCell idw = identity_cell(flat_word_span({raise_letter()}, mc));
  TwoCell r = checked(whisker_right_letter(idw, lower_letter()));
  CHECK(same_cell(
      r, identity_cell(flat_word_span({raise_letter(), lower_letter()}, mc))));
}

TEST_CASE("snake identities for both adjunctions") {
  int mc = 4;
  Word lower{lower_letter()}, raisew{raise_letter()};
  Span a = flat_word_span(lower, mc);
  Span ad = flat_word_span(raisew, mc);

  // (cap . lower) after (lower . unit) = id of the lowering span.
  TwoCell s1 = checked(vertical_compose(
      whisker_right(converse(cup_lr(mc)), lower),
      whisker_left(cup_rl(mc), lower)));
  CHECK(same_cell(s1, identity_cell(a)));

  // (raise . cap) after (unit . raise) = id of the raising span.
  TwoCell s2 = checked(vertical_compose(
      whisker_left(converse(cup_lr(mc)), raisew),
      whisker_right(cup_rl(mc), raisew)));
  CHECK(same_cell(s2, identity_cell(ad)));

  // (co-unit . raise) after (raise . cup) = id of the raising span.
  TwoCell s3 = checked(vertical_compose(
      whisker_right(converse(cup_rl(mc)), raisew),
      whisker_left(cup_lr(mc), raisew)));
  CHECK(same_cell(s3, identity_cell(ad)));

  // (lower . co-unit) after (cup . lower) = id of the lowering span.
  TwoCell s4 = checked(vertical_compose(
      whisker_left(converse(cup_rl(mc)), lower),
      whisker_right(cup_lr(mc), lower)));
  CHECK(same_cell(s4, identity_cell(a)));
}

TEST_CASE("symmetry cells square to the identity") {
  int mc = 4;
  for (bool r : {true, false}) {
    TwoCell s = checked(symmetry_cell(r, mc));
    TwoCell ss = checked(vertical_compose(s, s));
    CHECK(same_cell(ss, identity_cell(s.src)));
    // A single crossing is not the identity cell (the strands really swap).
    CHECK_FALSE(same_cell(s, identity_cell(s.src)));
  }
}

TEST_CASE("braid relation on three parallel strands") {
  int mc = 5;
  for (bool r : {true, false}) {
    Letter l = r ? raise_letter() : lower_letter();
    TwoCell s1 = checked(whisker_right_letter(symmetry_cell(r, mc), l));
    TwoCell s2 = checked(whisker_left_letter(symmetry_cell(r, mc), l));
    TwoCell lhs = vertical_compose(s1, vertical_compose(s2, s1));
    TwoCell rhs = vertical_compose(s2, vertical_compose(s1, s2));
    CHECK(same_cell(lhs, rhs));
    // Adjacent crossings do not commute.
    CHECK_FALSE(same_cell(vertical_compose(s1, s2), vertical_compose(s2, s1)));
  }
}

TEST_CASE("converse commutes with whiskering") {
  int mc = 4;
  TwoCell cross = crossing_cell(mc);
  for (Letter l : {raise_letter(), lower_letter()}) {
    TwoCell a = checked(converse(whisker_right_letter(cross, l)));
    TwoCell b = checked(whisker_right_letter(converse(cross), l));
    CHECK(same_cell(a, b));
    TwoCell c = checked(converse(whisker_left_letter(cross, l)));
    TwoCell d = checked(whisker_left_letter(converse(cross), l));
    CHECK(same_cell(c, d));
  }
}

TEST_CASE("whisker window bookkeeping") {
  int mc = 5;
  TwoCell cup = cup_lr(mc);  // exact to mc-1
  CHECK(whisker_right_letter(cup, lower_letter()).exact_up_to == mc);
  CHECK(whisker_right_letter(cup, raise_letter()).exact_up_to == mc - 2);
  CHECK(whisker_left_letter(cup, raise_letter()).exact_up_to == mc - 1);
  TwoCell unit = cup_rl(mc);  // exact to mc
  // Structural cap: the raise-whiskered target word peaks one above its
  // source.
  CHECK(whisker_right_letter(unit, raise_letter()).exact_up_to == mc - 1);
}
