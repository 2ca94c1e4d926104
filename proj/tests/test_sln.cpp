#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "spancalc/sln.hpp"

using namespace spancalc;

namespace {

std::vector<int> shifted(std::vector<int> q, int from, int to) {
  --q[from - 1];
  ++q[to - 1];
  return q;
}

long long poly_entry(const PolyMatrix& m, const std::vector<int>& row,
                     const std::vector<int>& col) {
  auto r = std::find(m.monomials.begin(), m.monomials.end(), row);
  auto c = std::find(m.monomials.begin(), m.monomials.end(), col);
  REQUIRE(r != m.monomials.end());
  REQUIRE(c != m.monomials.end());
  return m.entries[r - m.monomials.begin()][c - m.monomials.begin()];
}

}  // namespace

TEST_CASE("chevalley spans move one point between adjacent colors") {
  int mc = 4;
  for (int n : {2, 3})
    for (int i = 1; i < n; ++i) {
      Span e = e_span(i, n, mc);
      CHECK(e.degree == 0);
      CHECK(e.exact_up_to == mc);
      for (int c = 0; c < e.apex->size(); ++c) {
        const auto& src = e.source->at(e.right.obj(c)).profile;
        const auto& tgt = e.target->at(e.left.obj(c)).profile;
        CHECK(tgt == shifted(src, i, i + 1));
      }
      Span f = f_span(i, n, mc);
      for (int c = 0; c < f.apex->size(); ++c) {
        const auto& src = f.source->at(f.right.obj(c)).profile;
        const auto& tgt = f.target->at(f.left.obj(c)).profile;
        CHECK(tgt == shifted(src, i + 1, i));
      }
      CHECK(spans_isomorphic(dagger(e), f, mc));
      CHECK(spans_isomorphic(dagger(f), e, mc));
    }
  for (int i = 1; i <= 3; ++i) {
    Span num = n_span(i, 3, mc);
    CHECK(num.degree == 0);
    for (int c = 0; c < num.apex->size(); ++c)
      CHECK(num.left.obj(c) == num.right.obj(c));
    CHECK(spans_isomorphic(dagger(num), num, mc));
  }
  CHECK_THROWS_AS(e_span(0, 3, mc), std::invalid_argument);
  CHECK_THROWS_AS(e_span(3, 3, mc), std::invalid_argument);
  CHECK_THROWS_AS(f_span(2, 2, mc), std::invalid_argument);
  CHECK_THROWS_AS(n_span(4, 3, mc), std::invalid_argument);
}

TEST_CASE("colored ladder operators satisfy the adjusted commutation") {
  int mc = 4, n = 3;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Span up = creation_span(mc, j - 1, n);
      Span down = annihilation_span(mc, i - 1, n);
      Span lhs = compose(down, up);
      Span rhs = compose(up, down);
      if (i == j) rhs = direct_sum(rhs, identity_span(mc, n));
      int bound = std::min(lhs.exact_up_to, rhs.exact_up_to);
      CHECK(bound == mc - 1);
      CHECK(spans_isomorphic(lhs, rhs, bound));
      // The missing delta term is the zero span, which adds nothing.
      CHECK(spans_isomorphic(direct_sum(lhs, zero_span(mc, n, 0)), lhs,
                             bound));
    }
}

TEST_CASE("the plus-one functor adds a point of its color") {
  GFunctor plus = colored_plus_one(1, 2, 4);
  CHECK(plus.src()->size() == fs_truncated(3, 2)->size());
  for (int c = 0; c < plus.src()->size(); ++c) {
    std::vector<int> q = plus.src()->at(c).profile;
    ++q[0];
    CHECK(plus.tgt()->at(plus.obj(c)).profile == q);
  }
  CHECK(plus.is_faithful());

  // The new point lands at the end of its color block and stays fixed.
  int comp = plus.src()->profile_index({2, 1});
  CHECK(plus.apply(comp, Perm({1, 0, 2})) == Perm({1, 0, 2, 3}));

  GFunctor twice =
      GFunctor::compose(colored_plus_one(2, 2, 4), colored_plus_one(2, 2, 3));
  for (int c = 0; c < twice.src()->size(); ++c) {
    std::vector<int> q = twice.src()->at(c).profile;
    q[1] += 2;
    CHECK(twice.tgt()->at(twice.obj(c)).profile == q);
  }

  CHECK_THROWS_AS(colored_plus_one(0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(colored_plus_one(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(colored_plus_one(1, 2, 0), std::invalid_argument);
}

TEST_CASE("every categorified relation verifies at ranks two and three") {
  auto two = verify_sln_all(2, 5);
  REQUIRE(two.size() == 3);
  auto three = verify_sln_all(3, 5);
  REQUIRE(three.size() == 12);
  for (const auto& checks : {two, three})
    for (const SlnCheck& c : checks) {
      INFO(c.name);
      CHECK(c.pass);
      CHECK(c.bound == 5);
      CHECK(c.lhs_components == c.rhs_components);
    }
  CHECK(two[0].name == "EF i=1 j=1 n=2");
  CHECK(two[0].lhs_components == 40);
  CHECK(three[1].name == "EF i=1 j=2 n=3");
  CHECK(three[1].lhs_components == 20);
  CHECK(three[4].name == "EN i=1 j=1 n=3");
  CHECK(three[4].lhs_components == 110);

  CHECK_THROWS_AS(verify_sln_relation(SlnRelation::EF, 2, 1, 2, 4),
                  std::invalid_argument);
}

TEST_CASE("distinguishing a point of each color commutes") {
  // Marking at most one point of color i and at most one of color j is the
  // same count either way round: both composites weigh (q_i+1)(q_j+1).
  int mc = 4, n = 3;
  auto pick_or_not = [&](int i) {
    return direct_sum(n_span(i, n, mc), identity_span(mc, n));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Span ij = compose(pick_or_not(i), pick_or_not(j));
      Span ji = compose(pick_or_not(j), pick_or_not(i));
      CHECK(spans_isomorphic(ij, ji, mc));
      QMatrix d = degroupoidify_span(ij);
      for (std::size_t a = 0; a < d.col_labels.size(); ++a) {
        const auto& q = d.col_labels[a];
        for (std::size_t b = 0; b < d.row_labels.size(); ++b)
          CHECK(d.entries[b][a] ==
                (a == b ? Rational((q[i - 1] + 1) * (q[j - 1] + 1))
                        : Rational(0)));
      }
    }
}

TEST_CASE("matrix commutators recover the difference of number operators") {
  int mc = 4;
  for (int n : {2, 3})
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        QMatrix e = degroupoidify_span(e_span(i, n, mc));
        QMatrix f = degroupoidify_span(f_span(j, n, mc));
        QMatrix comm = qmatrix_sub(qmatrix_mul(e, f), qmatrix_mul(f, e));
        QMatrix want = qmatrix_sub(
            degroupoidify_span(n_span(i + 1, n, mc)),
            degroupoidify_span(n_span(i, n, mc)));
        for (std::size_t r = 0; r < comm.entries.size(); ++r)
          for (std::size_t c = 0; c < comm.entries.size(); ++c)
            CHECK(comm.entries[r][c] ==
                  (i == j ? want.entries[r][c] : Rational(0)));
      }
}

TEST_CASE("polynomial letters act by exact integer matrices") {
  PolyMatrix e = poly_operator_matrix({{'e', 1}}, 2, 3);
  CHECK_FALSE(e.truncated);
  CHECK(poly_entry(e, {0, 1}, {1, 0}) == 1);  // e z1 = z2
  CHECK(poly_entry(e, {1, 1}, {2, 0}) == 2);
  CHECK(poly_entry(e, {0, 2}, {1, 1}) == 1);
  CHECK(poly_entry(e, {0, 0}, {0, 0}) == 0);

  PolyMatrix h = poly_operator_matrix({{'h', 1}}, 2, 3);
  for (std::size_t r = 0; r < h.monomials.size(); ++r)
    for (std::size_t c = 0; c < h.monomials.size(); ++c)
      CHECK(h.entries[r][c] ==
            (r == c ? h.monomials[r][1] - h.monomials[r][0] : 0));

  // The commutator of e and f is h, entry for entry.
  PolyMatrix ef = poly_operator_matrix({{'e', 1}, {'f', 1}}, 2, 3);
  PolyMatrix fe = poly_operator_matrix({{'f', 1}, {'e', 1}}, 2, 3);
  for (std::size_t r = 0; r < h.monomials.size(); ++r)
    for (std::size_t c = 0; c < h.monomials.size(); ++c)
      CHECK(ef.entries[r][c] - fe.entries[r][c] == h.entries[r][c]);

  // A raw variable-then-derivative word reproduces the Chevalley letter.
  PolyMatrix zd = poly_operator_matrix({{'z', 2}, {'d', 1}}, 2, 3);
  CHECK(zd.entries == e.entries);
  CHECK_FALSE(zd.truncated);
  CHECK(poly_operator_matrix({{'z', 1}}, 2, 3).truncated);
  CHECK_FALSE(poly_operator_matrix({{'d', 1}}, 2, 3).truncated);

  // Distant Chevalley letters commute.
  PolyMatrix ab = poly_operator_matrix({{'e', 1}, {'f', 2}}, 3, 3);
  PolyMatrix ba = poly_operator_matrix({{'f', 2}, {'e', 1}}, 3, 3);
  CHECK(ab.entries == ba.entries);

  CHECK_THROWS_AS(poly_operator_matrix({{'e', 2}}, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_operator_matrix({{'q', 1}}, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_operator_matrix({}, 2, -1), std::invalid_argument);
}

TEST_CASE("degroupoidification recovers the polynomial action") {
  for (int n : {2, 3})
    for (char k : {'e', 'f', 'n'})
      for (int i = 1; i <= (k == 'n' ? n : n - 1); ++i) {
        CrossCheck c = crosscheck_degroupoidification(k, i, n, 4);
        INFO(k << " i=" << i << " n=" << n);
        CHECK(c.pass);
        CHECK(c.degrees == 4);
      }

  // The number span weighs each class by its color count, nothing else.
  QMatrix num = degroupoidify_span(n_span(2, 3, 3));
  for (std::size_t a = 0; a < num.col_labels.size(); ++a)
    for (std::size_t b = 0; b < num.row_labels.size(); ++b)
      CHECK(num.entries[b][a] ==
            (a == b ? Rational(num.col_labels[a][1]) : Rational(0)));

  // Nothing to move: columns of empty color-i profiles vanish.
  QMatrix e1 = degroupoidify_span(e_span(1, 2, 3));
  for (std::size_t a = 0; a < e1.col_labels.size(); ++a)
    if (e1.col_labels[a][0] == 0)
      for (std::size_t b = 0; b < e1.row_labels.size(); ++b)
        CHECK(e1.entries[b][a] == Rational(0));
  // Totals never change: the matrix is block diagonal across totals.
  for (std::size_t a = 0; a < e1.col_labels.size(); ++a)
    for (std::size_t b = 0; b < e1.row_labels.size(); ++b)
      if (!e1.entries[b][a].is_zero())
        CHECK(e1.col_labels[a][0] + e1.col_labels[a][1] ==
              e1.row_labels[b][0] + e1.row_labels[b][1]);

  CHECK_THROWS_AS(crosscheck_degroupoidification('x', 1, 2, 3),
                  std::invalid_argument);
}

TEST_CASE("colored cardinalities follow the exponential series") {
  for (int n : {2, 3}) {
    StuffType id = identity_stuff_type(5, n);
    std::vector<Rational> gf = stuff_type_gf(id, 5);
    long long power = 1;
    for (int k = 0; k <= 5; ++k) {
      CHECK(gf[k] == Rational(power) / Rational(factorial(k)));
      power *= n;
    }
  }

  // Acting with e keeps every history at its total cardinality.
  StuffType moved = act_on_stuff_type(e_span(1, 2, 5), identity_stuff_type(5, 2));
  CHECK(moved.exact_total == 5);
  std::vector<Rational> gf = stuff_type_gf(moved, 5);
  CHECK(gf[0] == Rational(0));
  long long power = 1;
  for (int k = 1; k <= 5; ++k) {
    CHECK(gf[k] == Rational(power) / Rational(factorial(k - 1)));
    power *= 2;
  }
}
