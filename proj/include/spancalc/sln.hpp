#pragma once

#include <string>
#include <vector>

#include "spancalc/fock.hpp"
#include "spancalc/span.hpp"

namespace spancalc {

// Chevalley spans over n-colored finite sets.  Colors are 1-indexed:
// e_span(i) moves one point of color i to color i+1, f_span(i) moves it
// back, n_span(i) marks a point of color i.
Span e_span(int i, int n, int max_card);
Span f_span(int i, int n, int max_card);
Span n_span(int i, int n, int max_card);

// The add-one-point-of-color-i functor, defined on the classes that stay
// inside the window: fs(max_card - 1) -> fs(max_card).
GFunctor colored_plus_one(int i, int n, int max_card);

enum class SlnRelation { EF, EN, FN };

std::string sln_relation_name(SlnRelation which);

// One verified relation instance: both sides assembled as direct sums of
// composites and compared by span equivalence over the whole window (every
// term preserves the total, so nothing is lost to truncation).
struct SlnCheck {
  std::string name;
  SlnRelation which = SlnRelation::EF;
  int i = 0, j = 0, n = 0;
  bool pass = false;
  int bound = 0;
  std::size_t lhs_components = 0, rhs_components = 0;
};

SlnCheck verify_sln_relation(SlnRelation which, int i, int j, int n,
                             int max_card);

// Every relation for every index pair at the given rank, catalog order.
std::vector<SlnCheck> verify_sln_all(int n, int max_card);

// ---- polynomial model ---------------------------------------------------

// One letter of a polynomial operator word: 'e', 'f', 'n', 'h' for the
// Chevalley action, 'z' and 'd' for a bare variable or derivative.
struct PolyLetter {
  char kind = 'e';
  int i = 1;
};

// Action on the monomials z_1^{k_1}..z_n^{k_n} of total degree <= the bound,
// ordered by degree then exponent profile.  Images pushed beyond the bound
// are dropped and flagged instead of silently vanishing.
struct PolyMatrix {
  std::vector<std::vector<int>> monomials;
  std::vector<std::vector<long long>> entries;  // entries[row][col]
  bool truncated = false;
};

// Word applied right to left, like span composition.
PolyMatrix poly_operator_matrix(const std::vector<PolyLetter>& word, int n,
                                int max_degree);

// Degroupoidified Chevalley span against the polynomial action of the same
// letter, entry by entry on the shared basis.
struct CrossCheck {
  char kind = 'e';
  int i = 1, n = 2;
  bool pass = false;
  int degrees = 0;  // totals compared: 0..degrees
};

CrossCheck crosscheck_degroupoidification(char kind, int i, int n,
                                          int max_card);

}  // namespace spancalc
