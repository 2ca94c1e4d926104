#pragma once

#include <vector>

#include "spancalc/rational.hpp"
#include "spancalc/span.hpp"
#include "spancalc/young.hpp"

namespace spancalc {

// Exact rational matrix of a span: rows are target boundary classes, columns
// source boundary classes, both labelled by cardinality profiles.
// entry[b][a] = sum over apex classes x with right(x) = a, left(x) = b of
// |Aut(a)| / |Aut(x)|.
struct QMatrix {
  std::vector<std::vector<int>> row_labels, col_labels;
  std::vector<std::vector<Rational>> entries;
};

// Linearize a span; with max_total >= 0 the matrix is restricted to boundary
// classes of total <= max_total (throws if the span's window is smaller).
// Restricted matrices are corners for display; products should be formed
// from full-window matrices.
QMatrix degroupoidify_span(const Span& s, int max_total = -1);

QMatrix qmatrix_identity(std::vector<std::vector<int>> labels);
QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b);
QMatrix qmatrix_add(const QMatrix& a, const QMatrix& b);
QMatrix qmatrix_sub(const QMatrix& a, const QMatrix& b);
QMatrix qmatrix_pow(const QMatrix& a, int k);
bool qmatrix_equal(const QMatrix& a, const QMatrix& b);

// Integer block indexed by partitions: rows at one stage of Young's lattice,
// columns at another.  Blocks compose left-to-right: the composite of
// "stage i -> j" then "stage j -> k" is dimblock_mul(first, second).
struct DimBlock {
  std::vector<Partition> rows, cols;
  IntMatrix entries;
};

DimBlock dimblock_mul(const DimBlock& a, const DimBlock& b);
DimBlock dimblock_add(const DimBlock& a, const DimBlock& b);
DimBlock dimblock_transpose(const DimBlock& a);
DimBlock dimblock_identity(int n);
bool dimblock_equal(const DimBlock& a, const DimBlock& b);

// entry (mu, lambda) = number of saturated chains mu -> lambda in Young's
// lattice; rows are partitions of i, columns partitions of j.
DimBlock path_block(int i, int j);

// entry (lambda, mu) = number of shared single-box removals (the
// lower-then-raise block at stage n).
DimBlock number_block(int n);

// entry (mu, lambda) = 1 iff lambda/mu is a strip of the given kind and
// |lambda| - |mu| = j - i.
DimBlock strip_block(int i, int j, StripKind kind);

struct BlockCheck {
  int n = 0;
  bool pass = false;
  DimBlock lhs, rhs;
};

// number_block(n) against the multiplicities of lambda tensor the
// permutation representation, entry by entry.
BlockCheck regular_equivalence_check(int n);

// The k-fold raise block from stage i with the S_k character of every
// multiplicity space recorded per entry (the skew character of lambda/mu).
struct ModuleBlock {
  int k = 0, stage = 0;
  DimBlock dims;
  std::vector<std::vector<CharacterVector>> characters;
};
ModuleBlock module_block(int k, int i);

// The S_k action on the multiplicity space Hom(S^lambda, k-fold raise of
// S^mu), computed by explicit linear algebra on Specht generators: the space
// is cut out by equivariance under S_{|mu|}, and the permutations of the k
// added letters act by precomposition.
struct MuAction {
  int k = 0;
  Partition mu, lambda;
  int dim = 0;
  // Action of the adjacent transpositions of the k added letters; (k-1)
  // exact-rational matrices on a kernel basis of the multiplicity space.
  std::vector<std::vector<std::vector<Rational>>> generators;
  CharacterVector character;
  PartitionMap decomposition;
};
MuAction explicit_mu_action(int k, const Partition& mu,
                            const Partition& lambda);

// Per-entry multiplicity of the trivial (resp. sign) representation in the
// module block; equals the horizontal (resp. vertical) strip indicator.
DimBlock symmetrized_block(int k, int i);
DimBlock antisymmetrized_block(int k, int i);

// Dimension-level check of the commutation isomorphism
//   S^n_- Lambda^m_+  =  Lambda^m_+ S^n_-  +  Lambda^{m-1}_+ S^{n-1}_-
// (lower the symmetrized n-block, raise the antisymmetrized m-block),
// as strip-indicator block arithmetic at every stage <= stage_max.
struct KhovanovCheck {
  int n = 0, m = 0, stage_max = 0;
  bool pass = false;
  std::vector<int> failed_stages;
};
KhovanovCheck khovanov_iso_check(int n, int m, int stage_max);

// A groupoid over the colored-set truncation: a span from the point groupoid.
// Point-source spans are not total-degree homogeneous, so the wrapped span's
// degree field is fixed at 0 and is not meaningful; exactness is tracked on
// the target side instead: generating-function coefficients are exact for
// totals <= exact_total.
struct StuffType {
  Span span;
  int exact_total = 0;
};

StuffType identity_stuff_type(int max_card, int colors = 1);
StuffType pointed_stuff_type(int max_card);
StuffType empty_stuff_type(int max_card, int colors = 1);

// compose(s, psi), with the target-side exactness bookkeeping.
StuffType act_on_stuff_type(const Span& s, const StuffType& psi);

// Coefficients [z^0] .. [z^max_n]: the groupoid cardinality of the fiber
// over the classes of total n (summed over color profiles).  Throws if
// max_n exceeds the exact range.
std::vector<Rational> stuff_type_gf(const StuffType& psi, int max_n);

// The (0,0) entry of (D(A) + D(A+))^k at the given window.
Rational vacuum_moment(int k, int window);

}  // namespace spancalc
