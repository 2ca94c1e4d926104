#include "spancalc/fock.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>
#include <utility>

namespace spancalc {

namespace {

using Rat = boost::multiprecision::mpq_rational;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

Rational to_rational(const Rat& v) {
  namespace mp = boost::multiprecision;
  return Rational(mp::numerator(v).convert_to<long long>(),
                  mp::denominator(v).convert_to<long long>());
}

void require_same_labels(const std::vector<std::vector<int>>& a,
                         const std::vector<std::vector<int>>& b,
                         const char* what) {
  if (a != b) throw std::invalid_argument(std::string("qmatrix: ") + what);
}

}  // namespace

QMatrix degroupoidify_span(const Span& s, int max_total) {
  if (max_total > s.max_card)
    throw std::invalid_argument("degroupoidify: class outside window");
  auto keep = [max_total](const Component& c) {
    return max_total < 0 || c.total() <= max_total;
  };
  QMatrix m;
  std::vector<int> row_of(s.target->size(), -1), col_of(s.source->size(), -1);
  for (int b = 0; b < s.target->size(); ++b)
    if (keep(s.target->at(b))) {
      row_of[b] = (int)m.row_labels.size();
      m.row_labels.push_back(s.target->at(b).profile);
    }
  for (int a = 0; a < s.source->size(); ++a)
    if (keep(s.source->at(a))) {
      col_of[a] = (int)m.col_labels.size();
      m.col_labels.push_back(s.source->at(a).profile);
    }
  m.entries.assign(m.row_labels.size(),
                   std::vector<Rational>(m.col_labels.size(), Rational(0)));
  for (int x = 0; x < s.apex->size(); ++x) {
    int a = s.right.obj(x), b = s.left.obj(x);
    if (row_of[b] < 0 || col_of[a] < 0) continue;
    m.entries[row_of[b]][col_of[a]] +=
        Rational(s.source->at(a).aut.order()) /
        Rational(s.apex->at(x).aut.order());
  }
  return m;
}

QMatrix qmatrix_identity(std::vector<std::vector<int>> labels) {
  QMatrix m;
  m.row_labels = labels;
  m.col_labels = std::move(labels);
  m.entries.assign(m.row_labels.size(),
                   std::vector<Rational>(m.row_labels.size(), Rational(0)));
  for (std::size_t i = 0; i < m.row_labels.size(); ++i)
    m.entries[i][i] = Rational(1);
  return m;
}

QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b) {
  require_same_labels(a.col_labels, b.row_labels, "inner label mismatch");
  QMatrix m;
  m.row_labels = a.row_labels;
  m.col_labels = b.col_labels;
  m.entries.assign(m.row_labels.size(),
                   std::vector<Rational>(m.col_labels.size(), Rational(0)));
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    for (std::size_t k = 0; k < a.col_labels.size(); ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m.col_labels.size(); ++j)
        m.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return m;
}

QMatrix qmatrix_add(const QMatrix& a, const QMatrix& b) {
  require_same_labels(a.row_labels, b.row_labels, "row label mismatch");
  require_same_labels(a.col_labels, b.col_labels, "column label mismatch");
  QMatrix m = a;
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = 0; j < m.entries[i].size(); ++j)
      m.entries[i][j] += b.entries[i][j];
  return m;
}

QMatrix qmatrix_sub(const QMatrix& a, const QMatrix& b) {
  require_same_labels(a.row_labels, b.row_labels, "row label mismatch");
  require_same_labels(a.col_labels, b.col_labels, "column label mismatch");
  QMatrix m = a;
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = 0; j < m.entries[i].size(); ++j)
      m.entries[i][j] -= b.entries[i][j];
  return m;
}

QMatrix qmatrix_pow(const QMatrix& a, int k) {
  require_same_labels(a.row_labels, a.col_labels, "power of non-square");
  if (k < 0) throw std::invalid_argument("qmatrix: negative power");
  QMatrix m = qmatrix_identity(a.row_labels);
  for (int t = 0; t < k; ++t) m = qmatrix_mul(m, a);
  return m;
}

bool qmatrix_equal(const QMatrix& a, const QMatrix& b) {
  return a.row_labels == b.row_labels && a.col_labels == b.col_labels &&
         a.entries == b.entries;
}

DimBlock dimblock_mul(const DimBlock& a, const DimBlock& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("dimblock: inner label mismatch");
  DimBlock m;
  m.rows = a.rows;
  m.cols = b.cols;
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t k = 0; k < a.cols.size(); ++k) {
      if (a.entries[i][k] == 0) continue;
      for (std::size_t j = 0; j < m.cols.size(); ++j)
        m.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return m;
}

DimBlock dimblock_add(const DimBlock& a, const DimBlock& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("dimblock: label mismatch");
  DimBlock m = a;
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = 0; j < m.entries[i].size(); ++j)
      m.entries[i][j] += b.entries[i][j];
  return m;
}

DimBlock dimblock_transpose(const DimBlock& a) {
  DimBlock m;
  m.rows = a.cols;
  m.cols = a.rows;
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols.size(); ++j)
      m.entries[j][i] = a.entries[i][j];
  return m;
}

DimBlock dimblock_identity(int n) {
  DimBlock m;
  m.rows = m.cols = partitions_of(n);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.rows.size(), 0));
  for (std::size_t i = 0; i < m.rows.size(); ++i) m.entries[i][i] = 1;
  return m;
}

bool dimblock_equal(const DimBlock& a, const DimBlock& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

DimBlock path_block(int i, int j) {
  if (i < 0 || j < i) throw std::invalid_argument("path_block: need j >= i >= 0");
  DimBlock m;
  m.rows = partitions_of(i);
  m.cols = partitions_of(j);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols.size(); ++c)
      m.entries[r][c] = path_count(m.rows[r], m.cols[c]);
  return m;
}

DimBlock number_block(int n) {
  if (n < 0) throw std::invalid_argument("number_block: negative stage");
  DimBlock m;
  m.rows = m.cols = partitions_of(n);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.rows.size(), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    auto down_r = branch_down(m.rows[r]);
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      long long shared = 0;
      for (const Partition& nu : branch_down(m.cols[c]))
        shared += std::count(down_r.begin(), down_r.end(), nu);
      m.entries[r][c] = shared;
    }
  }
  return m;
}

DimBlock strip_block(int i, int j, StripKind kind) {
  if (i < 0 || j < i) throw std::invalid_argument("strip_block: need j >= i >= 0");
  DimBlock m;
  m.rows = partitions_of(i);
  m.cols = partitions_of(j);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols.size(); ++c)
      m.entries[r][c] = is_strip(m.cols[c], m.rows[r], kind) ? 1 : 0;
  return m;
}

BlockCheck regular_equivalence_check(int n) {
  BlockCheck check;
  check.n = n;
  check.lhs = number_block(n);
  check.rhs.rows = check.rhs.cols = partitions_of(n);
  check.rhs.entries.assign(check.rhs.rows.size(),
                           std::vector<long long>(check.rhs.cols.size(), 0));
  for (std::size_t r = 0; r < check.rhs.rows.size(); ++r) {
    PartitionMap mult = tensor_with_permutation_rep(check.rhs.rows[r]);
    for (std::size_t c = 0; c < check.rhs.cols.size(); ++c) {
      auto it = mult.find(check.rhs.cols[c]);
      check.rhs.entries[r][c] = it == mult.end() ? 0 : it->second;
    }
  }
  check.pass = dimblock_equal(check.lhs, check.rhs);
  return check;
}

ModuleBlock module_block(int k, int i) {
  if (k < 0 || i < 0) throw std::invalid_argument("module_block: negative stage");
  ModuleBlock block;
  block.k = k;
  block.stage = i;
  block.dims = path_block(i, i + k);
  CharacterVector zero;
  zero.degree = k;
  zero.values.assign(partitions_of(k).size(), 0);
  block.characters.assign(
      block.dims.rows.size(),
      std::vector<CharacterVector>(block.dims.cols.size(), zero));
  for (std::size_t r = 0; r < block.dims.rows.size(); ++r)
    for (std::size_t c = 0; c < block.dims.cols.size(); ++c)
      if (partition_contains(block.dims.cols[c], block.dims.rows[r]))
        block.characters[r][c] =
            skew_character(block.dims.cols[c], block.dims.rows[r]);
  return block;
}

namespace {

// Multiplicity of the trivial (sign = false) or sign (sign = true)
// representation in the skew character of lambda/mu, by inner product.
long long isotypic_multiplicity(const Partition& lambda, const Partition& mu,
                                int k, bool sign) {
  if (!partition_contains(lambda, mu)) return 0;
  auto classes = partitions_of(k);
  auto sizes = class_sizes(k);
  long long dot = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    long long chi = mn_character(lambda, mu, classes[i]);
    long long eps =
        sign && (k - (int)classes[i].size()) % 2 == 1 ? -1 : 1;
    dot += sizes[i] * eps * chi;
  }
  if (dot % factorial(k) != 0)
    throw std::logic_error("isotypic multiplicity not integral");
  return dot / factorial(k);
}

DimBlock isotypic_block(int k, int i, bool sign) {
  if (k < 0 || i < 0)
    throw std::invalid_argument("symmetrized block: negative stage");
  DimBlock m;
  m.rows = partitions_of(i);
  m.cols = partitions_of(i + k);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols.size(); ++c)
      m.entries[r][c] = isotypic_multiplicity(m.cols[c], m.rows[r], k, sign);
  return m;
}

DimBlock zero_block(int i, int j) {
  DimBlock m;
  m.rows = partitions_of(i);
  m.cols = partitions_of(j);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  return m;
}

std::vector<std::vector<Rational>> rat_mul(
    const std::vector<std::vector<Rational>>& a,
    const std::vector<std::vector<Rational>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> out(n,
                                         std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

DimBlock symmetrized_block(int k, int i) { return isotypic_block(k, i, false); }

DimBlock antisymmetrized_block(int k, int i) {
  return isotypic_block(k, i, true);
}

MuAction explicit_mu_action(int k, const Partition& mu,
                            const Partition& lambda) {
  int i = partition_size(mu), n = partition_size(lambda);
  if (k < 0 || n != i + k)
    throw std::invalid_argument("explicit_mu_action: size mismatch");
  MuAction out;
  out.k = k;
  out.mu = mu;
  out.lambda = lambda;

  SpechtGenerators gl = specht_generators(lambda);
  SpechtGenerators gm = specht_generators(mu);
  int dl = (int)gl.basis.size(), dm = (int)gm.basis.size();
  int unknowns = dm * dl;  // X[r][c] at r * dl + c

  // Basis of { X : X rho_lambda(s_t) = rho_mu(s_t) X for t = 1..i-1 }, the
  // maps equivariant under the subgroup fixing the k added letters.
  RMat basis;
  if (i <= 1) {
    basis = RMat::Identity(unknowns, unknowns);
  } else {
    RMat constraints((i - 1) * unknowns, unknowns);
    constraints.setZero();
    int eq = 0;
    for (int t = 1; t <= i - 1; ++t) {
      const IntMatrix& a = gl.matrices[t - 1];
      const IntMatrix& b = gm.matrices[t - 1];
      for (int r = 0; r < dm; ++r)
        for (int c = 0; c < dl; ++c) {
          for (int c2 = 0; c2 < dl; ++c2)
            constraints(eq, r * dl + c2) += Rat(a[c2][c]);
          for (int r2 = 0; r2 < dm; ++r2)
            constraints(eq, r2 * dl + c) -= Rat(b[r][r2]);
          ++eq;
        }
    }
    Eigen::FullPivLU<RMat> lu(constraints);
    basis = lu.kernel();
    if (lu.rank() == unknowns) basis = RMat(unknowns, 0);
  }
  int h = (int)basis.cols();
  out.dim = h;
  if (h != path_count(mu, lambda))
    throw std::logic_error("multiplicity space has unexpected dimension");

  // Action of the transpositions of adjacent added letters: X -> X A_g.
  if (h > 0) {
    Eigen::FullPivLU<RMat> lu(basis);
    for (int g = i + 1; g <= n - 1; ++g) {
      const IntMatrix& a = gl.matrices[g - 1];
      RMat acted(unknowns, h);
      for (int bcol = 0; bcol < h; ++bcol)
        for (int r = 0; r < dm; ++r)
          for (int c = 0; c < dl; ++c) {
            Rat v = 0;
            for (int c2 = 0; c2 < dl; ++c2)
              v += basis(r * dl + c2, bcol) * Rat(a[c2][c]);
            acted(r * dl + c, bcol) = v;
          }
      RMat sol = lu.solve(acted);
      if (basis * sol != acted)
        throw std::logic_error("action does not preserve the space");
      std::vector<std::vector<Rational>> gen(h,
                                             std::vector<Rational>(h));
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < h; ++c) gen[r][c] = to_rational(sol(r, c));
      out.generators.push_back(std::move(gen));
    }
  } else {
    out.generators.assign(std::max(0, k - 1), {});
  }

  out.character.degree = k;
  for (const Partition& cls : partitions_of(k)) {
    std::vector<std::vector<Rational>> m(h, std::vector<Rational>(h,
                                                                  Rational(0)));
    for (int r = 0; r < h; ++r) m[r][r] = Rational(1);
    for (int w : adjacent_word_for_class(cls))
      m = rat_mul(m, out.generators[w - 1]);
    Rational trace(0);
    for (int r = 0; r < h; ++r) trace += m[r][r];
    if (!trace.is_integer())
      throw std::logic_error("character value not integral");
    out.character.values.push_back(trace.num());
  }
  out.decomposition = decompose_character(out.character);
  return out;
}

KhovanovCheck khovanov_iso_check(int n, int m, int stage_max) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("khovanov check: need n, m >= 1");
  KhovanovCheck check;
  check.n = n;
  check.m = m;
  check.stage_max = stage_max;
  check.pass = true;
  for (int s = 0; s <= stage_max; ++s) {
    int j = s + m - n;  // target stage
    if (j < 0) continue;
    DimBlock lhs =
        dimblock_mul(strip_block(s, s + m, StripKind::Vertical),
                     dimblock_transpose(strip_block(j, s + m,
                                                    StripKind::Horizontal)));
    DimBlock rhs = zero_block(s, j);
    if (s - n >= 0)
      rhs = dimblock_add(
          rhs, dimblock_mul(dimblock_transpose(strip_block(
                                s - n, s, StripKind::Horizontal)),
                            strip_block(s - n, j, StripKind::Vertical)));
    if (s - n + 1 >= 0)
      rhs = dimblock_add(
          rhs, dimblock_mul(dimblock_transpose(strip_block(
                                s - n + 1, s, StripKind::Horizontal)),
                            strip_block(s - n + 1, j, StripKind::Vertical)));
    if (!dimblock_equal(lhs, rhs)) {
      check.pass = false;
      check.failed_stages.push_back(s);
    }
  }
  return check;
}

StuffType identity_stuff_type(int max_card, int colors) {
  auto fs = fs_truncated(max_card, colors);
  auto pt = point_groupoid();
  Span s;
  s.source = pt;
  s.target = fs;
  s.apex = fs;
  s.left = GFunctor::identity(fs);
  s.right = GFunctor::tabulate(fs, pt, std::vector<int>(fs->size(), 0),
                               [](int, const Perm&) { return Perm::identity(0); });
  s.max_card = max_card;
  s.colors = colors;
  s.exact_up_to = max_card;
  return {std::move(s), max_card};
}

StuffType pointed_stuff_type(int max_card) {
  return act_on_stuff_type(creation_span(max_card),
                           identity_stuff_type(max_card));
}

StuffType empty_stuff_type(int max_card, int colors) {
  auto fs = fs_truncated(max_card, colors);
  auto pt = point_groupoid();
  auto apex = std::make_shared<const Groupoid>(std::vector<Component>{});
  Span s;
  s.source = pt;
  s.target = fs;
  s.apex = apex;
  s.left = GFunctor::tabulate(apex, fs, {},
                              [](int, const Perm& p) { return p; });
  s.right = GFunctor::tabulate(apex, pt, {},
                               [](int, const Perm& p) { return p; });
  s.max_card = max_card;
  s.colors = colors;
  s.exact_up_to = max_card;
  return {std::move(s), max_card};
}

StuffType act_on_stuff_type(const Span& s, const StuffType& psi) {
  StuffType out;
  out.span = compose(s, psi.span);
  out.exact_total =
      std::min({psi.exact_total, s.exact_up_to}) + s.degree;
  out.exact_total = std::min(out.exact_total, s.max_card);
  return out;
}

std::vector<Rational> stuff_type_gf(const StuffType& psi, int max_n) {
  if (max_n < 0) throw std::invalid_argument("gf: negative term count");
  if (max_n > psi.exact_total)
    throw std::invalid_argument("gf: window too small for the requested terms");
  std::vector<Rational> coeffs(max_n + 1, Rational(0));
  const Span& s = psi.span;
  for (int x = 0; x < s.apex->size(); ++x) {
    int total = s.target->at(s.left.obj(x)).total();
    if (total <= max_n)
      coeffs[total] += Rational(1) / Rational(s.apex->at(x).aut.order());
  }
  return coeffs;
}

Rational vacuum_moment(int k, int window) {
  if (k < 0) throw std::invalid_argument("moment: negative power");
  if (window < k)
    throw std::invalid_argument("moment: window too small, need window >= k");
  QMatrix field =
      qmatrix_add(degroupoidify_span(annihilation_span(window)),
                  degroupoidify_span(creation_span(window)));
  QMatrix p = qmatrix_pow(field, k);
  return p.entries[0][0];
}

}  // namespace spancalc
