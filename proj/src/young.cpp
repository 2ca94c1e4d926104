#include "spancalc/young.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace spancalc {

namespace {

using Rat = boost::multiprecision::mpq_rational;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

void trim(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int part_at(const Partition& p, int i) {
  return i < static_cast<int>(p.size()) ? p[i] : 0;
}

void require_partition(const Partition& p, const char* what) {
  if (!is_partition(p))
    throw std::invalid_argument(std::string(what) + " is not a partition");
}

// Border strips of size k removable from lam: (result, height) pairs.  The
// strip spanning rows i..j is determined by its endpoints; rows i..j-1 drop
// to one less than the row below, row j takes the leftover.
std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam,
                                                      int k) {
  std::vector<std::pair<Partition, int>> out;
  int rows = lam.size();
  for (int i = 0; i < rows; ++i) {
    for (int j = i; j < rows; ++j) {
      Partition nl = lam;
      for (int t = i; t < j; ++t) nl[t] = lam[t + 1] - 1;
      nl[j] = lam[i] - k + (j - i);
      if (nl[j] < 0 || nl[j] >= lam[j]) continue;
      if (j + 1 < rows && nl[j] < lam[j + 1]) continue;
      bool mono = true;
      for (int t = i; t < j; ++t)
        if (nl[t] < nl[t + 1]) {
          mono = false;
          break;
        }
      if (!mono) continue;
      trim(nl);
      out.emplace_back(std::move(nl), j - i);
    }
  }
  return out;
}

long long mn_rec(const Partition& lam, const Partition& mu,
                 const Partition& cls) {
  if (cls.empty()) return 1;  // lam == mu by size and containment
  using Key = std::tuple<Partition, Partition, Partition>;
  static std::map<Key, long long> memo;
  static std::mutex mtx;
  Key key{lam, mu, cls};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Partition rest(cls.begin() + 1, cls.end());
  long long total = 0;
  for (const auto& [nl, height] : strip_removals(lam, cls.front()))
    if (partition_contains(nl, mu))
      total += (height % 2 ? -1 : 1) * mn_rec(nl, mu, rest);
  std::lock_guard<std::mutex> lock(mtx);
  memo.emplace(std::move(key), total);
  return total;
}

int parity_sign(const std::vector<int>& idx) {
  int inversions = 0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Tableau row_sorted(Tableau t) {
  for (auto& row : t) std::sort(row.begin(), row.end());
  return t;
}

void standard_tableaux_rec(const Partition& lam, std::vector<int>& filled,
                           int next, Tableau& cur,
                           std::vector<Tableau>& out) {
  int n = partition_size(lam);
  if (next > n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = 0; r < lam.size(); ++r) {
    int c = filled[r];
    if (c >= lam[r]) continue;
    if (r > 0 && filled[r - 1] <= c) continue;
    cur[r].push_back(next);
    ++filled[r];
    standard_tableaux_rec(lam, filled, next + 1, cur, out);
    --filled[r];
    cur[r].pop_back();
  }
}

std::vector<Tableau> standard_tableaux(const Partition& lam) {
  std::vector<Tableau> out;
  std::vector<int> filled(lam.size(), 0);
  Tableau cur(lam.size());
  standard_tableaux_rec(lam, filled, 1, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

void tabloids_rec(const Partition& lam, std::size_t row,
                  std::vector<int>& pool, Tableau& cur,
                  std::vector<Tableau>& out) {
  if (row == lam.size()) {
    out.push_back(cur);
    return;
  }
  // choose lam[row] entries from the pool, ascending, to keep rows sorted
  std::vector<int> pick(lam[row]);
  std::vector<int> comb(lam[row]);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    for (int t = 0; t < lam[row]; ++t) pick[t] = pool[comb[t]];
    std::vector<int> rest;
    for (std::size_t t = 0, u = 0; t < pool.size(); ++t) {
      if (u < comb.size() && static_cast<int>(t) == comb[u])
        ++u;
      else
        rest.push_back(pool[t]);
    }
    cur[row] = pick;
    std::vector<int> saved = pool;
    pool = rest;
    tabloids_rec(lam, row + 1, pool, cur, out);
    pool = saved;
    // next combination
    int t = lam[row] - 1;
    while (t >= 0 &&
           comb[t] == static_cast<int>(pool.size()) - lam[row] + t)
      --t;
    if (t < 0) break;
    ++comb[t];
    for (int u = t + 1; u < lam[row]; ++u) comb[u] = comb[u - 1] + 1;
  }
}

std::vector<Tableau> all_tabloids(const Partition& lam) {
  std::vector<Tableau> out;
  std::vector<int> pool(partition_size(lam));
  std::iota(pool.begin(), pool.end(), 1);
  Tableau cur(lam.size());
  tabloids_rec(lam, 0, pool, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Expand the polytabloid of T over the tabloid basis: sum over the column
// group of sign times the row-sorted column permutation of T.
void polytabloid(const Tableau& t, const Partition& lam,
                 const std::map<Tableau, int>& tabloid_index,
                 std::vector<long long>& coeffs) {
  int n = partition_size(lam);
  std::vector<std::vector<int>> columns;
  for (int c = 0; c < part_at(lam, 0); ++c) {
    std::vector<int> col;
    for (std::size_t r = 0; r < lam.size(); ++r)
      if (c < lam[r]) col.push_back(t[r][c]);
    columns.push_back(std::move(col));
  }
  std::vector<int> image(n + 1);
  std::iota(image.begin(), image.end(), 0);
  auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == columns.size()) {
      Tableau moved = t;
      for (auto& row : moved)
        for (int& v : row) v = image[v];
      coeffs[tabloid_index.at(row_sorted(std::move(moved)))] += sign;
      return;
    }
    const std::vector<int>& col = columns[c];
    std::vector<int> idx(col.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
      for (std::size_t t2 = 0; t2 < col.size(); ++t2)
        image[col[t2]] = col[idx[t2]];
      self(self, c + 1, sign * parity_sign(idx));
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (int v : col) image[v] = v;
  };
  rec(rec, 0, 1);
}

}  // namespace

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

bool partition_contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > part_at(outer, i)) return false;
  return true;
}

Partition conjugate_partition(const Partition& p) {
  Partition out;
  for (int c = 0; c < part_at(p, 0); ++c) {
    int len = 0;
    for (int row : p)
      if (row > c) ++len;
    out.push_back(len);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

int partition_index(const Partition& p) {
  auto list = partitions_of(partition_size(p));
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == p) return static_cast<int>(i);
  throw std::invalid_argument("not a canonical partition: " +
                              partition_str(p));
}

std::vector<Partition> branch_down(const Partition& p) {
  require_partition(p, "shape");
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i] == p[i + 1]) continue;
    Partition q = p;
    --q[i];
    trim(q);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> branch_up(const Partition& p) {
  require_partition(p, "shape");
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && p[i] == p[i - 1]) continue;
    Partition q = p;
    ++q[i];
    out.push_back(std::move(q));
  }
  Partition q = p;
  q.push_back(1);
  out.push_back(std::move(q));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

long long path_count(const Partition& mu, const Partition& lambda) {
  if (!partition_contains(lambda, mu)) return 0;
  if (partition_size(lambda) == partition_size(mu)) return 1;
  using Key = std::pair<Partition, Partition>;
  static std::map<Key, long long> memo;
  static std::mutex mtx;
  Key key{mu, lambda};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  long long total = 0;
  for (const Partition& nu : branch_down(lambda))
    if (partition_contains(nu, mu)) total += path_count(mu, nu);
  std::lock_guard<std::mutex> lock(mtx);
  memo.emplace(std::move(key), total);
  return total;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<long long> class_sizes(int k) {
  std::vector<long long> out;
  for (const Partition& cls : partitions_of(k)) {
    long long centralizer = 1;  // z = prod over part sizes m of m^c_m * c_m!
    int run = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      centralizer *= cls[i];
      ++run;
      if (i + 1 == cls.size() || cls[i + 1] != cls[i]) {
        centralizer *= factorial(run);
        run = 0;
      }
    }
    out.push_back(factorial(k) / centralizer);
  }
  return out;
}

std::vector<int> adjacent_word_for_class(const Partition& cls) {
  // Disjoint cycles on consecutive entries, bubbled to the identity; the
  // collected swaps multiply back (in either order) to a permutation of the
  // requested cycle type.
  int n = partition_size(cls);
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  int start = 0;
  for (int part : cls) {
    for (int t = 0; t < part; ++t)
      image[start + t] = start + (t + 1) % part;
    start += part;
  }
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i)
      if (image[i] > image[i + 1]) {
        std::swap(image[i], image[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
  }
  return word;
}

long long mn_character(const Partition& lambda, const Partition& mu,
                       const Partition& cls) {
  Partition lam = lambda, m = mu, c = cls;
  trim(lam);
  trim(m);
  trim(c);
  require_partition(lam, "outer shape");
  require_partition(m, "inner shape");
  require_partition(c, "class");
  if (!partition_contains(lam, m))
    throw std::invalid_argument("inner shape not contained in outer");
  if (partition_size(lam) - partition_size(m) != partition_size(c))
    throw std::invalid_argument("class size does not match the shape");
  return mn_rec(lam, m, c);
}

long long mn_character(const Partition& lambda, const Partition& cls) {
  return mn_character(lambda, {}, cls);
}

CharacterVector irreducible_character(const Partition& lambda) {
  return skew_character(lambda, {});
}

CharacterVector skew_character(const Partition& lambda, const Partition& mu) {
  CharacterVector chi;
  chi.degree = partition_size(lambda) - partition_size(mu);
  for (const Partition& cls : partitions_of(chi.degree))
    chi.values.push_back(mn_character(lambda, mu, cls));
  return chi;
}

long long character_dim(const CharacterVector& chi) {
  if (chi.values.empty()) throw std::invalid_argument("empty character");
  return chi.values.back();  // the class (1^k) is last in descending lex
}

PartitionMap decompose_character(const CharacterVector& chi) {
  auto classes = partitions_of(chi.degree);
  if (chi.values.size() != classes.size())
    throw std::invalid_argument("character has wrong number of classes");
  auto sizes = class_sizes(chi.degree);
  long long order = factorial(chi.degree);
  PartitionMap out;
  for (const Partition& nu : classes) {
    CharacterVector irr = irreducible_character(nu);
    long long dot = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
      dot += sizes[i] * chi.values[i] * irr.values[i];
    if (dot % order != 0 || dot < 0)
      throw std::invalid_argument("not a genuine character");
    if (dot != 0) out[nu] = dot / order;
  }
  return out;
}

bool is_strip(const Partition& outer, const Partition& inner, StripKind kind) {
  if (!partition_contains(outer, inner)) return false;
  if (kind == StripKind::Horizontal) {
    for (std::size_t i = 1; i < outer.size(); ++i)
      if (outer[i] > part_at(inner, i - 1)) return false;
  } else {
    for (std::size_t i = 0; i < outer.size(); ++i)
      if (outer[i] - part_at(inner, i) > 1) return false;
  }
  return true;
}

std::vector<Partition> pieri_strips(const Partition& mu, int k,
                                    StripKind kind) {
  require_partition(mu, "shape");
  if (k < 0) throw std::invalid_argument("negative strip size");
  std::vector<Partition> out;
  Partition cur;
  int max_rows = static_cast<int>(mu.size()) +
                 (kind == StripKind::Horizontal ? 1 : k);
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (left == 0) {
      Partition q = cur;
      q.insert(q.end(), mu.begin() + std::min<std::size_t>(row, mu.size()),
               mu.end());
      trim(q);
      out.push_back(std::move(q));
      return;
    }
    if (row >= max_rows) return;
    int base = part_at(mu, row);
    int hi;
    if (kind == StripKind::Horizontal)
      hi = row == 0 ? base + left : std::min(part_at(mu, row - 1), base + left);
    else
      hi = base + 1;
    if (row > 0) hi = std::min(hi, cur[row - 1]);
    for (int v = base; v <= hi; ++v) {
      cur.push_back(v);
      self(self, row + 1, left - (v - base));
      cur.pop_back();
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PartitionMap tensor_with_permutation_rep(const Partition& lambda) {
  int n = partition_size(lambda);
  if (n < 1) throw std::invalid_argument("need at least one box");
  auto classes = partitions_of(n);
  auto sizes = class_sizes(n);
  std::vector<long long> fixed;  // fixed points of the class = parts equal 1
  for (const Partition& cls : classes)
    fixed.push_back(std::count(cls.begin(), cls.end(), 1));
  CharacterVector lam_chi = irreducible_character(lambda);
  long long order = factorial(n);
  PartitionMap out;
  for (const Partition& mu : classes) {
    CharacterVector mu_chi = irreducible_character(mu);
    long long dot = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
      dot += sizes[i] * lam_chi.values[i] * fixed[i] * mu_chi.values[i];
    if (dot % order != 0 || dot < 0)
      throw std::logic_error("tensor character failed to decompose");
    if (dot != 0) out[mu] = dot / order;
  }
  return out;
}

SpechtGenerators specht_generators(const Partition& lambda, int max_size) {
  Partition lam = lambda;
  trim(lam);
  require_partition(lam, "shape");
  int n = partition_size(lam);
  if (n > max_size)
    throw std::invalid_argument("shape larger than the configured bound");

  using Key = std::pair<Partition, int>;
  static std::map<Key, SpechtGenerators> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({lam, n});
    if (it != cache.end()) return it->second;
  }

  SpechtGenerators out;
  out.lambda = lam;
  out.basis = standard_tableaux(lam);
  int dim = out.basis.size();

  std::vector<Tableau> tabloids = all_tabloids(lam);
  std::map<Tableau, int> tabloid_index;
  for (std::size_t i = 0; i < tabloids.size(); ++i)
    tabloid_index[tabloids[i]] = static_cast<int>(i);
  int tabs = tabloids.size();

  RMat basis_mat = RMat::Zero(tabs, dim);
  for (int c = 0; c < dim; ++c) {
    std::vector<long long> coeffs(tabs, 0);
    polytabloid(out.basis[c], lam, tabloid_index, coeffs);
    for (int r = 0; r < tabs; ++r) basis_mat(r, c) = coeffs[r];
  }
  Eigen::FullPivLU<RMat> lu(basis_mat);
  if (lu.rank() != dim)
    throw std::logic_error("standard polytabloids are not independent");

  // s_i permutes tabloids by swapping the entries i, i+1.
  for (int i = 1; i < n; ++i) {
    std::vector<int> row_image(tabs);
    for (int r = 0; r < tabs; ++r) {
      Tableau moved = tabloids[r];
      for (auto& row : moved)
        for (int& v : row) v = v == i ? i + 1 : (v == i + 1 ? i : v);
      row_image[r] = tabloid_index.at(row_sorted(std::move(moved)));
    }
    RMat acted = RMat::Zero(tabs, dim);
    for (int r = 0; r < tabs; ++r) acted.row(row_image[r]) = basis_mat.row(r);
    RMat sol = lu.solve(acted);
    if (basis_mat * sol != acted)
      throw std::logic_error("polytabloid action left the Specht span");
    IntMatrix m(dim, std::vector<long long>(dim));
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        if (denominator(sol(r, c)) != 1)
          throw std::logic_error("non-integral straightening coefficient");
        m[r][c] = numerator(sol(r, c)).convert_to<long long>();
      }
    out.matrices.push_back(std::move(m));
  }

  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(Key{lam, n}, std::move(out)).first->second;
}

}  // namespace spancalc
