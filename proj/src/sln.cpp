#include "spancalc/sln.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace spancalc {

namespace {

void require_color(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi)
    throw std::invalid_argument(std::string("color out of range for ") + what +
                                ": i=" + std::to_string(i));
}

// 1-indexed colored ladder spans.
Span lower_i(int i, int n, int max_card) {
  return annihilation_span(max_card, i - 1, n);
}
Span raise_i(int i, int n, int max_card) {
  return creation_span(max_card, i - 1, n);
}

Span sum_terms(std::vector<Span> terms) {
  Span acc = std::move(terms.front());
  for (std::size_t t = 1; t < terms.size(); ++t)
    acc = direct_sum(acc, terms[t]);
  return acc;
}

std::vector<std::vector<int>> graded_profiles(int n, int max_degree) {
  std::vector<std::vector<int>> out;
  for (int total = 0; total <= max_degree; ++total) {
    std::vector<std::vector<int>> level;
    std::vector<int> cur(n, 0);
    // Odometer over compositions of `total` into n parts.
    int rest = total;
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n - 1) {
        cur[pos] = rest;
        level.push_back(cur);
        return;
      }
      for (int v = 0; v <= rest; ++v) {
        cur[pos] = v;
        rest -= v;
        rec(pos + 1);
        rest += v;
      }
    };
    rec(0);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

Span e_span(int i, int n, int max_card) {
  require_color(i, 1, n - 1, "e");
  return compose(raise_i(i + 1, n, max_card), lower_i(i, n, max_card));
}

Span f_span(int i, int n, int max_card) {
  require_color(i, 1, n - 1, "f");
  return compose(raise_i(i, n, max_card), lower_i(i + 1, n, max_card));
}

Span n_span(int i, int n, int max_card) {
  require_color(i, 1, n, "n");
  return compose(raise_i(i, n, max_card), lower_i(i, n, max_card));
}

GFunctor colored_plus_one(int i, int n, int max_card) {
  require_color(i, 1, n, "+1");
  if (max_card < 1)
    throw std::invalid_argument("+1 needs a window of at least 1");
  GroupoidPtr src = fs_truncated(max_card - 1, n);
  GroupoidPtr tgt = fs_truncated(max_card, n);
  std::vector<int> obj(src->size());
  for (int c = 0; c < src->size(); ++c) {
    std::vector<int> q = src->at(c).profile;
    ++q[i - 1];
    obj[c] = tgt->profile_index(q);
  }
  return GFunctor::tabulate(src, tgt, obj, [src, i](int c, const Perm& p) {
    return color_extend(p, src->at(c).profile, i - 1);
  });
}

std::string sln_relation_name(SlnRelation which) {
  switch (which) {
    case SlnRelation::EF: return "EF";
    case SlnRelation::EN: return "EN";
    case SlnRelation::FN: return "FN";
  }
  throw std::logic_error("unknown relation");
}

SlnCheck verify_sln_relation(SlnRelation which, int i, int j, int n,
                             int max_card) {
  require_color(i, 1, n - 1, "relation index i");
  require_color(j, 1, n - 1, "relation index j");
  const int mc = max_card;
  std::vector<Span> lhs, rhs;
  switch (which) {
    case SlnRelation::EF: {
      lhs.push_back(compose(e_span(i, n, mc), f_span(j, n, mc)));
      rhs.push_back(compose(f_span(j, n, mc), e_span(i, n, mc)));
      if (i == j) {
        lhs.push_back(n_span(i, n, mc));
        rhs.push_back(n_span(i + 1, n, mc));
      }
      break;
    }
    case SlnRelation::EN: {
      lhs.push_back(compose(e_span(i, n, mc), n_span(j, n, mc)));
      lhs.push_back(compose(n_span(j + 1, n, mc), e_span(i, n, mc)));
      rhs.push_back(compose(e_span(i, n, mc), n_span(j + 1, n, mc)));
      rhs.push_back(compose(n_span(j, n, mc), e_span(i, n, mc)));
      if (i == j) {
        rhs.push_back(e_span(i, n, mc));
        rhs.push_back(e_span(i, n, mc));
      } else if (i == j + 1 || j == i + 1) {
        lhs.push_back(e_span(i, n, mc));
      }
      break;
    }
    case SlnRelation::FN: {
      lhs.push_back(compose(n_span(j + 1, n, mc), f_span(i, n, mc)));
      lhs.push_back(compose(f_span(i, n, mc), n_span(j, n, mc)));
      rhs.push_back(compose(n_span(j, n, mc), f_span(i, n, mc)));
      rhs.push_back(compose(f_span(i, n, mc), n_span(j + 1, n, mc)));
      if (i == j) {
        lhs.push_back(f_span(i, n, mc));
        lhs.push_back(f_span(i, n, mc));
      } else if (i == j + 1 || j == i + 1) {
        rhs.push_back(f_span(i, n, mc));
      }
      break;
    }
  }
  SlnCheck c;
  c.name = sln_relation_name(which) + " i=" + std::to_string(i) +
           " j=" + std::to_string(j) + " n=" + std::to_string(n);
  c.which = which;
  c.i = i;
  c.j = j;
  c.n = n;
  Span l = sum_terms(std::move(lhs));
  Span r = sum_terms(std::move(rhs));
  c.lhs_components = l.apex->size();
  c.rhs_components = r.apex->size();
  // Every term preserves the total, so both sides are exact to the window.
  c.bound = std::min(l.exact_up_to, r.exact_up_to);
  c.pass = spans_isomorphic(l, r, c.bound);
  return c;
}

std::vector<SlnCheck> verify_sln_all(int n, int max_card) {
  std::vector<SlnCheck> out;
  for (SlnRelation which : {SlnRelation::EF, SlnRelation::EN, SlnRelation::FN})
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        out.push_back(verify_sln_relation(which, i, j, n, max_card));
  return out;
}

PolyMatrix poly_operator_matrix(const std::vector<PolyLetter>& word, int n,
                                int max_degree) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  for (const PolyLetter& l : word) {
    switch (l.kind) {
      case 'e':
      case 'f':
      case 'h':
        require_color(l.i, 1, n - 1, "polynomial letter");
        break;
      case 'n':
      case 'z':
      case 'd':
        require_color(l.i, 1, n, "polynomial letter");
        break;
      default:
        throw std::invalid_argument(std::string("unknown polynomial letter ") +
                                    l.kind);
    }
  }

  PolyMatrix res;
  res.monomials = graded_profiles(n, max_degree);
  std::map<std::vector<int>, int> index;
  for (std::size_t r = 0; r < res.monomials.size(); ++r)
    index[res.monomials[r]] = static_cast<int>(r);
  res.entries.assign(res.monomials.size(),
                     std::vector<long long>(res.monomials.size(), 0));

  for (std::size_t col = 0; col < res.monomials.size(); ++col) {
    // Each letter maps a monomial to at most one monomial, so the whole
    // word is a single chain per basis column.
    std::vector<int> m = res.monomials[col];
    long long coeff = 1;
    for (auto it = word.rbegin(); it != word.rend() && coeff != 0; ++it) {
      int c = it->i - 1;
      switch (it->kind) {
        case 'e':
          coeff *= m[c];
          if (coeff) { --m[c]; ++m[c + 1]; }
          break;
        case 'f':
          coeff *= m[c + 1];
          if (coeff) { --m[c + 1]; ++m[c]; }
          break;
        case 'n':
          coeff *= m[c];
          break;
        case 'h':
          coeff *= m[c + 1] - m[c];
          break;
        case 'z':
          ++m[c];
          break;
        case 'd':
          coeff *= m[c];
          if (coeff) --m[c];
          break;
      }
      int total = 0;
      for (int v : m) total += v;
      if (coeff != 0 && total > max_degree) {
        res.truncated = true;
        coeff = 0;
      }
    }
    if (coeff != 0) res.entries[index.at(m)][col] += coeff;
  }
  return res;
}

CrossCheck crosscheck_degroupoidification(char kind, int i, int n,
                                          int max_card) {
  Span s = kind == 'e'   ? e_span(i, n, max_card)
           : kind == 'f' ? f_span(i, n, max_card)
           : kind == 'n' ? n_span(i, n, max_card)
                         : throw std::invalid_argument(
                               std::string("unknown span letter ") + kind);
  QMatrix d = degroupoidify_span(s);
  PolyMatrix p = poly_operator_matrix({{kind, i}}, n, max_card);

  CrossCheck c;
  c.kind = kind;
  c.i = i;
  c.n = n;
  c.degrees = max_card;
  c.pass = !p.truncated && d.row_labels == p.monomials &&
           d.col_labels == p.monomials;
  if (c.pass)
    for (std::size_t r = 0; r < p.monomials.size() && c.pass; ++r)
      for (std::size_t q = 0; q < p.monomials.size() && c.pass; ++q)
        c.pass = d.entries[r][q] == Rational(p.entries[r][q]);
  return c;
}

}  // namespace spancalc
