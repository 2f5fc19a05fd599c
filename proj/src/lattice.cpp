#include "hk4/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hk4/smith.hpp"

namespace hk4 {

Lattice make_U() { return {Mat::from_rows({{0, 1}, {1, 0}}), "U"}; }

Lattice make_E8_neg() {
  // Negated E8 Cartan matrix (Bourbaki node order: chain 1-3-4-5-6-7-8 with
  // node 2 attached to node 4): -2 on the diagonal, +1 on diagram edges.
  Mat g(8, 8);
  for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    g.at(e[0] - 1, e[1] - 1) = 1;
    g.at(e[1] - 1, e[0] - 1) = 1;
  }
  return {std::move(g), "E8(-1)"};
}

Lattice make_rank1(long long n) {
  Mat g(1, 1);
  g.at(0, 0) = n;
  return {std::move(g), "<" + std::to_string(n) + ">"};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const int ra = a.rank(), rb = b.rank();
  Mat g(ra + rb, ra + rb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) g.at(i, j) = a.gram.at(i, j);
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < rb; ++j) g.at(ra + i, ra + j) = b.gram.at(i, j);
  return {std::move(g), a.expr + " + " + b.expr};
}

Lattice make_main_lattice() {
  Lattice l = direct_sum(make_U(), make_U());
  l = direct_sum(l, make_U());
  l = direct_sum(l, make_E8_neg());
  l = direct_sum(l, make_E8_neg());
  return direct_sum(l, make_rank1(-2));
}

Int pairing(const Lattice& l, const Vec& v, const Vec& w) {
  if (int(v.size()) != l.rank() || int(w.size()) != l.rank())
    throw PreconditionError("vector length does not match lattice rank");
  Rational s = 0;
  for (int i = 0; i < l.rank(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < l.rank(); ++j)
      if (w[j] != 0 && l.gram.at(i, j) != 0) s += v[i] * l.gram.at(i, j) * w[j];
  }
  return to_int(s);
}

Int norm_of(const Lattice& l, const Vec& v) { return pairing(l, v, v); }

Int divisibility(const Lattice& l, const Vec& v) {
  if (vec_is_zero(v)) throw PreconditionError("divisibility of the zero vector");
  Int g = 0;
  Vec e(l.rank(), Rational(0));
  for (int i = 0; i < l.rank(); ++i) {
    e[i] = 1;
    g = boost::multiprecision::gcd(g, pairing(l, v, e));
    e[i] = 0;
  }
  return g;
}

bool is_primitive_vector(const Vec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, to_int(x));
  return g == 1;
}

OrbitInvariants orbit_invariants(const Lattice& l, const Vec& v) {
  return {norm_of(l, v), divisibility(l, v), is_primitive_vector(v)};
}

std::vector<Vec> integer_kernel(const Mat& m) {
  SmithResult s = smith_normal_form(m);
  std::vector<Vec> basis;
  const int mn = std::min(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    bool in_kernel = j >= mn || s.d.at(j, j) == 0;
    if (in_kernel) basis.push_back(s.v.col(j));
  }
  return basis;
}

std::vector<Vec> orthogonal_complement(const Lattice& l, const Vec& v) {
  if (vec_is_zero(v)) throw PreconditionError("orthogonal complement of the zero vector");
  Mat row(1, l.rank());
  Vec gv = l.gram.apply(v);
  for (int j = 0; j < l.rank(); ++j) row.at(0, j) = gv[j];
  return integer_kernel(row);
}

Mat restricted_gram(const Lattice& l, const std::vector<Vec>& basis) {
  Mat b = Mat::from_cols(basis);
  return b.transpose() * l.gram * b;
}

Int disc(const Lattice& l) { return to_int(det(l.gram)); }

Inertia signature(const Lattice& l) { return inertia(l.gram); }

std::vector<Int> lattice_invariant_factors(const Lattice& l) { return invariant_factors(l.gram); }

Vec find_isotropic_partner(const Lattice& l, const Vec& alpha, int box) {
  const int n = l.rank();
  if (box < 1) throw PreconditionError("box radius must be >= 1");
  Vec g_alpha = l.gram.apply(alpha);
  const int max_support = std::min(n, 4);

  // Candidate = coefficients over a coordinate support; both loops run in
  // lexicographic order so the first hit is deterministic.
  std::vector<int> support, coeff;
  Vec beta(n, Rational(0));
  auto check = [&]() -> bool {
    Rational nb = 0, ab = 0;
    for (size_t s = 0; s < support.size(); ++s) {
      ab += Rational(coeff[s]) * g_alpha[support[s]];
      for (size_t t = 0; t < support.size(); ++t)
        nb += Rational(coeff[s]) * l.gram.at(support[s], support[t]) * Rational(coeff[t]);
    }
    return nb == 0 && ab == 1;
  };

  for (int k = 1; k <= max_support; ++k) {
    support.assign(k, 0);
    std::iota(support.begin(), support.end(), 0);
    for (;;) {  // combinations of k coordinates, lexicographic
      coeff.assign(k, -box);
      for (;;) {  // coefficient box, lexicographic
        // A zero coefficient means a smaller support already covered this
        // candidate, so only full-support vectors are tested.
        bool full_support =
            std::none_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; });
        if (full_support && check()) {
          std::fill(beta.begin(), beta.end(), Rational(0));
          for (int s = 0; s < k; ++s) beta[support[s]] = coeff[s];
          return beta;
        }
        int p = k - 1;
        while (p >= 0 && coeff[p] == box) coeff[p--] = -box;
        if (p < 0) break;
        ++coeff[p];
      }
      int p = k - 1;
      while (p >= 0 && support[p] == n - k + p) --p;
      if (p < 0) break;
      ++support[p];
      for (int q = p + 1; q < k; ++q) support[q] = support[q - 1] + 1;
    }
  }
  throw PreconditionError("no isotropic partner with (alpha,beta)=1 in the search box");
}

std::vector<Vec> enumerate_square_vectors(const Lattice& l, const Int& target, int box) {
  const int n = l.rank();
  if (box < 0) throw PreconditionError("box radius must be >= 0");
  // (2 box + 1)^n candidate vectors; refuse boxes that cannot be enumerated.
  double log_count = n * std::log2(2.0 * box + 1.0);
  if (log_count > 24.5)
    throw PreconditionError("enumeration box too large; restrict to a sublattice");

  std::vector<Vec> found;
  std::vector<int> c(n, -box);
  for (;;) {
    bool all_zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (!all_zero) {
      Rational nv = 0;
      for (int i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (c[j] != 0 && l.gram.at(i, j) != 0)
            nv += Rational(c[i]) * l.gram.at(i, j) * Rational(c[j]);
      }
      if (nv == Rational(target)) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = c[i];
        found.push_back(std::move(v));
      }
    }
    int p = n - 1;
    while (p >= 0 && c[p] == box) c[p--] = -box;
    if (p < 0) break;
    ++c[p];
  }
  return found;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Lattice parse_lattice_expr(const std::string& text) {
  std::vector<Lattice> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    // Split on '+' at depth 0; "E8(-1)" and "<-2>" contain signs, not separators.
    size_t next = std::string::npos;
    int depth = 0;
    for (size_t i = pos; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '(' || ch == '<') ++depth;
      else if (ch == ')' || ch == '>') --depth;
      else if (ch == '+' && depth == 0) { next = i; break; }
    }
    std::string tok = trim(text.substr(pos, (next == std::string::npos ? text.size() : next) - pos));
    if (tok.empty()) throw ParseError("empty term in lattice expression");
    if (tok == "U") {
      parts.push_back(make_U());
    } else if (tok == "E8(-1)") {
      parts.push_back(make_E8_neg());
    } else if (tok.front() == '<' && tok.back() == '>') {
      std::string inner = trim(tok.substr(1, tok.size() - 2));
      try {
        size_t used = 0;
        long long n = std::stoll(inner, &used);
        if (used != inner.size()) throw std::invalid_argument(inner);
        if (n == 0) throw ParseError("rank-1 lattice <0> is degenerate");
        parts.push_back(make_rank1(n));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad rank-1 term: " + tok);
      } catch (const std::out_of_range&) {
        throw ParseError("rank-1 term out of range: " + tok);
      }
    } else {
      throw ParseError("unknown lattice term: " + tok);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.empty()) throw ParseError("empty lattice expression");
  Lattice out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

}  // namespace hk4
