#include "hk4/unipoly.hpp"

#include <algorithm>

namespace hk4 {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int deg, const Rational& coeff) {
  if (deg < 0) throw PreconditionError("monomial: negative degree");
  std::vector<Rational> c(deg + 1, Rational(0));
  c[deg] = coeff;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw PreconditionError("monic: zero polynomial");
  return scaled(Rational(1) / c_.back());
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b.scaled(Rational(-1)); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("divmod: division by zero polynomial");
  UniPoly r = a;
  if (a.degree() < b.degree()) return {UniPoly(), r};
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
  const Rational lead = b.c_.back();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational factor = r.c_.back() / lead;
    q[shift] = factor;
    r = r - (b * UniPoly::monomial(shift, factor));
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("exact_div: nonzero remainder");
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

int distinct_root_count(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("distinct_root_count: zero polynomial");
  if (p.degree() == 0) return 0;
  UniPoly g = UniPoly::gcd(p, p.derivative());
  return p.degree() - g.degree();
}

BinaryForm make_binary_form(std::vector<Rational> coeffs, int deg) {
  if (static_cast<int>(coeffs.size()) != deg + 1)
    throw PreconditionError("make_binary_form: coefficient count does not match degree");
  return BinaryForm{std::move(coeffs), deg};
}

Rational binary_eval(const BinaryForm& f, const Rational& s, const Rational& t) {
  Rational acc(0);
  for (int i = 0; i <= f.deg; ++i)
    acc += f.c[i] * pow_rat(s, f.deg - i) * pow_rat(t, i);
  return acc;
}

bool binary_is_zero(const BinaryForm& f) {
  return std::all_of(f.c.begin(), f.c.end(), [](const Rational& v) { return v == 0; });
}

int binary_distinct_projective_roots(const BinaryForm& f) {
  if (binary_is_zero(f)) throw PreconditionError("binary form is zero");
  UniPoly p(f.c);  // dehomogenize at s = 1
  const int at_infinity = f.deg - p.degree();  // multiplicity of the root [1:0]
  int affine = p.degree() == 0 ? 0 : distinct_root_count(p);
  return affine + (at_infinity > 0 ? 1 : 0);
}

BinaryForm binary_divide_root(const BinaryForm& f, const Rational& alpha,
                              const Rational& beta) {
  if (alpha == 0 && beta == 0) throw PreconditionError("binary_divide_root: zero root");
  if (f.deg < 1) throw PreconditionError("binary_divide_root: degree too small");
  // (beta s - alpha t) * sum_j g_j s^(d-1-j) t^j has t^j coefficient
  // beta g_j - alpha g_{j-1}.
  std::vector<Rational> g(f.deg, Rational(0));
  if (beta != 0) {
    Rational prev(0);
    for (int j = 0; j < f.deg; ++j) {
      g[j] = (f.c[j] + alpha * prev) / beta;
      prev = g[j];
    }
    if (f.c[f.deg] != -alpha * prev)
      throw PreconditionError("binary_divide_root: not a root");
  } else {
    Rational next(0);
    for (int j = f.deg - 1; j >= 0; --j) {
      g[j] = -(f.c[j + 1] - beta * next) / alpha;
      next = g[j];
    }
    if (f.c[0] != beta * next)  // beta = 0: requires f.c[0] == 0
      throw PreconditionError("binary_divide_root: not a root");
  }
  return BinaryForm{std::move(g), f.deg - 1};
}

std::pair<Rational, Rational> binary_linear_root(const BinaryForm& f) {
  if (f.deg != 1) throw PreconditionError("binary_linear_root: degree must be 1");
  if (binary_is_zero(f)) throw PreconditionError("binary_linear_root: zero form");
  // a s + b t vanishes at [s:t] = [-b : a].
  return {-f.c[1], f.c[0]};
}

}  // namespace hk4
