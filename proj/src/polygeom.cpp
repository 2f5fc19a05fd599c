#include "hk4/polygeom.hpp"

#include <algorithm>
#include <numeric>

namespace hk4 {

ProjPoint make_proj_point(std::vector<Rational> coords) {
  auto it = std::find_if(coords.begin(), coords.end(),
                         [](const Rational& c) { return c != 0; });
  if (it == coords.end())
    throw PreconditionError("make_proj_point: all coordinates are zero");
  const Rational pivot = *it;
  for (auto& c : coords) c /= pivot;
  return ProjPoint{std::move(coords)};
}

Rational eval_at(const MultiPoly& p, const ProjPoint& v) { return p.eval(v.x); }

MultiPoly restrict_to_plane(const MultiPoly& p, const std::array<ProjPoint, 3>& span) {
  const int n = p.nvars();
  Mat rows(3, n);
  for (int k = 0; k < 3; ++k) {
    if (static_cast<int>(span[k].x.size()) != n)
      throw PreconditionError("restrict_to_plane: point dimension mismatch");
    for (int i = 0; i < n; ++i) rows.at(k, i) = span[k].x[i];
  }
  if (rank(rows) != 3)
    throw PreconditionError("restrict_to_plane: spanning points are dependent");
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    MultiPoly im(3);
    for (int k = 0; k < 3; ++k) {
      Monomial m(3, 0);
      m[k] = 1;
      im.add_term(m, span[k].x[i]);
    }
    images.push_back(im);
  }
  return p.substitute(images);
}

int jacobian_rank_at(const std::vector<MultiPoly>& gens, const ProjPoint& v) {
  if (gens.empty()) throw PreconditionError("jacobian_rank_at: no generators");
  const int n = gens[0].nvars();
  for (const auto& g : gens) {
    if (g.nvars() != n) throw PreconditionError("jacobian_rank_at: mixed variable counts");
    if (eval_at(g, v) != 0)
      throw PreconditionError("jacobian_rank_at: point is not on the locus");
  }
  Mat jac(static_cast<int>(gens.size()), n);
  for (size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < n; ++j) jac.at(static_cast<int>(i), j) = eval_at(gens[i].partial(j), v);
  return rank(jac);
}

MultiPoly local_expansion(const MultiPoly& curve, const ProjPoint& v) {
  const int n = curve.nvars();
  if (static_cast<int>(v.x.size()) != n)
    throw PreconditionError("local_expansion: dimension mismatch");
  int piv = 0;
  while (piv < n && v.x[piv] == 0) ++piv;  // normalized: v.x[piv] == 1
  std::vector<MultiPoly> images;
  images.reserve(n);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (i == piv) {
      images.push_back(MultiPoly::constant(n - 1, Rational(1)));
    } else {
      MultiPoly im = MultiPoly::constant(n - 1, v.x[i]);
      Monomial m(n - 1, 0);
      m[next] = 1;
      im.add_term(m, Rational(1));
      images.push_back(im);
      ++next;
    }
  }
  return curve.substitute(images);
}

int multiplicity_at(const MultiPoly& curve, const ProjPoint& v) {
  if (eval_at(curve, v) != 0)
    throw PreconditionError("multiplicity_at: curve does not vanish at the point");
  MultiPoly loc = local_expansion(curve, v);
  int m = -1;
  for (const auto& [mono, c] : loc.terms()) {
    int d = std::accumulate(mono.begin(), mono.end(), 0);
    if (m == -1 || d < m) m = d;
  }
  if (m <= 0) throw PreconditionError("multiplicity_at: curve is zero along the chart");
  return m;
}

BinaryForm tangent_cone(const MultiPoly& curve, const ProjPoint& v) {
  if (curve.nvars() != 3)
    throw PreconditionError("tangent_cone: expected a plane curve in 3 variables");
  const int m = multiplicity_at(curve, v);
  MultiPoly lead = local_expansion(curve, v).homogeneous_part(m);
  std::vector<Rational> c(m + 1, Rational(0));
  for (const auto& [mono, coeff] : lead.terms()) c[mono[1]] = coeff;
  return make_binary_form(std::move(c), m);
}

int tangent_cone_distinct_factors(const MultiPoly& curve, const ProjPoint& v) {
  return binary_distinct_projective_roots(tangent_cone(curve, v));
}

// ---- reducedness via bivariate gcd -------------------------------------------

namespace {

// Polynomial in y with coefficients in Q[x]: entry i multiplies y^i.
using BiPoly = std::vector<UniPoly>;

void bi_trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly to_bi(const MultiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<size_t>(m[1]) >= out.size()) out.resize(m[1] + 1);
    out[m[1]] = out[m[1]] + UniPoly::monomial(m[0], c);
  }
  bi_trim(out);
  return out;
}

UniPoly bi_content(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p) g = UniPoly::gcd(g, c);
  return g;
}

BiPoly bi_primitive(const BiPoly& p) {
  if (p.empty()) return p;
  UniPoly c = bi_content(p);
  BiPoly out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = UniPoly::exact_div(p[i], c);
  return out;
}

BiPoly bi_mul_uni(const BiPoly& p, const UniPoly& u) {
  BiPoly out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] * u;
  bi_trim(out);
  return out;
}

BiPoly bi_sub(const BiPoly& a, const BiPoly& b) {
  BiPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = out[i] + a[i];
    if (i < b.size()) out[i] = out[i] - b[i];
  }
  bi_trim(out);
  return out;
}

BiPoly bi_shift(const BiPoly& p, int k) {  // multiply by y^k
  if (p.empty()) return p;
  BiPoly out(p.size() + k);
  for (size_t i = 0; i < p.size(); ++i) out[i + k] = p[i];
  return out;
}

// Pseudo-remainder of a by b in (Q[x])[y].
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UniPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    const UniPoly la = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    a = bi_sub(bi_mul_uni(a, lb), bi_shift(bi_mul_uni(b, la), shift));
    if (static_cast<int>(a.size()) - 1 >= db + shift)
      throw PreconditionError("bi_prem: degree did not drop");  // unreachable
    if (a.empty()) break;
  }
  return a;
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
  bi_trim(a);
  bi_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UniPoly content = UniPoly::gcd(bi_content(a), bi_content(b));
  a = bi_primitive(a);
  b = bi_primitive(b);
  while (!b.empty()) {
    BiPoly r = bi_prem(a, b);
    a = std::move(b);
    b = bi_primitive(r);
  }
  return bi_mul_uni(bi_primitive(a), content);
}

Rational bi_eval_origin(const BiPoly& p) {
  return p.empty() ? Rational(0) : p[0].coeff(0);
}

}  // namespace

bool is_reduced_at(const MultiPoly& curve, const ProjPoint& v) {
  if (curve.nvars() != 3)
    throw PreconditionError("is_reduced_at: expected a plane curve in 3 variables");
  MultiPoly g = local_expansion(curve, v);
  if (g.is_zero()) return false;
  BiPoly bg = to_bi(g);
  BiPoly r = bi_gcd(bi_gcd(bg, to_bi(g.partial(0))), to_bi(g.partial(1)));
  // A repeated factor through v divides g and both partials, hence r; no
  // repeated factor through v means r does not vanish at the origin.
  return bi_eval_origin(r) != 0;
}

bool du_val_plane_criterion(const MultiPoly& curve, const ProjPoint& v) {
  if (eval_at(curve, v) != 0) return true;  // not a branch point at all
  if (!is_reduced_at(curve, v))
    throw PreconditionError("du_val_plane_criterion: curve is not reduced at the point");
  const int m = multiplicity_at(curve, v);
  if (m <= 2) return true;
  if (m == 3) return tangent_cone_distinct_factors(curve, v) >= 2;
  return false;
}

int quadratic_form_rank(const MultiPoly& q) {
  int deg = 0;
  if (q.is_zero() || !q.is_homogeneous(&deg) || deg != 2)
    throw PreconditionError("quadratic_form_rank: expected a nonzero quadratic form");
  const int n = q.nvars();
  Mat a(n, n);
  for (const auto& [m, c] : q.terms()) {
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
      if (m[k] == 2) i = j = k;
      if (m[k] == 1) (i == -1 ? i : j) = k;
    }
    if (i == j) {
      a.at(i, i) = c;
    } else {
      a.at(i, j) = c / 2;
      a.at(j, i) = c / 2;
    }
  }
  return rank(a);
}

// ---- linear systems along a parametrized curve --------------------------------

namespace {

UniPoly monomial_on_curve(const Monomial& m, const std::vector<UniPoly>& curve) {
  UniPoly prod = UniPoly::constant(Rational(1));
  for (size_t i = 0; i < m.size(); ++i)
    for (int e = 0; e < m[i]; ++e) prod = prod * curve[i];
  return prod;
}

}  // namespace

LinearSystem linear_conditions(int d, int nvars, const std::vector<UniPoly>& curve,
                               bool double_vanish, int truncation) {
  if (static_cast<int>(curve.size()) != nvars)
    throw PreconditionError("linear_conditions: curve component count mismatch");
  int maxdeg = 0;
  for (const auto& g : curve) maxdeg = std::max(maxdeg, std::max(0, g.degree()));
  const int K = truncation >= 0 ? truncation : d * maxdeg;

  LinearSystem sys;
  sys.monomials = monomials_of_degree(nvars, d);
  const int cols = static_cast<int>(sys.monomials.size());
  const int groups = 1 + (double_vanish ? nvars : 0);
  sys.conditions = Mat((K + 1) * groups, cols);

  for (int c = 0; c < cols; ++c) {
    const Monomial& m = sys.monomials[c];
    UniPoly val = monomial_on_curve(m, curve);
    for (int k = 0; k <= K; ++k) sys.conditions.at(k, c) = val.coeff(k);
    if (double_vanish) {
      for (int j = 0; j < nvars; ++j) {
        UniPoly dval;
        if (m[j] > 0) {
          Monomial dm = m;
          dm[j] -= 1;
          dval = monomial_on_curve(dm, curve).scaled(Rational(m[j]));
        }
        const int base = (1 + j) * (K + 1);
        for (int k = 0; k <= K; ++k) sys.conditions.at(base + k, c) = dval.coeff(k);
      }
    }
  }
  sys.kernel = kernel_basis(sys.conditions);
  return sys;
}

int linear_conditions_dim(int d, int nvars, const std::vector<UniPoly>& curve,
                          bool double_vanish, int truncation) {
  return linear_conditions(d, nvars, curve, double_vanish, truncation).kernel_dim();
}

MultiPoly poly_from_coefficients(int d, int nvars, const Vec& coeffs) {
  auto monos = monomials_of_degree(nvars, d);
  if (monos.size() != coeffs.size())
    throw PreconditionError("poly_from_coefficients: coefficient count mismatch");
  MultiPoly p(nvars);
  for (size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], coeffs[i]);
  return p;
}

}  // namespace hk4
