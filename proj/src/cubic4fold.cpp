#include "hk4/cubic4fold.hpp"

#include <algorithm>
#include <cstdio>

#include "hk4/rng.hpp"
#include "hk4/smith.hpp"

namespace hk4 {

namespace {

void require_homogeneous(const MultiPoly& p, int deg, const char* what) {
  int d = 0;
  if (p.is_zero() || !p.is_homogeneous(&d) || d != deg)
    throw PreconditionError(std::string(what) + ": expected a nonzero homogeneous form of degree " +
                            std::to_string(deg));
}

// Primitive integer vector proportional to a rational one (which must be
// nonzero).
std::vector<Int> primitive_ints(const std::vector<Rational>& x) {
  Int l = 1;
  for (const auto& c : x) l = lcm(l, den(c));
  std::vector<Int> v(x.size());
  Int g = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    v[i] = num(x[i]) * (l / den(x[i]));
    g = gcd(g, v[i]);
  }
  for (auto& c : v) c /= g;
  return v;
}

// Primitive integer representative of a projective point.
std::vector<Int> primitive_rep(const ProjPoint& p) { return primitive_ints(p.x); }

// Kernel of an integer matrix, computed by Gauss-Jordan elimination with
// every row kept as a primitive integer vector.  Avoids the per-operation
// normalization cost of rational arithmetic on rows with large entries.
std::vector<Vec> integer_kernel(std::vector<std::vector<Int>> a, int cols) {
  auto normalize = [](std::vector<Int>& row) {
    Int g = 0;
    for (const Int& x : row) g = gcd(g, x);
    if (g == 0) return;
    for (const Int& x : row)
      if (x != 0) {
        if (x < 0) g = -g;
        break;
      }
    for (Int& x : row) x /= g;
  };
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int best = -1;
    for (int i = r; i < static_cast<int>(a.size()); ++i) {
      if (a[i][c] == 0) continue;
      if (best == -1) best = i;
      else {
        Int bi = a[i][c] < 0 ? Int(-a[i][c]) : a[i][c];
        Int bb = a[best][c] < 0 ? Int(-a[best][c]) : a[best][c];
        if (bi < bb) best = i;
      }
    }
    if (best == -1) continue;
    std::swap(a[r], a[best]);
    normalize(a[r]);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Int p = a[r][c], q = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = a[i][j] * p - a[r][j] * q;
      normalize(a[i]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (int i = 0; i < r; ++i)
      v[pivot_col[i]] = -Rational(a[i][f]) / Rational(a[i][pivot_col[i]]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Seeded affine line t -> a + t b with small integer coordinates; the pair
// (a, b) spans a genuine line.
std::vector<UniPoly> random_line(int nvars, Rng& rng) {
  for (;;) {
    std::vector<Rational> a(nvars), b(nvars);
    for (int i = 0; i < nvars; ++i) {
      a[i] = Rational(rng.range(-5, 5));
      b[i] = Rational(rng.range(-5, 5));
    }
    Mat m(2, nvars);
    for (int i = 0; i < nvars; ++i) {
      m.at(0, i) = a[i];
      m.at(1, i) = b[i];
    }
    if (rank(m) != 2) continue;
    std::vector<UniPoly> line(nvars);
    for (int i = 0; i < nvars; ++i) line[i] = UniPoly({a[i], b[i]});
    return line;
  }
}

bool coprime_on_some_line(const MultiPoly& f, const MultiPoly& g, int nvars,
                          Rng& rng, int attempts) {
  for (int k = 0; k < attempts; ++k) {
    auto line = random_line(nvars, rng);
    UniPoly rf = compose_curve(f, line);
    UniPoly rg = compose_curve(g, line);
    if (rf.is_zero() || rg.is_zero()) continue;
    if (UniPoly::gcd(rf, rg).degree() == 0) return true;
  }
  return false;
}

MultiPoly drop_var(const MultiPoly& p, int var) {  // exponent of var must be 0
  MultiPoly out(p.nvars() - 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial e;
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var) e.push_back(m[i]);
    out.add_term(e, c);
  }
  return out;
}

// Generic 3x3 determinant by cofactor expansion along the first row.
MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

UniPoly compose_curve(const MultiPoly& p, const std::vector<UniPoly>& curve) {
  if (static_cast<int>(curve.size()) != p.nvars())
    throw PreconditionError("compose_curve: component count mismatch");
  UniPoly acc;
  for (const auto& [m, c] : p.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (size_t i = 0; i < curve.size(); ++i)
      for (int e = 0; e < m[i]; ++e) term = term * curve[i];
    acc = acc + term;
  }
  return acc;
}

std::vector<UniPoly> quintic_rnc() {
  std::vector<UniPoly> g;
  for (int i = 0; i <= 5; ++i) g.push_back(UniPoly::monomial(i, Rational(1)));
  return g;
}

std::vector<UniPoly> quartic_rnc() {
  std::vector<UniPoly> g;
  for (int i = 0; i <= 4; ++i) g.push_back(UniPoly::monomial(i, Rational(1)));
  return g;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// ---- node adaptation ----------------------------------------------------------

CubicWithNode adapt_to_node(const MultiPoly& cubic, const ProjPoint& p,
                            std::uint64_t seed) {
  require_homogeneous(cubic, 3, "adapt_to_node");
  if (cubic.nvars() != 6)
    throw PreconditionError("adapt_to_node: expected 6 variables");
  if (static_cast<int>(p.x.size()) != 6)
    throw PreconditionError("adapt_to_node: expected a point with 6 coordinates");
  if (eval_at(cubic, p) != 0)
    throw PreconditionError("adapt_to_node: point is not on the cubic");
  for (int i = 0; i < 6; ++i)
    if (eval_at(cubic.partial(i), p) != 0)
      throw PreconditionError("adapt_to_node: point is a smooth point of the cubic");

  // Unimodular change sending the last basis vector to p.  When p is already
  // a signed coordinate point, a (signed) transposition keeps the remaining
  // coordinates readable; otherwise complete the primitive vector through its
  // Smith decomposition.
  std::vector<Int> v = primitive_rep(p);
  Mat t(6, 6);
  int only = -1, nonzeros = 0;
  for (int i = 0; i < 6; ++i)
    if (v[i] != 0) {
      ++nonzeros;
      only = i;
    }
  if (nonzeros == 1 && (v[only] == 1 || v[only] == -1)) {
    t = Mat::identity(6);
    if (only != 5) {
      t.at(only, only) = t.at(5, 5) = Rational(0);
      t.at(only, 5) = t.at(5, only) = Rational(1);
    }
    t.at(only, 5) = Rational(v[only]);  // column 5 maps e5 to v
  } else {
    Mat col(6, 1);
    for (int i = 0; i < 6; ++i) col.at(i, 0) = Rational(v[i]);
    SmithResult s = smith_normal_form(col);
    Mat w = s.u * col;  // +-(first basis vector), since v is primitive
    Mat u = s.u;
    if (w.at(0, 0) == Rational(-1))
      for (int j = 0; j < 6; ++j) u.at(0, j) = -u.at(0, j);
    Mat t0 = inverse(u);  // e0 -> v
    Mat perm = Mat::identity(6);
    perm.at(0, 0) = perm.at(5, 5) = Rational(0);
    perm.at(0, 5) = perm.at(5, 0) = Rational(1);
    t = t0 * perm;  // e5 -> v
  }

  std::vector<MultiPoly> images;
  for (int i = 0; i < 6; ++i) {
    MultiPoly im(6);
    for (int j = 0; j < 6; ++j) {
      Monomial m(6, 0);
      m[j] = 1;
      im.add_term(m, t.at(i, j));
    }
    images.push_back(im);
  }
  MultiPoly adapted = cubic.substitute(images);

  MultiPoly f6(6), g6(6);
  for (const auto& [m, c] : adapted.terms()) {
    if (m[5] >= 2)
      throw PreconditionError("adapt_to_node: residual quadratic terms at the node");
    if (m[5] == 1) {
      Monomial e = m;
      e[5] = 0;
      f6.add_term(e, c);
    } else {
      g6.add_term(m, c);
    }
  }
  if (f6.is_zero())
    throw PreconditionError("adapt_to_node: not quadratic — the cubic is a cone with this vertex");

  CubicWithNode out;
  out.f = drop_var(f6, 5);
  out.g = drop_var(g6, 5);
  out.transform = t;
  out.adapted = adapted;

  MultiPoly z = MultiPoly::variable(6, 5);
  if (!(f6 * z + g6 == adapted))
    throw PreconditionError("adapt_to_node: split does not reassemble");  // unreachable

  Rng rng(seed);
  out.no_common_factor_on_line = coprime_on_some_line(out.f, out.g, 5, rng, 8);
  if (!out.no_common_factor_on_line)
    throw PreconditionError("adapt_to_node: quadric and cubic parts appear to share a factor");
  return out;
}

std::vector<Rational> psi_inverse(const CubicWithNode& c, const ProjPoint& x) {
  if (static_cast<int>(x.x.size()) != 5)
    throw PreconditionError("psi_inverse: expected a point with 5 coordinates");
  const Rational fx = eval_at(c.f, x);
  const Rational gx = eval_at(c.g, x);
  if (fx == 0 && gx == 0)
    throw PreconditionError("psi_inverse: indeterminate — the point lies on the line surface");
  std::vector<Rational> out(6);
  for (int i = 0; i < 5; ++i) out[i] = fx * x.x[i];
  out[5] = -gx;
  return out;
}

SingReport sing_correspondence(const CubicWithNode& c, const ProjPoint& y) {
  if (static_cast<int>(y.x.size()) != 6)
    throw PreconditionError("sing_correspondence: expected a point with 6 coordinates");
  if (eval_at(c.adapted, y) != 0)
    throw PreconditionError("sing_correspondence: point is not on the cubic");
  std::vector<Rational> a(y.x.begin(), y.x.begin() + 5);
  if (std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; }))
    throw PreconditionError("sing_correspondence: the node itself is excluded");

  SingReport r;
  r.s = make_proj_point(a);
  r.y_singular = true;
  for (int i = 0; i < 6 && r.y_singular; ++i)
    if (eval_at(c.adapted.partial(i), y) != 0) r.y_singular = false;
  r.s_on_surface = eval_at(c.f, r.s) == 0 && eval_at(c.g, r.s) == 0;
  if (r.s_on_surface) {
    const int jrank = jacobian_rank_at({c.f, c.g}, r.s);
    r.theta_dim = 4 - jrank;
    r.s_singular_on_surface = jrank < 2;
  } else {
    r.theta_dim = -1;
    r.s_singular_on_surface = false;
  }
  r.f_smooth_at_s = false;
  for (int i = 0; i < 5 && !r.f_smooth_at_s; ++i)
    if (eval_at(c.f.partial(i), r.s) != 0) r.f_smooth_at_s = true;
  return r;
}

// ---- two-node discriminant ----------------------------------------------------

TwoNodeData two_node_discriminant(const MultiPoly& cubic, std::uint64_t seed) {
  require_homogeneous(cubic, 3, "two_node_discriminant");
  if (cubic.nvars() != 6)
    throw PreconditionError("two_node_discriminant: expected 6 variables");

  MultiPoly bhat6(6), chat6(6), dhat6(6), fhat6(6);
  bool sees_z0 = false, sees_z1 = false;
  for (const auto& [m, c] : cubic.terms()) {
    const int z0 = m[4], z1 = m[5];
    if (z0 >= 2 || z1 >= 2)
      throw PreconditionError("two_node_discriminant: cubic is not doubly vanishing at both marked points");
    Monomial e = m;
    e[4] = e[5] = 0;
    if (z0 == 1) sees_z0 = true;
    if (z1 == 1) sees_z1 = true;
    if (z0 == 0 && z1 == 0) bhat6.add_term(e, c);
    else if (z0 == 1 && z1 == 0) chat6.add_term(e, c);
    else if (z0 == 0 && z1 == 1) dhat6.add_term(e, c);
    else fhat6.add_term(e, c);
  }
  if (!sees_z0 || !sees_z1)
    throw PreconditionError("two_node_discriminant: a marked point is worse than a double point");

  TwoNodeData out;
  out.bhat = drop_var(drop_var(bhat6, 5), 4);
  out.chat = drop_var(drop_var(chat6, 5), 4);
  out.dhat = drop_var(drop_var(dhat6, 5), 4);
  out.fhat = drop_var(drop_var(fhat6, 5), 4);

  // Greedy split hat = sum_j X_j (piece)_j using the lowest variable present.
  auto split = [](const MultiPoly& hat) {
    std::vector<MultiPoly> pieces(4, MultiPoly(4));
    for (const auto& [m, c] : hat.terms()) {
      int j = 0;
      while (j < 4 && m[j] == 0) ++j;
      Monomial e = m;
      e[j] -= 1;
      pieces[j].add_term(e, c);
    }
    return pieces;
  };
  out.b = split(out.bhat);
  out.c = split(out.chat);
  out.d = split(out.dhat);
  out.f = Vec(4, Rational(0));
  for (int j = 0; j < 4; ++j) {
    Monomial e(4, 0);
    e[j] = 1;
    out.f[j] = out.fhat.coeff(e);
  }

  // Reassembly both at the split level and at the full cubic level.
  MultiPoly zb(4), zc(4), zd(4), zf(4);
  for (int j = 0; j < 4; ++j) {
    MultiPoly xj = MultiPoly::variable(4, j);
    zb = zb + xj * out.b[j];
    zc = zc + xj * out.c[j];
    zd = zd + xj * out.d[j];
    zf = zf + xj.scaled(out.f[j]);
  }
  MultiPoly z0 = MultiPoly::variable(6, 4), z1 = MultiPoly::variable(6, 5);
  out.reconstructs = zb == out.bhat && zc == out.chat && zd == out.dhat &&
                     zf == out.fhat &&
                     bhat6 + chat6 * z0 + dhat6 * z1 + fhat6 * z0 * z1 == cubic;

  // det [[0, F, C], [F, 0, D], [C, D, B]] = F (2 C D - F B).
  const MultiPoly& B = out.bhat;
  const MultiPoly& C = out.chat;
  const MultiPoly& D = out.dhat;
  const MultiPoly& F = out.fhat;
  const MultiPoly zero(4);
  MultiPoly det = det3({{{zero, F, C}, {F, zero, D}, {C, D, B}}});
  out.p = C * D.scaled(Rational(2)) - B * F;
  out.det_identity = det == F * out.p;

  out.gradient_identity = true;
  for (int s = 0; s < 4; ++s) {
    MultiPoly lhs = out.p.partial(s);
    MultiPoly rhs = C.partial(s) * D.scaled(Rational(2)) + C * D.partial(s).scaled(Rational(2)) -
                    B.partial(s) * F - B.scaled(out.f[s]);
    if (!(lhs == rhs)) out.gradient_identity = false;
  }

  // Fiber containment: small-grid rational points of V(F, D) and V(F, C)
  // must lie on V(P).
  out.fibers_in_p = true;
  for (int xa = -2; xa <= 2; ++xa)
    for (int xb = -2; xb <= 2; ++xb)
      for (int xc = -2; xc <= 2; ++xc)
        for (int xd = -2; xd <= 2; ++xd) {
          if (xa == 0 && xb == 0 && xc == 0 && xd == 0) continue;
          std::vector<Rational> pt{Rational(xa), Rational(xb), Rational(xc), Rational(xd)};
          const bool on_f = F.eval(pt) == 0;
          if (!on_f) continue;
          if ((D.eval(pt) == 0 || C.eval(pt) == 0) && out.p.eval(pt) != 0)
            out.fibers_in_p = false;
        }

  Rng rng(seed);
  out.no_common_zero_on_line = false;
  for (int k = 0; k < 8 && !out.no_common_zero_on_line; ++k) {
    auto line = random_line(4, rng);
    UniPoly g;
    for (const MultiPoly* q : {&B, &C, &D, &F})
      if (!q->is_zero()) g = UniPoly::gcd(g, compose_curve(*q, line));
    if (!g.is_zero() && g.degree() == 0) out.no_common_zero_on_line = true;
  }
  return out;
}

MultiPoly branch_divisor(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
  require_homogeneous(a, 1, "branch_divisor (A)");
  if (!b.is_zero()) require_homogeneous(b, 2, "branch_divisor (B)");
  if (!c.is_zero()) require_homogeneous(c, 3, "branch_divisor (C)");
  if (a.nvars() != b.nvars() || b.nvars() != c.nvars())
    throw PreconditionError("branch_divisor: variable count mismatch");
  return b * b - (a * c).scaled(Rational(4));
}

Int chord_secant_degree(int d, int g) {
  if (d < 3 || g < 0) throw PreconditionError("chord_secant_degree: out of range");
  return Int(d - 1) * (d - 2) / 2 - g;
}

MultiPoly chord_rnc4_cubic() {
  auto x = [](int i) { return MultiPoly::variable(5, i); };
  // det [[X0,X1,X2],[X1,X2,X3],[X2,X3,X4]]
  return x(0) * (x(2) * x(4) - x(3) * x(3)) - x(1) * (x(1) * x(4) - x(3) * x(2)) +
         x(2) * (x(1) * x(3) - x(2) * x(2));
}

// ---- the plane-swept cubic of a net of binary cubics ---------------------------

NetOnQuinticRNC make_net(const std::array<BinaryForm, 3>& basis) {
  Mat m(3, 4);
  for (int i = 0; i < 3; ++i) {
    if (basis[i].deg != 3)
      throw PreconditionError("make_net: basis forms must be binary cubics");
    for (int j = 0; j < 4; ++j) m.at(i, j) = basis[i].c[j];
  }
  if (rank(m) != 3) throw PreconditionError("make_net: basis is linearly dependent");
  return NetOnQuinticRNC{basis};
}

namespace {

std::vector<Int> gamma5(const Int& alpha, const Int& beta) {
  std::vector<Int> p(6);
  for (int i = 0; i <= 5; ++i) {
    Int v = 1;
    for (int k = 0; k < 5 - i; ++k) v *= alpha;
    for (int k = 0; k < i; ++k) v *= beta;
    p[i] = v;
  }
  return p;
}

bool proj_equal(const std::pair<Rational, Rational>& a,
                const std::pair<Rational, Rational>& b) {
  return a.first * b.second - a.second * b.first == 0;
}

// Primitive integer pair for a nonzero rational parameter point.
std::pair<Int, Int> primitive_pair(const std::pair<Rational, Rational>& r) {
  auto v = primitive_ints({r.first, r.second});
  return {v[0], v[1]};
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

YgFit y_g_fit(const NetOnQuinticRNC& net, std::uint64_t seed) {
  Rng rng(seed);
  const auto monos = monomials_of_degree(6, 3);  // 56 cubic monomials
  std::vector<std::vector<Int>> samples;
  int planes = 0;

  auto add_planes = [&](int target) {
    int guard = 0;
    while (planes < target && ++guard < 4000) {
      std::pair<Rational, Rational> r1{Rational(rng.range(-6, 6)), Rational(rng.range(1, 3))};
      std::pair<Rational, Rational> r2{Rational(rng.range(-6, 6)), Rational(rng.range(1, 3))};
      if (proj_equal(r1, r2)) continue;
      Mat cond(2, 3);
      for (int i = 0; i < 3; ++i) {
        cond.at(0, i) = binary_eval(net.basis[i], r1.first, r1.second);
        cond.at(1, i) = binary_eval(net.basis[i], r2.first, r2.second);
      }
      auto ker = kernel_basis(cond);
      if (ker.size() != 1) continue;  // degenerate pair for this net
      BinaryForm member{{Rational(0), Rational(0), Rational(0), Rational(0)}, 3};
      for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 3; ++i) member.c[j] += ker[0][i] * net.basis[i].c[j];
      if (binary_is_zero(member)) continue;
      BinaryForm lin = binary_divide_root(binary_divide_root(member, r1.first, r1.second),
                                          r2.first, r2.second);
      auto r3 = binary_linear_root(lin);
      if (proj_equal(r3, r1) || proj_equal(r3, r2)) continue;

      const auto q1 = primitive_pair(r1);
      const auto q2 = primitive_pair(r2);
      const auto q3 = primitive_pair(r3);
      // Keep the sample coordinates word-sized: a plane whose residual root
      // is large would dominate the elimination cost for no extra rank.
      if (abs_int(q3.first) > 40 || abs_int(q3.second) > 40) continue;

      const auto p1 = gamma5(q1.first, q1.second);
      const auto p2 = gamma5(q2.first, q2.second);
      const auto p3 = gamma5(q3.first, q3.second);
      const long long combos[3][3] = {{1, 1, 1}, {1, 2, 3}, {2, -1, 1}};
      for (const auto& cb : combos) {
        std::vector<Int> pt(6);
        bool zero = true;
        for (int i = 0; i < 6; ++i) {
          pt[i] = Int(cb[0]) * p1[i] + Int(cb[1]) * p2[i] + Int(cb[2]) * p3[i];
          if (pt[i] != 0) zero = false;
        }
        if (zero) continue;
        Int g = 0;
        for (const Int& x : pt) g = gcd(g, x);
        for (Int& x : pt) x /= g;
        samples.push_back(std::move(pt));
      }
      ++planes;
    }
  };

  auto solve = [&]() {
    std::vector<std::vector<Int>> rows(samples.size(), std::vector<Int>(monos.size()));
    for (size_t r = 0; r < samples.size(); ++r)
      for (size_t c = 0; c < monos.size(); ++c) {
        Int v = 1;
        for (int i = 0; i < 6; ++i)
          for (int e = 0; e < monos[c][i]; ++e) v *= samples[r][i];
        rows[r][c] = v;
      }
    return integer_kernel(std::move(rows), static_cast<int>(monos.size()));
  };

  add_planes(25);
  auto ker = solve();
  if (ker.size() > 1) {
    add_planes(50);
    ker = solve();
  }
  if (ker.empty())
    throw PreconditionError("y_g_fit: no cubic through the sampled planes");
  if (ker.size() > 1)
    throw PreconditionError("y_g_fit: samples left the fit underdetermined");

  YgFit out;
  out.kernel_dim = static_cast<int>(ker.size());
  out.sample_count = static_cast<int>(samples.size());
  out.plane_count = planes;
  Vec coeff = ker[0];
  Rational pivot(0);
  for (const auto& v : coeff)
    if (v != 0) {
      pivot = v;
      break;
    }
  for (auto& v : coeff) v /= pivot;
  out.cubic = poly_from_coefficients(3, 6, coeff);

  const auto curve = quintic_rnc();
  out.double_vanish_on_curve = compose_curve(out.cubic, curve).is_zero();
  for (int i = 0; i < 6 && out.double_vanish_on_curve; ++i)
    if (!compose_curve(out.cubic.partial(i), curve).is_zero())
      out.double_vanish_on_curve = false;

  LinearSystem sys = linear_conditions(3, 6, curve, true);
  Vec image = sys.conditions.apply(coeff);
  out.in_double_kernel = vec_is_zero(image);

  // Cone directions: v with sum_i v_i dP/dX_i identically zero.
  const auto quad_monos = monomials_of_degree(6, 2);
  Mat cone(static_cast<int>(quad_monos.size()), 6);
  for (int i = 0; i < 6; ++i) {
    MultiPoly di = out.cubic.partial(i);
    for (size_t r = 0; r < quad_monos.size(); ++r)
      cone.at(static_cast<int>(r), i) = di.coeff(quad_monos[r]);
  }
  auto cone_ker = kernel_basis(cone);
  out.cone_space_dim = static_cast<int>(cone_ker.size());
  if (!cone_ker.empty()) out.cone_vertex = cone_ker[0];

  out.content_hash = fnv1a_hex(out.cubic.to_string());
  return out;
}

// ---- worked two-quadric example ------------------------------------------------

namespace {

UniPoly det_unipoly(std::vector<std::vector<UniPoly>> m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  UniPoly acc;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor;
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<UniPoly> row(m[r].begin() + 1, m[r].end());
      minor.push_back(std::move(row));
    }
    UniPoly term = m[i][0] * det_unipoly(std::move(minor));
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TantipianiReport tantipiani_example() {
  TantipianiReport r;
  auto x6 = [](int i) { return MultiPoly::variable(6, i); };
  r.f = x6(0) * x6(1) + x6(2) * x6(3);
  r.g = x6(0) * x6(0) + x6(1) * x6(1) + x6(2) * x6(2) + x6(3) * x6(3) + x6(5) * x6(5);
  r.rank_f = quadratic_form_rank(r.f);
  r.rank_g = quadratic_form_rank(r.g);

  // Hyperplane X5 = lambda X4 cuts V(F X4 + G X5) in X4 * Q_lambda with
  // Q_lambda = F + lambda G(X0..X3, 0, lambda X4) in variables X0..X4.
  // Symmetric matrix over Q[lambda]:
  const UniPoly l = UniPoly::monomial(1, Rational(1));
  const UniPoly half = UniPoly::constant(Rational(1, 2));
  const UniPoly zero;
  std::vector<std::vector<UniPoly>> m(5, std::vector<UniPoly>(5, zero));
  m[0][0] = m[1][1] = m[2][2] = m[3][3] = l;              // lambda X_i^2
  m[0][1] = m[1][0] = half;                               // F: X0 X1
  m[2][3] = m[3][2] = half;                               // F: X2 X3
  m[4][4] = l * l * l;                                    // lambda^3 X4^2
  r.delta = det_unipoly(m);
  r.delta_nonconstant = r.delta.degree() >= 1;

  r.sample_root = Rational(1, 2);
  if (r.delta.eval(r.sample_root) != 0)
    throw PreconditionError("tantipiani_example: expected root of the discriminant");

  auto x5 = [](int i) { return MultiPoly::variable(5, i); };
  r.residual_at_root =
      x5(0) * x5(1) + x5(2) * x5(3) +
      (x5(0) * x5(0) + x5(1) * x5(1) + x5(2) * x5(2) + x5(3) * x5(3)).scaled(Rational(1, 2)) +
      (x5(4) * x5(4)).scaled(Rational(1, 8));
  r.singular_point = make_proj_point({Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)});
  r.jacobian_rank_at_point = jacobian_rank_at({r.residual_at_root}, r.singular_point);
  return r;
}

}  // namespace hk4
