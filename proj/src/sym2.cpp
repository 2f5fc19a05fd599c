#include "hk4/sym2.hpp"

#include "hk4/numtheory.hpp"

namespace hk4 {

Sym2Space make_sym2(const Mat& gram_base) {
  if (!gram_base.is_symmetric()) throw PreconditionError("Sym^2 requires a symmetric Gram matrix");
  Sym2Space s;
  s.gram_base = gram_base;
  s.n = gram_base.rows();
  s.dim = s.n * (s.n + 1) / 2;
  s.monomial_index.assign(s.n, std::vector<int>(s.n, -1));
  for (int i = 0; i < s.n; ++i)
    for (int j = i; j < s.n; ++j) {
      s.monomial_index[i][j] = int(s.monomials.size());
      s.monomials.emplace_back(i, j);
    }
  const auto& g = s.gram_base;
  s.pairing = Mat(s.dim, s.dim);
  for (int a = 0; a < s.dim; ++a) {
    auto [i, j] = s.monomials[a];
    for (int b = a; b < s.dim; ++b) {
      auto [k, l] = s.monomials[b];
      Rational val = g.at(i, j) * g.at(k, l) + g.at(i, k) * g.at(j, l) + g.at(i, l) * g.at(j, k);
      s.pairing.at(a, b) = val;
      s.pairing.at(b, a) = val;
    }
  }
  return s;
}

Vec sym2_product(const Sym2Space& s, const Vec& u, const Vec& v) {
  if (int(u.size()) != s.n || int(v.size()) != s.n)
    throw PreconditionError("sym2_product: vector length mismatch");
  Vec out(s.dim, Rational(0));
  for (int i = 0; i < s.n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < s.n; ++j) {
      if (v[j] == 0) continue;
      out[s.index_of(i, j)] += u[i] * v[j];
    }
  }
  return out;
}

Rational sym2_pair(const Sym2Space& s, const Vec& a, const Vec& b) {
  if (int(a.size()) != s.dim || int(b.size()) != s.dim)
    throw PreconditionError("sym2_pair: element length mismatch");
  Rational out = 0;
  for (int i = 0; i < s.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < s.dim; ++j)
      if (b[j] != 0 && s.pairing.at(i, j) != 0) out += a[i] * s.pairing.at(i, j) * b[j];
  }
  return out;
}

Vec sym2_from_coeff_matrix(const Sym2Space& s, const Mat& m) {
  if (m.rows() != s.n || !m.is_symmetric())
    throw PreconditionError("coefficient matrix must be symmetric of base size");
  Vec out(s.dim);
  for (int a = 0; a < s.dim; ++a) {
    auto [i, j] = s.monomials[a];
    out[a] = (i == j) ? m.at(i, i) : 2 * m.at(i, j);
  }
  return out;
}

Vec q_dual(const Sym2Space& s) { return sym2_from_coeff_matrix(s, inverse(s.gram_base)); }

Mat sym2_change_of_basis(const Sym2Space& s, const Mat& t) {
  if (t.rows() != s.n || t.cols() != s.n)
    throw PreconditionError("change of basis must be square of base size");
  Mat out(s.dim, s.dim);
  for (int c = 0; c < s.dim; ++c) {
    auto [a, b] = s.monomials[c];
    // Expand (sum_i t_ia e_i)(sum_j t_jb e_j) in monomial coordinates.
    for (int i = 0; i < s.n; ++i) {
      if (t.at(i, a) == 0) continue;
      for (int j = 0; j < s.n; ++j) {
        if (t.at(j, b) == 0) continue;
        out.at(s.index_of(i, j), c) += t.at(i, a) * t.at(j, b);
      }
    }
  }
  return out;
}

Rational sym2_pair_base(const Sym2Space& s, const Vec& v, const Vec& w) {
  Rational out = 0;
  for (int i = 0; i < s.n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < s.n; ++j)
      if (w[j] != 0 && s.gram_base.at(i, j) != 0) out += v[i] * s.gram_base.at(i, j) * w[j];
  }
  return out;
}

QdecompResult qdecomp_check(const Sym2Space& s, const Vec& h) {
  Rational hh = sym2_pair_base(s, h, h);
  if (hh == 0) throw PreconditionError("qdecomp_check requires (h,h) != 0");

  QdecompResult r;
  r.q_dual_full = q_dual(s);
  r.h_square_part = vec_scaled(sym2_product(s, h, h), Rational(1) / hh);

  // Rational basis of h-perp, restricted Gram, and its dual pushed forward.
  Mat row(1, s.n);
  Vec gh = s.gram_base.apply(h);
  for (int j = 0; j < s.n; ++j) row.at(0, j) = gh[j];
  std::vector<Vec> perp = kernel_basis(row);
  Mat b = Mat::from_cols(perp);
  Mat gram_perp = b.transpose() * s.gram_base * b;
  Mat m = inverse(gram_perp);
  Vec qh(s.dim, Rational(0));
  for (size_t i = 0; i < perp.size(); ++i)
    for (size_t j = 0; j < perp.size(); ++j) {
      if (m.at(int(i), int(j)) == 0) continue;
      Vec prod = sym2_product(s, perp[i], perp[j]);
      qh = vec_add(qh, vec_scaled(prod, m.at(int(i), int(j))));
    }
  r.q_h_dual = qh;
  r.residual_zero =
      vec_is_zero(vec_sub(vec_sub(r.q_dual_full, r.h_square_part), r.q_h_dual));
  return r;
}

H4Decomposition decompose_h4(const Sym2Space& s, const Vec& h) {
  Rational hh = sym2_pair_base(s, h, h);
  if (hh != 2) throw PreconditionError("decompose_h4 requires (h,h) = 2");

  H4Decomposition d;
  Vec h2 = sym2_product(s, h, h);
  Vec qd = q_dual(s);

  // Block 1: the plane spanned by h^2 and q_dual.
  Mat b1 = Mat::from_cols({h2, qd});

  // Block 2: h . (rational basis of h-perp).
  Mat row(1, s.n);
  Vec gh = s.gram_base.apply(h);
  for (int j = 0; j < s.n; ++j) row.at(0, j) = gh[j];
  std::vector<Vec> perp = kernel_basis(row);
  std::vector<Vec> h_perp_prods;
  h_perp_prods.reserve(perp.size());
  for (const auto& beta : perp) h_perp_prods.push_back(sym2_product(s, h, beta));
  Mat b2 = Mat::from_cols(h_perp_prods);

  // Block 3: W(h), cut out inside Sym^2 by vanishing of the h-monomial
  // coordinates (in a basis adapted to h) and of the pairing with q_dual.
  Mat t(s.n, s.n);
  for (int i = 0; i < s.n; ++i) t.at(i, 0) = h[i];
  for (size_t c = 0; c < perp.size(); ++c)
    for (int i = 0; i < s.n; ++i) t.at(i, int(c) + 1) = perp[c][i];
  Mat adapt = sym2_change_of_basis(s, inverse(t));  // e-coords -> adapted coords
  Mat conditions(s.n + 1, s.dim);
  for (int j = 0; j < s.n; ++j) {
    int r = s.index_of(0, j);  // adapted monomials v_0 v_j, j = 0..n-1
    for (int c = 0; c < s.dim; ++c) conditions.at(j, c) = adapt.at(r, c);
  }
  Vec qd_pairing_row = s.pairing.apply(qd);
  for (int c = 0; c < s.dim; ++c) conditions.at(s.n, c) = qd_pairing_row[c];
  std::vector<Vec> w_basis = kernel_basis(conditions);
  Mat b3 = Mat::from_cols(w_basis);

  d.dim_plane = b1.cols();
  d.dim_h_hperp = b2.cols();
  d.dim_w = b3.cols();
  d.basis_plane = b1;
  d.basis_h_hperp = b2;
  d.basis_w = b3;

  // Cross Grams must vanish: the three blocks are pairwise orthogonal.
  Mat b1t_p = b1.transpose() * s.pairing;
  Mat b2t_p = b2.transpose() * s.pairing;
  Mat c12 = b1t_p * b2;
  Mat c13 = b1t_p * b3;
  Mat c23 = b2t_p * b3;
  d.blocks_orthogonal = c12.is_zero() && c13.is_zero() && c23.is_zero();

  // Orthogonal projectors from the block Grams; p3 completes the identity.
  Mat m1 = inverse(b1t_p * b1);
  Mat m2 = inverse(b2t_p * b2);
  d.p1 = (b1 * m1) * b1t_p;
  d.p2 = (b2 * m2) * b2t_p;
  d.p3 = Mat::identity(s.dim) - d.p1 - d.p2;
  d.projectors_valid =
      d.blocks_orthogonal && (d.p1 + d.p2 + d.p3 == Mat::identity(s.dim));

  // Distinguished intersections inside the h^2/q_dual plane.
  d.cucs = vec_sub(vec_scaled(h2, Rational(s.n)), vec_scaled(qd, hh));
  d.spqr = vec_sub(h2, vec_scaled(qd, hh));
  d.cucs_in_qdual_perp = sym2_pair(s, d.cucs, qd) == 0;
  Vec spqr_adapted = adapt.apply(d.spqr);
  d.spqr_in_sym2_hperp = true;
  for (int j = 0; j < s.n; ++j)
    if (spqr_adapted[s.index_of(0, j)] != 0) d.spqr_in_sym2_hperp = false;
  return d;
}

OmegaLattice omega_lattice(const Sym2Space& s, const Vec& h) {
  Vec h2 = sym2_product(s, h, h);
  Vec g2 = vec_scaled(q_dual(s), rat(2, 5));
  OmegaLattice o;
  o.gram = Mat(2, 2);
  o.gram.at(0, 0) = sym2_pair(s, h2, h2);
  o.gram.at(0, 1) = o.gram.at(1, 0) = sym2_pair(s, h2, g2);
  o.gram.at(1, 1) = sym2_pair(s, g2, g2);
  o.disc = to_int(det(o.gram));
  Int a = boost::multiprecision::abs(o.disc);
  for (Int k = isqrt(a); k >= 1; --k)
    if (a % (k * k) == 0) { o.index_bound = k; break; }
  return o;
}

std::pair<Rational, Rational> pair_with_omega(const Sym2Space& s, const Vec& h, const Vec& w) {
  Vec h2 = sym2_product(s, h, h);
  Vec g2 = vec_scaled(q_dual(s), rat(2, 5));
  return {sym2_pair(s, h2, w), sym2_pair(s, g2, w)};
}

SquareClassObstruction square_class_obstruction(const Lattice& l, const Vec& h) {
  SquareClassObstruction r;

  // Chain 1: a rank-22 integer form of |det| 3, pairing scaled by 4.
  Mat g22 = Mat::identity(22);
  g22.at(21, 21) = 3;
  r.det_scaled_form = to_int(det(g22.scaled(4)));

  // Chain 2: Gram of {h.b_i} for an integral basis of h-perp.  The induced
  // pairing gives <h.b, h.c> = (h,h)(b,c) + (h,b)(h,c) = 2 (b,c) here, so
  // det = 2^22 disc(h-perp) with the complement's disc computed exactly.
  std::vector<Vec> perp = orthogonal_complement(l, h);
  Mat gram_perp = restricted_gram(l, perp);
  r.disc_hperp = to_int(det(gram_perp));
  Sym2Space s = make_sym2(l.gram);
  std::vector<Vec> prods;
  prods.reserve(perp.size());
  for (const auto& b : perp) prods.push_back(sym2_product(s, h, b));
  Mat big = Mat::from_cols(prods);
  Mat gram_h_mult = big.transpose() * s.pairing * big;
  r.det_h_multiples = to_int(det(gram_h_mult));

  r.class_scaled_form = square_class(Rational(r.det_scaled_form));
  r.class_h_multiples = square_class(Rational(r.det_h_multiples));
  r.same_class = r.class_scaled_form == r.class_h_multiples;
  return r;
}

}  // namespace hk4
