#include <array>
#include <vector>

#include "doctest.h"
#include "hk4/cubic4fold.hpp"
#include "hk4/matrix.hpp"
#include "hk4/multipoly.hpp"
#include "hk4/polygeom.hpp"
#include "hk4/rng.hpp"
#include "hk4/unipoly.hpp"

using namespace hk4;

namespace {

MultiPoly v(int n, int i) { return MultiPoly::variable(n, i); }

// Lift a polynomial to more variables by appending zero exponents.
MultiPoly lift(const MultiPoly& p, int nvars) {
  MultiPoly out(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial e = m;
    e.resize(nvars, 0);
    out.add_term(e, c);
  }
  return out;
}

ProjPoint pt(std::vector<Rational> c) { return make_proj_point(std::move(c)); }

ProjPoint pt6(long long a, long long b, long long c, long long d, long long e,
              long long f) {
  return pt({Rational(a), Rational(b), Rational(c), Rational(d), Rational(e), Rational(f)});
}

MultiPoly random_homogeneous(Rng& rng, int nvars, int deg) {
  MultiPoly p(nvars);
  for (const auto& m : monomials_of_degree(nvars, deg))
    if (rng.range(0, 2) != 0) p.add_term(m, Rational(rng.range(-4, 4)));
  if (p.is_zero()) p.add_term(monomials_of_degree(nvars, deg).front(), Rational(1));
  return p;
}

BinaryForm bf(std::vector<Rational> c) { return make_binary_form(std::move(c), 3); }

bool is_integer_matrix(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (den(m.at(i, j)) != 1) return false;
  return true;
}

std::vector<MultiPoly> matrix_images(const Mat& t) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < t.rows(); ++i) {
    MultiPoly im(t.cols());
    for (int j = 0; j < t.cols(); ++j) {
      Monomial m(t.cols(), 0);
      m[j] = 1;
      im.add_term(m, t.at(i, j));
    }
    images.push_back(im);
  }
  return images;
}

}  // namespace

TEST_CASE("node adaptation: coordinate node splits off quadric and cubic parts") {
  MultiPoly cubic = v(6, 0) * v(6, 1) * v(6, 5) + v(6, 2).pow(3);
  CubicWithNode c = adapt_to_node(cubic, pt6(0, 0, 0, 0, 0, 1));
  CHECK(c.f == v(5, 0) * v(5, 1));
  CHECK(c.g == v(5, 2).pow(3));
  CHECK(c.transform == Mat::identity(6));
  CHECK(c.adapted == cubic);
  CHECK(c.no_common_factor_on_line);
}

TEST_CASE("node adaptation: rejects smooth points, off-cubic points, and cones") {
  MultiPoly fermat(6);
  for (int i = 0; i < 6; ++i) fermat = fermat + v(6, i).pow(3);
  // On the cubic but smooth.
  CHECK_THROWS_AS(adapt_to_node(fermat, pt6(1, -1, 0, 0, 0, 0)), PreconditionError);
  // Not on the cubic at all.
  CHECK_THROWS_AS(adapt_to_node(fermat, pt6(1, 0, 0, 0, 0, 0)), PreconditionError);
  // Double point whose quadric part vanishes: a cone vertex.
  MultiPoly cone = v(6, 0).pow(3) + v(6, 1).pow(3) + v(6, 2).pow(3);
  CHECK_THROWS_AS(adapt_to_node(cone, pt6(0, 0, 0, 0, 0, 1)), PreconditionError);
  // Wrong degree and wrong variable count.
  CHECK_THROWS_AS(adapt_to_node(v(6, 0).pow(2) * v(6, 1).pow(2), pt6(0, 0, 0, 0, 0, 1)),
                  PreconditionError);
  CHECK_THROWS_AS(adapt_to_node(MultiPoly::variable(4, 0).pow(3),
                                pt({Rational(0), Rational(0), Rational(0), Rational(1)})),
                  PreconditionError);
}

TEST_CASE("node adaptation: general position nodes") {
  // Start from an adapted model and move the node by unimodular shears.
  MultiPoly f5 = v(5, 0) * v(5, 1) + v(5, 2) * v(5, 3) + v(5, 4).pow(2);
  MultiPoly g5 = v(5, 2).pow(3);
  MultiPoly model = lift(f5, 6) * v(6, 5) + lift(g5, 6);

  Rng rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    Mat shear = Mat::identity(6);
    for (int k = 0; k < 5; ++k) {
      int i = static_cast<int>(rng.range(0, 5));
      int j = static_cast<int>(rng.range(0, 5));
      if (i == j) continue;
      Rational c(rng.range(-2, 2));
      for (int col = 0; col < 6; ++col) shear.at(i, col) += c * shear.at(j, col);
    }
    MultiPoly moved = model.substitute(matrix_images(shear));
    ProjPoint node = make_proj_point(inverse(shear).apply(
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}));

    CubicWithNode c = adapt_to_node(moved, node);
    // The change of coordinates is unimodular and integral.
    CHECK(is_integer_matrix(c.transform));
    Rational d = det(c.transform);
    CHECK((d == 1 || d == -1));
    // Its last column is the node.
    std::vector<Rational> col5(6);
    for (int i = 0; i < 6; ++i) col5[i] = c.transform.at(i, 5);
    CHECK(make_proj_point(col5) == node);
    // adapted really is the cubic rewritten in the new coordinates.
    CHECK(c.adapted == moved.substitute(matrix_images(c.transform)));
    // The split reassembles and the node sits at the last coordinate point.
    CHECK(lift(c.f, 6) * v(6, 5) + lift(c.g, 6) == c.adapted);
    ProjPoint e5 = pt6(0, 0, 0, 0, 0, 1);
    CHECK(eval_at(c.adapted, e5) == 0);
    for (int i = 0; i < 6; ++i) CHECK(eval_at(c.adapted.partial(i), e5) == 0);
    int deg = 0;
    CHECK(c.f.is_homogeneous(&deg));
    CHECK(deg == 2);
  }
}

TEST_CASE("projection inverse: numeric sections and the symbolic identity") {
  MultiPoly f5 = v(5, 0) * v(5, 1) + v(5, 2) * v(5, 3) + v(5, 4).pow(2);
  MultiPoly g5 = v(5, 2).pow(3);
  MultiPoly model = lift(f5, 6) * v(6, 5) + lift(g5, 6);
  CubicWithNode c = adapt_to_node(model, pt6(0, 0, 0, 0, 0, 1));

  // Generic point: the section lands on the cubic and projects back.
  ProjPoint x = pt({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  std::vector<Rational> y = psi_inverse(c, x);
  CHECK(eval_at(c.adapted, make_proj_point(y)) == 0);
  for (int i = 0; i < 5; ++i) CHECK(y[i] == eval_at(c.f, x) * x.x[i]);

  // F = 0, G != 0: the section degenerates to the node.
  ProjPoint on_quadric = pt({Rational(0), Rational(1), Rational(1), Rational(0), Rational(0)});
  CHECK(eval_at(c.f, on_quadric) == 0);
  CHECK(make_proj_point(psi_inverse(c, on_quadric)) == pt6(0, 0, 0, 0, 0, 1));

  // F = G = 0: indeterminacy locus.
  ProjPoint on_both = pt({Rational(1), Rational(0), Rational(0), Rational(1), Rational(0)});
  CHECK_THROWS_AS(psi_inverse(c, on_both), PreconditionError);

  // Symbolic: composing the cubic with the section is identically zero for
  // seeded random quadric/cubic pairs.
  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    MultiPoly F = random_homogeneous(rng, 5, 2);
    MultiPoly G = random_homogeneous(rng, 5, 3);
    MultiPoly h = lift(F, 6) * v(6, 5) + lift(G, 6);
    std::vector<MultiPoly> images;
    for (int i = 0; i < 5; ++i) images.push_back(lift(F * v(5, i), 6));
    images.push_back(lift(G, 6).scaled(Rational(-1)));
    // Re-read the images in 6 variables so arities match.
    std::vector<MultiPoly> images6;
    for (auto& im : images) images6.push_back(im);
    CHECK(h.substitute(images6).is_zero());
  }
}

TEST_CASE("singularity transfer to the surface of lines") {
  // Quadric cone geometry: a whole line of the cubic is singular.
  {
    MultiPoly F = v(5, 0) * v(5, 1) - v(5, 2) * v(5, 3);
    MultiPoly G = v(5, 0).pow(2) * v(5, 4);
    CubicWithNode c = adapt_to_node(lift(F, 6) * v(6, 5) + lift(G, 6),
                                    pt6(0, 0, 0, 0, 0, 1));
    SingReport r = sing_correspondence(c, pt6(0, 0, 0, 0, 1, 1));
    CHECK(r.y_singular);
    CHECK(r.s == pt({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(r.s_on_surface);
    CHECK(r.s_singular_on_surface);
    CHECK(r.theta_dim == 4);
    CHECK(!r.f_smooth_at_s);
  }
  // Singular point of the surface at which the quadric stays smooth.
  {
    MultiPoly F = v(5, 0) * v(5, 3) - v(5, 1) * v(5, 2);
    MultiPoly G = (v(5, 0) * v(5, 3).pow(2)).scaled(Rational(-1));
    CubicWithNode c = adapt_to_node(lift(F, 6) * v(6, 5) + lift(G, 6),
                                    pt6(0, 0, 0, 0, 0, 1));
    SingReport r = sing_correspondence(c, pt6(0, 0, 0, 1, 0, 1));
    CHECK(r.y_singular);
    CHECK(r.s_on_surface);
    CHECK(r.s_singular_on_surface);
    CHECK(r.theta_dim == 3);
    CHECK(r.f_smooth_at_s);

    // A smooth point of the same cubic maps to a smooth surface point.
    SingReport sm = sing_correspondence(c, pt6(0, 0, 1, 1, 1, 1));
    CHECK(!sm.y_singular);
    CHECK(sm.s_on_surface);
    CHECK(!sm.s_singular_on_surface);
    CHECK(sm.theta_dim == 2);

    // The node itself is excluded, and points off the cubic are rejected.
    CHECK_THROWS_AS(sing_correspondence(c, pt6(0, 0, 0, 0, 0, 1)), PreconditionError);
    CHECK_THROWS_AS(sing_correspondence(c, pt6(1, 1, 1, 1, 1, 1)), PreconditionError);
  }
}

TEST_CASE("two-node discriminant: seeded random cubics") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    MultiPoly bhat = random_homogeneous(rng, 4, 3);
    MultiPoly chat = random_homogeneous(rng, 4, 2);
    MultiPoly dhat = random_homogeneous(rng, 4, 2);
    MultiPoly fhat = random_homogeneous(rng, 4, 1);
    MultiPoly cubic = lift(bhat, 6) + lift(chat, 6) * v(6, 4) + lift(dhat, 6) * v(6, 5) +
                      lift(fhat, 6) * v(6, 4) * v(6, 5);

    // External oracle: both marked points really are double points.
    for (const auto& node : {pt6(0, 0, 0, 0, 1, 0), pt6(0, 0, 0, 0, 0, 1)}) {
      CHECK(eval_at(cubic, node) == 0);
      for (int i = 0; i < 6; ++i) CHECK(eval_at(cubic.partial(i), node) == 0);
    }

    TwoNodeData td = two_node_discriminant(cubic, 1 + trial);
    CHECK(td.reconstructs);
    CHECK(td.det_identity);
    CHECK(td.gradient_identity);
    CHECK(td.fibers_in_p);
    CHECK(td.no_common_zero_on_line);
    int deg = 0;
    CHECK(td.p.is_homogeneous(&deg));
    CHECK(deg == 4);
  }
}

TEST_CASE("two-node discriminant: handcrafted pieces and the boundary gradient") {
  // Bhat = X3^3, Chat = X1^2, Dhat = X2^2, Fhat = X0.
  MultiPoly cubic = lift(v(4, 3).pow(3), 6) + lift(v(4, 1).pow(2), 6) * v(6, 4) +
                    lift(v(4, 2).pow(2), 6) * v(6, 5) + lift(v(4, 0), 6) * v(6, 4) * v(6, 5);
  TwoNodeData td = two_node_discriminant(cubic);
  CHECK(td.reconstructs);
  CHECK(td.det_identity);
  CHECK(td.gradient_identity);
  CHECK(td.bhat == v(4, 3).pow(3));
  CHECK(td.chat == v(4, 1).pow(2));
  CHECK(td.dhat == v(4, 2).pow(2));
  CHECK(td.fhat == v(4, 0));
  CHECK(td.p == (v(4, 1).pow(2) * v(4, 2).pow(2)).scaled(Rational(2)) -
                    v(4, 3).pow(3) * v(4, 0));

  // At e = (0,0,0,1), which kills Fhat, Chat, Dhat, the quartic's gradient
  // reduces to -F_s Bhat(e): here dP/dX0 = -X3^3, so the value is -1.
  std::vector<Rational> e{Rational(0), Rational(0), Rational(0), Rational(1)};
  CHECK(td.fhat.eval(e) == 0);
  CHECK(td.chat.eval(e) == 0);
  CHECK(td.dhat.eval(e) == 0);
  CHECK(td.p.partial(0).eval(e) == Rational(-1));
  CHECK(td.f[0] == 1);
  CHECK(td.p.partial(0).eval(e) == -td.f[0] * td.bhat.eval(e));

  // A quadratic term at a marked point is rejected.
  CHECK_THROWS_AS(two_node_discriminant(cubic + v(6, 0) * v(6, 4).pow(2)), PreconditionError);
  // A cubic never meeting the second marked coordinate is rejected.
  MultiPoly no_z1 = lift(v(4, 3).pow(3), 6) + lift(v(4, 1).pow(2), 6) * v(6, 4);
  CHECK_THROWS_AS(two_node_discriminant(no_z1), PreconditionError);
}

TEST_CASE("branch divisor of a conic fibration") {
  // Degenerate middle coefficient.
  MultiPoly a = v(3, 0);
  MultiPoly b(3);
  MultiPoly c = v(3, 0) * v(3, 1) * v(3, 2);
  CHECK(branch_divisor(a, b, c) ==
        (v(3, 0).pow(2) * v(3, 1) * v(3, 2)).scaled(Rational(-4)));
  CHECK_THROWS_AS(branch_divisor(v(3, 0).pow(2), b, c), PreconditionError);

  // A fibration whose branch curve acquires an ordinary double point after
  // substituting a quadric parametrization of the base.
  MultiPoly A = v(4, 3);
  MultiPoly B = v(4, 0) * (v(4, 1) - v(4, 2));
  MultiPoly C = v(4, 0).pow(3);
  MultiPoly disc = branch_divisor(A, B, C);
  std::vector<MultiPoly> images = {v(3, 2).pow(2), v(3, 0) * v(3, 2), v(3, 1) * v(3, 2),
                                   v(3, 0) * v(3, 1)};
  MultiPoly curve = disc.substitute(images);
  MultiPoly expected =
      (v(3, 0).pow(2) - (v(3, 0) * v(3, 1)).scaled(Rational(6)) + v(3, 1).pow(2)) *
      v(3, 2).pow(6);
  CHECK(curve == expected);
  ProjPoint origin = pt({Rational(0), Rational(0), Rational(1)});
  CHECK(multiplicity_at(curve, origin) == 2);
  CHECK(du_val_plane_criterion(curve, origin));
}

TEST_CASE("chord varieties of rational normal curves") {
  CHECK(chord_secant_degree(4, 0) == 3);
  CHECK(chord_secant_degree(5, 0) == 6);
  CHECK(chord_secant_degree(5, 1) == 5);
  CHECK_THROWS_AS(chord_secant_degree(2, 0), PreconditionError);
  CHECK_THROWS_AS(chord_secant_degree(5, -1), PreconditionError);

  MultiPoly hankel = chord_rnc4_cubic();
  MultiPoly frozen = v(5, 0) * v(5, 2) * v(5, 4) - v(5, 0) * v(5, 3).pow(2) -
                     v(5, 1).pow(2) * v(5, 4) +
                     (v(5, 1) * v(5, 2) * v(5, 3)).scaled(Rational(2)) - v(5, 2).pow(3);
  CHECK(hankel == frozen);

  // Double vanishing along the degree-4 rational normal curve.
  const auto curve = quartic_rnc();
  CHECK(compose_curve(hankel, curve).is_zero());
  for (int i = 0; i < 5; ++i) CHECK(compose_curve(hankel.partial(i), curve).is_zero());

  // Any point of any chord lies on the cubic: substitute
  // X_i -> lambda s^i + mu t^i and expand to zero.
  std::vector<MultiPoly> chord_images;
  for (int i = 0; i < 5; ++i)
    chord_images.push_back(v(4, 0) * v(4, 2).pow(i) + v(4, 1) * v(4, 3).pow(i));
  CHECK(hankel.substitute(chord_images).is_zero());

  // A point off the chord variety.
  CHECK(hankel.eval({Rational(1), Rational(0), Rational(1), Rational(0), Rational(0)}) ==
        Rational(-1));
}

TEST_CASE("plane-swept cubic of a base-point-free net") {
  NetOnQuinticRNC net = make_net({bf({Rational(0), Rational(1), Rational(0), Rational(0)}),
                                  bf({Rational(0), Rational(0), Rational(1), Rational(0)}),
                                  bf({Rational(1), Rational(0), Rational(0), Rational(1)})});
  YgFit fit = y_g_fit(net, 1);
  CHECK(fit.kernel_dim == 1);
  CHECK(fit.double_vanish_on_curve);
  CHECK(fit.in_double_kernel);
  CHECK(fit.cone_space_dim == 0);
  CHECK(fit.cone_vertex.empty());
  int deg = 0;
  CHECK(fit.cubic.is_homogeneous(&deg));
  CHECK(deg == 3);
  CHECK(fit.cubic.terms().begin()->second == 1);  // normalized leading coefficient

  // Determinism of the interpolated cubic across seeds.
  YgFit again = y_g_fit(net, 99);
  CHECK(again.cubic == fit.cubic);
  CHECK(again.content_hash == fit.content_hash);
}

TEST_CASE("net with a base point sweeps a cone over the chordal cubic") {
  NetOnQuinticRNC net = make_net({bf({Rational(1), Rational(0), Rational(0), Rational(0)}),
                                  bf({Rational(0), Rational(1), Rational(0), Rational(0)}),
                                  bf({Rational(0), Rational(0), Rational(1), Rational(0)})});
  YgFit fit = y_g_fit(net, 1);
  CHECK(fit.kernel_dim == 1);
  CHECK(fit.double_vanish_on_curve);
  CHECK(fit.in_double_kernel);
  CHECK(fit.cone_space_dim == 1);
  // The vertex is the image of the base point [0:1] on the curve.
  CHECK(make_proj_point(fit.cone_vertex) == pt6(0, 0, 0, 0, 0, 1));

  // Projection from the vertex identifies the cubic as the cone over the
  // chordal cubic of the degree-4 curve.
  MultiPoly expected = lift(chord_rnc4_cubic(), 6).scaled(Rational(-1));
  CHECK(fit.cubic == expected);

  // Distinct nets give distinct cubics and fingerprints.
  NetOnQuinticRNC other = make_net({bf({Rational(0), Rational(1), Rational(0), Rational(0)}),
                                    bf({Rational(0), Rational(0), Rational(1), Rational(0)}),
                                    bf({Rational(1), Rational(0), Rational(0), Rational(1)})});
  YgFit fit2 = y_g_fit(other, 1);
  CHECK(!(fit2.cubic == fit.cubic));
  CHECK(fit2.content_hash != fit.content_hash);
}

TEST_CASE("make_net validates its basis") {
  CHECK_THROWS_AS(make_net({bf({Rational(1), Rational(0), Rational(0), Rational(0)}),
                            bf({Rational(0), Rational(1), Rational(0), Rational(0)}),
                            bf({Rational(2), Rational(3), Rational(0), Rational(0)})}),
                  PreconditionError);
  CHECK_THROWS_AS(make_net({make_binary_form({Rational(1), Rational(0), Rational(0)}, 2),
                            bf({Rational(0), Rational(1), Rational(0), Rational(0)}),
                            bf({Rational(0), Rational(0), Rational(1), Rational(0)})}),
                  PreconditionError);
}

TEST_CASE("worked two-quadric example: pencil discriminant and a singular member") {
  TantipianiReport r = tantipiani_example();
  CHECK(r.rank_f == 4);
  CHECK(r.rank_g == 5);

  UniPoly expected({Rational(0), Rational(0), Rational(0), Rational(1, 16), Rational(0),
                    Rational(-1, 2), Rational(0), Rational(1)});
  CHECK(r.delta == expected);
  CHECK(r.delta_nonconstant);
  CHECK(distinct_root_count(r.delta) == 3);  // 0 and +-1/2
  CHECK(r.delta.eval(r.sample_root) == 0);
  CHECK(r.delta.eval(Rational(1)) == Rational(9, 16));  // a smooth member exists

  // Independent evaluation of the discriminant at lambda = 1 through the
  // numeric symmetric matrix.
  Mat m(5, 5);
  m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = m.at(3, 3) = Rational(1);
  m.at(0, 1) = m.at(1, 0) = Rational(1, 2);
  m.at(2, 3) = m.at(3, 2) = Rational(1, 2);
  m.at(4, 4) = Rational(1);
  CHECK(det(m) == r.delta.eval(Rational(1)));

  // The member at the sample root is genuinely singular.
  MultiPoly q = v(5, 0) * v(5, 1) + v(5, 2) * v(5, 3) +
                (v(5, 0).pow(2) + v(5, 1).pow(2) + v(5, 2).pow(2) + v(5, 3).pow(2))
                    .scaled(Rational(1, 2)) +
                v(5, 4).pow(2).scaled(Rational(1, 8));
  CHECK(r.residual_at_root == q);
  CHECK(eval_at(r.residual_at_root, r.singular_point) == 0);
  CHECK(r.jacobian_rank_at_point == 0);
  CHECK(quadratic_form_rank(r.residual_at_root) == 3);
}
