#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "hk4/charclass.hpp"
#include "hk4/lattice.hpp"
#include "hk4/matrix.hpp"
#include "hk4/sym2.hpp"

using namespace hk4;

namespace {

struct Fixture {
  Lattice L = make_main_lattice();
  Sym2Space S = make_sym2(L.gram);
  Vec h;
  Fixture() {
    h = Vec(23, Rational(0));
    h[0] = 1;
    h[1] = 1;  // hyperbolic vector of self-pairing 2
  }
};

// Independent closed form for the Euler characteristic of the n-th power of
// the polarization, with no shared code path: (n^2 + 2)(n^2 + 3)/2.
Rational chi_oracle(long long n) {
  Rational nn = Rational(n) * n;
  return (nn + 2) * (nn + 3) / 2;
}

}  // namespace

TEST_CASE("second Chern coefficient: value, sign, and consistency") {
  Fixture f;
  RRProfile p = solve_c2(f.S, f.h);
  CHECK(p.chi_structure == Rational(3));
  CHECK(p.c4 == Int(324));
  CHECK(p.c2_square == Rational(828));
  CHECK(p.c2_coefficient == Rational(6, 5));
  CHECK(p.c2_dot_h2 == Rational(60));
  CHECK(p.consistency_240);

  // Cross-check in plain integers: a^2 . 575 = 828 . 25 / 25 means
  // 36 . 575 = 25 . 828.
  CHECK(Int(36) * 575 == Int(25) * 828);

  // Independent route to <c2, h^2> through the base lattice pairing:
  // <q_dual, alpha beta> = (n + 2)(alpha, beta) with n = 23.
  Rational via_lattice = Rational(6, 5) * 25 * Rational(pairing(f.L, f.h, f.h));
  CHECK(p.c2_dot_h2 == via_lattice);
}

TEST_CASE("second Chern coefficient: positivity picks the sign") {
  // Negating the quadratic form flips <q_dual, h^2>, so the sign of the
  // coefficient must flip with it to keep <c2, h^2> nonnegative.
  Fixture f;
  Sym2Space neg = make_sym2(f.L.gram.scaled(Rational(-1)));
  RRProfile p = solve_c2(neg, f.h);
  CHECK(p.c2_coefficient < 0);
  CHECK(p.c2_dot_h2 >= 0);
}

TEST_CASE("Euler characteristic polynomial of powers of the polarization") {
  Fixture f;
  ChiPolynomial chi = chi_of_nh(f.S, f.h);
  CHECK(chi.n4_coeff == Rational(1, 2));
  CHECK(chi.n2_coeff == Rational(5, 2));
  CHECK(chi.n0_coeff == Rational(3));

  CHECK(chi.eval(0) == Rational(3));
  CHECK(chi.eval(1) == Rational(6));
  CHECK(chi.eval(2) == Rational(21));

  for (long long n = -12; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(chi.eval(n) == chi_oracle(n));
    CHECK(is_integer(chi.eval(n)));      // holomorphic Euler characteristics
    CHECK(chi.eval(n) == chi.eval(-n));  // even polynomial
  }
}

TEST_CASE("fixed-surface invariants agree along both routes") {
  Fixture f;
  FixedSurfaceInvariants fs = fixed_surface(f.S, f.h);
  CHECK(fs.b4_quotient == 254);
  CHECK(fs.chi_quotient == 258);
  CHECK(fs.chi_total == 324);
  CHECK(fs.chi_f_euler == Rational(192));
  CHECK(fs.chi_f_square == Rational(192));
  CHECK(fs.chi_f_euler == fs.chi_f_square);
  CHECK(fs.fifteen_square == Rational(1728));
  CHECK(fs.fifteen_square == Rational(9) * fs.chi_f_square);
  CHECK(fs.h2_dot_clf == Rational(40));
  CHECK(fs.c1_squared == Rational(360));

  // The class itself: 5 h^2 - (2/5) q_dual, coordinate by coordinate.
  Vec expect = vec_sub(vec_scaled(sym2_product(f.S, f.h, f.h), Rational(5)),
                       vec_scaled(q_dual(f.S), Rational(2, 5)));
  CHECK(fs.cl_f == expect);

  // Noether-style sanity: chi(O_F) = (c1^2 + chi_top)/12 must be an integer
  // for the surface to exist; here (360 + 192)/12 = 46.
  CHECK((fs.c1_squared + fs.chi_f_euler) / 12 == Rational(46));
}

TEST_CASE("case triples: hand enumeration matches") {
  // Oracle: write out the admissible triples directly.
  std::set<std::tuple<int, int, int>> expect;
  for (int d = 3; d <= 6; ++d) expect.insert({3, d, 0});
  for (int df = 3; df <= 6; ++df) expect.insert({4, 2, df});
  expect.insert({4, 3, 3});
  expect.insert({4, 3, 4});
  expect.insert({4, 4, 3});
  expect.insert({4, 6, 2});
  for (int dy = 6; dy <= 12; ++dy) expect.insert({4, dy, 1});

  std::set<std::tuple<int, int, int>> got;
  for (const auto& t : admissible_case_triples())
    got.insert({t.dim_y, t.deg_y, t.deg_f});
  CHECK(got == expect);
  CHECK(got.size() == 19);
}

TEST_CASE("case table: golden seven rows") {
  auto rows = enumerate_cases();
  auto golden = golden_case_table();
  REQUIRE(rows.size() == 7);
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i] == golden[i]);
  }
}

TEST_CASE("case table: every constraint is load-bearing (mutation test)") {
  const auto golden = golden_case_table();
  auto mutate = [&](auto set_field) {
    CaseConstraints c;
    set_field(c);
    return enumerate_cases(c);
  };
  CHECK(mutate([](CaseConstraints& c) { c.dim_at_least_3 = false; }) != golden);
  CHECK(mutate([](CaseConstraints& c) { c.min_degree_3fold = false; }) != golden);
  CHECK(mutate([](CaseConstraints& c) { c.max_degree_3fold = false; }) != golden);
  CHECK(mutate([](CaseConstraints& c) { c.hypersurface_min_degree = false; }) != golden);
  CHECK(mutate([](CaseConstraints& c) { c.product_bound = false; }) != golden);
  CHECK(mutate([](CaseConstraints& c) { c.adjunction_low_degf = false; }) != golden);
}

TEST_CASE("case table: specific mutation effects") {
  {
    CaseConstraints c;
    c.min_degree_3fold = false;
    auto rows = enumerate_cases(c);
    REQUIRE(!rows.empty());
    CHECK(rows[0].dim_y == 3);
    CHECK(rows[0].deg_y_min == 1);  // lower bound was doing the work
  }
  {
    CaseConstraints c;
    c.adjunction_low_degf = false;
    auto rows = enumerate_cases(c);
    // The birational row now starts at degree 2 instead of 6.
    CHECK(rows.back().deg_f_min == 1);
    CHECK(rows.back().deg_y_min == 2);
  }
  {
    CaseConstraints c;
    c.dim_at_least_3 = false;
    auto rows = enumerate_cases(c);
    CHECK(rows.size() > 7);
    CHECK(rows[0].label == 0);  // out-of-range dimensions flagged, not relabeled
  }
}

TEST_CASE("half-integer feasibility region is a single point") {
  auto pts = intprop_feasible_set();
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].first == Rational(1, 2));
  CHECK(pts[0].second == Rational(0));

  // Oracle for box sufficiency: the constraints bound 10y inside (-3, 3),
  // so any solution has |y| < 3/10 and then 0 < 3x < 3 + 5 . 3/10.
  Rational x = pts[0].first, y = pts[0].second;
  CHECK(Rational(10) * y > -3);
  CHECK(Rational(10) * y < 3);
  CHECK(Rational(3) * x + Rational(5) * y > 0);
  CHECK(Rational(3) * x + Rational(5) * y < 3);
  CHECK(x + Rational(5) * y >= 0);
  CHECK(x + Rational(5) * y <= 1);
}

TEST_CASE("cubic-image cycle bookkeeping") {
  Fixture f;
  CycleBalance b = cubic_case_cycle_arithmetic(f.S, f.h);
  CHECK(b.deg_y == 3);
  CHECK(b.deg_f == 3);
  CHECK(b.m == Int(1));
  CHECK(b.integral_h == Int(2));
  CHECK(b.mult_sum == Int(1));
  CHECK(b.balance_ok);
  CHECK(b.unique_m);
  CHECK(Int(9) + b.mult_sum + b.integral_h == Int(12));
  CHECK(b.contradiction_lhs == Int(4));
  CHECK(b.contradiction_rhs == Int(3));
  CHECK(b.infeasible);
}
