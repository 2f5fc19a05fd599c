#include "hk4/checks.hpp"

#include <algorithm>

#include "hk4/charclass.hpp"
#include "hk4/cubic4fold.hpp"
#include "hk4/lattice.hpp"
#include "hk4/matrix.hpp"
#include "hk4/multipoly.hpp"
#include "hk4/polygeom.hpp"
#include "hk4/rng.hpp"
#include "hk4/sym2.hpp"
#include "hk4/unipoly.hpp"

namespace hk4 {

namespace {

std::string sig_text(const Inertia& s) {
  return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + ")";
}

std::string factors_text(const std::vector<Int>& fs) {
  // Run-length render: "1^22 2".
  std::string out;
  size_t i = 0;
  while (i < fs.size()) {
    size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    if (!out.empty()) out += ' ';
    out += fs[i].str();
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Sparse (i, j, coefficient) triple list of a Sym^2 element.
std::string sym2_triples_text(const Sym2Space& s, const Vec& v) {
  std::string out;
  for (size_t k = 0; k < s.monomials.size(); ++k) {
    if (v[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(s.monomials[k].first) + ',' +
           std::to_string(s.monomials[k].second) + ',' + v[k].str() + ')';
  }
  return out.empty() ? "0" : out;
}

std::string case_row_text(const CaseRow& r) {
  auto range = [](int lo, int hi) {
    if (lo == 0 && hi == 0) return std::string("-");
    if (lo == hi) return std::to_string(lo);
    return std::to_string(lo) + ".." + std::to_string(hi);
  };
  std::string out = std::to_string(r.label) + ":dim" + std::to_string(r.dim_y) +
                    " degY " + range(r.deg_y_min, r.deg_y_max) + " degf " +
                    range(r.deg_f_min, r.deg_f_max) +
                    (r.base_empty ? " base-empty" : "");
  return out;
}

std::string case_table_text(const std::vector<CaseRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    if (!out.empty()) out += " | ";
    out += case_row_text(r);
  }
  return out;
}

class Registry {
 public:
  explicit Registry(const CheckOptions& opts) : opts_(opts) {}

  void add(std::string id, std::string anchor, std::string expected, std::string computed) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.pass = r.expected == r.computed;
    records_.push_back(std::move(r));
  }

  void add_count(std::string id, std::string anchor, int want, int got) {
    add(std::move(id), std::move(anchor), std::to_string(want) + "/" + std::to_string(want),
        std::to_string(got) + "/" + std::to_string(want));
  }

  std::vector<CheckRecord> take() {
    std::sort(records_.begin(), records_.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return std::move(records_);
  }

  const CheckOptions& opts() const { return opts_; }

 private:
  CheckOptions opts_;
  std::vector<CheckRecord> records_;
};

// ---- lattice scope --------------------------------------------------------

void lattice_checks(Registry& reg) {
  const Lattice main = make_main_lattice();
  reg.add("lattice-rank", "lambdadef", "23", std::to_string(main.rank()));
  reg.add("lattice-disc", "lambdadef", "2", disc(main).str());
  reg.add("lattice-signature", "lambdadef", "(3,20)", sig_text(signature(main)));
  reg.add("lattice-snf", "lambdadef", "1^22 2", factors_text(lattice_invariant_factors(main)));

  bool even = true;
  for (int i = 0; i < main.rank(); ++i)
    if (num(main.gram.at(i, i)) % 2 != 0) even = false;
  reg.add("lattice-even", "lambdadef", "even", even ? "even" : "odd");

  const Lattice u = make_U();
  const Lattice e8 = make_E8_neg();
  reg.add("lattice-u-det", "lambdadef", "-1", disc(u).str());
  reg.add("lattice-e8-det", "lambdadef", "1", disc(e8).str());
  reg.add("lattice-e8-signature", "lambdadef", "(0,8)", sig_text(signature(e8)));

  Vec last(main.rank(), Rational(0));
  last[22] = 1;
  reg.add("lattice-div-generator", "tuttiequiv", "2", divisibility(main, last).str());
  Vec e0(main.rank(), Rational(0));
  e0[0] = 1;
  reg.add("lattice-div-isotropic", "tuttiequiv", "1", divisibility(main, e0).str());
  Vec h = e0;
  h[1] = 1;
  reg.add("lattice-orbit-h", "tuttiequiv", "norm 2 div 1 primitive",
          [&] {
            OrbitInvariants oi = orbit_invariants(main, h);
            return "norm " + oi.norm.str() + " div " + oi.div.str() +
                   (oi.primitive ? " primitive" : " imprimitive");
          }());

  Vec beta = find_isotropic_partner(main, e0, reg.opts().box);
  reg.add("lattice-partner", "betachoice", "(0,1)",
          "(" + norm_of(main, beta).str() + "," + pairing(main, e0, beta).str() + ")");

  const Lattice uu = direct_sum(make_U(), make_U());
  reg.add("lattice-square2-count", "tuttiequiv", "20",
          std::to_string(enumerate_square_vectors(uu, Int(2), 1).size()));

  auto comp = orthogonal_complement(main, h);
  Mat cg = restricted_gram(main, comp);
  Rational d = det(cg);
  reg.add("lattice-hperp-disc", "ventiquattro", "4", (d < 0 ? -d : d).str());
}

// ---- sym2 scope -----------------------------------------------------------

void sym2_checks(Registry& reg) {
  const Lattice main = make_main_lattice();
  const Sym2Space s = make_sym2(main.gram);
  const Vec qd = q_dual(s);

  int hits = 0;
  for (size_t k = 0; k < s.monomials.size(); ++k) {
    auto [i, j] = s.monomials[k];
    Vec ei(s.n, Rational(0)), ej(s.n, Rational(0));
    ei[i] = 1;
    ej[j] = 1;
    Vec mono = sym2_product(s, ei, ej);
    if (sym2_pair(s, qd, mono) == Rational(25) * s.gram_base.at(i, j)) ++hits;
  }
  reg.add_count("qdualint-basis", "qdualint", 276, hits);
  reg.add("qdualint-575", "qdualqdual", "575", sym2_pair(s, qd, qd).str());

  // (n+2)(a,b) identity across random small nondegenerate Grams.
  Rng rng(reg.opts().seed);
  int generic_hits = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    int n = 2 + static_cast<int>(rng.range(0, 4));
    Mat g(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g.at(i, j) = g.at(j, i) = Rational(rng.range(-4, 4));
    } while (det(g) == 0);
    Sym2Space sp = make_sym2(g);
    Vec q = q_dual(sp);
    Vec a(n, Rational(0)), b(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      a[i] = Rational(rng.range(-3, 3));
      b[i] = Rational(rng.range(-3, 3));
    }
    if (sym2_pair(sp, q, sym2_product(sp, a, b)) ==
        Rational(n + 2) * sym2_pair_base(sp, a, b))
      ++generic_hits;
  }
  reg.add_count("sym2-pairing-generic", "donpol", trials, generic_hits);

  Vec h(s.n, Rational(0));
  h[0] = h[1] = 1;
  QdecompResult qr = qdecomp_check(s, h);
  reg.add("sym2-qdecomp-residual", "qdecomp", "0", qr.residual_zero ? "0" : "nonzero");

  H4Decomposition dec = decompose_h4(s, h);
  reg.add("sym2-dims", "symmeq", "(2, 22, 252)",
          "(" + std::to_string(dec.dim_plane) + ", " + std::to_string(dec.dim_h_hperp) +
              ", " + std::to_string(dec.dim_w) + ")");
  reg.add("sym2-blocks-orthogonal", "symmeq", "orthogonal",
          dec.blocks_orthogonal ? "orthogonal" : "not orthogonal");
  reg.add("sym2-cucs-orth", "cucs", "0", sym2_pair(s, dec.cucs, qd).str());
  reg.add("sym2-spqr-span", "spqr", "contained",
          dec.spqr_in_sym2_hperp ? "contained" : "outside");
  reg.add("sym2-projectors", "symmeq", "valid",
          dec.projectors_valid ? "valid" : "invalid");

  OmegaLattice om = omega_lattice(s, h);
  reg.add("sym2-omega-gram", "smalldisc", "[[12, 20], [20, 92]]",
          "[[" + om.gram.at(0, 0).str() + ", " + om.gram.at(0, 1).str() + "], [" +
              om.gram.at(1, 0).str() + ", " + om.gram.at(1, 1).str() + "]]");
  reg.add("smalldisc-704", "smalldisc", "704", om.disc.str());
  reg.add("sym2-index-bound", "smallindex", "8", om.index_bound.str());

  SquareClassObstruction ob = square_class_obstruction(main, h);
  reg.add("sym2-sqclass-transc", "disctreper", "3", ob.class_scaled_form.str());
  reg.add("sym2-sqclass-hmult", "ventiquattro", "1", ob.class_h_multiples.str());
  reg.add("sym2-sqclass-hperp-disc", "ventiquattro", "4", ob.disc_hperp.str());
  reg.add("sym2-sqclass-distinct", "disctreper", "distinct",
          ob.same_class ? "same" : "distinct");

  // Serialization of a Sym^2 element as sparse triples, on a small lattice.
  const Lattice small = parse_lattice_expr("U + <-2>");
  const Sym2Space ssmall = make_sym2(small.gram);
  reg.add("sym2-triples-qdual", "qdualint", "(0,1,2) (2,2,-1/2)",
          sym2_triples_text(ssmall, q_dual(ssmall)));
}

// ---- charclass scope --------------------------------------------------------

void charclass_checks(Registry& reg) {
  const Lattice main = make_main_lattice();
  const Sym2Space s = make_sym2(main.gram);
  Vec h(s.n, Rational(0));
  h[0] = h[1] = 1;

  RRProfile rr = solve_c2(s, h);
  reg.add("cc-c2-square", "c2quadro", "828", rr.c2_square.str());
  reg.add("cc-240-consistency", "toddofx", "720",
          rr.consistency_240 ? (Rational(240) * rr.chi_structure).str() : "inconsistent");
  reg.add("cc-c2-coefficient", "c2formula", "6/5", rr.c2_coefficient.str());
  reg.add("cc-c2-dot-h2", "c2formula", "60", rr.c2_dot_h2.str());

  ChiPolynomial chi = chi_of_nh(s, h);
  reg.add("cc-chi-poly", "eulchar", "(1/2, 5/2, 3)",
          "(" + chi.n4_coeff.str() + ", " + chi.n2_coeff.str() + ", " + chi.n0_coeff.str() +
              ")");
  reg.add("cc-chi-0", "eulchar", "3", chi.eval(0).str());
  reg.add("cc-chi-1", "eulchar", "6", chi.eval(1).str());
  reg.add("cc-chi-2", "eulchar", "21", chi.eval(2).str());

  FixedSurfaceInvariants fs = fixed_surface(s, h);
  reg.add("cc-chi-y", "cardiy", "258", std::to_string(fs.chi_quotient));
  reg.add("cc-b4-y", "cardiy", "254", std::to_string(fs.b4_quotient));
  reg.add("cc-chi-f-euler", "cardif", "192", fs.chi_f_euler.str());
  reg.add("cc-chi-f-square", "cardif", "192", fs.chi_f_square.str());
  reg.add("cc-fifteen-square", "belnum", "1728", fs.fifteen_square.str());
  reg.add("cc-h2-dot-clf", "cherndieffe", "40", fs.h2_dot_clf.str());
  reg.add("cc-c1-squared", "cherndieffe", "360", fs.c1_squared.str());

  reg.add("cc-case-table", "varicasi", case_table_text(golden_case_table()),
          case_table_text(enumerate_cases()));
  int mutations_changing = 0;
  const auto base = enumerate_cases();
  for (int which = 0; which < 6; ++which) {
    CaseConstraints c;
    switch (which) {
      case 0: c.dim_at_least_3 = false; break;
      case 1: c.min_degree_3fold = false; break;
      case 2: c.max_degree_3fold = false; break;
      case 3: c.hypersurface_min_degree = false; break;
      case 4: c.product_bound = false; break;
      case 5: c.adjunction_low_degf = false; break;
    }
    if (!(enumerate_cases(c) == base)) ++mutations_changing;
  }
  reg.add_count("cc-case-mutations", "productbound", 6, mutations_changing);

  auto feas = intprop_feasible_set();
  std::string feas_text = "{";
  for (size_t i = 0; i < feas.size(); ++i) {
    if (i) feas_text += ", ";
    feas_text += "(" + feas[i].first.str() + ", " + feas[i].second.str() + ")";
  }
  feas_text += "}";
  reg.add("cc-intprop", "poscond", "{(1/2, 0)}", feas_text);

  CycleBalance cb = cubic_case_cycle_arithmetic(s, h);
  reg.add("cc-cycle-m", "classesigma", "1", cb.m.str());
  reg.add("cc-cycle-m-unique", "classesigma", "unique", cb.unique_m ? "unique" : "ambiguous");
  reg.add("cc-cycle-integral", "classesigma", "2", cb.integral_h.str());
  reg.add("cc-cycle-balance", "classesigma", "balanced",
          cb.balance_ok ? "balanced" : "unbalanced");
  reg.add("cc-cycle-contradiction", "classesigma", "4 > 3",
          cb.infeasible ? cb.contradiction_lhs.str() + " > " + cb.contradiction_rhs.str()
                        : "feasible");
}

// ---- cubic scope ------------------------------------------------------------

MultiPoly vmono(int n, int i) { return MultiPoly::variable(n, i); }

void cubic_checks(Registry& reg) {
  const std::uint64_t seed = reg.opts().seed;

  // Adapted split of the textbook node.
  {
    MultiPoly cubic = vmono(6, 0) * vmono(6, 1) * vmono(6, 5) + vmono(6, 2).pow(3);
    CubicWithNode c = adapt_to_node(
        cubic, make_proj_point({Rational(0), Rational(0), Rational(0), Rational(0),
                                Rational(0), Rational(1)}),
        seed);
    reg.add("cubic-adapt-f", "preliminari", MultiPoly::parse("X0*X1", 5).to_string(),
            c.f.to_string());
    reg.add("cubic-adapt-g", "preliminari", MultiPoly::parse("X2^3", 5).to_string(),
            c.g.to_string());
  }

  // psi section lands on the cubic: symbolic, seeded.
  {
    Rng rng(seed);
    int good = 0;
    const int trials = 5;
    for (int t = 0; t < trials; ++t) {
      MultiPoly f(5), g(5);
      for (const auto& m : monomials_of_degree(5, 2))
        if (rng.range(0, 2) != 0) f.add_term(m, Rational(rng.range(-4, 4)));
      for (const auto& m : monomials_of_degree(5, 3))
        if (rng.range(0, 2) != 0) g.add_term(m, Rational(rng.range(-4, 4)));
      if (f.is_zero()) f = vmono(5, 0) * vmono(5, 1);
      if (g.is_zero()) g = vmono(5, 2).pow(3);
      auto lift6 = [](const MultiPoly& p) {
        MultiPoly out(6);
        for (const auto& [m, c] : p.terms()) {
          Monomial e = m;
          e.push_back(0);
          out.add_term(e, c);
        }
        return out;
      };
      MultiPoly cubic = lift6(f) * vmono(6, 5) + lift6(g);
      std::vector<MultiPoly> images;
      for (int i = 0; i < 5; ++i) images.push_back(lift6(f * vmono(5, i)));
      images.push_back(lift6(g).scaled(Rational(-1)));
      if (cubic.substitute(images).is_zero()) ++good;
    }
    reg.add_count("cubic-psi-symbolic", "preliminari", trials, good);
  }

  // Singularity transfer: the three tangent-space dimensions.
  {
    MultiPoly f1 = vmono(5, 0) * vmono(5, 1) - vmono(5, 2) * vmono(5, 3);
    MultiPoly g1 = vmono(5, 0).pow(2) * vmono(5, 4);
    auto lift6 = [](const MultiPoly& p) {
      MultiPoly out(6);
      for (const auto& [m, c] : p.terms()) {
        Monomial e = m;
        e.push_back(0);
        out.add_term(e, c);
      }
      return out;
    };
    CubicWithNode ca = adapt_to_node(
        lift6(f1) * vmono(6, 5) + lift6(g1),
        make_proj_point({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                         Rational(1)}),
        seed);
    SingReport r1 = sing_correspondence(
        ca, make_proj_point({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1),
                             Rational(1)}));
    MultiPoly f2 = vmono(5, 0) * vmono(5, 3) - vmono(5, 1) * vmono(5, 2);
    MultiPoly g2 = (vmono(5, 0) * vmono(5, 3).pow(2)).scaled(Rational(-1));
    CubicWithNode cb = adapt_to_node(
        lift6(f2) * vmono(6, 5) + lift6(g2),
        make_proj_point({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                         Rational(1)}),
        seed);
    SingReport r2 = sing_correspondence(
        cb, make_proj_point({Rational(0), Rational(0), Rational(0), Rational(1), Rational(0),
                             Rational(1)}));
    SingReport r3 = sing_correspondence(
        cb, make_proj_point({Rational(0), Rational(0), Rational(1), Rational(1), Rational(1),
                             Rational(1)}));
    reg.add("cubic-sing-theta-dims", "singsing", "(4, 3, 2)",
            "(" + std::to_string(r1.theta_dim) + ", " + std::to_string(r2.theta_dim) + ", " +
                std::to_string(r3.theta_dim) + ")");
    reg.add("cubic-sing-fsmooth", "singsing", "(no, yes, yes)",
            std::string("(") + (r1.f_smooth_at_s ? "yes" : "no") + ", " +
                (r2.f_smooth_at_s ? "yes" : "no") + ", " + (r3.f_smooth_at_s ? "yes" : "no") +
                ")");
  }

  // Two-node discriminant identities over seeded random cubics.
  {
    Rng rng(seed);
    const int trials = 5;
    int det_ok = 0, grad_ok = 0, rebuild_ok = 0;
    for (int t = 0; t < trials; ++t) {
      auto rand_form = [&](int deg) {
        MultiPoly p(4);
        for (const auto& m : monomials_of_degree(4, deg))
          if (rng.range(0, 2) != 0) p.add_term(m, Rational(rng.range(-4, 4)));
        if (p.is_zero()) p.add_term(monomials_of_degree(4, deg).front(), Rational(1));
        return p;
      };
      auto lift6 = [](const MultiPoly& p) {
        MultiPoly out(6);
        for (const auto& [m, c] : p.terms()) {
          Monomial e = m;
          e.push_back(0);
          e.push_back(0);
          out.add_term(e, c);
        }
        return out;
      };
      MultiPoly cubic = lift6(rand_form(3)) + lift6(rand_form(2)) * vmono(6, 4) +
                        lift6(rand_form(2)) * vmono(6, 5) +
                        lift6(rand_form(1)) * vmono(6, 4) * vmono(6, 5);
      TwoNodeData td = two_node_discriminant(cubic, seed + t);
      if (td.det_identity) ++det_ok;
      if (td.gradient_identity) ++grad_ok;
      if (td.reconstructs) ++rebuild_ok;
    }
    reg.add_count("cubic-twonode-det", "determatrix", trials, det_ok);
    reg.add_count("cubic-twonode-gradient", "partialmod", trials, grad_ok);
    reg.add_count("cubic-twonode-reconstruct", "puntifond", trials, rebuild_ok);
  }

  // Branch divisor of the degenerate conic fibration.
  reg.add("cubic-branch-example", "eccoequa",
          MultiPoly::parse("-4*X0^2*X1*X2", 3).to_string(),
          branch_divisor(vmono(3, 0), MultiPoly(3), vmono(3, 0) * vmono(3, 1) * vmono(3, 2))
              .to_string());

  // Chord varieties.
  reg.add("cubic-secant-degrees", "razquattro", "(3, 6, 5)",
          "(" + chord_secant_degree(4, 0).str() + ", " + chord_secant_degree(5, 0).str() +
              ", " + chord_secant_degree(5, 1).str() + ")");
  {
    MultiPoly hank = chord_rnc4_cubic();
    reg.add("cubic-hankel-frozen", "razquattro",
            MultiPoly::parse("X0*X2*X4 - X0*X3^2 - X1^2*X4 + 2*X1*X2*X3 - X2^3", 5).to_string(),
            hank.to_string());
    bool dv = compose_curve(hank, quartic_rnc()).is_zero();
    for (int i = 0; i < 5 && dv; ++i)
      if (!compose_curve(hank.partial(i), quartic_rnc()).is_zero()) dv = false;
    reg.add("cubic-hankel-double-vanish", "razquattro", "0", dv ? "0" : "nonzero");
    std::vector<MultiPoly> chord_images;
    for (int i = 0; i < 5; ++i)
      chord_images.push_back(vmono(4, 0) * vmono(4, 2).pow(i) +
                             vmono(4, 1) * vmono(4, 3).pow(i));
    reg.add("cubic-hankel-chords", "razquattro", "0",
            hank.substitute(chord_images).is_zero() ? "0" : "nonzero");
  }

  // Double-point criterion on the canonical models.
  {
    MultiPoly x = vmono(3, 0), y = vmono(3, 1), z = vmono(3, 2);
    ProjPoint origin = make_proj_point({Rational(0), Rational(0), Rational(1)});
    auto verdict = [&](const MultiPoly& curve) {
      return du_val_plane_criterion(curve, origin) ? "accepted" : "rejected";
    };
    reg.add("cubic-duval-node", "duvalse", "accepted",
            verdict(x * y * z + x.pow(3) + y.pow(3)));
    reg.add("cubic-duval-cusp", "duvalse", "accepted", verdict(y * y * z - x.pow(3)));
    reg.add("cubic-duval-x2y", "duvalse", "accepted",
            verdict(x * x * y * z + x.pow(4) + y.pow(4)));
    reg.add("cubic-duval-x3", "duvalse", "rejected", verdict(x.pow(3) * z + y.pow(4)));
    // Boundary coefficients: tangent cone 2y(x^2 - 2xy - 2y^2), three distinct
    // factors, multiplicity three: accepted.
    MultiPoly boundary = (x * x * y * z).scaled(Rational(2)) -
                         (x * y * y * z).scaled(Rational(4)) -
                         (y.pow(3) * z).scaled(Rational(4)) + x.pow(4);
    reg.add("cubic-duval-boundary", "equaloc", "accepted", verdict(boundary));
  }

  // Linear system along the quintic rational normal curve.
  {
    const auto curve = quintic_rnc();
    reg.add("cubic-linsys-dim", "eccecubica", "4",
            std::to_string(linear_conditions_dim(3, 6, curve, true)));
    const int sharp = 3 * 5;
    const int k = reg.opts().truncation >= 0 ? reg.opts().truncation : sharp + 4;
    reg.add("cubic-linsys-truncated", "eccecubica", "4",
            std::to_string(linear_conditions_dim(3, 6, curve, true, k)));
  }

  // Plane-swept cubics of nets.
  {
    auto b = [](long long c0, long long c1, long long c2, long long c3) {
      return make_binary_form({Rational(c0), Rational(c1), Rational(c2), Rational(c3)}, 3);
    };
    NetOnQuinticRNC generic = make_net({b(0, 1, 0, 0), b(0, 0, 1, 0), b(1, 0, 0, 1)});
    NetOnQuinticRNC based = make_net({b(1, 0, 0, 0), b(0, 1, 0, 0), b(0, 0, 1, 0)});
    YgFit fit = y_g_fit(generic, seed);
    YgFit refit = y_g_fit(generic, seed + 98);
    YgFit cone = y_g_fit(based, seed);
    reg.add("cubic-ygfit-unique", "birigata", "1", std::to_string(fit.kernel_dim));
    reg.add("cubic-ygfit-double-vanish", "gidef", "0",
            fit.double_vanish_on_curve && fit.in_double_kernel ? "0" : "nonzero");
    reg.add("cubic-ygfit-hash-stable", "gidef", fit.content_hash, refit.content_hash);
    reg.add("cubic-ygfit-cone-dim", "gidef", "1", std::to_string(cone.cone_space_dim));
    reg.add("cubic-ygfit-cone-vertex", "gidef", "(0,0,0,0,0,1)",
            [&] {
              if (cone.cone_vertex.empty()) return std::string("none");
              auto p = make_proj_point(cone.cone_vertex);
              std::string out = "(";
              for (size_t i = 0; i < p.x.size(); ++i) {
                if (i) out += ',';
                out += p.x[i].str();
              }
              return out + ")";
            }());
    reg.add("cubic-ygfit-distinct", "eccecubica", "distinct",
            fit.content_hash != cone.content_hash ? "distinct" : "equal");
  }

  // The worked two-quadric example.
  {
    TantipianiReport t = tantipiani_example();
    reg.add("cubic-tantipiani-ranks", "tantipiani", "(4, 5)",
            "(" + std::to_string(t.rank_f) + ", " + std::to_string(t.rank_g) + ")");
    reg.add("cubic-tantipiani-delta", "tantipiani", "degree 7, 3 distinct roots",
            t.delta_nonconstant
                ? "degree " + std::to_string(t.delta.degree()) + ", " +
                      std::to_string(distinct_root_count(t.delta)) + " distinct roots"
                : "constant");
    reg.add("cubic-tantipiani-singular", "tantipiani", "0",
            std::to_string(t.jacobian_rank_at_point));
  }
}

}  // namespace

std::vector<CheckRecord> run_checks(const std::string& scope, const CheckOptions& opts) {
  Registry reg(opts);
  if (scope == "lattice" || scope == "all") lattice_checks(reg);
  if (scope == "sym2" || scope == "all") sym2_checks(reg);
  if (scope == "charclass" || scope == "all") charclass_checks(reg);
  if (scope == "cubic" || scope == "all") cubic_checks(reg);
  if (scope != "lattice" && scope != "sym2" && scope != "charclass" && scope != "cubic" &&
      scope != "all")
    throw PreconditionError("unknown scope: " + scope);
  return reg.take();
}

bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

std::vector<std::string> report_axioms() {
  return {
      "axiom: chi(O) = 3",
      "axiom: c4 = 324 (topological Euler characteristic)",
      "axiom: b3 = 0",
      "axiom: the degree-4 form is the symmetric square of the degree-2 form",
  };
}

}  // namespace hk4
