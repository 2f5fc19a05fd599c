// hk4-verify: command-line harness around the verification registry and the
// cubic-4-fold pipeline.
//
// Exit codes: 0 = success (all checks pass / computation done),
//             1 = check failure or violated mathematical precondition,
//             2 = usage or parse error.
//
// Everything written to stdout is deterministic for fixed inputs and seed;
// timing goes to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hk4/charclass.hpp"
#include "hk4/checks.hpp"
#include "hk4/cubic4fold.hpp"
#include "hk4/lattice.hpp"
#include "hk4/multipoly.hpp"
#include "hk4/polygeom.hpp"
#include "hk4/rational.hpp"
#include "hk4/smith.hpp"
#include "hk4/unipoly.hpp"

namespace {

using json = nlohmann::json;
using namespace hk4;

constexpr const char* kVersion = "hk4-verify 1.0.0";

// ---- small helpers ----------------------------------------------------------

std::string read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;  // comment lines
    text += line;
    text += ' ';
  }
  return text;
}

std::vector<std::string> read_poly_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<Rational> parse_point(const std::string& text, int want) {
  std::vector<Rational> coords;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw ParseError("empty coordinate in point '" + text + "'");
    try {
      coords.emplace_back(item.substr(a, b - a + 1));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + item + "' in point '" + text + "'");
    }
  }
  if (static_cast<int>(coords.size()) != want)
    throw ParseError("point '" + text + "' must have " + std::to_string(want) +
                     " coordinates");
  return coords;
}

std::string point_text(const std::vector<Rational>& x) {
  std::string out = "[";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += x[i].str();
  }
  return out + "]";
}

json point_json(const std::vector<Rational>& x) {
  json a = json::array();
  for (const auto& c : x) a.push_back(c.str());
  return a;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string truncate_value(const std::string& s, size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 3) + "...";
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& scope, const CheckOptions& opts, bool as_json) {
  auto records = run_checks(scope, opts);
  int failed = 0;
  for (const auto& r : records)
    if (!r.pass) ++failed;

  if (as_json) {
    json meta = {{"tool", "hk4-verify"},
                 {"version", "1.0.0"},
                 {"kind", "verification-report"},
                 {"scope", scope},
                 {"seed", opts.seed},
                 {"box", opts.box},
                 {"truncation", opts.truncation},
                 {"axioms", report_axioms()},
                 {"records", records.size()}};
    std::cout << meta.dump() << "\n";
    for (const auto& r : records) {
      json rec = {{"id", r.id},
                  {"anchor", r.anchor},
                  {"expected", r.expected},
                  {"computed", r.computed},
                  {"pass", r.pass}};
      std::cout << rec.dump() << "\n";
    }
    json summary = {{"kind", "summary"},
                    {"total", records.size()},
                    {"passed", records.size() - failed},
                    {"failed", failed}};
    std::cout << summary.dump() << "\n";
    return failed == 0 ? 0 : 1;
  }

  std::cout << kVersion << "\n";
  std::cout << "scope: " << scope << "  seed: " << opts.seed << "  box: " << opts.box
            << "  truncation: "
            << (opts.truncation < 0 ? std::string("sharp")
                                    : std::to_string(opts.truncation))
            << "\n";
  for (const auto& a : report_axioms()) std::cout << a << "\n";
  std::cout << "\n";

  size_t idw = 0, anchw = 0;
  for (const auto& r : records) {
    idw = std::max(idw, r.id.size());
    anchw = std::max(anchw, r.anchor.size());
  }
  for (const auto& r : records) {
    std::string line = r.pass ? "[pass] " : "[FAIL] ";
    line += r.id + std::string(idw - r.id.size() + 2, ' ');
    line += r.anchor + std::string(anchw - r.anchor.size() + 2, ' ');
    if (r.pass) {
      line += truncate_value(r.expected, 56);
    } else {
      line += "expected=<" + r.expected + "> computed=<" + r.computed + ">";
    }
    std::cout << line << "\n";
  }
  std::cout << "\n"
            << records.size() << " checks: " << (records.size() - failed) << " passed, "
            << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

// ---- cubic subcommands --------------------------------------------------------

int run_adapt(const std::string& path, const std::string& point, std::uint64_t seed,
              bool as_json, bool surface_framing) {
  MultiPoly cubic = MultiPoly::parse(read_poly_file(path), 6);
  ProjPoint p = make_proj_point(parse_point(point, 6));
  CubicWithNode c = adapt_to_node(cubic, p, seed);
  if (as_json) {
    json rec = {{"command", surface_framing ? "lines-surface" : "adapt"},
                {"point", point_json(p.x)},
                {"f", c.f.to_string()},
                {"g", c.g.to_string()},
                {"no_common_factor_on_line", c.no_common_factor_on_line}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  if (surface_framing) {
    std::cout << "surface of lines through " << point_text(p.x)
              << ": intersection of a quadric and a cubic in P^4\n";
  } else {
    std::cout << "adapted at node " << point_text(p.x) << "\n";
  }
  std::cout << "F = " << c.f.to_string() << "\n";
  std::cout << "G = " << c.g.to_string() << "\n";
  std::cout << "coprime-on-test-line: " << yesno(c.no_common_factor_on_line) << "\n";
  return 0;
}

int run_two_node(const std::string& path, std::uint64_t seed, bool as_json) {
  MultiPoly cubic = MultiPoly::parse(read_poly_file(path), 6);
  TwoNodeData td = two_node_discriminant(cubic, seed);
  if (as_json) {
    json rec = {{"command", "two-node-quartic"},
                {"p", td.p.to_string()},
                {"bhat", td.bhat.to_string()},
                {"chat", td.chat.to_string()},
                {"dhat", td.dhat.to_string()},
                {"fhat", td.fhat.to_string()},
                {"reconstructs", td.reconstructs},
                {"det_identity", td.det_identity},
                {"gradient_identity", td.gradient_identity},
                {"fibers_in_p", td.fibers_in_p},
                {"no_common_zero_on_line", td.no_common_zero_on_line}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "P = " << td.p.to_string() << "\n";
  std::cout << "Bhat = " << td.bhat.to_string() << "\n";
  std::cout << "Chat = " << td.chat.to_string() << "\n";
  std::cout << "Dhat = " << td.dhat.to_string() << "\n";
  std::cout << "Fhat = " << td.fhat.to_string() << "\n";
  std::cout << "reconstructs: " << yesno(td.reconstructs)
            << "  det-identity: " << yesno(td.det_identity)
            << "  gradient-identity: " << yesno(td.gradient_identity) << "\n";
  std::cout << "fibers-in-quartic: " << yesno(td.fibers_in_p)
            << "  no-common-zero-on-line: " << yesno(td.no_common_zero_on_line) << "\n";
  return 0;
}

int run_duval(const std::string& path, const std::string& point, bool as_json) {
  MultiPoly curve = MultiPoly::parse(read_poly_file(path), 3);
  ProjPoint p = make_proj_point(parse_point(point, 3));
  bool accepted = du_val_plane_criterion(curve, p);
  int mult = eval_at(curve, p) == 0 ? multiplicity_at(curve, p) : 0;
  if (as_json) {
    json rec = {{"command", "duval-check"},
                {"point", point_json(p.x)},
                {"on_curve", eval_at(curve, p) == 0},
                {"multiplicity", mult},
                {"accepted", accepted}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "point: " << point_text(p.x) << "\n";
  std::cout << "on-curve: " << yesno(eval_at(curve, p) == 0) << "  multiplicity: " << mult
            << "\n";
  std::cout << (accepted ? "accepted" : "rejected") << "\n";
  return 0;
}

BinaryForm binary_from_poly(const MultiPoly& p) {
  int deg = 0;
  if (p.is_zero() || !p.is_homogeneous(&deg) || deg != 3)
    throw ParseError("each net entry must be a nonzero homogeneous cubic in X0, X1");
  std::vector<Rational> c(4);
  for (int i = 0; i <= 3; ++i) c[i] = p.coeff({3 - i, i});
  return make_binary_form(c, 3);
}

int run_yg_fit(const std::string& path, std::uint64_t seed, bool as_json) {
  auto lines = read_poly_lines(path);
  if (lines.size() != 3)
    throw ParseError("net file must contain exactly 3 polynomial lines, got " +
                     std::to_string(lines.size()));
  std::array<BinaryForm, 3> basis = {binary_from_poly(MultiPoly::parse(lines[0], 2)),
                                     binary_from_poly(MultiPoly::parse(lines[1], 2)),
                                     binary_from_poly(MultiPoly::parse(lines[2], 2))};
  NetOnQuinticRNC net = make_net(basis);
  YgFit fit = y_g_fit(net, seed);
  if (as_json) {
    json rec = {{"command", "yg-fit"},
                {"cubic", fit.cubic.to_string()},
                {"kernel_dim", fit.kernel_dim},
                {"sample_count", fit.sample_count},
                {"plane_count", fit.plane_count},
                {"double_vanish_on_curve", fit.double_vanish_on_curve},
                {"in_double_kernel", fit.in_double_kernel},
                {"cone_space_dim", fit.cone_space_dim},
                {"cone_vertex",
                 fit.cone_vertex.empty() ? json(nullptr) : point_json(fit.cone_vertex)},
                {"content_hash", fit.content_hash}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "planes: " << fit.plane_count << "  samples: " << fit.sample_count
            << "  kernel-dim: " << fit.kernel_dim << "\n";
  std::cout << "cubic = " << fit.cubic.to_string() << "\n";
  std::cout << "double-vanish-on-curve: " << yesno(fit.double_vanish_on_curve)
            << "  in-double-kernel: " << yesno(fit.in_double_kernel) << "\n";
  std::cout << "cone-space-dim: " << fit.cone_space_dim << "\n";
  if (!fit.cone_vertex.empty())
    std::cout << "cone-vertex: " << point_text(make_proj_point(fit.cone_vertex).x) << "\n";
  std::cout << "content-hash: " << fit.content_hash << "\n";
  return 0;
}

// ---- lattice info -------------------------------------------------------------

int run_lattice_info(const std::string& expr, bool as_json) {
  Lattice l = parse_lattice_expr(expr);
  Inertia sig = signature(l);
  auto factors = lattice_invariant_factors(l);
  std::string factors_str;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) factors_str += " ";
    factors_str += factors[i].str();
  }
  if (as_json) {
    json fs = json::array();
    for (const auto& f : factors) fs.push_back(f.str());
    json rec = {{"command", "lattice"},
                {"expr", l.expr},
                {"rank", l.rank()},
                {"signature", {sig.pos, sig.neg}},
                {"disc", disc(l).str()},
                {"invariant_factors", fs}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "lattice: " << l.expr << "\n";
  std::cout << "rank: " << l.rank() << "\n";
  std::cout << "signature: (" << sig.pos << "," << sig.neg << ")\n";
  std::cout << "disc: " << disc(l).str() << "\n";
  std::cout << "invariant-factors: " << factors_str << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification engine for the rank-23 lattice model "
               "and singular cubic 4-folds"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 1;
  int box = 3;
  int truncation = -1;
  app.add_flag("--json", as_json, "emit machine-readable records, one JSON object per line");
  app.add_option("--seed", seed, "seed for randomized identity checks and samplers");
  app.add_option("--box", box, "search radius for lattice vector searches");
  app.add_option("--truncation", truncation,
                 "truncation degree for curve-constrained linear systems (-1 = sharp)");

  // verify <scope>
  auto* verify = app.add_subcommand("verify", "run the verification registry");
  verify->fallthrough();
  std::string scope;
  verify->add_option("scope", scope, "all | lattice | sym2 | charclass | cubic")
      ->required();

  // cubic <operation> FILE
  auto* cubic = app.add_subcommand("cubic", "operations on cubic 4-folds");
  cubic->fallthrough();
  cubic->require_subcommand(1);
  std::string in_path, point6 = "0,0,0,0,0,1", point3 = "0,0,1";

  auto* adapt = cubic->add_subcommand("adapt", "move a double point to [0,...,0,1] and split F, G");
  adapt->fallthrough();
  adapt->add_option("file", in_path, "cubic in 6 variables (polynomial text format)")
      ->required();
  adapt->add_option("--point", point6, "the double point, 6 comma-separated rationals");

  auto* lines = cubic->add_subcommand(
      "lines-surface", "equations of the surface of lines through a double point");
  lines->fallthrough();
  lines->add_option("file", in_path, "cubic in 6 variables (polynomial text format)")
      ->required();
  lines->add_option("--point", point6, "the double point, 6 comma-separated rationals");

  auto* twonode = cubic->add_subcommand(
      "two-node-quartic",
      "discriminant quartic of a cubic with double points at [0,0,0,0,1,0] and [0,0,0,0,0,1]");
  twonode->fallthrough();
  twonode->add_option("file", in_path, "cubic in 6 variables (polynomial text format)")
      ->required();

  auto* duval = cubic->add_subcommand("duval-check",
                                      "double-point acceptance test for a plane curve");
  duval->fallthrough();
  duval->add_option("file", in_path, "plane curve in 3 variables (polynomial text format)")
      ->required();
  duval->add_option("--point", point3, "the point to test, 3 comma-separated rationals");

  auto* ygfit = cubic->add_subcommand(
      "yg-fit", "interpolate the plane-swept cubic of a net of binary cubics");
  ygfit->fallthrough();
  ygfit->add_option("file", in_path,
                    "net file: 3 lines, each a binary cubic in X0 (= s) and X1 (= t)")
      ->required();

  // lattice EXPR
  auto* lat = app.add_subcommand("lattice", "invariants of a lattice expression");
  lat->fallthrough();
  std::string lat_expr;
  lat->add_option("expr", lat_expr, "e.g. \"U + U + U + E8(-1) + E8(-1) + <-2>\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors exit 2; --help/--version exit 0
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*verify) {
      if (scope != "all" && scope != "lattice" && scope != "sym2" && scope != "charclass" &&
          scope != "cubic") {
        std::cerr << "hk4-verify: unknown scope '" << scope
                  << "' (expected all | lattice | sym2 | charclass | cubic)\n";
        return 2;
      }
      CheckOptions opts;
      opts.seed = seed;
      opts.box = box;
      opts.truncation = truncation;
      rc = run_verify(scope, opts, as_json);
    } else if (*lat) {
      rc = run_lattice_info(lat_expr, as_json);
    } else if (*adapt) {
      rc = run_adapt(in_path, point6, seed, as_json, false);
    } else if (*lines) {
      rc = run_adapt(in_path, point6, seed, as_json, true);
    } else if (*twonode) {
      rc = run_two_node(in_path, seed, as_json);
    } else if (*duval) {
      rc = run_duval(in_path, point3, as_json);
    } else if (*ygfit) {
      rc = run_yg_fit(in_path, seed, as_json);
    }
  } catch (const ParseError& e) {
    std::cerr << "hk4-verify: parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "hk4-verify: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "hk4-verify: " << e.what() << "\n";
    return 1;
  }
  const auto t1 = std::chrono::steady_clock::now();
  std::cerr << "elapsed: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
  return rc;
}
