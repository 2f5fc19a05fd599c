#include "hk4/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace hk4 {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw PreconditionError("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw PreconditionError("MultiPoly::variable: index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(nvars, m, Rational(1));
}

MultiPoly MultiPoly::monomial(int nvars, Monomial m, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw PreconditionError("MultiPoly: exponent vector has wrong length");
  for (int e : m)
    if (e < 0) throw PreconditionError("MultiPoly: negative exponent");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous(int* deg) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int md = std::accumulate(m.begin(), m.end(), 0);
    if (d == -1) d = md;
    if (md != d) return false;
  }
  if (deg) *deg = d;
  return true;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (std::accumulate(m.begin(), m.end(), 0) == d) out.add_term(m, c);
  return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw PreconditionError("MultiPoly::eval: wrong point dimension");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) t *= pow_rat(x[i], m[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::partial(int var) const {
  if (var < 0 || var >= nvars_) throw PreconditionError("partial: variable out of range");
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * Rational(m[var]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw PreconditionError("substitute: wrong image count");
  const int out_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != out_vars) throw PreconditionError("substitute: mixed variable counts");
  MultiPoly acc(out_vars);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw PreconditionError("pow: negative exponent");
  MultiPoly acc = MultiPoly::constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("MultiPoly +: variable count mismatch");
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + b.scaled(Rational(-1));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("MultiPoly *: variable count mismatch");
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

// ---- text format -------------------------------------------------------------

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    os << hk4::to_string(a);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*X" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int nvars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  Rational number() {
    Int n = integer();
    if (consume('/')) {
      Int d = integer();
      if (d == 0) fail("zero denominator");
      return Rational(n, d);
    }
    return Rational(n);
  }

  // factor := number | X<k> [^<e>]
  // term   := factor ( ['*'] factor )*
  void term(MultiPoly& acc, int sign) {
    Rational c(sign);
    Monomial m(nvars, 0);
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      char ch = s[pos];
      if (ch == 'X' || ch == 'x') {
        ++pos;
        Int idx = integer();
        if (idx < 0 || idx >= nvars) fail("variable index out of range");
        int e = 1;
        if (consume('^')) {
          Int ei = integer();
          if (ei > 64) fail("exponent too large");
          e = ei.convert_to<int>();
        }
        m[idx.convert_to<int>()] += e;
        saw_factor = true;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
        saw_factor = true;
      } else if (ch == '*') {
        ++pos;
        continue;
      } else {
        break;
      }
    }
    if (!saw_factor) fail("empty term");
    acc.add_term(m, c);
  }

  MultiPoly poly() {
    MultiPoly acc(nvars);
    skip_ws();
    if (pos >= s.size()) fail("empty input");
    int sign = 1;
    if (consume('-')) sign = -1;
    else consume('+');
    term(acc, sign);
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (consume('+')) sign = 1;
      else if (consume('-')) sign = -1;
      else fail("expected '+' or '-'");
      term(acc, sign);
    }
    return acc;
  }
};

void monomials_rec(int nvars, int var, int remaining, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[var] = e;
    monomials_rec(nvars, var + 1, remaining - e, cur, out);
  }
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int nvars) {
  Parser p{text, 0, nvars};
  return p.poly();
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  if (nvars <= 0 || d < 0) throw PreconditionError("monomials_of_degree: bad arguments");
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  monomials_rec(nvars, 0, d, cur, out);
  return out;
}

}  // namespace hk4
