#include "qk/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

Polynomial Polynomial::constant(int rank, ScalarZ c) {
  Polynomial p(rank);
  p.add_term(Exponents(rank, 0), c);
  return p;
}

Polynomial Polynomial::variable(int rank, int index) {
  Polynomial p(rank);
  Exponents e(rank, 0);
  e[index] = 1;
  p.add_term(e, ScalarZ(1));
  return p;
}

Polynomial Polynomial::affine(const IntVec& linear, const ScalarZ& c) {
  int rank = static_cast<int>(linear.size());
  Polynomial p(rank);
  for (int i = 0; i < rank; ++i) {
    if (linear[i] == 0) continue;
    Exponents e(rank, 0);
    e[i] = 1;
    p.add_term(e, ScalarZ(Rational(linear[i])));
  }
  p.add_term(Exponents(rank, 0), c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const ScalarZ& c) {
  if (static_cast<int>(e.size()) != rank_)
    fail("invalid-argument", "exponent length does not match rank");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(rank_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(rank_);
      for (int i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const ScalarZ& c) const {
  Polynomial out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) fail("invalid-argument", "negative polynomial power");
  Polynomial acc = constant(rank_, ScalarZ(1));
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial out(rank_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_.emplace(e, c);
  return out;
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  return homogeneous_component(total_degree()) == *this;
}

Polynomial Polynomial::translate(const std::vector<ScalarZ>& shift) const {
  // u_i -> u_i + shift_i, expanded by the binomial theorem per variable.
  std::vector<Polynomial> shifted_vars;
  shifted_vars.reserve(rank_);
  for (int i = 0; i < rank_; ++i) {
    Polynomial v = variable(rank_, i);
    v.add_term(Exponents(rank_, 0), shift[i]);
    shifted_vars.push_back(std::move(v));
  }
  Polynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(rank_, c);
    for (int i = 0; i < rank_; ++i)
      if (e[i] > 0) term = term * shifted_vars[i].pow(e[i]);
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::substitute_linear(const RatMat& a) const {
  std::vector<Polynomial> images;
  images.reserve(rank_);
  for (int i = 0; i < rank_; ++i) {
    Polynomial img(rank_);
    for (int j = 0; j < rank_; ++j) {
      if (a[i][j] == 0) continue;
      Exponents e(rank_, 0);
      e[j] = 1;
      img.add_term(e, ScalarZ(a[i][j]));
    }
    images.push_back(std::move(img));
  }
  Polynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(rank_, c);
    for (int i = 0; i < rank_; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out = out + term;
  }
  return out;
}

ScalarZ Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ScalarZ(0) : it->second;
}

Complex Polynomial::eval(const std::vector<Complex>& u, Complex z) const {
  Complex acc = 0;
  for (const auto& [e, c] : terms_) {
    Complex t = c.eval(z);
    for (int i = 0; i < rank_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= u[i];
    acc += t;
  }
  return acc;
}

Complex Polynomial::eval_at_zero_z(const std::vector<Complex>& u) const {
  Complex acc = 0;
  for (const auto& [e, c] : terms_) {
    Complex t = to_double(c.at_zero());
    for (int i = 0; i < rank_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= u[i];
    acc += t;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      os << "*u" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := atom ('^' int)?,
// atom := rational | 'u'<k> | 'z' | '(' expr ')' | '-' factor.
struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int rank;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) {
    fail("invalid-argument",
         "polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip();
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip();
      if (eat('*')) acc = acc * factor();
      else return acc;
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip();
    if (eat('^')) {
      int k = integer();
      if (k < 0) error("negative exponent");
      return base.pow(k);
    }
    return base;
  }

  int integer() {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error("expected integer");
    return std::stoi(text.substr(start, pos - start));
  }

  Polynomial atom() {
    skip();
    if (pos >= text.size()) error("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = expr();
      if (!eat(')')) error("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (c == 'u') {
      ++pos;
      int idx = integer();
      if (idx < 1 || idx > rank) error("variable u" + std::to_string(idx) + " out of range");
      return Polynomial::variable(rank, idx - 1);
    }
    if (c == 'z') {
      ++pos;
      return Polynomial::constant(rank, ScalarZ::z());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
              text[pos] == '/'))
        ++pos;
      return Polynomial::constant(rank, ScalarZ(parse_rational(text.substr(start, pos - start))));
    }
    error(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int rank) {
  Parser p{text, 0, rank};
  Polynomial out = p.expr();
  p.skip();
  if (p.pos != text.size()) p.error("trailing input");
  return out;
}

}  // namespace qk
