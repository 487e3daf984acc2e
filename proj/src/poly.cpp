#include "polyadp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace polyadp {

const char* block_prefix(Block b) {
  switch (b) {
    case Block::state: return "x";
    case Block::input: return "u";
    case Block::noise: return "w";
    case Block::aux: return "y";
  }
  return "?";
}

int BlockDims::offset(Block b) const {
  int off = 0;
  for (int i = 0; i < static_cast<int>(b); ++i) off += dim[i];
  return off;
}

bool BlockDims::contains(const BlockDims& other) const {
  for (int i = 0; i < kNumBlocks; ++i)
    if (other.dim[i] > dim[i]) return false;
  return true;
}

BlockDims BlockDims::unify(const BlockDims& a, const BlockDims& b) {
  BlockDims r;
  for (int i = 0; i < kNumBlocks; ++i) r.dim[i] = std::max(a.dim[i], b.dim[i]);
  return r;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: higher exponent on an earlier variable sorts first.
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

Point Point::at(std::vector<double> x, std::vector<double> u,
                std::vector<double> w, std::vector<double> y) {
  Point pt;
  pt.values = {std::move(x), std::move(u), std::move(w), std::move(y)};
  return pt;
}

Polynomial Polynomial::constant(double c, BlockDims dims) {
  Polynomial p(dims);
  p.add_term(Exponents(dims.total(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarRef v, BlockDims dims) {
  if (v.index < 0 || v.index >= dims[v.block])
    throw DimensionError("variable index out of range for block");
  Exponents e(dims.total(), 0);
  e[dims.offset(v.block) + v.index] = 1;
  return monomial(dims, std::move(e), 1.0);
}

Polynomial Polynomial::monomial(BlockDims dims, Exponents exps, double coeff) {
  if (static_cast<int>(exps.size()) != dims.total())
    throw DimensionError("exponent vector size does not match dims");
  Polynomial p(dims);
  p.add_term(exps, coeff);
  return p;
}

void Polynomial::add_term(const Exponents& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);  // grlex: last term is maximal
}

int Polynomial::degree_in(Block b) const {
  const int off = dims_.offset(b), n = dims_[b];
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += e[off + i];
    d = std::max(d, s);
  }
  return d;
}

double Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::constant_term() const {
  return coefficient(Exponents(dims_.total(), 0));
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::promoted(const BlockDims& target) const {
  if (!target.contains(dims_))
    throw DimensionError("cannot promote polynomial to smaller dims");
  if (target == dims_) return *this;
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponents ne(target.total(), 0);
    for (Block b : kAllBlocks) {
      const int so = dims_.offset(b), to = target.offset(b);
      for (int i = 0; i < dims_[b]; ++i) ne[to + i] = e[so + i];
    }
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dims_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  const BlockDims d = BlockDims::unify(dims_, rhs.dims_);
  Polynomial a = promoted(d);
  const Polynomial b = rhs.promoted(d);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  return a;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  *this = *this + rhs;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  *this = *this - rhs;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  const BlockDims d = BlockDims::unify(dims_, rhs.dims_);
  const Polynomial a = promoted(d), b = rhs.promoted(d);
  Polynomial r(d);
  const int nv = d.total();
  Exponents e(nv, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < nv; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(double s) const {
  Polynomial r(dims_);
  if (s == 0.0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  const BlockDims d = BlockDims::unify(dims_, rhs.dims_);
  const Polynomial a = promoted(d), b = rhs.promoted(d);
  return a.terms_ == b.terms_;
}

double Polynomial::evaluate(const Point& pt) const {
  for (Block b : kAllBlocks) {
    if (degree_in(b) > 0 &&
        static_cast<int>(pt.of(b).size()) < dims_[b])
      throw DimensionError(std::string("missing assignment for block ") +
                           block_prefix(b));
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (Block b : kAllBlocks) {
      const int off = dims_.offset(b);
      const auto& v = pt.of(b);
      for (int i = 0; i < dims_[b]; ++i) {
        int k = e[off + i];
        if (k == 0) continue;
        double base = v[i], acc = 1.0;
        while (k > 0) {  // exponentiation by squaring
          if (k & 1) acc *= base;
          base *= base;
          k >>= 1;
        }
        t *= acc;
      }
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(
    const std::vector<std::pair<VarRef, Polynomial>>& bindings) const {
  BlockDims target = dims_;
  std::map<int, const Polynomial*> bound;  // flat var index -> binding
  for (const auto& [v, q] : bindings) {
    if (v.index < 0 || v.index >= dims_[v.block])
      throw DimensionError("binding for a variable outside the polynomial's blocks");
    bound[dims_.offset(v.block) + v.index] = &q;
    target = BlockDims::unify(target, q.dims());
  }
  // Precompute the powers of each binding up to the largest exponent used.
  std::map<int, int> max_exp;
  for (const auto& [e, c] : terms_)
    for (const auto& [flat, q] : bound)
      max_exp[flat] = std::max(max_exp[flat], static_cast<int>(e[flat]));
  std::map<int, std::vector<Polynomial>> powers;  // powers[flat][k] = q^k
  for (const auto& [flat, q] : bound) {
    std::vector<Polynomial> pw;
    pw.push_back(Polynomial::constant(1.0, target));
    for (int k = 1; k <= max_exp[flat]; ++k)
      pw.push_back((pw.back() * *q).promoted(target));
    powers.emplace(flat, std::move(pw));
  }

  Polynomial result(target);
  for (const auto& [e, c] : terms_) {
    // Split the term into the unbound monomial part and bound factors.
    Exponents rest(target.total(), 0);
    for (Block b : kAllBlocks) {
      const int so = dims_.offset(b), to = target.offset(b);
      for (int i = 0; i < dims_[b]; ++i)
        if (!bound.count(so + i)) rest[to + i] = e[so + i];
    }
    Polynomial term = Polynomial::monomial(target, rest, c);
    for (const auto& [flat, q] : bound) {
      const int k = e[flat];
      if (k > 0) term = term * powers.at(flat)[k];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::bind_block(Block b,
                                  const std::vector<double>& values) const {
  if (static_cast<int>(values.size()) < dims_[b])
    throw DimensionError("bind_block: not enough values for block");
  const int off = dims_.offset(b), n = dims_[b];
  Polynomial r(dims_);
  for (const auto& [e, c] : terms_) {
    double coeff = c;
    Exponents ne = e;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < e[off + i]; ++k) coeff *= values[i];
      ne[off + i] = 0;
    }
    r.add_term(ne, coeff);
  }
  return r;
}

Polynomial Polynomial::differentiate(VarRef v) const {
  if (v.index < 0 || v.index >= dims_[v.block])
    throw DimensionError("differentiate: variable outside the polynomial's blocks");
  const int flat = dims_.offset(v.block) + v.index;
  Polynomial r(dims_);
  for (const auto& [e, c] : terms_) {
    const int k = e[flat];
    if (k == 0) continue;
    Exponents ne = e;
    ne[flat] = static_cast<std::uint8_t>(k - 1);
    r.add_term(ne, c * k);
  }
  return r;
}

std::vector<std::vector<Polynomial>> Polynomial::hessian(Block b) const {
  const int n = dims_[b];
  std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n));
  std::vector<Polynomial> grad(n);
  for (int i = 0; i < n; ++i) grad[i] = differentiate({b, i});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      h[i][j] = grad[i].differentiate({b, j});
      if (j != i) h[j][i] = h[i][j];
    }
  return h;
}

namespace {

std::string format_coeff(double c) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", c);
  return buf;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const double a = std::abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (Block b : kAllBlocks) {
      const int off = dims_.offset(b);
      for (int i = 0; i < dims_[b]; ++i) {
        const int k = e[off + i];
        if (k == 0) continue;
        std::string f = std::string(block_prefix(b)) + std::to_string(i + 1);
        if (k > 1) f += "^" + std::to_string(k);
        factors.push_back(std::move(f));
      }
    }
    if (factors.empty()) {
      out << format_coeff(a);
    } else {
      if (a != 1.0) out << format_coeff(a) << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "*";
        out << factors[i];
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& text, const BlockDims& dims)
      : text_(text), dims_(dims) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == 'x' || c == 'u' || c == 'w') return variable_factor();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      } else {
        pos_ = mark;  // 'e' was not an exponent
      }
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.'))
      fail("malformed number");
    const double v = std::stod(text_.substr(start, pos_ - start));
    return Polynomial::constant(v, dims_);
  }

  Polynomial variable_factor() {
    const std::size_t start = pos_;
    const char prefix = text_[pos_++];
    Block b = prefix == 'x' ? Block::state
              : prefix == 'u' ? Block::input
                              : Block::noise;
    std::size_t idx_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == idx_start) {
      pos_ = start;
      fail(std::string("expected variable index after '") + prefix + "'");
    }
    const long idx = std::stol(text_.substr(idx_start, pos_ - idx_start));
    if (idx < 1 || idx > dims_[b]) {
      const std::string name = text_.substr(start, pos_ - start);
      pos_ = start;
      fail("unknown variable " + name);
    }
    Polynomial p = Polynomial::variable({b, static_cast<int>(idx - 1)}, dims_);
    if (accept('^')) return pow_suffix(std::move(p));
    return p;
  }

  Polynomial pow_suffix(Polynomial base) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-')
      fail("negative exponent is not allowed");
    std::size_t d_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == d_start) fail("expected a non-negative integer exponent");
    if (pos_ < text_.size() && text_[pos_] == '.')
      fail("fractional exponent is not allowed");
    const long k = std::stol(text_.substr(d_start, pos_ - d_start));
    Polynomial r = Polynomial::constant(1.0, dims_);
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
  }

  const std::string& text_;
  BlockDims dims_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const BlockDims& dims) {
  return Parser(text, dims).run();
}

// ---------------------------------------------------------------------------
// MonomialBasis
// ---------------------------------------------------------------------------

namespace {

void enumerate_exponents(int nvars, int pos, int remaining, Exponents& cur,
                         std::vector<Exponents>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    cur[pos] = static_cast<std::uint8_t>(k);
    enumerate_exponents(nvars, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(BlockDims dims, int max_degree)
    : dims_(dims), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  const int nv = dims.total();
  Exponents cur(nv, 0);
  enumerate_exponents(nv, 0, max_degree, cur, entries_);
  std::sort(entries_.begin(), entries_.end(), GrlexLess{});
}

Polynomial MonomialBasis::polynomial(std::size_t i) const {
  return Polynomial::monomial(dims_, entries_.at(i), 1.0);
}

std::size_t monomial_count(int n_vars, int degree) {
  // C(n + d, d)
  std::size_t num = 1;
  for (int i = 1; i <= degree; ++i) num = num * (n_vars + i) / i;
  return num;
}

}  // namespace polyadp
