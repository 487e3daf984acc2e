#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyadp {

/// Variable namespaces. Every polynomial lives over (a subset of) the four
/// blocks: state x, input u, process noise w, and an auxiliary block y used
/// for Hessian-form constraints.
enum class Block : int { state = 0, input = 1, noise = 2, aux = 3 };

inline constexpr int kNumBlocks = 4;
inline constexpr std::array<Block, 4> kAllBlocks = {Block::state, Block::input,
                                                    Block::noise, Block::aux};

const char* block_prefix(Block b);  // "x", "u", "w", "y"

/// Per-block variable counts. Defines the flat exponent layout
/// [x_1..x_n, u_1..u_m, w_1..w_p, y_1..y_q].
struct BlockDims {
  std::array<int, kNumBlocks> dim{0, 0, 0, 0};

  BlockDims() = default;
  BlockDims(int n, int m, int p, int q = 0) : dim{n, m, p, q} {}

  int operator[](Block b) const { return dim[static_cast<int>(b)]; }
  int& operator[](Block b) { return dim[static_cast<int>(b)]; }
  int total() const { return dim[0] + dim[1] + dim[2] + dim[3]; }
  int offset(Block b) const;
  bool contains(const BlockDims& other) const;
  bool operator==(const BlockDims&) const = default;

  static BlockDims unify(const BlockDims& a, const BlockDims& b);
};

/// A single variable: block plus 0-based index within the block.
struct VarRef {
  Block block;
  int index;
  bool operator==(const VarRef&) const = default;
};

/// Flat exponent vector in the layout given by a BlockDims.
using Exponents = std::vector<std::uint8_t>;

int total_degree(const Exponents& e);

/// Graded lexicographic order: lower total degree first; within a degree,
/// monomials with higher exponents on earlier variables come first
/// (1, x1, x2, x1^2, x1*x2, x2^2, ...).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation point: numeric values per block.
struct Point {
  std::array<std::vector<double>, kNumBlocks> values;

  static Point at(std::vector<double> x, std::vector<double> u = {},
                  std::vector<double> w = {}, std::vector<double> y = {});
  const std::vector<double>& of(Block b) const {
    return values[static_cast<int>(b)];
  }
  std::vector<double>& of(Block b) { return values[static_cast<int>(b)]; }
};

/// Sparse multivariate polynomial in canonical form: a grlex-ordered term map
/// with no zero coefficients. Immutable in spirit: all operations return new
/// values, so instances can be shared freely across threads.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, double, GrlexLess>;

  Polynomial() = default;  // zero over empty dims
  explicit Polynomial(BlockDims dims) : dims_(dims) {}

  static Polynomial constant(double c, BlockDims dims = BlockDims());
  static Polynomial variable(VarRef v, BlockDims dims);
  static Polynomial monomial(BlockDims dims, Exponents exps, double coeff);

  const BlockDims& dims() const { return dims_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial (printed as "zero").
  int degree() const;
  int degree_in(Block b) const;
  double coefficient(const Exponents& e) const;
  /// Coefficient of the constant monomial.
  double constant_term() const;
  /// Largest |coefficient|; 0 for the zero polynomial.
  double max_abs_coefficient() const;

  /// Same polynomial re-laid-out over larger dims.
  Polynomial promoted(const BlockDims& target) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(double s) const;
  friend Polynomial operator*(double s, const Polynomial& p) { return p * s; }
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  bool operator==(const Polynomial& rhs) const;

  double evaluate(const Point& pt) const;

  /// Composition: each bound variable is replaced by its binding polynomial.
  /// Unbound variables pass through unchanged.
  Polynomial substitute(
      const std::vector<std::pair<VarRef, Polynomial>>& bindings) const;

  /// Binds one whole block to numeric values; the block disappears from the
  /// result's support (its dims entry is kept, exponents become zero).
  Polynomial bind_block(Block b, const std::vector<double>& values) const;

  Polynomial differentiate(VarRef v) const;
  std::vector<std::vector<Polynomial>> hessian(Block b) const;

  /// Parseable text form; parse(str()) reproduces the polynomial exactly.
  std::string str() const;

  // Internal: adds c * x^e, keeping canonical form. Used by builders.
  void add_term(const Exponents& e, double c);

 private:
  BlockDims dims_;
  TermMap terms_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := number | var ('^' uint)? | '(' expr ')' | '-' factor
///   var    := ('x'|'u'|'w') uint
/// Variable indices are 1-based and validated against dims. Implicit
/// multiplication is a syntax error.
Polynomial parse_polynomial(const std::string& text, const BlockDims& dims);

/// All monomials of total degree <= max_degree over the variables of `dims`,
/// in grlex order. Entry 0 is always the constant monomial.
class MonomialBasis {
 public:
  MonomialBasis(BlockDims dims, int max_degree);

  const BlockDims& dims() const { return dims_; }
  int max_degree() const { return max_degree_; }
  const std::vector<Exponents>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Polynomial polynomial(std::size_t i) const;

 private:
  BlockDims dims_;
  int max_degree_;
  std::vector<Exponents> entries_;
};

/// C(n + d, d): the size of a full degree-<=d basis in n variables.
std::size_t monomial_count(int n_vars, int degree);

}  // namespace polyadp
