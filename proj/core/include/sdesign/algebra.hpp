#pragma once

#include "sdesign/exact_linalg.hpp"
#include "sdesign/multi_index.hpp"
#include "sdesign/perm.hpp"
#include "sdesign/scalar.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace sdesign {

/// Homogeneous polynomial with exact rational coefficients, keyed by
/// exponent vectors of total degree `degree()`. Zero coefficients are never
/// stored.
class SymPoly {
 public:
  SymPoly(std::size_t d, int degree);

  /// c * (x_1 + ... + x_d)^0, i.e. the constant c as a degree-0 polynomial.
  static SymPoly constant(std::size_t d, const Rational& c);

  std::size_t dim() const { return d_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& k, const Rational& c);
  Rational coefficient(const MultiIndex& k) const;

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  /// Product with (x_1 + ... + x_d).
  SymPoly times_linear_sum() const;

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const Rational& c, const SymPoly& p);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  /// "x1^2*x2 + x2^2*x3 + 3*x1*x2*x3"
  std::string to_string() const;

 private:
  std::size_t d_;
  int degree_;
  std::map<MultiIndex, Rational> terms_;
};

/// F_G(k) = sum_{g in G} x^{g(k)}; the coefficient of x^e counts the group
/// elements mapping k to e.
SymPoly symmetrized_monomial(const PermGroup& g, const MultiIndex& k);

/// p * (x_1 + ... + x_d)^(target_degree - deg p). Equal to p modulo
/// (sum x - 1). Throws std::invalid_argument if target_degree < deg p.
SymPoly homogenize_to(const SymPoly& p, int target_degree);

struct SpanResult {
  bool in_span = false;
  /// One coefficient per basis element when in_span.
  std::vector<Rational> coefficients;
};

/// Exact membership test after homogenizing candidate and basis to the
/// largest degree present.
SpanResult in_span(const SymPoly& candidate, std::span<const SymPoly> basis);

/// {F_G(j,0,...,0) : 0 <= j <= t}. The j = 0 element is the constant |G|,
/// which carries the affine Beta-function term of the span statement.
std::vector<SymPoly> power_basis(const PermGroup& g, int t);

/// Number of semistandard tableaux of shape lambda and content mu.
BigInt kostka_number(const MultiIndex& lambda, const MultiIndex& mu);

/// Schur polynomial s_lambda in d variables, via Kostka numbers.
SymPoly schur_polynomial(std::size_t d, const MultiIndex& lambda);

enum class DecompositionBasis {
  symmetrized,  ///< rows F_G(lambda), columns F_G(mu), one per G-orbit of degree t
  schur,        ///< rows and columns are Young diagrams read as s_lambda; G = S_d only
};

/// Each row expresses a degree-|lambda| polynomial, homogenized to degree t,
/// in the chosen degree-t basis, for every partition lambda with
/// 1 <= |lambda| <= t. In the symmetrized basis the row polynomial is
/// F_G(lambda); in the Schur basis it is s_lambda, so the rows are the
/// Young-rule expansions of s_lambda * s_1^(t - |lambda|) (the (1) row holds
/// the numbers of standard tableaux). Both bases span the same row space.
/// Rows are ordered by degree, then ascending lexicographic order; columns
/// likewise.
struct DecompositionTable {
  std::size_t d;
  int t;
  std::string group;
  DecompositionBasis basis;
  std::vector<MultiIndex> rows;
  std::vector<MultiIndex> columns;
  RationalMatrix coefficients;
  std::size_t rank;

  std::size_t rank_of_rows(std::span<const std::size_t> row_ids) const;
  std::string label(const MultiIndex& k) const;
  std::string to_csv() const;
  std::string to_text() const;
};

DecompositionTable decomposition_table(std::size_t d, int t, const PermGroup& g,
                                       DecompositionBasis basis = DecompositionBasis::symmetrized);

}  // namespace sdesign
