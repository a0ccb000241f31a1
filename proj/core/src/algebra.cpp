#include "sdesign/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sdesign {

SymPoly::SymPoly(std::size_t d, int degree) : d_(d), degree_(degree) {
  if (d < 1) throw std::invalid_argument("SymPoly needs d >= 1");
  if (degree < 0) throw std::invalid_argument("SymPoly degree must be non-negative");
}

SymPoly SymPoly::constant(std::size_t d, const Rational& c) {
  SymPoly p(d, 0);
  p.add_term(MultiIndex(std::vector<int>(d, 0)), c);
  return p;
}

void SymPoly::add_term(const MultiIndex& k, const Rational& c) {
  if (k.dim() != d_ || k.degree() != degree_) {
    throw std::invalid_argument("term " + k.to_string() + " does not fit a degree-" +
                                std::to_string(degree_) + " polynomial in " +
                                std::to_string(d_) + " variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SymPoly::coefficient(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

double SymPoly::evaluate(std::span<const double> x) const {
  if (x.size() != d_) throw std::invalid_argument("evaluate: dimension mismatch");
  double sum = 0.0;
  for (const auto& [k, c] : terms_) {
    double v = to_double(c);
    for (std::size_t i = 0; i < d_; ++i) {
      if (k[i]) v *= std::pow(x[i], k[i]);
    }
    sum += v;
  }
  return sum;
}

Rational SymPoly::evaluate(std::span<const Rational> x) const {
  if (x.size() != d_) throw std::invalid_argument("evaluate: dimension mismatch");
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < d_; ++i) {
      for (int e = 0; e < k[i]; ++e) v *= x[i];
    }
    sum += v;
  }
  return sum;
}

SymPoly SymPoly::times_linear_sum() const {
  SymPoly out(d_, degree_ + 1);
  for (const auto& [k, c] : terms_) {
    for (std::size_t j = 0; j < d_; ++j) out.add_term(k.raised(j), c);
  }
  return out;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.d_ != b.d_ || a.degree_ != b.degree_) throw std::invalid_argument("SymPoly shape mismatch");
  SymPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + Rational(-1) * b; }

SymPoly operator*(const Rational& c, const SymPoly& p) {
  SymPoly out(p.d_, p.degree_);
  for (const auto& [k, v] : p.terms_) out.add_term(k, c * v);
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // descending exponent order reads naturally (x1^2*x2 before x2^2*x3)
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < d_; ++i) {
      if (!k[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (k[i] > 1) mono += "^" + std::to_string(k[i]);
    }
    Rational mag = abs(c);
    bool neg = c < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (mono.empty()) {
      s += sdesign::to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += sdesign::to_string(mag) + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

SymPoly symmetrized_monomial(const PermGroup& g, const MultiIndex& k) {
  if (g.dim() != k.dim()) throw std::invalid_argument("symmetrized_monomial: dimension mismatch");
  SymPoly p(k.dim(), k.degree());
  g.for_each_element([&](const Permutation& pi) { p.add_term(apply(pi, k), Rational(1)); });
  return p;
}

SymPoly homogenize_to(const SymPoly& p, int target_degree) {
  if (target_degree < p.degree()) {
    throw std::invalid_argument("cannot homogenize a degree-" + std::to_string(p.degree()) +
                                " polynomial down to degree " + std::to_string(target_degree));
  }
  SymPoly out = p;
  while (out.degree() < target_degree) out = out.times_linear_sum();
  return out;
}

SpanResult in_span(const SymPoly& candidate, std::span<const SymPoly> basis) {
  int deg = candidate.degree();
  for (const auto& b : basis) {
    if (b.dim() != candidate.dim()) throw std::invalid_argument("in_span: dimension mismatch");
    deg = std::max(deg, b.degree());
  }
  auto target = homogenize_to(candidate, deg);
  std::vector<SymPoly> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(homogenize_to(b, deg));

  // monomial coordinates that appear anywhere
  std::set<MultiIndex> support;
  for (const auto& [k, c] : target.terms()) support.insert(k);
  for (const auto& col : cols) {
    for (const auto& [k, c] : col.terms()) support.insert(k);
  }
  RationalMatrix a;
  std::vector<Rational> rhs;
  for (const auto& k : support) {
    std::vector<Rational> row;
    row.reserve(cols.size());
    for (const auto& col : cols) row.push_back(col.coefficient(k));
    a.push_back(std::move(row));
    rhs.push_back(target.coefficient(k));
  }
  if (support.empty()) return {true, std::vector<Rational>(basis.size(), Rational(0))};
  auto x = solve(a, rhs);
  if (!x) return {false, {}};
  return {true, std::move(*x)};
}

std::vector<SymPoly> power_basis(const PermGroup& g, int t) {
  std::vector<SymPoly> out;
  for (int j = 0; j <= t; ++j) {
    std::vector<int> e(g.dim(), 0);
    e[0] = j;
    out.push_back(symmetrized_monomial(g, MultiIndex(std::move(e))));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Trailing zeros removed.
std::vector<int> parts_of(const MultiIndex& k) {
  std::vector<int> p(k.exponents().begin(), k.exponents().end());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

BigInt kostka_rec(const std::vector<int>& lambda, const std::vector<int>& weights, std::size_t n_weights);

// Enumerate nu with lambda/nu a horizontal strip of exactly `strip` boxes:
// lambda_{i+1} <= nu_i <= lambda_i.
BigInt strip_sum(const std::vector<int>& lambda, std::vector<int>& nu, std::size_t row, int strip,
                 const std::vector<int>& weights, std::size_t n_weights) {
  if (row == lambda.size()) {
    if (strip != 0) return 0;
    std::vector<int> trimmed = nu;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    return kostka_rec(trimmed, weights, n_weights);
  }
  int lo = row + 1 < lambda.size() ? lambda[row + 1] : 0;
  BigInt total = 0;
  for (int v = lambda[row]; v >= lo; --v) {
    int removed = lambda[row] - v;
    if (removed > strip) break;
    nu[row] = v;
    total += strip_sum(lambda, nu, row + 1, strip - removed, weights, n_weights);
  }
  return total;
}

BigInt kostka_rec(const std::vector<int>& lambda, const std::vector<int>& weights, std::size_t n_weights) {
  if (n_weights == 0) return lambda.empty() ? 1 : 0;
  int strip = weights[n_weights - 1];
  std::vector<int> nu = lambda;
  return strip_sum(lambda, nu, 0, strip, weights, n_weights - 1);
}

std::string group_tag(const PermGroup& g) { return g.tag(); }

}  // namespace

BigInt kostka_number(const MultiIndex& lambda, const MultiIndex& mu) {
  if (!lambda.is_canonical()) throw std::invalid_argument("kostka_number: shape must be a partition");
  if (lambda.degree() != mu.degree()) return 0;
  auto shape = parts_of(lambda);
  std::vector<int> weights(mu.exponents().begin(), mu.exponents().end());
  return kostka_rec(shape, weights, weights.size());
}

SymPoly schur_polynomial(std::size_t d, const MultiIndex& lambda) {
  auto shape = parts_of(lambda);
  int n = lambda.degree();
  SymPoly out(d, n);
  if (shape.size() > d) return out;  // vanishes in d variables
  for (const auto& mu : partitions(n, static_cast<int>(d))) {
    std::vector<int> lam(d, 0);
    std::copy(shape.begin(), shape.end(), lam.begin());
    BigInt k = kostka_number(MultiIndex(lam), mu);
    if (k == 0) continue;
    for (const auto& e : full_orbit(mu)) out.add_term(e, Rational(k));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t DecompositionTable::rank_of_rows(std::span<const std::size_t> row_ids) const {
  RationalMatrix sub;
  for (auto r : row_ids) sub.push_back(coefficients.at(r));
  return sdesign::rank(std::move(sub));
}

std::string DecompositionTable::label(const MultiIndex& k) const {
  if (group == "sym") return k.partition_label();
  return k.to_string();
}

std::string DecompositionTable::to_csv() const {
  std::ostringstream os;
  os << "row";
  for (const auto& c : columns) os << ",\"" << label(c) << "\"";
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "\"" << label(rows[r]) << "\"";
    for (const auto& v : coefficients[r]) os << "," << sdesign::to_string(v);
    os << "\n";
  }
  os << "rank," << rank << "\n";
  return os.str();
}

std::string DecompositionTable::to_text() const {
  std::ostringstream os;
  const char* fname = basis == DecompositionBasis::schur ? "s" : "F";
  os << "decomposition d=" << d << " t=" << t << " G=" << group << " basis="
     << (basis == DecompositionBasis::schur ? "schur" : "symmetrized") << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "  " << fname << label(rows[r]) << " =";
    bool first = true;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& v = coefficients[r][c];
      if (v == 0) continue;
      os << (first ? " " : " + ");
      if (v != 1) os << sdesign::to_string(v) << "*";
      os << fname << label(columns[c]);
      first = false;
    }
    if (first) os << " 0";
    os << "\n";
  }
  os << "  rank = " << rank << "\n";
  return os.str();
}

DecompositionTable decomposition_table(std::size_t d, int t, const PermGroup& g, DecompositionBasis basis) {
  if (g.dim() != d) throw std::invalid_argument("decomposition_table: group degree mismatch");
  if (t < 1) throw std::invalid_argument("decomposition_table: t must be >= 1");
  if (basis == DecompositionBasis::schur && g.kind() != PermGroup::Kind::symmetric) {
    throw std::invalid_argument("Schur basis requires the full symmetric group");
  }

  DecompositionTable table{d, t, group_tag(g), basis, {}, {}, {}, 0};
  for (int deg = 1; deg <= t; ++deg) {
    for (auto& p : partitions(deg, static_cast<int>(d))) table.rows.push_back(std::move(p));
  }

  if (basis == DecompositionBasis::schur) {
    table.columns = partitions(t, static_cast<int>(d));
    // m-coordinates of s_lambda: kostka[mu][lambda]
    RationalMatrix kostka;
    for (const auto& mu : table.columns) {
      std::vector<Rational> row;
      for (const auto& lam : table.columns) row.emplace_back(kostka_number(lam, mu));
      kostka.push_back(std::move(row));
    }
    // rows read each diagram as s_lambda, so a row is the Young-rule
    // expansion of s_lambda * s_1^(t - |lambda|)
    for (const auto& lam : table.rows) {
      auto poly = homogenize_to(schur_polynomial(d, lam), t);
      std::vector<Rational> m_coords;
      for (const auto& mu : table.columns) m_coords.push_back(poly.coefficient(mu));
      auto x = solve(kostka, m_coords);
      if (!x) throw std::logic_error("symmetric polynomial not expressible in Schur basis");
      table.coefficients.push_back(std::move(*x));
    }
  } else {
    // one column per G-orbit of degree-t exponents, represented by its
    // lexicographically largest member
    std::set<MultiIndex> reps;
    std::set<MultiIndex> seen;
    for (const auto& k : enumerate_multi_indices(static_cast<int>(d), t, true)) {
      if (seen.contains(k)) continue;
      auto orb = orbit(g, k);
      seen.insert(orb.begin(), orb.end());
      reps.insert(orb.front());
    }
    table.columns.assign(reps.begin(), reps.end());
    std::vector<SymPoly> col_polys;
    for (const auto& c : table.columns) col_polys.push_back(symmetrized_monomial(g, c));

    for (const auto& lam : table.rows) {
      auto poly = homogenize_to(symmetrized_monomial(g, lam), t);
      std::vector<Rational> row;
      SymPoly rebuilt(d, t);
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        Rational coef = poly.coefficient(table.columns[c]) / col_polys[c].coefficient(table.columns[c]);
        rebuilt = rebuilt + coef * col_polys[c];
        row.push_back(std::move(coef));
      }
      if (!(rebuilt == poly)) throw std::logic_error("row is not G-invariant: " + lam.to_string());
      table.coefficients.push_back(std::move(row));
    }
  }
  table.rank = sdesign::rank(table.coefficients);
  return table;
}

}  // namespace sdesign
