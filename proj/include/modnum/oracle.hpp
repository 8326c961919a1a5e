#pragma once

// Brute-force checks of the resolution-derived dimensions. A seeded random
// s x (s+1) matrix of linear forms over Z/p stands in for the generic one;
// its maximal minors generate the (saturated) ideal of a determinantal curve,
// and h^0(J(n)) is the dimension of their degree-n span, measured by
// Gaussian elimination. None of this code touches the cohomology formulas.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace modnum::oracle {

using Residue = std::uint64_t;
using Exponents = std::array<int, 4>;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

inline Residue pow_mod(Residue base, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = r * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return r;
}

inline Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

/// Number of degree-n monomials in x0..x3, by direct enumeration.
inline std::uint64_t h0_line_oracle(std::int64_t n) {
  if (n < 0) return 0;
  std::uint64_t count = 0;
  for (std::int64_t a = 0; a <= n; ++a)
    for (std::int64_t b = 0; a + b <= n; ++b)
      for (std::int64_t c = 0; a + b + c <= n; ++c) ++count;  // d = n - a - b - c
  return count;
}

/// The degree-n monomials of k[x0..x3], indexed.
class MonomialBasis {
 public:
  explicit MonomialBasis(int degree) : degree_(degree) {
    if (degree < 0) return;
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b)
        for (int c = degree - a - b; c >= 0; --c) {
          Exponents e{a, b, c, degree - a - b - c};
          index_.emplace(key(e), monomials_.size());
          monomials_.push_back(e);
        }
  }

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  std::size_t index_of(const Exponents& e) const { return index_.at(key(e)); }

 private:
  static std::uint64_t key(const Exponents& e) {
    std::uint64_t k = 0;
    for (int x : e) k = (k << 16U) | static_cast<std::uint64_t>(x);
    return k;
  }

  int degree_;
  std::vector<Exponents> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Sparse homogeneous polynomial over Z/p.
class Polynomial {
 public:
  explicit Polynomial(Residue p) : p_(p) {}

  static Polynomial constant(Residue p, Residue c) {
    Polynomial f(p);
    f.add_term({0, 0, 0, 0}, c);
    return f;
  }

  void add_term(const Exponents& e, Residue c) {
    c %= p_;
    if (c == 0) return;
    auto& slot = terms_[e];
    slot = (slot + c) % p_;
    if (slot == 0) terms_.erase(e);
  }

  Residue prime() const { return p_; }
  const std::map<Exponents, Residue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, p_ - c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(p_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
        r.add_term(e, c1 * c2 % p_);
      }
    return r;
  }

  Polynomial times_monomial(const Exponents& m) const {
    Polynomial r(p_);
    for (const auto& [e, c] : terms_) {
      r.terms_[{e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3]}] = c;
    }
    return r;
  }

  Polynomial derivative(int var) const {
    Polynomial r(p_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      r.add_term(d, c * static_cast<Residue>(e[var]) % p_);
    }
    return r;
  }

  /// Dense coefficient vector in the given basis; every term must have its degree.
  std::vector<Residue> coefficients(const MonomialBasis& basis) const {
    std::vector<Residue> v(basis.size(), 0);
    for (const auto& [e, c] : terms_) v[basis.index_of(e)] = c;
    return v;
  }

 private:
  Residue p_;
  std::map<Exponents, Residue> terms_;
};

/// Dense matrix over Z/p, row-major.
class FiniteFieldMatrix {
 public:
  FiniteFieldMatrix(Residue p, std::size_t cols) : p_(p), cols_(cols) {
    if (!is_prime(p)) {
      throw std::invalid_argument("FiniteFieldMatrix: modulus is not prime: " +
                                  std::to_string(p));
    }
  }

  void append_row(std::vector<Residue> row) {
    if (row.size() != cols_) throw std::invalid_argument("FiniteFieldMatrix: row width");
    for (auto& x : row) x %= p_;
    rows_.push_back(std::move(row));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Residue prime() const { return p_; }
  const std::vector<Residue>& row(std::size_t i) const { return rows_[i]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_.size(); ++c) {
      std::size_t pivot = r;
      while (pivot < rows_.size() && rows_[pivot][c] == 0) ++pivot;
      if (pivot == rows_.size()) continue;
      std::swap(rows_[r], rows_[pivot]);
      const Residue inv = inv_mod(rows_[r][c], p_);
      for (auto& x : rows_[r]) x = x * inv % p_;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == r || rows_[i][c] == 0) continue;
        const Residue f = rows_[i][c];
        for (std::size_t j = c; j < cols_; ++j) {
          rows_[i][j] = (rows_[i][j] + (p_ - f) * rows_[r][j]) % p_;
        }
      }
      pivots.push_back(c);
      ++r;
    }
    rows_.resize(r);
    return pivots;
  }

  std::size_t rank() const {
    FiniteFieldMatrix copy = *this;
    return copy.reduce().size();
  }

 private:
  Residue p_;
  std::size_t cols_;
  std::vector<std::vector<Residue>> rows_;
};

/// Seeded random s x (s+1) matrix of linear forms and its maximal minors.
class DeterminantalSample {
 public:
  DeterminantalSample(int s, Residue p, std::uint64_t seed) : s_(s), p_(p) {
    if (s < 1) throw std::domain_error("DeterminantalSample: s must be >= 1");
    if (!is_prime(p)) {
      throw std::invalid_argument("DeterminantalSample: modulus is not prime: " +
                                  std::to_string(p));
    }
    std::seed_seq seq{seed, static_cast<std::uint64_t>(s), p};
    std::mt19937_64 rng(seq);
    entries_.reserve(static_cast<std::size_t>(s * (s + 1)));
    for (int i = 0; i < s * (s + 1); ++i) {
      Polynomial form(p);
      for (int v = 0; v < 4; ++v) {
        Exponents e{0, 0, 0, 0};
        e[v] = 1;
        form.add_term(e, rng() % p);
      }
      entries_.push_back(std::move(form));
    }
    for (int col = 0; col <= s; ++col) {
      std::vector<int> cols;
      for (int c = 0; c <= s; ++c)
        if (c != col) cols.push_back(c);
      minors_.push_back(determinant(cols));
    }
  }

  int s() const { return s_; }
  Residue prime() const { return p_; }
  const Polynomial& entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * (s_ + 1) + col)];
  }
  const std::vector<Polynomial>& minors() const { return minors_; }

 private:
  // Laplace expansion along the first remaining row; s is small.
  Polynomial determinant(const std::vector<int>& cols, int row = 0) const {
    if (cols.size() == 1) return entry(row, cols[0]);
    Polynomial det(p_);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (j != k) rest.push_back(cols[j]);
      Polynomial term = entry(row, cols[k]) * determinant(rest, row + 1);
      det = (k % 2 == 0) ? det + term : det - term;
    }
    return det;
  }

  int s_;
  Residue p_;
  std::vector<Polynomial> entries_;
  std::vector<Polynomial> minors_;
};

namespace detail {

/// Row space of {g * m : g in generators, m a monomial of degree n - deg g}.
inline FiniteFieldMatrix span_in_degree(const std::vector<Polynomial>& generators,
                                        int generator_degree, int n, Residue p) {
  const MonomialBasis target(n);
  FiniteFieldMatrix m(p, target.size());
  if (n < generator_degree) return m;
  const MonomialBasis multipliers(n - generator_degree);
  for (const auto& g : generators)
    for (const auto& mono : multipliers.monomials())
      m.append_row(g.times_monomial(mono).coefficients(target));
  return m;
}

}  // namespace detail

/// dim of the degree-n part of the ideal of maximal minors.
inline std::size_t h0_ideal_oracle(int s, std::int64_t n, Residue p, std::uint64_t seed) {
  if (n < s) return 0;
  const DeterminantalSample sample(s, p, seed);
  return detail::span_in_degree(sample.minors(), s, static_cast<int>(n), p).rank();
}

/// dim of the degree-n part of the square of the ideal of maximal minors.
inline std::size_t h0_ideal_square_oracle(int s, std::int64_t n, Residue p,
                                          std::uint64_t seed) {
  if (n < 2 * s) return 0;
  const DeterminantalSample sample(s, p, seed);
  std::vector<Polynomial> products;
  const auto& minors = sample.minors();
  for (std::size_t i = 0; i < minors.size(); ++i)
    for (std::size_t j = i; j < minors.size(); ++j) products.push_back(minors[i] * minors[j]);
  return detail::span_in_degree(products, 2 * s, static_cast<int>(n), p).rank();
}

/// dim of the degree-n forms vanishing to order two along the curve: F in I_n
/// with every partial derivative in I_{n-1}. For a smooth curve these are the
/// sections of J^2(n) (symbolic and ordinary squares agree as sheaves), so
/// unlike h0_ideal_square_oracle this can detect elements of degree < 2s.
/// Requires p > n so that derivatives see every exponent.
inline std::size_t h0_order_two_oracle(int s, std::int64_t n, Residue p, std::uint64_t seed) {
  if (n < s) return 0;
  if (static_cast<Residue>(n) >= p) {
    throw std::invalid_argument("h0_order_two_oracle: prime must exceed the degree");
  }
  const int deg = static_cast<int>(n);
  const DeterminantalSample sample(s, p, seed);

  auto ideal_n = detail::span_in_degree(sample.minors(), s, deg, p);
  ideal_n.reduce();
  auto ideal_lower = detail::span_in_degree(sample.minors(), s, deg - 1, p);
  const auto lower_pivots = ideal_lower.reduce();

  const MonomialBasis upper_basis(deg);
  const MonomialBasis lower_basis(deg - 1);

  auto normal_form = [&](std::vector<Residue> v) {
    for (std::size_t r = 0; r < lower_pivots.size(); ++r) {
      const Residue f = v[lower_pivots[r]];
      if (f == 0) continue;
      const auto& row = ideal_lower.row(r);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * row[j]) % p;
    }
    return v;
  };

  FiniteFieldMatrix conditions(p, 4 * lower_basis.size());
  for (std::size_t r = 0; r < ideal_n.rows(); ++r) {
    Polynomial f(p);
    const auto& coeffs = ideal_n.row(r);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] != 0) f.add_term(upper_basis.monomials()[j], coeffs[j]);
    }
    std::vector<Residue> stacked;
    stacked.reserve(conditions.cols());
    for (int var = 0; var < 4; ++var) {
      const auto nf = normal_form(f.derivative(var).coefficients(lower_basis));
      stacked.insert(stacked.end(), nf.begin(), nf.end());
    }
    conditions.append_row(std::move(stacked));
  }
  return ideal_n.rows() - conditions.rank();
}

/// Outcome of repeating an oracle over several seeds.
struct SeedVote {
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> values;
  std::size_t expected = 0;

  std::size_t agreeing() const {
    std::size_t k = 0;
    for (auto v : values) k += v == expected ? 1 : 0;
    return k;
  }
  bool majority() const { return 2 * agreeing() > values.size(); }
  bool unanimous() const { return agreeing() == values.size(); }
};

}  // namespace modnum::oracle
