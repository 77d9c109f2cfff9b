#pragma once

#include "qaoadepth/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qaoadepth {

enum class VarKind { original, slack };

/// A named binary variable. Slack variables remember which constraint and
/// which bit of its slack register they encode (both 1-based).
struct VarId {
  std::string name;
  VarKind kind = VarKind::original;
  std::uint32_t constraint = 0;
  std::uint32_t bit = 0;

  static VarId original(std::string name);
  static VarId slack(std::string name, std::uint32_t constraint, std::uint32_t bit);

  bool is_slack() const noexcept { return kind == VarKind::slack; }

  friend bool operator==(const VarId&, const VarId&) = default;
  /// Originals first, in natural name order (x2 < x10); then slacks by
  /// (constraint, bit).
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b);
};

/// Sorted, duplicate-free list of variables.
using Support = std::vector<VarId>;

struct Monomial {
  Support support;
  Rational coefficient;
};

using Assignment = std::map<VarId, bool>;

/// Multilinear polynomial over binary variables with exact coefficients.
///
/// Always held in canonical form: x*x is reduced to x, supports are sorted,
/// equal supports are merged and zero coefficients are dropped. Term order is
/// lexicographic on the sorted support lists, so the empty support (the
/// constant) comes first.
class Polynomial {
 public:
  using Terms = std::map<Support, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(const VarId& v);
  static Polynomial term(Support support, const Rational& coefficient);

  const Terms& terms() const noexcept { return terms_; }
  std::vector<Monomial> monomials() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t degree() const;

  Rational constant() const;
  Rational coefficient(const Support& support) const;
  /// Sorted union of all supports.
  std::vector<VarId> variables() const;

  /// Adds coefficient * prod(support), re-canonicalizing the support.
  void add_term(Support support, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. "2*x1*x2 - x1 - x2 + 9" (constant last for readability).
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Canonical form of an arbitrary list of monomials.
Polynomial canonicalize(std::span<const Monomial> monomials);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial square(const Polynomial& a);

/// Throws Error(invalid_input) naming the first variable missing from the
/// assignment.
Rational evaluate(const Polynomial& p, const Assignment& assignment);

struct CubeBound {
  Rational value;
  bool exact = false;
};

inline constexpr std::size_t kDefaultExactLimit = 20;

/// Minimum over {0,1}^n. Exhaustive when the polynomial has at most
/// exact_limit variables, otherwise the sum of negative coefficients
/// (plus the constant), which is always a valid lower bound.
CubeBound minimum_over_cube(const Polynomial& p, std::size_t exact_limit = kDefaultExactLimit);
/// Mirror of minimum_over_cube; the fallback is an upper bound.
CubeBound maximum_over_cube(const Polynomial& p, std::size_t exact_limit = kDefaultExactLimit);

/// Sum of |coefficient| over every term, an upper bound on |p| over the cube.
Rational absolute_bound(const Polynomial& p);

/// A polynomial bound to a fixed variable order so that an assignment is a
/// machine word (bit i = order[i]). Coefficients are scaled to a common
/// denominator; when every partial sum fits comfortably in 64 bits the
/// integer path is used.
class PackedPolynomial {
 public:
  PackedPolynomial(const Polynomial& p, std::span<const VarId> order);

  bool fits_int64() const noexcept { return fits_; }
  const BigInt& denominator() const noexcept { return denominator_; }

  /// value(z) * denominator(); only valid when fits_int64().
  std::int64_t scaled_value(std::uint64_t z) const noexcept {
    std::int64_t total = 0;
    for (std::size_t t = 0; t < masks_.size(); ++t) {
      if ((z & masks_[t]) == masks_[t]) total += scaled_[t];
    }
    return total;
  }

  Rational value(std::uint64_t z) const;

  std::span<const std::uint64_t> masks() const noexcept { return masks_; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<std::uint64_t> masks_;
  std::vector<std::int64_t> scaled_;
  std::vector<Rational> coeffs_;
  BigInt denominator_ = 1;
  bool fits_ = true;
};

/// Maximum number of variables any exhaustive routine will enumerate.
inline constexpr std::size_t kHardEnumerationLimit = 30;

}  // namespace qaoadepth
