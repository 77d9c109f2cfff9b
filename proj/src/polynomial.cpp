#include "qaoadepth/polynomial.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace qaoadepth {

namespace {

/// Compares strings treating maximal digit runs as numbers.
std::strong_ordering natural_compare(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return (ie - is) <=> (je - js);
      if (auto c = a.compare(is, ie - is, b, js, je - js); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] <=> b[j];
      ++i;
      ++j;
    }
  }
  if (auto c = (a.size() - i) <=> (b.size() - j); c != 0) return c;
  return a <=> b;
}

Support normalize_support(Support support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

Support merge_supports(const Support& a, const Support& b) {
  Support out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

VarId VarId::original(std::string name) { return VarId{std::move(name), VarKind::original, 0, 0}; }

VarId VarId::slack(std::string name, std::uint32_t constraint, std::uint32_t bit) {
  return VarId{std::move(name), VarKind::slack, constraint, bit};
}

std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
  if (a.kind != b.kind) return a.kind == VarKind::original ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.kind == VarKind::slack) {
    if (auto c = a.constraint <=> b.constraint; c != 0) return c;
    if (auto c = a.bit <=> b.bit; c != 0) return c;
  }
  return natural_compare(a.name, b.name);
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Support{}, constant);
}

Polynomial Polynomial::variable(const VarId& v) { return term(Support{v}, Rational(1)); }

Polynomial Polynomial::term(Support support, const Rational& coefficient) {
  Polynomial p;
  p.add_term(std::move(support), coefficient);
  return p;
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [support, c] : terms_) out.push_back(Monomial{support, c});
  return out;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [support, c] : terms_) d = std::max(d, support.size());
  return d;
}

Rational Polynomial::constant() const { return coefficient(Support{}); }

Rational Polynomial::coefficient(const Support& support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  for (const auto& [support, c] : terms_) out.insert(out.end(), support.begin(), support.end());
  return normalize_support(std::move(out));
}

void Polynomial::add_term(Support support, const Rational& coefficient) {
  if (coefficient == 0) return;
  support = normalize_support(std::move(support));
  auto [it, inserted] = terms_.try_emplace(std::move(support), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [support, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(support, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [support, c] : terms_) c *= scalar;
  }
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [support, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      Support merged = merge_supports(sa, sb);
      Rational product = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(std::move(merged), product);
      if (!inserted) {
        it->second += product;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Support& support, const Rational& c) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (support.empty()) {
      out << magnitude.str();
      return;
    }
    if (magnitude != 1) out << magnitude.str() << "*";
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (i) out << "*";
      out << support[i].name;
    }
  };
  for (const auto& [support, c] : terms_) {
    if (!support.empty()) emit(support, c);
  }
  if (auto it = terms_.find(Support{}); it != terms_.end()) emit(it->first, it->second);
  return out.str();
}

Polynomial canonicalize(std::span<const Monomial> monomials) {
  Polynomial out;
  for (const auto& m : monomials) out.add_term(m.support, m.coefficient);
  return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial square(const Polynomial& a) { return a * a; }

Rational evaluate(const Polynomial& p, const Assignment& assignment) {
  Rational total = 0;
  for (const auto& [support, c] : p.terms()) {
    bool active = true;
    for (const auto& v : support) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw Error(ErrorKind::invalid_input, "assignment has no value for variable '" + v.name + "'");
      }
      if (!it->second) active = false;
    }
    if (active) total += c;
  }
  return total;
}

Rational absolute_bound(const Polynomial& p) {
  Rational total = 0;
  for (const auto& [support, c] : p.terms()) total += c < 0 ? Rational(-c) : c;
  return total;
}

namespace {

CubeBound extremum_over_cube(const Polynomial& p, std::size_t exact_limit, bool minimize) {
  const auto vars = p.variables();
  if (vars.size() > std::min(exact_limit, kHardEnumerationLimit)) {
    Rational bound = 0;
    for (const auto& [support, c] : p.terms()) {
      if (support.empty() || (minimize ? c < 0 : c > 0)) bound += c;
    }
    return CubeBound{bound, false};
  }
  const PackedPolynomial packed(p, vars);
  const std::uint64_t count = std::uint64_t{1} << vars.size();
  if (packed.fits_int64()) {
    std::int64_t best = packed.scaled_value(0);
    for (std::uint64_t z = 1; z < count; ++z) {
      const std::int64_t v = packed.scaled_value(z);
      best = minimize ? std::min(best, v) : std::max(best, v);
    }
    return CubeBound{Rational(BigInt(best), packed.denominator()), true};
  }
  Rational best = packed.value(0);
  for (std::uint64_t z = 1; z < count; ++z) {
    Rational v = packed.value(z);
    if (minimize ? v < best : v > best) best = std::move(v);
  }
  return CubeBound{best, true};
}

}  // namespace

CubeBound minimum_over_cube(const Polynomial& p, std::size_t exact_limit) {
  return extremum_over_cube(p, exact_limit, true);
}

CubeBound maximum_over_cube(const Polynomial& p, std::size_t exact_limit) {
  return extremum_over_cube(p, exact_limit, false);
}

PackedPolynomial::PackedPolynomial(const Polynomial& p, std::span<const VarId> order) {
  if (order.size() > 63) {
    throw Error(ErrorKind::invalid_input, "cannot pack more than 63 variables into an assignment word");
  }
  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], i);

  for (const auto& [support, c] : p.terms()) {
    std::uint64_t mask = 0;
    for (const auto& v : support) {
      auto it = index.find(v);
      if (it == index.end()) {
        throw Error(ErrorKind::invalid_input, "variable '" + v.name + "' is not in the packing order");
      }
      mask |= std::uint64_t{1} << it->second;
    }
    masks_.push_back(mask);
    coeffs_.push_back(c);
    denominator_ = lcm(denominator_, boost::multiprecision::denominator(c));
  }

  const BigInt limit = BigInt(1) << 62;
  BigInt magnitude = 0;
  scaled_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    const Rational scaled = c * Rational(denominator_);
    const BigInt num = boost::multiprecision::numerator(scaled);
    magnitude += num < 0 ? BigInt(-num) : num;
    if (magnitude >= limit) {
      fits_ = false;
      scaled_.clear();
      return;
    }
    scaled_.push_back(num.convert_to<std::int64_t>());
  }
}

Rational PackedPolynomial::value(std::uint64_t z) const {
  if (fits_) return Rational(BigInt(scaled_value(z)), denominator_);
  Rational total = 0;
  for (std::size_t t = 0; t < masks_.size(); ++t) {
    if ((z & masks_[t]) == masks_[t]) total += coeffs_[t];
  }
  return total;
}

}  // namespace qaoadepth
