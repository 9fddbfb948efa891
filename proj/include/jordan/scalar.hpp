#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <variant>

#include "jordan/errors.hpp"
#include "jordan/field.hpp"

namespace jordan {

/// Exact field element: an arbitrary-precision rational or a residue mod p.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
  static Scalar one(const FieldSpec& f) { return from_int(1, f); }

  static Scalar from_int(long v, const FieldSpec& f) {
    if (f.is_rational()) return Scalar(mpq_class(v));
    long p = static_cast<long>(f.characteristic());
    long r = v % p;
    if (r < 0) r += p;
    return Scalar(Residue{static_cast<std::uint32_t>(r), f.characteristic()});
  }

  static Scalar from_rational(const mpq_class& q, const FieldSpec& f) {
    mpq_class c = q;
    c.canonicalize();
    if (f.is_rational()) return Scalar(c);
    mpz_class p = f.characteristic();
    mpz_class den = c.get_den() % p;
    if (den == 0)
      throw FieldReductionError("denominator of " + c.get_str() + " vanishes mod " + p.get_str());
    mpz_class num = c.get_num() % p;
    if (num < 0) num += p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), f.characteristic()});
  }

  static Scalar residue(std::uint64_t v, const FieldSpec& f) {
    if (!f.is_prime_field()) throw FieldMismatch("residue requested in Q");
    return Scalar(Residue{static_cast<std::uint32_t>(v % f.characteristic()), f.characteristic()});
  }

  /// Parses an integer or fraction such as "-3/4" into the field.
  static Scalar parse(const std::string& text, const FieldSpec& f) {
    std::string t;
    for (char ch : text)
      if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw ParseError("empty scalar");
    if (t[0] == '+') t = t.substr(1);
    auto slash = t.find('/');
    auto valid_int = [](const std::string& s) {
      std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
      throw ParseError("not a scalar: '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return from_rational(mpq_class(n, d), f);
  }

  FieldSpec field() const {
    if (auto* r = std::get_if<Residue>(&value_)) return FieldSpec::trusted(r->p);
    return FieldSpec::rationals();
  }

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }

  bool is_zero() const {
    if (auto* r = std::get_if<Residue>(&value_)) return r->v == 0;
    return std::get<mpq_class>(value_) == 0;
  }

  bool is_one() const {
    if (auto* r = std::get_if<Residue>(&value_)) return r->v == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  const mpq_class& rational() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldMismatch("scalar is not rational");
  }

  std::uint32_t residue_value() const {
    if (auto* r = std::get_if<Residue>(&value_)) return r->v;
    throw FieldMismatch("scalar is not a residue");
  }

  Scalar operator-() const {
    if (auto* r = std::get_if<Residue>(&value_))
      return Scalar(Residue{r->v == 0 ? 0 : r->p - r->v, r->p});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
      return Scalar(mpq_class(a.rational() + b.rational()));
    auto [x, y, p] = a.residues(b);
    return Scalar(Residue{static_cast<std::uint32_t>((std::uint64_t(x) + y) % p), p});
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
      return Scalar(mpq_class(a.rational() - b.rational()));
    auto [x, y, p] = a.residues(b);
    return Scalar(Residue{static_cast<std::uint32_t>((std::uint64_t(x) + p - y) % p), p});
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
      return Scalar(mpq_class(a.rational() * b.rational()));
    auto [x, y, p] = a.residues(b);
    return Scalar(Residue{static_cast<std::uint32_t>((std::uint64_t(x) * y) % p), p});
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (auto* r = std::get_if<Residue>(&value_)) {
      std::uint64_t result = 1, base = r->v, e = r->p - 2;
      while (e) {
        if (e & 1) result = result * base % r->p;
        base = base * base % r->p;
        e >>= 1;
      }
      return Scalar(Residue{static_cast<std::uint32_t>(result), r->p});
    }
    return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
  }

  Scalar pow(unsigned e) const {
    Scalar result = one(field()), base = *this;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() != b.is_rational()) throw FieldMismatch("comparing Q with F_p");
    if (a.is_rational()) return a.rational() == b.rational();
    auto& x = std::get<Residue>(a.value_);
    auto& y = std::get<Residue>(b.value_);
    if (x.p != y.p) throw FieldMismatch("F" + std::to_string(x.p) + " vs F" + std::to_string(y.p));
    return x.v == y.v;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->v);
    return std::get<mpq_class>(value_).get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  struct Residue {
    std::uint32_t v;
    std::uint32_t p;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> residues(const Scalar& b) const {
    auto* x = std::get_if<Residue>(&value_);
    auto* y = std::get_if<Residue>(&b.value_);
    if (!x || !y) throw FieldMismatch("mixing Q and F_p");
    if (x->p != y->p) throw FieldMismatch("F" + std::to_string(x->p) + " vs F" + std::to_string(y->p));
    return {x->v, y->v, x->p};
  }

  std::variant<mpq_class, Residue> value_;
};

/// Maximum characteristic for which roots are found by exhaustive search.
inline constexpr std::uint32_t kRootSearchLimit = 101;

/// n-th root of x in its field, or nullopt when none exists there.
/// Over Q only exact rational roots are found; over F_p the smallest residue root is returned.
inline std::optional<Scalar> nth_root(const Scalar& x, unsigned n) {
  if (n == 0) throw Error("zeroth root requested");
  FieldSpec f = x.field();
  if (x.is_zero()) return Scalar::zero(f);
  if (n == 1) return x;
  if (f.is_prime_field()) {
    if (f.characteristic() > kRootSearchLimit)
      throw Error("root search supports p <= " + std::to_string(kRootSearchLimit));
    for (std::uint32_t r = 1; r < f.characteristic(); ++r) {
      Scalar c = Scalar::residue(r, f);
      if (c.pow(n) == x) return c;
    }
    return std::nullopt;
  }
  const mpq_class& q = x.rational();
  mpz_class num = q.get_num(), den = q.get_den();
  bool negative = num < 0;
  if (negative) {
    if (n % 2 == 0) return std::nullopt;
    num = -num;
  }
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  mpq_class root(negative ? mpz_class(-rn) : rn, rd);
  root.canonicalize();
  return Scalar::from_rational(root, f);
}

/// Like nth_root but raises RootNotInField when no root exists.
inline Scalar require_root(const Scalar& x, unsigned n) {
  auto r = nth_root(x, n);
  if (!r) throw RootNotInField("no " + std::to_string(n) + "-th root of " + x.str() + " in " + x.field().str());
  return *r;
}

}  // namespace jordan
