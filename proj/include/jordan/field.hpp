#pragma once

#include <cstdint>
#include <string>

#include "jordan/errors.hpp"

namespace jordan {

class Scalar;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Either the rationals or a prime field F_p with p >= 5.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }

  static FieldSpec prime(std::uint64_t p) {
    if (p < 5) throw InvalidField("characteristic must be at least 5, got " + std::to_string(p));
    if (p >= (1ULL << 31)) throw InvalidField("characteristic too large: " + std::to_string(p));
    if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = static_cast<std::uint32_t>(p);
    return f;
  }

  /// Accepts "Q", "p:7" or a bare prime "7".
  static FieldSpec parse(const std::string& text) {
    if (text == "Q" || text == "q" || text == "QQ") return rationals();
    std::string digits = text;
    if (digits.rfind("p:", 0) == 0 || digits.rfind("F:", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidField("cannot parse field '" + text + "'");
    if (digits.size() > 12) throw InvalidField("characteristic too large: " + digits);
    return prime(std::stoull(digits));
  }

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  std::string str() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }
  std::string spec_string() const { return p_ == 0 ? "Q" : "p:" + std::to_string(p_); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  static FieldSpec trusted(std::uint32_t p) {
    FieldSpec f;
    f.p_ = p;
    return f;
  }

  std::uint32_t p_ = 0;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw FieldMismatch(a.str() + " vs " + b.str());
}

}  // namespace jordan
