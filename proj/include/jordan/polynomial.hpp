#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "jordan/scalar.hpp"

namespace jordan {

/// Values for the catalog parameters alpha and beta.
using ParamBinding = std::map<std::string, Scalar>;

/// Polynomial in alpha and beta with rational coefficients.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(const mpq_class& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }

  static ParamPoly variable(const std::string& name) {
    ParamPoly p;
    if (name == "alpha")
      p.terms_[{1, 0}] = 1;
    else if (name == "beta")
      p.terms_[{0, 1}] = 1;
    else
      throw ParseError("unknown parameter '" + name + "'");
    return p;
  }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        auto e = std::make_pair(ea.first + eb.first, ea.second + eb.second);
        out.terms_[e] += ca * cb;
      }
    out.prune();
    return out;
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a;
    for (const auto& [e, c] : b.terms_) out.terms_[e] += c;
    out.prune();
    return out;
  }

  ParamPoly operator-() const {
    ParamPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  bool is_zero() const { return terms_.empty(); }

  bool uses(const std::string& name) const {
    for (const auto& [e, c] : terms_)
      if ((name == "alpha" && e.first) || (name == "beta" && e.second)) return true;
    return false;
  }

  Scalar evaluate(const ParamBinding& binding, const FieldSpec& f) const {
    Scalar out = Scalar::zero(f);
    for (const auto& [e, c] : terms_) {
      Scalar term = Scalar::from_rational(c, f);
      if (e.first) term *= lookup(binding, "alpha", f).pow(e.first);
      if (e.second) term *= lookup(binding, "beta", f).pow(e.second);
      out += term;
    }
    return out;
  }

 private:
  static Scalar lookup(const ParamBinding& binding, const std::string& name, const FieldSpec& f) {
    auto it = binding.find(name);
    if (it == binding.end()) throw InadmissibleParameter("missing value for " + name);
    const Scalar& v = it->second;
    if (v.field() == f) return v;
    if (v.is_rational()) return Scalar::from_rational(v.rational(), f);
    throw FieldMismatch("parameter " + name + " lives in " + v.field().str());
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  std::map<std::pair<unsigned, unsigned>, mpq_class> terms_;
};

}  // namespace jordan
