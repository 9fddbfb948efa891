#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "jordan/fp_search.hpp"

namespace jordan {

/// Linear map src -> dst; column j is the image of the j-th source basis vector.
struct Morphism {
  Algebra src;
  Algebra dst;
  Matrix mat;
};

/// True iff mat is invertible and multiplicative on basis pairs.
inline bool verify_isomorphism(const Morphism& m) {
  if (m.src.dim() != m.dst.dim()) throw DimensionMismatch("source and target dimensions differ");
  require_same_field(m.src.field(), m.dst.field());
  require_same_field(m.src.field(), m.mat.field());
  if (m.mat.rows() != m.dst.dim() || m.mat.cols() != m.src.dim()) throw DimensionMismatch("map matrix size");
  if (determinant(m.mat).is_zero()) return false;
  return is_homomorphism_matrix(m.src, m.dst, m.mat);
}

enum class Separation { distinct, inconclusive };

inline const char* to_string(Separation s) { return s == Separation::distinct ? "distinct" : "inconclusive"; }

/// Different invariant vectors certify non-isomorphism.
inline Separation invariant_separation(const Algebra& A, const Algebra& B) {
  require_same_field(A.field(), B.field());
  return invariant_vector(A) == invariant_vector(B) ? Separation::inconclusive : Separation::distinct;
}

struct SearchOptions {
  std::uint64_t node_budget = 400'000'000;
  /// Reject early when invariant vectors over the search field differ.
  bool invariant_filter = true;
};

/// Exhaustive search for an isomorphism A -> B over the prime field.
inline std::optional<Morphism> search_isomorphism(const Algebra& A, const Algebra& B, const FieldSpec& field,
                                                  const SearchOptions& options = {}) {
  if (!field.is_prime_field()) throw InvalidField("search needs a prime field");
  Algebra a = reduce_to_field(A, field), b = reduce_to_field(B, field);
  if (a.dim() != b.dim()) return std::nullopt;
  if (options.invariant_filter && invariant_vector(a) != invariant_vector(b)) return std::nullopt;
  detail::LayeredSearch engine(a, b);
  std::optional<Morphism> found;
  engine.run(false, options.node_budget, [&](const Matrix& phi) {
    Morphism m{a, b, phi};
    if (!verify_isomorphism(m)) throw std::logic_error("search produced an invalid map");
    found = std::move(m);
    return false;
  });
  return found;
}

/// Upper bound on p^(g*dim) accepted by enumerate_automorphisms.
inline constexpr double kEnumerationGuard = 1e8;

/// All automorphisms of A over the prime field.
inline std::vector<Matrix> enumerate_automorphisms(const Algebra& A, const FieldSpec& field,
                                                   std::uint64_t node_budget = 400'000'000) {
  if (!field.is_prime_field()) throw InvalidField("enumeration needs a prime field");
  Algebra a = reduce_to_field(A, field);
  detail::LayeredSearch engine(a, a);
  double candidates = std::pow(static_cast<double>(field.characteristic()),
                               static_cast<double>(engine.generator_count() * a.dim()));
  if (candidates > kEnumerationGuard)
    throw BudgetExceeded("p^(g*dim) = " + std::to_string(candidates) + " candidates");
  std::vector<Matrix> out;
  engine.run(true, node_budget, [&](const Matrix& phi) {
    out.push_back(phi);
    return true;
  });
  return out;
}

}  // namespace jordan
