#pragma once

#include <map>
#include <set>
#include <vector>

#include "jordan/isomorphism.hpp"

namespace jordan {

/// Aut(J)-orbits on the admissible r-dimensional subspaces of H^2 over F_p.
struct OrbitReport {
  FieldSpec field;
  std::size_t grassmann_r = 0;
  std::size_t h2_dim = 0;
  std::size_t total_subspaces = 0;
  std::size_t total_admissible = 0;
  std::size_t orbit_count = 0;
  std::size_t aut_group_order = 0;
  /// One basis (r cocycles) per orbit, ordered by canonical key.
  std::vector<std::vector<Cocycle>> orbit_representatives;
  std::vector<std::size_t> orbit_sizes;

  /// Orbit index of span(cocycles) mod B^2, or nullopt when not admissible.
  std::optional<std::size_t> orbit_of(const std::vector<Cocycle>& cocycles) const {
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& c : cocycles) {
      Vector x = spaces.h2_coordinates(c.reduce(field));
      std::vector<std::uint32_t> r;
      for (auto& s : x) r.push_back(s.residue_value());
      rows.push_back(r);
    }
    auto key = canonical(rows);
    if (key.size() != grassmann_r * h2_dim) return std::nullopt;
    auto it = orbit_index.find(key);
    if (it == orbit_index.end()) return std::nullopt;
    return it->second;
  }

  CocycleSpaces spaces;
  std::map<std::vector<std::uint32_t>, std::size_t> orbit_index;

  /// Flattened RREF of the row span; shorter than r*h when rows are dependent.
  std::vector<std::uint32_t> canonical(std::vector<std::vector<std::uint32_t>> rows) const {
    detail::Fp F{field.characteristic()};
    std::size_t rank = 0, cols = h2_dim;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      std::uint32_t inv = F.inv(rows[rank][c]);
      for (auto& x : rows[rank]) x = F.mul(x, inv);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][c] == 0) continue;
        std::uint32_t f = rows[r][c];
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
      }
      ++rank;
    }
    std::vector<std::uint32_t> key;
    for (std::size_t r = 0; r < rank; ++r) key.insert(key.end(), rows[r].begin(), rows[r].end());
    return key;
  }
};

namespace detail {

/// Every r x h reduced row echelon matrix over F_p, flattened.
inline void enumerate_rref(std::size_t r, std::size_t h, std::uint32_t p,
                           const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (r > h) return;
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_piv(h, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = piv[i] + 1; c < h; ++c)
        if (!is_piv[c]) free.push_back({i, c});
    std::vector<std::uint32_t> m(r * h, 0), digits(free.size(), 0);
    for (std::size_t i = 0; i < r; ++i) m[i * h + piv[i]] = 1;
    while (true) {
      for (std::size_t q = 0; q < free.size(); ++q) m[free[q].first * h + free[q].second] = digits[q];
      visit(m);
      std::size_t q = 0;
      while (q < digits.size() && digits[q] == p - 1) digits[q++] = 0;
      if (q == digits.size()) break;
      ++digits[q];
    }
    std::size_t i = r;
    while (i > 0 && piv[i - 1] == h - r + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t k = i; k < r; ++k) piv[k] = piv[k - 1] + 1;
  }
}

}  // namespace detail

inline OrbitReport orbit_census(const Algebra& A, const FieldSpec& field, std::size_t r) {
  if (r != 1 && r != 2) throw Error("orbit census supports r = 1 or 2");
  if (!field.is_prime_field()) throw InvalidField("orbit census needs a prime field");
  Algebra a = reduce_to_field(A, field);
  const std::size_t n = a.dim();
  detail::Fp F{field.characteristic()};
  OrbitReport rep;
  rep.field = field;
  rep.grassmann_r = r;
  rep.spaces = cocycle_spaces(a);
  const CocycleSpaces& S = rep.spaces;
  const std::size_t h = S.h2_reps.size();
  rep.h2_dim = h;
  auto auts = enumerate_automorphisms(a, field);
  rep.aut_group_order = auts.size();

  // Left inverse of [reps | b2] so that coordinates are a single product.
  std::vector<Vector> cols;
  for (const auto& c : S.h2_reps) cols.push_back(c.upper());
  for (const auto& v : S.b2.vectors()) cols.push_back(v);
  const std::size_t N = upper_size(n);
  Matrix K = Matrix::from_columns(cols, N, field);
  Matrix aug(N, cols.size() + N, field);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) aug(i, j) = K(i, j);
    aug(i, cols.size() + i) = Scalar::one(field);
  }
  Matrix E = rref(aug).reduced;
  std::vector<std::vector<std::uint32_t>> P(h, std::vector<std::uint32_t>(N));
  for (std::size_t k = 0; k < h; ++k)
    for (std::size_t i = 0; i < N; ++i) P[k][i] = E(k, cols.size() + i).residue_value();

  std::vector<std::vector<std::uint32_t>> repmat(h, std::vector<std::uint32_t>(n * n));
  for (std::size_t k = 0; k < h; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) repmat[k][i * n + j] = S.h2_reps[k].matrix()(i, j).residue_value();

  // Action matrices: column k holds the coordinates of phi . rep_k.
  std::vector<std::vector<std::uint32_t>> action;
  action.reserve(auts.size());
  for (const auto& phi : auts) {
    std::vector<std::uint32_t> ph(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ph[i * n + j] = phi(i, j).residue_value();
    std::vector<std::uint32_t> M(h * h, 0);
    for (std::size_t k = 0; k < h; ++k) {
      std::vector<std::uint32_t> T(n * n, 0), R(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < n; ++q) {
          std::uint32_t acc = 0;
          for (std::size_t j = 0; j < n; ++j) acc = F.add(acc, F.mul(repmat[k][i * n + j], ph[j * n + q]));
          T[i * n + q] = acc;
        }
      for (std::size_t pp = 0; pp < n; ++pp)
        for (std::size_t q = 0; q < n; ++q) {
          std::uint32_t acc = 0;
          for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, F.mul(ph[i * n + pp], T[i * n + q]));
          R[pp * n + q] = acc;
        }
      for (std::size_t kk = 0; kk < h; ++kk) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j)
            acc = F.add(acc, F.mul(P[kk][upper_index(n, i, j)], R[i * n + j]));
        M[kk * h + k] = acc;
      }
    }
    action.push_back(std::move(M));
  }

  // Admissibility: the joint radical of the subspace meets Ann(J) trivially.
  auto zb = annihilator(a).vectors();
  std::vector<std::vector<std::uint32_t>> zres;
  for (auto& z : zb) {
    std::vector<std::uint32_t> v;
    for (auto& s : z) v.push_back(s.residue_value());
    zres.push_back(v);
  }
  auto admissible = [&](const std::vector<std::uint32_t>& key) {
    if (zres.empty()) return true;
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t row = 0; row < r; ++row) {
      std::vector<std::uint32_t> form(n * n, 0);
      for (std::size_t k = 0; k < h; ++k) {
        std::uint32_t x = key[row * h + k];
        if (!x) continue;
        for (std::size_t q = 0; q < n * n; ++q) form[q] = F.add(form[q], F.mul(x, repmat[k][q]));
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::uint32_t> line(zres.size(), 0);
        for (std::size_t c = 0; c < zres.size(); ++c) {
          std::uint32_t acc = 0;
          for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, F.mul(zres[c][i], form[i * n + j]));
          line[c] = acc;
        }
        rows.push_back(line);
      }
    }
    return detail::fp_rank(rows, F) == zres.size();
  };

  std::vector<std::vector<std::uint32_t>> keys;
  detail::enumerate_rref(r, h, F.p, [&](const std::vector<std::uint32_t>& m) {
    ++rep.total_subspaces;
    if (admissible(m)) keys.push_back(m);
  });
  rep.total_admissible = keys.size();
  std::set<std::vector<std::uint32_t>> pending(keys.begin(), keys.end());

  auto image = [&](const std::vector<std::uint32_t>& M, const std::vector<std::uint32_t>& key) {
    std::vector<std::vector<std::uint32_t>> rows(r, std::vector<std::uint32_t>(h, 0));
    for (std::size_t row = 0; row < r; ++row)
      for (std::size_t kk = 0; kk < h; ++kk) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < h; ++k) acc = F.add(acc, F.mul(M[kk * h + k], key[row * h + k]));
        rows[row][kk] = acc;
      }
    return rep.canonical(rows);
  };

  for (const auto& key : keys) {
    if (!pending.count(key)) continue;
    std::set<std::vector<std::uint32_t>> orbit{key};
    for (const auto& M : action) orbit.insert(image(M, key));
    std::size_t id = rep.orbit_count++;
    for (const auto& k : orbit) {
      if (!pending.erase(k)) throw std::logic_error("orbit left the admissible set");
      rep.orbit_index[k] = id;
    }
    rep.orbit_sizes.push_back(orbit.size());
    std::vector<Cocycle> basis;
    for (std::size_t row = 0; row < r; ++row) {
      Cocycle c = Cocycle::zero(n, field);
      for (std::size_t k = 0; k < h; ++k)
        if (key[row * h + k]) c = c + Scalar::residue(key[row * h + k], field) * S.h2_reps[k];
      basis.push_back(c);
    }
    rep.orbit_representatives.push_back(std::move(basis));
  }
  return rep;
}

}  // namespace jordan
