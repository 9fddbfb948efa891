#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jordan/cohomology.hpp"

namespace jordan::detail {

/// Arithmetic on residues stored as plain integers.
struct Fp {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
};

inline std::size_t fp_rank(std::vector<std::vector<std::uint32_t>> rows, const Fp& F) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
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
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

/// Backtracking over generator images for homomorphisms A -> B of nilpotent
/// algebras over F_p.  B is moved to a basis adapted to its power filtration
/// so that a coordinate of layer m of a product only depends on layers below
/// m; each relation coordinate is checked as soon as it becomes decidable.
class LayeredSearch {
 public:
  LayeredSearch(const Algebra& A, const Algebra& B) : A_(A), B_(B) {
    if (!A.field().is_prime_field() || A.field() != B.field())
      throw FieldMismatch("search needs both algebras over the same prime field");
    F_.p = A.field().characteristic();
    n_ = A.dim();
    if (B.dim() != n_) return;
    auto powA = power_filtration(A), powB = power_filtration(B);
    if (!powA.back().is_zero() || !powB.back().is_zero())
      throw Error("isomorphism search needs nilpotent algebras");
    if (powA.size() != powB.size()) return;
    for (std::size_t k = 0; k < powA.size(); ++k)
      if (powA[k].dim() != powB[k].dim()) return;
    compatible_ = true;
    if (n_ == 0) return;
    K_ = powB.size() - 1;
    setup_target(powB);
    setup_source(powA);
    setup_checks();
  }

  bool compatible() const { return compatible_; }
  std::size_t generator_count() const { return g_; }
  std::uint64_t nodes() const { return nodes_; }

  /// Calls visit(phi) for every isomorphism found (phi in original coordinates,
  /// columns = images).  visit returns false to stop.  With enumerate_all
  /// false, unconstrained top-layer coordinates are fixed to zero.
  void run(bool enumerate_all, std::uint64_t budget, const std::function<bool(const Matrix&)>& visit) {
    if (!compatible_) return;
    budget_ = budget;
    enumerate_ = enumerate_all;
    visit_ = &visit;
    stop_ = false;
    if (n_ == 0) {
      visit(Matrix(0, 0, A_.field()));
      return;
    }
    W_.assign(n_, std::vector<std::uint32_t>(n_, 0));
    dfs(0);
  }

 private:
  struct Nonzero {
    std::size_t i, j, k;
    std::uint32_t c;
  };
  struct Relation {
    std::size_t s, t;
    std::vector<std::uint32_t> coeff;  // on u_r
  };
  struct Check {
    std::size_t relation;
    std::size_t layer;
  };

  void setup_target(const std::vector<Subspace>& powB) {
    const FieldSpec& f = B_.field();
    std::vector<Vector> cols;
    layer_start_.assign(K_ + 2, 0);
    layer_dim_.assign(K_ + 1, 0);
    for (std::size_t l = 1; l <= K_; ++l) {
      auto added = extend_basis(powB[l], powB[l - 1]);
      layer_start_[l] = cols.size();
      layer_dim_[l] = added.size();
      for (auto& v : added) cols.push_back(v);
    }
    layer_start_[K_ + 1] = cols.size();
    Q_ = Matrix::from_columns(cols, n_, f);
    Algebra Bp = change_basis(B_, Q_);
    layer_of_.assign(n_, 0);
    for (std::size_t l = 1; l <= K_; ++l)
      for (std::size_t k = layer_start_[l]; k < layer_start_[l + 1]; ++k) layer_of_[k] = l;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          const Scalar& c = Bp.constant(i, j, k);
          if (c.is_zero()) continue;
          if (layer_of_[k] < layer_of_[i] + layer_of_[j]) throw std::logic_error("filtration basis is not adapted");
          nz_.push_back({i, j, k, c.residue_value()});
        }
  }

  void setup_source(const std::vector<Subspace>& powA) {
    const FieldSpec& f = A_.field();
    std::vector<std::size_t> gens = powA[1].complement_indices();
    std::vector<std::size_t> weight(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (!A_.constant(i, j, k).is_zero()) {
            ++weight[i];
            ++weight[j];
          }
    std::stable_sort(gens.begin(), gens.end(), [&](std::size_t x, std::size_t y) { return weight[x] > weight[y]; });
    g_ = gens.size();
    std::vector<Vector> u;
    for (auto i : gens) u.push_back(unit_vector(n_, i, f));
    Subspace span = Subspace::span(n_, f, u);
    def_.assign(n_, {0, 0});
    support_.assign(n_, 0);
    for (std::size_t i = 0; i < g_; ++i) support_[i] = 1u << i;
    for (std::size_t t = 0; t < u.size() && u.size() < n_; ++t)
      for (std::size_t s = 0; s <= t && u.size() < n_; ++s) {
        Vector prod = A_.multiply(u[s], u[t]);
        if (span.contains(prod)) continue;
        def_[u.size()] = {s, t};
        support_[u.size()] = support_[s] | support_[t];
        u.push_back(prod);
        span = span + Subspace::span(n_, f, {prod});
      }
    if (u.size() != n_) throw std::logic_error("generators do not generate");
    Matrix U = Matrix::from_columns(u, n_, f);
    Uinv_ = require_inverse(U);
    for (std::size_t t = 0; t < n_; ++t)
      for (std::size_t s = 0; s <= t; ++s) {
        bool defining = false;
        for (std::size_t r = g_; r < n_; ++r)
          if (def_[r].first == s && def_[r].second == t) defining = true;
        if (defining) continue;
        Vector c = Uinv_.apply(A_.multiply(u[s], u[t]));
        Relation rel{s, t, std::vector<std::uint32_t>(n_, 0)};
        for (std::size_t r = 0; r < n_; ++r) {
          rel.coeff[r] = c[r].residue_value();
          if (r < g_ && rel.coeff[r] != 0) throw std::logic_error("product outside the square");
        }
        relations_.push_back(std::move(rel));
      }
  }

  void setup_checks() {
    std::size_t blocks = g_ * K_;
    checks_.assign(blocks, {});
    for (std::size_t q = 0; q < relations_.size(); ++q) {
      const Relation& rel = relations_[q];
      std::uint32_t mask = support_[rel.s] | support_[rel.t];
      for (std::size_t r = g_; r < n_; ++r)
        if (rel.coeff[r]) mask |= support_[r];
      std::size_t top = 0;
      for (std::size_t i = 0; i < g_; ++i)
        if (mask & (1u << i)) top = i;
      for (std::size_t m = 2; m <= K_; ++m)
        if (layer_dim_[m]) checks_[(m - 2) * g_ + top].push_back({q, m});
    }
  }

  void multiply(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                std::vector<std::uint32_t>& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (const auto& z : nz_) {
      std::uint32_t v = F_.mul(x[z.i], y[z.j]);
      if (z.i != z.j) v = F_.add(v, F_.mul(x[z.j], y[z.i]));
      if (v) out[z.k] = F_.add(out[z.k], F_.mul(z.c, v));
    }
  }

  void update_products() {
    for (std::size_t r = g_; r < n_; ++r) multiply(W_[def_[r].first], W_[def_[r].second], W_[r]);
  }

  bool check(const Check& c) {
    const Relation& rel = relations_[c.relation];
    scratch_.resize(n_);
    multiply(W_[rel.s], W_[rel.t], scratch_);
    for (std::size_t k = layer_start_[c.layer]; k < layer_start_[c.layer + 1]; ++k) {
      std::uint32_t rhs = 0;
      for (std::size_t r = g_; r < n_; ++r)
        if (rel.coeff[r]) rhs = F_.add(rhs, F_.mul(rel.coeff[r], W_[r][k]));
      if (rhs != scratch_[k]) return false;
    }
    return true;
  }

  bool layer_one_independent(std::size_t upto) const {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i <= upto; ++i)
      rows.emplace_back(W_[i].begin() + static_cast<std::ptrdiff_t>(layer_start_[1]),
                        W_[i].begin() + static_cast<std::ptrdiff_t>(layer_start_[2]));
    return fp_rank(rows, F_) == upto + 1;
  }

  void leaf() {
    const FieldSpec& f = A_.field();
    Matrix Wm(n_, n_, f);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t k = 0; k < n_; ++k) Wm(k, r) = Scalar::residue(W_[r][k], f);
    Matrix phi = Q_ * Wm * Uinv_;
    if (!(*visit_)(phi)) stop_ = true;
  }

  void dfs(std::size_t b) {
    if (b == g_ * K_) {
      leaf();
      return;
    }
    std::size_t i = b % g_, l = b / g_ + 1;
    std::size_t d = layer_dim_[l], start = layer_start_[l];
    bool free_block = !enumerate_ && l == K_ && l > 1;
    std::uint64_t count = 1;
    if (!free_block)
      for (std::size_t k = 0; k < d; ++k) count *= F_.p;
    std::vector<std::uint32_t>& w = W_[i];
    for (std::uint64_t v = 0; v < count && !stop_; ++v) {
      if (++nodes_ > budget_) throw BudgetExceeded("search exceeded " + std::to_string(budget_) + " nodes");
      std::uint64_t x = v;
      for (std::size_t k = 0; k < d; ++k) {
        w[start + k] = static_cast<std::uint32_t>(x % F_.p);
        x /= F_.p;
      }
      if (l == 1 && !layer_one_independent(i)) continue;
      update_products();
      bool ok = true;
      for (const auto& c : checks_[b])
        if (!check(c)) {
          ok = false;
          break;
        }
      if (ok) dfs(b + 1);
    }
    for (std::size_t k = 0; k < d; ++k) w[start + k] = 0;
  }

  const Algebra& A_;
  const Algebra& B_;
  Fp F_{5};
  std::size_t n_ = 0, g_ = 0, K_ = 0;
  bool compatible_ = false;
  std::vector<std::size_t> layer_start_, layer_dim_, layer_of_;
  Matrix Q_, Uinv_;
  std::vector<Nonzero> nz_;
  std::vector<std::pair<std::size_t, std::size_t>> def_;
  std::vector<std::uint32_t> support_;
  std::vector<Relation> relations_;
  std::vector<std::vector<Check>> checks_;
  std::vector<std::vector<std::uint32_t>> W_;
  std::vector<std::uint32_t> scratch_;
  std::uint64_t nodes_ = 0, budget_ = 0;
  bool enumerate_ = false, stop_ = false;
  const std::function<bool(const Matrix&)>* visit_ = nullptr;
};

}  // namespace jordan::detail
