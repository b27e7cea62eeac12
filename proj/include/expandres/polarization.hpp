#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "expandres/monomial.hpp"

namespace expandres {

/// The grid x_{i,j}, 1 <= j <= b_i, ordered by (i, j). Grid names are
/// "<base>_<j>"; a grid name equal to a base name is rejected.
class PolarContext {
 public:
  PolarContext(ContextPtr base, std::vector<Monomial::Exponent> heights);

  const ContextPtr& base() const noexcept { return base_; }
  const ContextPtr& grid() const noexcept { return grid_; }
  const std::vector<Monomial::Exponent>& heights() const noexcept { return heights_; }
  /// Grid index of x_{i,j}, j 1-based.
  std::size_t index(std::size_t i, Monomial::Exponent j) const;
  /// (i, j) for a grid index.
  std::pair<std::size_t, Monomial::Exponent> cell(std::size_t grid_index) const;

 private:
  ContextPtr base_;
  ContextPtr grid_;
  std::vector<Monomial::Exponent> heights_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> owner_;
};

/// x_{i,1} ⋯ x_{i,a_i} over every i. Throws InvalidInput when an exponent
/// exceeds its height.
Monomial polarize_monomial(const Monomial& m, const PolarContext& ctx);

struct PolarizedIdeal {
  MonomialIdeal ideal;
  PolarContext context;
};

/// Heights from lcm(mingens(I)).
PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal);
/// Heights from lcm(mingens(I), extra...), so the extra monomials polarize too.
PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal, std::span<const Monomial> extra);

/// (m ∈ C_I(n)) == (P(m) ∈ C_{P(I)}(P(n))), heights from lcm(mingens(I), m).
bool check_polar_commutes(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m);

}  // namespace expandres
