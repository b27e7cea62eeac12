#include "expandres/polarization.hpp"

#include <algorithm>
#include <set>

#include "expandres/error.hpp"
#include "expandres/expansion.hpp"

namespace expandres {

PolarContext::PolarContext(ContextPtr base, std::vector<Monomial::Exponent> heights)
    : base_(std::move(base)), heights_(std::move(heights)) {
  if (heights_.size() != base_->size()) throw StructuralError("one height per base variable is required");
  const std::set<std::string> base_names(base_->names().begin(), base_->names().end());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    offsets_.push_back(names.size());
    for (Monomial::Exponent j = 1; j <= heights_[i]; ++j) {
      std::string name = base_->name(i) + "_" + std::to_string(j);
      if (base_names.count(name)) {
        throw InvalidInput("grid variable " + name + " collides with an input variable");
      }
      names.push_back(std::move(name));
      owner_.push_back(i);
    }
  }
  grid_ = make_context(std::move(names));
}

std::size_t PolarContext::index(std::size_t i, Monomial::Exponent j) const {
  if (i >= heights_.size() || j == 0 || j > heights_[i]) throw InvalidInput("grid cell out of range");
  return offsets_[i] + static_cast<std::size_t>(j - 1);
}

std::pair<std::size_t, Monomial::Exponent> PolarContext::cell(std::size_t grid_index) const {
  const std::size_t i = owner_.at(grid_index);
  return {i, grid_index - offsets_[i] + 1};
}

Monomial polarize_monomial(const Monomial& m, const PolarContext& ctx) {
  if (!(*m.context() == *ctx.base())) throw StructuralError("monomial is not over the polarization base");
  std::vector<Monomial::Exponent> out(ctx.grid()->size(), 0);
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] > ctx.heights()[i]) {
      throw InvalidInput("exponent of " + ctx.base()->name(i) + " in " + m.to_string() + " exceeds height " +
                         std::to_string(ctx.heights()[i]));
    }
    for (Monomial::Exponent j = 1; j <= m[i]; ++j) out[ctx.index(i, j)] = 1;
  }
  return Monomial(ctx.grid(), std::move(out));
}

PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal, std::span<const Monomial> extra) {
  std::vector<Monomial> all = ideal.mingens();
  all.insert(all.end(), extra.begin(), extra.end());
  const Monomial top = lcm_of(ideal.context(), all);
  PolarContext ctx(ideal.context(), {top.exponents().begin(), top.exponents().end()});
  std::vector<Monomial> gens;
  for (const auto& g : ideal.mingens()) gens.push_back(polarize_monomial(g, ctx));
  return PolarizedIdeal{MonomialIdeal(ctx.grid(), std::move(gens)), std::move(ctx)};
}

PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal) { return polarize_ideal(ideal, {}); }

bool check_polar_commutes(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m) {
  if (m.is_unit()) throw InvalidInput("m must not be the unit monomial");
  const bool before = c_contains(ideal, n, m);
  const PolarizedIdeal p = polarize_ideal(ideal, std::span<const Monomial>(&m, 1));
  const bool after = c_contains(p.ideal, polarize_monomial(n, p.context), polarize_monomial(m, p.context));
  return before == after;
}

}  // namespace expandres
