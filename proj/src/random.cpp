#include "expandres/random.hpp"

#include <algorithm>

#include "expandres/error.hpp"

namespace expandres {

ContextPtr numbered_context(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  return make_context(std::move(names));
}

Monomial random_monomial(const ContextPtr& ctx, Rng& rng, Monomial::Exponent max_exp) {
  std::vector<Monomial::Exponent> e(ctx->size());
  for (auto& x : e) x = rng.between(0, max_exp);
  return Monomial(ctx, std::move(e));
}

MonomialIdeal random_ideal(Rng& rng, const RandomIdealSpec& spec) {
  const Monomial::Exponent top = spec.square_free ? 1 : spec.max_exp;
  for (;;) {
    const auto k = static_cast<std::size_t>(rng.between(spec.min_vars, spec.max_vars));
    const ContextPtr ctx = numbered_context(k);
    const auto q = static_cast<std::size_t>(rng.between(1, spec.max_gens));
    std::vector<Monomial> gens;
    while (gens.size() < q) {
      Monomial m = random_monomial(ctx, rng, top);
      if (!m.is_unit()) gens.push_back(std::move(m));
    }
    MonomialIdeal ideal(ctx, std::move(gens));
    if (spec.require_nonunit_gcd && ideal_gcd(ideal).is_unit()) continue;
    return ideal;
  }
}

Monomial sample_member(const Monomial& base, const Monomial& n, Rng& rng, Monomial::Exponent max_w_exp) {
  const CSpec spec = make_cspec(base, n);
  std::vector<std::size_t> can_drop;
  for (auto i : spec.droppable) {
    if (spec.c[i] > 0) can_drop.push_back(i);
  }
  if (!c_nonempty(spec)) {
    throw PreconditionError("C_" + base.to_string() + "(" + n.to_string() + ") is empty");
  }
  const ContextPtr& ctx = n.context();
  for (;;) {
    std::vector<Monomial::Exponent> v(n.num_vars(), 0), w(n.num_vars(), 0);
    // v lives on droppable indices with 1 <= v_i <= c_i; at least one is set.
    const std::size_t forced = can_drop[rng.below(can_drop.size())];
    for (auto i : can_drop) {
      if (i == forced || rng.coin()) v[i] = rng.between(1, spec.c[i]);
    }
    for (std::size_t i = 0; i < n.num_vars(); ++i) {
      if (v[i] == 0) w[i] = rng.between(0, max_w_exp);
    }
    const Monomial vm(ctx, std::move(v));
    const Monomial wm(ctx, std::move(w));
    const Monomial m = (n * wm).quotient(vm);
    if (m.is_unit()) continue;
    return m;
  }
}

std::optional<Monomial> sample_nonmember(const MonomialIdeal& ideal, const Monomial& n, Rng& rng,
                                         Monomial::Exponent max_exp, std::size_t tries) {
  for (std::size_t t = 0; t < tries; ++t) {
    Monomial m = random_monomial(ideal.context(), rng, max_exp);
    if (m.is_unit() || ideal.contains(m) || m.divides(n)) continue;
    if (!c_contains(ideal, n, m)) return m;
  }
  return std::nullopt;
}

SimplicialComplex random_complex(Rng& rng, std::size_t num_vertices, std::size_t max_facets) {
  const auto count = static_cast<std::size_t>(rng.between(1, max_facets));
  std::vector<Face> facets;
  for (std::size_t k = 0; k < count; ++k) {
    Face f;
    for (Vertex v = 0; v < num_vertices; ++v) {
      if (rng.coin()) f.push_back(v);
    }
    if (f.empty()) f.push_back(static_cast<Vertex>(rng.below(num_vertices)));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

FamilyResult random_family(const MonomialIdeal& ideal, std::size_t steps, const BettiTable& base,
                           std::uint64_t seed, std::uint64_t max_degree) {
  Rng rng(seed);
  FamilyResult out{ideal, base, {}, {}};
  for (std::size_t s = 1; s <= steps; ++s) {
    const MonomialIdeal& current = out.ideal;
    if (current.is_zero()) throw StepFailure(s, "the zero ideal cannot be expanded");
    const std::size_t k = rng.below(current.num_mingens());
    const Monomial& n = current.mingens()[k];
    const Monomial g = ideal_gcd(current);
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n.num_vars(); ++i) {
      if (n[i] == g[i]) vars.push_back(i);
    }
    if (vars.empty()) throw StepFailure(s, "generator " + n.to_string() + " has no variable at the gcd exponent");
    const std::size_t var = vars[rng.below(vars.size())];
    const Monomial v = Monomial::from_support(current.context(), std::span<const std::size_t>(&var, 1));
    const std::uint64_t bound = max_degree != 0 ? max_degree : (v * n).degree();

    const std::uint64_t step_seed = rng.raw();
    auto run = [&]() {
      try {
        return iterate_expansion(current, {ExpansionStep{v, k, bound}}, out.table, step_seed);
      } catch (const StepFailure& e) {
        const std::string what = e.what();
        throw StepFailure(s, what.substr(what.find(": ") + 2));
      }
    };
    FamilyResult one = run();
    TraceRecord rec = std::move(one.trace.front());
    rec.step = s;
    out.ideal = std::move(one.ideal);
    out.table = std::move(one.table);
    out.ideals.push_back(out.ideal);
    out.trace.push_back(std::move(rec));
  }
  return out;
}

}  // namespace expandres
