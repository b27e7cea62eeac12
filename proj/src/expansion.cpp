#include "expandres/expansion.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "expandres/error.hpp"

namespace expandres {

namespace {

void require_mingen(const MonomialIdeal& ideal, const Monomial& n) {
  require_same_context(ideal.mingens().empty() ? n : ideal.mingens().front(), n);
  if (!ideal.is_minimal_generator(n)) {
    throw InvalidInput(n.to_string() + " is not a minimal generator of " + ideal.to_string());
  }
}

void require_member(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m) {
  if (!c_contains(ideal, n, m)) {
    throw PreconditionError(m.to_string() + " is not in C_I(" + n.to_string() + ") for I = " + ideal.to_string());
  }
}

void enumerate_rec(const CSpec& spec, std::size_t i, std::uint64_t budget, std::vector<Monomial::Exponent>& d,
                   const ContextPtr& ctx, std::vector<Monomial>& out) {
  if (i == d.size()) {
    Monomial m(ctx, d);
    if (c_membership(spec, m).member) out.push_back(std::move(m));
    return;
  }
  const bool required = std::binary_search(spec.required.begin(), spec.required.end(), i);
  const std::uint64_t lo = required ? spec.c[i] : 0;
  for (std::uint64_t e = lo; e <= budget; ++e) {
    d[i] = e;
    enumerate_rec(spec, i + 1, budget - e, d, ctx, out);
  }
  d[i] = 0;
}

}  // namespace

CSpec make_cspec(const Monomial& base, const Monomial& n) {
  if (!base.divides(n)) {
    throw InvalidInput("base " + base.to_string() + " does not divide " + n.to_string());
  }
  CSpec spec;
  spec.g.assign(base.exponents().begin(), base.exponents().end());
  spec.c.assign(n.exponents().begin(), n.exponents().end());
  for (std::size_t i = 0; i < spec.c.size(); ++i) {
    (spec.c[i] != spec.g[i] ? spec.required : spec.droppable).push_back(i);
  }
  return spec;
}

std::string CMembership::explain(const ContextPtr& ctx) const {
  if (member) return "member";
  if (zero) return "the unit monomial is never a member";
  if (short_required) {
    return "variable " + ctx->name(*short_required) + " lies in Supp(n/gcd) but its exponent in m is below n's";
  }
  return "no variable outside Supp(n/gcd) has a smaller exponent in m than in n";
}

CMembership c_membership(const CSpec& spec, const Monomial& m) {
  CMembership out;
  if (m.num_vars() != spec.c.size()) throw StructuralError("monomial and C-spec have different lengths");
  out.zero = m.is_unit();
  for (auto i : spec.required) {
    if (m[i] < spec.c[i]) {
      out.short_required = i;
      break;
    }
  }
  out.no_drop = std::none_of(spec.droppable.begin(), spec.droppable.end(),
                             [&](std::size_t i) { return m[i] < spec.c[i]; });
  out.member = !out.zero && !out.short_required && !out.no_drop;
  return out;
}

bool c_contains_base(const Monomial& base, const Monomial& n, const Monomial& m) {
  require_same_context(n, m);
  return c_membership(make_cspec(base, n), m).member;
}

bool c_contains(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m) {
  require_mingen(ideal, n);
  return c_contains_base(ideal_gcd(ideal), n, m);
}

bool c_nonempty(const CSpec& spec) {
  const bool has_drop = std::any_of(spec.droppable.begin(), spec.droppable.end(),
                                    [&](std::size_t i) { return spec.c[i] > 0; });
  if (spec.c.size() == 1) return has_drop && spec.c[0] != 1;
  return has_drop;
}

bool c_contains_via_divisibility(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m, std::size_t cap) {
  require_mingen(ideal, n);
  if (m.is_unit()) throw InvalidInput("m must not be the unit monomial");
  if (ideal.contains(m)) throw InvalidInput(m.to_string() + " already lies in " + ideal.to_string());
  // The lattice is generated by mingens(I) ∪ {m} as given, not re-minimized:
  // generators of I that m divides must still be seen here.
  const LcmLattice lattice = lcm_lattice(ideal, cap);
  for (const auto& x : lattice.elements()) {
    const Monomial u = lcm(m, x);
    if (!(u == m) && !n.divides(u)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Witnesses

void ExpansionWitness::validate() const {
  auto fail = [&](const std::string& what) {
    throw TheoremViolation("witness for " + m.to_string() + " in C_" + base.to_string() + "(" + n.to_string() +
                           "): " + what);
  };
  if (!(m * v == n * w)) fail("m*v != n*w");
  if (v.is_unit()) fail("v = 1");
  if (w.is_unit() && v == n) fail("w = 1 and v = n");
  if (!gcd_monomials(v, n.quotient(base)).is_unit()) fail("gcd(v, n/gcd) != 1");
  if (!gcd_monomials(v, w).is_unit()) fail("gcd(v, w) != 1");
  if (!v.divides(n)) fail("v does not divide n");
  if (!(lcm(base, n.quotient(v)) == n)) fail("lcm(gcd, n/v) != n");
}

ExpansionWitness decompose_witness(const Monomial& base, const Monomial& n, const Monomial& m) {
  if (!c_contains_base(base, n, m)) {
    throw PreconditionError(m.to_string() + " is not in C_" + base.to_string() + "(" + n.to_string() + ")");
  }
  std::vector<Monomial::Exponent> v(n.num_vars()), w(n.num_vars());
  for (std::size_t i = 0; i < n.num_vars(); ++i) {
    v[i] = n[i] > m[i] ? n[i] - m[i] : 0;
    w[i] = m[i] > n[i] ? m[i] - n[i] : 0;
  }
  ExpansionWitness out{base, n, m, Monomial(n.context(), std::move(v)), Monomial(n.context(), std::move(w))};
  out.validate();
  return out;
}

ExpansionWitness decompose_witness(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m) {
  require_mingen(ideal, n);
  return decompose_witness(ideal_gcd(ideal), n, m);
}

std::vector<Monomial> enumerate_c_base(const Monomial& base, const Monomial& n, std::uint64_t max_degree) {
  if (max_degree < 1) throw InvalidInput("enumerate_c needs max_degree >= 1");
  const CSpec spec = make_cspec(base, n);
  std::vector<Monomial> out;
  if (!c_nonempty(spec)) return out;
  std::vector<Monomial::Exponent> d(n.num_vars(), 0);
  enumerate_rec(spec, 0, max_degree, d, n.context(), out);
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::vector<Monomial> enumerate_c(const MonomialIdeal& ideal, const Monomial& n, std::uint64_t max_degree) {
  require_mingen(ideal, n);
  return enumerate_c_base(ideal_gcd(ideal), n, max_degree);
}

std::pair<bool, bool> containment_check(const Monomial& u, const Monomial& m, const Monomial& n,
                                        const Monomial& h) {
  if (!u.divides(m) || !m.divides(n)) {
    throw InvalidInput("containment_check needs u | m | n");
  }
  if (!c_contains_base(u, n, h)) {
    throw InvalidInput(h.to_string() + " is not in C_" + u.to_string() + "(" + n.to_string() + ")");
  }
  return {c_contains_base(m, n, h), c_contains_base(u, m, h)};
}

// ---------------------------------------------------------------------------
// Complex expansions

LabeledComplex expand_pendant(const LabeledComplex& complex, Vertex n_vertex, const Monomial& m) {
  const Monomial& n = complex.label(n_vertex);
  require_same_context(n, m);
  if (m.divides(n)) {
    throw WrongOperation(m.to_string() + " divides " + n.to_string() + "; use relabel_vertex instead");
  }
  const MonomialIdeal ideal(complex.context(), complex.label_list());
  if (ideal.contains(m)) throw InvalidInput(m.to_string() + " already lies in " + ideal.to_string());
  const Vertex fresh = complex.labels().rbegin()->first + 1;
  auto facets = complex.complex().facets();
  facets.push_back(Face{n_vertex, fresh});
  auto labels = complex.labels();
  labels.emplace(fresh, m);
  return LabeledComplex(SimplicialComplex::from_facets(std::move(facets)), std::move(labels));
}

LabeledComplex relabel_vertex(const LabeledComplex& complex, Vertex n_vertex, const Monomial& m) {
  const Monomial n = complex.label(n_vertex);
  require_same_context(n, m);
  if (!m.divides(n)) {
    throw WrongOperation(m.to_string() + " does not divide " + n.to_string() + "; use expand_pendant instead");
  }
  const MonomialIdeal ideal(complex.context(), complex.label_list());
  require_mingen(ideal, n);
  require_member(ideal, n, m);
  auto labels = complex.labels();
  labels.insert_or_assign(n_vertex, m);
  return LabeledComplex(complex.complex(), std::move(labels));
}

std::vector<Monomial> new_mingens(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m) {
  require_member(ideal, n, m);
  std::vector<Monomial> out;
  const bool divides = m.divides(n);
  for (const auto& g : ideal.mingens()) {
    if (!(divides && g == n)) out.push_back(g);
  }
  out.push_back(m);
  if (!(MonomialIdeal(ideal.context(), out) == ideal.with_generator(m)) ||
      minimal_generators(out).size() != out.size()) {
    throw TheoremViolation("predicted minimal generators of I+(" + m.to_string() + ") are wrong");
  }
  return out;
}

LatticeComparison lattice_comparison(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                     std::size_t cap) {
  require_member(ideal, n, m);
  if (!m.divides(n)) throw PreconditionError("lattice_comparison needs m | n");
  const LcmLattice before = lcm_lattice(ideal, cap);
  const LcmLattice after = lcm_lattice(ideal.with_generator(m), cap);

  LatticeComparison out;
  std::vector<Monomial> rest_before, rest_after;
  std::copy_if(before.elements().begin(), before.elements().end(), std::back_inserter(rest_before),
               [&](const Monomial& u) { return !(u == n); });
  std::copy_if(after.elements().begin(), after.elements().end(), std::back_inserter(rest_after),
               [&](const Monomial& u) { return !(u == m); });
  std::sort(rest_before.begin(), rest_before.end());
  std::sort(rest_after.begin(), rest_after.end());
  out.sets_equal = rest_before == rest_after && before.contains(n) && after.contains(m);
  out.common = rest_before;
  std::sort(out.common.begin(), out.common.end(), graded_less);

  auto image = [&](const Monomial& u) { return u == n ? m : u; };
  std::vector<Monomial> mapped;
  for (const auto& u : before.elements()) mapped.push_back(image(u));
  std::vector<Monomial> target = after.elements();
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  out.order_isomorphic = mapped == target;
  for (const auto& a : before.elements()) {
    for (const auto& b : before.elements()) {
      if (a.divides(b) != image(a).divides(image(b))) out.order_isomorphic = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Betti predictions

BettiTable predicted_betti(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m, const BettiTable& base) {
  require_member(ideal, n, m);
  if (!(*base.context() == *ideal.context())) throw StructuralError("betti table over a different context");
  BettiTable out = base;
  out.set(1, m, 1);
  if (m.divides(n)) {
    out.set(1, n, 0);
  } else {
    out.add(2, lcm(m, n), 1);
  }
  return out;
}

GradedClauseReadings graded_clause_readings(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                            const BettiTable& base, const BettiTable& predicted) {
  const bool divides = m.divides(n);
  const auto deg_m = m.degree();
  const auto deg_n = n.degree();
  const auto deg_l = lcm(m, n).degree();
  (void)ideal;

  struct Clause {
    int j;
    std::uint64_t p;
    bool applies;
    int delta;
  };
  const Clause clauses[] = {
      {1, deg_m, deg_n != deg_m, +1},
      {1, deg_m, !divides, +1},
      {1, deg_n, divides, -1},
      {2, deg_l, !divides, +1},
  };

  auto base_graded = base.graded();
  std::map<std::pair<int, std::uint64_t>, std::int64_t> keys;
  for (const auto& [k, v] : base_graded) keys[k] = static_cast<std::int64_t>(v);
  for (const auto& c : clauses) keys.try_emplace({c.j, c.p}, 0);

  auto apply = [&](bool additive) {
    std::map<std::pair<int, std::uint64_t>, std::uint64_t> out;
    for (const auto& [k, v] : keys) {
      std::int64_t value = v;
      for (const auto& c : clauses) {
        if (!c.applies || c.j != k.first || c.p != k.second) continue;
        value += c.delta;
        if (!additive) break;
      }
      if (value != 0) out[k] = static_cast<std::uint64_t>(value);
    }
    return out;
  };
  const auto derived = predicted.graded();
  return GradedClauseReadings{apply(false) == derived, apply(true) == derived};
}

BettiTable scaled_betti(const MonomialIdeal& ideal, const Monomial& v, const BettiTable& base) {
  require_same_context(Monomial(ideal.context()), v);
  if (v.is_unit()) throw InvalidInput("scaling needs v != 1");
  BettiTable out(base.context(), base.field());
  for (const auto& [key, value] : base.multigraded()) {
    out.set(key.first, key.first == 0 ? key.second : v * key.second, value);
  }
  return out;
}

ScaledExpansion expand_scaled(const MonomialIdeal& ideal, const Monomial& v, const Monomial& n, const Monomial& m,
                              const BettiTable& base) {
  require_same_context(Monomial(ideal.context()), v);
  require_same_context(v, m);
  if (v.is_unit()) throw InvalidInput("scaling needs v != 1");
  require_mingen(ideal, n);
  const MonomialIdeal scaled = ideal.scaled(v);
  const Monomial vn = v * n;
  require_member(scaled, vn, m);
  return ScaledExpansion{scaled.with_generator(m), predicted_betti(scaled, vn, m, scaled_betti(ideal, v, base))};
}

FamilyResult iterate_expansion(const MonomialIdeal& ideal, const std::vector<ExpansionStep>& steps,
                               const BettiTable& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilyResult out{ideal, base, {}, {}};
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const std::size_t index = s + 1;
    const ExpansionStep& step = steps[s];
    try {
      const MonomialIdeal& current = out.ideal;
      Monomial n(current.context());
      if (const auto* k = std::get_if<std::size_t>(&step.generator)) {
        if (*k >= current.num_mingens()) {
          throw InvalidInput("generator index " + std::to_string(*k) + " out of range");
        }
        n = current.mingens()[*k];
      } else {
        n = std::get<Monomial>(step.generator);
        require_mingen(current, n);
      }
      if (step.v.is_unit()) throw InvalidInput("scaling needs v != 1");
      const MonomialIdeal scaled = current.scaled(step.v);
      const Monomial vn = step.v * n;

      Monomial m(current.context());
      if (const auto* given = std::get_if<Monomial>(&step.addition)) {
        m = *given;
      } else {
        const auto pool = enumerate_c(scaled, vn, std::get<std::uint64_t>(step.addition));
        if (pool.empty()) throw PreconditionError("no member of C_{vI}(vn) within the degree bound");
        m = pool[rng() % pool.size()];
      }
      ScaledExpansion next = expand_scaled(current, step.v, n, m, out.table);
      const ExpansionWitness witness = decompose_witness(scaled, vn, m);

      TraceRecord rec{index, step.v, vn, m, witness.v, witness.w, m.divides(vn), next.table.totals()};
      out.ideal = std::move(next.ideal);
      out.table = std::move(next.table);
      out.ideals.push_back(out.ideal);
      out.trace.push_back(std::move(rec));
    } catch (const StepFailure&) {
      throw;
    } catch (const Error& e) {
      throw StepFailure(index, e.what());
    }
  }
  return out;
}

InvariantSummary predicted_invariants(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                      const InvariantSummary& base, const BettiTable& base_table) {
  const std::size_t num_vars = ideal.context()->size();
  if (!(invariants(base_table, num_vars) == base)) {
    throw PreconditionError("base invariants do not match the base betti table");
  }
  const BettiTable predicted = predicted_betti(ideal, n, m, base_table);
  const InvariantSummary out = invariants(predicted, num_vars);
  const bool divides = m.divides(n);

  const int expected_pd = (base.pd == 1 && !divides) ? 2 : base.pd;
  if (out.pd != expected_pd) {
    throw TheoremViolation("pd: table gives " + std::to_string(out.pd) + ", clause gives " +
                           std::to_string(expected_pd));
  }
  const auto nv = static_cast<std::int64_t>(num_vars);
  const std::int64_t expected_depth = (base.depth == nv - 1 && !divides) ? nv - 2 : base.depth;
  if (out.depth != expected_depth) {
    throw TheoremViolation("depth: table gives " + std::to_string(out.depth) + ", clause gives " +
                           std::to_string(expected_depth));
  }
  if (!divides) {
    const auto deg_m = static_cast<std::int64_t>(m.degree());
    const auto deg_l = static_cast<std::int64_t>(lcm(m, n).degree());
    const std::int64_t closed = std::max({base.reg, deg_m - 1, deg_l - 2});
    if (out.reg != closed) {
      throw TheoremViolation("reg: table gives " + std::to_string(out.reg) + ", closed formula gives " +
                             std::to_string(closed));
    }
  }
  return out;
}

}  // namespace expandres
