// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
// Time limits are wall-clock seconds for the whole criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "expandres/cm.hpp"
#include "expandres/error.hpp"
#include "expandres/expansion.hpp"
#include "expandres/polarization.hpp"
#include "expandres/random.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s AC%d %s (%.3f s, limit %.0f s)", pass ? "PASS" : "FAIL", id, name, s, limit_s);
  if (!out.ok) std::printf(": %s", out.detail.str().c_str());
  if (out.ok && !in_time) std::printf(": time limit exceeded");
  std::printf("\n");
  std::fflush(stdout);
}

std::string show(const std::vector<std::uint64_t>& t) { return io::format_totals(t); }

// Random (I, n) with C_I(n) nonempty and at least two minimal generators,
// since one-generator ideals make every expansion trivial.
std::pair<MonomialIdeal, Monomial> random_pair(Rng& rng, const RandomIdealSpec& spec = {}) {
  for (;;) {
    MonomialIdeal I = random_ideal(rng, spec);
    if (I.num_mingens() < 2) continue;
    const Monomial n = I.mingens()[rng.below(I.num_mingens())];
    if (c_nonempty(make_cspec(ideal_gcd(I), n))) return {std::move(I), n};
  }
}

std::set<oracle::Mask> masks(const SimplicialComplex& c) {
  std::set<oracle::Mask> out;
  for (const auto& f : c.faces()) {
    oracle::Mask m = 0;
    for (auto v : f) m |= oracle::Mask{1} << v;
    out.insert(m);
  }
  return out;
}

// Collapsing can lower the dimension, which shortens the oracle's vector.
std::vector<std::size_t> trimmed(std::vector<std::size_t> h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

void ac1(Outcome& o) {
  auto x = vars("x1 x2 x3 x4");
  const auto I = ideal(x, {"x1^2*x2*x4", "x1*x2^2*x3^2", "x1*x2*x3^3"});
  const BettiTable t = betti_oracle(I, QQ);
  BettiTable want(x, QQ);
  want.set(0, Monomial(x), 1);
  for (const char* u : {"x1^2*x2*x4", "x1*x2^2*x3^2", "x1*x2*x3^3"}) want.set(1, mono(x, u), 1);
  for (const char* u : {"x1*x2^2*x3^3", "x1^2*x2^2*x3^2*x4", "x1^2*x2*x3^3*x4"}) want.set(2, mono(x, u), 1);
  want.set(3, mono(x, "x1^2*x2^2*x3^3*x4"), 1);
  o.expect(t == want, "multigraded entries differ");
  o.expect(t.totals() == std::vector<std::uint64_t>{1, 3, 3, 1}, "totals " + show(t.totals()));
}

void ac2(Outcome& o) {
  auto a = vars("a b c");
  const auto I = ideal(a, {"a^3*b", "a^2*b^2*c", "b^4*c^2", "a*c^3"});
  const BettiTable base = betti_oracle(I, QQ);
  o.expect(base.totals() == std::vector<std::uint64_t>{1, 4, 5, 2}, "base totals " + show(base.totals()));
  const ScaledExpansion e = expand_scaled(I, mono(a, "a"), mono(a, "b^4*c^2"), mono(a, "b^4*c^3"), base);
  o.expect(e.ideal == ideal(a, {"a^4*b", "a^3*b^2*c", "a*b^4*c^2", "a^2*c^3", "b^4*c^3"}),
           "first expansion " + e.ideal.to_string());
  o.expect(e.table.totals() == std::vector<std::uint64_t>{1, 5, 6, 2}, "first totals " + show(e.table.totals()));
  o.expect(e.table == betti_oracle(e.ideal, QQ), "first prediction differs from the oracle");

  const FamilyResult f = iterate_expansion(I,
                                           {{mono(a, "a"), mono(a, "b^4*c^2"), mono(a, "b^4*c^3")},
                                            {mono(a, "b"), mono(a, "a^2*c^3"), mono(a, "a^6*c^3")}},
                                           base);
  o.expect(f.table.totals() == std::vector<std::uint64_t>{1, 6, 7, 2}, "second totals " + show(f.table.totals()));
  o.expect(f.table == betti_oracle(f.ideal, QQ), "second prediction differs from the oracle");
}

void ac3(Outcome& o) {
  auto a = vars("a b c d e");
  auto path = [&](const char* mid) {
    return LabeledComplex(from_facets({{0, 1}, {1, 2}}),
                          {{0, mono(a, "a*b*c")}, {1, mono(a, mid)}, {2, mono(a, "c*d*e")}});
  };
  o.expect(supports_resolution(path("a*c*e"), ideal(a, {"a*b*c", "c*d*e", "a*c*e"}), QQ), "path on I");
  o.expect(!supports_resolution(path("a^2*e"), ideal(a, {"a*b*c", "c*d*e", "a^2*e"}), QQ), "path with a^2e");
  const LabeledComplex relabeled = relabel_vertex(path("a*c*e"), 1, mono(a, "a*e"));
  o.expect(supports_resolution(relabeled, ideal(a, {"a*b*c", "c*d*e", "a*e"}), QQ), "relabeled path");
  const LabeledComplex pendant = expand_pendant(path("a*c*e"), 1, mono(a, "a^2*e"));
  o.expect(supports_resolution(pendant, ideal(a, {"a*b*c", "c*d*e", "a*c*e", "a^2*e"}), QQ), "pendant");
}

void ac4(Outcome& o) {
  Rng rng(4004);
  for (int t = 0; t < 200; ++t) {
    const auto [I, n] = random_pair(rng);
    const Monomial m = sample_member(ideal_gcd(I), n, rng);
    const MonomialIdeal J = I.with_generator(m);
    for (const auto& f : {QQ, GF2}) {
      const BettiTable p = predicted_betti(I, n, m, betti_oracle(I, f));
      const bool ok = p == betti_oracle(J, f) && as_map(p) == oracle::koszul_betti(exps_of(J), field_char(f));
      o.expect(ok, "case " + std::to_string(t) + ": I=" + I.to_string() + " n=" + n.to_string() +
                       " m=" + m.to_string() + " over " + f.name());
    }
  }
}

void ac5(Outcome& o) {
  Rng rng(5005);
  int members = 0;
  for (int t = 0; t < 500;) {
    const auto [I, n] = random_pair(rng);
    Monomial m(I.context());
    if (t % 2 == 0) {
      m = sample_member(ideal_gcd(I), n, rng);
    } else {
      auto cand = sample_nonmember(I, n, rng);
      if (!cand) continue;
      m = *cand;
    }
    const bool def = c_contains(I, n, m);
    members += def ? 1 : 0;
    const bool lat = c_contains_via_divisibility(I, n, m);
    const bool orc = oracle::member_by_definition(oracle::exps(ideal_gcd(I)), oracle::exps(n), oracle::exps(m));
    o.expect(def == lat && def == orc,
             "case " + std::to_string(t) + ": I=" + I.to_string() + " n=" + n.to_string() + " m=" + m.to_string());
    ++t;
  }
  o.expect(members == 250, "member count " + std::to_string(members));
}

// Monomials m with m ∤ n that divide no generator, so the labels of the
// pendant complex are exactly mingens(I + (m)).
bool pendant_ready(const MonomialIdeal& I, const Monomial& n, const Monomial& m) {
  if (m.is_unit() || m.divides(n) || I.contains(m)) return false;
  for (const auto& g : I.mingens()) {
    if (m.divides(g)) return false;
  }
  return true;
}

void ac6(Outcome& o) {
  Rng rng(6006);
  int members = 0, nonmembers = 0;
  while (members + nonmembers < 100) {
    const auto [I, n] = random_pair(rng);
    const bool want_member = members <= nonmembers;
    std::optional<Monomial> m;
    for (int tries = 0; tries < 50 && !m; ++tries) {
      Monomial c = want_member ? sample_member(ideal_gcd(I), n, rng) : random_monomial(I.context(), rng, 3);
      if (pendant_ready(I, n, c) && c_contains(I, n, c) == want_member) m = c;
    }
    if (!m) continue;
    (want_member ? members : nonmembers) += 1;

    const LabeledComplex delta = taylor_complex(I);
    const Vertex nv = delta.vertex_with_label(n);
    const LabeledComplex gamma = expand_pendant(delta, nv, *m);
    const bool supports = supports_resolution(gamma, I.with_generator(*m), QQ);
    const std::string tag = "I=" + I.to_string() + " n=" + n.to_string() + " m=" + m->to_string();
    o.expect(supports == want_member, "biconditional fails for " + tag);
    if (want_member) {
      o.expect(is_minimal_support(delta) == is_minimal_support(gamma), "minimality differs for " + tag);
    }
  }
}

void ac7(Outcome& o) {
  auto a = vars("a b c d e");
  const auto I = ideal(a, {"a*b*d", "a^2*b^2", "a*c^3*e", "a^2*c^2"});
  const BettiTable base = betti_oracle(I, QQ);
  const InvariantSummary inv = invariants(base, 5);
  o.expect(inv.reg == 5, "base reg " + std::to_string(inv.reg));
  const Monomial n = mono(a, "a*b*d");
  for (const auto& [text, reg] : {std::pair{"b^2*c*d^2", 5}, std::pair{"b^500*c*d^500", 1000}}) {
    const Monomial m = mono(a, text);
    const InvariantSummary p = predicted_invariants(I, n, m, inv, base);
    const InvariantSummary full = invariants(betti_oracle(I.with_generator(m), QQ), 5);
    o.expect(p.reg == static_cast<std::uint64_t>(reg), std::string("predicted reg for ") + text);
    o.expect(full == p, std::string("recomputed invariants for ") + text);
  }
}

void ac8(Outcome& o) {
  auto x = vars("x1 x2 x3 x4 x5");
  const auto lhs = ideal(x, {"x1^2*x2", "x2*x3", "x1*x4"});
  const auto rhs = ideal(x, {"x1^2*x2*x5", "x2*x3", "x1*x4*x5"});
  const auto tl = oracle::totals(oracle::koszul_betti(exps_of(lhs), 0));
  const auto tr = oracle::totals(oracle::koszul_betti(exps_of(rhs), 0));
  o.expect(tl == tr, "oracle totals " + show(tl) + " vs " + show(tr));
  o.expect(betti_oracle(lhs, QQ).totals() == betti_oracle(rhs, QQ).totals(), "library totals differ");
  const ScaledExpansion e = expand_scaled(lhs, mono(x, "x5"), mono(x, "x2*x3"), mono(x, "x2*x3"), betti_oracle(lhs, QQ));
  o.expect(e.ideal == rhs && e.table.totals() == tl, "expand_scaled does not rebuild the right-hand ideal");

  Rng rng(8008);
  for (int t = 0; t < 50; ++t) {
    const MonomialIdeal I = random_ideal(rng);
    Monomial v = random_monomial(I.context(), rng, 2);
    if (v.is_unit()) v = Monomial(I.context(), std::vector<Monomial::Exponent>(I.context()->size(), 1));
    const BettiTable s = scaled_betti(I, v, betti_oracle(I, QQ));
    const MonomialIdeal vI = I.scaled(v);
    o.expect(s == betti_oracle(vI, QQ) && as_map(s) == oracle::koszul_betti(exps_of(vI), 0),
             "scaled case " + std::to_string(t) + ": I=" + I.to_string() + " v=" + v.to_string());
  }
}

void ac9(Outcome& o) {
  Rng rng(9009);
  for (int t = 0; t < 200; ++t) {
    const MonomialIdeal I = random_ideal(rng);
    const Monomial n = I.mingens()[rng.below(I.num_mingens())];
    Monomial m = random_monomial(I.context(), rng, 3);
    if (t % 2 == 0 && c_nonempty(make_cspec(ideal_gcd(I), n))) m = sample_member(ideal_gcd(I), n, rng);
    if (m.is_unit()) m = n;
    o.expect(check_polar_commutes(I, n, m), "triple " + std::to_string(t) + ": I=" + I.to_string() +
                                                " n=" + n.to_string() + " m=" + m.to_string());
  }
  for (int t = 0; t < 50; ++t) {
    const MonomialIdeal I = random_ideal(rng);
    const PolarizedIdeal p = polarize_ideal(I);
    const auto a = oracle::totals(oracle::koszul_betti(exps_of(I), 0));
    const auto b = oracle::totals(oracle::koszul_betti(exps_of(p.ideal), 0));
    o.expect(a == b && betti_oracle(p.ideal, QQ).totals() == a, "polarized totals differ for " + I.to_string());
  }
}

void ac10(Outcome& o) {
  auto s = vars("a b c d");
  for (const auto& f : {GF2, QQ}) {
    const auto I = ideal(s, {"a*b*c", "a*b*d"});
    const ScmReport r = scm_preservation_report(I, mono(s, "a*b*c"), mono(s, "c*d"), f);
    o.expect(r.verdict, "(abc,abd)+cd over " + f.name() + ": " + r.certificate_text());
  }

  Rng rng(1010);
  RandomIdealSpec spec;
  spec.square_free = true;
  spec.max_vars = 6;
  spec.min_vars = 3;
  int instances = 0;
  while (instances < 100) {
    const auto [I, n] = random_pair(rng, spec);
    const FieldSpec& f = instances % 2 == 0 ? GF2 : QQ;
    if (!is_sequentially_cm(I, f).verdict) continue;
    std::vector<Monomial> square_free;
    for (const auto& m : enumerate_c(I, n, n.degree() + 1)) {
      if (m.is_square_free()) square_free.push_back(m);
    }
    if (square_free.empty()) continue;
    const Monomial m = square_free[rng.below(square_free.size())];
    const ScmReport r = scm_preservation_report(I, n, m, f);
    o.expect(r.verdict, "I=" + I.to_string() + " n=" + n.to_string() + " m=" + m.to_string() + " over " +
                            f.name() + ": " + r.certificate_text());
    const auto pol = oracle::polarize(exps_of(I.with_generator(m)));
    o.expect(oracle::sequentially_cm(oracle::stanley_reisner(pol, pol.front().size()), field_char(f)),
             "oracle disagrees for I=" + I.to_string() + " m=" + m.to_string());
    ++instances;
  }
}

void ac11(Outcome& o) {
  Rng rng(1111);
  int done = 0;
  while (done < 100) {
    const SimplicialComplex c = random_complex(rng, 7, 5);
    std::vector<Face> free;
    for (const auto& f : c.faces()) {
      if (!f.empty() && is_free_face(c, f)) free.push_back(f);
    }
    if (free.empty()) continue;
    const Face& f = free[rng.below(free.size())];
    const CollapseResult r = collapse(c, f);
    for (const auto& field : {QQ, GF2}) {
      o.expect(reduced_homology(c, field) == reduced_homology(r.complex, field),
               "homology changed after collapsing a free face over " + field.name());
    }
    o.expect(trimmed(oracle::homology(masks(c), 0)) == trimmed(oracle::homology(masks(r.complex), 0)),
             "oracle homology changed");
    ++done;
  }
}

}  // namespace

int main() {
  criterion(1, "three-generator ideal betti numbers exact", 1, ac1);
  criterion(2, "four-generator family totals (1,4,5,2) -> (1,5,6,2) -> (1,6,7,2)", 5, ac2);
  criterion(3, "path, relabeled path and pendant supports", 1, ac3);
  criterion(4, "predicted betti vs oracle, 200 triples over QQ and GF(2)", 120, ac4);
  criterion(5, "membership definition vs lcm lattice, 500 pairs", 60, ac5);
  criterion(6, "pendant support iff membership, 100 cases", 120, ac6);
  criterion(7, "regularity 5, 5 and 1000", 5, ac7);
  criterion(8, "scaling and rebuilding from a scaled ideal", 60, ac8);
  criterion(9, "polarization commutes with membership and keeps totals", 120, ac9);
  criterion(10, "sequential Cohen-Macaulayness preserved, 100 instances", 300, ac10);
  criterion(11, "homology invariant under collapse, 100 complexes", 60, ac11);
  std::printf("%s: %d failure(s)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
