// Command-line front end. Exit codes: 0 success (a false verdict included),
// 2 parse or invalid input, 3 cap exceeded, 4 step failure, 5 theorem violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "expandres/cm.hpp"
#include "expandres/error.hpp"
#include "expandres/expansion.hpp"
#include "expandres/io.hpp"
#include "expandres/polarization.hpp"
#include "expandres/random.hpp"
#include "expandres/resolution.hpp"

namespace {

using namespace expandres;
using nlohmann::json;

struct Common {
  std::string field = "q";
  std::size_t max_gens = 12;
  bool json = false;
  bool table = false;
};

FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q" || s == "QQ") return FieldSpec::rationals();
  if (s.rfind("gf:", 0) == 0) {
    try {
      return FieldSpec::prime(std::stoull(s.substr(3)));
    } catch (const std::logic_error&) {
      throw InvalidInput("bad field '" + s + "'");
    }
  }
  throw InvalidInput("unknown field '" + s + "' (use q or gf:<p>)");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "coefficient field: q or gf:<p>");
  cmd->add_option("--max-gens", c.max_gens, "cap on minimal generators for lattice and Taylor work");
  auto* j = cmd->add_flag("--json", c.json, "emit JSON");
  cmd->add_flag("--table", c.table, "emit text (default)")->excludes(j);
}

MonomialIdeal load_nonzero(const std::string& path) {
  MonomialIdeal ideal = io::read_ideal_file(path);
  if (ideal.is_zero()) throw InvalidInput(path + ": the generator list is empty");
  return ideal;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string betti_text(const BettiTable& table, std::size_t num_vars) {
  std::string out = io::render_betti_table(table);
  out += "totals: " + io::format_totals(table.totals()) + "\n";
  const InvariantSummary inv = invariants(table, num_vars);
  out += "pd " + std::to_string(inv.pd) + "  reg " + std::to_string(inv.reg) + "  depth " +
         std::to_string(inv.depth) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

int run_betti(const std::string& path, const Common& c) {
  const MonomialIdeal ideal = load_nonzero(path);
  const FieldSpec field = parse_field(c.field);
  const BettiTable table = betti_oracle(ideal, field, c.max_gens);
  const std::size_t nv = ideal.context()->size();
  if (c.json) {
    json j = io::betti_json(table, nv);
    j["ideal"] = ideal.to_string();
    print(j);
    return 0;
  }
  std::cout << "ideal: " << ideal.to_string() << "\nfield: " << field.name() << "\n"
            << betti_text(table, nv) << "multigraded:\n";
  const json full = io::betti_json(table, nv);
  for (const auto& e : full["multigraded"]) {
    std::cout << "  beta_{" << e["i"].get<int>() << "," << e["u"].get<std::string>()
              << "} = " << e["value"].get<std::uint64_t>() << '\n';
  }
  return 0;
}

struct ExpandArgs {
  std::string path;
  std::string gen;
  std::string with;
  std::uint64_t enumerate = 0;
};

int run_expand(const ExpandArgs& a, const Common& c) {
  const MonomialIdeal ideal = load_nonzero(a.path);
  const FieldSpec field = parse_field(c.field);
  const ContextPtr& ctx = ideal.context();
  const Monomial n = io::parse_monomial(a.gen, ctx);
  if (!ideal.is_minimal_generator(n)) {
    throw InvalidInput(n.to_string() + " is not a minimal generator of " + ideal.to_string());
  }

  if (a.with.empty()) {
    const auto members = enumerate_c(ideal, n, a.enumerate);
    json j{{"ideal", ideal.to_string()}, {"n", n.to_string()}, {"max_degree", a.enumerate}};
    j["members"] = json::array();
    for (const auto& m : members) j["members"].push_back(m.to_string());
    j["count"] = members.size();
    if (c.json) {
      print(j);
    } else {
      std::cout << "C_I(" << n.to_string() << ") up to degree " << a.enumerate << ": " << members.size()
                << " member(s)\n";
      for (const auto& m : members) std::cout << "  " << m.to_string() << '\n';
    }
    return 0;
  }

  const Monomial m = io::parse_monomial(a.with, ctx);
  const CMembership mem = c_membership(make_cspec(ideal_gcd(ideal), n), m);
  json j{{"ideal", ideal.to_string()}, {"n", n.to_string()}, {"m", m.to_string()}, {"field", field.name()}};
  j["member"] = mem.member;
  if (!mem.member) j["reason"] = mem.explain(ctx);
  if (mem.short_required) j["failing_variable"] = ctx->name(*mem.short_required);
  if (!m.is_unit() && !ideal.contains(m)) {
    j["via_divisibility"] = c_contains_via_divisibility(ideal, n, m, c.max_gens);
  }

  std::string text;
  if (mem.member) {
    const ExpansionWitness wit = decompose_witness(ideal, n, m);
    j["witness"] = {{"v", wit.v.to_string()}, {"w", wit.w.to_string()}};
    j["divides"] = m.divides(n);
    const BettiTable base = betti_oracle(ideal, field, c.max_gens);
    const MonomialIdeal expanded = ideal.with_generator(m);
    const BettiTable predicted = predicted_betti(ideal, n, m, base);
    const BettiTable oracle = betti_oracle(expanded, field, c.max_gens);
    const std::size_t nv = ctx->size();
    j["expanded"] = expanded.to_string();
    j["base"] = io::betti_json(base, nv);
    j["predicted"] = io::betti_json(predicted, nv);
    j["oracle"] = io::betti_json(oracle, nv);
    j["match"] = predicted == oracle;
    const GradedClauseReadings readings = graded_clause_readings(ideal, n, m, base, predicted);
    j["graded_readings"] = {{"first_match", readings.first_match}, {"additive", readings.additive}};
    try {
      const InvariantSummary inv = predicted_invariants(ideal, n, m, invariants(base, nv), base);
      j["predicted_invariants"] = {{"pd", inv.pd}, {"reg", inv.reg}, {"depth", inv.depth}};
    } catch (const TheoremViolation& e) {
      j["predicted_invariants_error"] = e.what();
    }
    text = "witness: v=" + wit.v.to_string() + " w=" + wit.w.to_string() + (m.divides(n) ? "  (m | n)\n" : "  (m does not divide n)\n") +
           "expanded: " + expanded.to_string() + "\nbase totals: " + io::format_totals(base.totals()) +
           "\npredicted:\n" + betti_text(predicted, nv) + "oracle:\n" + betti_text(oracle, nv) +
           "match: " + (predicted == oracle ? "true" : "false") + "\n";
  }
  if (c.json) {
    print(j);
  } else {
    std::cout << "ideal: " << ideal.to_string() << "\nfield: " << field.name() << "\nmember: "
              << (mem.member ? "true" : "false") << '\n';
    if (!mem.member) std::cout << "reason: " << mem.explain(ctx) << '\n';
    if (j.contains("via_divisibility")) {
      std::cout << "via lcm lattice: " << (j["via_divisibility"].get<bool>() ? "true" : "false") << '\n';
    }
    std::cout << text;
  }
  return 0;
}

struct FamilyArgs {
  std::string path;
  std::string steps;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_degree = 0;
  std::string trace;
};

int run_family(const FamilyArgs& a, const Common& c) {
  const MonomialIdeal ideal = load_nonzero(a.path);
  const FieldSpec field = parse_field(c.field);
  const BettiTable base = betti_oracle(ideal, field, c.max_gens);
  const FamilyResult family =
      a.steps.empty() ? random_family(ideal, a.random, base, a.seed, a.max_degree)
                      : iterate_expansion(ideal, io::parse_steps(io::read_file(a.steps), ideal.context()), base, a.seed);

  const std::string trace_path = a.trace.empty() ? a.path + ".trace.json" : a.trace;
  {
    std::ofstream out(trace_path);
    if (!out) throw InvalidInput("cannot write " + trace_path);
    out << io::trace_json(family.trace).dump(2) << '\n';
  }

  std::vector<std::pair<MonomialIdeal, std::vector<std::uint64_t>>> rows{{ideal, base.totals()}};
  for (std::size_t k = 0; k < family.ideals.size(); ++k) {
    rows.emplace_back(family.ideals[k], family.trace[k].predicted_totals);
  }
  if (c.json) {
    json j{{"field", field.name()}, {"trace", io::trace_json(family.trace)}, {"trace_file", trace_path}};
    j["family"] = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      j["family"].push_back({{"index", k}, {"ideal", rows[k].first.to_string()}, {"totals", rows[k].second}});
    }
    print(j);
  } else {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::cout << "I_" << k << ": " << rows[k].first.to_string() << "  " << io::format_totals(rows[k].second) << '\n';
    }
    std::cout << "trace: " << trace_path << '\n';
  }
  return 0;
}

int run_scm(const std::string& path, const Common& c) {
  const MonomialIdeal ideal = load_nonzero(path);
  const ScmReport report = is_sequentially_cm(ideal, parse_field(c.field));
  if (c.json) {
    json j = io::scm_json(report);
    j["ideal"] = ideal.to_string();
    print(j);
    return 0;
  }
  std::cout << "ideal: " << ideal.to_string() << "\nfield: " << report.field.name()
            << "\nsequentially Cohen-Macaulay: " << (report.verdict ? "true" : "false") << '\n';
  if (report.polarized) std::cout << "(tested on the polarization)\n";
  for (const auto& s : report.skeletons) {
    std::cout << "  skeleton " << s.i << ": " << (s.cm ? "CM" : "not CM") << '\n';
  }
  if (!report.verdict) std::cout << "certificate: " << report.certificate_text() << '\n';
  return 0;
}

int run_polarize(const std::string& path, const Common& c) {
  const MonomialIdeal ideal = load_nonzero(path);
  const PolarizedIdeal p = polarize_ideal(ideal);
  if (c.json) {
    json j{{"vars", p.ideal.context()->names()}, {"generators", json::array()}};
    for (const auto& g : p.ideal.mingens()) j["generators"].push_back(g.to_string());
    print(j);
  } else {
    std::cout << io::format_ideal(p.ideal);
  }
  return 0;
}

int run_check(const std::string& ideal_path, const std::string& complex_path, const Common& c) {
  const MonomialIdeal ideal = load_nonzero(ideal_path);
  const FieldSpec field = parse_field(c.field);
  const LabeledComplex complex = io::parse_complex(io::read_file(complex_path), ideal.context());
  const bool supports = supports_resolution(complex, ideal, field, c.max_gens);
  const bool minimal = supports && is_minimal_support(complex);
  if (c.json) {
    print({{"ideal", ideal.to_string()}, {"field", field.name()}, {"supports", supports}, {"minimal", minimal}});
  } else {
    std::cout << "ideal: " << ideal.to_string() << "\nfield: " << field.name()
              << "\nsupports: " << (supports ? "true" : "false") << "\nminimal: " << (minimal ? "true" : "false")
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers, expansions and Cohen-Macaulay tests for monomial ideals"};
  app.require_subcommand(1);

  Common common;
  std::string ideal_path, complex_path;

  auto* betti = app.add_subcommand("betti", "multigraded, graded and total betti numbers");
  betti->add_option("ideal", ideal_path, "ideal file")->required();
  add_common(betti, common);

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "membership, witness and predicted tables for I + (m)");
  expand->add_option("ideal", ex.path, "ideal file")->required();
  expand->add_option("--gen", ex.gen, "minimal generator n")->required();
  auto* with = expand->add_option("--with", ex.with, "monomial m to adjoin");
  auto* en = expand->add_option("--enumerate", ex.enumerate, "list C_I(n) up to this degree");
  with->excludes(en);
  en->check(CLI::PositiveNumber);
  add_common(expand, common);

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "iterated scaled expansions");
  family->add_option("ideal", fa.path, "ideal file")->required();
  auto* steps = family->add_option("steps", fa.steps, "steps file");
  auto* rnd = family->add_option("--random", fa.random, "number of random steps");
  steps->excludes(rnd);
  family->add_option("--seed", fa.seed, "seed for random steps and draws");
  family->add_option("--max-degree", fa.max_degree, "degree bound for random draws (0: deg(vn))");
  family->add_option("--trace", fa.trace, "trace output path (default: <ideal>.trace.json)");
  add_common(family, common);

  auto* scm = app.add_subcommand("scm", "sequential Cohen-Macaulay test");
  scm->add_option("ideal", ideal_path, "ideal file")->required();
  add_common(scm, common);

  auto* polarize = app.add_subcommand("polarize", "polarized ideal file");
  polarize->add_option("ideal", ideal_path, "ideal file")->required();
  add_common(polarize, common);

  auto* check = app.add_subcommand("check", "does a labeled complex support a resolution");
  check->add_option("ideal", ideal_path, "ideal file")->required();
  check->add_option("complex", complex_path, "complex file")->required();
  add_common(check, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*betti) return run_betti(ideal_path, common);
    if (*expand) {
      if (ex.with.empty() && ex.enumerate == 0) throw InvalidInput("expand needs --with or --enumerate");
      return run_expand(ex, common);
    }
    if (*family) return run_family(fa, common);
    if (*scm) return run_scm(ideal_path, common);
    if (*polarize) return run_polarize(ideal_path, common);
    if (*check) return run_check(ideal_path, complex_path, common);
  } catch (const StepFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
