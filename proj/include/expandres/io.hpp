#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expandres/cm.hpp"
#include "expandres/complex.hpp"
#include "expandres/expansion.hpp"
#include "expandres/monomial.hpp"
#include "expandres/resolution.hpp"

namespace expandres::io {

/// Factors `name` or `name^k` (k >= 1) separated by whitespace or '*'.
/// `line` and `column_offset` position ParseError messages.
Monomial parse_monomial(std::string_view text, const ContextPtr& ctx, std::size_t line = 1,
                        std::size_t column_offset = 0);

/// "vars: a b c" header, one generator per nonblank line, '#' comments.
/// An empty generator list gives the zero ideal.
MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);
/// Re-parses to an equal ideal.
std::string format_ideal(const MonomialIdeal& ideal);

/// "label <vertex> <monomial>" lines, then one facet per line (vertex ids).
LabeledComplex parse_complex(std::string_view text, const ContextPtr& ctx);

/// One step per line: "v=<mono> gen=<mono>|#<k> m=<mono>|draw=<D>".
std::vector<ExpansionStep> parse_steps(std::string_view text, const ContextPtr& ctx);

std::string read_file(const std::string& path);

nlohmann::json monomial_json(const Monomial& m);
nlohmann::json betti_json(const BettiTable& table, std::size_t num_vars);
nlohmann::json trace_json(const std::vector<TraceRecord>& trace);
nlohmann::json scm_json(const ScmReport& report);

/// Stairstep layout: columns i, rows j - i, '.' for zero.
std::string render_betti_table(const BettiTable& table);
std::string format_totals(const std::vector<std::uint64_t>& totals);

}  // namespace expandres::io
