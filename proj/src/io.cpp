#include "expandres/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "expandres/error.hpp"

namespace expandres::io {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    // '#' starts a comment only at a token boundary, so "gen=#2" survives.
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '#' && (k == 0 || space(line[k - 1]))) {
        line.erase(k);
        break;
      }
    }
    out.push_back({number, std::move(line)});
    start = end + 1;
  }
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return space(c); });
}

/// Whitespace-separated tokens with their 0-based columns.
std::vector<std::pair<std::size_t, std::string>> tokens(const std::string& s) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && space(s[i])) ++i;
    const std::size_t begin = i;
    while (i < s.size() && !space(s[i])) ++i;
    if (i > begin) out.emplace_back(begin, s.substr(begin, i - begin));
  }
  return out;
}

std::uint64_t parse_count(const std::string& digits, std::size_t line, std::size_t column, const char* what) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(line, column, std::string("expected a nonnegative integer for ") + what);
  }
  std::uint64_t value = 0;
  for (char c : digits) {
    const auto d = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - d) / 10) throw ParseError(line, column, std::string(what) + " is too large");
    value = value * 10 + d;
  }
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, const ContextPtr& ctx, std::size_t line, std::size_t column_offset) {
  std::vector<Monomial::Exponent> exps(ctx->size(), 0);
  auto col = [&](std::size_t pos) { return column_offset + pos + 1; };
  std::size_t i = 0;
  bool any = false;
  bool need_separator = false;
  while (i < text.size()) {
    if (space(text[i]) || text[i] == '*') {
      ++i;
      need_separator = false;
      continue;
    }
    if (need_separator) throw ParseError(line, col(i), "expected '*' or whitespace between factors");
    if (!ident_start(text[i])) throw ParseError(line, col(i), "expected a variable name");
    const std::size_t begin = i;
    while (i < text.size() && ident_char(text[i])) ++i;
    const std::string_view name = text.substr(begin, i - begin);
    const std::size_t idx = ctx->index_of(name);
    if (idx == ctx->size()) throw ParseError(line, col(begin), "unknown variable '" + std::string(name) + "'");
    std::uint64_t k = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t digits_at = ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      k = parse_count(std::string(text.substr(digits_at, i - digits_at)), line, col(digits_at), "exponent");
      if (k == 0) throw ParseError(line, col(digits_at), "exponents must be positive");
    }
    if (exps[idx] > UINT64_MAX - k) throw ParseError(line, col(begin), "exponent overflow");
    exps[idx] += k;
    any = true;
    need_separator = true;
  }
  if (!any) throw ParseError(line, column_offset + 1, "empty monomial");
  return Monomial(ctx, std::move(exps));
}

MonomialIdeal parse_ideal(std::string_view text) {
  ContextPtr ctx;
  std::vector<Monomial> gens;
  for (const auto& [number, line] : split_lines(text)) {
    if (blank(line)) continue;
    if (!ctx) {
      const auto first = line.find_first_not_of(" \t");
      if (line.compare(first, 5, "vars:") != 0) throw ParseError(number, first + 1, "expected the 'vars:' header");
      std::vector<std::string> names;
      for (auto& [column, name] : tokens(line.substr(first + 5))) {
        const std::size_t at = first + 5 + column + 1;
        if (!ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char)) {
          throw ParseError(number, at, "'" + name + "' is not a variable name");
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError(number, at, "duplicate variable '" + name + "'");
        }
        names.push_back(name);
      }
      if (names.empty()) throw ParseError(number, line.size() + 1, "the 'vars:' header lists no variables");
      ctx = make_context(std::move(names));
      continue;
    }
    gens.push_back(parse_monomial(line, ctx, number, 0));
  }
  if (!ctx) throw ParseError(1, 1, "missing 'vars:' header");
  return MonomialIdeal(ctx, std::move(gens));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MonomialIdeal read_ideal_file(const std::string& path) { return parse_ideal(read_file(path)); }

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& name : ideal.context()->names()) out += " " + name;
  out += "\n";
  for (const auto& g : ideal.mingens()) out += g.to_string() + "\n";
  return out;
}

LabeledComplex parse_complex(std::string_view text, const ContextPtr& ctx) {
  std::map<Vertex, Monomial> labels;
  std::vector<Face> facets;
  for (const auto& [number, line] : split_lines(text)) {
    if (blank(line)) continue;
    const auto toks = tokens(line);
    if (toks.front().second == "label") {
      if (!facets.empty()) throw ParseError(number, toks.front().first + 1, "labels must precede the facets");
      if (toks.size() < 3) throw ParseError(number, line.size() + 1, "expected 'label <vertex> <monomial>'");
      const Vertex v = parse_count(toks[1].second, number, toks[1].first + 1, "vertex");
      const std::size_t at = toks[2].first;
      const Monomial m = parse_monomial(std::string_view(line).substr(at), ctx, number, at);
      if (!labels.emplace(v, m).second) throw ParseError(number, toks[1].first + 1, "vertex labeled twice");
      continue;
    }
    Face f;
    for (const auto& [column, tok] : toks) f.push_back(parse_count(tok, number, column + 1, "vertex"));
    facets.push_back(make_face(std::move(f)));
  }
  return LabeledComplex(SimplicialComplex::from_facets(std::move(facets)), std::move(labels));
}

std::vector<ExpansionStep> parse_steps(std::string_view text, const ContextPtr& ctx) {
  std::vector<ExpansionStep> out;
  for (const auto& [number, line] : split_lines(text)) {
    if (blank(line)) continue;
    std::optional<Monomial> v;
    std::optional<std::variant<std::size_t, Monomial>> gen;
    std::optional<std::variant<Monomial, std::uint64_t>> add;
    for (const auto& [column, tok] : tokens(line)) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(number, column + 1, "expected key=value");
      const std::string key = tok.substr(0, eq);
      const std::string value = tok.substr(eq + 1);
      const std::size_t at = column + eq + 1;
      if (key == "v") {
        v = parse_monomial(value, ctx, number, at);
      } else if (key == "gen") {
        if (!value.empty() && value[0] == '#') {
          gen = static_cast<std::size_t>(parse_count(value.substr(1), number, at + 2, "generator index"));
        } else {
          gen = parse_monomial(value, ctx, number, at);
        }
      } else if (key == "m" || key == "draw") {
        if (add) throw ParseError(number, column + 1, "give exactly one of m= and draw=");
        if (key == "m") {
          add = parse_monomial(value, ctx, number, at);
        } else {
          add = parse_count(value, number, at + 1, "degree bound");
        }
      } else {
        throw ParseError(number, column + 1, "unknown key '" + key + "'");
      }
    }
    if (!v || !gen || !add) throw ParseError(number, 1, "a step needs v=, gen= and one of m= or draw=");
    out.push_back(ExpansionStep{*v, *gen, *add});
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json monomial_json(const Monomial& m) { return m.to_string(); }

nlohmann::json betti_json(const BettiTable& table, std::size_t num_vars) {
  nlohmann::json j;
  j["field"] = table.field().name();
  auto& multi = j["multigraded"] = nlohmann::json::array();
  std::vector<std::pair<BettiTable::Key, std::uint64_t>> entries(table.multigraded().begin(),
                                                                 table.multigraded().end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return graded_less(a.first.second, b.first.second);
  });
  for (const auto& [key, value] : entries) {
    multi.push_back({{"i", key.first}, {"u", key.second.to_string()}, {"value", value}});
  }
  auto& graded = j["graded"] = nlohmann::json::array();
  for (const auto& [key, value] : table.graded()) {
    graded.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  }
  j["totals"] = table.totals();
  const InvariantSummary inv = invariants(table, num_vars);
  j["invariants"] = {{"pd", inv.pd}, {"reg", inv.reg}, {"depth", inv.depth}};
  return j;
}

nlohmann::json trace_json(const std::vector<TraceRecord>& trace) {
  auto out = nlohmann::json::array();
  for (const auto& r : trace) {
    out.push_back({{"step", r.step},
                   {"v", r.v.to_string()},
                   {"n", r.n.to_string()},
                   {"m", r.m.to_string()},
                   {"witness_v", r.witness_v.to_string()},
                   {"witness_w", r.witness_w.to_string()},
                   {"divides", r.divides},
                   {"predicted_totals", r.predicted_totals}});
  }
  return out;
}

nlohmann::json scm_json(const ScmReport& report) {
  nlohmann::json j;
  j["verdict"] = report.verdict;
  j["field"] = report.field.name();
  j["polarized"] = report.polarized;
  auto& skeletons = j["skeletons"] = nlohmann::json::array();
  for (const auto& s : report.skeletons) {
    nlohmann::json e{{"i", s.i}, {"cm", s.cm}};
    if (s.certificate) {
      auto face = nlohmann::json::array();
      for (auto v : s.certificate->sigma) face.push_back(report.vertex_names->name(v));
      e["certificate"] = {{"i", s.certificate->i}, {"face", face}, {"j", s.certificate->j}};
    }
    skeletons.push_back(std::move(e));
  }
  return j;
}

// ---------------------------------------------------------------------------
// Text

std::string format_totals(const std::vector<std::uint64_t>& totals) {
  std::string out = "(";
  for (std::size_t k = 0; k < totals.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(totals[k]);
  }
  return out + ")";
}

std::string render_betti_table(const BettiTable& table) {
  const auto totals = table.totals();
  const auto graded = table.graded();
  std::int64_t reg = 0;
  for (const auto& [key, value] : graded) reg = std::max(reg, static_cast<std::int64_t>(key.second) - key.first);

  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  const std::size_t label = std::max<std::size_t>(6, std::to_string(reg).size() + 1);

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << pad("", label);
  for (std::size_t i = 0; i < totals.size(); ++i) out << ' ' << pad(std::to_string(i), width);
  out << '\n' << pad("total:", label);
  for (auto t : totals) out << ' ' << pad(std::to_string(t), width);
  out << '\n';
  for (std::int64_t r = 0; r <= reg; ++r) {
    out << pad(std::to_string(r) + ":", label);
    for (std::size_t i = 0; i < totals.size(); ++i) {
      const auto j = static_cast<std::uint64_t>(r + static_cast<std::int64_t>(i));
      auto it = graded.find({static_cast<int>(i), j});
      out << ' ' << pad(it == graded.end() ? "." : std::to_string(it->second), width);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace expandres::io
