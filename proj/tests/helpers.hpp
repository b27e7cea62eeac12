#pragma once

#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "expandres/io.hpp"
#include "expandres/monomial.hpp"
#include "expandres/resolution.hpp"
#include "oracle.hpp"

namespace testing {

using namespace expandres;

inline ContextPtr vars(const std::string& names) {
  std::istringstream in(names);
  std::vector<std::string> out;
  for (std::string s; in >> s;) out.push_back(s);
  return make_context(std::move(out));
}

inline Monomial mono(const ContextPtr& ctx, const std::string& text) {
  if (text == "1") return Monomial(ctx);
  return io::parse_monomial(text, ctx);
}

inline MonomialIdeal ideal(const ContextPtr& ctx, std::initializer_list<const char*> gens) {
  std::vector<Monomial> out;
  for (const char* g : gens) out.push_back(mono(ctx, g));
  return MonomialIdeal(ctx, std::move(out));
}

inline std::vector<oracle::Exps> exps_of(const MonomialIdeal& I) {
  std::vector<oracle::Exps> out;
  for (const auto& g : I.mingens()) out.push_back(oracle::exps(g));
  return out;
}

/// Library table in the oracle's key format.
inline std::map<std::pair<int, oracle::Exps>, std::uint64_t> as_map(const BettiTable& t) {
  std::map<std::pair<int, oracle::Exps>, std::uint64_t> out;
  for (const auto& [key, value] : t.multigraded()) out[{key.first, oracle::exps(key.second)}] = value;
  return out;
}

inline std::uint64_t field_char(const FieldSpec& f) { return f.characteristic(); }

}  // namespace testing
