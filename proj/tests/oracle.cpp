#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace oracle {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int popcount(Mask m) { return std::popcount(m); }

int max_dim(const std::set<Mask>& faces) {
  int d = -2;
  for (auto f : faces) d = std::max(d, popcount(f) - 1);
  return d;
}

}  // namespace

Exps exps(const expandres::Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool in_ideal(const std::vector<Exps>& gens, const Exps& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, u); });
}

std::set<Exps> subset_lcms(const std::vector<Exps>& gens) {
  std::set<Exps> out;
  const std::size_t q = gens.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << q); ++s) {
    Exps u(gens.front().size(), 0);
    for (std::size_t k = 0; k < q; ++k) {
      if (s >> k & 1U) u = lcm(u, gens[k]);
    }
    out.insert(u);
  }
  return out;
}

std::size_t rank(std::vector<std::vector<std::int64_t>> rows, std::uint64_t p) {
  if (rows.empty() || rows.front().empty()) return 0;
  const std::size_t r = rows.size(), c = rows.front().size();
  std::size_t rk = 0;
  if (p == 0) {
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) a[i][j] = rows[i][j];
    }
    for (std::size_t col = 0; col < c && rk < r; ++col) {
      std::size_t piv = rk;
      while (piv < r && a[piv][col] == 0) ++piv;
      if (piv == r) continue;
      std::swap(a[piv], a[rk]);
      for (std::size_t i = 0; i < r; ++i) {
        if (i == rk || a[i][col] == 0) continue;
        const Rational f = a[i][col] / a[rk][col];
        for (std::size_t j = col; j < c; ++j) a[i][j] -= f * a[rk][j];
      }
      ++rk;
    }
    return rk;
  }
  const auto P = static_cast<std::int64_t>(p);
  for (auto& row : rows) {
    for (auto& x : row) x = ((x % P) + P) % P;
  }
  auto inv = [&](std::int64_t x) {
    std::int64_t result = 1, base = x, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t piv = rk;
    while (piv < r && rows[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(rows[piv], rows[rk]);
    const std::int64_t iv = inv(rows[rk][col]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rk || rows[i][col] == 0) continue;
      const std::int64_t f = rows[i][col] * iv % P;
      for (std::size_t j = col; j < c; ++j) rows[i][j] = ((rows[i][j] - f * rows[rk][j]) % P + P) % P;
    }
    ++rk;
  }
  return rk;
}

std::set<Mask> closure(const std::vector<Mask>& facets) {
  std::set<Mask> out;
  for (Mask f : facets) {
    // Enumerate every submask of f, f itself and 0 included.
    for (Mask s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  return out;
}

std::vector<std::size_t> homology(const std::set<Mask>& faces, std::uint64_t p) {
  if (faces.empty()) return {};
  const int top = max_dim(faces);
  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(top + 2));
  for (Mask f : faces) by_size[static_cast<std::size_t>(popcount(f))].push_back(f);
  // bd[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> bd(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    const auto& lower = by_size[k - 1];
    const auto& upper = by_size[k];
    std::map<Mask, std::size_t> idx;
    for (std::size_t i = 0; i < lower.size(); ++i) idx[lower[i]] = i;
    std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      int t = 0;
      for (int bit = 0; bit < 32; ++bit) {
        if (!(upper[j] >> bit & 1U)) continue;
        m[idx.at(upper[j] & ~(Mask{1} << bit))][j] = (t % 2 == 0) ? 1 : -1;
        ++t;
      }
    }
    bd[k] = rank(std::move(m), p);
  }
  std::vector<std::size_t> out(by_size.size());
  for (std::size_t k = 0; k < by_size.size(); ++k) out[k] = by_size[k].size() - bd[k] - bd[k + 1];
  return out;
}

bool acyclic(const std::set<Mask>& faces, std::uint64_t p) {
  const auto h = homology(faces, p);
  return std::all_of(h.begin(), h.end(), [](std::size_t d) { return d == 0; });
}

std::map<std::pair<int, Exps>, std::uint64_t> koszul_betti(const std::vector<Exps>& gens, std::uint64_t p) {
  std::map<std::pair<int, Exps>, std::uint64_t> out;
  const std::size_t nv = gens.front().size();
  if (nv > 31) throw std::invalid_argument("too many variables for the mask oracle");
  out[{0, Exps(nv, 0)}] = 1;
  for (const Exps& u : subset_lcms(gens)) {
    Mask support = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      if (u[i] > 0) support |= Mask{1} << i;
    }
    std::set<Mask> k;
    for (Mask f = support;; f = (f - 1) & support) {
      Exps w = u;
      for (std::size_t i = 0; i < nv; ++i) {
        if (f >> i & 1U) --w[i];
      }
      if (in_ideal(gens, w)) k.insert(f);
      if (f == 0) break;
    }
    const auto h = homology(k, p);
    for (std::size_t d = 0; d < h.size(); ++d) {
      if (h[d] != 0) out[{static_cast<int>(d) + 1, u}] = h[d];  // index d is degree d-1, so i = d + 1
    }
  }
  return out;
}

std::vector<std::uint64_t> totals(const std::map<std::pair<int, Exps>, std::uint64_t>& betti) {
  std::vector<std::uint64_t> out;
  for (const auto& [key, value] : betti) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += value;
  }
  return out;
}

bool member_by_lcm(const Exps& g, const Exps& n, const Exps& m) {
  const std::size_t k = n.size();
  const Exps l = lcm(m, n);
  Exps v(k), w(k), n_over_g(k), n_over_v(k);
  bool m_unit = true, v_unit = true, w_unit = true, v_is_n = true;
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = l[i] - m[i];
    w[i] = l[i] - n[i];
    n_over_g[i] = n[i] - g[i];
    n_over_v[i] = n[i] - v[i];
    m_unit = m_unit && m[i] == 0;
    v_unit = v_unit && v[i] == 0;
    w_unit = w_unit && w[i] == 0;
    v_is_n = v_is_n && v[i] == n[i];
  }
  if (m_unit || v_unit) return false;
  if (w_unit && v_is_n) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::min(v[i], n_over_g[i]) != 0) return false;
  }
  return lcm(g, n_over_v) == n;
}

bool member_by_definition(const Exps& g, const Exps& n, const Exps& m) {
  bool nonzero = false, dropped = false;
  for (std::size_t i = 0; i < n.size(); ++i) {
    nonzero = nonzero || m[i] != 0;
    if (n[i] != g[i]) {
      if (m[i] < n[i]) return false;
    } else if (m[i] < n[i]) {
      dropped = true;
    }
  }
  return nonzero && dropped;
}

bool cohen_macaulay(const std::set<Mask>& faces, std::uint64_t p) {
  for (Mask sigma : faces) {
    std::set<Mask> lk;
    for (Mask tau : faces) {
      if ((tau & sigma) == 0 && faces.count(tau | sigma)) lk.insert(tau);
    }
    const int d = max_dim(lk);
    const auto h = homology(lk, p);
    for (int j = -1; j < d; ++j) {
      if (h[static_cast<std::size_t>(j + 1)] != 0) return false;
    }
  }
  return true;
}

bool sequentially_cm(const std::set<Mask>& faces, std::uint64_t p) {
  const int top = max_dim(faces);
  for (int i = 0; i <= top; ++i) {
    std::vector<Mask> facets;
    for (Mask f : faces) {
      if (popcount(f) == i + 1) facets.push_back(f);
    }
    if (!cohen_macaulay(closure(facets), p)) return false;
  }
  return true;
}

std::set<Mask> stanley_reisner(const std::vector<Exps>& gens, std::size_t nvars) {
  std::vector<Mask> gm;
  for (const auto& g : gens) {
    Mask m = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (g[i] > 1) throw std::invalid_argument("not square-free");
      if (g[i]) m |= Mask{1} << i;
    }
    gm.push_back(m);
  }
  std::set<Mask> out;
  for (Mask a = 0; a < (Mask{1} << nvars); ++a) {
    if (std::none_of(gm.begin(), gm.end(), [&](Mask g) { return (g & a) == g; })) out.insert(a);
  }
  return out;
}

std::vector<Exps> polarize(const std::vector<Exps>& gens) {
  const std::size_t nv = gens.front().size();
  Exps height(nv, 0);
  for (const auto& g : gens) height = lcm(height, g);
  std::vector<std::size_t> offset(nv, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    offset[i] = total;
    total += height[i];
  }
  std::vector<Exps> out;
  for (const auto& g : gens) {
    Exps e(total, 0);
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::uint64_t j = 0; j < g[i]; ++j) e[offset[i] + j] = 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace oracle
