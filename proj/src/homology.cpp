#include "expandres/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "expandres/error.hpp"

namespace expandres {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t reduce(std::int64_t v, const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::Rationals) return v;
  const auto p = static_cast<std::int64_t>(field.characteristic());
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

/// Fraction-free (Bareiss) rank. Every entry after step k is a (k+1)-minor of
/// the input, so the division by the previous pivot is exact.
template <typename Int, typename Mul, typename Sub>
std::size_t bareiss_rank(std::vector<Int> a, std::size_t rows, std::size_t cols, Mul mul, Sub sub) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const Int p = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int num = sub(mul(p, at(i, j)), mul(lead, at(rank, j)));
        at(i, j) = num / prev;
      }
      at(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const FieldMatrix& m) {
  try {
    return bareiss_rank<std::int64_t>(m.data, m.rows, m.cols, checked_mul, checked_sub);
  } catch (const Overflow&) {
    std::vector<BigInt> big(m.data.begin(), m.data.end());
    return bareiss_rank<BigInt>(
        std::move(big), m.rows, m.cols, [](const BigInt& x, const BigInt& y) { return BigInt(x * y); },
        [](const BigInt& x, const BigInt& y) { return BigInt(x - y); });
  }
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % p);
    b = static_cast<std::uint64_t>((unsigned __int128)b * b % p);
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const FieldMatrix& m, std::uint64_t p) {
  std::vector<std::uint64_t> a(m.data.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto v = m.data[k] % static_cast<std::int64_t>(p);
    a[k] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * m.cols + c]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint64_t inv = pow_mod(at(rank, c), p - 2, p);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t factor = static_cast<std::uint64_t>((unsigned __int128)at(i, c) * inv % p);
      for (std::size_t j = c; j < m.cols; ++j) {
        const auto sub = static_cast<std::uint64_t>((unsigned __int128)factor * at(rank, j) % p);
        at(i, j) = (at(i, j) + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// Faces grouped by dimension: by_dim[d + 1] lists the d-faces in faces() order.
std::vector<std::vector<Face>> faces_by_dim(const SimplicialComplex& complex) {
  std::vector<std::vector<Face>> out;
  if (complex.is_void()) return out;
  out.resize(static_cast<std::size_t>(complex.dimension() + 2));
  for (auto& f : complex.faces()) out[f.size()].push_back(std::move(f));
  return out;
}

FieldMatrix build_boundary(const std::vector<Face>& lower, const std::vector<Face>& upper,
                           const FieldSpec& field) {
  FieldMatrix m;
  m.rows = lower.size();
  m.cols = upper.size();
  m.data.assign(m.rows * m.cols, 0);
  std::map<Face, std::size_t> index;
  for (std::size_t r = 0; r < lower.size(); ++r) index.emplace(lower[r], r);
  Face facet;
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face& f = upper[c];
    for (std::size_t k = 0; k < f.size(); ++k) {
      facet.assign(f.begin(), f.end());
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
      m.at(index.at(facet), c) = reduce(k % 2 == 0 ? 1 : -1, field);
    }
  }
  return m;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw InvalidInput("GF(" + std::to_string(p) + ") is not a supported prime field");
  }
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::name() const {
  return kind_ == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& field) {
  if (a.cols != b.rows) throw InvalidInput("matrix shapes do not compose");
  FieldMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.data.assign(out.rows * out.cols, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) = reduce(out.at(i, j) + a.at(i, k) * b.at(k, j), field);
      }
    }
  }
  return out;
}

std::size_t matrix_rank(const FieldMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.kind() == FieldSpec::Kind::Rationals) return rank_rational(m);
  return rank_mod_p(m, field.characteristic());
}

FieldMatrix boundary_matrix(const SimplicialComplex& complex, int d, const FieldSpec& field) {
  const auto by_dim = faces_by_dim(complex);
  auto layer = [&](int k) -> const std::vector<Face>& {
    static const std::vector<Face> none;
    const int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(by_dim.size())) return none;
    return by_dim[static_cast<std::size_t>(idx)];
  };
  return build_boundary(layer(d - 1), layer(d), field);
}

// ---------------------------------------------------------------------------
// HomologyProfile

HomologyProfile::HomologyProfile(std::vector<std::size_t> dims_from_minus_one)
    : dims_(std::move(dims_from_minus_one)) {}

std::size_t HomologyProfile::operator[](int degree) const noexcept {
  const int idx = degree + 1;
  if (idx < 0 || idx >= static_cast<int>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(idx)];
}

bool HomologyProfile::is_zero() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

std::string HomologyProfile::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) out += ' ';
    out += "H" + std::to_string(static_cast<int>(k) - 1) + "=" + std::to_string(dims_[k]);
  }
  return out + "]";
}

bool HomologyProfile::operator==(const HomologyProfile& other) const noexcept {
  const int top = std::max(top_degree(), other.top_degree());
  for (int d = -1; d <= top; ++d) {
    if ((*this)[d] != other[d]) return false;
  }
  return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) return HomologyProfile();
  const auto by_dim = faces_by_dim(complex);
  const std::size_t layers = by_dim.size();  // degrees -1 .. dim
  // ranks[k] = rank of ∂ from layer k to layer k-1 (degree k-1 -> k-2).
  std::vector<std::size_t> ranks(layers + 1, 0);
  for (std::size_t k = 1; k < layers; ++k) {
    ranks[k] = matrix_rank(build_boundary(by_dim[k - 1], by_dim[k], field), field);
  }
  std::vector<std::size_t> dims(layers);
  for (std::size_t k = 0; k < layers; ++k) {
    dims[k] = by_dim[k].size() - ranks[k] - ranks[k + 1];
  }
  return HomologyProfile(std::move(dims));
}

bool is_acyclic(const SimplicialComplex& complex, const FieldSpec& field) {
  return reduced_homology(complex, field).is_zero();
}

}  // namespace expandres
