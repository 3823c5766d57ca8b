// Copyright 2026 The stabtest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabtest/rng.hpp"

namespace stabtest::gf2 {

// ---------------------------------------------------------------------------
// PauliVector
// ---------------------------------------------------------------------------

// An element x = (a, b) of F_2^{2n}, the index space of the n-qubit Weyl
// operators. The X part a occupies the high n bits of `word`, the Z part b
// the low n bits, with qubit 1 as the most significant bit of each half.
// `word` therefore doubles as the canonical index into dense tables.
struct PauliVector {
  int n = 0;
  std::uint64_t word = 0;

  PauliVector() = default;

  PauliVector(int n_, std::uint64_t word_) : n(n_), word(word_) {
    if (n_ < 1 || n_ > 31) throw std::invalid_argument("PauliVector: n must be in [1, 31]");
    if (word_ >> (2 * n_)) throw std::invalid_argument("PauliVector: word has bits beyond 2n");
  }

  static PauliVector from_parts(int n, std::uint64_t a, std::uint64_t b) {
    if (n < 1 || n > 31) throw std::invalid_argument("PauliVector: n must be in [1, 31]");
    const std::uint64_t half = (std::uint64_t{1} << n) - 1;
    if ((a & ~half) || (b & ~half)) throw std::invalid_argument("PauliVector: part exceeds n bits");
    return PauliVector(n, (a << n) | b);
  }

  std::uint64_t a() const { return word >> n; }
  std::uint64_t b() const { return word & ((std::uint64_t{1} << n) - 1); }
  bool is_zero() const { return word == 0; }

  friend PauliVector operator+(PauliVector x, const PauliVector& y) {
    if (x.n != y.n) throw std::invalid_argument("PauliVector: qubit count mismatch");
    x.word ^= y.word;
    return x;
  }

  friend bool operator==(const PauliVector&, const PauliVector&) = default;
  friend auto operator<=>(const PauliVector&, const PauliVector&) = default;
};

// Exchanges the X and Z halves of a packed word. The symplectic product is a
// plain GF(2) dot product against the half-swapped partner.
inline std::uint64_t half_swap(std::uint64_t word, int n) {
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  return ((word & low) << n) | (word >> n);
}

inline int parity(std::uint64_t w) { return std::popcount(w) & 1; }

// [x, y] = a.d + b.c over GF(2) for x = (a, b), y = (c, d).
inline int symplectic_product(const PauliVector& x, const PauliVector& y) {
  if (x.n != y.n) throw std::invalid_argument("symplectic_product: qubit count mismatch");
  return parity(x.word & half_swap(y.word, y.n));
}

// Text form "x:<a bits>,z:<b bits>", qubit 1 first.
inline std::string to_string(const PauliVector& x) {
  std::string s = "x:";
  for (int i = x.n - 1; i >= 0; --i) s += ((x.a() >> i) & 1) ? '1' : '0';
  s += ",z:";
  for (int i = x.n - 1; i >= 0; --i) s += ((x.b() >> i) & 1) ? '1' : '0';
  return s;
}

inline PauliVector parse_pauli(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("parse_pauli: expected \"x:<bits>,z:<bits>\", got \"" + std::string(text) + "\""); };
  if (text.substr(0, 2) != "x:") throw bad();
  const std::size_t comma = text.find(",z:");
  if (comma == std::string_view::npos) throw bad();
  const std::string_view abits = text.substr(2, comma - 2);
  const std::string_view bbits = text.substr(comma + 3);
  if (abits.empty() || abits.size() != bbits.size() || abits.size() > 31) throw bad();
  std::uint64_t a = 0, b = 0;
  for (const char c : abits) {
    if (c != '0' && c != '1') throw bad();
    a = (a << 1) | static_cast<std::uint64_t>(c - '0');
  }
  for (const char c : bbits) {
    if (c != '0' && c != '1') throw bad();
    b = (b << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return PauliVector::from_parts(static_cast<int>(abits.size()), a, b);
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

namespace detail {

// Reduce r against a descending RREF word basis. Result is 0 iff r is in the
// span.
inline std::uint64_t reduce(std::uint64_t r, const std::vector<std::uint64_t>& rows) {
  for (const std::uint64_t b : rows) r = std::min(r, r ^ b);
  return r;
}

// Insert a word into a descending RREF basis, keeping the basis reduced.
// Returns false when r was already in the span.
inline bool rref_insert(std::vector<std::uint64_t>& rows, std::uint64_t r) {
  r = reduce(r, rows);
  if (r == 0) return false;
  const std::uint64_t lead = std::bit_floor(r);
  for (std::uint64_t& b : rows)
    if (b & lead) b ^= r;
  rows.insert(std::upper_bound(rows.begin(), rows.end(), r, std::greater<>()), r);
  return true;
}

}  // namespace detail

// A linear subspace of F_2^{2n} held as a canonical GF(2) reduced row-echelon
// basis (rows in descending word order, distinct pivots, pivots cleared from
// the other rows). Equal subspaces compare equal representation-wise.
struct Subspace {
  int n = 0;
  std::vector<std::uint64_t> rows;

  static Subspace zero(int n) {
    if (n < 1 || n > 31) throw std::invalid_argument("Subspace: n must be in [1, 31]");
    return Subspace{n, {}};
  }

  static Subspace full(int n) {
    Subspace s = zero(n);
    for (int i = 2 * n - 1; i >= 0; --i) s.rows.push_back(std::uint64_t{1} << i);
    return s;
  }

  int dim() const { return static_cast<int>(rows.size()); }

  bool contains(std::uint64_t word) const { return detail::reduce(word, rows) == 0; }
  bool contains(const PauliVector& x) const {
    if (x.n != n) throw std::invalid_argument("Subspace::contains: qubit count mismatch");
    return contains(x.word);
  }

  // All 2^dim member words, in subset-enumeration order (element 0 first).
  std::vector<std::uint64_t> element_words() const {
    if (dim() > 26) throw std::invalid_argument("Subspace::element_words: dim > 26");
    std::vector<std::uint64_t> out(std::size_t{1} << dim());
    out[0] = 0;
    for (std::size_t s = 1; s < out.size(); ++s)
      out[s] = out[s & (s - 1)] ^ rows[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }

  std::vector<PauliVector> basis() const {
    std::vector<PauliVector> out;
    out.reserve(rows.size());
    for (const std::uint64_t r : rows) out.emplace_back(n, r);
    return out;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

inline Subspace span_words(int n, const std::vector<std::uint64_t>& generators) {
  Subspace s = Subspace::zero(n);
  for (const std::uint64_t g : generators) {
    if (g >> (2 * n)) throw std::invalid_argument("span: generator has bits beyond 2n");
    detail::rref_insert(s.rows, g);
  }
  return s;
}

inline Subspace span(int n, const std::vector<PauliVector>& generators) {
  std::vector<std::uint64_t> words;
  words.reserve(generators.size());
  for (const PauliVector& g : generators) {
    if (g.n != n) throw std::invalid_argument("span: qubit count mismatch");
    words.push_back(g.word);
  }
  return span_words(n, words);
}

// Smallest subspace containing both arguments.
inline Subspace join(const Subspace& a, const Subspace& b) {
  if (a.n != b.n) throw std::invalid_argument("join: qubit count mismatch");
  Subspace s = a;
  for (const std::uint64_t r : b.rows) detail::rref_insert(s.rows, r);
  return s;
}

// A^perp = { x : [x, a] = 0 for all a in A }. Nullspace of the half-swapped
// basis, so dim(A^perp) = 2n - dim(A).
inline Subspace symplectic_complement(const Subspace& a) {
  const int width = 2 * a.n;
  std::vector<std::uint64_t> m;
  m.reserve(a.rows.size());
  for (const std::uint64_t r : a.rows) detail::rref_insert(m, half_swap(r, a.n));

  std::uint64_t pivot_mask = 0;
  for (const std::uint64_t r : m) pivot_mask |= std::bit_floor(r);

  std::vector<std::uint64_t> null_basis;
  for (int j = width - 1; j >= 0; --j) {
    const std::uint64_t jbit = std::uint64_t{1} << j;
    if (pivot_mask & jbit) continue;
    std::uint64_t v = jbit;
    for (const std::uint64_t r : m)
      if (r & jbit) v |= std::bit_floor(r);
    null_basis.push_back(v);
  }
  return span_words(a.n, null_basis);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  return symplectic_complement(join(symplectic_complement(a), symplectic_complement(b)));
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class SubspaceClass { isotropic, lagrangian, symplectic, generic };

inline bool is_isotropic(const Subspace& v) {
  for (std::size_t i = 0; i < v.rows.size(); ++i)
    for (std::size_t j = i + 1; j < v.rows.size(); ++j)
      if (parity(v.rows[i] & half_swap(v.rows[j], v.n))) return false;
  return true;
}

inline bool is_lagrangian(const Subspace& v) { return v.dim() == v.n && is_isotropic(v); }

// V is symplectic iff the Gram matrix [v_i, v_j] of any basis is nonsingular,
// i.e. V meets V^perp trivially.
inline bool is_symplectic(const Subspace& v) {
  const int k = v.dim();
  std::vector<std::uint64_t> gram(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (parity(v.rows[static_cast<std::size_t>(i)] & half_swap(v.rows[static_cast<std::size_t>(j)], v.n)))
        gram[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  std::vector<std::uint64_t> basis;
  for (const std::uint64_t row : gram) detail::rref_insert(basis, row);
  return static_cast<int>(basis.size()) == k;
}

// Most specific label, with lagrangian taking precedence over isotropic. The
// zero subspace is reported isotropic (it also meets the symplectic
// definition; use is_symplectic for the raw predicate).
inline SubspaceClass classify(const Subspace& v) {
  if (is_isotropic(v)) return v.dim() == v.n ? SubspaceClass::lagrangian : SubspaceClass::isotropic;
  if (is_symplectic(v)) return SubspaceClass::symplectic;
  return SubspaceClass::generic;
}

inline std::string to_string(SubspaceClass c) {
  switch (c) {
    case SubspaceClass::isotropic: return "isotropic";
    case SubspaceClass::lagrangian: return "lagrangian";
    case SubspaceClass::symplectic: return "symplectic";
    case SubspaceClass::generic: return "generic";
  }
  return "generic";
}

// ---------------------------------------------------------------------------
// Symplectic Gram-Schmidt
// ---------------------------------------------------------------------------

// Hyperbolic-pair decomposition of a subspace: generators
// x_1, z_1, ..., x_k, z_k, z_{k+1}, ..., z_{d-2k} with [x_i, z_j] = delta_ij
// and all other products zero. The central part spans V intersect V^perp.
struct GramSchmidtDecomposition {
  std::vector<std::pair<PauliVector, PauliVector>> hyperbolic_pairs;
  std::vector<PauliVector> central;
  int source_dim = 0;
};

inline GramSchmidtDecomposition symplectic_gram_schmidt(const Subspace& v) {
  const int n = v.n;
  std::vector<std::uint64_t> gens = v.rows;
  GramSchmidtDecomposition out;
  out.source_dim = v.dim();

  const auto sp = [n](std::uint64_t x, std::uint64_t y) { return parity(x & half_swap(y, n)); };

  while (!gens.empty()) {
    const std::uint64_t x = gens.front();
    gens.erase(gens.begin());
    std::size_t partner = gens.size();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (sp(x, gens[j])) {
        partner = j;
        break;
      }
    if (partner == gens.size()) {
      out.central.emplace_back(n, x);
      continue;
    }
    const std::uint64_t z = gens[partner];
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(partner));
    for (std::uint64_t& g : gens) {
      const int gz = sp(g, z);
      const int gx = sp(g, x);
      if (gz) g ^= x;
      if (gx) g ^= z;
    }
    out.hyperbolic_pairs.emplace_back(PauliVector(n, x), PauliVector(n, z));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace detail {

inline void for_each_combination(int total, int pick, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (pick == 0) {
    fn(idx);
    return;
  }
  for (;;) {
    fn(idx);
    int i = pick - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - pick + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < pick; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// All subspaces of F_2^{2n} of the given dimension, by direct RREF
// enumeration (choose pivot columns, fill the free cells). Intended for the
// exhaustive-oracle tier; cost is the Gaussian binomial [2n choose dim]_2.
inline std::vector<Subspace> enumerate_subspaces(int n, int dim) {
  const int width = 2 * n;
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_subspaces: n must be in [1, 6]");
  if (dim < 0 || dim > width) throw std::invalid_argument("enumerate_subspaces: bad dimension");
  std::vector<Subspace> out;
  // Column c is bit (2n-1-c); pivot columns ascend, so leading bits descend.
  detail::for_each_combination(width, dim, [&](const std::vector<int>& pivots) {
    std::uint64_t pivot_bits = 0;
    for (const int p : pivots) pivot_bits |= std::uint64_t{1} << (width - 1 - p);
    std::vector<std::pair<int, int>> free_cells;  // (row, bit)
    for (int i = 0; i < dim; ++i)
      for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < width; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << (width - 1 - c);
        if (!(pivot_bits & bit)) free_cells.emplace_back(i, width - 1 - c);
      }
    const std::size_t combos = std::size_t{1} << free_cells.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Subspace s = Subspace::zero(n);
      s.rows.assign(static_cast<std::size_t>(dim), 0);
      for (int i = 0; i < dim; ++i)
        s.rows[static_cast<std::size_t>(i)] = std::uint64_t{1} << (width - 1 - pivots[static_cast<std::size_t>(i)]);
      for (std::size_t f = 0; f < free_cells.size(); ++f)
        if (mask & (std::size_t{1} << f))
          s.rows[static_cast<std::size_t>(free_cells[f].first)] |= std::uint64_t{1} << free_cells[f].second;
      out.push_back(std::move(s));
    }
  });
  return out;
}

inline std::vector<Subspace> enumerate_all_subspaces(int n) {
  std::vector<Subspace> out;
  for (int d = 0; d <= 2 * n; ++d) {
    auto part = enumerate_subspaces(n, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// All Lagrangian subspaces; there are prod_{k=1..n} (2^k + 1) of them.
inline std::vector<Subspace> enumerate_lagrangians(int n) {
  if (n > 3) throw std::invalid_argument("enumerate_lagrangians: n must be <= 3");
  std::vector<Subspace> out;
  for (Subspace& s : enumerate_subspaces(n, n))
    if (is_isotropic(s)) out.push_back(std::move(s));
  return out;
}

inline Subspace random_subspace(int n, int dim, SplitMix64& rng) {
  if (dim < 0 || dim > 2 * n) throw std::invalid_argument("random_subspace: bad dimension");
  const std::uint64_t mask = (std::uint64_t{1} << (2 * n)) - 1;
  Subspace s = Subspace::zero(n);
  while (s.dim() < dim) detail::rref_insert(s.rows, rng.next() & mask);
  return s;
}

// Grows an isotropic subspace to a random Lagrangian one coset choice at a
// time (every new generator is drawn from T^perp, so isotropy is preserved).
inline Subspace random_lagrangian(int n, SplitMix64& rng) {
  Subspace t = Subspace::zero(n);
  while (t.dim() < n) {
    const Subspace c = symplectic_complement(t);
    for (;;) {
      std::uint64_t v = 0;
      for (const std::uint64_t row : c.rows)
        if (rng.coin()) v ^= row;
      if (!t.contains(v)) {
        detail::rref_insert(t.rows, v);
        break;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Lagrangian extension and isotropic covers
// ---------------------------------------------------------------------------

// Extends an isotropic T to a Lagrangian L >= T by repeatedly adjoining the
// first complement basis vector outside T. Deterministic.
inline Subspace extend_to_lagrangian(const Subspace& t) {
  if (!is_isotropic(t)) throw std::invalid_argument("extend_to_lagrangian: subspace is not isotropic");
  Subspace l = t;
  while (l.dim() < l.n) {
    const Subspace c = symplectic_complement(l);
    bool grew = false;
    for (const std::uint64_t v : c.rows)
      if (!l.contains(v)) {
        detail::rref_insert(l.rows, v);
        grew = true;
        break;
      }
    if (!grew) throw std::logic_error("extend_to_lagrangian: no extension found");
  }
  return l;
}

namespace detail {

// Partition of the nonzero vectors of the standard symplectic F_2^{2k} into
// 2^k + 1 maximal isotropic subspaces, found by exact-cover backtracking over
// the enumerated Lagrangians. Point v (a word in [1, 4^k)) is bit v-1.
inline std::vector<Subspace> standard_isotropic_spread(int k) {
  const std::vector<Subspace> candidates = enumerate_lagrangians(k);
  std::vector<std::uint64_t> masks;
  masks.reserve(candidates.size());
  for (const Subspace& c : candidates) {
    std::uint64_t m = 0;
    for (const std::uint64_t w : c.element_words())
      if (w) m |= std::uint64_t{1} << (w - 1);
    masks.push_back(m);
  }
  const int points = (1 << (2 * k)) - 1;  // nonzero vectors; 63 at k = 3
  const std::uint64_t all = (std::uint64_t{1} << points) - 1;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  const auto search = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == all) {
      best = chosen;
      return true;
    }
    const int point = std::countr_one(covered);  // lowest uncovered point
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!(masks[i] & (std::uint64_t{1} << point))) continue;
      if (masks[i] & covered) continue;
      chosen.push_back(i);
      if (self(self, covered | masks[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) throw std::logic_error("standard_isotropic_spread: no spread found");
  std::vector<Subspace> out;
  out.reserve(best.size());
  for (const std::size_t i : best) out.push_back(candidates[i]);
  return out;
}

}  // namespace detail

// Covers a symplectic subspace S of dimension 2k by exactly 2^k + 1 isotropic
// subspaces of dimension k with pairwise trivial intersection. Search-based,
// so k <= 3.
inline std::vector<Subspace> isotropic_cover(const Subspace& s) {
  if (!is_symplectic(s) || s.dim() == 0)
    throw std::invalid_argument("isotropic_cover: subspace is not symplectic of positive dimension");
  if (s.dim() % 2 != 0) throw std::logic_error("isotropic_cover: symplectic subspace with odd dimension");
  const int k = s.dim() / 2;
  if (k > 3) throw std::invalid_argument("isotropic_cover: dimension exceeds the search bound (k <= 3)");

  const GramSchmidtDecomposition gs = symplectic_gram_schmidt(s);
  if (static_cast<int>(gs.hyperbolic_pairs.size()) != k || !gs.central.empty())
    throw std::logic_error("isotropic_cover: decomposition disagrees with classification");

  // Form-preserving embedding of the standard F_2^{2k} into S.
  const auto embed = [&](std::uint64_t u) {
    std::uint64_t w = 0;
    for (int i = 0; i < k; ++i) {
      if ((u >> (2 * k - 1 - i)) & 1) w ^= gs.hyperbolic_pairs[static_cast<std::size_t>(i)].first.word;   // a-part
      if ((u >> (k - 1 - i)) & 1) w ^= gs.hyperbolic_pairs[static_cast<std::size_t>(i)].second.word;      // b-part
    }
    return w;
  };

  std::vector<Subspace> out;
  for (const Subspace& part : detail::standard_isotropic_spread(k)) {
    std::vector<std::uint64_t> gens;
    gens.reserve(part.rows.size());
    for (const std::uint64_t r : part.rows) gens.push_back(embed(r));
    out.push_back(span_words(s.n, gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stabtest::gf2
