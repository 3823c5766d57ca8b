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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabtest/gf2.hpp"

namespace stabtest::fourier {

enum class Side { primal, hat };

// A dense real-valued function on F_2^{2n}, indexed by the canonical packed
// word of gf2::PauliVector. `side` is bookkeeping for which side of the
// symplectic transform the table lives on.
struct FourierTable {
  int n = 0;
  Side side = Side::primal;
  std::vector<double> values;

  double& operator[](std::uint64_t word) { return values[word]; }
  double operator[](std::uint64_t word) const { return values[word]; }
  std::size_t size() const { return values.size(); }
};

inline FourierTable make_table(int n, Side side = Side::primal) {
  if (n < 1 || n > 13) throw std::invalid_argument("make_table: n must be in [1, 13]");
  return FourierTable{n, side, std::vector<double>(std::size_t{1} << (2 * n), 0.0)};
}

inline void check_table(const FourierTable& f, const char* where) {
  if (f.n < 1 || f.values.size() != (std::size_t{1} << (2 * f.n)))
    throw std::invalid_argument(std::string(where) + ": table length is not 4^n");
}

inline void check_same_n(const FourierTable& f, const FourierTable& g, const char* where) {
  check_table(f, where);
  check_table(g, where);
  if (f.n != g.n) throw std::invalid_argument(std::string(where) + ": qubit count mismatch");
}

// f_hat(a) = 4^{-n} sum_x (-1)^{[a,x]} f(x). Since [a,x] is the plain dot
// product of a against the half-swapped x, this is a Walsh-Hadamard butterfly
// followed by a half-swap index permutation and the 4^{-n} scale; O(N log N).
inline FourierTable symplectic_transform(const FourierTable& f) {
  check_table(f, "symplectic_transform");
  const std::size_t size = f.values.size();
  std::vector<double> tmp = f.values;
  for (std::size_t stride = 1; stride < size; stride <<= 1)
    for (std::size_t block = 0; block < size; block += 2 * stride)
      for (std::size_t i = block; i < block + stride; ++i) {
        const double lo = tmp[i];
        const double hi = tmp[i + stride];
        tmp[i] = lo + hi;
        tmp[i + stride] = lo - hi;
      }
  FourierTable out{f.n, f.side == Side::primal ? Side::hat : Side::primal,
                   std::vector<double>(size)};
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t a = 0; a < size; ++a)
    out.values[a] = scale * tmp[gf2::half_swap(a, f.n)];
  return out;
}

// Inverse of the transform: f = 4^n * transform(f_hat) by the double-hat rule.
inline FourierTable inverse_transform(const FourierTable& f) {
  FourierTable out = symplectic_transform(f);
  const double scale = static_cast<double>(out.values.size());
  for (double& v : out.values) v *= scale;
  return out;
}

// (f * g)(x) = 4^{-n} sum_t f(t) g(t + x), evaluated directly. The transform
// identity (f*g)^ = f^ g^ is a checked property, not the implementation, so
// the two routes stay independent.
inline FourierTable convolve(const FourierTable& f, const FourierTable& g) {
  check_same_n(f, g, "convolve");
  const std::size_t size = f.values.size();
  FourierTable out{f.n, f.side, std::vector<double>(size, 0.0)};
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t x = 0; x < size; ++x) {
    double acc = 0.0;
    for (std::size_t t = 0; t < size; ++t) acc += f.values[t] * g.values[t ^ x];
    out.values[x] = scale * acc;
  }
  return out;
}

// Primal-side Plancherel inner product 4^{-n} sum_x f(x) g(x); equal to
// sum_a f_hat(a) g_hat(a).
inline double plancherel_inner(const FourierTable& f, const FourierTable& g) {
  check_same_n(f, g, "plancherel_inner");
  double acc = 0.0;
  for (std::size_t x = 0; x < f.values.size(); ++x) acc += f.values[x] * g.values[x];
  return acc / static_cast<double>(f.values.size());
}

// sum_{x in T} f(x). Dual to |T| sum_{x in T^perp} f_hat(x).
inline double subspace_sum(const FourierTable& f, const gf2::Subspace& t) {
  check_table(f, "subspace_sum");
  if (f.n != t.n) throw std::invalid_argument("subspace_sum: qubit count mismatch");
  double acc = 0.0;
  for (const std::uint64_t w : t.element_words()) acc += f.values[w];
  return acc;
}

inline double sum(const FourierTable& f) {
  double acc = 0.0;
  for (const double v : f.values) acc += v;
  return acc;
}

// JSON form: plain array in canonical word order.
inline nlohmann::json to_json(const FourierTable& f) { return nlohmann::json(f.values); }

inline std::string bits(std::uint64_t v, int width) {
  std::string s;
  for (int i = width - 1; i >= 0; --i) s += ((v >> i) & 1) ? '1' : '0';
  return s;
}

inline void write_csv(std::ostream& os, const FourierTable& f) {
  check_table(f, "write_csv");
  os << "index,a_bits,b_bits,value\n";
  char buf[64];
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", f.values[i]);
    os << i << ',' << bits(i >> f.n, f.n) << ',' << bits(i & ((std::uint64_t{1} << f.n) - 1), f.n)
       << ',' << buf << '\n';
  }
}

}  // namespace stabtest::fourier
