// Copyright 2026 The sumprod Authors.
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


// Independent slow oracles. Nothing here routes through the library's
// tables, transforms or symbolic machinery.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t tau(std::uint64_t m) {
  std::uint64_t t = 0;
  for (std::uint64_t d = 1; d <= m; ++d) t += m % d == 0;
  return t;
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= m; ++p) {
    if (m % p == 0 && is_prime(p)) out.push_back(p);
  }
  return out;
}

// g(1) = 0, g(m) = tau(m) + sum over nonempty products d of distinct primes
// dividing m of g(m / d). Plain recursion, no memo.
inline std::uint64_t g(std::uint64_t m) {
  if (m == 1) return 0;
  const auto ps = primes_of(m);
  std::uint64_t total = tau(m);
  for (std::uint64_t mask = 1; mask < (1u << ps.size()); ++mask) {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (mask >> i & 1) d *= ps[i];
    }
    total += g(m / d);
  }
  return total;
}

inline C e(std::int64_t k, std::int64_t m) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(((k % m) + m) % m) / static_cast<double>(m);
  return {std::cos(t), std::sin(t)};
}

inline std::int64_t inverse(std::int64_t a, std::int64_t m) {
  for (std::int64_t y = 1; y < m; ++y) {
    if (((a % m + m) % m) * y % m == 1) return y;
  }
  return -1;
}

// Schoolbook product in F_p[t]/(f), coefficient vectors of length r,
// f given as c_0..c_r (monic).
inline std::vector<std::uint64_t> ext_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                          const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = 2 * r - 1; k >= r; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < r; ++i) prod[k - r + i] = (prod[k - r + i] + (p - c) * f[i] % p) % p;
  }
  prod.resize(r);
  return prod;
}

inline std::vector<std::uint64_t> unpack(std::uint64_t v, std::uint64_t p, std::size_t r) {
  std::vector<std::uint64_t> out(r);
  for (auto& c : out) {
    c = v % p;
    v /= p;
  }
  return out;
}

inline std::uint64_t pack(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

// z + z^p + ... + z^{p^{r-1}}, returned as its constant coefficient.
inline std::uint64_t ext_trace(std::uint64_t z, const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  auto x = unpack(z, p, r);
  std::vector<std::uint64_t> sum(r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) sum[i] = (sum[i] + x[i]) % p;
    auto y = x;
    for (std::uint64_t e = 1; e < p; ++e) y = ext_mul(y, x, f, p);
    x = y;
  }
  return sum[0];
}

inline std::vector<C> naive_dft(const std::vector<C>& in, int sign) {
  const std::size_t n = in.size();
  std::vector<C> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double t = sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      out[k] += in[j] * C(std::cos(t), std::sin(t));
    }
  }
  return out;
}

// Evaluation of a bivariate integer polynomial mod p, terms as (i, j, c).
struct Term {
  unsigned i, j;
  std::int64_t c;
};

inline std::uint64_t pw(std::uint64_t b, unsigned e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (unsigned k = 0; k < e; ++k) r = r * b % p;
  return r;
}

inline std::uint64_t eval(const std::vector<Term>& poly, std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : poly) {
    const std::uint64_t c = static_cast<std::uint64_t>(((t.c % static_cast<std::int64_t>(p)) + p) % p);
    acc = (acc + c * pw(x, t.i, p) % p * pw(y, t.j, p)) % p;
  }
  return acc;
}

// Value sets of f on each affine line of the plane F_p^2; calls visit(value
// set size, the constant value) for every line (direction + offset).
inline void for_each_line(std::uint64_t p, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& f,
                          const std::function<void(bool constant, std::uint64_t value)>& visit) {
  // Lines x = c and lines y = s x + c.
  for (std::uint64_t c = 0; c < p; ++c) {
    const std::uint64_t v0 = f(c, 0);
    bool constant = true;
    for (std::uint64_t t = 1; t < p && constant; ++t) constant = f(c, t) == v0;
    visit(constant, v0);
  }
  for (std::uint64_t s = 0; s < p; ++s) {
    for (std::uint64_t c = 0; c < p; ++c) {
      const std::uint64_t v0 = f(0, c);
      bool constant = true;
      for (std::uint64_t t = 1; t < p && constant; ++t) constant = f(t, (s * t + c) % p) == v0;
      visit(constant, v0);
    }
  }
}

// Degenerate iff for some direction every parallel line carries a constant
// value (valid for degree < p, where a polynomial of degree < p on a line is
// determined by its values).
inline bool degenerate(std::uint64_t p, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& f) {
  // Family of lines x = c.
  auto family_constant = [&](auto point) {
    for (std::uint64_t c = 0; c < p; ++c) {
      const auto [x0, y0] = point(c, 0);
      const std::uint64_t v0 = f(x0, y0);
      for (std::uint64_t t = 1; t < p; ++t) {
        const auto [x, y] = point(c, t);
        if (f(x, y) != v0) return false;
      }
    }
    return true;
  };
  if (family_constant([](std::uint64_t c, std::uint64_t t) { return std::pair{c, t}; })) return true;
  for (std::uint64_t s = 0; s < p; ++s) {
    if (family_constant([&](std::uint64_t c, std::uint64_t t) { return std::pair{t, (s * t + c) % p}; })) return true;
  }
  return false;
}

// {a : P - a vanishes on some whole line}.
inline std::vector<std::uint64_t> bad_values(std::uint64_t p,
                                             const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& f) {
  std::vector<bool> bad(p, false);
  for_each_line(p, f, [&](bool constant, std::uint64_t v) {
    if (constant) bad[v] = true;
  });
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (bad[a]) out.push_back(a);
  }
  return out;
}

}  // namespace oracle
