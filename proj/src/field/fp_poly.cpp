#include "fqdiff/fp_poly.hpp"

#include <algorithm>
#include <cassert>

namespace fqdiff::fp_poly {
namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

Poly sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t a = i < f.size() ? f[i] : 0;
    const std::uint64_t b = i < g.size() ? g[i] : 0;
    r[i] = static_cast<std::uint32_t>((a + p - b) % p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

Poly mod(Poly f, const Poly& g, std::uint32_t p) {
  const int dg = degree(g);
  assert(dg >= 0);
  const std::uint64_t lead_inv = inv_mod(g[static_cast<std::size_t>(dg)], p);
  trim(f);
  for (int df = degree(f); df >= dg; df = degree(f)) {
    const std::uint64_t factor = f[static_cast<std::size_t>(df)] * lead_inv % p;
    const int shift = df - dg;
    for (int i = 0; i <= dg; ++i) {
      auto& c = f[static_cast<std::size_t>(i + shift)];
      c = static_cast<std::uint32_t>((c + p - factor * g[static_cast<std::size_t>(i)] % p) % p);
    }
    trim(f);
  }
  return f;
}

Poly gcd(Poly f, Poly g, std::uint32_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return f;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(c * lead_inv % p);
  return f;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b, p), m, p);
    e >>= 1;
    if (e > 0) b = mod(mul(b, b, p), m, p);
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly x{0, 1};

  // x^(p^k) mod f, for k = 0..n
  std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = mod(x, f, p);
  for (int k = 1; k <= n; ++k) frob[static_cast<std::size_t>(k)] = powmod(frob[static_cast<std::size_t>(k - 1)], p, f, p);

  if (sub(frob[static_cast<std::size_t>(n)], frob[0], p) != Poly{}) return false;
  for (const auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    const Poly h = sub(frob[static_cast<std::size_t>(n / static_cast<int>(r))], frob[0], p);
    if (degree(gcd(h, f, p)) != 0) return false;
  }
  return true;
}

bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace fqdiff::fp_poly
