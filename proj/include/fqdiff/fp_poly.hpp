#pragma once

// Dense polynomials over the prime field F_p, constant term first.
// Only what modulus selection needs: Euclid, modular powering and Rabin's test.

#include <cstdint>
#include <vector>

namespace fqdiff::fp_poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly mul(const Poly& f, const Poly& g, std::uint32_t p);
Poly mod(Poly f, const Poly& g, std::uint32_t p);
Poly gcd(Poly f, Poly g, std::uint32_t p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p);

// Rabin: f monic of degree n is irreducible iff x^(p^n) = x mod f and
// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f, std::uint32_t p);

// Degree <= 3 only: irreducible iff no root in F_p. Kept as an independent check.
bool has_root(const Poly& f, std::uint32_t p);

}  // namespace fqdiff::fp_poly
