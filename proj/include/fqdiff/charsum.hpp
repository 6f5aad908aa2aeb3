#pragma once

// Quadratic character sums sum_x chi(f(x)) over F_q.
//
// Enumeration is the normative method everywhere in this module; closed forms
// (quadratic sums, cyclotomic numbers, the T-count identities) are evaluated
// next to it and compared, never used in its place.

#include <cstdint>
#include <optional>
#include <utility>

#include "fqdiff/field.hpp"
#include "fqdiff/poly.hpp"

namespace fqdiff::charsum {

enum class SumMethod { direct, closed_form };

struct CharSumReport {
  std::int64_t value = 0;
  SumMethod method = SumMethod::direct;
  std::optional<std::pair<double, double>> weil_interval;  // [-(d-1)sqrt(q), (d-1)sqrt(q)]
  std::optional<bool> within_weil;
  int distinct_roots = -1;  // -1 when not computed
};

std::int64_t char_sum_serial(const FieldCtx& ctx, const Poly& f);

// Direct sum. When `distinct_roots` is given the Weil interval is attached, and
// `within_weil` is set unless f is a constant times a square.
CharSumReport char_sum(const FieldCtx& ctx, const Poly& f,
                       std::optional<int> distinct_roots = std::nullopt);

// char_sum with the distinct-root count computed from f itself.
CharSumReport char_sum_certified(const FieldCtx& ctx, const Poly& f);

// sum chi(a2 x^2 + a1 x + a0) = -chi(a2) if a1^2 - 4 a0 a2 != 0, else (q-1) chi(a2).
// NotQuadratic when a2 = 0.
CharSumReport quadratic_sum_closed(const FieldCtx& ctx, Elem a2, Elem a1, Elem a0);

// q + 1 + sum chi(f) for y^2 = f(x). DegreeMismatch unless deg f = 3,
// RepeatedRoots unless gcd(f, f') is constant.
std::int64_t ec_point_count(const FieldCtx& ctx, const Poly& cubic);

// Exact test |sum chi(f)| <= (d-1) sqrt(q). PerfectSquareInput if f = c g^2.
bool weil_certify(const FieldCtx& ctx, const Poly& f, int distinct_roots);

struct CyclotomicNumbers {
  std::int64_t n00 = 0;
  std::int64_t n01 = 0;
  std::int64_t n10 = 0;
  std::int64_t n11 = 0;

  friend bool operator==(const CyclotomicNumbers&, const CyclotomicNumbers&) = default;
};

// (i, j) = #{x : chi(x) = (-1)^i, chi(x+1) = (-1)^j}, enumerated and then
// checked against the closed forms for q mod 4 (InternalInconsistency on mismatch).
CyclotomicNumbers cyclotomic_numbers(const FieldCtx& ctx);
CyclotomicNumbers cyclotomic_closed_form(const FieldCtx& ctx);

// sum chi(x (x+1) (x+4)).
std::int64_t gamma_pn(const FieldCtx& ctx);
Poly gamma_pn_poly(const FieldCtx& ctx);

// The cubics behind Gamma_0(u), Gamma_1(u), Gamma_2(u):
//   (u+1)x^3 - 4(u+1)x^2 + 4u^2(u+1)x
//   (u+1)^2 x^3 + (u^2-2u-2)x^2 + (1-u^2)x
//   (u+1)x^3 - 4(u+2)(u+1)x^2 + 4(u+2)^2(u+1)x - 16u^2(u+1)^2
// Coefficients are used as they come out for every u, degenerate or not.
Poly gamma0_poly(const FieldCtx& ctx, Elem u);
Poly gamma1_poly(const FieldCtx& ctx, Elem u);
Poly gamma2_poly(const FieldCtx& ctx, Elem u);
// Variant of Gamma_0 whose last term is the constant 4u^2(u+1). It does not
// satisfy the T_1 identity; kept so reports can show the difference.
Poly gamma0_constant_term_poly(const FieldCtx& ctx, Elem u);

struct GammaSums {
  CharSumReport gamma0;
  CharSumReport gamma1;
  CharSumReport gamma2;
};

GammaSums gammas(const FieldCtx& ctx, Elem u);

struct TCounts {
  Elem u;
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  std::int64_t t = 0;
  std::int64_t gamma0 = 0, gamma1 = 0, gamma2 = 0;
  std::int64_t gamma0_neg = 0, gamma1_neg = 0, gamma2_neg = 0;
  // q - 7 - Gamma_0(u) + Gamma_1(u) - Gamma_2(u), compared with 8 t1.
  std::int64_t t1_identity_rhs = 0;
  bool t1_identity_holds = false;
  // 2q - 14 + Gamma_1(u) - Gamma_2(u) + Gamma_1(-u) - Gamma_2(-u), compared with 8 t.
  std::int64_t t_identity_rhs = 0;
  bool t_identity_holds = false;
};

// T_1(u): z != 0 with chi((u+1)z) = -1, chi(z^2 - 4(u+1)z) = 1, chi(z^2 - 4z + 4u^2) = 1.
// T_2(u): z != 0 with chi((u+1)z) = 1, chi(z^2 + 4(u-1)z) = 1, chi(z^2 - 4z + 4u^2) = 1.
std::int64_t t1_count(const FieldCtx& ctx, Elem u);
std::int64_t t2_count(const FieldCtx& ctx, Elem u);

// NotInU1 unless chi(u+1) = chi(u-1).
TCounts t_counts(const FieldCtx& ctx, Elem u);

}  // namespace fqdiff::charsum
