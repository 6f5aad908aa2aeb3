#include "fqdiff/charsum.hpp"

#include <cmath>
#include <cstdlib>

#include "fqdiff/parallel.hpp"

namespace fqdiff::charsum {
namespace {

std::int64_t direct_sum(const FieldCtx& ctx, const Poly& f) {
  return parallel::sum(ctx.q(), [&](std::uint32_t i) -> std::int64_t {
    return ctx.quad_char(poly::eval(ctx, f, Elem{i}));
  });
}

// |value| <= (d-1) sqrt(q) without floating point.
bool within_bound(std::int64_t value, int d, std::uint32_t q) {
  if (d < 1) return value == 0;
  const auto radius_sq = static_cast<std::int64_t>(d - 1) * (d - 1) * q;
  return value * value <= radius_sq;
}

void attach_weil(const FieldCtx& ctx, const Poly& f, int d, CharSumReport& report) {
  const double radius = (d - 1) * std::sqrt(static_cast<double>(ctx.q()));
  report.distinct_roots = d;
  report.weil_interval = std::pair{-radius, radius};
  if (!f.is_zero() && f.degree() > 0 && !poly::is_constant_times_square(ctx, f)) {
    report.within_weil = within_bound(report.value, d, ctx.q());
  }
}

}  // namespace

std::int64_t char_sum_serial(const FieldCtx& ctx, const Poly& f) {
  return parallel::sum_serial(ctx.q(), [&](std::uint32_t i) -> std::int64_t {
    return ctx.quad_char(poly::eval(ctx, f, Elem{i}));
  });
}

CharSumReport char_sum(const FieldCtx& ctx, const Poly& f, std::optional<int> distinct_roots) {
  CharSumReport report;
  report.value = direct_sum(ctx, f);
  if (distinct_roots) attach_weil(ctx, f, *distinct_roots, report);
  return report;
}

CharSumReport char_sum_certified(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) return char_sum(ctx, f);
  return char_sum(ctx, f, poly::distinct_root_count(ctx, f));
}

CharSumReport quadratic_sum_closed(const FieldCtx& ctx, Elem a2, Elem a1, Elem a0) {
  if (a2 == Elem{}) throw Error(ErrorCode::NotQuadratic, "leading coefficient a2 is zero");
  const Elem disc = ctx.sub(ctx.mul(a1, a1), ctx.mul(ctx.embed_int(4), ctx.mul(a0, a2)));
  CharSumReport report;
  report.method = SumMethod::closed_form;
  const int chi_a2 = ctx.quad_char(a2);
  report.value = disc != Elem{} ? -chi_a2 : static_cast<std::int64_t>(ctx.q() - 1) * chi_a2;
  return report;
}

std::int64_t ec_point_count(const FieldCtx& ctx, const Poly& cubic) {
  if (cubic.degree() != 3) {
    throw Error(ErrorCode::DegreeMismatch, "point count needs a cubic");
  }
  if (poly::gcd(ctx, cubic, poly::derivative(ctx, cubic)).degree() != 0) {
    throw Error(ErrorCode::RepeatedRoots, "cubic has a repeated root");
  }
  return static_cast<std::int64_t>(ctx.q()) + 1 + direct_sum(ctx, cubic);
}

bool weil_certify(const FieldCtx& ctx, const Poly& f, int distinct_roots) {
  if (f.degree() < 1 || poly::is_constant_times_square(ctx, f)) {
    throw Error(ErrorCode::PerfectSquareInput, "Weil bound needs f not of the form c*g^2");
  }
  return within_bound(direct_sum(ctx, f), distinct_roots, ctx.q());
}

CyclotomicNumbers cyclotomic_closed_form(const FieldCtx& ctx) {
  const std::int64_t q = ctx.q();
  if (q % 4 == 1) return {(q - 5) / 4, (q - 1) / 4, (q - 1) / 4, (q - 1) / 4};
  return {(q - 3) / 4, (q + 1) / 4, (q - 3) / 4, (q - 3) / 4};
}

CyclotomicNumbers cyclotomic_numbers(const FieldCtx& ctx) {
  CyclotomicNumbers c;
  for (const Elem x : ctx.elements()) {
    const int a = ctx.quad_char(x);
    const int b = ctx.quad_char(ctx.add(x, ctx.one()));
    if (a == 0 || b == 0) continue;
    if (a == 1 && b == 1) ++c.n00;
    if (a == 1 && b == -1) ++c.n01;
    if (a == -1 && b == 1) ++c.n10;
    if (a == -1 && b == -1) ++c.n11;
  }
  if (c != cyclotomic_closed_form(ctx)) {
    throw Error(ErrorCode::InternalInconsistency, "cyclotomic numbers disagree with closed form");
  }
  return c;
}

Poly gamma_pn_poly(const FieldCtx& ctx) {
  // x (x+1) (x+4) = x^3 + 5x^2 + 4x
  return Poly::from_ints(ctx, {0, 4, 5, 1});
}

std::int64_t gamma_pn(const FieldCtx& ctx) { return direct_sum(ctx, gamma_pn_poly(ctx)); }

Poly gamma0_poly(const FieldCtx& ctx, Elem u) {
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem four = ctx.embed_int(4);
  return Poly{ctx.zero(), ctx.mul(four, ctx.mul(ctx.mul(u, u), u1)), ctx.neg(ctx.mul(four, u1)), u1};
}

Poly gamma0_constant_term_poly(const FieldCtx& ctx, Elem u) {
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem four = ctx.embed_int(4);
  return Poly{ctx.mul(four, ctx.mul(ctx.mul(u, u), u1)), ctx.zero(), ctx.neg(ctx.mul(four, u1)), u1};
}

Poly gamma1_poly(const FieldCtx& ctx, Elem u) {
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem uu = ctx.mul(u, u);
  const Elem x2 = ctx.sub(ctx.sub(uu, ctx.mul(ctx.embed_int(2), u)), ctx.embed_int(2));
  const Elem x1 = ctx.sub(ctx.one(), uu);
  return Poly{ctx.zero(), x1, x2, ctx.mul(u1, u1)};
}

Poly gamma2_poly(const FieldCtx& ctx, Elem u) {
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem u2 = ctx.add(u, ctx.embed_int(2));
  const Elem four = ctx.embed_int(4);
  const Elem c2 = ctx.neg(ctx.mul(four, ctx.mul(u2, u1)));
  const Elem c1 = ctx.mul(four, ctx.mul(ctx.mul(u2, u2), u1));
  const Elem c0 = ctx.neg(ctx.mul(ctx.embed_int(16), ctx.mul(ctx.mul(u, u), ctx.mul(u1, u1))));
  return Poly{c0, c1, c2, u1};
}

GammaSums gammas(const FieldCtx& ctx, Elem u) {
  return GammaSums{char_sum_certified(ctx, gamma0_poly(ctx, u)),
                   char_sum_certified(ctx, gamma1_poly(ctx, u)),
                   char_sum_certified(ctx, gamma2_poly(ctx, u))};
}

std::int64_t t1_count(const FieldCtx& ctx, Elem u) {
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem four_u1 = ctx.mul(ctx.embed_int(4), u1);
  const Elem four = ctx.embed_int(4);
  const Elem four_uu = ctx.mul(four, ctx.mul(u, u));
  return parallel::count_if(ctx.q(), [&](std::uint32_t i) {
    const Elem z{i};
    if (z == Elem{}) return false;
    const Elem zz = ctx.mul(z, z);
    return ctx.quad_char(ctx.mul(u1, z)) == -1 &&
           ctx.quad_char(ctx.sub(zz, ctx.mul(four_u1, z))) == 1 &&
           ctx.quad_char(ctx.add(ctx.sub(zz, ctx.mul(four, z)), four_uu)) == 1;
  });
}

std::int64_t t2_count(const FieldCtx& ctx, Elem u) {
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem four = ctx.embed_int(4);
  const Elem four_um1 = ctx.mul(four, ctx.sub(u, ctx.one()));
  const Elem four_uu = ctx.mul(four, ctx.mul(u, u));
  return parallel::count_if(ctx.q(), [&](std::uint32_t i) {
    const Elem z{i};
    if (z == Elem{}) return false;
    const Elem zz = ctx.mul(z, z);
    return ctx.quad_char(ctx.mul(u1, z)) == 1 &&
           ctx.quad_char(ctx.add(zz, ctx.mul(four_um1, z))) == 1 &&
           ctx.quad_char(ctx.add(ctx.sub(zz, ctx.mul(four, z)), four_uu)) == 1;
  });
}

TCounts t_counts(const FieldCtx& ctx, Elem u) {
  if (ctx.quad_char(ctx.add(u, ctx.one())) != ctx.quad_char(ctx.sub(u, ctx.one()))) {
    throw Error(ErrorCode::NotInU1, "t_counts needs chi(u+1) = chi(u-1), got u = " + ctx.format(u));
  }
  TCounts t;
  t.u = u;
  t.t1 = t1_count(ctx, u);
  t.t2 = t2_count(ctx, u);
  t.t = t.t1 + t.t2;

  const auto at_u = gammas(ctx, u);
  const auto at_neg = gammas(ctx, ctx.neg(u));
  t.gamma0 = at_u.gamma0.value;
  t.gamma1 = at_u.gamma1.value;
  t.gamma2 = at_u.gamma2.value;
  t.gamma0_neg = at_neg.gamma0.value;
  t.gamma1_neg = at_neg.gamma1.value;
  t.gamma2_neg = at_neg.gamma2.value;

  const std::int64_t q = ctx.q();
  t.t1_identity_rhs = q - 7 - t.gamma0 + t.gamma1 - t.gamma2;
  t.t1_identity_holds = 8 * t.t1 == t.t1_identity_rhs;
  t.t_identity_rhs = 2 * q - 14 + t.gamma1 - t.gamma2 + t.gamma1_neg - t.gamma2_neg;
  t.t_identity_holds = 8 * t.t == t.t_identity_rhs;
  return t;
}

}  // namespace fqdiff::charsum
