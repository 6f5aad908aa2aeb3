#include <algorithm>
#include <cmath>

#include "fqdiff/nh.hpp"
#include "fqdiff/oracle.hpp"
#include "fqdiff/parallel.hpp"

namespace fqdiff::nh {
namespace {

bool is_special(const FieldCtx& ctx, Elem u) {
  return u == ctx.zero() || u == ctx.one() || u == ctx.neg(ctx.one());
}

void require_u0_generic(const NHParams& params) {
  const auto& ctx = params.ctx;
  if (is_special(ctx, params.u) || !classify_u(ctx, params.u).in_u0) {
    throw Error(ErrorCode::WrongUClass, "needs u in U_0 \\ {0, +-1}, got u = " + ctx.format(params.u));
  }
}

// Both roots of 1 - u^2; it is a nonzero square for u in U_0 \ {0, +-1}.
std::pair<Elem, Elem> roots_of_one_minus_u_squared(const NHParams& params) {
  const auto& ctx = params.ctx;
  const auto r = ctx.sqrt(ctx.sub(ctx.one(), ctx.mul(params.u, params.u)));
  if (!r) throw Error(ErrorCode::InternalInconsistency, "1 - u^2 is not a square");
  return *r;
}

}  // namespace

bool four_solution_condition(const NHParams& params, Elem a, Elem b) {
  require_u0_generic(params);
  const auto& ctx = params.ctx;
  const Elem u = params.u;
  if (b == ctx.zero()) return false;

  const Elem four = ctx.embed_int(4);
  const Elem ab = ctx.mul(a, b);
  const Elem abab = ctx.mul(ab, ab);
  const Elem four_uu = ctx.mul(four, ctx.mul(u, u));

  if (ctx.quad_char(ctx.div(ctx.mul(a, ctx.add(u, ctx.one())), b)) != -1) return false;
  if (ctx.quad_char(ctx.sub(abab, ctx.mul(ctx.mul(four, ctx.add(u, ctx.one())), ab))) != 1) return false;
  if (ctx.quad_char(ctx.add(abab, ctx.mul(ctx.mul(four, ctx.sub(u, ctx.one())), ab))) != 1) return false;
  if (ctx.quad_char(ctx.sub(ctx.add(four_uu, abab), ctx.mul(four, ab))) != 1) return false;

  const auto [s_plus, s_minus] = roots_of_one_minus_u_squared(params);
  const Elem two_ab = ctx.add(ab, ab);
  auto fifth = [&](Elem s) {
    return ctx.quad_char(ctx.add(ctx.sub(two_ab, four_uu), ctx.mul(two_ab, s))) == 1;
  };
  const bool with_plus = fifth(s_plus);
  if (with_plus != fifth(s_minus)) {
    throw Error(ErrorCode::BranchAsymmetry, "fifth condition depends on the root of 1 - u^2");
  }
  return with_plus;
}

bool paired_root_condition(const NHParams& params, Elem a, Elem b) {
  const auto& ctx = params.ctx;
  const Elem u = params.u;
  const Elem four = ctx.embed_int(4);
  const Elem ab = ctx.mul(a, b);
  const Elem uu = ctx.mul(u, u);
  const Elem disc = ctx.add(ctx.sub(ctx.mul(ab, ab), ctx.mul(four, ab)), ctx.mul(four, uu));
  if (ctx.quad_char(disc) != 1) return false;
  const auto [r, neg_r] = *ctx.sqrt(disc);
  const Elem base = ctx.sub(ctx.add(uu, uu), ab);
  return ctx.quad_char(ctx.add(base, ctx.mul(u, r))) == -1 &&
         ctx.quad_char(ctx.add(base, ctx.mul(u, neg_r))) == -1;
}

bool phi_condition(const NHParams& params, Elem a, Elem b) {
  const auto& ctx = params.ctx;
  const Elem s = roots_of_one_minus_u_squared(params).first;
  const Elem two_ab = ctx.mul(ctx.embed_int(2), ctx.mul(a, b));
  const Elem four_uu = ctx.mul(ctx.embed_int(4), ctx.mul(params.u, params.u));
  return ctx.quad_char(ctx.sub(ctx.mul(two_ab, ctx.add(ctx.one(), s)), four_uu)) == 1;
}

bool table_a_candidate(const FieldCtx& ctx, Elem u) {
  if (is_special(ctx, u) || !classify_u(ctx, u).in_u0) return false;
  return !(ctx.p() > 3 && (u == ctx.embed_ratio(4, 5) || u == ctx.embed_ratio(-4, 5)));
}

SearchCounts m_count(const NHParams& params) {
  const auto& ctx = params.ctx;
  const Elem u = params.u;
  if (!table_a_candidate(ctx, u)) {
    throw Error(ErrorCode::WrongUClass, "m_count needs u in U_0 \\ {0, +-1, +-4/5}, got u = " + ctx.format(u));
  }
  const Elem four = ctx.embed_int(4);
  const Elem two = ctx.embed_int(2);
  const Elem u1 = ctx.add(u, ctx.one());
  const Elem neg_u1 = ctx.neg(u1);
  const Elem four_u1 = ctx.mul(four, u1);
  const Elem four_um1 = ctx.mul(four, ctx.sub(u, ctx.one()));
  const Elem four_uu = ctx.mul(four, ctx.mul(u, u));

  auto count_with = [&](Elem s) {
    const Elem phi = ctx.add(two, ctx.mul(two, s));
    return parallel::count_if(ctx.q(), [&](std::uint32_t i) {
      const Elem z{i};
      const Elem zz = ctx.mul(z, z);
      return ctx.quad_char(ctx.mul(neg_u1, z)) == 1 &&
             ctx.quad_char(ctx.sub(zz, ctx.mul(four_u1, z))) == 1 &&
             ctx.quad_char(ctx.add(zz, ctx.mul(four_um1, z))) == 1 &&
             ctx.quad_char(ctx.add(ctx.sub(zz, ctx.mul(four, z)), four_uu)) == 1 &&
             ctx.quad_char(ctx.sub(ctx.mul(phi, z), four_uu)) == 1;
    });
  };
  const auto [s_plus, s_minus] = roots_of_one_minus_u_squared(params);
  SearchCounts out;
  out.m_count = count_with(s_plus);
  if (out.m_count != count_with(s_minus)) {
    throw Error(ErrorCode::BranchAsymmetry, "M depends on the root of 1 - u^2");
  }
  const double q = ctx.q();
  out.lower_bound = (q - 6.0 - 39.0 * std::sqrt(q)) / 32.0;
  if (ctx.q() > 1533 && out.m_count == 0) {
    throw Error(ErrorCode::InternalInconsistency, "M = 0 although q > 1533");
  }
  return out;
}

SearchCounts n45_count(const FieldCtx& ctx) {
  if (ctx.p() == 3) {
    throw Error(ErrorCode::UnsupportedCharacteristic, "the +-4/5 counter needs p > 3");
  }
  const Elem c36 = ctx.embed_int(36);
  const Elem c20 = ctx.embed_int(20);
  const Elem c64 = ctx.embed_int(64);
  const Elem c4 = ctx.embed_int(4);
  SearchCounts out;
  out.n45_count = parallel::count_if(ctx.q(), [&](std::uint32_t i) {
    const Elem z{i};
    const Elem zz = ctx.mul(z, z);
    return ctx.quad_char(z) == -1 && ctx.quad_char(ctx.sub(zz, ctx.mul(c36, z))) == 1 &&
           ctx.quad_char(ctx.add(ctx.sub(zz, ctx.mul(c20, z)), c64)) == 1 &&
           ctx.quad_char(ctx.sub(z, c4)) == 1;
  });
  const double q = ctx.q();
  out.lower_bound = (q - 2.0 - 11.0 * std::sqrt(q)) / 16.0;
  if (ctx.q() > 124 && out.n45_count == 0) {
    throw Error(ErrorCode::InternalInconsistency, "N = 0 although q > 124");
  }
  return out;
}

std::vector<Elem> reproduce_table_a(const FieldCtx& ctx, std::uint32_t budget) {
  require_family_field(ctx);
  if (ctx.q() > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "q = " + std::to_string(ctx.q()) + " exceeds the oracle budget " + std::to_string(budget));
  }
  const auto hits = parallel::map<char>(ctx.q(), [&](std::uint32_t i) -> char {
    const Elem u{i};
    if (!table_a_candidate(ctx, u)) return 0;
    return oracle::uniformity_oracle_serial(ctx, oracle::nh_table(ctx, u)) == 3;
  });
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    if (hits[i]) out.push_back(Elem{i});
  }
  return out;
}

}  // namespace fqdiff::nh
