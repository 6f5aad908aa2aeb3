#include "fqdiff/nh.hpp"

#include <array>

namespace fqdiff::nh {

void require_family_field(const FieldCtx& ctx) {
  if (!ctx.q_is_3_mod_4() || ctx.q() < 7) {
    throw Error(ErrorCode::UnsupportedFieldShape,
                "the family needs q = 3 (mod 4) and q >= 7, got q = " + std::to_string(ctx.q()));
  }
}

NHParams NHParams::make(const FieldCtx& ctx, Elem u) {
  require_family_field(ctx);
  return NHParams{ctx, u, (ctx.q() - 1) / 2 - 1, ctx.q() - 2};
}

Elem f_eval(const NHParams& params, Elem x) noexcept {
  const auto& ctx = params.ctx;
  if (x == ctx.zero()) return ctx.zero();
  const Elem coeff = ctx.quad_char(x) == 1 ? ctx.add(params.u, ctx.one()) : ctx.sub(ctx.one(), params.u);
  return ctx.mul(coeff, ctx.inv(x));
}

Elem f_eval_power(const NHParams& params, Elem x) noexcept {
  const auto& ctx = params.ctx;
  return ctx.add(ctx.mul(params.u, ctx.pow(x, params.d1)), ctx.pow(x, params.d2));
}

std::string to_string(SpecialTag tag) {
  switch (tag) {
    case SpecialTag::zero: return "zero";
    case SpecialTag::plus_one: return "plus_one";
    case SpecialTag::minus_one: return "minus_one";
    case SpecialTag::plus_4_5: return "plus_4_5";
    case SpecialTag::minus_4_5: return "minus_4_5";
  }
  return "?";
}

ULabelFlags classify_u(const FieldCtx& ctx, Elem u, const TableA& table) {
  if (!ctx.q_is_3_mod_4()) {
    throw Error(ErrorCode::UnsupportedFieldShape, "classification needs q = 3 (mod 4)");
  }
  const Elem five_u = ctx.mul(ctx.embed_int(5), u);
  const Elem three = ctx.embed_int(3);
  const int c_plus = ctx.quad_char(ctx.add(u, ctx.one()));
  const int c_minus = ctx.quad_char(ctx.sub(u, ctx.one()));
  const int c_5p3 = ctx.quad_char(ctx.add(five_u, three));
  const int c_5m3 = ctx.quad_char(ctx.sub(five_u, three));

  ULabelFlags f;
  f.in_u1 = c_plus == c_minus;
  f.in_u0 = !f.in_u1;
  f.in_u10 = f.in_u1 && c_plus == -c_5p3;
  f.in_u11 = f.in_u1 && c_plus == -c_5m3;
  f.in_u12 = f.in_u1 && c_plus == c_5p3 && c_plus == c_5m3;

  if (u == ctx.zero()) {
    f.special = SpecialTag::zero;
  } else if (u == ctx.one()) {
    f.special = SpecialTag::plus_one;
  } else if (u == ctx.neg(ctx.one())) {
    f.special = SpecialTag::minus_one;
  } else if (ctx.p() != 5 && u == ctx.embed_ratio(4, 5)) {
    f.special = SpecialTag::plus_4_5;
  } else if (ctx.p() != 5 && u == ctx.embed_ratio(-4, 5)) {
    f.special = SpecialTag::minus_4_5;
  }
  f.in_table_a = table.contains(ctx, u);
  return f;
}

USetSizes u_set_sizes(const FieldCtx& ctx) {
  USetSizes s;
  for (const Elem u : ctx.elements()) {
    const auto f = classify_u(ctx, u);
    s.u0 += f.in_u0;
    s.u1 += f.in_u1;
    s.u10 += f.in_u10;
    s.u11 += f.in_u11;
    s.u10_or_u11 += f.in_u10 || f.in_u11;
    s.u10_and_u11 += f.in_u10 && f.in_u11;
    s.u12 += f.in_u12;
  }
  return s;
}

std::string to_string(ReducedCase c) {
  static constexpr std::array names{"I", "II", "III", "IV"};
  return names[static_cast<std::size_t>(c)];
}

SolveReport solve_derivative(const NHParams& params, Elem a, Elem b) {
  const auto& ctx = params.ctx;
  const Elem u = params.u;
  if (a == ctx.zero()) throw Error(ErrorCode::ZeroDirection, "solve_derivative needs a != 0");

  SolveReport r;
  r.a = a;
  r.b = b;

  // x = 0 gives b = (1 + u chi(a)) / a, x = -a gives b = (1 - u chi(a)) / a.
  const Elem a_inv = ctx.inv(a);
  const Elem u_chi = ctx.quad_char(a) == 1 ? u : ctx.neg(u);
  if (b == ctx.mul(ctx.add(ctx.one(), u_chi), a_inv)) r.solutions.push_back(ctx.zero());
  if (b == ctx.mul(ctx.sub(ctx.one(), u_chi), a_inv)) r.solutions.push_back(ctx.neg(a));
  r.n_special = static_cast<std::int64_t>(r.solutions.size());

  const Elem neg_a = ctx.neg(a);
  const Elem ab = ctx.mul(a, b);
  const Elem two_b = ctx.add(b, b);
  static constexpr std::array<std::array<int, 2>, 4> kTaus{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

  for (std::size_t c = 0; c < kTaus.size(); ++c) {
    const auto which = static_cast<ReducedCase>(c);
    const int tau_a = kTaus[c][0];
    const int tau_0 = kTaus[c][1];
    const Elem u_tau_a = tau_a == 1 ? u : ctx.neg(u);
    const Elem u_tau_0 = tau_0 == 1 ? u : ctx.neg(u);
    const Elem lin = ctx.sub(ctx.add(ab, u_tau_0), u_tau_a);
    const Elem con = ctx.mul(a, ctx.add(u_tau_0, ctx.one()));

    auto consider = [&](Elem x) {
      if (x == ctx.zero() || x == neg_a) {
        r.case_trace.push_back({which, x, false});
        return;
      }
      const bool desired = ctx.quad_char(ctx.add(x, a)) == tau_a && ctx.quad_char(x) == tau_0;
      r.case_trace.push_back({which, x, desired});
      if (desired) r.solutions.push_back(x);
    };

    if (b != ctx.zero()) {
      const Elem disc = ctx.sub(ctx.mul(lin, lin), ctx.mul(ctx.embed_int(4), ctx.mul(b, con)));
      const auto root = ctx.sqrt(disc);
      if (!root) continue;
      const Elem inv_2b = ctx.inv(two_b);
      const Elem neg_lin = ctx.neg(lin);
      consider(ctx.mul(ctx.add(neg_lin, root->first), inv_2b));
      if (root->first != ctx.zero()) consider(ctx.mul(ctx.add(neg_lin, root->second), inv_2b));
    } else if (lin != ctx.zero()) {
      consider(ctx.neg(ctx.div(con, lin)));
    } else if (con == ctx.zero()) {
      for (const Elem x : ctx.elements()) {
        if (ctx.quad_char(ctx.add(x, a)) == tau_a && ctx.quad_char(x) == tau_0) consider(x);
      }
    }
  }

  r.n_total = static_cast<std::int64_t>(r.solutions.size());
  r.n_generic = r.n_total - r.n_special;
  for (const Elem x : r.solutions) {
    if (ctx.sub(f_eval(params, ctx.add(x, a)), f_eval(params, x)) != b) {
      throw Error(ErrorCode::InternalInconsistency, "solver produced a non-solution x = " + ctx.format(x));
    }
  }
  return r;
}

std::int64_t special_column_pairs(const NHParams& params) {
  const auto& ctx = params.ctx;
  std::int64_t pairs = 0;
  for (const Elem a : ctx.elements()) {
    if (a == ctx.zero()) continue;
    const Elem u_chi = ctx.quad_char(a) == 1 ? params.u : ctx.neg(params.u);
    const Elem b_plus = ctx.div(ctx.add(ctx.one(), u_chi), a);
    const Elem b_minus = ctx.div(ctx.sub(ctx.one(), u_chi), a);
    pairs += solve_derivative(params, a, b_plus).n_total == 2;
    if (b_minus != b_plus) pairs += solve_derivative(params, a, b_minus).n_total == 2;
  }
  return pairs;
}

std::int64_t direct_count(const NHParams& params, Elem a, Elem b) {
  const auto& ctx = params.ctx;
  std::int64_t count = 0;
  for (const Elem x : ctx.elements()) {
    count += ctx.sub(f_eval(params, ctx.add(x, a)), f_eval(params, x)) == b;
  }
  return count;
}

}  // namespace fqdiff::nh
