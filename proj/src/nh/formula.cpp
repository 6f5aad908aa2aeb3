#include <string>

#include "fqdiff/charsum.hpp"
#include "fqdiff/nh.hpp"

namespace fqdiff::nh {
namespace {

bool is_plus_minus_one(const FieldCtx& ctx, Elem u) {
  return u == ctx.one() || u == ctx.neg(ctx.one());
}

bool is_plus_minus_4_5(const FieldCtx& ctx, Elem u) {
  return ctx.p() > 3 && (u == ctx.embed_ratio(4, 5) || u == ctx.embed_ratio(-4, 5));
}

Spectrum scaled(const std::vector<std::int64_t>& per_b, std::int64_t factor) {
  std::vector<std::int64_t> omegas(per_b);
  for (auto& w : omegas) w *= factor;
  return Spectrum::from_counts(std::move(omegas), SpectrumMethod::formula);
}

FormulaResult plus_minus_one_spectrum(const FieldCtx& ctx) {
  if (ctx.p() == 3) {
    return Unsupported{"u = +-1 with p = 3: the cubic x(x+1)(x+4) degenerates, oracle only"};
  }
  const std::int64_t q = ctx.q();
  const std::int64_t gamma = charsum::gamma_pn(ctx);
  const std::int64_t delta = (q + 1) / 4;
  if ((2 * q - 2 + gamma) % 4 != 0 || (q + 1 - gamma) % 8 != 0) {
    return Unsupported{"u = +-1: closed-form counts are not integral for Gamma = " + std::to_string(gamma)};
  }
  const std::int64_t w1 = (q - 1) * ((2 * q - 2 + gamma) / 4);
  const std::int64_t w2 = (q - 1) * ((q + 1 - gamma) / 8);
  const std::int64_t w_delta = q - 1;
  const std::int64_t w0_printed = (q - 1) * ((q + 1 - gamma) / 8);
  const std::int64_t w0_completed = q * (q - 1) - w1 - w2 - w_delta;

  std::vector<std::int64_t> omegas(static_cast<std::size_t>(delta) + 1, 0);
  omegas[1] += w1;
  omegas[2] += w2;
  omegas[static_cast<std::size_t>(delta)] += w_delta;

  std::vector<std::string> notes;
  notes.push_back("Gamma = " + std::to_string(gamma));
  if (delta == 2) notes.push_back("index 2 merges the generic omega_2 and omega_delta = q - 1");

  omegas[0] = w0_printed;
  Spectrum printed = Spectrum::from_counts(omegas, SpectrumMethod::formula);
  omegas[0] = w0_completed;
  Spectrum corrected = Spectrum::from_counts(omegas, SpectrumMethod::formula);

  const bool printed_ok = printed.satisfies_identities(ctx.q());
  const bool corrected_ok = corrected.satisfies_identities(ctx.q());
  printed.notes = notes;
  printed.notes.push_back("omega_0 = (q-1)(q+1-Gamma)/8 = " + std::to_string(w0_printed) +
                          (printed_ok ? " satisfies" : " violates") + " the sum identities");
  corrected.notes = notes;
  corrected.notes.push_back("omega_0 completed from the sum identities = (q-1)(3q-5-Gamma)/8 = " +
                            std::to_string(w0_completed) + (corrected_ok ? " (identities hold)" : " (identities fail)"));
  return FormulaSpectrum{std::move(printed), std::move(corrected)};
}

}  // namespace

std::vector<std::int64_t> inverse_power_spectrum_per_b(const FieldCtx& ctx) {
  const std::int64_t q = ctx.q();
  if (ctx.p() == 3) return {(q - 1) / 2, 0, (q - 3) / 2, 1};
  if (q % 3 == 2) return {(q - 1) / 2, 1, (q - 1) / 2};
  return {(q + 1) / 2, 1, (q - 5) / 2, 0, 1};
}

FormulaResult spectrum_formula(const NHParams& params) {
  const auto& ctx = params.ctx;
  const Elem u = params.u;
  const std::int64_t q = ctx.q();

  if (u == ctx.zero()) {
    FormulaSpectrum out{scaled(inverse_power_spectrum_per_b(ctx), q - 1), std::nullopt};
    out.spectrum.notes.push_back("per-b spectrum of x^(q-2) scaled by q - 1");
    if (ctx.p() == 3) {
      // The per-b counts must sum to q; (q-1)/2 leaves one b uncounted.
      out.corrected = scaled({(q + 1) / 2, 0, (q - 3) / 2, 1}, q - 1);
      out.corrected->notes.push_back("p = 3: omega_0 per b = (q+1)/2 so the counts sum to q");
    }
    return out;
  }
  if (is_plus_minus_one(ctx, u)) return plus_minus_one_spectrum(ctx);

  const auto flags = classify_u(ctx, u);
  if (!flags.in_u1) {
    return Unsupported{"u in U_0 \\ {0, +-1}: no closed-form spectrum, oracle only"};
  }
  const std::int64_t t = charsum::t1_count(ctx, u) + charsum::t2_count(ctx, u);
  FormulaSpectrum out;
  if (flags.in_u12) {
    out.spectrum = scaled({t + 2, q - 2 - 2 * t, t - 2, 2}, q - 1);
    out.spectrum.notes.push_back("u in U_12, T(u) = " + std::to_string(t));
  } else {
    out.spectrum = scaled({t, q - 2 * t, t}, q - 1);
    out.spectrum.notes.push_back("u in U_10 or U_11, T(u) = " + std::to_string(t));
    if (flags.in_u10 != flags.in_u11) {
      out.corrected = scaled({t + 2, q - 2 * t - 4, t + 2}, q - 1);
      out.corrected->notes.push_back(
          "u in exactly one of U_10, U_11: each column b = (1 +- u chi(a))/a also has one generic "
          "solution, so omega_2 = (q-1)(T(u) + 2)");
    }
  }
  return out;
}

int uniformity_formula(const FieldCtx& ctx, Elem u, const TableA& table) {
  require_family_field(ctx);
  const std::uint32_t q = ctx.q();
  if (u == ctx.zero()) {
    if (ctx.p() == 3) return 3;
    return q % 3 == 2 ? 2 : 4;
  }
  if (is_plus_minus_one(ctx, u)) return static_cast<int>((q + 1) / 4);
  const auto flags = classify_u(ctx, u, table);
  if (flags.in_u1) return flags.in_u12 ? 3 : 2;
  if (is_plus_minus_4_5(ctx, u)) return 3;
  if (flags.in_table_a) return 3;
  return 4;
}

std::string to_string(ApnReason r) {
  switch (r) {
    case ApnReason::none: return "none";
    case ApnReason::inverse_power: return "u = 0 and q = 2 (mod 3)";
    case ApnReason::u10_or_u11: return "u in U_10 or U_11";
    case ApnReason::p7_plus_minus_one: return "p = 7, n = 1, u = +-1";
  }
  return "?";
}

ApnReason apn_reason(const FieldCtx& ctx, Elem u) {
  require_family_field(ctx);
  if (u == ctx.zero()) return ctx.q() % 3 == 2 ? ApnReason::inverse_power : ApnReason::none;
  if (is_plus_minus_one(ctx, u)) {
    return ctx.p() == 7 && ctx.n() == 1 ? ApnReason::p7_plus_minus_one : ApnReason::none;
  }
  const auto flags = classify_u(ctx, u);
  return flags.in_u10 || flags.in_u11 ? ApnReason::u10_or_u11 : ApnReason::none;
}

bool apn_predicate(const FieldCtx& ctx, Elem u) { return apn_reason(ctx, u) != ApnReason::none; }

}  // namespace fqdiff::nh
