#pragma once

// The family f_u(x) = u x^{d1} + x^{d2}, d1 = (q-1)/2 - 1, d2 = q - 2, over
// F_q with q = 3 (mod 4).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fqdiff/field.hpp"
#include "fqdiff/spectrum.hpp"
#include "fqdiff/table_a.hpp"

namespace fqdiff::nh {

struct NHParams {
  FieldCtx ctx;
  Elem u;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;

  // UnsupportedFieldShape unless q = 3 (mod 4) and q >= 7.
  static NHParams make(const FieldCtx& ctx, Elem u);
};

// Throws UnsupportedFieldShape unless q = 3 (mod 4) and q >= 7.
void require_family_field(const FieldCtx& ctx);

// (u chi(x) + 1) / x, and 0 at x = 0.
Elem f_eval(const NHParams& params, Elem x) noexcept;
// u x^d1 + x^d2 by exponentiation.
Elem f_eval_power(const NHParams& params, Elem x) noexcept;

enum class SpecialTag { zero, plus_one, minus_one, plus_4_5, minus_4_5 };

std::string to_string(SpecialTag tag);

struct ULabelFlags {
  bool in_u0 = false;
  bool in_u1 = false;
  bool in_u10 = false;
  bool in_u11 = false;
  bool in_u12 = false;
  std::optional<SpecialTag> special;  // at p = 3, +-4/5 = -+1 and the +-1 tag wins
  bool in_table_a = false;
};

// U_0: chi(u+1) != chi(u-1).  U_1: chi(u+1) = chi(u-1).
// U_10: U_1 and chi(u+1) = -chi(5u+3).  U_11: U_1 and chi(u+1) = -chi(5u-3).
// U_12: chi(u+1) = chi(u-1) = chi(5u+3) = chi(5u-3).
ULabelFlags classify_u(const FieldCtx& ctx, Elem u, const TableA& table = TableA::builtin());

struct USetSizes {
  std::int64_t u0 = 0, u1 = 0, u10 = 0, u11 = 0, u10_or_u11 = 0, u10_and_u11 = 0, u12 = 0;
};

USetSizes u_set_sizes(const FieldCtx& ctx);

// The reduced equations b x^2 + (ab + u tau0 - u tau_a) x + a(u tau0 + 1) = 0,
// labelled by (tau_a, tau0): I = (+,+), II = (+,-), III = (-,+), IV = (-,-).
enum class ReducedCase { I, II, III, IV };

std::string to_string(ReducedCase c);

struct CaseRecord {
  ReducedCase which;
  Elem x;
  bool desired;  // (chi(x+a), chi(x)) matches the case labels
};

struct SolveReport {
  Elem a, b;
  std::int64_t n_total = 0;
  std::int64_t n_special = 0;  // solutions among x in {0, -a}
  std::int64_t n_generic = 0;
  std::vector<Elem> solutions;
  std::vector<CaseRecord> case_trace;
};

// Solves f_u(x+a) - f_u(x) = b without scanning x, except when a reduced
// equation vanishes identically (b = 0 with u = -1 in case I or u = 1 in case IV),
// where every x of that character class is a solution. ZeroDirection if a = 0.
SolveReport solve_derivative(const NHParams& params, Elem a, Elem b);

// Pairs (a, b) with b = (1 +- u chi(a))/a and N_u(a, b) = 2, counted with the solver.
std::int64_t special_column_pairs(const NHParams& params);

// #{x : f_u(x+a) - f_u(x) = b} by scanning.
std::int64_t direct_count(const NHParams& params, Elem a, Elem b);

struct Unsupported {
  std::string reason;
};

struct FormulaSpectrum {
  Spectrum spectrum;
  // Alternate counts where the closed form above disagrees with direct counting:
  // u = +-1 gets omega_0 completed from the sum identities; u in exactly one of
  // U_10, U_11 gets omega_0 = omega_2 = (q-1)(T+2).
  std::optional<Spectrum> corrected;
};

using FormulaResult = std::variant<FormulaSpectrum, Unsupported>;

// Per-b spectrum of x^{q-2}; multiply by q - 1 for pair form.
std::vector<std::int64_t> inverse_power_spectrum_per_b(const FieldCtx& ctx);

FormulaResult spectrum_formula(const NHParams& params);

// Piecewise closed-form uniformity. UnsupportedFieldShape for bad fields.
int uniformity_formula(const FieldCtx& ctx, Elem u, const TableA& table = TableA::builtin());

enum class ApnReason { none, inverse_power, u10_or_u11, p7_plus_minus_one };

std::string to_string(ApnReason r);

ApnReason apn_reason(const FieldCtx& ctx, Elem u);
bool apn_predicate(const FieldCtx& ctx, Elem u);

// The five character conditions for a four-solution pair (a, b). The last one
// is evaluated with both roots of 1 - u^2; BranchAsymmetry if they differ while
// the other four hold. WrongUClass unless u is in U_0 \ {0, +-1}.
bool four_solution_condition(const NHParams& params, Elem a, Elem b);

// chi(D) = 1 and chi(2u^2 - ab + u r) = chi(2u^2 - ab - u r) = -1 where
// D = a^2 b^2 - 4ab + 4u^2 and r^2 = D.
bool paired_root_condition(const NHParams& params, Elem a, Elem b);
// chi(2ab(1 + sqrt(1 - u^2)) - 4u^2) = 1 with the principal root.
bool phi_condition(const NHParams& params, Elem a, Elem b);

struct SearchCounts {
  std::int64_t m_count = 0;
  std::int64_t n45_count = 0;
  double lower_bound = 0.0;
};

// z with chi(g_i(z)) = 1 for i = 1..5:
//   g1 = -(u+1)z, g2 = z^2 - 4(u+1)z, g3 = z^2 + 4(u-1)z,
//   g4 = z^2 - 4z + 4u^2, g5 = phi z - 4u^2, phi = 2 + 2 sqrt(1 - u^2).
// Both roots must give the same count (BranchAsymmetry otherwise).
// WrongUClass unless u is in U_0 \ {0, +-1, +-4/5}.
SearchCounts m_count(const NHParams& params);

// z with chi(z) = -1, chi(z^2 - 36z) = chi(z^2 - 20z + 64) = chi(z - 4) = 1.
// UnsupportedCharacteristic for p = 3.
SearchCounts n45_count(const FieldCtx& ctx);

// True when u lies in U_0 \ {0, +-1, +-4/5}.
bool table_a_candidate(const FieldCtx& ctx, Elem u);

// Every u in U_0 \ {0, +-1, +-4/5} whose oracle uniformity is 3.
// BudgetExceeded when q > budget.
std::vector<Elem> reproduce_table_a(const FieldCtx& ctx, std::uint32_t budget);

}  // namespace fqdiff::nh
