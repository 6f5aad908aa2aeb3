#pragma once

// Exhaustive differential analysis of an arbitrary function given as a table.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fqdiff/field.hpp"
#include "fqdiff/spectrum.hpp"

namespace fqdiff::oracle {

struct FunctionTable {
  std::vector<Elem> values;  // values[x.index] = f(x)
};

FunctionTable tabulate(const FieldCtx& ctx, const std::function<Elem(Elem)>& f);
FunctionTable nh_table(const FieldCtx& ctx, Elem u);

// delta(a, b) for every b. ZeroDirection if a = 0.
std::vector<std::int64_t> ddt_row(const FieldCtx& ctx, const FunctionTable& f, Elem a);

// hist[k] = #{(a, b) : a != 0, delta(a, b) = k}, k = 0..q.
std::vector<std::int64_t> ddt_histogram_serial(const FieldCtx& ctx, const FunctionTable& f);
std::vector<std::int64_t> ddt_histogram(const FieldCtx& ctx, const FunctionTable& f);

// IdentityViolation if the sum identities fail.
Spectrum spectrum_oracle(const FieldCtx& ctx, const FunctionTable& f);
Spectrum spectrum_oracle_serial(const FieldCtx& ctx, const FunctionTable& f);

int uniformity_oracle(const FieldCtx& ctx, const FunctionTable& f);
int uniformity_oracle_serial(const FieldCtx& ctx, const FunctionTable& f);

struct Mismatch {
  int index = 0;
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
};

struct DiffReport {
  Spectrum spectrum_oracle;
  std::optional<Spectrum> spectrum_formula;
  std::optional<Spectrum> spectrum_corrected;
  bool agree = true;
  std::vector<Mismatch> mismatches;
  std::optional<bool> corrected_agree;
  std::optional<std::string> unsupported;  // why no formula applies
};

std::vector<Mismatch> compare(const Spectrum& oracle, const Spectrum& formula);

// Oracle against formula for f_u. Needs the family field shape.
DiffReport differ(const FieldCtx& ctx, Elem u);

}  // namespace fqdiff::oracle
