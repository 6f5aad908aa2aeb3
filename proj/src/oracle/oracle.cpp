#include "fqdiff/oracle.hpp"

#include <algorithm>
#include <variant>

#include <omp.h>

#include "fqdiff/nh.hpp"

namespace fqdiff::oracle {
namespace {

void fill_row(const FieldCtx& ctx, const FunctionTable& f, Elem a, std::vector<std::uint32_t>& row) {
  std::ranges::fill(row, 0u);
  for (const Elem x : ctx.elements()) {
    const Elem b = ctx.sub(f.values[ctx.add(x, a).index], f.values[x.index]);
    ++row[b.index];
  }
}

void add_row_to_histogram(const std::vector<std::uint32_t>& row, std::vector<std::int64_t>& hist) {
  for (const std::uint32_t c : row) ++hist[c];
}

Spectrum to_spectrum(const FieldCtx& ctx, std::vector<std::int64_t> hist) {
  Spectrum s = Spectrum::from_counts(std::move(hist), SpectrumMethod::oracle);
  if (!s.satisfies_identities(ctx.q())) {
    throw Error(ErrorCode::IdentityViolation, "oracle spectrum fails the sum identities");
  }
  return s;
}

int max_index(const std::vector<std::int64_t>& hist) {
  for (std::size_t k = hist.size(); k-- > 0;) {
    if (hist[k] != 0) return static_cast<int>(k);
  }
  return 0;
}

}  // namespace

FunctionTable tabulate(const FieldCtx& ctx, const std::function<Elem(Elem)>& f) {
  FunctionTable t;
  t.values.reserve(ctx.q());
  for (const Elem x : ctx.elements()) t.values.push_back(f(x));
  return t;
}

FunctionTable nh_table(const FieldCtx& ctx, Elem u) {
  const auto params = nh::NHParams::make(ctx, u);
  FunctionTable t;
  t.values.reserve(ctx.q());
  for (const Elem x : ctx.elements()) t.values.push_back(nh::f_eval(params, x));
  return t;
}

std::vector<std::int64_t> ddt_row(const FieldCtx& ctx, const FunctionTable& f, Elem a) {
  if (a == ctx.zero()) throw Error(ErrorCode::ZeroDirection, "ddt_row needs a != 0");
  std::vector<std::uint32_t> row(ctx.q());
  fill_row(ctx, f, a, row);
  return {row.begin(), row.end()};
}

std::vector<std::int64_t> ddt_histogram_serial(const FieldCtx& ctx, const FunctionTable& f) {
  std::vector<std::int64_t> hist(ctx.q() + 1, 0);
  std::vector<std::uint32_t> row(ctx.q());
  for (std::uint32_t a = 1; a < ctx.q(); ++a) {
    fill_row(ctx, f, Elem{a}, row);
    add_row_to_histogram(row, hist);
  }
  return hist;
}

std::vector<std::int64_t> ddt_histogram(const FieldCtx& ctx, const FunctionTable& f) {
  const std::uint32_t q = ctx.q();
  std::vector<std::int64_t> hist(q + 1, 0);
#pragma omp parallel
  {
    std::vector<std::int64_t> local(q + 1, 0);
    std::vector<std::uint32_t> row(q);
#pragma omp for schedule(static)
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(q); ++a) {
      fill_row(ctx, f, Elem{static_cast<std::uint32_t>(a)}, row);
      add_row_to_histogram(row, local);
    }
#pragma omp critical(fqdiff_ddt_merge)
    for (std::size_t k = 0; k <= q; ++k) hist[k] += local[k];
  }
  return hist;
}

Spectrum spectrum_oracle(const FieldCtx& ctx, const FunctionTable& f) {
  return to_spectrum(ctx, ddt_histogram(ctx, f));
}

Spectrum spectrum_oracle_serial(const FieldCtx& ctx, const FunctionTable& f) {
  return to_spectrum(ctx, ddt_histogram_serial(ctx, f));
}

int uniformity_oracle(const FieldCtx& ctx, const FunctionTable& f) {
  return max_index(ddt_histogram(ctx, f));
}

int uniformity_oracle_serial(const FieldCtx& ctx, const FunctionTable& f) {
  return max_index(ddt_histogram_serial(ctx, f));
}

std::vector<Mismatch> compare(const Spectrum& oracle, const Spectrum& formula) {
  std::vector<Mismatch> out;
  const std::size_t len = std::max(oracle.omegas.size(), formula.omegas.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (oracle.at(i) != formula.at(i)) out.push_back({static_cast<int>(i), oracle.at(i), formula.at(i)});
  }
  return out;
}

DiffReport differ(const FieldCtx& ctx, Elem u) {
  DiffReport r;
  r.spectrum_oracle = spectrum_oracle(ctx, nh_table(ctx, u));
  const auto formula = nh::spectrum_formula(nh::NHParams::make(ctx, u));
  if (const auto* unsupported = std::get_if<nh::Unsupported>(&formula)) {
    r.unsupported = unsupported->reason;
    return r;
  }
  const auto& fs = std::get<nh::FormulaSpectrum>(formula);
  r.spectrum_formula = fs.spectrum;
  r.mismatches = compare(r.spectrum_oracle, fs.spectrum);
  r.agree = r.mismatches.empty();
  if (fs.corrected) {
    r.spectrum_corrected = fs.corrected;
    r.corrected_agree = compare(r.spectrum_oracle, *fs.corrected).empty();
  }
  return r;
}

}  // namespace fqdiff::oracle
