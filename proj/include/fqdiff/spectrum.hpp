#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fqdiff {

enum class SpectrumMethod { oracle, formula };

std::string to_string(SpectrumMethod m);

// Differential spectrum in (a, b)-pair form: omegas[i] counts the pairs
// (a, b), a != 0, whose derivative equation has exactly i solutions.
struct Spectrum {
  int delta = 0;
  std::vector<std::int64_t> omegas;
  SpectrumMethod method = SpectrumMethod::oracle;
  std::vector<std::string> notes;

  // Drops trailing zero counts and sets delta to the last index.
  static Spectrum from_counts(std::vector<std::int64_t> omegas, SpectrumMethod method);

  std::int64_t at(std::size_t i) const noexcept { return i < omegas.size() ? omegas[i] : 0; }

  // sum omega_i = (q-1) q and sum i omega_i = (q-1) q.
  bool satisfies_identities(std::uint32_t q) const noexcept;

  bool same_counts(const Spectrum& other) const noexcept;
};

}  // namespace fqdiff
