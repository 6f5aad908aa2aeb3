#include "fqdiff/spectrum.hpp"

#include <algorithm>

namespace fqdiff {

std::string to_string(SpectrumMethod m) { return m == SpectrumMethod::oracle ? "oracle" : "formula"; }

Spectrum Spectrum::from_counts(std::vector<std::int64_t> omegas, SpectrumMethod method) {
  while (omegas.size() > 1 && omegas.back() == 0) omegas.pop_back();
  Spectrum s;
  s.delta = static_cast<int>(omegas.size()) - 1;
  s.omegas = std::move(omegas);
  s.method = method;
  return s;
}

bool Spectrum::satisfies_identities(std::uint32_t q) const noexcept {
  const std::int64_t target = static_cast<std::int64_t>(q) * (q - 1);
  std::int64_t total = 0;
  std::int64_t weighted = 0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (omegas[i] < 0) return false;
    total += omegas[i];
    weighted += static_cast<std::int64_t>(i) * omegas[i];
  }
  return total == target && weighted == target;
}

bool Spectrum::same_counts(const Spectrum& other) const noexcept {
  const std::size_t len = std::max(omegas.size(), other.omegas.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (at(i) != other.at(i)) return false;
  }
  return true;
}

}  // namespace fqdiff
