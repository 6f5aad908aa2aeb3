#pragma once

// Arithmetic in F_p and F_{p^n} for odd p.
//
// An element is stored as its coefficient vector (c_0, ..., c_{n-1}) over F_p
// packed into one integer, sum c_i p^i. The packing is a bijection, so equality
// of `Elem` is coefficient-wise equality, and the packed value is also the
// element's position in the enumeration order (0 first).
//
// Multiplication, inversion and the quadratic character go through discrete
// log / antilog tables when q <= 2^20; the polynomial-basis routines
// (`mul_reference`, `pow_reference`, `quad_char_euler`) stay available and are
// what the tables are checked against.

#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqdiff/error.hpp"

namespace fqdiff {

struct Elem {
  std::uint32_t index = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class TablePolicy { automatic, never };

class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  // Builds F_{p^n}. Without an explicit modulus the lexicographically smallest
  // monic irreducible of degree n is chosen, comparing c_{n-1} first and c_0
  // last. Throws NotPrime, DegreeMismatch, ReducibleModulus.
  static FieldCtx make(std::uint32_t p, std::uint32_t n,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                       TablePolicy tables = TablePolicy::automatic);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  // n + 1 coefficients, constant term first, last one is 1.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  bool has_tables() const noexcept { return log_ != nullptr; }
  bool q_is_3_mod_4() const noexcept { return q_ % 4 == 3; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem element(std::uint32_t index) const;

  // Every element exactly once, 0 first, in packed (coefficient-lexicographic) order.
  auto elements() const {
    return std::views::iota(std::uint32_t{0}, q_) |
           std::views::transform([](std::uint32_t i) { return Elem{i}; });
  }

  std::vector<std::uint32_t> coeffs(Elem x) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;

  Elem add(Elem x, Elem y) const noexcept {
    if (n_ == 1) {
      const std::uint32_t s = x.index + y.index;
      return Elem{s >= p_ ? s - p_ : s};
    }
    return Elem{digitwise(x.index, y.index, false)};
  }
  Elem sub(Elem x, Elem y) const noexcept {
    if (n_ == 1) {
      return Elem{x.index >= y.index ? x.index - y.index : x.index + p_ - y.index};
    }
    return Elem{digitwise(x.index, y.index, true)};
  }
  Elem neg(Elem x) const noexcept { return sub(zero(), x); }

  Elem mul(Elem x, Elem y) const noexcept {
    if (x.index == 0 || y.index == 0) return zero();
    if (log_ != nullptr) return Elem{exp_[log_[x.index] + log_[y.index]]};
    return mul_reference(x, y);
  }
  Elem inv(Elem x) const;  // DivisionByZero on 0
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  // x^0 = 1 for every x (including 0); 0^e = 0 for e > 0.
  Elem pow(Elem x, std::uint64_t e) const noexcept;

  // 0 for x = 0, +1 for nonzero squares, -1 otherwise.
  int quad_char(Elem x) const noexcept {
    if (chi_ != nullptr) return chi_[x.index];
    return quad_char_euler(x);
  }

  // Needs q = 3 (mod 4): r = s^((q+1)/4), returned as (r, -r). (0, 0) for s = 0,
  // nullopt for nonsquares. Throws UnsupportedFieldShape otherwise.
  std::optional<std::pair<Elem, Elem>> sqrt(Elem s) const;

  Elem embed_int(std::int64_t k) const noexcept;
  Elem embed_ratio(std::int64_t num, std::int64_t den) const;  // ZeroDenominator

  // Inverse Frobenius: the unique y with y^p = x.
  Elem pth_root(Elem x) const noexcept;

  Elem mul_reference(Elem x, Elem y) const noexcept;
  Elem pow_reference(Elem x, std::uint64_t e) const noexcept;
  int quad_char_euler(Elem x) const noexcept;

  // "3" for prime fields, "[c0,c1,...]" otherwise.
  std::string format(Elem x) const;

 private:
  struct Impl;

  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  const std::uint32_t* log_ = nullptr;
  const std::uint32_t* exp_ = nullptr;
  const std::int8_t* chi_ = nullptr;
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

// "c0,c1,...,cn" (constant term first).
std::string format_modulus(std::span<const std::uint32_t> coeffs);
std::vector<std::uint32_t> parse_modulus(std::string_view text);

}  // namespace fqdiff
