#include "fqdiff/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "fqdiff/fp_poly.hpp"

namespace fqdiff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedFieldShape: return "UnsupportedFieldShape";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::RepeatedRoots: return "RepeatedRoots";
    case ErrorCode::PerfectSquareInput: return "PerfectSquareInput";
    case ErrorCode::NotInU1: return "NotInU1";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::WrongUClass: return "WrongUClass";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::BranchAsymmetry: return "BranchAsymmetry";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kMaxDegree = 32;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct FieldCtx::Impl {
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;  // length 2(q-1): exp[i] = g^i
  std::vector<std::int8_t> chi;
};

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t n,
                        std::optional<std::vector<std::uint32_t>> modulus, TablePolicy tables) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::UnsupportedFieldShape, "characteristic 2 is not supported");
  if (n == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be positive");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q >= kMaxOrder) {
      throw Error(ErrorCode::UnsupportedFieldShape, "field order exceeds 2^31");
    }
  }

  auto impl = std::make_shared<Impl>();
  if (modulus) {
    auto m = *modulus;
    for (auto& c : m) c %= p;
    fp_poly::trim(m);
    if (fp_poly::degree(m) != static_cast<int>(n) || m.back() != 1) {
      throw Error(ErrorCode::DegreeMismatch,
                  "modulus must be monic of degree " + std::to_string(n));
    }
    if (!fp_poly::is_irreducible(m, p)) {
      throw Error(ErrorCode::ReducibleModulus, format_modulus(m));
    }
    impl->modulus = std::move(m);
  } else {
    // Packed value k of the lower coefficients: digit i is c_i, so c_{n-1} is
    // the most significant digit and increasing k is the required order.
    std::vector<std::uint32_t> m(n + 1, 0);
    m[n] = 1;
    bool found = false;
    for (std::uint64_t k = 0; k < q && !found; ++k) {
      std::uint64_t rest = k;
      for (std::uint32_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      found = fp_poly::is_irreducible(m, p);
    }
    if (!found) throw Error(ErrorCode::InternalInconsistency, "no irreducible modulus found");
    impl->modulus = std::move(m);
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.n_ = n;
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.impl_ = impl;

  if (tables == TablePolicy::automatic && q <= kTableLimit) {
    // Smallest primitive element in enumeration order.
    const std::uint64_t order = q - 1;
    const auto factors = distinct_prime_factors(order);
    std::uint32_t g = 1;
    for (std::uint32_t cand = 1; cand < q; ++cand) {
      bool primitive = true;
      for (const auto r : factors) {
        if (ctx.pow_reference(Elem{cand}, order / r) == ctx.one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }

    impl->log.assign(q, 0);
    impl->exp.assign(2 * order, 0);
    impl->chi.assign(q, 0);
    Elem acc = ctx.one();
    for (std::uint64_t i = 0; i < order; ++i) {
      impl->exp[i] = acc.index;
      impl->exp[i + order] = acc.index;
      impl->log[acc.index] = static_cast<std::uint32_t>(i);
      impl->chi[acc.index] = (i % 2 == 0) ? 1 : -1;
      acc = ctx.mul_reference(acc, Elem{g});
    }
    ctx.log_ = impl->log.data();
    ctx.exp_ = impl->exp.data();
    ctx.chi_ = impl->chi.data();
  }
  return ctx;
}

const std::vector<std::uint32_t>& FieldCtx::modulus() const noexcept { return impl_->modulus; }

Elem FieldCtx::element(std::uint32_t index) const {
  if (index >= q_) {
    throw Error(ErrorCode::ParseError, "element index " + std::to_string(index) + " out of range");
  }
  return Elem{index};
}

std::vector<std::uint32_t> FieldCtx::coeffs(Elem x) const {
  std::vector<std::uint32_t> out(n_, 0);
  std::uint32_t rest = x.index;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

Elem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) {
    throw Error(ErrorCode::DegreeMismatch, "too many coefficients for this field");
  }
  std::uint32_t index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) index = index * p_ + coeffs[i] % p_;
  return Elem{index};
}

std::uint32_t FieldCtx::digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const noexcept {
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_ && (a != 0 || b != 0); ++i) {
    const std::uint32_t da = a % p_;
    const std::uint32_t db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t d = subtract ? da + p_ - db : da + db;
    if (d >= p_) d -= p_;
    result += d * place;
    place *= p_;
  }
  return result;
}

Elem FieldCtx::inv(Elem x) const {
  if (x.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (log_ != nullptr) {
    const std::uint32_t order = q_ - 1;
    return Elem{exp_[(order - log_[x.index]) % order]};
  }
  return pow_reference(x, std::uint64_t{q_} - 2);
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (x.index == 0) return zero();
  if (log_ != nullptr) {
    const std::uint64_t order = q_ - 1;
    return Elem{exp_[(std::uint64_t{log_[x.index]} * (e % order)) % order]};
  }
  return pow_reference(x, e);
}

Elem FieldCtx::mul_reference(Elem x, Elem y) const noexcept {
  if (n_ == 1) {
    return Elem{static_cast<std::uint32_t>(std::uint64_t{x.index} * y.index % p_)};
  }
  std::array<std::uint64_t, kMaxDegree> a{};
  std::array<std::uint64_t, kMaxDegree> b{};
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  std::uint32_t ra = x.index;
  std::uint32_t rb = y.index;
  for (std::uint32_t i = 0; i < n_; ++i) {
    a[i] = ra % p_;
    ra /= p_;
    b[i] = rb % p_;
    rb /= p_;
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // Reduce with the monic modulus: x^n = -(c_0 + ... + c_{n-1} x^{n-1}).
  const auto& m = impl_->modulus;
  for (std::uint32_t d = 2 * n_ - 2; d >= n_; --d) {
    const std::uint64_t top = prod[d];
    if (top == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      prod[d - n_ + i] = (prod[d - n_ + i] + (p_ - m[i]) * top) % p_;
    }
  }
  std::uint32_t index = 0;
  for (std::uint32_t i = n_; i-- > 0;) index = index * p_ + static_cast<std::uint32_t>(prod[i]);
  return Elem{index};
}

Elem FieldCtx::pow_reference(Elem x, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = x;
  while (e > 0) {
    if (e & 1) result = mul_reference(result, base);
    e >>= 1;
    if (e > 0) base = mul_reference(base, base);
  }
  return result;
}

int FieldCtx::quad_char_euler(Elem x) const noexcept {
  if (x.index == 0) return 0;
  return pow_reference(x, (std::uint64_t{q_} - 1) / 2) == one() ? 1 : -1;
}

std::optional<std::pair<Elem, Elem>> FieldCtx::sqrt(Elem s) const {
  if (!q_is_3_mod_4()) {
    throw Error(ErrorCode::UnsupportedFieldShape, "square roots need q = 3 (mod 4)");
  }
  if (s.index == 0) return std::pair{zero(), zero()};
  if (quad_char(s) != 1) return std::nullopt;
  const Elem r = pow(s, (std::uint64_t{q_} + 1) / 4);
  if (mul(r, r) != s) throw Error(ErrorCode::InternalInconsistency, "square root check failed");
  return std::pair{r, neg(r)};
}

Elem FieldCtx::embed_int(std::int64_t k) const noexcept {
  const std::int64_t p = p_;
  return Elem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Elem FieldCtx::embed_ratio(std::int64_t num, std::int64_t den) const {
  const Elem d = embed_int(den);
  if (d.index == 0) {
    throw Error(ErrorCode::ZeroDenominator,
                std::to_string(den) + " vanishes in characteristic " + std::to_string(p_));
  }
  return div(embed_int(num), d);
}

Elem FieldCtx::pth_root(Elem x) const noexcept {
  // The Frobenius has order n, so its inverse is x -> x^(p^(n-1)).
  Elem r = x;
  for (std::uint32_t i = 1; i < n_; ++i) r = pow(r, p_);
  return r;
}

std::string FieldCtx::format(Elem x) const {
  if (n_ == 1) return std::to_string(x.index);
  std::string out = "[";
  const auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

std::string format_modulus(std::span<const std::uint32_t> coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

std::vector<std::uint32_t> parse_modulus(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad modulus digit '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace fqdiff
