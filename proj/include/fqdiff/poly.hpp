#pragma once

#include <initializer_list>
#include <vector>

#include "fqdiff/field.hpp"

namespace fqdiff {

// Polynomial over F_q, constant term first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Elem> coeffs) : coeffs_(coeffs) { trim(); }

  // Integer coefficients embedded through Z -> F_p.
  static Poly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs);
  static Poly linear_factor(const FieldCtx& ctx, Elem root);  // x - root

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{}; }
  Elem leading() const noexcept { return coeffs_.empty() ? Elem{} : coeffs_.back(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Elem{}) coeffs_.pop_back();
  }
  std::vector<Elem> coeffs_;
};

namespace poly {

Elem eval(const FieldCtx& ctx, const Poly& f, Elem x) noexcept;
Poly add(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly sub(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly mul(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly scale(const FieldCtx& ctx, const Poly& f, Elem c);
Poly derivative(const FieldCtx& ctx, const Poly& f);
// Euclidean division; DivisionByZero for g = 0.
std::pair<Poly, Poly> divmod(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly monic(const FieldCtx& ctx, const Poly& f);
Poly gcd(const FieldCtx& ctx, const Poly& f, const Poly& g);  // monic

// f = c * g^2 for some constant c and polynomial g (constants count as squares).
bool is_constant_times_square(const FieldCtx& ctx, const Poly& f);

// Product of the distinct monic irreducible factors of f (f nonzero).
Poly radical(const FieldCtx& ctx, const Poly& f);

// Number of distinct roots in the splitting field, i.e. deg radical(f).
int distinct_root_count(const FieldCtx& ctx, const Poly& f);

// Roots in F_q by exhaustive evaluation.
std::vector<Elem> roots_in_field(const FieldCtx& ctx, const Poly& f);

}  // namespace poly
}  // namespace fqdiff
