#include "fqdiff/poly.hpp"

#include <algorithm>

namespace fqdiff {

Poly Poly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> out;
  out.reserve(coeffs.size());
  for (const auto c : coeffs) out.push_back(ctx.embed_int(c));
  return Poly(std::move(out));
}

Poly Poly::linear_factor(const FieldCtx& ctx, Elem root) { return Poly{ctx.neg(root), ctx.one()}; }

namespace poly {

Elem eval(const FieldCtx& ctx, const Poly& f, Elem x) noexcept {
  Elem acc = ctx.zero();
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), *it);
  return acc;
}

Poly add(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(f.coeff(i), g.coeff(i));
  return Poly(std::move(out));
}

Poly sub(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(f.coeff(i), g.coeff(i));
  return Poly(std::move(out));
}

Poly mul(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(f.coeffs()[i], g.coeffs()[j]));
    }
  }
  return Poly(std::move(out));
}

Poly scale(const FieldCtx& ctx, const Poly& f, Elem c) {
  std::vector<Elem> out(f.coeffs());
  for (auto& x : out) x = ctx.mul(x, c);
  return Poly(std::move(out));
}

Poly derivative(const FieldCtx& ctx, const Poly& f) {
  if (f.degree() < 1) return {};
  std::vector<Elem> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out[i - 1] = ctx.mul(ctx.embed_int(static_cast<std::int64_t>(i)), f.coeffs()[i]);
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly{}, f};
  const Elem lead_inv = ctx.inv(g.leading());
  std::vector<Elem> rem(f.coeffs());
  std::vector<Elem> quot(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int d = f.degree(); d >= dg; --d) {
    const Elem factor = ctx.mul(rem[static_cast<std::size_t>(d)], lead_inv);
    if (factor == Elem{}) continue;
    quot[static_cast<std::size_t>(d - dg)] = factor;
    for (int i = 0; i <= dg; ++i) {
      auto& r = rem[static_cast<std::size_t>(d - dg + i)];
      r = ctx.sub(r, ctx.mul(factor, g.coeffs()[static_cast<std::size_t>(i)]));
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly monic(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) return f;
  return scale(ctx, f, ctx.inv(f.leading()));
}

Poly gcd(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = divmod(ctx, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ctx, a);
}

bool is_constant_times_square(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) return true;
  const int deg = f.degree();
  if (deg % 2 != 0) return false;
  const Poly h = monic(ctx, f);
  const int k = deg / 2;
  // Solve for the monic g with g^2 = h from the top half of h, then verify.
  std::vector<Elem> g(static_cast<std::size_t>(k) + 1);
  g[static_cast<std::size_t>(k)] = ctx.one();
  const Elem half = ctx.inv(ctx.embed_int(2));
  for (int j = 1; j <= k; ++j) {
    const int target = 2 * k - j;
    Elem partial = ctx.zero();
    for (int i = k - j + 1; i <= k; ++i) {
      const int l = target - i;
      if (l <= k - j || l > k) continue;
      partial = ctx.add(partial, ctx.mul(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(l)]));
    }
    g[static_cast<std::size_t>(k - j)] =
        ctx.mul(ctx.sub(h.coeff(static_cast<std::size_t>(target)), partial), half);
  }
  const Poly root(std::move(g));
  return mul(ctx, root, root) == h;
}

Poly radical(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "radical of the zero polynomial");
  const Poly m = monic(ctx, f);
  if (m.degree() <= 0) return Poly{ctx.one()};

  const Poly d = derivative(ctx, m);
  if (d.is_zero()) {
    // m(x) = h(x^p) = (h~(x))^p with h~ the coefficient-wise p-th root.
    const std::size_t p = ctx.p();
    std::vector<Elem> root(m.coeffs().size() / p + 1);
    for (std::size_t i = 0; i < m.coeffs().size(); i += p) root[i / p] = ctx.pth_root(m.coeffs()[i]);
    return radical(ctx, Poly(std::move(root)));
  }

  const Poly g = gcd(ctx, m, d);
  // m / gcd(m, m') keeps every factor whose multiplicity is not divisible by p.
  const Poly w = monic(ctx, divmod(ctx, m, g).first);
  if (g.degree() == 0) return w;
  const Poly r = radical(ctx, g);
  return monic(ctx, divmod(ctx, mul(ctx, w, r), gcd(ctx, w, r)).first);
}

int distinct_root_count(const FieldCtx& ctx, const Poly& f) { return radical(ctx, f).degree(); }

std::vector<Elem> roots_in_field(const FieldCtx& ctx, const Poly& f) {
  std::vector<Elem> out;
  for (const Elem x : ctx.elements()) {
    if (eval(ctx, f, x) == Elem{}) out.push_back(x);
  }
  return out;
}

}  // namespace poly
}  // namespace fqdiff
