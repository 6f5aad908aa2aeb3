#include <doctest.h>

#include <set>
#include <vector>

#include "fqdiff/field.hpp"
#include "fqdiff/fp_poly.hpp"
#include "fqdiff/poly.hpp"

using namespace fqdiff;

namespace {

// Small fields used throughout; 343 stays within the exhaustive limits.
std::vector<FieldCtx> test_fields() {
  return {FieldCtx::make(3, 1), FieldCtx::make(7, 1), FieldCtx::make(11, 1), FieldCtx::make(13, 1),
          FieldCtx::make(3, 3), FieldCtx::make(5, 2), FieldCtx::make(7, 3)};
}

// First monic irreducible cubic over F_3 in the order c2, c1, c0 (c0 least significant).
std::vector<std::uint32_t> smallest_irreducible_cubic_f3() {
  for (std::uint32_t c2 = 0; c2 < 3; ++c2)
    for (std::uint32_t c1 = 0; c1 < 3; ++c1)
      for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
        bool has_root = false;
        for (std::uint32_t x = 0; x < 3; ++x) {
          if ((x * x * x + c2 * x * x + c1 * x + c0) % 3 == 0) has_root = true;
        }
        if (!has_root) return {c0, c1, c2, 1};
      }
  return {};
}

}  // namespace

TEST_CASE("make_field builds prime and extension fields") {
  const auto f7 = FieldCtx::make(7, 1);
  CHECK(f7.q() == 7);
  CHECK(f7.has_tables());

  const auto f27 = FieldCtx::make(3, 3);
  CHECK(f27.q() == 27);
  CHECK(f27.modulus() == smallest_irreducible_cubic_f3());
  CHECK(FieldCtx::make(3, 3).modulus() == f27.modulus());

  CHECK_THROWS_AS(FieldCtx::make(4, 2), Error);
  try {
    FieldCtx::make(4, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
}

TEST_CASE("make_field rejects bad moduli") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  // x^2 + 1 = (x + 2)(x + 3) over F_5.
  CHECK(code_of([] { FieldCtx::make(5, 2, std::vector<std::uint32_t>{1, 0, 1}); }) ==
        ErrorCode::ReducibleModulus);
  CHECK(code_of([] { FieldCtx::make(5, 2, std::vector<std::uint32_t>{2, 0, 0, 1}); }) ==
        ErrorCode::DegreeMismatch);
  CHECK(code_of([] { FieldCtx::make(5, 2, std::vector<std::uint32_t>{2, 0, 2}); }) ==
        ErrorCode::DegreeMismatch);
  const auto f = FieldCtx::make(5, 2, std::vector<std::uint32_t>{2, 0, 1});
  CHECK(f.q() == 25);
}

TEST_CASE("arithmetic examples") {
  const auto f7 = FieldCtx::make(7, 1);
  CHECK(f7.inv(Elem{3}) == Elem{5});
  CHECK(f7.pow(Elem{0}, 5) == Elem{0});
  CHECK(f7.pow(Elem{0}, 0) == Elem{1});
  CHECK_THROWS_AS(f7.inv(Elem{0}), Error);

  const auto f27 = FieldCtx::make(3, 3);
  for (std::uint32_t i = 1; i < 27; ++i) CHECK(f27.pow(Elem{i}, 26) == f27.one());
}

TEST_CASE("field axioms and character properties, exhaustive") {
  for (const auto& ctx : test_fields()) {
    CAPTURE(ctx.q());
    std::int64_t squares = 0;
    std::int64_t chi_sum = 0;
    for (const Elem x : ctx.elements()) {
      chi_sum += ctx.quad_char(x);
      if (x == ctx.zero()) {
        CHECK(ctx.quad_char(x) == 0);
        continue;
      }
      squares += ctx.quad_char(x) == 1;
      CHECK(ctx.mul(x, ctx.inv(x)) == ctx.one());
      CHECK(ctx.pow(x, ctx.q() - 1) == ctx.one());
      const Elem euler = ctx.pow(x, (ctx.q() - 1) / 2);
      CHECK(ctx.quad_char(x) == (euler == ctx.one() ? 1 : -1));
      CHECK(ctx.quad_char(x) == ctx.quad_char_euler(x));
    }
    CHECK(squares == (ctx.q() - 1) / 2);
    CHECK(chi_sum == 0);
    if (ctx.q() <= 49) {
      for (const Elem x : ctx.elements())
        for (const Elem y : ctx.elements()) {
          CHECK(ctx.quad_char(ctx.mul(x, y)) == ctx.quad_char(x) * ctx.quad_char(y));
          CHECK(ctx.mul(x, y) == ctx.mul_reference(x, y));
          CHECK(ctx.sub(ctx.add(x, y), y) == x);
        }
    }
  }
}

TEST_CASE("multiplicativity at q = 343") {
  const auto ctx = FieldCtx::make(7, 3);
  for (const Elem x : ctx.elements())
    for (const Elem y : ctx.elements()) {
      REQUIRE(ctx.quad_char(ctx.mul(x, y)) == ctx.quad_char(x) * ctx.quad_char(y));
    }
}

TEST_CASE("table path matches the polynomial-basis path") {
  for (auto [p, n] : {std::pair{7u, 1u}, std::pair{3u, 3u}, std::pair{7u, 3u}}) {
    const auto fast = FieldCtx::make(p, n);
    const auto slow = FieldCtx::make(p, n, std::nullopt, TablePolicy::never);
    REQUIRE(fast.has_tables());
    REQUIRE_FALSE(slow.has_tables());
    REQUIRE(fast.modulus() == slow.modulus());
    for (const Elem x : fast.elements()) {
      CHECK(fast.quad_char(x) == slow.quad_char(x));
      CHECK(fast.pow(x, 5) == slow.pow(x, 5));
      if (x != fast.zero()) CHECK(fast.inv(x) == slow.inv(x));
      for (std::uint32_t k = 0; k < fast.q(); k += 17) {
        CHECK(fast.mul(x, Elem{k}) == slow.mul(x, Elem{k}));
      }
    }
  }
}

TEST_CASE("square roots") {
  const auto f7 = FieldCtx::make(7, 1);
  const auto r = f7.sqrt(Elem{2});
  REQUIRE(r);
  CHECK(std::set<std::uint32_t>{r->first.index, r->second.index} == std::set<std::uint32_t>{3, 4});
  CHECK_FALSE(f7.sqrt(Elem{3}));
  CHECK(f7.sqrt(Elem{0}) == std::pair{Elem{0}, Elem{0}});
  CHECK_THROWS_AS(FieldCtx::make(13, 1).sqrt(Elem{4}), Error);

  // F_11: 1 - 6^2 = 9 is a square, so the root exists for u = 6.
  const auto f11 = FieldCtx::make(11, 1);
  const Elem u = Elem{6};
  CHECK(f11.sqrt(f11.sub(f11.one(), f11.mul(u, u))));

  for (const auto& ctx : {FieldCtx::make(11, 1), FieldCtx::make(3, 3), FieldCtx::make(7, 3)}) {
    for (const Elem s : ctx.elements()) {
      const auto root = ctx.sqrt(s);
      CHECK(root.has_value() == (ctx.quad_char(s) >= 0));
      if (root) {
        CHECK(ctx.mul(root->first, root->first) == s);
        CHECK(ctx.mul(root->second, root->second) == s);
      }
    }
  }
}

TEST_CASE("enumeration order") {
  const auto f7 = FieldCtx::make(7, 1);
  std::vector<std::uint32_t> seen;
  for (const Elem x : f7.elements()) seen.push_back(x.index);
  CHECK(seen == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6});

  const auto f27 = FieldCtx::make(3, 3);
  std::set<std::vector<std::uint32_t>> coeffs;
  for (const Elem x : f27.elements()) coeffs.insert(f27.coeffs(x));
  CHECK(coeffs.size() == 27);
  CHECK(f27.coeffs(f27.zero()) == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(f27.from_coeffs(std::vector<std::uint32_t>{1, 2, 0}) == Elem{1 + 2 * 3});
}

TEST_CASE("embedding integers and ratios") {
  CHECK(FieldCtx::make(7, 1).embed_ratio(4, 5) == Elem{5});
  CHECK(FieldCtx::make(3, 1).embed_ratio(4, 5) == Elem{2});
  CHECK(FieldCtx::make(11, 1).embed_int(-16) == Elem{6});
  CHECK_THROWS_AS(FieldCtx::make(5, 1).embed_ratio(1, 10), Error);
  const auto f27 = FieldCtx::make(3, 3);
  CHECK(f27.embed_int(-1) == Elem{2});
  CHECK(f27.embed_ratio(4, 5) == f27.neg(f27.one()));
}

TEST_CASE("p-th roots invert Frobenius") {
  for (const auto& ctx : {FieldCtx::make(3, 3), FieldCtx::make(7, 3), FieldCtx::make(5, 2)}) {
    for (const Elem x : ctx.elements()) CHECK(ctx.pow(ctx.pth_root(x), ctx.p()) == x);
  }
}

TEST_CASE("modulus text round trip") {
  const std::vector<std::uint32_t> m{1, 2, 0, 1};
  CHECK(format_modulus(m) == "1,2,0,1");
  CHECK(parse_modulus("1,2,0,1") == m);
  CHECK_THROWS_AS(parse_modulus("1,x"), Error);
}

TEST_CASE("F_p polynomial helpers") {
  using fp_poly::Poly;
  CHECK(fp_poly::is_irreducible(Poly{1, 2, 0, 1}, 3));
  CHECK_FALSE(fp_poly::is_irreducible(Poly{1, 0, 1}, 5));
  CHECK(fp_poly::is_irreducible(Poly{2, 0, 1}, 5));
  // x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1): reducible without a linear factor over F_5.
  CHECK_FALSE(fp_poly::is_irreducible(Poly{1, 0, 1, 0, 1}, 5));
}

TEST_CASE("polynomials over F_q") {
  const auto ctx = FieldCtx::make(7, 1);
  const Poly f = Poly::from_ints(ctx, {0, 4, 5, 1});  // x(x+1)(x+4)
  CHECK(f.degree() == 3);
  CHECK(poly::distinct_root_count(ctx, f) == 3);
  CHECK(poly::roots_in_field(ctx, f).size() == 3);
  const Poly sq = poly::mul(ctx, Poly::from_ints(ctx, {1, 1}), Poly::from_ints(ctx, {1, 1}));
  CHECK(poly::is_constant_times_square(ctx, poly::scale(ctx, sq, Elem{3})));
  CHECK_FALSE(poly::is_constant_times_square(ctx, f));
  const auto [qq, rr] = poly::divmod(ctx, f, Poly::from_ints(ctx, {1, 1}));
  CHECK(rr.is_zero());
  CHECK(qq == Poly::from_ints(ctx, {0, 4, 1}));

  // In characteristic 3, x(x+1)(x+4) = x(x+1)^2 has two distinct roots.
  const auto f27 = FieldCtx::make(3, 3);
  CHECK(poly::distinct_root_count(f27, Poly::from_ints(f27, {0, 4, 5, 1})) == 2);
  // x^3 + 1 = (x+1)^3 has a vanishing derivative.
  CHECK(poly::distinct_root_count(f27, Poly::from_ints(f27, {1, 0, 0, 1})) == 1);
}
