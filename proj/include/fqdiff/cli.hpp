#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fqdiff/field.hpp"

namespace fqdiff::cli {

enum class Method { oracle, formula, both };
enum class Output { json, csv, text };

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::optional<std::string> u;  // integer, "num/den", "[c0,c1,...]" or "all"
  Method method = Method::both;
  Output output = Output::json;
  int threads = 0;  // 0 keeps the OpenMP default
  std::uint32_t oracle_budget = 4096;
  std::optional<std::string> table_a_path;
  std::optional<std::string> modulus;
  std::optional<std::string> poly;  // charsum: "c0,c1,..." integer coefficients
};

// Resolves a u spec to field elements; "all" yields every element. ParseError on bad input.
std::vector<Elem> parse_u(const FieldCtx& ctx, const std::string& spec);

// Exit codes: 0 all checks pass, 2 a mathematical mismatch, 1 usage or environment error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqdiff::cli
