#include "fqdiff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "fqdiff/charsum.hpp"
#include "fqdiff/nh.hpp"
#include "fqdiff/oracle.hpp"
#include "fqdiff/parallel.hpp"
#include "fqdiff/table_a.hpp"

namespace fqdiff::cli {
namespace {

using json = nlohmann::ordered_json;

struct Report {
  json results = json::array();
  json checks = json::array();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text;
  bool mismatch = false;

  void check(const std::string& name, bool pass, const std::string& detail, bool flagged = false) {
    json c = {{"name", name}, {"pass", pass}, {"detail", detail}};
    if (flagged) c["flagged"] = true;
    checks.push_back(std::move(c));
    if (!pass) mismatch = true;
  }
};

struct Context {
  const RunConfig& cfg;
  const FieldCtx& ctx;
  const TableA& table;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view text, const std::string& what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "cannot parse " + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view text, const std::string& what) {
  std::vector<std::int64_t> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

json elem_json(const FieldCtx& ctx, Elem x) {
  if (ctx.n() == 1) return x.index;
  return ctx.coeffs(x);
}

std::string elem_text(const FieldCtx& ctx, Elem x) { return ctx.format(x); }

json spectrum_json(const Spectrum& s) {
  return {{"method", to_string(s.method)}, {"delta", s.delta}, {"omegas", s.omegas}, {"notes", s.notes}};
}

json flags_json(const nh::ULabelFlags& f) {
  return {{"in_u0", f.in_u0},
          {"in_u1", f.in_u1},
          {"in_u10", f.in_u10},
          {"in_u11", f.in_u11},
          {"in_u12", f.in_u12},
          {"special", f.special ? json(nh::to_string(*f.special)) : json(nullptr)},
          {"in_table_a", f.in_table_a}};
}

std::string class_label(const nh::ULabelFlags& f) {
  if (f.special) {
    switch (*f.special) {
      case nh::SpecialTag::zero: return "0";
      case nh::SpecialTag::plus_one:
      case nh::SpecialTag::minus_one: return "+-1";
      default: return "+-4/5";
    }
  }
  if (f.in_u12) return "U_12";
  if (f.in_u10 && f.in_u11) return "U_10 & U_11";
  if (f.in_u10) return "U_10 only";
  if (f.in_u11) return "U_11 only";
  return f.in_table_a ? "U_0 (table A)" : "U_0";
}

void require_budget(const Context& c) {
  if (c.ctx.q() > c.cfg.oracle_budget) {
    throw Error(ErrorCode::BudgetExceeded, "q = " + std::to_string(c.ctx.q()) + " exceeds the oracle budget " +
                                               std::to_string(c.cfg.oracle_budget));
  }
}

std::vector<Elem> require_u(const Context& c) {
  if (!c.cfg.u) throw Error(ErrorCode::ParseError, "this command needs -u");
  return parse_u(c.ctx, *c.cfg.u);
}

void add_spectrum_rows(Report& r, const std::string& u, const std::string& label, const Spectrum& s) {
  for (std::size_t i = 0; i < s.omegas.size(); ++i) {
    r.csv_rows.push_back({u, label, std::to_string(i), std::to_string(s.omegas[i])});
  }
}

void cmd_spectrum(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  r.csv_header = {"u", "method", "index", "omega"};
  for (const Elem u : require_u(c)) {
    const auto flags = nh::classify_u(ctx, u, c.table);
    const std::string ut = elem_text(ctx, u);
    json row = {{"u", elem_json(ctx, u)}, {"class", class_label(flags)}};

    if (c.cfg.method == Method::both) {
      require_budget(c);
      const auto d = oracle::differ(ctx, u);
      row["oracle"] = spectrum_json(d.spectrum_oracle);
      add_spectrum_rows(r, ut, "oracle", d.spectrum_oracle);
      if (d.unsupported) {
        row["unsupported"] = *d.unsupported;
      } else {
        row["formula"] = spectrum_json(*d.spectrum_formula);
        add_spectrum_rows(r, ut, "formula", *d.spectrum_formula);
        json mm = json::array();
        std::string detail = d.agree ? "formula equals oracle" : "mismatch at";
        for (const auto& m : d.mismatches) {
          mm.push_back({{"index", m.index}, {"oracle", m.oracle}, {"formula", m.formula}});
          detail += " omega_" + std::to_string(m.index) + " (oracle " + std::to_string(m.oracle) + ", formula " +
                    std::to_string(m.formula) + ")";
        }
        row["agree"] = d.agree;
        row["mismatches"] = mm;
        if (d.spectrum_corrected) {
          row["corrected"] = spectrum_json(*d.spectrum_corrected);
          row["corrected_agree"] = *d.corrected_agree;
          add_spectrum_rows(r, ut, "corrected", *d.spectrum_corrected);
          detail += *d.corrected_agree ? "; corrected counts equal oracle" : "; corrected counts differ too";
        }
        r.check("spectrum u=" + ut, d.agree, detail);
      }
    } else if (c.cfg.method == Method::oracle) {
      require_budget(c);
      const auto s = oracle::spectrum_oracle(ctx, oracle::nh_table(ctx, u));
      row["oracle"] = spectrum_json(s);
      add_spectrum_rows(r, ut, "oracle", s);
    } else {
      const auto f = nh::spectrum_formula(nh::NHParams::make(ctx, u));
      if (const auto* un = std::get_if<nh::Unsupported>(&f)) {
        row["unsupported"] = un->reason;
      } else {
        const auto& fs = std::get<nh::FormulaSpectrum>(f);
        row["formula"] = spectrum_json(fs.spectrum);
        add_spectrum_rows(r, ut, "formula", fs.spectrum);
        if (fs.corrected) {
          row["corrected"] = spectrum_json(*fs.corrected);
          add_spectrum_rows(r, ut, "corrected", *fs.corrected);
        }
      }
    }
    r.results.push_back(std::move(row));
  }
}

void cmd_verify(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  require_budget(c);
  const bool all = !c.cfg.u || trim(*c.cfg.u) == "all";
  const auto us = all ? parse_u(ctx, "all") : parse_u(ctx, *c.cfg.u);

  struct Tally {
    int agree = 0, corrected = 0, mismatch = 0, unsupported = 0;
  };
  std::map<std::string, Tally> tally;
  int uniformity_bad = 0;
  int apn_bad = 0;
  r.csv_header = {"u", "method", "index", "omega"};

  for (const Elem u : us) {
    const auto flags = nh::classify_u(ctx, u, c.table);
    const std::string label = class_label(flags);
    const auto d = oracle::differ(ctx, u);
    const int delta_formula = nh::uniformity_formula(ctx, u, c.table);
    const bool apn = nh::apn_predicate(ctx, u);
    uniformity_bad += delta_formula != d.spectrum_oracle.delta;
    apn_bad += apn != (d.spectrum_oracle.delta == 2);

    std::string status;
    auto& t = tally[label];
    if (d.unsupported) {
      status = "unsupported";
      ++t.unsupported;
    } else if (d.agree) {
      status = "agree";
      ++t.agree;
    } else if (d.corrected_agree.value_or(false)) {
      status = "corrected";
      ++t.corrected;
    } else {
      status = "mismatch";
      ++t.mismatch;
    }
    json row = {{"u", elem_json(ctx, u)},
                {"class", label},
                {"delta_oracle", d.spectrum_oracle.delta},
                {"delta_formula", delta_formula},
                {"apn", apn},
                {"spectrum", status},
                {"omegas_oracle", d.spectrum_oracle.omegas}};
    if (d.unsupported) row["note"] = *d.unsupported;
    if (d.spectrum_formula) row["omegas_formula"] = d.spectrum_formula->omegas;
    if (d.spectrum_corrected) row["omegas_corrected"] = d.spectrum_corrected->omegas;
    r.results.push_back(std::move(row));
    add_spectrum_rows(r, elem_text(ctx, u), "oracle", d.spectrum_oracle);
  }

  json summary = json::object();
  int mismatches = 0, corrected = 0, unsupported = 0;
  r.text.push_back("class            agree corrected mismatch unsupported");
  for (const auto& [label, t] : tally) {
    summary[label] = {{"agree", t.agree}, {"corrected", t.corrected}, {"mismatch", t.mismatch},
                      {"unsupported", t.unsupported}};
    mismatches += t.mismatch;
    corrected += t.corrected;
    unsupported += t.unsupported;
    std::ostringstream line;
    line << label << std::string(label.size() < 17 ? 17 - label.size() : 1, ' ') << t.agree << "     "
         << t.corrected << "         " << t.mismatch << "        " << t.unsupported;
    r.text.push_back(line.str());
  }
  r.results.push_back({{"summary", summary}});

  r.check("formula spectra", mismatches == 0,
          std::to_string(mismatches) + " mismatches, " + std::to_string(corrected) +
              " printed forms off but corrected counts agree (u = 0 at p = 3, omega_0 for u = +-1, U_10 xor U_11), " +
              std::to_string(unsupported) + " without a closed form",
          corrected > 0);
  r.check("uniformity formula", uniformity_bad == 0, std::to_string(uniformity_bad) + " u differ from the oracle");
  r.check("apn predicate", apn_bad == 0, std::to_string(apn_bad) + " u where apn != (delta = 2)");

  if (all) {
    const auto s = nh::u_set_sizes(ctx);
    const std::int64_t q = ctx.q();
    const std::int64_t chi5 = ctx.quad_char(ctx.embed_int(5));
    const std::int64_t u10_formula = (q - 1 + 2 * chi5) / 4;
    r.results.push_back({{"u_sets",
                          {{"u0", s.u0},
                           {"u1", s.u1},
                           {"u10", s.u10},
                           {"u11", s.u11},
                           {"u10_or_u11", s.u10_or_u11},
                           {"u10_and_u11", s.u10_and_u11},
                           {"u12", s.u12},
                           {"u10_formula", u10_formula}}}});
    r.check("|U_1| = (q-3)/2", s.u1 == (q - 3) / 2, std::to_string(s.u1) + " vs " + std::to_string((q - 3) / 2));
    r.check("|U_10| = |U_11| = (q-1+2chi(5))/4", s.u10 == u10_formula && s.u11 == u10_formula,
            std::to_string(s.u10) + ", " + std::to_string(s.u11) + " vs " + std::to_string(u10_formula));
    const bool union_matches = s.u10_or_u11 == u10_formula;
    r.check("|U_10 u U_11| vs (q-1+2chi(5))/4", true,
            std::to_string(s.u10_or_u11) + " vs " + std::to_string(u10_formula) +
                (union_matches ? "" : "; the formula counts each set, not the union"),
            !union_matches);
    if (q > 19) r.check("|U_12| > 0", s.u12 > 0, std::to_string(s.u12));
    if (ctx.p() == 3) {
      r.text.push_back("p = 3: u = +-1 closed form gated, oracle only");
    }
  }
}

void cmd_search_a(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  const auto found = nh::reproduce_table_a(ctx, c.cfg.oracle_budget);
  const auto expected = c.table.members(ctx);
  json f = json::array();
  json e = json::array();
  for (const Elem u : found) {
    f.push_back(elem_json(ctx, u));
    r.csv_rows.push_back({"found", elem_text(ctx, u)});
  }
  for (const Elem u : expected) {
    e.push_back(elem_json(ctx, u));
    r.csv_rows.push_back({"expected", elem_text(ctx, u)});
  }
  r.csv_header = {"source", "u"};
  r.results.push_back({{"found", f}, {"expected", e}, {"table_covers_field", c.table.covers(ctx.p(), ctx.n())}});
  r.check("table A", found == expected,
          std::to_string(found.size()) + " found, " + std::to_string(expected.size()) + " listed");
}

json sum_json(const charsum::CharSumReport& s) {
  json j = {{"value", s.value}, {"distinct_roots", s.distinct_roots}};
  if (s.weil_interval) j["weil_bound"] = s.weil_interval->second;
  if (s.within_weil) j["within_weil"] = *s.within_weil;
  return j;
}

void weil_check(Report& r, const std::string& name, const charsum::CharSumReport& s) {
  if (!s.within_weil) return;
  r.check("weil " + name, *s.within_weil,
          "|" + std::to_string(s.value) + "| vs (" + std::to_string(s.distinct_roots) + "-1)sqrt(q)");
}

void cmd_charsum(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  if (c.cfg.poly) {
    std::vector<Elem> coeffs;
    for (const auto k : parse_int_list(*c.cfg.poly, "polynomial coefficient")) coeffs.push_back(ctx.embed_int(k));
    const Poly f{std::move(coeffs)};
    const auto s = charsum::char_sum_certified(ctx, f);
    r.results.push_back({{"poly", *c.cfg.poly}, {"sum", sum_json(s)}});
    weil_check(r, "poly", s);
    return;
  }
  const auto g = charsum::char_sum_certified(ctx, charsum::gamma_pn_poly(ctx));
  r.results.push_back({{"gamma_pn", sum_json(g)}});
  weil_check(r, "Gamma_{p,n}", g);

  try {
    const auto cyc = charsum::cyclotomic_numbers(ctx);
    r.results.push_back({{"cyclotomic", {{"00", cyc.n00}, {"01", cyc.n01}, {"10", cyc.n10}, {"11", cyc.n11}}}});
    r.check("cyclotomic numbers", true, "enumeration equals the closed form");
  } catch (const Error& e) {
    r.check("cyclotomic numbers", false, e.what());
  }

  if (ctx.p() > 3) {
    try {
      const auto n45 = nh::n45_count(ctx);
      r.results.push_back({{"n45", {{"count", n45.n45_count}, {"lower_bound", n45.lower_bound}}}});
      if (ctx.q() > 124) r.check("N > 0 for q > 124", true, std::to_string(n45.n45_count));
    } catch (const Error& e) {
      r.check("N > 0 for q > 124", false, e.what());
    }
  }
}

void cmd_gamma(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  for (const Elem u : require_u(c)) {
    const auto flags = nh::classify_u(ctx, u, c.table);
    const std::string ut = elem_text(ctx, u);
    const auto g = charsum::gammas(ctx, u);
    json row = {{"u", elem_json(ctx, u)},
                {"class", class_label(flags)},
                {"gamma0", sum_json(g.gamma0)},
                {"gamma1", sum_json(g.gamma1)},
                {"gamma2", sum_json(g.gamma2)},
                {"gamma0_constant_term", charsum::char_sum(ctx, charsum::gamma0_constant_term_poly(ctx, u)).value}};
    weil_check(r, "Gamma_0(" + ut + ")", g.gamma0);
    weil_check(r, "Gamma_1(" + ut + ")", g.gamma1);
    weil_check(r, "Gamma_2(" + ut + ")", g.gamma2);
    if (flags.in_u1) {
      const auto t = charsum::t_counts(ctx, u);
      row["t_counts"] = {{"t1", t.t1},
                         {"t2", t.t2},
                         {"t", t.t},
                         {"t1_identity_rhs", t.t1_identity_rhs},
                         {"t1_identity_holds", t.t1_identity_holds},
                         {"t_identity_rhs", t.t_identity_rhs},
                         {"t_identity_holds", t.t_identity_holds}};
      r.check("8 T_1 identity u=" + ut, t.t1_identity_holds,
              std::to_string(8 * t.t1) + " vs " + std::to_string(t.t1_identity_rhs));
      r.check("8 T identity u=" + ut, t.t_identity_holds,
              std::to_string(8 * t.t) + " vs " + std::to_string(t.t_identity_rhs));
      const auto t_neg = charsum::t_counts(ctx, ctx.neg(u));
      r.check("T_1(-u) = T_2(u) u=" + ut, t_neg.t1 == t.t2,
              std::to_string(t_neg.t1) + " vs " + std::to_string(t.t2));
    } else {
      row["t_counts"] = nullptr;
      row["note"] = "u not in U_1: T-counts undefined";
    }
    r.results.push_back(std::move(row));
  }
}

void cmd_apn(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  const bool with_oracle = c.cfg.method != Method::formula;
  if (with_oracle) require_budget(c);
  const auto us = c.cfg.u ? parse_u(ctx, *c.cfg.u) : parse_u(ctx, "all");
  int disagreements = 0;
  r.csv_header = {"u", "reason"};
  for (const Elem u : us) {
    const auto reason = nh::apn_reason(ctx, u);
    const bool apn = reason != nh::ApnReason::none;
    int delta = -1;
    if (with_oracle) {
      delta = oracle::uniformity_oracle(ctx, oracle::nh_table(ctx, u));
      disagreements += apn != (delta == 2);
    }
    if (!apn && !(with_oracle && delta == 2)) continue;
    json row = {{"u", elem_json(ctx, u)}, {"apn", apn}, {"reason", nh::to_string(reason)}};
    if (with_oracle) row["delta_oracle"] = delta;
    r.results.push_back(std::move(row));
    r.csv_rows.push_back({elem_text(ctx, u), nh::to_string(reason)});
  }
  if (with_oracle) {
    r.check("apn predicate", disagreements == 0, std::to_string(disagreements) + " u where apn != (delta = 2)");
  }
}

void cmd_classify(const Context& c, Report& r) {
  const auto& ctx = c.ctx;
  r.csv_header = {"u", "class", "in_u0", "in_u1", "in_u10", "in_u11", "in_u12", "special", "in_table_a"};
  for (const Elem u : require_u(c)) {
    const auto f = nh::classify_u(ctx, u, c.table);
    json row = {{"u", elem_json(ctx, u)}, {"class", class_label(f)}, {"flags", flags_json(f)}};
    r.results.push_back(std::move(row));
    r.csv_rows.push_back({elem_text(ctx, u), class_label(f), std::to_string(f.in_u0), std::to_string(f.in_u1),
                          std::to_string(f.in_u10), std::to_string(f.in_u11), std::to_string(f.in_u12),
                          f.special ? nh::to_string(*f.special) : "", std::to_string(f.in_table_a)});
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void render(const RunConfig& cfg, const FieldCtx& ctx, const Report& r, std::ostream& out) {
  const json field = {{"p", ctx.p()}, {"n", ctx.n()}, {"q", ctx.q()}, {"modulus", format_modulus(ctx.modulus())}};
  switch (cfg.output) {
    case Output::json: {
      const json doc = {{"field", field},
                        {"u", cfg.u ? json(*cfg.u) : json(nullptr)},
                        {"results", r.results},
                        {"checks", r.checks}};
      out << doc.dump(2) << "\n";
      return;
    }
    case Output::csv: {
      if (!r.csv_header.empty()) {
        for (std::size_t i = 0; i < r.csv_header.size(); ++i) out << (i ? "," : "") << r.csv_header[i];
        out << "\n";
        for (const auto& row : r.csv_rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
          out << "\n";
        }
        return;
      }
      out << "row,key,value\n";
      for (std::size_t i = 0; i < r.results.size(); ++i) {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(r.results[i], "", cells);
        for (const auto& [k, v] : cells) out << i << "," << csv_cell(k) << "," << csv_cell(v) << "\n";
      }
      return;
    }
    case Output::text: {
      out << "F_" << ctx.q() << " (p = " << ctx.p() << ", n = " << ctx.n()
          << ", modulus " << format_modulus(ctx.modulus()) << ")\n";
      for (const auto& line : r.text) out << line << "\n";
      for (const auto& row : r.results) {
        out << "-";
        for (const auto& [k, v] : row.items()) out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        out << "\n";
      }
      for (const auto& ch : r.checks) {
        const bool pass = ch["pass"].get<bool>();
        const bool flagged = ch.contains("flagged");
        out << (pass ? (flagged ? "[FLAG] " : "[PASS] ") : "[FAIL] ") << ch["name"].get<std::string>() << ": "
            << ch["detail"].get<std::string>() << "\n";
      }
      return;
    }
  }
}

}  // namespace

std::vector<Elem> parse_u(const FieldCtx& ctx, const std::string& spec) {
  const std::string_view s = trim(spec);
  if (s == "all") {
    std::vector<Elem> all;
    for (const Elem x : ctx.elements()) all.push_back(x);
    return all;
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::ParseError, "unterminated element '" + spec + "'");
    const auto digits = parse_int_list(s.substr(1, s.size() - 2), "coefficient");
    if (digits.size() != ctx.n()) {
      throw Error(ErrorCode::ParseError, "element '" + spec + "' needs " + std::to_string(ctx.n()) + " coefficients");
    }
    std::vector<std::uint32_t> coeffs;
    const auto p = static_cast<std::int64_t>(ctx.p());
    for (const auto d : digits) coeffs.push_back(static_cast<std::uint32_t>(((d % p) + p) % p));
    return {ctx.from_coeffs(coeffs)};
  }
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    return {ctx.embed_ratio(parse_int(s.substr(0, slash), "numerator"), parse_int(s.substr(slash + 1), "denominator"))};
  }
  return {ctx.embed_int(parse_int(s, "u"))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential analysis of f_u(x) = u x^((q-1)/2 - 1) + x^(q-2) over F_q, q = 3 (mod 4)", "fqdiff"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Method> methods{{"oracle", Method::oracle}, {"formula", Method::formula},
                                              {"both", Method::both}};
  const std::map<std::string, Output> outputs{{"json", Output::json}, {"csv", Output::csv}, {"text", Output::text}};

  auto add_common = [&](CLI::App* sc) {
    sc->add_option("-p", cfg.p, "Characteristic (odd prime)")->required();
    sc->add_option("-n", cfg.n, "Extension degree")->check(CLI::PositiveNumber);
    sc->add_option("-u", cfg.u, "Coefficient: integer, num/den, [c0,c1,...] or all");
    sc->add_option("--method", cfg.method, "oracle, formula or both")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    sc->add_option("--output", cfg.output, "json, csv or text")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    sc->add_option("--threads", cfg.threads, "Worker threads for exhaustive scans")->check(CLI::PositiveNumber);
    sc->add_option("--budget", cfg.oracle_budget, "Largest q for exhaustive scans");
    sc->add_option("--table-a", cfg.table_a_path, "CSV file overriding the built-in exception table");
    sc->add_option("--modulus", cfg.modulus, "Field modulus c0,c1,...,cn (constant term first)");
  };

  using Command = void (*)(const Context&, Report&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands{
      {"spectrum", "Differential spectra by oracle, formula or both", cmd_spectrum},
      {"verify", "All-u agreement of formulas and oracle, with set-size checks", cmd_verify},
      {"search-a", "Recompute the uniformity-3 exceptions and compare with the table", cmd_search_a},
      {"charsum", "Gamma_{p,n}, cyclotomic numbers, the +-4/5 counter, or --poly sums", cmd_charsum},
      {"gamma", "Gamma_0/1/2(u) with T-counts and their identities", cmd_gamma},
      {"apn", "Every u for which f_u is APN, with the reason", cmd_apn},
      {"classify", "U-set membership of u", cmd_classify},
  };
  Command chosen = nullptr;
  for (const auto& [name, help, fn] : commands) {
    auto* sc = app.add_subcommand(name, help);
    add_common(sc);
    if (name == "charsum") sc->add_option("--poly", cfg.poly, "Integer coefficients c0,c1,... of f");
    sc->callback([&chosen, fn = fn] { chosen = fn; });
  }

  std::vector<const char*> argv{"fqdiff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (cfg.threads > 0) parallel::set_thread_count(cfg.threads);
    std::optional<std::vector<std::uint32_t>> modulus;
    if (cfg.modulus) modulus = parse_modulus(*cfg.modulus);
    const FieldCtx ctx = FieldCtx::make(cfg.p, cfg.n, modulus);
    nh::require_family_field(ctx);
    const TableA table = cfg.table_a_path ? TableA::load_csv(*cfg.table_a_path) : TableA::builtin();

    Report report;
    chosen(Context{cfg, ctx, table}, report);
    render(cfg, ctx, report, out);
    return report.mismatch ? 2 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fqdiff::cli
