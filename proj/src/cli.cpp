#include "regmeasure/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "regmeasure/approximations.hpp"
#include "regmeasure/density.hpp"
#include "regmeasure/dfa_json.hpp"
#include "regmeasure/languages.hpp"
#include "regmeasure/monoid.hpp"

namespace regmeasure::cli {

namespace {

using nlohmann::json;

json integer(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

json fraction(const Rational& r) {
  return {{"num", integer(numerator(r))}, {"den", integer(denominator(r))}};
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct Settings {
  std::string dfa;
  std::string alphabet = "ab";
  std::string oracle;
  std::string family;
  std::string only;
  std::string format = "csv";
  std::vector<std::size_t> ks;
  std::size_t max = 12;
  std::optional<std::size_t> m;
  std::optional<std::uint64_t> budget;
};

int cmd_density(const Settings& s, std::ostream& out) {
  const Dfa x = load_dfa(s.dfa, s.alphabet);
  const DensityReport r = natural_density(x);
  const Rational d = density(x);
  if (d != r.density) throw std::logic_error("density routes disagree");
  if (s.format == "json") {
    json points = json::array();
    for (const auto& [residue, limit] : r.accumulation_points)
      points.push_back({{"residue", residue}, {"limit", fraction(limit)}});
    print_json(out, {{"density", fraction(r.density)},
                     {"natural", r.natural_density ? fraction(*r.natural_density) : json(nullptr)},
                     {"modulus", r.modulus},
                     {"accumulation_points", points}});
    return ok;
  }
  out << "density=" << to_string(r.density)
      << " natural=" << (r.natural_density ? to_string(*r.natural_density) : "BOT") << " c=" << r.modulus
      << " acc=[";
  for (std::size_t i = 0; i < r.accumulation_points.size(); ++i)
    out << (i ? "," : "") << r.accumulation_points[i].first << ':'
        << to_string(r.accumulation_points[i].second);
  out << "]\n";
  return ok;
}

int cmd_census(const Settings& s, std::ostream& out) {
  const LanguageOracle oracle = parse_oracle(s.oracle);
  const LengthCensus census =
      census_by_enumeration(oracle, s.max, s.budget.value_or(kDefaultEnumerationBudget));
  const RatioSeries series = ratio_and_cesaro(census);
  if (s.format == "json") {
    json rows = json::array();
    for (std::size_t n = 0; n <= census.max_length(); ++n)
      rows.push_back({{"n", n},
                      {"count", integer(census.counts[n])},
                      {"ratio", fraction(series.ratios[n])},
                      {"cesaro", n == 0 ? json(nullptr) : fraction(series.cesaro[n])}});
    print_json(out, {{"oracle", oracle.name}, {"rows", rows}});
    return ok;
  }
  out << "n,count,ratio,cesaro\n";
  for (std::size_t n = 0; n <= census.max_length(); ++n)
    out << n << ',' << to_string(census.counts[n]) << ',' << to_string(series.ratios[n]) << ','
        << (n == 0 ? std::string() : to_string(series.cesaro[n])) << '\n';
  return ok;
}

std::string containment_cell(const GapRow& row, const Alphabet& alphabet) {
  std::string cell;
  if (row.inner_counterexample) cell = "inner:" + render_word(alphabet, *row.inner_counterexample);
  if (row.outer_counterexample)
    cell += (cell.empty() ? "" : ";") + std::string("outer:") + render_word(alphabet, *row.outer_counterexample);
  return cell.empty() ? "ok" : cell;
}

int cmd_gap(const Settings& s, std::ostream& out) {
  if (s.ks.empty()) throw std::invalid_argument("--k needs at least one value");
  const ApproxFamily family = parse_family(s.family);
  const GapReport report =
      gap_report(family, s.ks, s.max, s.budget.value_or(kDefaultEnumerationBudget));
  const Alphabet& alphabet = family.target.alphabet;
  bool all_ok = true;
  for (const auto& row : report.rows) all_ok = all_ok && row.containment_ok();

  if (s.format == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      const auto counter = [&](const std::optional<Word>& w) {
        return w ? json(render_word(alphabet, *w)) : json(nullptr);
      };
      const auto claim = [](const std::optional<Rational>& r) { return r ? fraction(*r) : json(nullptr); };
      rows.push_back({{"k", row.k},
                      {"inner", fraction(row.inner)},
                      {"outer", fraction(row.outer)},
                      {"gap", fraction(row.gap)},
                      {"claimed_inner", claim(row.claimed_inner)},
                      {"claimed_outer", claim(row.claimed_outer)},
                      {"inner_counterexample", counter(row.inner_counterexample)},
                      {"outer_counterexample", counter(row.outer_counterexample)}});
    }
    json cesaro = json::array();
    for (std::size_t n = 1; n < report.target_prefix.cesaro.size(); ++n)
      cesaro.push_back(fraction(report.target_prefix.cesaro[n]));
    print_json(out, {{"family", report.family},
                     {"max", report.max_length},
                     {"rows", rows},
                     {"target_cesaro", cesaro}});
  } else {
    out << "k,inner,outer,gap,containment\n";
    for (const auto& row : report.rows)
      out << row.k << ',' << to_string(row.inner) << ',' << to_string(row.outer) << ','
          << to_string(row.gap) << ',' << containment_cell(row, alphabet) << '\n';
  }
  return all_ok ? ok : failure;
}

int cmd_monoid(const Settings& s, std::ostream& out) {
  const Dfa x = load_dfa(s.dfa, s.alphabet);
  const std::size_t budget = s.budget ? static_cast<std::size_t>(*s.budget) : kDefaultMonoidBudget;
  const TransitionMonoid tm = transition_monoid(x, budget);
  const Monoid& m = tm.monoid;
  const GreenClasses gc = green_classes(m);
  const Alphabet& alphabet = m.alphabet();
  const bool null = density(x) == 0;
  std::optional<NonprimitiveWitness> witness;
  if (!null) witness = nonprimitive_witness(x, budget);
  std::optional<Word> escape;
  if (s.m && !null) escape = majority_escape_witness(x, *s.m);

  std::vector<Element> jmin;
  for (Element e = 0; e < m.size(); ++e)
    if (tm.accept.contains(e) && gc.j_minimal(gc.j[e])) jmin.push_back(e);

  if (s.format == "json") {
    json elements = json::array();
    for (Element e = 0; e < m.size(); ++e)
      elements.push_back({{"id", e},
                          {"word", render_word(alphabet, m.witness(e))},
                          {"accept", tm.accept.contains(e)},
                          {"R", gc.r[e]},
                          {"L", gc.l[e]},
                          {"J", gc.j[e]},
                          {"H", gc.h[e]},
                          {"j_minimal", gc.j_minimal(gc.j[e])},
                          {"idempotent", m.product(e, e) == e}});
    json doc = {{"size", m.size()}, {"elements", elements}, {"j_minimal_accept", jmin}};
    if (witness)
      doc["witness"] = {{"word", render_word(alphabet, witness->word)}, {"n", witness->n}};
    else
      doc["status"] = "NULL-LANGUAGE";
    if (escape) doc["escape"] = {{"m", *s.m}, {"word", render_word(alphabet, *escape)}};
    print_json(out, doc);
    return ok;
  }

  out << "|M|=" << m.size() << ", ";
  if (witness)
    out << "witness=(" << render_word(alphabet, witness->word) << ',' << witness->n << ")\n";
  else
    out << "status=NULL-LANGUAGE\n";
  out << "element,word,accept,R,L,J,H,j_minimal,idempotent\n";
  for (Element e = 0; e < m.size(); ++e)
    out << e << ',' << render_word(alphabet, m.witness(e)) << ',' << tm.accept.contains(e) << ','
        << gc.r[e] << ',' << gc.l[e] << ',' << gc.j[e] << ',' << gc.h[e] << ','
        << gc.j_minimal(gc.j[e]) << ',' << (m.product(e, e) == e) << '\n';
  out << "j_minimal_accept=";
  for (std::size_t i = 0; i < jmin.size(); ++i) out << (i ? "," : "") << jmin[i];
  out << '\n';
  if (escape) out << "escape(m=" << *s.m << ")=" << render_word(alphabet, *escape) << '\n';
  return ok;
}

int cmd_check(const Settings& s, std::ostream& out, const CheckOptions& options) {
  const auto results = run_checks(options, s.only);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (s.format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"id", r.id}, {"tag", r.tag}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    print_json(out, {{"passed", all}, {"criteria", rows}});
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.tag << ": " << r.title << " -- "
          << r.detail << '\n';
  }
  return all ? ok : failure;
}

}  // namespace

Dfa load_dfa(const std::string& source, const std::string& alphabet_symbols) {
  const Alphabet alphabet(alphabet_symbols);
  const auto arg = [&](std::string_view prefix) -> std::optional<std::string> {
    if (source.rfind(prefix, 0) != 0) return std::nullopt;
    return source.substr(prefix.size());
  };
  const auto letter = [&](const std::string& s) {
    if (s.size() != 1) throw std::invalid_argument("built-in '" + source + "' expects one letter");
    return s[0];
  };
  if (source == "evens") return machines::even_length(alphabet);
  if (source == "empty") return Dfa::empty(alphabet);
  if (source == "all") return Dfa::universal(alphabet);
  if (source == "astar") return machines::letter_star(alphabet, alphabet.symbol(0));
  if (auto rest = arg("starts:")) return machines::starts_with(alphabet, letter(*rest));
  if (auto rest = arg("ends:")) return machines::ends_with(alphabet, letter(*rest));
  if (auto rest = arg("modk:")) {
    std::size_t k = 0;
    std::istringstream in(*rest);
    if (!(in >> k) || !in.eof()) throw std::invalid_argument("modk expects a modulus");
    if (alphabet.size() < 2) throw std::invalid_argument("modk needs two letters");
    return mod_counter_dfa(alphabet, k, alphabet.symbol(0), alphabet.symbol(1));
  }
  std::ifstream file(source);
  if (!file) throw std::invalid_argument("cannot open DFA file '" + source + "'");
  std::stringstream text;
  text << file.rdbuf();
  return dfa_from_json_text(text.str());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const CheckOptions& checks) {
  CLI::App app{"Exact densities and regular approximations of formal languages", "regmeasure"};
  app.require_subcommand(1);
  Settings s;

  const auto format = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  const auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", s.budget, "Work budget override")->check(CLI::PositiveNumber);
  };
  const auto alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", s.alphabet, "Alphabet for built-in automata (default ab)");
  };

  auto* density_cmd = app.add_subcommand("density", "Density, natural density and accumulation points");
  density_cmd->add_option("--dfa", s.dfa, "DFA JSON path or built-in")->required();
  alphabet(density_cmd);
  format(density_cmd);

  auto* census_cmd = app.add_subcommand("census", "Per-length counts, ratios and Cesàro means");
  census_cmd->add_option("--oracle", s.oracle, "Language oracle name")->required();
  census_cmd->add_option("--max", s.max, "Largest word length")->required();
  budget(census_cmd);
  format(census_cmd);

  auto* gap_cmd = app.add_subcommand("gap", "Approximation densities, gaps and containment");
  gap_cmd->add_option("--family", s.family, "Approximation family")->required();
  gap_cmd->add_option("--k", s.ks, "Comma-separated parameters")->required()->delimiter(',');
  gap_cmd->add_option("--max", s.max, "Containment check length (default 12)");
  budget(gap_cmd);
  format(gap_cmd);

  auto* monoid_cmd = app.add_subcommand("monoid", "Transition monoid, Green's classes and witnesses");
  monoid_cmd->add_option("--dfa", s.dfa, "DFA JSON path or built-in")->required();
  monoid_cmd->add_option("--m", s.m, "Also print a majority escape witness for M_m")
      ->check(CLI::PositiveNumber);
  alphabet(monoid_cmd);
  budget(monoid_cmd);
  format(monoid_cmd);

  auto* check_cmd = app.add_subcommand("check", "Run the theorem check suite");
  check_cmd->add_option("--only", s.only, "Run only criteria with this tag or number");
  format(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (density_cmd->parsed()) return cmd_density(s, out);
    if (census_cmd->parsed()) return cmd_census(s, out);
    if (gap_cmd->parsed()) return cmd_gap(s, out);
    if (monoid_cmd->parsed()) return cmd_monoid(s, out);
    return cmd_check(s, out, checks);
  } catch (const ResourceError& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return resource;
  } catch (const DfaFormatError& e) {
    err << "invalid DFA: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace regmeasure::cli
