#include "cli_lib.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sigshift/bijections.hpp"
#include "sigshift/counting.hpp"
#include "sigshift/enumeration.hpp"
#include "sigshift/interval_map.hpp"
#include "sigshift/periodic_patterns.hpp"
#include "sigshift/permutation.hpp"
#include "sigshift/shift.hpp"
#include "sigshift/signature.hpp"
#include "sigshift/word.hpp"

namespace sigshift::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string format = "json";
  long long budget = 20'000'000;  // word states admitted to brute scans
  int cycle_limit = 9;            // candidate scans walk (n-1)! cycles
  unsigned long long seed = 0;    // reserved; everything is deterministic
};

std::string count_str(const Count& value) { return value.str(); }

void require_word_budget(int alphabet, int length, long long budget) {
  if (integer_power(alphabet, static_cast<std::uint64_t>(length)) > Count(budget)) {
    throw std::invalid_argument(
        "budget exceeded: the brute scan visits " + std::to_string(alphabet) + "^" +
        std::to_string(length) + " words; raise --budget or switch method");
  }
}

void require_cycle_budget(int length, int cycle_limit) {
  if (length > cycle_limit) {
    throw std::invalid_argument(
        "budget exceeded: the candidate scan walks (n-1)! cycles and n = " +
        std::to_string(length) + " > " + std::to_string(cycle_limit) +
        "; raise --cycle-limit if you mean it");
  }
}

json int_list(const std::vector<int>& values) {
  json out = json::array();
  for (int v : values) out.push_back(v);
  return out;
}

json class_json(const CyclicClass& cls, const Signature& sigma) {
  const Permutation& rep = cls.representative();
  Permutation tau = hat(rep);
  auto report = is_periodic_pattern(rep, sigma);
  json witnesses = json::array();
  for (const PeriodicWord& w : report.witnesses) witnesses.push_back(w.str());
  return json{{"representative", rep.str()},
              {"hat", tau.str()},
              {"hat_descents", int_list(descent_set(tau))},
              {"hat_ascents", int_list(ascent_set(tau))},
              {"witnesses", witnesses}};
}

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid range '" + text + "': expected N or LO..HI");
  }
}

CommandResult cmd_count(const std::string& what, int n, int k,
                        const std::string& sigma_text, const std::string& family_text,
                        const std::string& method, const GlobalOptions& global) {
  const bool brute = method == "brute";
  if (!brute && method != "formula") {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  Count value;
  std::string provenance;

  auto scan_cycles = [&](bool ascending) {
    require_cycle_budget(n, global.cycle_limit);
    Count total = 0;
    if (n == 1) return (k == 1) ? Count(1) : Count(0);
    std::vector<int> tail(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) tail[static_cast<std::size_t>(i)] = i + 2;
    do {
      std::vector<int> entries = {1};
      entries.insert(entries.end(), tail.begin(), tail.end());
      Permutation tau = hat(Permutation(entries));
      auto slopes = ascending ? ascent_set(tau) : descent_set(tau);
      if (static_cast<int>(slopes.size()) == k - 1) ++total;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return total;
  };

  if (what == "tent") {
    if (brute) {
      require_word_budget(2, n, global.budget);
      value = Count(enumerate_periodic_classes(Signature::parse("+-"), n,
                                               EnumerationMethod::brute)
                        .size());
      provenance = "brute orbit-class enumeration";
    } else {
      value = count_tent(n);
      provenance = "odd-divisor moebius sum";
    }
  } else if (what == "necklace") {
    if (brute) {
      require_word_budget(k, n, global.budget);
      value = Count(enumerate_necklaces(k, static_cast<std::size_t>(n)).size());
      provenance = "necklace generation";
    } else {
      value = primitive_word_count(k, static_cast<std::uint64_t>(n));
      provenance = "moebius divisor sum";
    }
  } else if (what == "cycles-des") {
    if (brute) {
      value = scan_cycles(false);
      provenance = "direct cycle scan";
    } else {
      value = count_C(n, k);
      provenance = "descent-level recurrence";
    }
  } else if (what == "cycles-asc") {
    if (brute) {
      value = scan_cycles(true);
      provenance = "direct cycle scan";
    } else {
      value = count_Cprime(n, k);
      provenance = "ascent-level recurrence";
    }
  } else if (what == "shift") {
    if (brute) {
      require_word_budget(k, n, global.budget);
      value = Count(enumerate_periodic_classes(Signature::all_plus(k), n,
                                               EnumerationMethod::brute)
                        .size());
      provenance = "brute orbit-class enumeration";
    } else {
      value = p_shift(n, k);
      provenance = "descent-level recurrence sum";
    }
  } else if (what == "reverse") {
    if (brute) {
      require_word_budget(k, n, global.budget);
      value = Count(enumerate_periodic_classes(Signature::all_minus(k), n,
                                               EnumerationMethod::brute)
                        .size());
      provenance = "brute orbit-class enumeration";
    } else {
      value = p_reverse(n, k);
      provenance = "ascent-level recurrence sum";
    }
  } else if (what == "avoiding") {
    if (family_text.empty()) {
      throw std::invalid_argument("count --what avoiding needs --family");
    }
    AvoidanceFamily family = parse_family(family_text);
    if (brute) {
      value = count_avoiding_cycles(n, family, CountMethod::brute, global.cycle_limit);
      provenance = "pattern filter over cycles";
    } else {
      value = count_avoiding_cycles(n, family, CountMethod::formula);
      provenance = "closed form";
    }
  } else if (what == "classes") {
    if (sigma_text.empty()) {
      throw std::invalid_argument("count --what classes needs --sigma");
    }
    Signature sigma = Signature::parse(sigma_text);
    if (brute) {
      require_word_budget(sigma.alphabet(), n, global.budget);
      value = Count(
          enumerate_periodic_classes(sigma, n, EnumerationMethod::brute).size());
      provenance = "brute orbit-class enumeration";
    } else {
      require_cycle_budget(n, global.cycle_limit);
      value = count_periodic_classes(sigma, n);
      provenance = "characterization scan";
    }
  } else {
    throw std::invalid_argument(
        "unknown --what '" + what +
        "' (expected tent, necklace, cycles-des, cycles-asc, shift, reverse, "
        "avoiding or classes)");
  }

  json payload{{"what", what}, {"n", n}, {"value", count_str(value)},
               {"provenance", provenance}};
  if (what == "necklace" || what == "cycles-des" || what == "cycles-asc" ||
      what == "shift" || what == "reverse") {
    payload["k"] = k;
  }
  if (!sigma_text.empty()) payload["sigma"] = sigma_text;
  if (!family_text.empty()) payload["family"] = family_text;
  return CommandResult{Status::ok, payload, 0};
}

CommandResult cmd_enumerate(const std::string& sigma_text, int n,
                            const std::string& method, const GlobalOptions& global) {
  Signature sigma = Signature::parse(sigma_text);
  EnumerationMethod route;
  if (method == "brute") {
    require_word_budget(sigma.alphabet(), n, global.budget);
    route = EnumerationMethod::brute;
  } else if (method == "characterization") {
    require_cycle_budget(n, global.cycle_limit);
    route = EnumerationMethod::characterization;
  } else {
    throw std::invalid_argument("unknown method '" + method +
                                "' (expected brute or characterization)");
  }

  auto classes = enumerate_periodic_classes(sigma, n, route);
  json list = json::array();
  for (const CyclicClass& cls : classes) list.push_back(class_json(cls, sigma));
  json payload{{"sigma", sigma.str()},
               {"n", n},
               {"method", method},
               {"count", classes.size()},
               {"classes", list}};
  return CommandResult{Status::ok, payload, 0};
}

CommandResult cmd_check(const std::string& pi_text, const std::string& sigma_text,
                        bool full_witness_list) {
  Permutation pi = Permutation::parse(pi_text);
  Signature sigma = Signature::parse(sigma_text);
  auto report = is_periodic_pattern(pi, sigma);

  json payload{{"pi", pi.str()},
               {"sigma", sigma.str()},
               {"realizable", report.realizable},
               {"witness_count", report.witnesses.size()},
               {"segmentations_tried", count_str(report.segmentations_tried)}};
  if (!report.witnesses.empty()) payload["witness"] = report.witnesses.front().str();
  if (full_witness_list) {
    json witnesses = json::array();
    for (const PeriodicWord& w : report.witnesses) witnesses.push_back(w.str());
    payload["witnesses"] = witnesses;
  }
  Status status = report.realizable ? Status::ok : Status::undefined_result;
  return CommandResult{status, payload, 0};
}

CommandResult cmd_bijection(bool use_delta, bool use_phi, bool use_rho,
                            const std::string& tau_text, const std::vector<int>& cuts,
                            const std::string& pi_text, int alphabet,
                            const std::string& rho_text) {
  if (use_delta + use_phi + use_rho != 1) {
    throw std::invalid_argument(
        "bijection needs exactly one of --delta, --phi, --rho-to-pi");
  }
  if (use_delta) {
    if (tau_text.empty() || cuts.empty()) {
      throw std::invalid_argument("bijection --delta needs --tau and --D");
    }
    DeltaInput input{Permutation::parse(tau_text), cuts};
    auto trace = delta_trace(input);
    json payload{{"tau", input.tau.str()},      {"D", int_list(input.D)},
                 {"pi", trace.pi.str()},        {"word", trace.word.str()},
                 {"pi_prime", trace.pi_prime.str()}, {"image", trace.image.str()}};
    return CommandResult{Status::ok, payload, 0};
  }
  if (use_phi) {
    if (pi_text.empty()) throw std::invalid_argument("bijection --phi needs --pi");
    Permutation pi = Permutation::parse(pi_text);
    Permutation rho = phi(pi, alphabet);
    json payload{{"pi", pi.str()}, {"alphabet", alphabet}, {"rho", rho.str()}};
    return CommandResult{Status::ok, payload, 0};
  }
  if (rho_text.empty()) throw std::invalid_argument("bijection --rho-to-pi needs --rho");
  Permutation rho = Permutation::parse(rho_text);
  Permutation pi = rho_to_pi(rho);
  json payload{{"rho", rho.str()}, {"pi", pi.str()}};
  return CommandResult{Status::ok, payload, 0};
}

CommandResult cmd_table(const std::string& stat_text, const std::string& n_range,
                        const std::string& k_range) {
  Statistic stat = parse_statistic(stat_text);
  Range nr = parse_range(n_range);
  Range kr = parse_range(k_range);
  CountTable table = CountTable::build(stat, nr.lo, nr.hi, kr.lo, kr.hi);

  json rows = json::array();
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (int k = kr.lo; k <= kr.hi; ++k) {
      rows.push_back(json{{"n", n}, {"k", k}, {"value", count_str(table.value(n, k))}});
    }
  }
  json payload{{"statistic", statistic_name(stat)},
               {"n_lo", nr.lo},
               {"n_hi", nr.hi},
               {"k_lo", kr.lo},
               {"k_hi", kr.hi},
               {"rows", rows},
               {"csv", table.to_csv()}};
  return CommandResult{Status::ok, payload, 0};
}

CommandResult cmd_orbit(const std::string& sigma_text, std::optional<double> x,
                        const std::string& word_text, int length) {
  Signature sigma = Signature::parse(sigma_text);
  if (x.has_value() == !word_text.empty()) {
    throw std::invalid_argument("orbit needs exactly one of --x and --word");
  }

  if (x.has_value()) {
    if (length < 1) throw std::invalid_argument("orbit --x needs --n >= 1");
    json points = json::array();
    double point = *x;
    for (int i = 0; i < length; ++i) {
      points.push_back(point);
      point = eval_map(sigma, point);
    }
    auto pattern = float_orbit_pattern(sigma, *x, length);
    json payload{{"sigma", sigma.str()}, {"x0", *x}, {"n", length}, {"points", points}};
    if (!pattern.has_value()) {
      payload["error"] = "orbit points collide within tolerance; pattern undefined";
      return CommandResult{Status::undefined_result, payload, 0};
    }
    payload["pattern"] = pattern->str();
    return CommandResult{Status::ok, payload, 0};
  }

  PeriodicWord s(Word::parse(word_text, sigma.alphabet()));
  int n = length > 0 ? length : static_cast<int>(s.period());
  UltimatelyPeriodicWord conjugated = psi(UltimatelyPeriodicWord(s), sigma);
  Rational exact = word_to_point_exact(conjugated, sigma.alphabet());
  double x0 = word_to_point(conjugated, sigma.alphabet());

  auto symbolic = pattern_prefix(UltimatelyPeriodicWord(s), sigma, n);
  auto floated = float_orbit_pattern(sigma, x0, n);

  json payload{{"sigma", sigma.str()},
               {"word", s.str()},
               {"n", n},
               {"conjugated_word", conjugated.str()},
               {"x0", x0},
               {"x0_exact", exact.str()}};
  if (!symbolic.has_value() || !floated.has_value()) {
    payload["error"] = "pattern undefined (coinciding orbit points)";
    return CommandResult{Status::undefined_result, payload, 0};
  }
  payload["symbolic_pattern"] = symbolic->str();
  payload["float_pattern"] = floated->str();
  payload["agree"] = *symbolic == *floated;
  return CommandResult{Status::ok, payload, 0};
}

void print_result(const CommandResult& result, const std::string& format,
                  std::ostream& out) {
  if (format == "csv") {
    out << result.payload.at("csv").get<std::string>();
    return;
  }
  if (format == "plain") {
    for (const auto& [key, value] : result.payload.items()) {
      if (key == "csv") continue;
      if (value.is_string()) {
        out << key << ": " << value.get<std::string>() << "\n";
      } else {
        out << key << ": " << value.dump() << "\n";
      }
    }
    return;
  }
  json envelope{{"status", status_name(result.status)},
                {"payload", result.payload},
                {"elapsed_ms", result.elapsed_ms}};
  out << envelope.dump(2) << "\n";
}

}  // namespace

std::string status_name(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::invalid_input: return "invalid_input";
    case Status::undefined_result: return "undefined_result";
  }
  return "invalid_input";
}

int exit_code(Status status) {
  switch (status) {
    case Status::ok: return 0;
    case Status::invalid_input: return 1;
    case Status::undefined_result: return 2;
  }
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact combinatorics of periodic patterns of signed shifts"};
  app.name("sigshift");
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--budget", global.budget,
                 "max word states visited by brute scans")
      ->capture_default_str();
  app.add_option("--cycle-limit", global.cycle_limit,
                 "max n for scans that walk (n-1)! cycles")
      ->capture_default_str();
  app.add_option("--seed", global.seed, "reserved; all commands are deterministic");

  auto* count = app.add_subcommand("count", "evaluate one counting statistic");
  std::string count_what;
  int count_n = 0;
  int count_k = 2;
  std::string count_sigma;
  std::string count_family;
  std::string count_method = "formula";
  count->add_option("--what", count_what, "statistic to evaluate")->required();
  count->add_option("--n", count_n, "pattern length")->required();
  count->add_option("--k", count_k, "alphabet size (statistics that use one)");
  count->add_option("--sigma", count_sigma, "signature for --what classes");
  count->add_option("--family", count_family, "avoidance family, e.g. 213,312");
  count->add_option("--method", count_method, "formula or brute")
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "list periodic pattern classes");
  std::string enum_sigma;
  int enum_n = 0;
  std::string enum_method = "characterization";
  enumerate->add_option("--sigma", enum_sigma, "signature such as +--")->required();
  enumerate->add_option("--n", enum_n, "pattern length")->required();
  enumerate->add_option("--method", enum_method, "brute or characterization")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "decide realizability of one pattern");
  std::string check_pi;
  std::string check_sigma;
  check->add_option("--pi", check_pi, "candidate pattern")->required();
  check->add_option("--sigma", check_sigma, "signature")->required();

  auto* realize = app.add_subcommand(
      "realize", "like check, but lists every realizing word");
  std::string realize_pi;
  std::string realize_sigma;
  realize->add_option("--pi", realize_pi, "candidate pattern")->required();
  realize->add_option("--sigma", realize_sigma, "signature")->required();

  auto* bijection = app.add_subcommand("bijection", "apply one of the correspondences");
  bool use_delta = false;
  bool use_phi = false;
  bool use_rho = false;
  std::string bij_tau;
  std::vector<int> bij_D;
  std::string bij_pi;
  int bij_k = 2;
  std::string bij_rho;
  bijection->add_flag("--delta", use_delta, "descents-to-ascents map on cycles");
  bijection->add_flag("--phi", use_phi, "halving map on non-realizable patterns");
  bijection->add_flag("--rho-to-pi", use_rho, "doubling interleave");
  bijection->add_option("--tau", bij_tau, "cycle input for --delta");
  bijection->add_option("--D", bij_D, "cut positions for --delta")->delimiter(',');
  bijection->add_option("--pi", bij_pi, "pattern input for --phi");
  bijection->add_option("--k", bij_k, "alphabet for --phi")->capture_default_str();
  bijection->add_option("--rho", bij_rho, "permutation input for --rho-to-pi");

  auto* table = app.add_subcommand("table", "tabulate a statistic over ranges");
  std::string table_stat;
  std::string table_n;
  std::string table_k = "2..2";
  table->add_option("--stat", table_stat, "C, Cprime, p_shift, p_reverse, tent, necklace")
      ->required();
  table->add_option("--n", table_n, "row range LO..HI")->required();
  table->add_option("--k", table_k, "column range LO..HI")->capture_default_str();

  auto* orbit = app.add_subcommand("orbit", "iterate the piecewise-linear interval map");
  std::string orbit_sigma;
  std::string orbit_word;
  int orbit_n = 0;
  double orbit_x = 0;
  auto* orbit_x_opt = orbit->add_option("--x", orbit_x, "starting point in [0,1]");
  orbit->add_option("--word", orbit_word, "periodic word fed through the conjugacy");
  orbit->add_option("--sigma", orbit_sigma, "signature")->required();
  orbit->add_option("--n", orbit_n, "orbit length (defaults to the word period)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (global.format == "csv" && !table->parsed()) {
    CommandResult result{Status::invalid_input,
                         json{{"error", "csv format is only available for table"}}, 0};
    json envelope{{"status", status_name(result.status)},
                  {"payload", result.payload},
                  {"elapsed_ms", result.elapsed_ms}};
    out << envelope.dump(2) << "\n";
    return exit_code(result.status);
  }

  auto started = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    if (count->parsed()) {
      result = cmd_count(count_what, count_n, count_k, count_sigma, count_family,
                         count_method, global);
    } else if (enumerate->parsed()) {
      result = cmd_enumerate(enum_sigma, enum_n, enum_method, global);
    } else if (check->parsed()) {
      result = cmd_check(check_pi, check_sigma, false);
    } else if (realize->parsed()) {
      result = cmd_check(realize_pi, realize_sigma, true);
    } else if (bijection->parsed()) {
      result = cmd_bijection(use_delta, use_phi, use_rho, bij_tau, bij_D, bij_pi,
                             bij_k, bij_rho);
    } else if (table->parsed()) {
      result = cmd_table(table_stat, table_n, table_k);
    } else if (orbit->parsed()) {
      std::optional<double> x;
      if (orbit_x_opt->count() > 0) x = orbit_x;
      result = cmd_orbit(orbit_sigma, x, orbit_word, orbit_n);
    }
  } catch (const std::invalid_argument& e) {
    result = CommandResult{Status::invalid_input, json{{"error", e.what()}}, 0};
  } catch (const std::out_of_range& e) {
    result = CommandResult{Status::invalid_input, json{{"error", e.what()}}, 0};
  }
  auto elapsed = std::chrono::steady_clock::now() - started;
  result.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  print_result(result, global.format, out);
  return exit_code(result.status);
}

}  // namespace sigshift::cli
