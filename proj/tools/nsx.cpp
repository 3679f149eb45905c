#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsx/baser.hpp"
#include "nsx/numsys.hpp"
#include "nsx/oracle.hpp"
#include "nsx/real_roots.hpp"
#include "nsx/reflexive.hpp"
#include "nsx/simplex.hpp"

using nsx::Int;
using nsx::IntPolynomial;
using nsx::Rat;
using json = nlohmann::ordered_json;

namespace {

enum class Format { text, json, csv };

struct Options {
  Format format = Format::text;
  unsigned long long budget = nsx::kDefaultEnumBudget;
};

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.emplace_back(item);
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

json ints_to_json(const std::vector<Int>& xs) {
  json arr = json::array();
  for (const Int& x : xs) arr.push_back(x.get_str());
  return arr;
}

json poly_to_json(const IntPolynomial& p) { return ints_to_json(p.coeffs()); }

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string join_ints(const std::vector<Int>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].get_str();
  }
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Ascending polynomial in t with rational coefficients.
std::string ehrhart_to_string(const std::vector<Rat>& coeffs) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Rat mag = abs(coeffs[i]);
    if (first) {
      if (sgn(coeffs[i]) < 0) out += "-";
      first = false;
    } else {
      out += sgn(coeffs[i]) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_den() == 1 ? mag.get_num().get_str() : "(" + rat_to_string(mag) + ")";
    if (i >= 1) out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return first ? "0" : out;
}

json property_flags(const IntPolynomial& p, std::size_t degree) {
  return json{{"symmetric", nsx::is_symmetric(p, degree)},
              {"unimodal", nsx::is_unimodal(p)},
              {"log_concave", nsx::is_log_concave(p)},
              {"real_rooted", nsx::is_real_rooted(p)}};
}

void print_property_line(const json& flags) {
  std::cout << "symmetric: " << yesno(flags["symmetric"].get<bool>())
            << "   unimodal: " << yesno(flags["unimodal"].get<bool>())
            << "   log-concave: " << yesno(flags["log_concave"].get<bool>())
            << "   real-rooted: " << yesno(flags["real_rooted"].get<bool>()) << "\n";
}

void emit_csv_pairs(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::cout << "key,value\n";
  for (const auto& [k, v] : rows) std::cout << k << "," << v << "\n";
}

// ---- hstar ----------------------------------------------------------------

int run_hstar(const Options& opt, const std::string& q_arg, const std::string& system_arg,
              std::size_t n_arg, const std::string& method, bool verify) {
  std::optional<nsx::QSimplex> q;
  bool base_r_input = false;
  Int base = 0;
  if (!q_arg.empty()) {
    q.emplace(parse_int_list(q_arg));
  } else if (!system_arg.empty()) {
    if (n_arg == 0) throw std::invalid_argument("--system needs --n");
    nsx::NumeralSystem sys = nsx::parse_system_spec(system_arg);
    if (sys.kind() == nsx::SystemKind::base_r) {
      base = Int(system_arg.substr(system_arg.find(':') + 1));
      q.emplace(nsx::BaseRSimplex(base, n_arg).q);
      base_r_input = true;
    } else {
      std::string why;
      auto dp = nsx::mixed_radix_divisor_system(sys, n_arg, &why);
      if (!dp)
        throw std::invalid_argument("system " + system_arg + " has no divisor system (" + why +
                                    "); it does not define a reflexive simplex");
      q.emplace(nsx::q_from_divisors(*dp, n_arg));
    }
  } else {
    throw std::invalid_argument("hstar needs --q or --system");
  }
  if ((method == "nasc" || method == "sections") && !base_r_input)
    throw std::invalid_argument("--method " + method + " is only valid for base-r systems");

  auto compute = [&](const std::string& m) -> IntPolynomial {
    if (m == "omega") return nsx::hstar(*q);
    if (m == "nasc") return nsx::hstar_nasc(base, n_arg, opt.budget);
    return nsx::hstar_sections(base, n_arg);
  };
  IntPolynomial h = compute(method);

  bool agree = true;
  std::vector<std::string> methods{method};
  if (verify) {
    methods = base_r_input ? std::vector<std::string>{"omega", "nasc", "sections"}
                           : std::vector<std::string>{"omega"};
    for (const auto& m : methods)
      if (compute(m) != h) agree = false;
  }

  const std::size_t dim = q->dim();
  json flags = property_flags(h, dim);
  json doc{{"kind", "polynomial"},
           {"q", ints_to_json(q->q())},
           {"method", method},
           {"coeffs", poly_to_json(h)},
           {"text", nsx::to_string(h)},
           {"normalized_volume", nsx::normalized_volume(*q).get_str()},
           {"properties", flags}};
  if (verify) doc["verify"] = json{{"methods", methods}, {"agree", agree}};

  switch (opt.format) {
    case Format::json:
      std::cout << doc.dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << "k,coefficient\n";
      for (std::size_t k = 0; k < h.coeffs().size(); ++k)
        std::cout << k << "," << h.coeffs()[k].get_str() << "\n";
      break;
    case Format::text:
      std::cout << "q = (" << join_ints(q->q()) << ")\n";
      std::cout << "h* = " << nsx::to_string(h) << "\n";
      std::cout << "normalized volume = " << nsx::normalized_volume(*q).get_str() << "\n";
      print_property_line(flags);
      if (verify) std::cout << "cross-method agreement: " << yesno(agree) << "\n";
      break;
  }
  return verify && !agree ? 1 : 0;
}

// ---- numeral ---------------------------------------------------------------

int run_numeral(const Options& opt, bool encode_mode, const std::string& system_arg,
                const std::string& value, std::optional<std::size_t> width) {
  nsx::NumeralSystem sys = nsx::parse_system_spec(system_arg);
  json doc{{"kind", "numeral"},
           {"system", sys.spec_string()},
           {"mode", encode_mode ? "encode" : "decode"}};
  std::string digits, number;
  if (encode_mode) {
    nsx::Numeral num = nsx::encode(sys, Int(value), width);
    digits = nsx::to_string(num);
    number = Int(value).get_str();
    doc["value"] = number;
    doc["digits"] = digits;
    doc["width"] = num.width();
  } else {
    nsx::Numeral num = nsx::numeral_from_string(sys, value);
    Int decoded = nsx::decode(num);
    digits = value;
    number = decoded.get_str();
    doc["digits"] = digits;
    doc["value"] = number;
    doc["width"] = num.width();
  }
  switch (opt.format) {
    case Format::json:
      std::cout << doc.dump(2) << "\n";
      break;
    case Format::csv:
      emit_csv_pairs({{"system", sys.spec_string()}, {"digits", digits}, {"value", number}});
      break;
    case Format::text:
      std::cout << (encode_mode ? digits : number) << "\n";
      break;
  }
  return 0;
}

// ---- reflexive -------------------------------------------------------------

int run_reflexive(const Options& opt, const std::string& system_arg, std::size_t n_max,
                  const std::string& divisors_arg) {
  if (n_max == 0) throw std::invalid_argument("--n-max must be positive");
  nsx::NumeralSystem sys = nsx::parse_system_spec(system_arg);

  std::optional<nsx::DivisorPrefix> dp;
  std::string failure;
  const bool candidate_given = !divisors_arg.empty();
  bool candidate_ok = true;
  if (candidate_given) {
    nsx::DivisorPrefix cand = nsx::make_divisor_prefix(sys, parse_int_list(divisors_arg));
    candidate_ok = nsx::check_divisor_system(cand, n_max);
    if (candidate_ok)
      dp = std::move(cand);
    else
      failure = "supplied divisors fail the divisor-system conditions";
  } else {
    if (!sys.radices(n_max).has_value())
      throw std::invalid_argument(
          "system " + system_arg +
          " is not mixed radix; supply a candidate with --divisors to verify it");
    dp = nsx::mixed_radix_divisor_system(sys, n_max, &failure);
  }

  json doc{{"kind", "table"},
           {"report", "reflexive"},
           {"system", sys.spec_string()},
           {"n_max", n_max}};
  json rows = json::array();
  if (dp) {
    doc["divisors"] = ints_to_json(dp->d);
    for (std::size_t n = 1; n <= n_max; ++n) {
      nsx::QSimplex q = nsx::q_from_divisors(*dp, n);
      Int vol = nsx::normalized_volume(q);
      json row{{"n", n},
               {"q", ints_to_json(q.q())},
               {"volume", vol.get_str()},
               {"reflexive", nsx::is_reflexive(q)}};
      if (nsx::fits_ulonglong(vol) && nsx::to_ulonglong(vol) <= opt.budget) {
        IntPolynomial h = nsx::hstar(q);
        row["hstar"] = poly_to_json(h);
        row["symmetric"] = nsx::is_symmetric(h, n);
      } else {
        row["hstar"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
  } else {
    doc["divisors"] = nullptr;
    doc["failure"] = failure;
  }
  doc["rows"] = rows;

  switch (opt.format) {
    case Format::json:
      std::cout << doc.dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << "n,q,volume,hstar\n";
      for (const auto& row : rows) {
        std::string qs, hs;
        for (const auto& x : row["q"]) qs += (qs.empty() ? "" : " ") + x.get<std::string>();
        if (row["hstar"].is_array())
          for (const auto& x : row["hstar"]) hs += (hs.empty() ? "" : " ") + x.get<std::string>();
        std::cout << row["n"] << "," << qs << "," << row["volume"].get<std::string>() << "," << hs
                  << "\n";
      }
      break;
    case Format::text:
      std::cout << "system " << sys.spec_string() << ": ";
      if (dp) {
        std::cout << "divisor system d = (" << join_ints(dp->d) << ")\n";
        for (const auto& row : rows) {
          std::string qs;
          for (const auto& x : row["q"]) qs += (qs.empty() ? "" : ", ") + x.get<std::string>();
          std::cout << " n=" << row["n"] << ": q = (" << qs << ")";
          std::cout << "  volume = " << row["volume"].get<std::string>();
          if (row["hstar"].is_array()) {
            std::vector<Int> cs;
            for (const auto& x : row["hstar"]) cs.emplace_back(x.get<std::string>());
            std::cout << "  h* = " << nsx::to_string(IntPolynomial(std::move(cs)));
          } else {
            std::cout << "  h* skipped (volume exceeds budget)";
          }
          std::cout << "\n";
        }
      } else {
        std::cout << "none (" << failure << ")\n";
      }
      break;
  }
  return candidate_given && !candidate_ok ? 1 : 0;
}

// ---- oracle ----------------------------------------------------------------

int run_oracle(const Options& opt, const std::string& q_arg, const std::string& t_max_arg,
               const std::string& check) {
  nsx::QSimplex q(parse_int_list(q_arg));
  std::optional<Int> t_max;
  if (!t_max_arg.empty()) t_max = Int(t_max_arg);
  nsx::EhrhartTable table = nsx::build_ehrhart_table(q, t_max, opt.budget);

  const bool positive = nsx::is_ehrhart_positive(table);
  std::optional<bool> agreement;
  if (check == "hstar") agreement = table.hstar == nsx::hstar(q);

  json ehr = json::array();
  for (const Rat& c : table.ehrhart_coeffs) ehr.push_back(rat_to_string(c));
  json doc{{"kind", "table"},
           {"report", "oracle"},
           {"q", ints_to_json(q.q())},
           {"counts", ints_to_json(table.counts)},
           {"ehrhart", ehr},
           {"hstar", poly_to_json(table.hstar)},
           {"ehrhart_positive", positive}};
  if (agreement) doc["agreement"] = *agreement;

  switch (opt.format) {
    case Format::json:
      std::cout << doc.dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << "t,count\n";
      for (std::size_t t = 0; t < table.counts.size(); ++t)
        std::cout << t << "," << table.counts[t].get_str() << "\n";
      break;
    case Format::text:
      std::cout << "q = (" << join_ints(q.q()) << ")\n";
      std::cout << " t  i(t)\n";
      for (std::size_t t = 0; t < table.counts.size(); ++t)
        std::cout << " " << t << "  " << table.counts[t].get_str() << "\n";
      std::cout << "Ehrhart polynomial: " << ehrhart_to_string(table.ehrhart_coeffs) << "\n";
      std::cout << "h* (oracle) = " << nsx::to_string(table.hstar) << "\n";
      if (agreement) std::cout << "agreement with formula h*: " << yesno(*agreement) << "\n";
      std::cout << "Ehrhart positive: " << yesno(positive) << "\n";
      break;
  }
  if (check == "hstar") return *agreement ? 0 : 1;
  if (check == "positivity") return positive ? 0 : 1;
  return 0;
}

// ---- check -----------------------------------------------------------------

int run_check(const Options& opt, const std::string& coeffs_arg, long degree_arg) {
  IntPolynomial p(parse_int_list(coeffs_arg));
  if (p.is_zero())
    throw std::invalid_argument("property flags of the zero polynomial are undefined");
  std::size_t degree =
      degree_arg >= 0 ? static_cast<std::size_t>(degree_arg) : static_cast<std::size_t>(p.degree());
  json flags = property_flags(p, degree);
  json doc{{"kind", "boolean-report"},
           {"coeffs", poly_to_json(p)},
           {"degree", degree},
           {"properties", flags}};
  switch (opt.format) {
    case Format::json:
      std::cout << doc.dump(2) << "\n";
      break;
    case Format::csv:
      emit_csv_pairs({{"symmetric", yesno(flags["symmetric"].get<bool>())},
                      {"unimodal", yesno(flags["unimodal"].get<bool>())},
                      {"log_concave", yesno(flags["log_concave"].get<bool>())},
                      {"real_rooted", yesno(flags["real_rooted"].get<bool>())}});
      break;
    case Format::text:
      std::cout << "p = " << nsx::to_string(p) << "\n";
      print_property_line(flags);
      break;
  }
  return 0;
}

// ---- sections --------------------------------------------------------------

int run_sections(const Options& opt, long r, std::size_t n) {
  nsx::SectionSequence seq = nsx::section_sequence(r, n);
  bool all_strict = true;
  for (std::size_t i = 0; i < seq.polys.size(); ++i)
    for (std::size_t j = i + 1; j < seq.polys.size(); ++j)
      if (!nsx::interlaces(seq.polys[i], seq.polys[j], true)) all_strict = false;
  IntPolynomial h = nsx::apply_H(r, seq.polys).back();

  json secs = json::array();
  const std::size_t m = static_cast<std::size_t>(r) - 1;
  for (std::size_t i = 0; i < seq.polys.size(); ++i)
    secs.push_back(json{{"ell", m - 1 - i}, {"coeffs", poly_to_json(seq.polys[i])}});
  json doc{{"kind", "table"},  {"report", "sections"},
           {"r", r},           {"n", n},
           {"sections", secs}, {"strictly_interlacing", all_strict},
           {"hstar", poly_to_json(h)}};
  switch (opt.format) {
    case Format::json:
      std::cout << doc.dump(2) << "\n";
      break;
    case Format::csv:
      std::cout << "ell,coeffs\n";
      for (const auto& sec : secs) {
        std::string cs;
        for (const auto& x : sec["coeffs"]) cs += (cs.empty() ? "" : " ") + x.get<std::string>();
        std::cout << sec["ell"] << "," << cs << "\n";
      }
      break;
    case Format::text:
      std::cout << "f_(" << r << "," << n << ") sections, interlacing order first:\n";
      for (std::size_t i = 0; i < seq.polys.size(); ++i)
        std::cout << " f^<" << m << "," << m - 1 - i << "> = " << nsx::to_string(seq.polys[i])
                  << "\n";
      std::cout << "strictly mutually interlacing: " << yesno(all_strict) << "\n";
      std::cout << "h* = " << nsx::to_string(h) << "\n";
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact h*-polynomials of simplices attached to numeral systems"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("NS_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparseable NS_BUDGET\n";
    }
  }
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", opt.budget, "enumeration ceiling (candidate points / values of b)");

  auto* hstar_cmd = app.add_subcommand("hstar", "h*-polynomial of a simplex");
  std::string q_arg, system_arg, method = "omega";
  std::size_t n_arg = 0;
  bool verify = false;
  hstar_cmd->add_option("--q", q_arg, "weakly increasing q-vector, e.g. 3,12,48");
  hstar_cmd->add_option("--system", system_arg, "numeral system spec");
  hstar_cmd->add_option("--n", n_arg, "dimension (with --system)");
  hstar_cmd->add_option("--method", method)->check(CLI::IsMember({"omega", "nasc", "sections"}));
  hstar_cmd->add_flag("--verify", verify, "cross-check all applicable methods");

  auto* numeral_cmd = app.add_subcommand("numeral", "encode/decode integers");
  auto* encode_cmd = numeral_cmd->add_subcommand("encode");
  auto* decode_cmd = numeral_cmd->add_subcommand("decode");
  numeral_cmd->require_subcommand(1);
  std::string num_system, num_value, num_digits;
  long width_arg = -1;
  encode_cmd->add_option("--system", num_system)->required();
  encode_cmd->add_option("value", num_value)->required();
  encode_cmd->add_option("--width", width_arg, "zero-pad to this many places");
  decode_cmd->add_option("--system", num_system)->required();
  decode_cmd->add_option("digits", num_digits)->required();

  auto* reflexive_cmd = app.add_subcommand("reflexive", "divisor system and simplices");
  std::string refl_system, divisors_arg;
  std::size_t n_max = 0;
  reflexive_cmd->add_option("--system", refl_system)->required();
  reflexive_cmd->add_option("--n-max", n_max)->required();
  reflexive_cmd->add_option("--divisors", divisors_arg, "candidate divisor prefix to verify");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force Ehrhart pipeline");
  std::string oracle_q, t_max_arg, check_arg;
  oracle_cmd->add_option("--q", oracle_q)->required();
  oracle_cmd->add_option("--t-max", t_max_arg);
  oracle_cmd->add_option("--check", check_arg)->check(CLI::IsMember({"hstar", "positivity"}));

  auto* check_cmd = app.add_subcommand("check", "property flags of a coefficient list");
  std::string coeffs_arg;
  long degree_arg = -1;
  check_cmd->add_option("--coeffs", coeffs_arg)->required();
  check_cmd->add_option("--degree", degree_arg, "degree for the symmetry check");

  auto* sections_cmd = app.add_subcommand("sections", "section sequence and interlacing");
  long sec_r = 0;
  std::size_t sec_n = 0;
  sections_cmd->add_option("--r", sec_r)->required()->check(CLI::Range(2L, 1000000L));
  sections_cmd->add_option("--n", sec_n)->required();

  CLI11_PARSE(app, argc, argv);
  opt.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    if (*hstar_cmd) return run_hstar(opt, q_arg, system_arg, n_arg, method, verify);
    if (*numeral_cmd) {
      std::optional<std::size_t> width;
      if (width_arg >= 0) width = static_cast<std::size_t>(width_arg);
      if (*encode_cmd) return run_numeral(opt, true, num_system, num_value, width);
      return run_numeral(opt, false, num_system, num_digits, std::nullopt);
    }
    if (*reflexive_cmd) return run_reflexive(opt, refl_system, n_max, divisors_arg);
    if (*oracle_cmd) return run_oracle(opt, oracle_q, t_max_arg, check_arg);
    if (*check_cmd) return run_check(opt, coeffs_arg, degree_arg);
    if (*sections_cmd) return run_sections(opt, sec_r, sec_n);
  } catch (const nsx::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
