// hankelt: sequences, integer sets, (t-)Hankel determinant tables,
// involution counts and claim verifiers from the command line.
//
// Exit status: 0 success, 1 a verifier failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankelt/hankel.hpp"
#include "hankelt/involutions.hpp"
#include "hankelt/number_sets.hpp"
#include "hankelt/polynomial.hpp"
#include "hankelt/sequences.hpp"
#include "hankelt/verify.hpp"

namespace {

using hankelt::IntPolynomial;
using json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::Plain;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "' (expected plain, json or csv)");
}

template <class F>
auto usage_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

void print_integer_list(std::ostream& out, const std::vector<std::string>& values, Format fmt,
                        const std::string& index_name, const std::string& value_name) {
  switch (fmt) {
    case Format::Plain:
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
      if (!values.empty()) out << '\n';
      break;
    case Format::Csv:
      out << index_name << ',' << value_name << '\n';
      for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
      break;
    case Format::Json:
      for (std::size_t i = 0; i < values.size(); ++i) {
        json row;
        row[index_name] = i;
        row[value_name] = json::parse(values[i]);
        out << row.dump() << '\n';
      }
      break;
  }
}

// ---- seq / set ------------------------------------------------------------

int cmd_seq(const std::string& name, std::size_t count, Format fmt) {
  const auto seq = usage_guard([&] { return hankelt::parse_sequence(name); });
  std::vector<std::string> values;
  for (auto v : hankelt::prefix_terms(seq, count)) values.push_back(std::to_string(v));
  print_integer_list(std::cout, values, fmt, "n", "value");
  return 0;
}

int cmd_set(const std::string& name, std::size_t count, Format fmt) {
  const auto set = usage_guard([&] { return hankelt::parse_set(name); });
  std::vector<std::string> values;
  for (auto v : hankelt::prefix(set, count).elements) values.push_back(std::to_string(v));
  print_integer_list(std::cout, values, fmt, "i", "element");
  return 0;
}

// ---- table ----------------------------------------------------------------

struct TableColumns {
  bool t = false;
  bool plain = false;
  bool mod2 = false;
};

int cmd_table(const std::string& name, std::size_t kmax, std::uint64_t offset, TableColumns cols,
              bool pretty, Format fmt) {
  const auto seq = usage_guard([&] { return hankelt::parse_sequence(name); });
  if (!cols.t && !cols.plain && !cols.mod2) cols = {true, true, true};

  std::vector<std::string> header{"k"};
  if (cols.t) header.push_back("t_hankel");
  if (cols.mod2) header.push_back("t_hankel_mod2");
  if (cols.plain) header.push_back("hankel");
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << '\n';
  }

  // Rows share nested windows, so one elimination yields the whole mod-2 column.
  const auto mod2_column =
      cols.mod2 ? hankelt::t_hankel_dets_mod2(seq, offset, kmax) : std::vector<hankelt::GF2Polynomial>{};

  for (std::size_t k = 0; k <= kmax; ++k) {
    std::vector<std::string> cells;
    json row;
    row["k"] = k;
    if (cols.t) {
      const IntPolynomial p = hankelt::t_hankel_det(seq, offset, k);
      cells.push_back(pretty ? p.pretty() : p.to_string());
      row["t_hankel"] = pretty ? json(p.pretty()) : json::parse(p.to_string());
    }
    if (cols.mod2) {
      const auto& p = mod2_column[k];
      cells.push_back(pretty ? p.pretty() : p.to_string());
      row["t_hankel_mod2"] = pretty ? json(p.pretty()) : json::parse(p.to_string());
    }
    if (cols.plain) {
      const std::string v = hankelt::hankel_det(seq, offset, k).get_str();
      cells.push_back(v);
      row["hankel"] = json::parse(v);
    }

    switch (fmt) {
      case Format::Plain:
        for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "\t" : "") << cells[i];
        std::cout << '\n';
        break;
      case Format::Csv:
        std::cout << k;
        for (const auto& c : cells) {
          std::cout << ',' << (c.find(',') != std::string::npos ? "\"" + c + "\"" : c);
        }
        std::cout << '\n';
        break;
      case Format::Json:
        std::cout << row.dump() << '\n';
        break;
    }
  }
  return 0;
}

// ---- mu -------------------------------------------------------------------

int cmd_mu(std::size_t m, std::size_t k, const std::string& set_name,
           const std::string& domain_name, std::size_t cap, Format fmt) {
  const auto allowed = usage_guard([&] { return hankelt::parse_set(set_name); });
  const auto domain_set = usage_guard([&] { return hankelt::parse_set(domain_name); });
  if (cap > hankelt::kMaxEnumerationCap) {
    throw UsageError("--cap may not exceed " + std::to_string(hankelt::kMaxEnumerationCap));
  }
  if (m > cap) {
    throw UsageError("m=" + std::to_string(m) + " exceeds the enumeration cap of " +
                     std::to_string(cap) + " (raise it with --cap)");
  }
  const auto domain = hankelt::prefix(domain_set, m).elements;
  const std::string count = hankelt::mu(domain, k, allowed, cap).get_str();
  switch (fmt) {
    case Format::Plain:
      std::cout << count << '\n';
      break;
    case Format::Csv:
      std::cout << "domain,m,k,set,mu\n"
                << hankelt::to_string(domain_set) << ',' << m << ',' << k << ','
                << hankelt::to_string(allowed) << ',' << count << '\n';
      break;
    case Format::Json: {
      json row;
      row["domain"] = hankelt::to_string(domain_set);
      row["m"] = m;
      row["k"] = k;
      row["set"] = hankelt::to_string(allowed);
      row["mu"] = json::parse(count);
      std::cout << row.dump() << '\n';
      break;
    }
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

std::string bounds_text(const hankelt::Bounds& b) {
  std::string out;
  for (const auto& [name, value] : b) {
    if (!out.empty()) out += ' ';
    out += name + '=' + std::to_string(value);
  }
  return out;
}

void print_reports(const std::vector<hankelt::VerifyReport>& reports, Format fmt, bool timing) {
  if (fmt == Format::Csv) std::cout << "claim,outcome,bounds,counterexample" << (timing ? ",seconds" : "") << '\n';
  for (const auto& r : reports) {
    const std::string tag(hankelt::to_string(r.claim));
    const double seconds = std::chrono::duration<double>(r.elapsed).count();
    std::string cex;
    if (r.counterexample) {
      for (const auto& [k, v] : r.counterexample->fields) cex += (cex.empty() ? "" : " ") + k + "=" + v;
    }
    switch (fmt) {
      case Format::Plain:
        std::cout << (r.passed ? "PASS " : "FAIL ") << tag << "  [" << bounds_text(r.bounds) << "]";
        if (timing) std::cout << "  " << seconds << "s";
        std::cout << '\n';
        if (!r.passed) std::cout << "  counterexample: " << cex << '\n';
        break;
      case Format::Csv:
        std::cout << tag << ',' << (r.passed ? "pass" : "fail") << ",\"" << bounds_text(r.bounds)
                  << "\",\"" << cex << '"';
        if (timing) std::cout << ',' << seconds;
        std::cout << '\n';
        break;
      case Format::Json: {
        json row;
        row["claim"] = tag;
        row["outcome"] = r.passed ? "pass" : "fail";
        row["bounds"] = json(r.bounds);
        if (r.counterexample) {
          json w = json::object();
          for (const auto& [k, v] : r.counterexample->fields) w[k] = v;
          row["counterexample"] = w;
        } else {
          row["counterexample"] = nullptr;
        }
        if (timing) row["seconds"] = seconds;
        std::cout << row.dump() << '\n';
        break;
      }
    }
  }
}

int cmd_verify(const std::string& target, const std::string& profile_name,
               const hankelt::Bounds& overrides, bool timing, Format fmt) {
  const auto profile = usage_guard([&] { return hankelt::parse_profile(profile_name); });
  std::vector<hankelt::VerifyReport> reports;
  if (target == "all") {
    reports = usage_guard([&] { return hankelt::verify_all(profile, overrides); });
  } else {
    const auto claim = usage_guard([&] { return hankelt::parse_claim(target); });
    hankelt::Bounds b = hankelt::default_bounds(claim, profile);
    for (const auto& [name, value] : overrides) {
      if (!b.contains(name)) {
        throw UsageError("claim " + std::string(hankelt::to_string(claim)) +
                         " does not take --" + name);
      }
      b[name] = value;
    }
    reports.push_back(usage_guard([&] { return hankelt::verify(claim, b); }));
  }
  print_reports(reports, fmt, timing);
  for (const auto& r : reports) {
    if (!r.passed) return 1;
  }
  return 0;
}

std::string default_profile() {
  if (const char* env = std::getenv("HANKELT_PROFILE"); env && *env) return env;
  return "quick";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel and t-Hankel determinants of automatic sequences"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  app.add_option("--format", format, "Output format: plain, json or csv")->capture_default_str();

  std::string name;
  std::size_t count = 0;

  auto* seq = app.add_subcommand("seq", "Print the first terms of a sequence");
  seq->add_option("sequence", name, "thue-morse, period-doubling, paperfolding or coons")->required();
  seq->add_option("count", count, "Number of terms")->required();

  std::string set_name;
  auto* set = app.add_subcommand("set", "Print the smallest members of an integer set");
  set->add_option("set", set_name, "N, J, JSTAR, K, L, P, Q or R")->required();
  set->add_option("count", count, "Number of members")->required();

  std::size_t kmax = 0;
  std::uint64_t offset = 0;
  TableColumns cols;
  bool pretty = false;
  auto* table = app.add_subcommand("table", "Hankel determinant table for k = 0..KMAX");
  table->add_option("sequence", name, "Sequence name")->required();
  table->add_option("kmax", kmax, "Largest order")->required()->check(CLI::Range(0, 1000));
  table->add_option("--offset", offset, "Window offset p")->capture_default_str();
  table->add_flag("--t", cols.t, "t-Hankel determinant polynomial");
  table->add_flag("--plain", cols.plain, "Plain Hankel determinant");
  table->add_flag("--mod2", cols.mod2, "t-Hankel determinant reduced mod 2");
  table->add_flag("--pretty", pretty, "Print polynomials as t^3 - 2t instead of coefficient lists");

  std::size_t m = 0, k = 0, cap = hankelt::kDefaultEnumerationCap;
  std::string domain_name = "N";
  auto* mu = app.add_subcommand("mu", "Count involutions of the first M letters with K transpositions in SET");
  mu->add_option("m", m, "Domain size")->required();
  mu->add_option("k", k, "Number of transpositions")->required();
  mu->add_option("set", set_name, "Set the transposition sums must lie in")->required();
  mu->add_option("--domain", domain_name, "Set whose first M members form the domain")->capture_default_str();
  mu->add_option("--cap", cap, "Largest domain size to enumerate")->capture_default_str();

  std::string target, profile = default_profile();
  std::optional<std::int64_t> v_kmax, v_kmax_exact, v_mmax, v_nmax, v_amax, v_bmax;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run one claim verifier, or all of them");
  verify->add_option("claim", target, "Claim tag (e.g. GWW, MAIN_TK) or 'all'")->required();
  verify->add_option("--profile", profile, "Bounds profile: quick, thorough or empty (default from HANKELT_PROFILE)")
      ->capture_default_str();
  verify->add_option("--kmax", v_kmax);
  verify->add_option("--kmax-exact", v_kmax_exact);
  verify->add_option("--mmax", v_mmax);
  verify->add_option("--nmax", v_nmax);
  verify->add_option("--amax", v_amax);
  verify->add_option("--bmax", v_bmax);
  verify->add_flag("--timing", timing, "Include elapsed time per claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (*seq) return cmd_seq(name, count, fmt);
    if (*set) return cmd_set(set_name, count, fmt);
    if (*table) return cmd_table(name, kmax, offset, cols, pretty, fmt);
    if (*mu) return cmd_mu(m, k, set_name, domain_name, cap, fmt);
    if (*verify) {
      hankelt::Bounds overrides;
      auto put = [&](const char* key, const std::optional<std::int64_t>& v) {
        if (v) overrides[key] = *v;
      };
      put("kmax", v_kmax);
      put("kmax_exact", v_kmax_exact);
      put("mmax", v_mmax);
      put("nmax", v_nmax);
      put("amax", v_amax);
      put("bmax", v_bmax);
      return cmd_verify(target, profile, overrides, timing, fmt);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
