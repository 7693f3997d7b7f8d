#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "laddermat/enumerate.hpp"
#include "laddermat/error.hpp"
#include "laddermat/ladder_algebra.hpp"
#include "laddermat/shape.hpp"
#include "laddermat/verify.hpp"

namespace {

using laddermat::Field;
using laddermat::Ladder;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxN = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "N" or "A..B", each within [1, kMaxN].
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  const int lo = parse_int(dots == std::string::npos ? s : s.substr(0, dots));
  const int hi = dots == std::string::npos ? lo : parse_int(s.substr(dots + 2));
  if (lo < 1 || hi > kMaxN || lo > hi) {
    throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "], got '" + s + "'");
  }
  return {lo, hi};
}

int cmd_enumerate(int n, bool as_json) {
  if (n < 1 || n > kMaxN) throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "]");
  const laddermat::Record r = laddermat::enumerate_record(n);
  if (as_json) {
    std::cout << r.json.dump() << '\n';
  } else {
    for (const auto& l : r.json["ladders"]) std::cout << l.get<std::string>() << '\n';
    std::cout << "count " << r.json["count"] << ", F_" << 2 * n + 1 << " = " << r.json["predicted"] << ", "
              << (r.ok ? "PASS" : "FAIL") << '\n';
  }
  return r.ok ? kExitOk : kExitFail;
}

int cmd_verify(const laddermat::RunConfig& config, bool as_json) {
  const laddermat::Summary s = laddermat::run(config, [&](const laddermat::Record& r) {
    if (as_json) {
      std::cout << r.json.dump() << '\n';
    } else {
      std::cout << r.text << '\n';
    }
    std::cout.flush();
  });
  if (as_json) {
    std::cout << json{{"summary", {{"records", s.records}, {"failures", s.failures}, {"ok", s.ok()}}}}.dump() << '\n';
  } else {
    std::cout << s.records << " records, " << s.failures << " failures: " << (s.ok() ? "PASS" : "FAIL") << '\n';
  }
  return s.ok() ? kExitOk : kExitFail;
}

std::string star_form(const laddermat::LadderAlgebra& la) {
  const Ladder& l = la.ladder();
  const int n = l.n();
  if (n == 0) return "";
  std::vector<bool> cut_after(static_cast<std::size_t>(n) + 1, false);
  if (!l.empty())
    for (const int c : la.partition().cuts) cut_after[static_cast<std::size_t>(c)] = true;
  std::ostringstream os;
  std::string rule;
  for (int j = 1; j <= n; ++j) rule += (j < n && cut_after[static_cast<std::size_t>(j)]) ? "--+" : "--";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      os << (la.index_of({i, j}) ? '*' : '0');
      if (j < n) os << (cut_after[static_cast<std::size_t>(j)] ? " | " : " ");
    }
    os << '\n';
    if (i < n && cut_after[static_cast<std::size_t>(i)]) {
      std::string line;
      for (int j = 1; j <= n; ++j) {
        line += '-';
        if (j < n) line += cut_after[static_cast<std::size_t>(j)] ? "-+-" : "-";
      }
      os << line << '\n';
    }
  }
  return os.str();
}

int cmd_show(const std::string& literal, const Field& field, bool as_json) {
  Ladder l;
  try {
    l = Ladder::parse(literal);
  } catch (const laddermat::Error& e) {
    throw UsageError(e.what());
  }
  const laddermat::LadderClass cls = laddermat::classify(l);
  const auto la = laddermat::LadderAlgebra::build(l, field, !cls.upper_triangular);
  json report = laddermat::structure_report(la);
  report["traceless_dim"] = la.traceless().dim();
  if (!l.empty()) report["cuts"] = la.partition().cuts;
  if (as_json) {
    std::cout << report.dump() << '\n';
    return kExitOk;
  }
  std::cout << l.to_string() << (l.empty() ? "  (empty ladder)" : "") << '\n' << star_form(la);
  if (!l.empty()) {
    std::cout << "gamma = {";
    const auto& cuts = la.partition().cuts;
    for (std::size_t k = 0; k < cuts.size(); ++k) std::cout << (k ? "," : "") << cuts[k];
    std::cout << "}  block sizes " << report["partition"].dump() << '\n';
    std::cout << "[I] =";
    for (const auto& b : la.block_index_set()) std::cout << " (" << b.row << ',' << b.col << ')';
    std::cout << '\n';
  }
  std::cout << "UT " << (cls.upper_triangular ? "yes" : "no") << ", strictly UT "
            << (cls.strictly_upper_triangular ? "yes" : "no") << ", " << (cls.dut ? "DUT" : "not DUT") << ", "
            << (cls.sdut ? "SDUT" : "not SDUT") << ", block form " << (cls.block_form_equal ? "yes" : "no") << '\n';
  std::cout << "dim " << la.dim() << ", traceless dim " << la.traceless().dim() << ", normalizer dim "
            << report["normalizer_dim"] << ", centralizer dim " << report["centralizer_dim"] << " over "
            << field.to_string() << '\n';
  if (report.contains("derived_series_dims")) {
    std::cout << "derived series dims " << report["derived_series_dims"].dump() << ", terminal "
              << report["terminal_ladder"].get<std::string>() << '\n';
  }
  return kExitOk;
}

Field parse_field(const std::string& s) {
  try {
    return Field::parse(s);
  } catch (const laddermat::Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ladder matrix Lie algebras: enumeration, structure, and derivation checks"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "List DUT ladders of size n and compare with F_{2n+1}");
  int enum_n = 0;
  enumerate->add_option("--n", enum_n, "Matrix size (1..8)")->required();
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all", n_spec = "4", ladder_literal, field_spec = "gf:101";
  unsigned jobs = 0;
  verify->add_option("--suite", suite, "enumerate|classify|structure|derivations|core|all");
  verify->add_option("--n", n_spec, "Size N or range A..B");
  verify->add_option("--ladder", ladder_literal, "Single ladder literal 'n=<int>: (i,j)*'");
  verify->add_option("--field", field_spec, "q or gf:<p>");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs, "Worker threads (default LADDERMAT_JOBS or all cores)");

  auto* show = app.add_subcommand("show", "Print the shape and invariants of one ladder");
  std::string show_literal, show_field = "gf:101";
  show->add_option("ladder", show_literal, "Ladder literal 'n=<int>: (i,j)*'")->required();
  show->add_option("--field", show_field, "q or gf:<p>");
  show->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const bool as_json = format == "json";
    if (*enumerate) return cmd_enumerate(enum_n, as_json);
    if (*show) return cmd_show(show_literal, parse_field(show_field), as_json);

    laddermat::RunConfig config;
    config.field = parse_field(field_spec);
    try {
      config.suite = laddermat::parse_suite(suite);
    } catch (const laddermat::Error& e) {
      throw UsageError(e.what());
    }
    if (!ladder_literal.empty()) {
      try {
        config.ladder = Ladder::parse(ladder_literal);
      } catch (const laddermat::Error& e) {
        throw UsageError(e.what());
      }
      if (config.ladder->n() < 1 || config.ladder->n() > kMaxN) throw UsageError("ladder size must lie in [1, 8]");
    } else {
      std::tie(config.n_min, config.n_max) = parse_range(n_spec);
    }
    config.jobs = jobs;
    return cmd_verify(config, as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const laddermat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
