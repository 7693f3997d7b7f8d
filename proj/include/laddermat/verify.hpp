#ifndef LADDERMAT_VERIFY_HPP
#define LADDERMAT_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "laddermat/derivation.hpp"
#include "laddermat/field.hpp"
#include "laddermat/ladder.hpp"

namespace laddermat {

enum class Suite { enumerate, classify, structure, derivations, core, all };

/// Throws ParseError for an unknown name.
Suite parse_suite(std::string_view name);
std::string to_string(Suite suite);

struct RunConfig {
  Field field = Field::prime(101);
  int n_min = 4;
  int n_max = 4;
  std::optional<Ladder> ladder;  // replaces the sweep when set
  Suite suite = Suite::all;
  unsigned jobs = 0;             // 0: LADDERMAT_JOBS, else hardware concurrency
};

/// Record statuses. `pass` and `counterexample_reproduced` and `divergence`
/// (a mismatch outside a theorem's hypothesis) are successes.
inline constexpr const char* kPass = "pass";
inline constexpr const char* kFail = "fail";
inline constexpr const char* kReproduced = "counterexample_reproduced";
inline constexpr const char* kMissing = "counterexample_missing";
inline constexpr const char* kDivergence = "divergence";

struct Record {
  nlohmann::ordered_json json;  // always carries "suite" and "status"
  bool ok = true;
  std::string text;             // one-line summary
};

struct Summary {
  std::size_t records = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

/// Runs the configured suite(s), calling `sink` once per record in
/// deterministic order (suite, then ladder order) as records complete.
Summary run(const RunConfig& config, const std::function<void(const Record&)>& sink);

/// Worker count: explicit, else LADDERMAT_JOBS, else hardware concurrency (>= 1).
unsigned resolve_jobs(unsigned requested);

Record enumerate_record(int n);
Record classify_record(const Ladder& ladder);
Record structure_record(const Ladder& ladder, const Field& field);
Record derivation_record(const Ladder& ladder, const Field& field);
Record core_record(const Ladder& ladder, const Field& field);

/// GF(2), M_2: f(E12) = E21, zero on E11, E21, E22.
Endomap char2_counterexample();
/// The same map restricted to sl_2 over GF(2).
Endomap char2_core_counterexample();
/// GF(3), n=4, L={(2,1)}, on M_L^0 with basis E11-E22, E12, E13, E14, E21,
/// E23, E24: f(E12) = E24, zero on the rest.
Endomap char3_core_counterexample();
/// n=5, L={(1,2),(3,4)}: f(E12) = a E34 + b E35, f(E13) = a E24 + b E25.
Endomap dominance_counterexample(const Field& field, std::int64_t a, std::int64_t b);

}  // namespace laddermat

#endif  // LADDERMAT_VERIFY_HPP
