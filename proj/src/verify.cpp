#include "laddermat/verify.hpp"

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "laddermat/enumerate.hpp"
#include "laddermat/error.hpp"
#include "laddermat/shape.hpp"

namespace laddermat {

using json = nlohmann::ordered_json;

Suite parse_suite(std::string_view name) {
  if (name == "enumerate") return Suite::enumerate;
  if (name == "classify") return Suite::classify;
  if (name == "structure") return Suite::structure;
  if (name == "derivations") return Suite::derivations;
  if (name == "core") return Suite::core;
  if (name == "all") return Suite::all;
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::enumerate: return "enumerate";
    case Suite::classify: return "classify";
    case Suite::structure: return "structure";
    case Suite::derivations: return "derivations";
    case Suite::core: return "core";
    case Suite::all: return "all";
  }
  return "unknown";
}

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LADDERMAT_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Accumulates asserted failures and out-of-hypothesis findings for one record.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> findings;
  std::optional<bool> reproduced;  // set when a named counterexample applies

  void check(bool ok, bool asserted, const std::string& what) {
    if (ok) return;
    (asserted ? failures : findings).push_back(what);
  }

  const char* status() const {
    if (!failures.empty()) return kFail;
    if (reproduced && !*reproduced) return kMissing;
    if (reproduced) return kReproduced;
    if (!findings.empty()) return kDivergence;
    return kPass;
  }

  void finish(Record& r) const {
    r.json["failures"] = failures;
    r.json["findings"] = findings;
    r.json["status"] = status();
    r.ok = failures.empty() && !(reproduced && !*reproduced);
  }
};

json opt(std::optional<std::size_t> v) { return v ? json(*v) : json(nullptr); }
json opt(std::optional<bool> v) { return v ? json(*v) : json(nullptr); }

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string summary_line(const Record& r, const std::string& detail) {
  std::ostringstream os;
  os << upper(r.json["status"].get<std::string>()) << ' ' << r.json["suite"].get<std::string>();
  if (r.json.contains("ladder")) os << " [" << r.json["ladder"].get<std::string>() << ']';
  if (r.json.contains("field")) os << ' ' << r.json["field"].get<std::string>();
  if (!detail.empty()) os << ' ' << detail;
  for (const auto& f : r.json["failures"]) os << " | " << f.get<std::string>();
  return os.str();
}

Record error_record(const char* suite, const Ladder& ladder, const Field& field, const std::exception& e) {
  Record r;
  r.json["suite"] = suite;
  r.json["ladder"] = ladder.to_string();
  r.json["field"] = field.to_string();
  Outcome out;
  out.failures.push_back(std::string("error: ") + e.what());
  out.finish(r);
  r.text = summary_line(r, "");
  return r;
}

Mat unit(const Field& f, int n, int i, int j) {
  return Mat::unit(f, static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

// Images on a basis: the basis element equal to `from[k]` maps to `to[k]`, the rest to 0.
Endomap map_on_basis(const std::shared_ptr<const MatrixLieAlgebra>& host, const std::vector<Mat>& from,
                     const std::vector<Mat>& to) {
  std::vector<Mat> images;
  for (const Mat& b : host->basis()) {
    Mat image(host->field(), b.rows(), b.cols());
    for (std::size_t k = 0; k < from.size(); ++k)
      if (b == from[k]) image = to[k];
    images.push_back(std::move(image));
  }
  return Endomap::from_matrix_images(host, images);
}

bool is_ladder(const Ladder& l, int n, std::initializer_list<IndexPair> corners) {
  return l == Ladder(n, std::vector<IndexPair>(corners));
}

// Basis derivations of a space of flattened endomaps.
std::vector<Endomap> basis_maps(const std::shared_ptr<const MatrixLieAlgebra>& host, const Subspace& s) {
  std::vector<Endomap> out;
  for (std::size_t k = 0; k < s.dim(); ++k) out.push_back(Endomap::from_flat(host, s.basis().row(k)));
  return out;
}

struct CoreResult {
  std::size_t core_der = 0;
  bool extension = true;
  std::size_t failed_extensions = 0;
};

CoreResult check_core(const LadderAlgebra& la) {
  CoreResult out;
  const auto core = la.traceless_algebra();
  const Subspace der0 = derivation_space(*core);
  out.core_der = der0.dim();
  const CoreExtender extend(la, core);
  for (const Endomap& f : basis_maps(core, der0)) {
    try {
      const Extension e = extend(f);
      if (!is_derivation(e.f_plus)) throw NoAdjointWitness("extension is not a derivation");
    } catch (const NoAdjointWitness&) {
      out.extension = false;
      ++out.failed_extensions;
    }
  }
  return out;
}

bool reproduces_extension_counterexample(const Endomap& f, const LadderAlgebra& la) {
  if (!is_derivation(f)) return false;
  try {
    extend_from_core(f, la);
    return false;
  } catch (const NoAdjointWitness&) {
    return true;
  }
}

}  // namespace

Endomap char2_counterexample() {
  const Field f = Field::prime(2);
  const LadderAlgebra la = LadderAlgebra::build(Ladder(2, {{2, 1}}), f);
  return map_on_basis(la.lie(), {unit(f, 2, 1, 2)}, {unit(f, 2, 2, 1)});
}

Endomap char2_core_counterexample() {
  const Field f = Field::prime(2);
  const LadderAlgebra la = LadderAlgebra::build(Ladder(2, {{2, 1}}), f);
  return map_on_basis(la.traceless_algebra(), {unit(f, 2, 1, 2)}, {unit(f, 2, 2, 1)});
}

Endomap char3_core_counterexample() {
  const Field f = Field::prime(3);
  const LadderAlgebra la = LadderAlgebra::build(Ladder(4, {{2, 1}}), f);
  return map_on_basis(la.traceless_algebra(), {unit(f, 4, 1, 2)}, {unit(f, 4, 2, 4)});
}

Endomap dominance_counterexample(const Field& field, std::int64_t a, std::int64_t b) {
  const LadderAlgebra la = LadderAlgebra::build(Ladder(5, {{1, 2}, {3, 4}}), field);
  const FieldScalar fa = field.from_int(a);
  const FieldScalar fb = field.from_int(b);
  return map_on_basis(la.lie(), {unit(field, 5, 1, 2), unit(field, 5, 1, 3)},
                      {unit(field, 5, 3, 4) * fa + unit(field, 5, 3, 5) * fb,
                       unit(field, 5, 2, 4) * fa + unit(field, 5, 2, 5) * fb});
}

Record enumerate_record(int n) {
  Record r;
  r.json["suite"] = "enumerate";
  r.json["n"] = n;
  const std::vector<Ladder> dut = enumerate_dut(n);
  std::size_t brute = 0;
  for (const Ladder& l : all_ladders(n)) brute += classify(l).dut ? 1 : 0;
  r.json["count"] = dut.size();
  r.json["brute_force_count"] = brute;
  r.json["predicted"] = count_dut(n);
  auto list = json::array();
  for (const Ladder& l : dut) list.push_back(l.to_string());
  r.json["ladders"] = list;

  // Per block form: removal masks of the diagonal of the all-ones partition
  // that leave a DUT shape.
  auto forms = json::array();
  Outcome out;
  for (int t = 1; t <= n; ++t) {
    const BlockPartition p = BlockPartition::from_sizes(std::vector<int>(static_cast<std::size_t>(t), 1));
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
      try {
        count += classify(remove_diagonal_blocks(p, mask)).dut ? 1 : 0;
      } catch (const NotALadderShape&) {
      }
    }
    forms.push_back(json{{"t", t}, {"count", count}, {"predicted", count_dut_block_forms(t)}});
    out.check(count == count_dut_block_forms(t), true, "block forms t=" + std::to_string(t));
  }
  r.json["block_forms"] = forms;
  out.check(dut.size() == count_dut(n), true, "count differs from F_{2n+1}");
  out.check(brute == dut.size(), true, "constructive and brute-force counts differ");
  out.finish(r);
  r.text = summary_line(r, "n=" + std::to_string(n) + " count=" + std::to_string(dut.size()) +
                               " F_" + std::to_string(2 * n + 1) + "=" + std::to_string(count_dut(n)));
  return r;
}

Record classify_record(const Ladder& ladder) {
  Record r;
  r.json["suite"] = "classify";
  r.json["ladder"] = ladder.to_string();
  const LadderClass c = classify(ladder);
  r.json["class"] = to_json(c);
  Outcome out;
  out.check(c.dut == c.dut_by_blocks, true, "corner and block DUT criteria disagree");
  out.check(!c.sdut || c.dut, true, "SDUT without DUT");
  out.finish(r);
  r.text = summary_line(r, std::string(c.dut ? "DUT" : "not DUT") + (c.sdut ? " SDUT" : ""));
  return r;
}

Record structure_record(const Ladder& ladder, const Field& field) {
  try {
    const LadderClass cls = classify(ladder);
    const LadderAlgebra la = LadderAlgebra::build(ladder, field, !cls.upper_triangular);
    Record r;
    r.json["suite"] = "structure";
    json report = structure_report(la);
    Outcome out;
    const Subspace nb = normalizer_brute_force(la);
    const Subspace cb = centralizer_brute_force(la);
    out.check(nb.contains(cb), true, "centralizer not inside normalizer");
    std::optional<bool> normalizer_ok, centralizer_ok, series_ok;
    if (cls.dut && !ladder.empty()) {
      normalizer_ok = nb == normalizer_closed_form(la);
      centralizer_ok = cb == centralizer_closed_form(la);
      out.check(*normalizer_ok, true, "normalizer differs from M_{L_B}");
      out.check(*centralizer_ok, true, "centralizer differs from the closed form");
    }
    if (cls.upper_triangular) {
      const DerivedSeries s = derived_series(la);
      const bool core_nonzero = (s.terms.back().space.dim() != 0) == !s.core.empty();
      series_ok = s.recovered && s.terminal_is_core && core_nonzero;
      bool char_divides = false;
      if (field.characteristic() != 0 && !ladder.empty()) {
        for (const int size : la.partition().sizes)
          if (static_cast<std::uint32_t>(size) % field.characteristic() == 0) char_divides = true;
      }
      out.check(*series_ok, !char_divides, s.failure.empty() ? "derived series does not end at the core" : s.failure);
      report["core_ladder"] = s.core.to_string();
    }
    for (auto& [k, v] : report.items()) r.json[k] = v;
    r.json["checks"] = json{{"normalizer", opt(normalizer_ok)}, {"centralizer", opt(centralizer_ok)},
                            {"derived_series", opt(series_ok)}};
    out.finish(r);
    r.text = summary_line(r, "dim=" + std::to_string(la.dim()) + " N=" + std::to_string(nb.dim()) +
                                 " C=" + std::to_string(cb.dim()));
    return r;
  } catch (const Error& e) {
    return error_record("structure", ladder, field, e);
  }
}

Record derivation_record(const Ladder& ladder, const Field& field) {
  try {
    const LadderClass cls = classify(ladder);
    const LadderAlgebra la = LadderAlgebra::build(ladder, field, !cls.upper_triangular);
    const std::uint32_t ch = field.characteristic();
    Record r;
    r.json["suite"] = "derivations";
    r.json["ladder"] = ladder.to_string();
    r.json["field"] = field.to_string();
    Outcome out;

    if (!cls.upper_triangular || !cls.dut || ladder.empty()) {
      // No theorem applies: report the brute-force space and dominance only.
      r.json["mode"] = "exploratory";
      std::optional<std::size_t> der_dim;
      std::optional<bool> dominance;
      if (la.lie()->bracket_closed()) {
        const Subspace der = derivation_space(*la.lie());
        der_dim = der.dim();
        if (!ladder.empty()) {
          dominance = true;
          for (const Endomap& f : basis_maps(la.lie(), der)) dominance = *dominance && check_dominance(f, la);
        }
      }
      r.json["dims"] = json{{"der_bruteforce", opt(der_dim)}, {"der_predicted", nullptr}, {"inner", nullptr},
                            {"dee", nullptr}, {"core_der", nullptr}};
      r.json["case_tag"] = nullptr;
      r.json["checks"] = json{{"decomposition", nullptr}, {"dominance", opt(dominance)}, {"extension", nullptr},
                              {"split_sequence", nullptr}};
      if (is_ladder(ladder, 5, {{1, 2}, {3, 4}})) {
        const Endomap ce = dominance_counterexample(field, 1, 1);
        out.reproduced = is_derivation(ce) && !check_dominance(ce, la);
      }
      out.finish(r);
      r.text = summary_line(r, "exploratory der=" + (der_dim ? std::to_string(*der_dim) : std::string("-")));
      return r;
    }

    const bool main_asserted = ch != 2;
    const bool core_asserted = ch != 2 && ch != 3;
    r.json["mode"] = main_asserted ? (cls.sdut && !core_asserted ? "assert_main_expect_divergence_core" : "assert")
                                   : "expect_divergence";

    const Subspace der = derivation_space(*la.lie());
    const Subspace inner = inner_space(la);
    const Subspace dee = dee_space(la);
    const CaseTag tag = case_of(la);
    std::optional<std::size_t> predicted;
    if (ch != 2) predicted = predicted_der_dim(la).dim;

    const std::size_t n_dim = normalizer_closed_form(la).dim();
    const std::size_t c_dim = centralizer_closed_form(la).dim();
    out.check(inner.dim() == n_dim - c_dim, main_asserted, "dim inner != dim N - dim C");
    if (predicted) out.check(der.dim() == *predicted, main_asserted, "dim Der differs from the prediction");

    bool decomposition = der == inner.sum(dee) && inner.intersect(dee).dim() == 0;
    out.check(decomposition, main_asserted, "Der is not inner (+) D");
    const std::vector<Endomap> basis = basis_maps(la.lie(), der);
    const Decomposer decomposer(la);
    std::size_t undecomposed = 0;
    for (const Endomap& f : basis) {
      try {
        const DerDecomposition dec = decomposer(f);
        if (!(recompose(dec, la) == f)) throw NotInDecomposition("round trip differs");
      } catch (const NotInDecomposition&) {
        ++undecomposed;
      }
    }
    if (undecomposed > 0) {
      decomposition = false;
      out.check(false, main_asserted, std::to_string(undecomposed) + " basis derivations do not decompose");
    }

    std::optional<bool> dominance;
    if (!cls.block_form_equal) {
      dominance = true;
      for (const Endomap& f : basis) dominance = *dominance && check_dominance(f, la);
      out.check(*dominance, main_asserted, "a derivation violates dominance");
    }

    std::optional<std::size_t> core_der;
    std::optional<bool> extension, split;
    if (cls.sdut) {
      const CoreResult cr = check_core(la);
      core_der = cr.core_der;
      extension = cr.extension;
      split = der.dim() == dee.dim() + cr.core_der;
      out.check(cr.extension, core_asserted,
                std::to_string(cr.failed_extensions) + " core derivations have no adjoint witness");
      out.check(*split, core_asserted, "dim Der(M_L) != dim D + dim Der(M_L^0)");
    }

    if (ch == 2 && is_ladder(ladder, 2, {{2, 1}})) {
      const Endomap ce = char2_counterexample();
      bool reproduced = is_derivation(ce);
      if (reproduced) {
        try {
          decompose(ce, la);
          reproduced = false;
        } catch (const NotInDecomposition&) {
        }
      }
      out.reproduced = reproduced;
    }
    if (ch == 3 && is_ladder(ladder, 4, {{2, 1}})) {
      out.reproduced = reproduces_extension_counterexample(char3_core_counterexample(), la);
    }

    r.json["dims"] = json{{"der_bruteforce", der.dim()}, {"der_predicted", opt(predicted)}, {"inner", inner.dim()},
                          {"dee", dee.dim()}, {"core_der", opt(core_der)}};
    r.json["case_tag"] = to_string(tag);
    r.json["checks"] = json{{"decomposition", decomposition}, {"dominance", opt(dominance)},
                            {"extension", opt(extension)}, {"split_sequence", opt(split)}};
    out.finish(r);
    r.text = summary_line(r, "der=" + std::to_string(der.dim()) +
                                 " predicted=" + (predicted ? std::to_string(*predicted) : std::string("-")) +
                                 " case=" + to_string(tag));
    return r;
  } catch (const Error& e) {
    return error_record("derivations", ladder, field, e);
  }
}

Record core_record(const Ladder& ladder, const Field& field) {
  try {
    const LadderClass cls = classify(ladder);
    Record r;
    r.json["suite"] = "core";
    r.json["ladder"] = ladder.to_string();
    r.json["field"] = field.to_string();
    Outcome out;
    if (!cls.sdut || ladder.empty()) {
      r.json["mode"] = "not_applicable";
      out.finish(r);
      r.text = summary_line(r, "not SDUT");
      return r;
    }
    const std::uint32_t ch = field.characteristic();
    const bool asserted = ch != 2 && ch != 3;
    r.json["mode"] = asserted ? "assert" : "expect_divergence";
    const LadderAlgebra la = LadderAlgebra::build(ladder, field);
    const CoreResult cr = check_core(la);
    const std::size_t n_dim = normalizer_brute_force(la).dim();
    const Subspace c = centralizer_brute_force(la);
    const std::size_t der = derivation_space(*la.lie()).dim();
    const std::size_t dee = dee_space(la).dim();
    const bool centralizers_equal = c == centralizer_in_gl(*la.traceless_algebra());
    out.check(cr.extension, asserted, std::to_string(cr.failed_extensions) + " core derivations have no adjoint witness");
    out.check(cr.core_der == n_dim - c.dim(), asserted, "dim Der(M_L^0) != dim N - dim C");
    out.check(der == dee + cr.core_der, asserted, "dim Der(M_L) != dim D + dim Der(M_L^0)");
    out.check(centralizers_equal, asserted, "C(M_L) != C(M_L^0)");

    if (ch == 2 && is_ladder(ladder, 2, {{2, 1}})) {
      out.reproduced = reproduces_extension_counterexample(char2_core_counterexample(), la);
    }
    if (ch == 3 && is_ladder(ladder, 4, {{2, 1}})) {
      out.reproduced = reproduces_extension_counterexample(char3_core_counterexample(), la);
    }
    r.json["dims"] = json{{"core_der", cr.core_der}, {"normalizer", n_dim}, {"centralizer", c.dim()},
                          {"der", der}, {"dee", dee}};
    r.json["checks"] = json{{"extension", cr.extension}, {"dimension", cr.core_der == n_dim - c.dim()},
                            {"split_sequence", der == dee + cr.core_der}, {"centralizers_equal", centralizers_equal}};
    out.finish(r);
    r.text = summary_line(r, "core_der=" + std::to_string(cr.core_der) + " N-C=" + std::to_string(n_dim - c.dim()));
    return r;
  } catch (const Error& e) {
    return error_record("core", ladder, field, e);
  }
}

namespace {

using Job = std::function<Record()>;

// Runs jobs on a bounded pool and hands records to `sink` in job order.
void run_ordered(const std::vector<Job>& jobs, unsigned workers, const std::function<void(const Record&)>& sink) {
  std::vector<std::optional<Record>> done(jobs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == jobs.size()) return;
        i = next++;
      }
      Record rec = jobs[i]();
      {
        std::lock_guard lock(mu);
        done[i] = std::move(rec);
      }
      cv.notify_all();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size()))));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Record rec;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i].has_value(); });
      rec = std::move(*done[i]);
      done[i].reset();
    }
    sink(rec);
  }
  for (auto& t : pool) t.join();
}

std::vector<Ladder> sweep(Suite suite, int n) {
  std::vector<Ladder> out;
  switch (suite) {
    case Suite::classify:
      return all_ladders(n);
    case Suite::structure:
      for (Ladder& l : all_ladders(n))
        if (!l.empty() && classify(l).upper_triangular) out.push_back(std::move(l));
      return out;
    case Suite::derivations:
      for (Ladder& l : enumerate_dut(n))
        if (!l.empty()) out.push_back(std::move(l));
      return out;
    case Suite::core:
      for (Ladder& l : enumerate_dut(n))
        if (!l.empty() && classify(l).sdut) out.push_back(std::move(l));
      return out;
    default:
      return out;
  }
}

}  // namespace

Summary run(const RunConfig& config, const std::function<void(const Record&)>& sink) {
  std::vector<Suite> suites;
  if (config.suite == Suite::all) {
    suites = {Suite::enumerate, Suite::classify, Suite::structure, Suite::derivations, Suite::core};
  } else {
    suites = {config.suite};
  }
  std::vector<Job> jobs;
  const Field field = config.field;
  for (const Suite s : suites) {
    std::vector<int> sizes;
    if (config.ladder) {
      sizes = {config.ladder->n()};
    } else {
      for (int n = config.n_min; n <= config.n_max; ++n) sizes.push_back(n);
    }
    for (const int n : sizes) {
      if (s == Suite::enumerate) {
        jobs.emplace_back([n] { return enumerate_record(n); });
        continue;
      }
      const std::vector<Ladder> ladders = config.ladder ? std::vector<Ladder>{*config.ladder} : sweep(s, n);
      for (const Ladder& l : ladders) {
        switch (s) {
          case Suite::classify: jobs.emplace_back([l] { return classify_record(l); }); break;
          case Suite::structure: jobs.emplace_back([l, field] { return structure_record(l, field); }); break;
          case Suite::derivations: jobs.emplace_back([l, field] { return derivation_record(l, field); }); break;
          case Suite::core: jobs.emplace_back([l, field] { return core_record(l, field); }); break;
          default: break;
        }
      }
    }
  }
  Summary summary;
  run_ordered(jobs, resolve_jobs(config.jobs), [&](const Record& r) {
    ++summary.records;
    if (!r.ok) ++summary.failures;
    sink(r);
  });
  return summary;
}

}  // namespace laddermat
