// Copyright 2026 The entdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "entdesign/cli.hpp"
#include "entdesign/ensembles.hpp"
#include "entdesign/moments.hpp"
#include "entdesign/permgroup.hpp"
#include "entdesign/sampling.hpp"
#include "entdesign/weingarten.hpp"

namespace entdesign::cli {

namespace {

constexpr std::int64_t kDefaultVerifySamples = 100000;
constexpr double kZThreshold = 4.0;

struct HelpRequested {
  std::string text;
};

void add_common_options(CLI::App* sub, RunConfig& c, std::string& format) {
  sub->add_option("--seed", c.seed, "Random seed (required whenever sampling is involved)");
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Write the table to this file instead of stdout");
}

void add_alpha_option(CLI::App* sub, std::string& alpha) {
  sub->add_option("--alpha", alpha, "Order N or inclusive range LO:HI");
}

void apply_alpha(RunConfig& c, const std::string& alpha) {
  if (alpha.empty()) return;
  try {
    std::tie(c.alpha_min, c.alpha_max) = parse_alpha_range(alpha);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
  if (c.alpha_min < 1) throw UsageError("--alpha must be >= 1");
}

std::vector<std::string> split_theorems(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part == "all") {
        for (auto t : {"T1", "T2a", "T2b", "T3", "T4", "T5", "T6"}) out.emplace_back(t);
      } else if (!part.empty()) {
        out.push_back(part);
      }
    }
  }
  return out;
}

StatePartition state_partition(const RunConfig& c) { return {c.state_dims.at(0), c.state_dims.at(1)}; }

ChoiPartitionSpec choi_partition(const RunConfig& c) {
  return {c.choi_dims.at(0), c.choi_dims.at(1), c.choi_dims.at(2), c.choi_dims.at(3)};
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Cell optional_int(const std::optional<int>& v) {
  if (v) return static_cast<std::int64_t>(*v);
  return std::monostate{};
}

std::uint64_t require_seed(const RunConfig& c, std::string_view why) {
  if (!c.seed) throw UsageError(std::string(why) + " requires --seed");
  return *c.seed;
}

double z_score(double observed, double expected, double std_error) {
  if (std_error == 0.0) return observed == expected ? 0.0 : std::copysign(INFINITY, observed - expected);
  return (observed - expected) / std_error;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app("Haar and design averages of entanglement entropies", "entdesign");
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "csv";
  std::string alpha;
  std::vector<std::string> theorems;

  auto* moment = app.add_subcommand("moment", "Exact Haar moments tr rho^alpha with Jensen entropy bounds");
  auto* state = moment->add_option("--state", c.state_dims, "d_A d_B")->expected(2);
  auto* choi = moment->add_option("--choi", c.choi_dims, "d_A d_B d_C d_D")->expected(4);
  state->excludes(choi);
  add_alpha_option(moment, alpha);
  moment->add_option("--samples", c.samples, "Also estimate each moment by Monte Carlo with this many samples");
  add_common_options(moment, c, format);

  auto* bounds = app.add_subcommand("bounds", "Evaluate the entropy lower bounds and check their hypotheses");
  bounds->add_option("--theorem", theorems, "T1 T2a T2b T3 T4 T5 T6, comma separated, or all")->required();
  auto* bstate = bounds->add_option("--state", c.state_dims, "d_A d_B")->expected(2);
  auto* bchoi = bounds->add_option("--choi", c.choi_dims, "d_A d_B d_C d_D")->expected(4);
  bstate->excludes(bchoi);
  bounds->add_option("--d", c.d, "Total dimension (T6)");
  bounds->add_option("--a", c.a, "Scale parameter a in (0, 1] (T3, T6)");
  bounds->add_option("--field-constant", c.field_constant, "2 for complex, 1 for real Hilbert spaces (T2b)");
  add_alpha_option(bounds, alpha);
  add_common_options(bounds, c, format);

  auto* verify = app.add_subcommand("verify", "Run the Monte Carlo cross-checks and exact identities");
  verify->add_option("--samples", c.samples, "Samples per Monte Carlo check (default 100000)");
  add_common_options(verify, c, format);

  auto* gap = app.add_subcommand("gap-design", "Spectrum and entropies of the gap 2-design base state");
  gap->add_option("--state", c.state_dims, "d_A d_B")->expected(2)->required();
  add_alpha_option(gap, alpha);
  add_common_options(gap, c, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    throw HelpRequested{target->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  c.command = app.get_subcommands().front()->get_name();
  c.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (c.command == "gap-design") {
    c.alpha_min = 2;
    c.alpha_max = 4;
  }
  apply_alpha(c, alpha);
  c.theorems = split_theorems(theorems);
  if (c.command == "verify" && !c.samples) c.samples = kDefaultVerifySamples;
  return c;
}

CommandResult cmd_moment(const RunConfig& c) {
  const bool is_state = !c.state_dims.empty();
  if (is_state == !c.choi_dims.empty()) throw UsageError("moment needs exactly one of --state or --choi");
  std::optional<RandomStream> rng;
  if (c.samples) rng.emplace(require_seed(c, "--samples"));

  CommandResult result;
  auto& t = result.table;
  t.columns = is_state ? std::vector<std::string>{"d_A", "d_B"} : std::vector<std::string>{"d_A", "d_B", "d_C", "d_D"};
  for (const char* col : {"alpha", "moment", "value", "renyi_lower_bound_bits", "max_bits"}) t.columns.emplace_back(col);
  if (rng) {
    for (const char* col : {"mc_mean", "mc_std_error", "z"}) t.columns.emplace_back(col);
  }
  for (int alpha = c.alpha_min; alpha <= c.alpha_max; ++alpha) {
    std::vector<Cell> row;
    MomentResult m;
    double max_bits = 0.0;
    if (is_state) {
      const auto p = state_partition(c);
      m = haar_state_moment(p, alpha);
      max_bits = std::log2(std::min(p.d_A, p.d_B));
      row = {std::int64_t{p.d_A}, std::int64_t{p.d_B}};
    } else {
      const auto p = choi_partition(c);
      m = haar_choi_moment(p, alpha);
      max_bits = std::log2(std::min(p.d_A * p.d_C, p.d_B * p.d_D));
      row = {std::int64_t{p.d_A}, std::int64_t{p.d_B}, std::int64_t{p.d_C}, std::int64_t{p.d_D}};
    }
    row.emplace_back(std::int64_t{alpha});
    row.emplace_back(to_fraction_string(m.value));
    row.emplace_back(to_double(m.value));
    if (alpha >= 2) {
      row.emplace_back(design_renyi_lower_bound(m));
    } else {
      row.emplace_back(std::monostate{});
    }
    row.emplace_back(max_bits);
    if (rng) {
      const auto est = is_state ? mc_state_moment(state_partition(c), alpha, *c.samples, *rng)
                                : mc_choi_moment(choi_partition(c), alpha, *c.samples, *rng);
      row.emplace_back(est.mean);
      row.emplace_back(est.std_error);
      row.emplace_back(z_score(est.mean, to_double(m.value), est.std_error));
    }
    t.add_row(std::move(row));
  }
  return result;
}

CommandResult cmd_bounds(const RunConfig& c) {
  if (c.theorems.empty()) throw UsageError("bounds needs at least one --theorem");
  BoundParams base;
  if (!c.state_dims.empty()) {
    base.d_A = c.state_dims[0];
    base.d_B = c.state_dims[1];
  }
  if (!c.choi_dims.empty()) {
    base.d_A = c.choi_dims[0];
    base.d_B = c.choi_dims[1];
    base.d_C = c.choi_dims[2];
    base.d_D = c.choi_dims[3];
  }
  base.d = c.d;
  base.a = c.a;
  base.field_constant = c.field_constant;

  CommandResult result;
  auto& t = result.table;
  t.columns = {"theorem",    "d_A",   "d_B",        "d_C",          "d_D",         "d",           "alpha", "a",
               "bound_bits", "valid", "asymptotic", "relaxed_bits", "jensen_bits", "constraint_report"};
  for (const auto& name : c.theorems) {
    Theorem id;
    try {
      id = parse_theorem(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const bool derives_alpha = id == Theorem::T3 || id == Theorem::T6;
    const int last = derives_alpha ? c.alpha_min : c.alpha_max;
    for (int alpha = c.alpha_min; alpha <= last; ++alpha) {
      BoundParams params = base;
      if (!derives_alpha) params.alpha = alpha;
      BoundResult r;
      try {
        r = theorem_bound(id, params);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Cell jensen = std::monostate{};
      const bool choi_family = id == Theorem::T4 || id == Theorem::T5 || id == Theorem::T6;
      if (r.alpha >= 2) {
        if (!choi_family && params.d_A && params.d_B && r.alpha <= kEnumerationCap) {
          jensen = design_renyi_lower_bound(haar_state_moment({*params.d_A, *params.d_B}, r.alpha));
        } else if (choi_family && !c.choi_dims.empty() && r.alpha <= kChoiCap &&
                   choi_partition(c).total() >= r.alpha) {
          jensen = design_renyi_lower_bound(haar_choi_moment(choi_partition(c), r.alpha));
        }
      }
      t.add_row({std::string(theorem_name(id)), optional_int(params.d_A), optional_int(params.d_B),
                 optional_int(params.d_C), optional_int(params.d_D), optional_int(params.d),
                 std::int64_t{r.alpha}, optional_cell(params.a), r.bound_bits, r.valid, r.asymptotic,
                 optional_cell(r.relaxed_bits), jensen, r.constraint_report});
    }
  }
  return result;
}

CommandResult cmd_verify(const RunConfig& c) {
  const RandomStream rng(require_seed(c, "verify"));
  const std::int64_t n = c.samples.value_or(kDefaultVerifySamples);
  CommandResult result;
  auto& t = result.table;
  t.columns = {"check", "exact", "mc_mean", "std_error", "z", "pass", "detail"};

  auto record = [&](std::string name, std::string exact, Cell mean, Cell std_error, Cell z, bool pass,
                    std::string detail) {
    if (!pass) result.failures.push_back(name);
    t.add_row({std::move(name), std::move(exact), std::move(mean), std::move(std_error), std::move(z), pass,
               std::move(detail)});
  };

  auto mc_check = [&](std::string name, const Rational& exact, const McEstimate& est) {
    const double z = z_score(est.mean, to_double(exact), est.std_error);
    record(std::move(name), to_fraction_string(exact), est.mean, est.std_error, z, std::abs(z) <= kZThreshold,
           "n=" + std::to_string(est.n_samples));
  };

  for (int alpha : {2, 3}) {
    const StatePartition p{2, 2};
    mc_check("state_2x2_alpha" + std::to_string(alpha), haar_state_moment(p, alpha).value,
             mc_state_moment(p, alpha, n, rng));
  }
  {
    const ChoiPartitionSpec p{2, 2, 2, 2};
    mc_check("choi_2x2x2x2_alpha2", haar_choi_moment(p, 2).value, mc_choi_moment(p, 2, n, rng));
  }
  for (int alpha = 1; alpha <= 8; ++alpha) {
    const auto report = verify_cycle_lemma(alpha);
    const Integer cat = catalan(alpha);
    const bool pass = report.holds && Integer(report.saturating_count) == cat;
    record("cycle_lemma_alpha" + std::to_string(alpha), to_fraction_string(Rational(cat)), std::monostate{},
           std::monostate{}, std::monostate{}, pass,
           "saturating=" + std::to_string(report.saturating_count) + " holds=" + (report.holds ? "true" : "false"));
  }
  record("weingarten_inverse_d4_alpha3", "", std::monostate{}, std::monostate{}, std::monostate{},
         verify_wg_inverse(4, 3), "Gram matrix times Weingarten matrix equals identity");
  {
    bool pass = true;
    for (int d = 2; d <= 8; ++d) pass = pass && gap2_purity_exact(d, d) == haar_state_moment({d, d}, 2).value;
    record("gap_design_purity_d2_to_d8", "", std::monostate{}, std::monostate{}, std::monostate{}, pass,
           "exact tr rho_A^2 equals the Haar value");
  }
  if (!result.failures.empty()) result.exit_code = kExitVerificationFailed;
  return result;
}

CommandResult cmd_gap_design(const RunConfig& c) {
  const int d_A = c.state_dims.at(0);
  const int d_B = c.state_dims.at(1);
  if (c.alpha_min < 2) throw UsageError("gap-design needs alpha >= 2");
  CommandResult result;
  auto& t = result.table;
  t.columns = {"d_A",       "d_B",        "lambda1",  "lambda2",  "multiplicity", "purity", "alpha",
               "renyi_bits", "max_bits", "gap_bits", "bound_bits", "error"};
  GapSpectrum spectrum;
  try {
    spectrum = gap2_spectrum(d_A, d_B);
  } catch (const std::exception& e) {
    std::vector<Cell> row(t.columns.size(), std::monostate{});
    row[0] = std::int64_t{d_A};
    row[1] = std::int64_t{d_B};
    row.back() = std::string(e.what());
    t.add_row(std::move(row));
    result.exit_code = kExitUsage;
    result.failures.push_back(e.what());
    return result;
  }
  const Rational purity = gap2_purity_exact(d_A, d_B);
  const auto rho = reduced_density(gap2_design_state(d_A, d_B), {0});
  const double max_bits = std::log2(d_A);
  for (int alpha = c.alpha_min; alpha <= c.alpha_max; ++alpha) {
    const double s = renyi_entropy(rho, alpha);
    Cell bound = std::monostate{};
    if (alpha > 2) bound = gap_renyi_upper_bound(d_A, static_cast<double>(d_B) / d_A, alpha);
    t.add_row({std::int64_t{d_A}, std::int64_t{d_B}, spectrum.lambda1, spectrum.lambda2,
               std::int64_t{spectrum.multiplicity}, to_fraction_string(purity), std::int64_t{alpha}, s, max_bits,
               max_bits - s, bound, std::monostate{}});
  }
  return result;
}

CommandResult dispatch(const RunConfig& c) {
  if (c.command == "moment") return cmd_moment(c);
  if (c.command == "bounds") return cmd_bounds(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "gap-design") return cmd_gap_design(c);
  throw UsageError("unknown command '" + c.command + "'");
}

std::string render(const RunConfig& c, const Table& table) {
  std::ostringstream out;
  if (c.format == OutputFormat::csv) {
    write_csv(out, table);
  } else {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kOutputSchemaVersion;
    doc["command"] = c.command;
    doc["config"] = to_json(c);
    doc["columns"] = table.columns;
    doc["rows"] = rows_to_json(table);
    out << doc.dump(2) << '\n';
  }
  return out.str();
}

namespace {

void write_error(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::ordered_json line;
  line["error"] = kind;
  line["message"] = message;
  err << line.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static std::mutex warnings_mutex;
  std::lock_guard lock(warnings_mutex);
  set_warning_handler([&err](std::string_view message) { err << "warning: " << message << '\n'; });
  struct RestoreHandler {
    ~RestoreHandler() {
      set_warning_handler([](std::string_view message) { std::cerr << "warning: " << message << '\n'; });
    }
  } restore;

  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what());
    return kExitUsage;
  }

  CommandResult result;
  try {
    result = dispatch(config);
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    write_error(err, "invalid_argument", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    write_error(err, "domain_error", e.what());
    return kExitUsage;
  } catch (const std::length_error& e) {
    write_error(err, "length_error", e.what());
    return kExitUsage;
  }

  const std::string text = render(config, result.table);
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file || !(file << text)) {
      write_error(err, "io", "cannot write '" + config.out + "'");
      return kExitUsage;
    }
  }
  if (result.exit_code == kExitVerificationFailed) {
    for (const auto& name : result.failures) err << "FAIL " << name << '\n';
  } else if (result.exit_code == kExitUsage) {
    for (const auto& message : result.failures) write_error(err, "domain_error", message);
  }
  return result.exit_code;
}

}  // namespace entdesign::cli
