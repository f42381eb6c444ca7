// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "regenboot/bootstrap.hpp"
#include "regenboot/config.hpp"
#include "regenboot/csv.hpp"
#include "regenboot/error.hpp"
#include "regenboot/estimators.hpp"
#include "regenboot/experiments.hpp"
#include "regenboot/functional.hpp"
#include "regenboot/manifest.hpp"
#include "regenboot/random.hpp"
#include "regenboot/regeneration.hpp"
#include "regenboot/tables.hpp"

namespace regenboot {
namespace {

namespace fs = std::filesystem;

// Raw flag values; only flags actually given override the config.
struct Flags {
  std::vector<std::size_t> n;
  std::size_t chains = 0;
  std::size_t boot_reps = 0;
  std::size_t true_reps = 0;
  double level = 0.0;
  std::uint64_t seed = 0;
  std::string method;
  std::size_t workers = 0;
  std::string out_dir = ".";
  std::string config;
  std::size_t anchor = 0;
  std::string studentization;
  int max_moment = 0;
  std::string functional;
  double theta = 0.0;
  double beta = 0.0;
  double scale = 0.0;
};

struct Options {
  CLI::Option* n = nullptr;
  CLI::Option* chains = nullptr;
  CLI::Option* boot_reps = nullptr;
  CLI::Option* true_reps = nullptr;
  CLI::Option* level = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* method = nullptr;
  CLI::Option* workers = nullptr;
  CLI::Option* anchor = nullptr;
  CLI::Option* studentization = nullptr;
  CLI::Option* max_moment = nullptr;
  CLI::Option* functional = nullptr;
  CLI::Option* theta = nullptr;
  CLI::Option* beta = nullptr;
  CLI::Option* scale = nullptr;
};

ExperimentConfig merge(const Flags& f, const Options& o) {
  ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  if (o.n->count()) cfg.n = f.n;
  if (o.chains->count()) cfg.chains = f.chains;
  if (o.boot_reps->count()) cfg.boot_reps = f.boot_reps;
  if (o.true_reps->count()) cfg.true_reps = f.true_reps;
  if (o.level->count()) cfg.level = f.level;
  if (o.seed->count()) cfg.seed = f.seed;
  if (o.method->count()) cfg.method = f.method;
  if (o.workers->count()) cfg.workers = f.workers;
  if (o.anchor->count()) cfg.anchor = f.anchor;
  if (o.studentization->count()) cfg.studentization = f.studentization;
  if (o.max_moment->count()) cfg.max_moment = f.max_moment;
  if (o.functional->count()) cfg.functional = f.functional;
  if (o.theta->count()) cfg.theta = f.theta;
  if (o.beta->count()) cfg.beta = f.beta;
  if (o.scale->count()) cfg.scale = f.scale;
  validate(cfg);
  return cfg;
}

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("REGEN_BOOT_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v <= 0) {
      throw ConfigError("workers", std::string("REGEN_BOOT_WORKERS must be a positive integer, got '") +
                                       env + "'");
    }
    return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

StudySetup make_setup(const ExperimentConfig& cfg) {
  StudySetup setup;
  setup.functional = builtin_functional(cfg.functional);
  if (cfg.theta) setup.functional.theta = cfg.theta;
  setup.studentization =
      cfg.studentization == "resampled" ? Studentization::resampled : Studentization::original;
  setup.workers = resolve_workers(cfg.workers);
  return setup;
}

std::vector<BootstrapMethod> methods_of(const ExperimentConfig& cfg) {
  if (cfg.method == "both") return {BootstrapMethod::rbb, BootstrapMethod::rgb};
  return {parse_bootstrap_method(cfg.method)};
}

// Writes every file through one place so the manifest sees all of them.
class Writer {
 public:
  Writer(fs::path dir, RunManifest& manifest) : dir_(std::move(dir)), manifest_(manifest) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError(dir_.string(), ec.message());
  }

  void csv(const CsvTable& table, const std::string& name) {
    write_csv(table, dir_ / name);
    record_output(manifest_, dir_, name);
  }

  void finish() {
    manifest_.finished_at = utc_timestamp();
    write_manifest(manifest_, dir_ / "manifest.json");
  }

 private:
  fs::path dir_;
  RunManifest& manifest_;
};

// "trajectory.csv" or "trajectory_n1000.csv" when several n are requested.
std::string file_name(const std::string& stem, const ExperimentConfig& cfg, std::size_t n) {
  if (cfg.n.size() == 1) return stem + ".csv";
  return stem + "_n" + std::to_string(n) + ".csv";
}

std::string key_suffix(const ExperimentConfig& cfg, std::size_t n) {
  return cfg.n.size() == 1 ? std::string() : "_n" + std::to_string(n);
}

RandomStream anchor_stream(const ExperimentConfig& cfg, std::size_t n) {
  return RandomStream(derive_stream(derive_seed(cfg.seed, "n", n), "anchor", cfg.anchor));
}

void run_simulate(const ExperimentConfig& cfg, const StudySetup& setup, Writer& w,
                  RunManifest& m) {
  for (std::size_t n : cfg.n) {
    RandomStream rng = anchor_stream(cfg, n);
    const Trajectory traj = simulate(setup, n, rng);
    const auto decomp = decompose(traj, setup.atom);
    const auto stats = block_functional(traj, decomp, setup.functional.f);
    w.csv(trajectory_table(traj), file_name("trajectory", cfg, n));
    w.csv(block_table(stats), file_name("blocks", cfg, n));
    w.csv(regeneration_table(decomp), file_name("regen", cfg, n));
    const std::string sfx = key_suffix(cfg, n);
    m.results["numreg" + sfx] = static_cast<double>(stats.numreg());
    m.results["visit_count" + sfx] = static_cast<double>(decomp.visit_count());
  }
}

void run_bootstrap(const ExperimentConfig& cfg, const StudySetup& setup, Writer& w,
                   RunManifest& m) {
  for (std::size_t n : cfg.n) {
    const StreamKey key = derive_stream(derive_seed(cfg.seed, "n", n), "anchor", cfg.anchor);
    RandomStream rng(key);
    const Trajectory traj = simulate(setup, n, rng);
    const auto stats = block_functional(traj, decompose(traj, setup.atom), setup.functional.f);
    const EstimateSummary summary = summarize(stats);

    BootstrapOptions opts;
    opts.studentization = setup.studentization;
    opts.workers = setup.workers;
    std::vector<BootstrapDistribution> dists;
    for (BootstrapMethod method : methods_of(cfg)) {
      const std::string label(to_string(method));
      dists.push_back(bootstrap_distribution(stats, n, cfg.boot_reps, method,
                                             derive_seed(key.material(), label, 0), opts));
    }
    std::vector<const BootstrapDistribution*> ptrs;
    for (const auto& d : dists) ptrs.push_back(&d);
    w.csv(bootstrap_table(ptrs), file_name("bootstrap", cfg, n));

    const std::string sfx = key_suffix(cfg, n);
    m.results["g_n" + sfx] = summary.g_n;
    m.results["sigma_hat" + sfx] = summary.sigma_hat;
    m.results["numreg" + sfx] = static_cast<double>(summary.numreg);
    for (const auto& d : dists) {
      const std::string label(to_string(d.method));
      const auto ci = confidence_interval(summary.g_n, summary.sigma_hat, summary.numreg, d,
                                          cfg.level);
      m.results["ci_lo_" + label + sfx] = ci.lo;
      m.results["ci_hi_" + label + sfx] = ci.hi;
      m.results["degenerate_" + label + sfx] = static_cast<double>(d.degenerate_draws);
    }
  }
}

void run_ecdf(const ExperimentConfig& cfg, const StudySetup& setup, Writer& w, RunManifest& m) {
  m.seed_roots["truth"] = derive_seed(cfg.seed, "truth", 0);
  for (std::size_t n : cfg.n) {
    const auto c = cdf_comparison(n, cfg.boot_reps, cfg.true_reps, cfg.seed, cfg.anchor, setup);
    w.csv(ecdf_table(c.table), file_name("ecdf_compare", cfg, n));
    w.csv(trajectory_table(c.anchor), file_name("trajectory", cfg, n));
    w.csv(regeneration_table(c.decomposition), file_name("regen", cfg, n));
    const std::string sfx = key_suffix(cfg, n);
    m.results["ks_rbb_true" + sfx] = c.table.ks_rbb_true;
    m.results["ks_rgb_true" + sfx] = c.table.ks_rgb_true;
    m.results["ks_rbb_normal" + sfx] = c.table.ks_rbb_normal;
    m.results["ks_rgb_normal" + sfx] = c.table.ks_rgb_normal;
    m.results["ks_true_normal" + sfx] = c.table.ks_true_normal;
    m.results["true_discarded" + sfx] = static_cast<double>(c.true_discarded);
  }
}

void run_coverage(const ExperimentConfig& cfg, const StudySetup& setup, Writer& w) {
  std::vector<IntervalMethod> methods;
  for (BootstrapMethod method : methods_of(cfg)) {
    methods.push_back(bootstrap_interval_method(method, cfg.boot_reps, setup.studentization));
  }
  methods.push_back(normal_interval_method());
  const auto report = coverage_experiment(cfg.n, cfg.chains, cfg.level, cfg.seed, methods, setup);
  w.csv(coverage_table(report), "coverage.csv");
}

void run_moments(const ExperimentConfig& cfg, const StudySetup& setup, Writer& w) {
  for (std::size_t n : cfg.n) {
    const auto rows = ml_moment_diagnostic(n, cfg.chains, cfg.max_moment, cfg.beta, cfg.scale,
                                           cfg.seed, setup);
    w.csv(moment_table(rows), file_name("ml_moments", cfg, n));
  }
}

// Fast invariant checks; prints one line per check.
bool run_selftest(std::ostream& out) {
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  const PhiloxBlock kat = philox4x64_10(
      {0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL,
       0x082efa98ec4e6c89ULL},
      {0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL});
  report("philox4x64-10 known answer",
         kat == PhiloxBlock{0xa528f45403e61d95ULL, 0x38c72dbd566e9788ULL, 0xa5a1610e72fd18b5ULL,
                            0x57bd43b5e52b7fe6ULL});

  const AtomSpec origin = AtomSpec::singleton(0);
  bool split = true;
  bool partition = true;
  for (std::uint64_t s = 0; s < 100; ++s) {
    RandomStream rng(derive_stream(s, "selftest", 0));
    const Trajectory t = simulate_ssrw(10 + 97 * s, rng);
    const auto d = decompose(t, origin);
    double running = 0.0;
    std::size_t covered = 0;
    auto run = [&](IndexRange r) {
      for (std::size_t i = r.begin; i < r.end; ++i) running += inverse_square(t[i]);
      covered += r.size();
    };
    run(d.b0_range());
    for (std::size_t i = 0; i < d.numreg(); ++i) run(d.block_range(i));
    run(d.tail_range());
    split = split && running == partial_sum(t, inverse_square);
    partition = partition && covered == t.size();
  }
  report("block ranges partition the path", partition);
  report("split-sum identity", split);

  const Trajectory small({0, 1, 0, -1, -2, -1, 0, 1});
  const auto stats = block_functional(small, decompose(small, origin), inverse_square);
  bool rbb_ok = true;
  bool rgb_ok = true;
  RandomStream rng(derive_stream(1, "selftest-draw", 0));
  for (int i = 0; i < 1000; ++i) {
    const auto r = rbb_draw(stats, small.horizon(), rng);
    rbb_ok = rbb_ok && r.total_length > small.horizon() && r.retained() >= 1 &&
             r.retained_length(stats) <= small.horizon();
    rgb_ok = rgb_ok && rgb_draw(stats, rng).indices.size() == stats.numreg();
  }
  report("rbb draws stop just past the horizon", rbb_ok);
  report("rgb draws keep numreg blocks", rgb_ok);

  const std::vector<double> sorted{1, 2, 3, 4, 5};
  report("order-statistic quantile",
         quantile_sorted(sorted, 0.2) == 1 && quantile_sorted(sorted, 0.5) == 3 &&
             quantile_sorted(sorted, 0.99) == 5);

  const auto d1 = bootstrap_distribution(stats, small.horizon(), 64, BootstrapMethod::rbb, 9);
  BootstrapOptions two;
  two.workers = 2;
  const auto d2 = bootstrap_distribution(stats, small.horizon(), 64, BootstrapMethod::rbb, 9, two);
  report("bootstrap independent of workers", d1.values == d2.values);

  report("normal cdf at zero", std::abs(normal_cdf(0.0) - 0.5) < 1e-15);
  return all;
}

const char* kDescription =
    "Regenerative block bootstrap for null-recurrent Markov chains.\n"
    "Flags may appear before or after the subcommand and override --config.";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app(kDescription, "regenboot");
  app.require_subcommand(1);
  Flags f;
  Options o;
  o.n = app.add_option("--n", f.n, "Chain length(s), comma separated")->delimiter(',');
  o.chains = app.add_option("--chains", f.chains, "Independent chains per n");
  o.boot_reps = app.add_option("--boot-reps", f.boot_reps, "Bootstrap replicates B");
  o.true_reps = app.add_option("--true-reps", f.true_reps, "Chains in the true-law sample");
  o.level = app.add_option("--level", f.level, "Confidence level in (0, 1)");
  o.seed = app.add_option("--seed", f.seed, "Master seed");
  o.method = app.add_option("--method", f.method, "Bootstrap method")
                 ->check(CLI::IsMember({"rbb", "rgb", "both"}));
  o.workers = app.add_option("--workers", f.workers,
                             "Worker threads (0: REGEN_BOOT_WORKERS, then all cores)");
  app.add_option("--out-dir", f.out_dir, "Output directory")->capture_default_str();
  app.add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  o.anchor = app.add_option("--anchor", f.anchor, "Anchor chain index");
  o.studentization = app.add_option("--studentization", f.studentization,
                                    "Spread used in bootstrap replicates")
                         ->check(CLI::IsMember({"original", "resampled"}));
  o.max_moment = app.add_option("--max-moment", f.max_moment, "Highest visit-count moment");
  o.functional = app.add_option("--functional", f.functional, "Built-in functional")
                     ->check(CLI::IsMember({"inv_square", "one"}));
  o.theta = app.add_option("--theta", f.theta, "Target value of the functional");
  o.beta = app.add_option("--beta", f.beta, "Memory parameter of the visit-count scale");
  o.scale = app.add_option("--scale", f.scale, "Constant of the visit-count scale");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"simulate", "Simulate the anchor chain; write trajectory, block and regeneration CSVs"},
      {"bootstrap", "Bootstrap the anchor chain; write the replicate distribution"},
      {"ecdf-compare", "Compare bootstrap, true and normal CDFs"},
      {"coverage", "Coverage and length of confidence intervals"},
      {"ml-moments", "Visit-count moments against Mittag-Leffler moments"},
      {"selftest", "Run fast invariant checks"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "selftest") return run_selftest(out) ? kExitOk : kExitRuntimeError;

    const ExperimentConfig cfg = merge(f, o);
    const StudySetup setup = make_setup(cfg);

    RunManifest manifest;
    manifest.started_at = utc_timestamp();
    manifest.master_seed = cfg.seed;
    manifest.experiment = command;
    manifest.config_json = config_to_json(cfg);
    for (std::size_t n : cfg.n) {
      manifest.seed_roots["n" + std::to_string(n)] = derive_seed(cfg.seed, "n", n);
    }
    Writer writer(f.out_dir, manifest);

    if (command == "simulate") {
      run_simulate(cfg, setup, writer, manifest);
    } else if (command == "bootstrap") {
      run_bootstrap(cfg, setup, writer, manifest);
    } else if (command == "ecdf-compare") {
      run_ecdf(cfg, setup, writer, manifest);
    } else if (command == "coverage") {
      run_coverage(cfg, setup, writer);
    } else {
      run_moments(cfg, setup, writer);
    }
    writer.finish();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "regenboot: invalid configuration";
    if (!e.field().empty()) err << " (" << e.field() << ")";
    err << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "regenboot: invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "regenboot: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace regenboot
