#include "ekr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "ekr/extremal.hpp"
#include "ekr/permutations.hpp"
#include "ekr/report.hpp"
#include "ekr/stirling.hpp"

namespace ekr::cli {

namespace {

using report::Json;

constexpr const char *kUsage =
    "usage: ekr <command> [options]\n"
    "  stirling  --k K (--n N | --n-min A --n-max B)\n"
    "  enumerate --n N --k K\n"
    "  bounds    --n-max N [--m M] [--k K [--n-min A]]\n"
    "  verify    --n N --k K --t T [--budget-seconds S]\n"
    "  sweep     --n-min A --n-max B [--k K] [--t T] [--budget-seconds S]\n"
    "  find-n0   --k K --t T --n-max N [--budget-seconds S]\n"
    "common: --format json|csv  --output PATH  --threads N  --timing\n"
    "        --no-uniqueness\n";

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t need(const std::optional<std::size_t> &v, const char *flag) {
  if (!v)
    throw InvalidConfig(std::string("missing required --") + flag);
  return *v;
}

void require(bool ok, const std::string &message) {
  if (!ok)
    throw InvalidConfig(message);
}

OutputFormat format_of(const RunConfig &c) {
  if (c.output_format)
    return *c.output_format;
  return c.command == Command::enumerate ? OutputFormat::csv
                                         : OutputFormat::json;
}

VerifyOptions verify_options(const RunConfig &c) {
  VerifyOptions o;
  o.budget = std::chrono::seconds(c.budget_seconds);
  o.threads = std::max(1u, c.threads);
  o.check_uniqueness = c.check_uniqueness;
  return o;
}

void write_json(std::ostream &out, const Json &j) { out << j.dump() << '\n'; }

int run_stirling(const RunConfig &c, std::ostream &out) {
  const std::size_t k = need(c.k, "k");
  std::vector<report::StirlingRecord> rows;
  bool single = false;
  if (c.n) {
    require(!c.n_min && !c.n_max, "--n cannot be combined with a range");
    rows.push_back(report::stirling_record(*c.n, k, false));
    single = true;
  } else {
    const std::size_t lo = need(c.n_min, "n-min");
    const std::size_t hi = need(c.n_max, "n-max");
    require(lo <= hi, "--n-min must not exceed --n-max");
    for (std::size_t n = lo; n <= hi; ++n)
      rows.push_back(report::stirling_record(n, k, n >= 2));
  }
  if (format_of(c) == OutputFormat::csv) {
    report::write_stirling_csv(out, rows);
  } else if (single) {
    write_json(out, report::to_json(rows.front()));
  } else {
    Json arr = Json::array();
    for (const auto &r : rows)
      arr.push_back(report::to_json(r));
    write_json(out, arr);
  }
  return kExitOk;
}

int run_enumerate(const RunConfig &c, std::ostream &out) {
  const std::size_t n = need(c.n, "n");
  const std::size_t k = need(c.k, "k");
  require(k >= 1 && k <= n, "enumerate requires 1 <= k <= n");
  const bool json = format_of(c) == OutputFormat::json;
  Json arr = Json::array();
  for_each_snk(iota_ground(n), k, [&](const CyclePermutation &p) {
    if (json)
      arr.push_back(p.to_string());
    else
      out << p.to_string() << '\n';
  });
  if (json)
    write_json(out, arr);
  return kExitOk;
}

int run_bounds(const RunConfig &c, std::ostream &out) {
  const std::size_t n_max = need(c.n_max, "n-max");
  const std::size_t m = c.m.value_or(1);
  require(n_max >= 10, "bounds requires --n-max >= 10");
  require(m >= 1, "bounds requires --m >= 1");
  std::size_t lo = 0;
  if (c.k) {
    lo = c.n_min.value_or(std::max<std::size_t>(*c.k, 2));
    require(*c.k >= 2, "constant estimation requires --k >= 2");
    require(lo >= std::max<std::size_t>(*c.k, 2) && lo < n_max,
            "constant estimation requires max(k,2) <= n-min < n-max");
  }
  const InequalityReport harmonic = harmonic_bounds_check(n_max);
  const InequalityReport logs = log_power_sum_check(m, n_max);
  std::optional<ConstantsEstimate> constants;
  if (c.k)
    constants = estimate_constants(*c.k, lo, n_max, c.threads);

  if (format_of(c) == OutputFormat::csv) {
    out << "section,m,name,threshold,failures\n";
    auto rows = [&](const char *section, const std::string &mtext,
                    const InequalityReport &r) {
      for (const auto &chk : r.checks)
        out << section << ',' << mtext << ',' << chk.name << ','
            << (chk.threshold ? std::to_string(*chk.threshold) : "") << ','
            << chk.failures << '\n';
    };
    rows("harmonic", "", harmonic);
    rows("log_power", std::to_string(m), logs);
    if (constants) {
      out << "constants,," << "alpha_hat," << report::real_text(constants->alpha_hat)
          << ",\n";
      out << "constants,," << "beta_hat," << report::real_text(constants->beta_hat)
          << ",\n";
    }
    return kExitOk;
  }
  Json j;
  j["harmonic"] = report::to_json(harmonic);
  Json lj = report::to_json(logs);
  lj["m"] = m;
  j["log_power"] = std::move(lj);
  if (constants)
    j["constants"] = report::to_json(*constants);
  write_json(out, j);
  return kExitOk;
}

int run_verify(const RunConfig &c, std::ostream &out) {
  const std::size_t n = need(c.n, "n");
  const std::size_t k = need(c.k, "k");
  const std::size_t t = need(c.t, "t");
  require(t >= 1 && t < k && k <= n, "verify requires 1 <= t < k <= n");
  const TheoremReport r = verify_theorem(n, k, t, verify_options(c));
  if (format_of(c) == OutputFormat::csv)
    out << report::theorem_csv_header(c.timing) << '\n'
        << report::theorem_csv_row(r, c.timing) << '\n';
  else
    write_json(out, report::to_json(r, c.timing));
  return r.optimal ? kExitOk : kExitBudget;
}

int run_sweep(const RunConfig &c, std::ostream &out) {
  const std::size_t lo = need(c.n_min, "n-min");
  const std::size_t hi = need(c.n_max, "n-max");
  require(lo <= hi, "--n-min must not exceed --n-max");
  if (c.k && c.t)
    require(*c.t >= 1 && *c.t < *c.k, "sweep requires 1 <= t < k");
  if (c.k)
    require(*c.k >= 2, "sweep requires k >= 2");
  if (c.t)
    require(*c.t >= 1, "sweep requires t >= 1");

  const bool csv = format_of(c) == OutputFormat::csv;
  if (csv)
    out << report::theorem_csv_header(c.timing) << '\n' << std::flush;
  bool all_optimal = true;
  const VerifyOptions options = verify_options(c);
  for (std::size_t n = lo; n <= hi; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      if (c.k && k != *c.k)
        continue;
      for (std::size_t t = 1; t < k; ++t) {
        if (c.t && t != *c.t)
          continue;
        const TheoremReport r = verify_theorem(n, k, t, options);
        all_optimal = all_optimal && r.optimal;
        if (csv)
          out << report::theorem_csv_row(r, c.timing) << '\n';
        else
          out << report::to_json(r, c.timing).dump() << '\n';
        out << std::flush;
      }
    }
  }
  return all_optimal ? kExitOk : kExitBudget;
}

int run_find_n0(const RunConfig &c, std::ostream &out) {
  const std::size_t k = need(c.k, "k");
  const std::size_t t = need(c.t, "t");
  const std::size_t n_max = need(c.n_max, "n-max");
  require(t >= 1 && t < k && k <= n_max, "find-n0 requires 1 <= t < k <= n-max");
  const ThresholdReport r = find_n0(k, t, n_max, verify_options(c));
  if (format_of(c) == OutputFormat::csv) {
    out << report::theorem_csv_header(c.timing) << '\n';
    for (const auto &row : r.rows)
      out << report::theorem_csv_row(row, c.timing) << '\n';
  } else {
    write_json(out, report::to_json(r, c.timing));
  }
  const bool all_optimal = std::all_of(r.rows.begin(), r.rows.end(),
                                       [](const auto &row) { return row.optimal; });
  return all_optimal ? kExitOk : kExitBudget;
}

int dispatch(const RunConfig &c, std::ostream &out) {
  switch (c.command) {
  case Command::stirling:
    return run_stirling(c, out);
  case Command::enumerate:
    return run_enumerate(c, out);
  case Command::bounds:
    return run_bounds(c, out);
  case Command::verify:
    return run_verify(c, out);
  case Command::sweep:
    return run_sweep(c, out);
  case Command::find_n0:
    return run_find_n0(c, out);
  }
  return kExitInvalid;
}

std::optional<unsigned> parse_threads(const char *text) {
  if (!text || !*text)
    return std::nullopt;
  unsigned v = 0;
  const char *end = text + std::char_traits<char>::length(text);
  auto [p, ec] = std::from_chars(text, end, v);
  if (ec != std::errc() || p != end || v == 0)
    return std::nullopt;
  return v;
}

} // namespace

ParseOutcome parse_command_line(const std::vector<std::string> &args,
                                const char *env_threads, std::ostream &out,
                                std::ostream &err) {
  CLI::App app{"Exact verification of EKR bounds for permutations with a "
               "fixed number of cycles",
               "ekr"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  app.add_option("--budget-seconds", c.budget_seconds,
                 "search budget per instance (0 = unlimited)");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", c.output_path, "write the report to this file");
  app.add_option("--threads", threads, "worker threads (default EKR_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", c.timing, "include elapsed_ms in theorem reports");
  bool no_uniqueness = false;
  app.add_flag("--no-uniqueness", no_uniqueness,
               "skip enumerating all maximum families");

  const std::map<std::string, Command> names = {
      {"stirling", Command::stirling}, {"enumerate", Command::enumerate},
      {"bounds", Command::bounds},     {"verify", Command::verify},
      {"sweep", Command::sweep},       {"find-n0", Command::find_n0}};
  std::map<std::string, CLI::App *> subs;
  for (const auto &[name, cmd] : names) {
    CLI::App *sub = app.add_subcommand(name);
    sub->add_option("--n", c.n);
    sub->add_option("--k", c.k);
    sub->add_option("--t", c.t);
    sub->add_option("--n-min", c.n_min);
    sub->add_option("--n-max", c.n_max);
    sub->add_option("--m", c.m);
    subs[name] = sub;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back(); // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return {std::nullopt, kExitInvalid};
  }

  for (const auto &[name, sub] : subs)
    if (sub->parsed())
      c.command = names.at(name);
  if (format)
    c.output_format = *format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (threads)
    c.threads = *threads;
  else if (auto env = parse_threads(env_threads))
    c.threads = *env;
  c.check_uniqueness = !no_uniqueness;
  return {c, kExitOk};
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    if (config.output_path) {
      std::ofstream file(*config.output_path);
      if (!file) {
        err << "error: cannot open " << *config.output_path << '\n';
        return kExitInvalid;
      }
      return dispatch(config, file);
    }
    return dispatch(config, out);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return kExitInvalid;
  }
}

int main_entry(const std::vector<std::string> &args, const char *env_threads,
               std::ostream &out, std::ostream &err) {
  ParseOutcome parsed = parse_command_line(args, env_threads, out, err);
  if (!parsed.config)
    return parsed.exit_code;
  return run(*parsed.config, out, err);
}

} // namespace ekr::cli
