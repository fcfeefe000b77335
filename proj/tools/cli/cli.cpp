#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "coverkit/coverkit.hpp"

namespace coverkit::cli {

namespace {

enum class Format { kTable, kCsv, kJsonLines };

struct Options {
  std::string model = "windows";
  std::string n_text, l_text, a_text, d_text, dims_text, window_text, demand_text;
  std::string model_file, out_path, per_trial_path, e_single_text;
  unsigned t = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string format = "table";
  std::size_t cap_edges = EnumerationCaps{}.max_edges;
  std::size_t cap_vertices = EnumerationCaps{}.max_vertices;
  std::size_t threads = 0;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Format parse_format(const std::string& s) {
  if (s == "table") return Format::kTable;
  if (s == "csv") return Format::kCsv;
  if (s == "json-lines") return Format::kJsonLines;
  throw InputError("unknown format '" + s + "' (expected table, csv or json-lines)");
}

void render(std::ostream& out, Format format, const Table& table) {
  switch (format) {
    case Format::kCsv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      line(table.header);
      for (const auto& r : table.rows) line(r);
      break;
    }
    case Format::kJsonLines:
      for (const auto& r : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = i < r.size() ? r[i] : "";
        out << obj.dump() << '\n';
      }
      break;
    case Format::kTable: {
      std::vector<std::size_t> width(table.header.size(), 0);
      auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
      };
      widen(table.header);
      for (const auto& r : table.rows) widen(r);
      auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) text += "  ";
          text += cells[i];
          if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
        }
        out << text << '\n';
      };
      line(table.header);
      for (const auto& r : table.rows) line(r);
      break;
    }
  }
}

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError(std::string("invalid integer for ") + what + ": '" + text + "'");
  }
  return value;
}

std::int64_t require_int(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string("missing required option ") + what);
  return parse_int(text, what);
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string("missing required option ") + what);
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text, what);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), what), parse_int(text.substr(dots + 2), what)};
}

ModelSpec build_spec(const Options& o) {
  const std::string& m = o.model;
  if (m == "windows") return spec::Windows{require_int(o.n_text, "-n"), require_int(o.l_text, "-l")};
  if (m == "cyclic") return spec::CyclicWindows{require_int(o.n_text, "-n"), require_int(o.l_text, "-l")};
  if (m == "batch") return spec::Batch{require_int(o.n_text, "-n"), require_int(o.l_text, "-l")};
  if (m == "arcs") {
    if (o.a_text.empty()) throw InputError("missing required option -a");
    return spec::Arcs{Rational::parse(o.a_text)};
  }
  if (m == "delta-d") {
    return spec::DeltaD{require_int(o.n_text, "-n"), require_int(o.l_text, "-l"), require_int(o.d_text, "-d")};
  }
  if (m == "torus") return spec::Torus{parse_list(o.dims_text, "--dims"), parse_list(o.window_text, "--window")};
  if (m == "hamming") {
    const auto d = require_int(o.d_text, "-d");
    if (d < 1 || d > 62) throw InputError("hamming dimension must lie in [1, 62]");
    return spec::HammingBalls{static_cast<unsigned>(d), o.t};
  }
  if (m == "demand") {
    const auto n = require_int(o.n_text, "-n");
    auto v = parse_list(o.demand_text, "--demand");
    if (v.size() == 1 && n > 1) v.assign(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), v[0]);
    return spec::Demand{n, require_int(o.l_text, "-l"), std::move(v)};
  }
  if (m == "explicit") {
    if (o.model_file.empty()) throw InputError("explicit models need --model-file");
    return spec::Explicit{load_model(o.model_file)};
  }
  throw InputError("unknown model '" + m +
                   "' (expected windows, cyclic, batch, arcs, delta-d, torus, hamming, demand or explicit)");
}

EnumerationCaps caps_of(const Options& o) {
  EnumerationCaps caps;
  caps.max_edges = o.cap_edges;
  caps.max_vertices = o.cap_vertices;
  caps.workers = o.threads;
  return caps;
}

SimOptions sim_options(const Options& o) {
  SimOptions s;
  s.threads = o.threads;
  return s;
}

std::string dec(double v) { return format_decimal(v); }
std::string dec(const Rational& v) { return format_decimal(v.to_double()); }

// ---- exact -----------------------------------------------------------------

void cmd_exact(const Options& o, Format format, std::ostream& out) {
  const ModelSpec spec = build_spec(o);
  const ExactResult r = exact_expectation(spec, caps_of(o));
  const std::vector<std::string> row{label(spec), r.value.to_string(), dec(r.value), r.engine};
  if (format == Format::kTable) {
    out << row[0] << ", " << row[1] << ", " << row[2] << ", " << row[3] << '\n';
    return;
  }
  render(out, format, {{"model", "exact", "decimal", "engine"}, {row}});
}

// ---- bounds ----------------------------------------------------------------

struct BoundRows {
  Table table{{"quantity", "exact", "decimal"}, {}};
  void add(const std::string& name, const Rational& v) { table.rows.push_back({name, v.to_string(), dec(v)}); }
  void add(const std::string& name, double v) { table.rows.push_back({name, "", dec(v)}); }
};

double cc_term(std::int64_t n, std::int64_t ell) {
  const double r = static_cast<double>(n) / static_cast<double>(ell);
  return r * std::log(r);
}

void bounds_cyclic_family(BoundRows& b, std::int64_t n, std::int64_t ell, const char* exact_name) {
  const CyclicParams p(n, ell);
  b.add(exact_name, expected_cyclic(p));
  b.add("lower_bound", cyclic_lower_bound(p));
  if (ell < n) {
    b.add("stevens_upper", stevens_exact(ArcParams(Rational(ell, n))));
    b.add("dominance_gap", dominance_gap(n, ell));
  }
  b.add("arc_upper_bound", arc_upper_bound(Rational(n, ell)));
  b.add("universal_upper", universal_upper(n, ell));
  if (n % ell == 0) {
    for (const auto& [d, e] : check_delta_monotonicity(n, ell)) b.add("delta_d_" + std::to_string(d), e);
  }
}

void cmd_bounds(const Options& o, Format format, std::ostream& out) {
  const ModelSpec spec = build_spec(o);
  validate(spec);
  BoundRows b;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, spec::Windows>) {
          const WindowsParams p(s.n, s.ell);
          const Rational linear(3 * p.window_count(), 2);
          b.add("exact", expected_windows(p));
          b.add("linear_term", linear);
          b.add("cc_term", cc_term(s.n, s.ell));
          if (s.ell < s.n) {
            const auto wb = windows_bounds(p);
            b.add("lower", wb.lower);
            b.add("upper", wb.upper);
            if (2 * s.ell >= s.n) b.add("large_closed_form", expected_windows_large(p));
            if (3 * s.ell >= s.n && 2 * s.ell < s.n) b.add("third_closed_form", expected_windows_third(p));
            b.add("residual", expected_windows(p) - linear);
          }
        } else if constexpr (std::is_same_v<T, spec::CyclicWindows>) {
          bounds_cyclic_family(b, s.n, s.ell, "exact");
        } else if constexpr (std::is_same_v<T, spec::DeltaD>) {
          b.add("exact", expected_delta_d(DeltaDParams(s.n, s.ell, s.d)));
          bounds_cyclic_family(b, s.n, s.ell, "cyclic_exact");
        } else if constexpr (std::is_same_v<T, spec::Batch>) {
          const BatchParams p(s.n, s.ell);
          b.add("exact", polya_expected(p));
          if (s.ell < s.n) {
            const auto sw = sandwich_bounds(p, PartialTarget(s.n, s.n));
            b.add("sandwich_lower", sw.lower);
            b.add("sandwich_upper", sw.upper);
          }
          const std::int64_t q = s.n / s.ell;
          b.add("lower_conjecture", Rational(q) * harmonic(q));
          b.add("universal_upper", universal_upper(s.n, s.ell));
        } else if constexpr (std::is_same_v<T, spec::Arcs>) {
          const ArcParams p(s.a);
          b.add("exact", stevens_exact(p));
          b.add("stevens_float", stevens_float(p));
          if (s.a.to_double() * std::exp(1.0) < 1.0) b.add("flatto_asymptotic", flatto_asymptotic(p));
          b.add("arc_upper_bound", arc_upper_bound(Rational(1) / s.a));
        } else if constexpr (std::is_same_v<T, spec::Demand>) {
          const auto positive = std::count_if(s.v.begin(), s.v.end(), [](std::int64_t x) { return x > 0; });
          const bool simple = std::all_of(s.v.begin(), s.v.end(), [](std::int64_t x) { return x <= 1; });
          std::optional<Rational> e_single;
          if (simple) {
            b.add("exact", stadje_expected(BatchParams(s.n, s.ell), PartialTarget(positive, positive)));
            e_single = Rational(s.n) * (harmonic(s.n) - harmonic(s.n - positive));
            b.add("single_draw_exact", *e_single);
          }
          if (!o.e_single_text.empty()) e_single = Rational::parse(o.e_single_text);
          const bool uniform = positive == s.n && std::all_of(s.v.begin(), s.v.end(),
                                                              [&](std::int64_t x) { return x == s.v.front(); });
          if (uniform && s.n >= 3) b.add("dixie_single_draw", dixie_asymptotic(s.n, s.v.front()));
          if (e_single && s.ell < s.n) {
            const auto nb = normalization_bounds(*e_single, s.n, s.ell);
            b.add("normalization_lower", nb.lower);
            b.add("normalization_upper", nb.upper);
          }
        } else if constexpr (std::is_same_v<T, spec::Torus>) {
          throw InputError("no exact engine or bounds exist for torus models; use the simulate command");
        } else {
          const auto r = exact_expectation(spec, caps_of(o));
          b.add("exact", r.value);
        }
      },
      spec);
  render(out, format, b.table);
}

// ---- simulate / couple -----------------------------------------------------

void write_per_trial(const Options& o, const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>* b) {
  if (o.per_trial_path.empty()) return;
  std::ofstream f(o.per_trial_path);
  if (!f) throw InputError("cannot open per-trial output '" + o.per_trial_path + "'");
  write_trial_csv(f, o.seed, a, b);
}

void cmd_simulate(const Options& o, Format format, std::ostream& out) {
  const ModelSpec spec = build_spec(o);
  const SimRun run = simulate_trials(spec, o.trials, o.seed, sim_options(o));
  write_per_trial(o, run.times, nullptr);
  const auto& r = run.result;
  render(out, format,
         {{"model", "trials", "seed", "mean", "variance", "ci99_halfwidth"},
          {{label(spec), std::to_string(r.trials), std::to_string(r.seed), dec(r.mean), dec(r.variance),
            dec(r.ci99_halfwidth)}}});
}

void cmd_couple(const Options& o, Format format, std::ostream& out) {
  CoupledRun run;
  std::string name;
  const auto opts = sim_options(o);
  if (o.model == "cyclic" || o.model == "arcs") {
    const auto n = require_int(o.n_text, "-n");
    const auto l = require_int(o.l_text, "-l");
    name = "arc-window n=" + std::to_string(n) + " l=" + std::to_string(l);
    run = simulate_coupled_arc_window(n, l, o.trials, o.seed, opts);
  } else if (o.model == "delta-d") {
    const auto n = require_int(o.n_text, "-n");
    const auto l = require_int(o.l_text, "-l");
    const auto d = require_int(o.d_text, "-d");
    name = "delta-d n=" + std::to_string(n) + " l=" + std::to_string(l) + " d=" + std::to_string(d);
    run = simulate_coupled_delta(n, l, d, o.trials, o.seed, opts);
  } else if (o.model == "torus") {
    const spec::Torus torus{parse_list(o.dims_text, "--dims"), parse_list(o.window_text, "--window")};
    const auto d = parse_list(o.d_text, "-d");
    name = "torus-delta " + label(ModelSpec{torus}).substr(6);
    run = simulate_coupled_torus_delta(torus, d, o.trials, o.seed, opts);
  } else {
    throw InputError("couple supports --model cyclic (arc coupling), delta-d or torus");
  }
  write_per_trial(o, run.first_times, &run.second_times);
  render(out, format,
         {{"coupling", "trials", "seed", "mean_first", "mean_second", "mean_gap", "violations"},
          {{name, std::to_string(run.first.trials), std::to_string(o.seed), dec(run.first.mean),
            dec(run.second.mean), dec(run.second.mean - run.first.mean), std::to_string(run.violations)}}});
}

// ---- sweep -----------------------------------------------------------------

std::vector<std::string> sweep_row(const std::string& model, std::int64_t n, std::int64_t ell) {
  const Rational linear(3 * (n - ell + 1), 2);
  std::vector<std::string> row{std::to_string(n), std::to_string(ell)};
  auto opt = [](bool ok, const std::function<std::string()>& f) { return ok ? f() : std::string(); };
  if (model == "windows") {
    const WindowsParams p(n, ell);
    row.push_back(expected_windows(p).to_string());
    row.push_back(linear.to_string());
    row.push_back(dec(cc_term(n, ell)));
    const bool ok = ell < n;
    const auto wb = ok ? std::optional(windows_bounds(p)) : std::nullopt;
    row.push_back(opt(ok, [&] { return wb->lower.to_string(); }));
    row.push_back(opt(ok, [&] { return dec(wb->upper); }));
  } else if (model == "cyclic") {
    const CyclicParams p(n, ell);
    row.push_back(expected_cyclic(p).to_string());
    row.push_back(linear.to_string());
    row.push_back(dec(cc_term(n, ell)));
    row.push_back(cyclic_lower_bound(p).to_string());
    row.push_back(opt(ell < n, [&] { return stevens_exact(ArcParams(Rational(ell, n))).to_string(); }));
    row.push_back(opt(ell < n, [&] { return dominance_gap(n, ell).to_string(); }));
  } else {
    const BatchParams p(n, ell);
    row.push_back(polya_expected(p).to_string());
    row.push_back(linear.to_string());
    row.push_back(dec(cc_term(n, ell)));
    const bool ok = ell < n;
    const auto sw = ok ? std::optional(sandwich_bounds(p, PartialTarget(n, n))) : std::nullopt;
    row.push_back(opt(ok, [&] { return sw->lower.to_string(); }));
    row.push_back(opt(ok, [&] { return sw->upper.to_string(); }));
  }
  return row;
}

void cmd_sweep(const Options& o, Format format, std::ostream& out) {
  if (o.model != "windows" && o.model != "cyclic" && o.model != "batch") {
    throw InputError("sweep supports --model windows, cyclic or batch");
  }
  if (o.n_text.empty()) throw InputError("missing required option -n");
  const auto [n_lo, n_hi] = parse_range(o.n_text, "-n");
  const bool l_given = !o.l_text.empty();
  const auto l_range = l_given ? parse_range(o.l_text, "-l") : std::pair<std::int64_t, std::int64_t>{1, 0};
  Table table{{"n", "l", "e_exact", "linear_term", "cc_term", "lower", "upper"}, {}};
  if (o.model == "cyclic") table.header.push_back("dominance");
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const std::int64_t lo = l_given ? l_range.first : 1;
    const std::int64_t hi = l_given ? l_range.second : n;
    for (std::int64_t ell = lo; ell <= hi; ++ell) {
      std::vector<std::string> row;
      try {
        row = sweep_row(o.model, n, ell);
      } catch (const InputError&) {
        row = {std::to_string(n), std::to_string(ell), "engine=skipped"};
      } catch (const CapacityError&) {
        row = {std::to_string(n), std::to_string(ell), "engine=skipped"};
      }
      row.resize(table.header.size());
      table.rows.push_back(std::move(row));
    }
  }
  render(out, format, table);
}

// ---- conjectures -----------------------------------------------------------

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void cmd_conjectures(const Options& o, Format format, std::ostream& out) {
  const auto n = require_int(o.n_text, "-n");
  const auto l = require_int(o.l_text, "-l");
  const LabReport r = run_lab(n, l);
  std::ostringstream verdicts;
  write_verdicts(verdicts, r);
  const auto& m = r.monotonicity;
  if (format == Format::kCsv) {
    out << verdicts.str();
    return;
  }
  if (format == Format::kJsonLines) {
    std::istringstream lines(verdicts.str());
    std::string line;
    while (std::getline(lines, line)) {
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) f.push_back(cell);
      nlohmann::ordered_json obj{{"edges_bitmask", f[0]}, {"degree", f[1]}, {"expectation", f[2]}, {"verdicts", f[3]}};
      out << obj.dump() << '\n';
    }
    nlohmann::ordered_json summary{{"models", r.entries.size()},
                                   {"nested_pairs", m.nested_pairs},
                                   {"nested_violations", m.nested_violations.size()},
                                   {"cardinality_pairs", m.cardinality_pairs},
                                   {"cardinality_violations", m.cardinality_violations},
                                   {"batch_max_holds", r.batch_max.holds()},
                                   {"lower_holds", r.lower.holds()}};
    out << summary.dump() << '\n';
    return;
  }
  out << "models: " << r.entries.size() << '\n'
      << "universal_upper: " << dec(r.universal_upper) << " (all models within)\n"
      << "monotonicity: nested_pairs=" << m.nested_pairs << " nested_violations=" << m.nested_violations.size()
      << " cardinality_pairs=" << m.cardinality_pairs << " cardinality_violations=" << m.cardinality_violations
      << '\n'
      << "batch_max: max=" << r.batch_max.max_expectation << " batch=" << r.batch_max.batch_expectation
      << " holds=" << yes_no(r.batch_max.holds()) << '\n'
      << "lower: bound=" << r.lower.bound << " min=" << r.lower.min_expectation
      << " holds=" << yes_no(r.lower.holds());
  if (r.lower.partition_attains) out << " partition_attains=" << yes_no(*r.lower.partition_attains);
  out << "\n\n" << verdicts.str();
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "windows|cyclic|batch|arcs|delta-d|torus|hamming|demand|explicit");
  sub->add_option("-n", o.n_text, "sequence length (sweep: a..b range)");
  sub->add_option("-l", o.l_text, "window / batch size (sweep: a..b range)");
  sub->add_option("-a", o.a_text, "arc length as p/q");
  sub->add_option("-d", o.d_text, "delta-d spacing, hamming dimension, or comma list for torus coupling");
  sub->add_option("-t", o.t, "hamming ball radius");
  sub->add_option("--dims", o.dims_text, "torus dimensions, comma list");
  sub->add_option("--window", o.window_text, "torus patch sizes, comma list");
  sub->add_option("--demand", o.demand_text, "demand vector, comma list (one value = uniform)");
  sub->add_option("--e-single", o.e_single_text, "single-draw expectation for normalization bounds");
  sub->add_option("--model-file", o.model_file, "explicit model file");
  sub->add_option("--trials", o.trials, "simulation trials");
  sub->add_option("--seed", o.seed, "simulation seed");
  sub->add_option("--format", o.format, "table|csv|json-lines");
  sub->add_option("--out", o.out_path, "write results to this file");
  sub->add_option("--per-trial", o.per_trial_path, "write per-trial CSV to this file");
  sub->add_option("--cap-edges", o.cap_edges, "edge cap for recovery-profile enumeration");
  sub->add_option("--cap-vertices", o.cap_vertices, "vertex cap for the inclusion-exclusion oracle");
  sub->add_option("--threads", o.threads, "worker threads (default: COVERKIT_THREADS or hardware)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated coverage times for window, arc, batch and hypergraph models", "coverkit"};
  app.require_subcommand(1);
  Options o;
  using Handler = void (*)(const Options&, Format, std::ostream&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"exact", "exact expected coverage time", cmd_exact},
      {"bounds", "bounds, closed forms and asymptotics", cmd_bounds},
      {"simulate", "Monte Carlo estimate", cmd_simulate},
      {"couple", "coupled paired simulation with pathwise checks", cmd_couple},
      {"sweep", "CSV grid over (n, l)", cmd_sweep},
      {"conjectures", "enumerate uniform regular models and test conjectures", cmd_conjectures},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help, handler] : commands) {
    subs.push_back(app.add_subcommand(name, help));
    add_common(subs.back(), o);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    if (o.trials == 0) throw InputError("trials must be at least 1");
    const Format format = parse_format(o.format);
    std::ofstream file;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw InputError("cannot open output '" + o.out_path + "'");
    }
    std::ostream& sink = o.out_path.empty() ? out : file;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) std::get<2>(commands[i])(o, format, sink);
    }
    sink.flush();
    return kOk;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUnexpected;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"coverkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coverkit::cli
