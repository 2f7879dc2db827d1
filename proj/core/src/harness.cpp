// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#include "eqdist/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "eqdist/errors.hpp"
#include "eqdist/roots.hpp"

namespace eqdist {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double_or_throw(const std::string& text, const std::string& path) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(path, "cannot parse number '" + text + "'");
  }
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Type-7 quantile (linear interpolation between order statistics).
double quantile(const std::vector<double>& sorted, double p) {
  const std::size_t k = sorted.size();
  if (k == 1) return sorted[0];
  const double h = p * static_cast<double>(k - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, k - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

DistributionSpec dist_from_json(const ordered_json& j, const std::string& path) {
  if (j.is_string()) {
    auto d = parse_distribution(j.get<std::string>());
    if (!d) throw ConfigError(path, "unknown distribution '" + j.get<std::string>() + "'");
    return *d;
  }
  if (j.is_object()) {
    const std::string kind = j.value("kind", "");
    if (kind == "pointpairs") {
      if (!j.contains("values") || !j.contains("probs"))
        throw ConfigError(path, "pointpairs needs 'values' and 'probs'");
      std::vector<Complex> values;
      for (const auto& v : j.at("values")) {
        if (!v.is_array() || v.size() != 2) throw ConfigError(path + ".values", "expected [re, im]");
        values.emplace_back(v[0].get<double>(), v[1].get<double>());
      }
      std::vector<double> probs = j.at("probs").get<std::vector<double>>();
      try {
        return DistributionSpec::point_pairs(std::move(values), std::move(probs));
      } catch (const DegenerateLaw& e) {
        throw ConfigError(path, e.what());
      }
    }
    throw ConfigError(path, "unknown distribution object kind '" + kind + "'");
  }
  throw ConfigError(path, "expected string or object");
}

ordered_json dist_to_json(const DistributionSpec& d) {
  if (d.kind == DistKind::PointPairs) {
    ordered_json j;
    j["kind"] = "pointpairs";
    ordered_json values = ordered_json::array();
    for (const auto& v : d.values) values.push_back({v.real(), v.imag()});
    j["values"] = values;
    j["probs"] = d.probs;
    return j;
  }
  return d.label;
}

void append_scalar_csv(std::ostringstream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

const char* status_name(TrialRecord::Status s) {
  switch (s) {
    case TrialRecord::Status::Ok:
      return "ok";
    case TrialRecord::Status::NoConvergence:
      return "no_convergence";
    case TrialRecord::Status::IdenticallyZero:
      return "identically_zero";
  }
  return "?";
}

}  // namespace

std::string EnsembleSpec::text() const {
  switch (kind) {
    case Kind::Kac:
      return "kac";
    case Kind::Kac2:
      return "kac2";
    case Kind::Ortho:
      return "ortho:" + label;
    case Kind::Array:
      return "array:" + label;
  }
  return "?";
}

EnsembleSpec EnsembleSpec::parse(const std::string& text) {
  EnsembleSpec e;
  if (text == "kac") {
    e.kind = Kind::Kac;
    return e;
  }
  if (text == "kac2") {
    e.kind = Kind::Kac2;
    return e;
  }
  if (text.rfind("ortho:", 0) == 0) {
    e.kind = Kind::Ortho;
    e.label = text.substr(6);
    if (e.label.empty()) throw ConfigError("ensemble", "ortho: needs a measure label");
    return e;
  }
  if (text.rfind("array:", 0) == 0) {
    e.kind = Kind::Array;
    e.label = text.substr(6);
    if (e.label.empty()) throw ConfigError("ensemble", "array: needs an array label");
    return e;
  }
  throw ConfigError("ensemble", "unknown ensemble '" + text + "'");
}

StatisticSpec StatisticSpec::parse(const std::string& text) {
  StatisticSpec s;
  s.name = text;
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  if (head == "radial_ks" && parts.size() == 1) {
    s.kind = Kind::RadialKs;
    return s;
  }
  if (head == "weyl" && parts.size() <= 2) {
    s.kind = Kind::Weyl;
    if (parts.size() == 2) {
      const double k = parse_double_or_throw(parts[1], "statistics");
      if (k < 1.0) throw ConfigError("statistics", "weyl: k_max must be >= 1");
      s.k_max = static_cast<std::size_t>(k);
    }
    return s;
  }
  if ((head == "annulus_mass" || head == "no_roots_event") &&
      (parts.size() == 1 || parts.size() == 3)) {
    s.kind = head == "annulus_mass" ? Kind::AnnulusMass : Kind::NoRootsEvent;
    if (parts.size() == 3) {
      s.lo = parse_double_or_throw(parts[1], "statistics");
      s.hi = parse_double_or_throw(parts[2], "statistics");
    }
    if (!(s.lo >= 0.0) || !(s.lo < s.hi))
      throw ConfigError("statistics", head + ": need 0 <= lo < hi");
    return s;
  }
  if (head == "potential_l1" && parts.size() == 1) {
    s.kind = Kind::PotentialL1;
    return s;
  }
  if (head == "bl_estimate" && parts.size() == 1) {
    s.kind = Kind::BlEstimate;
    return s;
  }
  throw ConfigError("statistics", "unknown statistic '" + text + "'");
}

MeasureSpec make_measure(const std::string& label, int degree) {
  const std::size_t nodes = static_cast<std::size_t>(std::max(2 * degree + 1, 9));
  if (label == "circle") return MeasureSpec::circle_uniform(1.0, nodes);
  if (label.rfind("circle:", 0) == 0) {
    const double R = parse_double_or_throw(label.substr(7), "ensemble");
    if (!(R > 0.0)) throw ConfigError("ensemble", "circle radius must be positive");
    return MeasureSpec::circle_uniform(R, nodes);
  }
  if (label == "arcsine") return MeasureSpec::interval_arcsine(nodes);
  throw ConfigError("ensemble", "unknown measure label '" + label + "'");
}

CoefficientArray make_array(const std::string& label, int n) {
  if (label == "kac") return CoefficientArray::kac(n);
  if (label == "elliptic") return profile_array(Profile::elliptic(), n);
  if (label.rfind("radial:", 0) == 0) {
    const double R = parse_double_or_throw(label.substr(7), "ensemble");
    if (!(R > 0.0)) throw ConfigError("ensemble", "radial array radius must be positive");
    const std::pair<double, double> tau[] = {{R, 1.0}};
    return weighted_radial_coefficients(tau, [](double) { return 0.0; }, n);
  }
  throw ConfigError("ensemble", "unknown array label '" + label + "'");
}

LimitPotential make_limit(const EnsembleSpec& ensemble) {
  switch (ensemble.kind) {
    case EnsembleSpec::Kind::Kac:
      return LimitPotential::from_compact(CompactSetModel::unit_circle());
    case EnsembleSpec::Kind::Ortho: {
      if (ensemble.label == "circle")
        return LimitPotential::from_compact(CompactSetModel::unit_circle());
      if (ensemble.label.rfind("circle:", 0) == 0) {
        const double R = parse_double_or_throw(ensemble.label.substr(7), "ensemble");
        return LimitPotential::from_compact(CompactSetModel::circle(R));
      }
      if (ensemble.label == "arcsine")
        return LimitPotential::from_compact(CompactSetModel::interval(-1.0, 1.0));
      throw ConfigError("ensemble", "unknown measure label '" + ensemble.label + "'");
    }
    case EnsembleSpec::Kind::Array: {
      if (ensemble.label == "kac")
        return LimitPotential::from_compact(CompactSetModel::unit_circle());
      if (ensemble.label == "elliptic") return LimitPotential::from_profile(Profile::elliptic());
      if (ensemble.label.rfind("radial:", 0) == 0) {
        const double R = parse_double_or_throw(ensemble.label.substr(7), "ensemble");
        return LimitPotential::from_compact(CompactSetModel::circle(R));
      }
      throw ConfigError("ensemble", "unknown array label '" + ensemble.label + "'");
    }
    case EnsembleSpec::Kind::Kac2:
      throw ConfigError("ensemble", "kac2 has no one-variable limit measure");
  }
  throw ConfigError("ensemble", "unreachable");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("$", "config must be a JSON object");

  ExperimentConfig c;
  if (!j.contains("ensemble") || !j.at("ensemble").is_string())
    throw ConfigError("ensemble", "required string");
  c.ensemble = EnsembleSpec::parse(j.at("ensemble").get<std::string>());

  if (!j.contains("dist")) throw ConfigError("dist", "required");
  c.dist = dist_from_json(j.at("dist"), "dist");

  if (!j.contains("degrees") || !j.at("degrees").is_array() || j.at("degrees").empty())
    throw ConfigError("degrees", "required non-empty array");
  int prev = 0;
  std::size_t idx = 0;
  for (const auto& d : j.at("degrees")) {
    if (!d.is_number_integer())
      throw ConfigError("degrees[" + std::to_string(idx) + "]", "expected integer");
    const int n = d.get<int>();
    if (n < 1) throw ConfigError("degrees[" + std::to_string(idx) + "]", "degree must be >= 1");
    if (n <= prev)
      throw ConfigError("degrees[" + std::to_string(idx) + "]", "degrees must be ascending");
    c.degrees.push_back(n);
    prev = n;
    ++idx;
  }

  c.trials = j.value("trials", 1);
  if (c.trials < 1) throw ConfigError("trials", "must be >= 1");

  if (j.contains("statistics")) {
    if (!j.at("statistics").is_array()) throw ConfigError("statistics", "expected array");
    for (const auto& s : j.at("statistics")) {
      if (!s.is_string()) throw ConfigError("statistics", "expected array of strings");
      c.statistics.push_back(StatisticSpec::parse(s.get<std::string>()));
    }
  }

  c.seed = j.value("seed", 0ULL);
  c.output_dir = j.value("output_dir", std::string{});
  c.dump_roots = j.value("dump_roots", false);

  // Ensemble/statistic compatibility.
  for (const auto& s : c.statistics) {
    const bool needs_roots = s.kind != StatisticSpec::Kind::PotentialL1;
    if (c.ensemble.kind == EnsembleSpec::Kind::Kac2 && needs_roots)
      throw ConfigError("statistics",
                        "'" + s.name + "' needs a one-variable root measure; kac2 only supports "
                        "potential_l1");
    if ((s.kind == StatisticSpec::Kind::RadialKs || s.kind == StatisticSpec::Kind::BlEstimate) &&
        c.ensemble.kind != EnsembleSpec::Kind::Kac2) {
      if (!make_limit(c.ensemble).radial())
        throw ConfigError("statistics", "'" + s.name + "' needs a radial limit measure");
    }
  }
  // Validate ensemble labels eagerly for early diagnostics.
  if (c.ensemble.kind == EnsembleSpec::Kind::Ortho) (void)make_measure(c.ensemble.label, 2);
  if (c.ensemble.kind == EnsembleSpec::Kind::Array) (void)make_array(c.ensemble.label, 2);
  return c;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("cannot read config file: " + path);
  return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
  ordered_json j;
  j["ensemble"] = ensemble.text();
  j["dist"] = dist_to_json(dist);
  j["degrees"] = degrees;
  j["trials"] = trials;
  ordered_json stats = ordered_json::array();
  for (const auto& s : statistics) stats.push_back(s.name);
  j["statistics"] = stats;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  j["dump_roots"] = dump_roots;
  return j.dump(2) + "\n";
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EQDIST_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct DegreeContext {
  int n = 0;
  std::optional<OrthoBasis> basis;
  std::optional<CoefficientArray> array;
};

struct ExperimentContext {
  const ExperimentConfig* config = nullptr;
  std::vector<DegreeContext> degrees;
  std::optional<LimitPotential> limit;
  std::optional<BlTestGrid> bl_grid;
  CompactSetModel torus = CompactSetModel::torus2();
};

void run_trial(const ExperimentContext& ctx, std::size_t degree_idx, int trial_idx,
               TrialRecord& rec) {
  const ExperimentConfig& cfg = *ctx.config;
  const DegreeContext& dc = ctx.degrees[degree_idx];
  rec.degree = dc.n;
  rec.trial = trial_idx;

  // Stream keyed by the degree value (not index): extending a sweep with new
  // degrees never changes existing trials' draws.
  RngStream stream = RngStream(cfg.seed)
                         .substream(static_cast<std::uint64_t>(dc.n))
                         .substream(static_cast<std::uint64_t>(trial_idx));

  try {
    if (cfg.ensemble.kind == EnsembleSpec::Kind::Kac2) {
      const PolynomialSample2 sample =
          draw_kac2(dc.n, cfg.dist, stream, cfg.seed, static_cast<std::uint64_t>(trial_idx));
      for (const auto& s : cfg.statistics) {
        if (s.kind == StatisticSpec::Kind::PotentialL1) {
          const PotentialError pe = potential_l1_error_2(sample, ctx.torus);
          rec.report.potential_l1 = pe.l1;
          rec.report.clip_bias = pe.clip_bias;
          rec.scalars[s.name] = pe.l1;
        }
      }
      rec.status = TrialRecord::Status::Ok;
      return;
    }

    PolynomialSample sample;
    switch (cfg.ensemble.kind) {
      case EnsembleSpec::Kind::Kac:
        sample = draw_kac(dc.n, cfg.dist, stream, cfg.seed, static_cast<std::uint64_t>(trial_idx));
        break;
      case EnsembleSpec::Kind::Ortho:
        sample = draw_ortho(dc.n, *dc.basis, cfg.dist, stream, cfg.seed,
                            static_cast<std::uint64_t>(trial_idx));
        break;
      case EnsembleSpec::Kind::Array:
        sample = draw_array(*dc.array, cfg.dist, stream, cfg.seed,
                            static_cast<std::uint64_t>(trial_idx));
        break;
      case EnsembleSpec::Kind::Kac2:
        break;  // handled above
    }

    const RootSet rs = find_roots(sample);
    const EmpiricalMeasure emp = EmpiricalMeasure::from_roots(rs, dc.n);

    for (const auto& s : cfg.statistics) {
      switch (s.kind) {
        case StatisticSpec::Kind::RadialKs: {
          const double v = radial_ks(emp, *ctx.limit);
          rec.report.radial_ks = v;
          rec.scalars[s.name] = v;
          break;
        }
        case StatisticSpec::Kind::Weyl: {
          rec.report.weyl = weyl_sums(emp, s.k_max);
          rec.scalars[s.name] = rec.report.weyl[0];
          break;
        }
        case StatisticSpec::Kind::AnnulusMass: {
          const double v = annulus_mass(emp, s.lo, s.hi);
          rec.report.annulus_mass = v;
          rec.scalars[s.name] = v;
          break;
        }
        case StatisticSpec::Kind::NoRootsEvent: {
          rec.scalars[s.name] = annulus_mass(emp, s.lo, s.hi) == 0.0 ? 1.0 : 0.0;
          break;
        }
        case StatisticSpec::Kind::PotentialL1: {
          const PotentialError pe = potential_l1_error(sample, *ctx.limit);
          rec.report.potential_l1 = pe.l1;
          rec.report.clip_bias = pe.clip_bias;
          rec.scalars[s.name] = pe.l1;
          break;
        }
        case StatisticSpec::Kind::BlEstimate: {
          const double v = ctx.bl_grid->estimate(emp);
          rec.report.bl_estimate = v;
          rec.scalars[s.name] = v;
          break;
        }
      }
    }

    if (cfg.dump_roots) {
      rec.roots = rs.roots;
      rec.root_file = "roots/n" + std::to_string(dc.n) + "_t" + std::to_string(trial_idx) + ".csv";
    }
    rec.status = TrialRecord::Status::Ok;
  } catch (const IdenticallyZero&) {
    rec.status = TrialRecord::Status::IdenticallyZero;
  } catch (const NoConvergence&) {
    rec.status = TrialRecord::Status::NoConvergence;
  }
}

}  // namespace

ExperimentResult run(const ExperimentConfig& config, int threads) {
  ExperimentContext ctx;
  ctx.config = &config;
  for (int n : config.degrees) {
    DegreeContext dc;
    dc.n = n;
    if (config.ensemble.kind == EnsembleSpec::Kind::Ortho)
      dc.basis = gram_schmidt_basis(make_measure(config.ensemble.label, n), n);
    if (config.ensemble.kind == EnsembleSpec::Kind::Array)
      dc.array = make_array(config.ensemble.label, n);
    ctx.degrees.push_back(std::move(dc));
  }

  bool needs_limit = false;
  bool needs_bl = false;
  for (const auto& s : config.statistics) {
    if (s.kind == StatisticSpec::Kind::RadialKs ||
        (s.kind == StatisticSpec::Kind::PotentialL1 &&
         config.ensemble.kind != EnsembleSpec::Kind::Kac2))
      needs_limit = true;
    if (s.kind == StatisticSpec::Kind::BlEstimate) {
      needs_limit = true;
      needs_bl = true;
    }
  }
  if (needs_limit) ctx.limit = make_limit(config.ensemble);
  if (needs_bl) ctx.bl_grid.emplace(*ctx.limit);

  ExperimentResult result;
  result.config = config;
  const std::size_t total =
      config.degrees.size() * static_cast<std::size_t>(config.trials);
  result.trials.resize(total);

  const int workers = resolve_thread_count(threads);
  parallel_for(total, workers, [&](std::size_t task) {
    const std::size_t degree_idx = task / static_cast<std::size_t>(config.trials);
    const int trial_idx = static_cast<int>(task % static_cast<std::size_t>(config.trials));
    run_trial(ctx, degree_idx, trial_idx, result.trials[task]);
  });

  // Aggregates in fixed (degree, trial) order; independent of scheduling.
  for (std::size_t d = 0; d < config.degrees.size(); ++d) {
    DegreeAggregate agg;
    agg.n = config.degrees[d];
    std::map<std::string, std::vector<double>> values;
    for (int t = 0; t < config.trials; ++t) {
      const TrialRecord& rec =
          result.trials[d * static_cast<std::size_t>(config.trials) + static_cast<std::size_t>(t)];
      switch (rec.status) {
        case TrialRecord::Status::Ok:
          ++agg.successes;
          for (const auto& [name, v] : rec.scalars) values[name].push_back(v);
          break;
        case TrialRecord::Status::NoConvergence:
          ++agg.failures_no_convergence;
          break;
        case TrialRecord::Status::IdenticallyZero:
          ++agg.failures_identically_zero;
          break;
      }
    }
    for (auto& [name, vals] : values) {
      double mean = 0.0;
      for (double v : vals) mean += v;
      mean /= static_cast<double>(vals.size());
      std::vector<double> sorted(vals);
      std::sort(sorted.begin(), sorted.end());
      agg.stats[name] = {mean, quantile(sorted, 0.5), quantile(sorted, 0.1),
                         quantile(sorted, 0.9)};
    }
    result.per_degree.push_back(std::move(agg));
  }
  return result;
}

std::string summary_json(const ExperimentResult& result) {
  ordered_json j;
  j["config_echo"] = ordered_json::parse(result.config.to_json_text());
  ordered_json degrees = ordered_json::array();
  for (const auto& agg : result.per_degree) {
    ordered_json d;
    d["n"] = agg.n;
    ordered_json stats;
    for (const auto& [name, q] : agg.stats) {
      ordered_json s;
      s["mean"] = q[0];
      s["median"] = q[1];
      s["q10"] = q[2];
      s["q90"] = q[3];
      stats[name] = s;
    }
    d["stats"] = stats.is_null() ? ordered_json::object() : stats;
    d["successes"] = agg.successes;
    ordered_json failures;
    failures["no_convergence"] = agg.failures_no_convergence;
    failures["identically_zero"] = agg.failures_identically_zero;
    d["failures"] = failures;
    degrees.push_back(d);
  }
  j["per_degree"] = degrees;
  j["version"] = "0.1.0";
  return j.dump(2) + "\n";
}

std::string roots_csv(std::span<const Complex> roots) {
  std::vector<Complex> sorted(roots.begin(), roots.end());
  auto key = [](Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return std::make_pair(a, std::abs(z));
  };
  std::sort(sorted.begin(), sorted.end(),
            [&](Complex x, Complex y) { return key(x) < key(y); });
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& z : sorted) {
    append_scalar_csv(os, z.real());
    os << ',';
    append_scalar_csv(os, z.imag());
    os << '\n';
  }
  return os.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

}  // namespace

std::vector<std::string> emit(const ExperimentResult& result, EmitFormat format,
                              const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create output dir: " + dir);

  if (format == EmitFormat::Json) {
    const fs::path p = fs::path(dir) / "summary.json";
    write_file(p, summary_json(result));
    written.push_back(p.string());
    return written;
  }

  // Csv: per-trial table plus root dumps.
  std::ostringstream os;
  os << "degree,trial,status";
  for (const auto& s : result.config.statistics) os << ',' << s.name;
  os << '\n';
  for (const auto& rec : result.trials) {
    os << rec.degree << ',' << rec.trial << ',' << status_name(rec.status);
    for (const auto& s : result.config.statistics) {
      os << ',';
      const auto it = rec.scalars.find(s.name);
      if (it != rec.scalars.end()) append_scalar_csv(os, it->second);
    }
    os << '\n';
  }
  const fs::path trials_path = fs::path(dir) / "trials.csv";
  write_file(trials_path, os.str());
  written.push_back(trials_path.string());

  bool any_roots = false;
  for (const auto& rec : result.trials)
    if (!rec.root_file.empty()) any_roots = true;
  if (any_roots) {
    fs::create_directories(fs::path(dir) / "roots", ec);
    if (ec) throw std::ios_base::failure("cannot create roots dir under " + dir);
    for (const auto& rec : result.trials) {
      if (rec.root_file.empty()) continue;
      const fs::path p = fs::path(dir) / rec.root_file;
      write_file(p, roots_csv(rec.roots));
      written.push_back(p.string());
    }
  }
  return written;
}

}  // namespace eqdist
