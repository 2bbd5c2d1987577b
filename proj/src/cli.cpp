#include "hurwitz/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz/burnside.hpp"
#include "hurwitz/cache.hpp"
#include "hurwitz/hurwitz_extract.hpp"
#include "hurwitz/kontsevich.hpp"
#include "hurwitz/topological_recursion.hpp"

namespace hurwitz::cli {

namespace {

constexpr int kMaxGenus = 8;
constexpr int kMaxDegree = 16;

/// A request the engine cannot serve (range, order, stability).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  Timer(bool on, std::ostream& err, std::string label) : on_(on), err_(err), label_(std::move(label)) {}
  ~Timer() {
    if (!on_) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    err_ << label_ << ": " << s << " s\n";
  }

 private:
  bool on_;
  std::ostream& err_;
  std::string label_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<std::string> cache_path(const RunConfig& config) {
  if (config.cache) return config.cache;
  if (const char* env = std::getenv("HURWITZ_CACHE"); env != nullptr && *env != '\0') return std::string(env);
  return std::nullopt;
}

void check_range(const RunConfig& config) {
  if (config.g_max > kMaxGenus) throw DataError("--g-max above " + std::to_string(kMaxGenus) + " is out of range");
  if (config.n_max > kMaxDegree) throw DataError("--n-max above " + std::to_string(kMaxDegree) + " is out of range");
}

int resolve_order(const RunConfig& config, int required) {
  if (config.trunc_order == 0) return required;
  if (config.trunc_order < required) {
    throw DataError("--trunc-order " + std::to_string(config.trunc_order) + " is below the required order " +
                    std::to_string(required));
  }
  return config.trunc_order;
}

/// Lambert engine with optional cache backing.
class Engine {
 public:
  Engine(int order, const RunConfig& config, std::ostream& err)
      : tr_(make_lambert_curve(order)), verbose_(config.verbose), err_(err) {
    if (auto path = cache_path(config)) {
      cache_.emplace(*path);
      cache_->load();
      const int used = cache_->apply(tr_);
      if (verbose_) err_ << cache_->last_message() << "; " << used << " entries match this engine\n";
    }
  }

  TopologicalRecursion& tr() { return tr_; }

  void persist() {
    if (!cache_) return;
    cache_->absorb(tr_);
    try {
      cache_->save();
    } catch (const std::exception& ex) {
      err_ << "warning: " << ex.what() << '\n';
    }
  }

 private:
  TopologicalRecursion tr_;
  std::optional<CacheFile> cache_;
  bool verbose_;
  std::ostream& err_;
};

std::string mu_csv(const Partition& mu) {
  std::string s;
  for (int p : mu.parts()) {
    if (!s.empty()) s += ';';
    s += std::to_string(p);
  }
  return s;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kRecursion: return "recursion";
    case Method::kOracle: return "oracle";
    case Method::kBoth: return "both";
  }
  return "";
}

struct SingleRow {
  int g;
  Partition mu;
  Rational value;
};

void emit_single(const std::vector<SingleRow>& rows, const char* method, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson: {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["g"] = r.g;
        row["mu"] = r.mu.parts();
        row[method] = to_string(r.value);
        j.push_back(std::move(row));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "g,mu,method,value\n";
      for (const auto& r : rows) out << r.g << ',' << mu_csv(r.mu) << ',' << method << ',' << to_string(r.value) << '\n';
      break;
    case Format::kText: {
      std::size_t w = 2;
      for (const auto& r : rows) w = std::max(w, r.mu.to_string().size());
      out << std::left << std::setw(3) << "g" << ' ' << std::setw(static_cast<int>(w)) << "mu" << ' ' << method << '\n';
      for (const auto& r : rows) {
        out << std::left << std::setw(3) << r.g << ' ' << std::setw(static_cast<int>(w)) << r.mu.to_string() << ' '
            << to_string(r.value) << '\n';
      }
      break;
    }
  }
}

void emit_report(const BmReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson: out << report.to_json().dump(2) << '\n'; break;
    case Format::kCsv:
      out << "g,mu,method,value\n";
      for (const auto& r : report.rows) {
        out << r.g << ',' << mu_csv(r.mu) << ",recursion," << to_string(r.recursion) << '\n';
        out << r.g << ',' << mu_csv(r.mu) << ",oracle," << to_string(r.oracle) << '\n';
      }
      break;
    case Format::kText: out << report.to_text(); break;
  }
}

void report_mismatch(const BmReport& report, std::ostream& err) {
  if (report.passed()) return;
  const BmRow& r = report.rows[*report.first_mismatch];
  err << "mismatch at g=" << r.g << " mu=" << r.mu.to_string() << ": recursion " << to_string(r.recursion)
      << " vs oracle " << to_string(r.oracle) << '\n';
}

BmReport run_bm(const RunConfig& config, std::ostream& err) {
  check_range(config);
  const int order = resolve_order(config, required_order(config.g_max, config.n_max));
  Engine engine(order, config, err);
  BmReport report;
  {
    Timer t(config.verbose, err, "recursion + oracle");
    const HurwitzOracle oracle = HurwitzOracle::for_range(config.g_max, config.n_max);
    report = verify_bm(engine.tr(), oracle, config.g_max, config.n_max);
  }
  engine.persist();
  return report;
}

using Check = std::pair<std::string, bool>;

int emit_checks(const std::vector<Check>& checks, std::ostream& out, std::ostream& err) {
  bool ok = true;
  for (const auto& [name, pass] : checks) {
    out << (pass ? "ok   " : "FAIL ") << name << '\n';
    if (!pass) {
      err << "failed: " << name << '\n';
      ok = false;
    }
  }
  return ok ? kOk : kMismatch;
}

std::vector<Check> times_checks() {
  std::vector<Check> c;
  const TimesSequence curve = times_from_curve(19);
  const TimesSequence rec = times_by_recursion(20);
  c.emplace_back("t_2 = " + to_string(curve.t(2)), curve.t(2) == 0);
  c.emplace_back("t_3 = " + to_string(curve.t(3)), curve.t(3) == 3);
  c.emplace_back("t_4 = " + to_string(curve.t(4)), curve.t(4) == Rational(1, 3));
  for (int m = 5; m <= 20; ++m) {
    c.emplace_back("t_" + std::to_string(m) + " = " + to_string(curve.t(m)) + " (curve) = " + to_string(rec.t(m)) +
                       " (recursion)",
                   curve.t(m) == rec.t(m));
  }
  const Series y = y_of_xi(6);
  const std::vector<Rational> y_expected{1, 1, Rational(1, 3), Rational(1, 36), Rational(-1, 270), Rational(1, 4320)};
  for (int m = 0; m < 6; ++m) {
    c.emplace_back("[xi^" + std::to_string(m) + "] y = " + to_string(y.coeff(m)), y.coeff(m) == y_expected[m]);
  }
  const Series g = g_series(9);
  const std::vector<Rational> g_expected{0, Rational(-1, 6), 0, Rational(1, 45), 0, Rational(-8, 315), 0, Rational(8, 105), 0};
  for (int m = 0; m < 9; ++m) {
    c.emplace_back("[z^" + std::to_string(m) + "] g = " + to_string(g.coeff(m)), g.coeff(m) == g_expected[m]);
  }
  return c;
}

std::vector<Check> series_checks() {
  std::vector<Check> c;
  const int n = 14;
  const Series w = Series::monomial(1, 1);
  const Series a = Series::from_coefficients(1, {1, 2, -1, Rational(1, 3)});
  const Series b = Series::from_coefficients(0, {2, -1, 0, 5}, n);
  const Series d = Series::from_coefficients(-2, {1, 0, Rational(-1, 7)}, n);
  c.emplace_back("commutativity a*b = b*a", mul(a, b, n) == mul(b, a, n));
  c.emplace_back("associativity (a*b)*d = a*(b*d)", agrees(mul(mul(a, b, n), d, n), mul(a, mul(b, d, n), n)));
  c.emplace_back("distributivity a*(b+d) = a*b + a*d", agrees(mul(a, b + d, n), mul(a, b, n) + mul(a, d, n)));
  c.emplace_back("b * b^{-1} = 1", agrees(mul(b, invert_unit(b, n), n), Series::constant(1)));
  c.emplace_back("d * d^{-1} = 1", agrees(mul(d, invert_unit(d, n), n), Series::constant(1)));
  const Series r = reversion(a, n);
  c.emplace_back("a(reversion(a)) = w", agrees(compose(a, r, n), w));
  c.emplace_back("reversion(a)(a) = w", agrees(compose(r, a, n), w));
  const Series x = mul(w, b, n);
  c.emplace_back("exp(log1p(x)) = 1 + x", agrees(exp(log1p(x, n), n), Series::constant(1) + x));
  c.emplace_back("log1p(exp(x) - 1) = x", agrees(log1p(exp(x, n) - Series::constant(1), n), x));
  c.emplace_back("exp(x + a) = exp(x) exp(a)", agrees(exp(x + a, n), mul(exp(x, n), exp(a, n), n)));
  c.emplace_back("Res d(series) = 0", residue(derivative(d)) == 0);
  c.emplace_back("d/dw of integral = identity", derivative(integral(b)) == b);
  const Series lam = lambert_series(13);
  bool lam_ok = lam.coeff(0) == 0;
  for (int m = 1; m <= 12; ++m) {
    lam_ok = lam_ok && lam.coeff(m) == pow(Rational(m), static_cast<unsigned>(m - 1)) / Rational(factorial(static_cast<unsigned>(m)));
  }
  c.emplace_back("Lambert series m^{m-1}/m! for m <= 12", lam_ok);
  return c;
}

}  // namespace

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  check_range(config);
  if (config.method == Method::kBoth) {
    const BmReport report = run_bm(config, err);
    emit_report(report, config.format, out);
    report_mismatch(report, err);
    return report.passed() ? kOk : kMismatch;
  }
  std::vector<SingleRow> rows;
  if (config.method == Method::kOracle) {
    Timer t(config.verbose, err, "oracle");
    const HurwitzOracle oracle = HurwitzOracle::for_range(config.g_max, config.n_max);
    for (int g = 0; g <= config.g_max; ++g) {
      for (int n = 1; n <= config.n_max; ++n) {
        for (const Partition& mu : partitions_of(n)) rows.push_back({g, mu, oracle.hurwitz(g, mu)});
      }
    }
  } else {
    const int order = resolve_order(config, required_order(config.g_max, config.n_max));
    Engine engine(order, config, err);
    {
      Timer t(config.verbose, err, "recursion");
      PoleFactorTable factors(config.n_max);
      std::map<std::pair<int, int>, HSeries> series;
      for (const auto& [g, mu] : stable_range(config.g_max, config.n_max)) {
        const std::pair<int, int> key{g, mu.length()};
        auto it = series.find(key);
        if (it == series.end()) it = series.emplace(key, h_series(engine.tr(), g, mu.length(), factors)).first;
        rows.push_back({g, mu, extract_hurwitz(it->second, g, mu)});
      }
    }
    engine.persist();
  }
  emit_single(rows, method_name(config.method), config.format, out);
  return kOk;
}

int cmd_wkg(int g, int k, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!TopologicalRecursion::is_stable(g, k)) {
    std::string what = "W_" + std::to_string(k) + "^(" + std::to_string(g) + ") is not computed by the recursion";
    if (g == 0 && k == 2) what += ": it is the Bergman kernel base case B(z1,z2) = dz1 dz2/(z1-z2)^2";
    if (g == 0 && k == 1) what += ": it is the curve data W_1^(0) = -y dx";
    throw DataError(what + " (stable range is 2g-2+k > 0)");
  }
  if (g > kMaxGenus || k > kMaxDegree) throw DataError("(g, k) beyond the supported range");
  const int order = resolve_order(config, std::max(8, TopologicalRecursion::default_order(g, k)));
  Engine engine(order, config, err);
  const PoleForm* form = nullptr;
  {
    Timer t(config.verbose, err, "recursion");
    form = &engine.tr().w(g, k);
  }
  out << form->to_json(g).dump() << '\n';
  engine.persist();
  return kOk;
}

int cmd_check(const std::string& suite, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (suite == "bm") {
    const BmReport report = run_bm(config, err);
    emit_report(report, config.format, out);
    report_mismatch(report, err);
    return report.passed() ? kOk : kMismatch;
  }
  if (suite == "elsv") {
    const ElsvReport report = elsv_consistency();
    if (config.format == Format::kJson) {
      out << report.to_json().dump(2) << '\n';
    } else {
      out << report.to_text();
    }
    if (!report.passed()) err << "ELSV consistency failed\n";
    return report.passed() ? kOk : kMismatch;
  }
  if (suite == "times") return emit_checks(times_checks(), out, err);
  if (suite == "series") return emit_checks(series_checks(), out, err);
  err << "unknown suite '" << suite << "' (expected bm, elsv, times or series)\n";
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple Hurwitz numbers from topological recursion on the Lambert curve and from characters"};
  app.require_subcommand(1);
  RunConfig config;
  std::string method = "both";
  std::string format = "text";
  std::string cache;

  app.add_option("--g-max", config.g_max, "largest genus")->capture_default_str();
  app.add_option("--n-max", config.n_max, "largest degree |mu|")->capture_default_str();
  app.add_option("--trunc-order", config.trunc_order, "series truncation order (default: engine bound)");
  app.add_option("--method", method, "recursion, oracle or both")
      ->check(CLI::IsMember({"recursion", "oracle", "both"}))
      ->capture_default_str();
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--cache", cache, "memo cache file (overrides $HURWITZ_CACHE)");
  app.add_flag("-v,--verbose", config.verbose, "timings and cache diagnostics on stderr");

  auto* table = app.add_subcommand("table", "tabulate H_{g,mu} for g <= g-max, |mu| <= n-max");
  table->fallthrough();
  auto* wkg = app.add_subcommand("wkg", "print W_k^(g) as canonical JSON");
  wkg->fallthrough();
  int g = 0;
  int k = 0;
  wkg->add_option("g", g, "genus")->required();
  wkg->add_option("k", k, "number of points")->required();
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->fallthrough();
  std::string suite;
  check->add_option("suite", suite, "bm, elsv, times or series")
      ->required()
      ->check(CLI::IsMember({"bm", "elsv", "times", "series"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  if (config.g_max < 0) {
    err << "--g-max must be >= 0\n";
    return kUsage;
  }
  if (config.n_max < 1) {
    err << "--n-max must be >= 1\n";
    return kUsage;
  }
  if (config.trunc_order < 0) {
    err << "--trunc-order must be positive\n";
    return kUsage;
  }
  config.method = method == "recursion" ? Method::kRecursion : method == "oracle" ? Method::kOracle : Method::kBoth;
  config.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  if (!cache.empty()) config.cache = cache;

  try {
    if (*table) return cmd_table(config, out, err);
    if (*wkg) return cmd_wkg(g, k, config, out, err);
    return cmd_check(suite, config, out, err);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const InsufficientOrderError& e) {
    err << "error: " << e.what() << " (raise --trunc-order)\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace hurwitz::cli
