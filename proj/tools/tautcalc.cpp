// tautcalc: exact psi / omega / kappa intersection numbers on moduli spaces of curves.
//
// Exit codes: 0 success, 1 usage error, 2 integrity error.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taut/errors.hpp"
#include "taut/omega_kappa.hpp"
#include "taut/pinwheel.hpp"
#include "taut/psi_oracle.hpp"
#include "taut/render.hpp"
#include "taut/selftest.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsageError = 1;
constexpr int kIntegrityError = 2;
constexpr const char* kCacheEnv = "TAUTCALC_CACHE_DIR";
constexpr const char* kCacheFile = "psi_cache.ndjson";

struct Options {
  int genus = -1;
  std::string exponents;
  std::string format = "plain";
  std::string cache_dir;
  bool simplify = false;
  bool full_series = false;
  int marks = 0;
  std::string kind = "psi";
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw taut::InvalidInput("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw taut::InvalidInput("not an integer: '" + item + "'");
    if (value < 0) throw taut::InvalidInput("exponents must be non-negative, got " + item);
    out.push_back(value);
  }
  if (out.empty()) throw taut::InvalidInput("empty exponent list");
  return out;
}

std::optional<fs::path> cache_path(const Options& opt) {
  std::string dir = opt.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return fs::path(dir) / kCacheFile;
}

// Runs `body` against the default oracle with the persistent cache loaded
// before and written back after.
void with_cache(const Options& opt, const std::function<void()>& body) {
  auto path = cache_path(opt);
  if (path) taut::default_oracle().cache().load(*path);
  body();
  if (path) taut::default_oracle().cache().save(*path);
}

// Non-increasing vectors of length `parts` summing to `total`.
void for_each_multiset(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int, int)> rec = [&](int i, int left, int cap) {
    if (i == parts) {
      if (left == 0) f(v);
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      if (x * (parts - i) < left) break;
      v[i] = x;
      rec(i + 1, left - x, x);
    }
  };
  rec(0, total, total);
}

void cmd_table(const Options& opt) {
  if (opt.marks < 1) throw taut::InvalidInput("table needs --marks >= 1");
  const auto format = taut::parse_output_format(opt.format);
  std::function<taut::Rational(const std::vector<int>&)> value;
  int total = 0;
  if (opt.kind == "psi") {
    total = 3 * opt.genus - 3 + opt.marks;
    value = [&](const std::vector<int>& k) { return taut::psi_top(opt.genus, k); };
  } else if (opt.kind == "omega") {
    total = 3 * opt.genus - 3 + opt.marks;
    value = [&](const std::vector<int>& k) { return taut::omega_top(taut::OmegaMonomial(opt.genus, k)); };
  } else if (opt.kind == "kappa") {
    total = 3 * opt.genus - 3;
    value = [&](const std::vector<int>& l) { return taut::kappa_top(taut::KappaMonomial(opt.genus, l)); };
  } else {
    throw taut::InvalidInput("unknown table kind '" + opt.kind + "' (expected psi, omega, kappa)");
  }
  // Validates (g, n) up front so an empty table still reports bad input.
  if (opt.kind == "psi") taut::IntersectionKey::make(opt.genus, std::vector<int>(opt.marks, 0));
  if (opt.kind == "omega") taut::OmegaMonomial(opt.genus, std::vector<int>(opt.marks, 0));
  if (opt.kind == "kappa") taut::KappaMonomial(opt.genus, std::vector<int>(opt.marks, 0));

  auto rows = nlohmann::ordered_json::array();
  std::ostringstream out;
  for_each_multiset(total, opt.marks, [&](const std::vector<int>& k) {
    taut::Rational v = value(k);
    std::string key;
    for (std::size_t i = 0; i < k.size(); ++i) key += (i ? "," : "") + std::to_string(k[i]);
    switch (format) {
      case taut::OutputFormat::plain:
        out << key << '\t' << v << '\n';
        break;
      case taut::OutputFormat::json: {
        nlohmann::ordered_json row;
        row["exponents"] = k;
        row["num"] = v.numerator_string();
        row["den"] = v.denominator_string();
        rows.push_back(row);
        break;
      }
      case taut::OutputFormat::latex:
        out << key << " & " << taut::render_value(v, format) << " \\\\\n";
        break;
    }
  });
  if (format == taut::OutputFormat::json) out << rows.dump() << '\n';
  std::cout << out.str();
}

int cmd_selftest(const Options& opt) {
  if (auto path = cache_path(opt)) {
    // Every persisted value must match a cold recomputation.
    taut::PsiCache stored;
    stored.load(*path);
    taut::PsiOracle cold;
    for (const auto& [key, value] : stored.snapshot()) {
      taut::Rational fresh = cold.psi_top(key);
      if (fresh != value) {
        throw taut::IntegrityError("cached value " + value.to_string() + " disagrees with recomputed " +
                                   fresh.to_string() + " in " + path->string());
      }
    }
    std::cout << "cache " << path->string() << ": " << stored.size() << " records verified\n";
  }
  int failed = 0;
  for (const auto& r : taut::run_selftest()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      std::cout << ": " << r.detail;
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << '\n';
  return failed ? kIntegrityError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection numbers of psi, omega and kappa classes on moduli spaces of curves"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "plain, json or latex")->check(CLI::IsMember({"plain", "json", "latex"}));
    sub->add_option("--cache-dir", opt.cache_dir, std::string("persistent cache directory (default: $") + kCacheEnv + ")");
  };

  auto* psi = app.add_subcommand("psi", "<tau_k1 ... tau_kn>_g");
  psi->add_option("--genus", opt.genus)->required();
  psi->add_option("--exponents", opt.exponents, "comma separated, e.g. 4,0,0")->required();
  add_common(psi);

  auto* omega = app.add_subcommand("omega", "integral of prod omega_i^{k_i} over Mbar_{g,n}");
  omega->add_option("--genus", opt.genus)->required();
  omega->add_option("--exponents", opt.exponents)->required();
  add_common(omega);

  auto* kappa = app.add_subcommand("kappa", "integral of prod kappa_{l_i} over Mbar_g");
  kappa->add_option("--genus", opt.genus)->required();
  kappa->add_option("--indices", opt.exponents)->required();
  add_common(kappa);

  auto* expand = app.add_subcommand("expand", "expand prod omega_i^{k_i} over pinwheel strata");
  expand->add_option("--genus", opt.genus)->required();
  expand->add_option("--exponents", opt.exponents)->required();
  expand->add_flag("--simplify", opt.simplify, "drop terms vanishing on the genus-g spine for degree reasons");
  expand->add_flag("--full-series", opt.full_series, "keep every term of the geometric series");
  add_common(expand);

  auto* table = app.add_subcommand("table", "all top intersections for fixed (g, n)");
  table->add_option("--kind", opt.kind, "psi, omega or kappa")->check(CLI::IsMember({"psi", "omega", "kappa"}));
  table->add_option("--genus", opt.genus)->required();
  table->add_option("--marks", opt.marks, "number of classes in the monomial")->required();
  add_common(table);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--cache-dir", opt.cache_dir);

  auto* cache = app.add_subcommand("cache", "inspect or clear the persistent cache");
  cache->require_subcommand(1);
  auto* inspect = cache->add_subcommand("inspect", "show the cache location and record count");
  auto* clear = cache->add_subcommand("clear", "delete the cache file");
  inspect->add_option("--cache-dir", opt.cache_dir);
  clear->add_option("--cache-dir", opt.cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(opt);

    if (cache->parsed()) {
      auto path = cache_path(opt);
      if (!path) throw taut::InvalidInput(std::string("no cache directory (use --cache-dir or $") + kCacheEnv + ")");
      if (inspect->parsed()) {
        taut::PsiCache c;
        c.load(*path);
        std::cout << path->string() << '\n'
                  << (fs::exists(*path) ? std::to_string(c.size()) + " records" : std::string("no cache file"))
                  << '\n';
      } else if (clear->parsed()) {
        std::cout << (fs::remove(*path) ? "removed " : "nothing to remove at ") << path->string() << '\n';
      }
      return 0;
    }

    const auto format = taut::parse_output_format(opt.format);
    with_cache(opt, [&] {
      if (psi->parsed()) {
        std::cout << taut::render_value(taut::psi_top(opt.genus, parse_list(opt.exponents)), format) << '\n';
      } else if (omega->parsed()) {
        taut::OmegaMonomial m(opt.genus, parse_list(opt.exponents));
        std::cout << taut::render_value(taut::omega_top(m), format) << '\n';
      } else if (kappa->parsed()) {
        taut::KappaMonomial m(opt.genus, parse_list(opt.exponents));
        std::cout << taut::render_value(taut::kappa_top(m), format) << '\n';
      } else if (expand->parsed()) {
        taut::OmegaMonomial m(opt.genus, parse_list(opt.exponents));
        auto terms = taut::expand_graph_formula(m, {.full_series = opt.full_series, .simplify = opt.simplify});
        std::cout << taut::render_terms(m, terms, format) << '\n';
      } else if (table->parsed()) {
        cmd_table(opt);
      }
    });
    return 0;
  } catch (const taut::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kIntegrityError;
  } catch (const taut::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
