#include "taut/psi_oracle.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <string>
#include <system_error>

#include <json.hpp>

#include "taut/errors.hpp"

namespace taut {

namespace {

// m!! for odd m >= -1, with (-1)!! = 1.
mpz_class odd_double_factorial(int m) {
  mpz_class out = 1;
  for (int f = m; f > 1; f -= 2) out *= f;
  return out;
}

Rational ratio(const mpz_class& num, const mpz_class& den) { return Rational(mpq_class(num, den)); }

bool is_stable(int genus, std::size_t n) { return 2 * genus - 2 + static_cast<int>(n) > 0; }

int exponent_sum(std::span<const int> exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::string describe(const IntersectionKey& key) {
  std::string s = "<";
  for (std::size_t i = 0; i < key.exponents.size(); ++i) {
    if (i) s += ' ';
    s += "tau_" + std::to_string(key.exponents[i]);
  }
  return s + ">_" + std::to_string(key.genus);
}

}  // namespace

IntersectionKey IntersectionKey::make(int genus, std::span<const int> exponents) {
  if (genus < 0) throw InvalidInput("negative genus");
  if (exponents.empty()) throw InvalidInput("need at least one marked point");
  if (!is_stable(genus, exponents.size())) {
    throw InvalidInput("unstable (g,n) = (" + std::to_string(genus) + "," +
                       std::to_string(exponents.size()) + "): 2g-2+n must be positive");
  }
  for (int k : exponents) {
    if (k < 0) throw InvalidInput("negative psi exponent " + std::to_string(k));
  }
  IntersectionKey key{genus, {exponents.begin(), exponents.end()}};
  std::sort(key.exponents.begin(), key.exponents.end());
  return key;
}

std::size_t IntersectionKeyHash::operator()(const IntersectionKey& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.genus);
  for (int k : key.exponents) h ^= std::hash<int>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// PsiCache

std::optional<Rational> PsiCache::get(const IntersectionKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void PsiCache::put(const IntersectionKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw IntegrityError("cache conflict for " + describe(key) + ": stored " + it->second.to_string() +
                         ", new " + value.to_string());
  }
}

std::size_t PsiCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void PsiCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

std::vector<std::pair<IntersectionKey, Rational>> PsiCache::snapshot() const {
  std::vector<std::pair<IntersectionKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(table_.begin(), table_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto& ka = a.first;
    const auto& kb = b.first;
    if (ka.genus != kb.genus) return ka.genus < kb.genus;
    if (ka.marks() != kb.marks()) return ka.marks() < kb.marks();
    return ka.exponents < kb.exponents;
  });
  return out;
}

void PsiCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    IntersectionKey key;
    Rational value;
    try {
      auto record = nlohmann::json::parse(line);
      auto exponents = record.at("k").get<std::vector<int>>();
      key = IntersectionKey::make(record.at("g").get<int>(), exponents);
      value = Rational::from_strings(record.at("num").get<std::string>(), record.at("den").get<std::string>());
    } catch (const std::exception& e) {
      throw IntegrityError(path.string() + ":" + std::to_string(lineno) + ": malformed cache record: " + e.what());
    }
    put(key, value);
  }
}

void PsiCache::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    for (const auto& [key, value] : snapshot()) {
      nlohmann::ordered_json record;
      record["g"] = key.genus;
      record["k"] = key.exponents;
      record["num"] = value.numerator_string();
      record["den"] = value.denominator_string();
      out << record.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// PsiOracle

Rational PsiOracle::psi_top(int genus, std::span<const int> exponents) {
  return psi_top(IntersectionKey::make(genus, exponents));
}

Rational PsiOracle::psi_top(const IntersectionKey& key) {
  if (exponent_sum(key.exponents) != key.dimension()) return Rational(0);
  if (auto hit = cache_.get(key)) return *hit;
  Rational value = compute(key);
  cache_.put(key, value);
  return value;
}

Rational PsiOracle::compute(const IntersectionKey& key) {
  const auto& k = key.exponents;
  if (key.genus == 0 && key.marks() == 3) return Rational(1);  // <tau_0^3>_0
  if (key.genus == 1 && key.marks() == 1) return genus_one_tau_one();

  bool has_zero = k.front() == 0;
  bool has_one = std::find(k.begin(), k.end(), 1) != k.end();
  bool dvv_applies = k.back() >= 2;
  if (strategy_ == Recursion::dvv_first && dvv_applies) return dvv(key);
  if (has_zero) return string_equation(key);
  if (has_one) return dilaton_equation(key);
  return dvv(key);
}

Rational PsiOracle::lookup(int genus, std::vector<int> exponents) {
  if (genus < 0 || exponents.empty() || !is_stable(genus, exponents.size())) return Rational(0);
  int dim = 3 * genus - 3 + static_cast<int>(exponents.size());
  if (exponent_sum(exponents) != dim) return Rational(0);
  return psi_top(IntersectionKey::make(genus, exponents));
}

// <tau_0 tau_D>_g = sum_{j: d_j > 0} <tau_D with d_j lowered by one>_g
Rational PsiOracle::string_equation(const IntersectionKey& key) {
  std::vector<int> rest(key.exponents.begin() + 1, key.exponents.end());
  Rational sum;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] == 0) continue;
    auto lowered = rest;
    --lowered[j];
    sum += lookup(key.genus, std::move(lowered));
  }
  return sum;
}

// <tau_1 tau_D>_g = (2g - 2 + |D|) <tau_D>_g
Rational PsiOracle::dilaton_equation(const IntersectionKey& key) {
  std::vector<int> rest = key.exponents;
  rest.erase(std::find(rest.begin(), rest.end(), 1));
  long factor = 2L * key.genus - 2 + static_cast<long>(rest.size());
  return Rational(factor) * lookup(key.genus, std::move(rest));
}

Rational PsiOracle::dvv(const IntersectionKey& key) {
  std::vector<int> rest = key.exponents;
  int top = rest.back();
  rest.pop_back();
  return dvv_rhs(key.genus, top - 1, rest, nullptr, nullptr);
}

Rational PsiOracle::dvv_rhs(int genus, int k, const std::vector<int>& rest, const IntersectionKey* unknown,
                            Rational* unknown_coef) {
  Rational sum;

  for (std::size_t j = 0; j < rest.size(); ++j) {
    auto raised = rest;
    raised[j] += k;
    Rational coef = ratio(odd_double_factorial(2 * k + 2 * rest[j] + 1), odd_double_factorial(2 * rest[j] - 1));
    if (unknown && is_stable(genus, raised.size()) && IntersectionKey::make(genus, raised) == *unknown) {
      *unknown_coef += coef;
      continue;
    }
    sum += coef * lookup(genus, std::move(raised));
  }

  const std::size_t n = rest.size();
  for (int r = 0; r <= k - 1; ++r) {
    int s = k - 1 - r;
    Rational coef = ratio(odd_double_factorial(2 * r + 1) * odd_double_factorial(2 * s + 1), 2);

    if (genus >= 1) {
      auto joined = rest;
      joined.push_back(r);
      joined.push_back(s);
      sum += coef * lookup(genus - 1, std::move(joined));
    }

    for (int g1 = 0; g1 <= genus; ++g1) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> left{r};
        std::vector<int> right{s};
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? left : right).push_back(rest[i]);
        Rational a = lookup(g1, std::move(left));
        if (a.is_zero()) continue;
        sum += coef * a * lookup(genus - g1, std::move(right));
      }
    }
  }

  Rational scale = ratio(1, odd_double_factorial(2 * k + 3));
  if (unknown_coef) *unknown_coef *= scale;
  return sum * scale;
}

// <tau_1>_1 has no recursion of its own. By the string equation it equals
// <tau_2 tau_0>_1, whose DVV expansion contains <tau_1>_1 again; solve
// x = c x + rest for x.
Rational PsiOracle::genus_one_tau_one() {
  const std::vector<int> tau_one{1};
  IntersectionKey unknown = IntersectionKey::make(1, tau_one);
  Rational coef;
  Rational rest = dvv_rhs(1, 1, {0}, &unknown, &coef);
  return rest / (Rational(1) - coef);
}

PsiOracle& default_oracle() {
  static PsiOracle oracle;
  return oracle;
}

Rational psi_top(int genus, std::span<const int> exponents) { return default_oracle().psi_top(genus, exponents); }

Rational psi_top_genus0_closed(std::span<const int> exponents) {
  const int n = static_cast<int>(exponents.size());
  if (n < 3) throw InvalidInput("genus-0 closed form needs n >= 3");
  for (int k : exponents) {
    if (k < 0) throw InvalidInput("negative psi exponent " + std::to_string(k));
  }
  if (exponent_sum(exponents) != n - 3) {
    throw InvalidInput("genus-0 closed form needs sum k_i = n - 3 = " + std::to_string(n - 3));
  }
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n - 3));
  mpz_class den = 1;
  for (int k : exponents) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    den *= f;
  }
  return ratio(num, den);
}

}  // namespace taut
