#include "hurwitz/hurwitz_extract.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Series lambert_series(int order) {
  if (order < 1) throw std::invalid_argument("lambert_series: order must be >= 1");
  // v = z e^{-z}
  const Series v_of_z = mul(Series::monomial(1, 1), exp(Series::monomial(-1, 1), order), order);
  return reversion(v_of_z, order);
}

Series pole_factor_series(int a, int order) {
  if (a < 1) throw std::invalid_argument("pole_factor_series: pole order must be >= 1");
  if (order < 1) throw std::invalid_argument("pole_factor_series: order must be >= 1");
  const Series one_minus_z = Series::from_coefficients(0, {1, -1});
  Series outer = mul(Series::monomial(a % 2 == 0 ? 1 : -1, 1), power(one_minus_z, -(a + 1), order), order);
  return compose(outer, lambert_series(order), order);
}

const std::vector<Rational>& PoleFactorTable::factor(int a) {
  auto it = table_.find(a);
  if (it != table_.end()) return it->second;
  const Series s = pole_factor_series(a, n_max_ + 1);
  std::vector<Rational> c(static_cast<std::size_t>(n_max_ + 1));
  for (int m = 0; m <= n_max_; ++m) c[static_cast<std::size_t>(m)] = s.coeff(m);
  return table_.emplace(a, std::move(c)).first->second;
}

Rational HSeries::coeff(const Exponents& e) const {
  if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("HSeries: wrong number of exponents");
  if (std::accumulate(e.begin(), e.end(), 0) > n_max_) throw std::out_of_range("HSeries: total degree beyond n_max");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 1; })) return 0;
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void HSeries::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto& slot = coeffs_[e];
  slot += c;
  if (slot == 0) coeffs_.erase(e);
}

bool HSeries::is_symmetric() const {
  for (const auto& [e, c] : coeffs_) {
    Exponents p = e;
    std::sort(p.begin(), p.end());
    do {
      auto it = coeffs_.find(p);
      if (it == coeffs_.end() || it->second != c) return false;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return true;
}

bool HSeries::vanishes_on_zero_exponents() const {
  return std::none_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) {
    return std::any_of(kv.first.begin(), kv.first.end(), [](int x) { return x < 1; });
  });
}

namespace {

void compositions(int k, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  const int left = k - static_cast<int>(cur.size()) - 1;
  for (int e = 1; e + left <= budget; ++e) {
    cur.push_back(e);
    compositions(k, budget - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HSeries h_series(TopologicalRecursion& tr, int g, int k, PoleFactorTable& factors) {
  const PoleForm& w = tr.w(g, k);
  HSeries hs(k, factors.n_max());
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  compositions(k, factors.n_max(), cur, tuples);
  std::map<HSeries::Exponents, Rational> acc;
  for (const auto& [a, c] : w.terms()) {
    std::vector<const std::vector<Rational>*> f;
    f.reserve(a.size());
    for (int ai : a) f.push_back(&factors.factor(ai));
    for (const auto& e : tuples) {
      Rational term = c;
      for (std::size_t i = 0; i < e.size() && term != 0; ++i) term *= (*f[i])[static_cast<std::size_t>(e[i])];
      if (term != 0) acc[e] += term;
    }
  }
  for (const auto& [e, c] : acc) hs.add(e, c);
  return hs;
}

HSeries h_series(TopologicalRecursion& tr, int g, int k, int n_max) {
  PoleFactorTable factors(n_max);
  return h_series(tr, g, k, factors);
}

HSeries h_series(int g, int k, int n_max) {
  TopologicalRecursion tr(make_lambert_curve(std::max(8, TopologicalRecursion::default_order(g, k))));
  return h_series(tr, g, k, n_max);
}

Rational extract_hurwitz_at(const HSeries& hs, int g, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != hs.arity()) {
    throw std::invalid_argument("extract_hurwitz: length(mu) must equal the arity of the series");
  }
  const Partition mu = Partition::from_unsorted(exponents);
  if (mu.size() > hs.n_max()) throw std::out_of_range("extract_hurwitz: |mu| exceeds n_max of the series");
  const int b = simple_branch_count(g, mu);
  if (b < 0) throw std::invalid_argument("extract_hurwitz: negative number of branch points");
  Rational prod_parts = 1;
  for (int p : mu.parts()) prod_parts *= p;
  return hs.coeff(exponents) * Rational(factorial(static_cast<unsigned>(b))) /
         (prod_parts * Rational(mu.automorphisms()));
}

Rational extract_hurwitz(const HSeries& hs, int g, const Partition& mu) {
  return extract_hurwitz_at(hs, g, mu.parts());
}

std::vector<std::pair<int, Partition>> stable_range(int g_max, int n_max) {
  std::vector<std::pair<int, Partition>> out;
  for (int g = 0; g <= g_max; ++g) {
    for (int n = 1; n <= n_max; ++n) {
      for (const Partition& mu : partitions_of(n)) {
        if (TopologicalRecursion::is_stable(g, mu.length())) out.emplace_back(g, mu);
      }
    }
  }
  return out;
}

int required_order(int g_max, int n_max) {
  return std::max(8, TopologicalRecursion::default_order(std::max(g_max, 0), std::max(n_max, 1)));
}

BmReport verify_bm(TopologicalRecursion& tr, const HurwitzOracle& oracle, int g_max, int n_max) {
  BmReport report;
  report.g_max = g_max;
  report.n_max = n_max;
  PoleFactorTable factors(n_max);
  std::map<std::pair<int, int>, HSeries> series;
  for (const auto& [g, mu] : stable_range(g_max, n_max)) {
    const std::pair<int, int> key{g, mu.length()};
    auto it = series.find(key);
    if (it == series.end()) it = series.emplace(key, h_series(tr, g, mu.length(), factors)).first;
    BmRow row{g, mu, extract_hurwitz(it->second, g, mu), oracle.hurwitz(g, mu), false};
    row.equal = row.recursion == row.oracle;
    if (!row.equal && !report.first_mismatch) report.first_mismatch = report.rows.size();
    report.rows.push_back(std::move(row));
  }
  return report;
}

BmReport verify_bm(int g_max, int n_max, SignConvention sign) {
  TopologicalRecursion tr(make_lambert_curve(required_order(g_max, n_max), std::move(sign)));
  const HurwitzOracle oracle = HurwitzOracle::for_range(std::max(g_max, 0), std::max(n_max, 1));
  return verify_bm(tr, oracle, g_max, n_max);
}

nlohmann::ordered_json BmReport::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const BmRow& r : rows) {
    nlohmann::ordered_json row;
    row["g"] = r.g;
    row["mu"] = r.mu.parts();
    row["recursion"] = to_string(r.recursion);
    row["oracle"] = to_string(r.oracle);
    row["equal"] = r.equal;
    out.push_back(std::move(row));
  }
  return out;
}

std::string BmReport::to_text() const {
  std::size_t w_mu = 2, w_rec = 9, w_or = 6;
  for (const BmRow& r : rows) {
    w_mu = std::max(w_mu, r.mu.to_string().size());
    w_rec = std::max(w_rec, to_string(r.recursion).size());
    w_or = std::max(w_or, to_string(r.oracle).size());
  }
  std::ostringstream os;
  os << std::left << std::setw(3) << "g" << ' ' << std::setw(static_cast<int>(w_mu)) << "mu" << ' '
     << std::setw(static_cast<int>(w_rec)) << "recursion" << ' ' << std::setw(static_cast<int>(w_or)) << "oracle"
     << " equal\n";
  for (const BmRow& r : rows) {
    os << std::left << std::setw(3) << r.g << ' ' << std::setw(static_cast<int>(w_mu)) << r.mu.to_string() << ' '
       << std::setw(static_cast<int>(w_rec)) << to_string(r.recursion) << ' ' << std::setw(static_cast<int>(w_or))
       << to_string(r.oracle) << ' ' << (r.equal ? "yes" : "NO") << '\n';
  }
  if (first_mismatch) {
    const BmRow& r = rows[*first_mismatch];
    os << "first mismatch: g=" << r.g << " mu=" << r.mu.to_string() << " recursion=" << to_string(r.recursion)
       << " oracle=" << to_string(r.oracle) << '\n';
  } else {
    os << rows.size() << " cases, all equal\n";
  }
  return os.str();
}

}  // namespace hurwitz
