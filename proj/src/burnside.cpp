#include "hurwitz/burnside.hpp"

#include <stdexcept>
#include <string>

#include "hurwitz/characters.hpp"

namespace hurwitz {

Rational cov_disconnected(const Partition& mu, int b) {
  if (b < 0) throw std::invalid_argument("cov_disconnected: negative number of branch points");
  const int n = mu.size();
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  Rational total;
  for (const Partition& lambda : partitions_of(n)) {
    const Rational f2 = f_C2_content(lambda);
    if (b > 0 && f2 == 0) continue;
    const Rational fmu = f_central(lambda, mu);
    if (fmu == 0) continue;
    Rational weight(dim_irrep(lambda), n_fact);
    weight.canonicalize();
    total += weight * weight * fmu * pow(f2, static_cast<unsigned>(b));
  }
  return total;
}

int simple_branch_count(int g, const Partition& mu) { return 2 * g - 2 + mu.size() + mu.length(); }

PSeriesZ::PSeriesZ(int n_max, int b_max) : n_max_(n_max), b_max_(b_max) {
  if (n_max < 0 || b_max < 0) throw std::invalid_argument("PSeriesZ: bounds must be nonnegative");
}

PSeriesZ PSeriesZ::disconnected_covers(int n_max, int b_max) {
  PSeriesZ z(n_max, b_max);
  for (int n = 0; n <= n_max; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      for (int b = 0; b <= b_max; ++b) {
        const Rational cov = cov_disconnected(mu, b);
        if (cov == 0) continue;
        z.add_term(mu, b - mu.size() - mu.length(), cov / Rational(factorial(static_cast<unsigned>(b))));
      }
    }
  }
  return z;
}

bool PSeriesZ::in_bounds(const Partition& mu, int gs_exponent) const {
  const int b = simple_branch_points(mu, gs_exponent);
  return mu.size() <= n_max_ && b >= 0 && b <= b_max_;
}

Rational PSeriesZ::coeff(const Partition& mu, int gs_exponent) const {
  if (!in_bounds(mu, gs_exponent)) {
    throw std::out_of_range("PSeriesZ: monomial " + mu.to_string() + " g_s^" + std::to_string(gs_exponent) +
                            " is outside the truncation bounds");
  }
  auto it = terms_.find({mu, gs_exponent});
  return it == terms_.end() ? Rational(0) : it->second;
}

void PSeriesZ::add_term(const Partition& mu, int gs_exponent, const Rational& c) {
  if (c == 0 || !in_bounds(mu, gs_exponent)) return;
  auto [it, inserted] = terms_.try_emplace({mu, gs_exponent}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PSeriesZ PSeriesZ::operator+(const PSeriesZ& other) const {
  PSeriesZ r(std::min(n_max_, other.n_max_), std::min(b_max_, other.b_max_));
  for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
  for (const auto& [k, c] : other.terms_) r.add_term(k.first, k.second, c);
  return r;
}

PSeriesZ PSeriesZ::operator*(const PSeriesZ& other) const {
  PSeriesZ r(std::min(n_max_, other.n_max_), std::min(b_max_, other.b_max_));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      if (ka.first.size() + kb.first.size() > r.n_max_) continue;
      r.add_term(ka.first.merged(kb.first), ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

PSeriesZ PSeriesZ::scaled(const Rational& s) const {
  PSeriesZ r(n_max_, b_max_);
  for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
  return r;
}

std::pair<Rational, PSeriesZ> PSeriesZ::split_constant() const {
  Rational constant;
  PSeriesZ rest(n_max_, b_max_);
  for (const auto& [k, c] : terms_) {
    if (k.first.empty()) {
      if (k.second != 0) throw std::domain_error("PSeriesZ: t^0 part carries a g_s dependence");
      constant = c;
    } else {
      rest.add_term(k.first, k.second, c);
    }
  }
  return {constant, rest};
}

PSeriesZ PSeriesZ::log() const {
  auto [constant, x] = split_constant();
  if (constant != 1) throw std::domain_error("PSeriesZ::log: constant term must be 1");
  // ln(1 + X) = sum_{j>=1} (-1)^{j+1} X^j / j; X^j has t-degree >= j.
  PSeriesZ result(n_max_, b_max_);
  PSeriesZ x_power = x;
  for (int j = 1; j <= n_max_; ++j) {
    result = result + x_power.scaled(Rational(j % 2 == 1 ? 1 : -1, j));
    if (j < n_max_) x_power = x_power * x;
  }
  return result;
}

PSeriesZ PSeriesZ::exp() const {
  auto [constant, x] = split_constant();
  if (constant != 0) throw std::domain_error("PSeriesZ::exp: constant term must vanish");
  PSeriesZ result(n_max_, b_max_);
  result.add_term(Partition{}, 0, 1);
  PSeriesZ x_power = x;
  BigInt j_fact = 1;
  for (int j = 1; j <= n_max_; ++j) {
    j_fact *= j;
    result = result + x_power.scaled(Rational(1) / Rational(j_fact));
    if (j < n_max_) x_power = x_power * x;
  }
  return result;
}

HurwitzOracle::HurwitzOracle(int n_max, int b_max)
    : z_(PSeriesZ::disconnected_covers(n_max, b_max)), f_(z_.log()) {}

HurwitzOracle HurwitzOracle::for_range(int g_max, int n_max) {
  return HurwitzOracle(n_max, std::max(0, 2 * g_max - 2 + 2 * n_max));
}

Rational HurwitzOracle::hurwitz(int g, const Partition& mu) const {
  const int b = simple_branch_count(g, mu);
  if (g < 0 || b < 0) {
    throw std::invalid_argument("hurwitz: no covers with g = " + std::to_string(g) + " and profile " +
                                mu.to_string());
  }
  if (mu.size() > n_max() || b > b_max()) {
    throw std::out_of_range("hurwitz: (g = " + std::to_string(g) + ", mu = " + mu.to_string() +
                            ") exceeds the oracle bounds n_max = " + std::to_string(n_max()) +
                            ", b_max = " + std::to_string(b_max()));
  }
  return Rational(factorial(static_cast<unsigned>(b))) * f_.coeff(mu, 2 * g - 2);
}

}  // namespace hurwitz
