#include "hurwitz/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hurwitz {

namespace {

constexpr int kExact = Series::kExact;

int sat_add(int x, int y) {
  if (x >= kExact || y >= kExact) return kExact;
  return std::min(x + y, kExact);
}

}  // namespace

Series::Series(int min, std::vector<Rational> coeffs, int trunc)
    : min_(min), coeffs_(std::move(coeffs)), trunc_(std::min(trunc, kExact)) {
  normalize();
}

void Series::normalize() {
  if (!is_exact() && stored_end() > trunc_) {
    const int keep = std::max(0, trunc_ - min_);
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_ = trunc_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_ += static_cast<int>(lead);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Series Series::zero(int trunc_order) { return Series(trunc_order, {}, trunc_order); }

Series Series::constant(const Rational& c, int trunc_order) { return Series(0, {c}, trunc_order); }

Series Series::monomial(const Rational& c, int exponent, int trunc_order) {
  return Series(exponent, {c}, trunc_order);
}

Series Series::from_coefficients(int min_exponent, std::vector<Rational> coeffs, int trunc_order) {
  return Series(min_exponent, std::move(coeffs), trunc_order);
}

Rational Series::coeff(int n) const {
  if (n >= trunc_) {
    throw TruncationError("coefficient at exponent " + std::to_string(n) + " is beyond truncation order " +
                          std::to_string(trunc_));
  }
  if (n < min_ || n >= stored_end()) return 0;
  return coeffs_[static_cast<std::size_t>(n - min_)];
}

Series Series::truncated(int order) const {
  if (order >= trunc_) return *this;
  return Series(min_, coeffs_, order);
}

Series Series::shifted(int k) const {
  if (is_zero()) return zero(sat_add(trunc_, k));
  return Series(min_ + k, coeffs_, sat_add(trunc_, k));
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& other) { return *this = add(*this, other); }

Series& Series::operator-=(const Series& other) { return *this = add(*this, -other); }

Series& Series::operator*=(const Rational& scalar) {
  if (scalar == 0) return *this = zero(trunc_);
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string Series::to_string(std::string_view var) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const int e = min_ + static_cast<int>(i);
    Rational c = coeffs_[i];
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (e == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << (c == -1 ? "-" : c.get_str() + "*");
      out << var;
      if (e != 1) out << '^' << e;
    }
  }
  if (!is_exact()) {
    if (!first) out << " + ";
    out << "O(" << var << '^' << trunc_ << ')';
  } else if (first) {
    out << '0';
  }
  return out.str();
}

Series add(const Series& a, const Series& b) {
  const int trunc = std::min(a.trunc_order(), b.trunc_order());
  if (a.is_zero() && b.is_zero()) return Series::zero(trunc);
  const int lo = std::min(a.min_exponent(), b.min_exponent());
  const int end = a.is_zero() ? b.stored_end() : b.is_zero() ? a.stored_end() : std::max(a.stored_end(), b.stored_end());
  const int hi = std::min(trunc, end);
  if (hi <= lo) return Series::zero(trunc);
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo));
  const auto accumulate = [&](const Series& s) {
    const auto cs = s.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const int e = s.min_exponent() + static_cast<int>(i);
      if (e >= hi) break;
      out[static_cast<std::size_t>(e - lo)] += cs[i];
    }
  };
  accumulate(a);
  accumulate(b);
  return Series::from_coefficients(lo, std::move(out), trunc);
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }

Series operator-(const Series& a, const Series& b) { return add(a, -b); }

Series operator*(const Rational& s, const Series& a) {
  Series r = a;
  r *= s;
  return r;
}

Series mul(const Series& a, const Series& b, int order) {
  const int trunc = std::min({sat_add(a.trunc_order(), b.min_exponent()),
                              sat_add(b.trunc_order(), a.min_exponent()), order});
  if (a.is_zero() || b.is_zero()) return Series::zero(trunc);
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = std::min(trunc, a.stored_end() + b.stored_end() - 1);
  if (hi <= lo) return Series::zero(trunc);
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo));
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < ca.size() && i < n; ++i) {
    if (ca[i] == 0) continue;
    const std::size_t jmax = std::min(cb.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      out[i + j] += ca[i] * cb[j];
    }
  }
  return Series::from_coefficients(lo, std::move(out), trunc);
}

Series operator*(const Series& a, const Series& b) { return mul(a, b); }

Series invert_unit(const Series& a, int order) {
  if (a.is_zero()) throw std::invalid_argument("invert_unit: series is zero up to truncation");
  const int m = a.min_exponent();
  const auto ca = a.coefficients();
  if (a.is_exact() && ca.size() == 1) {
    return Series::monomial(1 / ca[0], -m).truncated(order);
  }
  const int trunc = std::min(a.is_exact() ? kExact : a.trunc_order() - 2 * m, order);
  if (trunc >= kExact) throw std::invalid_argument("invert_unit: exact inverse is infinite, an order is required");
  const int count = trunc + m;
  if (count <= 0) return Series::zero(trunc);
  const Rational inv_lead = 1 / ca[0];
  std::vector<Rational> b(static_cast<std::size_t>(count));
  b[0] = inv_lead;
  for (int n = 1; n < count; ++n) {
    Rational acc;
    const int jmax = std::min(n, static_cast<int>(ca.size()) - 1);
    for (int j = 1; j <= jmax; ++j) acc += ca[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
    b[static_cast<std::size_t>(n)] = -acc * inv_lead;
  }
  return Series::from_coefficients(-m, std::move(b), trunc);
}

Series power(const Series& a, int n, int order) {
  if (n == 0) return Series::constant(1).truncated(order);
  if (n < 0) {
    if (a.is_zero()) throw std::invalid_argument("power: negative power of a zero series");
    const int m = a.min_exponent();
    int inv_order = kExact;
    if (order < kExact) inv_order = -m + (order - n * m);
    return power(invert_unit(a, inv_order), -n, order);
  }
  Series result = Series::constant(1);
  Series base = a;
  bool have = false;
  while (n > 0) {
    if (n & 1) {
      result = have ? mul(result, base, order) : base.truncated(order);
      have = true;
    }
    n >>= 1;
    if (n > 0) base = mul(base, base, order);
  }
  return result;
}

Series compose(const Series& outer, const Series& inner, int order) {
  if (inner.min_exponent() < 1) throw std::invalid_argument("compose: inner series has a constant term");
  const auto co = outer.coefficients();
  if (inner.is_zero()) {
    if (!outer.is_zero() && outer.min_exponent() < 0) {
      throw std::invalid_argument("compose: negative powers of a zero inner series");
    }
    return Series::constant(outer.coeff(0), std::min(order, inner.trunc_order()));
  }
  const int mi = inner.min_exponent();
  const int ri = inner.is_exact() ? kExact : inner.trunc_order() - mi;
  int trunc = order;
  if (!outer.is_exact()) trunc = std::min(trunc, outer.trunc_order() * mi);
  int most_negative = 0;
  for (std::size_t i = 0; i < co.size(); ++i) {
    const int n = outer.min_exponent() + static_cast<int>(i);
    if (co[i] == 0 || n == 0) continue;
    if (ri < kExact) trunc = std::min(trunc, n * mi + ri);
    most_negative = std::min(most_negative, n);
  }
  const bool inner_monomial = inner.is_exact() && inner.coefficients().size() == 1;
  if (trunc >= kExact && most_negative < 0 && !inner_monomial) {
    throw std::invalid_argument("compose: exact result is infinite, an order is required");
  }

  Series result = Series::zero(trunc);
  if (outer.is_zero()) return result;
  Series inverse;
  if (most_negative < 0) {
    int inv_order = kExact;
    if (trunc < kExact) inv_order = -mi + (trunc - most_negative * mi);
    inverse = invert_unit(inner, inv_order);
  }
  const auto outer_at = [&](int n) -> Rational {
    const int i = n - outer.min_exponent();
    return i >= 0 && i < static_cast<int>(co.size()) ? co[static_cast<std::size_t>(i)] : Rational(0);
  };
  // Negative exponents, walking down from -1 so each power reuses the previous one.
  Series neg_power = Series::constant(1);
  for (int n = -1; n >= most_negative; --n) {
    neg_power = mul(neg_power, inverse, trunc);
    const Rational c = outer_at(n);
    if (c != 0) result += c * neg_power;
  }
  Series pos_power = Series::constant(1);
  int pos_n = 0;
  for (int n = std::max(0, outer.min_exponent()); n < outer.stored_end(); ++n) {
    while (pos_n < n) {
      pos_power = mul(pos_power, inner, trunc);
      ++pos_n;
    }
    if (pos_power.min_exponent() >= trunc) break;
    const Rational c = outer_at(n);
    if (c != 0) result += c * pos_power;
  }
  return result.truncated(trunc);
}

Series reversion(const Series& a, int order) {
  if (a.is_zero() || a.min_exponent() != 1) {
    throw std::invalid_argument("reversion: series must start at w^1 with a nonzero coefficient");
  }
  const auto ca = a.coefficients();
  if (a.is_exact() && ca.size() == 1) return Series::monomial(1 / ca[0], 1).truncated(order);
  const int trunc = std::min(a.trunc_order(), order);
  if (trunc >= kExact) throw std::invalid_argument("reversion: exact result is infinite, an order is required");
  if (trunc <= 1) return Series::zero(trunc);
  // Lagrange inversion: [w^n] b = (1/n) [w^(n-1)] (w / a(w))^n.
  const Series phi = invert_unit(a.shifted(-1), trunc - 1);
  std::vector<Rational> b(static_cast<std::size_t>(trunc - 1));
  Series phi_n = Series::constant(1);
  for (int n = 1; n < trunc; ++n) {
    phi_n = mul(phi_n, phi, trunc - 1);
    b[static_cast<std::size_t>(n - 1)] = phi_n.coeff(n - 1) / n;
  }
  return Series::from_coefficients(1, std::move(b), trunc);
}

Series log1p(const Series& a, int order) {
  if (a.is_zero()) return Series::zero(std::min(a.trunc_order(), order));
  if (a.min_exponent() < 1) throw std::invalid_argument("log1p: argument has a constant term");
  const int trunc = std::min(a.trunc_order(), order);
  if (trunc >= kExact) throw std::invalid_argument("log1p: exact result is infinite, an order is required");
  if (trunc <= 1) return Series::zero(trunc);
  // From (1 + a) L' = a':  n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
  std::vector<Rational> l(static_cast<std::size_t>(trunc));
  for (int n = 1; n < trunc; ++n) {
    Rational acc = n * a.coeff(n);
    for (int k = 1; k < n; ++k) {
      if (l[static_cast<std::size_t>(k)] == 0) continue;
      acc -= k * l[static_cast<std::size_t>(k)] * a.coeff(n - k);
    }
    l[static_cast<std::size_t>(n)] = acc / n;
  }
  return Series::from_coefficients(0, std::move(l), trunc);
}

Series exp(const Series& a, int order) {
  if (a.is_zero()) return Series::constant(1, std::min(a.trunc_order(), order));
  if (a.min_exponent() < 1) throw std::invalid_argument("exp: argument has a constant term");
  const int trunc = std::min(a.trunc_order(), order);
  if (trunc >= kExact) throw std::invalid_argument("exp: exact result is infinite, an order is required");
  if (trunc <= 0) return Series::zero(trunc);
  // From E' = a' E:  n E_n = sum_{k=1}^{n} k a_k E_{n-k}.
  std::vector<Rational> e(static_cast<std::size_t>(trunc));
  e[0] = 1;
  for (int n = 1; n < trunc; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) {
      const Rational ak = a.coeff(k);
      if (ak != 0) acc += k * ak * e[static_cast<std::size_t>(n - k)];
    }
    e[static_cast<std::size_t>(n)] = acc / n;
  }
  return Series::from_coefficients(0, std::move(e), trunc);
}

Rational residue(const Series& a) { return a.coeff(-1); }

Rational coeff(const Series& a, int n) { return a.coeff(n); }

Rational product_coeff(const Series& a, const Series& b, int n) {
  const int trunc = std::min(sat_add(a.trunc_order(), b.min_exponent()), sat_add(b.trunc_order(), a.min_exponent()));
  if (n >= trunc) {
    throw TruncationError("product coefficient at exponent " + std::to_string(n) + " is beyond truncation order " +
                          std::to_string(trunc));
  }
  Rational acc;
  if (a.is_zero() || b.is_zero()) return acc;
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const int j = n - a.min_exponent() - static_cast<int>(i) - b.min_exponent();
    if (j < 0) break;
    if (j < static_cast<int>(cb.size())) acc += ca[i] * cb[static_cast<std::size_t>(j)];
  }
  return acc;
}

Series derivative(const Series& a) {
  const int trunc = a.is_exact() ? kExact : a.trunc_order() - 1;
  if (a.is_zero()) return Series::zero(trunc);
  const auto ca = a.coefficients();
  std::vector<Rational> out(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) out[i] = ca[i] * (a.min_exponent() + static_cast<int>(i));
  return Series::from_coefficients(a.min_exponent() - 1, std::move(out), trunc);
}

Series integral(const Series& a) {
  if (a.coeff(-1) != 0) throw std::invalid_argument("integral: series has a nonzero residue");
  const int trunc = a.is_exact() ? kExact : a.trunc_order() + 1;
  if (a.is_zero()) return Series::zero(trunc);
  const auto ca = a.coefficients();
  std::vector<Rational> out(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const int e = a.min_exponent() + static_cast<int>(i);
    if (e != -1) out[i] = ca[i] / (e + 1);
  }
  return Series::from_coefficients(a.min_exponent() + 1, std::move(out), trunc);
}

bool agrees(const Series& a, const Series& b) {
  const int trunc = std::min(a.trunc_order(), b.trunc_order());
  if (a.is_zero() && b.is_zero()) return true;
  const int lo = std::min(a.min_exponent(), b.min_exponent());
  const int end = a.is_zero() ? b.stored_end() : b.is_zero() ? a.stored_end() : std::max(a.stored_end(), b.stored_end());
  const int hi = std::min(trunc, end);
  for (int e = lo; e < hi; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

}  // namespace hurwitz
