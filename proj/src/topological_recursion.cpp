#include "hurwitz/topological_recursion.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hurwitz {

namespace {

constexpr std::size_t kMaxArity = 16;
using PackedIndex = std::array<std::uint8_t, kMaxArity>;

struct PackedIndexHash {
  std::size_t operator()(const PackedIndex& key) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : key) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using Accumulator = std::unordered_map<PackedIndex, Rational, PackedIndexHash>;

/// Terms sharing the same first pole order; `index` is that order, or -m for the m-th
/// term of a Bergman kernel's regular expansion.
struct Slice {
  int index;
  std::vector<std::pair<PoleIndex, Rational>> rest;
};

std::vector<Slice> slices_of(const PoleForm& form) {
  std::vector<Slice> out;
  for (const auto& [a, c] : form.terms()) {
    if (out.empty() || out.back().index != a.front()) out.push_back({a.front(), {}});
    out.back().rest.emplace_back(PoleIndex(a.begin() + 1, a.end()), c);
  }
  return out;
}

/// B(z, z_j) with z at the branch: zeta^m (m + 1) dz_j / (z_j - z*)^{m+2}, for m = 0..max_m.
std::vector<Slice> bergman_slices(int max_m) {
  std::vector<Slice> out;
  for (int m = 0; m <= max_m; ++m) out.push_back({-m, {{PoleIndex{m + 2}, Rational(m + 1)}}});
  return out;
}

int max_index(const std::vector<Slice>& slices) {
  int m = 0;
  for (const auto& s : slices) m = std::max(m, s.index);
  return m;
}

PoleForm finalize(const Accumulator& acc, int arity) {
  PoleForm form(arity);
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    form.add(PoleIndex(key.begin(), key.begin() + arity), c);
  }
  return form;
}

void check_pole_order(int a) {
  if (a > 255) throw std::length_error("topological recursion: pole order exceeds 255");
}

}  // namespace

TopologicalRecursion::TopologicalRecursion(LocalCurve curve) : curve_(std::move(curve)), kernel_(curve_) {}

const Series& TopologicalRecursion::other_sheet_pole(int b) {
  auto it = other_sheet_.find(b);
  if (it != other_sheet_.end()) return it->second;
  const Series& sigma = curve_.sigma();
  Series s = mul(derivative(sigma), power(sigma, -b));
  return other_sheet_.emplace(b, std::move(s)).first->second;
}

const Series& TopologicalRecursion::bergman_on_involution() {
  if (!have_bergman_involution_) {
    const Series& sigma = curve_.sigma();
    const Series diff = Series::monomial(1, 1) - sigma;
    bergman_involution_ = mul(derivative(sigma), power(diff, -2));
    have_bergman_involution_ = true;
  }
  return bergman_involution_;
}

const std::vector<Rational>& TopologicalRecursion::elementary_residue(int a, int b) {
  auto it = residues_.find({a, b});
  if (it != residues_.end()) return it->second;
  std::vector<Rational> r(static_cast<std::size_t>(std::max(0, a + b + 3)));
  if (a + b >= 0) {
    const Series integrand = other_sheet_pole(b).shifted(-a);
    for (int p = 2; p <= a + b + 2; ++p) {
      try {
        r[static_cast<std::size_t>(p)] = product_coeff(kernel_.kappa(p), integrand, -1);
      } catch (const TruncationError&) {
        throw InsufficientOrderError("truncation order " + std::to_string(curve_.order()) +
                                     " cannot resolve the residue with pole orders (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
      }
    }
  }
  return residues_.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

void TopologicalRecursion::preload(int g, int k, PoleForm form) {
  if (!is_stable(g, k)) throw std::invalid_argument("preload: (g, k) outside the stable range");
  if (form.arity() != k) throw std::invalid_argument("preload: arity does not match k");
  memo_.try_emplace({g, k}, std::move(form));
}

const PoleForm& TopologicalRecursion::w(int g, int k) {
  if (!is_stable(g, k)) {
    std::string what = "W_" + std::to_string(k) + "^(" + std::to_string(g) + ") is outside the stable range 2g-2+k > 0";
    if (g == 0 && k == 1) what += "; W_1^(0) = -y dx is curve data";
    if (g == 0 && k == 2) what += "; W_2^(0) is the Bergman kernel B(z1,z2) = dz1 dz2/(z1-z2)^2";
    throw std::invalid_argument(what);
  }
  if (k > static_cast<int>(kMaxArity)) throw std::length_error("topological recursion: arity exceeds 16");
  auto it = memo_.find({g, k});
  if (it != memo_.end()) return it->second;
  PoleForm form = compute(g, k);
  return memo_.emplace(std::make_pair(g, k), std::move(form)).first->second;
}

PoleForm TopologicalRecursion::compute(int g, int k) {
  Accumulator acc;
  const int others = k - 1;  // z_2 .. z_k occupy output positions 1 .. k-1

  // W_{k+1}^{(g-1)}(z, sigma(z), z_2, ..., z_k)
  if (g >= 1) {
    if (g == 1 && k == 1) {
      const Series& b = bergman_on_involution();
      for (int p = 2; p <= 4; ++p) {
        Rational r;
        try {
          r = product_coeff(kernel_.kappa(p), b, -1);
        } catch (const TruncationError&) {
          throw InsufficientOrderError("truncation order " + std::to_string(curve_.order()) +
                                       " cannot resolve W_1^(1)");
        }
        if (r != 0) {
          PackedIndex key{};
          key[0] = static_cast<std::uint8_t>(p);
          acc[key] += r;
        }
      }
    } else {
      const PoleForm& prev = w(g - 1, k + 1);
      for (const auto& [a, c] : prev.terms()) {
        const auto& r = elementary_residue(a[0], a[1]);
        PackedIndex key{};
        for (int i = 0; i < others; ++i) key[static_cast<std::size_t>(i + 1)] = static_cast<std::uint8_t>(a[static_cast<std::size_t>(i + 2)]);
        for (std::size_t p = 2; p < r.size(); ++p) {
          if (r[p] == 0) continue;
          key[0] = static_cast<std::uint8_t>(p);
          acc[key] += r[p] * c;
        }
      }
    }
  }

  // sum' W_{|J|+1}^{(h)}(z, J) W_{k-|J|}^{(g-h)}(sigma(z), K \ J)
  const unsigned full = (1u << others) - 1u;
  for (int h = 0; h <= g; ++h) {
    for (unsigned mask = 0; mask <= full; ++mask) {
      const int j = std::popcount(mask);
      if ((h == 0 && j == 0) || (h == g && j == others)) continue;
      const bool left_bergman = h == 0 && j == 1;
      const bool right_bergman = g - h == 0 && others - j == 1;
      std::vector<Slice> left = left_bergman ? std::vector<Slice>{} : slices_of(w(h, j + 1));
      std::vector<Slice> right = right_bergman ? std::vector<Slice>{} : slices_of(w(g - h, k - j));
      // Only a + b >= 0 survives the residue, which bounds the Bergman expansion.
      if (left_bergman) left = bergman_slices(right_bergman ? 0 : max_index(right));
      if (right_bergman) right = bergman_slices(left_bergman ? 0 : max_index(left));

      std::vector<int> left_pos;
      std::vector<int> right_pos;
      for (int i = 0; i < others; ++i) ((mask >> i) & 1u ? left_pos : right_pos).push_back(i + 1);

      for (const Slice& ls : left) {
        for (const Slice& rs : right) {
          if (ls.index + rs.index < 0) continue;
          const auto& r = elementary_residue(ls.index, rs.index);
          for (const auto& [lrest, lc] : ls.rest) {
            PackedIndex key{};
            for (std::size_t i = 0; i < lrest.size(); ++i) {
              check_pole_order(lrest[i]);
              key[static_cast<std::size_t>(left_pos[i])] = static_cast<std::uint8_t>(lrest[i]);
            }
            for (const auto& [rrest, rc] : rs.rest) {
              for (std::size_t i = 0; i < rrest.size(); ++i) {
                check_pole_order(rrest[i]);
                key[static_cast<std::size_t>(right_pos[i])] = static_cast<std::uint8_t>(rrest[i]);
              }
              const Rational base = lc * rc;
              for (std::size_t p = 2; p < r.size(); ++p) {
                if (r[p] == 0) continue;
                key[0] = static_cast<std::uint8_t>(p);
                acc[key] += r[p] * base;
              }
            }
          }
        }
      }
    }
  }
  return finalize(acc, k);
}

Rational TopologicalRecursion::f_g(int g, const Rational& phi_at_branch) {
  if (g < 2) throw std::invalid_argument("f_g: only g >= 2 is defined by the residue formula");
  const Series phi = integral(mul(curve_.y_local(), derivative(curve_.x_local()))) + Series::constant(phi_at_branch);
  Rational total;
  for (const auto& [a, c] : w(g, 1).terms()) total += c * phi.coeff(a[0] - 1);
  return total / (2 - 2 * g);
}

}  // namespace hurwitz
