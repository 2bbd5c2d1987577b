#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int r) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

BigInt Partition::automorphisms() const {
  BigInt r = 1;
  for (const auto& [part, mult] : multiplicities()) r *= factorial(static_cast<unsigned>(mult));
  return r;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
             std::greater<>());
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  // Largest part first, each subsequent part bounded by its predecessor.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

HEncoding h_encoding(const Partition& lambda, int N) {
  if (N < lambda.length()) {
    throw std::invalid_argument("h_encoding: N = " + std::to_string(N) + " is smaller than the length of " +
                                lambda.to_string());
  }
  HEncoding enc{N, std::vector<int>(static_cast<std::size_t>(N))};
  for (int i = 1; i <= N; ++i) {
    const int part = i <= lambda.length() ? lambda[static_cast<std::size_t>(i - 1)] : 0;
    enc.h[static_cast<std::size_t>(i - 1)] = part - i + N;
  }
  return enc;
}

Partition from_h_encoding(const HEncoding& enc) {
  std::vector<int> parts;
  for (int i = 1; i <= enc.N; ++i) {
    const int part = enc.h[static_cast<std::size_t>(i - 1)] + i - enc.N;
    if (part < 0) throw std::invalid_argument("from_h_encoding: sequence is not strictly decreasing");
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

BigInt class_size(const Partition& mu) {
  BigInt denom = 1;
  for (const auto& [r, m] : mu.multiplicities()) {
    BigInt rm;
    mpz_ui_pow_ui(rm.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(m));
    denom *= factorial(static_cast<unsigned>(m)) * rm;
  }
  return factorial(static_cast<unsigned>(mu.size())) / denom;
}

Partition transposition_class(int n) {
  if (n < 2) throw std::invalid_argument("transposition_class: S_n has no transposition for n < 2");
  std::vector<int> parts{2};
  parts.insert(parts.end(), static_cast<std::size_t>(n - 2), 1);
  return Partition(std::move(parts));
}

}  // namespace hurwitz
