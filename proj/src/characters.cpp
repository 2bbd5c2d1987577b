#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hurwitz {

BigInt dim_irrep(const Partition& lambda, int N) {
  const HEncoding enc = h_encoding(lambda, N);
  BigInt num = factorial(static_cast<unsigned>(lambda.size()));
  BigInt den = 1;
  for (std::size_t i = 0; i < enc.h.size(); ++i) {
    for (std::size_t j = i + 1; j < enc.h.size(); ++j) num *= enc.h[i] - enc.h[j];
    den *= factorial(static_cast<unsigned>(enc.h[i]));
  }
  return num / den;
}

BigInt dim_irrep(const Partition& lambda) { return dim_irrep(lambda, lambda.length()); }

namespace {

// Beads are the h-encoding positions. Removing a border strip of length r moves one
// bead from h to h - r onto an empty position; the strip height is the number of
// beads jumped over.
std::int64_t mn_on_beads(std::vector<int>& beads, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return 1;
  const int r = cycles[next];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int from = beads[i];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int jumped = 0;
    for (int b : beads) jumped += (b > to && b < from) ? 1 : 0;
    beads[i] = to;
    const std::int64_t sub = mn_on_beads(beads, cycles, next + 1);
    beads[i] = from;
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

struct CharacterMemo {
  std::mutex mutex;
  std::map<std::pair<Partition, Partition>, std::int64_t> table;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character: |lambda| = " + std::to_string(lambda.size()) + " but |mu| = " +
                                std::to_string(mu.size()));
  }
  auto& memo = character_memo();
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  }
  std::vector<int> beads = h_encoding(lambda, lambda.length()).h;
  const std::int64_t value = mn_on_beads(beads, mu.parts(), 0);
  std::lock_guard lock(memo.mutex);
  memo.table.emplace(std::move(key), value);
  return value;
}

Rational f_central(const Partition& lambda, const Partition& mu) {
  const std::int64_t chi = character(lambda, mu);
  Rational r(class_size(mu) * BigInt(static_cast<long>(chi)), dim_irrep(lambda));
  r.canonicalize();
  return r;
}

Rational f_C2_content(const Partition& lambda) {
  Rational sum;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int part = lambda[static_cast<std::size_t>(i - 1)];
    sum += part * (part - 2 * i + 1);
  }
  return sum / 2;
}

Rational f_C2_from_h(const HEncoding& enc) {
  Rational sum_sq;
  Rational sum;
  for (int h : enc.h) {
    sum_sq += h * h;
    sum += h;
  }
  const Rational N = enc.N;
  return sum_sq / 2 - (N - Rational(1, 2)) * sum + N * (N - 1) * (2 * N - 1) / 6;
}

}  // namespace hurwitz
