#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition: a weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts the parts into decreasing order first.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// m_r = #{i : parts_i = r}.
  int multiplicity(int r) const;
  /// Nonzero multiplicities keyed by part value.
  std::map<int, int> multiplicities() const;
  /// prod_r m_r!, the order of the stabilizer of the part sequence.
  BigInt automorphisms() const;

  /// Multiset union (the monomial product p_a * p_b).
  Partition merged(const Partition& other) const;

  /// "(3,1,1)"; the empty partition prints as "()".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Strictly decreasing positions h_i = lambda_i - i + N (i = 1..N) of a partition padded to N rows.
struct HEncoding {
  int N = 0;
  std::vector<int> h;
};

/// All partitions of n, lexicographically descending: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

/// Throws std::invalid_argument when N < length(lambda).
HEncoding h_encoding(const Partition& lambda, int N);

/// Inverse of h_encoding.
Partition from_h_encoding(const HEncoding& enc);

/// |C_mu| = |mu|! / prod_r (m_r! r^{m_r}).
BigInt class_size(const Partition& mu);

/// The cycle type (2, 1^{n-2}) of a transposition in S_n; requires n >= 2.
Partition transposition_class(int n);

}  // namespace hurwitz
