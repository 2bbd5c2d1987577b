#pragma once

#include <cstdint>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Dimension of the S_{|lambda|} irreducible indexed by lambda, evaluated as
/// |lambda|! * prod_{i<j} (h_i - h_j) / prod_i h_i! on the h-encoding with N rows.
/// The value does not depend on N; throws std::invalid_argument when N < length(lambda).
BigInt dim_irrep(const Partition& lambda, int N);
BigInt dim_irrep(const Partition& lambda);

/// chi_lambda evaluated on the class C_mu (Murnaghan-Nakayama, largest part of mu removed first).
/// Results are memoized; safe to call concurrently. Throws std::invalid_argument when |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Central character f_lambda(C_mu) = |C_mu| chi_lambda(C_mu) / dim lambda.
Rational f_central(const Partition& lambda, const Partition& mu);

/// f_lambda(C_2) as the content sum  sum_i lambda_i (lambda_i - 2i + 1) / 2.  Zero for |lambda| < 2.
Rational f_C2_content(const Partition& lambda);

/// The same quantity written on the h-encoding:
///   (1/2) sum h_i^2 - (N - 1/2) sum h_i + N (N - 1) (2N - 1) / 6.
Rational f_C2_from_h(const HEncoding& enc);

}  // namespace hurwitz
