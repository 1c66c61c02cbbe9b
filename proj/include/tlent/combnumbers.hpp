// Enumerations of symmetry classes of alternating sign matrices and plane
// partitions, evaluated from their product formulas.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>

namespace tlent {

enum class Family {
  A,          // A_n: n x n alternating sign matrices
  ARefined,   // A_{n,k}: refined by the position of the 1 in the top row
  AV,         // AV_m, m odd: vertically symmetric
  C,          // C_m, m even: cyclically symmetric transpose-complement plane partitions
  AVH,        // AVH_m, m odd: vertically and horizontally symmetric
  AHT,        // AHT_m: half-turn symmetric
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

/// n! from a shared table that grows on demand; safe to call concurrently.
const mpz_class& factorial(long n);
/// Binomial coefficient, zero when k < 0, k > n or n < 0.
mpz_class binom(long n, long k);

mpz_class asm_count(long n);
mpz_class asm_refined(long n, long k);
mpz_class asm_vertical(long m);
mpz_class cstc_plane_partitions(long m);
mpz_class asm_vertical_horizontal(long m);
mpz_class asm_half_turn(long m);

/// Dispatches on `f`; `k` is used by ARefined only. Throws std::domain_error
/// for indices outside the family's domain.
mpz_class comb_number(Family f, long index, long k = 0);

}  // namespace tlent
