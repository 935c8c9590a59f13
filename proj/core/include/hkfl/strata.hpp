#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkfl/discrepancy.hpp"
#include "hkfl/integer.hpp"
#include "hkfl/kind.hpp"

namespace hkfl {

// How the complex dimension 2m of a Kummer component is read off a label:
//   Derived: 2m = (n + 1) - |I_odd| - 2|I_minus|   (n + 1 points on A)
//   Printed: 2m = n - |I_odd| - 2|I_minus|, with |I_odd| = n mod 2
enum class KummerConvention { Derived, Printed };
std::string_view to_string(KummerConvention c);

// A connected component of the fixed locus. For K3n, bit i of i_odd is fixed
// point i (0..7); for Kummer, bit a is the point a of Z_2^4 (0..15).
struct ComponentLabel {
  ManifoldKind kind = ManifoldKind::K3n;
  std::uint16_t i_odd = 0;
  std::uint16_t i_minus = 0;
};

struct StratumRow {
  std::int64_t m = 0;
  std::int64_t dim = 0;
  Integer count;
  std::string component_type;
};

struct StrataTable {
  ManifoldKind kind = ManifoldKind::K3n;
  std::int64_t n = 0;
  KummerConvention convention = KummerConvention::Derived;
  std::vector<StratumRow> rows;  // m descending

  Integer total() const;
  const StratumRow* find(std::int64_t m) const;
  std::optional<std::int64_t> min_m() const;
  std::optional<std::int64_t> max_m() const;
};

bool same_rows(const StrataTable& a, const StrataTable& b);

inline constexpr std::int64_t kMaxFormulaN = 10000;
inline constexpr std::int64_t kMaxOracleN = 200;

// sum over 2m = n - k - 2l of C(8, k) C(k, l). 1 <= n <= 10^4.
StrataTable strata_k3_formula(std::int64_t n);

// Enumerates every (I_odd, I_minus) with I_minus in I_odd in {0..7},
// |I_odd| = n mod 2 and n - |I_odd| - 2|I_minus| >= 0.
// 1 <= n <= 200; TooLarge beyond.
std::vector<ComponentLabel> k3_labels(std::int64_t n);
StrataTable strata_k3_oracle(std::int64_t n);

// Zero-sum subsets I of Z_2^4 with I_minus in I, |I| of the parity the
// convention requires and a non-negative residual point count.
std::vector<ComponentLabel> kummer_labels(std::int64_t n, KummerConvention c);
StrataTable strata_kummer_oracle(std::int64_t n, KummerConvention c = KummerConvention::Derived);

// Number of k-subsets of Z_2^4 with sum 0, by the character-sum identity
//   16 z(k) = C(16, k) + 15 [t^k] (1 + t)^8 (1 - t)^8.
Integer zero_sum_subset_count(std::int64_t k);

// sum over zero-sum I of C((n - |I|)/2 - m, |I|), read literally: a summand
// whose top index is not a non-negative integer contributes 0.
Integer kummer_printed_count(std::int64_t n, std::int64_t m);

// sum_k z(k) C(k, l) with l = (N - k)/2 - m, where N = n + 1 (Derived) or
// N = n (Printed).
Integer kummer_corrected_count(std::int64_t n, std::int64_t m, KummerConvention c);

struct KummerComparisonRow {
  std::int64_t m = 0;
  Integer oracle;
  Integer printed;
  Integer corrected;
};

struct KummerComparison {
  std::int64_t n = 0;
  KummerConvention convention = KummerConvention::Derived;
  std::vector<KummerComparisonRow> rows;
  std::vector<Discrepancy> discrepancies;
};

// Oracle against the printed closed form and the corrected closed form for
// every m in [0, (n+1)/2].
KummerComparison compare_kummer_formula(std::int64_t n, KummerConvention c);

// Structured records for the Kummer statements that are not reproduced:
// printed closed form, printed dimension formula and the top stratum.
std::vector<Discrepancy> kummer_discrepancies(std::int64_t n);

struct BoundsReport {
  ManifoldKind kind = ManifoldKind::K3n;
  std::int64_t n = 0;
  KummerConvention convention = KummerConvention::Derived;
  std::optional<std::int64_t> min_m;
  std::optional<std::int64_t> max_m;
  bool has_isolated = false;
  Rational stated_lower;           // max(0, n/2 - 12) or max(0, (n+1)/2 - 24)
  Rational stated_upper;           // n/2 or (n+1)/2
  std::int64_t stated_isolated_max_n = 0;  // 24 or 48
  std::vector<Discrepancy> discrepancies;
};

// Actual range of m and isolated points from the oracle against the stated
// bounds. Mismatches become Discrepancy records, not errors.
BoundsReport bounds_report(ManifoldKind kind, std::int64_t n,
                           KummerConvention c = KummerConvention::Derived);

}  // namespace hkfl
