#include <gtest/gtest.h>

#include <array>
#include <bit>
#include <map>

#include "hkfl/error.hpp"
#include "hkfl/strata.hpp"

namespace hkfl {
namespace {

using Poly = std::vector<Integer>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly power(const Poly& p, int e) {
  Poly out{1};
  for (int i = 0; i < e; ++i) out = multiply(out, p);
  return out;
}

Integer coefficient(const Poly& p, std::int64_t k) {
  return k >= 0 && k < static_cast<std::int64_t>(p.size()) ? p[k] : Integer(0);
}

// Each fixed point is either even (uses no extra points), odd '+' (one
// point) or odd '-' (three points); the rest of the points pair up. So the
// number of components with 2m = n - (points used) is [t^{n-2m}] f(t)^8 with
// f = 1 + t + t^3.
std::map<std::int64_t, Integer> k3_generating_function(std::int64_t n) {
  const Poly f8 = power(Poly{1, 1, 0, 1}, 8);
  std::map<std::int64_t, Integer> out;
  for (std::int64_t m = 0; 2 * m <= n; ++m) {
    const Integer c = coefficient(f8, n - 2 * m);
    if (c != 0) out[m] = c;
  }
  return out;
}

// Zero-sum subsets of Z_2^4 by size, by direct enumeration of all 2^16 subsets.
std::array<Integer, 17> brute_zero_sum_counts() {
  std::array<Integer, 17> counts{};
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    int sum = 0;
    for (int a = 0; a < 16; ++a)
      if (mask >> a & 1) sum ^= a;
    if (sum == 0) counts[std::popcount(mask)] += 1;
  }
  return counts;
}

const std::array<Integer, 17>& zero_sums() {
  static const auto counts = brute_zero_sum_counts();
  return counts;
}

// Kummer: over zero-sum I, each odd point is '+' (1 point) or '-' (3 points):
// count at m = sum_k z(k) [t^{N-2m}] (t + t^3)^k, N = points available.
std::map<std::int64_t, Integer> kummer_generating_function(std::int64_t points) {
  std::map<std::int64_t, Integer> out;
  for (std::int64_t m = 0; 2 * m <= points; ++m) {
    Integer c = 0;
    for (int k = 0; k <= 16; ++k) c += zero_sums()[k] * coefficient(power(Poly{0, 1, 0, 1}, k), points - 2 * m);
    if (c != 0) out[m] = c;
  }
  return out;
}

std::map<std::int64_t, Integer> as_map(const StrataTable& t) {
  std::map<std::int64_t, Integer> out;
  for (const auto& r : t.rows) out[r.m] = r.count;
  return out;
}

TEST(K3Formula, Examples) {
  EXPECT_EQ(as_map(strata_k3_formula(2)), (std::map<std::int64_t, Integer>{{1, 1}, {0, 28}}));
  EXPECT_EQ(as_map(strata_k3_formula(3)), (std::map<std::int64_t, Integer>{{1, 8}, {0, 64}}));
  EXPECT_EQ(as_map(strata_k3_formula(4)), k3_generating_function(4));
  EXPECT_EQ(as_map(strata_k3_formula(4)), (std::map<std::int64_t, Integer>{{2, 1}, {1, 28}, {0, 126}}));
}

TEST(K3Formula, RowsShape) {
  const auto t = strata_k3_formula(5);
  ASSERT_FALSE(t.rows.empty());
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) EXPECT_GT(t.rows[i].m, t.rows[i + 1].m);
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.dim, 2 * r.m);
    EXPECT_GT(r.count, 0);
    EXPECT_EQ(r.component_type, r.m == 0 ? "point" : "Hilb^" + std::to_string(r.m) + "(Y)");
  }
  EXPECT_THROW(strata_k3_formula(0), Error);
  EXPECT_THROW(strata_k3_formula(kMaxFormulaN + 1), Error);
  // Once n >= 24 every label of the right parity occurs: sum over even k of
  // C(8, k) 2^k = (3^8 + 1) / 2.
  EXPECT_EQ(strata_k3_formula(kMaxFormulaN).total(), (6561 + 1) / 2);
}

TEST(K3Oracle, AgreesWithFormulaAndGeneratingFunction) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto formula = strata_k3_formula(n);
    const auto oracle = strata_k3_oracle(n);
    EXPECT_TRUE(same_rows(formula, oracle)) << "n = " << n;
    EXPECT_EQ(as_map(formula), k3_generating_function(n)) << "n = " << n;
    EXPECT_EQ(oracle.total(), Integer(k3_labels(n).size()));
  }
  EXPECT_THROW(strata_k3_oracle(kMaxOracleN + 1), Error);
}

TEST(K3Oracle, Examples) {
  EXPECT_EQ(as_map(strata_k3_oracle(1)), (std::map<std::int64_t, Integer>{{0, 8}}));
  EXPECT_EQ(strata_k3_oracle(25).find(0), nullptr);
  EXPECT_NE(strata_k3_oracle(24).find(0), nullptr);
}

TEST(K3Oracle, LabelsRespectParity) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const auto& l : k3_labels(n)) {
      EXPECT_EQ((l.i_minus & ~l.i_odd), 0);
      EXPECT_EQ((n - std::popcount(l.i_odd)) % 2, 0);
      EXPECT_GE(n - std::popcount(l.i_odd) - 2 * std::popcount(l.i_minus), 0);
    }
  }
}

TEST(K3, TopStratum) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto t = strata_k3_oracle(n);
    ASSERT_FALSE(t.rows.empty());
    if (n % 2 == 0) {
      EXPECT_EQ(t.rows.front().m, n / 2);
      EXPECT_EQ(t.rows.front().count, 1);
    } else {
      EXPECT_EQ(t.rows.front().m, (n - 1) / 2);
      EXPECT_EQ(t.rows.front().count, 8);
    }
  }
}

TEST(K3, LowestStratumFromGeneratingFunction) {
  // The smallest m is (n - max points used)/2, where at most 8 + 2*8 = 24
  // points are used and the count used has the parity of n.
  for (std::int64_t n = 1; n <= 60; ++n) {
    const std::int64_t most = n % 2 == 0 ? std::min<std::int64_t>(n, 24) : std::min<std::int64_t>(n, 21);
    EXPECT_EQ(strata_k3_oracle(n).min_m(), (n - most) / 2) << "n = " << n;
  }
}

TEST(ZeroSum, MatchesEnumeration) {
  Integer total = 0;
  for (int k = 0; k <= 16; ++k) {
    EXPECT_EQ(zero_sum_subset_count(k), zero_sums()[k]) << "k = " << k;
    total += zero_sums()[k];
  }
  EXPECT_EQ(zero_sum_subset_count(0), 1);
  EXPECT_EQ(zero_sum_subset_count(2), 0);
  EXPECT_EQ(zero_sum_subset_count(3), 35);
  EXPECT_EQ(zero_sum_subset_count(17), 0);
  EXPECT_EQ(zero_sum_subset_count(-1), 0);
  // Zero-sum subsets are the kernel of the surjection F_2^16 -> F_2^4.
  EXPECT_EQ(total, Integer(1) << 12);
}

TEST(KummerOracle, DerivedExamples) {
  using Table = std::map<std::int64_t, Integer>;
  EXPECT_EQ(as_map(strata_kummer_oracle(1)), (Table{{1, 1}}));
  EXPECT_EQ(as_map(strata_kummer_oracle(2)), (Table{{1, 1}, {0, 36}}));
  EXPECT_EQ(as_map(strata_kummer_oracle(3)), (Table{{2, 1}, {0, 140}}));
}

TEST(KummerOracle, AgreesWithGeneratingFunction) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    EXPECT_EQ(as_map(strata_kummer_oracle(n, KummerConvention::Derived)), kummer_generating_function(n + 1))
        << "n = " << n;
    EXPECT_EQ(as_map(strata_kummer_oracle(n, KummerConvention::Printed)), kummer_generating_function(n))
        << "n = " << n;
  }
}

TEST(KummerOracle, TopStratumIsOneCopy) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto t = strata_kummer_oracle(n);
    EXPECT_EQ(t.rows.front().count, 1) << "n = " << n;
    EXPECT_EQ(t.rows.front().m, (n + 1) / 2);
    for (const auto& r : t.rows)
      EXPECT_EQ(r.component_type, r.m == 0 ? "point" : "Hilb^" + std::to_string(r.m) + "(K3)");
  }
}

TEST(KummerOracle, LabelsAreZeroSumWithParity) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto labels = kummer_labels(n, KummerConvention::Derived);
    EXPECT_EQ(Integer(labels.size()), strata_kummer_oracle(n).total());
    for (const auto& l : labels) {
      int sum = 0;
      for (int a = 0; a < 16; ++a)
        if (l.i_odd >> a & 1) sum ^= a;
      EXPECT_EQ(sum, 0);
      EXPECT_EQ((l.i_minus & ~l.i_odd), 0);
      EXPECT_EQ((n + 1 - std::popcount(l.i_odd)) % 2, 0);
    }
  }
}

TEST(KummerFormula, PrintedFormLiteralValues) {
  // n = 2, m = 1: only even |I| give integral tops; I = {} gives C(0, 0) = 1
  // and there are no zero-sum 2-subsets.
  EXPECT_EQ(kummer_printed_count(2, 1), 1);
  // n = 3, m = 2: k odd; k = 1 has z = 1, top (3-1)/2 - 2 = -1 -> 0;
  // k = 3 gives top -2 -> 0.
  EXPECT_EQ(kummer_printed_count(3, 2), 0);
  EXPECT_EQ(kummer_printed_count(3, 0), 1);
}

TEST(KummerFormula, CorrectedFormMatchesOracle) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (auto c : {KummerConvention::Derived, KummerConvention::Printed}) {
      const auto cmp = compare_kummer_formula(n, c);
      const auto table = as_map(strata_kummer_oracle(n, c));
      for (const auto& r : cmp.rows) {
        const Integer expected = table.count(r.m) ? table.at(r.m) : Integer(0);
        EXPECT_EQ(r.oracle, expected);
        EXPECT_EQ(r.corrected, expected);
      }
    }
  }
}

TEST(KummerFormula, DiscrepancyRecords) {
  const auto d = kummer_discrepancies(3);
  std::map<std::string, int> anchors;
  for (const auto& r : d) {
    EXPECT_EQ(r.code, "PAPER-DISCREPANCY");
    ++anchors[r.anchor];
  }
  EXPECT_EQ(anchors["kummer.closed-form"], 2);  // m = 2 and m = 0
  EXPECT_EQ(anchors["kummer.dimension-formula"], 1);
  EXPECT_EQ(anchors["kummer.top-stratum"], 1);  // paper convention only
  for (std::int64_t n = 1; n <= 60; ++n) EXPECT_FALSE(kummer_discrepancies(n).empty());
}

TEST(Bounds, K3Examples) {
  const auto b24 = bounds_report(ManifoldKind::K3n, 24);
  EXPECT_TRUE(b24.has_isolated);
  EXPECT_TRUE(b24.discrepancies.empty());
  const auto b26 = bounds_report(ManifoldKind::K3n, 26);
  EXPECT_EQ(b26.min_m, 1);
  EXPECT_EQ(b26.stated_lower, 1);
  EXPECT_TRUE(b26.discrepancies.empty());
  // n = 23: 23 - k - 2l >= 2 for k odd <= 7, so no isolated points.
  const auto b23 = bounds_report(ManifoldKind::K3n, 23);
  EXPECT_FALSE(b23.has_isolated);
  EXPECT_EQ(b23.min_m, 1);
  EXPECT_EQ(b23.discrepancies.size(), 2u);
}

TEST(Bounds, KummerIsolatedThreshold) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto d = bounds_report(ManifoldKind::Kummer, n, KummerConvention::Derived);
    // Isolated iff n + 1 = k + 2l for zero-sum k with l <= k.
    bool isolated = false;
    for (int k = 0; k <= 16; ++k)
      if (zero_sums()[k] != 0 && (n + 1 - k) % 2 == 0 && n + 1 - k >= 0 && (n + 1 - k) / 2 <= k)
        isolated = true;
    EXPECT_EQ(d.has_isolated, isolated) << "n = " << n;
  }
  EXPECT_TRUE(bounds_report(ManifoldKind::Kummer, 47).has_isolated);
  EXPECT_FALSE(bounds_report(ManifoldKind::Kummer, 48).has_isolated);
  EXPECT_TRUE(bounds_report(ManifoldKind::Kummer, 48, KummerConvention::Printed).has_isolated);
}

}  // namespace
}  // namespace hkfl
