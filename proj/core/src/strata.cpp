#include "hkfl/strata.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

#include "hkfl/error.hpp"

namespace hkfl {

namespace {

constexpr int kK3FixedPoints = 8;
constexpr int kKummerFixedPoints = 16;

std::string component_type(ManifoldKind kind, std::int64_t m) {
  if (m == 0) return "point";
  return "Hilb^" + std::to_string(m) + (kind == ManifoldKind::K3n ? "(Y)" : "(K3)");
}

StrataTable table_from_counts(ManifoldKind kind, std::int64_t n, KummerConvention c,
                              const std::map<std::int64_t, Integer>& counts) {
  StrataTable t;
  t.kind = kind;
  t.n = n;
  t.convention = c;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->second == 0) continue;
    t.rows.push_back({it->first, 2 * it->first, it->second, component_type(kind, it->first)});
  }
  return t;
}

void check_oracle_range(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "n must be >= 1");
  if (n > kMaxOracleN) {
    throw Error(ErrorCode::TooLarge, "oracle enumeration is capped at n = " +
                                         std::to_string(kMaxOracleN));
  }
}

// Number of points the involution moves in free pairs once the local models
// at the fixed points are accounted for. A label is realisable iff this is
// non-negative: an odd '+' point needs multiplicity >= 1, an odd '-' point
// multiplicity >= 3, and whatever remains is even and placed as pairs
// {z, iota(z)}.
std::int64_t residual(std::int64_t points, int k, int l) { return points - k - 2 * l; }

std::int64_t kummer_points(std::int64_t n, KummerConvention c) {
  return c == KummerConvention::Derived ? n + 1 : n;
}

std::array<std::uint8_t, 1 << kKummerFixedPoints> xor_sums() {
  std::array<std::uint8_t, 1 << kKummerFixedPoints> sums{};
  for (std::uint32_t mask = 1; mask < sums.size(); ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = static_cast<std::uint8_t>(sums[mask & (mask - 1)] ^ low);
  }
  return sums;
}

// Visits (i_odd, i_minus, m) for every Kummer label.
void for_each_kummer_label(std::int64_t n, KummerConvention c,
                           const std::function<void(std::uint16_t, std::uint16_t, std::int64_t)>& visit) {
  check_oracle_range(n);
  const std::int64_t points = kummer_points(n, c);
  const auto sums = xor_sums();
  for (std::uint32_t odd = 0; odd < (1u << kKummerFixedPoints); ++odd) {
    if (sums[odd] != 0) continue;
    const int k = std::popcount(odd);
    if ((points - k) % 2 != 0 || residual(points, k, 0) < 0) continue;
    // All submasks of odd, including odd itself and 0.
    std::uint32_t minus = odd;
    for (;;) {
      const int l = std::popcount(minus);
      const std::int64_t r = residual(points, k, l);
      if (r >= 0) visit(static_cast<std::uint16_t>(odd), static_cast<std::uint16_t>(minus), r / 2);
      if (minus == 0) break;
      minus = (minus - 1) & odd;
    }
  }
}

std::string summarize(const StrataTable& t) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    out << (i ? ", " : "") << "m=" << t.rows[i].m << ": " << t.rows[i].count;
  out << '}';
  return out.str();
}

}  // namespace

std::string_view to_string(KummerConvention c) {
  return c == KummerConvention::Derived ? "derived" : "paper";
}

Integer StrataTable::total() const {
  Integer out = 0;
  for (const auto& r : rows) out += r.count;
  return out;
}

const StratumRow* StrataTable::find(std::int64_t m) const {
  for (const auto& r : rows)
    if (r.m == m) return &r;
  return nullptr;
}

std::optional<std::int64_t> StrataTable::min_m() const {
  if (rows.empty()) return std::nullopt;
  return rows.back().m;
}

std::optional<std::int64_t> StrataTable::max_m() const {
  if (rows.empty()) return std::nullopt;
  return rows.front().m;
}

bool same_rows(const StrataTable& a, const StrataTable& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.m != y.m || x.dim != y.dim || x.count != y.count || x.component_type != y.component_type)
      return false;
  }
  return true;
}

StrataTable strata_k3_formula(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "n must be >= 1");
  if (n > kMaxFormulaN) {
    throw Error(ErrorCode::TooLarge, "formula evaluation is capped at n = " +
                                         std::to_string(kMaxFormulaN));
  }
  std::map<std::int64_t, Integer> counts;
  for (int k = 0; k <= kK3FixedPoints; ++k) {
    for (int l = 0; l <= k; ++l) {
      const std::int64_t r = residual(n, k, l);
      if (r < 0 || r % 2 != 0) continue;
      counts[r / 2] += binomial(kK3FixedPoints, k) * binomial(k, l);
    }
  }
  return table_from_counts(ManifoldKind::K3n, n, KummerConvention::Derived, counts);
}

std::vector<ComponentLabel> k3_labels(std::int64_t n) {
  check_oracle_range(n);
  std::vector<ComponentLabel> out;
  for (std::uint16_t odd = 0; odd < (1u << kK3FixedPoints); ++odd) {
    const int k = std::popcount(odd);
    if ((n - k) % 2 != 0 || residual(n, k, 0) < 0) continue;
    std::uint16_t minus = odd;
    for (;;) {
      if (residual(n, k, std::popcount(minus)) >= 0)
        out.push_back({ManifoldKind::K3n, odd, minus});
      if (minus == 0) break;
      minus = static_cast<std::uint16_t>((minus - 1) & odd);
    }
  }
  return out;
}

StrataTable strata_k3_oracle(std::int64_t n) {
  std::map<std::int64_t, Integer> counts;
  for (const auto& label : k3_labels(n)) {
    const std::int64_t r = residual(n, std::popcount(label.i_odd), std::popcount(label.i_minus));
    counts[r / 2] += 1;
  }
  return table_from_counts(ManifoldKind::K3n, n, KummerConvention::Derived, counts);
}

std::vector<ComponentLabel> kummer_labels(std::int64_t n, KummerConvention c) {
  std::vector<ComponentLabel> out;
  for_each_kummer_label(n, c, [&](std::uint16_t odd, std::uint16_t minus, std::int64_t) {
    out.push_back({ManifoldKind::Kummer, odd, minus});
  });
  return out;
}

StrataTable strata_kummer_oracle(std::int64_t n, KummerConvention c) {
  std::map<std::int64_t, std::uint64_t> raw;
  for_each_kummer_label(n, c, [&](std::uint16_t, std::uint16_t, std::int64_t m) { ++raw[m]; });
  std::map<std::int64_t, Integer> counts;
  for (const auto& [m, count] : raw) counts[m] = count;
  return table_from_counts(ManifoldKind::Kummer, n, c, counts);
}

Integer zero_sum_subset_count(std::int64_t k) {
  if (k < 0 || k > kKummerFixedPoints) return 0;
  Integer twisted = 0;  // [t^k] (1 - t^2)^8
  if (k % 2 == 0) {
    twisted = binomial(8, k / 2);
    if ((k / 2) % 2 == 1) twisted = -twisted;
  }
  return (binomial(kKummerFixedPoints, k) + 15 * twisted) / 16;
}

Integer kummer_printed_count(std::int64_t n, std::int64_t m) {
  Integer total = 0;
  for (std::int64_t k = 0; k <= kKummerFixedPoints; ++k) {
    if ((n - k) % 2 != 0) continue;  // non-integer top index
    const std::int64_t top = (n - k) / 2 - m;
    if (top < 0) continue;
    total += zero_sum_subset_count(k) * binomial(top, k);
  }
  return total;
}

Integer kummer_corrected_count(std::int64_t n, std::int64_t m, KummerConvention c) {
  const std::int64_t points = kummer_points(n, c);
  Integer total = 0;
  for (std::int64_t k = 0; k <= kKummerFixedPoints; ++k) {
    if ((points - k) % 2 != 0) continue;
    const std::int64_t l = (points - k) / 2 - m;
    total += zero_sum_subset_count(k) * binomial(k, l);
  }
  return total;
}

KummerComparison compare_kummer_formula(std::int64_t n, KummerConvention c) {
  const StrataTable oracle = strata_kummer_oracle(n, c);
  KummerComparison out;
  out.n = n;
  out.convention = c;
  const std::int64_t top = kummer_points(n, c) / 2;
  for (std::int64_t m = top; m >= 0; --m) {
    KummerComparisonRow row;
    row.m = m;
    const StratumRow* r = oracle.find(m);
    row.oracle = r ? r->count : Integer(0);
    row.printed = kummer_printed_count(n, m);
    row.corrected = kummer_corrected_count(n, m, c);
    if (row.corrected != row.oracle) {
      throw Error(ErrorCode::CheckFailed,
                  "corrected Kummer count disagrees with enumeration at n = " +
                      std::to_string(n) + ", m = " + std::to_string(m));
    }
    if (row.printed != row.oracle) {
      out.discrepancies.push_back(
          {"PAPER-DISCREPANCY", "kummer.closed-form",
           "printed N^n_m = sum_{||I||=1} C((n-|I|)/2 - m, |I|) at n = " + std::to_string(n) +
               ", m = " + std::to_string(m) + " (" + std::string(to_string(c)) + " convention)",
           row.printed.str(), row.oracle.str()});
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<Discrepancy> kummer_discrepancies(std::int64_t n) {
  std::vector<Discrepancy> out = compare_kummer_formula(n, KummerConvention::Derived).discrepancies;

  const StrataTable derived = strata_kummer_oracle(n, KummerConvention::Derived);
  const StrataTable printed = strata_kummer_oracle(n, KummerConvention::Printed);
  if (!same_rows(derived, printed)) {
    out.push_back({"PAPER-DISCREPANCY", "kummer.dimension-formula",
                   "2m = n - |I_odd| - 2|I_-| against 2m = (n+1) - |I_odd| - 2|I_-| at n = " +
                       std::to_string(n),
                   summarize(printed), summarize(derived)});
  }

  // The largest stratum is stated to be one copy of Hilb^{(n+1)/2}.
  const Rational stated_top(n + 1, 2);
  const auto check_top = [&](const StrataTable& t) {
    const auto top = t.max_m();
    const bool ok = top && Rational(*top) == stated_top && t.rows.front().count == 1;
    if (ok) return;
    out.push_back({"PAPER-DISCREPANCY", "kummer.top-stratum",
                   "largest stratum at n = " + std::to_string(n) + " (" +
                       std::string(to_string(t.convention)) + " convention)",
                   "1 copy at m = " + to_string(stated_top),
                   top ? t.rows.front().count.str() + " at m = " + std::to_string(*top)
                       : std::string("empty")});
  };
  check_top(derived);
  check_top(printed);
  return out;
}

BoundsReport bounds_report(ManifoldKind kind, std::int64_t n, KummerConvention c) {
  BoundsReport r;
  r.kind = kind;
  r.n = n;
  r.convention = c;
  const StrataTable t = kind == ManifoldKind::K3n ? strata_k3_oracle(n) : strata_kummer_oracle(n, c);
  r.min_m = t.min_m();
  r.max_m = t.max_m();
  r.has_isolated = t.find(0) != nullptr;

  const Rational half_points = kind == ManifoldKind::K3n ? Rational(n, 2) : Rational(n + 1, 2);
  const std::int64_t offset = kind == ManifoldKind::K3n ? 12 : 24;
  r.stated_lower = std::max(Rational(0), Rational(half_points - offset));
  r.stated_upper = half_points;
  r.stated_isolated_max_n = kind == ManifoldKind::K3n ? 24 : 48;

  const std::string prefix(to_string(kind));
  const std::string where = "n = " + std::to_string(n);
  auto flag = [&](const std::string& anchor, const std::string& detail, const std::string& stated,
                  const std::string& observed) {
    r.discrepancies.push_back({"PAPER-DISCREPANCY", prefix + "." + anchor, detail + " at " + where,
                               stated, observed});
  };
  if (!r.min_m) return r;

  const std::string range = "[" + to_string(r.stated_lower) + ", " + to_string(r.stated_upper) + "]";
  const std::string actual = "[" + std::to_string(*r.min_m) + ", " + std::to_string(*r.max_m) + "]";
  if (Rational(*r.min_m) < r.stated_lower || Rational(*r.max_m) > r.stated_upper) {
    flag("stratum-range", "stratum index outside the stated range", range, actual);
  } else {
    // Smallest integer >= stated_lower; largest integer <= stated_upper.
    const Integer lo_num = boost::multiprecision::numerator(r.stated_lower);
    const Integer lo_den = boost::multiprecision::denominator(r.stated_lower);
    const Integer lowest = (lo_num + lo_den - 1) / lo_den;
    const Integer highest = boost::multiprecision::numerator(r.stated_upper) /
                            boost::multiprecision::denominator(r.stated_upper);
    if (Integer(*r.min_m) != lowest) {
      flag("stratum-range", "stated lower bound on m is not attained", "m >= " + to_string(r.stated_lower),
           "min m = " + std::to_string(*r.min_m));
    }
    if (Integer(*r.max_m) != highest) {
      flag("stratum-range", "stated upper bound on m is not attained", "m <= " + to_string(r.stated_upper),
           "max m = " + std::to_string(*r.max_m));
    }
  }
  const bool stated_allows = n <= r.stated_isolated_max_n;
  if (r.has_isolated && !stated_allows) {
    flag("isolated-threshold", "isolated fixed points beyond the stated threshold",
         "n <= " + std::to_string(r.stated_isolated_max_n), "isolated points present");
  } else if (!r.has_isolated && stated_allows) {
    flag("isolated-threshold", "no isolated fixed points although n is within the stated threshold",
         "n <= " + std::to_string(r.stated_isolated_max_n), "no m = 0 stratum");
  }
  return r;
}

}  // namespace hkfl
