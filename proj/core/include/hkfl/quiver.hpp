#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hkfl {

// Dimension vector on the two vertices of the affine A1 quiver.
struct DimVector {
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  friend bool operator==(const DimVector&, const DimVector&) = default;
};

// Positive roots of affine A1: n delta, e1 + n delta, e2 + n delta with
// delta = e1 + e2, i.e. |v1 - v2| <= 1 and v != 0.
bool is_positive_root(DimVector v);

// 2 (v . w) - v^T C v with C = [[2, -2], [-2, 2]].
std::int64_t quiver_dim(DimVector v, DimVector w);

inline constexpr DimVector kFraming{1, 0};

enum class ComponentSign { None, Plus, Minus };

struct LocalComponent {
  DimVector v;
  std::int64_t dim = 0;
  ComponentSign sign = ComponentSign::None;
  bool root = true;
};

// Fixed locus of (x, y) -> (-x, -y) on Hilb^n(C^2) as quiver components with
// framing e1. n >= 1.
std::vector<LocalComponent> local_fixed_components(std::int64_t n);

using Partition = std::vector<int>;

// Boxes (i, j), 0-indexed, with i + j even.
std::int64_t d_invariant(const Partition& parts);

struct PartitionProfile {
  Partition parts;
  std::int64_t d = 0;
};

inline constexpr std::int64_t kMaxPartitionN = 60;

// Reverse-lexicographic order: (n), (n-1, 1), ... , (1, ..., 1).
// Throws BadParameter for n < 1 and TooLarge for n > 60.
void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& visit);
std::vector<PartitionProfile> partitions(std::int64_t n);

struct DRangeReport {
  std::int64_t n = 0;
  std::map<std::int64_t, std::uint64_t> histogram;  // d -> number of partitions
  std::vector<std::int64_t> expected;               // n/2, or (n-1)/2 and (n+1)/2
  std::uint64_t partition_count = 0;
  bool holds = false;
  std::optional<PartitionProfile> counterexample;   // first partition outside `expected`
  bool both_attained = true;                        // odd n >= 3 only
};

// Checks that d takes only the values the two-component description allows
// (n even: n/2; n odd: (n +- 1)/2, both attained for n >= 3).
// d_range_report never throws on a failed check; verify_d_range raises
// CheckFailed naming the counterexample.
DRangeReport d_range_report(std::int64_t n);
DRangeReport verify_d_range(std::int64_t n);

}  // namespace hkfl
