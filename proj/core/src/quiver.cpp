#include "hkfl/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hkfl/error.hpp"

namespace hkfl {

bool is_positive_root(DimVector v) {
  if (v.v1 < 0 || v.v2 < 0) return false;
  if (v.v1 == 0 && v.v2 == 0) return false;
  return std::llabs(v.v1 - v.v2) <= 1;
}

std::int64_t quiver_dim(DimVector v, DimVector w) {
  const std::int64_t diff = v.v1 - v.v2;
  return 2 * (v.v1 * w.v1 + v.v2 * w.v2) - 2 * diff * diff;
}

std::vector<LocalComponent> local_fixed_components(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "local_fixed_components needs n >= 1");
  std::vector<LocalComponent> out;
  auto push = [&](DimVector v, ComponentSign sign) {
    const std::int64_t dim = quiver_dim(v, kFraming);
    if (dim < 0) return;  // empty variety (v = e2 for n = 1)
    out.push_back({v, dim, sign, is_positive_root(v)});
  };
  if (n % 2 == 0) {
    push({n / 2, n / 2}, ComponentSign::None);
  } else {
    push({(n + 1) / 2, (n - 1) / 2}, ComponentSign::Plus);
    push({(n - 1) / 2, (n + 1) / 2}, ComponentSign::Minus);
  }
  return out;
}

std::int64_t d_invariant(const Partition& parts) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // Row i holds boxes j = 0..parts[i]-1; count j with i + j even.
    const std::int64_t len = parts[i];
    d += (i % 2 == 0) ? (len + 1) / 2 : len / 2;
  }
  return d;
}

void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "partitions need n >= 1");
  if (n > kMaxPartitionN) {
    throw Error(ErrorCode::TooLarge, "partition enumeration is capped at n = " +
                                         std::to_string(kMaxPartitionN));
  }
  // Standard successor in reverse-lexicographic order.
  Partition p{static_cast<int>(n)};
  for (;;) {
    visit(p);
    int removed = 0;
    while (!p.empty() && p.back() == 1) {
      p.pop_back();
      ++removed;
    }
    if (p.empty()) return;
    const int k = --p.back();
    ++removed;
    while (removed > k) {
      p.push_back(k);
      removed -= k;
    }
    if (removed > 0) p.push_back(removed);
  }
}

std::vector<PartitionProfile> partitions(std::int64_t n) {
  std::vector<PartitionProfile> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back({p, d_invariant(p)}); });
  return out;
}

DRangeReport d_range_report(std::int64_t n) {
  DRangeReport r;
  r.n = n;
  if (n % 2 == 0) {
    r.expected = {n / 2};
  } else {
    r.expected = {(n - 1) / 2, (n + 1) / 2};
  }
  for_each_partition(n, [&](const Partition& p) {
    const std::int64_t d = d_invariant(p);
    ++r.histogram[d];
    ++r.partition_count;
    if (!r.counterexample &&
        std::find(r.expected.begin(), r.expected.end(), d) == r.expected.end()) {
      r.counterexample = PartitionProfile{p, d};
    }
  });
  if (n % 2 == 1 && n >= 3) {
    r.both_attained = r.histogram.count(r.expected[0]) && r.histogram.count(r.expected[1]);
  }
  r.holds = !r.counterexample && r.both_attained;
  return r;
}

DRangeReport verify_d_range(std::int64_t n) {
  DRangeReport r = d_range_report(n);
  if (!r.holds) {
    std::ostringstream msg;
    msg << "n = " << n << ": ";
    if (r.counterexample) {
      msg << "partition (";
      for (std::size_t i = 0; i < r.counterexample->parts.size(); ++i)
        msg << (i ? "," : "") << r.counterexample->parts[i];
      msg << ") has d = " << r.counterexample->d << ", expected";
      for (auto e : r.expected) msg << ' ' << e;
    } else {
      msg << "d does not attain both values " << r.expected[0] << " and " << r.expected[1];
    }
    throw Error(ErrorCode::CheckFailed, msg.str());
  }
  return r;
}

}  // namespace hkfl
