#include "hkfl/e8.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "hkfl/error.hpp"
#include "hkfl/snf.hpp"

namespace hkfl {

namespace {

constexpr int kCacheVersion = 1;
constexpr const char* kCacheMagic = "hkfl-e8-short-vectors";

std::int64_t exact_norm(const IntMatrix& gram, const IntVector& x) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      row = checked_add(row, checked_mul(gram(i, j), x[j]));
    total = checked_add(total, checked_mul(row, x[i]));
  }
  return total;
}

class FinckePohst {
 public:
  FinckePohst(const IntMatrix& gram, std::int64_t bound, double cap)
      : gram_(gram), n_(gram.rows()), bound_(bound), cap_(cap),
        q_(n_, 0.0L), mu_(n_, n_, 0.0L), x_(n_, 0) {
    // Cholesky in long double: gram = R^T R, q_i = r_ii^2, mu_ij = r_ij / r_ii.
    Matrix<long double> r(n_, n_, 0.0L);
    for (std::size_t i = 0; i < n_; ++i) {
      long double diag = static_cast<long double>(gram(i, i));
      for (std::size_t k = 0; k < i; ++k) diag -= r(k, i) * r(k, i);
      if (!(diag > 0)) throw Error(ErrorCode::BadParameter, "gram is not positive definite");
      r(i, i) = std::sqrt(diag);
      for (std::size_t j = i + 1; j < n_; ++j) {
        long double v = static_cast<long double>(gram(i, j));
        for (std::size_t k = 0; k < i; ++k) v -= r(k, i) * r(k, j);
        r(i, j) = v / r(i, i);
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      q_[i] = r(i, i) * r(i, i);
      for (std::size_t j = i + 1; j < n_; ++j) mu_(i, j) = r(i, j) / r(i, i);
    }
    slack_ = 1e-6L * (static_cast<long double>(bound_) + 1.0L);
  }

  ShortVectorTable run() {
    ShortVectorTable table;
    table.bound = bound_;
    if (n_ > 0) descend(n_ - 1, static_cast<long double>(bound_), table);
    for (auto& [norm, list] : table.by_norm) std::sort(list.begin(), list.end());
    return table;
  }

 private:
  void descend(std::size_t i, long double budget, ShortVectorTable& table) {
    long double center = 0.0L;
    for (std::size_t j = i + 1; j < n_; ++j) center += mu_(i, j) * static_cast<long double>(x_[j]);
    const long double radius = std::sqrt(std::max(budget + slack_, 0.0L) / q_[i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(-center - radius - slack_));
    const auto hi = static_cast<std::int64_t>(std::floor(-center + radius + slack_));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x_[i] = v;
      const long double t = static_cast<long double>(v) + center;
      const long double remaining = budget - q_[i] * t * t;
      if (remaining < -slack_) continue;
      if (i > 0) {
        descend(i - 1, remaining, table);
      } else {
        accept(table);
      }
    }
    x_[i] = 0;
  }

  void accept(ShortVectorTable& table) {
    bool zero = true;
    for (auto c : x_) zero = zero && c == 0;
    if (zero) return;
    const std::int64_t norm = exact_norm(gram_, x_);
    if (norm > bound_) return;
    if (static_cast<double>(++found_) > cap_) {
      throw Error(ErrorCode::BoundTooLarge, "more than " + std::to_string(cap_) +
                                                " vectors below norm " + std::to_string(bound_));
    }
    table.by_norm[norm].push_back(x_);
  }

  const IntMatrix& gram_;
  std::size_t n_;
  std::int64_t bound_;
  double cap_;
  std::vector<long double> q_;
  Matrix<long double> mu_;
  IntVector x_;
  long double slack_ = 0.0L;
  std::size_t found_ = 0;
};

double volume_estimate(const IntMatrix& gram, std::int64_t bound) {
  const double n = static_cast<double>(gram.rows());
  const double det = determinant(gram.cast<Integer>()).convert_to<double>();
  const double ball = std::pow(std::numbers::pi * static_cast<double>(bound), n / 2.0) /
                      std::tgamma(n / 2.0 + 1.0);
  return ball / std::sqrt(std::abs(det));
}

std::optional<ShortVectorTable> read_cache(const std::filesystem::path& file,
                                           std::int64_t bound) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string magic;
  int version = 0;
  std::string bound_word, count_word;
  std::int64_t stored_bound = 0;
  std::size_t count = 0;
  if (!(in >> magic >> version >> bound_word >> stored_bound >> count_word >> count)) return std::nullopt;
  if (magic != kCacheMagic || version != kCacheVersion || bound_word != "bound" ||
      count_word != "count" || stored_bound != bound) {
    return std::nullopt;
  }
  const IntMatrix gram = lattice_e8().gram();
  ShortVectorTable table;
  table.bound = bound;
  for (std::size_t k = 0; k < count; ++k) {
    std::int64_t norm = 0;
    IntVector v(8);
    if (!(in >> norm)) return std::nullopt;
    for (auto& c : v)
      if (!(in >> c)) return std::nullopt;
    if (norm <= 0 || norm > bound || exact_norm(gram, v) != norm) return std::nullopt;
    table.by_norm[norm].push_back(std::move(v));
  }
  std::string trailing;
  if (in >> trailing) return std::nullopt;
  for (const auto& [norm, list] : table.by_norm) {
    if (!std::is_sorted(list.begin(), list.end()) ||
        std::adjacent_find(list.begin(), list.end()) != list.end()) {
      return std::nullopt;
    }
  }
  return table;
}

void write_cache(const std::filesystem::path& file, const ShortVectorTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kCacheMagic << ' ' << kCacheVersion << "\nbound " << table.bound << "\ncount "
        << table.total() << '\n';
    for (const auto& [norm, list] : table.by_norm) {
      for (const auto& v : list) {
        out << norm;
        for (auto c : v) out << ' ' << c;
        out << '\n';
      }
    }
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

std::size_t ShortVectorTable::total() const {
  std::size_t out = 0;
  for (const auto& [norm, list] : by_norm) out += list.size();
  return out;
}

ShortVectorTable enumerate_short_vectors(const IntMatrix& gram, std::int64_t bound, double cap) {
  if (bound < 1) throw Error(ErrorCode::BadParameter, "bound must be positive");
  if (!gram.is_square()) throw Error(ErrorCode::NotSquare, "gram matrix must be square");
  const Signature sig = signature(gram);
  if (sig.positive != gram.rows()) {
    throw Error(ErrorCode::BadParameter, "gram is not positive definite");
  }
  const double estimate = volume_estimate(gram, bound);
  if (estimate > cap) {
    throw Error(ErrorCode::BoundTooLarge,
                "estimated " + std::to_string(static_cast<long long>(estimate)) +
                    " vectors below norm " + std::to_string(bound) + " exceeds cap");
  }
  return FinckePohst(gram, bound, cap).run();
}

ShortVectorTable e8_short_vectors(std::int64_t bound, double cap) {
  if (bound < 2 || bound % 2 != 0) {
    throw Error(ErrorCode::BadParameter, "E8 norm bound must be even and >= 2");
  }
  return enumerate_short_vectors(lattice_e8().gram(), bound, cap);
}

std::filesystem::path e8_cache_file(const std::filesystem::path& cache_dir, std::int64_t bound) {
  return cache_dir / ("e8-short-v" + std::to_string(kCacheVersion) + "-b" +
                      std::to_string(bound) + ".txt");
}

ShortVectorTable e8_short_vectors_cached(std::int64_t bound,
                                         const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return e8_short_vectors(bound);
  const auto file = e8_cache_file(*cache_dir, bound);
  if (auto cached = read_cache(file, bound)) return std::move(*cached);
  ShortVectorTable table = e8_short_vectors(bound);
  write_cache(file, table);
  return table;
}

std::vector<IntVector> e8_roots() {
  ShortVectorTable table = e8_short_vectors(2);
  std::vector<IntVector> roots = std::move(table.by_norm[2]);
  Matrix<Integer> m(roots.size(), 8);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = roots[i][j];
  const SnfResult snf = smith_normal_form(m);
  for (const auto& d : snf.diag) {
    if (d != 1) throw Error(ErrorCode::CheckFailed, "roots do not generate E8");
  }
  return roots;
}

ClassKey class_key(const IntVector& v) {
  ClassKey key = 0;
  for (std::size_t i = 0; i < 8 && i < v.size(); ++i)
    if (mod_floor(v[i], 2) != 0) key |= static_cast<ClassKey>(1u << i);
  return key;
}

std::size_t ClassCoverage::covered() const {
  return static_cast<std::size_t>(
      std::count_if(per_class.begin(), per_class.end(), [](const auto& e) { return e.has_value(); }));
}

std::int64_t ClassCoverage::max_min_norm() const {
  std::int64_t out = 0;
  for (const auto& e : per_class)
    if (e) out = std::max(out, e->min_norm);
  return out;
}

ClassCoverage class_coverage(const ShortVectorTable& table) {
  ClassCoverage cov;
  cov.bound = table.bound;
  cov.per_class[0] = ClassEntry{0, IntVector(8, 0)};
  for (const auto& [norm, list] : table.by_norm) {
    for (const auto& v : list) {
      const ClassKey key = class_key(v);
      if (key == 0 && !cov.zero_class_min_nonzero_norm) cov.zero_class_min_nonzero_norm = norm;
      if (!cov.per_class[key]) cov.per_class[key] = ClassEntry{norm, v};
    }
  }
  return cov;
}

ClassCoverage class_coverage(std::int64_t bound) { return class_coverage(e8_short_vectors(bound)); }

int e8m2_q_of_class(ClassKey key) {
  IntVector v(8, 0);
  for (std::size_t i = 0; i < 8; ++i) v[i] = (key >> i) & 1;
  const std::int64_t norm = exact_norm(lattice_e8().gram(), v);
  return mod_floor(norm, 4) == 0 ? 0 : 1;
}

std::array<RootSumWitness, 256> all_sum_of_roots_witnesses() {
  const IntMatrix gram = lattice_e8().gram();
  // One root from each +-pair: first non-zero coordinate positive.
  std::vector<IntVector> roots;
  const ShortVectorTable table = e8_short_vectors(2);
  for (const auto& r : table.by_norm.at(2)) {
    auto first = std::find_if(r.begin(), r.end(), [](auto c) { return c != 0; });
    if (*first > 0) roots.push_back(r);
  }
  const std::size_t count = roots.size();
  std::vector<std::vector<bool>> orthogonal(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      std::int64_t p = 0;
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) p += roots[a][i] * gram(i, j) * roots[b][j];
      orthogonal[a][b] = p == 0;
    }

  std::array<RootSumWitness, 256> out;
  std::array<bool, 256> done{};
  out[0] = RootSumWitness{0, {}, IntVector(8, 0), 0, true};
  done[0] = true;
  std::size_t remaining = 255;

  std::vector<std::size_t> chosen;
  // Depth-first over increasing index sets of exactly `size` orthogonal roots.
  auto search = [&](auto&& self, std::size_t size, std::size_t start) -> void {
    if (remaining == 0) return;
    if (chosen.size() == size) {
      IntVector sum(8, 0);
      for (auto idx : chosen)
        for (std::size_t i = 0; i < 8; ++i) sum[i] += roots[idx][i];
      const ClassKey key = class_key(sum);
      if (done[key]) return;
      RootSumWitness w;
      w.key = key;
      for (auto idx : chosen) w.roots.push_back(roots[idx]);
      w.vector = sum;
      w.norm = exact_norm(gram, sum);
      w.orthogonal_decomposition = true;
      out[key] = std::move(w);
      done[key] = true;
      --remaining;
      return;
    }
    for (std::size_t c = start; c < count; ++c) {
      bool ok = true;
      for (auto idx : chosen) ok = ok && orthogonal[idx][c];
      if (!ok) continue;
      chosen.push_back(c);
      self(self, size, c + 1);
      chosen.pop_back();
      if (remaining == 0) return;
    }
  };
  for (std::size_t size = 1; size <= 4 && remaining > 0; ++size) search(search, size, 0);

  if (remaining > 0) {
    const ClassCoverage cov = class_coverage(8);
    for (std::size_t key = 0; key < 256; ++key) {
      if (done[key]) continue;
      RootSumWitness w;
      w.key = static_cast<ClassKey>(key);
      if (cov.per_class[key]) {
        w.vector = cov.per_class[key]->witness;
        w.norm = cov.per_class[key]->min_norm;
      }
      w.orthogonal_decomposition = false;
      out[key] = std::move(w);
    }
  }
  return out;
}

RootSumWitness sum_of_roots_witness(ClassKey key) { return all_sum_of_roots_witnesses()[key]; }

}  // namespace hkfl
