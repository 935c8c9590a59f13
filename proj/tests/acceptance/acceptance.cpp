// Acceptance suite: one [PASS]/[FAIL] line per criterion. Exit status is
// non-zero if any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hkfl/discriminant.hpp"
#include "hkfl/e8.hpp"
#include "hkfl/embeddings.hpp"
#include "hkfl/error.hpp"
#include "hkfl/quiver.hpp"
#include "hkfl/snf.hpp"
#include "hkfl/strata.hpp"
#include <nlohmann/json.hpp>

namespace {

using namespace hkfl;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double seconds_limit;  // <= 0: no limit
  std::function<Verdict()> check;
};

std::string list(const std::vector<std::int64_t>& v, std::size_t max = 8) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < max; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  if (v.size() > max) s += ",...";
  return s;
}

std::string table_text(const nlohmann::json& rows) {
  std::string s = "{";
  for (std::size_t i = 0; i < rows.size(); ++i)
    s += (i ? ", " : "") + std::string("m=") + std::to_string(rows[i]["m"].get<int>()) + ": " +
         rows[i]["count"].get<std::string>();
  return s + "}";
}

// Golden K3^[n] table through the command-line front end.
Verdict golden_k3(int n, const std::string& expected) {
  std::ostringstream out, err;
  const std::vector<std::string> args{"strata", "k3n", "--n", std::to_string(n), "--format", "json"};
  const int code = cli::run(args, out, err);
  if (code != 0) return {false, "exit " + std::to_string(code) + ": " + err.str()};
  const auto doc = nlohmann::json::parse(out.str());
  const std::string got = table_text(doc["result"]["rows"]);
  return {got == expected, "strata k3n --n " + std::to_string(n) + " -> " + got};
}

std::string str(const StrataTable& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    s += (i ? ", " : "") + std::string("m=") + std::to_string(t.rows[i].m) + ": " + t.rows[i].count.str();
  return s + "}";
}

IntMatrix random_even_gram(std::mt19937& rng, std::size_t rank) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    IntMatrix g(rank, rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      g(i, i) = 2 * entry(rng);
      for (std::size_t j = i + 1; j < rank; ++j) g(i, j) = g(j, i) = entry(rng);
    }
    try {
      return make_lattice(g).gram();
    } catch (const Error&) {
      // degenerate; draw again
    }
  }
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "K3^[2] golden table", 1.0, [] { return golden_k3(2, "{m=1: 1, m=0: 28}"); }});
  c.push_back({2, "K3^[3] golden table", 1.0, [] { return golden_k3(3, "{m=1: 8, m=0: 64}"); }});

  c.push_back({3, "formula = oracle for n in 1..60", 5.0, [] {
                 std::vector<std::int64_t> bad;
                 for (std::int64_t n = 1; n <= 60; ++n)
                   if (!same_rows(strata_k3_formula(n), strata_k3_oracle(n))) bad.push_back(n);
                 return Verdict{bad.empty(), bad.empty() ? "60 of 60 tables identical" : "differ at n = " + list(bad)};
               }});

  c.push_back({4, "top stratum count 1 (n even) / 8 (n odd), n in 1..60", 0, [] {
                 std::vector<std::int64_t> bad;
                 for (std::int64_t n = 1; n <= 60; ++n) {
                   const auto t = strata_k3_formula(n);
                   const Integer expected = n % 2 == 0 ? 1 : 8;
                   const std::int64_t top_m = n % 2 == 0 ? n / 2 : (n - 1) / 2;
                   if (t.rows.empty() || t.rows.front().count != expected || t.rows.front().m != top_m)
                     bad.push_back(n);
                 }
                 return Verdict{bad.empty(), bad.empty() ? "all 60 tables" : "fails at n = " + list(bad)};
               }});

  c.push_back({5, "K3n: m = 0 row iff n <= 24; min m = max(0, ceil(n/2) - 12), n in 1..60", 0, [] {
                 std::vector<std::int64_t> iso_bad, min_bad;
                 std::string example;
                 for (std::int64_t n = 1; n <= 60; ++n) {
                   const auto t = strata_k3_oracle(n);
                   const bool has_zero = t.find(0) != nullptr;
                   if (has_zero != (n <= 24)) iso_bad.push_back(n);
                   const std::int64_t stated = std::max<std::int64_t>(0, (n + 1) / 2 - 12);
                   if (*t.min_m() != stated) {
                     if (min_bad.empty())
                       example = "n = " + std::to_string(n) + ": min m = " + std::to_string(*t.min_m()) +
                                 ", formula " + std::to_string(stated);
                     min_bad.push_back(n);
                   }
                 }
                 const bool pass = iso_bad.empty() && min_bad.empty();
                 if (pass) return Verdict{true, "all 60 tables"};
                 return Verdict{false, "isolated-point rule fails at n = " + list(iso_bad) + "; min m rule fails at " +
                                           std::to_string(min_bad.size()) + " values of n (" + example +
                                           "); odd n >= 23 use at most 7 + 2*7 = 21 points"};
               }});

  c.push_back({6, "Kummer derived tables, top stratum, discrepancy records, zero-sum count", 5.0, [] {
                 std::vector<std::string> failures;
                 const std::vector<std::pair<int, std::string>> golden{
                     {1, "{m=1: 1}"}, {2, "{m=1: 1, m=0: 36}"}, {3, "{m=2: 1, m=0: 140}"}};
                 for (const auto& [n, expected] : golden) {
                   const std::string got = str(strata_kummer_oracle(n));
                   if (got != expected) failures.push_back("n = " + std::to_string(n) + " gives " + got);
                 }
                 std::vector<std::int64_t> top_bad;
                 for (std::int64_t n = 1; n <= 60; ++n)
                   if (strata_kummer_oracle(n).rows.front().count != 1) top_bad.push_back(n);
                 if (!top_bad.empty()) failures.push_back("top stratum count != 1 at n = " + list(top_bad));

                 std::set<std::string> anchors;
                 for (std::int64_t n = 1; n <= 3; ++n)
                   for (const auto& d : kummer_discrepancies(n))
                     if (d.code == "PAPER-DISCREPANCY") anchors.insert(d.anchor);
                 if (!anchors.count("kummer.closed-form") || !anchors.count("kummer.dimension-formula"))
                   failures.push_back("missing discrepancy records");

                 // Direct enumeration over all 2^16 subsets of Z_2^4.
                 std::uint64_t enumerated = 0;
                 std::vector<std::uint64_t> by_size(17, 0);
                 for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
                   int sum = 0;
                   for (int a = 0; a < 16; ++a)
                     if (mask >> a & 1) sum ^= a;
                   if (sum == 0) {
                     ++enumerated;
                     ++by_size[std::popcount(mask)];
                   }
                 }
                 Integer formula_total = 0;
                 bool per_size_ok = true;
                 for (int k = 0; k <= 16; ++k) {
                   formula_total += zero_sum_subset_count(k);
                   per_size_ok = per_size_ok && zero_sum_subset_count(k) == by_size[k];
                 }
                 if (!per_size_ok) failures.push_back("zero_sum_subset_count differs from enumeration");
                 const Integer asserted = Integer(1) << 15;
                 if (formula_total != asserted) {
                   failures.push_back("sum_k zero_sum_subset_count(k) = " + formula_total.str() +
                                      " (enumeration " + std::to_string(enumerated) + " = 2^12, the kernel of " +
                                      "F_2^16 -> F_2^4), asserted 2^15 = " + asserted.str());
                 }
                 std::string detail;
                 for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
                 if (failures.empty())
                   detail = "tables, top strata and records as stated; sum = " + formula_total.str();
                 else
                   detail += "; tables n = 1, 2, 3, top strata and discrepancy records as stated";
                 return Verdict{failures.empty(), detail};
               }});

  c.push_back({7, "all 256 classes of E8(-2) have a vector of square >= -16, bound tight", 10.0, [] {
                 const ClassCoverage cov = class_coverage(8);
                 const bool covered = cov.covered() == 256;
                 const std::int64_t max_square = -2 * cov.max_min_norm();
                 const bool tight = max_square == -16;
                 std::string detail = std::to_string(cov.covered()) + "/256 covered; most negative minimal square " +
                                      std::to_string(max_square);
                 if (!tight) {
                   detail += " (120 root classes at -4, 135 classes at -8); the only class whose least non-zero "
                             "vector has square -16 is the zero class (2 * root), whose minimum is 0";
                 }
                 return Verdict{covered && tight, detail};
               }});

  c.push_back({8, "E8 counts 240/2160/6720/17520 and roots generate E8", 0, [] {
                 const auto t = e8_short_vectors(8);
                 const std::vector<std::size_t> expected{240, 2160, 6720, 17520};
                 std::vector<std::size_t> got;
                 for (std::int64_t norm = 2; norm <= 8; norm += 2)
                   got.push_back(t.by_norm.count(norm) ? t.by_norm.at(norm).size() : 0);
                 const auto roots = e8_roots();
                 Matrix<Integer> m(roots.size(), 8, Integer(0));
                 for (std::size_t i = 0; i < roots.size(); ++i)
                   for (std::size_t j = 0; j < 8; ++j) m(i, j) = roots[i][j];
                 const bool generate = smith_normal_form(m).diag == std::vector<Integer>(8, 1);
                 std::string counts;
                 for (auto g : got) counts += (counts.empty() ? "" : "/") + std::to_string(g);
                 return Verdict{got == expected && generate,
                                counts + ", SNF of roots " + (generate ? "all ones" : "not unimodular")};
               }});

  c.push_back({9, "embedding classes (1 for even n, 2 for odd n), witnesses, orbits 1/135/120", 30.0, [] {
                 const E8m2Context ctx = E8m2Context::build();
                 std::vector<std::int64_t> bad;
                 std::int64_t worst_square = 0;
                 for (std::int64_t n = 2; n <= 41; ++n) {
                   const auto classes = classify_embeddings(n, ctx);
                   bool ok = classes.size() == (n % 2 == 0 ? 1u : 2u);
                   for (const auto& cl : classes) {
                     if (cl.datum.trivial()) continue;
                     ok = ok && cl.witness && cl.witness->divisibility == 2 && cl.witness->square >= -16;
                     if (cl.witness) worst_square = std::min(worst_square, cl.witness->square);
                   }
                   if (!ok) bad.push_back(n);
                 }
                 std::multiset<std::size_t> sizes;
                 bool q_constant = true;
                 for (const auto& o : ctx.orbits) {
                   sizes.insert(o.members.size());
                   for (auto m : o.members) q_constant = q_constant && e8m2_q_of_class(m) == o.q;
                 }
                 const bool orbits_ok = sizes == std::multiset<std::size_t>{1, 120, 135} && q_constant;
                 std::string detail = bad.empty() ? "n in 2..41 as stated" : "fails at n = " + list(bad);
                 detail += "; least witness square " + std::to_string(worst_square) + "; " +
                           std::to_string(ctx.orbits.size()) + " orbits" + (orbits_ok ? " of sizes 1/135/120" : "");
                 return Verdict{bad.empty() && orbits_ok, detail};
               }});

  c.push_back({10, "A_{L_n} data for n in 2..20; Milgram within 1e-9", 0, [] {
                 const double tolerance = 1e-9;
                 std::vector<std::int64_t> bad;
                 for (std::int64_t n = 2; n <= 20; ++n) {
                   const auto p = discriminant_profile(lattice_ln(n));
                   bool ok = p.orders == std::vector<std::int64_t>{2 * n - 2} &&
                             q_value(p, Element{1}) == QModTwoZ(Rational(-1, 2 * (n - 1)));
                   const auto twos = order_two_elements(p);
                   ok = ok && twos.size() == 1 && twos[0].q == QModTwoZ(Rational(-(n - 1), 2));
                   if (!ok) bad.push_back(n);
                 }
                 std::vector<Lattice> lattices{lattice_u(),     lattice_e8(),    lattice_e8(-1),
                                               lattice_e8(-2),  lattice_a1(1),   lattice_a1(-1),
                                               lattice_mukai(), lattice_mukai_kummer()};
                 for (std::int64_t n = 2; n <= 20; ++n) lattices.push_back(lattice_ln(n));
                 std::mt19937 rng(20240611);
                 for (int i = 0; i < 20; ++i) lattices.push_back(make_lattice(random_even_gram(rng, 1 + i % 6)));
                 double worst = 0;
                 int milgram_failures = 0;
                 for (const auto& l : lattices) {
                   const auto r = milgram_report(l, tolerance);
                   worst = std::max(worst, r.abs_error);
                   if (!r.holds) ++milgram_failures;
                 }
                 char buf[64];
                 std::snprintf(buf, sizeof buf, "%.2e", worst);
                 std::string detail = bad.empty() ? "L_n data as stated" : "L_n data fails at n = " + list(bad);
                 detail += "; Milgram on " + std::to_string(lattices.size()) + " lattices, max error " + buf;
                 return Verdict{bad.empty() && milgram_failures == 0, detail};
               }});

  c.push_back({11, "local components, d-range for n in 1..40, wall verdicts", 5.0, [] {
                 std::vector<std::string> failures;
                 std::vector<std::int64_t> dims_bad;
                 for (std::int64_t n = 1; n <= 60; ++n) {
                   std::vector<std::int64_t> dims;
                   for (const auto& comp : local_fixed_components(n)) dims.push_back(comp.dim);
                   std::vector<std::int64_t> expected;
                   if (n % 2 == 0) expected = {n};
                   else if (n == 1) expected = {0};
                   else expected = {n - 1, n - 3};
                   if (dims != expected) dims_bad.push_back(n);
                 }
                 if (!dims_bad.empty()) failures.push_back("local dims fail at n = " + list(dims_bad));

                 std::vector<std::int64_t> d_bad;
                 std::string first;
                 for (std::int64_t n = 1; n <= 40; ++n) {
                   try {
                     verify_d_range(n);
                   } catch (const Error& e) {
                     if (first.empty()) first = e.what();
                     d_bad.push_back(n);
                   }
                 }
                 if (!d_bad.empty()) {
                   failures.push_back("verify_d_range fails for " + std::to_string(d_bad.size()) +
                                      " of 40 values, n = " + list(d_bad) + " (" + first + ")");
                 }

                 std::size_t wall_checked = 0;
                 std::vector<std::int64_t> wall_bad;
                 for (std::int64_t n = 3; n <= 21; n += 2) {
                   const std::int64_t threshold = -6 - 2 * n;
                   bool ok = true;
                   for (std::int64_t sq = threshold - 8; sq < 0; sq += 2) {
                     if ((2 * n - 2 + sq) % 4 != 0) continue;
                     const auto v = wall_check(n, sq).verdict;
                     const auto expected = sq > threshold    ? WallVerdict::Wall
                                           : sq == threshold ? WallVerdict::Boundary
                                                             : WallVerdict::NotWall;
                     ok = ok && v == expected;
                     ++wall_checked;
                   }
                   if (!ok) wall_bad.push_back(n);
                 }
                 if (!wall_bad.empty()) failures.push_back("wall verdicts fail at n = " + list(wall_bad));

                 std::string detail;
                 for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
                 if (dims_bad.empty()) detail += "; local dims as stated for n in 1..60";
                 if (wall_bad.empty())
                   detail += "; " + std::to_string(wall_checked) + " wall verdicts as stated";
                 if (detail.rfind("; ", 0) == 0) detail = detail.substr(2);
                 return Verdict{failures.empty(), detail};
               }});
  return c;
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    if (c.seconds_limit > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, c.seconds_limit);
      if (seconds >= c.seconds_limit) {
        v.pass = false;
        v.detail += "; over time limit";
      }
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << timing << "): " << v.detail
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " of 11 criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
