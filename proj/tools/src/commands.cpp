#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hkfl/discriminant.hpp"
#include "hkfl/e8.hpp"
#include "hkfl/embeddings.hpp"
#include "hkfl/error.hpp"
#include "hkfl/lattice.hpp"
#include "hkfl/quiver.hpp"

namespace hkfl::cli {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string joined(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string class_bits(ClassKey key) {
  std::string s;
  for (int i = 0; i < 8; ++i) s += ((key >> i) & 1) ? '1' : '0';
  return s;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

void add_strata_rows(const StrataTable& t, Output& o) {
  o.result["rows"] = Json::array();
  for (const auto& r : t.rows) {
    o.result["rows"].push_back(
        {{"m", r.m}, {"dim", r.dim}, {"count", r.count.str()}, {"component_type", r.component_type}});
    o.table.rows.push_back({str(r.m), str(r.dim), r.count.str(), r.component_type});
  }
  o.result["total"] = t.total().str();
  o.table.header = {"m", "dim", "count", "component_type"};
}

std::string table_text(const StrataTable& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    s += (i ? ", " : "") + std::string("m=") + str(t.rows[i].m) + ": " + t.rows[i].count.str();
  return s + "}";
}

void key_value_table(Output& o, const std::vector<std::pair<std::string, std::string>>& kv) {
  o.table.header = {"field", "value"};
  for (const auto& [k, v] : kv) o.table.rows.push_back({k, v});
}

Json gram_json(const IntMatrix& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::int64_t parse_component(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorCode::BadParameter, what + " must be two integers 'A,B'");
  return v;
}

DimVector parse_dim_vector(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::BadParameter, what + " must be two integers 'A,B'");
  return {parse_component(text.substr(0, comma), what), parse_component(text.substr(comma + 1), what)};
}

}  // namespace

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* dir = std::getenv("HKFL_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "hkfl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "hkfl";
  return std::nullopt;
}

Output strata_k3n(std::int64_t n, bool oracle) {
  Output o;
  o.parameters = {{"n", n}, {"oracle", oracle}};
  const StrataTable formula = strata_k3_formula(n);
  o.result["kind"] = "k3n";
  o.result["n"] = n;
  o.result["source"] = oracle ? "formula+oracle" : "formula";
  add_strata_rows(formula, o);
  o.summary.push_back("K3^[" + str(n) + "] fixed-locus strata (" +
                      std::string(oracle ? "formula, checked against enumeration" : "formula") + ")");
  if (oracle) {
    const StrataTable enumerated = strata_k3_oracle(n);
    const bool agree = same_rows(formula, enumerated);
    o.result["oracle_agrees"] = agree;
    if (!agree) {
      o.exit_code = 2;
      o.failure = "formula " + table_text(formula) + " differs from enumeration " + table_text(enumerated);
    }
  }
  return o;
}

Output strata_kummer(std::int64_t n, KummerConvention convention, bool compare) {
  Output o;
  o.parameters = {{"n", n}, {"convention", to_string(convention)}, {"compare_paper_formula", compare}};
  const StrataTable t = strata_kummer_oracle(n, convention);
  o.result["kind"] = "kummer";
  o.result["n"] = n;
  o.result["convention"] = to_string(convention);
  add_strata_rows(t, o);
  o.summary.push_back("Kummer n = " + str(n) + " fixed-locus strata (enumeration, " +
                      std::string(to_string(convention)) + " convention)");
  if (compare) {
    const KummerComparison cmp = compare_kummer_formula(n, convention);
    o.result["comparison"] = Json::array();
    for (const auto& r : cmp.rows) {
      o.result["comparison"].push_back({{"m", r.m},
                                        {"oracle", r.oracle.str()},
                                        {"printed", r.printed.str()},
                                        {"corrected", r.corrected.str()}});
    }
    o.discrepancies = cmp.discrepancies;
    o.summary.push_back("");
    o.summary.push_back("closed forms against enumeration (m: oracle / printed / corrected)");
    for (const auto& r : cmp.rows) {
      o.summary.push_back("  m=" + str(r.m) + ": " + r.oracle.str() + " / " + r.printed.str() + " / " +
                          r.corrected.str());
    }
  }
  for (auto& d : kummer_discrepancies(n))
    if (d.anchor != "kummer.closed-form") o.discrepancies.push_back(std::move(d));
  return o;
}

Output strata_bounds(ManifoldKind kind, std::int64_t n, KummerConvention convention) {
  Output o;
  o.parameters = {{"kind", to_string(kind)}, {"n", n}};
  if (kind == ManifoldKind::Kummer) o.parameters["convention"] = to_string(convention);
  const BoundsReport r = bounds_report(kind, n, convention);
  o.result["kind"] = to_string(kind);
  o.result["n"] = n;
  if (kind == ManifoldKind::Kummer) o.result["convention"] = to_string(convention);
  o.result["min_m"] = r.min_m ? Json(*r.min_m) : Json(nullptr);
  o.result["max_m"] = r.max_m ? Json(*r.max_m) : Json(nullptr);
  o.result["has_isolated"] = r.has_isolated;
  o.result["stated_lower"] = to_string(r.stated_lower);
  o.result["stated_upper"] = to_string(r.stated_upper);
  o.result["stated_isolated_max_n"] = r.stated_isolated_max_n;
  o.discrepancies = r.discrepancies;
  key_value_table(o, {{"min_m", r.min_m ? str(*r.min_m) : "-"},
                      {"max_m", r.max_m ? str(*r.max_m) : "-"},
                      {"has_isolated", r.has_isolated ? "yes" : "no"},
                      {"stated_lower", to_string(r.stated_lower)},
                      {"stated_upper", to_string(r.stated_upper)},
                      {"stated_isolated_max_n", str(r.stated_isolated_max_n)}});
  return o;
}

Output lattice_info(const std::string& name) {
  Output o;
  o.parameters = {{"name", name}};
  const Lattice l = named_lattice(name);
  const Signature sig = signature(l.gram());
  o.result["name"] = name;
  o.result["rank"] = l.rank();
  o.result["determinant"] = l.determinant().str();
  o.result["signature"] = {{"positive", sig.positive}, {"negative", sig.negative}};
  o.result["gram"] = gram_json(l.gram());
  key_value_table(o, {{"rank", std::to_string(l.rank())},
                      {"determinant", l.determinant().str()},
                      {"signature", "(" + std::to_string(sig.positive) + ", " + std::to_string(sig.negative) + ")"}});
  return o;
}

Output lattice_disc(const std::string& name) {
  Output o;
  o.parameters = {{"name", name}};
  const DiscriminantProfile p = discriminant_profile(named_lattice(name));
  o.result["name"] = name;
  o.result["order"] = p.order().str();
  o.result["length"] = p.length;
  o.result["orders"] = p.orders;
  o.result["generators"] = Json::array();
  o.table.header = {"generator", "order", "q", "lift"};
  for (std::size_t i = 0; i < p.length; ++i) {
    Json lift = Json::array();
    std::string lift_text;
    for (std::size_t j = 0; j < p.generator_lifts[i].size(); ++j) {
      const std::string c = to_string(p.generator_lifts[i][j]);
      lift.push_back(c);
      lift_text += (j ? " " : "") + c;
    }
    const std::string q = p.q_on_generators(i, i).str();
    o.result["generators"].push_back({{"order", p.orders[i]}, {"q", q}, {"lift", lift}});
    o.table.rows.push_back({std::to_string(i), str(p.orders[i]), q, lift_text});
  }
  Json q = Json::array();
  for (std::size_t i = 0; i < p.length; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < p.length; ++j) row.push_back(p.q_on_generators(i, j).str());
    q.push_back(row);
  }
  o.result["q_on_generators"] = q;
  o.summary.push_back("A_L of " + name + ": order " + p.order().str() + ", length " + std::to_string(p.length));
  return o;
}

Output lattice_milgram(const std::string& name) {
  Output o;
  o.parameters = {{"name", name}};
  const double tolerance = 1e-9;
  const MilgramReport r = milgram_report(named_lattice(name), tolerance);
  o.result["name"] = name;
  o.result["group_order"] = r.group_order.str();
  o.result["signature"] = r.lattice_signature.difference();
  o.result["signature_mod_8"] = r.signature_mod_8;
  o.result["gauss_sum"] = {{"re", r.gauss_sum.real()}, {"im", r.gauss_sum.imag()}};
  o.result["expected"] = {{"re", r.expected.real()}, {"im", r.expected.imag()}};
  o.result["abs_error"] = r.abs_error;
  o.result["tolerance"] = tolerance;
  o.result["holds"] = r.holds;
  key_value_table(o, {{"group_order", r.group_order.str()},
                      {"signature", str(r.lattice_signature.difference())},
                      {"signature_mod_8", str(r.signature_mod_8)},
                      {"gauss_sum", format_double(r.gauss_sum.real()) + " + " + format_double(r.gauss_sum.imag()) + "i"},
                      {"expected", format_double(r.expected.real()) + " + " + format_double(r.expected.imag()) + "i"},
                      {"abs_error", format_double(r.abs_error)},
                      {"holds", r.holds ? "yes" : "no"}});
  if (!r.holds) {
    o.exit_code = 2;
    o.failure = "Milgram identity fails for " + name + " (error " + format_double(r.abs_error) + ")";
  }
  return o;
}

Output e8_roots_cmd(bool count_only) {
  Output o;
  o.parameters = {{"count_only", count_only}};
  const auto roots = e8_roots();  // throws CheckFailed if they do not generate E8
  o.result["count"] = roots.size();
  o.result["generate_e8"] = true;
  o.summary.push_back(std::to_string(roots.size()) + " roots; they generate E8");
  if (count_only) {
    key_value_table(o, {{"count", std::to_string(roots.size())}, {"generate_e8", "yes"}});
    return o;
  }
  o.result["roots"] = Json::array();
  o.table.header = {"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"};
  for (const auto& r : roots) {
    o.result["roots"].push_back(r);
    std::vector<std::string> row;
    for (auto c : r) row.push_back(str(c));
    o.table.rows.push_back(std::move(row));
  }
  return o;
}

Output e8_short(std::int64_t bound, const std::optional<std::filesystem::path>& cache) {
  Output o;
  o.parameters = {{"bound", bound}, {"no_cache", !cache.has_value()}};
  const ShortVectorTable t = e8_short_vectors_cached(bound, cache);
  o.result["bound"] = bound;
  o.result["counts"] = Json::array();
  o.table.header = {"norm", "count"};
  for (const auto& [norm, list] : t.by_norm) {
    o.result["counts"].push_back({{"norm", norm}, {"count", list.size()}});
    o.table.rows.push_back({str(norm), std::to_string(list.size())});
  }
  o.result["vector_count"] = t.total();
  o.summary.push_back(std::to_string(t.total()) + " non-zero vectors of E8 with norm <= " + str(bound));
  return o;
}

Output e8_small_square(std::int64_t bound, const std::optional<std::filesystem::path>& cache) {
  Output o;
  o.parameters = {{"bound", bound}};
  // bound is |v^2| in E8(-2), so the E8 norm bound is bound / 2.
  if (bound < 4 || bound % 4 != 0)
    throw Error(ErrorCode::BadParameter, "--bound must be a positive multiple of 4");
  const ClassCoverage c = class_coverage(e8_short_vectors_cached(bound / 2, cache));
  o.result["bound"] = bound;
  o.result["e8_norm_bound"] = bound / 2;
  o.result["covered"] = c.covered();
  o.result["classes"] = 256;
  o.result["max_min_square"] = -2 * c.max_min_norm();
  o.result["zero_class_min_nonzero_square"] =
      c.zero_class_min_nonzero_norm ? Json(-2 * *c.zero_class_min_nonzero_norm) : Json(nullptr);
  o.result["per_class"] = Json::array();
  o.table.header = {"class", "q", "min_square", "witness"};
  for (int key = 0; key < 256; ++key) {
    const auto& e = c.per_class[key];
    const std::string bits = class_bits(static_cast<ClassKey>(key));
    const int q = e8m2_q_of_class(static_cast<ClassKey>(key));
    if (e) {
      o.result["per_class"].push_back(
          {{"class", bits}, {"q", q}, {"min_square", -2 * e->min_norm}, {"witness", e->witness}});
      o.table.rows.push_back({bits, std::to_string(q), str(-2 * e->min_norm), joined(e->witness, " ")});
    } else {
      o.result["per_class"].push_back({{"class", bits}, {"q", q}, {"min_square", nullptr}, {"witness", nullptr}});
      o.table.rows.push_back({bits, std::to_string(q), "-", "-"});
    }
  }
  if (c.covered() == 256) {
    o.summary.push_back("all 256 classes covered at bound " + str(bound) + " in E8(−2) scale");
  } else {
    o.summary.push_back(std::to_string(c.covered()) + " of 256 classes covered at bound " + str(bound) +
                        " in E8(−2) scale");
    o.exit_code = 2;
    o.failure = std::to_string(256 - c.covered()) + " classes have no representative of square >= -" + str(bound);
  }
  o.summary.push_back("largest minimal square over classes: " + str(-2 * c.max_min_norm()));
  return o;
}

Output embed_classify(std::int64_t n) {
  Output o;
  o.parameters = {{"n", n}};
  const auto classes = classify_embeddings(n);
  o.result["n"] = n;
  o.result["threshold"] = -6 - 2 * n;
  o.result["classes"] = Json::array();
  o.table.header = {"gluing", "class", "orbit_size", "witness_square", "divisibility", "meets_bound"};
  for (const auto& c : classes) {
    Json j;
    j["trivial"] = c.datum.trivial();
    j["class"] = c.class_key ? Json(class_bits(*c.class_key)) : Json(nullptr);
    j["orbit_size"] = c.orbit_size;
    if (c.witness) {
      j["witness"] = {{"vector", c.witness->vector},
                      {"square", c.witness->square},
                      {"divisibility", c.witness->divisibility.str()},
                      {"meets_bound", c.witness->meets_bound}};
      o.table.rows.push_back({"order 2", class_bits(*c.class_key), std::to_string(c.orbit_size),
                              str(c.witness->square), c.witness->divisibility.str(),
                              c.witness->meets_bound ? "yes" : "no"});
    } else {
      j["witness"] = nullptr;
      o.table.rows.push_back({"trivial", "-", std::to_string(c.orbit_size), "-", "-", "-"});
    }
    o.result["classes"].push_back(j);
  }
  o.summary.push_back(std::to_string(classes.size()) + " gluing classes for E8(−2) in L_" + str(n) +
                      " (threshold -6-2n = " + str(-6 - 2 * n) + ")");
  return o;
}

Output embed_orbits() {
  Output o;
  const auto orbits = orbit_classes_of_qs();
  o.result["orbits"] = Json::array();
  o.table.header = {"orbit", "size", "q", "representative"};
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& orb = orbits[i];
    Json members = Json::array();
    for (auto m : orb.members) members.push_back(class_bits(m));
    o.result["orbits"].push_back({{"size", orb.members.size()}, {"q", orb.q}, {"members", members}});
    o.table.rows.push_back({std::to_string(i), std::to_string(orb.members.size()), std::to_string(orb.q),
                            class_bits(orb.members.front())});
  }
  o.summary.push_back(std::to_string(orbits.size()) + " orbits of the root reflections on A_{E8(−2)}");
  return o;
}

Output embed_gluing(std::int64_t n, ManifoldKind kind) {
  Output o;
  o.parameters = {{"n", n}, {"kind", to_string(kind)}};
  const MukaiGluingReport r = mukai_gluing_check(n, kind);
  o.result["n"] = n;
  o.result["kind"] = to_string(kind);
  o.result["order"] = r.order;
  o.result["q_h2"] = r.q_h2.str();
  o.result["q_v"] = r.q_v.str();
  o.result["units"] = r.units;
  o.result["anti_isometries"] = r.anti_isometries.size();
  key_value_table(o, {{"order", str(r.order)},
                      {"q_h2", r.q_h2.str()},
                      {"q_v", r.q_v.str()},
                      {"units", joined(r.units, " ")},
                      {"anti_isometries", std::to_string(r.anti_isometries.size())}});
  return o;
}

Output wall(std::int64_t n, std::int64_t square, std::int64_t div) {
  Output o;
  o.parameters = {{"n", n}, {"square", square}, {"div", div}};
  const WallReport r = wall_check(n, square, div);
  o.result["n"] = n;
  o.result["a_square"] = r.a_square;
  o.result["a_div"] = r.a_div;
  o.result["v_square"] = r.v_square;
  o.result["s"] = r.s;
  o.result["lower"] = r.lower;
  o.result["upper"] = to_string(r.upper);
  o.result["threshold"] = r.threshold;
  o.result["verdict"] = to_string(r.verdict);
  o.summary.push_back(std::string(to_string(r.verdict)));
  key_value_table(o, {{"v_square", str(r.v_square)},
                      {"s", str(r.s)},
                      {"lower", str(r.lower)},
                      {"upper", to_string(r.upper)},
                      {"threshold", str(r.threshold)},
                      {"verdict", std::string(to_string(r.verdict))}});
  return o;
}

Output quiver_local(std::int64_t n) {
  Output o;
  o.parameters = {{"n", n}};
  const auto comps = local_fixed_components(n);
  o.result["n"] = n;
  o.result["framing"] = {kFraming.v1, kFraming.v2};
  o.result["components"] = Json::array();
  o.table.header = {"v1", "v2", "dim", "sign"};
  for (const auto& c : comps) {
    const char* sign = c.sign == ComponentSign::Plus ? "+" : c.sign == ComponentSign::Minus ? "-" : "";
    o.result["components"].push_back(
        {{"v", {c.v.v1, c.v.v2}}, {"dim", c.dim}, {"sign", sign}, {"positive_root", c.root}});
    o.table.rows.push_back({str(c.v.v1), str(c.v.v2), str(c.dim), sign});
  }
  return o;
}

Output quiver_dim_cmd(const std::string& v_text, const std::string& w_text) {
  Output o;
  o.parameters = {{"v", v_text}, {"w", w_text}};
  const DimVector v = parse_dim_vector(v_text, "--v");
  const DimVector w = parse_dim_vector(w_text, "--w");
  const std::int64_t dim = quiver_dim(v, w);
  const bool root = is_positive_root(v);
  o.result["v"] = {v.v1, v.v2};
  o.result["w"] = {w.v1, w.v2};
  o.result["dim"] = dim;
  o.result["positive_root"] = root;
  key_value_table(o, {{"dim", str(dim)}, {"positive_root", root ? "yes" : "no"}});
  if (!root) o.summary.push_back("v is not a positive root; the quiver variety is empty");
  return o;
}

Output partitions_list(std::int64_t n, bool histogram) {
  Output o;
  o.parameters = {{"n", n}, {"histogram", histogram}};
  o.result["n"] = n;
  if (histogram) {
    const DRangeReport r = d_range_report(n);
    o.result["partition_count"] = r.partition_count;
    o.result["histogram"] = Json::array();
    o.table.header = {"d", "partitions"};
    for (const auto& [d, count] : r.histogram) {
      o.result["histogram"].push_back({{"d", d}, {"count", count}});
      o.table.rows.push_back({str(d), std::to_string(count)});
    }
    return o;
  }
  const auto all = partitions(n);
  o.result["partition_count"] = all.size();
  o.result["partitions"] = Json::array();
  o.table.header = {"parts", "d"};
  for (const auto& p : all) {
    std::vector<std::int64_t> parts(p.parts.begin(), p.parts.end());
    o.result["partitions"].push_back({{"parts", parts}, {"d", p.d}});
    o.table.rows.push_back({joined(parts, "+"), str(p.d)});
  }
  return o;
}

Output partitions_verify(std::int64_t n) {
  Output o;
  o.parameters = {{"n", n}};
  const DRangeReport r = d_range_report(n);
  o.result["n"] = n;
  o.result["partition_count"] = r.partition_count;
  o.result["expected"] = r.expected;
  o.result["histogram"] = Json::array();
  o.table.header = {"d", "partitions", "expected"};
  for (const auto& [d, count] : r.histogram) {
    const bool expected = std::find(r.expected.begin(), r.expected.end(), d) != r.expected.end();
    o.result["histogram"].push_back({{"d", d}, {"count", count}});
    o.table.rows.push_back({str(d), std::to_string(count), expected ? "yes" : "no"});
  }
  o.result["both_attained"] = r.both_attained;
  o.result["holds"] = r.holds;
  if (r.counterexample) {
    std::vector<std::int64_t> parts(r.counterexample->parts.begin(), r.counterexample->parts.end());
    o.result["counterexample"] = {{"parts", parts}, {"d", r.counterexample->d}};
  } else {
    o.result["counterexample"] = nullptr;
  }
  if (r.holds) {
    o.summary.push_back("d takes exactly the values {" + joined(r.expected, ", ") + "} on the " +
                        std::to_string(r.partition_count) + " partitions of " + str(n));
  } else {
    o.exit_code = 2;
    if (r.counterexample) {
      std::vector<std::int64_t> parts(r.counterexample->parts.begin(), r.counterexample->parts.end());
      o.failure = "partition " + joined(parts, "+") + " of " + str(n) + " has d = " +
                  str(r.counterexample->d) + ", expected one of {" + joined(r.expected, ", ") + "}";
    } else {
      o.failure = "not every expected value of d is attained for n = " + str(n);
    }
    o.summary.push_back("d-range check fails for n = " + str(n));
  }
  return o;
}

}  // namespace hkfl::cli
