#include "hkfl/embeddings.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hkfl/error.hpp"

namespace hkfl {

std::vector<OrderTwoElement> order_two_elements(const DiscriminantProfile& p) {
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < p.length; ++i)
    if (p.orders[i] % 2 == 0) even.push_back(i);
  if (even.size() > 20) {
    throw Error(ErrorCode::TooLarge, "2-torsion of rank " + std::to_string(even.size()));
  }
  std::vector<Element> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << even.size()); ++mask) {
    Element e = zero_element(p);
    for (std::size_t k = 0; k < even.size(); ++k)
      if (mask >> k & 1) e[even[k]] = p.orders[even[k]] / 2;
    found.push_back(std::move(e));
  }
  std::sort(found.begin(), found.end());
  std::vector<OrderTwoElement> out;
  out.reserve(found.size());
  for (auto& e : found) {
    QModTwoZ q = q_value(p, e);
    out.push_back({std::move(e), std::move(q)});
  }
  return out;
}

Subgroup Subgroup::trivial(DiscriminantProfile profile) { return Subgroup{std::move(profile), {}}; }

Subgroup Subgroup::whole(DiscriminantProfile profile) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < profile.length; ++i) {
    Element e = zero_element(profile);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Subgroup{std::move(profile), std::move(gens)};
}

std::vector<Element> Subgroup::elements(std::size_t cap) const {
  std::set<Element> seen{zero_element(profile)};
  std::vector<Element> frontier{zero_element(profile)};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Element y = add(profile, x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw Error(ErrorCode::TooLarge,
                        "subgroup has more than " + std::to_string(cap) + " elements");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

struct PartialMap {
  std::map<Element, Element> forward;
  std::set<Element> image;
};

class AntiIsometrySearch {
 public:
  AntiIsometrySearch(const Subgroup& a, const Subgroup& b, std::size_t limit)
      : a_(a), b_(b), limit_(limit) {
    a_size_ = a.elements().size();
    b_elements_ = b.elements();
  }

  std::vector<AntiIsometry> run() {
    if (a_size_ != b_elements_.size()) return {};
    PartialMap start;
    start.forward.emplace(zero_element(a_.profile), zero_element(b_.profile));
    start.image.insert(zero_element(b_.profile));
    std::vector<Element> images;
    assign(0, start, images);
    return std::move(found_);
  }

 private:
  void assign(std::size_t i, const PartialMap& partial, std::vector<Element>& images) {
    if (found_.size() >= limit_) return;
    if (i == a_.generators.size()) {
      if (partial.forward.size() == a_size_) found_.push_back({a_.generators, images});
      return;
    }
    const Element& h = a_.generators[i];
    if (auto it = partial.forward.find(reduce(a_.profile, h)); it != partial.forward.end()) {
      images.push_back(it->second);
      assign(i + 1, partial, images);
      images.pop_back();
      return;
    }
    const std::int64_t order = element_order(a_.profile, h);
    const QModTwoZ target = -q_value(a_.profile, h);
    for (const auto& y : b_elements_) {
      if (element_order(b_.profile, y) != order) continue;
      if (q_value(b_.profile, y) != target) continue;
      auto extended = extend(partial, h, y, order);
      if (!extended) continue;
      images.push_back(y);
      assign(i + 1, *extended, images);
      images.pop_back();
      if (found_.size() >= limit_) return;
    }
  }

  // Extends the map from D to <D, h> by x + t h -> f(x) + t y.
  std::optional<PartialMap> extend(const PartialMap& partial, const Element& h,
                                   const Element& y, std::int64_t order) const {
    PartialMap out = partial;
    for (const auto& [x, fx] : partial.forward) {
      Element src = x;
      Element dst = fx;
      for (std::int64_t t = 1; t < order; ++t) {
        src = add(a_.profile, src, h);
        dst = add(b_.profile, dst, y);
        auto it = out.forward.find(src);
        if (it != out.forward.end()) {
          if (it->second != dst) return std::nullopt;
          continue;
        }
        if (out.image.count(dst)) return std::nullopt;
        if (q_value(b_.profile, dst) != -q_value(a_.profile, src)) return std::nullopt;
        out.forward.emplace(src, dst);
        out.image.insert(dst);
      }
    }
    return out;
  }

  const Subgroup& a_;
  const Subgroup& b_;
  std::size_t limit_;
  std::size_t a_size_ = 0;
  std::vector<Element> b_elements_;
  std::vector<AntiIsometry> found_;
};

}  // namespace

std::optional<AntiIsometry> find_anti_isometry(const Subgroup& a, const Subgroup& b) {
  auto all = AntiIsometrySearch(a, b, 1).run();
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<AntiIsometry> all_anti_isometries(const Subgroup& a, const Subgroup& b,
                                              std::size_t limit) {
  return AntiIsometrySearch(a, b, limit).run();
}

std::vector<ClassOrbit> orbit_classes_of_qs() {
  const IntMatrix gram = lattice_e8().gram();
  std::vector<std::pair<ClassKey, IntVector>> reflections;  // (root class, G r mod 2)
  for (const auto& r : e8_roots()) {
    IntVector gr(8, 0);
    for (std::size_t i = 0; i < 8; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < 8; ++j) s += gram(i, j) * r[j];
      gr[i] = mod_floor(s, 2);
    }
    reflections.emplace_back(class_key(r), std::move(gr));
  }
  // s_r(x) = x - <x, r> r, reduced mod 2.
  auto reflect = [](ClassKey x, const std::pair<ClassKey, IntVector>& refl) -> ClassKey {
    int parity = 0;
    for (std::size_t i = 0; i < 8; ++i) parity ^= ((x >> i) & 1) & static_cast<int>(refl.second[i]);
    return parity ? static_cast<ClassKey>(x ^ refl.first) : x;
  };

  std::array<int, 256> orbit_id;
  orbit_id.fill(-1);
  std::vector<ClassOrbit> orbits;
  for (int start = 0; start < 256; ++start) {
    if (orbit_id[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    ClassOrbit orbit;
    std::vector<ClassKey> work{static_cast<ClassKey>(start)};
    orbit_id[start] = id;
    while (!work.empty()) {
      const ClassKey x = work.back();
      work.pop_back();
      orbit.members.push_back(x);
      for (const auto& refl : reflections) {
        const ClassKey y = reflect(x, refl);
        if (orbit_id[y] < 0) {
          orbit_id[y] = id;
          work.push_back(y);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.q = e8m2_q_of_class(orbit.members.front());
    for (auto m : orbit.members) {
      if (e8m2_q_of_class(m) != orbit.q) {
        throw Error(ErrorCode::CheckFailed, "q is not constant on a reflection orbit");
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

E8m2Context E8m2Context::build() {
  Lattice lattice = lattice_e8(-2);
  DiscriminantProfile profile = discriminant_profile(lattice);
  return E8m2Context{std::move(lattice), std::move(profile), class_coverage(8),
                     orbit_classes_of_qs()};
}

Element E8m2Context::element_of(ClassKey key) const {
  // A_{E8(-2)} = (1/2)E8 / E8 in E8 coordinates, so the class of v/2 is given
  // by the dual vector v/2.
  std::vector<Rational> half(8);
  for (std::size_t i = 0; i < 8; ++i) half[i] = Rational((key >> i) & 1, 2);
  return class_of_dual_vector(profile, half);
}

std::vector<EmbeddingClass> classify_embeddings(std::int64_t n) {
  return classify_embeddings(n, E8m2Context::build());
}

std::vector<EmbeddingClass> classify_embeddings(std::int64_t n, const E8m2Context& ctx) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "classify_embeddings needs n >= 2");
  const DiscriminantProfile ln = discriminant_profile(lattice_ln(n));
  const auto twos = order_two_elements(ln);
  if (twos.size() != 1) {
    throw Error(ErrorCode::CheckFailed,
                "A_{L_n} has " + std::to_string(twos.size()) + " elements of order two");
  }
  const Subgroup h_ln{ln, {twos.front().element}};

  std::vector<EmbeddingClass> out;
  EmbeddingClass trivial;
  trivial.n = n;
  trivial.datum = GluingDatum{Subgroup::trivial(ctx.profile), Subgroup::trivial(ln), AntiIsometry{}};
  trivial.orbit_size = 1;
  out.push_back(std::move(trivial));

  const std::int64_t threshold = -6 - 2 * n;
  for (const auto& orbit : ctx.orbits) {
    const ClassKey rep = orbit.members.front();
    if (rep == 0) continue;
    const Subgroup h_s{ctx.profile, {ctx.element_of(rep)}};
    auto gamma = find_anti_isometry(h_s, h_ln);
    if (!gamma) continue;
    EmbeddingClass cls;
    cls.n = n;
    cls.datum = GluingDatum{h_s, h_ln, std::move(gamma)};
    cls.class_key = rep;
    cls.orbit_size = orbit.members.size();
    if (const auto& entry = ctx.coverage.per_class[rep]) {
      EmbeddingWitness w;
      w.vector = entry->witness;
      w.square = -2 * entry->min_norm;
      w.divisibility = divisibility(ctx.lattice, w.vector);
      w.meets_bound = w.square >= threshold;
      cls.witness = std::move(w);
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::string_view to_string(WallVerdict v) {
  switch (v) {
    case WallVerdict::Wall: return "WALL";
    case WallVerdict::Boundary: return "BOUNDARY";
    case WallVerdict::NotWall: return "NOT-WALL";
  }
  return "?";
}

WallReport wall_check(std::int64_t n, std::int64_t a_square, std::int64_t a_div) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::BadParameter, "wall_check needs odd n >= 3");
  if (a_div != 2) throw Error(ErrorCode::OutOfScope, "only divisibility-two classes are handled");
  if (a_square >= 0) throw Error(ErrorCode::BadParameter, "a must have negative square");
  WallReport r;
  r.n = n;
  r.a_square = a_square;
  r.a_div = a_div;
  r.v_square = checked_add(checked_mul(2, n), -2);
  const std::int64_t sum = checked_add(r.v_square, a_square);
  if (mod_floor(sum, 4) != 0) {
    throw Error(ErrorCode::BadParity, "v^2 + a^2 = " + std::to_string(sum) +
                                          " is not divisible by 4");
  }
  r.s = sum / 4;
  r.upper = Rational(r.v_square, 4);
  r.threshold = checked_add(-6, checked_mul(-2, n));
  if (r.s > r.lower && Rational(r.s) <= r.upper) {
    r.verdict = WallVerdict::Wall;
  } else if (r.s == r.lower) {
    r.verdict = WallVerdict::Boundary;
  } else {
    r.verdict = WallVerdict::NotWall;
  }
  return r;
}

MukaiGluingReport mukai_gluing_check(std::int64_t n, ManifoldKind kind) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "mukai_gluing_check needs n >= 2");
  MukaiGluingReport r;
  r.n = n;
  r.kind = kind;
  r.order = kind == ManifoldKind::K3n ? checked_add(checked_mul(2, n), -2)
                                      : checked_add(checked_mul(2, n), 2);
  if (r.order > static_cast<std::int64_t>(Subgroup::kAntiIsometryCap)) {
    throw Error(ErrorCode::TooLarge, "discriminant group of order " + std::to_string(r.order) +
                                         " exceeds the enumeration cap");
  }
  const Lattice h2 = kind == ManifoldKind::K3n ? lattice_ln(n) : lattice_kummer_h2(n);
  const Lattice v = lattice_a1(r.order / 2);
  const Subgroup a = Subgroup::whole(discriminant_profile(h2));
  const Subgroup b = Subgroup::whole(discriminant_profile(v));
  if (a.profile.orders != std::vector<std::int64_t>{r.order} ||
      b.profile.orders != std::vector<std::int64_t>{r.order}) {
    throw Error(ErrorCode::CheckFailed, "expected cyclic discriminant groups of order " +
                                            std::to_string(r.order));
  }
  r.q_h2 = a.profile.q_on_generators(0, 0);
  r.q_v = b.profile.q_on_generators(0, 0);
  r.anti_isometries = all_anti_isometries(a, b);
  for (const auto& g : r.anti_isometries) r.units.push_back(g.images.front().front());
  return r;
}

}  // namespace hkfl
