#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkfl/discriminant.hpp"
#include "hkfl/e8.hpp"
#include "hkfl/kind.hpp"
#include "hkfl/lattice.hpp"

namespace hkfl {

struct OrderTwoElement {
  Element element;
  QModTwoZ q;
};

// Elements of exact order two, in lexicographic coefficient order.
std::vector<OrderTwoElement> order_two_elements(const DiscriminantProfile& p);

// The subgroup of a discriminant group generated by `generators`.
struct Subgroup {
  DiscriminantProfile profile;
  std::vector<Element> generators;

  static Subgroup trivial(DiscriminantProfile profile);
  static Subgroup whole(DiscriminantProfile profile);

  // All elements, sorted. Throws TooLarge past `cap`.
  std::vector<Element> elements(std::size_t cap = kAntiIsometryCap) const;

  static constexpr std::size_t kAntiIsometryCap = 1024;
};

// A group isomorphism gamma: a -> b with q_b(gamma x) = -q_a(x), recorded by
// the images of a's generators.
struct AntiIsometry {
  std::vector<Element> sources;
  std::vector<Element> images;
};

// Exhaustive search: generator images are tried in lexicographic order and the
// partial map is extended over <h_1..h_i> after every choice, rejecting
// inconsistent, non-injective or non-anti-isometric extensions. Throws TooLarge
// if either subgroup has more than 2^10 elements.
std::optional<AntiIsometry> find_anti_isometry(const Subgroup& a, const Subgroup& b);
std::vector<AntiIsometry> all_anti_isometries(const Subgroup& a, const Subgroup& b,
                                              std::size_t limit = 1 << 16);

// Orbits of the group generated by the mod-2 reductions of the E8 root
// reflections acting on the 256 classes of A_{E8(-2)}.
struct ClassOrbit {
  std::vector<ClassKey> members;  // sorted
  int q = 0;                      // q-value shared by all members
};
std::vector<ClassOrbit> orbit_classes_of_qs();

struct GluingDatum {
  Subgroup h_s;
  Subgroup h_n;
  std::optional<AntiIsometry> gamma;

  bool trivial() const { return h_s.generators.empty(); }
};

struct EmbeddingWitness {
  IntVector vector;                 // E8 coordinates of v in E8(-2)
  std::int64_t square = 0;          // v^2 in E8(-2)
  Integer divisibility;             // in E8(-2)
  bool meets_bound = false;         // square >= -6-2n
};

struct EmbeddingClass {
  std::int64_t n = 0;
  GluingDatum datum;
  std::optional<ClassKey> class_key;       // representative of H_S
  std::size_t orbit_size = 0;
  std::optional<EmbeddingWitness> witness;
};

// Precomputed E8(-2) data shared across classify_embeddings calls.
struct E8m2Context {
  Lattice lattice;
  DiscriminantProfile profile;
  ClassCoverage coverage;
  std::vector<ClassOrbit> orbits;

  static E8m2Context build();
  Element element_of(ClassKey key) const;
};

// Candidate gluing data (H_S, H_{L_n}, gamma) for E8(-2) -> L_n, with H_S
// taken up to the orbit action on A_{E8(-2)}. Throws BadParameter for n < 2.
std::vector<EmbeddingClass> classify_embeddings(std::int64_t n);
std::vector<EmbeddingClass> classify_embeddings(std::int64_t n, const E8m2Context& ctx);

enum class WallVerdict { Wall, Boundary, NotWall };
std::string_view to_string(WallVerdict v);

struct WallReport {
  std::int64_t n = 0;
  std::int64_t a_square = 0;
  std::int64_t a_div = 2;
  std::int64_t v_square = 0;      // 2n - 2
  std::int64_t s = 0;             // ((v + a)/2)^2 = (v^2 + a^2)/4
  std::int64_t lower = -2;
  Rational upper;                 // v^2 / 4
  std::int64_t threshold = 0;     // -6 - 2n
  WallVerdict verdict = WallVerdict::NotWall;
};

// The class (v + a)/2 with v^2 = 2n-2: WALL when -2 < s <= v^2/4, BOUNDARY at
// s = -2 (a^2 = -6-2n), NOT-WALL below.
// Throws BadParameter (n even or < 3, a_square >= 0), OutOfScope (a_div != 2),
// BadParity ((v^2 + a^2) not divisible by 4).
WallReport wall_check(std::int64_t n, std::int64_t a_square, std::int64_t a_div = 2);

struct MukaiGluingReport {
  std::int64_t n = 0;
  ManifoldKind kind = ManifoldKind::K3n;
  std::int64_t order = 0;
  QModTwoZ q_h2;   // q on the generator of A_{H^2}
  QModTwoZ q_v;    // q on the generator of A_{<v>}
  // Each anti-isometry sends the generator of A_{H^2} to unit * generator.
  std::vector<std::int64_t> units;
  std::vector<AntiIsometry> anti_isometries;
};

// A_{H^2} for H^2 = L_n (K3n, cyclic of order 2n-2) or U^3 + <-2n-2> (Kummer,
// order 2n+2) against A_{<v>} with v^2 the same order.
MukaiGluingReport mukai_gluing_check(std::int64_t n, ManifoldKind kind);

}  // namespace hkfl
