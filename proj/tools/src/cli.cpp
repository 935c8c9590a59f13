#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hkfl/error.hpp"

namespace hkfl::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CheckFailed:
      return 2;
    case ErrorCode::Overflow:
    case ErrorCode::TooLarge:
    case ErrorCode::BoundTooLarge:
      return 3;
    default:
      return 1;
  }
}

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
const std::map<std::string, ManifoldKind> kKinds{{"k3n", ManifoldKind::K3n},
                                                 {"kummer", ManifoldKind::Kummer}};
const std::map<std::string, KummerConvention> kConventions{
    {"derived", KummerConvention::Derived}, {"paper", KummerConvention::Printed}};

struct Leaf {
  std::string command;
  CLI::App* app = nullptr;
  std::function<Output()> action;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hkfl: lattice and fixed-locus computations for involutions of hyperkähler manifolds",
               "hkfl"};
  app.require_subcommand(1);

  Format format = Format::Table;
  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                  const std::string& command) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    leaves.push_back({command, sub, {}});
    return sub;
  };

  std::int64_t n = 0;
  bool oracle = false;
  bool compare = false;
  bool count_only = false;
  bool no_cache = false;
  bool histogram = false;
  std::string kind_text;
  std::string convention_text = "derived";
  std::string name;
  std::int64_t bound = 0;
  std::int64_t square = 0;
  std::int64_t div = 2;
  std::string v_text, w_text;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "n")->required(); };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind_text, "k3n or kummer")
        ->required()
        ->check(CLI::IsMember(kKinds));
  };

  // strata
  CLI::App* strata = app.add_subcommand("strata", "Fixed-locus stratification tables");
  strata->require_subcommand(1);
  {
    auto* k3n = leaf(strata, "k3n", "K3^[n]-type strata", "strata k3n");
    add_n(k3n);
    k3n->add_flag("--oracle", oracle, "Also enumerate components and compare with the formula");
    leaves.back().action = [&] { return strata_k3n(n, oracle); };

    auto* kum = leaf(strata, "kummer", "Kummer-n-type strata", "strata kummer");
    add_n(kum);
    kum->add_option("--convention", convention_text, "derived or paper")
        ->check(CLI::IsMember(kConventions));
    kum->add_flag("--compare-paper-formula", compare, "Compare with the printed closed form");
    leaves.back().action = [&] { return strata_kummer(n, kConventions.at(convention_text), compare); };

    auto* bounds = leaf(strata, "bounds", "Stratum range against the stated bounds", "strata bounds");
    add_kind(bounds);
    add_n(bounds);
    bounds->add_option("--convention", convention_text, "derived or paper (Kummer only)")
        ->check(CLI::IsMember(kConventions));
    leaves.back().action = [&] { return strata_bounds(kKinds.at(kind_text), n, kConventions.at(convention_text)); };
  }

  // lattice
  CLI::App* lattice = app.add_subcommand("lattice", "Named lattices");
  lattice->require_subcommand(1);
  {
    const std::string names = "U|E8|E8m2|E8(k)|A1(k)|Ln:N|Kummer(n)|mukai|mukai-kummer";
    auto* info = leaf(lattice, "info", "Rank, determinant, signature and Gram matrix", "lattice info");
    info->add_option("--name", name, names)->required();
    leaves.back().action = [&] { return lattice_info(name); };
    auto* disc = leaf(lattice, "disc", "Discriminant group and form", "lattice disc");
    disc->add_option("--name", name, names)->required();
    leaves.back().action = [&] { return lattice_disc(name); };
    auto* milgram = leaf(lattice, "milgram", "Gauss sum against the signature", "lattice milgram");
    milgram->add_option("--name", name, names)->required();
    leaves.back().action = [&] { return lattice_milgram(name); };
  }

  // e8
  CLI::App* e8 = app.add_subcommand("e8", "E8 roots and short vectors");
  e8->require_subcommand(1);
  {
    auto* roots = leaf(e8, "roots", "The 240 roots", "e8 roots");
    roots->add_flag("--count-only", count_only, "Print only the count");
    leaves.back().action = [&] { return e8_roots_cmd(count_only); };

    auto* shrt = leaf(e8, "short", "Vectors of norm <= B", "e8 short");
    shrt->add_option("--bound", bound, "Even norm bound")->required();
    shrt->add_flag("--no-cache", no_cache, "Bypass the short-vector cache");
    leaves.back().action = [&] {
      return e8_short(bound, no_cache ? std::nullopt : default_cache_dir());
    };

    auto* small = leaf(e8, "small-square", "Cover the classes of A_{E8(-2)} by small squares",
                       "e8 small-square");
    bound = 16;
    small->add_option("--bound", bound, "Bound on |v^2| in E8(-2)")->default_val(16);
    small->add_flag("--no-cache", no_cache, "Bypass the short-vector cache");
    leaves.back().action = [&] {
      return e8_small_square(bound, no_cache ? std::nullopt : default_cache_dir());
    };
  }

  // embed
  CLI::App* embed = app.add_subcommand("embed", "Embeddings of E8(-2)");
  embed->require_subcommand(1);
  {
    auto* classify = leaf(embed, "classify", "Gluing classes of E8(-2) in L_n", "embed classify");
    add_n(classify);
    leaves.back().action = [&] { return embed_classify(n); };
    leaf(embed, "orbits", "Orbits of root reflections on A_{E8(-2)}", "embed orbits");
    leaves.back().action = [&] { return embed_orbits(); };
    auto* gluing = leaf(embed, "gluing", "Anti-isometries A_{H^2} -> A_{<v>}", "embed gluing");
    add_n(gluing);
    add_kind(gluing);
    leaves.back().action = [&] { return embed_gluing(n, kKinds.at(kind_text)); };
  }

  // wall
  {
    auto* w = leaf(&app, "wall", "Wall test for a divisibility-2 class", "wall");
    add_n(w);
    w->add_option("--square", square, "a^2 (negative, even)")->required();
    w->add_option("--div", div, "Divisibility of a")->default_val(2);
    leaves.back().action = [&] { return wall(n, square, div); };
  }

  // quiver
  CLI::App* quiver = app.add_subcommand("quiver", "Affine A1 quiver model");
  quiver->require_subcommand(1);
  {
    auto* local = leaf(quiver, "local", "Components of the fixed locus on Hilb^n(C^2)", "quiver local");
    add_n(local);
    leaves.back().action = [&] { return quiver_local(n); };
    auto* dim = leaf(quiver, "dim", "Quiver variety dimension", "quiver dim");
    dim->add_option("--v", v_text, "Dimension vector A,B")->required();
    dim->add_option("--w", w_text, "Framing C,D")->required();
    leaves.back().action = [&] { return quiver_dim_cmd(v_text, w_text); };
  }

  // partitions [verify]
  {
    auto* parts = leaf(&app, "partitions", "Partitions of n with the d statistic", "partitions");
    parts->require_subcommand(0, 1);
    parts->add_option("--n", n, "n");
    parts->add_flag("--histogram", histogram, "Counts per value of d");
    leaves.back().action = [&] {
      if (n == 0) throw Error(ErrorCode::BadParameter, "--n is required");
      return partitions_list(n, histogram);
    };
    auto* verify = leaf(parts, "verify", "Check the range of d", "partitions verify");
    add_n(verify);
    leaves.back().action = [&] { return partitions_verify(n); };
  }

  std::vector<std::string> reversed(args.begin(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  // The deepest parsed leaf wins ("partitions verify" over "partitions").
  const Leaf* chosen = nullptr;
  for (const auto& l : leaves)
    if (l.app->parsed()) chosen = &l;
  if (!chosen) {
    err << app.help();
    return 1;
  }
  try {
    const Output output = chosen->action();
    render(chosen->command, output, format, out, err);
    return output.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  }
}

}  // namespace hkfl::cli
