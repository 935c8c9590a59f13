#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "hkfl/kind.hpp"
#include "hkfl/strata.hpp"
#include "output.hpp"

namespace hkfl::cli {

// Short-vector cache location: HKFL_CACHE_DIR, else $XDG_CACHE_HOME/hkfl, else
// $HOME/.cache/hkfl. None if no variable is set.
std::optional<std::filesystem::path> default_cache_dir();

Output strata_k3n(std::int64_t n, bool oracle);
Output strata_kummer(std::int64_t n, KummerConvention convention, bool compare);
Output strata_bounds(ManifoldKind kind, std::int64_t n, KummerConvention convention);

Output lattice_info(const std::string& name);
Output lattice_disc(const std::string& name);
Output lattice_milgram(const std::string& name);

Output e8_roots_cmd(bool count_only);
Output e8_short(std::int64_t bound, const std::optional<std::filesystem::path>& cache);
Output e8_small_square(std::int64_t bound, const std::optional<std::filesystem::path>& cache);

Output embed_classify(std::int64_t n);
Output embed_orbits();
Output embed_gluing(std::int64_t n, ManifoldKind kind);

Output wall(std::int64_t n, std::int64_t square, std::int64_t div);

Output quiver_local(std::int64_t n);
Output quiver_dim_cmd(const std::string& v, const std::string& w);

Output partitions_list(std::int64_t n, bool histogram);
Output partitions_verify(std::int64_t n);

}  // namespace hkfl::cli
