#pragma once

#include <string_view>

namespace hkfl {

enum class ManifoldKind { K3n, Kummer };

constexpr std::string_view to_string(ManifoldKind k) {
  return k == ManifoldKind::K3n ? "k3n" : "kummer";
}

}  // namespace hkfl
