#include <cstdlib>
#include <string>

#include "annlab/kernels.hpp"

namespace annlab::kernels {

const Kernel& best() {
  static const Kernel* chosen = [] {
    const char* env = std::getenv("ANNLAB_KERNEL");
    if (env && std::string(env) == "scalar") return &scalar();
    if (auto* k = avx2()) return k;
    if (auto* k = neon()) return k;
    return &scalar();
  }();
  return *chosen;
}

std::vector<const Kernel*> available() {
  std::vector<const Kernel*> v{&scalar()};
  if (auto* k = avx2()) v.push_back(k);
  if (auto* k = neon()) v.push_back(k);
  return v;
}

}  // namespace annlab::kernels
