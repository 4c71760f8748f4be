#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace annlab::kernels {

enum class Isa { Scalar, Avx2, Neon };

// Integer excitation layer: acc += column, then Heaviside.
struct Kernel {
  Isa isa;
  const char* name;
  void (*accumulate)(std::int32_t* acc, const std::int32_t* col, std::size_t n);
  void (*threshold)(const std::int32_t* acc, std::uint8_t* out, std::size_t n);
};

const Kernel& scalar();
const Kernel* avx2();  // null if not built or not supported by this CPU
const Kernel* neon();
// ANNLAB_KERNEL=scalar forces the scalar variant.
const Kernel& best();
std::vector<const Kernel*> available();

// Column stride multiple for dense layouts.
constexpr std::size_t kLanes = 8;

}  // namespace annlab::kernels
