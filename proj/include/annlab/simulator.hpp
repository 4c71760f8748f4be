#pragma once

#include <cstdint>
#include <vector>

#include "annlab/kernels.hpp"
#include "annlab/network.hpp"

namespace annlab {

enum class Engine { Reference, Kernel };

// Stepper over a fixed network. The kernel engine evaluates analog-free binary
// rows in scaled int32 arithmetic; all other rows stay exact.
// Holds scratch buffers: one Simulator per thread.
class Simulator {
 public:
  explicit Simulator(Network net, Engine engine = Engine::Kernel, const kernels::Kernel* kernel = nullptr);

  // Inputs are taken from cfg; input neurons of the result are 0.
  Configuration step(const Configuration& cfg) const;

  const Network& network() const { return net_; }
  Engine engine() const { return engine_; }
  const kernels::Kernel* kernel() const { return kernel_; }
  bool sparse_layout() const { return sparse_; }
  std::size_t exact_row_count() const { return exact_rows_.size(); }

 private:
  Rational exact_excitation(NeuronId j, const Configuration& cfg) const;

  Network net_;
  Engine engine_;
  const kernels::Kernel* kernel_ = nullptr;
  std::size_t n_ = 0;       // binary neurons
  std::size_t stride_ = 0;  // padded column length
  bool sparse_ = false;
  std::vector<std::int32_t> bias_;
  std::vector<std::int32_t> dense_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int32_t>>> sparse_cols_;
  std::vector<NeuronId> exact_rows_;
  std::vector<std::uint8_t> silent_;  // input rows
  mutable std::vector<std::int32_t> acc_;
  mutable std::vector<std::uint8_t> fired_;
};

}  // namespace annlab
