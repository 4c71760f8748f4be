#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annlab/rational.hpp"

namespace annlab {

using NeuronId = std::size_t;

struct Configuration {
  std::vector<std::uint8_t> binary;  // neuron i at binary[i-1], i < s
  Rational analog;

  bool bit(NeuronId i) const { return binary[i - 1] != 0; }
  void set_bit(NeuronId i, bool v) { binary[i - 1] = v ? 1 : 0; }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Weighted 1ANN; weight (j,0) is the bias and the analog unit is neuron s.
class Network {
 public:
  Network() = default;
  explicit Network(std::size_t s);

  std::size_t size() const { return s_; }
  NeuronId analog() const { return s_; }

  Rational weight(NeuronId j, NeuronId i) const;
  void set_weight(NeuronId j, NeuronId i, const Rational& w);
  // Nonzero incoming weights of j, keyed by source (0 = bias).
  const std::map<NeuronId, Rational>& row(NeuronId j) const { return rows_.at(j); }

  std::vector<NeuronId> inputs;
  NeuronId nxt = 0;
  NeuronId out = 0;
  unsigned delta = 1;
  unsigned output_delay = 0;
  std::vector<std::string> alphabet;  // empty = digits 0..q-1
  std::optional<std::vector<NeuronId>> init_active;  // absent = {nxt}
  Rational init_analog;
  std::vector<std::string> notes;

  bool is_input(NeuronId i) const;
  // Input slot of neuron i, or -1.
  int input_slot(NeuronId i) const;
  Configuration initial_configuration() const;
  std::vector<std::string> alphabet_tokens() const;

 private:
  std::size_t s_ = 0;
  std::vector<std::map<NeuronId, Rational>> rows_;
};

// Weighted sum with bias; input neurons contribute inputs[slot].
Rational excitation(const Network& net, const Configuration& cfg, const std::vector<std::uint8_t>& inputs,
                    NeuronId j);
// Synchronous update; input neurons of the result are 0.
Configuration step(const Network& net, const Configuration& cfg, const std::vector<std::uint8_t>& inputs);
// Step using the input values held in cfg.
Configuration step(const Network& net, const Configuration& cfg);

Rational saturate(const Rational& x);

struct Violation {
  std::size_t index = 0;
  std::string message;
};
std::vector<Violation> validate(const Network& net);
// Throws ValidationError listing every violation.
void require_valid(const Network& net);

std::string write_anet(const Network& net);
Network parse_anet(const std::string& text);
Network load_network(const std::string& path);
void save_network(const Network& net, const std::string& path);

}  // namespace annlab
