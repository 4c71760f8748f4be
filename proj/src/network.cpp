#include "annlab/network.hpp"

#include <algorithm>
#include <set>

#include "annlab/error.hpp"

namespace annlab {

Network::Network(std::size_t s) : s_(s), rows_(s + 1) {}

Rational Network::weight(NeuronId j, NeuronId i) const {
  const auto& r = rows_.at(j);
  auto it = r.find(i);
  return it == r.end() ? Rational(0) : it->second;
}

void Network::set_weight(NeuronId j, NeuronId i, const Rational& w) {
  if (j < 1 || j > s_ || i > s_) throw ValidationError("weight index out of range");
  if (w.is_zero()) rows_[j].erase(i);
  else rows_[j][i] = w;
}

bool Network::is_input(NeuronId i) const { return input_slot(i) >= 0; }

int Network::input_slot(NeuronId i) const {
  for (size_t k = 0; k < inputs.size(); ++k)
    if (inputs[k] == i) return static_cast<int>(k);
  return -1;
}

Configuration Network::initial_configuration() const {
  Configuration c;
  c.binary.assign(s_ > 0 ? s_ - 1 : 0, 0);
  if (!init_active) {
    if (nxt >= 1 && nxt < s_) c.set_bit(nxt, true);
  } else {
    for (auto i : *init_active)
      if (i >= 1 && i < s_) c.set_bit(i, true);
  }
  c.analog = init_analog;
  return c;
}

std::vector<std::string> Network::alphabet_tokens() const {
  if (!alphabet.empty()) return alphabet;
  std::vector<std::string> t;
  for (size_t k = 0; k < inputs.size(); ++k) t.push_back(std::to_string(k));
  return t;
}

Rational saturate(const Rational& x) {
  if (x.sign() <= 0) return Rational(0);
  if (x >= Rational(1)) return Rational(1);
  return x;
}

static Rational value_of(const Network& net, const Configuration& cfg, const std::vector<std::uint8_t>& inputs,
                         NeuronId i) {
  if (i == 0) return Rational(1);
  if (i == net.analog()) return cfg.analog;
  int slot = net.input_slot(i);
  if (slot >= 0) return Rational(inputs[slot] ? 1 : 0);
  return Rational(cfg.bit(i) ? 1 : 0);
}

Rational excitation(const Network& net, const Configuration& cfg, const std::vector<std::uint8_t>& inputs,
                    NeuronId j) {
  Rational xi;
  for (const auto& [i, w] : net.row(j)) {
    if (i == net.analog()) xi += w * cfg.analog;
    else if (value_of(net, cfg, inputs, i).sign() != 0) xi += w;
  }
  return xi;
}

Configuration step(const Network& net, const Configuration& cfg, const std::vector<std::uint8_t>& inputs) {
  Configuration next;
  next.binary.assign(net.size() - 1, 0);
  for (NeuronId j = 1; j < net.size(); ++j) {
    if (net.is_input(j)) continue;
    next.set_bit(j, excitation(net, cfg, inputs, j).sign() >= 0);
  }
  next.analog = saturate(excitation(net, cfg, inputs, net.analog()));
  return next;
}

Configuration step(const Network& net, const Configuration& cfg) {
  std::vector<std::uint8_t> in(net.inputs.size());
  for (size_t k = 0; k < in.size(); ++k) in[k] = cfg.binary[net.inputs[k] - 1];
  return step(net, cfg, in);
}

std::vector<Violation> validate(const Network& net) {
  std::vector<Violation> v;
  const size_t s = net.size();
  if (s < 2) {
    v.push_back({s, "network needs at least one binary neuron and the analog unit"});
    return v;
  }
  auto binary = [&](NeuronId i) { return i >= 1 && i < s; };
  std::set<NeuronId> seen;
  if (net.inputs.empty()) v.push_back({0, "alphabet must have at least one symbol"});
  for (auto i : net.inputs) {
    if (!binary(i)) v.push_back({i, "input neurons must be binary"});
    if (!seen.insert(i).second) v.push_back({i, "duplicate input neuron"});
  }
  if (!binary(net.nxt)) v.push_back({net.nxt, "nxt must be binary"});
  if (!binary(net.out)) v.push_back({net.out, "out must be binary"});
  if (net.is_input(net.nxt)) v.push_back({net.nxt, "nxt must not be an input neuron"});
  if (net.is_input(net.out)) v.push_back({net.out, "out must not be an input neuron"});
  if (net.delta == 0) v.push_back({0, "delta must be at least 1"});
  if (!net.alphabet.empty() && net.alphabet.size() != net.inputs.size())
    v.push_back({net.alphabet.size(), "alphabet size must equal the number of input neurons"});
  std::set<std::string> toks(net.alphabet.begin(), net.alphabet.end());
  if (toks.size() != net.alphabet.size()) v.push_back({0, "duplicate alphabet symbol"});
  if (net.init_active)
    for (auto i : *net.init_active)
      if (!binary(i)) v.push_back({i, "init lists a non-binary neuron"});
  if (net.init_analog < Rational(0) || net.init_analog > Rational(1))
    v.push_back({s, "initial analog state outside [0,1]"});
  return v;
}

void require_valid(const Network& net) {
  auto v = validate(net);
  if (v.empty()) return;
  std::string msg = "invalid network:";
  for (const auto& x : v) msg += " [" + std::to_string(x.index) + "] " + x.message + ";";
  throw ValidationError(msg);
}

}  // namespace annlab
