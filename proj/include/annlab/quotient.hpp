#pragma once

#include <string>
#include <vector>

#include "annlab/partition.hpp"

namespace annlab {

enum class QuotientMode { L2MinusL1, L1MinusL2 };
QuotientMode parse_quotient_mode(const std::string& s);
const char* quotient_mode_name(QuotientMode m);

struct QuotientSpec {
  Network base;
  Word u1, u2;
  QuotientMode mode = QuotientMode::L2MinusL1;
  bool strict = false;         // all binary states with nxt=1 as table rows
  std::size_t reach_len = 12;  // otherwise: snapshot states reachable within this many symbols
};

std::size_t quotient_horizon(const QuotientSpec& spec);
// Binary states at nxt-firing instants.
std::vector<BinaryState> snapshot_states(const QuotientSpec& spec);
PartitionResult quotient_partition(const QuotientSpec& spec, const std::vector<BinaryState>& states);

struct TruthTable {
  std::size_t alpha_bits = 0;  // p+1
  std::size_t beta_bits = 0;   // s-1
  std::vector<BinaryState> states;
  std::vector<std::vector<std::uint8_t>> value;  // [state][interval]
  std::size_t true_rows() const;
};
TruthTable boolean_f(const QuotientSpec& spec, const PartitionResult& part, const std::vector<BinaryState>& states);

struct QuotientLayout {
  std::size_t alpha_first = 0, beta_first = 0, and_first = 0, and_count = 0, or_neuron = 0, out_neuron = 0;
};
Network build_quotient_network(const QuotientSpec& spec, QuotientLayout* layout = nullptr);
Network build_quotient_network(const QuotientSpec& spec, const PartitionResult& part, const TruthTable& f,
                               QuotientLayout* layout = nullptr);

struct SnapshotSchedule {
  std::vector<std::size_t> query_times, snapshot_times, verdict_times;
  std::string text;
};
// Schedule of the product along the base run on filler symbols.
SnapshotSchedule snapshot_schedule(const QuotientSpec& spec, std::size_t windows = 4);

}  // namespace annlab
