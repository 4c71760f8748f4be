#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annlab/alphabet.hpp"
#include "annlab/interval.hpp"
#include "annlab/network.hpp"

namespace annlab {

using BinaryState = std::vector<std::uint8_t>;  // length s-1

enum class PartitionMethod { Exhaustive, Refined };

struct PartitionResult {
  IntervalPartition partition;
  std::vector<HalfLinePair> pairs;
  std::vector<std::string> provenance;  // parallel to pairs
  std::size_t horizon = 0;
  PartitionMethod method = PartitionMethod::Refined;
};

Rational zeta(const Network& net, NeuronId l, const BinaryState& ybin);
Rational z_endpoint(const Network& net, NeuronId l, const std::vector<BinaryState>& seq);
// -sgn(w_js w_ss^tau) for a binary target j.
int orientation(const Network& net, NeuronId j, std::size_t tau);
BigInt pair_count_bound(std::size_t s, std::size_t T);

PartitionResult build_partition_exhaustive(const Network& net, std::size_t T, std::size_t budget = 1u << 20);

struct RefinedOptions {
  std::optional<std::vector<Word>> words;  // absent = every word
  std::optional<std::vector<BinaryState>> initial_states;  // absent = all 2^(s-1)
  std::size_t budget = 1u << 22;  // symbolic branches
};
PartitionResult build_partition_refined(const Network& net, const Alphabet& alphabet, std::size_t T,
                                        const RefinedOptions& opt = {});

struct ExtrapolationTable {
  Word suffix;
  std::vector<BinaryState> states;
  std::vector<std::vector<std::uint8_t>> verdict;  // [state][interval]
  std::size_t violations = 0;
};
// Runs from (state, representative of I_r) with nxt firing at time 0.
ExtrapolationTable extrapolation_table(const Network& net, const Alphabet& alphabet, const PartitionResult& part,
                                       const Word& u, const std::vector<BinaryState>& states);

std::vector<BinaryState> all_binary_states(std::size_t s, std::size_t limit = 1u << 20);
std::string partition_report(const PartitionResult& r);

}  // namespace annlab
