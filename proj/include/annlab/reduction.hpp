#pragma once

#include <array>
#include <string>
#include <vector>

#include "annlab/mealy.hpp"
#include "annlab/network.hpp"

namespace annlab {

using FiveWords = std::array<Word, 5>;

struct ReductionSpec {
  Network inner;
  FiveWords v;
  std::size_t pad = 1;
  std::string inner_path;  // informational
};

FiveWords pad_words(const FiveWords& v, std::size_t c);
// v1 v2^m v3 v4^(n-1)
Word word_scheme(std::size_t m, std::size_t n, const FiveWords& v);

struct BufferController {
  MealyMachine machine;  // input bits 0/1, emissions over the inner alphabet
  Word initial_fill;     // v1
  std::size_t capacity = 0;
};
BufferController build_buffer_controller(const FiveWords& padded, const Alphabet& inner_alphabet);

struct ReductionInfo {
  std::size_t controller_states = 0;
  std::size_t fsm_neurons = 0;
  std::size_t max_queue = 0;
  unsigned delta = 0;
};
Network build_reduction(const ReductionSpec& spec, ReductionInfo* info = nullptr);

// key = value lines: inner, v1..v5, pad.
ReductionSpec parse_reduction_spec(const std::string& text, const std::string& base_dir = ".");
ReductionSpec load_reduction_spec(const std::string& path);

// Scheme condition over m <= max_m, n <= max_n; returns violating (m, n).
std::vector<std::pair<std::size_t, std::size_t>> verify_scheme_condition(const Network& base, const FiveWords& v,
                                                                        bool complement_L, bool complement_Lprime,
                                                                        std::size_t max_m, std::size_t max_n);

}  // namespace annlab
