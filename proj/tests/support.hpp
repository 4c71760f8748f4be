#pragma once
// Test-only oracles, written without the library's own helpers where possible.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "annlab/alphabet.hpp"
#include "annlab/interval.hpp"
#include "annlab/network.hpp"

namespace oracle {

using annlab::Word;

// sum_k w[k] beta^-(k+1), word read back to front when reversed
inline mpq_class cut_sum(const Word& w, const mpq_class& beta, bool reversed) {
  mpq_class s = 0, p = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    p /= beta;
    s += mpq_class(reversed ? w[w.size() - 1 - k] : w[k]) * p;
  }
  return s;
}

struct Dfa {
  std::size_t start = 0;
  std::vector<std::vector<std::size_t>> next;
  std::vector<bool> accept;
  bool operator()(const Word& w) const {
    std::size_t q = start;
    for (auto a : w) q = next[q][a];
    return accept[q];
  }
};

inline Dfa parity() { return {0, {{0, 1}, {1, 0}}, {true, false}}; }
inline Dfa ends_with0() { return {0, {{1, 2}, {1, 2}, {1, 2}}, {true, true, false}}; }
inline Dfa mod3() { return {0, {{0, 1}, {2, 0}, {1, 2}}, {true, false, false}}; }
inline Dfa accept_all() { return {0, {{0, 0}}, {true}}; }
inline Dfa reject_all() { return {0, {{0, 0}}, {false}}; }

inline std::vector<Word> words_upto(std::size_t q, std::size_t n) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (std::size_t l = 1; l <= n; ++l) {
    std::vector<Word> nl;
    for (const auto& w : layer)
      for (annlab::Symbol a = 0; a < q; ++a) {
        Word x = w;
        x.push_back(a);
        nl.push_back(x);
      }
    out.insert(out.end(), nl.begin(), nl.end());
    layer = std::move(nl);
  }
  return out;
}

inline Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
inline Word rep(const Word& w, std::size_t n) {
  Word r;
  for (std::size_t i = 0; i < n; ++i) r = cat(r, w);
  return r;
}

inline annlab::Rational small_rational(std::mt19937_64& g, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return annlab::Rational(num(g), den(g));
}

// Random validated network: inputs 1..q, nxt fires every step (bias 0, no incoming weights).
inline annlab::Network random_network(std::mt19937_64& g, std::size_t s, std::size_t q, int bound, double density) {
  annlab::Network net(s);
  for (std::size_t i = 1; i <= q; ++i) net.inputs.push_back(i);
  net.nxt = q + 1;
  net.out = q + 2;
  net.delta = 1;
  std::bernoulli_distribution on(density);
  for (annlab::NeuronId j = 1; j <= s; ++j) {
    if (j <= q || j == net.nxt) continue;
    for (annlab::NeuronId i = 0; i <= s; ++i)
      if (i == 0 || on(g)) {
        auto w = small_rational(g, bound);
        if (!w.is_zero()) net.set_weight(j, i, w);
      }
  }
  std::uniform_int_distribution<int> d(1, 7);
  net.init_analog = annlab::Rational(d(g), 8);
  return net;
}

// Binary trajectory over T steps from (y, x): inputs clamped the step after nxt fires,
// symbol 0 once the word is used up.
inline std::vector<std::vector<std::uint8_t>> binary_trajectory(const annlab::Network& net,
                                                                const std::vector<std::uint8_t>& y,
                                                                const annlab::Rational& x, const Word& w,
                                                                std::size_t T) {
  annlab::Configuration c{y, x};
  std::vector<std::vector<std::uint8_t>> out;
  std::size_t pos = 0;
  bool fired = false;
  for (std::size_t t = 0; t <= T; ++t) {
    if (t > 0 && fired) {
      annlab::Symbol a = pos < w.size() ? w[pos] : 0;
      ++pos;
      for (std::size_t k = 0; k < net.inputs.size(); ++k) c.set_bit(net.inputs[k], k == a);
    }
    out.push_back(c.binary);
    fired = c.bit(net.nxt);
    if (t < T) c = annlab::step(net, c);
  }
  return out;
}

// Rationals spread over an interval, endpoints included when closed.
inline std::vector<annlab::Rational> samples(const annlab::Interval& I, std::size_t n, std::mt19937_64& g) {
  std::vector<annlab::Rational> xs;
  if (I.degenerate()) return {I.lo};
  if (I.lo_closed) xs.push_back(I.lo);
  if (I.hi_closed) xs.push_back(I.hi);
  std::uniform_int_distribution<long> u(1, 1000002);
  while (xs.size() < n) {
    annlab::Rational f(u(g), 1000003);
    xs.push_back(I.lo + (I.hi - I.lo) * f);
  }
  return xs;
}

}  // namespace oracle
