#include "annlab/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "annlab/error.hpp"
#include "annlab/protocol.hpp"

namespace annlab {

Rational zeta(const Network& net, NeuronId l, const BinaryState& ybin) {
  const NeuronId s = net.analog();
  Rational wls = net.weight(l, s);
  if (wls.is_zero()) throw ValidationError("zeta undefined: w_" + std::to_string(l) + "s = 0");
  Rational acc;
  for (const auto& [i, w] : net.row(l)) {
    if (i == s) continue;
    if (i == 0 || ybin.at(i - 1)) acc += w;
  }
  return -acc / wls;
}

Rational z_endpoint(const Network& net, NeuronId l, const std::vector<BinaryState>& seq) {
  if (seq.empty()) throw ValidationError("z_endpoint needs at least one binary vector");
  const NeuronId s = net.analog();
  Rational wss = net.weight(s, s);
  const std::size_t tau = seq.size() - 1;
  if (tau > 0 && wss.is_zero()) throw ValidationError("z_endpoint undefined for w_ss = 0 and tau > 0");
  Rational z;
  for (std::size_t t = 0; t < tau; ++t) z += zeta(net, s, seq[t]) * wss.pow(-static_cast<long>(t));
  z += zeta(net, l, seq[tau]) * (tau == 0 ? Rational(1) : wss.pow(-static_cast<long>(tau)));
  return z;
}

int orientation(const Network& net, NeuronId j, std::size_t tau) {
  const NeuronId s = net.analog();
  Rational v = net.weight(j, s) * (tau == 0 ? Rational(1) : net.weight(s, s).pow(static_cast<long>(tau)));
  return -v.sign();
}

BigInt pair_count_bound(std::size_t s, std::size_t T) {
  BigInt first = 0, second = 0, p;
  for (std::size_t k = 1; k <= T; ++k) {
    mpz_ui_pow_ui(p.get_mpz_t(), 2, (s - 1) * k);
    first += p;
    if (k >= 2 && k + 1 <= T) second += p;
  }
  return BigInt(static_cast<unsigned long>(s - 1)) * first + 2 * second + 4;
}

std::vector<BinaryState> all_binary_states(std::size_t s, std::size_t limit) {
  const std::size_t n = s - 1;
  if (n >= 40 || (std::size_t(1) << n) > limit)
    throw ResourceError("2^" + std::to_string(n) + " binary states exceed the budget");
  std::vector<BinaryState> v;
  for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) {
    BinaryState b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = (m >> i) & 1;
    v.push_back(std::move(b));
  }
  return v;
}

namespace {

// Distinct zeta_l values over all binary vectors.
std::set<Rational> zeta_values(const Network& net, NeuronId l, std::size_t budget) {
  const NeuronId s = net.analog();
  Rational wls = net.weight(l, s);
  Rational base;
  std::vector<Rational> terms;
  for (const auto& [i, w] : net.row(l)) {
    if (i == s) continue;
    if (i == 0) base = w;
    else terms.push_back(w);
  }
  if (terms.size() >= 40 || (std::size_t(1) << terms.size()) > budget)
    throw ResourceError("zeta support too large for the exhaustive method; use the refined method");
  std::set<Rational> out;
  for (std::size_t m = 0; m < (std::size_t(1) << terms.size()); ++m) {
    Rational acc = base;
    for (std::size_t k = 0; k < terms.size(); ++k)
      if ((m >> k) & 1) acc += terms[k];
    out.insert(-acc / wls);
  }
  return out;
}

struct PairSink {
  std::map<HalfLinePair, std::string> pairs;
  void add(const Rational& a, int b, const std::string& why) {
    if (a < Rational(0) || a > Rational(1)) return;
    pairs.emplace(HalfLinePair{a, b}, why);
  }
  PartitionResult finish(std::size_t T, PartitionMethod m) {
    for (const auto& c : corner_pairs()) pairs.emplace(c, "corner");
    PartitionResult r;
    for (const auto& [z, why] : pairs) {
      r.pairs.push_back(z);
      r.provenance.push_back(why);
    }
    r.partition = partition_from_pairs(r.pairs);
    r.horizon = T;
    r.method = m;
    return r;
  }
};

}  // namespace

PartitionResult build_partition_exhaustive(const Network& net, std::size_t T, std::size_t budget) {
  if (T < 1) throw ValidationError("horizon T must be at least 1");
  const NeuronId s = net.analog();
  const Rational wss = net.weight(s, s);
  std::vector<NeuronId> coupled;
  for (NeuronId j = 1; j < s; ++j)
    if (!net.is_input(j) && !net.weight(j, s).is_zero()) coupled.push_back(j);
  std::map<NeuronId, std::set<Rational>> zv;
  for (auto j : coupled) zv[j] = zeta_values(net, j, budget);
  std::set<Rational> zs;
  if (!wss.is_zero()) zs = zeta_values(net, s, budget);

  PairSink sink;
  std::size_t generated = 0;
  auto charge = [&](std::size_t k) {
    generated += k;
    if (generated > budget)
      throw ResourceError("exhaustive partition exceeds budget " + std::to_string(budget) + "; use the refined method");
  };
  std::set<Rational> S{Rational(0)};  // prefix sums over t < tau
  for (std::size_t tau = 0; tau < T; ++tau) {
    if (tau > 0 && wss.is_zero()) break;
    Rational scale = wss.is_zero() ? Rational(1) : wss.pow(-static_cast<long>(tau));
    for (auto j : coupled) {
      charge(S.size() * zv[j].size());
      int b = orientation(net, j, tau);
      std::string why = "binary " + std::to_string(j) + " tau=" + std::to_string(tau);
      for (const auto& sig : S)
        for (const auto& z : zv[j]) sink.add(sig + z * scale, b, why);
    }
    if (tau > 0) {
      Rational wt = wss.pow(static_cast<long>(tau));
      int sg = wt.sign();
      charge(2 * S.size());
      for (const auto& sig : S) {
        sink.add(sig, sg, "analog low tau=" + std::to_string(tau));
        sink.add(wt.inverse() + sig, -sg, "analog high tau=" + std::to_string(tau));
      }
    }
    if (tau + 1 < T && !wss.is_zero()) {
      charge(S.size() * zs.size());
      std::set<Rational> next;
      for (const auto& sig : S)
        for (const auto& z : zs) next.insert(sig + z * scale);
      S = std::move(next);
    }
  }
  return sink.finish(T, PartitionMethod::Exhaustive);
}

namespace {

std::optional<Interval> cut_ge(const Interval& J, const Rational& z) {
  if (z > J.hi) return std::nullopt;
  return intersect(J, Interval(z, J.hi, true, true));
}
std::optional<Interval> cut_gt(const Interval& J, const Rational& z) {
  if (z >= J.hi) return std::nullopt;
  return intersect(J, Interval(z, J.hi, false, true));
}
std::optional<Interval> cut_le(const Interval& J, const Rational& z) {
  if (z < J.lo) return std::nullopt;
  return intersect(J, Interval(J.lo, z, true, true));
}
std::optional<Interval> cut_lt(const Interval& J, const Rational& z) {
  if (z <= J.lo) return std::nullopt;
  return intersect(J, Interval(J.lo, z, true, false));
}

struct Trie {
  struct Node {
    std::map<Symbol, std::size_t> kids;
    bool terminal = false;
  };
  std::vector<Node> nodes{Node{}};
  explicit Trie(const std::vector<Word>& words) {
    for (const auto& w : words) {
      std::size_t at = 0;
      for (auto a : w) {
        auto it = nodes[at].kids.find(a);
        if (it == nodes[at].kids.end()) {
          nodes.push_back(Node{});
          it = nodes[at].kids.emplace(a, nodes.size() - 1).first;
        }
        at = it->second;
      }
      nodes[at].terminal = true;
    }
  }
};

constexpr std::size_t kFiller = static_cast<std::size_t>(-1);

struct Branch {
  Interval J;
  BinaryState bin;
  Rational A, B;  // analog = A*y0 + B on J
  std::size_t node = 0;  // trie position or kFiller
};

struct Refiner {
  const Network& net;
  std::size_t q;
  std::size_t T;
  const Trie* trie;
  PairSink sink;
  std::size_t budget;
  std::size_t used = 0;

  void run(Branch b, std::size_t t) {
    if (++used > budget) throw ResourceError("refined partition exceeds branch budget");
    if (t == T) return;
    const NeuronId s = net.analog();
    // Binary layer, split on every analog-dependent threshold.
    std::vector<std::pair<Interval, BinaryState>> parts{{b.J, BinaryState(s - 1, 0)}};
    for (NeuronId j = 1; j < s; ++j) {
      if (net.is_input(j)) continue;
      Rational c, wjs;
      for (const auto& [i, w] : net.row(j)) {
        if (i == s) wjs = w;
        else if (i == 0 || b.bin[i - 1]) c += w;
      }
      Rational k = wjs * b.A;
      std::vector<std::pair<Interval, BinaryState>> nx;
      for (auto& [I, bits] : parts) {
        if (k.is_zero()) {
          bits[j - 1] = (c + wjs * b.B).sign() >= 0;
          nx.emplace_back(I, bits);
          continue;
        }
        Rational z = -(c + wjs * b.B) / k;
        auto fire = k.sign() > 0 ? cut_ge(I, z) : cut_le(I, z);
        auto quiet = k.sign() > 0 ? cut_lt(I, z) : cut_gt(I, z);
        if (fire && quiet)
          sink.add(z, k.sign() > 0 ? -1 : 1, "binary " + std::to_string(j) + " t=" + std::to_string(t));
        if (fire) {
          auto bb = bits;
          bb[j - 1] = 1;
          nx.emplace_back(*fire, bb);
        }
        if (quiet) {
          auto bb = bits;
          bb[j - 1] = 0;
          nx.emplace_back(*quiet, bb);
        }
      }
      parts = std::move(nx);
    }
    // Analog layer.
    Rational cs;
    for (const auto& [i, w] : net.row(s))
      if (i != s && (i == 0 || b.bin[i - 1])) cs += w;
    const Rational wss = net.weight(s, s);
    const Rational A1 = wss * b.A, B1 = cs + wss * b.B;
    const bool last = t + 1 == T;
    for (auto& [I, bits] : parts) {
      std::vector<std::tuple<Interval, Rational, Rational>> pieces;
      if (last) {
        pieces.emplace_back(I, Rational(0), Rational(0));
      } else if (A1.is_zero()) {
        pieces.emplace_back(I, Rational(0), saturate(B1));
      } else {
        Rational z0 = -B1 / A1, z1 = (Rational(1) - B1) / A1;
        bool up = A1.sign() > 0;
        auto low = up ? cut_le(I, z0) : cut_ge(I, z0);
        auto rest = up ? cut_gt(I, z0) : cut_lt(I, z0);
        if (low && rest) sink.add(z0, up ? 1 : -1, "analog low t=" + std::to_string(t + 1));
        if (low) pieces.emplace_back(*low, Rational(0), Rational(0));
        if (rest) {
          auto high = up ? cut_ge(*rest, z1) : cut_le(*rest, z1);
          auto mid = up ? cut_lt(*rest, z1) : cut_gt(*rest, z1);
          if (high && mid) sink.add(z1, up ? -1 : 1, "analog high t=" + std::to_string(t + 1));
          if (high) pieces.emplace_back(*high, Rational(0), Rational(1));
          if (mid) pieces.emplace_back(*mid, A1, B1);
        }
      }
      const bool query = b.bin[net.nxt - 1];
      for (auto& [P, A, B] : pieces) {
        Branch nb{P, bits, A, B, b.node};
        if (!query) {
          run(std::move(nb), t + 1);
          continue;
        }
        for (auto [sym, node] : successors(b.node)) {
          Branch cb = nb;
          for (std::size_t k = 0; k < q; ++k) cb.bin[net.inputs[k] - 1] = k == sym;
          cb.node = node;
          run(std::move(cb), t + 1);
        }
      }
    }
  }

  std::vector<std::pair<Symbol, std::size_t>> successors(std::size_t node) const {
    std::vector<std::pair<Symbol, std::size_t>> v;
    if (!trie) {
      for (Symbol a = 0; a < q; ++a) v.emplace_back(a, 0);
      return v;
    }
    if (node == kFiller) return {{0, kFiller}};
    const auto& n = trie->nodes[node];
    if (n.terminal) v.emplace_back(0, kFiller);
    for (auto [a, k] : n.kids) v.emplace_back(a, k);
    return v;
  }
};

}  // namespace

PartitionResult build_partition_refined(const Network& net, const Alphabet& alphabet, std::size_t T,
                                        const RefinedOptions& opt) {
  if (T < 1) throw ValidationError("horizon T must be at least 1");
  if (alphabet.size() != net.inputs.size()) throw ValidationError("alphabet size does not match input neurons");
  std::optional<Trie> trie;
  if (opt.words) trie.emplace(*opt.words);
  Refiner R{net, alphabet.size(), T, trie ? &*trie : nullptr, {}, opt.budget};
  auto states = opt.initial_states ? *opt.initial_states : all_binary_states(net.size());
  for (const auto& y : states) {
    if (y.size() != net.size() - 1) throw ValidationError("initial binary state has wrong length");
    R.run(Branch{Interval(Rational(0), Rational(1), true, true), y, Rational(1), Rational(0), 0}, 0);
  }
  return R.sink.finish(T, PartitionMethod::Refined);
}

ExtrapolationTable extrapolation_table(const Network& net, const Alphabet& alphabet, const PartitionResult& part,
                                       const Word& u, const std::vector<BinaryState>& states) {
  if (net.delta * (u.size() + 1) + net.output_delay > part.horizon)
    throw ValidationError("partition horizon " + std::to_string(part.horizon) + " too small for suffix of length " +
                          std::to_string(u.size()));
  ExtrapolationTable tab;
  tab.suffix = u;
  tab.states = states;
  Simulator sim(net);
  RunOptions o;
  o.record = false;
  for (const auto& y : states) {
    std::vector<std::uint8_t> row;
    for (const auto& I : part.partition.intervals()) {
      o.initial = Configuration{y, I.representative()};
      bool v = false;
      try {
        v = run_online(sim, alphabet, u, o).accepted();
      } catch (const DeltaViolation&) {
        ++tab.violations;
      }
      row.push_back(v);
    }
    tab.verdict.push_back(std::move(row));
  }
  return tab;
}

std::string partition_report(const PartitionResult& r) {
  std::ostringstream o;
  o << "method " << (r.method == PartitionMethod::Exhaustive ? "exhaustive" : "refined") << "\n";
  o << "horizon " << r.horizon << "\n";
  o << "intervals " << r.partition.size() << "\n";
  for (std::size_t k = 0; k < r.partition.size(); ++k) {
    const auto& I = r.partition[k];
    o << I.str() << "\t" << r.provenance[k] << " | " << r.provenance[k + 1] << "\n";
  }
  return o.str();
}

}  // namespace annlab
