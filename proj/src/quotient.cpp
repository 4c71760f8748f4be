#include "annlab/quotient.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "annlab/error.hpp"
#include "annlab/protocol.hpp"
#include "annlab/simulator.hpp"

namespace annlab {

QuotientMode parse_quotient_mode(const std::string& s) {
  if (s == "L2-L1" || s == "L2_minus_L1" || s == "L2minusL1") return QuotientMode::L2MinusL1;
  if (s == "L1-L2" || s == "L1_minus_L2" || s == "L1minusL2") return QuotientMode::L1MinusL2;
  throw ValidationError("unknown quotient mode '" + s + "' (use L2-L1 or L1-L2)");
}

const char* quotient_mode_name(QuotientMode m) {
  return m == QuotientMode::L2MinusL1 ? "L2_minus_L1" : "L1_minus_L2";
}

static void check_spec(const QuotientSpec& spec) {
  require_valid(spec.base);
  if (spec.u1.empty() || spec.u2.empty()) throw ValidationError("u1 and u2 must be nonempty");
}

std::size_t quotient_horizon(const QuotientSpec& spec) {
  return spec.base.delta * (spec.u1.size() + spec.u2.size() + 1) + spec.base.output_delay;
}

std::vector<BinaryState> snapshot_states(const QuotientSpec& spec) {
  const Network& net = spec.base;
  if (spec.strict) {
    std::vector<BinaryState> v;
    for (auto& y : all_binary_states(net.size()))
      if (y[net.nxt - 1]) v.push_back(y);
    return v;
  }
  Simulator sim(net);
  std::set<BinaryState> seen;
  const std::size_t q = net.inputs.size();
  // cfg is at a nxt-firing instant t0.
  std::function<void(const Configuration&, std::size_t)> dfs = [&](const Configuration& cfg, std::size_t depth) {
    seen.insert(cfg.binary);
    if (depth == spec.reach_len) return;
    Configuration at_tau = sim.step(cfg);
    for (Symbol a = 0; a < q; ++a) {
      Configuration c = at_tau;
      clamp(net, c, a);
      std::size_t waited = 0;
      while (!c.bit(net.nxt)) {
        if (++waited >= net.delta) throw DeltaViolation("base violates delta while collecting snapshot states");
        c = sim.step(c);
      }
      dfs(c, depth + 1);
    }
  };
  Configuration c = net.initial_configuration();
  std::size_t waited = 0;
  while (!c.bit(net.nxt)) {
    if (++waited >= net.delta) throw DeltaViolation("base violates delta before the first query");
    c = sim.step(c);
  }
  dfs(c, 0);
  return {seen.begin(), seen.end()};
}

PartitionResult quotient_partition(const QuotientSpec& spec, const std::vector<BinaryState>& states) {
  check_spec(spec);
  RefinedOptions o;
  o.words = std::vector<Word>{spec.u1, concat(spec.u2, spec.u1)};
  o.initial_states = states;
  return build_partition_refined(spec.base, alphabet_of(spec.base), quotient_horizon(spec), o);
}

std::size_t TruthTable::true_rows() const {
  std::size_t n = 0;
  for (const auto& r : value)
    for (auto b : r) n += b;
  return n;
}

TruthTable boolean_f(const QuotientSpec& spec, const PartitionResult& part, const std::vector<BinaryState>& states) {
  check_spec(spec);
  if (part.horizon != quotient_horizon(spec))
    throw ValidationError("partition horizon " + std::to_string(part.horizon) + " differs from required " +
                          std::to_string(quotient_horizon(spec)));
  Alphabet al = alphabet_of(spec.base);
  auto f1 = extrapolation_table(spec.base, al, part, spec.u1, states);
  auto f21 = extrapolation_table(spec.base, al, part, concat(spec.u2, spec.u1), states);
  TruthTable t;
  t.alpha_bits = part.pairs.size();
  t.beta_bits = spec.base.size() - 1;
  t.states = states;
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::vector<std::uint8_t> row;
    for (std::size_t r = 0; r < part.partition.size(); ++r) {
      bool a = f1.verdict[k][r], b = f21.verdict[k][r];
      row.push_back(spec.mode == QuotientMode::L2MinusL1 ? (b && !a) : (a && !b));
    }
    t.value.push_back(std::move(row));
  }
  return t;
}

Network build_quotient_network(const QuotientSpec& spec, QuotientLayout* layout) {
  check_spec(spec);
  auto states = snapshot_states(spec);
  auto part = quotient_partition(spec, states);
  auto f = boolean_f(spec, part, states);
  return build_quotient_network(spec, part, f, layout);
}

Network build_quotient_network(const QuotientSpec& spec, const PartitionResult& part, const TruthTable& f,
                               QuotientLayout* layout) {
  const Network& N = spec.base;
  const std::size_t s = N.size();
  const std::size_t npairs = part.pairs.size();
  // Runs of consecutive true intervals per state.
  struct Run { std::size_t state, from, to; };
  std::vector<Run> runs;
  for (std::size_t k = 0; k < f.states.size(); ++k) {
    const auto& row = f.value[k];
    for (std::size_t r = 0; r < row.size();) {
      if (!row[r]) { ++r; continue; }
      std::size_t e = r;
      while (e + 1 < row.size() && row[e + 1]) ++e;
      runs.push_back({k, r, e});
      r = e + 1;
    }
  }
  QuotientLayout L;
  L.alpha_first = s;
  L.beta_first = L.alpha_first + npairs;
  L.and_first = L.beta_first + (s - 1);
  L.and_count = runs.size();
  L.or_neuron = L.and_first + runs.size();
  L.out_neuron = L.or_neuron + 1;
  const std::size_t sp = L.out_neuron + 1;
  auto remap = [&](NeuronId i) { return i == s ? sp : i; };

  Network M(sp);
  for (NeuronId j = 1; j <= s; ++j)
    for (const auto& [i, w] : N.row(j)) M.set_weight(remap(j), remap(i), w);
  for (std::size_t r = 0; r < npairs; ++r) {
    const auto& z = part.pairs[r];
    M.set_weight(L.alpha_first + r, 0, Rational(z.b) * z.a);
    M.set_weight(L.alpha_first + r, sp, Rational(-z.b));
  }
  for (NeuronId i = 1; i < s; ++i) {
    M.set_weight(L.beta_first + i - 1, 0, Rational(-1));
    M.set_weight(L.beta_first + i - 1, i, Rational(1));
  }
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& R = runs[k];
    std::vector<std::pair<NeuronId, bool>> lits;
    lits.emplace_back(L.alpha_first + R.from, part.pairs[R.from].b == -1);
    lits.emplace_back(L.alpha_first + R.to + 1, part.pairs[R.to + 1].b == 1);
    for (NeuronId i = 1; i < s; ++i) lits.emplace_back(L.beta_first + i - 1, f.states[R.state][i - 1] != 0);
    const long kk = static_cast<long>(lits.size());
    long pos = 0;
    const NeuronId a = L.and_first + k;
    for (auto [src, want] : lits) {
      if (want) ++pos;
      M.set_weight(a, src, want ? Rational(1) : Rational(-(kk + 1)));
    }
    M.set_weight(a, 0, Rational(-pos));
    M.set_weight(L.or_neuron, a, Rational(1));
  }
  M.set_weight(L.or_neuron, 0, Rational(-1));
  M.set_weight(L.out_neuron, 0, Rational(-1));
  M.set_weight(L.out_neuron, L.or_neuron, Rational(1));

  M.inputs = N.inputs;
  M.nxt = N.nxt;
  M.out = L.out_neuron;
  M.delta = N.delta;
  M.output_delay = 3;
  M.alphabet = N.alphabet;
  M.init_active = N.init_active;
  M.init_analog = N.init_analog;
  Alphabet al = alphabet_of(N);
  M.notes = {"quotient " + std::string(quotient_mode_name(spec.mode)) + " u1=" + al.format(spec.u1) +
                 " u2=" + al.format(spec.u2),
             "1.." + std::to_string(s - 1) + " base binary neurons; " + std::to_string(sp) + " base analog unit",
             "alpha " + std::to_string(L.alpha_first) + ".." + std::to_string(L.beta_first - 1) +
                 ": analog half-line tests",
             "beta " + std::to_string(L.beta_first) + ".." + std::to_string(L.and_first - 1) + ": binary copies",
             "and " + std::to_string(L.and_first) + ".." + std::to_string(L.or_neuron - 1) + " (" +
                 std::to_string(runs.size()) + "): one per true (state, interval run)",
             "or " + std::to_string(L.or_neuron) + "; out " + std::to_string(L.out_neuron) + " (delay copy)",
             "verdict for x1..xk at tau_{k+1}+3"};
  if (layout) *layout = L;
  return M;
}

SnapshotSchedule snapshot_schedule(const QuotientSpec& spec, std::size_t windows) {
  const Network& N = spec.base;
  Alphabet al = alphabet_of(N);
  RunOptions o;
  o.record = false;
  auto tr = run_online(N, al, Word(windows, 0), o);
  SnapshotSchedule S;
  S.query_times = tr.query_times;
  std::ostringstream t;
  for (std::size_t k = 0; k < tr.query_times.size(); ++k) {
    std::size_t tau = tr.query_times[k];
    S.snapshot_times.push_back(tau - 1);
    S.verdict_times.push_back(tau + 3);
    t << "prefix length " << k << ": snapshot t0=" << tau - 1 << " (nxt fires), latch " << tau << ", and "
      << tau + 1 << ", or " << tau + 2 << ", verdict " << tau + 3 << "\n";
  }
  S.text = t.str();
  return S;
}

}  // namespace annlab
