#include "annlab/reduction.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "annlab/error.hpp"
#include "annlab/protocol.hpp"

namespace annlab {

FiveWords pad_words(const FiveWords& v, std::size_t c) {
  if (c < 1) throw ValidationError("pad constant must be at least 1");
  const Word v2c = power(v[1], c), v4c = power(v[3], c);
  return {concat(v[0], v2c), v2c, concat(concat(v2c, v[2]), v4c), v4c, concat(v4c, v[4])};
}

Word word_scheme(std::size_t m, std::size_t n, const FiveWords& v) {
  if (m < 1 || n < 1) throw ValidationError("word_scheme needs m, n >= 1");
  return concat(concat(concat(v[0], power(v[1], m)), v[2]), power(v[3], n - 1));
}

BufferController build_buffer_controller(const FiveWords& v, const Alphabet& al) {
  auto tokens = [&](const Word& w) {
    std::vector<std::string> t;
    for (auto a : w) t.push_back(al.token(a));
    return t;
  };
  BufferController b;
  b.machine.inputs = Alphabet(std::vector<std::string>{"0", "1"});
  auto start = b.machine.add_state("start");
  auto one = b.machine.add_state("phase1");
  auto two = b.machine.add_state("phase2");
  auto sink = b.machine.add_state("sink");
  b.machine.initial = start;
  b.machine.set(start, 0, one, tokens(v[1]));
  b.machine.set(start, 1, sink);
  b.machine.set(one, 0, one, tokens(v[1]));
  b.machine.set(one, 1, two, tokens(concat(v[2], v[3])));
  b.machine.set(two, 1, two, tokens(v[3]));
  b.machine.set(two, 0, sink);
  b.machine.set(sink, 0, sink);
  b.machine.set(sink, 1, sink);
  b.initial_fill = v[0];
  b.capacity = std::max({v[0].size(), v[1].size(), v[2].size() + v[3].size(), v[3].size()});
  return b;
}

namespace {

enum class Mode : std::uint8_t { W1, W2, Idle, WaitMarker, Counter, D, Sink };
enum class Phase : std::uint8_t { Start, One, Two };

struct CState {
  Mode mode = Mode::W1;
  Phase phase = Phase::Start;
  unsigned counter = 0;
  Word queue;
  int marker = -1;  // queue index of the first symbol of the newest v4 block

  std::string key() const {
    if (mode == Mode::Sink) return "sink";
    std::string k;
    k += char('0' + int(mode));
    k += char('0' + int(phase));
    k += std::to_string(counter) + ":" + std::to_string(marker) + ":";
    for (auto a : queue) k += std::to_string(a) + ",";
    return k;
  }
  bool verdict_query() const { return mode == Mode::W1 && phase == Phase::Two; }
};

// Raw input class: inner nxt' bit and, at W2, the arriving bit.
struct RawClass {
  bool nxt = false;
  int bit = -1;
  bool any = false;  // sink
};

std::vector<RawClass> classes_of(const CState& s) {
  if (s.mode == Mode::Sink) return {RawClass{false, -1, true}};
  if (s.mode == Mode::W2) return {{false, 0}, {false, 1}, {true, 0}, {true, 1}};
  return {{false, -1}, {true, -1}};
}

constexpr std::size_t kRefill = 3;

struct Glue {
  const FiveWords& v;
  unsigned d;

  CState next(const CState& s, const RawClass& c) const {
    if (s.mode == Mode::Sink) return s;
    CState n = s;
    bool marker_popped = false;
    if (c.nxt) {
      if (n.queue.empty()) throw ValidationError("timing error: buffer underflow in controller state " + s.key());
      if (n.marker == 0) marker_popped = true;
      if (n.marker >= 0) --n.marker;
      n.queue.erase(n.queue.begin());
    }
    auto push = [&](const Word& w) { n.queue.insert(n.queue.end(), w.begin(), w.end()); };
    auto sink = [&] {
      CState z;
      z.mode = Mode::Sink;
      z.phase = Phase::Two;
      return z;
    };
    switch (s.mode) {
      case Mode::W1: n.mode = Mode::W2; break;
      case Mode::W2:
        if (s.phase == Phase::Start) {
          if (c.bit == 1) return sink();
          push(v[1]);
          n.phase = Phase::One;
          n.mode = Mode::Idle;
        } else if (s.phase == Phase::One) {
          if (c.bit == 0) {
            push(v[1]);
            n.mode = Mode::Idle;
          } else {
            n.marker = static_cast<int>(n.queue.size() + v[2].size());
            push(concat(v[2], v[3]));
            n.phase = Phase::Two;
            n.mode = Mode::WaitMarker;
          }
        } else {
          if (c.bit == 0) return sink();
          n.marker = static_cast<int>(n.queue.size());
          push(v[3]);
          n.mode = Mode::WaitMarker;
        }
        break;
      case Mode::Idle:
        if (n.queue.size() <= kRefill) n.mode = Mode::D;
        break;
      case Mode::WaitMarker:
        if (marker_popped) {
          n.mode = d == 0 ? Mode::D : Mode::Counter;
          n.counter = d;
        }
        break;
      case Mode::Counter:
        if (n.counter <= 1) {
          n.mode = Mode::D;
          n.counter = 0;
        } else {
          --n.counter;
        }
        break;
      case Mode::D: n.mode = Mode::W1; break;
      case Mode::Sink: break;
    }
    return n;
  }
};

}  // namespace

Network build_reduction(const ReductionSpec& spec, ReductionInfo* info) {
  const Network& inner = spec.inner;
  require_valid(inner);
  const Alphabet al = alphabet_of(inner);
  const FiveWords v = pad_words(spec.v, spec.pad);
  for (std::size_t i = 0; i < 5; ++i) {
    if (spec.v[i].empty()) throw ValidationError("v" + std::to_string(i + 1) + " must be nonempty");
    for (auto a : spec.v[i])
      if (a >= al.size()) throw ValidationError("v" + std::to_string(i + 1) + " uses a symbol outside the alphabet");
  }
  const unsigned d = inner.output_delay;
  if (v[3].size() < d + 4)
    throw ValidationError("timing error: padded |v4| = " + std::to_string(v[3].size()) + " < inner output delay " +
                          std::to_string(d) + " + 4; increase pad");

  // Controller state space under arbitrary inner nxt behaviour.
  Glue glue{v, d};
  std::vector<CState> states;
  std::map<std::string, std::size_t> id;
  std::vector<std::vector<std::size_t>> delta;
  CState q0;
  q0.queue = v[0];
  states.push_back(q0);
  id[q0.key()] = 0;
  std::size_t qmax = q0.queue.size();
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::vector<std::size_t> row;
    for (const auto& c : classes_of(states[k])) {
      CState n = glue.next(states[k], c);
      auto [it, fresh] = id.emplace(n.key(), states.size());
      if (fresh) {
        qmax = std::max(qmax, n.queue.size());
        states.push_back(n);
        if (states.size() > 200000) throw ResourceError("controller state space too large");
      }
      row.push_back(it->second);
    }
    delta.push_back(std::move(row));
  }

  // Layout.
  const NeuronId x0 = 1, x1 = 2, nxt = 3, out = 4, boot = 5, d1 = 6, n0 = 7;
  std::vector<std::vector<NeuronId>> nid(states.size());
  NeuronId at = n0;
  for (std::size_t k = 0; k < states.size(); ++k)
    for (std::size_t c = 0; c < delta[k].size(); ++c) nid[k].push_back(at++);
  const NeuronId inner_base = at;
  const std::size_t s_in = inner.size();
  const std::size_t size = inner_base + (s_in - 1) + 1;
  auto imap = [&](NeuronId i) -> NeuronId { return i == 0 ? 0 : (i == s_in ? size : inner_base + i - 1); };

  Network net(size);
  net.inputs = {x0, x1};
  net.nxt = nxt;
  net.out = out;
  net.output_delay = 0;
  net.alphabet = {"0", "1"};
  const Rational one(1);
  for (NeuronId j = 1; j <= s_in; ++j) {
    if (inner.is_input(j)) continue;
    for (const auto& [i, w] : inner.row(j)) net.set_weight(imap(j), imap(i), w);
  }
  std::vector<NeuronId> init{nxt, boot};
  for (NeuronId i = 1; i < s_in; ++i)
    if (inner.initial_configuration().bit(i)) init.push_back(imap(i));
  net.init_active = init;
  net.init_analog = inner.init_analog;

  net.set_weight(boot, 0, Rational(-1));
  net.set_weight(nxt, 0, Rational(-1));
  net.set_weight(out, 0, Rational(-2));
  net.set_weight(out, d1, one);
  net.set_weight(d1, 0, Rational(-1));
  net.set_weight(d1, imap(inner.out), one);
  for (std::size_t a = 0; a < al.size(); ++a) {
    NeuronId xa = imap(inner.inputs[a]);
    net.set_weight(xa, 0, Rational(-2));
    net.set_weight(xa, imap(inner.nxt), one);
  }
  auto head = [&](const CState& s) -> int {
    if (s.mode == Mode::Sink) return 0;
    return s.queue.empty() ? -1 : static_cast<int>(s.queue.front());
  };
  // Wires driven by "the controller is in state q at this step".
  auto drive = [&](NeuronId src, std::size_t q) {
    const CState& s = states[q];
    if (s.mode == Mode::D || s.mode == Mode::Sink) net.set_weight(nxt, src, one);
    if (s.verdict_query()) net.set_weight(out, src, one);
    int h = head(s);
    if (h >= 0) net.set_weight(imap(inner.inputs[h]), src, one);
  };
  drive(boot, 0);
  std::vector<std::vector<NeuronId>> preds(states.size());
  preds[0].push_back(boot);
  for (std::size_t k = 0; k < states.size(); ++k)
    for (std::size_t c = 0; c < delta[k].size(); ++c) {
      drive(nid[k][c], delta[k][c]);
      preds[delta[k][c]].push_back(nid[k][c]);
    }
  const NeuronId inner_nxt = imap(inner.nxt);
  for (std::size_t k = 0; k < states.size(); ++k) {
    auto cls = classes_of(states[k]);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      NeuronId j = nid[k][c];
      long pos = 0;
      for (auto p : preds[k]) net.set_weight(j, p, one);
      if (!cls[c].any) {
        if (cls[c].nxt) {
          net.set_weight(j, inner_nxt, one);
          ++pos;
        } else {
          net.set_weight(j, inner_nxt, Rational(-1));
        }
        if (cls[c].bit >= 0) {
          net.set_weight(j, cls[c].bit == 0 ? x0 : x1, one);
          ++pos;
        }
      }
      net.set_weight(j, 0, Rational(-(1 + pos)));
    }
  }
  const unsigned dsharp = static_cast<unsigned>(qmax * inner.delta + d + 4);
  net.delta = dsharp;
  net.notes = {"reduction network for 0^m 1^n via v1 v2^m v3 v4^(n-1)",
               "1,2 inputs; 3 nxt; 4 out; 5 boot; 6 copy of inner out",
               "controller " + std::to_string(n0) + ".." + std::to_string(inner_base - 1) + " (" +
                   std::to_string(states.size()) + " states)",
               "inner binary " + std::to_string(inner_base) + ".." + std::to_string(size - 1) + "; analog " +
                   std::to_string(size),
               "padded v1..v5: " + al.format(v[0]) + " | " + al.format(v[1]) + " | " + al.format(v[2]) + " | " +
                   al.format(v[3]) + " | " + al.format(v[4])};
  if (info) {
    info->controller_states = states.size();
    info->fsm_neurons = inner_base - n0;
    info->max_queue = qmax;
    info->delta = dsharp;
  }
  return net;
}

static std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  s = s.substr(b, e - b + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

ReductionSpec parse_reduction_spec(const std::string& text, const std::string& base_dir) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto f = line.find_first_not_of(" \t\r");
    if (f == std::string::npos || line[f] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("spec line " + std::to_string(n) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  for (const char* k : {"inner", "v1", "v2", "v3", "v4", "v5"})
    if (!kv.count(k)) throw ParseError(std::string("spec missing key '") + k + "'");
  ReductionSpec s;
  std::filesystem::path p(kv["inner"]);
  if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
  s.inner_path = p.string();
  s.inner = load_network(s.inner_path);
  Alphabet al = alphabet_of(s.inner);
  for (int i = 0; i < 5; ++i) s.v[i] = al.parse(kv["v" + std::to_string(i + 1)]);
  if (kv.count("pad")) {
    try {
      s.pad = std::stoul(kv["pad"]);
    } catch (...) {
      throw ParseError("bad pad value");
    }
  }
  return s;
}

ReductionSpec load_reduction_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_reduction_spec(ss.str(), std::filesystem::path(path).parent_path().string());
}

std::vector<std::pair<std::size_t, std::size_t>> verify_scheme_condition(const Network& base, const FiveWords& v,
                                                                        bool complement_L, bool complement_Lprime,
                                                                        std::size_t max_m, std::size_t max_n) {
  Simulator sim(base);
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t m = 0; m <= max_m; ++m)
    for (std::size_t n = 0; n <= max_n; ++n) {
      Word w = concat(concat(concat(concat(v[0], power(v[1], m)), v[2]), power(v[3], n)), v[4]);
      bool in = accepts(sim, w);
      bool inL = in != complement_L, inLp = in != complement_Lprime;
      bool ok = n < m ? !inL : (n == m ? inL : inLp);
      if (!ok) bad.emplace_back(m, n);
    }
  return bad;
}

}  // namespace annlab
