// annlab command line
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "annlab/cut_language.hpp"
#include "annlab/error.hpp"
#include "annlab/mealy.hpp"
#include "annlab/partition.hpp"
#include "annlab/protocol.hpp"
#include "annlab/quotient.hpp"
#include "annlab/reduction.hpp"

using namespace annlab;

namespace {

Engine engine_of(const std::string& e) {
  if (e == "reference") return Engine::Reference;
  if (e == "kernel") return Engine::Kernel;
  throw Error(ErrorKind::Usage, "unknown engine '" + e + "'");
}

void write_net(const Network& net, const std::string& path) {
  require_valid(net);
  save_network(net, path);
  // re-load as a round-trip check
  Network back = load_network(path);
  if (write_anet(back) != write_anet(net)) throw ValidationError("round-trip mismatch writing " + path);
}

Rational rat(const std::string& s) { return Rational::parse(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic lab for binary-state networks with one analog unit"};
  app.require_subcommand(1);
  std::string engine = "kernel";
  app.add_option("--engine", engine, "reference|kernel");

  std::string net1, net2, word, outp, tsv, spec, u1, u2, mode = "L2-L1", method = "refined", beta_s, c_s;
  std::size_t maxlen = 0, T = 0, depth = 4000, budget = 1u << 22, reach = 12;
  bool strict = false, show_trace = false;

  auto* run = app.add_subcommand("run", "prefix verdicts of NET on WORD");
  run->add_option("NET", net1)->required();
  run->add_option("WORD", word)->required();

  auto* trace = app.add_subcommand("trace", "TSV of every step");
  trace->add_option("NET", net1)->required();
  trace->add_option("WORD", word)->required();

  auto* build_cut = app.add_subcommand("build-cut", "cut-language acceptor N(beta, c)");
  build_cut->add_option("BETA", beta_s)->required();
  build_cut->add_option("C", c_s)->required();
  build_cut->add_option("OUT", outp)->required();

  auto* qp = app.add_subcommand("qp", "quasi-periodicity of c in base beta");
  qp->add_option("BETA", beta_s)->required();
  qp->add_option("C", c_s)->required();
  qp->add_option("--depth", depth);

  auto* part = app.add_subcommand("partition", "interval partition of the analog range");
  part->add_option("NET", net1)->required();
  part->add_option("T", T)->required();
  part->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "refined"}));
  part->add_option("--budget", budget);

  auto* quot = app.add_subcommand("quotient", "product network for a quotient difference");
  quot->add_option("NET", net1)->required();
  quot->add_option("U1", u1)->required();
  quot->add_option("U2", u2)->required();
  quot->add_option("OUT", outp)->required();
  quot->add_option("--mode", mode)->required();
  quot->add_flag("--strict", strict);
  quot->add_option("--reach", reach);

  auto* cfa = app.add_subcommand("compile-fa", "compile a machine table");
  cfa->add_option("TSV", tsv)->required();
  cfa->add_option("OUT", outp)->required();

  auto* red = app.add_subcommand("reduce", "glue a controller in front of an inner acceptor");
  red->add_option("SPEC", spec)->required();
  red->add_option("OUT", outp)->required();

  auto* en = app.add_subcommand("enum", "accepted words up to MAXLEN");
  en->add_option("NET", net1)->required();
  en->add_option("MAXLEN", maxlen)->required();

  auto* cmp = app.add_subcommand("compare", "compare two languages up to MAXLEN");
  cmp->add_option("NET1", net1)->required();
  cmp->add_option("NET2", net2)->required();
  cmp->add_option("MAXLEN", maxlen)->required();
  cmp->add_flag("--trace", show_trace, "print witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    Engine eng = engine_of(engine);
    if (*run || *trace) {
      Network net = load_network(net1);
      require_valid(net);
      Alphabet al = alphabet_of(net);
      Word w = al.parse(word);
      RunOptions opt;
      opt.engine = eng;
      opt.record = bool(*trace);
      RunTrace tr = run_online(net, al, w, opt);
      if (*trace) {
        std::cout << trace_tsv(net, tr);
      } else {
        for (std::size_t k = 0; k < tr.verdicts.size(); ++k)
          std::cout << al.format(Word(w.begin(), w.begin() + k)) << "\t" << (tr.verdicts[k] ? "accept" : "reject")
                    << "\n";
      }
    } else if (*build_cut) {
      CutParams p{rat(beta_s), rat(c_s)};
      write_net(build_cut_acceptor(p), outp);
    } else if (*qp) {
      CutParams p{rat(beta_s), rat(c_s)};
      QpVerdict v = qp_explore(p, depth);
      std::cout << render(v);
      if (!replay(p, v) && v.kind != QpKind::Unknown) throw ValidationError("evidence failed replay");
    } else if (*part) {
      Network net = load_network(net1);
      require_valid(net);
      PartitionResult r;
      if (method == "exhaustive") {
        r = build_partition_exhaustive(net, T, budget);
      } else {
        RefinedOptions o;
        o.budget = budget;
        r = build_partition_refined(net, alphabet_of(net), T, o);
      }
      std::cout << partition_report(r);
    } else if (*quot) {
      QuotientSpec q;
      q.base = load_network(net1);
      require_valid(q.base);
      Alphabet al = alphabet_of(q.base);
      q.u1 = al.parse(u1);
      q.u2 = al.parse(u2);
      q.mode = parse_quotient_mode(mode);
      q.strict = strict;
      q.reach_len = reach;
      QuotientLayout lay;
      write_net(build_quotient_network(q, &lay), outp);
    } else if (*cfa) {
      write_net(compile_mealy(load_mealy(tsv)), outp);
    } else if (*red) {
      ReductionInfo info;
      Network n = build_reduction(load_reduction_spec(spec), &info);
      write_net(n, outp);
      std::cout << "size\t" << n.size() << "\ncontroller_states\t" << info.controller_states << "\nmax_queue\t"
                << info.max_queue << "\ndelta\t" << info.delta << "\n";
    } else if (*en) {
      Network net = load_network(net1);
      require_valid(net);
      Alphabet al = alphabet_of(net);
      for (const auto& w : enumerate_language(net, al, maxlen, eng)) std::cout << al.format(w) << "\n";
    } else if (*cmp) {
      Network a = load_network(net1), b = load_network(net2);
      require_valid(a);
      require_valid(b);
      Alphabet aa = alphabet_of(a), ab = alphabet_of(b);
      if (aa.tokens() != ab.tokens()) throw ValidationError("alphabets differ");
      auto d = compare_languages(enumerate_language(a, aa, maxlen, eng), enumerate_language(b, ab, maxlen, eng));
      if (d.empty()) {
        std::cout << "EQUAL\n";
      } else {
        std::cout << "DIFFERENT\t" << d.size() << "\n";
        std::size_t shown = 0;
        for (const auto& x : d) {
          if (!show_trace && shown == 20) break;
          std::cout << aa.format(x.word) << "\t" << (x.in_first ? "first" : "second") << "\n";
          ++shown;
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind_name() << ": " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
