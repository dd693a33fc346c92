// Command-line front end: generate instances, run the allocation procedures,
// and re-verify recorded runs against their guarantees.
//
// Exit codes: 0 = success and every checked guarantee holds; 2 = a guarantee
// or invariant check failed; 1 = usage or input error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairpart/codec.hpp"
#include "fairpart/dynamic.hpp"
#include "fairpart/gen.hpp"
#include "fairpart/lowerbound.hpp"
#include "fairpart/masterlist.hpp"
#include "fairpart/roundrobin.hpp"
#include "fairpart/structured.hpp"

namespace {

using namespace fairpart;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuaranteeFailed = 2;

// FAIRPART_SEED overrides any seed option the user left at its default.
void apply_env_seed(const CLI::Option* opt, std::uint64_t& seed) {
  if (opt->count() > 0) return;
  if (const char* env = std::getenv("FAIRPART_SEED")) seed = std::strtoull(env, nullptr, 10);
}

void emit(const std::string& path, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_atomic(path, text);
}

Json load_json(const std::string& path) { return Json::parse(read_text(path)); }

std::vector<int> resolve_order(const Instance& inst, const std::string& name) {
  if (name == "given") {
    if (inst.arrival.empty())
      throw std::invalid_argument("order=given but the instance has no \"arrival\"");
    return inst.arrival;
  }
  if (name == "identity") {
    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  if (name == "fair") return fair_arrival_order(inst).order;
  if (name == "sorted-prop") return sorted_prop_order(inst);
  throw std::invalid_argument("unknown order: " + name);
}

// Per-agent master-list verification: measure each agent's distance from the
// list and check the matching guarantee on the recorded value.
VerifyReport verify_masterlist_records(const Instance& inst, const Transcript& t,
                                       TheoremId theorem) {
  if (inst.master_list.empty())
    throw std::invalid_argument("master-list verification needs \"master_list\"");
  if (theorem == TheoremId::ml_laminar)
    throw std::invalid_argument(
        "ml_laminar needs a declared swap multiset; a transcript alone cannot witness it");
  VerifyReport rep;
  std::vector<int> pi = inst.master_list;
  for (const auto& rec : t.records) {
    VerifyRow row;
    row.position = rec.position;
    row.agent = rec.agent;
    row.value = rec.value;
    row.ref = prop_share(inst, rec.agent);
    std::vector<int> sigma = derive_agent_permutation(inst.values[rec.agent], pi);
    TheoremBoundSpec spec;
    spec.id = theorem;
    switch (theorem) {
      case TheoremId::ml_ordered:
        break;
      case TheoremId::ml_adjacent:
        spec.k = adjacent_swap_distance(sigma, pi);
        break;
      case TheoremId::ml_arbitrary:
        spec.k = transposition_distance(sigma, pi);
        break;
      case TheoremId::ml_linsep:
      case TheoremId::ml_linsep_t: {
        auto layers = min_linsep_layers(bubble_decomposition(sigma, pi));
        spec.id = TheoremId::ml_linsep_t;
        spec.t = std::max(1, layers.count());
        break;
      }
      case TheoremId::ml_lipschitz:
        spec.k = adjacent_swap_distance(sigma, pi);
        spec.delta = lipschitz_delta(inst, pi);
        break;
      default:
        throw std::invalid_argument("not a master-list guarantee: " +
                                    std::string(theorem_name(theorem)));
    }
    row.bound = theorem_bound(spec, row.ref);
    row.trivial = row.bound.trivial();
    row.pass = row.bound.satisfied_by(row.value);
    if (row.trivial) ++rep.trivial_count;
    if (!row.pass) rep.all_pass = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path) {
  GenResult res = generate(spec);
  Json j = instance_to_json(res.inst);
  Json meta;
  meta["family"] = gen_family_name(spec.family);
  meta["seed"] = spec.seed;
  switch (spec.family) {
    case GenFamily::strictly_positive:
      meta["floor"] = rational_to_json(spec.floor);
      break;
    case GenFamily::hypergraph:
      meta["D"] = res.D;
      break;
    case GenFamily::masterlist_swaps:
    case GenFamily::lipschitz: {
      meta["swap_kind"] = swap_kind_name(spec.swap_kind);
      meta["swaps"] = spec.swaps;
      if (spec.family == GenFamily::lipschitz) meta["delta"] = rational_to_json(res.delta);
      if (spec.swap_kind == SwapKind::linsep) meta["layers"] = res.layers;
      if (spec.swap_kind == SwapKind::laminar) meta["depth"] = res.depth;
      Json counts = Json::array();
      for (long long c : res.swap_counts) counts.push_back(c);
      meta["swap_counts"] = std::move(counts);
      break;
    }
    case GenFamily::bounded_ties:
      meta["ties"] = res.t;
      break;
    case GenFamily::rebundling_fixture: {
      meta["prop"] = spec.fixture_prop;
      Json parts = Json::array();
      for (const auto& part : res.fixture_partition.parts) {
        Json p = Json::array();
        for (int g : part) p.push_back(g + 1);
        parts.push_back(std::move(p));
      }
      meta["fixture_partition"] = std::move(parts);
      break;
    }
    default:
      break;
  }
  j["meta"] = std::move(meta);
  emit(out_path, j);
  return kExitOk;
}

int cmd_run(const std::string& inst_path, const std::string& alg, const std::string& order_name,
            const TiePolicy& policy, const std::string& out_path,
            const std::string& report_path, bool want_report) {
  Instance inst = instance_from_json(load_json(inst_path));
  std::string effective_order = order_name;
  if (effective_order.empty()) effective_order = inst.arrival.empty() ? "identity" : "given";

  Transcript t;
  TheoremId theorem;
  bool masterlist_mode = false;
  if (alg == "allpos") {
    for (int a = 0; a < inst.n; ++a)
      for (int g = 0; g < inst.m; ++g)
        if (inst.values[a][g].is_zero())
          throw std::invalid_argument(
              "alg=allpos requires strictly positive values: agent " + std::to_string(a + 1) +
              " values item " + std::to_string(g + 1) + " at zero");
    t = all_pos_val(inst, resolve_order(inst, effective_order), policy);
    theorem = TheoremId::all_pos;
  } else if (alg == "boundedprop" || alg == "boundedprop-g") {
    t = bounded_prop(inst, resolve_order(inst, effective_order), policy, RRVariant::plain);
    theorem = alg == "boundedprop" ? TheoremId::bounded_prop : TheoremId::bounded_prop_g;
  } else if (alg == "fair-order") {
    t = bounded_prop(inst, fair_arrival_order(inst).order, policy, RRVariant::plain);
    theorem = TheoremId::fair_order;
  } else if (alg == "influence") {
    t = bounded_influence(inst, resolve_order(inst, effective_order), policy);
    theorem = TheoremId::bounded_influence_early;  // split per position in verify
  } else if (alg == "indiff") {
    t = bounded_indifference(inst, resolve_order(inst, effective_order), policy);
    theorem = TheoremId::bounded_indiff;
  } else if (alg == "masterlist") {
    if (inst.master_list.empty())
      throw std::invalid_argument("alg=masterlist needs an instance with \"master_list\"");
    RoundRobinResult rr = masterlist_partition(inst, inst.master_list);
    t = run_static(inst, rr.parts, resolve_order(inst, effective_order), policy);
    t.algorithm = "masterlist";
    theorem = TheoremId::ml_arbitrary;
    masterlist_mode = true;
  } else {
    throw std::invalid_argument("unknown algorithm: " + alg);
  }

  if (!out_path.empty()) emit(out_path, transcript_to_json(inst, t));
  VerifyReport rep = masterlist_mode ? verify_masterlist_records(inst, t, theorem)
                                     : verify_transcript(inst, t, theorem);
  if (want_report) emit(report_path, verify_report_to_json(rep, theorem_name(theorem)));
  std::cout << "algorithm=" << t.algorithm << " positions=" << rep.rows.size()
            << " all_pass=" << (rep.all_pass ? "true" : "false")
            << " trivial=" << rep.trivial_count << " flags=" << t.flags.size() << "\n";
  return rep.all_pass ? kExitOk : kExitGuaranteeFailed;
}

int cmd_verify(const std::string& transcript_path, const std::string& theorem_str,
               const std::string& out_path, bool want_out) {
  LoadedTranscript lt = transcript_from_json(load_json(transcript_path));
  TheoremId theorem = theorem_from_name(theorem_str);
  bool ml = theorem_str.rfind("ml_", 0) == 0;
  VerifyReport rep = ml ? verify_masterlist_records(lt.inst, lt.transcript, theorem)
                        : verify_transcript(lt.inst, lt.transcript, theorem);
  if (want_out) emit(out_path, verify_report_to_json(rep, theorem_str));
  std::cout << "theorem=" << theorem_str << " positions=" << rep.rows.size()
            << " all_pass=" << (rep.all_pass ? "true" : "false")
            << " invariants_ok=" << (rep.invariants_ok ? "true" : "false")
            << " trivial=" << rep.trivial_count << "\n";
  return rep.all_pass ? kExitOk : kExitGuaranteeFailed;
}

int cmd_bruteforce(int n, const std::string& mode, long long count, std::uint64_t seed,
                   const std::string& out_path, const std::string& csv_path) {
  HadamardFamily fam = build_lowerbound_instance(n);
  BruteForceReport rep =
      mode == "exhaustive" ? exhaustive_check(fam) : sampled_check(fam, count, seed);
  if (!csv_path.empty()) {
    if (mode != "exhaustive")
      throw std::invalid_argument("--csv walks every assignment; use --mode exhaustive");
    std::string csv = "assignment,part,anchor,witness,opposite,deficit,pass\n";
    std::vector<int> asg(fam.m, 0);
    for (long long row = 0; row < rep.checked; ++row) {
      WitnessResult w = witness_for(fam, asg);
      std::string cells;
      for (int g = 0; g < fam.m; ++g) {
        if (g > 0) cells += ' ';
        cells += std::to_string(asg[g] + 1);
      }
      csv += cells + ',' + std::to_string(w.part + 1) + ',' + std::to_string(w.anchor + 1) +
             ',' + std::to_string(w.witness + 1) + ',' + (w.opposite ? "true" : "false") +
             ',' + w.deficit.str() + ',' + (w.pass ? "true" : "false") + '\n';
      int g = 0;
      while (g < fam.m && ++asg[g] == fam.n) asg[g++] = 0;
    }
    if (csv_path == "-")
      std::cout << csv;
    else
      write_text_atomic(csv_path, csv);
  }
  if (!out_path.empty()) emit(out_path, bruteforce_report_to_json(rep));
  std::cout << "n=" << rep.n << " mode=" << rep.mode << " checked=" << rep.checked
            << " failures=" << rep.failures << " min_deficit=" << rep.min_deficit.str()
            << " threshold_sq=" << rep.threshold_sq.str() << "\n";
  return rep.all_pass ? kExitOk : kExitGuaranteeFailed;
}

int cmd_report(const std::string& in_path, bool csv) {
  Json j = load_json(in_path);
  std::string kind = j.value("kind", "");
  if (kind == "verify_report") {
    if (csv) {
      std::cout << "position,agent,value,reference,bound,pass,trivial\n";
      for (const auto& r : j.at("rows"))
        std::cout << r.at("position").get<int>() << "," << r.at("agent").get<int>() << ","
                  << r.at("value").get<std::string>() << ","
                  << r.at("reference").get<std::string>() << ","
                  << r.at("bound").get<std::string>() << "," << r.at("pass").get<bool>()
                  << "," << r.at("trivial").get<bool>() << "\n";
      return kExitOk;
    }
    std::cout << "verify_report theorem=" << j.value("theorem", "?")
              << " rows=" << j.at("rows").size()
              << " all_pass=" << (j.value("all_pass", false) ? "true" : "false")
              << " invariants_ok=" << (j.value("invariants_ok", false) ? "true" : "false")
              << "\n";
    for (const auto& note : j.value("notes", Json::array()))
      std::cout << "  note: " << note.get<std::string>() << "\n";
    return j.value("all_pass", false) ? kExitOk : kExitGuaranteeFailed;
  }
  if (kind == "bruteforce_report") {
    std::cout << "bruteforce_report n=" << j.value("n", 0) << " mode=" << j.value("mode", "?")
              << " checked=" << j.value("checked", 0LL)
              << " failures=" << j.value("failures", 0LL)
              << " min_deficit=" << j.value("min_deficit", std::string("?"))
              << " threshold_sq=" << j.value("threshold_sq", std::string("?")) << "\n";
    return j.value("all_pass", false) ? kExitOk : kExitGuaranteeFailed;
  }
  if (kind == "transcript") {
    std::cout << "transcript algorithm=" << j.value("algorithm", "?")
              << " arrivals=" << j.at("arrivals").size()
              << " flags=" << j.value("flags", Json::array()).size() << "\n";
    for (const auto& f : j.value("flags", Json::array()))
      std::cout << "  flag: " << f.get<std::string>() << "\n";
    return kExitOk;
  }
  throw std::invalid_argument("unrecognized JSON kind: \"" + kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential fair-division toolkit: build partitions, simulate arrivals, "
               "verify value guarantees"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  GenSpec spec;
  std::string family_str = "uniform";
  std::string swap_kind_str = "adjacent";
  std::string gen_floor = "1/65536";
  std::string gen_delta = "1/16";
  std::string gen_out;
  gen->add_option("--family", family_str,
                  "uniform|positive|bounded-prop|hypergraph|masterlist|lipschitz|ties|fixture")
      ->capture_default_str();
  gen->add_option("--n", spec.n, "agents")->capture_default_str();
  gen->add_option("--m", spec.m, "items")->capture_default_str();
  auto* gen_seed_opt = gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_option("--floor", gen_floor, "minimum value (positive family)")
      ->capture_default_str();
  gen->add_option("--D", spec.D, "hypergraph block size")->capture_default_str();
  gen->add_option("--swap-kind", swap_kind_str, "adjacent|arbitrary|linsep|laminar")
      ->capture_default_str();
  gen->add_option("--swaps", spec.swaps, "swap count / distance")->capture_default_str();
  gen->add_option("--layers", spec.layers, "linsep rounds")->capture_default_str();
  gen->add_option("--depth", spec.depth, "laminar chain length")->capture_default_str();
  gen->add_option("--delta", gen_delta, "lipschitz step bound")->capture_default_str();
  gen->add_option("--ties", spec.ties, "tie multiplicity")->capture_default_str();
  gen->add_option("--prop", spec.fixture_prop, "fixture scale P")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");

  // --- run ---
  auto* run = app.add_subcommand("run", "Run an allocation procedure on an instance");
  std::string run_inst, run_alg, run_order, run_tie = "lowest", run_out, run_report;
  std::uint64_t run_tie_seed = 0;
  bool run_want_report = false;
  run->add_option("--inst", run_inst, "instance JSON path")->required();
  run->add_option("--alg", run_alg,
                  "allpos|boundedprop|boundedprop-g|fair-order|influence|indiff|masterlist")
      ->required();
  run->add_option("--order", run_order, "given|identity|fair|sorted-prop");
  run->add_option("--tie", run_tie, "lowest|highest|random")->capture_default_str();
  auto* tie_seed_opt = run->add_option("--tie-seed", run_tie_seed, "seed for --tie random");
  run->add_option("-o,--out", run_out, "transcript output path");
  auto* report_opt =
      run->add_option("--report", run_report, "verify-report output path ('-' = stdout)");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Re-check a transcript against a guarantee");
  std::string v_transcript, v_theorem, v_out;
  verify->add_option("--transcript", v_transcript, "transcript JSON path")->required();
  verify->add_option("--theorem", v_theorem, "guarantee name (see README)")->required();
  auto* v_out_opt = verify->add_option("-o,--out", v_out, "report output path ('-' = stdout)");

  // --- bruteforce ---
  auto* brute = app.add_subcommand(
      "bruteforce", "Check the Hadamard lower-bound witness over item assignments");
  int b_n = 4;
  std::string b_mode = "exhaustive", b_out;
  long long b_count = 10000;
  std::uint64_t b_seed = 1;
  brute->add_option("--n", b_n, "agents (multiple of 4, n/2 a power of two)")
      ->capture_default_str();
  brute->add_option("--mode", b_mode, "exhaustive|sampled")->capture_default_str();
  brute->add_option("--count", b_count, "samples (sampled mode)")->capture_default_str();
  auto* b_seed_opt = brute->add_option("--seed", b_seed, "RNG seed (sampled mode)");
  brute->add_option("-o,--out", b_out, "report output path");
  std::string b_csv;
  brute->add_option("--csv", b_csv, "per-assignment CSV path (exhaustive mode, '-' = stdout)");

  // --- report ---
  auto* report = app.add_subcommand("report", "Summarize a JSON artifact");
  std::string r_in;
  bool r_csv = false;
  report->add_option("--in", r_in, "artifact path")->required();
  report->add_flag("--csv", r_csv, "print verify-report rows as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse the library's many parse-error codes onto the documented
    // usage-error status (help requests still exit 0).
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      apply_env_seed(gen_seed_opt, spec.seed);
      spec.family = gen_family_from_name(family_str);
      spec.swap_kind = swap_kind_from_name(swap_kind_str);
      spec.floor = Rational::parse(gen_floor);
      spec.delta = Rational::parse(gen_delta);
      return cmd_gen(spec, gen_out);
    }
    if (run->parsed()) {
      apply_env_seed(tie_seed_opt, run_tie_seed);
      TiePolicy policy{tie_kind_from_name(run_tie), run_tie_seed};
      run_want_report = report_opt->count() > 0;
      return cmd_run(run_inst, run_alg, run_order, policy, run_out, run_report,
                     run_want_report);
    }
    if (verify->parsed())
      return cmd_verify(v_transcript, v_theorem, v_out, v_out_opt->count() > 0);
    if (brute->parsed()) {
      apply_env_seed(b_seed_opt, b_seed);
      return cmd_bruteforce(b_n, b_mode, b_count, b_seed, b_out, b_csv);
    }
    if (report->parsed()) return cmd_report(r_in, r_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
