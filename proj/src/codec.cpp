#include "fairpart/codec.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fairpart {

namespace {

std::vector<int> ids_to_json_base(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::vector<int> ids_from_json_base(const Json& j) {
  std::vector<int> out;
  for (const auto& e : j) out.push_back(e.get<int>() - 1);
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) {
    auto u = j.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(INT64_MAX))
      throw std::overflow_error("rational_from_json: integer too large");
    return Rational(static_cast<long long>(u));
  }
  if (j.is_number_float()) {
    double d = j.get<double>();
    if (!std::isfinite(d)) throw std::invalid_argument("rational_from_json: non-finite");
    if (d == 0) return Rational(0);
    int e = 0;
    double fr = std::frexp(d, &e);  // d = fr * 2^e, |fr| in [1/2, 1)
    long long mant = std::llround(std::ldexp(fr, 53));
    int shift = e - 53;
    while (mant % 2 == 0 && shift < 0) {
      mant /= 2;
      ++shift;
    }
    if (shift >= 0) {
      if (shift > 62) throw std::overflow_error("rational_from_json: double too large");
      return Rational(mant << shift);
    }
    if (shift < -62) throw std::overflow_error("rational_from_json: denominator too large");
    return Rational(mant, 1LL << -shift);
  }
  throw std::invalid_argument("rational_from_json: expected string or number");
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  Json rows = Json::array();
  for (const auto& row : inst.values) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(rational_to_json(v));
    rows.push_back(std::move(r));
  }
  j["values"] = std::move(rows);
  if (!inst.arrival.empty()) j["arrival"] = ids_to_json_base(inst.arrival);
  if (!inst.master_list.empty()) j["master_list"] = ids_to_json_base(inst.master_list);
  if (!inst.hypergraph.empty()) {
    Json edges = Json::array();
    for (const auto& e : inst.hypergraph) edges.push_back(ids_to_json_base(e));
    j["hypergraph"] = Json{{"edges", std::move(edges)}};
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance: expected an object");
  for (const char* key : {"n", "m", "values"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("instance: missing \"") + key + "\"");
  int n = j.at("n").get<int>();
  int m = j.at("m").get<int>();
  std::vector<std::vector<Rational>> values;
  for (const auto& row : j.at("values")) {
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(rational_from_json(cell));
    values.push_back(std::move(r));
  }
  std::vector<int> arrival, master_list;
  if (j.contains("arrival")) arrival = ids_from_json_base(j.at("arrival"));
  if (j.contains("master_list")) master_list = ids_from_json_base(j.at("master_list"));
  std::vector<std::vector<int>> hypergraph;
  if (j.contains("hypergraph"))
    for (const auto& e : j.at("hypergraph").at("edges"))
      hypergraph.push_back(ids_from_json_base(e));
  return make_instance(n, m, std::move(values), std::move(arrival), std::move(master_list),
                       std::move(hypergraph));
}

Json transcript_to_json(const Instance& inst, const Transcript& t) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "transcript";
  j["algorithm"] = t.algorithm;
  j["policy"] = Json{{"tie", tie_kind_name(t.policy.kind)}, {"seed", t.policy.seed}};
  j["order"] = ids_to_json_base(t.order);
  j["instance"] = instance_to_json(inst);
  Json arrivals = Json::array();
  for (const auto& rec : t.records) {
    Json r;
    r["position"] = rec.position;
    r["agent"] = rec.agent + 1;
    r["stage"] = rec.stage;
    r["branch"] = rec.branch;
    r["designated"] = rec.designated + 1;  // 0 = none
    r["stage_part_items"] = ids_to_json_base(rec.stage_part_items);
    r["equals"] = rec.equals_size;
    r["zeros"] = rec.zeros_size;
    Json swaps = Json::array();
    for (const auto& sw : rec.swaps) {
      Json s;
      s["equals_part"] = sw.equals_part + 1;
      s["zero_part"] = sw.zero_part + 1;
      s["item_to_zero"] = sw.item_to_zero + 1;
      s["item_from_zero"] = sw.item_from_zero + 1;  // 0 = one-way move
      swaps.push_back(std::move(s));
    }
    r["swaps"] = std::move(swaps);
    Json menu = Json::array();
    for (const auto& e : rec.menu)
      menu.push_back(Json{{"part", e.part + 1}, {"items", ids_to_json_base(e.items)}});
    r["menu"] = std::move(menu);
    r["chosen"] = rec.chosen + 1;
    r["value"] = rational_to_json(rec.value);
    arrivals.push_back(std::move(r));
  }
  j["arrivals"] = std::move(arrivals);
  j["leftovers"] = ids_to_json_base(t.leftovers);
  j["flags"] = t.flags;
  Json s1 = Json::array();
  for (const auto& col : t.stage1_columns) s1.push_back(ids_to_json_base(col));
  j["stage1_columns"] = std::move(s1);
  Json cores = Json::array();
  for (const auto& col : t.core_parts) cores.push_back(ids_to_json_base(col));
  j["core_parts"] = std::move(cores);
  return j;
}

LoadedTranscript transcript_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "transcript")
    throw std::invalid_argument("transcript: expected kind \"transcript\"");
  if (j.value("schema_version", 0) != 1)
    throw std::invalid_argument("transcript: unsupported schema_version");
  LoadedTranscript out;
  out.inst = instance_from_json(j.at("instance"));
  Transcript& t = out.transcript;
  t.algorithm = j.at("algorithm").get<std::string>();
  t.policy.kind = tie_kind_from_name(j.at("policy").at("tie").get<std::string>());
  t.policy.seed = j.at("policy").at("seed").get<std::uint64_t>();
  t.order = ids_from_json_base(j.at("order"));
  for (const auto& r : j.at("arrivals")) {
    ArrivalRecord rec;
    rec.position = r.at("position").get<int>();
    rec.agent = r.at("agent").get<int>() - 1;
    rec.stage = r.value("stage", 0);
    rec.branch = r.value("branch", "");
    rec.designated = r.value("designated", 0) - 1;
    if (r.contains("stage_part_items"))
      rec.stage_part_items = ids_from_json_base(r.at("stage_part_items"));
    rec.equals_size = r.value("equals", -1);
    rec.zeros_size = r.value("zeros", -1);
    if (r.contains("swaps"))
      for (const auto& s : r.at("swaps")) {
        InfluenceSwap sw;
        sw.equals_part = s.at("equals_part").get<int>() - 1;
        sw.zero_part = s.at("zero_part").get<int>() - 1;
        sw.item_to_zero = s.at("item_to_zero").get<int>() - 1;
        sw.item_from_zero = s.at("item_from_zero").get<int>() - 1;
        rec.swaps.push_back(sw);
      }
    for (const auto& e : r.at("menu")) {
      MenuEntry entry;
      entry.part = e.at("part").get<int>() - 1;
      entry.items = ids_from_json_base(e.at("items"));
      rec.menu.push_back(std::move(entry));
    }
    rec.chosen = r.at("chosen").get<int>() - 1;
    rec.value = rational_from_json(r.at("value"));
    t.records.push_back(std::move(rec));
  }
  t.leftovers = ids_from_json_base(j.at("leftovers"));
  if (j.contains("flags"))
    for (const auto& f : j.at("flags")) t.flags.push_back(f.get<std::string>());
  if (j.contains("stage1_columns"))
    for (const auto& col : j.at("stage1_columns"))
      t.stage1_columns.push_back(ids_from_json_base(col));
  if (j.contains("core_parts"))
    for (const auto& col : j.at("core_parts")) t.core_parts.push_back(ids_from_json_base(col));
  return out;
}

Json verify_report_to_json(const VerifyReport& rep, const std::string& theorem) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "verify_report";
  j["theorem"] = theorem;
  j["all_pass"] = rep.all_pass;
  j["invariants_ok"] = rep.invariants_ok;
  j["trivial_bounds"] = rep.trivial_count;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["position"] = row.position;
    r["agent"] = row.agent + 1;
    r["value"] = rational_to_json(row.value);
    r["reference"] = rational_to_json(row.ref);
    r["bound_base"] = rational_to_json(row.bound.base);
    r["bound_radicand"] = rational_to_json(row.bound.radicand);
    r["bound"] = row.bound.str();
    r["pass"] = row.pass;
    r["trivial"] = row.trivial;
    r["margin_to_base"] = rational_to_json(row.value - row.bound.base);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["notes"] = rep.notes;
  return j;
}

Json bruteforce_report_to_json(const BruteForceReport& rep) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "bruteforce_report";
  j["n"] = rep.n;
  j["mode"] = rep.mode;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures;
  j["all_pass"] = rep.all_pass;
  j["min_deficit"] = rational_to_json(rep.min_deficit);
  j["threshold_sq"] = rational_to_json(rep.threshold_sq);
  j["direct"] = rep.direct;
  j["opposite"] = rep.opposite;
  j["seed"] = rep.seed;
  j["min_assignment"] = ids_to_json_base(rep.min_assignment);
  j["evidence"] = rep.evidence;
  return j;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace fairpart
