#ifndef FAIRPART_CODEC_HPP
#define FAIRPART_CODEC_HPP

#include <string>

#include <json.hpp>

#include "fairpart/arrival.hpp"
#include "fairpart/lowerbound.hpp"
#include "fairpart/model.hpp"

namespace fairpart {

// nlohmann::json keeps object keys sorted, so dump() output is byte-stable
// for a fixed structure — the CLI relies on that for reproducible artifacts.
using Json = nlohmann::json;

// Rationals travel as exact "p/q" strings.  On input, plain JSON integers
// are accepted as-is and doubles are converted through their exact binary
// expansion (every finite double is a dyadic rational), so no decimal
// rounding ever sneaks in.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// External schema (all ids 1-based):
//   {"n": 2, "m": 3, "values": [[...], [...]],
//    "arrival": [..], "master_list": [..],          // optional
//    "hypergraph": {"edges": [[..], ..]},           // optional
//    "meta": {...}}                                  // ignored
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json transcript_to_json(const Instance& inst, const Transcript& t);

struct LoadedTranscript {
  Instance inst;
  Transcript transcript;
};

LoadedTranscript transcript_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& rep, const std::string& theorem);
Json bruteforce_report_to_json(const BruteForceReport& rep);

std::string read_text(const std::string& path);

// Writes via a temporary file in the same directory plus rename, so readers
// never observe a half-written artifact.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace fairpart

#endif  // FAIRPART_CODEC_HPP
