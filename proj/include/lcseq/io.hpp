#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcseq/rational.hpp"
#include "lcseq/relations.hpp"
#include "lcseq/search.hpp"
#include "lcseq/sequence.hpp"

namespace lcseq {

/// Parses a sequence literal: comma-separated nonnegative rationals ("p/q" or
/// plain decimal), optionally prefixed "@k:" to place the first listed term at
/// index k. Examples: "1,20,200,1800", "@2:1,3,5", "1/2,3". "0" parses to the
/// zero sequence.
inline Sequence parse_sequence(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty sequence literal");
  Index offset = 0;
  if (s.front() == '@') {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("missing ':' after offset prefix in \"" + std::string(text) + "\"");
    std::string_view off = trim(s.substr(1, colon - 1));
    bool negative = false;
    if (!off.empty() && (off.front() == '-' || off.front() == '+')) {
      negative = off.front() == '-';
      off.remove_prefix(1);
    }
    if (off.empty()) throw ParseError("missing offset in \"" + std::string(text) + "\"");
    Index value = 0;
    for (char c : off) {
      if (c < '0' || c > '9')
        throw ParseError("malformed offset in \"" + std::string(text) + "\"");
      value = value * 10 + (c - '0');
    }
    offset = negative ? -value : value;
    s = s.substr(colon + 1);
  }
  if (trim(s).empty()) throw ParseError("no terms in \"" + std::string(text) + "\"");
  std::vector<Rational> terms;
  std::size_t pos = 0;
  while (true) {
    const auto comma = s.find(',', pos);
    const std::string_view part =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    terms.push_back(Rational::parse(part));  // rejects empties and garbage
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Sequence::from_terms(offset, std::move(terms));
}

/// Inverse of parse_sequence: "0" for the zero sequence, "@k:" prefix only
/// when the head is not at index 0.
inline std::string format_sequence(const Sequence& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.offset() != 0) out = "@" + std::to_string(s.offset()) + ":";
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    if (i) out += ",";
    out += s.terms()[i].str();
  }
  return out;
}

/// {"offset": k, "terms": ["1", "1/2", ...]} — terms as strings so values
/// survive exactly.
inline nlohmann::json sequence_to_json(const Sequence& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Rational& t : s.terms()) terms.push_back(t.str());
  return nlohmann::json{{"offset", s.offset()}, {"terms", std::move(terms)}};
}

inline Sequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("terms") ||
      !j["offset"].is_number_integer() || !j["terms"].is_array())
    throw ParseError("sequence JSON must be {\"offset\": int, \"terms\": [...]}");
  std::vector<Rational> terms;
  for (const nlohmann::json& t : j["terms"]) {
    if (t.is_string())
      terms.push_back(Rational::parse(t.get<std::string>()));
    else if (t.is_number_unsigned())
      terms.push_back(Rational(static_cast<long long>(t.get<std::uint64_t>())));
    else
      throw ParseError("sequence terms must be strings or nonnegative integers");
  }
  return Sequence::from_terms(j["offset"].get<Index>(), std::move(terms));
}

inline nlohmann::json violation_to_json(const Violation& v) {
  return nlohmann::json{
      {"m", v.m}, {"n", v.n}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}};
}

inline Violation violation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("lhs") ||
      !j.contains("rhs"))
    throw ParseError("violation JSON must carry m, n, lhs, rhs");
  return Violation{j["m"].get<Index>(), j["n"].get<Index>(),
                   Rational::parse(j["lhs"].get<std::string>()),
                   Rational::parse(j["rhs"].get<std::string>())};
}

inline nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json seqs = nlohmann::json::array();
  for (const Sequence& s : w.sequences) seqs.push_back(sequence_to_json(s));
  return nlohmann::json{{"conjecture", conjecture_name(w.conjecture)},
                        {"sequences", std::move(seqs)},
                        {"violated_at", nlohmann::json{{"m", w.violated_at.m}, {"n", w.violated_at.n}}},
                        {"lhs", w.violated_at.lhs.str()},
                        {"rhs", w.violated_at.rhs.str()}};
}

inline Witness witness_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conjecture") || !j.contains("sequences") ||
      !j.contains("violated_at") || !j.contains("lhs") || !j.contains("rhs"))
    throw ParseError("witness JSON must carry conjecture, sequences, violated_at, lhs, rhs");
  const auto id = parse_conjecture(j["conjecture"].get<std::string>());
  if (!id) throw ParseError("unknown conjecture id: " + j["conjecture"].get<std::string>());
  Witness w;
  w.conjecture = *id;
  for (const nlohmann::json& s : j["sequences"]) w.sequences.push_back(sequence_from_json(s));
  w.violated_at.m = j["violated_at"]["m"].get<Index>();
  w.violated_at.n = j["violated_at"]["n"].get<Index>();
  w.violated_at.lhs = Rational::parse(j["lhs"].get<std::string>());
  w.violated_at.rhs = Rational::parse(j["rhs"].get<std::string>());
  return w;
}

}  // namespace lcseq
