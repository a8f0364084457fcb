#ifndef CONDORCET_IO_HPP
#define CONDORCET_IO_HPP

// Text forms.
//
//   order       labels separated by single spaces, best first: "2 4 1 3". When every
//               label is one character the compact "2413" is accepted on input.
//   condition   xN{a,b,c}i, e.g. "bN{a,b,c}1".
//   domain file "alternatives: a b c" then one order per line; blank lines and '#'
//               comments ignored. A JSON mirror {"alternatives": [...], "orders": [[...]]}
//               is accepted wherever a domain file is.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domain.hpp"
#include "errors.hpp"
#include "never.hpp"
#include "order.hpp"

namespace condorcet {

namespace detail {

inline std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace detail

inline LinearOrder parse_order(std::string_view text, const AlternativeSet& alternatives, std::size_t line = 0) {
  auto tokens = detail::split_whitespace(text);
  if (tokens.size() == 1 && alternatives.size() > 1 && alternatives.single_char_labels()) {
    std::vector<std::string> chars;
    for (char c : tokens.front()) chars.emplace_back(1, c);
    tokens = std::move(chars);
  }
  if (tokens.size() != alternatives.size())
    throw ParseError("order '" + std::string(detail::trim(text)) + "' has " + std::to_string(tokens.size()) +
                         " alternatives, expected " + std::to_string(alternatives.size()),
                     line);
  std::vector<AltId> ranking;
  std::vector<bool> seen(alternatives.size(), false);
  for (const auto& token : tokens) {
    const auto id = alternatives.find(token);
    if (!id) throw ParseError("unknown alternative '" + token + "'", line);
    if (seen[*id]) throw ParseError("alternative '" + token + "' repeated", line);
    seen[*id] = true;
    ranking.push_back(*id);
  }
  return LinearOrder(std::move(ranking));
}

inline std::string format_order(const LinearOrder& u, const AlternativeSet& alternatives, bool compact = false) {
  std::string out;
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (r && !compact) out += ' ';
    out += alternatives.label(u[r]);
  }
  return out;
}

inline std::string format_condition(const NeverCondition& c, const AlternativeSet& alternatives) {
  const auto& t = c.triple();
  return alternatives.label(c.x()) + "N{" + alternatives.label(t[0]) + "," + alternatives.label(t[1]) + "," +
         alternatives.label(t[2]) + "}" + std::to_string(c.position());
}

/// The pieces of "xN{a,b,c}i" as labels.
struct ConditionText {
  std::string x;
  std::vector<std::string> triple;
  int position = 0;
};

inline ConditionText split_condition(std::string_view text, std::size_t line = 0) {
  text = detail::trim(text);
  const auto open = text.find("N{");
  const auto close = text.find('}');
  if (open == std::string_view::npos || open == 0 || close == std::string_view::npos || close < open ||
      close + 2 != text.size())
    throw ParseError("malformed never condition '" + std::string(text) + "', expected xN{a,b,c}i", line);
  ConditionText out;
  out.x = std::string(text.substr(0, open));
  std::string_view inner = text.substr(open + 2, close - open - 2);
  while (true) {
    const auto comma = inner.find(',');
    out.triple.emplace_back(detail::trim(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (out.triple.size() != 3) throw ParseError("never condition needs exactly three alternatives", line);
  const char digit = text.back();
  if (digit < '1' || digit > '3') throw ParseError("never condition position must be 1, 2 or 3", line);
  out.position = digit - '0';
  return out;
}

inline NeverCondition parse_condition(std::string_view text, const AlternativeSet& alternatives, std::size_t line = 0) {
  const auto parts = split_condition(text, line);
  auto id = [&](const std::string& label) {
    const auto found = alternatives.find(label);
    if (!found) throw ParseError("unknown alternative '" + label + "'", line);
    return *found;
  };
  try {
    return NeverCondition({id(parts.triple[0]), id(parts.triple[1]), id(parts.triple[2])}, id(parts.x),
                          parts.position);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line);
  }
}

/// Labels sorted numerically when all are decimal, else lexicographically.
inline AlternativeSet sorted_alternatives(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    if (detail::all_digits(a) && detail::all_digits(b) && a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return AlternativeSet(std::move(labels));
}

/// Reads one condition per line. Without `alternatives`, the set is every label the
/// conditions mention, sorted by sorted_alternatives.
inline std::pair<AlternativeSet, ConditionSet> read_condition_set(std::istream& in,
                                                                  std::optional<AlternativeSet> alternatives = {}) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::vector<std::string> labels;
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    const auto parts = split_condition(line, number);
    labels.push_back(parts.x);
    labels.insert(labels.end(), parts.triple.begin(), parts.triple.end());
    lines.emplace_back(number, std::string(line));
  }
  AlternativeSet alts = alternatives ? *alternatives : sorted_alternatives(labels);
  ConditionSet set(alts.size());
  for (const auto& [n, text] : lines) set.add(parse_condition(text, alts, n));
  return {std::move(alts), std::move(set)};
}

inline void write_condition_set(std::ostream& out, const ConditionSet& set, const AlternativeSet& alternatives) {
  for (const auto& c : set.conditions()) out << format_condition(c, alternatives) << '\n';
}

inline Domain domain_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> labels;
    for (const auto& a : j.at("alternatives")) labels.push_back(a.is_string() ? a.get<std::string>() : a.dump());
    AlternativeSet alts(std::move(labels));
    std::vector<LinearOrder> orders;
    std::size_t index = 0;
    for (const auto& row : j.at("orders")) {
      ++index;
      std::string text;
      for (const auto& a : row) {
        if (!text.empty()) text += ' ';
        text += a.is_string() ? a.get<std::string>() : a.dump();
      }
      try {
        orders.push_back(parse_order(text, alts));
      } catch (const ParseError& e) {
        throw ParseError(std::string("order ") + std::to_string(index) + ": " + e.what());
      }
    }
    return Domain(std::move(alts), std::move(orders));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad domain JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

inline nlohmann::json domain_to_json(const Domain& d) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& u : d) {
    nlohmann::json row = nlohmann::json::array();
    for (AltId x : u.ranking()) row.push_back(d.alternatives().label(x));
    orders.push_back(std::move(row));
  }
  return {{"alternatives", d.alternatives().labels()}, {"orders", std::move(orders)}};
}

inline Domain read_domain_text(std::istream& in) {
  std::optional<AlternativeSet> alts;
  std::vector<LinearOrder> orders;
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    if (!alts) {
      constexpr std::string_view kHeader = "alternatives:";
      if (line.substr(0, kHeader.size()) != kHeader)
        throw ParseError("expected header 'alternatives: ...'", number);
      try {
        alts = AlternativeSet(detail::split_whitespace(line.substr(kHeader.size())));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), number);
      }
      continue;
    }
    orders.push_back(parse_order(line, *alts, number));
  }
  if (!alts) throw ParseError("missing header 'alternatives: ...'");
  return Domain(std::move(*alts), std::move(orders));
}

/// Text or JSON, chosen by the first non-blank character.
inline Domain read_domain(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad domain JSON: ") + e.what());
    }
    return domain_from_json(j);
  }
  std::istringstream text(content);
  return read_domain_text(text);
}

inline void write_domain(std::ostream& out, const Domain& d) {
  out << "alternatives:";
  for (const auto& l : d.alternatives().labels()) out << ' ' << l;
  out << '\n';
  for (const auto& u : d) out << format_order(u, d.alternatives()) << '\n';
}

inline Domain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_domain(in);
}

inline void save_domain(const std::string& path, const Domain& d, bool json = false) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  if (json)
    out << domain_to_json(d).dump(2) << '\n';
  else
    write_domain(out, d);
}

}  // namespace condorcet

#endif  // CONDORCET_IO_HPP
