#ifndef CONDORCET_REPORT_HPP
#define CONDORCET_REPORT_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "domain.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "never.hpp"

namespace condorcet {

inline constexpr int kReportSchemaVersion = 1;

struct Verdict {
  enum class State { kFalse, kTrue, kSkipped };

  State state = State::kSkipped;
  std::string reason;  ///< why it was skipped

  static Verdict of(bool b) { return {b ? State::kTrue : State::kFalse, {}}; }
  static Verdict skipped(std::string why) { return {State::kSkipped, std::move(why)}; }

  bool is_true() const noexcept { return state == State::kTrue; }

  std::string text() const {
    switch (state) {
      case State::kTrue: return "true";
      case State::kFalse: return "false";
      default: return "skipped (" + reason + ")";
    }
  }
};

struct ReportLimits {
  std::size_t graph_cap = kDefaultGraphCap;             ///< orders in G_D
  std::size_t enumeration_cap = kDefaultEnumerationCap; ///< alternatives for extension search
};

struct AnalysisReport {
  std::size_t size = 0;
  std::size_t alternatives = 0;
  /// Fixed order: condorcet, ample, copious, peak-pit, maximal-width, connected,
  /// semi-connected, maximal, median-graph.
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::optional<std::pair<std::size_t, std::size_t>> graph_size;  ///< vertices, edges
  std::vector<std::pair<std::string, std::vector<std::string>>> never_conditions;
  std::optional<std::vector<std::string>> inversion_triples;
  std::optional<std::vector<std::string>> extensions;

  const Verdict& verdict(const std::string& name) const {
    for (const auto& [k, v] : verdicts)
      if (k == name) return v;
    throw PreconditionError("no verdict named " + name);
  }
};

inline AnalysisReport analyze(const Domain& d, const ReportLimits& limits = {}) {
  const auto& alts = d.alternatives();
  AnalysisReport r;
  r.size = d.size();
  r.alternatives = d.alternative_count();

  const bool condorcet = is_condorcet(d);
  r.verdicts.emplace_back("condorcet", Verdict::of(condorcet));
  r.verdicts.emplace_back("ample", Verdict::of(!d.empty() && is_ample(d)));
  r.verdicts.emplace_back("copious", Verdict::of(is_copious(d)));
  r.verdicts.emplace_back("peak-pit", Verdict::of(condorcet && is_peak_pit(d)));
  r.verdicts.emplace_back("maximal-width", Verdict::of(has_maximal_width(d)));

  std::optional<DomainGraph> graph;
  if (d.size() <= limits.graph_cap) graph = build_graph(d, limits.graph_cap);
  const std::string graph_skip = "cap: graph_cap=" + std::to_string(limits.graph_cap) + " orders";
  r.verdicts.emplace_back("connected", graph ? Verdict::of(is_connected(*graph)) : Verdict::skipped(graph_skip));

  std::optional<MaximalChain> chain;
  for (const auto& u : d)
    if (d.contains(reverse(u)) && (chain = find_maximal_chain(d, u))) break;
  r.verdicts.emplace_back("semi-connected", Verdict::of(chain.has_value()));

  if (!condorcet) {
    r.verdicts.emplace_back("maximal", Verdict::of(false));
  } else if (d.alternative_count() > limits.enumeration_cap) {
    r.verdicts.emplace_back("maximal", Verdict::skipped("cap: enumeration_cap=" +
                                                        std::to_string(limits.enumeration_cap) + " alternatives"));
  } else {
    std::vector<std::string> ext;
    for (const auto& w : extensions(d, limits.enumeration_cap)) ext.push_back(format_order(w, alts));
    r.verdicts.emplace_back("maximal", Verdict::of(ext.empty()));
    r.extensions = std::move(ext);
  }

  r.verdicts.emplace_back("median-graph",
                          graph ? Verdict::of(verify_median_graph(*graph).is_median) : Verdict::skipped(graph_skip));
  if (graph) r.graph_size = std::pair{graph->graph.vertex_count(), graph->graph.edge_count()};

  if (!d.empty()) {
    const auto conditions = conditions_of(d);
    for (const auto& t : all_triples(d.alternative_count())) {
      std::vector<std::string> list;
      for (const auto& c : conditions.conditions_on(t)) list.push_back(format_condition(c, alts));
      r.never_conditions.emplace_back(alts.label(t[0]) + "," + alts.label(t[1]) + "," + alts.label(t[2]),
                                      std::move(list));
    }
  }

  if (chain) {
    std::vector<std::string> triples;
    for (const auto& t : inversion_triples(*chain))
      triples.push_back("[" + alts.label(t.i) + "," + alts.label(t.j) + "," + alts.label(t.k) + "]");
    r.inversion_triples = std::move(triples);
  }
  return r;
}

/// JSON form with a fixed field order.
inline nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["size"] = r.size;
  j["alternatives"] = r.alternatives;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.verdicts) {
    if (v.state == Verdict::State::kSkipped)
      verdicts[name] = {{"skipped", v.reason}};
    else
      verdicts[name] = v.is_true();
  }
  j["verdicts"] = verdicts;
  if (r.graph_size) j["graph"] = {{"vertices", r.graph_size->first}, {"edges", r.graph_size->second}};
  nlohmann::ordered_json never = nlohmann::ordered_json::object();
  for (const auto& [triple, list] : r.never_conditions) never[triple] = list;
  j["never_conditions"] = never;
  if (r.inversion_triples) j["inversion_triples"] = *r.inversion_triples;
  if (r.extensions) j["extensions"] = *r.extensions;
  return j;
}

inline void write_report_text(std::ostream& out, const AnalysisReport& r) {
  out << "size: " << r.size << '\n';
  out << "alternatives: " << r.alternatives << '\n';
  for (const auto& [name, v] : r.verdicts) out << name << ": " << v.text() << '\n';
  if (r.graph_size) out << "graph: " << r.graph_size->first << " vertices, " << r.graph_size->second << " edges\n";
  out << "never-conditions:\n";
  for (const auto& [triple, list] : r.never_conditions) {
    out << "  {" << triple << "}:";
    for (const auto& c : list) out << ' ' << c;
    out << '\n';
  }
  if (r.inversion_triples) {
    out << "inversion-triples:";
    for (const auto& t : *r.inversion_triples) out << ' ' << t;
    out << '\n';
  }
  if (r.extensions) {
    out << "extensions: " << r.extensions->size() << '\n';
    for (const auto& w : *r.extensions) out << "  " << w << '\n';
  }
}

}  // namespace condorcet

#endif  // CONDORCET_REPORT_HPP
