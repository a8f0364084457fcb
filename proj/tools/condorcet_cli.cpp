// condorcet: command-line front end for the Condorcet domain library.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 usage or invalid input,
// 3 resource cap exceeded, 4 parse error. Errors go to stderr as
// "error[<kind>]: <message>".

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "condorcet/condorcet.hpp"

namespace {

using namespace condorcet;

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kResource = 3, kParse = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw UsageError("cannot write '" + *path + "'");
  out << text;
}

std::string domain_text(const Domain& d, const std::string& format, const std::string& preamble = {}) {
  if (format == "json") return domain_to_json(d).dump(2) + "\n";
  std::ostringstream out;
  out << preamble;
  write_domain(out, d);
  return out.str();
}

/// Order given on the command line over its own tokens: "3 2 1" or "321".
std::pair<LinearOrder, AlternativeSet> standalone_order(const std::string& text) {
  auto tokens = detail::split_whitespace(text);
  if (tokens.size() == 1 && tokens.front().size() > 1) {
    std::vector<std::string> chars;
    for (char c : tokens.front()) chars.emplace_back(1, c);
    tokens = chars;
  }
  AlternativeSet alts = sorted_alternatives(tokens);
  if (alts.size() != tokens.size()) throw ParseError("order '" + text + "' repeats an alternative");
  return {parse_order(text, alts), alts};
}

std::string format_map(const AlternativeMap& psi, const AlternativeSet& from, const AlternativeSet& to) {
  std::string out;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    if (x) out += ' ';
    out += from.label(static_cast<AltId>(x)) + "->" + to.label(psi[x]);
  }
  return out;
}

struct FishburnArgs {
  std::size_t n = 0;
  std::string variant = "bottom";
  bool formula_only = false;
  std::optional<std::string> out;
  std::string format = "text";
  std::size_t cap = kDefaultFishburnCap;
};

int cmd_fishburn(const FishburnArgs& a) {
  if (a.n < 2) throw UsageError("--n must be at least 2");
  const ExactInt expected = fishburn_cardinality(a.n);
  if (a.formula_only) {
    std::cout << to_string(expected) << '\n';
    return kOk;
  }
  const auto variant = a.variant == "top" ? SchemeVariant::kEvenTop : SchemeVariant::kEvenBottom;
  const Domain d = fishburn_domain(a.n, variant, a.cap);
  if (ExactInt(d.size()) != expected)
    throw Error("enumerated " + std::to_string(d.size()) + " orders but the closed form gives " + to_string(expected));
  emit(a.out, domain_text(d, a.format, "# Fishburn domain, n = " + std::to_string(a.n) + ", " +
                                           std::to_string(d.size()) + " orders\n"));
  return kOk;
}

int cmd_analyze(const std::string& file, const std::string& format, const ReportLimits& limits) {
  const Domain d = load_domain(file);
  const AnalysisReport report = analyze(d, limits);
  if (format == "json")
    std::cout << report_to_json(report).dump(2) << '\n';
  else
    write_report_text(std::cout, report);
  return report.verdict("condorcet").is_true() ? kOk : kFalse;
}

struct ComposeArgs {
  std::string left, right;
  std::optional<std::string> u, v, out;
  std::string format = "text";
};

int cmd_compose(const ComposeArgs& a) {
  const Domain left = load_domain(a.left);
  const Domain right = load_domain(a.right);
  if (left.empty() || right.empty()) throw PreconditionError("cannot compose an empty domain");
  const LinearOrder u = a.u ? parse_order(*a.u, left.alternatives()) : default_seam_order(left);
  const LinearOrder v = a.v ? parse_order(*a.v, right.alternatives()) : default_seam_order(right);
  const CompositionResult r = tensor(left, right, u, v);
  const ExactInt predicted = tensor_cardinality(r.left_size, r.right_size, u.size(), v.size());
  std::ostringstream pre;
  pre << "# tensor product: u = " << format_order(u, left.alternatives())
      << ", v = " << format_order(v, right.alternatives()) << '\n'
      << "# " << r.left_size << " * " << r.right_size << " + " << to_string(r.shuffle_count)
      << " - 1 = " << to_string(predicted) << " orders\n";
  if (ExactInt(r.domain.size()) != predicted) throw Error("tensor size disagrees with its cardinality formula");
  emit(a.out, domain_text(r.domain, a.format, pre.str()));
  return kOk;
}

int cmd_shuffles(const std::string& u_text, const std::string& v_text, const std::optional<std::string>& out,
                 const std::string& format) {
  const auto [u, ua] = standalone_order(u_text);
  const auto [v, va] = standalone_order(v_text);
  emit(out, domain_text(shuffle_domain(u, ua, v, va), format));
  return kOk;
}

int cmd_extend(const std::string& file, std::size_t cap) {
  const Domain d = load_domain(file);
  for (const auto& w : extensions(d, cap)) std::cout << format_order(w, d.alternatives()) << '\n';
  return kOk;
}

int cmd_isomorphic(const std::string& a, const std::string& b, bool flip, std::size_t cap) {
  const Domain from = load_domain(a);
  const Domain to = load_domain(b);
  const auto psi = find_isomorphism(from, to, flip, cap);
  if (!psi) {
    std::cout << "none\n";
    return kFalse;
  }
  std::cout << format_map(*psi, from.alternatives(), to.alternatives()) << '\n';
  return kOk;
}

int cmd_scan(std::size_t max_n, const std::string& format) {
  const HypothesisScan scan = hypothesis_scan(max_n);
  auto relation = [](int c) { return c < 0 ? "<" : c > 0 ? ">" : "="; };
  if (format == "csv") {
    std::cout << "n,tensor_size,fishburn_2n,relation\n";
    for (const auto& row : scan.rows)
      std::cout << row.n << ',' << to_string(row.product) << ',' << to_string(row.fishburn) << ','
                << relation(row.comparison) << '\n';
  } else {
    std::cout << "n  |F_n (x) F_n|  |F_2n|\n";
    for (const auto& row : scan.rows)
      std::cout << row.n << "  " << to_string(row.product) << ' ' << relation(row.comparison) << ' '
                << to_string(row.fishburn) << '\n';
  }
  if (scan.first_exceedance)
    std::cout << "FIRST-EXCEEDANCE n=" << *scan.first_exceedance << '\n';
  else
    std::cout << "FIRST-EXCEEDANCE none\n";
  return kOk;
}

int cmd_single_peaked(std::size_t n, bool dipped, const std::optional<std::string>& out, const std::string& format) {
  emit(out, domain_text(dipped ? single_dipped_domain(n) : single_peaked_domain(n), format));
  return kOk;
}

int cmd_satisfying(const std::string& file, const std::optional<std::string>& alternatives,
                   const std::optional<std::string>& out, const std::string& format, std::size_t cap) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open '" + file + "'");
  std::optional<AlternativeSet> alts;
  if (alternatives) alts = AlternativeSet(detail::split_whitespace(*alternatives));
  const auto [set_alts, conditions] = read_condition_set(in, alts);
  const Domain d = orders_satisfying(conditions, set_alts, cap);
  emit(out, domain_text(d, format));
  return d.empty() ? kFalse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, compose and analyze Condorcet domains"};
  app.require_subcommand(1);

  FishburnArgs fish;
  auto* fishburn = app.add_subcommand("fishburn", "Fishburn alternating-scheme domain F_n");
  fishburn->add_option("--n", fish.n, "number of alternatives")->required();
  fishburn->add_option("--variant", fish.variant, "bottom (F_n) or top (flipped scheme)")
      ->check(CLI::IsMember({"bottom", "top"}));
  fishburn->add_flag("--formula-only", fish.formula_only, "print the exact cardinality only");
  fishburn->add_option("--out", fish.out, "write the domain here instead of stdout");
  fishburn->add_option("--format", fish.format)->check(CLI::IsMember({"text", "json"}));
  fishburn->add_option("--cap", fish.cap, "enumeration cap on n");

  std::string analyze_file, analyze_format = "text";
  ReportLimits limits;
  auto* analyze_cmd = app.add_subcommand("analyze", "Structural report for a domain file");
  analyze_cmd->add_option("file", analyze_file)->required();
  analyze_cmd->add_option("--format", analyze_format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--graph-cap", limits.graph_cap, "largest domain for which G_D is built");
  analyze_cmd->add_option("--enum-cap", limits.enumeration_cap, "largest n for the extension search");

  ComposeArgs comp;
  auto* compose = app.add_subcommand("compose", "Tensor product (L (x) R)(u, v)");
  compose->add_option("--left", comp.left)->required();
  compose->add_option("--right", comp.right)->required();
  compose->add_option("--u", comp.u, "order of the left domain (default: a reversible member)");
  compose->add_option("--v", comp.v, "order of the right domain (default: a reversible member)");
  compose->add_option("--out", comp.out);
  compose->add_option("--format", comp.format)->check(CLI::IsMember({"text", "json"}));

  std::string shuffle_u, shuffle_v, shuffle_format = "text";
  std::optional<std::string> shuffle_out;
  auto* shuffles_cmd = app.add_subcommand("shuffles", "All shuffles of two orders on disjoint alternatives");
  shuffles_cmd->add_option("--u", shuffle_u)->required();
  shuffles_cmd->add_option("--v", shuffle_v)->required();
  shuffles_cmd->add_option("--out", shuffle_out);
  shuffles_cmd->add_option("--format", shuffle_format)->check(CLI::IsMember({"text", "json"}));

  std::string extend_file;
  std::size_t extend_cap = kDefaultEnumerationCap;
  auto* extend = app.add_subcommand("extend", "Orders that can be added keeping the domain Condorcet");
  extend->add_option("file", extend_file)->required();
  extend->add_option("--cap", extend_cap);

  std::string iso_a, iso_b;
  bool iso_flip = false;
  std::size_t iso_cap = kDefaultIsomorphismCap;
  auto* isomorphic = app.add_subcommand("isomorphic", "Find a bijection mapping one domain onto another");
  isomorphic->add_option("first", iso_a)->required();
  isomorphic->add_option("second", iso_b)->required();
  isomorphic->add_flag("--flip", iso_flip, "map onto reversed images");
  isomorphic->add_option("--cap", iso_cap);

  std::size_t scan_max = 0;
  std::string scan_format = "table";
  auto* scan = app.add_subcommand("scan", "Compare |F_n (x) F_n| with |F_2n|");
  scan->alias("hypothesis-scan");
  scan->add_option("--max-n", scan_max)->required();
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"table", "csv"}));

  std::size_t sp_n = 0;
  bool sp_dipped = false;
  std::optional<std::string> sp_out;
  std::string sp_format = "text";
  auto* single_peaked = app.add_subcommand("single-peaked", "Single-peaked domain on the axis 1 < ... < n");
  single_peaked->add_option("--n", sp_n)->required();
  single_peaked->add_flag("--dipped", sp_dipped, "reverse every order");
  single_peaked->add_option("--out", sp_out);
  single_peaked->add_option("--format", sp_format)->check(CLI::IsMember({"text", "json"}));

  std::string sat_file, sat_format = "text";
  std::optional<std::string> sat_alts, sat_out;
  std::size_t sat_cap = kDefaultEnumerationCap;
  auto* satisfying = app.add_subcommand("satisfying", "All orders satisfying a never-condition file");
  satisfying->add_option("file", sat_file)->required();
  satisfying->add_option("--alternatives", sat_alts, "alternative labels, space separated");
  satisfying->add_option("--out", sat_out);
  satisfying->add_option("--format", sat_format)->check(CLI::IsMember({"text", "json"}));
  satisfying->add_option("--cap", sat_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*fishburn) return cmd_fishburn(fish);
    if (*analyze_cmd) return cmd_analyze(analyze_file, analyze_format, limits);
    if (*compose) return cmd_compose(comp);
    if (*shuffles_cmd) return cmd_shuffles(shuffle_u, shuffle_v, shuffle_out, shuffle_format);
    if (*extend) return cmd_extend(extend_file, extend_cap);
    if (*isomorphic) return cmd_isomorphic(iso_a, iso_b, iso_flip, iso_cap);
    if (*scan) return cmd_scan(scan_max, scan_format);
    if (*single_peaked) return cmd_single_peaked(sp_n, sp_dipped, sp_out, sp_format);
    if (*satisfying) return cmd_satisfying(sat_file, sat_alts, sat_out, sat_format, sat_cap);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error[resource-limit]: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "error[parse]: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "error[domain]: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error[precondition]: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
