// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//   acceptance [--seed N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "condorcet/condorcet.hpp"
#include "test_util.hpp"

using namespace condorcet;
using condorcet::testing::compact;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::uint64_t g_seed = 20240601;

Domain example_e() {
  return testing::numbers({"12345", "21345", "23145", "32145", "12354", "21354", "23154", "32154", "32514",
                           "35214", "53214", "32541", "35241", "35421", "53241", "53421", "54321"});
}

std::string format_triples(const std::set<std::vector<AltId>>& sets, const AlternativeSet& alts) {
  std::string out;
  for (const auto& flat : sets) {
    out += out.empty() ? "{" : " | {";
    for (std::size_t i = 0; i < flat.size(); i += 3)
      out += (i ? "," : "") + std::string("[") + alts.label(flat[i]) + "," + alts.label(flat[i + 1]) + "," +
             alts.label(flat[i + 2]) + "]";
    out += "}";
  }
  return out;
}

std::set<std::vector<AltId>> chain_triples(const Domain& d, const LinearOrder& w) {
  std::set<std::vector<AltId>> out;
  for (const auto& chain : all_maximal_chains(d, w)) {
    std::vector<AltId> flat;
    for (const auto& t : inversion_triples(chain)) flat.insert(flat.end(), {t.i, t.j, t.k});
    out.insert(flat);
  }
  return out;
}

Outcome fishburn_listings() {
  Outcome o;
  o.check(compact(fishburn_domain(2)) == std::set<std::string>{"12", "21"}, "F_2");
  o.check(compact(fishburn_domain(3)) == std::set<std::string>{"123", "213", "231", "321"}, "F_3");
  o.check(compact(fishburn_domain(4)) ==
              std::set<std::string>{"1234", "1243", "2134", "2143", "2413", "2431", "4213", "4231", "4321"},
          "F_4");
  return o;
}

Outcome formula_vs_enumeration() {
  Outcome o;
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto size = fishburn_domain(n).size();
    o.check(ExactInt(size) == fishburn_cardinality(n), "n=" + std::to_string(n) + " enumerated " +
                                                           std::to_string(size) + " vs " +
                                                           to_string(fishburn_cardinality(n)));
  }
  o.check(fishburn_domain(5).size() == 20, "|F_5| != 20");
  return o;
}

Outcome refutation() {
  Outcome o;
  const auto f20 = fishburn_cardinality(20);
  o.check(to_string(tensor_cardinality(f20, f20, 20, 20)) == "4611858343415", "product at n=20");
  o.check(to_string(fishburn_cardinality(40)) == "4549082342996", "|F_40|");
  const auto scan = hypothesis_scan(25);
  o.check(scan.first_exceedance && *scan.first_exceedance == 20, "first exceedance not at n=20");
  for (const auto& row : scan.rows)
    if (row.n == 21) o.check(row.comparison > 0, "no exceedance at n=21");
  o.detail = o.pass ? "first exceedance n=20" : o.detail;
  return o;
}

Outcome example_one() {
  Outcome o;
  const auto r = tensor(fishburn_domain(3), fishburn_domain(2), testing::no("321"), testing::no("21"));
  o.check(r.domain == example_e(), "tensor differs from the 17-order listing");
  const auto report = analyze(r.domain);
  o.check(report.verdict("copious").is_true(), "not copious");
  o.check(!report.verdict("maximal").is_true(), "reported maximal");
  o.check(report.extensions && *report.extensions == std::vector<std::string>{"2 3 5 1 4", "2 3 5 4 1"},
          "extensions differ");
  return o;
}

Outcome proposition_six() {
  Outcome o;
  const auto ab = testing::dom(AlternativeSet({"a", "b"}), {"ab", "ba"});
  const auto cd = testing::dom(AlternativeSet({"c", "d"}), {"cd", "dc"});
  const auto product = tensor(ab, cd, testing::lo("ab"), testing::lo("ab")).domain;
  const auto f4 = fishburn_domain(4);
  const auto psi = find_isomorphism(product, f4, false);
  o.check(psi && is_isomorphism(product, f4, *psi, false), "no bijection found");
  o.check(is_isomorphism(f4, product, AlternativeMap{1, 0, 3, 2}, false), "1->b 2->a 3->d 4->c fails");
  return o;
}

Outcome inversion_triple_sets() {
  Outcome o;
  const auto f4 = fishburn_domain(4);
  const auto f4_sets = chain_triples(f4, testing::no("1234"));
  o.check(f4_sets == std::set<std::vector<AltId>>{{0, 2, 3, 1, 2, 3}},
          "F_4 chains give " + format_triples(f4_sets, f4.alternatives()));
  const auto e = example_e();
  const auto e_sets = chain_triples(e, testing::no("12345"));
  o.check(e_sets == std::set<std::vector<AltId>>{{0, 1, 3, 0, 2, 3, 1, 2, 3}},
          "E chains give " + format_triples(e_sets, e.alternatives()) + ", expected {[1,2,4],[1,3,4],[2,3,4]}");
  return o;
}

Domain corpus_domain(std::mt19937_64& rng, int index) {
  const std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  return index % 2 ? testing::random_domain(rng, n, 12) : testing::random_condorcet_domain(rng, n, 12);
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(g_seed);
  int condorcet = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = corpus_domain(rng, i);
    const bool fast = is_condorcet(d);
    if (fast != is_condorcet_oracle(d)) o.check(false, "disagreement on domain " + std::to_string(i));
    condorcet += fast;
  }
  if (o.pass) o.detail = "1000 domains, " + std::to_string(condorcet) + " Condorcet";
  return o;
}

Outcome preservation() {
  Outcome o;
  std::mt19937_64 rng(g_seed + 14);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int i = 0; i < 200; ++i) {
    const bool peak_pit = i % 2;
    auto pick = [&](std::size_t n) {
      return i % 3 == 0 ? testing::random_maximal_candidate(rng, n, peak_pit)
                        : testing::random_condorcet_domain(rng, n, 20, peak_pit);
    };
    const auto left = pick(size(rng)), right = pick(size(rng));
    const auto u = left[std::uniform_int_distribution<std::size_t>(0, left.size() - 1)(rng)];
    const auto v = right[std::uniform_int_distribution<std::size_t>(0, right.size() - 1)(rng)];
    const auto d = tensor(left, right, u, v).domain;
    const std::string tag = " (pair " + std::to_string(i) + ")";
    o.check(is_condorcet(d), "not Condorcet" + tag);
    o.check(ExactInt(d.size()) ==
                tensor_cardinality(left.size(), right.size(), left.alternative_count(), right.alternative_count()),
            "cardinality" + tag);
    if (is_peak_pit(left) && is_peak_pit(right)) o.check(is_peak_pit(d), "peak-pit lost" + tag);
    if (is_connected(left) && is_connected(right)) o.check(is_connected(d), "connectedness lost" + tag);
    if (is_copious(left) && is_copious(right) && is_ample(left) && is_ample(right))
      o.check(is_copious(d), "copiousness lost" + tag);
    if (left.contains(reverse(u)) && right.contains(reverse(v))) o.check(has_maximal_width(d), "width lost" + tag);
  }
  const auto d1 = testing::dom(AlternativeSet({"a", "b"}), {"ab", "ba"});
  const auto d2 = testing::dom(AlternativeSet({"c", "d", "e"}), {"cde", "dec", "dce", "edc"});
  const auto wide = tensor(d1, d2, testing::lo("ab"), testing::lo("abc")).domain;
  const auto narrow = tensor(d1, d2, testing::lo("ab"), testing::lo("bca")).domain;
  o.check(has_maximal_width(wide) && !has_maximal_width(narrow), "counterexample widths");
  o.check(!find_isomorphism(wide, narrow, false) && !find_isomorphism(wide, narrow, true),
          "counterexample domains isomorphic");
  return o;
}

Outcome small_maximal_domains() {
  Outcome o;
  const auto all = all_orders(3);
  std::vector<Domain> condorcet;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<LinearOrder> orders;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask & (1u << i)) orders.push_back(all[i]);
    Domain d(AlternativeSet::lettered(3), std::move(orders));
    if (is_condorcet_oracle(d)) condorcet.push_back(std::move(d));
  }
  std::vector<Domain> maximal;
  for (const auto& d : condorcet) {
    bool contained = false;
    for (const auto& other : condorcet)
      if (other.size() > d.size() &&
          std::includes(other.begin(), other.end(), d.begin(), d.end()))
        contained = true;
    if (!contained) maximal.push_back(d);
  }
  for (const auto& d : maximal) {
    o.check(d.size() == 4, "maximal domain of size " + std::to_string(d.size()));
    o.check(conditions_of(d).size() == 1, "maximal domain with " + std::to_string(conditions_of(d).size()) +
                                              " conditions");
  }
  auto listed = [&](std::initializer_list<std::string_view> orders) {
    const auto d = testing::letters(orders);
    return std::find(maximal.begin(), maximal.end(), d) != maximal.end();
  };
  o.check(listed({"abc", "acb", "cab", "cba"}), "CD_3t missing");
  o.check(listed({"abc", "acb", "bca", "cba"}), "CD_3m missing");
  o.check(listed({"abc", "bac", "bca", "cba"}), "CD_3b missing");
  std::vector<Domain> classes;
  for (const auto& d : maximal)
    if (std::none_of(classes.begin(), classes.end(),
                     [&](const Domain& c) { return find_isomorphism(c, d, false).has_value(); }))
      classes.push_back(d);
  if (o.pass)
    o.detail = std::to_string(maximal.size()) + " labeled maximal domains, " + std::to_string(classes.size()) +
               " up to relabeling";
  return o;
}

Outcome single_peaked_sizes() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto d = single_peaked_domain(n);
    o.check(d.size() == (std::size_t{1} << (n - 1)) && is_condorcet(d), "n=" + std::to_string(n));
  }
  return o;
}

Outcome median_graphs() {
  Outcome o;
  std::mt19937_64 rng(g_seed);
  int checked = 0, failed = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    const auto d = corpus_domain(rng, i);
    if (!is_condorcet(d)) continue;
    ++checked;
    const auto verdict = verify_median_graph(build_graph(d));
    if (verdict.is_median) continue;
    if (!failed++) {
      std::ostringstream text;
      text << "domain " << i << " {";
      for (const auto& u : d) text << ' ' << format_order(u, d.alternatives(), true);
      text << " }: " << verdict.diagnostic;
      first = text.str();
    }
  }
  o.check(failed == 0, std::to_string(failed) + " of " + std::to_string(checked) +
                           " Condorcet domains are not median, first " + first);
  if (o.pass) o.detail = std::to_string(checked) + " Condorcet domains";
  return o;
}

Outcome restriction_closure() {
  Outcome o;
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto f = fishburn_domain(n);
    o.check(is_copious(f) && is_peak_pit(f), "F_" + std::to_string(n) + " not copious peak-pit");
    for (AltId x = 0; x < n; ++x) {
      const auto r = remove_alternative(f, x);
      o.check(has_maximal_width(r) && is_semi_connected(r),
              "F_" + std::to_string(n) + " without " + std::to_string(x + 1));
    }
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--seed N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "Fishburn listings F_2, F_3, F_4", 1, fishburn_listings},
      {2, "formula equals enumeration, n = 2..10", 30, formula_vs_enumeration},
      {3, "product exceeds |F_2n| first at n = 20", 1, refutation},
      {4, "tensor(F_3, F_2, 321, 54) and its report", 5, example_one},
      {5, "(F_2 x F_2)(ab, cd) isomorphic to F_4", 1, proposition_six},
      {6, "inversion triples of F_4 and E", 5, inversion_triple_sets},
      {7, "fast check equals profile oracle", 60, oracle_equivalence},
      {8, "tensor preservation properties", 120, preservation},
      {9, "maximal domains on three alternatives", 5, small_maximal_domains},
      {10, "single-peaked sizes, n = 1..8", 10, single_peaked_sizes},
      {11, "Condorcet domain graphs are median", 60, median_graphs},
      {12, "Fishburn restrictions stay semi-connected", 30, restriction_closure},
  };

  std::cout << "seed " << g_seed << '\n';
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) outcome.check(false, "over time limit");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%gs", seconds, c.limit_seconds);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " (" << timing << ")";
    if (!outcome.detail.empty()) std::cout << " - " << outcome.detail;
    std::cout << '\n';
    failures += !outcome.pass;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures ? 1 : 0;
}
