#ifndef CONDORCET_CONDORCET_HPP
#define CONDORCET_CONDORCET_HPP

#include "analysis.hpp"
#include "composition.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "exact_int.hpp"
#include "fishburn.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "never.hpp"
#include "order.hpp"
#include "report.hpp"
#include "triples.hpp"

#endif  // CONDORCET_CONDORCET_HPP
