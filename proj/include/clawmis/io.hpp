#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clawmis/graph.hpp"
#include "clawmis/set_system.hpp"

namespace clawmis {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

// Graph text format:
//   c <comment>
//   p mwis <n> <m> <d>
//   v <id> <weight>     one per vertex; weight is "n", "n/d" or "x.y", > 0
//   e <u> <v>           m lines, undirected, no loops or duplicates
ProblemInstance parse_graph(const std::string& text);

std::string serialize_graph(const ProblemInstance& inst,
                            const std::vector<std::string>& comments = {});

// Set-system text format:
//   c <comment>
//   p setpack <num_sets> <k>
//   s <weight> <element>...   elements are arbitrary tokens, deduplicated
//                             per set, numbered by first appearance
SetSystem parse_set_system(const std::string& text);

std::string serialize_set_system(const SetSystem& sys,
                                 const std::vector<std::string>& comments = {});

// "mwis" or "setpack" from the p-header; throws ParseError when neither.
std::string sniff_format(const std::string& text);

}  // namespace clawmis
