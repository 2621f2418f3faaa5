#include "clawmis/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace clawmis {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream stream(text);
  std::string raw;
  int number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c") continue;
    out.push_back(Line{number, std::move(tokens)});
  }
  return out;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("bad ") + what + ": '" + token + "'");
  }
}

Rational parse_weight(const Line& line, const std::string& token) {
  Rational w;
  try {
    w = parse_rational(token);
  } catch (const std::exception&) {
    throw ParseError(line.number, "bad weight: '" + token + "'");
  }
  if (w <= 0) throw ParseError(line.number, "weight must be positive: '" + token + "'");
  return w;
}

const Line& header_of(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError(1, "missing p-header");
  const Line& h = lines.front();
  if (h.tokens[0] != "p")
    throw ParseError(h.number, "expected p-header before '" + h.tokens[0] + "' line");
  if (h.tokens.size() < 2 || h.tokens[1] != kind)
    throw ParseError(h.number, "expected 'p " + kind + "' header");
  return h;
}

}  // namespace

ProblemInstance parse_graph(const std::string& text) {
  auto lines = significant_lines(text);
  const Line& header = header_of(lines, "mwis");
  if (header.tokens.size() != 5)
    throw ParseError(header.number, "expected 'p mwis <n> <m> <d>'");
  int n = parse_int(header, header.tokens[2], "vertex count");
  int m = parse_int(header, header.tokens[3], "edge count");
  int d = parse_int(header, header.tokens[4], "claw parameter");
  if (n < 0) throw ParseError(header.number, "negative vertex count");
  if (m < 0) throw ParseError(header.number, "negative edge count");
  if (d < 2) throw ParseError(header.number, "claw parameter must be >= 2");

  std::vector<Rational> weights(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> edge_line;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& type = line.tokens[0];
    if (type == "p") throw ParseError(line.number, "duplicate p-header");
    if (type == "v") {
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "expected 'v <id> <weight>'");
      int id = parse_int(line, line.tokens[1], "vertex id");
      if (id < 0 || id >= n)
        throw ParseError(line.number, "vertex id out of range: " + line.tokens[1]);
      if (seen[id])
        throw ParseError(line.number,
                         "duplicate weight for vertex " + std::to_string(id));
      seen[id] = 1;
      weights[id] = parse_weight(line, line.tokens[2]);
    } else if (type == "e") {
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "expected 'e <u> <v>'");
      int u = parse_int(line, line.tokens[1], "vertex id");
      int v = parse_int(line, line.tokens[2], "vertex id");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(line.number, "edge endpoint out of range");
      if (u == v) throw ParseError(line.number, "self-loop at vertex " + line.tokens[1]);
      std::pair<int, int> key = std::minmax(u, v);
      auto [it, inserted] = edge_line.emplace(key, line.number);
      if (!inserted)
        throw ParseError(line.number, "duplicate edge, first seen on line " +
                                          std::to_string(it->second));
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line.number, "unknown line type '" + type + "'");
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw ParseError(header.number, "no weight given for vertex " + std::to_string(v));
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(header.number,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return make_instance(n, d, std::move(weights), edges);
}

std::string serialize_graph(const ProblemInstance& inst,
                            const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& comment : comments) out << "c " << comment << "\n";
  out << "p mwis " << inst.n << " " << inst.edge_count << " " << inst.d << "\n";
  for (int v = 0; v < inst.n; ++v)
    out << "v " << v << " " << rational_to_string(inst.weight[v]) << "\n";
  for (auto [u, v] : edge_list(inst)) out << "e " << u << " " << v << "\n";
  return out.str();
}

SetSystem parse_set_system(const std::string& text) {
  auto lines = significant_lines(text);
  const Line& header = header_of(lines, "setpack");
  if (header.tokens.size() != 4)
    throw ParseError(header.number, "expected 'p setpack <num_sets> <k>'");
  int num_sets = parse_int(header, header.tokens[2], "set count");
  int k = parse_int(header, header.tokens[3], "set size cap");
  if (num_sets < 0) throw ParseError(header.number, "negative set count");
  if (k < 1) throw ParseError(header.number, "set size cap must be >= 1");

  std::vector<WeightedSet> sets;
  std::vector<std::string> names;
  std::map<std::string, int> id_of;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "p") throw ParseError(line.number, "duplicate p-header");
    if (line.tokens[0] != "s")
      throw ParseError(line.number, "unknown line type '" + line.tokens[0] + "'");
    if (line.tokens.size() < 3)
      throw ParseError(line.number, "expected 's <weight> <element>...'");
    WeightedSet s;
    s.weight = parse_weight(line, line.tokens[1]);
    if (static_cast<int>(line.tokens.size()) - 2 > k)
      throw ParseError(line.number,
                       "set has " + std::to_string(line.tokens.size() - 2) +
                           " elements, cap is " + std::to_string(k));
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const std::string& name = line.tokens[t];
      auto [it, inserted] = id_of.emplace(name, static_cast<int>(names.size()));
      if (inserted) names.push_back(name);
      s.elements.push_back(it->second);
    }
    std::sort(s.elements.begin(), s.elements.end());
    for (std::size_t t = 1; t < s.elements.size(); ++t)
      if (s.elements[t - 1] == s.elements[t])
        throw ParseError(line.number, "set repeats element '" +
                                          names[s.elements[t]] + "'");
    sets.push_back(std::move(s));
  }
  if (static_cast<int>(sets.size()) != num_sets)
    throw ParseError(header.number,
                     "header announces " + std::to_string(num_sets) +
                         " sets, found " + std::to_string(sets.size()));
  SetSystem sys = make_set_system(k, static_cast<int>(names.size()), std::move(sets));
  sys.element_names = std::move(names);
  return sys;
}

std::string serialize_set_system(const SetSystem& sys,
                                 const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& comment : comments) out << "c " << comment << "\n";
  out << "p setpack " << sys.sets.size() << " " << sys.k << "\n";
  for (const auto& s : sys.sets) {
    out << "s " << rational_to_string(s.weight);
    for (int e : s.elements) {
      if (e < static_cast<int>(sys.element_names.size()))
        out << " " << sys.element_names[e];
      else
        out << " " << e;
    }
    out << "\n";
  }
  return out.str();
}

std::string sniff_format(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "missing p-header");
  const Line& h = lines.front();
  if (h.tokens[0] == "p" && h.tokens.size() >= 2 &&
      (h.tokens[1] == "mwis" || h.tokens[1] == "setpack"))
    return h.tokens[1];
  throw ParseError(h.number, "expected a 'p mwis' or 'p setpack' header");
}

}  // namespace clawmis
