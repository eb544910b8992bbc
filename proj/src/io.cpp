#include "jdm/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "jdm/errors.hpp"

namespace jdm {

namespace {
// Drops everything from the first '#'; returns true when nothing remains.
bool blank_after_comment_strip(std::string& line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  for (char ch : line)
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}
}  // namespace

JointDegreeMatrix read_jdm(std::istream& in) {
  JointDegreeMatrix j;
  std::set<std::pair<int, int>> keys;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_after_comment_strip(line)) continue;
    std::istringstream ss(line);
    long long k, l, count;
    std::string extra;
    if (!(ss >> k >> l >> count) || (ss >> extra))
      throw ParseError(lineno, "expected 'k l count'");
    if (k < 1 || l < 1 || count < 1)
      throw ParseError(lineno, "degrees and counts must be positive");
    if (k > l) std::swap(k, l);
    if (!keys.insert({static_cast<int>(k), static_cast<int>(l)}).second)
      throw ParseError(lineno, "duplicate degree pair");
    j.add(static_cast<int>(k), static_cast<int>(l), count);
  }
  return j;
}

void write_jdm(std::ostream& out, const JointDegreeMatrix& j) {
  for (auto& [kl, c] : j.entries)
    out << kl.first << ' ' << kl.second << ' ' << c << '\n';
}

EdgeListData read_edge_list(std::istream& in, bool pseudo) {
  std::unordered_map<std::string, int> index;
  EdgeListData data;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_after_comment_strip(line)) continue;
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra))
      throw ParseError(lineno, "expected two vertex tokens");
    auto intern = [&](const std::string& tok) {
      auto [it, inserted] = index.try_emplace(tok, static_cast<int>(data.labels.size()));
      if (inserted) data.labels.push_back(tok);
      return it->second;
    };
    int u = intern(a), v = intern(b);
    if (u > v) std::swap(u, v);
    if (!pseudo) {
      if (u == v)
        throw NotSimple("self-loop at line " + std::to_string(lineno));
      if (!seen.insert({u, v}).second)
        throw NotSimple("duplicate edge at line " + std::to_string(lineno));
    }
    edges.emplace_back(u, v);
  }
  data.graph = Pseudograph::make(static_cast<int>(data.labels.size()), std::move(edges));
  return data;
}

namespace {
void write_edges(std::ostream& out, const std::vector<Edge>& edges,
                 const std::vector<std::string>* labels) {
  for (auto [u, v] : edges) {
    if (labels)
      out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
    else
      out << u << ' ' << v << '\n';
  }
}
}  // namespace

void write_edge_list(std::ostream& out, const Pseudograph& g,
                     const std::vector<std::string>* labels) {
  write_edges(out, g.edges, labels);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g,
                     const std::vector<std::string>* labels) {
  write_edges(out, g.edges, labels);
}

}  // namespace jdm
