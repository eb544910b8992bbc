#ifndef JDM_IO_HPP
#define JDM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/jdm.hpp"

namespace jdm {

// "k l count" lines, '#' comments; either degree order accepted on read,
// canonical k <= l on write; duplicate keys rejected.
JointDegreeMatrix read_jdm(std::istream& in);
void write_jdm(std::ostream& out, const JointDegreeMatrix& j);

// Whitespace-separated vertex token pairs, '#' comments. Tokens map to dense
// indices in first-seen order; `labels` returns the inverse map.
struct EdgeListData {
  Pseudograph graph;
  std::vector<std::string> labels;
};

// In simple mode (pseudo = false), self-pairs and duplicate pairs are
// rejected with NotSimple.
EdgeListData read_edge_list(std::istream& in, bool pseudo);

// Writes one "u v" line per edge, using labels when provided.
void write_edge_list(std::ostream& out, const Pseudograph& g,
                     const std::vector<std::string>* labels = nullptr);
void write_edge_list(std::ostream& out, const SimpleGraph& g,
                     const std::vector<std::string>* labels = nullptr);

}  // namespace jdm

#endif
