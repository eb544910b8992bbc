#ifndef JDM_SYNTH_HPP
#define JDM_SYNTH_HPP

#include <vector>

#include "jdm/jdm.hpp"

namespace jdm {

// Recipe for a synthetic JDM whose K x L cells realize every edge mean i/20:
// k_degrees get 4 vertices each, l_degrees get 5 each, so each cell holds
// D_k * D_l = 20 slots. Leftover endpoint demand is absorbed either by
// degree-1 attachments or by packing K x K / L x L cells first.
struct SynthSpec {
  std::vector<int> k_degrees = {20, 21, 22, 23, 24};  // multiplicity 4
  std::vector<int> l_degrees = {25, 26, 27, 28};      // multiplicity 5
  enum class Fill { Degree1, Dense };
  Fill fill = Fill::Degree1;
};

// Graphical JDM containing, for each i in 1..20, a cell with exactly i edges
// (edge mean i/20). Throws InfeasibleSpec if the spec cannot be completed.
JointDegreeMatrix generate_synthetic(const SynthSpec& spec);

}  // namespace jdm

#endif
