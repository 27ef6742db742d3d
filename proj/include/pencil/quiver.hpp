#pragma once

// Quiver representation extracted from a family: one node per simple block on
// either side, one arrow per nonzero base-change block.  Each such block must
// factor as a Kronecker product kron(action, mult); `mult` couples the two
// multiplicity spaces and is the arrow's linear map, `action` couples the two
// matrix-unit actions.

#include <string>
#include <vector>

#include "pencil/dynkin.hpp"
#include "pencil/families.hpp"

namespace pencil {

struct QuiverNode {
    std::string label;
    int side = 0;  // 0 = A side, 1 = B side
    int size = 0;  // matrix block size
    int dim = 0;   // multiplicity-space dimension, from the idempotent rank
};

struct QuiverArrow {
    std::string from, to;  // A-side node -> B-side node
    Mat<RatFunc> action;   // size(to) x size(from)
    Mat<RatFunc> mult;     // size(to) x size(from), pivot normalized to 1
};

struct QuiverRep {
    std::vector<QuiverNode> nodes;
    std::vector<QuiverArrow> arrows;
    RatFunc det_p;  // determinant of the assembled base change

    const QuiverNode* find(const std::string& label) const;
};

// Reads the quiver representation off a family.  Node dimensions come from
// the ranks of the block idempotents; throws if a rank is not a multiple of
// the block size or a nonzero base-change block is not a simple tensor.
QuiverRep extract_quiver_rep(const FamilyRep& rep);

// Arrow support equals the diagram's edge set, node label for node label.
bool arrows_match_diagram(const QuiverRep& q, const Diagram& d);

// Every node's multiplicity dimension equals the diagram mark of its label.
bool node_dims_match_marks(const QuiverRep& q, const Diagram& d);

// n = sum over either side of size * dim.
bool dimension_sum_rule(const QuiverRep& q, int n);

}  // namespace pencil
