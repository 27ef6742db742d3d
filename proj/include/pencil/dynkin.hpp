#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/matrix.hpp"

// Affine ADE diagrams underlying the five families: node = simple-algebra
// block (bipartitioned into the two sides), edge multiplicities = the integer
// multiplicity matrix of the bimodule.  Marks (the minimal positive kernel
// vector of the affine Cartan matrix) give the block sizes.

namespace pencil {

enum class FamilyId { A, Deven, Dodd, E6, E7, E8 };

std::string family_name(FamilyId f);
std::optional<FamilyId> family_from_name(const std::string& s);

struct Diagram {
    // Node labels follow each family's generator numbering ("e1", "f3", ...).
    std::vector<std::string> labels;
    std::vector<int> side;  // 0: first algebra's block, 1: second algebra's block
    std::vector<std::pair<int, int>> edges;

    int nodes() const { return static_cast<int>(labels.size()); }
    int find(const std::string& label) const;
};

// The diagram for a family; k is used by the A/D series (A: cycle of 2k nodes,
// D-even: 2k+1 nodes, D-odd: 2k nodes) and ignored by E6/E7/E8.
Diagram family_diagram(FamilyId f, int k);

// Minimal positive integer kernel vector of the affine Cartan matrix 2I − Adj;
// throws if the kernel is not 1-dimensional or not strictly positive.
std::vector<long> marks(const Diagram& d);

// Integer multiplicity matrix: rows = side-0 nodes, cols = side-1 nodes,
// entry = number of edges between them.  Row/col node orders returned too.
struct MultiplicityMatrix {
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<long>> a;
};
MultiplicityMatrix multiplicity_matrix(const Diagram& d);

// The two admissibility equations: sum_j a_ij n_j = 2 m_i and
// sum_i a_ij m_i = 2 n_j, with m/n the marks of the two sides.
bool adm_holds(const MultiplicityMatrix& mm, const std::vector<long>& m,
               const std::vector<long>& n);

// Indecomposability = connectivity of the bipartite graph of the matrix.
bool indecomposable(const MultiplicityMatrix& mm);

// Swapping the two algebras transposes the multiplicity matrix.
MultiplicityMatrix transpose(const MultiplicityMatrix& mm);
Diagram opposite(const Diagram& d);

// Marks split by side, in the row/col order of multiplicity_matrix,
// paired with the labels for report output.
struct SideMarks {
    std::vector<long> m, n;  // side 0, side 1
};
SideMarks side_marks(const Diagram& d);

}  // namespace pencil
