#pragma once

// Concrete matrix representations of the five series of paired semisimple
// algebra structures, together with their operators R, base-change matrices,
// and defining relations.
//
// Conventions:
//  * Each structure carries two block lists ("A side" and "B side"), each a
//    direct sum of full matrix blocks (scalars are 1x1 blocks).
//  * The representation space is coordinatized by the B side: block b of size
//    s at offset o contributes coordinates o + (i-1)*s + (j-1) for the (i,j)
//    matrix unit.  B-side generators act as left multiplication on their own
//    block; A-side generators are obtained by conjugating the analogous
//    left-multiplication action in v-coordinates through the base-change
//    matrix P (columns of P express the v basis in w coordinates).
//  * Generator names: "e1", "f3" for scalar (1x1) blocks, "e4[1,2]" /
//    "f2[3,4]" for matrix units of larger blocks, and "e[2,3]" for the
//    two-index central block of E6.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencil/dynkin.hpp"
#include "pencil/matrix.hpp"
#include "pencil/poly.hpp"
#include "pencil/ratfunc.hpp"
#include "pencil/sandwich.hpp"

namespace pencil {

struct DegenerateParameter : std::runtime_error {
  explicit DegenerateParameter(const std::string& what) : std::runtime_error(what) {}
};

// Canonical generator name of the (i,j) matrix unit of a block.
std::string unit_name(const std::string& label, int size, int i, int j);

// A formal linear combination of generator products (empty product = 1).
struct ExTerm {
  RatFunc coeff;
  std::vector<int> gens;  // generator indices, multiplied left to right
};
using Expr = std::vector<ExTerm>;

struct Relation {
  std::string id;  // human-readable equation, e.g. "f2*e1 = 0"
  Expr lhs;
  Expr rhs;
};

// One summand of R(x): coeff * (left product) x (right product).
struct RTerm {
  RatFunc coeff;
  std::vector<int> left;
  std::vector<int> right;
};

struct BlockInfo {
  std::string label;  // generator name prefix ("e1", "f2", "e")
  int size = 1;
  int offset = 0;  // coordinate offset (B side) or v-coordinate offset (A side)
  int gen0 = 0;    // index of its (1,1) generator
};

struct FamilyRep {
  FamilyId id = FamilyId::A;
  int k = 0;  // series parameter; 0 for the E types
  int n = 0;  // dimension of the representation space

  std::vector<BlockInfo> ablocks;
  std::vector<BlockInfo> bblocks;

  std::vector<std::string> gen_names;
  std::vector<int> gen_side;  // 0 = A side, 1 = B side
  std::vector<SMat<RatFunc>> gen_mats;
  std::map<std::string, int> gen_index;

  std::vector<Relation> relations;
  std::vector<RTerm> rterms;
  SparseOp<RatFunc> R{0};

  RatFunc mu;                    // central scalar: R(1) = mu * Id
  std::vector<Poly> degeneracy;  // parameter locus where the structure breaks
  Mat<RatFunc> P;                // v basis in w coordinates (n x n)

  int gen(const std::string& name) const;
  const SMat<RatFunc>& mat(const std::string& name) const { return gen_mats[gen(name)]; }
};

// Build the symbolic representation (entries rational in lambda, t).
FamilyRep build_family(FamilyId id, int k = 0);

// Substitute rational values for lambda and/or t everywhere.  Throws
// DegenerateParameter if a degeneracy polynomial vanishes at the point.
FamilyRep specialize(const FamilyRep& rep,
                     std::optional<Rational> lambda_value,
                     std::optional<Rational> t_value);

SMat<RatFunc> eval_expr(const FamilyRep& rep, const Expr& ex);

struct RelationResult {
  std::string id;
  bool ok = false;
};

// Exact symbolic verification of every stored relation.
std::vector<RelationResult> check_relations(const FamilyRep& rep);

// Verification after demoting all entries at a sample point (lambda, t).
std::vector<RelationResult> check_relations_at(const FamilyRep& rep,
                                               const Rational& lambda_value,
                                               const Rational& t_value);

// R(1); throws if the result is not a scalar multiple of the identity.
RatFunc central_scalar(const FamilyRep& rep);

// Reference annihilating polynomial of R, lowest degree first, with Var::K
// standing for the central scalar.  Empty for E7/E8, which come with no
// closed-form identity (their minimal polynomial is computed instead).
UPoly<RatFunc> reference_r_polynomial(FamilyId id);

// Reference closed form for (v+R)^{-1}, returned as a polynomial in R with
// RatFunc coefficients in (v, K); coefficient 0 is the multiple of the
// identity map.  Empty for families with no closed form (E7/E8).
UPoly<RatFunc> reference_resolvent(FamilyId id);

// Human-readable family name used in reports.
std::string family_display_name(FamilyId id, int k);

}  // namespace pencil
