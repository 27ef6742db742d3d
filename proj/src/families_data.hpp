#pragma once

// Tabulated structure data for the two largest families.  Coefficients are
// polynomial fraction strings accepted by Poly::parse; generator names follow
// the conventions in families.hpp ("e2[1,3]", "f5", ...).

#include <cstddef>

namespace pencil::fdata {

// lhs product (two generators) = coeff * rhs product (zero, one or two
// generators; empty strings for absent factors / zero right-hand side).
struct CrossRel {
  const char* la;
  const char* lb;
  const char* cnum;
  const char* cden;
  const char* ra;
  const char* rb;
};

// coeff * (left product) x (right product); products are space-separated
// generator names, "" meaning the empty product.
struct RTermRow {
  const char* cnum;
  const char* cden;
  const char* left;
  const char* right;
};

// Base-change entry: column of the A-side generator `v`, row of the B-side
// generator `w`.
struct PEntry {
  const char* v;
  const char* w;
  const char* cnum;
  const char* cden;
};

struct BlockRow {
  const char* label;
  int size;
};

struct FamilyData {
  const BlockRow* ablocks;
  std::size_t nablocks;
  const BlockRow* bblocks;
  std::size_t nbblocks;
  const CrossRel* rels;
  std::size_t nrels;
  const RTermRow* rterms;
  std::size_t nrterms;
  const PEntry* pents;
  std::size_t npents;
  const char* mu_num;
  const char* mu_den;
};

extern const FamilyData kE7;
extern const FamilyData kE8;

}  // namespace pencil::fdata
