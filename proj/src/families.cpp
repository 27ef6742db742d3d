#include "pencil/families.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "pencil/sample.hpp"
#include "families_data.hpp"

namespace pencil {

std::string unit_name(const std::string& label, int size, int i, int j) {
  if (size == 1) return label;
  std::ostringstream os;
  os << label << '[' << i << ',' << j << ']';
  return os.str();
}

namespace {

using RF = RatFunc;
using SM = SMat<RF>;

RF rf(long v) { return RatFunc(Poly::constant(rat(v))); }
RF lam() { return RatFunc::variable(Var::Lambda); }
RF tvar() { return RatFunc::variable(Var::T); }

Poly plam() { return Poly::variable(Var::Lambda); }
Poly pt() { return Poly::variable(Var::T); }
Poly pone() { return Poly::constant(rat(1)); }

// ----------------------------------------------------------------------------
// Gauss-Jordan inverse with determinant tracking.  Pivots are chosen by
// minimal row fill to keep symbolic entries small; the base-change matrices
// are near block-triangular, so elimination stays sparse.

struct InverseResult {
  Mat<RF> inv;
  RF det;
  bool ok = false;
};

InverseResult invert_with_det(const Mat<RF>& m) {
  const int n = m.rows();
  InverseResult res{Mat<RF>::identity(n), rf(1), false};
  Mat<RF> a = m;
  Mat<RF>& inv = res.inv;
  std::vector<int> perm(n);  // perm[step] = pivot row chosen at that step
  std::vector<bool> used(n, false);

  auto row_nnz = [&](int r) {
    int c = 0;
    for (int j = 0; j < n; ++j)
      if (!a(r, j).is_zero()) ++c;
    return c;
  };

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    int best = n + 1;
    for (int r = 0; r < n; ++r) {
      if (used[r] || a(r, col).is_zero()) continue;
      int c = row_nnz(r);
      if (c < best) {
        best = c;
        pivot = r;
      }
    }
    if (pivot < 0) return res;  // singular
    used[pivot] = true;
    perm[col] = pivot;
    RF pv = a(pivot, col);
    res.det = res.det * pv;
    RF pvinv = pv.inverse();
    for (int j = 0; j < n; ++j) {
      if (!a(pivot, j).is_zero()) a(pivot, j) = a(pivot, j) * pvinv;
      if (!inv(pivot, j).is_zero()) inv(pivot, j) = inv(pivot, j) * pvinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == pivot) continue;
      RF f = a(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!a(pivot, j).is_zero()) a(r, j) = a(r, j) - f * a(pivot, j);
        if (!inv(pivot, j).is_zero()) inv(r, j) = inv(r, j) - f * inv(pivot, j);
      }
    }
  }
  // Rows of `inv` are ordered by pivot choice; permute so row i corresponds to
  // eliminating into e_i, and fold the permutation sign into the determinant.
  Mat<RF> out(n, n);
  std::vector<int> sigma(n);
  for (int col = 0; col < n; ++col) sigma[col] = perm[col];
  // a has been reduced to a permutation of the identity: row perm[col] has a 1
  // in column col.  The inverse matrix must send row perm[col] -> row col.
  for (int col = 0; col < n; ++col)
    for (int j = 0; j < n; ++j) out(col, j) = inv(perm[col], j);
  // Determinant sign: sign of permutation mapping col -> perm[col].
  std::vector<bool> seen(n, false);
  int swaps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = sigma[cur];
      ++len;
    }
    swaps += len - 1;
  }
  if (swaps % 2 == 1) res.det = RF() - res.det;
  res.inv = std::move(out);
  res.ok = true;
  return res;
}

// ----------------------------------------------------------------------------
// Builder

struct Builder {
  FamilyRep rep;
  std::vector<int> gen_coord;  // flat coordinate of each generator in its side

  explicit Builder(FamilyId id, int k) {
    rep.id = id;
    rep.k = k;
  }

  int add_block(int side, const std::string& label, int size) {
    auto& blocks = side == 0 ? rep.ablocks : rep.bblocks;
    BlockInfo b;
    b.label = label;
    b.size = size;
    b.offset = blocks.empty() ? 0 : blocks.back().offset + blocks.back().size * blocks.back().size;
    b.gen0 = static_cast<int>(rep.gen_names.size());
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j) {
        std::string name = unit_name(label, size, i, j);
        rep.gen_index[name] = static_cast<int>(rep.gen_names.size());
        rep.gen_names.push_back(name);
        rep.gen_side.push_back(side);
        gen_coord.push_back(b.offset + (i - 1) * size + (j - 1));
      }
    blocks.push_back(b);
    return static_cast<int>(blocks.size()) - 1;
  }

  int side_dim(int side) const {
    const auto& blocks = side == 0 ? rep.ablocks : rep.bblocks;
    if (blocks.empty()) return 0;
    const auto& b = blocks.back();
    return b.offset + b.size * b.size;
  }

  int g(const std::string& name) const {
    auto it = rep.gen_index.find(name);
    if (it == rep.gen_index.end()) throw std::logic_error("unknown generator: " + name);
    return it->second;
  }

  // Left-multiplication matrix of the (i,j) unit of a block on that block's
  // own coordinates (acting as zero elsewhere).
  SM left_unit(const BlockInfo& b, int i, int j) const {
    SM m(rep.n, rep.n);
    for (int c = 0; c < b.size; ++c)
      m.add_at(b.offset + (i - 1) * b.size + c, b.offset + (j - 1) * b.size + c,
               FieldOps<RF>::one());
    return m;
  }

  // Base-change entries: column v (an A-side generator name), row w (a B-side
  // generator name).
  struct PEnt {
    std::string v, w;
    RF c;
  };
  std::vector<PEnt> pents;
  void P(const std::string& v, const std::string& w, const RF& c) { pents.push_back({v, w, c}); }

  // Relations -----------------------------------------------------------

  Expr term(const RF& c, std::initializer_list<const char*> names) const {
    ExTerm t;
    t.coeff = c;
    for (auto* nm : names) t.gens.push_back(g(nm));
    return {t};
  }
  Expr prod(std::initializer_list<const char*> names) const { return term(rf(1), names); }

  static Expr plus(Expr a, const Expr& b) {
    for (const auto& t : b) a.push_back(t);
    return a;
  }

  void rel(Expr lhs, Expr rhs) {
    Relation r;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.id = expr_to_string(r.lhs) + " = " + expr_to_string(r.rhs);
    rep.relations.push_back(std::move(r));
  }
  void rel_zero(Expr lhs) { rel(std::move(lhs), {}); }

  std::string expr_to_string(const Expr& ex) const {
    if (ex.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : ex) {
      RF c = t.coeff;
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) {
        cs = cs.substr(1);
        os << (first ? "-" : " - ");
      } else if (!first) {
        os << " + ";
      }
      first = false;
      bool trivial = cs == "1";
      if (!trivial || t.gens.empty()) {
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        os << cs;
        if (!t.gens.empty()) os << "*";
      }
      for (size_t i = 0; i < t.gens.size(); ++i) {
        if (i) os << "*";
        os << rep.gen_names[t.gens[i]];
      }
      if (t.gens.empty() && trivial) os << "1";
    }
    return os.str();
  }

  // R terms --------------------------------------------------------------

  void rterm(const RF& c, std::vector<std::string> left, std::vector<std::string> right) {
    RTerm t;
    t.coeff = c;
    for (auto& nm : left) t.left.push_back(g(nm));
    for (auto& nm : right) t.right.push_back(g(nm));
    rep.rterms.push_back(std::move(t));
  }

  // Assembly --------------------------------------------------------------

  void add_matrix_unit_relations() {
    for (int side = 0; side < 2; ++side) {
      const auto& blocks = side == 0 ? rep.ablocks : rep.bblocks;
      for (const auto& bp : blocks)
        for (const auto& bq : blocks)
          for (int i = 1; i <= bp.size; ++i)
            for (int j = 1; j <= bp.size; ++j)
              for (int k2 = 1; k2 <= bq.size; ++k2)
                for (int l = 1; l <= bq.size; ++l) {
                  std::string a = unit_name(bp.label, bp.size, i, j);
                  std::string b = unit_name(bq.label, bq.size, k2, l);
                  Expr lhs = prod({a.c_str(), b.c_str()});
                  Expr rhs;
                  if (&bp == &bq && j == k2)
                    rhs = prod({unit_name(bp.label, bp.size, i, l).c_str()});
                  rel(std::move(lhs), std::move(rhs));
                }
    }
    for (int side = 0; side < 2; ++side) {
      const auto& blocks = side == 0 ? rep.ablocks : rep.bblocks;
      Expr sum;
      for (const auto& b : blocks)
        for (int i = 1; i <= b.size; ++i)
          sum = plus(sum, prod({unit_name(b.label, b.size, i, i).c_str()}));
      Relation r;
      r.lhs = std::move(sum);
      r.rhs = {ExTerm{rf(1), {}}};
      r.id = std::string("partition of unity (") + (side == 0 ? "A" : "B") + " side)";
      rep.relations.push_back(std::move(r));
    }
  }

  void finalize() {
    rep.n = side_dim(1);
    if (side_dim(0) != rep.n)
      throw std::logic_error("block dimension mismatch between the two sides");
    const int n = rep.n;

    // B-side generators act by left multiplication on their own block.
    rep.gen_mats.assign(rep.gen_names.size(), SM(n, n));
    for (const auto& b : rep.bblocks)
      for (int i = 1; i <= b.size; ++i)
        for (int j = 1; j <= b.size; ++j)
          rep.gen_mats[b.gen0 + (i - 1) * b.size + (j - 1)] = left_unit(b, i, j);

    // Base change.
    rep.P = Mat<RF>(n, n);
    for (const auto& pe : pents) {
      int vi = g(pe.v);
      int wi = g(pe.w);
      if (rep.gen_side[vi] != 0 || rep.gen_side[wi] != 1)
        throw std::logic_error("base-change entry with wrong sides: " + pe.v + ", " + pe.w);
      rep.P(gen_coord[wi], gen_coord[vi]) = rep.P(gen_coord[wi], gen_coord[vi]) + pe.c;
    }
    auto ir = invert_with_det(rep.P);
    if (!ir.ok) throw std::logic_error("base-change matrix is singular");
    SM Ps = SM::from_dense(rep.P);
    SM Qs = SM::from_dense(ir.inv);

    // A-side generators: conjugate left multiplication in v-coordinates.
    for (const auto& b : rep.ablocks)
      for (int i = 1; i <= b.size; ++i)
        for (int j = 1; j <= b.size; ++j) {
          SM em = Ps * left_unit(b, i, j) * Qs;
          rep.gen_mats[b.gen0 + (i - 1) * b.size + (j - 1)] = std::move(em);
        }

    // Degeneracy locus: numerator/denominator of the central scalar plus the
    // primitive part of det(P).
    auto add_degeneracy = [&](const Poly& p) {
      if (p.is_zero()) throw std::logic_error("degenerate structure at all parameters");
      Poly q = p.primitive_part();
      if (q.is_constant()) return;
      for (const auto& d : rep.degeneracy)
        if (d == q) return;
      rep.degeneracy.push_back(q);
    };
    add_degeneracy(ir.det.num());
    add_degeneracy(rep.mu.num());
    add_degeneracy(rep.mu.den());

    // Assemble R.
    rep.R = SparseOp<RF>(n);
    for (const auto& t : rep.rterms) {
      SM L = SM::identity(n);
      for (int gi : t.left) L = L * rep.gen_mats[gi];
      SM Rm = SM::identity(n);
      for (int gi : t.right) Rm = Rm * rep.gen_mats[gi];
      rep.R.add_pair(L, Rm, t.coeff);
    }
  }
};

// ----------------------------------------------------------------------------
// Family A~: k scalar blocks on each side, cyclic index.

FamilyRep build_a(int k) {
  if (k < 2) throw std::invalid_argument("family A requires k >= 2");
  Builder b(FamilyId::A, k);
  auto en = [](int i) { return "e" + std::to_string(i); };
  auto fn = [](int i) { return "f" + std::to_string(i); };
  for (int i = 1; i <= k; ++i) b.add_block(0, en(i), 1);
  for (int i = 1; i <= k; ++i) b.add_block(1, fn(i), 1);

  // f_i e_j = 0 unless j - i = 0 or 1 (mod k).
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      int d = ((j - i) % k + k) % k;
      if (d != 0 && d != 1) b.rel_zero(b.prod({fn(i).c_str(), en(j).c_str()}));
    }

  // R(x) = sum_{1 <= i <= j <= k-1} e_i x f_j + f_k e_k x.
  for (int i = 1; i <= k - 1; ++i)
    for (int j = i; j <= k - 1; ++j) b.rterm(rf(1), {en(i)}, {fn(j)});
  b.rterm(rf(1), {fn(k), en(k)}, {});

  // v_i = w_i - t w_{i-1} (indices mod k, w_0 = w_k).
  for (int i = 1; i <= k; ++i) {
    b.P(en(i), fn(i), rf(1));
    int prev = i == 1 ? k : i - 1;
    b.P(en(i), fn(prev), RF() - tvar());
  }

  // mu = 1 / (1 - t^k).
  b.rep.mu = RatFunc(pone(), pone() - pt().pow(k));
  b.add_matrix_unit_relations();
  b.finalize();
  return b.rep;
}

// ----------------------------------------------------------------------------
// Family D~ even (dimension 4k-4): legs e1,e2 / e_{2k},e_{2k+1}, chain of
// 2x2 blocks between them.

FamilyRep build_d_even(int k) {
  if (k < 2) throw std::invalid_argument("family D_even requires k >= 2");
  Builder b(FamilyId::Deven, k);
  auto en = [](int i) { return "e" + std::to_string(i); };
  auto u = [&](int blk, int i, int j) { return en(blk) + "[" + std::to_string(i) + "," + std::to_string(j) + "]"; };

  b.add_block(0, en(1), 1);
  b.add_block(0, en(2), 1);
  for (int a = 2; a <= k - 1; ++a) b.add_block(0, en(2 * a), 2);
  b.add_block(0, en(2 * k), 1);
  b.add_block(0, en(2 * k + 1), 1);
  for (int a = 2; a <= k; ++a) b.add_block(1, en(2 * a - 1), 2);

  const RF l = lam();

  // Cross-block relations.
  for (int a = 3; a < k; ++a)  // middle B blocks annihilate all four legs
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int beta : {1, 2, 2 * k, 2 * k + 1})
          b.rel_zero(b.prod({u(2 * a - 1, i, j).c_str(), en(beta).c_str()}));
  for (int a = 2; a <= k; ++a)
    for (int beta = 2; beta <= k - 1; ++beta) {
      if (a == beta || a == beta + 1) continue;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int i2 = 1; i2 <= 2; ++i2)
            for (int j2 = 1; j2 <= 2; ++j2)
              b.rel_zero(b.prod({u(2 * a - 1, i, j).c_str(), u(2 * beta, i2, j2).c_str()}));
    }
  b.rel_zero(b.prod({u(3, 1, 2).c_str(), en(1).c_str()}));
  b.rel_zero(b.prod({u(3, 2, 2).c_str(), en(1).c_str()}));
  b.rel_zero(b.prod({u(3, 1, 1).c_str(), en(2).c_str()}));
  b.rel_zero(b.prod({u(3, 2, 1).c_str(), en(2).c_str()}));
  for (int a = 2; a <= k - 1; ++a)  // against the 2a block: j must match i'
    for (int nb : {2 * a - 1, 2 * a + 1})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int i2 = 1; i2 <= 2; ++i2)
            for (int j2 = 1; j2 <= 2; ++j2)
              if (j != i2)
                b.rel_zero(b.prod({u(nb, i, j).c_str(), u(2 * a, i2, j2).c_str()}));
  for (int a = 2; a <= k - 1; ++a)  // column equality across the matched index
    for (int nb : {2 * a - 1, 2 * a + 1})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          b.rel(b.prod({u(nb, i, 1).c_str(), u(2 * a, 1, j).c_str()}),
                b.prod({u(nb, i, 2).c_str(), u(2 * a, 2, j).c_str()}));
  b.rel(b.prod({u(2 * k - 1, 1, 1).c_str(), en(2 * k).c_str()}),
        b.prod({u(2 * k - 1, 1, 2).c_str(), en(2 * k).c_str()}));
  b.rel(b.prod({u(2 * k - 1, 2, 1).c_str(), en(2 * k).c_str()}),
        b.prod({u(2 * k - 1, 2, 2).c_str(), en(2 * k).c_str()}));
  b.rel(b.prod({u(2 * k - 1, 1, 2).c_str(), en(2 * k + 1).c_str()}),
        b.term(l, {u(2 * k - 1, 1, 1).c_str(), en(2 * k + 1).c_str()}));
  b.rel(b.prod({u(2 * k - 1, 2, 2).c_str(), en(2 * k + 1).c_str()}),
        b.term(l, {u(2 * k - 1, 2, 1).c_str(), en(2 * k + 1).c_str()}));

  // R operator.
  for (int a = 1; a <= k - 1; ++a) {
    b.rterm(l, {en(1)}, {u(2 * a + 1, 2, 2)});
    b.rterm(RF() - l, {en(1)}, {u(2 * a + 1, 2, 1)});
    b.rterm(rf(1), {en(2)}, {u(2 * a + 1, 1, 1)});
    b.rterm(rf(-1), {en(2)}, {u(2 * a + 1, 1, 2)});
    b.rterm(rf(1), {en(2 * k)}, {u(2 * a + 1, 1, 1)});
    b.rterm(l, {en(2 * k)}, {u(2 * a + 1, 2, 2)});
    b.rterm(l, {en(2 * k + 1)}, {u(2 * a + 1, 1, 1)});
    b.rterm(l, {en(2 * k + 1)}, {u(2 * a + 1, 2, 2)});
  }
  for (int a = 2; a <= k - 1; ++a)
    for (int be = 2; be <= k; ++be) {
      b.rterm(l, {u(2 * a, 1, 1)}, {u(2 * be - 1, 2, 2)});
      b.rterm(rf(1), {u(2 * a, 2, 2)}, {u(2 * be - 1, 1, 1)});
    }
  for (int a = 2; a <= k; ++a)
    for (int be = a + 1; be <= k; ++be) {
      b.rterm(RF() - l, {u(2 * a, 1, 1)}, {u(2 * be - 1, 2, 1)});
      b.rterm(rf(-1), {u(2 * a, 2, 2)}, {u(2 * be - 1, 1, 2)});
    }
  for (int be = 2; be <= k - 1; ++be)
    for (int a = be; a <= k - 1; ++a) {
      b.rterm(l, {u(2 * a, 2, 1)}, {u(2 * be - 1, 2, 2)});
      b.rterm(rf(1), {u(2 * a, 1, 2)}, {u(2 * be - 1, 1, 1)});
    }
  b.rterm(rf(1) - l, {u(2 * k - 1, 2, 2), en(2 * k + 1)}, {});

  // Base change.
  b.P(en(1), u(3, 1, 1), rf(1));
  b.P(en(2), u(3, 2, 2), rf(1));
  for (int a = 2; a <= k - 1; ++a)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        b.P(u(2 * a, i, j), u(2 * a + 1, i, j), rf(1));
        b.P(u(2 * a, i, j), u(2 * a - 1, i, j), rf(-1));
      }
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) b.P(en(2 * k), u(2 * k - 1, i, j), rf(1));
  b.P(en(2 * k + 1), u(2 * k - 1, 1, 1), rf(1));
  b.P(en(2 * k + 1), u(2 * k - 1, 2, 1), l);
  b.P(en(2 * k + 1), u(2 * k - 1, 1, 2), tvar());
  b.P(en(2 * k + 1), u(2 * k - 1, 2, 2), l * tvar());

  // mu = lambda (t - 1) / (t - lambda).
  b.rep.mu = RatFunc(plam() * (pt() - pone()), pt() - plam());
  b.add_matrix_unit_relations();
  b.finalize();
  return b.rep;
}

// ----------------------------------------------------------------------------
// Family D~ odd (dimension 4k-6): legs e1,e2 on one end, scalar legs
// e_{2k-1},e_{2k} on the other, with the chain ending in a 2x2 A-block.

FamilyRep build_d_odd(int k) {
  if (k < 3) throw std::invalid_argument("family D_odd requires k >= 3");
  Builder b(FamilyId::Dodd, k);
  auto en = [](int i) { return "e" + std::to_string(i); };
  auto u = [&](int blk, int i, int j) { return en(blk) + "[" + std::to_string(i) + "," + std::to_string(j) + "]"; };

  b.add_block(0, en(1), 1);
  b.add_block(0, en(2), 1);
  for (int a = 2; a <= k - 1; ++a) b.add_block(0, en(2 * a), 2);
  for (int a = 2; a <= k - 1; ++a) b.add_block(1, en(2 * a - 1), 2);
  b.add_block(1, en(2 * k - 1), 1);
  b.add_block(1, en(2 * k), 1);

  const RF l = lam();

  // Cross-block relations.
  for (int al : {2 * k - 1, 2 * k})
    for (int be : {1, 2}) b.rel_zero(b.prod({en(al).c_str(), en(be).c_str()}));
  for (int a = 3; a <= k - 1; ++a)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int be : {1, 2})
          b.rel_zero(b.prod({u(2 * a - 1, i, j).c_str(), en(be).c_str()}));
  for (int a = 2; a <= k - 1; ++a)
    for (int be = 2; be <= k - 1; ++be) {
      if (a == be || a == be + 1) continue;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int i2 = 1; i2 <= 2; ++i2)
            for (int j2 = 1; j2 <= 2; ++j2)
              b.rel_zero(b.prod({u(2 * a - 1, i, j).c_str(), u(2 * be, i2, j2).c_str()}));
    }
  for (int be = 2; be <= k - 2; ++be)
    for (int al : {2 * k - 1, 2 * k})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          b.rel_zero(b.prod({en(al).c_str(), u(2 * be, i, j).c_str()}));
  b.rel_zero(b.prod({u(3, 1, 2).c_str(), en(1).c_str()}));
  b.rel_zero(b.prod({u(3, 2, 2).c_str(), en(1).c_str()}));
  b.rel_zero(b.prod({u(3, 1, 1).c_str(), en(2).c_str()}));
  b.rel_zero(b.prod({u(3, 2, 1).c_str(), en(2).c_str()}));
  for (int a = 2; a <= k - 1; ++a)
    for (int nb : {2 * a - 1, 2 * a + 1}) {
      if (nb > 2 * k - 3) continue;  // scalar legs handled separately below
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int i2 = 1; i2 <= 2; ++i2)
            for (int j2 = 1; j2 <= 2; ++j2)
              if (j != i2)
                b.rel_zero(b.prod({u(nb, i, j).c_str(), u(2 * a, i2, j2).c_str()}));
    }
  for (int a = 2; a <= k - 1; ++a)
    for (int nb : {2 * a - 1, 2 * a + 1}) {
      if (nb > 2 * k - 3) continue;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          b.rel(b.prod({u(nb, i, 1).c_str(), u(2 * a, 1, j).c_str()}),
                b.prod({u(nb, i, 2).c_str(), u(2 * a, 2, j).c_str()}));
    }
  b.rel(b.prod({en(2 * k - 1).c_str(), u(2 * k - 2, 1, 1).c_str()}),
        b.prod({en(2 * k - 1).c_str(), u(2 * k - 2, 2, 1).c_str()}));
  b.rel(b.prod({en(2 * k - 1).c_str(), u(2 * k - 2, 1, 2).c_str()}),
        b.prod({en(2 * k - 1).c_str(), u(2 * k - 2, 2, 2).c_str()}));
  b.rel(b.prod({en(2 * k).c_str(), u(2 * k - 2, 2, 1).c_str()}),
        b.term(l, {en(2 * k).c_str(), u(2 * k - 2, 1, 1).c_str()}));
  b.rel(b.prod({en(2 * k).c_str(), u(2 * k - 2, 2, 2).c_str()}),
        b.term(l, {en(2 * k).c_str(), u(2 * k - 2, 1, 2).c_str()}));

  // R operator.
  b.rterm(l - rf(1), {en(1)}, {en(2 * k - 1)});
  for (int a = 2; a <= k - 1; ++a) {
    b.rterm(l - rf(1), {en(1)}, {u(2 * a - 1, 2, 2)});
    b.rterm(l - rf(1), {u(2 * a, 1, 1)}, {en(2 * k - 1)});
    b.rterm(RF() - l, {en(2)}, {u(2 * a - 1, 1, 2)});
    b.rterm(rf(-1), {en(1)}, {u(2 * a - 1, 2, 1)});
    b.rterm(l, {en(2)}, {u(2 * a - 1, 2, 2)});
    b.rterm(l, {en(1)}, {u(2 * a - 1, 1, 1)});
  }
  for (int a = 2; a <= k - 1; ++a)
    for (int be = 2; be <= k - 1; ++be) {
      b.rterm(l - rf(1), {u(2 * a, 1, 1)}, {u(2 * be - 1, 2, 2)});
      b.rterm(l, {u(2 * a, 1, 1)}, {u(2 * be - 1, 1, 1)});
      b.rterm(l, {u(2 * a, 2, 2)}, {u(2 * be - 1, 2, 2)});
    }
  for (int be = 2; be <= k - 1; ++be)
    for (int a = be; a <= k - 1; ++a) {
      b.rterm(l, {u(2 * a, 1, 2)}, {u(2 * be - 1, 1, 1)});
      b.rterm(rf(1), {u(2 * a, 2, 1)}, {u(2 * be - 1, 2, 2)});
    }
  for (int a = 2; a <= k - 1; ++a)
    for (int be = a + 1; be <= k - 1; ++be) {
      b.rterm(RF() - l, {u(2 * a, 2, 2)}, {u(2 * be - 1, 1, 2)});
      b.rterm(rf(-1), {u(2 * a, 1, 1)}, {u(2 * be - 1, 2, 1)});
    }
  b.rterm(l - rf(1), {}, {en(2 * k), u(2 * k - 2, 2, 2)});

  // Base change.
  b.P(en(1), u(3, 1, 1), rf(1));
  b.P(en(2), u(3, 2, 2), rf(1));
  for (int a = 2; a + 1 <= k - 1; ++a)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        b.P(u(2 * a, i, j), u(2 * a + 1, i, j), rf(1));
        b.P(u(2 * a, i, j), u(2 * a - 1, i, j), rf(-1));
      }
  const RF t = tvar();
  b.P(u(2 * k - 2, 1, 1), en(2 * k - 1), rf(1));
  b.P(u(2 * k - 2, 1, 1), en(2 * k), rf(1));
  b.P(u(2 * k - 2, 1, 1), u(2 * k - 3, 1, 1), rf(-1));
  b.P(u(2 * k - 2, 2, 2), en(2 * k - 1), rf(1));
  b.P(u(2 * k - 2, 2, 2), en(2 * k), l * t);
  b.P(u(2 * k - 2, 2, 2), u(2 * k - 3, 2, 2), rf(-1));
  b.P(u(2 * k - 2, 1, 2), en(2 * k - 1), rf(1));
  b.P(u(2 * k - 2, 1, 2), en(2 * k), t);
  b.P(u(2 * k - 2, 1, 2), u(2 * k - 3, 1, 2), rf(-1));
  b.P(u(2 * k - 2, 2, 1), en(2 * k - 1), rf(1));
  b.P(u(2 * k - 2, 2, 1), en(2 * k), l);
  b.P(u(2 * k - 2, 2, 1), u(2 * k - 3, 2, 1), rf(-1));

  // mu = t lambda (1 - lambda) / (1 - t lambda).
  b.rep.mu = RatFunc(pt() * plam() * (pone() - plam()), pone() - pt() * plam());
  b.add_matrix_unit_relations();
  b.finalize();
  return b.rep;
}

// ----------------------------------------------------------------------------
// Family E6: three scalar A-blocks and a central 3x3 block against three 2x2
// B-blocks, everything cyclic mod 3.

FamilyRep build_e6() {
  Builder b(FamilyId::E6, 0);
  auto m3 = [](int a) { return ((a - 1) % 3 + 3) % 3 + 1; };
  auto en = [&](int a) { return "e" + std::to_string(m3(a)); };
  auto ec = [&](int be, int ga) {
    return "e[" + std::to_string(m3(be)) + "," + std::to_string(m3(ga)) + "]";
  };
  auto fn = [&](int a, int i, int j) {
    return "f" + std::to_string(m3(a)) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };

  b.add_block(0, "e1", 1);
  b.add_block(0, "e2", 1);
  b.add_block(0, "e3", 1);
  b.add_block(0, "e", 3);
  b.add_block(1, "f1", 2);
  b.add_block(1, "f2", 2);
  b.add_block(1, "f3", 2);

  const RF l = lam();
  const RF t = tvar();

  // Cross-block relations.
  for (int a = 1; a <= 3; ++a)
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j)
        for (int be = 1; be <= 3; ++be) {
          if (be != a) b.rel_zero(b.prod({fn(a, i, j).c_str(), en(be).c_str()}));
        }
      b.rel(b.prod({fn(a, i, 2).c_str(), en(a).c_str()}),
            b.term(l, {fn(a, i, 1).c_str(), en(a).c_str()}));
      for (int be = 1; be <= 3; ++be) {
        for (int j = 1; j <= 2; ++j)
          b.rel_zero(b.prod({fn(a, i, j).c_str(), ec(a + 1, be).c_str()}));
        b.rel_zero(b.prod({fn(a, i, 1).c_str(), ec(a, be).c_str()}));
        b.rel_zero(b.prod({fn(a + 1, i, 2).c_str(), ec(a, be).c_str()}));
        b.rel(b.prod({fn(a, i, 2).c_str(), ec(a, be).c_str()}),
              b.prod({fn(a, i, 1).c_str(), ec(a - 1, be).c_str()}));
      }
    }

  // R operator.
  const RF c3 = l * l * l - rf(1);
  b.rterm(c3, {en(1)}, {fn(1, 2, 2)});
  b.rterm(c3, {en(1)}, {fn(2, 1, 1)});
  b.rterm(c3, {en(1)}, {fn(2, 2, 2)});
  b.rterm(c3, {en(1)}, {fn(3, 1, 1)});
  b.rterm(c3, {en(2)}, {fn(2, 2, 2)});
  b.rterm(c3, {en(2)}, {fn(3, 1, 1)});
  b.rterm(c3, {ec(1, 1)}, {fn(2, 2, 2)});
  b.rterm(c3, {ec(1, 1)}, {fn(3, 1, 1)});
  b.rterm(c3, {ec(3, 3)}, {fn(1, 2, 2)});
  b.rterm(c3, {ec(3, 3)}, {fn(2, 1, 1)});
  b.rterm(c3, {ec(3, 3)}, {fn(2, 2, 2)});
  b.rterm(c3, {ec(3, 3)}, {fn(3, 1, 1)});
  const RF l3 = l * l * l;
  b.rterm(l3, {ec(1, 1)}, {fn(1, 2, 2)});
  b.rterm(l3, {ec(1, 1)}, {fn(2, 1, 1)});
  b.rterm(l3, {ec(2, 2)}, {fn(2, 2, 2)});
  b.rterm(l3, {ec(2, 2)}, {fn(3, 1, 1)});
  b.rterm(l3, {ec(3, 3)}, {fn(1, 1, 1)});
  b.rterm(l3, {ec(3, 3)}, {fn(3, 2, 2)});
  const RF l2 = l * l;
  b.rterm(l2, {ec(1, 1)}, {fn(1, 1, 2)});
  b.rterm(l2, {ec(2, 2)}, {fn(2, 1, 2)});
  b.rterm(l2, {ec(3, 3)}, {fn(3, 1, 2)});
  b.rterm(RF() - l2, {ec(1, 2)}, {fn(1, 2, 2)});
  b.rterm(RF() - l2, {ec(1, 3)}, {fn(2, 2, 1)});
  b.rterm(RF() - l2, {ec(2, 1)}, {fn(3, 2, 1)});
  b.rterm(RF() - l2, {ec(2, 3)}, {fn(2, 2, 2)});
  b.rterm(RF() - l2, {ec(3, 1)}, {fn(3, 2, 2)});
  b.rterm(RF() - l2, {ec(3, 2)}, {fn(1, 2, 1)});
  b.rterm(l, {ec(1, 1)}, {fn(2, 2, 1)});
  b.rterm(l, {ec(2, 2)}, {fn(3, 2, 1)});
  b.rterm(l, {ec(3, 3)}, {fn(1, 2, 1)});
  b.rterm(RF() - l, {ec(1, 2)}, {fn(1, 1, 2)});
  b.rterm(RF() - l, {ec(1, 3)}, {fn(2, 1, 1)});
  b.rterm(RF() - l, {ec(2, 1)}, {fn(3, 1, 1)});
  b.rterm(RF() - l, {ec(2, 3)}, {fn(2, 1, 2)});
  b.rterm(RF() - l, {ec(3, 1)}, {fn(3, 1, 2)});
  b.rterm(RF() - l, {ec(3, 2)}, {fn(1, 1, 1)});
  b.rterm(c3, {fn(3, 2, 2), en(3)}, {});

  // Base change.
  for (int a = 1; a <= 3; ++a) {
    b.P(en(a), fn(a, 1, 1), rf(1));
    b.P(en(a), fn(a, 2, 1), l);
    b.P(en(a), fn(a, 1, 2), t);
    b.P(en(a), fn(a, 2, 2), l * t);
    b.P(ec(a, a), fn(a, 2, 2), rf(1));
    b.P(ec(a + 1, a), fn(a + 2, 1, 1), rf(1));
    b.P(ec(a + 2, a), fn(a + 2, 2, 1), rf(1));
    b.P(ec(a + 2, a), fn(a, 1, 2), rf(1));
  }

  // mu = lambda^3 (lambda^3 - 1) / (lambda^3 - t^3).
  Poly pl3 = plam().pow(3);
  b.rep.mu = RatFunc(pl3 * (pl3 - pone()), pl3 - pt().pow(3));
  b.add_matrix_unit_relations();
  b.finalize();
  return b.rep;
}

// ----------------------------------------------------------------------------
// Data-driven construction for the two largest families.

std::vector<std::string> split_names(const char* s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

RF parse_rf(const char* num, const char* den) {
  Poly n = Poly::parse(num);
  Poly d = den == nullptr || *den == '\0' ? pone() : Poly::parse(den);
  return RatFunc(n, d);
}

FamilyRep build_from_data(FamilyId id, const fdata::FamilyData& data) {
  Builder b(id, 0);
  for (std::size_t i = 0; i < data.nablocks; ++i)
    b.add_block(0, data.ablocks[i].label, data.ablocks[i].size);
  for (std::size_t i = 0; i < data.nbblocks; ++i)
    b.add_block(1, data.bblocks[i].label, data.bblocks[i].size);

  for (std::size_t i = 0; i < data.nrels; ++i) {
    const auto& r = data.rels[i];
    Expr lhs = b.prod({r.la, r.lb});
    Expr rhs;
    RF c = parse_rf(r.cnum, r.cden);
    if (!c.is_zero()) {
      if (r.rb != nullptr && *r.rb != '\0')
        rhs = b.term(c, {r.ra, r.rb});
      else
        rhs = b.term(c, {r.ra});
    }
    b.rel(std::move(lhs), std::move(rhs));
  }
  for (std::size_t i = 0; i < data.nrterms; ++i) {
    const auto& t = data.rterms[i];
    b.rterm(parse_rf(t.cnum, t.cden), split_names(t.left), split_names(t.right));
  }
  for (std::size_t i = 0; i < data.npents; ++i) {
    const auto& p = data.pents[i];
    b.P(p.v, p.w, parse_rf(p.cnum, p.cden));
  }
  b.rep.mu = parse_rf(data.mu_num, data.mu_den);
  b.add_matrix_unit_relations();
  b.finalize();
  return b.rep;
}

}  // namespace

// ----------------------------------------------------------------------------

int FamilyRep::gen(const std::string& name) const {
  auto it = gen_index.find(name);
  if (it == gen_index.end()) throw std::invalid_argument("unknown generator: " + name);
  return it->second;
}

FamilyRep build_family(FamilyId id, int k) {
  switch (id) {
    case FamilyId::A:
      return build_a(k == 0 ? 2 : k);
    case FamilyId::Deven:
      return build_d_even(k == 0 ? 2 : k);
    case FamilyId::Dodd:
      return build_d_odd(k == 0 ? 3 : k);
    case FamilyId::E6:
      return build_e6();
    case FamilyId::E7:
      return build_from_data(FamilyId::E7, fdata::kE7);
    case FamilyId::E8:
      return build_from_data(FamilyId::E8, fdata::kE8);
  }
  throw std::invalid_argument("unknown family");
}

SMat<RatFunc> eval_expr(const FamilyRep& rep, const Expr& ex) {
  SMat<RatFunc> acc(rep.n, rep.n);
  for (const auto& t : ex) {
    SMat<RatFunc> p = SMat<RatFunc>::identity(rep.n);
    for (int gi : t.gens) p = p * rep.gen_mats[gi];
    acc.add_scaled(p, t.coeff);
  }
  return acc;
}

std::vector<RelationResult> check_relations(const FamilyRep& rep) {
  std::vector<RelationResult> out;
  out.reserve(rep.relations.size());
  for (const auto& r : rep.relations) {
    SMat<RatFunc> d = eval_expr(rep, r.lhs) - eval_expr(rep, r.rhs);
    out.push_back({r.id, d.is_zero()});
  }
  return out;
}

std::vector<RelationResult> check_relations_at(const FamilyRep& rep,
                                               const Rational& lambda_value,
                                               const Rational& t_value) {
  std::array<Rational, kNumVars> pt{};
  pt[static_cast<int>(Var::Lambda)] = lambda_value;
  pt[static_cast<int>(Var::T)] = t_value;
  std::vector<SMat<Rational>> mats;
  mats.reserve(rep.gen_mats.size());
  for (const auto& m : rep.gen_mats) mats.push_back(demote(m, pt));
  auto eval_at = [&](const Expr& ex) {
    SMat<Rational> acc(rep.n, rep.n);
    for (const auto& t : ex) {
      SMat<Rational> p = SMat<Rational>::identity(rep.n);
      for (int gi : t.gens) p = p * mats[gi];
      acc.add_scaled(p, demote(t.coeff, pt));
    }
    return acc;
  };
  std::vector<RelationResult> out;
  out.reserve(rep.relations.size());
  for (const auto& r : rep.relations) {
    SMat<Rational> d = eval_at(r.lhs) - eval_at(r.rhs);
    out.push_back({r.id, d.is_zero()});
  }
  return out;
}

RatFunc central_scalar(const FamilyRep& rep) {
  // R(1) = sum_ij E_ij B_ij: row i of the result is row j of B_ij.
  SMat<RatFunc> r1(rep.n, rep.n);
  for (const auto& [key, B] : rep.R.blocks)
    for (const auto& [rc, val] : B.e)
      if (rc.first == key.second) r1.add_at(key.first, rc.second, val);
  RatFunc scalar = r1.e.empty() ? RatFunc() : r1.e.begin()->second;
  SMat<RatFunc> d = r1 - SMat<RatFunc>::identity(rep.n).scaled(scalar);
  if (!d.is_zero()) throw std::runtime_error("R(1) is not a scalar matrix");
  for (int i = 0; i < rep.n; ++i)
    if (!r1.e.count({i, i})) throw std::runtime_error("R(1) is not a scalar matrix");
  return scalar;
}

FamilyRep specialize(const FamilyRep& rep,
                     std::optional<Rational> lambda_value,
                     std::optional<Rational> t_value) {
  std::vector<std::pair<Var, Rational>> subs;
  if (lambda_value) subs.push_back({Var::Lambda, *lambda_value});
  if (t_value) subs.push_back({Var::T, *t_value});
  if (subs.empty()) return rep;

  for (const auto& d : rep.degeneracy) {
    Poly p = d;
    for (const auto& [v, val] : subs) p = p.subs(v, val);
    if (p.is_zero())
      throw DegenerateParameter("degenerate parameter: " + d.to_string() + " = 0");
  }

  auto sub_rf = [&](const RatFunc& f) {
    RatFunc g = f;
    for (const auto& [v, val] : subs) g = g.substitute(v, RatFunc(Poly::constant(val)));
    return g;
  };
  FamilyRep out = rep;
  for (auto& m : out.gen_mats) m = smat_map<RatFunc, RatFunc>(m, sub_rf);
  for (auto& r : out.relations) {
    for (auto& t : r.lhs) t.coeff = sub_rf(t.coeff);
    for (auto& t : r.rhs) t.coeff = sub_rf(t.coeff);
  }
  for (auto& t : out.rterms) t.coeff = sub_rf(t.coeff);
  SparseOp<RatFunc> R2(out.n);
  for (const auto& [key, B] : rep.R.blocks)
    R2.add_block(key.first, key.second, smat_map<RatFunc, RatFunc>(B, sub_rf), FieldOps<RatFunc>::one());
  out.R = std::move(R2);
  out.mu = sub_rf(rep.mu);
  for (int i = 0; i < out.P.rows(); ++i)
    for (int j = 0; j < out.P.cols(); ++j) out.P(i, j) = sub_rf(rep.P(i, j));
  return out;
}

std::string family_display_name(FamilyId id, int k) {
  std::string s = family_name(id);
  if (id == FamilyId::A || id == FamilyId::Deven || id == FamilyId::Dodd)
    s += " (k=" + std::to_string(k) + ")";
  return s;
}

// ----------------------------------------------------------------------------
// Reference operator identities and resolvents.

namespace {
RatFunc rk() { return RatFunc::variable(Var::K); }
RatFunc rv() { return RatFunc::variable(Var::V); }
}  // namespace

UPoly<RatFunc> reference_r_polynomial(FamilyId id) {
  const RatFunc K = rk();
  const RatFunc l = lam();
  const RatFunc one = rf(1);
  switch (id) {
    case FamilyId::A:
      // R^3 - (K+1) R^2 + K R = 0
      return {RatFunc(), K, RF() - (K + one), one};
    case FamilyId::Deven:
      // R^4 - (1+lambda+K) R^3 + (lambda+K+lambda K) R^2 - lambda K R = 0
      return {RatFunc(), RF() - l * K, l + K + l * K, RF() - (one + l + K), one};
    case FamilyId::Dodd:
      // R^4 - (2 lambda - 1 + K) R^3 + (lambda^2 - lambda - K + 2 lambda K) R^2
      //     - lambda (lambda - 1) K R = 0
      return {RatFunc(), RF() - l * (l - one) * K, l * l - l - K + rf(2) * l * K,
              RF() - (rf(2) * l - one + K), one};
    case FamilyId::E6: {
      RatFunc c = l * l * l;  // lambda^3 plays the role of lambda
      return {RatFunc(), RF() - c * (c - one) * K, c * c - c - K + rf(2) * c * K,
              RF() - (rf(2) * c - one + K), one};
    }
    case FamilyId::E7:
    case FamilyId::E8:
      return {};
  }
  return {};
}

UPoly<RatFunc> reference_resolvent(FamilyId id) {
  const RatFunc K = rk();
  const RatFunc v = rv();
  const RatFunc l = lam();
  const RatFunc one = rf(1);
  switch (id) {
    case FamilyId::A: {
      // (1/v) x + 1/(v(v+1)) (v+K)^{-1} (R^2 - (1+v+K) R)
      RatFunc D = (v * (v + one) * (v + K)).inverse();
      return {one * v.inverse(), RF() - (one + v + K) * D, D};
    }
    case FamilyId::Deven: {
      // -(1/v) x + 1/(v(v+1)(v+lambda)) (v+K)^{-1}
      //   (R^3 - (1+v+lambda+K) R^2 + (v^2+lambda v+v+lambda+(1+v+lambda)K) R)
      RatFunc D = (v * (v + one) * (v + l) * (v + K)).inverse();
      return {RF() - v.inverse(), (v * v + l * v + v + l + (one + v + l) * K) * D,
              RF() - (one + v + l + K) * D, D};
    }
    case FamilyId::Dodd: {
      // -(1/v) x + 1/(v(v+lambda)(v+lambda-1))
      //   (R^3 - (v+2 lambda-1+K) R^2
      //        + (v^2+2 lambda v+lambda^2-v-lambda+(v-1+2 lambda)K) R)(v+K)^{-1}
      RatFunc D = (v * (v + l) * (v + l - one) * (v + K)).inverse();
      return {RF() - v.inverse(),
              (v * v + rf(2) * l * v + l * l - v - l + (v - one + rf(2) * l) * K) * D,
              RF() - (v + rf(2) * l - one + K) * D, D};
    }
    case FamilyId::E6: {
      RatFunc c = l * l * l;
      RatFunc D = (v * (v + c) * (v + c - one) * (v + K)).inverse();
      return {RF() - v.inverse(),
              (v * v + rf(2) * c * v + c * c - v - c + (v - one + rf(2) * c) * K) * D,
              RF() - (v + rf(2) * c - one + K) * D, D};
    }
    case FamilyId::E7:
    case FamilyId::E8:
      return {};
  }
  return {};
}

}  // namespace pencil
