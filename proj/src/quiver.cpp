#include "pencil/quiver.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace pencil {

namespace {

using RF = RatFunc;

Mat<RF> base_change_block(const Mat<RF>& p, const BlockInfo& y, const BlockInfo& x) {
  Mat<RF> b(y.size * y.size, x.size * x.size);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) b(r, c) = p(y.offset + r, x.offset + c);
  return b;
}

}  // namespace

const QuiverNode* QuiverRep::find(const std::string& label) const {
  for (const auto& n : nodes)
    if (n.label == label) return &n;
  return nullptr;
}

QuiverRep extract_quiver_rep(const FamilyRep& rep) {
  QuiverRep out;
  for (int side = 0; side < 2; ++side) {
    for (const auto& b : side == 0 ? rep.ablocks : rep.bblocks) {
      SMat<RF> idem(rep.n, rep.n);
      for (int i = 1; i <= b.size; ++i) idem = idem + rep.mat(unit_name(b.label, b.size, i, i));
      int r = rank(idem.to_dense());
      if (r % b.size != 0)
        throw std::runtime_error("quiver: idempotent rank of " + b.label +
                                 " is not a multiple of the block size");
      out.nodes.push_back({b.label, side, b.size, r / b.size});
    }
  }

  for (const auto& x : rep.ablocks) {
    for (const auto& y : rep.bblocks) {
      Mat<RF> blk = base_change_block(rep.P, y, x);
      const int s = y.size, m = x.size;
      int pr = -1, pc = -1;
      for (int r = 0; r < blk.rows() && pr < 0; ++r)
        for (int c = 0; c < blk.cols(); ++c)
          if (!blk(r, c).is_zero()) {
            pr = r;
            pc = c;
            break;
          }
      if (pr < 0) continue;  // zero block: no arrow

      // Row (a-1)*s + (b-1) pairs the action index a with the multiplicity
      // index b; columns likewise with (i-1)*m + (j-1).  A simple tensor
      // is recovered from the pivot's cross section and checked entrywise.
      int a0 = pr / s, b0 = pr % s, i0 = pc / m, j0 = pc % m;
      Mat<RF> action(s, m), mult(s, m);
      const RF piv = blk(pr, pc);
      for (int a = 0; a < s; ++a)
        for (int i = 0; i < m; ++i) action(a, i) = blk(a * s + b0, i * m + j0);
      for (int bb = 0; bb < s; ++bb)
        for (int j = 0; j < m; ++j) mult(bb, j) = blk(a0 * s + bb, i0 * m + j) / piv;
      for (int a = 0; a < s; ++a)
        for (int bb = 0; bb < s; ++bb)
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              if (!(blk(a * s + bb, i * m + j) == action(a, i) * mult(bb, j)))
                throw std::runtime_error("quiver: base-change block " + x.label + " -> " +
                                         y.label + " is not a simple tensor");
      out.arrows.push_back({x.label, y.label, std::move(action), std::move(mult)});
    }
  }

  out.det_p = det_ratfunc(rep.P);
  return out;
}

bool arrows_match_diagram(const QuiverRep& q, const Diagram& d) {
  std::set<std::pair<std::string, std::string>> de, qe;
  for (const auto& [i, j] : d.edges) {
    if (d.side[i] == 0)
      de.insert({d.labels[i], d.labels[j]});
    else
      de.insert({d.labels[j], d.labels[i]});
  }
  for (const auto& a : q.arrows) qe.insert({a.from, a.to});
  return de == qe;
}

bool node_dims_match_marks(const QuiverRep& q, const Diagram& d) {
  std::vector<long> mk = marks(d);
  for (const auto& n : q.nodes) {
    int i = d.find(n.label);
    if (i < 0 || mk[i] != n.dim) return false;
  }
  return int(q.nodes.size()) == d.nodes();
}

bool dimension_sum_rule(const QuiverRep& q, int n) {
  long a = 0, b = 0;
  for (const auto& nd : q.nodes) (nd.side == 0 ? a : b) += long(nd.size) * nd.dim;
  return a == n && b == n;
}

}  // namespace pencil
