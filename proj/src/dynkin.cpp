#include "pencil/dynkin.hpp"

#include <numeric>
#include <stdexcept>

namespace pencil {

std::string family_name(FamilyId f) {
    switch (f) {
        case FamilyId::A: return "A";
        case FamilyId::Deven: return "D_even";
        case FamilyId::Dodd: return "D_odd";
        case FamilyId::E6: return "E6";
        case FamilyId::E7: return "E7";
        case FamilyId::E8: return "E8";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(const std::string& s) {
    if (s == "A") return FamilyId::A;
    if (s == "D_even") return FamilyId::Deven;
    if (s == "D_odd") return FamilyId::Dodd;
    if (s == "E6") return FamilyId::E6;
    if (s == "E7") return FamilyId::E7;
    if (s == "E8") return FamilyId::E8;
    return std::nullopt;
}

int Diagram::find(const std::string& label) const {
    for (int i = 0; i < nodes(); ++i)
        if (labels[i] == label)
            return i;
    throw std::invalid_argument("Diagram::find: no node " + label);
}

namespace {

void add_node(Diagram& d, const std::string& label, int side) {
    d.labels.push_back(label);
    d.side.push_back(side);
}

void add_edge(Diagram& d, const std::string& a, const std::string& b) {
    d.edges.emplace_back(d.find(a), d.find(b));
}

}  // namespace

Diagram family_diagram(FamilyId f, int k) {
    Diagram d;
    switch (f) {
        case FamilyId::A: {
            if (k < 2)
                throw std::invalid_argument("A family needs k >= 2");
            // 2k-cycle: e_i — f_i — e_{i+1} (indices mod k), from the pairing
            // f_i e_j != 0 exactly when j − i is 0 or 1.
            for (int i = 1; i <= k; ++i) {
                add_node(d, "e" + std::to_string(i), 0);
                add_node(d, "f" + std::to_string(i), 1);
            }
            for (int i = 1; i <= k; ++i) {
                add_edge(d, "e" + std::to_string(i), "f" + std::to_string(i));
                add_edge(d, "f" + std::to_string(i), "e" + std::to_string(i % k + 1));
            }
            break;
        }
        case FamilyId::Deven: {
            if (k < 2)
                throw std::invalid_argument("D_even family needs k >= 2");
            // Legs e1, e2 on e3; chain e3 — e4 — e5 — ... — e_{2k-1};
            // legs e_{2k}, e_{2k+1} on e_{2k-1}.  Odd interior indices are the
            // second algebra's blocks, matching the generator numbering.
            add_node(d, "e1", 0);
            add_node(d, "e2", 0);
            for (int a = 2; a <= k; ++a)
                add_node(d, "e" + std::to_string(2 * a - 1), 1);
            for (int a = 2; a <= k - 1; ++a)
                add_node(d, "e" + std::to_string(2 * a), 0);
            add_node(d, "e" + std::to_string(2 * k), 0);
            add_node(d, "e" + std::to_string(2 * k + 1), 0);
            add_edge(d, "e1", "e3");
            add_edge(d, "e2", "e3");
            for (int a = 2; a <= k - 1; ++a) {
                add_edge(d, "e" + std::to_string(2 * a - 1), "e" + std::to_string(2 * a));
                add_edge(d, "e" + std::to_string(2 * a), "e" + std::to_string(2 * a + 1));
            }
            add_edge(d, "e" + std::to_string(2 * k), "e" + std::to_string(2 * k - 1));
            add_edge(d, "e" + std::to_string(2 * k + 1), "e" + std::to_string(2 * k - 1));
            break;
        }
        case FamilyId::Dodd: {
            if (k < 3)
                throw std::invalid_argument("D_odd family needs k >= 3");
            // Legs e1, e2 on e3; chain e3 — e4 — ... — e_{2k-2};
            // legs e_{2k-1}, e_{2k} on e_{2k-2}.  Odd interior indices plus the
            // two far legs are the second algebra's blocks.
            add_node(d, "e1", 0);
            add_node(d, "e2", 0);
            for (int a = 2; a <= k - 1; ++a) {
                add_node(d, "e" + std::to_string(2 * a - 1), 1);
                add_node(d, "e" + std::to_string(2 * a), 0);
            }
            add_node(d, "e" + std::to_string(2 * k - 1), 1);
            add_node(d, "e" + std::to_string(2 * k), 1);
            add_edge(d, "e1", "e3");
            add_edge(d, "e2", "e3");
            for (int a = 2; a <= k - 1; ++a) {
                add_edge(d, "e" + std::to_string(2 * a - 1), "e" + std::to_string(2 * a));
                if (a < k - 1)
                    add_edge(d, "e" + std::to_string(2 * a), "e" + std::to_string(2 * a + 1));
            }
            add_edge(d, "e" + std::to_string(2 * k - 1), "e" + std::to_string(2 * k - 2));
            add_edge(d, "e" + std::to_string(2 * k), "e" + std::to_string(2 * k - 2));
            break;
        }
        case FamilyId::E6: {
            // Central 3×3 block connected to three 2-blocks, each carrying a
            // scalar leg.
            add_node(d, "e", 0);  // the Mat_3 block
            for (int a = 1; a <= 3; ++a) {
                add_node(d, "f" + std::to_string(a), 1);
                add_node(d, "e" + std::to_string(a), 0);
                add_edge(d, "e", "f" + std::to_string(a));
                add_edge(d, "f" + std::to_string(a), "e" + std::to_string(a));
            }
            break;
        }
        case FamilyId::E7: {
            // Chain e1 — f1 — e2 — f2 — e4 — f3 — e5 with branch e3 on f2.
            add_node(d, "e1", 0);
            add_node(d, "e2", 0);
            add_node(d, "e3", 0);
            add_node(d, "e4", 0);
            add_node(d, "e5", 0);
            add_node(d, "f1", 1);
            add_node(d, "f2", 1);
            add_node(d, "f3", 1);
            add_edge(d, "e1", "f1");
            add_edge(d, "f1", "e2");
            add_edge(d, "e2", "f2");
            add_edge(d, "f2", "e4");
            add_edge(d, "e4", "f3");
            add_edge(d, "f3", "e5");
            add_edge(d, "f2", "e3");
            break;
        }
        case FamilyId::E8: {
            // Chain f5 — e4 — f4 — e3 — f3 — e2 — f1 — e1 with branch f2 on e2.
            add_node(d, "e1", 0);
            add_node(d, "e2", 0);
            add_node(d, "e3", 0);
            add_node(d, "e4", 0);
            add_node(d, "f1", 1);
            add_node(d, "f2", 1);
            add_node(d, "f3", 1);
            add_node(d, "f4", 1);
            add_node(d, "f5", 1);
            add_edge(d, "f5", "e4");
            add_edge(d, "e4", "f4");
            add_edge(d, "f4", "e3");
            add_edge(d, "e3", "f3");
            add_edge(d, "f3", "e2");
            add_edge(d, "e2", "f1");
            add_edge(d, "f1", "e1");
            add_edge(d, "e2", "f2");
            break;
        }
    }
    return d;
}

std::vector<long> marks(const Diagram& d) {
    int n = d.nodes();
    Mat<Rational> cartan(n, n);
    for (int i = 0; i < n; ++i)
        cartan(i, i) = Rational(2);
    for (auto& [a, b] : d.edges) {
        cartan(a, b) -= Rational(1);
        cartan(b, a) -= Rational(1);
    }
    std::vector<Rational> zero(static_cast<size_t>(n), Rational(0));
    LinearSolution<Rational> sol = solve_linear(cartan, zero);
    if (sol.kernel_basis.size() != 1)
        throw std::logic_error("marks: affine Cartan kernel is not 1-dimensional");
    const std::vector<Rational>& kv = sol.kernel_basis[0];
    // Scale to the minimal positive coprime integer vector.
    Rational lcm_den(1);
    for (int i = 0; i < n; ++i) {
        Rational den(kv[static_cast<size_t>(i)].get_den());
        lcm_den = lcm_den * den / Rational(gcd(lcm_den.get_num(), den.get_num()));
    }
    std::vector<long> out(static_cast<size_t>(n));
    long g = 0;
    for (int i = 0; i < n; ++i) {
        Rational v = kv[static_cast<size_t>(i)] * lcm_den;
        if (!rat_is_integer(v))
            throw std::logic_error("marks: scaling failed");
        long x = static_cast<long>(v.get_num().get_si());
        out[static_cast<size_t>(i)] = x;
        g = std::gcd(g, x);
    }
    if (g == 0)
        throw std::logic_error("marks: zero kernel vector");
    bool negative = false;
    for (long& x : out) {
        x /= g;
        if (x < 0)
            negative = true;
    }
    if (negative)
        for (long& x : out)
            x = -x;
    for (long x : out)
        if (x <= 0)
            throw std::logic_error("marks: kernel vector not strictly positive");
    return out;
}

MultiplicityMatrix multiplicity_matrix(const Diagram& d) {
    MultiplicityMatrix mm;
    std::vector<int> row_of(static_cast<size_t>(d.nodes()), -1);
    std::vector<int> col_of(static_cast<size_t>(d.nodes()), -1);
    for (int i = 0; i < d.nodes(); ++i) {
        if (d.side[static_cast<size_t>(i)] == 0) {
            row_of[static_cast<size_t>(i)] = static_cast<int>(mm.row_labels.size());
            mm.row_labels.push_back(d.labels[static_cast<size_t>(i)]);
        } else {
            col_of[static_cast<size_t>(i)] = static_cast<int>(mm.col_labels.size());
            mm.col_labels.push_back(d.labels[static_cast<size_t>(i)]);
        }
    }
    mm.a.assign(mm.row_labels.size(), std::vector<long>(mm.col_labels.size(), 0));
    for (auto& [x, y] : d.edges) {
        int a = x, b = y;
        if (d.side[static_cast<size_t>(a)] == 1)
            std::swap(a, b);
        if (d.side[static_cast<size_t>(a)] != 0 || d.side[static_cast<size_t>(b)] != 1)
            throw std::logic_error("multiplicity_matrix: edge within one side");
        mm.a[static_cast<size_t>(row_of[static_cast<size_t>(a)])]
            [static_cast<size_t>(col_of[static_cast<size_t>(b)])] += 1;
    }
    return mm;
}

bool adm_holds(const MultiplicityMatrix& mm, const std::vector<long>& m,
               const std::vector<long>& n) {
    size_t rows = mm.a.size(), cols = rows ? mm.a[0].size() : 0;
    if (m.size() != rows || n.size() != cols)
        return false;
    for (size_t i = 0; i < rows; ++i) {
        long s = 0;
        for (size_t j = 0; j < cols; ++j)
            s += mm.a[i][j] * n[j];
        if (s != 2 * m[i])
            return false;
    }
    for (size_t j = 0; j < cols; ++j) {
        long s = 0;
        for (size_t i = 0; i < rows; ++i)
            s += mm.a[i][j] * m[i];
        if (s != 2 * n[j])
            return false;
    }
    return true;
}

bool indecomposable(const MultiplicityMatrix& mm) {
    size_t rows = mm.a.size(), cols = rows ? mm.a[0].size() : 0;
    if (rows == 0 || cols == 0)
        return false;
    std::vector<char> rv(rows, 0), cv(cols, 0);
    std::vector<std::pair<int, size_t>> stack{{0, 0}};  // (0=row,1=col, index)
    rv[0] = 1;
    while (!stack.empty()) {
        auto [kind, idx] = stack.back();
        stack.pop_back();
        if (kind == 0) {
            for (size_t j = 0; j < cols; ++j)
                if (mm.a[idx][j] != 0 && !cv[j]) {
                    cv[j] = 1;
                    stack.emplace_back(1, j);
                }
        } else {
            for (size_t i = 0; i < rows; ++i)
                if (mm.a[i][idx] != 0 && !rv[i]) {
                    rv[i] = 1;
                    stack.emplace_back(0, i);
                }
        }
    }
    for (char c : rv)
        if (!c)
            return false;
    for (char c : cv)
        if (!c)
            return false;
    return true;
}

MultiplicityMatrix transpose(const MultiplicityMatrix& mm) {
    MultiplicityMatrix out;
    out.row_labels = mm.col_labels;
    out.col_labels = mm.row_labels;
    out.a.assign(out.row_labels.size(), std::vector<long>(out.col_labels.size(), 0));
    for (size_t i = 0; i < mm.a.size(); ++i)
        for (size_t j = 0; j < mm.a[i].size(); ++j)
            out.a[j][i] = mm.a[i][j];
    return out;
}

Diagram opposite(const Diagram& d) {
    Diagram out = d;
    for (auto& s : out.side)
        s = 1 - s;
    return out;
}

SideMarks side_marks(const Diagram& d) {
    std::vector<long> mk = marks(d);
    SideMarks sm;
    for (int i = 0; i < d.nodes(); ++i) {
        if (d.side[static_cast<size_t>(i)] == 0)
            sm.m.push_back(mk[static_cast<size_t>(i)]);
        else
            sm.n.push_back(mk[static_cast<size_t>(i)]);
    }
    return sm;
}

}  // namespace pencil
