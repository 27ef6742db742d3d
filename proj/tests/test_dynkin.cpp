#include <doctest.h>

#include <algorithm>

#include "pencil/dynkin.hpp"

using namespace pencil;

namespace {
std::vector<long> sorted_marks(const Diagram& d) {
    auto m = marks(d);
    std::sort(m.begin(), m.end());
    return m;
}

const FamilyId kAll[] = {FamilyId::A,  FamilyId::Deven, FamilyId::Dodd,
                         FamilyId::E6, FamilyId::E7,    FamilyId::E8};

int family_k(FamilyId f) {
    switch (f) {
        case FamilyId::A:
        case FamilyId::Deven:
            return 2;
        case FamilyId::Dodd:
            return 3;
        default:
            return 0;
    }
}
}  // namespace

TEST_CASE("family names round trip") {
    for (FamilyId f : kAll) {
        auto back = family_from_name(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK(!family_from_name("bogus").has_value());
}

TEST_CASE("diagram shapes and bipartition") {
    CHECK(family_diagram(FamilyId::A, 2).nodes() == 4);
    CHECK(family_diagram(FamilyId::A, 3).nodes() == 6);
    CHECK(family_diagram(FamilyId::Deven, 2).nodes() == 5);
    CHECK(family_diagram(FamilyId::Deven, 3).nodes() == 7);
    CHECK(family_diagram(FamilyId::Dodd, 3).nodes() == 6);
    CHECK(family_diagram(FamilyId::E6, 0).nodes() == 7);
    CHECK(family_diagram(FamilyId::E7, 0).nodes() == 8);
    CHECK(family_diagram(FamilyId::E8, 0).nodes() == 9);
    for (FamilyId f : kAll) {
        Diagram d = family_diagram(f, family_k(f));
        for (auto [a, b] : d.edges) CHECK(d.side[a] != d.side[b]);
    }
}

TEST_CASE("marks are the classical affine marks") {
    CHECK(sorted_marks(family_diagram(FamilyId::A, 2)) == std::vector<long>{1, 1, 1, 1});
    CHECK(sorted_marks(family_diagram(FamilyId::Deven, 2)) == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(sorted_marks(family_diagram(FamilyId::Deven, 3)) ==
          std::vector<long>{1, 1, 1, 1, 2, 2, 2});
    CHECK(sorted_marks(family_diagram(FamilyId::Dodd, 3)) == std::vector<long>{1, 1, 1, 1, 2, 2});
    CHECK(sorted_marks(family_diagram(FamilyId::E6, 0)) == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
    CHECK(sorted_marks(family_diagram(FamilyId::E7, 0)) ==
          std::vector<long>{1, 1, 2, 2, 2, 3, 3, 4});
    CHECK(sorted_marks(family_diagram(FamilyId::E8, 0)) ==
          std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("marks require an affine diagram") {
    Diagram path;
    path.labels = {"a", "b"};
    path.side = {0, 1};
    path.edges = {{0, 1}};
    CHECK_THROWS(marks(path));
}

TEST_CASE("admissibility and indecomposability for every family") {
    for (FamilyId f : kAll) {
        CAPTURE(family_name(f));
        Diagram d = family_diagram(f, family_k(f));
        MultiplicityMatrix mm = multiplicity_matrix(d);
        SideMarks sm = side_marks(d);
        CHECK(adm_holds(mm, sm.m, sm.n));
        CHECK(indecomposable(mm));
        // wrong marks must be rejected
        std::vector<long> ones_m(sm.m.size(), 1), ones_n(sm.n.size(), 1);
        if (f != FamilyId::A) CHECK(!adm_holds(mm, ones_m, ones_n));
    }
}

TEST_CASE("A-type multiplicity matrix is all ones") {
    MultiplicityMatrix mm = multiplicity_matrix(family_diagram(FamilyId::A, 2));
    REQUIRE(mm.a.size() == 2);
    for (auto& row : mm.a) {
        REQUIRE(row.size() == 2);
        for (long x : row) CHECK(x == 1);
    }
}

TEST_CASE("opposite structure transposes the multiplicity matrix") {
    for (FamilyId f : kAll) {
        CAPTURE(family_name(f));
        Diagram d = family_diagram(f, family_k(f));
        MultiplicityMatrix mm = multiplicity_matrix(d);
        MultiplicityMatrix om = multiplicity_matrix(opposite(d));
        MultiplicityMatrix tm = transpose(mm);
        CHECK(om.a == tm.a);
        CHECK(om.row_labels == tm.row_labels);
        CHECK(om.col_labels == tm.col_labels);
        // transpose is an involution
        MultiplicityMatrix tt = transpose(tm);
        CHECK(tt.a == mm.a);
        CHECK(tt.row_labels == mm.row_labels);
    }
}

TEST_CASE("indecomposability detects a split matrix") {
    MultiplicityMatrix split;
    split.row_labels = {"a", "b"};
    split.col_labels = {"c", "d"};
    split.a = {{1, 0}, {0, 1}};
    CHECK(!indecomposable(split));
}
