#include <doctest.h>

#include "pencil/quiver.hpp"

using namespace pencil;

namespace {
void check_family_quiver(const FamilyRep& rep, const Diagram& d) {
    QuiverRep q = extract_quiver_rep(rep);
    CHECK(q.nodes.size() == d.labels.size());
    CHECK(arrows_match_diagram(q, d));
    CHECK(node_dims_match_marks(q, d));
    CHECK(dimension_sum_rule(q, rep.n));
    CHECK(!q.det_p.is_zero());
}
}  // namespace

TEST_CASE("quiver extraction, A-type symbolic") {
    check_family_quiver(build_family(FamilyId::A, 2), family_diagram(FamilyId::A, 2));
    check_family_quiver(build_family(FamilyId::A, 3), family_diagram(FamilyId::A, 3));
}

TEST_CASE("quiver extraction, D-type symbolic") {
    check_family_quiver(build_family(FamilyId::Deven, 2), family_diagram(FamilyId::Deven, 2));
    check_family_quiver(build_family(FamilyId::Dodd, 3), family_diagram(FamilyId::Dodd, 3));
}

TEST_CASE("quiver node data for the smallest A-type") {
    QuiverRep q = extract_quiver_rep(build_family(FamilyId::A, 2));
    REQUIRE(q.nodes.size() == 4);
    for (const auto& n : q.nodes) {
        CHECK(n.size == 1);  // A-type blocks are scalars
        CHECK(n.dim == 1);   // marks of the affine cycle are all 1
    }
    CHECK(q.find("e1") != nullptr);
    CHECK(q.find("missing") == nullptr);
    CHECK(q.arrows.size() == 4);  // one per diagram edge
}

TEST_CASE("dimension sum rule rejects a wrong total") {
    QuiverRep q = extract_quiver_rep(build_family(FamilyId::A, 2));
    CHECK(dimension_sum_rule(q, 2));
    CHECK(!dimension_sum_rule(q, 3));
}
