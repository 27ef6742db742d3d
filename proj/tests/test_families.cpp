#include <doctest.h>

#include <set>

#include "pencil/families.hpp"

using namespace pencil;

namespace {
RatFunc rv(Var v) { return RatFunc::variable(v); }
const RatFunc one(Rational(1));

bool all_ok(const std::vector<RelationResult>& rs) {
    for (const auto& r : rs)
        if (!r.ok) return false;
    return !rs.empty();
}

SMat<RatFunc> side_sum(const FamilyRep& rep, int side) {
    SMat<RatFunc> s(rep.n, rep.n);
    for (const BlockInfo& b : rep.bblocks) {
        (void)b;
    }
    for (std::size_t g = 0; g < rep.gen_names.size(); ++g) {
        // diagonal idempotents are the [i,i] units / scalar-block generators
        const std::string& name = rep.gen_names[g];
        if (rep.gen_side[g] != side) continue;
        auto br = name.find('[');
        if (br == std::string::npos) {
            s.add_scaled(rep.gen_mats[g], one);
        } else {
            // keep only the diagonal units "x[i,i]"
            auto comma = name.find(',', br);
            std::string i = name.substr(br + 1, comma - br - 1);
            std::string j = name.substr(comma + 1, name.size() - comma - 2);
            if (i == j) s.add_scaled(rep.gen_mats[g], one);
        }
    }
    return s;
}
}  // namespace

TEST_CASE("family dimensions") {
    CHECK(build_family(FamilyId::A, 2).n == 2);
    CHECK(build_family(FamilyId::A, 3).n == 3);
    CHECK(build_family(FamilyId::Deven, 2).n == 4);
    CHECK(build_family(FamilyId::Deven, 3).n == 8);
    CHECK(build_family(FamilyId::Dodd, 3).n == 6);
    CHECK(build_family(FamilyId::E6).n == 12);
    CHECK(build_family(FamilyId::E7).n == 24);
    CHECK(build_family(FamilyId::E8).n == 60);
}

TEST_CASE("central scalars match the closed forms") {
    RatFunc l = rv(Var::Lambda), t = rv(Var::T);

    FamilyRep a2 = build_family(FamilyId::A, 2);
    CHECK(a2.mu == one / (one - t * t));
    CHECK(a2.mu.to_string() == "(-1) / (t^2 - 1)");
    CHECK(central_scalar(a2) == a2.mu);

    FamilyRep a3 = build_family(FamilyId::A, 3);
    CHECK(a3.mu == one / (one - t * t * t));

    FamilyRep dev = build_family(FamilyId::Deven, 2);
    CHECK(dev.mu == l * (t - one) / (t - l));
    CHECK(central_scalar(dev) == dev.mu);

    FamilyRep dodd = build_family(FamilyId::Dodd, 3);
    CHECK(dodd.mu == t * l * (one - l) / (one - t * l));
    CHECK(central_scalar(dodd) == dodd.mu);

    RatFunc c = l * l * l;
    FamilyRep e6 = build_family(FamilyId::E6);
    CHECK(e6.mu == c * (c - one) / (c - t * t * t));
    CHECK(central_scalar(e6) == e6.mu);

    FamilyRep e7 = build_family(FamilyId::E7);
    CHECK(e7.mu == l * (t - one) / (t - l));
    CHECK(central_scalar(e7) == e7.mu);

    FamilyRep e8 = build_family(FamilyId::E8);
    CHECK(e8.mu == l * (t - one) / (t - l));
    CHECK(central_scalar(e8) == e8.mu);
}

TEST_CASE("A-type spot value: k = 2, t = 2 gives mu = -1/3") {
    FamilyRep rep = specialize(build_family(FamilyId::A, 2), std::nullopt, rat(2));
    CHECK(rep.mu == RatFunc(rat(-1, 3)));
    CHECK(central_scalar(rep) == RatFunc(rat(-1, 3)));
}

TEST_CASE("defining relations hold symbolically (small families)") {
    for (auto [id, k] : {std::pair{FamilyId::A, 2}, {FamilyId::A, 3}, {FamilyId::Deven, 2},
                         {FamilyId::Dodd, 3}}) {
        CAPTURE(family_name(id));
        FamilyRep rep = build_family(id, k);
        CHECK(all_ok(check_relations(rep)));
    }
}

TEST_CASE("relations hold at sample points and fail nowhere") {
    FamilyRep rep = build_family(FamilyId::A, 2);
    CHECK(all_ok(check_relations_at(rep, rat(5), rat(7))));
    FamilyRep dev = build_family(FamilyId::Deven, 2);
    CHECK(all_ok(check_relations_at(dev, rat(2, 3), rat(5))));
}

TEST_CASE("relation counts for the long E-type lists") {
    CHECK(build_family(FamilyId::E7).relations.size() == 1682);
    CHECK(build_family(FamilyId::E8).relations.size() == 10682);
}

TEST_CASE("degenerate parameters are rejected") {
    FamilyRep a2 = build_family(FamilyId::A, 2);
    CHECK_THROWS_AS(specialize(a2, std::nullopt, rat(1)), DegenerateParameter);
    CHECK_THROWS_AS(specialize(a2, std::nullopt, rat(-1)), DegenerateParameter);
    try {
        specialize(a2, std::nullopt, rat(1));
        FAIL("expected DegenerateParameter");
    } catch (const DegenerateParameter& e) {
        CHECK(std::string(e.what()).find("degenerate parameter") != std::string::npos);
    }
    FamilyRep dev = build_family(FamilyId::Deven, 2);
    CHECK_THROWS_AS(specialize(dev, rat(3), rat(3)), DegenerateParameter);  // lambda = t
    // non-degenerate values specialize fine and keep the relations
    FamilyRep sp = specialize(dev, rat(2), rat(5));
    CHECK(all_ok(check_relations(sp)));
    CHECK(sp.mu.is_constant());
}

TEST_CASE("degeneracy loci") {
    auto has = [](const FamilyRep& rep, const std::string& s) {
        for (const Poly& p : rep.degeneracy)
            if (p.to_string() == s) return true;
        return false;
    };
    CHECK(has(build_family(FamilyId::A, 2), "t^2 - 1"));
    FamilyRep dev = build_family(FamilyId::Deven, 2);
    CHECK(has(dev, "lambda - t"));
    CHECK(has(dev, "lambda*t - lambda"));
}

TEST_CASE("partition of unity on both sides") {
    for (auto [id, k] : {std::pair{FamilyId::A, 2}, {FamilyId::Deven, 2}, {FamilyId::Dodd, 3},
                         {FamilyId::E6, 0}}) {
        CAPTURE(family_name(id));
        FamilyRep rep = build_family(id, k);
        CHECK(side_sum(rep, 0) == SMat<RatFunc>::identity(rep.n));
        CHECK(side_sum(rep, 1) == SMat<RatFunc>::identity(rep.n));
    }
}

TEST_CASE("generator lookup and unit names") {
    FamilyRep a2 = build_family(FamilyId::A, 2);
    CHECK(a2.gen("e1") >= 0);
    CHECK(a2.mat("e1").rows == 2);
    CHECK_THROWS(a2.gen("nonexistent"));
    CHECK(unit_name("e4", 2, 1, 2) == "e4[1,2]");
    CHECK(unit_name("e1", 1, 1, 1) == "e1");
}

TEST_CASE("reference operator polynomial and resolvent shapes") {
    RatFunc K = rv(Var::K), v = rv(Var::V);
    auto pa = reference_r_polynomial(FamilyId::A);
    REQUIRE(pa.size() == 4);
    CHECK(pa[0].is_zero());
    CHECK(pa[1] == K);
    CHECK(pa[2] == -(K + one));
    CHECK(pa[3] == one);
    CHECK(reference_r_polynomial(FamilyId::E7).empty());
    CHECK(reference_r_polynomial(FamilyId::E8).empty());

    auto qa = reference_resolvent(FamilyId::A);
    REQUIRE(qa.size() == 3);
    RatFunc D = one / (v * (v + one) * (v + K));
    CHECK(qa[0] == one / v);
    CHECK(qa[1] == -(one + v + K) * D);
    CHECK(qa[2] == D);
    // the D-type printed forms carry the negated leading term
    CHECK(reference_resolvent(FamilyId::Deven)[0] == -(one / v));
    CHECK(reference_resolvent(FamilyId::Dodd)[0] == -(one / v));
    CHECK(reference_resolvent(FamilyId::E6)[0] == -(one / v));
    CHECK(reference_resolvent(FamilyId::E8).empty());
}

TEST_CASE("display names") {
    CHECK(family_display_name(FamilyId::A, 2).find("k=2") != std::string::npos);
    CHECK(family_display_name(FamilyId::E6, 0) == family_name(FamilyId::E6));
}

TEST_CASE("specialization keeps matrices constant") {
    FamilyRep sp = specialize(build_family(FamilyId::A, 2), std::nullopt, rat(3));
    for (const auto& m : sp.gen_mats)
        for (const auto& [k, val] : m.e) {
            (void)k;
            CHECK(val.is_constant());
        }
    std::set<std::string> names(sp.gen_names.begin(), sp.gen_names.end());
    CHECK(names.count("e1") == 1);
    CHECK(names.count("f1") == 1);
}
