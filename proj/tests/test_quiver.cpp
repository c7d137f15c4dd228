#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgaw/quiver.h"

using namespace dgaw;

namespace {

// independent oracle for the A2 Ginzburg differential: expand
// d z_v = e_v (a a* - a* a) e_v by endpoint bookkeeping
void check_a2_by_hand(Field f) {
    Quiver Q;
    Q.vertices = {"1", "2"};
    Q.arrows.push_back({"a", "1", "2"});
    Potential w(f);
    DgaPresentation G = ginzburg(Q, w, f);
    const GenSet& gs = G.gens();
    int a = gs.index("a"), as = gs.index("a*");
    // d z1 = -a* a   (loop at the source of a)
    NCPoly dz1(f);
    dz1.add_term(Word{{as, a}, -1}, -Scalar::one(f));
    CHECK(G.diff(gs.index("z1")) == dz1);
    // d z2 = a a*
    NCPoly dz2(f);
    dz2.add_term(Word{{a, as}, -1}, Scalar::one(f));
    CHECK(G.diff(gs.index("z2")) == dz2);
    // zero potential: every reversed arrow is closed
    CHECK(G.diff(as).is_zero());
    CHECK(G.check_d_squared().empty());
    CHECK(G.check_degrees().empty());
}

}  // namespace

TEST_CASE("Ginzburg of the A2 quiver with zero potential") {
    check_a2_by_hand(Field::gf2());
    check_a2_by_hand(Field::rational());
}

TEST_CASE("cyclic derivative of w_{2,2,2}") {
    Field f = Field::gf2();
    auto [Q, w] = cy3_from_quadratic(builtin_Apqr(2, 2, 2, f));
    CHECK(potential_is_reduced(w));
    CHECK(w.terms().size() == 4);

    // d/d a1 has monomials c2 b2 and c3 b3  (paper order b2c2 + b3c3)
    auto da1 = cyclic_derivative(Q, w, "a1");
    REQUIRE(da1.size() == 2);
    auto name = [&](const std::vector<int>& ww) {
        std::string s;
        for (int x : ww) s += Q.arrows[static_cast<size_t>(x)].id + " ";
        return s;
    };
    std::vector<std::string> names;
    for (auto& [c, ww] : da1) names.push_back(name(ww));
    std::sort(names.begin(), names.end());
    CHECK(names[0] == "c2 b2 ");
    CHECK(names[1] == "c3 b3 ");

    // d/d c3: monomials b3 a1 and b3 a2 over GF(2)
    auto dc3 = cyclic_derivative(Q, w, "c3");
    REQUIRE(dc3.size() == 2);
    names.clear();
    for (auto& [c, ww] : dc3) names.push_back(name(ww));
    std::sort(names.begin(), names.end());
    CHECK(names[0] == "b3 a1 ");
    CHECK(names[1] == "b3 a2 ");

    // derivative of the zero potential
    Potential zero(f);
    CHECK(cyclic_derivative(Q, zero, "a1").empty());
}

TEST_CASE("potential reducedness") {
    Field f = Field::gf2();
    Quiver Q;
    Q.vertices = {"1", "2"};
    Q.arrows.push_back({"a", "1", "2"});
    Q.arrows.push_back({"b", "2", "1"});
    Potential w(f);
    CHECK(potential_is_reduced(w));  // empty term list
    w.add_term(Q, Scalar::one(f), std::vector<std::string>{"a", "b"});
    CHECK(!potential_is_reduced(w));
}

TEST_CASE("builtin_Apqr shape") {
    Field f = Field::gf2();
    auto p222 = builtin_Apqr(2, 2, 2, f);
    CHECK(p222.quiver.vertices.size() == 5);
    CHECK(p222.quiver.arrows.size() == 5);
    CHECK(p222.relations.size() == 3);
    auto p322 = builtin_Apqr(3, 2, 2, f);
    CHECK(p322.quiver.arrows.size() == 6);  // adds x1
    CHECK(p322.quiver.arrow_index("x1") >= 0);
    CHECK(builtin_Apqr(4, 3, 2, f).quiver.vertices.size() == 8);
    CHECK_THROWS_AS(builtin_Apqr(1, 2, 2, f), error);
}

TEST_CASE("G_{2,2,2} differential table matches the worked computation") {
    for (Field f : {Field::gf2(), Field::rational()}) {
        DgaPresentation G = builtin_ginzburg_pqr(2, 2, 2, f);
        CHECK(G.check_d_squared().empty());
        CHECK(G.check_degrees().empty());
        const GenSet& gs = G.gens();
        // 8 arrows + 8 duals + 5 loops
        CHECK(gs.size() == 21);
        auto txt = [&](const char* g) { return G.diff(gs.index(g)).str(gs); };
        // product order: rightmost factor acts first (paper prints reversed)
        CHECK(txt("a1*") == "c2 b2 + c3 b3");
        CHECK(txt("b1*") == "a2 c1");
        CHECK(txt("b2*") == "a1 c2");
        CHECK(txt("c1*") == "b1 a2");
        CHECK(txt("c2*") == "b2 a1");
        if (f.kind == FieldKind::GF2) {
            CHECK(txt("a2*") == "c1 b1 + c3 b3");
            CHECK(txt("b3*") == "a1 c3 + a2 c3");
            CHECK(txt("c3*") == "b3 a1 + b3 a2");
            CHECK(txt("zA") == "c2 c2* + c1 c1* + c3 c3* + a1* a1 + a2* a2");
            CHECK(txt("zB") == "a1 a1* + a2 a2* + b1* b1 + b2* b2 + b3* b3");
            CHECK(txt("zP1") == "b1 b1* + c1* c1");
            CHECK(txt("zQ1") == "b2 b2* + c2* c2");
            CHECK(txt("zR1") == "b3 b3* + c3* c3");
        } else {
            CHECK(txt("a2*") == "c1 b1 - c3 b3");
            CHECK(txt("c3*") == "b3 a1 - b3 a2");
        }
    }
}

TEST_CASE("ginzburg differential raises word length by exactly one for cubic w") {
    Field f = Field::rational();
    DgaPresentation G = builtin_ginzburg_pqr(3, 2, 2, f);
    for (int g = 0; g < G.gens().size(); ++g)
        for (const auto& [w, c] : G.diff(g).terms()) CHECK(w.length() == 2);
}

TEST_CASE("sum over arrows of a * dw/da recovers the cyclic sums of w") {
    // termwise: total monomial count of sum_a a d°w/da equals sum of term
    // lengths (with coefficients), as formal cyclic sums
    Field f = Field::rational();
    auto [Q, w] = cy3_from_quadratic(builtin_Apqr(2, 2, 3, f));
    size_t total = 0;
    for (const auto& a : Q.arrows) total += cyclic_derivative(Q, w, a.id).size();
    size_t want = 0;
    for (const auto& t : w.terms()) want += t.arrows.size();
    CHECK(total == want);
}

TEST_CASE("random quivers with reduced cubic potentials satisfy d^2 = 0") {
    std::mt19937 rng(11);
    for (Field f : {Field::gf2(), Field::rational()}) {
        for (int trial = 0; trial < 100; ++trial) {
            int nv = 2 + static_cast<int>(rng() % 3);
            Quiver Q;
            for (int v = 0; v < nv; ++v) Q.vertices.push_back("v" + std::to_string(v));
            int na = 2 + static_cast<int>(rng() % 4);
            for (int a = 0; a < na; ++a)
                Q.arrows.push_back({"g" + std::to_string(a), Q.vertices[rng() % nv],
                                    Q.vertices[rng() % nv]});
            // random reduced cubic potential: sample composable closed triples
            Potential w(f);
            for (int tries = 0; tries < 20; ++tries) {
                int a1 = static_cast<int>(rng() % na);
                std::vector<int> cands2, cands3;
                for (int a2 = 0; a2 < na; ++a2)
                    if (Q.arrows[a2].src == Q.arrows[a1].tgt) cands2.push_back(a2);
                if (cands2.empty()) continue;
                int a2 = cands2[rng() % cands2.size()];
                for (int a3 = 0; a3 < na; ++a3)
                    if (Q.arrows[a3].src == Q.arrows[a2].tgt && Q.arrows[a3].tgt == Q.arrows[a1].src)
                        cands3.push_back(a3);
                if (cands3.empty()) continue;
                int a3 = cands3[rng() % cands3.size()];
                long cv = f.kind == FieldKind::GF2 ? 1 : static_cast<long>(rng() % 5) - 2;
                w.add_term(Q, Scalar(f, cv), std::vector<int>{a3, a2, a1});
            }
            DgaPresentation G = ginzburg(Q, w, f);
            CHECK(G.check_d_squared().empty());
            CHECK(G.check_degrees().empty());
        }
    }
}

TEST_CASE("cy3_from_quadratic on a single relation over an A3 path") {
    Field f = Field::gf2();
    Quiver Q;
    Q.vertices = {"1", "2", "3"};
    Q.arrows.push_back({"a", "1", "2"});
    Q.arrows.push_back({"b", "2", "3"});
    QuadraticPresentation pres;
    pres.quiver = Q;
    pres.field = f;
    pres.relations.push_back({"y", {{Scalar::one(f), {"b", "a"}}}});
    auto [Q2, w] = cy3_from_quadratic(pres);
    CHECK(Q2.arrows.size() == 3);
    CHECK(Q2.arrows[2].id == "y");
    CHECK(Q2.arrows[2].src == "3");
    CHECK(Q2.arrows[2].tgt == "1");
    REQUIRE(w.terms().size() == 1);
    CHECK(w.terms()[0].arrows.size() == 3);
    // empty relation list: potential 0
    pres.relations.clear();
    auto [Q3, w0] = cy3_from_quadratic(pres);
    CHECK(w0.terms().empty());
    CHECK(Q3.arrows.size() == 2);
}

TEST_CASE("quiver json round trip") {
    Field f = Field::rational();
    auto [Q, w] = cy3_from_quadratic(builtin_Apqr(2, 3, 2, f));
    std::string js = quiver_to_json(Q, w);
    auto [Q2, w2] = quiver_from_json(js, f);
    CHECK(quiver_to_json(Q2, w2) == js);
}

TEST_CASE("sign vector support is enforced") {
    Field f = Field::rational();
    auto [Q, w] = cy3_from_quadratic(builtin_Apqr(2, 2, 2, f));
    SignVector sv;
    sv.eps[{"a1*", "c3 b3"}] = -1;
    DgaPresentation G = ginzburg(Q, w, f, &sv);
    const GenSet& gs = G.gens();
    CHECK(G.diff(gs.index("a1*")).str(gs) == "c2 b2 - c3 b3");
    SignVector bad;
    bad.eps[{"a1*", "nonexistent"}] = -1;
    CHECK_THROWS_AS(ginzburg(Q, w, f, &bad), error);
}
