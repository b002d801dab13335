#include "doctest.h"

#include "gha/dgla/dgla.hpp"
#include "gha/dgla/tensor_end.hpp"
#include "gha/weil/weil.hpp"

#include <random>

using namespace gha;

namespace {

SVec unit(int i, const Q& v = 1) { return SVec{{i, v}}; }

// 0 -> x0 --(2)--> x1 with x0 in degree 0, plus a free y in degree 1.
CochainComplex small_complex() {
    auto s = std::make_shared<GradedSpace>();
    s->add("x0", 0);
    s->add("x1", 1);
    s->add("y", 1);
    GradedMap d(s, s, 1);
    d.set(1, 0, 2);
    return CochainComplex(s, d);
}

}  // namespace

TEST_CASE("Lie fixtures validate and the corrupted one does not") {
    for (const auto& name : builtin_lie_names()) CHECK(builtin_lie(name).violations().empty());
    auto bad = builtin_lie("su2_corrupt");
    auto v = bad.violations();
    REQUIRE(!v.empty());
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("sl2 brackets") {
    auto g = builtin_lie("sl2");  // h, e, f
    CHECK(g.bracket({1, 0, 0}, {0, 1, 0}) == std::vector<Q>{0, 2, 0});
    CHECK(g.bracket({0, 0, 1}, {1, 0, 0}) == std::vector<Q>{0, 0, 2});
    CHECK(g.bracket({0, 1, 0}, {0, 0, 1}) == std::vector<Q>{1, 0, 0});
}

TEST_CASE("graded commutative products carry Koszul signs") {
    GCAlgebra R({{"a", 1, 0}, {"b", 1, 0}, {"u", 2, 1}}, 2);
    SVec a = R.gen(0), b = R.gen(1), u = R.gen(2);
    CHECK(R.mul(a, b) == scaled(R.mul(b, a), -1));
    CHECK(R.mul(a, a).empty());
    CHECK(R.mul(u, a) == R.mul(a, u));
    CHECK(R.mul(R.mul(u, u), u).empty());  // weight 3 is cut off
    CHECK(R.dim() == 4 * 3);
    // (ab)(ab) = 0 and a(bu) = (ab)u
    CHECK(R.mul(a, R.mul(b, u)) == R.mul(R.mul(a, b), u));
    // derivation sending a -> u, b -> 0, u -> 0: degree 1 so it anticommutes past a
    GradedMap D = R.derivation({u, SVec{}, SVec{}}, 1);
    CHECK(D.apply(R.mul(b, a)) == scaled(R.mul(b, u), -1));
    CHECK(D.apply(R.mul(a, b)) == R.mul(u, b));
}

TEST_CASE("Cartan DGLA") {
    auto g = builtin_lie("su2");
    auto T = tg(g);
    CHECK(T.dim() == 6);
    CHECK(verify_dgla(T).ok());
    CHECK(T.d.apply(unit(0)) == unit(3));          // d i(e1) = L(e1)
    CHECK(T.bracket(unit(3), unit(1)) == unit(2));  // [L1, i2] = i3
    CHECK(T.bracket(unit(1), unit(3)) == unit(2, -1));
    CHECK(T.bracket(unit(0), unit(1)).empty());
    CHECK(T.bracket(unit(3), unit(4)) == unit(5));
}

TEST_CASE("endomorphism DGLA of a complex") {
    auto V = small_complex();
    auto E = end_dgla(V);
    CHECK(E.dim() == 9);
    CHECK(verify_dgla(E).ok());
    SVec id = map_to_end_element(GradedMap::identity(V.space));
    CHECK(E.d.apply(id).empty());
    SVec del = map_to_end_element(V.d);
    CHECK(E.d.apply(del).empty());
    CHECK(mc_check(E, del).ok);
    // roundtrip
    GradedMap back = end_element_to_map(V, del, 1);
    CHECK(back == V.d);
}

TEST_CASE("tensor DGLA and the canonical Maurer-Cartan element") {
    for (const char* name : {"su2", "h3", "sl2"}) {
        auto g = builtin_lie(name);
        auto ce = ce_algebra(g);
        auto L = lie_as_dgla(g);
        auto T = tensor_dgla(*ce.A, L);
        CHECK(verify_dgla(T).ok());
        int n = g.dim();
        SVec alpha;
        for (int a = 0; a < n; ++a) alpha.emplace(ce.A->alg->gen_index(a) * n + a, 1);
        CHECK(mc_check(T, alpha).ok);
        if (std::string(name) != "h3") {
            SVec partial{{ce.A->alg->gen_index(0) * n + 0, 1}};
            CHECK_FALSE(mc_check(T, partial).ok);
        }
    }
}

TEST_CASE("verify_dgla rejects a bracket without Jacobi") {
    auto L = lie_as_dgla(builtin_lie("su2_corrupt"));
    auto rep = verify_dgla(L);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("mc_check refuses elements of the wrong degree") {
    auto T = tg(builtin_lie("su2"));
    CHECK_THROWS_AS(mc_check(T, unit(3)), InputError);
}

TEST_CASE("tensor elements: adjoint Maurer-Cartan element") {
    auto g = builtin_lie("su2");
    auto ce = ce_algebra(g);
    int n = g.dim();
    auto V = std::make_shared<GradedSpace>();
    for (int a = 0; a < n; ++a) V->add("v" + std::to_string(a), 0);
    GradedMap dV(V, V, 1);
    TensorElem alpha(ce.A->alg, V, V);
    for (int a = 0; a < n; ++a) {
        GradedMap ad(V, V, 0);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) ad.set(c, b, g.f(c, a, b));
        alpha = alpha + TensorElem::of(ce.A->alg, ce.e(a), ad);
    }
    CHECK(alpha.degree() == 1);
    CHECK(mc_residual(alpha, ce.A->d, dV).is_zero());
    auto bad = alpha.scaled(2);
    auto comps = mc_residual_components(bad, ce.A->d, dV);
    REQUIRE(comps.count(2) == 1);
    CHECK_FALSE(comps.at(2).is_zero());
}

TEST_CASE("tensor elements: composition sign and differential") {
    GCAlgebra R0({{"a", 1, 0}, {"b", 1, 0}}, 0);
    auto R = std::make_shared<GCAlgebra>(R0);
    auto V = std::make_shared<GradedSpace>();
    V->add("p", 0);
    V->add("q", 1);
    GradedMap up(V, V, 1), down(V, V, -1);
    up.set(1, 0, 1);
    down.set(0, 1, 1);
    // (1 ⊗ up)(a ⊗ down) = (-1)^{1·1} a ⊗ (up∘down)
    auto x = TensorElem::of(R, R->one(), up);
    auto y = TensorElem::of(R, R->gen(0), down);
    auto z = compose(x, y);
    CHECK(z == TensorElem::of(R, R->gen(0), up.compose(down)).scaled(-1));
    CHECK(compose(y, x) == TensorElem::of(R, R->gen(0), down.compose(up)));
    // d on Hom with dV = up: d(down) = up∘down + down∘up = id
    GradedMap dA(R->space(), R->space(), 1);
    auto dd = tensor_d(TensorElem::of(R, R->one(), down), dA, up, up);
    CHECK(dd == TensorElem::identity(R, V));
    // flatten roundtrip
    auto w = z + y.scaled(3);
    CHECK(TensorElem::unflatten(R, V, V, w.flatten()) == w);
}
