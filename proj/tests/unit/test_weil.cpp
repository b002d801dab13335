#include "doctest.h"

#include "gha/weil/weil.hpp"

#include <functional>

using namespace gha;

namespace {

SVec monomial(const GCAlgebra& R, std::initializer_list<int> gens, const Q& c = 1) {
    SVec v = R.one();
    for (int g : gens) v = R.mul(v, R.gen(g));
    return scaled(v, c);
}

// Dimension of the coadjoint invariants in S^k, computed on exponent vectors.
int invariant_dim_oracle(const LieAlgebra& g, int k) {
    int n = g.dim();
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            cur[i] = left;
            monos.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, k);
    std::map<std::vector<int>, int> pos;
    for (size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = static_cast<int>(i);
    std::vector<SVec> rows;
    for (int b = 0; b < n; ++b) {
        std::map<int, SVec> by_target;
        for (size_t m = 0; m < monos.size(); ++m)
            for (int a = 0; a < n; ++a) {
                if (monos[m][a] == 0) continue;
                for (int c = 0; c < n; ++c) {
                    Q f = g.f(a, b, c);
                    if (f == 0) continue;
                    auto e = monos[m];
                    e[a] -= 1;
                    e[c] += 1;
                    add_entry(by_target[pos.at(e)], static_cast<int>(m), -f * monos[m][a]);
                }
            }
        for (auto& kv : by_target) rows.push_back(kv.second);
    }
    return static_cast<int>(monos.size()) - rank(rows);
}

SVec casimir_su2(const SymmetricAlgebra& S) {
    const GCAlgebra& R = *S.A->alg;
    SVec c;
    for (int a = 0; a < 3; ++a) axpy(c, 1, R.mul(R.gen(a), R.gen(a)));
    return c;
}

// W(g ⊕ g) with g acting diagonally; the t's of either copy give a connection.
struct Doubled {
    GDGPtr A;
    AlgebraicConnection plain, shifted;
};

Doubled doubled(const LieAlgebra& g, int s) {
    int n = g.dim();
    std::vector<std::string> labels;
    for (int c = 0; c < 2; ++c)
        for (const auto& l : g.labels()) labels.push_back(l + "_" + std::to_string(c));
    LieAlgebra gg(g.name() + "^2", labels);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                gg.set(a, b, c, g.f(c, a, b));
                gg.set(n + a, n + b, n + c, g.f(c, a, b));
            }
    auto W = weil_algebra(gg, s);
    auto diag = [&](const std::vector<std::vector<SVec>>& gens) {
        std::vector<std::vector<SVec>> out(n);
        for (int a = 0; a < n; ++a) out[a] = gens[a];
        for (int a = 0; a < n; ++a)
            for (size_t k = 0; k < gens[a].size(); ++k) out[a][k] = add(gens[a][k], gens[n + a][k]);
        return out;
    };
    Doubled out;
    out.A = std::make_shared<GDGAlgebra>(
        make_gdg(W.A->alg, W.A->d_gen, diag(W.A->contraction_gen), diag(W.A->lie_gen)));
    out.plain = {g, out.A, {}};
    out.shifted = {g, out.A, {}};
    for (int a = 0; a < n; ++a) {
        out.plain.theta.push_back(W.t(a));
        out.shifted.theta.push_back(W.t(n + a));
    }
    return out;
}

}  // namespace

TEST_CASE("CE differential on generators") {
    auto ab = ce_algebra(builtin_lie("abelian3"));
    CHECK(ab.A->d.is_zero());
    auto su = ce_algebra(builtin_lie("su2"));
    const auto& R = *su.A->alg;
    CHECK(su.A->d.apply(su.e(0)) == monomial(R, {1, 2}, -1));
    CHECK(su.A->d.apply(su.e(1)) == monomial(R, {2, 0}, -1));
    auto sl = ce_algebra(builtin_lie("sl2"));
    CHECK(sl.A->d.compose(sl.A->d).is_zero());
    CHECK_THROWS_AS(ce_algebra(builtin_lie("su2_corrupt")), InputError);
}

TEST_CASE("Weil differential on generators") {
    auto ab = weil_algebra(builtin_lie("abelian3"), 2);
    for (int a = 0; a < 3; ++a) {
        CHECK(ab.A->d.apply(ab.t(a)) == ab.w(a));
        CHECK(ab.A->d.apply(ab.w(a)).empty());
    }
    auto W = weil_algebra(builtin_lie("su2"), 2);
    const auto& R = *W.A->alg;
    CHECK(W.A->d.apply(W.t(0)) == sub(W.w(0), monomial(R, {1, 2})));
    CHECK(W.A->d.apply(W.w(0)) == sub(R.mul(W.w(1), W.t(2)), R.mul(W.w(2), W.t(1))));
    CHECK(W.A->d.compose(W.A->d).is_zero());
}

TEST_CASE("Cartan identities on CE and Weil algebras") {
    for (const auto& name : builtin_lie_names()) {
        CAPTURE(name);
        auto g = builtin_lie(name);
        auto ce = ce_algebra(g);
        CHECK(cartan_report(*ce.A, g).ok());
        CHECK(derivation_failures(*ce.A).empty());
        auto W = weil_algebra(g, 3);
        CHECK(cartan_report(*W.A, g).ok());
    }
}

TEST_CASE("Weil algebra is acyclic below twice the truncation") {
    for (const auto& name : builtin_lie_names()) {
        CAPTURE(name);
        auto W = weil_algebra(builtin_lie(name), 3);
        Cohomology h = cohomology(CochainComplex(W.A->alg->space(), W.A->d));
        CHECK(h.dim(0) == 1);
        for (int k = 1; k <= 5; ++k) CHECK(h.dim(k) == 0);
    }
}

TEST_CASE("basic subspace and invariant polynomials agree with the coadjoint oracle") {
    for (const auto& name : builtin_lie_names()) {
        CAPTURE(name);
        auto g = builtin_lie(name);
        auto W = weil_algebra(g, 3);
        auto S = symmetric_algebra(g, 3);
        for (int k = 0; k <= 3; ++k) {
            int want = invariant_dim_oracle(g, k);
            CHECK(static_cast<int>(invariant_polynomials(S, k).size()) == want);
            CHECK(static_cast<int>(basic_subspace(*W.A, 2 * k).size()) == want);
            CHECK(basic_subspace(*W.A, 2 * k + 1).empty());
        }
    }
    auto S = symmetric_algebra(builtin_lie("su2"), 3);
    std::vector<int> dims;
    for (int k = 0; k <= 3; ++k) dims.push_back(static_cast<int>(invariant_polynomials(S, k).size()));
    CHECK(dims == std::vector<int>{1, 0, 1, 0});
    auto A = symmetric_algebra(builtin_lie("abelian3"), 2);
    CHECK(invariant_polynomials(A, 2).size() == 6);
    auto sl = symmetric_algebra(builtin_lie("sl2"), 2);
    CHECK(invariant_polynomials(sl, 2).size() == 1);
}

TEST_CASE("connections") {
    auto g = builtin_lie("su2");
    auto W = weil_algebra(g, 2);
    auto ce = ce_algebra(g);
    CHECK(connection_check(universal_connection(W)).ok());
    CHECK(connection_check(canonical_connection(ce)).ok());
    AlgebraicConnection zero{g, ce.A, std::vector<SVec>(3)};
    auto rep = connection_check(zero);
    CHECK_FALSE(rep.ok());
    CHECK_THROWS_AS(characteristic_hom(zero, 2), InputError);
    // wrong equivariance: swap two components
    auto swapped = canonical_connection(ce);
    std::swap(swapped.theta[0], swapped.theta[1]);
    CHECK_FALSE(connection_check(swapped).ok());
}

TEST_CASE("characteristic homomorphism") {
    auto g = builtin_lie("su2");
    auto W = weil_algebra(g, 2);
    auto cu = characteristic_hom(universal_connection(W), 2);
    CHECK(cu.map == GradedMap::identity(W.A->alg->space()));
    CHECK(characteristic_failures(cu).empty());
    auto ce = ce_algebra(g);
    auto cc = characteristic_hom(canonical_connection(ce), 2);
    for (int a = 0; a < 3; ++a) {
        CHECK(cc.gen_images[a] == ce.e(a));
        CHECK(cc.gen_images[3 + a].empty());
    }
    CHECK(characteristic_failures(cc).empty());
    auto D = doubled(g, 2);
    CHECK(cartan_report(*D.A, g).ok());
    CHECK(connection_check(D.shifted).ok());
    CHECK(characteristic_failures(characteristic_hom(D.shifted, 2)).empty());
}

TEST_CASE("Chern-Weil classes") {
    auto g = builtin_lie("su2");
    auto S = symmetric_algebra(g, 2);
    SVec cas = casimir_su2(S);
    auto W = weil_algebra(g, 2);
    auto r = chern_weil(universal_connection(W), S, cas);
    CHECK(r.closed);
    CHECK(r.basic);
    CHECK(r.element == polynomial_in_weil(S, W, cas));
    CHECK(r.cohomology_dim == 1);
    REQUIRE(r.class_coords.size() == 1);
    CHECK(r.class_coords[0] != 0);

    auto ce = ce_algebra(g);
    auto z = chern_weil(canonical_connection(ce), S, cas);
    CHECK(z.element.empty());

    SVec bad = S.A->alg->gen(0);
    CHECK_THROWS_AS(chern_weil(universal_connection(W), S, bad), InputError);

    // the class does not depend on the connection
    auto D = doubled(g, 2);
    auto r1 = chern_weil(D.plain, S, cas);
    auto r2 = chern_weil(D.shifted, S, cas);
    CHECK(r1.closed);
    CHECK(r2.closed);
    CHECK(r1.basic);
    CHECK(r2.basic);
    CHECK(r1.element != r2.element);
    CHECK(r1.cohomology_dim == 1);
    CHECK(r1.class_coords == r2.class_coords);
}

TEST_CASE("Chern-Weil is multiplicative") {
    auto g = builtin_lie("u2");
    auto S = symmetric_algebra(g, 2);
    auto W = weil_algebra(g, 2);
    auto inv1 = invariant_polynomials(S, 1);
    REQUIRE(inv1.size() == 1);
    SVec p = inv1[0];
    SVec pp = S.A->alg->mul(p, p);
    auto th = universal_connection(W);
    auto a = chern_weil(th, S, p);
    auto b = chern_weil(th, S, pp);
    CHECK(b.element == W.A->alg->mul(a.element, a.element));
}
