#include "doctest.h"

#include "gha/core/matrix.hpp"
#include "gha/infloc/infloc.hpp"

#include <random>

using namespace gha;

namespace {

// W ⊗ CE(g) with the diagonal contractions and Lie derivatives and the
// untwisted differential; its basic cohomology is the equivariant cohomology
// of CE(g), computed without any Maurer-Cartan twisting.
std::map<int, int> diagonal_model_cohomology(const LieAlgebra& g, int s, int top) {
    int n = g.dim();
    std::vector<Generator> gens;
    for (int a = 0; a < n; ++a) gens.push_back({"t" + std::to_string(a), 1, 0});
    for (int a = 0; a < n; ++a) gens.push_back({"w" + std::to_string(a), 2, 1});
    for (int a = 0; a < n; ++a) gens.push_back({"e" + std::to_string(a), 1, 0});
    auto alg = std::make_shared<GCAlgebra>(gens, s);
    std::vector<SVec> t(n), w(n), e(n);
    for (int a = 0; a < n; ++a) {
        t[a] = alg->gen(a);
        w[a] = alg->gen(n + a);
        e[a] = alg->gen(2 * n + a);
    }
    auto coad = [&](int a, int b, const std::vector<SVec>& x) {
        SVec o;
        for (int c = 0; c < n; ++c)
            if (g.f(a, b, c) != 0) axpy(o, -g.f(a, b, c), x[c]);
        return o;
    };
    std::vector<SVec> d(3 * n);
    for (int a = 0; a < n; ++a) {
        d[a] = w[a];
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Q f = g.f(a, b, c);
                if (f == 0) continue;
                axpy(d[a], Q(-1, 2) * f, alg->mul(t[b], t[c]));
                axpy(d[n + a], f, alg->mul(w[b], t[c]));
                axpy(d[2 * n + a], Q(-1, 2) * f, alg->mul(e[b], e[c]));
            }
    }
    std::vector<std::vector<SVec>> ig(n, std::vector<SVec>(3 * n)), lg(n, std::vector<SVec>(3 * n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            if (a == b) {
                ig[b][a] = alg->one();
                ig[b][2 * n + a] = alg->one();
            }
            lg[b][a] = coad(a, b, t);
            lg[b][n + a] = coad(a, b, w);
            lg[b][2 * n + a] = coad(a, b, e);
        }
    GDGAlgebra A = make_gdg(alg, d, ig, lg);
    REQUIRE(cartan_report(A, g).ok());
    Cohomology h = cohomology(basic_complex(A, -1, top + 1).complex);
    std::map<int, int> out;
    for (int k = 0; k <= top; ++k) out[k] = h.dim(k);
    return out;
}

TensorElem rand_morph(const BasicObject& a, const BasicObject& b, int k, std::mt19937_64& rng) {
    return random_basic_morphism(a, b, k, rng);
}

}  // namespace

TEST_CASE("trivial object and its endomorphisms") {
    WeilAlgebra W = weil_algebra(builtin_lie("su2"), 3);
    BasicObject one = trivial_object(W);
    CHECK(one.report.ok());
    BasicHomComplex hc = hom_complex(one, one);
    CHECK(hc.square_zero);
    CHECK(hc.basic_closed);
    for (int k = hc.lo; k <= hc.hi; ++k) {
        int basic = static_cast<int>(basic_subspace(*W.A, k).size());
        CHECK(static_cast<int>(basic_morphisms(one, one, k).size()) == basic);
        CHECK(hc.cohomology[k] == basic);
    }
    for (const auto& phi : hc.basis) CHECK(hom_differential(one, one, phi).is_zero());
}

TEST_CASE("gauss-manin objects are valid") {
    for (const auto& name : builtin_lie_names()) {
        BasicObject gm = gauss_manin(builtin_lie(name), 2);
        CHECK_MESSAGE(gm.report.ok(), name);
        CEAlgebra ce = ce_algebra(builtin_lie(name));
        for (int a = 0; a < ce.g.dim(); ++a) {
            CHECK(gm.L[a] == ce.A->lie_derivative[a]);
            CHECK(gm.alpha.coefficient(gm.W.A->alg->gen_index(gm.W.n() + a), -1) ==
                  ce.A->contraction[a].scaled(-1));
        }
    }
    CHECK_THROWS_AS(gauss_manin(builtin_lie("su2"), 1), InputError);
}

TEST_CASE("abelian gauss-manin: both residual terms vanish separately") {
    BasicObject gm = gauss_manin(builtin_lie("abelian3"), 3);
    CHECK(tensor_d(gm.alpha, gm.W.A->d, gm.V.d, gm.V.d).is_zero());
    CHECK(compose(gm.alpha, gm.alpha).is_zero());
    CHECK(gm.alpha.partial(1).is_zero());
}

TEST_CASE("objects failing the structure identities are rejected") {
    WeilAlgebra W = weil_algebra(builtin_lie("su2"), 3);
    BasicObject gm = gauss_manin(W);
    const AlgPtr& R = W.A->alg;
    CEAlgebra ce = ce_algebra(W.g);

    SUBCASE("without the curvature term the MC equation fails") {
        ObjectReport r = check_object(W, gm.V, gm.alpha.partial(1));
        CHECK_FALSE(r.mc_ok);
        CHECK(r.basic_ok);
        CHECK_THROWS_AS(make_object(W, gm.V, gm.alpha.partial(1)), InputError);
    }
    SUBCASE("a t-quadratic term breaks the contraction identity") {
        TensorElem extra = TensorElem::of(R, R->mul(W.t(0), W.t(1)), ce.A->contraction[2]);
        ObjectReport r = check_object(W, gm.V, gm.alpha + extra);
        CHECK_FALSE(r.basic_ok);
        bool mentions = false;
        for (const auto& f : r.failures) mentions = mentions || f.find("i_1") != std::string::npos;
        CHECK(mentions);
        CHECK_THROWS_AS(make_object(W, gm.V, gm.alpha + extra), InputError);
    }
    CHECK_THROWS_AS(make_object(W, gm.V, gm.alpha.scaled(2)), InputError);
}

TEST_CASE("total differential squares to zero and keeps basics basic") {
    for (const char* name : {"su2", "h3", "sl2"}) {
        WeilAlgebra W = weil_algebra(builtin_lie(name), 3);
        BasicObject gm = gauss_manin(W), one = trivial_object(W);
        BasicHomComplex hc = hom_complex(one, gm);
        CHECK(hc.square_zero);
        CHECK(hc.basic_closed);
    }
}

TEST_CASE("sections of gauss-manin match the diagonal model") {
    for (const char* name : {"su2", "h3", "abelian3"}) {
        LieAlgebra g = builtin_lie(name);
        WeilAlgebra W = weil_algebra(g, 3);
        BasicHomComplex hc = hom_complex(trivial_object(W), gauss_manin(W));
        CHECK(hc.lo == 0);
        CHECK(hc.hi == 6);
        auto oracle = diagonal_model_cohomology(g, 3, hc.hi);
        for (int k = hc.lo; k <= hc.hi; ++k) CHECK_MESSAGE(hc.cohomology[k] == oracle[k], name << " degree " << k);
    }
}

TEST_CASE("composition: identity, associativity, Leibniz, basic closure") {
    std::mt19937_64 rng(11);
    WeilAlgebra W = weil_algebra(builtin_lie("su2"), 3);
    BasicObject one = trivial_object(W), gm = gauss_manin(W);
    std::vector<BasicObject> objs{one, gm};
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const BasicObject& A = objs[trial % 2];
        const BasicObject& B = objs[(trial / 2) % 2];
        const BasicObject& C = objs[(trial / 4) % 2];
        int k1 = trial % 4, k2 = (trial * 3) % 5;
        TensorElem phi = rand_morph(A, B, k1, rng);
        TensorElem psi = rand_morph(B, C, k2, rng);
        TensorElem chi = rand_morph(C, A, 2, rng);
        CHECK(compose_morphisms(identity_morphism(B), phi) == phi);
        CHECK(compose_morphisms(phi, identity_morphism(A)) == phi);
        CHECK(compose(chi, compose(psi, phi)) == compose(compose(chi, psi), phi));
        TensorElem lhs = hom_differential(A, C, compose(psi, phi));
        TensorElem rhs = compose(hom_differential(B, C, psi), phi);
        TensorElem second = compose(psi, hom_differential(A, B, phi));
        rhs = (k2 % 2 == 0) ? rhs + second : rhs - second;
        CHECK(lhs == rhs);
        CHECK(is_basic(A, C, compose(psi, phi)));
        CHECK(is_basic(A, B, hom_differential(A, B, phi)));
        CHECK(hom_differential(A, B, hom_differential(A, B, phi)).is_zero());
        checked += !phi.is_zero() && !psi.is_zero();
    }
    CHECK(checked >= 4);
    CHECK_THROWS_AS(compose_morphisms(rand_morph(one, gm, 0, rng), rand_morph(one, gm, 0, rng)), InputError);
}

TEST_CASE("weil-degree spectral sequence of sections") {
    WeilAlgebra W = weil_algebra(builtin_lie("su2"), 3);
    BasicHomComplex hc = hom_complex(trivial_object(W), gauss_manin(W));
    SpectralPages sp = hom_spectral(hc, 5);
    auto at = [&](int r, int p, int q) {
        auto it = sp.pages[r].find({p, q});
        return it == sp.pages[r].end() ? 0 : it->second;
    };
    // E_2 = H(Wg_bas) ⊗ H(CE(su2)): invariants in degrees 0, 4 times classes in 0, 3
    CHECK(at(2, 0, 0) == 1);
    CHECK(at(2, 0, 3) == 1);
    CHECK(at(2, 4, 0) == 1);
    CHECK(at(2, 2, 0) == 0);
    CHECK(at(5, 0, 3) == 0);
    CHECK(at(5, 4, 0) == 0);
}

TEST_CASE("extensions") {
    std::mt19937_64 rng(5);
    WeilAlgebra W = weil_algebra(builtin_lie("su2"), 3);
    BasicObject one = trivial_object(W);

    SUBCASE("zero class gives a direct sum with a shifted line") {
        BasicObject gm = gauss_manin(W);
        BasicObject e = extension(gm, zero_morphism(gm, one), 2);
        CHECK(e.dim() == gm.dim() + 1);
        CHECK(e.space()->degree(gm.dim()) == -1);
        CHECK(e.alpha.terms() == gm.alpha.terms());
    }
    SUBCASE("trivial object in degree 3 extended by the Casimir") {
        BasicObject v = trivial_object(W, 3);
        auto gammas = basic_morphisms(v, one, 1);
        REQUIRE(gammas.size() == 1);
        BasicObject e = extension(v, gammas[0], 1);
        CHECK(e.dim() == 2);
        CHECK(e.report.ok());
    }
    SUBCASE("non-closed class is rejected") {
        BasicObject gm = gauss_manin(W);
        auto cand = basic_morphisms(gm, one, 0);
        bool rejected = false;
        for (const auto& c : cand)
            if (!hom_differential(gm, one, c).is_zero()) {
                CHECK_THROWS_AS(extension(gm, c, 0), InputError);
                rejected = true;
            }
        CHECK(rejected);
    }
    SUBCASE("gauge moves intertwine") {
        int done = 0;
        for (const char* name : {"su2", "h3"}) {
            WeilAlgebra Wn = weil_algebra(builtin_lie(name), 3);
            BasicObject gm = gauss_manin(Wn), line = trivial_object(Wn);
            BasicHomComplex hc = hom_complex(gm, line);
            for (int l = hc.lo + 1; l <= hc.hi; ++l) {
                TensorElem gamma = zero_morphism(gm, line);
                for (const auto& z : hom_cocycles(hc, l)) gamma = gamma + z.scaled(random_small_rational(rng));
                TensorElem eta = rand_morph(gm, line, l - 1, rng);
                GaugeCheck gc = extension_gauge_check(gm, gamma, eta, l);
                CHECK(gc.intertwines);
                CHECK(gc.inverse_ok);
                CHECK(gc.basic);
                done += !hom_differential(gm, line, eta).is_zero();
            }
        }
        CHECK(done >= 4);
    }
}

TEST_CASE("chern-weil functor") {
    std::mt19937_64 rng(3);
    LieAlgebra g = builtin_lie("su2");
    WeilAlgebra W = weil_algebra(g, 3);
    BasicObject one = trivial_object(W), gm = gauss_manin(W);

    SUBCASE("universal connection acts as the identity") {
        ChernWeilFunctor F = cw_functor(universal_connection(W), 3);
        CWObject o = F.on_object(gm);
        CHECK(o.alpha.terms() == gm.alpha.terms());
        TensorElem phi = rand_morph(one, gm, 3, rng);
        CHECK(F.on_morphism(phi).terms() == phi.terms());
    }
    SUBCASE("canonical connection on CE kills the curvature term") {
        CEAlgebra ce = ce_algebra(g);
        ChernWeilFunctor F = cw_functor(canonical_connection(ce), 3);
        CWObject o = F.on_object(gm);
        CHECK(o.mc_ok);
        CHECK(o.basic_ok);
        TensorElem expect(ce.A->alg, gm.space(), gm.space());
        for (int a = 0; a < g.dim(); ++a) expect = expect + TensorElem::of(ce.A->alg, ce.e(a), ce.A->lie_derivative[a]);
        CHECK(o.alpha.terms() == expect.terms());
    }
    SUBCASE("functor laws") {
        CEAlgebra ce = ce_algebra(g);
        for (const auto& theta : {universal_connection(W), canonical_connection(ce)}) {
            ChernWeilFunctor F = cw_functor(theta, 3);
            std::vector<BasicObject> objs{one, gm};
            std::vector<CWObject> imgs{F.on_object(one), F.on_object(gm)};
            for (const auto& o : imgs) CHECK(o.mc_ok);
            for (int trial = 0; trial < 8; ++trial) {
                int i = trial % 2, j = (trial / 2) % 2, m = (trial / 4) % 2;
                TensorElem phi = rand_morph(objs[i], objs[j], trial % 4, rng);
                TensorElem psi = rand_morph(objs[j], objs[m], 1 + trial % 3, rng);
                CHECK(F.on_morphism(hom_differential(objs[i], objs[j], phi)) ==
                      F.differential(imgs[i], imgs[j], F.on_morphism(phi)));
                CHECK(F.on_morphism(compose(psi, phi)) == compose(F.on_morphism(psi), F.on_morphism(phi)));
            }
            CHECK(F.on_morphism(identity_morphism(gm)) == TensorElem::identity(theta.target->alg, gm.space()));
        }
    }
    SUBCASE("invalid connection is rejected") {
        CEAlgebra ce = ce_algebra(g);
        AlgebraicConnection bad = canonical_connection(ce);
        bad.theta[0] = scaled(bad.theta[0], 2);
        CHECK_THROWS_AS(cw_functor(bad, 3), InputError);
    }
}
