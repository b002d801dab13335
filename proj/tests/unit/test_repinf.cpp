#include "doctest.h"

#include "gha/core/linalg.hpp"
#include "gha/repinf/repinf.hpp"

#include <random>

using namespace gha;

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int find_seq(const SimplicialSet& K, int p, const std::vector<int>& sq) {
    for (int x = 0; x < K.size(p); ++x)
        if (K.sequences[p][x] == sq) return x;
    return -1;
}

SpacePtr space_in_degrees(const std::vector<int>& degs, const std::string& tag) {
    auto sp = std::make_shared<GradedSpace>();
    for (size_t i = 0; i < degs.size(); ++i) sp->add(tag + std::to_string(i), degs[i]);
    return sp;
}

// Flat bundle on an ordered complex: the same two-term complex at each vertex and
// invertible chain maps along edges, composed along triangles.
RepUpToHomotopy local_system(const SSetPtr& K) {
    auto sp = space_in_degrees({0, 1}, "e");
    GradedMap d(sp, sp, 1);
    d.set(1, 0, Q(2));
    RepUpToHomotopy R;
    R.K = K;
    for (int v = 0; v < K->size(0); ++v) R.E.push_back(sp);
    auto transport = [&](int a, int b) {
        GradedMap g = GradedMap::identity(sp);
        g.set(0, 0, Q(a + 1) / (b + 1));
        g.set(1, 1, Q(a + 1) / (b + 1));
        return g;
    };
    for (int p = 0; p <= K->pmax; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < K->size(p); ++x) {
            if (p == 0)
                c.value.push_back(d);
            else if (p == 1)
                c.value.push_back(transport(K->sequences[1][x][0], K->sequences[1][x][1]));
            else
                c.value.emplace_back(sp, sp, 1 - p);
        }
        R.F.push_back(std::move(c));
    }
    return R;
}

void check_hom_algebra(const RepUpToHomotopy& A, const RepUpToHomotopy& B, const RepUpToHomotopy& C,
                       std::mt19937_64& rng) {
    for (int n = -2; n <= 2; ++n) {
        RepMorphism phi = random_rep_morphism(A, B, n, rng);
        CHECK(is_zero(rep_hom_differential(A, B, rep_hom_differential(A, B, phi))));
        for (int m = -1; m <= 1; ++m) {
            RepMorphism psi = random_rep_morphism(B, C, m, rng);
            RepMorphism lhs = rep_hom_differential(A, C, compose_rep_morphisms(B, psi, phi));
            RepMorphism t1 = compose_rep_morphisms(B, rep_hom_differential(B, C, psi), phi);
            RepMorphism t2 = compose_rep_morphisms(B, psi, rep_hom_differential(A, B, phi));
            CHECK(lhs == (m % 2 == 0 ? t1 + t2 : t1 - t2));
            RepMorphism chi = random_rep_morphism(C, A, 1, rng);
            CHECK(compose_rep_morphisms(C, chi, compose_rep_morphisms(B, psi, phi)) ==
                  compose_rep_morphisms(B, compose_rep_morphisms(C, chi, psi), phi));
        }
        CHECK(compose_rep_morphisms(B, identity_rep_morphism(B), phi) == phi);
        CHECK(compose_rep_morphisms(A, phi, identity_rep_morphism(A)) == phi);
    }
}

}  // namespace

TEST_CASE("simplicial identities hold for the builders") {
    for (const auto& K : {standard_simplex(0, 3), standard_simplex(1, 4), standard_simplex(2, 4),
                          standard_simplex(3, 3), boundary_triangle(3), cyclic_nerve(2, 4), cyclic_nerve(3, 3)}) {
        CAPTURE(K->name);
        CHECK(simplicial_failures(*K).empty());
    }
}

TEST_CASE("simplex counts") {
    auto D = standard_simplex(2, 4);
    for (int p = 0; p <= 4; ++p) CHECK(D->size(p) == binom(p + 3, p + 1));
    auto N = cyclic_nerve(3, 3);
    for (int p = 0, e = 1; p <= 3; ++p, e *= 3) CHECK(N->size(p) == e);
    auto B = boundary_triangle(2);
    CHECK(B->size(0) == 3);
    CHECK(B->size(1) == 6);
    CHECK(B->size(2) == 3 + 3 * 2);
    for (int x = 0; x < B->size(2); ++x) CHECK(B->degenerate(2, x));
}

TEST_CASE("degenerate simplices are the images of degeneracies") {
    auto D = standard_simplex(2, 3);
    for (int p = 0; p <= 3; ++p)
        for (int x = 0; x < D->size(p); ++x) {
            const auto& sq = D->sequences[p][x];
            bool repeated = std::adjacent_find(sq.begin(), sq.end()) != sq.end();
            CHECK(D->degenerate(p, x) == repeated);
        }
    auto N = cyclic_nerve(2, 2);
    for (int x = 0; x < N->size(2); ++x) {
        bool has_zero = N->labels[2][x].find('0') != std::string::npos;
        CHECK(N->degenerate(2, x) == has_zero);
    }
}

TEST_CASE("front and back faces") {
    auto D = standard_simplex(3, 3);
    int top = find_seq(*D, 3, {0, 1, 2, 3});
    CHECK(D->sequences[1][D->front(3, top, 1)] == std::vector<int>{0, 1});
    CHECK(D->sequences[2][D->back(3, top, 2)] == std::vector<int>{1, 2, 3});
    CHECK(D->sequences[0][D->front(3, top, 0)] == std::vector<int>{0});
    CHECK(D->sequences[0][D->back(3, top, 0)] == std::vector<int>{3});
    for (int k = 0; k <= 3; ++k) CHECK(D->vertex(3, top, k) == k);
    CHECK(D->front(3, top, 3) == top);
    CHECK_THROWS_AS(D->front(3, top, 4), InputError);

    auto N = cyclic_nerve(3, 3);
    int x = -1;
    for (int y = 0; y < N->size(3); ++y)
        if (N->labels[3][y] == "(1,2,1)") x = y;
    REQUIRE(x >= 0);
    CHECK(N->labels[1][N->front(3, x, 1)] == "(1)");
    CHECK(N->labels[2][N->back(3, x, 2)] == "(2,1)");
}

TEST_CASE("vertex maps and simplicial map checks") {
    auto D1 = standard_simplex(1, 3), D2 = standard_simplex(2, 3);
    SimplicialMap inc = vertex_map(D1, D2, {0, 2});
    CHECK(simplicial_map_failures(inc).empty());
    SimplicialMap collapse = vertex_map(D2, D1, {0, 0, 1});
    CHECK(simplicial_map_failures(collapse).empty());
    CHECK_THROWS_AS(vertex_map(D1, D2, {2, 0}), InputError);
    CHECK_THROWS_AS(vertex_map(D2, boundary_triangle(3), {0, 1, 2}), InputError);

    SimplicialMap bad = inc;
    bad.f[1][find_seq(*D1, 1, {0, 1})] = find_seq(*D2, 1, {0, 1});
    CHECK_FALSE(simplicial_map_failures(bad).empty());
    CHECK(simplicial_map_failures(identity_map(D2)).empty());
}

TEST_CASE("cup product on an edge") {
    auto D = standard_simplex(1, 2);
    auto a = space_in_degrees({0}, "a"), b = space_in_degrees({0, 0}, "b");
    Cochain F{1, {}}, G{0, {}};
    for (int x = 0; x < D->size(1); ++x) {
        GradedMap m(a, a, 0);
        m.set(0, 0, Q(x + 2));
        F.value.push_back(m);
    }
    for (int v = 0; v < D->size(0); ++v) {
        GradedMap m(a, a, 0);
        m.set(0, 0, Q(10 * (v + 1)));
        G.value.push_back(m);
    }
    Cochain FG = cup(*D, F, G), GF = cup(*D, G, F);
    int e = find_seq(*D, 1, {0, 1});
    CHECK(FG.p == 1);
    CHECK(FG.value[e].at(0, 0) == Q(e + 2) * 20);  // F(01) G(1)
    CHECK(GF.value[e].at(0, 0) == Q(10) * (e + 2));  // G(0) F(01)
    Cochain FF = cup(*D, F, F);
    int t = find_seq(*D, 2, {0, 0, 1});
    CHECK(FF.value[t].at(0, 0) == Q(find_seq(*D, 1, {0, 0}) + 2) * (e + 2));

    Cochain H{0, {}};
    for (int v = 0; v < D->size(0); ++v) H.value.emplace_back(b, b, 0);
    CHECK_THROWS_AS(cup(*D, F, H), InputError);
    CHECK_THROWS_AS(cup(*standard_simplex(1, 1), F, F), InputError);
}

TEST_CASE("local systems satisfy the structure equations") {
    for (const auto& K : {standard_simplex(2, 3), boundary_triangle(3), standard_simplex(3, 4)}) {
        CAPTURE(K->name);
        RepUpToHomotopy R = local_system(K);
        CHECK(rep_shape_failures(R).empty());
        CHECK(ruth_check(R).ok);
        CHECK(is_normalized(R));
    }
}

TEST_CASE("a corrupted homotopy is detected") {
    auto D = standard_simplex(2, 2);
    RepUpToHomotopy R = local_system(D);
    int t = find_seq(*D, 2, {0, 1, 2});
    R.F[2].value[t].set(0, 1, Q(1));
    RuthResult r = ruth_check(R);
    CHECK_FALSE(r.ok);
    CHECK(r.p == 2);
    CHECK(r.x == t);

    RepUpToHomotopy S = local_system(D);
    S.F[1].value[find_seq(*D, 1, {0, 1})].set(1, 1, Q(7));
    r = ruth_check(S);
    CHECK_FALSE(r.ok);
    CHECK(r.p == 1);

    RepUpToHomotopy T = local_system(D);
    T.F[2].value[t] = GradedMap(T.E[0], T.E[0], 0);
    CHECK_FALSE(rep_shape_failures(T).empty());
    CHECK_THROWS_AS(ruth_check(T), InputError);
}

TEST_CASE("random representations are valid and normalized") {
    std::mt19937_64 rng(11);
    auto D = standard_simplex(2, 3);
    auto B = boundary_triangle(3);
    auto two = ordered_complex(4, {{0, 1, 2}, {1, 2, 3}}, 3, "two triangles");
    int nontrivial_h = 0;
    for (int trial = 0; trial < 6; ++trial)
        for (const auto& K : {D, B, two}) {
            CAPTURE(K->name);
            RepUpToHomotopy R = random_rep(K, rng);
            CHECK(rep_shape_failures(R).empty());
            CHECK(ruth_check(R).ok);
            CHECK(is_normalized(R));
            if (K == D && !R.F[2].value[find_seq(*D, 2, {0, 1, 2})].is_zero()) ++nontrivial_h;
        }
    CHECK(nontrivial_h >= 3);
    CHECK_THROWS_AS(random_rep(standard_simplex(3, 3), rng), InputError);
    CHECK_THROWS_AS(random_rep(ordered_complex(4, {{0, 1, 3}, {0, 2, 3}}, 2), rng), InputError);
}

TEST_CASE("Hom differential squares to zero and composition is compatible") {
    std::mt19937_64 rng(5);
    for (const auto& K : {standard_simplex(2, 3), boundary_triangle(3)}) {
        CAPTURE(K->name);
        RepUpToHomotopy A = random_rep(K, rng), B = random_rep(K, rng), C = random_rep(K, rng);
        check_hom_algebra(A, B, C, rng);
        CHECK(is_zero(rep_hom_differential(A, A, identity_rep_morphism(A))));
    }
}

TEST_CASE("closed morphisms from the representation itself") {
    std::mt19937_64 rng(23);
    auto D = standard_simplex(2, 2);
    RepUpToHomotopy A = random_rep(D, rng);
    RepMorphism eta = random_rep_morphism(A, A, -1, rng);
    RepMorphism f = rep_hom_differential(A, A, eta);
    CHECK(is_zero(rep_hom_differential(A, A, f)));
    RepMorphism g = identity_rep_morphism(A) + f;
    CHECK(is_zero(rep_hom_differential(A, A, g)));
    CHECK(g - f == identity_rep_morphism(A));
}

TEST_CASE("pullback") {
    std::mt19937_64 rng(3);
    auto D1 = standard_simplex(1, 3), D2 = standard_simplex(2, 3), D0 = standard_simplex(0, 3);
    RepUpToHomotopy A = random_rep(D2, rng), B = random_rep(D2, rng);

    SimplicialMap id = identity_map(D2);
    RepUpToHomotopy A_id = pullback(id, A);
    CHECK(A_id.F.size() == A.F.size());
    for (size_t p = 0; p < A.F.size(); ++p)
        for (size_t x = 0; x < A.F[p].value.size(); ++x) CHECK(A_id.F[p].value[x] == A.F[p].value[x]);

    for (const auto& f : {vertex_map(D1, D2, {0, 2}), vertex_map(D1, D2, {1, 1}), vertex_map(D0, D2, {2}),
                          vertex_map(D2, D2, {0, 0, 2})}) {
        CAPTURE(f.source->name);
        RepUpToHomotopy fA = pullback(f, A), fB = pullback(f, B);
        CHECK(ruth_check(fA).ok);
        CHECK(is_normalized(fA));
        for (int n = -1; n <= 1; ++n) {
            RepMorphism phi = random_rep_morphism(A, B, n, rng);
            CHECK(pullback(f, rep_hom_differential(A, B, phi)) == rep_hom_differential(fA, fB, pullback(f, phi)));
        }
    }
    SimplicialMap g = vertex_map(D1, D2, {0, 2});
    CHECK_THROWS_AS(pullback(g, random_rep(D1, rng)), InputError);
}

TEST_CASE("representations on a group nerve") {
    // Z/2 acting on a one-dimensional space by -1, as a strict representation.
    auto N = cyclic_nerve(2, 3);
    auto sp = space_in_degrees({0}, "v");
    RepUpToHomotopy R;
    R.K = N;
    R.E = {sp};
    for (int p = 0; p <= 3; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < N->size(p); ++x) {
            GradedMap m(sp, sp, 1 - p);
            if (p == 1) m.set(0, 0, N->labels[1][x] == "(1)" ? Q(-1) : Q(1));
            c.value.push_back(m);
        }
        R.F.push_back(std::move(c));
    }
    CHECK(ruth_check(R).ok);
    CHECK(is_normalized(R));
    RepUpToHomotopy S = R;
    S.F[1].value[1].set(0, 0, Q(2));
    CHECK_FALSE(ruth_check(S).ok);
    std::mt19937_64 rng(1);
    for (int n = -1; n <= 1; ++n) {
        RepMorphism phi = random_rep_morphism(R, R, n, rng);
        CHECK(is_zero(rep_hom_differential(R, R, rep_hom_differential(R, R, phi))));
    }
}

TEST_CASE("cup with degree-zero cochains") {
    auto D = standard_simplex(2, 2);
    auto sp = space_in_degrees({0, 1}, "e");
    Cochain one{0, {}}, c{0, {}};
    for (int v = 0; v < D->size(0); ++v) {
        one.value.push_back(GradedMap::identity(sp));
        GradedMap m(sp, sp, 0);
        m.set(0, 0, Q(v + 2));
        m.set(1, 1, Q(3));
        c.value.push_back(m);
    }
    Cochain cc = cup(*D, c, c);
    for (int v = 0; v < D->size(0); ++v) {
        CHECK(cc.value[v].at(0, 0) == Q((v + 2) * (v + 2)));
        CHECK(cc.value[v].at(1, 1) == Q(9));
    }
    RepUpToHomotopy L = local_system(D);
    for (int p = 0; p <= 2; ++p) {
        Cochain l = cup(*D, one, L.F[p]), r = cup(*D, L.F[p], one);
        for (int x = 0; x < D->size(p); ++x) {
            CHECK(l.value[x] == L.F[p].value[x]);
            CHECK(r.value[x] == L.F[p].value[x]);
        }
    }
}

TEST_CASE("vertexwise chain maps are closed over strict complexes") {
    auto D = standard_simplex(2, 2);
    auto sp = space_in_degrees({0, 1}, "e");
    GradedMap d(sp, sp, 1);
    d.set(1, 0, Q(1));
    RepUpToHomotopy R;
    R.K = D;
    for (int v = 0; v < D->size(0); ++v) R.E.push_back(sp);
    for (int p = 0; p <= 2; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < D->size(p); ++x) c.value.push_back(p == 0 ? d : GradedMap(sp, sp, 1 - p));
        R.F.push_back(std::move(c));
    }
    CHECK(ruth_check(R).ok);
    RepMorphism phi = zero_rep_morphism(R, R, 0);
    for (int v = 0; v < D->size(0); ++v) {
        GradedMap f(sp, sp, 0);
        f.set(0, 0, Q(v + 1));
        f.set(1, 1, Q(v + 1));
        phi.phi[0].value[v] = f;
    }
    CHECK(is_zero(rep_hom_differential(R, R, phi)));
    phi.phi[0].value[1].set(1, 1, Q(5));
    CHECK_FALSE(is_zero(rep_hom_differential(R, R, phi)));
}

TEST_CASE("corrupting a homotopy is seen at the next dimension too") {
    auto D = standard_simplex(2, 3);
    RepUpToHomotopy R = local_system(D);
    int x = find_seq(*D, 2, {0, 0, 1});
    R.F[2].value[x].set(0, 1, Q(1));
    RuthResult r = ruth_check(R);
    CHECK_FALSE(r.ok);
    CHECK((r.p == 2 || r.p == 3));
    CHECK_FALSE(is_normalized(R));
}
