#include "doctest.h"

#include "gha/io/suites.hpp"

#include <random>

using namespace gha;

namespace {

std::string data(const std::string& rel) { return std::string(GHA_DATA_DIR) + "/" + rel; }

bool same_lie(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim() != b.dim() || a.labels() != b.labels()) return false;
    for (int x = 0; x < a.dim(); ++x)
        for (int y = 0; y < a.dim(); ++y)
            for (int z = 0; z < a.dim(); ++z)
                if (a.f(z, x, y) != b.f(z, x, y)) return false;
    return true;
}

}  // namespace

TEST_CASE("rationals serialize as num/den strings") {
    CHECK(rational_to_json(Q(3)) == "3/1");
    CHECK(rational_to_json(Q(-2) / 6) == "-1/3");
    CHECK(rational_from_json(Json("4/6")) == Q(2) / 3);
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
    CHECK_THROWS_AS(rational_from_json(Json("pi")), InputError);
}

TEST_CASE("shipped Lie algebra files match the built-in tables") {
    for (const auto& name : builtin_lie_names()) {
        CAPTURE(name);
        LieAlgebra g = lie_from_json(load_json_file(data("lie/" + name + ".json")));
        CHECK(same_lie(g, builtin_lie(name)));
        CHECK(g.violations().empty());
        CHECK(same_lie(lie_from_json(lie_to_json(g)), g));
    }
    LieAlgebra bad = lie_from_json(load_json_file(data("lie/su2_corrupt.json")));
    CHECK_FALSE(bad.violations().empty());
}

TEST_CASE("Lie algebra files: antisymmetric partners and malformed input") {
    Json j = parse_json_text(R"({"name":"h","basis":["x","y","z"],
        "structure_constants":[{"a":"x","b":"y","c":"z","value":"1/1"}]})");
    LieAlgebra g = lie_from_json(j);
    CHECK(g.f(2, 0, 1) == 1);
    CHECK(g.f(2, 1, 0) == -1);
    CHECK(g.violations().empty());

    Json inconsistent = parse_json_text(R"({"basis":["x","y"],
        "structure_constants":[{"a":0,"b":1,"c":0,"value":"1"},{"a":1,"b":0,"c":0,"value":"1"}]})");
    CHECK_FALSE(lie_from_json(inconsistent).violations().empty());

    CHECK_THROWS_AS(lie_from_json(parse_json_text(R"({"basis":["x","x"]})")), InputError);
    CHECK_THROWS_AS(lie_from_json(parse_json_text(R"({"basis":["x"],"dim":2})")), InputError);
    CHECK_THROWS_AS(lie_from_json(parse_json_text(R"({"basis":["x"],"structure_constants":[{"a":"x","b":"q","c":"x","value":"1"}]})")),
                    InputError);
    CHECK_THROWS_AS(parse_json_text("{\"basis\": ["), InputError);
    CHECK_THROWS_AS(load_json_file(data("lie/missing.json")), InputError);
}

TEST_CASE("maps and complexes round-trip") {
    auto c = complex_from_json(parse_json_text(R"({"space":[{"label":"a","degree":0},{"label":"b","degree":1}],
        "d":{"entries":[{"row":"b","col":"a","value":"-3/2"}]}})"));
    CHECK(c.d.at(1, 0) == Q(-3) / 2);
    auto c2 = complex_from_json(complex_to_json(c));
    CHECK(c2.d.at(1, 0) == c.d.at(1, 0));
    CHECK(c2.space->label(1) == "b");
    auto m = map_from_json(parse_json_text(R"({"degree":1,"matrix":[["0","0"],["7","0"]]})"), c.space, c.space);
    CHECK(m.at(1, 0) == 7);
    CHECK_THROWS_AS(map_from_json(parse_json_text(R"({"degree":0,"matrix":[["0","0"],["7","0"]]})"), c.space, c.space),
                    InputError);
    CHECK_THROWS_AS(map_from_json(parse_json_text(R"({"degree":1,"matrix":[["0"]]})"), c.space, c.space), InputError);
}

TEST_CASE("simplicial set files") {
    auto D = sset_from_json(load_json_file(data("sset/delta2.json")));
    CHECK(D->size(0) == 3);
    CHECK(D->size(2) == 10);
    auto B = sset_from_json(load_json_file(data("sset/boundary_delta2.json")), 2);
    CHECK(B->pmax == 2);
    CHECK(simplicial_failures(*B).empty());

    auto N = sset_from_json(load_json_file(data("sset/nerve_z2_tables.json")));
    auto ref = cyclic_nerve(2, 2);
    CHECK(N->count == ref->count);
    for (int p = 1; p <= N->pmax; ++p) CHECK(N->face[p] == ref->face[p]);
    for (int p = 0; p < N->pmax; ++p) CHECK(N->degen[p] == ref->degen[p]);
    CHECK(simplicial_failures(*N).empty());
    for (int p = 0; p <= N->pmax; ++p)
        for (int x = 0; x < N->size(p); ++x) CHECK(N->degenerate(p, x) == ref->degenerate(p, x));

    Json broken = sset_to_json(*ref);
    int s0 = broken["degeneracies"][1][1][0].get<int>();
    broken["degeneracies"][1][1][0] = (s0 + 1) % ref->size(2);
    CHECK_FALSE(simplicial_failures(*sset_from_json(broken)).empty());
    Json out_of_range = sset_to_json(*ref);
    out_of_range["faces"][0][0][0] = 9;
    CHECK_THROWS_AS(sset_from_json(out_of_range), InputError);
    CHECK_THROWS_AS(sset_from_json(parse_json_text(R"({"kind":"torus"})")), InputError);
}

TEST_CASE("representation files") {
    auto D = sset_from_json(load_json_file(data("sset/delta2.json")));
    auto R = rep_from_json(load_json_file(data("rep/homotopy_delta2.json")), D);
    CHECK(rep_shape_failures(R).empty());
    CHECK(ruth_check(R).ok);
    CHECK(is_normalized(R));
    auto R2 = rep_from_json(rep_to_json(R), D);
    for (int p = 0; p <= D->pmax; ++p)
        for (int x = 0; x < D->size(p); ++x) CHECK(R2.F[p].value[x] == R.F[p].value[x]);

    auto bad = rep_from_json(load_json_file(data("rep/homotopy_delta2_corrupt.json")), D);
    RuthResult r = ruth_check(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.p == 2);
    CHECK(D->labels[2][r.x] == "[0,1,2]");

    std::mt19937_64 rng(4);
    auto B = boundary_triangle(3);
    auto Rb = random_rep(B, rng);
    auto Rb2 = rep_from_json(rep_to_json(Rb), B);
    CHECK(ruth_check(Rb2).ok);

    Json wrong = load_json_file(data("rep/homotopy_delta2.json"));
    wrong["components"][0]["entries"][0]["row"] = "a";
    CHECK_THROWS_AS(rep_from_json(wrong, D), InputError);
    Json dup = load_json_file(data("rep/homotopy_delta2.json"));
    dup["components"].push_back(dup["components"][0]);
    CHECK_THROWS_AS(rep_from_json(dup, D), InputError);
}

TEST_CASE("DG category files") {
    auto A = dgcat_from_json(load_json_file(data("dgcat/arrow.json")));
    CHECK(A->size() == 2);
    CHECK(dg_category_failures(*A).empty());
    auto A2 = dgcat_from_json(dgcat_to_json(*A));
    CHECK(A2->comp == A->comp);
    CHECK(A2->identity == A->identity);

    auto T = dgcat_from_json(load_json_file(data("dgcat/two_complexes.json")));
    CHECK(dg_category_failures(*T).empty());
    CHECK(T->space(0, 1)->dim() == 2);

    Json no_id = dgcat_to_json(*A);
    no_id["identities"].erase("X");
    CHECK_THROWS_AS(dgcat_from_json(no_id), InputError);
    Json broken = dgcat_to_json(*A);
    broken["compositions"][0]["value"] = Json::object();
    CHECK_FALSE(dg_category_failures(*dgcat_from_json(broken)).empty());
}

TEST_CASE("filtered complex files") {
    auto fc = filtered_from_json(load_json_file(data("filtered/cone.json")));
    auto sp = spectral_pages(fc, 3);
    CHECK(sp.pages[1].at({0, 0}) == 1);
    CHECK(sp.pages[2].at({1, -1}) == 1);
    auto fc2 = filtered_from_json(filtered_to_json(fc));
    CHECK(fc2.level == fc.level);
    CHECK(fc2.complex.d == fc.complex.d);
}

TEST_CASE("verify suite") {
    Report su2 = verify_suite(builtin_lie("su2"), 3);
    CHECK(su2.ok());
    CHECK(su2.data["ce_differentials_all_zero"] == false);
    Report ab = verify_suite(builtin_lie("abelian3"), 3);
    CHECK(ab.ok());
    CHECK(ab.data["ce_differentials_all_zero"] == true);
    Report bad = verify_suite(builtin_lie("su2_corrupt"), 3);
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.checks.size() == 1);
    CHECK(bad.checks[0].detail.find("jacobi") != std::string::npos);
}

TEST_CASE("invariants suite") {
    auto dims = [](const Report& r) {
        std::vector<int> out;
        for (const auto& row : r.data["table"]) out.push_back(row["invariants"].get<int>());
        return out;
    };
    Report su2 = invariants_suite(builtin_lie("su2"), 2);
    CHECK(su2.ok());
    CHECK(dims(su2) == std::vector<int>{1, 0, 1});
    CHECK(dims(invariants_suite(builtin_lie("abelian3"), 2)).back() == 6);
    CHECK(dims(invariants_suite(builtin_lie("sl2"), 2)).back() == 1);
}

TEST_CASE("chern-weil suite") {
    LieAlgebra g = builtin_lie("su2");
    Json cas = load_json_file(data("connection/casimir_su2.json"));
    Report u = chern_weil_suite(connection_from_json(load_json_file(data("connection/universal_s2.json")), g), cas);
    CHECK(u.ok());
    CHECK(u.data["element"] == cas["terms"]);
    Report c = chern_weil_suite(connection_from_json(load_json_file(data("connection/canonical_ce.json")), g), cas);
    CHECK(c.ok());
    CHECK(c.data["element"].empty());
    Json bad = parse_json_text(R"({"kind":"explicit","target":"ce","theta":[{"e1":"1"},{"e2":"1"},{"e1":"1"}]})");
    CHECK_FALSE(chern_weil_suite(connection_from_json(bad, g), cas).ok());
    CHECK_THROWS_AS(chern_weil_suite(connection_from_json(load_json_file(data("connection/universal_s2.json")), g),
                                     parse_json_text(R"({"terms":{"w1":"1"}})")),
                    InputError);
}

TEST_CASE("rep-verify suite") {
    auto D = sset_from_json(load_json_file(data("sset/delta2.json")));
    CHECK(rep_verify_suite(*D, rep_from_json(load_json_file(data("rep/trivial_delta2.json")), D)).ok());
    CHECK(rep_verify_suite(*D, rep_from_json(load_json_file(data("rep/homotopy_delta2.json")), D)).ok());
    Report bad = rep_verify_suite(*D, rep_from_json(load_json_file(data("rep/homotopy_delta2_corrupt.json")), D));
    CHECK_FALSE(bad.ok());
    CHECK(bad.data["failure"]["p"] == 2);
    CHECK(bad.data["failure"]["simplex"] == "[0,1,2]");
}

TEST_CASE("spectral suites") {
    Report triv = spectral_input_suite(load_json_file(data("filtered/trivial.json")), 3);
    CHECK(triv.ok());
    CHECK(triv.data["collapse_page"] == 1);
    Report cone = spectral_input_suite(load_json_file(data("filtered/cone.json")), 3);
    CHECK(cone.ok());
    CHECK(cone.data["collapse_page"] == 2);
    Report hom = spectral_input_suite(load_json_file(data("filtered/sections_su2.json")), 2);
    CHECK(hom.ok());
    std::map<int, int> col0;
    for (const auto& e : hom.data["pages"][2]["entries"])
        if (e["q"] == 0) col0[e["p"].get<int>()] = e["dim"].get<int>();
    CHECK(col0[0] == 1);
    CHECK(col0[2] == 0);
    CHECK(col0[4] == 1);
    CHECK(col0[6] == 0);

    FilteredComplex up = filtered_from_json(load_json_file(data("filtered/cone.json")));
    up.level = {1, 1, 1, 0, 0};
    CHECK_FALSE(spectral_suite(up, 2).ok());
}

TEST_CASE("mc-check suites") {
    Json j = load_json_file(data("mc/square_zero_pair.json"));
    DGLieAlgebra L = dgla_from_json(j);
    CHECK(mc_check_suite(L, svec_from_json(j["element"], *L.space)).ok());
    Json f = load_json_file(data("mc/square_zero_pair_fail.json"));
    Report bad = mc_check_suite(L, svec_from_json(f["element"], *L.space));
    CHECK_FALSE(bad.ok());
    CHECK(bad.data["residual"] == Json{{"y", "-2/1"}});
    for (const auto& name : builtin_lie_names()) CHECK(ce_object_suite(builtin_lie(name), 2).ok());
}

TEST_CASE("ainfty suite") {
    CHECK(ainfty_suite(dgcat_from_json(load_json_file(data("dgcat/arrow.json"))), 3).ok());
    CHECK(ainfty_suite(dgcat_from_json(load_json_file(data("dgcat/two_complexes.json"))), 3).ok());
}

TEST_CASE("reports are deterministic") {
    auto run = [] {
        Report r = ainfty_suite(dgcat_from_json(load_json_file(data("dgcat/two_complexes.json"))), 3);
        r.command = {"gha", "ainfty-check"};
        return r.to_json().dump() + r.to_text();
    };
    CHECK(run() == run());
}
