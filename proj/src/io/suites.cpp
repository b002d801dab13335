#include "gha/io/suites.hpp"

#include "gha/infloc/infloc.hpp"

#include <algorithm>
#include <random>

namespace gha {

namespace {

std::string first_of(const std::vector<std::string>& xs) {
    if (xs.empty()) return "";
    std::string s = xs.front();
    if (xs.size() > 1) s += " (+" + std::to_string(xs.size() - 1) + " more)";
    return s;
}

Json dims_json(const std::map<int, int>& dims) {
    Json out = Json::object();
    for (auto [k, d] : dims) out[std::to_string(k)] = d;
    return out;
}

Json pages_json(const SpectralPages& sp) {
    Json pages = Json::array();
    for (size_t r = 0; r < sp.pages.size(); ++r) {
        Json entries = Json::array();
        for (auto [pq, d] : sp.pages[r])
            if (d != 0) entries.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", d}});
        pages.push_back({{"r", r}, {"entries", entries}});
    }
    return pages;
}

void spectral_checks(Report& rep, const SpectralPages& sp) {
    int last = static_cast<int>(sp.pages.size()) - 1;
    std::map<int, int> tot;
    for (auto [pq, d] : sp.pages[last]) tot[pq.first + pq.second] += d;
    bool converged = true;
    std::string detail;
    for (auto [k, d] : sp.total)
        if (tot[k] != d) {
            converged = false;
            detail = "degree " + std::to_string(k) + ": E_" + std::to_string(last) + " has " + std::to_string(tot[k]) +
                     ", H has " + std::to_string(d);
            break;
        }
    for (auto [k, d] : tot)
        if (converged && d != 0 && !sp.total.count(k)) {
            converged = false;
            detail = "degree " + std::to_string(k) + " survives but H vanishes";
        }
    rep.add("last page matches total cohomology", converged, detail);
    int collapse = -1;
    for (int r = 1; r <= last; ++r) {
        bool quiet = true;
        for (int t = r; t < static_cast<int>(sp.ranks.size()); ++t)
            for (auto [pq, k] : sp.ranks[t]) quiet = quiet && k == 0;
        if (quiet) {
            collapse = r;
            break;
        }
    }
    rep.data["collapse_page"] = collapse;
    rep.data["total"] = dims_json(sp.total);
    rep.data["pages"] = pages_json(sp);
}

Json tensor_json(const TensorElem& x) {
    Json out = Json::array();
    const auto& A = *x.algebra()->space();
    for (const auto& [k, v] : x.terms())
        out.push_back({{"coefficient", A.label(k[0])},
                       {"row", x.target()->label(k[1])},
                       {"col", x.source()->label(k[2])},
                       {"value", rational_to_json(v)}});
    return out;
}

void object_checks(Report& rep, const WeilAlgebra& W) {
    BasicObject gm;
    try {
        gm = gauss_manin(W);
    } catch (const InputError& e) {
        rep.add("alpha_CE is a Maurer-Cartan element", false, e.what());
        return;
    }
    rep.add("alpha_CE is a Maurer-Cartan element", gm.report.mc_ok, first_of(gm.report.failures));
    rep.add("CE(g) with alpha_CE is basic", gm.report.basic_ok, first_of(gm.report.failures));
    Json comps = Json::object();
    for (const auto& [p, r] : mc_residual_components(gm.alpha, W.A->d, gm.V.d)) comps[std::to_string(p)] = r.terms().size();
    rep.data["alpha_CE_terms"] = gm.alpha.terms().size();
    rep.data["residual_terms_by_partial_degree"] = comps;
}

}  // namespace

Report verify_suite(const LieAlgebra& g, int s) {
    Report rep;
    auto viol = g.violations();
    rep.add("structure constants are antisymmetric and satisfy Jacobi", viol.empty(), first_of(viol));
    rep.data["algebra"] = g.name();
    rep.data["dim"] = g.dim();
    if (!viol.empty()) return rep;

    auto lg = verify_dgla(lie_as_dgla(g));
    rep.add("g is a DG Lie algebra", lg.ok(), first_of(lg.failures));
    auto t = verify_dgla(tg(g));
    rep.add("Tg is a DG Lie algebra", t.ok(), first_of(t.failures));

    CEAlgebra ce = ce_algebra(g);
    rep.add("CE differential squares to zero", ce.A->d.compose(ce.A->d).is_zero());
    auto cr = cartan_report(*ce.A, g);
    rep.add("Cartan identities on CE(g)", cr.ok(), first_of(cr.failures));
    auto der = derivation_failures(*ce.A);
    rep.add("d, i, L are derivations of CE(g)", der.empty(), first_of(der));
    Json ced = Json::object();
    bool all_zero = true;
    for (int a = 0; a < g.dim(); ++a) {
        SVec v = ce.A->d.apply(ce.e(a));
        all_zero = all_zero && v.empty();
        ced[ce.A->alg->space()->label(ce.A->alg->gen_index(a))] = svec_to_json(v, *ce.A->alg->space());
    }
    rep.data["ce_differentials"] = ced;
    rep.data["ce_differentials_all_zero"] = all_zero;

    WeilAlgebra W = weil_algebra(g, s);
    rep.add("Weil differential squares to zero", W.A->d.compose(W.A->d).is_zero());
    auto wr = cartan_report(*W.A, g);
    rep.add("Cartan identities on the Weil algebra", wr.ok(), first_of(wr.failures));
    rep.data["trunc"] = s;
    rep.data["weil_dim"] = W.A->alg->dim();
    if (s >= 2)
        object_checks(rep, W);
    else
        rep.data["alpha_CE"] = "skipped (needs trunc >= 2)";
    return rep;
}

Report ce_object_suite(const LieAlgebra& g, int s) {
    Report rep;
    auto viol = g.violations();
    rep.add("structure constants are antisymmetric and satisfy Jacobi", viol.empty(), first_of(viol));
    if (!viol.empty()) return rep;
    if (s < 2) throw InputError("alpha_CE needs trunc >= 2");
    object_checks(rep, weil_algebra(g, s));
    return rep;
}

Report invariants_suite(const LieAlgebra& g, int kmax) {
    if (kmax < 0) throw InputError("degree must be nonnegative");
    g.validate();
    Report rep;
    WeilAlgebra W = weil_algebra(g, std::max(kmax, 1));
    SymmetricAlgebra S = symmetric_algebra(g, kmax);
    Json table = Json::array();
    for (int k = 0; k <= kmax; ++k) {
        auto inv = invariant_polynomials(S, k);
        int nb = static_cast<int>(basic_subspace(*W.A, 2 * k).size());
        int ni = static_cast<int>(inv.size());
        rep.add("dim (S^" + std::to_string(k) + " g*)_inv = dim (Wg)_bas^" + std::to_string(2 * k), ni == nb,
                std::to_string(ni) + " vs " + std::to_string(nb));
        Json basis = Json::array();
        for (const auto& p : inv) basis.push_back(svec_to_json(p, *S.A->alg->space()));
        table.push_back({{"k", k}, {"invariants", ni}, {"basic", nb}, {"basis", basis}});
    }
    rep.data["algebra"] = g.name();
    rep.data["table"] = table;
    return rep;
}

Report chern_weil_suite(const AlgebraicConnection& theta, const Json& polynomial) {
    Report rep;
    auto cc = connection_check(theta);
    rep.add("connection", cc.ok(), first_of(cc.violations));
    if (!cc.ok()) return rep;
    int deg = polynomial_degree(polynomial, theta.g);
    SymmetricAlgebra S = symmetric_algebra(theta.g, std::max(deg, 1));
    SVec p = polynomial_from_json(polynomial, S);
    ChernWeilResult r = chern_weil(theta, S, p);
    rep.add("image is closed", r.closed);
    rep.add("image is basic", r.basic);
    rep.data["degree"] = r.degree;
    rep.data["element"] = svec_to_json(r.element, *theta.target->alg->space());
    rep.data["basic_cohomology_dim"] = r.cohomology_dim;
    Json coords = Json::array();
    for (const auto& c : r.class_coords) coords.push_back(rational_to_json(c));
    rep.data["class"] = coords;
    return rep;
}

Report rep_verify_suite(const SimplicialSet& K, const RepUpToHomotopy& R, int trials, std::uint64_t seed) {
    Report rep;
    auto sf = simplicial_failures(K);
    rep.add("simplicial identities", sf.empty(), first_of(sf));
    auto shape = rep_shape_failures(R);
    rep.add("component typing", shape.empty(), first_of(shape));
    rep.data["simplicial_set"] = K.name;
    rep.data["pmax"] = K.pmax;
    if (!sf.empty() || !shape.empty()) return rep;
    RuthResult rr = ruth_check(R);
    std::string where;
    if (!rr.ok) {
        where = "p = " + std::to_string(rr.p) + " at " + K.labels[rr.p][rr.x];
        rep.data["failure"] = {{"p", rr.p}, {"simplex", K.labels[rr.p][rr.x]}};
    }
    rep.add("structure relation", rr.ok, where);
    rep.add("normalized", is_normalized(R));
    if (!rr.ok) return rep;

    std::mt19937_64 rng(seed);
    int d2 = 0, leib = 0, assoc = 0, unit = 0;
    RepMorphism id = identity_rep_morphism(R);
    bool id_closed = is_zero(rep_hom_differential(R, R, id));
    for (int t = 0; t < trials; ++t) {
        int n = t % 3 - 1, m = (t / 3) % 3 - 1;
        RepMorphism phi = random_rep_morphism(R, R, n, rng), psi = random_rep_morphism(R, R, m, rng),
                    chi = random_rep_morphism(R, R, (t % 2), rng);
        RepMorphism dphi = rep_hom_differential(R, R, phi);
        d2 += !is_zero(rep_hom_differential(R, R, dphi));
        RepMorphism lhs = rep_hom_differential(R, R, compose_rep_morphisms(R, psi, phi));
        RepMorphism a = compose_rep_morphisms(R, rep_hom_differential(R, R, psi), phi);
        RepMorphism b = compose_rep_morphisms(R, psi, dphi);
        leib += !(lhs == (m % 2 == 0 ? a + b : a - b));
        assoc += !(compose_rep_morphisms(R, chi, compose_rep_morphisms(R, psi, phi)) ==
                   compose_rep_morphisms(R, compose_rep_morphisms(R, chi, psi), phi));
        unit += !(compose_rep_morphisms(R, id, phi) == phi) + !(compose_rep_morphisms(R, phi, id) == phi);
    }
    auto fails = [](int k) { return k == 0 ? std::string() : std::to_string(k) + " failing trials"; };
    rep.add("Hom differential squares to zero", d2 == 0, fails(d2));
    rep.add("composition is a chain map", leib == 0, fails(leib));
    rep.add("composition is associative", assoc == 0, fails(assoc));
    rep.add("identity is closed and unital", id_closed && unit == 0, fails(unit));
    rep.data["random_trials"] = trials;
    return rep;
}

Report spectral_suite(const FilteredComplex& fc, int pages) {
    if (pages < 0) throw InputError("pages must be nonnegative");
    Report rep;
    rep.add("differential squares to zero", fc.complex.square_zero());
    bool filtered = true;
    for (int j = 0; j < fc.complex.space->dim(); ++j)
        for (const auto& [t, v] : fc.complex.d.column(j)) filtered = filtered && fc.level[t] >= fc.level[j];
    rep.add("differential preserves the filtration", filtered);
    if (!rep.ok()) return rep;
    spectral_checks(rep, spectral_pages(fc, pages));
    return rep;
}

Report spectral_input_suite(const Json& input, int pages) {
    std::string kind = input.value("kind", std::string("filtered"));
    if (kind == "filtered") return spectral_suite(filtered_from_json(input), pages);
    if (kind != "hom") throw InputError("spectral input: kind must be filtered or hom");
    if (pages < 0) throw InputError("pages must be nonnegative");
    LieAlgebra g = input.contains("lie") && input.at("lie").is_object() ? lie_from_json(input.at("lie"))
                                                                        : builtin_lie(input.value("lie", std::string("su2")));
    g.validate();
    int s = input.value("s", 3);
    if (s < 2) throw InputError("hom input: s must be at least 2");
    WeilAlgebra W = weil_algebra(g, s);
    auto object = [&](const std::string& name) {
        if (name == "trivial") return trivial_object(W);
        if (name == "gauss_manin") return gauss_manin(W);
        throw InputError("hom input: objects are trivial or gauss_manin, not " + name);
    };
    BasicHomComplex hc = hom_complex(object(input.value("source", std::string("trivial"))),
                                     object(input.value("target", std::string("gauss_manin"))));
    Report rep;
    rep.add("total differential squares to zero", hc.square_zero);
    rep.add("total differential preserves basic elements", hc.basic_closed);
    if (!rep.ok()) return rep;
    SpectralPages sp = hom_spectral(hc, pages);
    rep.data["window"] = {hc.lo, hc.hi};
    Json e = pages_json(sp);
    // outside the window the truncated complex does not compute the true pages
    for (auto& page : e)
        for (auto it = page["entries"].begin(); it != page["entries"].end();) {
            int n = (*it)["p"].get<int>() + (*it)["q"].get<int>();
            it = (n < hc.lo || n > hc.hi) ? page["entries"].erase(it) : it + 1;
        }
    rep.data["pages"] = e;
    rep.data["total"] = dims_json(hc.cohomology);
    return rep;
}

Report mc_check_suite(const DGLieAlgebra& L, const SVec& x) {
    Report rep;
    auto v = verify_dgla(L);
    rep.add("DG Lie algebra", v.ok(), first_of(v.failures));
    if (!v.ok()) return rep;
    MCResult r = mc_check(L, x);
    rep.add("Maurer-Cartan equation", r.ok);
    rep.data["residual"] = svec_to_json(r.residual, *L.space);
    return rep;
}

Report gauss_manin_suite(const LieAlgebra& g, int s) {
    g.validate();
    if (s < 2) throw InputError("gauss-manin needs trunc >= 2");
    WeilAlgebra W = weil_algebra(g, s);
    BasicObject gm = gauss_manin(W);
    BasicHomComplex hc = hom_complex(trivial_object(W), gm);
    Report rep;
    rep.add("object is a basic Maurer-Cartan element", gm.report.ok(), first_of(gm.report.failures));
    rep.add("total differential squares to zero", hc.square_zero);
    rep.add("total differential preserves basic elements", hc.basic_closed);
    rep.data["algebra"] = g.name();
    rep.data["trunc"] = s;
    rep.data["window"] = {hc.lo, hc.hi};
    rep.data["cohomology"] = dims_json(hc.cohomology);
    rep.data["alpha"] = tensor_json(gm.alpha);
    return rep;
}

Report ainfty_suite(const DGCatPtr& C, int max_length, int trials, std::uint64_t seed) {
    if (max_length < 1) throw InputError("word length must be positive");
    Report rep;
    auto cf = dg_category_failures(*C);
    rep.add("DG category axioms", cf.empty(), first_of(cf));
    rep.data["category"] = C->name;
    rep.data["objects"] = C->objects;
    if (!cf.empty()) return rep;

    long words = 0, bad = 0;
    std::string where;
    for (int n = 1; n <= max_length; ++n)
        for (const auto& w : basis_words(*C, n)) {
            ++words;
            if (!hochschild_b(*C, hochschild_b(*C, word_chain(w))).empty()) {
                if (bad++ == 0) where = word_label(*C, w);
            }
        }
    rep.add("b squares to zero on words up to length " + std::to_string(max_length), bad == 0, where);
    rep.data["words_checked"] = words;

    int nmax = std::max(1, max_length - 1);
    AInftyFunctor I = identity_functor(C, nmax);
    CoherenceResult fr = ainfty_functor_check(I, nmax);
    rep.add("identity functor", fr.ok, fr.where);
    AInftyNat id = identity_nat(I, nmax);
    CoherenceResult nr = ainfty_nat_check(id, nmax);
    rep.add("identity transformation", nr.ok, nr.where);

    std::mt19937_64 rng(seed);
    int closed = 0, whiskered = 0, assoc = 0;
    for (int t = 0; t < trials; ++t) {
        AInftyNat L = random_nat(I, I, nmax, rng), M = random_nat(I, I, nmax, rng);
        AInftyNat ML = compose_nats(M, L);
        closed += !ainfty_nat_check(ML, nmax).ok;
        whiskered += !(whisker(I, L) == L);
        assoc += !(compose_nats(compose_nats(L, M), L) == compose_nats(L, compose_nats(M, L)));
    }
    auto fails = [](int k) { return k == 0 ? std::string() : std::to_string(k) + " failing trials"; };
    rep.add("composition of transformations satisfies the relation", closed == 0, fails(closed));
    rep.add("composition of transformations is associative", assoc == 0, fails(assoc));
    rep.add("whiskering by the identity functor is trivial", whiskered == 0, fails(whiskered));
    rep.data["random_trials"] = trials;
    return rep;
}

}  // namespace gha
