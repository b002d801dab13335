#include "gha/weil/weil.hpp"

namespace gha {

namespace {

// Σ_c coef * f^a_{bc} x_c
SVec ad_star(const LieAlgebra& g, int a, int b, const std::vector<SVec>& x, const Q& coef) {
    SVec out;
    for (int c = 0; c < g.dim(); ++c)
        if (g.f(a, b, c) != 0) axpy(out, coef * g.f(a, b, c), x[c]);
    return out;
}

std::vector<SVec> kernel_of_ops(const std::vector<const GradedMap*>& ops, const std::vector<int>& cols) {
    std::map<std::pair<int, int>, SVec> rows;
    for (size_t o = 0; o < ops.size(); ++o)
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (const auto& [t, v] : ops[o]->column(cols[j])) rows[{static_cast<int>(o), t}].emplace(j, v);
    std::vector<SVec> row_list;
    row_list.reserve(rows.size());
    for (auto& kv : rows) row_list.push_back(std::move(kv.second));
    std::vector<SVec> out;
    for (const auto& k : nullspace(row_list, static_cast<int>(cols.size()))) {
        SVec v;
        for (const auto& [j, q] : k) v.emplace(cols[j], q);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

CEAlgebra ce_algebra(const LieAlgebra& g) {
    g.validate();
    int n = g.dim();
    std::vector<Generator> gens;
    for (int a = 0; a < n; ++a) gens.push_back({"e" + std::to_string(a + 1), 1, 0});
    auto alg = std::make_shared<GCAlgebra>(gens, 0);
    std::vector<SVec> e(n);
    for (int a = 0; a < n; ++a) e[a] = alg->gen(a);
    std::vector<SVec> d(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.f(a, b, c) != 0) axpy(d[a], Q(-1, 2) * g.f(a, b, c), alg->mul(e[b], e[c]));
    std::vector<std::vector<SVec>> ig(n, std::vector<SVec>(n)), lg(n, std::vector<SVec>(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            if (a == b) ig[b][a] = alg->one();
            lg[b][a] = ad_star(g, a, b, e, -1);
        }
    CEAlgebra out;
    out.g = g;
    out.A = std::make_shared<GDGAlgebra>(make_gdg(alg, d, ig, lg));
    return out;
}

WeilAlgebra weil_algebra(const LieAlgebra& g, int s) {
    g.validate();
    if (s < 1) throw InputError("weil_algebra: truncation must be at least 1");
    int n = g.dim();
    std::vector<Generator> gens;
    for (int a = 0; a < n; ++a) gens.push_back({"t" + std::to_string(a + 1), 1, 0});
    for (int a = 0; a < n; ++a) gens.push_back({"w" + std::to_string(a + 1), 2, 1});
    auto alg = std::make_shared<GCAlgebra>(gens, s);
    std::vector<SVec> t(n), w(n);
    for (int a = 0; a < n; ++a) {
        t[a] = alg->gen(a);
        w[a] = alg->gen(n + a);
    }
    std::vector<SVec> d(2 * n);
    for (int a = 0; a < n; ++a) {
        d[a] = w[a];
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Q f = g.f(a, b, c);
                if (f == 0) continue;
                axpy(d[a], Q(-1, 2) * f, alg->mul(t[b], t[c]));
                axpy(d[n + a], f, alg->mul(w[b], t[c]));
            }
    }
    std::vector<std::vector<SVec>> ig(n, std::vector<SVec>(2 * n)), lg(n, std::vector<SVec>(2 * n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            if (a == b) ig[b][a] = alg->one();
            lg[b][a] = ad_star(g, a, b, t, -1);
            lg[b][n + a] = ad_star(g, a, b, w, -1);
        }
    WeilAlgebra out;
    out.g = g;
    out.s = s;
    out.A = std::make_shared<GDGAlgebra>(make_gdg(alg, d, ig, lg));
    return out;
}

CartanReport cartan_report(const GDGAlgebra& A, const LieAlgebra& g) {
    return cartan_identities(A, g.dim(), [&](int c, int a, int b) { return g.f(c, a, b); });
}

AlgebraicConnection universal_connection(const WeilAlgebra& W) {
    AlgebraicConnection th{W.g, W.A, {}};
    for (int a = 0; a < W.n(); ++a) th.theta.push_back(W.t(a));
    return th;
}

AlgebraicConnection canonical_connection(const CEAlgebra& ce) {
    AlgebraicConnection th{ce.g, ce.A, {}};
    for (int a = 0; a < ce.g.dim(); ++a) th.theta.push_back(ce.e(a));
    return th;
}

ConnectionReport connection_check(const AlgebraicConnection& th) {
    ConnectionReport r;
    const GDGAlgebra& A = *th.target;
    int n = th.g.dim();
    const auto& lab = th.g.labels();
    if (static_cast<int>(th.theta.size()) != n) {
        r.violations.push_back("connection has " + std::to_string(th.theta.size()) + " components, expected " +
                               std::to_string(n));
        return r;
    }
    if (static_cast<int>(A.contraction.size()) != n || static_cast<int>(A.lie_derivative.size()) != n) {
        r.violations.push_back("target algebra does not carry an action of " + th.g.name());
        return r;
    }
    for (int a = 0; a < n; ++a)
        for (const auto& kv : th.theta[a])
            if (A.alg->degree(kv.first) != 1) {
                r.violations.push_back("theta(" + lab[a] + ") is not of degree 1");
                break;
            }
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a) {
            SVec want = (a == x) ? A.alg->one() : SVec{};
            if (A.contraction[x].apply(th.theta[a]) != want)
                r.violations.push_back("contraction i_" + lab[x] + " theta(" + lab[a] + ")");
            if (A.lie_derivative[x].apply(th.theta[a]) != ad_star(th.g, a, x, th.theta, -1))
                r.violations.push_back("equivariance L_" + lab[x] + " theta(" + lab[a] + ")");
        }
    return r;
}

CharacteristicMap characteristic_hom(const AlgebraicConnection& th, int s) {
    auto rep = connection_check(th);
    if (!rep.ok()) throw InputError("characteristic_hom: invalid connection: " + rep.violations.front());
    CharacteristicMap c;
    c.W = weil_algebra(th.g, s);
    c.target = th.target;
    const GCAlgebra& R = *th.target->alg;
    int n = th.g.dim();
    c.gen_images.resize(2 * n);
    for (int a = 0; a < n; ++a) {
        c.gen_images[a] = th.theta[a];
        SVec curv = th.target->d.apply(th.theta[a]);
        for (int b = 0; b < n; ++b)
            for (int e = 0; e < n; ++e)
                if (th.g.f(a, b, e) != 0) axpy(curv, Q(1, 2) * th.g.f(a, b, e), R.mul(th.theta[b], th.theta[e]));
        c.gen_images[n + a] = std::move(curv);
    }
    c.map = c.W.A->alg->homomorphism(R, c.gen_images);
    return c;
}

std::vector<std::string> characteristic_failures(const CharacteristicMap& c) {
    std::vector<std::string> out;
    const GDGAlgebra& W = *c.W.A;
    const GDGAlgebra& A = *c.target;
    const GCAlgebra& S = *W.alg;
    int n = c.W.n();
    for (int i = 0; i < S.dim(); ++i) {
        SVec x{{i, Q(1)}};
        SVec cx = c.apply(x);
        const std::string& lab = S.space()->label(i);
        if (S.weight(i) <= c.W.s - 1 && c.apply(W.d.apply(x)) != A.d.apply(cx))
            out.push_back("d on " + lab);
        for (int b = 0; b < n; ++b) {
            if (c.apply(W.contraction[b].apply(x)) != A.contraction[b].apply(cx))
                out.push_back("i_" + std::to_string(b + 1) + " on " + lab);
            if (c.apply(W.lie_derivative[b].apply(x)) != A.lie_derivative[b].apply(cx))
                out.push_back("L_" + std::to_string(b + 1) + " on " + lab);
        }
        for (int g = 0; g < S.num_generators(); ++g) {
            auto [k, sg] = S.mul_basis(S.gen_index(g), i);
            if (k < 0) continue;
            if (c.apply(SVec{{k, Q(sg)}}) != A.alg->mul(c.gen_images[g], cx))
                out.push_back("product " + S.generator(g).name + "*" + lab);
        }
    }
    return out;
}

std::vector<SVec> basic_subspace(const GDGAlgebra& A, int k) {
    std::vector<const GradedMap*> ops;
    for (const auto& m : A.contraction) ops.push_back(&m);
    for (const auto& m : A.lie_derivative) ops.push_back(&m);
    return kernel_of_ops(ops, A.alg->space()->indices_of_degree(k));
}

Subcomplex basic_complex(const GDGAlgebra& A, int lo, int hi) {
    std::vector<SVec> basis;
    std::vector<int> degs;
    for (int k = lo; k <= hi; ++k)
        for (auto& v : basic_subspace(A, k)) {
            basis.push_back(std::move(v));
            degs.push_back(k);
        }
    return restrict_to_span(A.d, basis, degs);
}

SymmetricAlgebra symmetric_algebra(const LieAlgebra& g, int k) {
    g.validate();
    int n = g.dim();
    std::vector<Generator> gens;
    for (int a = 0; a < n; ++a) gens.push_back({"w" + std::to_string(a + 1), 2, 1});
    auto alg = std::make_shared<GCAlgebra>(gens, k);
    std::vector<SVec> w(n);
    for (int a = 0; a < n; ++a) w[a] = alg->gen(a);
    std::vector<std::vector<SVec>> lg(n, std::vector<SVec>(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) lg[b][a] = ad_star(g, a, b, w, -1);
    SymmetricAlgebra S;
    S.g = g;
    S.A = std::make_shared<GDGAlgebra>(make_gdg(alg, std::vector<SVec>(n), {}, lg));
    return S;
}

std::vector<SVec> invariant_polynomials(const SymmetricAlgebra& S, int k) {
    if (k > S.A->alg->max_weight()) throw InputError("invariant_polynomials: degree exceeds truncation");
    return basic_subspace(*S.A, 2 * k);
}

SVec polynomial_in_weil(const SymmetricAlgebra& S, const WeilAlgebra& W, const SVec& p) {
    std::vector<SVec> imgs;
    for (int a = 0; a < W.n(); ++a) imgs.push_back(W.w(a));
    return S.A->alg->homomorphism(*W.A->alg, imgs).apply(p);
}

ChernWeilResult chern_weil(const AlgebraicConnection& th, const SymmetricAlgebra& S, const SVec& p) {
    const GCAlgebra& P = *S.A->alg;
    if (p.empty()) throw InputError("chern_weil: zero polynomial");
    int pdeg = P.degree(p.begin()->first);
    for (const auto& kv : p)
        if (P.degree(kv.first) != pdeg) throw InputError("chern_weil: polynomial is not homogeneous");
    for (const auto& L : S.A->lie_derivative)
        if (!L.apply(p).empty()) throw InputError("chern_weil: polynomial is not invariant");
    int s = std::max(1, P.max_weight());
    CharacteristicMap c = characteristic_hom(th, s);
    ChernWeilResult r;
    r.degree = pdeg;
    r.element = c.apply(polynomial_in_weil(S, c.W, p));
    const GDGAlgebra& A = *th.target;
    r.closed = A.d.apply(r.element).empty();
    r.basic = true;
    for (const auto& m : A.contraction)
        if (!m.apply(r.element).empty()) r.basic = false;
    for (const auto& m : A.lie_derivative)
        if (!m.apply(r.element).empty()) r.basic = false;
    if (!r.closed || !r.basic) return r;
    Subcomplex sc = basic_complex(A, pdeg - 1, pdeg + 1);
    Cohomology h = cohomology(sc.complex);
    r.cohomology_dim = h.dim(pdeg);
    auto z = sc.coords.coords(r.element);
    if (!z) throw StructuralError("chern_weil: basic element outside the basic span");
    r.class_coords = class_coordinates(sc.complex, h, pdeg, *z);
    return r;
}

}  // namespace gha
