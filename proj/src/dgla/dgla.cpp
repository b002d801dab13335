#include "gha/dgla/dgla.hpp"

namespace gha {

SVec DGLieAlgebra::bracket_basis(int i, int j) const {
    auto it = table.find({i, j});
    return it == table.end() ? SVec{} : it->second;
}

SVec DGLieAlgebra::bracket(const SVec& x, const SVec& y) const {
    SVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            auto it = table.find({i, j});
            if (it != table.end()) axpy(out, a * b, it->second);
        }
    return out;
}

int DGLieAlgebra::degree_of(const SVec& x) const {
    if (x.empty()) throw InputError("degree of zero element");
    int k = space->degree(x.begin()->first);
    for (const auto& kv : x)
        if (space->degree(kv.first) != k) throw InputError("element is not homogeneous");
    return k;
}

DGLAReport verify_dgla(const DGLieAlgebra& L) {
    DGLAReport r;
    const GradedSpace& s = *L.space;
    int n = L.dim();
    auto name = [&](int i) { return s.label(i); };
    if (L.d.degree() != 1 || !L.d.degree_consistent()) r.failures.push_back("differential degree");
    if (!L.d.compose(L.d).is_zero()) r.failures.push_back("d^2 != 0");
    for (const auto& [ij, v] : L.table)
        for (const auto& kv : v)
            if (s.degree(kv.first) != s.degree(ij.first) + s.degree(ij.second)) {
                r.failures.push_back("bracket degree(" + name(ij.first) + "," + name(ij.second) + ")");
                break;
            }
    auto e = [](int i) { return SVec{{i, Q(1)}}; };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int sg = sign_of_parity(static_cast<long>(s.degree(i)) * s.degree(j));
            SVec sum = L.bracket_basis(i, j);
            axpy(sum, sg, L.bracket_basis(j, i));
            if (!sum.empty()) r.failures.push_back("antisymmetry(" + name(i) + "," + name(j) + ")");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SVec dij = L.d.apply(L.bracket_basis(i, j));
            SVec rhs = L.bracket(L.d.column(i), e(j));
            axpy(rhs, sign_of_parity(s.degree(i)), L.bracket(e(i), L.d.column(j)));
            if (dij != rhs) r.failures.push_back("leibniz(" + name(i) + "," + name(j) + ")");
        }
    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                SVec lhs = L.bracket(e(i), L.bracket_basis(j, k));
                SVec rhs = L.bracket(L.bracket_basis(i, j), e(k));
                axpy(rhs, sign_of_parity(static_cast<long>(s.degree(i)) * s.degree(j)),
                     L.bracket(e(j), L.bracket_basis(i, k)));
                if (lhs != rhs)
                    r.failures.push_back("jacobi(" + name(i) + "," + name(j) + "," + name(k) + ")");
            }
    return r;
}

DGLieAlgebra lie_as_dgla(const LieAlgebra& g) {
    auto sp = std::make_shared<GradedSpace>();
    for (const auto& l : g.labels()) sp->add(l, 0);
    DGLieAlgebra L;
    L.space = sp;
    L.d = GradedMap(sp, sp, 1);
    int n = g.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SVec v;
            for (int c = 0; c < n; ++c)
                if (g.f(c, a, b) != 0) v[c] = g.f(c, a, b);
            if (!v.empty()) L.table[{a, b}] = v;
        }
    return L;
}

DGLieAlgebra end_dgla(const CochainComplex& V) {
    const GradedSpace& s = *V.space;
    int m = s.dim();
    auto sp = std::make_shared<GradedSpace>();
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sp->add(s.label(r) + "<-" + s.label(c), s.degree(r) - s.degree(c));
    DGLieAlgebra L;
    L.space = sp;
    auto deg = [&](int r, int c) { return s.degree(r) - s.degree(c); };
    // E_rc E_r'c' = δ_{c r'} E_rc'
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            for (int r2 = 0; r2 < m; ++r2)
                for (int c2 = 0; c2 < m; ++c2) {
                    SVec v;
                    if (c == r2) add_entry(v, r * m + c2, 1);
                    if (c2 == r) add_entry(v, r2 * m + c, -sign_of_parity(static_cast<long>(deg(r, c)) * deg(r2, c2)));
                    if (!v.empty()) L.table[{r * m + c, r2 * m + c2}] = v;
                }
    L.d = GradedMap(sp, sp, 1);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            int k = deg(r, c);
            SVec col;
            // δ E_rc = Σ_t δ_{t r} E_tc
            for (const auto& [t, v] : V.d.column(r)) add_entry(col, t * m + c, v);
            // E_rc δ = Σ_j δ_{c j} E_rj  (δ_{cj} = entry (c, j))
            for (int j = 0; j < m; ++j) {
                Q v = V.d.at(c, j);
                if (v != 0) add_entry(col, r * m + j, -sign_of_parity(k) * v);
            }
            L.d.column(r * m + c) = col;
        }
    return L;
}

GradedMap end_element_to_map(const CochainComplex& V, const SVec& x, int degree) {
    int m = V.space->dim();
    GradedMap f(V.space, V.space, degree);
    for (const auto& [k, v] : x) f.set(k / m, k % m, v);
    if (!f.degree_consistent()) throw InputError("endomorphism element has mixed degrees");
    return f;
}

SVec map_to_end_element(const GradedMap& f) {
    int m = f.source()->dim();
    SVec x;
    for (int c = 0; c < m; ++c)
        for (const auto& [r, v] : f.column(c)) x[r * m + c] = v;
    return x;
}

DGLieAlgebra tensor_dgla(const GDGAlgebra& A, const DGLieAlgebra& L) {
    const GCAlgebra& R = *A.alg;
    int na = R.dim(), nl = L.dim();
    auto sp = std::make_shared<GradedSpace>();
    for (int a = 0; a < na; ++a)
        for (int x = 0; x < nl; ++x)
            sp->add(R.space()->label(a) + "(x)" + L.space->label(x), R.degree(a) + L.space->degree(x));
    DGLieAlgebra T;
    T.space = sp;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            auto [ab, s] = R.mul_basis(a, b);
            if (ab < 0) continue;
            for (const auto& [xy, v] : L.table) {
                int x = xy.first, y = xy.second;
                int sg = s * sign_of_parity(static_cast<long>(L.space->degree(x)) * R.degree(b));
                SVec out;
                for (const auto& [z, c] : v) out[ab * nl + z] = sg * c;
                T.table[{a * nl + x, b * nl + y}] = out;
            }
        }
    T.d = GradedMap(sp, sp, 1);
    for (int a = 0; a < na; ++a)
        for (int x = 0; x < nl; ++x) {
            SVec col;
            for (const auto& [da, v] : A.d.column(a)) add_entry(col, da * nl + x, v);
            int sg = sign_of_parity(R.degree(a));
            for (const auto& [dx, v] : L.d.column(x)) add_entry(col, a * nl + dx, sg * v);
            T.d.column(a * nl + x) = col;
        }
    return T;
}

DGLieAlgebra tg(const LieAlgebra& g) {
    g.validate();
    int n = g.dim();
    auto sp = std::make_shared<GradedSpace>();
    for (int a = 0; a < n; ++a) sp->add("i:" + g.labels()[a], -1);
    for (int a = 0; a < n; ++a) sp->add("L:" + g.labels()[a], 0);
    DGLieAlgebra T;
    T.space = sp;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SVec ll, li, il;
            for (int c = 0; c < n; ++c) {
                Q f = g.f(c, a, b);
                if (f == 0) continue;
                ll[n + c] = f;
                li[c] = f;
                il[c] = -f;
            }
            if (!ll.empty()) {
                T.table[{n + a, n + b}] = ll;
                T.table[{n + a, b}] = li;
                T.table[{b, n + a}] = il;
            }
        }
    T.d = GradedMap(sp, sp, 1);
    for (int a = 0; a < n; ++a) T.d.set(n + a, a, 1);
    return T;
}

MCResult mc_check(const DGLieAlgebra& L, const SVec& x) {
    if (!x.empty() && L.degree_of(x) != 1) throw InputError("mc_check: element must have degree 1");
    MCResult r;
    r.residual = L.d.apply(x);
    axpy(r.residual, Q(1, 2), L.bracket(x, x));
    r.ok = r.residual.empty();
    return r;
}

SVec gauge_action(const DGLieAlgebra& L, const SVec& eta, const SVec& x, int max_terms) {
    if (!eta.empty() && L.degree_of(eta) != 0) throw InputError("gauge_action: eta must have degree 0");
    SVec out;
    auto series = [&](SVec term, const Q& sign, int shift) {
        Q fact = 1;
        for (int k = 1; k <= shift; ++k) fact *= k;
        for (int k = 0; !term.empty(); ++k) {
            if (k >= max_terms) throw InputError("gauge_action: ad(eta) is not nilpotent");
            axpy(out, sign / fact, term);
            term = L.bracket(eta, term);
            fact *= k + 1 + shift;
        }
    };
    series(x, 1, 0);
    series(L.d.apply(eta), -1, 1);
    return out;
}

}  // namespace gha
