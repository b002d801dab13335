#pragma once

namespace gha {

template <class F>
CartanReport cartan_identities(const GDGAlgebra& A, int n, F f) {
    CartanReport r;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) r.failures.push_back(what);
    };
    check(A.d.compose(A.d).is_zero(), "d^2");
    auto combo = [&](const std::vector<GradedMap>& ops, int a, int b, int deg) {
        GradedMap m(A.alg->space(), A.alg->space(), deg);
        for (int c = 0; c < n; ++c)
            if (f(c, a, b) != 0) m = m + ops[c].scaled(f(c, a, b));
        return m;
    };
    for (int a = 0; a < n; ++a) {
        std::string sa = std::to_string(a);
        check(graded_commutator(A.d, A.contraction[a]) == A.lie_derivative[a], "[d,i_" + sa + "]=L_" + sa);
        check(graded_commutator(A.d, A.lie_derivative[a]).is_zero(), "[d,L_" + sa + "]=0");
        for (int b = 0; b < n; ++b) {
            std::string sab = sa + "," + std::to_string(b);
            check(graded_commutator(A.lie_derivative[a], A.lie_derivative[b]) ==
                      combo(A.lie_derivative, a, b, 0),
                  "[L,L](" + sab + ")");
            check(graded_commutator(A.lie_derivative[a], A.contraction[b]) == combo(A.contraction, a, b, -1),
                  "[L,i](" + sab + ")");
            check(graded_commutator(A.contraction[a], A.contraction[b]).is_zero(), "[i,i](" + sab + ")");
        }
    }
    return r;
}

}  // namespace gha
