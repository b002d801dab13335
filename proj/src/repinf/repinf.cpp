#include "gha/repinf/repinf.hpp"

#include "gha/core/linalg.hpp"
#include "gha/core/matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gha {

void SimplicialSet::finalize() {
    degenerate_flag.assign(pmax + 1, {});
    for (int p = 0; p <= pmax; ++p) degenerate_flag[p].assign(count[p], 0);
    for (int p = 0; p < pmax; ++p)
        for (int x = 0; x < count[p]; ++x)
            for (int y : degen[p][x]) degenerate_flag[p + 1][y] = 1;
}

int SimplicialSet::front(int p, int x, int q) const {
    if (q < 0 || q > p || p > pmax) throw InputError("front_face: dimension out of range");
    for (int k = p; k > q; --k) x = d(k, k, x);
    return x;
}

int SimplicialSet::back(int p, int x, int q) const {
    if (q < 0 || q > p || p > pmax) throw InputError("back_face: dimension out of range");
    for (int k = p; k > q; --k) x = d(k, 0, x);
    return x;
}

int SimplicialSet::vertex(int p, int x, int k) const { return back(k, front(p, x, k), 0); }

std::vector<std::string> simplicial_failures(const SimplicialSet& K) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& what, int p, int x) {
        out.push_back(what + " at " + K.labels[p][x] + " (dim " + std::to_string(p) + ")");
    };
    for (int p = 2; p <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x)
            for (int j = 1; j <= p; ++j)
                for (int i = 0; i < j; ++i)
                    if (K.d(p - 1, i, K.d(p, j, x)) != K.d(p - 1, j - 1, K.d(p, i, x))) fail("d_i d_j", p, x);
    for (int p = 0; p + 2 <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x)
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= j; ++i)
                    if (K.s(p + 1, i, K.s(p, j, x)) != K.s(p + 1, j + 1, K.s(p, i, x))) fail("s_i s_j", p, x);
    for (int p = 0; p < K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x)
            for (int j = 0; j <= p; ++j) {
                int y = K.s(p, j, x);
                for (int i = 0; i <= p + 1; ++i) {
                    int z = K.d(p + 1, i, y);
                    bool ok;
                    if (i == j || i == j + 1)
                        ok = z == x;
                    else if (i < j)
                        ok = z == K.s(p - 1, j - 1, K.d(p, i, x));
                    else
                        ok = z == K.s(p - 1, j, K.d(p, i - 1, x));
                    if (!ok) fail("d_i s_j", p, x);
                }
            }
    return out;
}

namespace {

std::string seq_label(const std::vector<int>& v, char open = '[', char close = ']') {
    std::string s(1, open);
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + close;
}

// Builds face/degeneracy tables from a list of admissible vertex sequences.
SSetPtr from_sequences(std::string name, int pmax, const std::function<bool(const std::vector<int>&)>& admissible,
                       int nverts) {
    auto K = std::make_shared<SimplicialSet>();
    K->name = std::move(name);
    K->pmax = pmax;
    std::vector<std::map<std::vector<int>, int>> index(pmax + 1);
    K->sequences.resize(pmax + 1);
    K->labels.resize(pmax + 1);
    for (int p = 0; p <= pmax; ++p) {
        std::vector<int> cur(p + 1, 0);
        std::function<void(int, int)> rec = [&](int i, int lo) {
            if (i == p + 1) {
                if (admissible(cur)) {
                    index[p][cur] = static_cast<int>(K->sequences[p].size());
                    K->sequences[p].push_back(cur);
                    K->labels[p].push_back(seq_label(cur));
                }
                return;
            }
            for (int v = lo; v < nverts; ++v) {
                cur[i] = v;
                rec(i + 1, v);
            }
        };
        rec(0, 0);
        K->count.push_back(static_cast<int>(K->sequences[p].size()));
    }
    K->face.resize(pmax + 1);
    K->degen.resize(pmax + 1);
    for (int p = 0; p <= pmax; ++p)
        for (const auto& sq : K->sequences[p]) {
            std::vector<int> fs, ds;
            if (p >= 1)
                for (int i = 0; i <= p; ++i) {
                    std::vector<int> t = sq;
                    t.erase(t.begin() + i);
                    fs.push_back(index[p - 1].at(t));
                }
            if (p < pmax)
                for (int i = 0; i <= p; ++i) {
                    std::vector<int> t = sq;
                    t.insert(t.begin() + i, sq[i]);
                    ds.push_back(index[p + 1].at(t));
                }
            K->face[p].push_back(std::move(fs));
            K->degen[p].push_back(std::move(ds));
        }
    K->finalize();
    return K;
}

}  // namespace

SSetPtr ordered_complex(int n, const std::vector<std::vector<int>>& facets, int pmax, std::string name) {
    if (n <= 0 || pmax < 0) throw InputError("ordered_complex: empty vertex set or negative dimension");
    std::vector<std::set<int>> fs;
    for (const auto& f : facets) {
        for (int v : f)
            if (v < 0 || v >= n) throw InputError("ordered_complex: facet vertex out of range");
        fs.emplace_back(f.begin(), f.end());
    }
    auto adm = [fs](const std::vector<int>& sq) {
        std::set<int> vs(sq.begin(), sq.end());
        for (const auto& f : fs)
            if (std::includes(f.begin(), f.end(), vs.begin(), vs.end())) return true;
        return false;
    };
    return from_sequences(name.empty() ? "ordered" : name, pmax, adm, n);
}

SSetPtr standard_simplex(int n, int pmax) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    return ordered_complex(n + 1, {all}, pmax, "Delta[" + std::to_string(n) + "]");
}

SSetPtr boundary_triangle(int pmax) { return ordered_complex(3, {{0, 1}, {1, 2}, {0, 2}}, pmax, "boundary Delta[2]"); }

SSetPtr cyclic_nerve(int m, int pmax) {
    if (m < 1) throw InputError("cyclic_nerve: order must be positive");
    auto K = std::make_shared<SimplicialSet>();
    K->name = "nerve Z/" + std::to_string(m);
    K->pmax = pmax;
    std::vector<std::vector<std::vector<int>>> tuples(pmax + 1);
    std::vector<std::map<std::vector<int>, int>> index(pmax + 1);
    for (int p = 0; p <= pmax; ++p) {
        std::vector<int> cur(p, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == p) {
                index[p][cur] = static_cast<int>(tuples[p].size());
                tuples[p].push_back(cur);
                return;
            }
            for (int g = 0; g < m; ++g) {
                cur[i] = g;
                rec(i + 1);
            }
        };
        rec(0);
        K->count.push_back(static_cast<int>(tuples[p].size()));
        K->labels.emplace_back();
        for (const auto& t : tuples[p]) K->labels[p].push_back(seq_label(t, '(', ')'));
    }
    K->face.resize(pmax + 1);
    K->degen.resize(pmax + 1);
    for (int p = 0; p <= pmax; ++p)
        for (const auto& t : tuples[p]) {
            std::vector<int> fs, ds;
            if (p >= 1)
                for (int i = 0; i <= p; ++i) {
                    std::vector<int> u;
                    if (i == 0)
                        u.assign(t.begin() + 1, t.end());
                    else if (i == p)
                        u.assign(t.begin(), t.end() - 1);
                    else {
                        u = t;
                        u[i - 1] = (t[i - 1] + t[i]) % m;
                        u.erase(u.begin() + i);
                    }
                    fs.push_back(index[p - 1].at(u));
                }
            if (p < pmax)
                for (int i = 0; i <= p; ++i) {
                    std::vector<int> u = t;
                    u.insert(u.begin() + i, 0);
                    ds.push_back(index[p + 1].at(u));
                }
            K->face[p].push_back(std::move(fs));
            K->degen[p].push_back(std::move(ds));
        }
    K->finalize();
    return K;
}

std::vector<std::string> simplicial_map_failures(const SimplicialMap& f) {
    std::vector<std::string> out;
    const SimplicialSet& K = *f.source;
    const SimplicialSet& L = *f.target;
    if (K.pmax > L.pmax || static_cast<int>(f.f.size()) != K.pmax + 1) {
        out.push_back("dimension mismatch");
        return out;
    }
    for (int p = 0; p <= K.pmax; ++p) {
        if (static_cast<int>(f.f[p].size()) != K.size(p)) {
            out.push_back("table size at dim " + std::to_string(p));
            return out;
        }
        for (int y : f.f[p])
            if (y < 0 || y >= L.size(p)) {
                out.push_back("value out of range at dim " + std::to_string(p));
                return out;
            }
    }
    for (int p = 1; p <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x)
            for (int i = 0; i <= p; ++i)
                if (f.f[p - 1][K.d(p, i, x)] != L.d(p, i, f.f[p][x]))
                    out.push_back("face " + std::to_string(i) + " at " + K.labels[p][x]);
    for (int p = 0; p < K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x)
            for (int i = 0; i <= p; ++i)
                if (f.f[p + 1][K.s(p, i, x)] != L.s(p, i, f.f[p][x]))
                    out.push_back("degeneracy " + std::to_string(i) + " at " + K.labels[p][x]);
    return out;
}

SimplicialMap vertex_map(const SSetPtr& K, const SSetPtr& L, const std::vector<int>& on_vertices) {
    if (K->sequences.empty() || L->sequences.empty())
        throw InputError("vertex_map: both simplicial sets must be ordered complexes");
    if (K->pmax > L->pmax) throw InputError("vertex_map: target truncated too low");
    if (static_cast<int>(on_vertices.size()) != K->size(0)) throw InputError("vertex_map: wrong number of vertices");
    SimplicialMap f{K, L, {}};
    std::vector<std::map<std::vector<int>, int>> index(L->pmax + 1);
    for (int p = 0; p <= L->pmax; ++p)
        for (int y = 0; y < L->size(p); ++y) index[p][L->sequences[p][y]] = y;
    for (int p = 0; p <= K->pmax; ++p) {
        f.f.emplace_back();
        for (const auto& sq : K->sequences[p]) {
            std::vector<int> img;
            for (int v : sq) img.push_back(on_vertices.at(K->sequences[0][v][0]));
            auto it = index[p].find(img);
            if (it == index[p].end()) throw InputError("vertex_map: image " + seq_label(img) + " is not a simplex");
            f.f[p].push_back(it->second);
        }
    }
    return f;
}

SimplicialMap identity_map(const SSetPtr& K) {
    SimplicialMap f{K, K, {}};
    for (int p = 0; p <= K->pmax; ++p) {
        f.f.emplace_back(K->size(p));
        for (int x = 0; x < K->size(p); ++x) f.f[p][x] = x;
    }
    return f;
}

Cochain cup(const SimplicialSet& K, const Cochain& F, const Cochain& G) {
    int n = F.p + G.p;
    if (n > K.pmax) throw InputError("cup: total degree exceeds the truncation");
    Cochain out{n, {}};
    for (int x = 0; x < K.size(n); ++x) {
        const GradedMap& a = F.value.at(K.front(n, x, F.p));
        const GradedMap& b = G.value.at(K.back(n, x, G.p));
        if (a.source()->degrees() != b.target()->degrees()) throw InputError("cup: values are not composable");
        out.value.push_back(a.compose(b));
    }
    return out;
}

namespace {

const GradedMap& val(const std::vector<Cochain>& c, int p, int x) { return c.at(p).value.at(x); }

GradedMap cup_at(const SimplicialSet& K, const std::vector<Cochain>& A, int i, const std::vector<Cochain>& B, int j,
                 int x) {
    int p = i + j;
    return val(A, i, K.front(p, x, i)).compose(val(B, j, K.back(p, x, j)));
}

void accumulate(GradedMap& acc, const GradedMap& m, int sign) {
    if (m.source()->dim() != acc.source()->dim() || m.target()->dim() != acc.target()->dim())
        throw InputError("representation values have inconsistent shapes");
    acc = sign > 0 ? acc + m : acc - m;
}

void require_same_base(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp) {
    if (R.K != Rp.K) throw InputError("representations live on different simplicial sets");
}

}  // namespace

std::vector<std::string> rep_shape_failures(const RepUpToHomotopy& R) {
    std::vector<std::string> out;
    const SimplicialSet& K = *R.K;
    if (static_cast<int>(R.E.size()) != K.size(0)) out.push_back("one fiber per vertex required");
    if (static_cast<int>(R.F.size()) != K.pmax + 1) out.push_back("one cochain per dimension 0..pmax required");
    if (!out.empty()) return out;
    for (int p = 0; p <= K.pmax; ++p) {
        if (R.F[p].p != p || static_cast<int>(R.F[p].value.size()) != K.size(p)) {
            out.push_back("F_" + std::to_string(p) + " has the wrong size");
            continue;
        }
        for (int x = 0; x < K.size(p); ++x) {
            const GradedMap& m = R.F[p].value[x];
            const auto& src = R.E[K.vertex(p, x, p)];
            const auto& tgt = R.E[K.vertex(p, x, 0)];
            if (m.source()->degrees() != src->degrees() || m.target()->degrees() != tgt->degrees() ||
                m.degree() != 1 - p || !m.degree_consistent())
                out.push_back("F_" + std::to_string(p) + " mistyped at " + K.labels[p][x]);
        }
    }
    return out;
}

RuthResult ruth_check(const RepUpToHomotopy& R) {
    auto shape = rep_shape_failures(R);
    if (!shape.empty()) throw InputError("ruth_check: " + shape.front());
    const SimplicialSet& K = *R.K;
    for (int p = 0; p <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x) {
            GradedMap acc(R.E[K.vertex(p, x, p)], R.E[K.vertex(p, x, 0)], 2 - p);
            for (int i = 1; i <= p - 1; ++i) accumulate(acc, val(R.F, p - 1, K.d(p, i, x)), (i % 2 == 0) ? 1 : -1);
            for (int i = 0; i <= p; ++i) accumulate(acc, cup_at(K, R.F, i, R.F, p - i, x), (i % 2 == 0) ? -1 : 1);
            if (!acc.is_zero()) return {false, p, x};
        }
    return {};
}

bool is_normalized(const RepUpToHomotopy& R) {
    const SimplicialSet& K = *R.K;
    for (int p = 1; p <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x) {
            if (!K.degenerate(p, x)) continue;
            const GradedMap& m = R.F[p].value[x];
            if (p == 1 ? !(m == GradedMap::identity(m.source())) : !m.is_zero()) return false;
        }
    return true;
}

RepMorphism zero_rep_morphism(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp, int n) {
    require_same_base(R, Rp);
    const SimplicialSet& K = *R.K;
    RepMorphism m;
    m.degree = n;
    for (int p = 0; p <= K.pmax; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < K.size(p); ++x)
            c.value.emplace_back(R.E[K.vertex(p, x, p)], Rp.E[K.vertex(p, x, 0)], n - p);
        m.phi.push_back(std::move(c));
    }
    return m;
}

RepMorphism identity_rep_morphism(const RepUpToHomotopy& R) {
    RepMorphism m = zero_rep_morphism(R, R, 0);
    for (int v = 0; v < R.K->size(0); ++v) m.phi[0].value[v] = GradedMap::identity(R.E[v]);
    return m;
}

RepMorphism rep_hom_differential(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp, const RepMorphism& phi) {
    require_same_base(R, Rp);
    const SimplicialSet& K = *R.K;
    const int n = phi.degree;
    RepMorphism out = zero_rep_morphism(R, Rp, n + 1);
    for (int p = 0; p <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x) {
            GradedMap& acc = out.phi[p].value[x];
            for (int i = 0; i <= p; ++i)
                accumulate(acc, cup_at(K, Rp.F, p - i, phi.phi, i, x), (n * (p - i)) % 2 == 0 ? 1 : -1);
            for (int i = 0; i <= p; ++i)
                accumulate(acc, cup_at(K, phi.phi, p - i, R.F, i, x), ((n + p - i + 1) % 2 + 2) % 2 == 0 ? 1 : -1);
            for (int i = 1; i <= p - 1; ++i)
                accumulate(acc, val(phi.phi, p - 1, K.d(p, i, x)), ((i + n) % 2 + 2) % 2 == 0 ? 1 : -1);
        }
    return out;
}

RepMorphism compose_rep_morphisms(const RepUpToHomotopy& middle, const RepMorphism& psi, const RepMorphism& phi) {
    const SimplicialSet& K = *middle.K;
    for (int x = 0; x < K.size(0); ++x)
        if (phi.phi.at(0).value.at(x).target()->degrees() != middle.E[x]->degrees() ||
            psi.phi.at(0).value.at(x).source()->degrees() != middle.E[x]->degrees())
            throw InputError("compose: morphisms do not pass through the middle representation");
    const int n = phi.degree;
    RepMorphism out;
    out.degree = n + psi.degree;
    for (int p = 0; p <= K.pmax; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < K.size(p); ++x) {
            GradedMap acc(val(phi.phi, p, x).source(), val(psi.phi, p, x).target(), out.degree - p);
            for (int i = 0; i <= p; ++i)
                accumulate(acc, cup_at(K, psi.phi, p - i, phi.phi, i, x), (n * (p - i)) % 2 == 0 ? 1 : -1);
            c.value.push_back(std::move(acc));
        }
        out.phi.push_back(std::move(c));
    }
    return out;
}

namespace {

RepMorphism combine(const RepMorphism& a, const RepMorphism& b, int sign) {
    if (a.degree != b.degree || a.phi.size() != b.phi.size()) throw InputError("morphisms of different shape");
    RepMorphism out = a;
    for (size_t p = 0; p < a.phi.size(); ++p)
        for (size_t x = 0; x < a.phi[p].value.size(); ++x) accumulate(out.phi[p].value[x], b.phi[p].value[x], sign);
    return out;
}

}  // namespace

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) { return combine(a, b, 1); }
RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) { return combine(a, b, -1); }

bool operator==(const RepMorphism& a, const RepMorphism& b) {
    if (a.degree != b.degree || a.phi.size() != b.phi.size()) return false;
    for (size_t p = 0; p < a.phi.size(); ++p)
        for (size_t x = 0; x < a.phi[p].value.size(); ++x)
            if (!(a.phi[p].value[x] == b.phi[p].value[x])) return false;
    return true;
}

bool is_zero(const RepMorphism& a) {
    for (const auto& c : a.phi)
        for (const auto& m : c.value)
            if (!m.is_zero()) return false;
    return true;
}

RepUpToHomotopy pullback(const SimplicialMap& f, const RepUpToHomotopy& R) {
    if (f.target != R.K) throw InputError("pullback: representation is not on the target of f");
    auto fails = simplicial_map_failures(f);
    if (!fails.empty()) throw InputError("pullback: map is not simplicial: " + fails.front());
    const SimplicialSet& K = *f.source;
    RepUpToHomotopy out;
    out.K = f.source;
    for (int v = 0; v < K.size(0); ++v) out.E.push_back(R.E[f.f[0][v]]);
    for (int p = 0; p <= K.pmax; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < K.size(p); ++x) c.value.push_back(R.F[p].value[f.f[p][x]]);
        out.F.push_back(std::move(c));
    }
    return out;
}

RepMorphism pullback(const SimplicialMap& f, const RepMorphism& phi) {
    auto fails = simplicial_map_failures(f);
    if (!fails.empty()) throw InputError("pullback: map is not simplicial: " + fails.front());
    RepMorphism out;
    out.degree = phi.degree;
    for (int p = 0; p <= f.source->pmax; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < f.source->size(p); ++x) c.value.push_back(phi.phi.at(p).value.at(f.f[p][x]));
        out.phi.push_back(std::move(c));
    }
    return out;
}

namespace {

GradedMap random_map(const SpacePtr& src, const SpacePtr& tgt, int degree, std::mt19937_64& rng) {
    GradedMap m(src, tgt, degree);
    for (int c = 0; c < src->dim(); ++c)
        for (int r = 0; r < tgt->dim(); ++r)
            if (tgt->degree(r) == src->degree(c) + degree && rng() % 3 != 0) m.set(r, c, random_small_rational(rng));
    return m;
}

// Random complex with fibers in degrees 0..2.
CochainComplex random_complex(std::mt19937_64& rng, int max_fiber, const std::string& tag) {
    auto sp = std::make_shared<GradedSpace>();
    std::vector<int> dims(3);
    do {
        for (int k = 0; k < 3; ++k) dims[k] = static_cast<int>(rng() % (max_fiber + 1));
    } while (dims[0] + dims[1] + dims[2] == 0);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < dims[k]; ++i) sp->add(tag + "_" + std::to_string(k) + "_" + std::to_string(i), k);
    GradedMap d = random_map(sp, sp, 1, rng);
    // kill d_1 on the image of d_0: rows of d_1 restricted to the left kernel of d_0
    std::vector<int> e0 = sp->indices_of_degree(0), e1 = sp->indices_of_degree(1), e2 = sp->indices_of_degree(2);
    std::vector<SVec> img;
    for (int c : e0) {
        SVec v;
        for (size_t j = 0; j < e1.size(); ++j) {
            Q a = d.at(e1[j], c);
            if (a != 0) v.emplace(static_cast<int>(j), a);
        }
        img.push_back(v);
    }
    std::vector<SVec> left = nullspace(img, static_cast<int>(e1.size()));
    for (int r : e2) {
        SVec row;
        for (const auto& k : left) axpy(row, random_small_rational(rng), k);
        for (size_t j = 0; j < e1.size(); ++j) d.set(r, e1[j], entry(row, static_cast<int>(j)));
    }
    return CochainComplex(sp, d);
}

GradedMap random_chain_map(const CochainComplex& A, const CochainComplex& B, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> unknowns;
    for (int c = 0; c < A.space->dim(); ++c)
        for (int r = 0; r < B.space->dim(); ++r)
            if (B.space->degree(r) == A.space->degree(c)) unknowns.emplace_back(r, c);
    // dB f - f dA = 0, one equation per (row, column) entry
    std::map<std::pair<int, int>, SVec> eqs;
    for (int j = 0; j < static_cast<int>(unknowns.size()); ++j) {
        auto [r, c] = unknowns[j];
        for (const auto& [t, v] : B.d.column(r)) add_entry(eqs[{t, c}], j, v);
        for (int k = 0; k < A.space->dim(); ++k) {
            Q a = A.d.at(c, k);
            if (a != 0) add_entry(eqs[{r, k}], j, -a);
        }
    }
    std::vector<SVec> rows;
    for (auto& kv : eqs)
        if (!kv.second.empty()) rows.push_back(kv.second);
    GradedMap f(A.space, B.space, 0);
    for (const auto& k : nullspace(rows, static_cast<int>(unknowns.size()))) {
        Q s = random_small_rational(rng);
        for (const auto& [j, v] : k) f.add_to(unknowns[j].first, unknowns[j].second, s * v);
    }
    return f;
}

}  // namespace

RepUpToHomotopy random_rep(const SSetPtr& Kp, std::mt19937_64& rng, int max_fiber) {
    const SimplicialSet& K = *Kp;
    if (K.sequences.empty()) throw InputError("random_rep: needs an ordered complex");
    for (int x = 0; K.pmax >= 3 && x < K.size(3); ++x)
        if (!K.degenerate(3, x)) throw InputError("random_rep: nondegenerate 3-simplices are not supported");
    RepUpToHomotopy R;
    R.K = Kp;
    std::vector<CochainComplex> C;
    for (int v = 0; v < K.size(0); ++v) {
        C.push_back(random_complex(rng, max_fiber, "v" + std::to_string(v)));
        R.E.push_back(C.back().space);
    }
    for (int p = 0; p <= K.pmax; ++p) {
        Cochain c{p, {}};
        for (int x = 0; x < K.size(p); ++x)
            c.value.emplace_back(R.E[K.vertex(p, x, p)], R.E[K.vertex(p, x, 0)], 1 - p);
        R.F.push_back(std::move(c));
    }
    for (int v = 0; v < K.size(0); ++v) R.F[0].value[v] = C[v].d;
    if (K.pmax == 0) return R;

    std::set<int> long_edges;
    if (K.pmax >= 2)
        for (int x = 0; x < K.size(2); ++x)
            if (!K.degenerate(2, x) && !long_edges.insert(K.d(2, 1, x)).second)
                throw InputError("random_rep: two triangles share a long edge");
    for (int e = 0; e < K.size(1); ++e) {
        int v0 = K.vertex(1, e, 0), v1 = K.vertex(1, e, 1);
        if (K.degenerate(1, e))
            R.F[1].value[e] = GradedMap::identity(R.E[v0]);
        else if (!long_edges.count(e))
            R.F[1].value[e] = random_chain_map(C[v1], C[v0], rng);
    }
    if (K.pmax < 2) return R;
    for (int x = 0; x < K.size(2); ++x) {
        if (K.degenerate(2, x)) continue;
        int v0 = K.vertex(2, x, 0), v2 = K.vertex(2, x, 2);
        GradedMap h = random_map(R.E[v2], R.E[v0], -1, rng);
        R.F[2].value[x] = h;
        GradedMap path = R.F[1].value[K.d(2, 2, x)].compose(R.F[1].value[K.d(2, 0, x)]);
        GradedMap homot = C[v0].d.compose(h) + h.compose(C[v2].d);
        R.F[1].value[K.d(2, 1, x)] = path - homot;
    }
    return R;
}

RepMorphism random_rep_morphism(const RepUpToHomotopy& R, const RepUpToHomotopy& Rp, int n, std::mt19937_64& rng) {
    RepMorphism m = zero_rep_morphism(R, Rp, n);
    const SimplicialSet& K = *R.K;
    for (int p = 0; p <= K.pmax; ++p)
        for (int x = 0; x < K.size(p); ++x) {
            if (p > 0 && K.degenerate(p, x)) continue;
            m.phi[p].value[x] = random_map(R.E[K.vertex(p, x, p)], Rp.E[K.vertex(p, x, 0)], n - p, rng);
        }
    return m;
}

}  // namespace gha
