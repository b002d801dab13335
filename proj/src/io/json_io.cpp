#include "gha/io/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gha {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<int>();
}

// Index given either as an integer or as a label of V.
int index_in(const Json& j, const std::vector<std::string>& labels, const std::string& where) {
    int n = static_cast<int>(labels.size());
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 0 || i >= n) throw InputError(where + ": index " + std::to_string(i) + " out of range");
        return i;
    }
    if (j.is_string()) {
        for (int i = 0; i < n; ++i)
            if (labels[i] == j.get<std::string>()) return i;
        throw InputError(where + ": unknown label '" + j.get<std::string>() + "'");
    }
    throw InputError(where + ": expected an index or a label");
}

std::vector<std::string> labels_of(const GradedSpace& V) {
    std::vector<std::string> out;
    for (int i = 0; i < V.dim(); ++i) out.push_back(V.label(i));
    return out;
}

SpacePtr empty_space() { return std::make_shared<GradedSpace>(); }

CochainComplex zero_complex() {
    auto sp = empty_space();
    return CochainComplex(sp, GradedMap(sp, sp, 1));
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(e.what());
    }
}

Q rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected a rational as a \"num/den\" string, got " + j.dump());
}

Json rational_to_json(const Q& q) { return format_rational(q); }

Json space_to_json(const GradedSpace& V) {
    Json out = Json::array();
    for (int i = 0; i < V.dim(); ++i) out.push_back({{"label", V.label(i)}, {"degree", V.degree(i)}});
    return out;
}

SpacePtr space_from_json(const Json& j) {
    auto sp = std::make_shared<GradedSpace>();
    if (j.is_object() && j.contains("degrees")) {
        int k = 0;
        for (const auto& d : j.at("degrees")) sp->add("v" + std::to_string(k++), as_int(d, "space degree"));
        return sp;
    }
    if (!j.is_array()) throw InputError("space: expected a list of {label, degree}");
    for (const auto& b : j) {
        std::string label = field(b, "label", "space").get<std::string>();
        if (sp->has(label)) throw InputError("space: duplicate label '" + label + "'");
        sp->add(label, as_int(field(b, "degree", "space"), "space degree"));
    }
    return sp;
}

Json map_to_json(const GradedMap& f) {
    Json entries = Json::array();
    for (int s = 0; s < f.source()->dim(); ++s)
        for (const auto& [t, v] : f.column(s)) entries.push_back({{"row", t}, {"col", s}, {"value", rational_to_json(v)}});
    return {{"degree", f.degree()}, {"entries", entries}};
}

GradedMap map_from_json(const Json& j, const SpacePtr& source, const SpacePtr& target) {
    int deg = as_int(field(j, "degree", "map"), "map degree");
    GradedMap f(source, target, deg);
    auto src = labels_of(*source), tgt = labels_of(*target);
    if (j.contains("matrix")) {
        const Json& m = j.at("matrix");
        if (!m.is_array() || static_cast<int>(m.size()) != target->dim())
            throw InputError("map: matrix must have one row per target basis element");
        for (int t = 0; t < target->dim(); ++t) {
            if (!m[t].is_array() || static_cast<int>(m[t].size()) != source->dim())
                throw InputError("map: matrix row " + std::to_string(t) + " has the wrong length");
            for (int s = 0; s < source->dim(); ++s) f.set(t, s, rational_from_json(m[t][s]));
        }
    }
    if (j.contains("entries"))
        for (const auto& e : j.at("entries"))
            f.add_to(index_in(field(e, "row", "map entry"), tgt, "map row"),
                     index_in(field(e, "col", "map entry"), src, "map col"), rational_from_json(field(e, "value", "map entry")));
    if (!f.degree_consistent()) throw InputError("map: entry incompatible with degree " + std::to_string(deg));
    return f;
}

Json complex_to_json(const CochainComplex& c) { return {{"space", space_to_json(*c.space)}, {"d", map_to_json(c.d)}}; }

CochainComplex complex_from_json(const Json& j) {
    SpacePtr sp = j.contains("space") ? space_from_json(j.at("space")) : space_from_json(j);
    GradedMap d(sp, sp, 1);
    if (j.contains("d")) {
        Json dj = j.at("d");
        if (!dj.contains("degree")) dj["degree"] = 1;
        d = map_from_json(dj, sp, sp);
        if (d.degree() != 1) throw InputError("complex: differential must have degree 1");
    }
    return CochainComplex(sp, d);
}

Json svec_to_json(const SVec& v, const GradedSpace& V) {
    Json out = Json::object();
    for (const auto& [k, q] : v) out[V.label(k)] = rational_to_json(q);
    return out;
}

SVec svec_from_json(const Json& j, const GradedSpace& V) {
    if (!j.is_object()) throw InputError("vector: expected an object {label: value}");
    auto labels = labels_of(V);
    SVec v;
    for (const auto& [k, q] : j.items()) add_entry(v, index_in(Json(k), labels, "vector"), rational_from_json(q));
    return v;
}

// ---- Lie algebras ----------------------------------------------------------------

LieAlgebra lie_from_json(const Json& j) {
    std::string name = j.value("name", std::string("lie"));
    std::vector<std::string> labels;
    for (const auto& l : field(j, "basis", "lie algebra")) labels.push_back(l.get<std::string>());
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
        throw InputError("lie algebra: duplicate basis label");
    if (j.contains("dim") && as_int(j.at("dim"), "dim") != static_cast<int>(labels.size()))
        throw InputError("lie algebra: dim does not match the number of basis labels");
    std::map<std::array<int, 3>, Q> given;
    for (const auto& e : j.value("structure_constants", Json::array())) {
        int a = index_in(field(e, "a", "structure constant"), labels, "structure constant a");
        int b = index_in(field(e, "b", "structure constant"), labels, "structure constant b");
        int c = index_in(field(e, "c", "structure constant"), labels, "structure constant c");
        if (given.count({a, b, c})) throw InputError("lie algebra: duplicate structure constant");
        given[{a, b, c}] = rational_from_json(field(e, "value", "structure constant"));
    }
    LieAlgebra g(name, labels);
    for (const auto& [k, v] : given) {
        g.set(k[0], k[1], k[2], v);
        if (!given.count({k[1], k[0], k[2]})) g.set(k[1], k[0], k[2], -v);
    }
    return g;
}

Json lie_to_json(const LieAlgebra& g) {
    Json sc = Json::array();
    int n = g.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.f(c, a, b) != 0)
                    sc.push_back({{"a", g.labels()[a]}, {"b", g.labels()[b]}, {"c", g.labels()[c]},
                                  {"value", rational_to_json(g.f(c, a, b))}});
    return {{"schema", "gha.lie/1"}, {"name", g.name()}, {"dim", n}, {"basis", g.labels()}, {"structure_constants", sc}};
}

// ---- simplicial sets ------------------------------------------------------------------

SSetPtr sset_from_json(const Json& j, int pmax_override) {
    std::string kind = field(j, "kind", "simplicial set").get<std::string>();
    int pmax = pmax_override >= 0 ? pmax_override : j.value("pmax", 3);
    if (pmax < 0) throw InputError("simplicial set: pmax must be nonnegative");
    if (kind == "simplex") return standard_simplex(as_int(field(j, "n", "simplex"), "n"), pmax);
    if (kind == "boundary_triangle") return boundary_triangle(pmax);
    if (kind == "cyclic_nerve") {
        int m = as_int(field(j, "m", "cyclic_nerve"), "m");
        if (m < 1) throw InputError("cyclic_nerve: m must be positive");
        return cyclic_nerve(m, pmax);
    }
    if (kind == "ordered_complex") {
        std::vector<std::vector<int>> facets = field(j, "facets", "ordered_complex").get<std::vector<std::vector<int>>>();
        return ordered_complex(as_int(field(j, "vertices", "ordered_complex"), "vertices"), facets, pmax,
                               j.value("name", std::string("")));
    }
    if (kind != "tables") throw InputError("simplicial set: unknown kind '" + kind + "'");

    auto K = std::make_shared<SimplicialSet>();
    K->name = j.value("name", std::string("K"));
    K->count = field(j, "count", "tables").get<std::vector<int>>();
    if (K->count.empty()) throw InputError("tables: empty count");
    K->pmax = static_cast<int>(K->count.size()) - 1;
    const Json& faces = field(j, "faces", "tables");
    const Json& degens = field(j, "degeneracies", "tables");
    if (static_cast<int>(faces.size()) != K->pmax || static_cast<int>(degens.size()) != K->pmax)
        throw InputError("tables: need faces for p = 1..pmax and degeneracies for p = 0..pmax-1");
    K->face.assign(K->pmax + 1, {});
    K->degen.assign(K->pmax + 1, {});
    auto in_range = [&](int v, int p) {
        if (v < 0 || v >= K->count[p]) throw InputError("tables: simplex index out of range in dimension " + std::to_string(p));
        return v;
    };
    for (int p = 1; p <= K->pmax; ++p) {
        const Json& fp = faces[p - 1];
        if (static_cast<int>(fp.size()) != K->count[p]) throw InputError("tables: face table size mismatch");
        for (const auto& row : fp) {
            auto r = row.get<std::vector<int>>();
            if (static_cast<int>(r.size()) != p + 1) throw InputError("tables: a p-simplex needs p+1 faces");
            for (int& v : r) v = in_range(v, p - 1);
            K->face[p].push_back(r);
        }
    }
    for (int p = 0; p < K->pmax; ++p) {
        const Json& dp = degens[p];
        if (static_cast<int>(dp.size()) != K->count[p]) throw InputError("tables: degeneracy table size mismatch");
        for (const auto& row : dp) {
            auto r = row.get<std::vector<int>>();
            if (static_cast<int>(r.size()) != p + 1) throw InputError("tables: a p-simplex needs p+1 degeneracies");
            for (int& v : r) v = in_range(v, p + 1);
            K->degen[p].push_back(r);
        }
    }
    K->labels.assign(K->pmax + 1, {});
    for (int p = 0; p <= K->pmax; ++p)
        for (int x = 0; x < K->count[p]; ++x) K->labels[p].push_back(std::to_string(p) + ":" + std::to_string(x));
    if (j.contains("labels")) {
        const Json& lj = j.at("labels");
        for (int p = 0; p <= K->pmax && p < static_cast<int>(lj.size()); ++p)
            for (int x = 0; x < K->count[p] && x < static_cast<int>(lj[p].size()); ++x) K->labels[p][x] = lj[p][x].get<std::string>();
    }
    K->sequences.assign(K->pmax + 1, {});
    K->finalize();
    return K;
}

Json sset_to_json(const SimplicialSet& K) {
    Json faces = Json::array(), degens = Json::array();
    for (int p = 1; p <= K.pmax; ++p) faces.push_back(K.face[p]);
    for (int p = 0; p < K.pmax; ++p) degens.push_back(K.degen[p]);
    return {{"schema", "gha.sset/1"}, {"kind", "tables"},  {"name", K.name},     {"count", K.count},
            {"faces", faces},         {"degeneracies", degens}, {"labels", K.labels}};
}

// ---- representations ----------------------------------------------------------------------

RepUpToHomotopy rep_from_json(const Json& j, const SSetPtr& K) {
    RepUpToHomotopy R;
    R.K = K;
    const Json& fibers = field(j, "fibers", "representation");
    if (static_cast<int>(fibers.size()) != K->size(0))
        throw InputError("representation: need one fiber per vertex (" + std::to_string(K->size(0)) + ")");
    for (const auto& f : fibers) R.E.push_back(space_from_json(f));
    R.F.resize(K->pmax + 1);
    for (int p = 0; p <= K->pmax; ++p) {
        R.F[p].p = p;
        for (int x = 0; x < K->size(p); ++x)
            R.F[p].value.emplace_back(R.E[K->vertex(p, x, p)], R.E[K->vertex(p, x, 0)], 1 - p);
    }
    std::set<std::pair<int, int>> listed;
    for (const auto& c : j.value("components", Json::array())) {
        int p = as_int(field(c, "p", "component"), "component p");
        if (p < 0 || p > K->pmax) throw InputError("component: p = " + std::to_string(p) + " outside 0..pmax");
        int x = index_in(field(c, "simplex", "component"), K->labels[p], "component simplex");
        if (!listed.insert({p, x}).second) throw InputError("component: listed twice at " + K->labels[p][x]);
        Json mj = c;
        mj["degree"] = 1 - p;
        R.F[p].value[x] = map_from_json(mj, R.E[K->vertex(p, x, p)], R.E[K->vertex(p, x, 0)]);
    }
    if (K->pmax >= 1)
        for (int x = 0; x < K->size(1); ++x)
            if (K->degenerate(1, x) && !listed.count({1, x})) R.F[1].value[x] = GradedMap::identity(R.E[K->vertex(1, x, 0)]);
    return R;
}

Json rep_to_json(const RepUpToHomotopy& R) {
    Json fibers = Json::array(), comps = Json::array();
    for (const auto& E : R.E) fibers.push_back(space_to_json(*E));
    for (int p = 0; p < static_cast<int>(R.F.size()); ++p)
        for (int x = 0; x < static_cast<int>(R.F[p].value.size()); ++x) {
            const GradedMap& f = R.F[p].value[x];
            if (f.is_zero()) continue;
            Json m = map_to_json(f);
            comps.push_back({{"p", p}, {"simplex", R.K->labels[p][x]}, {"entries", m["entries"]}});
        }
    return {{"schema", "gha.rep/1"}, {"fibers", fibers}, {"components", comps}};
}

// ---- DG categories ----------------------------------------------------------------------------

DGCatPtr dgcat_from_json(const Json& j) {
    std::string name = j.value("name", std::string("category"));
    if (j.contains("complexes")) {
        std::vector<CochainComplex> objs;
        std::vector<std::string> names;
        for (const auto& o : j.at("complexes")) {
            names.push_back(field(o, "name", "complexes").get<std::string>());
            objs.push_back(complex_from_json(o));
        }
        return complexes_category(objs, names, name);
    }
    auto C = std::make_shared<DGCategory>();
    C->name = name;
    for (const auto& o : field(j, "objects", "dg category")) C->objects.push_back(o.get<std::string>());
    int n = C->size();
    if (n == 0) throw InputError("dg category: no objects");
    C->hom.assign(n, std::vector<CochainComplex>(n, zero_complex()));
    std::set<std::pair<int, int>> seen;
    for (const auto& h : j.value("homs", Json::array())) {
        int a = index_in(field(h, "from", "hom"), C->objects, "hom from");
        int b = index_in(field(h, "to", "hom"), C->objects, "hom to");
        if (!seen.insert({a, b}).second) throw InputError("dg category: Hom listed twice");
        C->hom[a][b] = complex_from_json(field(h, "complex", "hom"));
    }
    for (const auto& c : j.value("compositions", Json::array())) {
        const Json& ob = field(c, "objects", "composition");
        if (!ob.is_array() || ob.size() != 3) throw InputError("composition: objects must be [a, b, c]");
        int a = index_in(ob[0], C->objects, "composition"), b = index_in(ob[1], C->objects, "composition"),
            cc = index_in(ob[2], C->objects, "composition");
        int g = index_in(field(c, "g", "composition"), labels_of(*C->space(b, cc)), "composition g");
        int f = index_in(field(c, "f", "composition"), labels_of(*C->space(a, b)), "composition f");
        SVec v = svec_from_json(field(c, "value", "composition"), *C->space(a, cc));
        if (!v.empty()) C->comp[{a, b, cc}][{g, f}] = v;
    }
    const Json& ids = field(j, "identities", "dg category");
    if (!ids.is_object()) throw InputError("dg category: identities must map object names to vectors");
    C->identity.assign(n, SVec{});
    for (int a = 0; a < n; ++a) {
        if (!ids.contains(C->objects[a])) throw InputError("dg category: no identity for " + C->objects[a]);
        C->identity[a] = svec_from_json(ids.at(C->objects[a]), *C->space(a, a));
    }
    return C;
}

Json dgcat_to_json(const DGCategory& C) {
    int n = C.size();
    Json homs = Json::array(), comps = Json::array(), ids = Json::object();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (C.space(a, b)->dim() > 0)
                homs.push_back({{"from", C.objects[a]}, {"to", C.objects[b]}, {"complex", complex_to_json(C.hom[a][b])}});
    for (const auto& [abc, table] : C.comp)
        for (const auto& [gf, v] : table) {
            auto [a, b, c] = abc;
            comps.push_back({{"objects", {C.objects[a], C.objects[b], C.objects[c]}},
                             {"g", C.space(b, c)->label(gf.first)},
                             {"f", C.space(a, b)->label(gf.second)},
                             {"value", svec_to_json(v, *C.space(a, c))}});
        }
    for (int a = 0; a < n; ++a) ids[C.objects[a]] = svec_to_json(C.identity[a], *C.space(a, a));
    return {{"schema", "gha.dgcat/1"}, {"name", C.name},      {"objects", C.objects},
            {"homs", homs},            {"compositions", comps}, {"identities", ids}};
}

// ---- filtered complexes -----------------------------------------------------------------------

FilteredComplex filtered_from_json(const Json& j) {
    FilteredComplex fc;
    auto sp = std::make_shared<GradedSpace>();
    for (const auto& b : field(j, "basis", "filtered complex")) {
        std::string label = field(b, "label", "basis").get<std::string>();
        if (sp->has(label)) throw InputError("filtered complex: duplicate label '" + label + "'");
        sp->add(label, as_int(field(b, "degree", "basis"), "degree"));
        fc.level.push_back(as_int(field(b, "level", "basis"), "level"));
    }
    Json dj = j.value("d", Json::object());
    dj["degree"] = 1;
    fc.complex = CochainComplex(sp, map_from_json(dj, sp, sp));
    return fc;
}

Json filtered_to_json(const FilteredComplex& fc) {
    Json basis = Json::array();
    const auto& V = *fc.complex.space;
    for (int i = 0; i < V.dim(); ++i) basis.push_back({{"label", V.label(i)}, {"degree", V.degree(i)}, {"level", fc.level[i]}});
    return {{"schema", "gha.filtered/1"}, {"basis", basis}, {"d", {{"entries", map_to_json(fc.complex.d)["entries"]}}}};
}

// ---- DGLAs, connections, polynomials ------------------------------------------------------------

DGLieAlgebra dgla_from_json(const Json& j) {
    DGLieAlgebra L;
    L.space = space_from_json(field(j, "basis", "dgla"));
    auto labels = labels_of(*L.space);
    std::map<std::pair<int, int>, SVec> given;
    for (const auto& e : j.value("bracket", Json::array())) {
        int a = index_in(field(e, "a", "bracket"), labels, "bracket a");
        int b = index_in(field(e, "b", "bracket"), labels, "bracket b");
        int c = index_in(field(e, "c", "bracket"), labels, "bracket c");
        add_entry(given[{a, b}], c, rational_from_json(field(e, "value", "bracket")));
    }
    for (const auto& [ab, v] : given) {
        if (v.empty()) continue;
        L.table[ab] = v;
        auto [a, b] = ab;
        if (!given.count({b, a})) {
            int sign = -sign_of_parity(static_cast<long>(L.space->degree(a)) * L.space->degree(b));
            L.table[{b, a}] = scaled(v, Q(sign));
        }
    }
    Json dj = j.value("d", Json::object());
    dj["degree"] = 1;
    L.d = map_from_json(dj, L.space, L.space);
    return L;
}

AlgebraicConnection connection_from_json(const Json& j, const LieAlgebra& g) {
    std::string kind = j.value("kind", std::string("explicit"));
    if (kind == "universal") {
        int s = j.value("s", 2);
        if (s < 1) throw InputError("connection: s must be positive");
        return universal_connection(weil_algebra(g, s));
    }
    if (kind == "canonical") return canonical_connection(ce_algebra(g));
    if (kind != "explicit") throw InputError("connection: unknown kind '" + kind + "'");
    std::string target = field(j, "target", "connection").get<std::string>();
    GDGPtr A;
    if (target == "weil")
        A = weil_algebra(g, j.value("s", 2)).A;
    else if (target == "ce")
        A = ce_algebra(g).A;
    else
        throw InputError("connection: target must be weil or ce");
    const Json& th = field(j, "theta", "connection");
    if (static_cast<int>(th.size()) != g.dim()) throw InputError("connection: need one theta value per basis element");
    AlgebraicConnection out{g, A, {}};
    for (const auto& t : th) out.theta.push_back(svec_from_json(t, *A->alg->space()));
    return out;
}

SVec polynomial_from_json(const Json& j, const SymmetricAlgebra& S) {
    const GCAlgebra& R = *S.A->alg;
    if (j.contains("terms")) return svec_from_json(j.at("terms"), *R.space());
    if (j.contains("invariant")) {
        auto ki = j.at("invariant").get<std::vector<int>>();
        if (ki.size() != 2) throw InputError("polynomial: invariant must be [k, i]");
        auto inv = invariant_polynomials(S, ki[0]);
        if (ki[1] < 0 || ki[1] >= static_cast<int>(inv.size()))
            throw InputError("polynomial: only " + std::to_string(inv.size()) + " invariants in degree " + std::to_string(ki[0]));
        return inv[ki[1]];
    }
    if (j.contains("product")) {
        SVec p = R.one();
        for (const auto& f : j.at("product")) p = R.mul(p, polynomial_from_json(f, S));
        return p;
    }
    throw InputError("polynomial: expected terms, invariant, or product");
}

int polynomial_degree(const Json& j, const LieAlgebra& g) {
    if (j.contains("terms")) {
        int deg = 0;
        for (const auto& [label, v] : j.at("terms").items()) {
            int d = 0;
            std::stringstream ss(label);
            std::string factor;
            while (std::getline(ss, factor, '*')) {
                if (factor == "1") continue;
                auto caret = factor.find('^');
                if (caret == std::string::npos) {
                    ++d;
                    continue;
                }
                try {
                    d += std::stoi(factor.substr(caret + 1));
                } catch (const std::exception&) {
                    throw InputError("polynomial: bad monomial '" + label + "'");
                }
            }
            deg = std::max(deg, d);
        }
        return deg;
    }
    if (j.contains("invariant")) return j.at("invariant").at(0).get<int>();
    if (j.contains("product")) {
        int d = 0;
        for (const auto& f : j.at("product")) d += polynomial_degree(f, g);
        return d;
    }
    throw InputError("polynomial: expected terms, invariant, or product");
}

}  // namespace gha
