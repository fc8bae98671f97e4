#pragma once

// JSON input and output. One self-describing document format per structure,
// discriminated by "kind"; degrees travel as group element labels. Parsing
// reports the file and position of every failure; serialization is canonical
// so that parse(serialize(x)) reproduces x exactly.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graded/common.hpp"
#include "graded/module.hpp"
#include "graded/monomial.hpp"
#include "graded/report.hpp"
#include "graded/ring.hpp"

namespace graded {

inline bool operator==(const BasisVec& a, const BasisVec& b) {
    return a.name == b.name && a.order == b.order && a.degree == b.degree;
}
inline bool operator!=(const BasisVec& a, const BasisVec& b) { return !(a == b); }

inline bool ring_equal(const FiniteGradedRing& a, const FiniteGradedRing& b) {
    if (!(a.group() == b.group()) || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis(i) != b.basis(i)) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
    return a.one() == b.one();
}

inline bool monomial_equal(const MonomialGradedRing& a, const MonomialGradedRing& b) {
    return a.group() == b.group() && a.q() == b.q() && a.gamma() == b.gamma();
}

inline bool module_equal(const FiniteGradedModule& a, const FiniteGradedModule& b) {
    if (!ring_equal(a.ring(), b.ring()) || a.dim() != b.dim()) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (a.basis(j) != b.basis(j)) return false;
    for (std::size_t i = 0; i < a.ring().dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.act_basis(i, j) != b.act_basis(i, j)) return false;
    return true;
}

namespace detail {

inline const Json& jfield(const Json& j, const char* key, const std::string& ctx) {
    if (!j.is_object()) throw input_error(ctx + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw input_error(ctx + ": missing field '" + key + "'");
    return *it;
}

inline i64 jint(const Json& j, const std::string& ctx) {
    if (!j.is_number_integer()) throw input_error(ctx + ": expected an integer");
    return j.get<i64>();
}

inline std::string jstr(const Json& j, const std::string& ctx) {
    if (!j.is_string()) throw input_error(ctx + ": expected a string");
    return j.get<std::string>();
}

// Degrees are group element labels; bare integers are accepted as the
// decimal labels they print as.
inline i64 jdegree(const Json& j, const Group& G, const std::string& ctx) {
    std::string label;
    if (j.is_number_integer())
        label = std::to_string(j.get<i64>());
    else if (j.is_string())
        label = j.get<std::string>();
    else
        throw input_error(ctx + ": expected a degree label");
    try {
        return G.element_of_label(label);
    } catch (const input_error& e) {
        throw input_error(ctx + ": " + e.what());
    }
}

inline std::size_t jbasis_index(const std::vector<BasisVec>& basis, const std::string& name,
                                const std::string& ctx) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return i;
    throw input_error(ctx + ": unknown basis name '" + name + "'");
}

inline std::vector<BasisVec> jbasis(const Json& j, const Group& G, const std::string& ctx) {
    if (!j.is_array() || j.empty()) throw input_error(ctx + ": expected a nonempty array");
    std::vector<BasisVec> basis;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string bctx = ctx + "[" + std::to_string(i) + "]";
        const Json& bj = j[i];
        BasisVec b;
        b.name = jstr(jfield(bj, "name", bctx), bctx + ".name");
        b.order = jint(jfield(bj, "order", bctx), bctx + ".order");
        b.degree = jdegree(jfield(bj, "degree", bctx), G, bctx + ".degree");
        basis.push_back(std::move(b));
    }
    return basis;
}

inline Coords jelem(const Json& j, const std::vector<BasisVec>& basis, const std::string& ctx) {
    if (!j.is_object()) throw input_error(ctx + ": expected a {name: coeff} object");
    Coords c(basis.size(), 0);
    for (const auto& [k, v] : j.items()) {
        const std::size_t i = jbasis_index(basis, k, ctx);
        c[i] = mod_norm(jint(v, ctx + "." + k), basis[i].order);
    }
    return c;
}

inline Json elem_json(const Coords& c, const std::vector<BasisVec>& basis) {
    Json j = Json::object();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) j[basis[i].name] = c[i];
    return j;
}

// Canonical basis order: degree (element id, or the integer itself over Z),
// then name. Sorting is a relabeling, so products get remapped alongside.
inline std::vector<std::size_t> basis_perm(const std::vector<BasisVec>& basis) {
    std::vector<std::size_t> p(basis.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) {
        if (basis[a].degree != basis[b].degree) return basis[a].degree < basis[b].degree;
        return basis[a].name < basis[b].name;
    });
    return p;
}

inline Coords permute_coords(const Coords& c, const std::vector<std::size_t>& p) {
    Coords out(c.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = c[p[k]];
    return out;
}

}  // namespace detail

inline Json group_to_json(const Group& G) {
    Json j;
    if (G.is_integers()) {
        j["type"] = "integers";
        return j;
    }
    const i64 n = G.order();
    if (G == Group::cyclic(n)) {
        j["type"] = "cyclic";
        j["n"] = n;
        return j;
    }
    if (n % 2 == 0 && n >= 2 && G == Group::dihedral(n / 2)) {
        j["type"] = "dihedral";
        j["n"] = n / 2;
        return j;
    }
    j["type"] = "table";
    Json elems = Json::array();
    for (i64 g = 0; g < n; ++g) elems.push_back(G.label(g));
    j["elements"] = std::move(elems);
    Json table = Json::array();
    for (i64 a = 0; a < n; ++a) {
        Json row = Json::array();
        for (i64 b = 0; b < n; ++b) row.push_back(G.op(a, b));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

inline Group group_from_json(const Json& j, const std::string& ctx) {
    const std::string type = detail::jstr(detail::jfield(j, "type", ctx), ctx + ".type");
    if (type == "integers") return Group::integers();
    if (type == "cyclic") {
        const i64 n = detail::jint(detail::jfield(j, "n", ctx), ctx + ".n");
        if (n < 1) throw input_error(ctx + ".n: must be >= 1");
        return Group::cyclic(n);
    }
    if (type == "dihedral") {
        const i64 n = detail::jint(detail::jfield(j, "n", ctx), ctx + ".n");
        if (n < 1) throw input_error(ctx + ".n: must be >= 1");
        return Group::dihedral(n);
    }
    if (type == "table") {
        const Json& ej = detail::jfield(j, "elements", ctx);
        if (!ej.is_array() || ej.empty()) throw input_error(ctx + ".elements: expected a nonempty array");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < ej.size(); ++i)
            labels.push_back(detail::jstr(ej[i], ctx + ".elements[" + std::to_string(i) + "]"));
        const Json& tj = detail::jfield(j, "table", ctx);
        if (!tj.is_array() || tj.size() != labels.size())
            throw input_error(ctx + ".table: expected " + std::to_string(labels.size()) + " rows");
        std::vector<std::vector<i64>> table;
        for (std::size_t a = 0; a < tj.size(); ++a) {
            const std::string rctx = ctx + ".table[" + std::to_string(a) + "]";
            if (!tj[a].is_array() || tj[a].size() != labels.size())
                throw input_error(rctx + ": expected " + std::to_string(labels.size()) + " entries");
            std::vector<i64> row;
            for (std::size_t b = 0; b < tj[a].size(); ++b)
                row.push_back(detail::jint(tj[a][b], rctx + "[" + std::to_string(b) + "]"));
            table.push_back(std::move(row));
        }
        return Group::from_table("G" + std::to_string(labels.size()), std::move(labels),
                                 std::move(table));
    }
    throw input_error(ctx + ".type: unknown group type '" + type + "'");
}

inline Json ring_to_json(const FiniteGradedRing& R) {
    Json j;
    j["kind"] = "finite_graded_ring";
    j["name"] = R.name();
    j["group"] = group_to_json(R.group());
    Json basis = Json::array();
    for (std::size_t i = 0; i < R.dim(); ++i) {
        Json b;
        b["name"] = R.basis(i).name;
        b["order"] = R.basis(i).order;
        b["degree"] = R.group().label(R.basis(i).degree);
        basis.push_back(std::move(b));
    }
    j["basis"] = std::move(basis);
    j["one"] = detail::elem_json(R.one(), R.basis_list());
    Json mul = Json::array();
    for (std::size_t a = 0; a < R.dim(); ++a)
        for (std::size_t b = 0; b < R.dim(); ++b) {
            const Coords& p = R.basis_product(a, b);
            if (R.is_zero(p)) continue;
            Json t = Json::array();
            t.push_back(R.basis(a).name);
            t.push_back(R.basis(b).name);
            t.push_back(detail::elem_json(p, R.basis_list()));
            mul.push_back(std::move(t));
        }
    j["mul"] = std::move(mul);
    return j;
}

inline FiniteGradedRing ring_from_json(const Json& j, const std::string& ctx) {
    const Group G = group_from_json(detail::jfield(j, "group", ctx), ctx + ".group");
    std::string name = "ring";
    if (j.contains("name")) name = detail::jstr(j["name"], ctx + ".name");
    std::vector<BasisVec> basis = detail::jbasis(detail::jfield(j, "basis", ctx), G, ctx + ".basis");
    const std::size_t n = basis.size();
    std::vector<std::vector<Coords>> mul(n, std::vector<Coords>(n, Coords(n, 0)));
    const Json& mj = detail::jfield(j, "mul", ctx);
    if (!mj.is_array()) throw input_error(ctx + ".mul: expected an array of triples");
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t t = 0; t < mj.size(); ++t) {
        const std::string tctx = ctx + ".mul[" + std::to_string(t) + "]";
        const Json& tj = mj[t];
        if (!tj.is_array() || tj.size() != 3)
            throw input_error(tctx + ": expected [name, name, {name: coeff}]");
        const std::size_t a = detail::jbasis_index(basis, detail::jstr(tj[0], tctx), tctx);
        const std::size_t b = detail::jbasis_index(basis, detail::jstr(tj[1], tctx), tctx);
        if (seen[a][b]) throw input_error(tctx + ": duplicate product entry");
        seen[a][b] = true;
        mul[a][b] = detail::jelem(tj[2], basis, tctx);
    }
    const Coords one = detail::jelem(detail::jfield(j, "one", ctx), basis, ctx + ".one");
    return FiniteGradedRing(std::move(name), G, std::move(basis), std::move(mul), one);
}

inline Json monomial_to_json(const MonomialGradedRing& R) {
    Json j;
    j["kind"] = "monomial_ring";
    j["name"] = R.name();
    j["group"] = group_to_json(R.group());
    j["coeff_field_order"] = R.q();
    j["generator_degree"] = R.group().label(R.gamma());
    return j;
}

inline MonomialGradedRing monomial_from_json(const Json& j, const std::string& ctx) {
    const Group G = group_from_json(detail::jfield(j, "group", ctx), ctx + ".group");
    std::string name = "ring";
    if (j.contains("name")) name = detail::jstr(j["name"], ctx + ".name");
    const i64 q = detail::jint(detail::jfield(j, "coeff_field_order", ctx),
                               ctx + ".coeff_field_order");
    const i64 gamma =
        detail::jdegree(detail::jfield(j, "generator_degree", ctx), G, ctx + ".generator_degree");
    return MonomialGradedRing(std::move(name), q, G, gamma);
}

inline Json module_to_json(const FiniteGradedModule& M) {
    Json j;
    j["kind"] = "finite_graded_module";
    j["name"] = M.name();
    j["ring"] = ring_to_json(M.ring());
    Json basis = Json::array();
    for (std::size_t i = 0; i < M.dim(); ++i) {
        Json b;
        b["name"] = M.basis(i).name;
        b["order"] = M.basis(i).order;
        b["degree"] = M.group().label(M.basis(i).degree);
        basis.push_back(std::move(b));
    }
    j["basis"] = std::move(basis);
    Json action = Json::array();
    for (std::size_t i = 0; i < M.ring().dim(); ++i)
        for (std::size_t m = 0; m < M.dim(); ++m) {
            const Coords& p = M.act_basis(i, m);
            if (M.is_zero(p)) continue;
            Json t = Json::array();
            t.push_back(M.ring().basis(i).name);
            t.push_back(M.basis(m).name);
            t.push_back(detail::elem_json(p, M.basis_list()));
            action.push_back(std::move(t));
        }
    j["action"] = std::move(action);
    return j;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

// nlohmann reports line and column in the exception text; keep that and
// prefix the origin so errors read origin: parse error at line L, column C.
inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::string msg = e.what();
        const std::size_t cut = msg.find("] ");
        if (cut != std::string::npos) msg = msg.substr(cut + 2);
        throw input_error(origin + ": " + msg);
    }
}

inline std::string dir_of(const std::string& path) {
    const std::size_t cut = path.find_last_of('/');
    return cut == std::string::npos ? std::string(".") : path.substr(0, cut);
}

inline FiniteGradedModule module_from_json(const Json& j, const std::string& ctx,
                                           const std::string& base_dir) {
    const Json& rj = detail::jfield(j, "ring", ctx);
    std::optional<FiniteGradedRing> R;
    if (rj.is_object() && rj.contains("file")) {
        const std::string rel = detail::jstr(rj["file"], ctx + ".ring.file");
        const std::string path = rel.empty() || rel.front() == '/' ? rel : base_dir + "/" + rel;
        const Json inner = parse_json_text(read_text_file(path), path);
        const std::string kind =
            detail::jstr(detail::jfield(inner, "kind", path), path + ".kind");
        if (kind != "finite_graded_ring")
            throw input_error(path + ": module scalars must be a finite_graded_ring");
        R.emplace(ring_from_json(inner, path));
    } else {
        const std::string kind =
            detail::jstr(detail::jfield(rj, "kind", ctx + ".ring"), ctx + ".ring.kind");
        if (kind != "finite_graded_ring")
            throw input_error(ctx + ".ring: module scalars must be a finite_graded_ring");
        R.emplace(ring_from_json(rj, ctx + ".ring"));
    }
    std::string name = "module";
    if (j.contains("name")) name = detail::jstr(j["name"], ctx + ".name");
    std::vector<BasisVec> basis =
        detail::jbasis(detail::jfield(j, "basis", ctx), R->group(), ctx + ".basis");
    const std::size_t n = basis.size();
    std::vector<std::vector<Coords>> act(R->dim(), std::vector<Coords>(n, Coords(n, 0)));
    const Json& aj = detail::jfield(j, "action", ctx);
    if (!aj.is_array()) throw input_error(ctx + ".action: expected an array of triples");
    std::vector<std::vector<bool>> seen(R->dim(), std::vector<bool>(n, false));
    for (std::size_t t = 0; t < aj.size(); ++t) {
        const std::string tctx = ctx + ".action[" + std::to_string(t) + "]";
        const Json& tj = aj[t];
        if (!tj.is_array() || tj.size() != 3)
            throw input_error(tctx + ": expected [ring_basis, module_basis, {name: coeff}]");
        const std::size_t i =
            detail::jbasis_index(R->basis_list(), detail::jstr(tj[0], tctx), tctx);
        const std::size_t m = detail::jbasis_index(basis, detail::jstr(tj[1], tctx), tctx);
        if (seen[i][m]) throw input_error(tctx + ": duplicate action entry");
        seen[i][m] = true;
        act[i][m] = detail::jelem(tj[2], basis, tctx);
    }
    return FiniteGradedModule(std::move(name), std::move(*R), std::move(basis), std::move(act));
}

// A parsed document: exactly one of the three members is set.
struct ParsedStructure {
    std::string kind;
    std::optional<FiniteGradedRing> ring;
    std::optional<MonomialGradedRing> monomial;
    std::optional<FiniteGradedModule> module;
};

inline ParsedStructure parse_structure(const Json& j, const std::string& ctx,
                                       const std::string& base_dir) {
    ParsedStructure s;
    s.kind = detail::jstr(detail::jfield(j, "kind", ctx), ctx + ".kind");
    if (s.kind == "finite_graded_ring")
        s.ring.emplace(ring_from_json(j, ctx));
    else if (s.kind == "monomial_ring")
        s.monomial.emplace(monomial_from_json(j, ctx));
    else if (s.kind == "finite_graded_module")
        s.module.emplace(module_from_json(j, ctx, base_dir));
    else
        throw input_error(ctx + ".kind: unknown kind '" + s.kind + "'");
    return s;
}

inline ParsedStructure parse_structure_file(const std::string& path) {
    const Json j = parse_json_text(read_text_file(path), path);
    return parse_structure(j, path, dir_of(path));
}

inline Json structure_to_json(const ParsedStructure& s) {
    if (s.ring) return ring_to_json(*s.ring);
    if (s.monomial) return monomial_to_json(*s.monomial);
    return module_to_json(*s.module);
}

// fmt: relabel the basis into canonical order (degree, then name) and
// re-serialize. Idempotent; a file-referenced ring is inlined.
inline FiniteGradedRing sort_ring_basis(const FiniteGradedRing& R) {
    const std::vector<std::size_t> p = detail::basis_perm(R.basis_list());
    const std::size_t n = R.dim();
    std::vector<BasisVec> basis(n);
    for (std::size_t k = 0; k < n; ++k) basis[k] = R.basis(p[k]);
    std::vector<std::vector<Coords>> mul(n, std::vector<Coords>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            mul[a][b] = detail::permute_coords(R.basis_product(p[a], p[b]), p);
    return FiniteGradedRing(R.name(), R.group(), std::move(basis), std::move(mul),
                            detail::permute_coords(R.one(), p));
}

inline FiniteGradedModule sort_module_basis(const FiniteGradedModule& M) {
    const FiniteGradedRing R = sort_ring_basis(M.ring());
    const std::vector<std::size_t> pr = detail::basis_perm(M.ring().basis_list());
    const std::vector<std::size_t> pm = detail::basis_perm(M.basis_list());
    const std::size_t n = M.dim();
    std::vector<BasisVec> basis(n);
    for (std::size_t k = 0; k < n; ++k) basis[k] = M.basis(pm[k]);
    std::vector<std::vector<Coords>> act(R.dim(), std::vector<Coords>(n));
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t m = 0; m < n; ++m)
            act[i][m] = detail::permute_coords(M.act_basis(pr[i], pm[m]), pm);
    return FiniteGradedModule(M.name(), R, std::move(basis), std::move(act));
}

inline Json canonical_json(const ParsedStructure& s) {
    if (s.ring) return ring_to_json(sort_ring_basis(*s.ring));
    if (s.monomial) return monomial_to_json(*s.monomial);
    return module_to_json(sort_module_basis(*s.module));
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace graded
