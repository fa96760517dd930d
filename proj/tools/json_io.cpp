#include "json_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>

namespace schurder::io {

namespace {

[[noreturn]] void violation(const std::string& pointer, const std::string& what) {
    throw Error("schema-violation", pointer + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& pointer) {
    if (!j.is_object()) violation(pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) violation(pointer + "/" + key, "missing");
    return *it;
}

std::string as_string(const json& j, const std::string& pointer) {
    if (!j.is_string()) violation(pointer, "expected a string");
    return j.get<std::string>();
}

int as_int(const json& j, const std::string& pointer) {
    if (!j.is_number_integer()) violation(pointer, "expected an integer");
    return j.get<int>();
}

Rational as_rational(const json& j, const std::string& pointer) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    try {
        return parse_rational(as_string(j, pointer));
    } catch (const Error&) {
        violation(pointer, "not a rational");
    }
}

int vertex_of(const Quiver& q, const json& j, const std::string& pointer) {
    try {
        return q.vertex_index(as_string(j, pointer));
    } catch (const Error&) {
        violation(pointer, "unknown vertex " + j.dump());
    }
}

void check_schema(const json& j) {
    if (j.is_object() && j.contains("schema") && j["schema"] != "1") violation("/schema", "expected \"1\"");
}

std::vector<int> by_vertex(const std::vector<int>& summands) {
    std::vector<int> perm(summands.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return summands[a] < summands[b]; });
    return perm;
}

}  // namespace

json quiver_json(const std::string& name, const Quiver& q, const std::vector<PathCombination>& relations) {
    json j{{"schema", "1"}, {"name", name}, {"vertices", q.vertices()}};
    j["arrows"] = json::array();
    for (auto& a : q.arrows())
        j["arrows"].push_back({{"name", a.name}, {"src", q.vertices()[a.src]}, {"tgt", q.vertices()[a.tgt]}});
    j["relations"] = json::array();
    for (auto& rel : relations) {
        json terms = json::array();
        for (auto& t : rel) {
            json path = json::array();
            for (int a : t.path.arrows) path.push_back(q.arrow(a).name);
            terms.push_back({{"coef", to_string(t.coef)}, {"path", path}});
        }
        j["relations"].push_back(terms);
    }
    return j;
}

std::pair<std::string, int> parse_label(const std::string& label) {
    if (label.size() > 1 && (label[0] == 'A' || label[0] == 'F') &&
        std::all_of(label.begin() + 1, label.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return {label.substr(0, 1), std::stoi(label.substr(1))};
    return {label, 0};
}

const Algebra& algebra_from_json(const json& j, const std::string& pointer) {
    if (j.is_string()) {
        auto [name, m] = parse_label(j.get<std::string>());
        return catalog_get(name, m).algebra;
    }
    if (j.is_object() && !j.contains("vertices")) {
        const std::string name = as_string(field(j, "name", pointer), pointer + "/name");
        const int m = j.contains("m") ? as_int(j["m"], pointer + "/m") : 0;
        return catalog_get(name, m).algebra;
    }
    static std::deque<Algebra> inline_algebras;
    std::vector<std::string> vertices;
    const json& vs = field(j, "vertices", pointer);
    if (!vs.is_array()) violation(pointer + "/vertices", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], pointer + "/vertices/" + std::to_string(i)));
    Quiver probe(vertices, {});
    std::vector<Arrow> arrows;
    const json& as = field(j, "arrows", pointer);
    if (!as.is_array()) violation(pointer + "/arrows", "expected an array");
    for (std::size_t i = 0; i < as.size(); ++i) {
        const std::string p = pointer + "/arrows/" + std::to_string(i);
        arrows.push_back({as_string(field(as[i], "name", p), p + "/name"), vertex_of(probe, field(as[i], "src", p), p + "/src"),
                          vertex_of(probe, field(as[i], "tgt", p), p + "/tgt")});
    }
    Quiver q(vertices, arrows);
    std::vector<PathCombination> rels;
    if (j.contains("relations")) {
        const json& rs = j["relations"];
        for (std::size_t r = 0; r < rs.size(); ++r) {
            PathCombination rel;
            for (std::size_t t = 0; t < rs[r].size(); ++t) {
                const std::string p = pointer + "/relations/" + std::to_string(r) + "/" + std::to_string(t);
                std::vector<std::string> names;
                for (auto& a : field(rs[r][t], "path", p)) names.push_back(as_string(a, p + "/path"));
                try {
                    rel.push_back({as_rational(field(rs[r][t], "coef", p), p + "/coef"), make_path(q, names)});
                } catch (const Error& e) {
                    violation(p + "/path", e.what());
                }
            }
            rels.push_back(rel);
        }
    }
    const std::string name = j.contains("name") ? as_string(j["name"], pointer + "/name") : "inline";
    inline_algebras.push_back(Algebra::build(name, q, rels));
    return inline_algebras.back();
}

json element_json(const Algebra& alg, const Element& e) {
    const Quiver& q = alg.quiver();
    json terms = json::array();
    for (int i = 0; i < alg.dim(); ++i) {
        if (is_zero(e(i))) continue;
        const Path& p = alg.basis_path(i);
        json path = json::array();
        for (int a : p.arrows) path.push_back(q.arrow(a).name);
        json t{{"coef", to_string(e(i))}, {"path", path}};
        if (p.trivial()) t["vertex"] = q.vertices()[p.start];
        terms.push_back(t);
    }
    return terms;
}

Element element_from_json(const Algebra& alg, const json& j, int src, int tgt, const std::string& pointer) {
    const Quiver& q = alg.quiver();
    if (!j.is_array()) violation(pointer, "expected a list of terms");
    PathCombination c;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string p = pointer + "/" + std::to_string(t);
        std::vector<std::string> names;
        const json& path = field(j[t], "path", p);
        if (!path.is_array()) violation(p + "/path", "expected an array");
        for (auto& a : path) names.push_back(as_string(a, p + "/path"));
        int vertex = -1;
        if (names.empty()) vertex = vertex_of(q, field(j[t], "vertex", p), p + "/vertex");
        try {
            c.push_back({as_rational(field(j[t], "coef", p), p + "/coef"), make_path(q, names, vertex)});
        } catch (const Error& e) {
            violation(p + "/path", e.what());
        }
    }
    Element e = alg.normalize(c);
    if (!alg.is_homogeneous(e, src, tgt))
        violation(pointer, "paths must run from " + q.vertices()[src] + " to " + q.vertices()[tgt]);
    return e;
}

json complex_json(const std::string& algebra_label, const Algebra& alg, const ProjComplex& c) {
    const Quiver& q = alg.quiver();
    json j{{"schema", "1"}, {"algebra", algebra_label}, {"degrees", json::object()}, {"differentials", json::object()}};
    for (int i = c.lo; i <= c.hi(); ++i) {
        json mult = json::object();
        for (int v : c.term(i)) {
            const std::string& name = q.vertices()[v];
            mult[name] = mult.value(name, 0) + 1;
        }
        j["degrees"][std::to_string(i)] = mult;
    }
    for (int i = c.lo; i < c.hi(); ++i) {
        const ProjMorphism& d = c.diffs[i - c.lo];
        const auto pr = by_vertex(d.source), pc = by_vertex(d.target);
        json grid = json::array();
        for (int r : pr) {
            json row = json::array();
            for (int col : pc) row.push_back(element_json(alg, d.at(r, col)));
            grid.push_back(row);
        }
        j["differentials"][std::to_string(i)] = grid;
    }
    return j;
}

ProjComplex complex_from_json(const Algebra& alg, const json& j) {
    check_schema(j);
    const Quiver& q = alg.quiver();
    const json& degs = field(j, "degrees", "");
    if (!degs.is_object()) violation("/degrees", "expected an object");
    std::map<int, std::vector<int>> terms;
    for (auto& [key, mult] : degs.items()) {
        const std::string p = "/degrees/" + key;
        int deg = 0;
        try {
            deg = std::stoi(key);
        } catch (...) {
            violation(p, "degree keys must be integers");
        }
        std::vector<int>& t = terms[deg];
        if (!mult.is_object()) violation(p, "expected {vertex: multiplicity}");
        for (auto& [v, n] : mult.items()) {
            const int vi = vertex_of(q, json(v), p + "/" + v);
            const int count = as_int(n, p + "/" + v);
            if (count < 0) violation(p + "/" + v, "negative multiplicity");
            t.insert(t.end(), count, vi);
        }
        std::sort(t.begin(), t.end());
    }
    if (terms.empty()) return zero_complex();
    ProjComplex c;
    c.lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    for (int i = c.lo; i <= hi; ++i) c.terms.push_back(terms.count(i) ? terms[i] : std::vector<int>{});
    const json diffs = j.value("differentials", json::object());
    for (auto& [key, _] : diffs.items()) {
        int deg = 0;
        try {
            deg = std::stoi(key);
        } catch (...) {
            violation("/differentials/" + key, "degree keys must be integers");
        }
        if (deg < c.lo || deg >= hi) violation("/differentials/" + key, "outside the range of degrees");
    }
    for (int i = c.lo; i < hi; ++i) {
        ProjMorphism d = zero_morphism(alg, c.terms[i - c.lo], c.terms[i + 1 - c.lo]);
        const std::string key = std::to_string(i), p = "/differentials/" + key;
        if (diffs.contains(key)) {
            const json& grid = diffs[key];
            if (!grid.is_array() || static_cast<int>(grid.size()) != d.rows())
                violation(p, "expected " + std::to_string(d.rows()) + " rows");
            for (int r = 0; r < d.rows(); ++r) {
                if (!grid[r].is_array() || static_cast<int>(grid[r].size()) != d.cols())
                    violation(p + "/" + std::to_string(r), "expected " + std::to_string(d.cols()) + " columns");
                for (int col = 0; col < d.cols(); ++col)
                    d.at(r, col) = element_from_json(alg, grid[r][col], d.source[r], d.target[col],
                                                     p + "/" + std::to_string(r) + "/" + std::to_string(col));
            }
        }
        c.diffs.push_back(d);
    }
    return c;
}

json matrix_json(const MatQ& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json rep_json(const std::string& quiver_label, const Quiver& q, const ModuleRep& m) {
    json j{{"schema", "1"}, {"quiver", quiver_label}, {"dims", json::object()}, {"arrows", json::object()}};
    for (int v = 0; v < q.num_vertices(); ++v) j["dims"][q.vertices()[v]] = m.dims[v];
    for (int a = 0; a < q.num_arrows(); ++a) j["arrows"][q.arrow(a).name] = matrix_json(m.arrow_maps[a]);
    return j;
}

ModuleRep rep_from_json(const Quiver& q, const json& j) {
    check_schema(j);
    ModuleRep m;
    m.dims.assign(q.num_vertices(), 0);
    const json& dims = field(j, "dims", "");
    if (!dims.is_object()) violation("/dims", "expected an object");
    for (auto& [v, n] : dims.items()) {
        const int vi = vertex_of(q, json(v), "/dims/" + v);
        m.dims[vi] = as_int(n, "/dims/" + v);
        if (m.dims[vi] < 0) violation("/dims/" + v, "negative dimension");
    }
    const json arrows = j.value("arrows", json::object());
    for (auto& [name, _] : arrows.items()) {
        try {
            q.arrow_index(name);
        } catch (const Error&) {
            violation("/arrows/" + name, "unknown arrow");
        }
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        const int rows = m.dims[ar.src], cols = m.dims[ar.tgt];
        MatQ x = zeros<Rational>(rows, cols);
        if (arrows.contains(ar.name)) {
            const std::string p = "/arrows/" + ar.name;
            const json& g = arrows[ar.name];
            if (!g.is_array() || static_cast<int>(g.size()) != rows) violation(p, "expected " + std::to_string(rows) + " rows");
            for (int r = 0; r < rows; ++r) {
                if (!g[r].is_array() || static_cast<int>(g[r].size()) != cols)
                    violation(p + "/" + std::to_string(r), "expected " + std::to_string(cols) + " columns");
                for (int c = 0; c < cols; ++c)
                    x(r, c) = as_rational(g[r][c], p + "/" + std::to_string(r) + "/" + std::to_string(c));
            }
        }
        m.arrow_maps.push_back(x);
    }
    return m;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("schema-violation", path + ": " + e.what());
    }
}

}  // namespace schurder::io
