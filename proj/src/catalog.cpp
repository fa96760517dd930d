#include "schurder/catalog.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace schurder {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// A side of a relation: "0", or terms joined by + and -.
PathCombination parse_side(const Quiver& q, const std::string& side) {
    PathCombination out;
    std::string s = trim(side);
    if (s == "0") return out;
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    for (char c : s) {
        if (c == '+' || c == '-') {
            if (!trim(cur).empty()) terms.push_back({sign, cur});
            cur.clear();
            sign = (c == '-') ? -1 : 1;
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) terms.push_back({sign, cur});
    for (auto& [sg, text] : terms) {
        std::istringstream is(text);
        std::vector<std::string> words;
        std::string w;
        while (is >> w) words.push_back(w);
        Rational coef(sg);
        if (!words.empty() && std::isdigit(static_cast<unsigned char>(words.front()[0]))) {
            coef *= parse_rational(words.front());
            words.erase(words.begin());
        }
        if (words.empty()) throw Error("ill-formed-relation", "term without arrows: " + text);
        out.push_back({coef, make_path(q, words)});
    }
    return out;
}

std::vector<Arrow> alternating_arrows(int m) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < m; ++i) {
        arrows.push_back({"alpha" + std::to_string(i), i - 1, i});
        arrows.push_back({"beta" + std::to_string(i), i, i - 1});
    }
    return arrows;
}

// Star with centre 0 and arms 1..k: alpha_i : i -> 0, beta_i : 0 -> i.
Quiver star(int k) {
    std::vector<std::string> v;
    for (int i = 0; i <= k; ++i) v.push_back(std::to_string(i));
    std::vector<Arrow> a;
    for (int i = 1; i <= k; ++i) {
        a.push_back({"alpha" + std::to_string(i), i, 0});
        a.push_back({"beta" + std::to_string(i), 0, i});
    }
    return Quiver(v, a);
}

Quiver numbered(int first, int last, const std::vector<std::tuple<std::string, int, int>>& arrows) {
    std::vector<std::string> v;
    for (int i = first; i <= last; ++i) v.push_back(std::to_string(i));
    std::vector<Arrow> a;
    for (auto& [n, s, t] : arrows) a.push_back({n, s - first, t - first});
    return Quiver(v, a);
}

std::string a_m_relations(int m) {
    std::ostringstream os;
    for (int i = 1; i + 2 <= m; ++i) {
        const std::string a = "alpha" + std::to_string(i), a1 = "alpha" + std::to_string(i + 1);
        const std::string b = "beta" + std::to_string(i), b1 = "beta" + std::to_string(i + 1);
        os << a << " " << a1 << " = 0; " << b1 << " " << b << " = 0; " << b << " " << a << " = " << a1 << " "
           << b1 << "; ";
    }
    if (m >= 2) os << "alpha1 beta1 = 0; ";
    return os.str();
}

}  // namespace

std::vector<PathCombination> parse_relations(const Quiver& q, const std::string& text) {
    std::vector<PathCombination> rels;
    for (const std::string& stmt : split(text, ';')) {
        if (trim(stmt).empty()) continue;
        auto sides = split(stmt, '=');
        if (sides.size() < 2) throw Error("ill-formed-relation", "missing '=' in: " + stmt);
        // "x = y = 0" means every side vanishes separately.
        bool to_zero = false;
        for (auto& sd : sides) to_zero = to_zero || trim(sd) == "0";
        if (to_zero) {
            for (auto& sd : sides)
                if (trim(sd) != "0") rels.push_back(parse_side(q, sd));
            continue;
        }
        for (std::size_t k = 0; k + 1 < sides.size(); ++k) {
            PathCombination lhs = parse_side(q, sides[k]);
            for (auto& t : parse_side(q, sides[k + 1])) lhs.push_back({-t.coef, t.path});
            if (lhs.empty()) throw Error("ill-formed-relation", "trivial relation: " + stmt);
            rels.push_back(lhs);
        }
    }
    return rels;
}

CatalogSource catalog_source(const std::string& name, int m) {
    if (name == "A" || name == "F") {
        if (name == "A" && m < 1) throw Error("invalid-params", "A_m needs m >= 1");
        if (name == "F" && (m < 3 || m % 2 == 0)) throw Error("invalid-params", "F_m needs odd m >= 3");
        std::vector<std::string> v;
        for (int i = 1; i <= m; ++i) v.push_back(std::to_string(i));
        CatalogSource src{Quiver(v, alternating_arrows(m)), a_m_relations(m), ""};
        if (name == "A") {
            src.arises_from = "blocks of Schur algebras of finite representation type";
        } else {
            const std::string k = std::to_string(m - 1);
            src.relations += "beta" + k + " alpha" + k + " = 0;";
            src.arises_from = "blocks of S(2,d)_2 with d odd and p = 2, and of S(2,d)_1";
        }
        return src;
    }
    if (m != 0) throw Error("invalid-params", name + " takes no parameter");
    if (name == "D3") {
        Quiver q({"1", "2", "3"}, {{"alpha1", 0, 1}, {"beta1", 1, 0}, {"beta2", 1, 2}, {"alpha2", 2, 1}});
        return {q, "alpha1 beta1 = alpha2 beta2 = 0; alpha1 beta2 alpha2 = beta2 alpha2 beta1 = 0",
                "blocks of S(2,4) and S(2,9) at p = 2"};
    }
    if (name == "D4")
        return {star(3),
                "alpha1 beta1 = alpha2 beta2 = alpha3 beta1 = alpha3 beta2 = 0; alpha1 beta3 = alpha2 beta3 = 0;"
                "beta2 alpha2 = beta3 alpha3; alpha1 beta2 alpha2 = beta2 alpha2 beta1 = 0",
                "blocks of S(2,9), S(2,10), S(2,11) at p = 3"};
    if (name == "R4") {
        std::vector<std::string> v{"1", "2", "3", "4"};
        return {Quiver(v, alternating_arrows(4)),
                "alpha1 beta1 = alpha1 alpha2 = beta2 beta1 = 0; beta1 alpha1 = alpha2 beta2;"
                "beta2 alpha2 = alpha3 beta3",
                "a block of S(3,7) at p = 3"};
    }
    if (name == "H4")
        return {star(3),
                "alpha1 beta1 = alpha1 beta2 = alpha1 beta3 = 0; alpha3 beta1 = alpha3 beta3 = alpha2 beta1 = 0;"
                "beta2 alpha2 = beta1 alpha1 + beta3 alpha3",
                "a block of S(3,8) at p = 3"};
    if (name == "G" || name == "B") {
        const int k = name == "G" ? 3 : 4;
        std::ostringstream os;
        for (int i = 1; i <= k; ++i) os << (i > 1 ? " = " : "") << "beta" << i << " alpha" << i;
        os << ";";
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) os << "alpha" << i << " beta" << j << " = 0;";
        return {star(k), os.str(),
                name == "G" ? "blocks of S(3,4)_1, S(3,5)_1 at p = 3 and S(3,2)_1, S(3,3)_1 at p = 2"
                            : "blocks of S(4,3)_1, S(4,4)_1, S(4,5)_1 at p = 3 and S(4,2)_1, S(4,3)_1 at p = 2"};
    }
    if (name == "B1") {
        std::ostringstream os;
        os << "beta1 alpha1 = beta2 alpha2 = beta3 alpha3 = beta4 alpha4;";
        for (int i = 1; i <= 3; ++i) os << "alpha" << i << " beta4 = beta" << i << " alpha" << i << " = 0;";
        return {star(4), os.str(), "blocks of S(3,d)_1 with p >= 5, p <= d <= 2p-1, and S(3,3)_1 at p = 3"};
    }
    if (name == "D")
        return {star(3),
                "beta1 alpha1 = beta2 alpha2; alpha1 beta1 = alpha1 beta2 = 0;"
                "alpha2 beta1 = alpha2 beta2 = alpha3 beta3 = 0;"
                "alpha1 beta3 alpha3 = alpha2 beta3 alpha3 = beta3 alpha3 beta2 = beta3 alpha3 beta1 = 0",
                "blocks of S(2,4)_2 and S(2,9)_3 at p = 2"};
    if (name == "W1")
        return {numbered(0, 5, {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}, {"d", 0, 4}, {"e", 0, 5}}), "", "wild"};
    if (name == "W2")
        return {numbered(0, 5, {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}, {"d", 4, 0}, {"e", 0, 5}}), "", "wild"};
    if (name == "W3")
        return {numbered(0, 5, {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}, {"d", 4, 0}, {"e", 0, 5}}), "d e = 0",
                "wild"};
    if (name == "W4")
        return {numbered(0, 5, {{"a", 1, 0}, {"b", 2, 0}, {"c", 0, 3}, {"d", 0, 4}, {"e", 0, 5}}), "", "wild"};
    if (name == "W5")
        return {numbered(0, 5, {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}, {"d", 0, 4}, {"e", 0, 5}}), "c d = 0",
                "wild"};
    if (name == "W6")
        return {numbered(1, 9,
                         {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"d", 4, 5}, {"e", 5, 6}, {"f", 6, 7},
                          {"g", 7, 8}, {"h", 9, 4}}),
                "", "wild"};
    if (name == "W")
        return {numbered(1, 9,
                         {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4}, {"d", 3, 5}, {"e", 4, 6}, {"f", 5, 6},
                          {"g", 6, 7}, {"h", 7, 8}, {"t", 8, 9}}),
                "", "underlying quiver of a wild box; the box differential is not modelled"};
    throw Error("unknown-name", name);
}

std::vector<std::string> catalog_names() {
    return {"A", "D3", "D4", "R4", "H4", "G", "F", "B", "B1", "D", "W1", "W2", "W3", "W4", "W5", "W6", "W"};
}

const CatalogEntry& catalog_get(const std::string& name, int m) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, CatalogEntry> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(name, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    CatalogSource src = catalog_source(name, m);
    std::string label = (name == "A" || name == "F") ? name + std::to_string(m) : name;
    Algebra alg = Algebra::build(label, src.quiver, parse_relations(src.quiver, src.relations));
    return cache.emplace(key, CatalogEntry{name, m, std::move(alg), src.arises_from}).first->second;
}

}  // namespace schurder
