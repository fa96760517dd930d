#include "schurder/f3.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace schurder::f3 {

bool two_element(Kind k) { return k == Kind::y || k == Kind::p; }
bool in_E(Kind k) { return k == Kind::x || k == Kind::y || k == Kind::z; }

namespace {

char kind_char(Kind k) { return "xyzrpq"[static_cast<int>(k)]; }

// Position inside its semi-chain: y < x < z and r < p < q.
int rank_of(Kind k) {
    switch (k) {
        case Kind::y: case Kind::r: return 0;
        case Kind::x: case Kind::p: return 1;
        default: return 2;
    }
}

std::vector<Elem> elems_of(const Letter& l) {
    if (two_element(l.kind)) return {{l.kind, -1, l.i}, {l.kind, 1, l.i}};
    return {{l.kind, 0, l.i}};
}

Word translated(Word w, int d) {
    for (auto& l : w.w) l.i += d;
    return w;
}

int min_index(const Word& w) {
    int m = w.w.front().i;
    for (auto& l : w.w) m = std::min(m, l.i);
    return m;
}

}  // namespace

std::string to_string(const Letter& l) { return std::string(1, kind_char(l.kind)) + "[" + std::to_string(l.i) + "]"; }

std::string to_string(const Elem& e) {
    std::string s(1, kind_char(e.kind));
    if (e.sign) s += e.sign < 0 ? "-" : "+";
    return s + "[" + std::to_string(e.i) + "]";
}

bool lt(const Elem& a, const Elem& b) {
    return a.i == b.i && in_E(a.kind) == in_E(b.kind) && rank_of(a.kind) < rank_of(b.kind);
}

bool comparable(const Elem& a, const Elem& b) { return a == b || lt(a, b) || lt(b, a); }

std::optional<Elem> partner(const Elem& e) {
    switch (e.kind) {
        case Kind::r: return Elem{Kind::x, 0, e.i + 2};
        case Kind::x: return Elem{Kind::r, 0, e.i - 2};
        case Kind::q: return Elem{Kind::z, 0, e.i + 1};
        case Kind::z: return Elem{Kind::q, 0, e.i - 1};
        default: return std::nullopt;
    }
}

BunchInstance c_f3(int lo, int hi) {
    BunchInstance b;
    b.lo = lo;
    b.hi = hi;
    for (int i = lo; i <= hi; ++i)
        for (Kind k : {Kind::y, Kind::x, Kind::z, Kind::r, Kind::p, Kind::q})
            for (auto& e : elems_of({k, i})) b.elements.push_back(e);
    for (auto& a : b.elements)
        for (auto& c : b.elements) {
            if (lt(a, c)) b.less.emplace_back(a, c);
            if (auto p = partner(a); p && *p == c) b.glued.emplace_back(a, c);
        }
    return b;
}

std::string check_bunch(const BunchInstance& b) {
    auto less = [&](const Elem& a, const Elem& c) {
        return std::find(b.less.begin(), b.less.end(), std::pair{a, c}) != b.less.end();
    };
    auto same_chain = [](const Elem& a, const Elem& c) { return a.i == c.i && in_E(a.kind) == in_E(c.kind); };
    for (auto& [a, c] : b.less) {
        if (!same_chain(a, c)) return "order relates " + to_string(a) + " and " + to_string(c) + " across semi-chains";
        if (less(c, a)) return "order is not antisymmetric at " + to_string(a);
    }
    for (auto& a : b.elements) {
        int incomparable = 0;
        int glued = 0;
        for (auto& c : b.elements) {
            if (same_chain(a, c) && !(a == c) && !less(a, c) && !less(c, a)) ++incomparable;
            for (auto& [u, v] : b.glued)
                if ((u == a && v == c) || (v == a && u == c)) ++glued;
        }
        if (incomparable > 1) return to_string(a) + " is incomparable with more than one element";
        if (glued > 2) return "class of " + to_string(a) + " has more than two elements";
        if (glued > 0 && incomparable > 0) return to_string(a) + " is glued but not comparable with its semi-chain";
    }
    return "";
}

bool tilde(const Letter& a, const Letter& b) {
    if (two_element(a.kind) || two_element(b.kind)) return a == b && two_element(a.kind);
    auto p = partner(Elem{a.kind, 0, a.i});
    return p && *p == Elem{b.kind, 0, b.i};
}

bool dash(const Letter& a, const Letter& b) { return a.i == b.i && in_E(a.kind) != in_E(b.kind); }

Word parse_word(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '<' && c != '>') s += c;
    Word w;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error("malformed-word", why + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
    };
    auto read_letter = [&] {
        static const std::string kinds = "xyzrpq";
        if (pos >= s.size() || kinds.find(s[pos]) == std::string::npos) fail("expected a letter x, y, z, r, p or q");
        Letter l{static_cast<Kind>(kinds.find(s[pos++])), 0};
        const bool bracket = pos < s.size() && s[pos] == '[';
        if (bracket) ++pos;
        const std::size_t start = pos;
        if (bracket && pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (bracket && pos == start + 1 && s[start] == '-')) fail("expected an index");
        l.i = std::stoi(s.substr(start, pos - start));
        if (bracket) {
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
        }
        return l;
    };
    w.w.push_back(read_letter());
    while (pos < s.size()) {
        if (s[pos] == '~') w.r.push_back(Link::tilde);
        else if (s[pos] == '-') w.r.push_back(Link::dash);
        else fail("expected '~' or '-'");
        ++pos;
        w.w.push_back(read_letter());
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s = to_string(w.w.at(0));
    for (int k = 0; k < w.m(); ++k) s += (w.r[k] == Link::tilde ? "~" : "-") + to_string(w.w[k + 1]);
    return s;
}

Word reversed(const Word& w) {
    Word v{{w.w.rbegin(), w.w.rend()}, {w.r.rbegin(), w.r.rend()}};
    return v;
}

WordInfo classify_word(const Word& w) {
    WordInfo info;
    const int m = w.m();
    if (w.w.size() != w.r.size() + 1) {
        info.violation = "shape";
        return info;
    }
    for (int k = 1; k <= m; ++k) {
        const Letter &a = w.w[k - 1], &b = w.w[k];
        const Link rk = w.r[k - 1];
        if ((rk == Link::tilde) != tilde(a, b)) info.violation = "a";
        else if ((rk == Link::dash) != dash(a, b)) info.violation = "b";
        else if (k < m && w.r[k] == rk) info.violation = "c";
        if (!info.violation.empty()) return info;
    }
    info.valid = true;

    auto glued_singleton = [](const Letter& l) { return !two_element(l.kind) && partner(Elem{l.kind, 0, l.i}); };
    info.full = (!glued_singleton(w.w.front()) || (m > 0 && w.r.front() == Link::tilde)) &&
                (!glued_singleton(w.w.back()) || (m > 0 && w.r.back() == Link::tilde));

    info.cycle = m > 0 && w.w.back() == w.w.front() && w.r.front() == Link::tilde && w.r.back() == Link::dash;
    if (info.cycle) {
        info.aperiodic = true;
        for (int d = 1; d < m; ++d) {
            if (m % d) continue;
            bool periodic = true;
            for (int k = d; k < m && periodic; ++k)
                periodic = w.w[k] == w.w[k - d] && w.r[k] == w.r[k - d];
            if (periodic) info.aperiodic = false;
        }
    }

    // Not simple: w = u ~ u* ~ u ... with at least two pieces.
    info.simple = true;
    const int n = m + 1;
    for (int len = 1; len < n && info.simple; ++len) {
        if (n % len) continue;
        Word u{{w.w.begin(), w.w.begin() + len}, {w.r.begin(), w.r.begin() + len - 1}};
        Word us = reversed(u);
        Word built = u;
        for (int piece = 1; piece < n / len; ++piece) {
            const Word& next = piece % 2 ? us : u;
            built.r.push_back(Link::tilde);
            built.w.insert(built.w.end(), next.w.begin(), next.w.end());
            built.r.insert(built.r.end(), next.r.begin(), next.r.end());
        }
        if (built == w) info.simple = false;
    }

    info.d_l = two_element(w.w.front().kind) && (m == 0 || w.r.front() == Link::dash);
    info.d_r = two_element(w.w.back().kind) && m > 0 && w.r.back() == Link::dash;
    return info;
}

void require_valid(const Word& w) {
    WordInfo info = classify_word(w);
    if (!info.valid) throw Error("malformed-word", "clause (" + info.violation + ") fails for " + to_string(w));
}

// ---- strings and bands -----------------------------------------------------

std::string to_string(const StringSpec& s) {
    switch (s.type) {
        case StringType::usual: return to_string(s.w);
        case StringType::special: return "(" + to_string(s.w) + ", k=" + std::to_string(s.k) + ")";
        case StringType::bispecial:
            return "(" + to_string(s.w) + ", k=" + std::to_string(s.k) + ", l=" + std::to_string(s.l) +
                   ", n=" + std::to_string(s.n) + ")";
    }
    return "";
}

std::string to_string(const BandSpec& b) {
    std::ostringstream os;
    os << "(" << to_string(b.w) << ", f=";
    for (std::size_t d = b.f.size(); d-- > 0;) {
        if (is_zero(b.f[d])) continue;
        if (d + 1 != b.f.size()) os << (b.f[d] < 0 ? " - " : " + ");
        Rational c = d + 1 == b.f.size() ? b.f[d] : (b.f[d] < 0 ? Rational(-b.f[d]) : b.f[d]);
        if (d == 0 || c != 1) os << schurder::to_string(c);
        if (d > 0) os << "x" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    os << ", mult=" << b.mult << ")";
    return os.str();
}

StringSpec make_string(const Word& w, int k, int l, int n) {
    require_valid(w);
    WordInfo info = classify_word(w);
    if (!info.full) throw Error("invalid-params", "word is not full: " + to_string(w));
    if (!info.simple) throw Error("invalid-params", "word is not simple: " + to_string(w));
    StringSpec s{w};
    const int d = info.d_l + info.d_r;
    if (d == 0) return s;
    if (k < 0 || k > 1) throw Error("invalid-params", "k must be 0 or 1");
    s.k = k;
    s.type = d == 1 ? StringType::special : StringType::bispecial;
    if (d == 2) {
        if (l < 0 || l > 1 || n < 1) throw Error("invalid-params", "bispecial strings need l in {0,1} and n >= 1");
        s.l = l;
        s.n = n;
    }
    return s;
}

BandSpec make_band(const Word& w, const Rational& lambda, int mult) {
    require_valid(w);
    WordInfo info = classify_word(w);
    if (!info.cycle || !info.aperiodic) throw Error("invalid-params", "band needs an aperiodic cycle: " + to_string(w));
    if (is_zero(lambda)) throw Error("invalid-params", "f = x is excluded");
    if (mult < 1) throw Error("invalid-params", "multiplicity must be positive");
    return BandSpec{w, {-lambda, Rational(1)}, mult};
}

Word canonical_string_word(const Word& w) { return std::min(w, reversed(w)); }

Word canonical_cycle(const Word& w) {
    const int m = w.m();
    std::vector<Letter> c(w.w.begin(), w.w.begin() + m);
    std::vector<Link> links = w.r;  // links[k] joins c[k] and c[k+1 mod m]
    std::optional<Word> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < m; ++s) {
            Word v;
            for (int j = 0; j < m; ++j) {
                v.w.push_back(c[((dir ? -j : j) + s + 2 * m) % m]);
                v.r.push_back(dir ? links[((s - j - 1) % m + m) % m] : links[(j + s) % m]);
            }
            v.w.push_back(v.w.front());
            if (v.r.front() != Link::tilde) continue;
            if (!best || v < *best) best = v;
        }
    }
    return *best;
}

namespace {

// Depth-first generation of valid words with indices in [0, window].
void grow(Word& w, int max_length, int window, const std::function<void(const Word&)>& visit) {
    visit(w);
    if (w.m() == max_length) return;
    const Letter last = w.w.back();
    std::vector<Link> next_links;
    if (w.m() == 0) next_links = {Link::tilde, Link::dash};
    else next_links = {w.r.back() == Link::tilde ? Link::dash : Link::tilde};
    for (Link lk : next_links) {
        std::vector<Letter> cands;
        if (lk == Link::tilde) {
            if (two_element(last.kind)) cands.push_back(last);
            else if (auto p = partner(Elem{last.kind, 0, last.i})) cands.push_back({p->kind, p->i});
        } else {
            const auto kinds = in_E(last.kind) ? std::vector<Kind>{Kind::r, Kind::p, Kind::q}
                                               : std::vector<Kind>{Kind::y, Kind::x, Kind::z};
            for (Kind k : kinds) cands.push_back({k, last.i});
        }
        for (auto& c : cands) {
            if (c.i < 0 || c.i > window) continue;
            w.r.push_back(lk);
            w.w.push_back(c);
            grow(w, max_length, window, visit);
            w.r.pop_back();
            w.w.pop_back();
        }
    }
}

void all_words(int max_length, const std::function<void(const Word&)>& visit) {
    const int window = 2 * std::max(max_length, 1);
    for (int i = 0; i <= window; ++i)
        for (Kind k : {Kind::x, Kind::y, Kind::z, Kind::r, Kind::p, Kind::q}) {
            Word w{{{k, i}}, {}};
            grow(w, max_length, window, visit);
        }
}

}  // namespace

std::vector<StringSpec> enumerate_strings(int max_length, bool include_bispecial) {
    std::set<Word> words;
    all_words(max_length, [&](const Word& w) {
        if (min_index(w) != 0) return;
        WordInfo info = classify_word(w);
        if (info.valid && info.full && info.simple) words.insert(canonical_string_word(w));
    });
    std::vector<StringSpec> out;
    for (auto& w : words) {
        WordInfo info = classify_word(w);
        const int d = info.d_l + info.d_r;
        if (d == 0) out.push_back(make_string(w));
        else if (d == 1) {
            out.push_back(make_string(w, 0));
            out.push_back(make_string(w, 1));
        } else if (include_bispecial) {
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out.push_back(make_string(w, k, l, 1));
        }
    }
    return out;
}

std::vector<BandSpec> enumerate_bands(int max_length, const std::vector<Rational>& lambdas) {
    std::set<Word> cycles;
    all_words(max_length, [&](const Word& w) {
        WordInfo info = classify_word(w);
        if (!info.valid || !info.cycle || !info.aperiodic) return;
        Word c = canonical_cycle(w);
        cycles.insert(translated(c, -min_index(c)));
    });
    std::vector<BandSpec> out;
    for (auto& w : cycles)
        for (auto& l : lambdas) out.push_back(make_band(w, l));
    return out;
}

}  // namespace schurder::f3
