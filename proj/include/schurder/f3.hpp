#pragma once

// The bunch of semi-chains C(F_3): words, strings and bands, their
// representations, the complexes P(M) over F_3, and the enumeration of
// indecomposables of D^b(F_3).
//
// For each index i: E_i = {y-[i] < x[i] < z[i], y+[i] < x[i]} and
// F_i = {r[i] < p-[i] < q[i] > p+[i] > r[i]}, glued by r[i] ~ x[i+2] and
// q[i] ~ z[i+1]. The ~_c classes p[i] = {p-, p+} and y[i] = {y-, y+} are
// the only classes with two elements.

#include "schurder/complexes.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace schurder::f3 {

enum class Kind { x, y, z, r, p, q };

/// A ~_c class: a letter of a word.
struct Letter {
    Kind kind = Kind::x;
    int i = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// An element of |C|; sign is -1 or +1 for the two-element classes, 0 otherwise.
struct Elem {
    Kind kind = Kind::x;
    int sign = 0;
    int i = 0;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

bool two_element(Kind k);
bool in_E(Kind k);
std::string to_string(const Letter& l);
std::string to_string(const Elem& e);

// ---- the bunch -------------------------------------------------------------

struct BunchInstance {
    int lo = 0, hi = 0;               // index window
    std::vector<Elem> elements;
    std::vector<std::pair<Elem, Elem>> less;   // strict order pairs a < b, transitively closed
    std::vector<std::pair<Elem, Elem>> glued;  // a ~ b with a != b, both inside the window
};

BunchInstance c_f3(int lo, int hi);
bool lt(const Elem& a, const Elem& b);
bool comparable(const Elem& a, const Elem& b);
/// The element glued to e by ~, if any (r[i] ~ x[i+2], q[i] ~ z[i+1]).
std::optional<Elem> partner(const Elem& e);
/// Empty when the instance satisfies the axioms of a bunch of semi-chains,
/// otherwise a description of the first failure.
std::string check_bunch(const BunchInstance& b);

/// Relations on ~_c classes.
bool tilde(const Letter& a, const Letter& b);
bool dash(const Letter& a, const Letter& b);

// ---- words -----------------------------------------------------------------

enum class Link { tilde, dash };

struct Word {
    std::vector<Letter> w;  // w_0 .. w_m
    std::vector<Link> r;    // r_1 .. r_m, r[k-1] joins w[k-1] and w[k]
    int m() const { return static_cast<int>(r.size()); }
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Grammar: letters x y z r p q followed by an index written "[i]" or "i",
/// optionally wrapped in <...>; links "~" and "-". Example "q[0]~z[1]-p[1]".
Word parse_word(const std::string& text);
std::string to_string(const Word& w);
Word reversed(const Word& w);

struct WordInfo {
    bool valid = false;
    std::string violation;  // "a", "b" or "c" when invalid
    bool full = false;
    bool cycle = false;
    bool aperiodic = false;
    bool simple = false;
    int d_l = 0, d_r = 0;
};
WordInfo classify_word(const Word& w);
/// Throws Error("malformed-word") naming the violated clause.
void require_valid(const Word& w);

// ---- strings and bands -----------------------------------------------------

enum class StringType { usual, special, bispecial };

struct StringSpec {
    Word w;
    StringType type = StringType::usual;
    int k = 0, l = 0, n = 0;
    friend auto operator<=>(const StringSpec&, const StringSpec&) = default;
};

struct BandSpec {
    Word w;                        // aperiodic cycle, w_m = w_0
    std::vector<Rational> f;       // monic irreducible f != x, coefficients from x^0 up
    int mult = 1;
};

std::string to_string(const StringSpec& s);
std::string to_string(const BandSpec& b);

/// Builds the string spec of a full simple word, classifying it by d_l + d_r.
StringSpec make_string(const Word& w, int k = 0, int l = 0, int n = 0);
BandSpec make_band(const Word& w, const Rational& lambda, int mult = 1);

/// Representative of w under reversal.
Word canonical_string_word(const Word& w);
/// Representative of a cycle under rotation (keeping r_1 = ~) and reversal.
Word canonical_cycle(const Word& w);

/// All strings with m <= max_length, up to reversal and index translation
/// (the smallest index used is 0). Bispecial strings need include_bispecial.
std::vector<StringSpec> enumerate_strings(int max_length, bool include_bispecial = false);
/// Aperiodic cycles with m <= max_length up to rotation, reversal and
/// translation, each with f = x - lambda for every given lambda.
std::vector<BandSpec> enumerate_bands(int max_length, const std::vector<Rational>& lambdas);

// ---- representations -------------------------------------------------------

enum class VKind { X, Z, Ym, Yp, Pm, Pp };
struct Vertex {
    VKind kind = VKind::X;
    int i = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};
/// The vector space an element lives in: x[i], r[i-2] -> X[i]; z[i], q[i-1] -> Z[i].
Vertex vertex_of(const Elem& e);

struct BunchRep {
    std::map<Vertex, int> dims;
    /// M_u^v for u in E_i and v in F_i: dim(u) x dim(v). Missing blocks are zero.
    std::map<std::pair<Elem, Elem>, MatQ> blocks;

    int dim(const Vertex& v) const;
    MatQ block(const Elem& u, const Elem& v) const;
    bool is_zero() const;
};

/// Throws dimension-inference-failure if a block disagrees with the dimensions.
void check_rep(const BunchRep& m);

/// String and band representations by the chain construction: one block per
/// word position, "-" links give identity entries, "~" links between glued
/// elements share a block. A "~" link inside p[i] or y[i] puts one position
/// on both elements of the class and the other on the "+" element; which
/// side gets both is chosen so the result is indecomposable (checked on
/// P(M) with the homotopy oracle); for bands the parameter must also survive,
/// i.e. shifting it changes the isomorphism class. Special ends sit on the "-"
/// element for k = 0 and on "+" for k = 1. Bands carry the companion matrix of
/// f^mult on the closing link. Throws unsupported-spec for bispecial strings unless
/// enabled, and construction-failed if no orientation is indecomposable.
BunchRep realize_rep(const StringSpec& s);
BunchRep realize_rep(const BandSpec& b);
void set_bispecial_enabled(bool on);
bool bispecial_enabled();

/// P(M): terms P_1^{x[j] + p-[j-2] + y+[j]}, P_2^{r[j-1] + p-[j-1] + p+[j-1] + q[j-1]},
/// P_3^{x[j] + p+[j-2] + y-[j]} in degree j, differentials as in the block
/// layout with A, B, C, D, R. Over catalog_get("F", 3).
ProjComplex build_complex(const BunchRep& m);

// ---- Psi and the derived category ------------------------------------------

/// Membership in S: usual or special strings meeting one of the clauses
/// (a)-(d) with their index conditions. Bispecial strings are never in S.
bool in_psi(const StringSpec& s);
/// The clause that puts s in S ("a".."d"), or empty.
std::string psi_clause(const StringSpec& s);

struct DbEntry {
    std::string origin;           // to_string of the source StringSpec or BandSpec
    bool is_band = false;
    ProjComplex complex;          // P(M)
    bool truncated = false;       // true for the good truncation of a Psi member
    std::optional<ModuleComplex> truncation;
    bool psi = false;
    bool nonperfect = false;      // resolve_truncation reports the kernel not perfect
};

/// P(M) for every string and band in the bounds, plus the good truncation of
/// each member of Psi. Inconclusive from the perfectness test propagates.
std::vector<DbEntry> enumerate_db_f3(int max_length, const std::vector<Rational>& lambdas,
                                     bool include_truncations = true);

}  // namespace schurder::f3
