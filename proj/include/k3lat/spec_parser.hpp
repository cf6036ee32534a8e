#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "k3lat/error.hpp"
#include "k3lat/gram_io.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/// Lattice expressions such as "(-2) + -E8 + -E8 + H + H".
///
///   spec := term ('+' term)*
///   term := '-' atom | atom
///   atom := 'E8' | 'E7' | 'E6' | 'H' | 'II(' int ',' int ')'
///         | '(' int ')' | '(' spec ')' | 'gram:' path
///
/// Whitespace between tokens is ignored; U+2212 is accepted as a minus sign.
struct LatticeSpec {
    enum class Kind { root, hyperbolic, unimodular, rank_one, gram_file, negate, sum };

    Kind kind = Kind::hyperbolic;
    std::string text;  // "E8"/"E7"/"E6" for root, the path for gram_file
    int p = 0, q = 0;
    Integer norm;
    std::vector<LatticeSpec> children;

    static LatticeSpec make(Kind kind) {
        LatticeSpec s;
        s.kind = kind;
        return s;
    }
    static LatticeSpec root(std::string name) {
        LatticeSpec s = make(Kind::root);
        s.text = std::move(name);
        return s;
    }
    static LatticeSpec hyperbolic() { return make(Kind::hyperbolic); }
    static LatticeSpec unimodular(int p, int q) {
        LatticeSpec s = make(Kind::unimodular);
        s.p = p;
        s.q = q;
        return s;
    }
    static LatticeSpec rank_one(Integer n) {
        LatticeSpec s = make(Kind::rank_one);
        s.norm = std::move(n);
        return s;
    }
    static LatticeSpec gram_file(std::string path) {
        LatticeSpec s = make(Kind::gram_file);
        s.text = std::move(path);
        return s;
    }
    static LatticeSpec negate(LatticeSpec inner) {
        LatticeSpec s = make(Kind::negate);
        s.children.push_back(std::move(inner));
        return s;
    }
    static LatticeSpec sum(std::vector<LatticeSpec> terms) {
        LatticeSpec s = make(Kind::sum);
        s.children = std::move(terms);
        return s;
    }

    friend bool operator==(const LatticeSpec& a, const LatticeSpec& b) {
        return a.kind == b.kind && a.text == b.text && a.p == b.p && a.q == b.q && a.norm == b.norm &&
               a.children == b.children;
    }
};

namespace detail {

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : s_(text) {}

    LatticeSpec parse() {
        LatticeSpec out = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Consumes '-' or U+2212.
    bool eat_minus() {
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_word(std::string_view w) {
        if (s_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    bool digit_at(std::size_t i) const { return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i])); }

    // True if an optionally signed integer starts at the cursor.
    bool integer_ahead() const {
        if (digit_at(pos_)) return true;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) return digit_at(pos_ + 1);
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") return digit_at(pos_ + 3);
        return false;
    }

    Integer parse_integer() {
        skip_ws();
        bool negative = false;
        if (eat_minus()) {
            negative = true;
        } else if (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
        }
        if (!digit_at(pos_)) fail("expected an integer");
        const std::size_t start = pos_;
        while (digit_at(pos_)) ++pos_;
        Integer v(std::string(s_.substr(start, pos_ - start)), 10);
        return negative ? Integer(-v) : v;
    }

    int parse_small_int() {
        const std::size_t at = pos_;
        Integer v = parse_integer();
        if (!v.fits_sint_p()) throw SyntaxError("integer out of range", at);
        return static_cast<int>(v.get_si());
    }

    LatticeSpec parse_sum() {
        std::vector<LatticeSpec> terms;
        terms.push_back(parse_term());
        while (eat('+')) terms.push_back(parse_term());
        if (terms.size() == 1) return std::move(terms.front());
        return LatticeSpec::sum(std::move(terms));
    }

    LatticeSpec parse_term() {
        skip_ws();
        if (eat_minus()) return LatticeSpec::negate(parse_atom());
        return parse_atom();
    }

    LatticeSpec parse_atom() {
        skip_ws();
        const std::size_t start = pos_;
        if (eat_word("gram:")) {
            const std::size_t from = pos_;
            while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '+' &&
                   s_[pos_] != ')')
                ++pos_;
            if (pos_ == from) fail("expected a path after 'gram:'");
            return LatticeSpec::gram_file(std::string(s_.substr(from, pos_ - from)));
        }
        if (eat_word("II")) {
            expect('(');
            const int p = parse_small_int();
            expect(',');
            const int q = parse_small_int();
            expect(')');
            if (!is_standard_unimodular_pair(p, q))
                throw UnknownLattice("unknown even unimodular lattice II(" + std::to_string(p) + "," +
                                     std::to_string(q) + ") at byte " + std::to_string(start) +
                                     "; available: II(1,1), II(1,9), II(1,17), II(2,26), II(3,19)");
            return LatticeSpec::unimodular(p, q);
        }
        if (eat_word("E8")) return LatticeSpec::root("E8");
        if (eat_word("E7")) return LatticeSpec::root("E7");
        if (eat_word("E6")) return LatticeSpec::root("E6");
        if (eat_word("H")) return LatticeSpec::hyperbolic();
        if (eat('(')) {
            skip_ws();
            if (integer_ahead()) {
                Integer n = parse_integer();
                expect(')');
                return LatticeSpec::rank_one(std::move(n));
            }
            LatticeSpec inner = parse_sum();
            expect(')');
            return inner;
        }
        if (pos_ >= s_.size()) fail("unexpected end of input");
        fail("expected a lattice (E8, E7, E6, H, II(p,q), (n), gram:PATH)");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LatticeSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline std::string print_spec(const LatticeSpec& s);

namespace detail {
inline std::string print_wrapped(const LatticeSpec& s, bool wrap_negate) {
    const bool wrap = s.kind == LatticeSpec::Kind::sum || (wrap_negate && s.kind == LatticeSpec::Kind::negate);
    return wrap ? "(" + print_spec(s) + ")" : print_spec(s);
}
}  // namespace detail

/// Canonical text; parse_spec(print_spec(s)) == s.
inline std::string print_spec(const LatticeSpec& s) {
    using K = LatticeSpec::Kind;
    switch (s.kind) {
        case K::root: return s.text;
        case K::hyperbolic: return "H";
        case K::unimodular: return "II(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
        case K::rank_one: return "(" + s.norm.get_str() + ")";
        case K::gram_file: return "gram:" + s.text;
        case K::negate: return "-" + detail::print_wrapped(s.children.front(), true);
        case K::sum: {
            std::string out;
            for (std::size_t i = 0; i < s.children.size(); ++i)
                out += (i ? " + " : "") + detail::print_wrapped(s.children[i], false);
            return out;
        }
    }
    return {};
}

inline Lattice evaluate(const LatticeSpec& s) {
    using K = LatticeSpec::Kind;
    switch (s.kind) {
        case K::root: return s.text == "E8" ? e8() : s.text == "E7" ? e7() : e6();
        case K::hyperbolic: return hyperbolic_plane();
        case K::unimodular: return even_unimodular(s.p, s.q);
        case K::rank_one: return rank_one(s.norm);
        case K::gram_file: return read_gram_file(s.text);
        case K::negate: return rescale(evaluate(s.children.front()), -1);
        case K::sum: {
            Lattice out{IntMatrix()};
            for (const auto& c : s.children) out = direct_sum(out, evaluate(c));
            return out;
        }
    }
    return Lattice{};
}

/// Notes about rank-one terms with odd or zero norm (accepted, but the
/// result is not even or not nondegenerate).
inline std::vector<std::string> spec_warnings(const LatticeSpec& s) {
    std::vector<std::string> out;
    if (s.kind == LatticeSpec::Kind::rank_one) {
        if (s.norm == 0) out.push_back("rank-one term (0) is degenerate");
        else if (!divides(Integer(2), s.norm)) out.push_back("rank-one term (" + s.norm.get_str() + ") is not even");
    }
    for (const auto& c : s.children) {
        auto sub = spec_warnings(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

inline Lattice parse_lattice(std::string_view text) { return evaluate(parse_spec(text)); }

}  // namespace k3lat
