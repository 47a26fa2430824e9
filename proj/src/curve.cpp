#include "kummer/curve.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "kummer/arith.hpp"

namespace kummer {

CurveSpec::CurveSpec(long long m, long long characteristic, std::vector<RootFactor> roots)
    : m_(m), p_(characteristic), roots_(std::move(roots)), sum_mult_(0) {
    if (m_ < 2) throw Error(errc::bad_degree, "extension degree m must be at least 2");
    if (p_ != 0) {
        if (!is_prime(p_))
            throw Error(errc::bad_characteristic, "characteristic must be 0 or a prime");
        if (m_ % p_ == 0)
            throw Error(errc::bad_characteristic,
                        "characteristic p = " + std::to_string(p_) +
                            " divides the extension degree m = " + std::to_string(m_));
    }
    if (roots_.empty())
        throw Error(errc::bad_multiplicity, "at least one root factor is required");
    for (const auto& root : roots_) {
        if (root.multiplicity <= 0 || root.multiplicity >= m_)
            throw Error(errc::bad_multiplicity,
                        "multiplicity of root '" + root.label + "' is " +
                            std::to_string(root.multiplicity) + ", must lie in (0, m)");
        sum_mult_ = checked_add(sum_mult_, root.multiplicity);
    }
    std::set<std::string> seen;
    for (const auto& root : roots_)
        if (!seen.insert(root.label).second)
            throw Error(errc::duplicate_label, "duplicate root label '" + root.label + "'");
    long long g = m_;
    for (const auto& root : roots_) g = std::gcd(g, root.multiplicity);
    if (g != 1)
        throw Error(errc::dth_power,
                    "f(x) is a d-th power with d = " + std::to_string(g) +
                        " (gcd of m and all multiplicities must be 1)");
}

long long CurveSpec::multiplicity(long long u) const {
    if (u < 0 || u > infinity_index())
        throw Error(errc::bad_index, "branch index " + std::to_string(u) + " out of range");
    if (u == 0) return 0;
    if (u == infinity_index()) return checked_neg(sum_mult_);
    return roots_[static_cast<std::size_t>(u - 1)].multiplicity;
}

bool CurveSpec::operator==(const CurveSpec& other) const {
    if (m_ != other.m_ || p_ != other.p_ || roots_.size() != other.roots_.size()) return false;
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i].label != other.roots_[i].label ||
            roots_[i].multiplicity != other.roots_[i].multiplicity)
            return false;
    return true;
}

BranchPlace ramification(const CurveSpec& spec, long long u) {
    long long lambda = spec.multiplicity(u);  // range-checks u
    long long d = std::gcd(spec.m(), euclid_mod(lambda, spec.m()));
    long long e = spec.m() / d;
    return BranchPlace{u, d, e, d == 1};
}

long long genus(const CurveSpec& spec) {
    long long ram = 0;
    for (long long u = 1; u <= spec.infinity_index(); ++u) {
        BranchPlace b = ramification(spec, u);
        ram = checked_add(ram, checked_mul(b.d, b.e - 1));
    }
    long long two_g_minus_2 = checked_add(checked_mul(-2, spec.m()), ram);
    if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
        throw std::logic_error("Riemann-Hurwitz produced an impossible genus");
    return two_g_minus_2 / 2 + 1;
}

namespace {

// ---- equation parser ----------------------------------------------------

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#';
}

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek_sym() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool try_sym(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect_sym(char c) {
        if (!try_sym(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && is_word_char(text[pos])) ++pos;
        if (pos == start) fail("expected a name or number");
        return std::string(text.substr(start, pos - start));
    }

    bool at_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        std::size_t after = pos + w.size();
        return after >= text.size() || !is_word_char(text[after]);
    }

    long long integer() {
        std::string w = word();
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            fail("expected an integer, got '" + w + "'");
        try {
            return std::stoll(w);
        } catch (const std::exception&) {
            fail("integer '" + w + "' out of range");
        }
        return 0;  // unreachable
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(errc::parse_error,
                    "equation syntax error at position " + std::to_string(pos) + ": " + msg);
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
};

// Roots of x^n = base_label in characteristic p: n = p^a * n' gives n' distinct
// roots, each of multiplicity p^a.
void expand_binomial(std::vector<RootFactor>& out, long long n, const std::string& base,
                     long long p, Lexer& lex) {
    if (n < 1) lex.fail("binomial exponent must be positive");
    long long mult = 1;
    long long distinct = n;
    if (p > 0) {
        while (distinct % p == 0) {
            distinct /= p;
            mult = checked_mul(mult, p);
        }
    }
    if (distinct == 1 && mult == 1) {
        out.push_back({base, 1});
        return;
    }
    for (long long k = 0; k < distinct; ++k)
        out.push_back({base + "#" + std::to_string(k), mult});
}

}  // namespace

CurveSpec parse_curve(std::string_view text) {
    Lexer lex{text};
    long long p = 0;
    if (lex.at_word("char")) {
        lex.word();
        lex.expect_sym('=');
        p = lex.integer();
        lex.expect_sym(';');
    }
    if (!lex.at_word("y")) lex.fail("equation must start with 'y^m ='");
    lex.word();
    lex.expect_sym('^');
    long long m = lex.integer();
    lex.expect_sym('=');

    std::vector<RootFactor> roots;
    bool first_factor = true;
    while (true) {
        if (lex.try_sym('(')) {
            if (!lex.at_word("x")) lex.fail("expected 'x' inside factor");
            lex.word();
            std::string label = "0";
            if (lex.try_sym('-')) {
                label = lex.word();
            } else if (lex.try_sym('+')) {
                label = "-" + lex.word();
            }
            lex.expect_sym(')');
            long long mult = lex.try_sym('^') ? lex.integer() : 1;
            roots.push_back({label, mult});
        } else if (lex.at_word("x")) {
            lex.word();
            long long exponent = lex.try_sym('^') ? lex.integer() : 1;
            char next = lex.peek_sym();
            if (first_factor && (next == '-' || next == '+')) {
                // binomial right-hand side: x^n - c (or + c)
                bool minus = lex.try_sym('-');
                if (!minus) lex.expect_sym('+');
                std::string c = lex.word();
                if (!lex.at_end()) lex.fail("binomial form admits no further factors");
                if (c == "0") {
                    roots.push_back({"0", exponent});
                } else {
                    expand_binomial(roots, exponent, minus ? c : "-" + c, p, lex);
                }
                break;
            }
            roots.push_back({"0", exponent});
        } else {
            lex.fail("expected a factor");
        }
        first_factor = false;
        if (lex.try_sym('*')) continue;
        char next = lex.peek_sym();
        if (next == '(' || lex.at_word("x")) continue;  // implicit product
        break;
    }
    if (!lex.at_end()) lex.fail("unexpected trailing input");
    return CurveSpec(m, p, std::move(roots));
}

std::string render(const CurveSpec& spec) {
    std::string out;
    if (spec.characteristic() != 0)
        out += "char=" + std::to_string(spec.characteristic()) + "; ";
    out += "y^" + std::to_string(spec.m()) + " = ";
    bool first = true;
    for (const auto& root : spec.roots()) {
        if (!first) out += "*";
        first = false;
        if (root.label == "0") {
            out += "x";
        } else if (!root.label.empty() && root.label[0] == '-') {
            out += "(x+" + root.label.substr(1) + ")";
        } else {
            out += "(x-" + root.label + ")";
        }
        if (root.multiplicity != 1) out += "^" + std::to_string(root.multiplicity);
    }
    return out;
}

}  // namespace kummer
