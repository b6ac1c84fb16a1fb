#include "knotforge/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotforge::ring {

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.rank() != rank_)
            throw InvalidArgument("mixed monomial ranks in polynomial");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

void LaurentPoly::add_term(const Monomial& m, const BigInt& c) {
    if (m.rank() != rank_) throw InvalidArgument("monomial rank mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw InvalidArgument("rank mismatch in +");
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw InvalidArgument("rank mismatch in -");
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw InvalidArgument("rank mismatch in *");
    LaurentPoly r(rank_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const BigInt& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [m, c] : terms_) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

// Long division by the lex-leading term; succeeds exactly when the division
// is exact in Z[F], which is all callers need (Bareiss pivots, gcd checks).
bool LaurentPoly::try_div_exact(const LaurentPoly& d, LaurentPoly& out) const {
    if (rank_ != d.rank_) throw InvalidArgument("rank mismatch in division");
    if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly q(rank_);
    const auto& dlead = *d.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (rlead.second % dlead.second != 0) return false;
        BigInt qc = rlead.second / dlead.second;
        Monomial qm = rlead.first * dlead.first.inverse();
        q.add_term(qm, qc);
        // rem -= qterm * d
        for (const auto& [m, c] : d.terms_) rem.add_term(qm * m, -(qc * c));
        // progress check: lex-leading monomial must strictly decrease
        if (!rem.is_zero() && !(rem.terms_.rbegin()->first < rlead.first))
            return false;
    }
    out = std::move(q);
    return true;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
    LaurentPoly q(rank_);
    if (!try_div_exact(d, q)) throw InvalidArgument("inexact polynomial division");
    return q;
}

LaurentPoly lp_normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    const Monomial shift = p.lex_min()->inverse();
    LaurentPoly r(p.rank());
    for (const auto& [m, c] : p.terms()) r.add_term(m * shift, c);
    if (r.terms().begin()->second < 0) r = -r;
    return r;
}

LaurentPoly lp_substitute_power(const LaurentPoly& p, int64_t d) {
    if (d <= 0) throw InvalidArgument("substitute_power needs d > 0");
    LaurentPoly r(p.rank());
    for (const auto& [m, c] : p.terms()) r.add_term(m.pow(d), c);
    return r;
}

std::pair<std::vector<BigInt>, int64_t> lp_dense(const LaurentPoly& p) {
    if (p.rank() != 1) throw UnsupportedRank("dense form needs rank 1");
    if (p.is_zero()) return {{}, 0};
    int64_t lo = (*p.lex_min())[0], hi = (*p.lex_max())[0];
    std::vector<BigInt> c(static_cast<size_t>(hi - lo + 1), BigInt(0));
    for (const auto& [m, coef] : p.terms()) c[static_cast<size_t>(m[0] - lo)] = coef;
    return {std::move(c), lo};
}

LaurentPoly lp_from_dense(const std::vector<BigInt>& c, int64_t low) {
    LaurentPoly p(1);
    for (size_t i = 0; i < c.size(); ++i)
        p.add_term(Monomial::t(low + static_cast<int64_t>(i)), c[i]);
    return p;
}

LaurentPoly lp_mirror(const LaurentPoly& p) {
    LaurentPoly r(p.rank());
    for (const auto& [m, c] : p.terms()) r.add_term(m.inverse(), c);
    return r;
}

BigInt lp_eval_shifted(const LaurentPoly& p, const BigInt& x) {
    auto [c, lo] = lp_dense(p);
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// primitive part; zero stays zero
std::vector<BigInt> primitive(std::vector<BigInt> c, BigInt* content_out = nullptr) {
    BigInt g = 0;
    for (const auto& x : c) g = big_gcd(g, x);
    if (content_out) *content_out = g;
    if (g > 1)
        for (auto& x : c) x /= g;
    return c;
}

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// pseudo-remainder of a by b (dense, b nonzero), degrees a>=b
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    trim(a);
    const size_t db = b.size() - 1;
    while (a.size() >= b.size() && !a.empty()) {
        const BigInt lead = a.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < a.size(); ++i) a[i] *= b[db];
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        trim(a);
    }
    return a;
}

} // namespace

LaurentPoly lp_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.rank() != 1 || q.rank() != 1)
        throw UnsupportedRank("gcd implemented for rank 1 only");
    if (p.is_zero()) return lp_normalize(q);
    if (q.is_zero()) return lp_normalize(p);
    BigInt cp, cq;
    auto a = primitive(lp_dense(p).first, &cp);
    auto b = primitive(lp_dense(q).first, &cq);
    trim(a);
    trim(b);
    // primitive PRS
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        a = pseudo_rem(std::move(a), b);
        a = primitive(std::move(a));
        std::swap(a, b);
    }
    LaurentPoly g = lp_from_dense(a, 0) * LaurentPoly::constant(big_gcd(cp, cq));
    return lp_normalize(g);
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

namespace {

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.rank(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        if (m.rank() == 1)
            os << "t";
        else
            os << "t" << (i + 1);
        if (m[i] != 1) os << "^" << m[i];
    }
    return os.str();
}

} // namespace

std::string lp_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print lex-descending so rank-1 output leads with the top power
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string ms = monomial_str(m);
        if (ms.empty()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << ms;
        }
    }
    return os.str();
}

std::string LaurentPoly::str() const { return lp_to_string(*this); }

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return s[i];
    }
    char get() {
        skip();
        return s[i++];
    }
    int64_t integer() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer in polynomial at '" + s.substr(i) + "'");
        int64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
    BigInt bigint() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer in polynomial");
        BigInt v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
};

} // namespace

LaurentPoly lp_parse(const std::string& s, int rank) {
    Lexer lx{s};
    LaurentPoly p(rank);
    if (lx.eof()) throw ParseError("empty polynomial");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (!first || lx.peek() == '+' || lx.peek() == '-') {
            char c = lx.get();
            if (c == '-')
                sign = -1;
            else if (c != '+')
                throw ParseError(std::string("expected +/- before term, got '") + c + "'");
        }
        first = false;
        BigInt coef = 1;
        bool have_coef = false;
        if (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = lx.bigint();
            have_coef = true;
            if (!lx.eof() && lx.peek() == '*') lx.get();
        }
        std::vector<int64_t> exps(static_cast<size_t>(rank), 0);
        bool have_var = false;
        while (!lx.eof() && lx.peek() == 't') {
            lx.get();
            int var = 1;
            if (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek())))
                var = static_cast<int>(lx.integer());
            if (var < 1 || var > rank) throw ParseError("variable index out of range");
            int64_t e = 1;
            if (!lx.eof() && lx.peek() == '^') {
                lx.get();
                e = lx.integer();
            }
            exps[static_cast<size_t>(var - 1)] += e;
            have_var = true;
            if (!lx.eof() && lx.peek() == '*') {
                lx.get();
                continue;
            }
            break;
        }
        if (!have_coef && !have_var)
            throw ParseError("malformed term in polynomial '" + s + "'");
        p.add_term(Monomial(exps), sign * coef);
        lx.skip();
    }
    return p;
}

} // namespace knotforge::ring
