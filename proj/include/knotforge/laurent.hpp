#ifndef KNOTFORGE_LAURENT_HPP
#define KNOTFORGE_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotforge/errors.hpp"
#include "knotforge/numeric.hpp"

namespace knotforge::ring {

// Multiplicatively written element of the lattice Z^k: an exponent vector.
// Ordering is lexicographic.
class Monomial {
public:
    Monomial() : exps_(1, 0) {}
    explicit Monomial(int rank) : exps_(static_cast<size_t>(rank), 0) {
        if (rank < 1) throw InvalidArgument("monomial rank must be >= 1");
    }
    explicit Monomial(std::vector<int64_t> exps) : exps_(std::move(exps)) {
        if (exps_.empty()) throw InvalidArgument("monomial rank must be >= 1");
    }
    // rank-1 convenience: t^e
    static Monomial t(int64_t e) { return Monomial(std::vector<int64_t>{e}); }

    int rank() const { return static_cast<int>(exps_.size()); }
    int64_t operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int64_t>& exponents() const { return exps_; }
    bool is_identity() const {
        for (auto e : exps_) if (e != 0) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }
    Monomial inverse() const {
        Monomial r = *this;
        for (auto& e : r.exps_) e = -e;
        return r;
    }
    Monomial pow(int64_t d) const {
        Monomial r = *this;
        for (auto& e : r.exps_) e *= d;
        return r;
    }
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int64_t> exps_;
};

// Finitely supported Z-valued function on Z^k, kept in canonical sparse form:
// no zero coefficients stored. Equality is term-map equality.
class LaurentPoly {
public:
    using Terms = std::map<Monomial, BigInt>;

    explicit LaurentPoly(int rank = 1) : rank_(rank) {
        if (rank < 1) throw InvalidArgument("polynomial rank must be >= 1");
    }
    LaurentPoly(int rank, Terms terms) : rank_(rank), terms_(std::move(terms)) {
        prune();
    }
    static LaurentPoly zero(int rank = 1) { return LaurentPoly(rank); }
    static LaurentPoly constant(BigInt c, int rank = 1) {
        LaurentPoly p(rank);
        p.add_term(Monomial(rank), std::move(c));
        return p;
    }
    static LaurentPoly monomial(const Monomial& m, BigInt c = 1) {
        LaurentPoly p(m.rank());
        p.add_term(m, std::move(c));
        return p;
    }
    // rank-1 convenience: coefficients for t^e
    static LaurentPoly t_power(int64_t e, BigInt c = 1) {
        return monomial(Monomial::t(e), std::move(c));
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // +/- a single term
    void add_term(const Monomial& m, const BigInt& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

    // true iff +/- a single monomial with coefficient +-1
    bool is_unit() const;

    // exact division; throws InvalidArgument if not exact
    LaurentPoly div_exact(const LaurentPoly& d) const;
    // exact division test without throwing
    bool try_div_exact(const LaurentPoly& d, LaurentPoly& out) const;

    BigInt content() const;

    // coefficient of the lex-smallest / largest monomial (0 if zero poly)
    const Monomial* lex_min() const {
        return terms_.empty() ? nullptr : &terms_.begin()->first;
    }
    const Monomial* lex_max() const {
        return terms_.empty() ? nullptr : &terms_.rbegin()->first;
    }

    std::string str() const;

private:
    void prune();

    int rank_;
    Terms terms_;
};

// -- the spec's ring operations ----------------------------------------------

// Canonical representative of the unit class {+-m * p}: shift the lex-minimal
// exponent vector to zero, then fix the sign of the lex-minimal coefficient.
LaurentPoly lp_normalize(const LaurentPoly& p);

// gcd in Z[t^{+-1}] (rank 1 only), canonically normalized.
LaurentPoly lp_gcd(const LaurentPoly& p, const LaurentPoly& q);

// exponent scaling by d > 0 (ring homomorphism t_i -> t_i^d)
LaurentPoly lp_substitute_power(const LaurentPoly& p, int64_t d);

// rank-1 helpers ---------------------------------------------------------

// dense coefficient vector [low..high] plus the low exponent
std::pair<std::vector<BigInt>, int64_t> lp_dense(const LaurentPoly& p);
LaurentPoly lp_from_dense(const std::vector<BigInt>& c, int64_t low);

// substitute t -> t^{-1}
LaurentPoly lp_mirror(const LaurentPoly& p);

// evaluate at integer t = x (rank 1; negative exponents shifted away first,
// i.e. this evaluates the unit-normalized polynomial times x^shift; callers
// that only need zero/nonzero or unit tests are unaffected)
BigInt lp_eval_shifted(const LaurentPoly& p, const BigInt& x);

// parse/print ----------------------------------------------------------------
// Format: terms "c*t1^e1*t2^e2" joined by +/-; rank-1 shorthand "t".
std::string lp_to_string(const LaurentPoly& p);
LaurentPoly lp_parse(const std::string& s, int rank = 1);

} // namespace knotforge::ring

#endif
