#ifndef SEMICELL_FIELD_HPP
#define SEMICELL_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace semicell {

using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldTag { Rationals, Prime, RatFunc };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An exact coefficient field: Q, F_p, or a one-variable rational
/// function field over one of those two.
class Field {
public:
    static FieldPtr rationals();
    static FieldPtr prime(unsigned long p);
    static FieldPtr rational_functions(FieldPtr base, std::string var);

    FieldTag tag() const { return tag_; }
    unsigned long characteristic_p() const { return p_; }
    const FieldPtr& base() const { return base_; }
    const std::string& variable() const { return var_; }

    bool same(const Field& other) const;
    std::string name() const;  // "Q", "F7", "Q(q)", ...

private:
    Field(FieldTag tag, unsigned long p, FieldPtr base, std::string var)
        : tag_(tag), p_(p), base_(std::move(base)), var_(std::move(var)) {}

    FieldTag tag_;
    unsigned long p_ = 0;
    FieldPtr base_;
    std::string var_;
};

class Scalar;

/// Dense univariate polynomial with coefficients in a fixed field.
/// Coefficients are little-endian; the zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly variable(FieldPtr field);  // the monomial X

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    Scalar coeff(int i) const;  // zero beyond the degree
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& leading() const;
    int low_degree() const;  // index of lowest nonzero coefficient (-1 if zero)

    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator-() const;
    Poly operator*(const Poly&) const;
    Poly operator*(const Scalar&) const;
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator/(const Poly&) const;  // exact or throws
    Poly operator%(const Poly&) const;
    bool operator==(const Poly&) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;
    Poly pow(unsigned long e) const;
    Scalar eval(const Scalar& x) const;

    static Poly gcd(const Poly& a, const Poly& b);  // monic
    static Poly lcm(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var) const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<Scalar> c_;
};

struct RatFuncRep {
    Poly num;
    Poly den;
};

/// Canonical-form element of one of the supported exact fields.
/// Rational functions keep numerator and denominator coprime with a
/// monic denominator, so equality is structural.
class Scalar {
public:
    Scalar();  // rational zero

    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar from_int(long v, const FieldPtr& f);
    static Scalar from_integer(const Int& v, const FieldPtr& f);
    static Scalar rational(Rat r);
    static Scalar variable(const FieldPtr& ratfunc_field);
    static Scalar rat_func(Poly num, Poly den, const FieldPtr& ratfunc_field);  // canonicalizes
    static Scalar constant(const Scalar& base_value, const FieldPtr& ratfunc_field);
    static Scalar parse(const std::string& text, const FieldPtr& f);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar&) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const Rat& rat() const { return std::get<Rat>(v_); }
    unsigned long residue() const { return std::get<unsigned long>(v_); }
    const Poly& num() const { return std::get<RatFuncRep>(v_).num; }
    const Poly& den() const { return std::get<RatFuncRep>(v_).den; }

    /// True when the denominator is a power of the variable, i.e. the
    /// value lies in k[t, t^{-1}].
    bool is_laurent() const;

    std::string to_string() const;
    std::string key() const;  // canonical string usable as a sort/hash key

private:
    FieldPtr field_;
    std::variant<Rat, unsigned long, RatFuncRep> v_;

    friend class Poly;
    void check_same_field(const Scalar& o) const;
};

/// Discrete valuation ring context: R = localization of k[t] at (t - q),
/// sitting inside K = k(t), with residue field k.
struct DvrContext {
    FieldPtr base;    // k
    Scalar q;         // specialization point, invertible in k
    FieldPtr ambient; // K = k(t)

    DvrContext(FieldPtr k, Scalar q_value, const std::string& var = "t");
};

struct Valuation {
    bool infinite = false;  // valuation of 0
    long v = 0;
};

/// [k]_q = (q^k - 1)/(q - 1) for q != 1, and k for q = 1.
Scalar quantum_integer(long k, const Scalar& q);

/// Canonical coefficient embedding: same field, Q -> any field (through
/// numerator/denominator), or base field -> rational function field.
Scalar embed_scalar(const Scalar& c, const FieldPtr& target);

/// (t - q)-adic valuation of x in K.
Valuation dvr_valuation(const Scalar& x, const DvrContext& ctx);

/// Reduction R -> k, i.e. evaluation at t = q. Throws "not in R" when
/// the valuation is negative.
Scalar reduce_mod_pi(const Scalar& x, const DvrContext& ctx);

}  // namespace semicell

#endif
