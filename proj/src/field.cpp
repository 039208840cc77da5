#include "semicell/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace semicell {

// ---------------------------------------------------------------- Field

FieldPtr Field::rationals() {
    static FieldPtr q(new Field(FieldTag::Rationals, 0, nullptr, ""));
    return q;
}

namespace {
bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
}  // namespace

FieldPtr Field::prime(unsigned long p) {
    if (p >= (1ul << 31)) throw error("prime modulus too large");
    if (!is_prime_ul(p)) throw error("modulus " + std::to_string(p) + " is not prime");
    return FieldPtr(new Field(FieldTag::Prime, p, nullptr, ""));
}

FieldPtr Field::rational_functions(FieldPtr base, std::string var) {
    if (!base || base->tag() == FieldTag::RatFunc)
        throw error("rational function base field must be Q or F_p");
    if (var.empty()) throw error("rational function field needs a variable name");
    return FieldPtr(new Field(FieldTag::RatFunc, 0, std::move(base), std::move(var)));
}

bool Field::same(const Field& o) const {
    if (tag_ != o.tag_) return false;
    switch (tag_) {
        case FieldTag::Rationals: return true;
        case FieldTag::Prime: return p_ == o.p_;
        case FieldTag::RatFunc: return var_ == o.var_ && base_->same(*o.base_);
    }
    return false;
}

std::string Field::name() const {
    switch (tag_) {
        case FieldTag::Rationals: return "Q";
        case FieldTag::Prime: return "F" + std::to_string(p_);
        case FieldTag::RatFunc: return base_->name() + "(" + var_ + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : field_(Field::rationals()), v_(Rat(0)) {}

void Scalar::check_same_field(const Scalar& o) const {
    if (!field_->same(*o.field_))
        throw error("scalar field mismatch: " + field_->name() + " vs " + o.field_->name());
}

Scalar Scalar::zero(const FieldPtr& f) { return from_int(0, f); }
Scalar Scalar::one(const FieldPtr& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldPtr& f) { return from_integer(Int(v), f); }

Scalar Scalar::from_integer(const Int& v, const FieldPtr& f) {
    Scalar s;
    s.field_ = f;
    switch (f->tag()) {
        case FieldTag::Rationals:
            s.v_ = Rat(v);
            break;
        case FieldTag::Prime: {
            Int r = v % Int(f->characteristic_p());
            if (r < 0) r += Int(f->characteristic_p());
            s.v_ = r.get_ui();
            break;
        }
        case FieldTag::RatFunc: {
            Scalar c = from_integer(v, f->base());
            RatFuncRep rep{Poly::constant(c), Poly::constant(one(f->base()))};
            if (c.is_zero()) rep.num = Poly(f->base());
            s.v_ = std::move(rep);
            break;
        }
    }
    return s;
}

Scalar Scalar::rational(Rat r) {
    Scalar s;
    r.canonicalize();
    s.field_ = Field::rationals();
    s.v_ = std::move(r);
    return s;
}

Scalar Scalar::variable(const FieldPtr& f) {
    if (f->tag() != FieldTag::RatFunc) throw error("variable() needs a rational function field");
    Scalar s;
    s.field_ = f;
    s.v_ = RatFuncRep{Poly::variable(f), Poly::constant(one(f->base()))};
    return s;
}

Scalar Scalar::constant(const Scalar& v, const FieldPtr& f) {
    if (f->tag() != FieldTag::RatFunc || !v.field()->same(*f->base()))
        throw error("constant embedding needs a value from the base field");
    Scalar s;
    s.field_ = f;
    RatFuncRep rep{Poly::constant(v), Poly::constant(one(f->base()))};
    if (v.is_zero()) rep.num = Poly(f->base());
    s.v_ = std::move(rep);
    return s;
}

Scalar Scalar::rat_func(Poly num, Poly den, const FieldPtr& f) {
    if (f->tag() != FieldTag::RatFunc) throw error("rat_func needs a rational function field");
    if (den.is_zero()) throw error("zero denominator");
    if (!num.field()->same(*f->base()) || !den.field()->same(*f->base()))
        throw error("numerator/denominator must lie over the base field");
    // canonical form: coprime, monic denominator
    if (num.is_zero()) {
        den = Poly::constant(one(f->base()));
    } else {
        Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        Scalar lc = den.leading();
        if (!lc.is_one()) {
            Scalar inv = lc.inverse();
            num = num * inv;
            den = den * inv;
        }
    }
    Scalar s;
    s.field_ = f;
    s.v_ = RatFuncRep{std::move(num), std::move(den)};
    return s;
}

bool Scalar::is_zero() const {
    switch (field_->tag()) {
        case FieldTag::Rationals: return rat() == 0;
        case FieldTag::Prime: return residue() == 0;
        case FieldTag::RatFunc: return num().is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->tag()) {
        case FieldTag::Rationals: return rat() == 1;
        case FieldTag::Prime: return residue() == 1;
        case FieldTag::RatFunc: return num().is_one() && den().is_one();
    }
    return false;
}

bool Scalar::is_laurent() const {
    if (field_->tag() != FieldTag::RatFunc) return true;
    const Poly& d = den();
    for (int i = 0; i < d.degree(); ++i)
        if (!d.coeff(i).is_zero()) return false;
    return true;
}

namespace {
unsigned long addmod(unsigned long a, unsigned long b, unsigned long p) {
    return (a + b) % p;
}
unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}
unsigned long invmod(unsigned long a, unsigned long p) {
    if (a == 0) throw error("division by zero in F_p");
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<unsigned long>(t);
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    switch (field_->tag()) {
        case FieldTag::Rationals: s.v_ = Rat(rat() + o.rat()); break;
        case FieldTag::Prime: s.v_ = addmod(residue(), o.residue(), field_->characteristic_p()); break;
        case FieldTag::RatFunc: {
            Poly n = num() * o.den() + o.num() * den();
            Poly d = den() * o.den();
            Scalar r = rat_func(std::move(n), std::move(d), field_);
            s.v_ = std::move(r.v_);
            break;
        }
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    switch (field_->tag()) {
        case FieldTag::Rationals: s.v_ = Rat(-rat()); break;
        case FieldTag::Prime: {
            unsigned long r = residue();
            s.v_ = r == 0 ? 0ul : field_->characteristic_p() - r;
            break;
        }
        case FieldTag::RatFunc: s.v_ = RatFuncRep{-num(), den()}; break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    switch (field_->tag()) {
        case FieldTag::Rationals: s.v_ = Rat(rat() * o.rat()); break;
        case FieldTag::Prime: s.v_ = mulmod(residue(), o.residue(), field_->characteristic_p()); break;
        case FieldTag::RatFunc: {
            Scalar r = rat_func(num() * o.num(), den() * o.den(), field_);
            s.v_ = std::move(r.v_);
            break;
        }
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero");
    Scalar s;
    s.field_ = field_;
    switch (field_->tag()) {
        case FieldTag::Rationals: s.v_ = Rat(1 / rat()); break;
        case FieldTag::Prime: s.v_ = invmod(residue(), field_->characteristic_p()); break;
        case FieldTag::RatFunc: {
            Scalar r = rat_func(den(), num(), field_);
            s.v_ = std::move(r.v_);
            break;
        }
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field_);
    Scalar base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!field_->same(*o.field_)) return false;
    switch (field_->tag()) {
        case FieldTag::Rationals: return rat() == o.rat();
        case FieldTag::Prime: return residue() == o.residue();
        case FieldTag::RatFunc: return num() == o.num() && den() == o.den();
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (field_->tag()) {
        case FieldTag::Rationals: return rat().get_str();
        case FieldTag::Prime: return std::to_string(residue());
        case FieldTag::RatFunc: {
            const std::string& var = field_->variable();
            std::string n = num().to_string(var);
            if (den().is_one()) return n;
            std::string d = den().to_string(var);
            std::string out;
            out += (num().degree() > 0 && num().low_degree() < num().degree()) ? "(" + n + ")" : n;
            out += "/";
            out += (den().degree() > 0 && den().low_degree() < den().degree()) ? "(" + d + ")" : d;
            return out;
        }
    }
    return "?";
}

std::string Scalar::key() const { return to_string(); }

Scalar Scalar::parse(const std::string& text, const FieldPtr& f) {
    switch (f->tag()) {
        case FieldTag::Rationals: {
            Rat r;
            if (r.set_str(text, 10) != 0) throw error("cannot parse rational '" + text + "'");
            if (r.get_den() == 0) throw error("zero denominator in '" + text + "'");
            r.canonicalize();
            return rational(std::move(r));
        }
        case FieldTag::Prime: {
            Int v;
            if (v.set_str(text, 10) != 0) throw error("cannot parse residue '" + text + "'");
            return from_integer(v, f);
        }
        case FieldTag::RatFunc: {
            if (text == f->variable()) return variable(f);
            return constant(parse(text, f->base()), f);
        }
    }
    throw error("unreachable");
}

// ------------------------------------------------------------------ Poly

Poly::Poly(FieldPtr field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const Scalar& c : c_)
        if (!c.field()->same(*field_)) throw error("polynomial coefficient field mismatch");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::variable(FieldPtr field) {
    if (field->tag() != FieldTag::RatFunc) throw error("variable() needs a rational function field");
    Poly p(field->base());
    p.c_.push_back(Scalar::zero(field->base()));
    p.c_.push_back(Scalar::one(field->base()));
    return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(field_);
    return c_[static_cast<size_t>(i)];
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw error("zero polynomial has no leading coefficient");
    return c_.back();
}

int Poly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.normalize();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const Scalar& c : c_) r.c_.push_back(-c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(field_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(const Scalar& s) const {
    Poly r(field_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const Scalar& c : c_) r.c_.push_back(c * s);
    r.normalize();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw error("polynomial division by zero");
    Poly q(field_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, Scalar::zero(field_));
    Scalar lcinv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Scalar f = r.leading() * lcinv;
        q.c_[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= d.degree(); ++i) {
            size_t idx = static_cast<size_t>(i + k);
            r.c_[idx] -= f * d.c_[static_cast<size_t>(i)];
        }
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::operator/(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

Poly Poly::operator%(const Poly& d) const { return divmod(d).second; }

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * leading().inverse();
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = Poly::constant(Scalar::one(field_));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(x.field());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    // fast path: gcd with a monomial X^k is X^min(low, k)
    auto monomial_degree = [](const Poly& p) -> int {
        return (p.low_degree() == p.degree()) ? p.degree() : -1;
    };
    if (!a.is_zero() && !b.is_zero()) {
        int ma = monomial_degree(a), mb = monomial_degree(b);
        if (ma >= 0 || mb >= 0) {
            int bound = ma >= 0 ? ma : mb;
            const Poly& other = ma >= 0 ? b : a;
            int low = std::min(bound, other.low_degree());
            Poly g(a.field());
            g.c_.assign(static_cast<size_t>(low) + 1, Scalar::zero(a.field()));
            g.c_.back() = Scalar::one(a.field());
            return g;
        }
    }
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Scalar c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool unit_coeff = (cs == "1");
        if (i == 0) {
            out << cs;
        } else {
            if (!unit_coeff) out << cs << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

// ------------------------------------------------------------- DVR layer

DvrContext::DvrContext(FieldPtr k, Scalar q_value, const std::string& var)
    : base(std::move(k)), q(std::move(q_value)) {
    if (!q.field()->same(*base)) throw error("DVR specialization point must lie in the base field");
    if (q.is_zero()) throw error("DVR specialization point must be invertible");
    ambient = Field::rational_functions(base, var);
}

Scalar quantum_integer(long k, const Scalar& q) {
    if (q.is_zero()) throw error("quantum integer needs invertible q");
    const FieldPtr& f = q.field();
    if (q.is_one()) return Scalar::from_int(k, f);
    return (q.pow(k) - Scalar::one(f)) / (q - Scalar::one(f));
}

Scalar embed_scalar(const Scalar& c, const FieldPtr& target) {
    if (c.field()->same(*target)) return c;
    if (target->tag() == FieldTag::RatFunc && c.field()->same(*target->base()))
        return Scalar::constant(c, target);
    if (c.field()->tag() == FieldTag::Rationals) {
        Scalar n = Scalar::from_integer(Int(c.rat().get_num()), target);
        Scalar d = Scalar::from_integer(Int(c.rat().get_den()), target);
        if (d.is_zero()) throw error("denominator vanishes under embedding into " + target->name());
        return n / d;
    }
    throw error("no canonical embedding " + c.field()->name() + " -> " + target->name());
}

namespace {
// multiplicity of (t - q) in p; p nonzero
long root_multiplicity(const Poly& p, const Scalar& q) {
    Poly linear(p.field(), {-q, Scalar::one(q.field())});
    long mult = 0;
    Poly cur = p;
    while (true) {
        auto [quot, rem] = cur.divmod(linear);
        if (!rem.is_zero()) return mult;
        ++mult;
        cur = std::move(quot);
        if (cur.is_zero()) return mult;  // unreachable for nonzero p
    }
}
}  // namespace

Valuation dvr_valuation(const Scalar& x, const DvrContext& ctx) {
    if (!x.field()->same(*ctx.ambient))
        throw error("valuation argument must lie in the ambient field " + ctx.ambient->name());
    if (x.is_zero()) return Valuation{true, 0};
    long vn = root_multiplicity(x.num(), ctx.q);
    long vd = root_multiplicity(x.den(), ctx.q);
    return Valuation{false, vn - vd};
}

Scalar reduce_mod_pi(const Scalar& x, const DvrContext& ctx) {
    if (!x.field()->same(*ctx.ambient))
        throw error("reduction argument must lie in the ambient field " + ctx.ambient->name());
    if (x.is_zero()) return Scalar::zero(ctx.base);
    Scalar dq = x.den().eval(ctx.q);
    if (dq.is_zero()) throw error("not in R: element has negative valuation at t = " + ctx.q.to_string());
    return x.num().eval(ctx.q) / dq;
}

}  // namespace semicell
