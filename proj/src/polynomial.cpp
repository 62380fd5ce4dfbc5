#include "singulex/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace singulex {

namespace {
std::atomic<std::size_t> g_term_cap{1000000};
}

std::size_t term_cap() { return g_term_cap.load(); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap); }

SparsePolynomial::SparsePolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw Error("DUPLICATE_VARIABLE", "duplicate variable '" + vars_[i] + "' in context");
}

SparsePolynomial SparsePolynomial::constant(std::vector<std::string> vars, const Rational& c) {
    SparsePolynomial p(std::move(vars));
    p.add_term(ExponentVec(p.arity(), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(std::vector<std::string> vars, const std::string& name) {
    SparsePolynomial p(std::move(vars));
    ExponentVec e(p.arity(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(std::vector<std::string> vars, ExponentVec exps,
                                            const Rational& coeff) {
    SparsePolynomial p(std::move(vars));
    if (exps.size() != p.arity())
        throw Error("ARITY_MISMATCH", "exponent vector length does not match context arity");
    p.add_term(exps, coeff);
    return p;
}

std::size_t SparsePolynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw Error("UNKNOWN_VARIABLE", "variable '" + name + "' not in context");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool SparsePolynomial::has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

unsigned SparsePolynomial::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

unsigned SparsePolynomial::degree_in(const std::vector<std::size_t>& var_idx) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (std::size_t i : var_idx) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

bool SparsePolynomial::depends_on(const std::string& name) const {
    if (!has_var(name)) return false;
    const std::size_t i = var_index(name);
    for (const auto& [e, c] : terms_)
        if (e[i] > 0) return true;
    return false;
}

Rational SparsePolynomial::coefficient(const ExponentVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const ExponentVec& exps, const Rational& coeff) {
    if (exps.size() != arity())
        throw Error("ARITY_MISMATCH", "exponent vector length does not match context arity");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    check_cap();
}

void SparsePolynomial::check_cap() const {
    if (terms_.size() > term_cap())
        throw Error("TERM_CAP_EXCEEDED",
                    "term count exceeds guardrail of " + std::to_string(term_cap()) + " terms");
}

void SparsePolynomial::require_same_context(const SparsePolynomial& rhs) const {
    if (vars_ != rhs.vars_)
        throw Error("CONTEXT_MISMATCH", "operands have different variable contexts");
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
    require_same_context(rhs);
    SparsePolynomial r(*this);
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
    require_same_context(rhs);
    SparsePolynomial r(*this);
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
    require_same_context(rhs);
    SparsePolynomial r(vars_);
    ExponentVec e(arity());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
    SparsePolynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

SparsePolynomial SparsePolynomial::pow(unsigned k) const {
    SparsePolynomial r = constant(vars_, 1);
    SparsePolynomial base(*this);
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

SparsePolynomial SparsePolynomial::derivative(const std::string& var) const {
    const std::size_t i = var_index(var);
    SparsePolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        ExponentVec d(e);
        --d[i];
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

Substitution::Substitution(std::vector<std::string> target_vars) : target_(std::move(target_vars)) {}

void Substitution::set(const std::string& var, const SparsePolynomial& image) {
    if (image.vars() != target_)
        throw Error("CONTEXT_MISMATCH", "substitution image for '" + var +
                                            "' is not in the target context");
    assignments_.insert_or_assign(var, image);
}

void Substitution::set(const std::string& var, const Rational& value) {
    set(var, SparsePolynomial::constant(target_, value));
}

const SparsePolynomial* Substitution::image(const std::string& var) const {
    auto it = assignments_.find(var);
    return it == assignments_.end() ? nullptr : &it->second;
}

SparsePolynomial SparsePolynomial::substitute(const Substitution& s) const {
    const auto& tvars = s.target_vars();
    // Precompute the image of each source variable.
    std::vector<SparsePolynomial> images;
    images.reserve(arity());
    for (const auto& v : vars_) {
        if (const SparsePolynomial* img = s.image(v)) {
            images.push_back(*img);
        } else {
            // Pass-through variable: must exist in the target context.
            SparsePolynomial t(tvars);
            ExponentVec e(tvars.size(), 0);
            e[t.var_index(v)] = 1;
            t.add_term(e, 1);
            images.push_back(std::move(t));
        }
    }
    SparsePolynomial result(tvars);
    for (const auto& [e, c] : terms_) {
        SparsePolynomial term = SparsePolynomial::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        result = result + term;
    }
    return result;
}

Rational SparsePolynomial::evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> coords;
    coords.reserve(arity());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end())
            throw Error("MISSING_ASSIGNMENT", "no value for variable '" + v + "'");
        coords.push_back(it->second);
    }
    return evaluate(coords);
}

Rational SparsePolynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != arity())
        throw Error("ARITY_MISMATCH", "point arity does not match context");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool is_const = total_degree(e) == 0;
        bool need_star = false;
        if (mag != 1 || is_const) {
            out << to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_[i];
            if (e[i] >= 2) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

std::vector<SparsePolynomial> graded_parts(const SparsePolynomial& p,
                                           const std::vector<std::string>& vars,
                                           unsigned base_degree) {
    std::vector<std::size_t> idx;
    idx.reserve(vars.size());
    for (const auto& v : vars) idx.push_back(p.var_index(v));

    std::map<unsigned, SparsePolynomial> buckets;
    for (const auto& [e, c] : p.terms()) {
        unsigned d = 0;
        for (std::size_t i : idx) d += e[i];
        if (d < base_degree)
            throw Error("DEGREE_BELOW_BASE",
                        "term " + SparsePolynomial::monomial(p.vars(), e, c).str() +
                            " has degree " + std::to_string(d) + " < base degree " +
                            std::to_string(base_degree));
        auto [it, ins] = buckets.try_emplace(d, p.vars());
        it->second.add_term(e, c);
    }
    std::vector<SparsePolynomial> parts;
    if (buckets.empty()) return parts;
    const unsigned top = buckets.rbegin()->first;
    for (unsigned d = base_degree; d <= top; ++d) {
        auto it = buckets.find(d);
        parts.push_back(it == buckets.end() ? SparsePolynomial(p.vars()) : it->second);
    }
    return parts;
}

PowerFactorization factor_out_power(const SparsePolynomial& p, const std::string& var) {
    if (p.is_zero()) throw Error("ZERO_POLYNOMIAL", "cannot factor the zero polynomial");
    const std::size_t i = p.var_index(var);
    unsigned mult = 0;
    bool firstTerm = true;
    for (const auto& [e, c] : p.terms()) {
        mult = firstTerm ? e[i] : std::min(mult, e[i]);
        firstTerm = false;
    }
    PowerFactorization out{mult, SparsePolynomial(p.vars())};
    for (const auto& [e, c] : p.terms()) {
        ExponentVec q(e);
        q[i] -= mult;
        out.quotient.add_term(q, c);
    }
    return out;
}

LowestPart lowest_degree_part(const SparsePolynomial& p, const std::vector<Rational>& center) {
    if (p.is_zero()) throw Error("ZERO_POLYNOMIAL", "zero polynomial has no lowest part");
    if (center.size() != p.arity())
        throw Error("ARITY_MISMATCH", "center arity does not match context");

    SparsePolynomial shifted = p;
    const bool at_origin = std::all_of(center.begin(), center.end(),
                                       [](const Rational& c) { return c == 0; });
    if (!at_origin) {
        Substitution shift(p.vars());
        for (std::size_t i = 0; i < center.size(); ++i) {
            if (center[i] == 0) continue;
            SparsePolynomial img = SparsePolynomial::variable(p.vars(), p.vars()[i]) +
                                   SparsePolynomial::constant(p.vars(), center[i]);
            shift.set(p.vars()[i], img);
        }
        shifted = p.substitute(shift);
        if (shifted.is_zero())
            throw Error("ZERO_POLYNOMIAL", "zero polynomial has no lowest part");
    }

    unsigned order = 0;
    bool firstTerm = true;
    for (const auto& [e, c] : shifted.terms()) {
        const unsigned d = total_degree(e);
        order = firstTerm ? d : std::min(order, d);
        firstTerm = false;
    }
    LowestPart out{order, SparsePolynomial(p.vars())};
    for (const auto& [e, c] : shifted.terms())
        if (total_degree(e) == order) out.form.add_term(e, c);
    return out;
}

} // namespace singulex
