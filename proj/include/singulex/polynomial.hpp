#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "singulex/rational.hpp"

namespace singulex {

// Exponent vector of a monomial; length always equals the arity of the
// owning polynomial's variable context.
using ExponentVec = std::vector<unsigned>;

inline unsigned total_degree(const ExponentVec& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vector (variable order = context order).
struct GrlexDesc {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// Global guardrail on the number of stored terms produced by any single
// operation. Default 10^6; overridable (the CLI reads SINGULEX_TERM_CAP).
std::size_t term_cap();
void set_term_cap(std::size_t cap);

class Substitution;

// Exact sparse multivariate polynomial over the rationals. The variable
// context is explicit, ordered and immutable per value; all operations are
// pure, so values are safe to share across threads.
class SparsePolynomial {
public:
    using TermMap = std::map<ExponentVec, Rational, GrlexDesc>;

    explicit SparsePolynomial(std::vector<std::string> vars);

    static SparsePolynomial constant(std::vector<std::string> vars, const Rational& c);
    static SparsePolynomial variable(std::vector<std::string> vars, const std::string& name);
    static SparsePolynomial monomial(std::vector<std::string> vars, ExponentVec exps,
                                     const Rational& coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    std::size_t var_index(const std::string& name) const; // throws UNKNOWN_VARIABLE
    bool has_var(const std::string& name) const;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // 0 for the zero polynomial.
    unsigned degree() const;
    // Degree counting only the given variable indices.
    unsigned degree_in(const std::vector<std::size_t>& var_idx) const;
    bool depends_on(const std::string& name) const;

    Rational coefficient(const ExponentVec& exps) const;

    // Merges (exps, coeff) into the term map, dropping exact zeros.
    void add_term(const ExponentVec& exps, const Rational& coeff);

    SparsePolynomial operator-() const;
    SparsePolynomial operator+(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-(const SparsePolynomial& rhs) const;
    SparsePolynomial operator*(const SparsePolynomial& rhs) const;
    SparsePolynomial operator*(const Rational& c) const;
    SparsePolynomial pow(unsigned k) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    SparsePolynomial derivative(const std::string& var) const;
    SparsePolynomial substitute(const Substitution& s) const;

    // All context variables must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& point) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Canonical printer: grlex-descending term order, explicit '*',
    // '^' only for exponents >= 2, coefficients as "p" or "p/q".
    std::string str() const;

private:
    void require_same_context(const SparsePolynomial& rhs) const;
    void check_cap() const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Assigns polynomials (all in one shared target context) to source
// variables; unassigned source variables must exist in the target context
// and pass through unchanged.
class Substitution {
public:
    explicit Substitution(std::vector<std::string> target_vars);

    void set(const std::string& var, const SparsePolynomial& image); // image in target context
    void set(const std::string& var, const Rational& value);

    const std::vector<std::string>& target_vars() const { return target_; }
    const SparsePolynomial* image(const std::string& var) const;

private:
    std::vector<std::string> target_;
    std::map<std::string, SparsePolynomial> assignments_;
};

// Decomposes p as sum of parts homogeneous of degree m, m+1, ... in the
// given variable subset (coefficients are polynomials in the remaining
// variables). Every term must have degree >= m in the subset. The returned
// parts are indexed so that parts[j] is the degree-(m+j) piece; they sum
// back to p exactly.
std::vector<SparsePolynomial> graded_parts(const SparsePolynomial& p,
                                           const std::vector<std::string>& vars,
                                           unsigned base_degree);

struct PowerFactorization {
    unsigned multiplicity = 0;
    SparsePolynomial quotient;
};

// Largest k with v^k dividing every term; quotient * v^k == p exactly.
PowerFactorization factor_out_power(const SparsePolynomial& p, const std::string& var);

struct LowestPart {
    unsigned order = 0;
    SparsePolynomial form;
};

// Translates center to the origin and returns the minimal total degree
// among terms together with the homogeneous part of that degree.
LowestPart lowest_degree_part(const SparsePolynomial& p, const std::vector<Rational>& center);

// Text parser for the polynomial grammar (see README). Pass an explicit
// context, or infer one from the variables in order of first appearance.
SparsePolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);
SparsePolynomial parse_polynomial(const std::string& text); // inferred context

} // namespace singulex
