#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cbcert/field.hpp"

namespace cbcert {

/// Sparse multivariate polynomial over a prime field.
///
/// Terms live in an ordered map keyed by exponent vector, so iteration,
/// printing and serialization are canonical. Zero coefficients are never
/// stored. A polynomial may carry a homogeneous-degree tag (weighted by the
/// optional per-variable grading); the zero polynomial is compatible with
/// every tag.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Fp>;

    MultiPoly(PrimeField field, std::vector<std::string> vars);

    static MultiPoly constant(const PrimeField& field, std::vector<std::string> vars, Fp c);
    static MultiPoly monomial(const PrimeField& field, std::vector<std::string> vars,
                              Exponents exps, Fp c);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Per-variable grading weights, all 1 by default.
    const std::vector<i64>& weights() const noexcept { return weights_; }
    void set_weights(std::vector<i64> w);

    std::optional<i64> degree_tag() const noexcept { return degree_tag_; }
    /// Tags the polynomial as homogeneous of `degree`; throws if a stored
    /// term has a different weighted degree.
    MultiPoly& tag_homogeneous(i64 degree);
    void clear_tag() noexcept { degree_tag_.reset(); }

    i64 weighted_degree(const Exponents& e) const;
    /// Max weighted degree over stored terms; -1 for the zero polynomial.
    i64 total_degree() const;
    bool is_homogeneous_of(i64 degree) const;

    /// Accumulates c into the coefficient of `exps`, erasing it if the sum
    /// is zero.
    void add_term(const Exponents& exps, Fp c);
    Fp coeff(const Exponents& exps) const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly scaled(Fp c) const;
    MultiPoly negated() const;
    MultiPoly pow(std::uint32_t k) const;

    /// Iterated formal partial derivative d^order/d(var)^order. Coefficients
    /// pick up falling-factorial multipliers reduced mod p; these vanish only
    /// when the exponent drops below the order, which is the structural zero.
    MultiPoly partial(std::size_t var, std::uint32_t order) const;

    Fp eval(std::span<const Fp> point) const;

    /// Substitutes images[i] for variable i. All images must live in one
    /// common ring, which becomes the ring of the result. Grading tags and
    /// weights are dropped; callers re-tag.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    bool same_ring(const MultiPoly& other) const noexcept;

    /// Mathematical equality: same ring and same terms (tags ignored).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::string to_string() const;

private:
    void require_same_ring(const MultiPoly& other, const char* op) const;
    // tag propagation for add/sub: equal tags survive, a zero operand is a
    // wildcard, a genuine mismatch throws
    std::optional<i64> add_tag(const MultiPoly& rhs) const;

    PrimeField field_;
    std::vector<std::string> vars_;
    std::vector<i64> weights_;
    TermMap terms_;
    std::optional<i64> degree_tag_;
};

// ---------------------------------------------------------------------------
// Dense univariate helpers over F_p (coefficient of t^i at index i, no
// trailing zeros).
// ---------------------------------------------------------------------------

using UniPoly = std::vector<Fp>;

void uni_normalize(UniPoly& f);
int uni_degree(const UniPoly& f); // -1 for the zero polynomial
UniPoly uni_derivative(const UniPoly& f, const PrimeField& field);
/// Monic gcd via Euclid.
UniPoly uni_gcd(UniPoly a, UniPoly b, const PrimeField& field);
/// True iff gcd(f, f') is constant. Throws std::domain_error on the zero
/// polynomial.
bool univariate_squarefree(const UniPoly& f, const PrimeField& field);
/// Converts a one-variable MultiPoly to dense form.
UniPoly uni_from_poly(const MultiPoly& f);

} // namespace cbcert
