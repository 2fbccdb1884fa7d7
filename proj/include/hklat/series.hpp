#pragma once

#include <map>
#include <string>
#include <vector>

#include "hklat/matrix.hpp"

namespace hklat {

/// Truncated power series in one formal variable with exact coefficients.
class UniSeries {
public:
    explicit UniSeries(int order) : c_(order + 1, Rat(0)) {
        if (order < 0) throw BadInput("UniSeries: negative order");
    }

    static UniSeries constant(const Rat& v, int order) {
        UniSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static UniSeries x(int order) {
        UniSeries s(order);
        if (order >= 1) s.c_[1] = Rat(1);
        return s;
    }
    /// x / (1 - e^{-x}), the Todd generating series.
    static UniSeries todd_q(int order);
    /// e^x.
    static UniSeries exp_x(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int k) const { return c_.at(k); }
    void set_coeff(int k, const Rat& v) { c_.at(k) = v; }

    UniSeries operator-() const;
    UniSeries& operator+=(const UniSeries& o);
    UniSeries& operator-=(const UniSeries& o);
    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    UniSeries scaled(const Rat& v) const;

    /// Substitute x -> -x.
    UniSeries negated_variable() const;

    /// Multiplicative inverse; requires constant term 1.
    UniSeries inverse() const;
    /// exp; requires constant term 0.
    UniSeries exp() const;
    /// log; requires constant term 1.
    UniSeries log() const;
    /// Square root; requires constant term 1.
    UniSeries sqrt() const;

    friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniSeries& a, const UniSeries& b) { return !(a == b); }

private:
    void check_order(const UniSeries& o) const {
        if (order() != o.order()) throw DimensionMismatch("UniSeries: order mismatch");
    }
    std::vector<Rat> c_;
};

/// Degree-truncated polynomial in formal class symbols with per-variable
/// weights and exact rational coefficients. No term of weight above the
/// truncation bound is stored; products respect the grading.
class GradedSeries {
public:
    GradedSeries(std::vector<int> weights, int trunc);

    /// Standard Chern-class variable pack c_1..c_m with weights 1..m.
    static GradedSeries chern_vars(int m, int trunc) {
        std::vector<int> w(m);
        for (int i = 0; i < m; ++i) w[i] = i + 1;
        return GradedSeries(std::move(w), trunc);
    }

    static GradedSeries constant(const GradedSeries& like, const Rat& v);
    /// The single-variable generator x_i.
    static GradedSeries generator(const GradedSeries& like, int var);

    int vars() const { return static_cast<int>(weights_.size()); }
    const std::vector<int>& weights() const { return weights_; }
    int trunc() const { return trunc_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    int weight(const std::vector<int>& e) const;
    void add_term(const std::vector<int>& e, const Rat& c);
    Rat coeff(const std::vector<int>& e) const;
    bool is_zero() const { return terms_.empty(); }
    Rat constant_term() const { return coeff(std::vector<int>(vars(), 0)); }

    GradedSeries operator-() const;
    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries scaled(const Rat& v) const;

    /// Homogeneous part of the given weight.
    GradedSeries graded_component(int w) const;

    GradedSeries inverse() const;
    GradedSeries exp() const;
    GradedSeries log() const;
    GradedSeries sqrt() const;

    /// Substitute a one-variable series (constant term 0 required for the
    /// composed variable to stay polynomial under truncation) for x_var.
    static GradedSeries from_uniseries(const UniSeries& s, const GradedSeries& like, int var,
                                       bool negate_variable = false);

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.weights_ == b.weights_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

private:
    void check_compatible(const GradedSeries& o) const {
        if (weights_ != o.weights_ || trunc_ != o.trunc_)
            throw DimensionMismatch("GradedSeries: weight or truncation mismatch");
    }
    int min_positive_weight() const;

    std::vector<int> weights_;
    int trunc_;
    std::map<std::vector<int>, Rat> terms_;
};

/// Power sums of the Chern roots via Newton's identities:
/// p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
/// total_chern must have constant term 1; c_i is its weight-i component.
std::vector<GradedSeries> newton_power_sums(const GradedSeries& total_chern, int k_max);

struct ToddPair {
    GradedSeries td;
    GradedSeries td_sqrt;
};

/// Todd class and its square root: td = exp(sum_k l_k p_k) with l_k the
/// log-coefficients of x/(1-e^{-x}); the root takes half the exponent.
ToddPair todd_and_sqrt(const GradedSeries& total_chern);

/// Chern character from rank and total Chern class: rank + sum_k p_k / k!.
GradedSeries chern_character(const Rat& rank, const GradedSeries& total_chern);

/// Mukai vector of the tangent bundle through weight 4, symbolically in the
/// half-dimension n: variables c2 (weight 2) and c4 (weight 4), with odd
/// Chern classes zero. Exponents are (c2 power, c4 power).
GradedSeries tangent_mukai_degree4(const Rat& n);

struct FourfoldResult {
    Rat c2sq;          // integral of c_2^2
    Rat c4;            // integral of c_4 (the topological Euler characteristic)
    bool contradiction = false;
    std::string reason;
    Rat beta2_ratio;   // (2n-24)^2/(2n) at n = 2
};

/// Solves the exact 2x2 system coupling the Todd integral with the degree-four
/// comparison at n = 2 and flags the sign contradiction: the Euler
/// characteristic cannot be negative, so the tangent bundle is not atomic.
FourfoldResult fourfold_contradiction();

struct FujikiVerdict {
    bool consistent = false;
    Rat lhs;
    Rat rhs;
    std::string verdict;
};

/// Consistency of the degree-four Fujiki constants of c2^2 and c4 with the
/// proportionality forced by an atomic tangent bundle. Inputs carry their own
/// provenance; n >= 2.
FujikiVerdict fujiki_consistency(long n, const Rat& c2sq, const Rat& c4);

/// Q(x) Q(-x)^{-1} = e^x to the given order, plus the induced root identity
/// td(L)^{1/2} td(Omega_L)^{-1/2} = exp(c1(L)/2) in one and two formal roots.
bool verify_lagrangian_identity(int order);

/// k = (2n-24)/(2n) r_x, derived from the degree-four coefficient match and
/// asserted against the closed form.
Rat k_relation(long n, const Rat& r_x);

}  // namespace hklat
