#include "hklat/series.hpp"

namespace hklat {

UniSeries UniSeries::todd_q(int order) {
    // (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k/(k+1)!, then invert.
    UniSeries b(order);
    Rat sign(1);
    for (int k = 0; k <= order; ++k) {
        b.c_[k] = sign / Rat::factorial(k + 1);
        sign = -sign;
    }
    return b.inverse();
}

UniSeries UniSeries::exp_x(int order) {
    UniSeries s(order);
    for (int k = 0; k <= order; ++k) s.c_[k] = Rat(1) / Rat::factorial(k);
    return s;
}

UniSeries UniSeries::operator-() const {
    UniSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
    return r;
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
    check_order(o);
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
    check_order(o);
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    a.check_order(b);
    UniSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

UniSeries UniSeries::scaled(const Rat& v) const {
    UniSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * v;
    return r;
}

UniSeries UniSeries::negated_variable() const {
    UniSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = (k % 2 == 0) ? c_[k] : -c_[k];
    return r;
}

UniSeries UniSeries::inverse() const {
    if (c_[0] != Rat(1)) throw BadConstantTerm("UniSeries::inverse: constant term must be 1");
    UniSeries r(order());
    r.c_[0] = Rat(1);
    for (int k = 1; k <= order(); ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc;
    }
    return r;
}

UniSeries UniSeries::exp() const {
    if (!c_[0].is_zero()) throw BadConstantTerm("UniSeries::exp: constant term must be 0");
    UniSeries r = constant(Rat(1), order());
    UniSeries term = constant(Rat(1), order());
    for (int k = 1; k <= order(); ++k) {
        term = term * *this;
        term = term.scaled(Rat(1) / Rat(k));
        r += term;
    }
    return r;
}

UniSeries UniSeries::log() const {
    if (c_[0] != Rat(1)) throw BadConstantTerm("UniSeries::log: constant term must be 1");
    UniSeries u = *this - constant(Rat(1), order());
    UniSeries r(order());
    UniSeries term = constant(Rat(1), order());
    Rat sign(1);
    for (int k = 1; k <= order(); ++k) {
        term = term * u;
        r += term.scaled(sign / Rat(k));
        sign = -sign;
    }
    return r;
}

UniSeries UniSeries::sqrt() const {
    if (c_[0] != Rat(1)) throw BadConstantTerm("UniSeries::sqrt: constant term must be 1");
    return log().scaled(Rat(1, 2)).exp();
}

GradedSeries::GradedSeries(std::vector<int> weights, int trunc)
    : weights_(std::move(weights)), trunc_(trunc) {
    if (trunc_ < 0) throw BadInput("GradedSeries: negative truncation");
    for (int w : weights_)
        if (w <= 0) throw BadInput("GradedSeries: weights must be positive");
}

GradedSeries GradedSeries::constant(const GradedSeries& like, const Rat& v) {
    GradedSeries s(like.weights_, like.trunc_);
    s.add_term(std::vector<int>(like.vars(), 0), v);
    return s;
}

GradedSeries GradedSeries::generator(const GradedSeries& like, int var) {
    if (var < 0 || var >= like.vars()) throw BadInput("GradedSeries: variable index out of range");
    GradedSeries s(like.weights_, like.trunc_);
    std::vector<int> e(like.vars(), 0);
    e[var] = 1;
    s.add_term(e, Rat(1));
    return s;
}

int GradedSeries::weight(const std::vector<int>& e) const {
    int w = 0;
    for (int i = 0; i < vars(); ++i) w += weights_[i] * e[i];
    return w;
}

void GradedSeries::add_term(const std::vector<int>& e, const Rat& c) {
    if (static_cast<int>(e.size()) != vars()) throw DimensionMismatch("GradedSeries: exponent size");
    if (c.is_zero() || weight(e) > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat GradedSeries::coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries r(weights_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.check_compatible(b);
    GradedSeries r(a.weights_, a.trunc_);
    for (const auto& [ea, ca] : a.terms_) {
        int wa = a.weight(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (wa + b.weight(eb) > a.trunc_) continue;
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

GradedSeries GradedSeries::scaled(const Rat& v) const {
    GradedSeries r(weights_, trunc_);
    if (v.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * v);
    return r;
}

GradedSeries GradedSeries::graded_component(int w) const {
    GradedSeries r(weights_, trunc_);
    for (const auto& [e, c] : terms_)
        if (weight(e) == w) r.terms_.emplace(e, c);
    return r;
}

int GradedSeries::min_positive_weight() const {
    int m = 0;
    for (const auto& [e, c] : terms_) {
        int w = weight(e);
        if (w > 0 && (m == 0 || w < m)) m = w;
    }
    return m;
}

GradedSeries GradedSeries::exp() const {
    if (!constant_term().is_zero())
        throw BadConstantTerm("GradedSeries::exp: constant term must be 0");
    GradedSeries r = constant(*this, Rat(1));
    GradedSeries term = constant(*this, Rat(1));
    int mw = min_positive_weight();
    if (mw == 0) return r;  // exp(0) = 1
    int kmax = trunc_ / mw;
    for (int k = 1; k <= kmax; ++k) {
        term = term * *this;
        term = term.scaled(Rat(1) / Rat(k));
        r += term;
    }
    return r;
}

GradedSeries GradedSeries::log() const {
    if (constant_term() != Rat(1))
        throw BadConstantTerm("GradedSeries::log: constant term must be 1");
    GradedSeries u = *this - constant(*this, Rat(1));
    GradedSeries r(weights_, trunc_);
    int mw = u.min_positive_weight();
    if (mw == 0) return r;  // log(1) = 0
    GradedSeries term = constant(*this, Rat(1));
    Rat sign(1);
    int kmax = trunc_ / mw;
    for (int k = 1; k <= kmax; ++k) {
        term = term * u;
        r += term.scaled(sign / Rat(k));
        sign = -sign;
    }
    return r;
}

GradedSeries GradedSeries::sqrt() const {
    if (constant_term() != Rat(1))
        throw BadConstantTerm("GradedSeries::sqrt: constant term must be 1");
    return log().scaled(Rat(1, 2)).exp();
}

GradedSeries GradedSeries::inverse() const {
    if (constant_term() != Rat(1))
        throw BadConstantTerm("GradedSeries::inverse: constant term must be 1");
    return (-log()).exp();
}

GradedSeries GradedSeries::from_uniseries(const UniSeries& s, const GradedSeries& like, int var,
                                          bool negate_variable) {
    GradedSeries r(like.weights(), like.trunc());
    int w = like.weights()[var];
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero() || k * w > like.trunc()) continue;
        std::vector<int> e(like.vars(), 0);
        e[var] = k;
        Rat c = s.coeff(k);
        if (negate_variable && k % 2 == 1) c = -c;
        r.add_term(e, c);
    }
    return r;
}

std::vector<GradedSeries> newton_power_sums(const GradedSeries& total_chern, int k_max) {
    if (total_chern.constant_term() != Rat(1))
        throw BadConstantTerm("newton_power_sums: total Chern class must start at 1");
    std::vector<GradedSeries> p;
    p.reserve(k_max);
    std::vector<GradedSeries> c;  // c[i] = weight-i component, i >= 1
    for (int i = 1; i <= k_max; ++i) c.push_back(total_chern.graded_component(i));
    for (int k = 1; k <= k_max; ++k) {
        GradedSeries pk(total_chern.weights(), total_chern.trunc());
        Rat sign(1);
        for (int i = 1; i < k; ++i) {
            pk += (c[i - 1] * p[k - i - 1]).scaled(sign);
            sign = -sign;
        }
        pk += c[k - 1].scaled(sign * Rat(k));
        p.push_back(std::move(pk));
    }
    return p;
}

ToddPair todd_and_sqrt(const GradedSeries& total_chern) {
    int trunc = total_chern.trunc();
    UniSeries ell = UniSeries::todd_q(trunc).log();
    std::vector<GradedSeries> p = newton_power_sums(total_chern, trunc);
    GradedSeries expo(total_chern.weights(), trunc);
    for (int k = 1; k <= trunc; ++k) {
        if (ell.coeff(k).is_zero()) continue;
        expo += p[k - 1].scaled(ell.coeff(k));
    }
    ToddPair out{expo.exp(), expo.scaled(Rat(1, 2)).exp()};
    return out;
}

GradedSeries chern_character(const Rat& rank, const GradedSeries& total_chern) {
    int trunc = total_chern.trunc();
    std::vector<GradedSeries> p = newton_power_sums(total_chern, trunc);
    GradedSeries ch = GradedSeries::constant(total_chern, rank);
    for (int k = 1; k <= trunc; ++k) ch += p[k - 1].scaled(Rat(1) / Rat::factorial(k));
    return ch;
}

GradedSeries tangent_mukai_degree4(const Rat& n) {
    GradedSeries vars(std::vector<int>{2, 4}, 4);  // c2, c4; odd classes vanish
    GradedSeries total = GradedSeries::constant(vars, Rat(1)) +
                         GradedSeries::generator(vars, 0) + GradedSeries::generator(vars, 1);
    GradedSeries ch = chern_character(Rat(2) * n, total);
    ToddPair td = todd_and_sqrt(total);
    return ch * td.td_sqrt;
}

namespace {
const std::vector<int> kExpC2{1, 0};
const std::vector<int> kExpC2Sq{2, 0};
const std::vector<int> kExpC4{0, 1};

Rat beta_squared_ratio(const Rat& n) {
    Rat two_n = Rat(2) * n;
    Rat d = two_n - Rat(24);
    return d * d / two_n;
}
}  // namespace

FourfoldResult fourfold_contradiction() {
    GradedSeries vars(std::vector<int>{2, 4}, 4);
    GradedSeries total = GradedSeries::constant(vars, Rat(1)) +
                         GradedSeries::generator(vars, 0) + GradedSeries::generator(vars, 1);
    ToddPair td = todd_and_sqrt(total);
    GradedSeries vt = tangent_mukai_degree4(Rat(2));

    Rat ratio = beta_squared_ratio(Rat(2));

    // integral td = chi(O) = 3 on a fourfold with c1 = 0
    Mat<Rat> m(2, 2);
    m.at(0, 0) = td.td.coeff(kExpC2Sq);
    m.at(0, 1) = td.td.coeff(kExpC4);
    // ratio * tdsqrt_4 - v(T)_4 integrates to zero
    m.at(1, 0) = ratio * td.td_sqrt.coeff(kExpC2Sq) - vt.coeff(kExpC2Sq);
    m.at(1, 1) = ratio * td.td_sqrt.coeff(kExpC4) - vt.coeff(kExpC4);
    Vec<Rat> rhs{Rat(3), Rat(0)};
    if (rank(m) != 2) throw Error("fourfold_contradiction: system matrix is singular");
    Vec<Rat> sol = *solve(m, rhs);

    FourfoldResult out;
    out.c2sq = sol[0];
    out.c4 = sol[1];
    out.beta2_ratio = ratio;
    if (out.c4.sign() <= 0) {
        out.contradiction = true;
        out.reason = "euler_characteristic_negative";
    }
    return out;
}

FujikiVerdict fujiki_consistency(long n, const Rat& c2sq, const Rat& c4) {
    if (n < 2) throw BadInput("fujiki_consistency: n must be at least 2");
    GradedSeries vars(std::vector<int>{2, 4}, 4);
    GradedSeries total = GradedSeries::constant(vars, Rat(1)) +
                         GradedSeries::generator(vars, 0) + GradedSeries::generator(vars, 1);
    ToddPair td = todd_and_sqrt(total);
    GradedSeries vt = tangent_mukai_degree4(Rat(n));

    FujikiVerdict out;
    out.lhs = vt.coeff(kExpC2Sq) * c2sq + vt.coeff(kExpC4) * c4;
    out.rhs = beta_squared_ratio(Rat(n)) *
              (td.td_sqrt.coeff(kExpC2Sq) * c2sq + td.td_sqrt.coeff(kExpC4) * c4);
    out.consistent = (out.lhs == out.rhs);
    out.verdict = out.consistent ? "atomicity of the tangent bundle not excluded by this test"
                                 : "tangent bundle not atomic";
    return out;
}

bool verify_lagrangian_identity(int order) {
    if (order < 1) throw BadInput("verify_lagrangian_identity: order must be positive");
    UniSeries q = UniSeries::todd_q(order);
    if (q * q.negated_variable().inverse() != UniSeries::exp_x(order)) return false;

    // Root form: td(L)^{1/2} td(Omega_L)^{-1/2} = exp(sum x_i / 2) with the
    // cotangent roots being the negated tangent roots.
    UniSeries logq = q.log();
    for (int roots = 1; roots <= 2; ++roots) {
        GradedSeries like(std::vector<int>(roots, 1), order);
        GradedSeries half_sum(like.weights(), like.trunc());
        GradedSeries expo(like.weights(), like.trunc());
        for (int i = 0; i < roots; ++i) {
            expo += GradedSeries::from_uniseries(logq, like, i, false).scaled(Rat(1, 2));
            expo -= GradedSeries::from_uniseries(logq, like, i, true).scaled(Rat(1, 2));
            half_sum += GradedSeries::generator(like, i).scaled(Rat(1, 2));
        }
        if (expo.exp() != half_sum.exp()) return false;
    }
    return true;
}

Rat k_relation(long n, const Rat& r_x) {
    if (n < 1) throw BadInput("k_relation: n must be positive");
    GradedSeries vars(std::vector<int>{2, 4}, 4);
    GradedSeries total = GradedSeries::constant(vars, Rat(1)) +
                         GradedSeries::generator(vars, 0) + GradedSeries::generator(vars, 1);
    ToddPair td = todd_and_sqrt(total);
    GradedSeries vt = tangent_mukai_degree4(Rat(n));
    // Match the weight-2 rows of the two expansions: the structure-sheaf side
    // carries r_x with td^{1/2}_2, the tangent side carries 2n k with v(T)_2.
    Rat tds_c2 = td.td_sqrt.coeff(kExpC2);
    Rat vt_c2 = vt.coeff(kExpC2);
    if (tds_c2.is_zero()) throw Error("k_relation: vanishing td^{1/2} coefficient");
    Rat k = (vt_c2 / tds_c2) * r_x / (Rat(2) * Rat(n));
    Rat closed = (Rat(2) * Rat(n) - Rat(24)) / (Rat(2) * Rat(n)) * r_x;
    if (k != closed) throw Error("k_relation: derived value disagrees with the closed form");
    return k;
}

}  // namespace hklat
