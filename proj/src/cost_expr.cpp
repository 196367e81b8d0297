#include "qfre/cost_expr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qfre {

namespace {

Rational eval_terms(const std::vector<AffineTerm>& terms, const Rational& t) {
    Rational best = terms.front().at(t);
    for (std::size_t i = 1; i < terms.size(); ++i) best = std::max(best, terms[i].at(t));
    return best;
}

// Upper-envelope pruning on the closed domain. Exact: a term survives iff
// it is strictly above every other term somewhere on [lo, hi], checked on
// the critical set (domain endpoints plus all pairwise intersections).
std::vector<AffineTerm> prune(std::vector<AffineTerm> terms, const TBellDomain& dom) {
    std::sort(terms.begin(), terms.end(), [](const AffineTerm& a, const AffineTerm& b) {
        return a.slope != b.slope ? a.slope < b.slope : a.intercept < b.intercept;
    });
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    // equal slopes: only the largest intercept can ever be maximal
    std::vector<AffineTerm> dedup;
    for (const auto& term : terms) {
        if (!dedup.empty() && dedup.back().slope == term.slope)
            dedup.back() = term;  // sorted, so term has the larger intercept
        else
            dedup.push_back(term);
    }
    if (dedup.size() <= 1) return dedup;

    std::set<Rational> xs{dom.lo, dom.hi};
    for (std::size_t i = 0; i < dedup.size(); ++i) {
        for (std::size_t j = i + 1; j < dedup.size(); ++j) {
            const Rational ds = dedup[j].slope - dedup[i].slope;
            if (ds == 0) continue;
            Rational x = (dedup[i].intercept - dedup[j].intercept) / ds;
            if (dom.contains(x)) xs.insert(std::move(x));
        }
    }

    std::vector<AffineTerm> kept;
    for (std::size_t i = 0; i < dedup.size(); ++i) {
        bool maximal_somewhere = false;
        for (const Rational& x : xs) {
            bool beaten = false;
            const Rational vi = dedup[i].at(x);
            for (std::size_t j = 0; j < dedup.size(); ++j) {
                if (j != i && dedup[j].at(x) >= vi) {
                    beaten = true;
                    break;
                }
            }
            if (!beaten) {
                maximal_somewhere = true;
                break;
            }
        }
        if (maximal_somewhere) kept.push_back(dedup[i]);
    }
    // All-ties degenerate case (identical values everywhere): keep one term.
    if (kept.empty()) kept.push_back(dedup.front());
    return kept;
}

void require_same_domain(const CostExpr& a, const CostExpr& b) {
    if (!(a.domain() == b.domain()))
        throw std::invalid_argument("CostExpr domain mismatch");
}

}  // namespace

CostExpr::CostExpr(std::vector<AffineTerm> terms, TBellDomain domain)
    : terms_(prune(std::move(terms), domain)), domain_(domain) {}

CostExpr CostExpr::affine(Rational intercept, Rational slope, TBellDomain domain) {
    if (intercept < 0) throw std::invalid_argument("affine: negative intercept");
    if (slope < 0) throw std::invalid_argument("affine: negative slope");
    return CostExpr({AffineTerm{std::move(intercept), std::move(slope)}}, domain);
}

CostExpr CostExpr::constant(Rational value, TBellDomain domain) {
    return affine(std::move(value), Rational{0}, domain);
}

CostExpr CostExpr::zero(TBellDomain domain) { return constant(Rational{0}, domain); }

CostExpr CostExpr::add(const CostExpr& other) const {
    require_same_domain(*this, other);
    std::vector<AffineTerm> sums;
    sums.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_)
            sums.push_back(AffineTerm{a.intercept + b.intercept, a.slope + b.slope});
    return CostExpr(std::move(sums), domain_);
}

CostExpr CostExpr::scale(const Rational& c) const {
    if (c < 0) throw std::invalid_argument("scale: negative scalar");
    if (c == 0) return zero(domain_);
    std::vector<AffineTerm> scaled;
    scaled.reserve(terms_.size());
    for (const auto& term : terms_) scaled.push_back(AffineTerm{term.intercept * c, term.slope * c});
    return CostExpr(std::move(scaled), domain_);
}

CostExpr CostExpr::max_with(const CostExpr& other) const {
    require_same_domain(*this, other);
    std::vector<AffineTerm> merged = terms_;
    merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
    return CostExpr(std::move(merged), domain_);
}

CycleCount CostExpr::eval(const Rational& t) const {
    if (!domain_.contains(t))
        throw std::domain_error("eval: t_bell " + qfre::to_string(t) + " outside domain [" +
                                qfre::to_string(domain_.lo) + ", " + qfre::to_string(domain_.hi) + "]");
    return CycleCount(eval_terms(terms_, t));
}

Rational CostExpr::slope_at(const Rational& t) const {
    if (!domain_.contains(t)) throw std::domain_error("slope_at: t_bell outside domain");
    const Rational v = eval_terms(terms_, t);
    Rational slope{0};
    bool first = true;
    for (const auto& term : terms_) {
        if (term.at(t) == v) {
            if (first || term.slope > slope) slope = term.slope;
            first = false;
        }
    }
    return slope;
}

std::string CostExpr::to_string() const {
    auto term_str = [](const AffineTerm& term) {
        std::ostringstream os;
        if (term.slope == 0) {
            os << qfre::to_string(term.intercept);
        } else {
            if (term.intercept != 0) os << qfre::to_string(term.intercept) << " + ";
            if (term.slope != 1) os << qfre::to_string(term.slope) << "*";
            os << "t";
        }
        return os.str();
    };
    if (terms_.size() == 1) return term_str(terms_.front());
    std::ostringstream os;
    os << "max(";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << ", ";
        os << term_str(terms_[i]);
    }
    os << ")";
    return os.str();
}

CostExpr operator+(const CostExpr& a, const CostExpr& b) { return a.add(b); }
CostExpr operator*(const Rational& c, const CostExpr& a) { return a.scale(c); }
CostExpr max_of(const CostExpr& a, const CostExpr& b) { return a.max_with(b); }

std::optional<Rational> crossover_t(const CostExpr& f, const CostExpr& g) {
    if (!(f.domain() == g.domain()))
        throw std::invalid_argument("crossover_t: domain mismatch");
    const auto& dom = f.domain();

    // Critical set: endpoints plus every pairwise intersection among all
    // terms of f and g. Between consecutive points f - g is affine, so its
    // sign on each open interval is the sign at the interval midpoint.
    std::vector<AffineTerm> all = f.terms();
    all.insert(all.end(), g.terms().begin(), g.terms().end());
    std::set<Rational> xs{dom.lo, dom.hi};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const Rational ds = all[j].slope - all[i].slope;
            if (ds == 0) continue;
            Rational x = (all[i].intercept - all[j].intercept) / ds;
            if (dom.contains(x)) xs.insert(std::move(x));
        }
    }
    const std::vector<Rational> pts(xs.begin(), xs.end());

    auto sign_at = [&](const Rational& t) -> int {
        const Rational d = f.eval(t).value - g.eval(t).value;
        return d > 0 ? 1 : (d < 0 ? -1 : 0);
    };

    // Sign on each open interval between consecutive critical points.
    std::vector<int> interval_sign;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        interval_sign.push_back(sign_at((pts[i] + pts[i + 1]) / 2));
    if (interval_sign.empty()) {
        // degenerate domain [x, x]
        return std::nullopt;
    }
    for (std::size_t i = 0; i + 1 < interval_sign.size(); ++i)
        if (interval_sign[i] != interval_sign[i + 1]) return pts[i + 1];
    return std::nullopt;
}

}  // namespace qfre
