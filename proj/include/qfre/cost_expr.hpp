#pragma once

#include "qfre/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qfre {

// A count of logical cycles, kept exact until a report rounds it.
struct CycleCount {
    Rational value;

    explicit CycleCount(Rational v) : value(std::move(v)) {
        if (value < 0) throw std::domain_error("CycleCount must be non-negative");
    }
    std::int64_t rounded() const { return round_to_i64(value); }
};

// One affine branch: intercept + slope * t, in logical cycles, with t the
// per-Bell-pair consumption time T_Bell. All modeled costs are
// non-decreasing in T_Bell, so slopes are never negative.
struct AffineTerm {
    Rational intercept;
    Rational slope;

    Rational at(const Rational& t) const { return intercept + slope * t; }
    bool operator==(const AffineTerm& other) const = default;
};

// Closed interval of T_Bell values a cost expression is valid on. The
// architecture bounds the network penalty to a factor of 2 to 10, hence the
// default; evaluating outside the domain is an error, not an extrapolation.
struct TBellDomain {
    Rational lo{2};
    Rational hi{10};

    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool operator==(const TBellDomain& other) const = default;
};

// A convex piecewise-affine function of T_Bell: the pointwise max of a
// non-empty set of affine terms. This is the universal cost currency;
// sums, scalings and maxima of stage costs all stay in this class.
//
// Canonical form keeps the terms sorted by slope and drops every term that
// is nowhere maximal on the domain, so expressions built through long
// composition chains do not accumulate dead branches.
class CostExpr {
  public:
    // Default-constructed expressions are zero on the default domain.
    CostExpr() : terms_{AffineTerm{Rational{0}, Rational{0}}}, domain_{} {}

    // One-term expression intercept + slope*t. Negative inputs rejected.
    static CostExpr affine(Rational intercept, Rational slope, TBellDomain domain = {});
    static CostExpr constant(Rational value, TBellDomain domain = {});
    static CostExpr zero(TBellDomain domain = {});

    const std::vector<AffineTerm>& terms() const { return terms_; }
    const TBellDomain& domain() const { return domain_; }

    // Pointwise sum; exact, computed as the max over pairwise term sums.
    CostExpr add(const CostExpr& other) const;
    // Pointwise scaling by c >= 0.
    CostExpr scale(const Rational& c) const;
    // Pointwise maximum; union of term sets, pruned.
    CostExpr max_with(const CostExpr& other) const;

    // Exact value at t; throws std::domain_error outside the domain.
    CycleCount eval(const Rational& t) const;
    std::int64_t eval_rounded(const Rational& t) const { return eval(t).rounded(); }

    // Slope of the active term at t; at a breakpoint, the right-hand slope.
    Rational slope_at(const Rational& t) const;

    // Canonical textual form, e.g. "max(20, 7*t)"; rationals as "p/q".
    std::string to_string() const;

    bool operator==(const CostExpr& other) const = default;

  private:
    CostExpr(std::vector<AffineTerm> terms, TBellDomain domain);

    std::vector<AffineTerm> terms_;
    TBellDomain domain_;
};

CostExpr operator+(const CostExpr& a, const CostExpr& b);
CostExpr operator*(const Rational& c, const CostExpr& a);
CostExpr max_of(const CostExpr& a, const CostExpr& b);

inline CycleCount eval(const CostExpr& a, const Rational& t) { return a.eval(t); }
inline std::int64_t round_cycles(const Rational& x) { return round_to_i64(x); }

// Smallest t in the domain where the strict order of f and g changes,
// computed exactly from term intersections; nullopt when the order is
// constant on the whole domain (including f == g everywhere).
std::optional<Rational> crossover_t(const CostExpr& f, const CostExpr& g);

}  // namespace qfre
