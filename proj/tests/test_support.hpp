#pragma once

#include "qfre/cost_expr.hpp"

#include <random>
#include <vector>

namespace qfre::testing {

// Deterministic generators for the randomized property suites.
class Gen {
  public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    Rational rational(long max_num = 1000, long max_den = 16) {
        std::uniform_int_distribution<long> num(0, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return Rational{num(rng_), den(rng_)};
    }

    Rational t_in(const TBellDomain& dom) {
        // rational point lo + k/32 * (hi - lo)
        std::uniform_int_distribution<int> k(0, 32);
        return dom.lo + Rational{k(rng_), 32} * (dom.hi - dom.lo);
    }

    std::vector<AffineTerm> terms(int max_terms = 5) {
        std::uniform_int_distribution<int> count(1, max_terms);
        std::vector<AffineTerm> out;
        const int n = count(rng_);
        for (int i = 0; i < n; ++i) out.push_back({rational(), rational(200, 8)});
        return out;
    }

    CostExpr expr(int max_terms = 5) {
        CostExpr e = CostExpr::zero();
        bool first = true;
        for (const auto& term : terms(max_terms)) {
            CostExpr t = CostExpr::affine(term.intercept, term.slope);
            e = first ? t : max_of(e, t);
            first = false;
        }
        return e;
    }

    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(rng_);
    }

    std::mt19937& rng() { return rng_; }

  private:
    std::mt19937 rng_;
};

}  // namespace qfre::testing
