#pragma once

#include "conedual/rational.hpp"

namespace conedual {

/// System of inequalities a.x <= b over R^dim. Rows are stored as
/// (a_1,...,a_dim, b).
struct HRep {
    int dim = 0;
    RatMatrix rows;  // each of size dim+1

    RatVector normal(std::size_t i) const { return RatVector(rows[i].begin(), rows[i].end() - 1); }
    const Rational& rhs(std::size_t i) const { return rows[i].back(); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Minimize, Maximize };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;      // optimal objective (in the requested sense)
    RatVector point;     // optimal solution when Optimal, feasible start when Unbounded
    RatVector ray;       // improving ray when Unbounded
    RatVector dual;      // one multiplier per row:
                         //   Optimal (max): y >= 0, A^T y = c,  b.y = value
                         //   Optimal (min): y >= 0, A^T y = -c, b.y = -value
                         //   Infeasible:    Farkas certificate y >= 0, A^T y = 0, b.y < 0
};

/// Exact primal simplex (Bland's rule) on min/max c.x subject to h.
LPOutcome lp_solve(const RatVector& objective, Sense sense, const HRep& h);

/// Convenience: does h have any solution?
bool lp_feasible(const HRep& h);

}  // namespace conedual
