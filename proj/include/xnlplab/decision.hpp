#ifndef XNLPLAB_DECISION_HPP
#define XNLPLAB_DECISION_HPP

#include <cstdint>
#include <optional>
#include <utility>

namespace xnlplab {

// Outcome of a budgeted exact search. Timeout is a first-class result,
// never an exception; infeasible is only reported after exhaustion.
template <class Witness>
struct Decision {
    enum class Kind { feasible, infeasible, timeout };

    Kind kind = Kind::infeasible;
    std::optional<Witness> witness;  // set iff feasible

    static Decision make_feasible(Witness w) {
        Decision d;
        d.kind = Kind::feasible;
        d.witness = std::move(w);
        return d;
    }
    static Decision make_infeasible() { return Decision{Kind::infeasible, std::nullopt}; }
    static Decision make_timeout() { return Decision{Kind::timeout, std::nullopt}; }

    bool feasible() const { return kind == Kind::feasible; }
    bool infeasible() const { return kind == Kind::infeasible; }
    bool timed_out() const { return kind == Kind::timeout; }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

}  // namespace xnlplab

#endif
