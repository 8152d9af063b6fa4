#ifndef MIXEDCOLOR_FEASIBILITY_HPP
#define MIXEDCOLOR_FEASIBILITY_HPP

// Bounded-integer linear feasibility: interval propagation plus depth-first
// branching (smallest domain first, values ascending).

#include "mixedcolor/errors.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mixedcolor {

enum class Relation { less_equal, equal };

struct Term {
    int var = 0;
    std::int64_t coef = 0;
    bool operator==(const Term&) const = default;
};

struct LinearConstraint {
    std::vector<Term> terms;
    Relation relation = Relation::less_equal;
    std::int64_t rhs = 0;
    bool operator==(const LinearConstraint&) const = default;
};

struct IntVariable {
    std::string name;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool operator==(const IntVariable&) const = default;
};

using Assignment = std::vector<std::int64_t>;

class FeasibilityProgram {
public:
    int add_variable(std::string name, std::int64_t lower, std::int64_t upper)
    {
        variables_.push_back({std::move(name), lower, upper});
        return static_cast<int>(variables_.size()) - 1;
    }

    void add_constraint(std::vector<Term> terms, Relation rel, std::int64_t rhs)
    {
        constraints_.push_back({std::move(terms), rel, rhs});
    }

    /// sum >= rhs, stored as -sum <= -rhs.
    void add_at_least(std::vector<Term> terms, std::int64_t rhs)
    {
        for (auto& t : terms)
            t.coef = -t.coef;
        add_constraint(std::move(terms), Relation::less_equal, -rhs);
    }

    const std::vector<IntVariable>& variables() const { return variables_; }
    std::vector<IntVariable>& variables() { return variables_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }
    int variable_count() const { return static_cast<int>(variables_.size()); }

    bool satisfied_by(const Assignment& a) const
    {
        if (a.size() != variables_.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] < variables_[i].lower || a[i] > variables_[i].upper)
                return false;
        for (const auto& c : constraints_) {
            std::int64_t s = 0;
            for (const auto& t : c.terms)
                s += t.coef * a[t.var];
            if (c.relation == Relation::equal ? s != c.rhs : s > c.rhs)
                return false;
        }
        return true;
    }

    bool operator==(const FeasibilityProgram&) const = default;

private:
    std::vector<IntVariable> variables_;
    std::vector<LinearConstraint> constraints_;
};

/// One constraint per line: `name: 1*x + -1*y <= 3`; variables listed first.
inline void dump_program(std::ostream& out, const FeasibilityProgram& p)
{
    for (const auto& v : p.variables())
        out << "var " << v.name << " in [" << v.lower << ", " << v.upper << "]\n";
    int idx = 0;
    for (const auto& c : p.constraints()) {
        out << "c" << idx++ << ": ";
        if (c.terms.empty())
            out << "0";
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            if (i)
                out << " + ";
            out << c.terms[i].coef << "*" << p.variables()[c.terms[i].var].name;
        }
        out << (c.relation == Relation::equal ? " = " : " <= ") << c.rhs << '\n';
    }
}

namespace detail {

    inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
    {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0)))
            --q;
        return q;
    }
    inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

    class Propagator {
    public:
        explicit Propagator(const FeasibilityProgram& p) : p_(p), watch_(p.variable_count())
        {
            for (std::size_t c = 0; c < p.constraints().size(); ++c)
                for (const auto& t : p.constraints()[c].terms)
                    watch_[t.var].push_back(static_cast<int>(c));
        }

        /// Tightens lo/hi in place; false on an empty domain. `changed_var` < 0 means all constraints.
        bool run(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi, int changed_var = -1) const
        {
            const auto& cons = p_.constraints();
            std::vector<char> queued(cons.size(), 0);
            std::deque<int> queue;
            auto push = [&](int c) {
                if (!queued[c]) {
                    queued[c] = 1;
                    queue.push_back(c);
                }
            };
            if (changed_var < 0) {
                for (std::size_t c = 0; c < cons.size(); ++c)
                    push(static_cast<int>(c));
            }
            else {
                for (int c : watch_[changed_var])
                    push(c);
            }
            for (std::size_t v = 0; v < lo.size(); ++v)
                if (lo[v] > hi[v])
                    return false;
            while (!queue.empty()) {
                int ci = queue.front();
                queue.pop_front();
                queued[ci] = 0;
                const auto& c = cons[ci];
                if (!tighten(c.terms, c.rhs, 1, lo, hi, push))
                    return false;
                if (c.relation == Relation::equal && !tighten(c.terms, -c.rhs, -1, lo, hi, push))
                    return false;
            }
            return true;
        }

    private:
        // Enforces sign * sum(terms) <= rhs.
        template <class Push>
        bool tighten(const std::vector<Term>& terms, std::int64_t rhs, std::int64_t sign, std::vector<std::int64_t>& lo,
                     std::vector<std::int64_t>& hi, Push&& push) const
        {
            std::int64_t min_sum = 0;
            for (const auto& t : terms) {
                std::int64_t a = sign * t.coef;
                min_sum += a > 0 ? a * lo[t.var] : a * hi[t.var];
            }
            if (min_sum > rhs)
                return false;
            for (const auto& t : terms) {
                std::int64_t a = sign * t.coef;
                if (a == 0)
                    continue;
                std::int64_t own = a > 0 ? a * lo[t.var] : a * hi[t.var];
                std::int64_t slack = rhs - (min_sum - own); // a * x <= slack
                if (a > 0) {
                    std::int64_t bound = floor_div(slack, a);
                    if (bound < hi[t.var]) {
                        hi[t.var] = bound;
                        if (hi[t.var] < lo[t.var])
                            return false;
                        for (int c : watch_[t.var])
                            push(c);
                    }
                }
                else {
                    std::int64_t bound = ceil_div(slack, a);
                    if (bound > lo[t.var]) {
                        lo[t.var] = bound;
                        if (hi[t.var] < lo[t.var])
                            return false;
                        for (int c : watch_[t.var])
                            push(c);
                    }
                }
                // min_sum changes only by tightening the opposite side, so it stays valid.
            }
            return true;
        }

        const FeasibilityProgram& p_;
        std::vector<std::vector<int>> watch_;
    };

} // namespace detail

/// Bounds consistency to a fixpoint. nullopt means the program is infeasible.
inline std::optional<FeasibilityProgram> propagate_bounds(const FeasibilityProgram& p)
{
    std::vector<std::int64_t> lo, hi;
    for (const auto& v : p.variables()) {
        lo.push_back(v.lower);
        hi.push_back(v.upper);
    }
    detail::Propagator prop(p);
    if (!prop.run(lo, hi))
        return std::nullopt;
    FeasibilityProgram out = p;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        out.variables()[i].lower = lo[i];
        out.variables()[i].upper = hi[i];
    }
    return out;
}

struct FeasibilityStats {
    std::int64_t nodes = 0;
};

/// Returns a satisfying assignment or nullopt. Throws BudgetExceeded past `budget` nodes.
inline std::optional<Assignment> solve_feasibility(const FeasibilityProgram& p, std::int64_t budget = 10'000'000,
                                                   FeasibilityStats* stats = nullptr)
{
    detail::Propagator prop(p);
    std::vector<std::int64_t> lo, hi;
    for (const auto& v : p.variables()) {
        lo.push_back(v.lower);
        hi.push_back(v.upper);
    }
    std::int64_t nodes = 0;
    std::optional<Assignment> found;

    auto dfs = [&](auto&& self, std::vector<std::int64_t> l, std::vector<std::int64_t> h, int changed) -> bool {
        if (++nodes > budget)
            throw BudgetExceeded("feasibility search exceeded " + std::to_string(budget) + " nodes");
        if (!prop.run(l, h, changed))
            return false;
        int pick = -1;
        for (std::size_t v = 0; v < l.size(); ++v)
            if (l[v] < h[v] && (pick < 0 || h[v] - l[v] < h[pick] - l[pick]))
                pick = static_cast<int>(v);
        if (pick < 0) {
            found = l;
            return true;
        }
        for (std::int64_t val = l[pick]; val <= h[pick]; ++val) {
            auto l2 = l, h2 = h;
            l2[pick] = h2[pick] = val;
            if (self(self, std::move(l2), std::move(h2), pick))
                return true;
        }
        return false;
    };
    dfs(dfs, lo, hi, -1);
    if (stats)
        stats->nodes = nodes;
    return found;
}

/// Oracle: first satisfying assignment in lexicographic order by full enumeration.
/// Throws CapExceeded when the product of domain sizes exceeds `cap`.
inline std::optional<Assignment> enumerate_feasibility(const FeasibilityProgram& p, std::int64_t cap = 2'000'000)
{
    std::int64_t product = 1;
    for (const auto& v : p.variables()) {
        if (v.upper < v.lower)
            return std::nullopt;
        product *= v.upper - v.lower + 1;
        if (product > cap)
            throw CapExceeded("enumeration space exceeds " + std::to_string(cap));
    }
    Assignment a;
    for (const auto& v : p.variables())
        a.push_back(v.lower);
    while (true) {
        if (p.satisfied_by(a))
            return a;
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[i] == p.variables()[i].upper) {
            a[i] = p.variables()[i].lower;
            --i;
        }
        if (i < 0)
            return std::nullopt;
        ++a[i];
    }
}

} // namespace mixedcolor

#endif
