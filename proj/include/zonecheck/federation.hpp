// Federations: ordered lists of non-empty canonical DBMs over one clock set,
// representing possibly non-convex zones. Lists of DBMs have no canonical
// form, so equality and inclusion are always decided semantically via
// subtraction. Includes the timed-predecessor-within-a-stay-zone operator.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zonecheck/dbm.hpp"
#include "zonecheck/error.hpp"

namespace zonecheck {

class Federation {
public:
    explicit Federation(std::size_t dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("federation dimension must be at least 1");
    }

    static Federation universe(std::size_t dim) {
        Federation f(dim);
        f.members_.push_back(Dbm::universe(dim));
        return f;
    }

    static Federation of(Dbm d) {
        Federation f(d.dim());
        f.add(std::move(d));
        return f;
    }

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return members_.empty(); }
    const std::vector<Dbm>& members() const { return members_; }

    void add(Dbm d) {
        if (d.dim() != dim_) throw std::invalid_argument("federation dimension mismatch");
        if (!d.is_empty()) members_.push_back(std::move(d));
    }

    bool contains(const ClockValuation& v) const {
        for (const auto& m : members_)
            if (m.contains(v)) return true;
        return false;
    }

    // Membership is the disjunction; list concatenation then reduce.
    Federation unite(const Federation& other) const {
        require_same_dim(other);
        Federation out(*this);
        for (const auto& m : other.members_) out.members_.push_back(m);
        return out.reduced();
    }

    // Membership is the conjunction; pairwise intersections, empties dropped.
    Federation intersect(const Federation& other) const {
        require_same_dim(other);
        Federation out(dim_);
        for (const auto& a : members_)
            for (const auto& b : other.members_)
                out.add(a.intersect(b));
        return out.reduced();
    }

    // Membership: in this and not in other.
    Federation subtract(const Federation& other) const {
        require_same_dim(other);
        Federation out(dim_);
        for (const auto& a : members_) {
            std::vector<Dbm> pieces{a};
            for (const auto& b : other.members_) {
                std::vector<Dbm> next;
                for (const auto& p : pieces)
                    subtract_dbm(p, b, next);
                pieces = std::move(next);
                if (pieces.empty()) break;
            }
            for (auto& p : pieces) out.members_.push_back(std::move(p));
        }
        return out.reduced();
    }

    // Semantic inclusion: this covers other iff other minus this is empty.
    bool includes_sem(const Federation& other) const {
        require_same_dim(other);
        return other.subtract(*this).is_empty();
    }

    bool equals_sem(const Federation& other) const {
        return includes_sem(other) && other.includes_sem(*this);
    }

    // Complement within the universe of non-negative valuations.
    Federation complement() const {
        return universe(dim_).subtract(*this);
    }

    // Drops members included (Dbm-entrywise) in another member; for equal
    // members the first occurrence is kept. Semantics unchanged; idempotent.
    Federation reduced() const {
        std::vector<bool> dropped(members_.size(), false);
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = 0; j < members_.size(); ++j) {
                if (i == j || dropped[j]) continue;
                if (members_[j].includes(members_[i]) &&
                    (j < i || !members_[i].includes(members_[j]))) {
                    dropped[i] = true;
                    break;
                }
            }
        }
        Federation out(dim_);
        for (std::size_t i = 0; i < members_.size(); ++i)
            if (!dropped[i]) out.members_.push_back(members_[i]);
        return out;
    }

    Federation down() const { return memberwise([](const Dbm& d) { return d.down(); }); }

    Federation freed(const std::vector<std::size_t>& clocks) const {
        return memberwise([&](const Dbm& d) {
            Dbm out = d;
            for (std::size_t c : clocks) out = out.freed(c);
            return out;
        });
    }

    Federation backwards_reset(const std::vector<std::size_t>& clocks) const {
        return memberwise([&](const Dbm& d) { return d.backwards_reset(clocks); });
    }

    Federation lifted() const {
        Federation out(dim_ + 1);
        for (const auto& m : members_) out.add(m.lifted());
        return out;
    }

    Federation project_out(std::size_t c) const {
        Federation out(dim_ - 1);
        for (const auto& m : members_) out.add(m.project_out(c));
        return out.reduced();
    }

    // True iff d minus this federation is empty.
    bool covers(const Dbm& d) const {
        if (d.is_empty()) return true;
        std::vector<Dbm> pieces{d};
        for (const auto& b : members_) {
            std::vector<Dbm> next;
            for (const auto& p : pieces)
                subtract_dbm(p, b, next);
            pieces = std::move(next);
            if (pieces.empty()) return true;
        }
        return pieces.empty();
    }

    // Disjunction of conjunctions, e.g. "(1 <= x & x <= 2) | (y <= 3)".
    std::string render(const std::vector<std::string>& names) const {
        if (members_.empty()) return "false";
        std::string out;
        for (const auto& m : members_) {
            if (!out.empty()) out += " | ";
            out += "(" + m.render(names) + ")";
        }
        return out;
    }

    // Splits a along the negated facets of b; pieces cover a minus b.
    static void subtract_dbm(const Dbm& a, const Dbm& b, std::vector<Dbm>& out) {
        if (a.is_empty()) return;
        if (b.is_empty()) {
            out.push_back(a);
            return;
        }
        if (a.intersect(b).is_empty()) {
            out.push_back(a);
            return;
        }
        Dbm rest = a;
        for (std::size_t i = 0; i < a.dim() && !rest.is_empty(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
                if (i == j) continue;
                const Bound& facet = b.at(i, j);
                if (facet.is_infinite()) continue;
                if (!(facet < rest.at(i, j))) continue; // rest already inside this facet
                Dbm piece = rest.conjoined(j, i, facet.negated_facet());
                if (!piece.is_empty()) out.push_back(std::move(piece));
                rest = rest.conjoined(i, j, facet);
                if (rest.is_empty()) break;
            }
        }
    }

private:
    template <typename Fn>
    Federation memberwise(Fn&& fn) const {
        Federation out(dim_);
        for (const auto& m : members_) out.add(fn(m));
        return out.reduced();
    }

    void require_same_dim(const Federation& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("federation dimension mismatch");
    }

    std::size_t dim_;
    std::vector<Dbm> members_;
};

// Valuations that reach `target` by letting time pass without leaving `stay`
// at any instant strictly before arrival:
//   { v >= 0 | exists t >= 0 : v+t in target and forall t' in [0,t) : v+t' in stay }.
//
// Least fixpoint from target with two growth steps per known piece C:
//   pull-back   D /\ down(C /\ cl_time(D)): flow inside the convex stay
//               member D into C; cl_time weakens strict upper facets of D so
//               a trajectory may arrive exactly on D's topological boundary;
//   junction    D /\ time_entry(C /\ D2): a stay point from which the flow
//               enters C through C's own open boundary while crossing from
//               member D into member D2 (the segment inside D2 has no first
//               point, so the pull-back alone cannot reach it).
inline Federation tpre_within(const Federation& stay, const Federation& target,
                              std::size_t iteration_cap = 10000) {
    if (stay.dim() != target.dim())
        throw std::invalid_argument("tpre_within dimension mismatch");
    Federation t = target.reduced();
    std::vector<Dbm> stay_closed;
    stay_closed.reserve(stay.members().size());
    for (const auto& d : stay.members()) stay_closed.push_back(d.time_closed());

    for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
        Federation grown = t;
        bool changed = false;
        auto admit = [&](Dbm cand) {
            if (cand.is_empty()) return;
            if (grown.covers(cand)) return;
            grown.add(std::move(cand));
            changed = true;
        };
        for (std::size_t k = 0; k < stay.members().size(); ++k) {
            const Dbm& d = stay.members()[k];
            const Dbm& cl = stay_closed[k];
            for (const auto& c : t.members())
                admit(d.intersect(c.intersect(cl).down()));
        }
        for (const auto& c : t.members()) {
            for (const auto& d2 : stay.members()) {
                Dbm entry = c.intersect(d2).time_entry();
                if (entry.is_empty()) continue;
                for (const auto& d : stay.members())
                    admit(d.intersect(entry));
            }
        }
        if (!changed) return t;
        t = grown.reduced();
    }
    throw IterationCapExceeded("tpre_within did not stabilize within the iteration cap");
}

} // namespace zonecheck
