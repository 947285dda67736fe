// Difference bound matrices over exact integer bounds.
//
// A Dbm of dimension n+1 represents a convex zone over n clocks; index 0 is
// the reference clock that is always zero, and entry (i,j) bounds xi - xj.
// Public values are always canonical (tight under the triangle inequality)
// with emptiness decided; the empty zone is an explicit value, never an
// exception. Mutating steps inside an operation defer re-canonicalization
// until the end of the operation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonecheck/bound.hpp"
#include "zonecheck/rational.hpp"

namespace zonecheck {

// Non-negative rational value per clock (excluding the reference clock).
class ClockValuation {
public:
    ClockValuation() = default;
    explicit ClockValuation(std::vector<Rational> values) : values_(std::move(values)) {
        for (const auto& v : values_)
            if (v < Rational(0)) throw std::invalid_argument("negative clock value");
    }
    static ClockValuation zero(std::size_t clocks) {
        return ClockValuation(std::vector<Rational>(clocks, Rational(0)));
    }

    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t clock) const { return values_[clock]; }

    ClockValuation advanced(const Rational& t) const {
        std::vector<Rational> out(values_);
        for (auto& v : out) v += t;
        return ClockValuation(std::move(out));
    }

private:
    std::vector<Rational> values_;
};

class Dbm {
public:
    // The zone containing every non-negative valuation.
    static Dbm universe(std::size_t dim) {
        if (dim < 1) throw std::invalid_argument("dbm dimension must be at least 1");
        Dbm d(dim);
        return d;
    }

    static Dbm empty_zone(std::size_t dim) {
        if (dim < 1) throw std::invalid_argument("dbm dimension must be at least 1");
        Dbm d(dim);
        d.empty_ = true;
        return d;
    }

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return empty_; }

    const Bound& at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }

    // d and {xi - xj ~ b}; result is canonical, possibly empty.
    Dbm conjoined(std::size_t i, std::size_t j, Bound b) const {
        if (i >= dim_ || j >= dim_ || i == j)
            throw std::invalid_argument("conjoin index out of range");
        if (empty_) return *this;
        Dbm out(*this);
        out.tighten(i, j, b);
        out.close(std::max(input_constant(), bound_constant(b)));
        return out;
    }

    // Entrywise minimum, re-canonicalized; membership is the conjunction.
    Dbm intersect(const Dbm& other) const {
        require_same_dim(other);
        if (empty_) return *this;
        if (other.empty_) return other;
        Dbm out(*this);
        for (std::size_t k = 0; k < m_.size(); ++k)
            out.m_[k] = min(out.m_[k], other.m_[k]);
        out.close(std::max(input_constant(), other.input_constant()));
        return out;
    }

    // Unconstrained time predecessor: { v >= 0 | exists t >= 0 : v+t in d }.
    // Diagonal constraints persist, lower bounds relax toward zero.
    Dbm down() const {
        if (empty_) return *this;
        Dbm out(*this);
        for (std::size_t j = 1; j < dim_; ++j) {
            Bound lo = Bound::zero_weak();
            for (std::size_t i = 1; i < dim_; ++i)
                lo = min(lo, at(i, j));
            out.m_[j] = lo; // entry (0, j)
        }
        out.close(input_constant());
        return out;
    }

    // { v >= 0 | exists r >= 0 : v[c:=r] in d }: all knowledge about clock c removed.
    Dbm freed(std::size_t c) const {
        if (c == 0 || c >= dim_)
            throw std::invalid_argument("cannot free the reference clock");
        if (empty_) return *this;
        Dbm out(*this);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j == c) continue;
            out.m_[c * dim_ + j] = Bound::infinity();
            out.m_[j * dim_ + c] = out.at(j, 0);
        }
        out.close(input_constant());
        return out;
    }

    // { v >= 0 | v[X:=0] in d }, i.e. free_X(d /\ all clocks in X equal 0).
    Dbm backwards_reset(const std::vector<std::size_t>& clocks) const {
        if (empty_) return *this;
        for (std::size_t c : clocks)
            if (c == 0 || c >= dim_)
                throw std::invalid_argument("cannot reset the reference clock");
        Dbm out(*this);
        for (std::size_t c : clocks) {
            out.tighten(c, 0, Bound::zero_weak());
            out.tighten(0, c, Bound::zero_weak());
        }
        out.close(input_constant());
        for (std::size_t c : clocks) {
            if (out.empty_) return out;
            out = out.freed(c);
        }
        return out;
    }

    // this includes other (every valuation of other lies in this)?
    bool includes(const Dbm& other) const {
        require_same_dim(other);
        if (other.empty_) return true;
        if (empty_) return false;
        for (std::size_t k = 0; k < m_.size(); ++k)
            if (!(other.m_[k] <= m_[k])) return false;
        return true;
    }

    bool contains(const ClockValuation& v) const {
        if (v.size() + 1 != dim_) throw std::invalid_argument("valuation dimension mismatch");
        if (empty_) return false;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                if (i == j) continue;
                const Bound& b = at(i, j);
                if (b.is_infinite()) continue;
                Rational vi = i == 0 ? Rational(0) : v[i - 1];
                Rational vj = j == 0 ? Rational(0) : v[j - 1];
                if (!b.satisfied_by(vi - vj)) return false;
            }
        }
        return true;
    }

    // Points from which the zone is entered immediately by letting time
    // pass: strict lower bounds weaken (their boundary is reached in the
    // limit), weak upper bounds tighten (on an upper facet the flow leaves
    // at once), diagonal constraints keep their strictness.
    Dbm time_entry() const {
        if (empty_) return *this;
        Dbm out(*this);
        bool changed = false;
        for (std::size_t j = 1; j < dim_; ++j) {
            const Bound& lo = at(0, j);
            if (!lo.is_infinite() && lo.is_strict()) {
                out.m_[j] = Bound::weak(lo.value());
                changed = true;
            }
        }
        for (std::size_t i = 1; i < dim_; ++i) {
            const Bound& up = at(i, 0);
            if (!up.is_infinite() && !up.is_strict()) {
                out.m_[i * dim_] = Bound::strict(up.value());
                changed = true;
            }
        }
        if (changed) out.close(input_constant());
        return out;
    }

    // Weakens strict bounds on upper facets (entries (i,0)) to non-strict.
    // These are the facets a time trajectory can leave through; the closure
    // admits entry into the next region exactly at such a facet.
    Dbm time_closed() const {
        if (empty_) return *this;
        Dbm out(*this);
        bool changed = false;
        for (std::size_t i = 1; i < dim_; ++i) {
            const Bound& b = at(i, 0);
            if (!b.is_infinite() && b.is_strict()) {
                out.m_[i * dim_] = Bound::weak(b.value());
                changed = true;
            }
        }
        if (changed) out.close(input_constant());
        return out;
    }

    // Exact projection removing matrix index c (the clock must be existentially
    // quantified away; on a canonical matrix dropping row/column c is exact).
    Dbm project_out(std::size_t c) const {
        if (c == 0 || c >= dim_) throw std::invalid_argument("cannot project the reference clock");
        Dbm out(dim_ - 1);
        out.empty_ = empty_;
        for (std::size_t i = 0, oi = 0; i < dim_; ++i) {
            if (i == c) continue;
            for (std::size_t j = 0, oj = 0; j < dim_; ++j) {
                if (j == c) continue;
                out.m_[oi * out.dim_ + oj] = at(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    }

    // Appends one unconstrained clock (index dim of the result).
    Dbm lifted() const {
        Dbm out(dim_ + 1);
        out.empty_ = empty_;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                out.m_[i * out.dim_ + j] = at(i, j);
        // new clock: only >= 0 and whatever closure derives
        out.m_[out.dim_ * out.dim_ - 1] = Bound::zero_weak();
        out.m_[dim_] = Bound::zero_weak(); // entry (0, new)
        for (std::size_t i = 1; i < dim_; ++i) {
            out.m_[i * out.dim_ + dim_] = Bound::infinity();
            out.m_[dim_ * out.dim_ + i] = Bound::infinity();
        }
        out.m_[dim_ * out.dim_] = Bound::infinity(); // (new, 0)
        if (!out.empty_) out.close(input_constant());
        return out;
    }

    friend bool operator==(const Dbm& a, const Dbm& b) {
        if (a.dim_ != b.dim_) return false;
        if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
        return a.m_ == b.m_;
    }
    friend bool operator!=(const Dbm& a, const Dbm& b) { return !(a == b); }

    // "1 <= x & x <= 2 & y - x <= 1"; empty renders as "false", universe as "true".
    std::string render(const std::vector<std::string>& names) const {
        if (names.size() + 1 != dim_) throw std::invalid_argument("clock name count mismatch");
        if (empty_) return "false";
        std::string out;
        auto append = [&out](const std::string& s) {
            if (!out.empty()) out += " & ";
            out += s;
        };
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                if (i == j) continue;
                const Bound& b = at(i, j);
                if (b.is_infinite()) continue;
                if (i == 0) {
                    // -xj ~ d, i.e. xj >~ -d; skip the trivial xj >= 0
                    if (b == Bound::zero_weak()) continue;
                    append(std::to_string(-b.value()) + (b.is_strict() ? " < " : " <= ") + names[j - 1]);
                } else if (j == 0) {
                    append(names[i - 1] + (b.is_strict() ? " < " : " <= ") + std::to_string(b.value()));
                } else {
                    append(names[i - 1] + " - " + names[j - 1] +
                           (b.is_strict() ? " < " : " <= ") + std::to_string(b.value()));
                }
            }
        }
        return out.empty() ? "true" : out;
    }

    // Largest absolute finite constant in the matrix (at least 1).
    std::int64_t input_constant() const {
        std::int64_t k = 1;
        if (empty_) return k;
        for (const Bound& b : m_) {
            if (b.is_infinite()) continue;
            std::int64_t v = b.value();
            k = std::max(k, v < 0 ? -v : v);
        }
        return k;
    }

private:
    friend class DbmBuilder;

    explicit Dbm(std::size_t dim) : dim_(dim), empty_(false), m_(dim * dim, Bound::infinity()) {
        for (std::size_t i = 0; i < dim_; ++i) {
            m_[i * dim_ + i] = Bound::zero_weak();
            m_[i] = Bound::zero_weak(); // row 0: clocks are non-negative
        }
    }

    static std::int64_t bound_constant(const Bound& b) {
        if (b.is_infinite()) return 1;
        std::int64_t v = b.value();
        return std::max<std::int64_t>(1, v < 0 ? -v : v);
    }

    void require_same_dim(const Dbm& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("dbm dimension mismatch");
    }

    void tighten(std::size_t i, std::size_t j, Bound b) {
        Bound& e = m_[i * dim_ + j];
        e = min(e, b);
    }

    // All-pairs shortest path closure; decides emptiness. input_k is the
    // largest constant among the operation's inputs: every resulting finite
    // entry must stay within 2 * input_k * dim, asserted at runtime.
    void close(std::int64_t input_k) {
        for (std::size_t k = 0; k < dim_; ++k) {
            for (std::size_t i = 0; i < dim_; ++i) {
                const Bound& ik = at(i, k);
                if (ik.is_infinite()) continue;
                for (std::size_t j = 0; j < dim_; ++j) {
                    Bound cand = add(ik, at(k, j));
                    Bound& e = m_[i * dim_ + j];
                    if (cand < e) e = cand;
                }
            }
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            if (at(i, i) < Bound::zero_weak()) {
                empty_ = true;
                return;
            }
        }
        std::int64_t limit = 2 * input_k * static_cast<std::int64_t>(dim_);
        for (const Bound& b : m_) {
            if (b.is_infinite()) continue;
            std::int64_t v = b.value();
            if (v > limit || v < -limit)
                throw std::logic_error("dbm constant escaped the input bound envelope");
        }
    }

    std::size_t dim_;
    bool empty_;
    std::vector<Bound> m_;
};

// Accumulates constraints, deferring canonicalization to finish().
class DbmBuilder {
public:
    explicit DbmBuilder(std::size_t dim) : d_(Dbm::universe(dim)) {}

    DbmBuilder& constrain(std::size_t i, std::size_t j, Bound b) {
        if (i >= d_.dim_ || j >= d_.dim_ || i == j)
            throw std::invalid_argument("constraint index out of range");
        d_.tighten(i, j, b);
        if (!b.is_infinite()) {
            std::int64_t v = b.value();
            k_ = std::max(k_, v < 0 ? -v : v);
        }
        return *this;
    }

    Dbm finish() {
        d_.close(k_);
        return std::move(d_);
    }

private:
    Dbm d_;
    std::int64_t k_ = 1;
};

} // namespace zonecheck
