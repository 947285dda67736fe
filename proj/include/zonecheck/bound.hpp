// Difference bounds: a value together with a strict/non-strict operator,
// packed into one integer so that min and + implement zone intersection
// and constraint composition directly.
//
// Encoding: raw = 2*value + (1 if "<=" else 0); infinity is a large sentinel.
// This makes the natural order (d,<) < (d,<=) < (d+1,<) coincide with the
// integer order on raw.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "zonecheck/rational.hpp"

namespace zonecheck {

class Bound {
public:
    Bound() : raw_(kInfRaw) {}

    static Bound strict(std::int64_t value) { return Bound(2 * value); }
    static Bound weak(std::int64_t value) { return Bound(2 * value + 1); }
    static Bound infinity() { return Bound(kInfRaw); }
    static Bound zero_weak() { return weak(0); }

    bool is_infinite() const { return raw_ >= kInfRaw; }
    bool is_strict() const { return !is_infinite() && (raw_ & 1) == 0; }

    std::int64_t value() const {
        if (is_infinite()) throw std::logic_error("value() on infinite bound");
        // arithmetic shift keeps negative values correct
        return raw_ >> 1;
    }

    std::int64_t raw() const { return raw_; }

    // (d1,~1) + (d2,~2) = (d1+d2, strict if either side is strict)
    friend Bound add(const Bound& a, const Bound& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Bound(a.raw_ + b.raw_ - ((a.raw_ | b.raw_) & 1));
    }

    // Facet complement: not (xi - xj ~ d)  <=>  xj - xi ~' -d with flipped strictness.
    Bound negated_facet() const {
        if (is_infinite()) throw std::logic_error("negating infinite bound");
        return Bound(1 - raw_);
    }

    // True iff a rational difference satisfies this bound.
    bool satisfied_by(const Rational& diff) const {
        if (is_infinite()) return true;
        Rational v(value());
        return is_strict() ? diff < v : diff <= v;
    }

    friend bool operator==(const Bound& a, const Bound& b) {
        return a.raw_ == b.raw_ || (a.is_infinite() && b.is_infinite());
    }
    friend bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }
    friend bool operator<(const Bound& a, const Bound& b) { return a.raw_ < b.raw_; }
    friend bool operator<=(const Bound& a, const Bound& b) { return a.raw_ <= b.raw_; }

    friend const Bound& min(const Bound& a, const Bound& b) { return a < b ? a : b; }

    std::string to_string() const {
        if (is_infinite()) return "inf";
        return std::string(is_strict() ? "<" : "<=") + " " + std::to_string(value());
    }

private:
    explicit Bound(std::int64_t raw) : raw_(raw) {}

    static constexpr std::int64_t kInfRaw = std::int64_t(1) << 60;

    std::int64_t raw_;
};

} // namespace zonecheck
