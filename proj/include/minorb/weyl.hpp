#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"
#include "minorb/root_system.hpp"

namespace minorb {

/// r_axis(x) = x - (2 (x, axis) / (axis, axis)) axis, exact.
/// The axis must be a root of rs.
inline RatVec reflect(const RootSystem& rs, const Root& axis, const RatVec& x) {
    if (!rs.is_root(axis.coords)) {
        throw std::invalid_argument("reflect: axis is not a root of this system");
    }
    const RatVec a = to_rational(axis.coords);
    const Rational c = Rational(-2) * rs.form.inner(x, a) / rs.form.inner(a, a);
    RatVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + c * a[i];
    return out;
}

/// Reflection image of a root; roots map to roots, so the result is integral.
inline IntVec reflect_root(const RootSystem& rs, const Root& axis, const Root& x) {
    const RatVec img = reflect(rs, axis, to_rational(x.coords));
    IntVec out(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (!img[i].is_integer()) {
            throw std::logic_error("reflection of a root produced non-integer coordinates");
        }
        out[i] = img[i].num();
    }
    return out;
}

/// A single reflection r_axis with its action on the root set precomputed.
/// Root images come from the cache; general vectors go through the formula.
class Reflection {
public:
    Reflection(const RootSystem& rs, Root axis) : rs_(&rs), axis_(std::move(axis)) {
        if (!rs.is_root(axis_.coords)) {
            throw std::invalid_argument("Reflection: axis is not a root of this system");
        }
        for (const IntVec& v : rs.root_set()) {
            cache_.emplace(v, reflect_root(rs, axis_, make_root(v)));
        }
    }

    [[nodiscard]] const Root& axis() const { return axis_; }

    [[nodiscard]] RatVec apply(const RatVec& x) const { return reflect(*rs_, axis_, x); }

    [[nodiscard]] const IntVec& apply(const Root& r) const {
        const auto it = cache_.find(r.coords);
        if (it == cache_.end()) {
            throw std::invalid_argument("Reflection: argument is not a root of this system");
        }
        return it->second;
    }

private:
    const RootSystem* rs_;
    Root axis_;
    std::map<IntVec, IntVec> cache_;
};

/// The three-way split of the positive roots under r_theta:
///   image == -theta      -> theta_part   (theta itself)
///   image == alpha-theta -> special_part (a negative root other than -theta)
///   image == alpha       -> orthogonal_part
struct PositivePartition {
    std::vector<Root> theta_part;
    std::vector<Root> special_part;
    std::vector<Root> orthogonal_part;
};

inline PositivePartition classify_positives(const RootSystem& rs) {
    PositivePartition parts;
    const Reflection r_theta(rs, rs.theta);
    const IntVec minus_theta = negate(rs.theta.coords);
    for (const auto& alpha : rs.positives) {
        const IntVec& image = r_theta.apply(alpha);
        if (image == minus_theta) {
            parts.theta_part.push_back(alpha);
        } else if (image == alpha.coords) {
            parts.orthogonal_part.push_back(alpha);
        } else if (image == sub(alpha.coords, rs.theta.coords) && rs.is_root(image) &&
                   rs.is_positive_root(negate(image))) {
            parts.special_part.push_back(alpha);
        } else {
            std::string coords;
            for (auto c : alpha.coords) coords += (coords.empty() ? "" : " ") + std::to_string(c);
            throw std::logic_error("r_theta image of root [" + coords +
                                   "] matches no partition case; root system data is corrupt");
        }
    }
    return parts;
}

/// Coxeter length of the reflection in axis, computed as the inversion
/// count #{beta in positives : r_axis(beta) negative}. Requires a positive
/// axis root.
inline int reflection_length(const RootSystem& rs, const Root& axis) {
    if (!rs.is_positive_root(axis.coords)) {
        throw std::invalid_argument("reflection_length: axis is not a positive root");
    }
    const Reflection r(rs, axis);
    int inversions = 0;
    for (const auto& beta : rs.positives) {
        const IntVec& image = r.apply(beta);
        bool nonpositive = true;
        for (auto c : image) {
            if (c > 0) {
                nonpositive = false;
                break;
            }
        }
        if (nonpositive) ++inversions;
    }
    return inversions;
}

}  // namespace minorb
