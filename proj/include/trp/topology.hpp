#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "trp/form.hpp"
#include "trp/point.hpp"
#include "trp/realroots.hpp"

namespace trp {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kMaxChartRetries = 16;

struct SmoothnessVerdict {
    bool smooth = true;
    /// A singular point, when one with rational coordinates was found.
    std::optional<ProjectivePoint> singular_point;
};

/// Decides smoothness of V(F) over the complex numbers.
SmoothnessVerdict check_smooth(const TernaryForm& f, std::uint64_t seed = kDefaultSeed);

enum class ComponentKind { oval, pseudo_line };

struct Component {
    ComponentKind kind = ComponentKind::oval;
    /// Interior point for an oval; a point next to the curve for the pseudo-line.
    ProjectivePoint witness;
    /// Rational points close to the component, in traversal order (rendering only).
    std::vector<ProjectivePoint> trace;
};

/// A branch segment: branch `branch` (counted from below) over slice `slice` of the sweep.
struct Segment {
    int slice = 0;
    int branch = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// One step of a component's traversal: a segment and the x-direction (+1 or -1) in which
/// the traversal runs through it.
struct Step {
    Segment segment;
    int dir = 1;
};

/// The cylindrical decomposition of a smooth curve in a working chart.  Chart coordinates
/// (x, y) map to the original point chart(x, y, 1).
class Sweep {
public:
    /// Throws GenericPositionError when the chart is not generic for the curve.
    Sweep(const TernaryForm& curve, const ProjectiveMap& chart);

    const TernaryForm& curve() const { return curve_; }
    const ProjectiveMap& chart() const { return chart_; }
    /// curve o chart, at z = 1.
    const BiPoly& local() const { return local_; }

    int slice_count() const { return static_cast<int>(samples_.size()); }
    const Rational& sample(int slice) const { return samples_[static_cast<size_t>(slice)]; }
    int branch_count(int slice) const { return static_cast<int>(branches_[static_cast<size_t>(slice)].size()); }
    /// Isolating interval of the y-coordinate of a branch over the slice sample.
    const IsolatingInterval& branch_root(int slice, int branch) const {
        return branches_[static_cast<size_t>(slice)][static_cast<size_t>(branch)];
    }
    const std::vector<IsolatingInterval>& critical() const { return critical_; }

    int component_count() const { return static_cast<int>(cycles_.size()); }
    const std::vector<Step>& cycle(int component) const { return cycles_[static_cast<size_t>(component)]; }
    int component_of(const Segment& s) const;
    /// Traversal direction of the segment within its component's cycle.
    int direction_of(const Segment& s) const;
    /// True when the component crosses the chart's line at infinity.
    bool crosses_infinity(int component) const { return crosses_infinity_[static_cast<size_t>(component)]; }
    /// Component-level ordering: pseudo-line first, then ovals by discovery.
    int ordered_index(int sweep_component) const { return order_[static_cast<size_t>(sweep_component)]; }

    /// Segment carrying a real point of the curve.  The point must lie on the curve and off the
    /// chart's line at infinity; throws GenericPositionError otherwise.
    Segment locate(AlgebraicPoint p) const;

    /// Chart-affine coordinates of p as polynomials (numerators and a shared denominator).
    std::array<UniPoly, 3> to_chart(const std::array<UniPoly, 3>& coords) const;

private:
    void certify_folds();
    void assemble();
    std::pair<Segment, bool> right_neighbor(const Segment& s) const;
    std::pair<Segment, bool> left_neighbor(const Segment& s) const;

    TernaryForm curve_;
    ProjectiveMap chart_;
    BiPoly local_;
    std::vector<IsolatingInterval> critical_;
    UniPoly s10_, s11_;
    std::vector<Rational> samples_;
    std::vector<std::vector<IsolatingInterval>> branches_;
    std::vector<int> fold_index_;
    std::vector<bool> fold_opens_right_;
    std::vector<std::vector<Step>> cycles_;
    std::vector<std::vector<int>> component_;
    std::vector<std::vector<int>> direction_;
    std::vector<bool> crosses_infinity_;
    std::vector<int> order_;
};

struct CurveTopology {
    int degree = 0;
    int genus = 0;
    std::vector<Component> components;
    /// Per component: index of the immediately surrounding oval, or -1.
    std::vector<int> parent;
    std::shared_ptr<const Sweep> sweep;

    int count() const { return static_cast<int>(components.size()); }
    int oval_count() const;
    /// Index of the pseudo-line, or -1.
    int pseudo_line() const;
    bool has_nesting() const;
    /// Component containing a real point of the curve.
    int component_of(const AlgebraicPoint& p) const;
    /// Sweep component of a topology component and back.
    int sweep_index(int component) const;
};

/// Throws SingularCurveError on singular input and GenericPositionError when no chart works.
CurveTopology compute_topology(const TernaryForm& f, std::uint64_t seed = kDefaultSeed);

/// Rational points strictly inside an oval and outside every oval nested in it, the topology
/// witness first.  At most `limit` points.
std::vector<ProjectivePoint> interior_points(const CurveTopology& t, int oval, int limit);
/// The topology witness of an oval.
ProjectivePoint interior_witness(const CurveTopology& t, int oval);

struct MLabel {
    int i = 0;
};
/// i = g + 1 - l.  Throws DomainError("Harnack violation") when l > g + 1.
MLabel classify_m_label(const CurveTopology& t);

}  // namespace trp
