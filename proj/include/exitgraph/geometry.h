#pragma once

#include "exitgraph/error.h"
#include "exitgraph/rational.h"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace exitgraph {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation : std::int8_t { Clockwise = -1, Collinear = 0, Counterclockwise = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);

constexpr Orientation reversed(Orientation o) { return static_cast<Orientation>(-static_cast<int>(o)); }

/// First duplicate pair, or first collinear triple, in lexicographic label
/// order.
struct GeneralPositionViolation {
    ErrorKind kind;  // DuplicatePoint or CollinearTriple
    std::vector<Label> labels;
};

class PointSet;
struct ShearResult;

ShearResult shear_to_generic(const PointSet& s);
std::variant<PointSet, GeneralPositionViolation> certify_general_position(std::vector<Point> points);

/// A labeled point set with all points distinct and no three collinear.
/// Labels are the indices 0..n-1.
class PointSet {
public:
    /// Throws Error(DuplicatePoint | CollinearTriple) when not in general position.
    static PointSet certify(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    const Point& operator[](Label i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}

    friend std::variant<PointSet, GeneralPositionViolation> certify_general_position(std::vector<Point>);
    friend ShearResult shear_to_generic(const PointSet&);

    std::vector<Point> points_;
};

/// Extremal labels in counterclockwise order, starting from the
/// lexicographically smallest point. Throws TooFewPoints for n < 3.
std::vector<Label> convex_hull(const PointSet& s);

/// True iff a and b lie strictly on opposite sides of the line through p and q.
/// Throws DegenerateLine if p == q and OnLine if a or b is on that line.
bool line_separates(const Point& p, const Point& q, const Point& a, const Point& b);

struct ShearResult {
    PointSet points;
    Rational lambda;
};

/// Applies (x, y) -> (x + lambda*y, y) for the first lambda in
/// 0, 1, -1, 1/2, -1/2, 1/3, ... that makes all x-coordinates distinct.
ShearResult shear_to_generic(const PointSet& s);

/// True iff the open segments ab and cd cross. Throws SharedEndpoint when the
/// segments share an endpoint.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Orientation queries on one point set, evaluated on integer-scaled
/// coordinates in machine words when they fit.
class ScaledOrientation {
public:
    explicit ScaledOrientation(const PointSet& s);
    Orientation operator()(Label a, Label b, Label c) const;

private:
    std::size_t n_;
    bool small_;
    std::vector<std::int64_t> word_;  // x's then y's
    std::vector<mpz_class> big_;
};

/// Precomputed orientations of all labeled triples, for the O(n^3)-and-up
/// oracles that query them repeatedly.
class OrientationTable {
public:
    explicit OrientationTable(const PointSet& s);

    std::size_t size() const { return n_; }
    int operator()(Label a, Label b, Label c) const {
        return table_[(a * n_ + b) * n_ + c];
    }

private:
    std::size_t n_;
    std::vector<std::int8_t> table_;
};

}  // namespace exitgraph
