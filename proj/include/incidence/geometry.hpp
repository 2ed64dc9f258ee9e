#pragma once

// Exact planar primitives: homogeneous integer points, canonical lines and
// the incidence / collinearity predicates. Nothing here touches floating
// point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>

namespace incidence {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// A point of the affine plane stored as a homogeneous triple (x : y : w).
///
/// Always canonical: w > 0 and gcd(x, y, w) = 1, so two Points compare equal
/// exactly when they denote the same affine position.
class Point {
public:
    /// The origin.
    Point() : x_(0), y_(0), w_(1) {}

    /// Canonicalizes (x : y : w). Throws MalformedInput when w == 0.
    static Point homogeneous(Integer x, Integer y, Integer w);

    static Point integer(Integer x, Integer y) { return homogeneous(std::move(x), std::move(y), 1); }

    const Integer& x() const noexcept { return x_; }
    const Integer& y() const noexcept { return y_; }
    const Integer& w() const noexcept { return w_; }

    Rational affine_x() const { return Rational(x_, w_); }
    Rational affine_y() const { return Rational(y_, w_); }

    // Lexicographic on (x, y, w); only used for ordering, not geometry.
    friend std::strong_ordering operator<=>(const Point& lhs, const Point& rhs);
    friend bool operator==(const Point& lhs, const Point& rhs) = default;

private:
    Point(Integer x, Integer y, Integer w) : x_(std::move(x)), y_(std::move(y)), w_(std::move(w)) {}

    Integer x_;
    Integer y_;
    Integer w_;
};

/// The locus a*x + b*y + c*w = 0, stored canonically: gcd(a, b, c) = 1 and
/// the first nonzero coefficient positive. Equal values are the same line.
class Line {
public:
    /// Canonicalizes (a, b, c). Throws MalformedInput when a == b == 0.
    static Line from_coefficients(Integer a, Integer b, Integer c);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }

    friend std::strong_ordering operator<=>(const Line& lhs, const Line& rhs);
    friend bool operator==(const Line& lhs, const Line& rhs) = default;

private:
    Line(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    Integer a_;
    Integer b_;
    Integer c_;
};

/// Point at affine position (px, py).
Point point_from_rational(const Rational& px, const Rational& py);

/// Point at (x_num/x_den, y_num/y_den). Throws MalformedInput on a zero
/// denominator.
Point point_from_fractions(const Integer& x_num, const Integer& x_den, const Integer& y_num,
                           const Integer& y_den);

/// The unique line through two distinct points. Symmetric in its
/// arguments. Throws DegeneratePair when p == q.
Line line_through(const Point& p, const Point& q);

bool incident(const Line& l, const Point& p);

/// True iff the homogeneous 3x3 determinant of (p, q, r) vanishes.
/// Repeated points count as collinear.
bool collinear(const Point& p, const Point& q, const Point& r);

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Line& l);

}  // namespace incidence

template <>
struct std::hash<incidence::Point> {
    std::size_t operator()(const incidence::Point& p) const noexcept;
};

template <>
struct std::hash<incidence::Line> {
    std::size_t operator()(const incidence::Line& l) const noexcept;
};
