#include "incidence/geometry.hpp"

#include "incidence/errors.hpp"

#include <boost/functional/hash.hpp>

namespace incidence {
namespace {

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
    return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

std::strong_ordering compare(const Integer& lhs, const Integer& rhs) {
    const int c = lhs.compare(rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare3(const Integer& a0, const Integer& b0, const Integer& c0,
                              const Integer& a1, const Integer& b1, const Integer& c1) {
    if (auto c = compare(a0, a1); c != 0) return c;
    if (auto c = compare(b0, b1); c != 0) return c;
    return compare(c0, c1);
}

}  // namespace

Point Point::homogeneous(Integer x, Integer y, Integer w) {
    if (w.is_zero()) throw MalformedInput("homogeneous point with w = 0");
    if (w.sign() < 0) {
        x = -x;
        y = -y;
        w = -w;
    }
    const Integer g = gcd3(x, y, w);
    if (g != 1) {
        x /= g;
        y /= g;
        w /= g;
    }
    return Point(std::move(x), std::move(y), std::move(w));
}

std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
    return compare3(lhs.x_, lhs.y_, lhs.w_, rhs.x_, rhs.y_, rhs.w_);
}

Line Line::from_coefficients(Integer a, Integer b, Integer c) {
    if (a.is_zero() && b.is_zero()) throw MalformedInput("line with a = b = 0");
    const Integer g = gcd3(a, b, c);
    if (g != 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    // c can only lead when a == b == 0, which is excluded above.
    const int lead = a.is_zero() ? b.sign() : a.sign();
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    return Line(std::move(a), std::move(b), std::move(c));
}

std::strong_ordering operator<=>(const Line& lhs, const Line& rhs) {
    return compare3(lhs.a_, lhs.b_, lhs.c_, rhs.a_, rhs.b_, rhs.c_);
}

Point point_from_rational(const Rational& px, const Rational& py) {
    const Integer xn = boost::multiprecision::numerator(px);
    const Integer xd = boost::multiprecision::denominator(px);
    const Integer yn = boost::multiprecision::numerator(py);
    const Integer yd = boost::multiprecision::denominator(py);
    // (xn/xd, yn/yd) = (xn*yd : yn*xd : xd*yd)
    return Point::homogeneous(xn * yd, yn * xd, xd * yd);
}

Point point_from_fractions(const Integer& x_num, const Integer& x_den, const Integer& y_num,
                           const Integer& y_den) {
    if (x_den.is_zero() || y_den.is_zero()) throw MalformedInput("zero denominator");
    return Point::homogeneous(x_num * y_den, y_num * x_den, x_den * y_den);
}

Line line_through(const Point& p, const Point& q) {
    if (p == q) throw DegeneratePair("line_through: points coincide");
    // Cross product of the homogeneous triples.
    Integer a = p.y() * q.w() - p.w() * q.y();
    Integer b = p.w() * q.x() - p.x() * q.w();
    Integer c = p.x() * q.y() - p.y() * q.x();
    return Line::from_coefficients(std::move(a), std::move(b), std::move(c));
}

bool incident(const Line& l, const Point& p) {
    return (l.a() * p.x() + l.b() * p.y() + l.c() * p.w()).is_zero();
}

bool collinear(const Point& p, const Point& q, const Point& r) {
    const Integer det = p.x() * (q.y() * r.w() - q.w() * r.y())
                        - p.y() * (q.x() * r.w() - q.w() * r.x())
                        + p.w() * (q.x() * r.y() - q.y() * r.x());
    return det.is_zero();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x() << " : " << p.y() << " : " << p.w() << ')';
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
    return os << '[' << l.a() << ", " << l.b() << ", " << l.c() << ']';
}

}  // namespace incidence

std::size_t std::hash<incidence::Point>::operator()(const incidence::Point& p) const noexcept {
    std::size_t seed = 0;
    boost::hash_combine(seed, boost::multiprecision::hash_value(p.x()));
    boost::hash_combine(seed, boost::multiprecision::hash_value(p.y()));
    boost::hash_combine(seed, boost::multiprecision::hash_value(p.w()));
    return seed;
}

std::size_t std::hash<incidence::Line>::operator()(const incidence::Line& l) const noexcept {
    std::size_t seed = 0;
    boost::hash_combine(seed, boost::multiprecision::hash_value(l.a()));
    boost::hash_combine(seed, boost::multiprecision::hash_value(l.b()));
    boost::hash_combine(seed, boost::multiprecision::hash_value(l.c()));
    return seed;
}
