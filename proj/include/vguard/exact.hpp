#pragma once
// Robust sign evaluation for planar predicates.
//
// Every predicate runs in three tiers: a plain double evaluation guarded by a
// static error bound (input points only), an outward-rounded interval
// evaluation, and finally exact rational arithmetic. The rational tier is
// only reached for (near-)degenerate configurations.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace vguard {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

// ---------------------------------------------------------------------------
// Interval arithmetic with one-ulp outward widening per operation. Round to
// nearest is off by at most half an ulp, so the widened result encloses the
// exact value.

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  explicit Interval(double v) : lo(v), hi(v) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  int sign() const {
    if (lo > 0.0) return 1;
    if (hi < 0.0) return -1;
    if (lo == 0.0 && hi == 0.0) return 0;
    return 2;  // undecided
  }
};

namespace detail {
constexpr double kInf = std::numeric_limits<double>::infinity();
inline double down(double v) { return std::nextafter(v, -kInf); }
inline double up(double v) { return std::nextafter(v, kInf); }
}  // namespace detail

inline Interval operator+(Interval a, Interval b) {
  return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}
inline Interval operator-(Interval a, Interval b) {
  return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}
inline Interval operator*(Interval a, Interval b) {
  if (a.lo == a.hi && b.lo == b.hi) {
    const double p = a.lo * b.lo;
    return {detail::down(p), detail::up(p)};
  }
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {detail::down(std::min({p1, p2, p3, p4})), detail::up(std::max({p1, p2, p3, p4}))};
}
inline Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) return {-detail::kInf, detail::kInf};
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return {detail::down(std::min({q1, q2, q3, q4})), detail::up(std::max({q1, q2, q3, q4}))};
}

// ---------------------------------------------------------------------------
// XPoint: a point whose exact coordinates are a rational function of input
// doubles. Plain points are inputs; Meet points are the intersection of
// line(p0,p1) with line(p2,p3); Lerp points are p0 + t (p1 - p0).

class XPoint {
 public:
  enum class Kind : std::uint8_t { Plain, Meet, Lerp };

  XPoint() = default;
  XPoint(Point p) : kind_(Kind::Plain), src_{p, {}, {}, {}}, approx_(p), ix_(p.x), iy_(p.y) {}

  static XPoint meet(Point a, Point b, Point c, Point d) {
    XPoint r;
    r.kind_ = Kind::Meet;
    r.src_[0] = a;
    r.src_[1] = b;
    r.src_[2] = c;
    r.src_[3] = d;
    const Point ab = b - a, cd = d - c;
    const double den = cross(ab, cd);
    const double t = cross(c - a, cd) / den;
    r.approx_ = a + t * ab;
    const Interval ax(a.x), ay(a.y);
    const Interval abx = Interval(b.x) - ax, aby = Interval(b.y) - ay;
    const Interval cdx = Interval(d.x) - Interval(c.x), cdy = Interval(d.y) - Interval(c.y);
    const Interval acx = Interval(c.x) - ax, acy = Interval(c.y) - ay;
    const Interval iden = abx * cdy - aby * cdx;
    const Interval it = (acx * cdy - acy * cdx) / iden;
    r.ix_ = ax + it * abx;
    r.iy_ = ay + it * aby;
    return r;
  }

  static XPoint lerp(Point a, Point b, double t) {
    XPoint r;
    r.kind_ = Kind::Lerp;
    r.src_[0] = a;
    r.src_[1] = b;
    r.t_ = t;
    r.approx_ = a + t * (b - a);
    const Interval it(t);
    r.ix_ = Interval(a.x) + it * (Interval(b.x) - Interval(a.x));
    r.iy_ = Interval(a.y) + it * (Interval(b.y) - Interval(a.y));
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_plain() const { return kind_ == Kind::Plain; }
  const Point& approx() const { return approx_; }
  const Interval& ix() const { return ix_; }
  const Interval& iy() const { return iy_; }

  void exact(Rational& x, Rational& y) const {
    switch (kind_) {
      case Kind::Plain:
        x = Rational(src_[0].x);
        y = Rational(src_[0].y);
        return;
      case Kind::Lerp: {
        const Rational ax(src_[0].x), ay(src_[0].y), t(t_);
        x = ax + t * (Rational(src_[1].x) - ax);
        y = ay + t * (Rational(src_[1].y) - ay);
        return;
      }
      case Kind::Meet: {
        const Rational ax(src_[0].x), ay(src_[0].y);
        const Rational abx = Rational(src_[1].x) - ax, aby = Rational(src_[1].y) - ay;
        const Rational cdx = Rational(src_[3].x) - Rational(src_[2].x);
        const Rational cdy = Rational(src_[3].y) - Rational(src_[2].y);
        const Rational acx = Rational(src_[2].x) - ax, acy = Rational(src_[2].y) - ay;
        const Rational t = (acx * cdy - acy * cdx) / (abx * cdy - aby * cdx);
        x = ax + t * abx;
        y = ay + t * aby;
        return;
      }
    }
  }

 private:
  Kind kind_ = Kind::Plain;
  Point src_[4]{};
  double t_ = 0.0;
  Point approx_{};
  Interval ix_{}, iy_{};
};

// ---------------------------------------------------------------------------
// Orientation predicates. Return +1 (counter-clockwise), -1 (clockwise) or 0.

inline int orient_sign(Point a, Point b, Point c) {
  constexpr double eps = std::numeric_limits<double>::epsilon() * 0.5;
  constexpr double bound = (3.0 + 16.0 * eps) * eps;
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::abs(detleft) + std::abs(detright);
  if (det > bound * detsum) return 1;
  if (-det > bound * detsum) return -1;
  if (detsum == 0.0) return 0;
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  return sign_of((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

inline int orient_sign(const XPoint& a, const XPoint& b, const XPoint& c) {
  if (a.is_plain() && b.is_plain() && c.is_plain())
    return orient_sign(a.approx(), b.approx(), c.approx());
  const Interval d = (b.ix() - a.ix()) * (c.iy() - a.iy()) - (b.iy() - a.iy()) * (c.ix() - a.ix());
  const int s = d.sign();
  if (s != 2) return s;
  Rational ax, ay, bx, by, cx, cy;
  a.exact(ax, ay);
  b.exact(bx, by);
  c.exact(cx, cy);
  return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

// Sign of a.x - b.x (resp. y).
inline int compare_x(const XPoint& a, const XPoint& b) {
  const int s = (a.ix() - b.ix()).sign();
  if (s != 2) return s;
  Rational ax, ay, bx, by;
  a.exact(ax, ay);
  b.exact(bx, by);
  return sign_of(Rational(ax - bx));
}

inline int compare_y(const XPoint& a, const XPoint& b) {
  const int s = (a.iy() - b.iy()).sign();
  if (s != 2) return s;
  Rational ax, ay, bx, by;
  a.exact(ax, ay);
  b.exact(bx, by);
  return sign_of(Rational(ay - by));
}

inline bool same_point(const XPoint& a, const XPoint& b) {
  return compare_x(a, b) == 0 && compare_y(a, b) == 0;
}

// True iff p lies strictly between a and b, given that a, b, p are collinear.
inline bool strictly_between(const XPoint& a, const XPoint& b, const XPoint& p) {
  int s1 = compare_x(a, p), s2 = compare_x(p, b);
  if (s1 == 0 && s2 == 0) {
    s1 = compare_y(a, p);
    s2 = compare_y(p, b);
  }
  return s1 != 0 && s1 == s2;
}

// True iff p lies on the closed segment ab, given that a, b, p are collinear.
inline bool within_closed(const XPoint& a, const XPoint& b, const XPoint& p) {
  int s1 = compare_x(a, p), s2 = compare_x(p, b);
  if (s1 == 0 && s2 == 0) {
    s1 = compare_y(a, p);
    s2 = compare_y(p, b);
  }
  return s1 * s2 >= 0;
}

}  // namespace vguard
