#include "netforge/plane.hpp"

#include <algorithm>
#include <sstream>

namespace netforge {

Triple normalize_triple(const Triple& t) {
    const Field& f = t[0].field();
    for (int i = 0; i < 3; ++i) {
        if (!t[i].is_zero()) {
            FieldElement s = t[i].inv();
            return {t[0] * s, t[1] * s, t[2] * s};
        }
    }
    throw Error("homogeneous triple must not be all zero");
}

uint64_t triple_key(const Triple& t) {
    return (t[0].code() << 40) | (t[1].code() << 20) | t[2].code();
}

namespace {
bool triple_less(const Triple& a, const Triple& b) { return triple_key(a) < triple_key(b); }
std::string triple_str(const Triple& t) {
    std::ostringstream os;
    os << "(" << t[0].to_string() << ":" << t[1].to_string() << ":" << t[2].to_string() << ")";
    return os.str();
}
} // namespace

bool ProjPoint::operator<(const ProjPoint& o) const { return triple_less(x, o.x); }
bool ProjLine::operator<(const ProjLine& o) const { return triple_less(coeffs, o.coeffs); }
std::string ProjPoint::to_string() const { return triple_str(x); }
std::string ProjLine::to_string() const { return triple_str(coeffs); }

bool incident(const ProjPoint& p, const ProjLine& l) {
    return (p.x[0] * l.coeffs[0] + p.x[1] * l.coeffs[1] + p.x[2] * l.coeffs[2]).is_zero();
}

namespace {
Triple cross(const Triple& a, const Triple& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
} // namespace

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw Error("line_through requires distinct points");
    Triple c = cross(p.x, q.x);
    return {normalize_triple(c)};
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw Error("meet requires distinct lines");
    Triple c = cross(l.coeffs, m.coeffs);
    return {normalize_triple(c)};
}

namespace {

// Coordinates (s, t) of c in the basis (a, b) of the rank-2 span, via a 2x2
// minor with nonzero determinant.
std::pair<FieldElement, FieldElement> span_coords(const Triple& a, const Triple& b,
                                                  const Triple& c) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            FieldElement det = a[i] * b[j] - a[j] * b[i];
            if (!det.is_zero()) {
                FieldElement s = (c[i] * b[j] - c[j] * b[i]) / det;
                FieldElement t = (a[i] * c[j] - a[j] * c[i]) / det;
                return {s, t};
            }
        }
    throw Error("basis triples are proportional");
}

FieldElement cross_ratio_in_span(const Triple& a, const Triple& b, const Triple& c,
                                 const Triple& d) {
    auto [ca, cb] = span_coords(a, b, c);
    auto [da, db] = span_coords(a, b, d);
    // c = ca*a + cb*b, d = da*a + db*b; pairwise distinctness keeps all four
    // coefficients nonzero, so the ratio is defined and never 0.
    return (cb * da) / (ca * db);
}

} // namespace

FieldElement cross_ratio_points(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                const ProjPoint& d) {
    const ProjPoint* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw Error("cross-ratio requires pairwise distinct points");
    ProjLine l = line_through(a, b);
    if (!incident(c, l) || !incident(d, l)) throw Error("cross-ratio requires collinear points");
    return cross_ratio_in_span(a.x, b.x, c.x, d.x);
}

FieldElement cross_ratio_lines(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3,
                               const ProjLine& l4) {
    const ProjLine* ls[4] = {&l1, &l2, &l3, &l4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*ls[i] == *ls[j]) throw Error("cross-ratio requires pairwise distinct lines");
    ProjPoint p = meet(l1, l2);
    if (!incident(p, l3) || !incident(p, l4)) throw Error("cross-ratio requires concurrent lines");
    return cross_ratio_in_span(l1.coeffs, l2.coeffs, l3.coeffs, l4.coeffs);
}

FieldElement cross_ratio_lines_transversal(const ProjLine& l1, const ProjLine& l2,
                                           const ProjLine& l3, const ProjLine& l4,
                                           const ProjLine& transversal) {
    ProjPoint p = meet(l1, l2);
    if (!incident(p, l3) || !incident(p, l4)) throw Error("cross-ratio requires concurrent lines");
    if (incident(p, transversal)) throw Error("transversal must avoid the common point");
    return cross_ratio_points(meet(l1, transversal), meet(l2, transversal), meet(l3, transversal),
                              meet(l4, transversal));
}

std::array<FieldElement, 6> six_orbit(const FieldElement& kappa) {
    const Field& f = kappa.field();
    FieldElement one = f.one();
    if (kappa.is_zero() || kappa == one) throw Error("cross-ratio orbit undefined for 0 and 1");
    return {kappa,
            kappa.inv(),
            one - kappa,
            (one - kappa).inv(),
            kappa / (kappa - one),
            one - kappa.inv()};
}

bool same_orbit(const FieldElement& kappa, const FieldElement& mu) {
    for (const auto& v : six_orbit(kappa))
        if (v == mu) return true;
    return false;
}

namespace {

using Matrix = Projectivity::Matrix;

FieldElement det3(const Matrix& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Matrix adjugate(const Matrix& m) {
    return {m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
            m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
            m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3]};
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c[3 * i + j] =
                a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j];
    return c;
}

Triple mat_apply(const Matrix& m, const Triple& v) {
    return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2], m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
            m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
}

} // namespace

Projectivity::Projectivity(const Matrix& m) : m_(m) {
    FieldElement d = det3(m);
    if (d.is_zero()) throw Error("projectivity matrix must be invertible");
    Matrix adj = adjugate(m);
    FieldElement dinv = d.inv();
    for (auto& e : adj) e = e * dinv;
    minv_ = adj;
}

ProjPoint Projectivity::apply(const ProjPoint& p) const {
    return {normalize_triple(mat_apply(m_, p.x))};
}

ProjLine Projectivity::apply(const ProjLine& l) const {
    // a -> M^{-T} a, i.e. row vector a M^{-1}
    const Triple& a = l.coeffs;
    Triple out = {a[0] * minv_[0] + a[1] * minv_[3] + a[2] * minv_[6],
                  a[0] * minv_[1] + a[1] * minv_[4] + a[2] * minv_[7],
                  a[0] * minv_[2] + a[1] * minv_[5] + a[2] * minv_[8]};
    return {normalize_triple(out)};
}

Projectivity Projectivity::inverse() const { return Projectivity(minv_, m_); }

Projectivity Projectivity::compose(const Projectivity& inner) const {
    return Projectivity(mat_mul(m_, inner.m_));
}

Projectivity frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                       const ProjPoint& p4) {
    Matrix cols = {p1.x[0], p2.x[0], p3.x[0], p1.x[1], p2.x[1], p3.x[1],
                   p1.x[2], p2.x[2], p3.x[2]};
    FieldElement d = det3(cols);
    if (d.is_zero()) throw Error("frame_map requires general position (first three collinear)");
    Matrix adj = adjugate(cols);
    FieldElement dinv = d.inv();
    Triple c = mat_apply(adj, p4.x);
    for (auto& e : c) e = e * dinv;
    if (c[0].is_zero() || c[1].is_zero() || c[2].is_zero())
        throw Error("frame_map requires general position");
    // columns c_i * p_i send the standard frame to (p1..p4); invert.
    Matrix to_pts = {c[0] * p1.x[0], c[1] * p2.x[0], c[2] * p3.x[0],
                     c[0] * p1.x[1], c[1] * p2.x[1], c[2] * p3.x[1],
                     c[0] * p1.x[2], c[1] * p2.x[2], c[2] * p3.x[2]};
    return Projectivity(to_pts).inverse();
}

std::vector<ProjPoint> enumerate_points(const Field& field) {
    std::vector<ProjPoint> out;
    uint64_t q = field.order();
    out.reserve(q * q + q + 1);
    FieldElement zero = field.zero(), one = field.one();
    out.push_back({Triple{zero, zero, one}});
    for (uint64_t z = 0; z < q; ++z) out.push_back({Triple{zero, one, field.element(z)}});
    for (uint64_t y = 0; y < q; ++y)
        for (uint64_t z = 0; z < q; ++z)
            out.push_back({Triple{one, field.element(y), field.element(z)}});
    return out;
}

std::vector<ProjLine> enumerate_lines(const Field& field) {
    std::vector<ProjLine> out;
    auto pts = enumerate_points(field);
    out.reserve(pts.size());
    for (auto& p : pts) out.push_back({p.x});
    return out;
}

PlaneIndex::PlaneIndex(FieldPtr field)
    : field_(std::move(field)), points_(enumerate_points(*field_)),
      lines_(enumerate_lines(*field_)) {
    point_ids_.reserve(points_.size() * 2);
    line_ids_.reserve(lines_.size() * 2);
    for (uint32_t i = 0; i < points_.size(); ++i) point_ids_[triple_key(points_[i].x)] = i;
    for (uint32_t i = 0; i < lines_.size(); ++i) line_ids_[triple_key(lines_[i].coeffs)] = i;

    const Field& f = *field_;
    points_on_.resize(lines_.size());
    lines_through_.resize(points_.size());
    FieldElement zero = f.zero(), one = f.one();
    for (uint32_t li = 0; li < lines_.size(); ++li) {
        const Triple& a = lines_[li].coeffs;
        // two independent solutions of a.x = 0
        Triple u, v;
        if (!a[0].is_zero()) {
            u = {-(a[1] / a[0]), one, zero};
            v = {-(a[2] / a[0]), zero, one};
        } else if (!a[1].is_zero()) {
            u = {one, zero, zero};
            v = {zero, -(a[2] / a[1]), one};
        } else {
            u = {one, zero, zero};
            v = {zero, one, zero};
        }
        auto& on = points_on_[li];
        on.reserve(f.order() + 1);
        on.push_back(point_id({normalize_triple(v)}));
        for (uint64_t t = 0; t < f.order(); ++t) {
            FieldElement te = f.element(t);
            Triple w = {u[0] + te * v[0], u[1] + te * v[1], u[2] + te * v[2]};
            on.push_back(point_id({normalize_triple(w)}));
        }
        std::sort(on.begin(), on.end());
        for (uint32_t pi : on) lines_through_[pi].push_back(li);
    }
}

uint32_t PlaneIndex::point_id(const ProjPoint& p) const {
    auto it = point_ids_.find(triple_key(p.x));
    if (it == point_ids_.end()) throw Error("point not from this plane");
    return it->second;
}

uint32_t PlaneIndex::line_id(const ProjLine& l) const {
    auto it = line_ids_.find(triple_key(l.coeffs));
    if (it == line_ids_.end()) throw Error("line not from this plane");
    return it->second;
}

} // namespace netforge
