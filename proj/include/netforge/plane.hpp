#pragma once

#include "netforge/field.hpp"

#include <array>
#include <unordered_map>
#include <vector>

namespace netforge {

using Triple = std::array<FieldElement, 3>;

/// Canonicalize a homogeneous triple: scale so the first nonzero entry is 1.
Triple normalize_triple(const Triple& t);

/// Point of PG(2, F_q) in canonically normalized homogeneous coordinates.
struct ProjPoint {
    Triple x;

    static ProjPoint make(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        return {normalize_triple({a, b, c})};
    }
    bool operator==(const ProjPoint& o) const { return x == o.x; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;
    std::string to_string() const;
};

/// Line a*x1 + b*x2 + c*x3 = 0, same normalization as points (duality).
struct ProjLine {
    Triple coeffs;

    static ProjLine make(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        return {normalize_triple({a, b, c})};
    }
    bool operator==(const ProjLine& o) const { return coeffs == o.coeffs; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    bool operator<(const ProjLine& o) const;
    std::string to_string() const;
};

bool incident(const ProjPoint& p, const ProjLine& l);

/// Unique line through two distinct points (cross product of the triples).
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// Unique common point of two distinct lines.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// Cross-ratio of four pairwise distinct collinear points: writing
/// C = aA + bB and D = cA + dB, returns (b*c)/(a*d). With A=(1,0,0),
/// B=(0,1,0), C=(1,1,0) this sends D=(k,1,0) to k. Result is never 0 or 1.
FieldElement cross_ratio_points(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                const ProjPoint& d);

/// Cross-ratio of four pairwise distinct concurrent lines, computed on the
/// dual points (coefficient triples read as points of the dual plane).
FieldElement cross_ratio_lines(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3,
                               const ProjLine& l4);

/// Same quantity via the trace points on an auxiliary transversal, which must
/// avoid the common point. Agrees with cross_ratio_lines for every admissible
/// transversal.
FieldElement cross_ratio_lines_transversal(const ProjLine& l1, const ProjLine& l2,
                                           const ProjLine& l3, const ProjLine& l4,
                                           const ProjLine& transversal);

/// The six values the cross-ratio takes under argument permutations, in the
/// fixed order {k, 1/k, 1-k, 1/(1-k), k/(k-1), 1-1/k}.
std::array<FieldElement, 6> six_orbit(const FieldElement& kappa);

/// True iff kappa and mu generate the same six-orbit.
bool same_orbit(const FieldElement& kappa, const FieldElement& mu);

/// Invertible 3x3 matrix acting on points by x -> Mx and on lines by
/// a -> M^{-T} a.
class Projectivity {
  public:
    using Matrix = std::array<FieldElement, 9>; // row-major

    explicit Projectivity(const Matrix& m);

    ProjPoint apply(const ProjPoint& p) const;
    ProjLine apply(const ProjLine& l) const;
    Projectivity inverse() const;
    Projectivity compose(const Projectivity& inner) const; // this after inner
    const Matrix& matrix() const { return m_; }

  private:
    Projectivity(Matrix m, Matrix minv) : m_(std::move(m)), minv_(std::move(minv)) {}
    Matrix m_;
    Matrix minv_;
};

/// Unique projectivity sending four points in general position to the
/// standard frame (1,0,0), (0,1,0), (0,0,1), (1,1,1).
Projectivity frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                       const ProjPoint& p4);

/// All q^2+q+1 points in ascending lexicographic order of the normalized
/// coordinate triples (element codes compared entrywise).
std::vector<ProjPoint> enumerate_points(const Field& field);
std::vector<ProjLine> enumerate_lines(const Field& field);

/// Precomputed incidence tables for one plane; build once, share read-only.
class PlaneIndex {
  public:
    explicit PlaneIndex(FieldPtr field);

    const Field& field() const { return *field_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    const std::vector<ProjLine>& lines() const { return lines_; }

    uint32_t point_id(const ProjPoint& p) const;
    uint32_t line_id(const ProjLine& l) const;
    const std::vector<uint32_t>& lines_through(uint32_t point_id) const {
        return lines_through_[point_id];
    }
    const std::vector<uint32_t>& points_on(uint32_t line_id) const { return points_on_[line_id]; }

  private:
    FieldPtr field_;
    std::vector<ProjPoint> points_;
    std::vector<ProjLine> lines_;
    std::unordered_map<uint64_t, uint32_t> point_ids_;
    std::unordered_map<uint64_t, uint32_t> line_ids_;
    std::vector<std::vector<uint32_t>> lines_through_;
    std::vector<std::vector<uint32_t>> points_on_;
};

uint64_t triple_key(const Triple& t);

} // namespace netforge

template <> struct std::hash<netforge::ProjPoint> {
    size_t operator()(const netforge::ProjPoint& p) const noexcept {
        return std::hash<uint64_t>()(netforge::triple_key(p.x) * 0x9e3779b97f4a7c15ULL);
    }
};
template <> struct std::hash<netforge::ProjLine> {
    size_t operator()(const netforge::ProjLine& l) const noexcept {
        return std::hash<uint64_t>()(netforge::triple_key(l.coeffs) * 0xc2b2ae3d27d4eb4fULL);
    }
};
