// Port of the H3 reference algorithms (Copyright Uber Technologies, Inc.,
// Apache License 2.0): icosahedral gnomonic projection, aperture-7 IJK
// hierarchy, neighbor traversal and local IJK unfolding.

#include "habit/h3/h3.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

#include "h3_internal.hpp"

namespace habit::h3 {

using namespace detail;

namespace {

constexpr double kEpsilon = 0.0000000000000001;
constexpr double kTwoPi = 6.28318530717958647692528676655900576839433;
constexpr double kPi180 = 0.0174532925199432957692369076848861271111;
constexpr double k180Pi = 57.29577951308232087679815481410517033240547;
constexpr double kSqrt3_2 = 0.8660254037844386467637231707529361834714;
constexpr double kRsin60 = 1.1547005383792515290182975610039149112953;
constexpr double kOneThird = 0.333333333333333333333333333333333333333;
constexpr double kOneSeventh = 0.14285714285714285714285714285714285;
constexpr double kAp7RotRads = 0.333473172251832115336090755351601070065900389;
constexpr double kRes0UGnomonic = 0.38196601125010500003;
constexpr double kInvRes0UGnomonic = 2.61803398874989588842;
constexpr double kSqrt7 = 2.6457513110645905905016157536392604257102;
constexpr double kRsqrt7 = 0.37796447300922722721451653623418006081576;

constexpr int kNumHexVerts = 6;
constexpr int kNumPentVerts = 5;

constexpr int kModeOffset = 59;
constexpr int kBcOffset = 45;
constexpr int kResOffset = 52;
constexpr int kPerDigitOffset = 3;
constexpr std::uint64_t kModeMask = std::uint64_t{15} << kModeOffset;
constexpr std::uint64_t kBcMask = std::uint64_t{127} << kBcOffset;
constexpr std::uint64_t kResMask = std::uint64_t{15} << kResOffset;
constexpr std::uint64_t kDigitMask = 7;
constexpr std::uint64_t kInit = 35184372088831ULL;
constexpr int kCellMode = 1;

enum class Overage { None, FaceEdge, NewFace };

// Index bit fields.

int get_res(Cell h) { return static_cast<int>((h & kResMask) >> kResOffset); }
int get_bc(Cell h) { return static_cast<int>((h & kBcMask) >> kBcOffset); }

void set_mode(Cell& h, int v) {
    h = (h & ~kModeMask) | (static_cast<std::uint64_t>(v) << kModeOffset);
}
void set_res(Cell& h, int v) {
    h = (h & ~kResMask) | (static_cast<std::uint64_t>(v) << kResOffset);
}
void set_bc(Cell& h, int v) {
    h = (h & ~kBcMask) | (static_cast<std::uint64_t>(v) << kBcOffset);
}

Digit get_digit(Cell h, int r) {
    return static_cast<Digit>((h >> ((kMaxResolution - r) * kPerDigitOffset)) &
                              kDigitMask);
}

void set_digit(Cell& h, int r, int digit) {
    const int shift = (kMaxResolution - r) * kPerDigitOffset;
    h = (h & ~(kDigitMask << shift)) |
        (static_cast<std::uint64_t>(digit) << shift);
}

bool is_class_iii(int r) { return r % 2 == 1; }

// CoordIJK arithmetic.

const CoordIJK kUnitVecs[] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                              {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};

bool ijk_matches(const CoordIJK& a, const CoordIJK& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
}

CoordIJK ijk_add(const CoordIJK& a, const CoordIJK& b) {
    return {a.i + b.i, a.j + b.j, a.k + b.k};
}

CoordIJK ijk_sub(const CoordIJK& a, const CoordIJK& b) {
    return {a.i - b.i, a.j - b.j, a.k - b.k};
}

void ijk_scale(CoordIJK& c, int f) {
    c.i *= f;
    c.j *= f;
    c.k *= f;
}

void ijk_normalize(CoordIJK& c) {
    if (c.i < 0) {
        c.j -= c.i;
        c.k -= c.i;
        c.i = 0;
    }
    if (c.j < 0) {
        c.i -= c.j;
        c.k -= c.j;
        c.j = 0;
    }
    if (c.k < 0) {
        c.i -= c.k;
        c.j -= c.k;
        c.k = 0;
    }
    int min = c.i;
    if (c.j < min) min = c.j;
    if (c.k < min) min = c.k;
    if (min > 0) {
        c.i -= min;
        c.j -= min;
        c.k -= min;
    }
}

Vec2d ijk_to_hex2d(const CoordIJK& h) {
    const int i = h.i - h.k;
    const int j = h.j - h.k;
    return {i - 0.5 * j, j * kSqrt3_2};
}

CoordIJK hex2d_to_ijk(const Vec2d& v) {
    CoordIJK h{0, 0, 0};
    const double a1 = std::fabs(v.x);
    const double a2 = std::fabs(v.y);

    const double x2 = a2 * kRsin60;
    const double x1 = a1 + x2 / 2.0;

    const int m1 = static_cast<int>(x1);
    const int m2 = static_cast<int>(x2);

    const double r1 = x1 - m1;
    const double r2 = x2 - m2;

    if (r1 < 0.5) {
        if (r1 < 1.0 / 3.0) {
            if (r2 < (1.0 + r1) / 2.0) {
                h.i = m1;
                h.j = m2;
            } else {
                h.i = m1;
                h.j = m2 + 1;
            }
        } else {
            h.j = (r2 < (1.0 - r1)) ? m2 : m2 + 1;
            if ((1.0 - r1) <= r2 && r2 < (2.0 * r1)) {
                h.i = m1 + 1;
            } else {
                h.i = m1;
            }
        }
    } else {
        if (r1 < 2.0 / 3.0) {
            h.j = (r2 < (1.0 - r1)) ? m2 : m2 + 1;
            if ((2.0 * r1 - 1.0) < r2 && r2 < (1.0 - r1)) {
                h.i = m1;
            } else {
                h.i = m1 + 1;
            }
        } else {
            if (r2 < (r1 / 2.0)) {
                h.i = m1 + 1;
                h.j = m2;
            } else {
                h.i = m1 + 1;
                h.j = m2 + 1;
            }
        }
    }

    // fold across the axes if necessary
    if (v.x < 0.0) {
        if ((h.j % 2) == 0) {
            const long long axisi = h.j / 2;
            const long long diff = h.i - axisi;
            h.i = static_cast<int>(h.i - 2.0 * diff);
        } else {
            const long long axisi = (h.j + 1) / 2;
            const long long diff = h.i - axisi;
            h.i = static_cast<int>(h.i - (2.0 * diff + 1));
        }
    }
    if (v.y < 0.0) {
        h.i = h.i - (2 * h.j + 1) / 2;
        h.j = -1 * h.j;
    }
    ijk_normalize(h);
    return h;
}

Digit unit_ijk_to_digit(const CoordIJK& ijk) {
    CoordIJK c = ijk;
    ijk_normalize(c);
    for (int d = CENTER_DIGIT; d < INVALID_DIGIT; ++d) {
        if (ijk_matches(c, kUnitVecs[d])) return static_cast<Digit>(d);
    }
    return INVALID_DIGIT;
}

void up_ap7(CoordIJK& ijk) {
    const int i = ijk.i - ijk.k;
    const int j = ijk.j - ijk.k;
    ijk.i = static_cast<int>(std::lround((3 * i - j) * kOneSeventh));
    ijk.j = static_cast<int>(std::lround((i + 2 * j) * kOneSeventh));
    ijk.k = 0;
    ijk_normalize(ijk);
}

void up_ap7r(CoordIJK& ijk) {
    const int i = ijk.i - ijk.k;
    const int j = ijk.j - ijk.k;
    ijk.i = static_cast<int>(std::lround((2 * i + j) * kOneSeventh));
    ijk.j = static_cast<int>(std::lround((3 * j - i) * kOneSeventh));
    ijk.k = 0;
    ijk_normalize(ijk);
}

void apply_basis(CoordIJK& ijk, CoordIJK iv, CoordIJK jv, CoordIJK kv) {
    ijk_scale(iv, ijk.i);
    ijk_scale(jv, ijk.j);
    ijk_scale(kv, ijk.k);
    ijk = ijk_add(ijk_add(iv, jv), kv);
    ijk_normalize(ijk);
}

void down_ap7(CoordIJK& c) { apply_basis(c, {3, 0, 1}, {1, 3, 0}, {0, 1, 3}); }
void down_ap7r(CoordIJK& c) { apply_basis(c, {3, 1, 0}, {0, 3, 1}, {1, 0, 3}); }
void down_ap3(CoordIJK& c) { apply_basis(c, {2, 0, 1}, {1, 2, 0}, {0, 1, 2}); }
void down_ap3r(CoordIJK& c) { apply_basis(c, {2, 1, 0}, {0, 2, 1}, {1, 0, 2}); }
void ijk_rotate60ccw(CoordIJK& c) { apply_basis(c, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}); }
void ijk_rotate60cw(CoordIJK& c) { apply_basis(c, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}); }

void ijk_neighbor(CoordIJK& ijk, int digit) {
    if (digit > CENTER_DIGIT && digit < INVALID_DIGIT) {
        ijk = ijk_add(ijk, kUnitVecs[digit]);
        ijk_normalize(ijk);
    }
}

Digit rotate60ccw(Digit d) {
    switch (d) {
        case K_AXES_DIGIT: return IK_AXES_DIGIT;
        case IK_AXES_DIGIT: return I_AXES_DIGIT;
        case I_AXES_DIGIT: return IJ_AXES_DIGIT;
        case IJ_AXES_DIGIT: return J_AXES_DIGIT;
        case J_AXES_DIGIT: return JK_AXES_DIGIT;
        case JK_AXES_DIGIT: return K_AXES_DIGIT;
        default: return d;
    }
}

Digit rotate60cw(Digit d) {
    switch (d) {
        case K_AXES_DIGIT: return JK_AXES_DIGIT;
        case JK_AXES_DIGIT: return J_AXES_DIGIT;
        case J_AXES_DIGIT: return IJ_AXES_DIGIT;
        case IJ_AXES_DIGIT: return I_AXES_DIGIT;
        case I_AXES_DIGIT: return IK_AXES_DIGIT;
        case IK_AXES_DIGIT: return K_AXES_DIGIT;
        default: return d;
    }
}

int ijk_distance(const CoordIJK& a, const CoordIJK& b) {
    CoordIJK d = ijk_sub(a, b);
    ijk_normalize(d);
    return std::max(std::abs(d.i), std::max(std::abs(d.j), std::abs(d.k)));
}

// Vectors.

Vec3d lin_comb(double a, const Vec3d& v1, double b, const Vec3d& v2) {
    return {a * v1.x + b * v2.x, a * v1.y + b * v2.y, a * v1.z + b * v2.z};
}

Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

double dot(const Vec3d& a, const Vec3d& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

void normalize(Vec3d& v) {
    const double norm = std::sqrt(dot(v, v));
    const double s = norm > 0.0 ? 1.0 / norm : 0.0;
    v.x *= s;
    v.y *= s;
    v.z *= s;
}

double dist_sq(const Vec3d& a, const Vec3d& b) {
    const Vec3d d = lin_comb(1.0, a, -1.0, b);
    return dot(d, d);
}

Vec3d rads_to_vec3(double lat, double lng) {
    const double r = std::cos(lat);
    return {std::cos(lng) * r, std::sin(lng) * r, std::sin(lat)};
}

LatLng vec3_to_degs(const Vec3d& v) {
    return {std::asin(v.z) * k180Pi, std::atan2(v.y, v.x) * k180Pi};
}

double pos_angle(double rads) {
    double tmp = rads < 0.0 ? rads + kTwoPi : rads;
    if (rads >= kTwoPi) tmp -= kTwoPi;
    return tmp;
}

Vec2d v2d_intersect(const Vec2d& p0, const Vec2d& p1, const Vec2d& p2,
                    const Vec2d& p3) {
    const Vec2d s1{p1.x - p0.x, p1.y - p0.y};
    const Vec2d s2{p3.x - p2.x, p3.y - p2.y};
    const double t = (s2.x * (p0.y - p2.y) - s2.y * (p0.x - p2.x)) /
                     (-s2.x * s1.y + s1.x * s2.y);
    return {p0.x + t * s1.x, p0.y + t * s1.y};
}

bool v2d_almost_equals(const Vec2d& a, const Vec2d& b) {
    return std::fabs(a.x - b.x) < FLT_EPSILON &&
           std::fabs(a.y - b.y) < FLT_EPSILON;
}

void tangent_basis(const Vec3d& p, Vec3d& north, Vec3d& east) {
    const Vec3d pole{0.0, 0.0, 1.0};
    north = lin_comb(1.0, pole, -dot(pole, p), p);
    normalize(north);
    east = cross(north, p);
}

double azimuth_rads(const Vec3d& p1, const Vec3d& p2) {
    Vec3d north;
    Vec3d east;
    tangent_basis(p1, north, east);
    Vec3d proj = lin_comb(1.0, p2, -dot(p2, p1), p1);
    normalize(proj);
    return std::atan2(dot(proj, east), dot(proj, north));
}

// Projection between the sphere and face-centered hex coordinates.

void vec3_to_hex2d(const Vec3d& p, int res, int& face, Vec2d& v) {
    face = 0;
    double sqd = 5.0;
    for (int f = 0; f < kNumIcosaFaces; ++f) {
        const double t = dist_sq(kFaceCenterPoint[f], p);
        if (t < sqd) {
            face = f;
            sqd = t;
        }
    }

    double r = std::acos(1 - sqd * 0.5);
    if (r < kEpsilon) {
        v = {0.0, 0.0};
        return;
    }

    double theta = pos_angle(kFaceAxesAzRadsCII[face][0] -
                             pos_angle(azimuth_rads(kFaceCenterPoint[face], p)));
    if (is_class_iii(res)) theta = pos_angle(theta - kAp7RotRads);

    r = std::tan(r);
    r *= kInvRes0UGnomonic;
    for (int i = 0; i < res; ++i) r *= kSqrt7;

    v = {r * std::cos(theta), r * std::sin(theta)};
}

Vec3d hex2d_to_vec3(const Vec2d& v, int face, int res, bool substrate) {
    double r = std::sqrt(v.x * v.x + v.y * v.y);
    if (r < kEpsilon) return kFaceCenterPoint[face];

    double theta = std::atan2(v.y, v.x);

    for (int i = 0; i < res; ++i) r *= kRsqrt7;

    if (substrate) {
        r *= kOneThird;
        if (is_class_iii(res)) r *= kRsqrt7;
    }

    r *= kRes0UGnomonic;
    r = std::atan(r);

    if (!substrate && is_class_iii(res)) theta = pos_angle(theta + kAp7RotRads);

    theta = pos_angle(kFaceAxesAzRadsCII[face][0] - theta);

    Vec3d north;
    Vec3d east;
    tangent_basis(kFaceCenterPoint[face], north, east);
    const Vec3d dir = lin_comb(std::cos(theta), north, std::sin(theta), east);
    Vec3d out = lin_comb(std::cos(r), kFaceCenterPoint[face], std::sin(r), dir);
    normalize(out);
    return out;
}

// Base cells.

bool is_base_cell_pentagon(int bc) {
    if (bc < 0 || bc >= kNumBaseCells) return false;
    return kBaseCellData[bc].isPentagon != 0;
}

bool is_base_cell_polar_pentagon(int bc) { return bc == 4 || bc == 117; }

bool base_cell_is_cw_offset(int bc, int face) {
    return kBaseCellData[bc].cwOffsetPent[0] == face ||
           kBaseCellData[bc].cwOffsetPent[1] == face;
}

Digit base_cell_direction(int origin_bc, int neighbor_bc) {
    for (int d = CENTER_DIGIT; d < INVALID_DIGIT; ++d) {
        if (kBaseCellNeighbors[origin_bc][d] == neighbor_bc) {
            return static_cast<Digit>(d);
        }
    }
    return INVALID_DIGIT;
}

// Index rotations.

Digit leading_nonzero_digit(Cell h) {
    const int res = get_res(h);
    for (int r = 1; r <= res; ++r) {
        if (const Digit d = get_digit(h, r)) return d;
    }
    return CENTER_DIGIT;
}

Cell rotate60ccw(Cell h) {
    const int res = get_res(h);
    for (int r = 1; r <= res; ++r) set_digit(h, r, rotate60ccw(get_digit(h, r)));
    return h;
}

Cell rotate60cw(Cell h) {
    const int res = get_res(h);
    for (int r = 1; r <= res; ++r) set_digit(h, r, rotate60cw(get_digit(h, r)));
    return h;
}

Cell rotate_pent60ccw(Cell h) {
    bool found_first = false;
    const int res = get_res(h);
    for (int r = 1; r <= res; ++r) {
        set_digit(h, r, rotate60ccw(get_digit(h, r)));
        if (!found_first && get_digit(h, r) != 0) {
            found_first = true;
            if (leading_nonzero_digit(h) == K_AXES_DIGIT) h = rotate60ccw(h);
        }
    }
    return h;
}

Cell rotate_pent60cw(Cell h) {
    bool found_first = false;
    const int res = get_res(h);
    for (int r = 1; r <= res; ++r) {
        set_digit(h, r, rotate60cw(get_digit(h, r)));
        if (!found_first && get_digit(h, r) != 0) {
            found_first = true;
            if (leading_nonzero_digit(h) == K_AXES_DIGIT) h = rotate60cw(h);
        }
    }
    return h;
}

// FaceIJK <-> index.

Cell face_ijk_to_cell(const FaceIJK& fijk, int res) {
    Cell h = kInit;
    set_mode(h, kCellMode);
    set_res(h, res);

    auto out_of_range = [](const CoordIJK& c) {
        return c.i > kMaxFaceCoord || c.j > kMaxFaceCoord || c.k > kMaxFaceCoord;
    };

    if (res == 0) {
        if (out_of_range(fijk.coord)) return kNullCell;
        const auto& entry = kFaceIjkBaseCells[fijk.face][fijk.coord.i]
                                             [fijk.coord.j][fijk.coord.k];
        set_bc(h, entry.baseCell);
        return h;
    }

    FaceIJK bc_fijk = fijk;
    CoordIJK& ijk = bc_fijk.coord;
    for (int r = res - 1; r >= 0; --r) {
        const CoordIJK last = ijk;
        CoordIJK last_center;
        if (is_class_iii(r + 1)) {
            up_ap7(ijk);
            last_center = ijk;
            down_ap7(last_center);
        } else {
            up_ap7r(ijk);
            last_center = ijk;
            down_ap7r(last_center);
        }
        CoordIJK diff = ijk_sub(last, last_center);
        ijk_normalize(diff);
        set_digit(h, r + 1, unit_ijk_to_digit(diff));
    }

    if (out_of_range(bc_fijk.coord)) return kNullCell;

    const auto& entry = kFaceIjkBaseCells[bc_fijk.face][ijk.i][ijk.j][ijk.k];
    const int bc = entry.baseCell;
    set_bc(h, bc);

    const int num_rots = entry.ccwRot60;
    if (is_base_cell_pentagon(bc)) {
        if (leading_nonzero_digit(h) == K_AXES_DIGIT) {
            h = base_cell_is_cw_offset(bc, bc_fijk.face) ? rotate60cw(h)
                                                         : rotate60ccw(h);
        }
        for (int i = 0; i < num_rots; ++i) h = rotate_pent60ccw(h);
    } else {
        for (int i = 0; i < num_rots; ++i) h = rotate60ccw(h);
    }
    return h;
}

bool cell_to_face_ijk_initialized(Cell h, FaceIJK& fijk) {
    CoordIJK& ijk = fijk.coord;
    const int res = get_res(h);

    bool possible_overage = true;
    if (!is_base_cell_pentagon(get_bc(h)) &&
        (res == 0 || (ijk.i == 0 && ijk.j == 0 && ijk.k == 0))) {
        possible_overage = false;
    }

    for (int r = 1; r <= res; ++r) {
        if (is_class_iii(r)) {
            down_ap7(ijk);
        } else {
            down_ap7r(ijk);
        }
        ijk_neighbor(ijk, get_digit(h, r));
    }
    return possible_overage;
}

Overage adjust_overage_class_ii(FaceIJK& fijk, int res, bool pent_leading4,
                                bool substrate) {
    Overage overage = Overage::None;
    CoordIJK& ijk = fijk.coord;

    int max_dim = kMaxDimByCIIres[res];
    if (substrate) max_dim *= 3;

    if (substrate && ijk.i + ijk.j + ijk.k == max_dim) {
        overage = Overage::FaceEdge;
    } else if (ijk.i + ijk.j + ijk.k > max_dim) {
        overage = Overage::NewFace;

        const FaceOrientIJK* orient = nullptr;
        if (ijk.k > 0) {
            if (ijk.j > 0) {
                orient = &kFaceNeighbors[fijk.face][JK];
            } else {
                orient = &kFaceNeighbors[fijk.face][KI];
                if (pent_leading4) {
                    const CoordIJK origin{max_dim, 0, 0};
                    CoordIJK tmp = ijk_sub(ijk, origin);
                    ijk_rotate60cw(tmp);
                    ijk = ijk_add(tmp, origin);
                }
            }
        } else {
            orient = &kFaceNeighbors[fijk.face][IJ];
        }

        fijk.face = orient->face;
        for (int i = 0; i < orient->ccwRot60; ++i) ijk_rotate60ccw(ijk);

        CoordIJK trans = orient->translate;
        int unit_scale = kUnitScaleByCIIres[res];
        if (substrate) unit_scale *= 3;
        ijk_scale(trans, unit_scale);
        ijk = ijk_add(ijk, trans);
        ijk_normalize(ijk);

        if (substrate && ijk.i + ijk.j + ijk.k == max_dim) {
            overage = Overage::FaceEdge;
        }
    }
    return overage;
}

Overage adjust_pent_vert_overage(FaceIJK& fijk, int res) {
    Overage overage;
    do {
        overage = adjust_overage_class_ii(fijk, res, false, true);
    } while (overage == Overage::NewFace);
    return overage;
}

FaceIJK cell_to_face_ijk(Cell h) {
    const int bc = get_bc(h);
    if (is_base_cell_pentagon(bc) && leading_nonzero_digit(h) == IK_AXES_DIGIT) {
        h = rotate60cw(h);
    }

    FaceIJK fijk = kBaseCellData[bc].homeFijk;
    if (!cell_to_face_ijk_initialized(h, fijk)) return fijk;

    const CoordIJK orig = fijk.coord;

    int res = get_res(h);
    if (is_class_iii(res)) {
        down_ap7r(fijk.coord);
        ++res;
    }

    const bool pent_leading4 =
        is_base_cell_pentagon(bc) && leading_nonzero_digit(h) == I_AXES_DIGIT;
    if (adjust_overage_class_ii(fijk, res, pent_leading4, false) !=
        Overage::None) {
        if (is_base_cell_pentagon(bc)) {
            while (adjust_overage_class_ii(fijk, res, false, false) !=
                   Overage::None) {
            }
        }
        if (res != get_res(h)) up_ap7r(fijk.coord);
    } else if (res != get_res(h)) {
        fijk.coord = orig;
    }
    return fijk;
}

// Cell boundaries.

void face_ijk_to_verts(FaceIJK& fijk, int& res, FaceIJK* verts, int count) {
    static const CoordIJK kVertsCII[kNumHexVerts] = {
        {2, 1, 0}, {1, 2, 0}, {0, 2, 1}, {0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
    static const CoordIJK kVertsCIII[kNumHexVerts] = {
        {5, 4, 0}, {1, 5, 0}, {0, 5, 4}, {0, 1, 5}, {4, 0, 5}, {5, 0, 1}};

    const CoordIJK* table = is_class_iii(res) ? kVertsCIII : kVertsCII;

    down_ap3(fijk.coord);
    down_ap3r(fijk.coord);
    if (is_class_iii(res)) {
        down_ap7r(fijk.coord);
        res += 1;
    }

    for (int v = 0; v < count; ++v) {
        verts[v].face = fijk.face;
        verts[v].coord = ijk_add(fijk.coord, table[v]);
        ijk_normalize(verts[v].coord);
    }
}

void face_edge(int dir, int max_dim, Vec2d& e0, Vec2d& e1) {
    const Vec2d v0{3.0 * max_dim, 0.0};
    const Vec2d v1{-1.5 * max_dim, 3.0 * kSqrt3_2 * max_dim};
    const Vec2d v2{-1.5 * max_dim, -3.0 * kSqrt3_2 * max_dim};
    switch (dir) {
        case IJ:
            e0 = v0;
            e1 = v1;
            break;
        case JK:
            e0 = v1;
            e1 = v2;
            break;
        default:
            e0 = v2;
            e1 = v0;
            break;
    }
}

std::vector<LatLng> hex_boundary(const FaceIJK& h, int res) {
    int adj_res = res;
    FaceIJK center = h;
    FaceIJK verts[kNumHexVerts];
    face_ijk_to_verts(center, adj_res, verts, kNumHexVerts);

    std::vector<LatLng> out;
    out.reserve(10);

    int last_face = -1;
    Overage last_overage = Overage::None;
    for (int vert = 0; vert < kNumHexVerts + 1; ++vert) {
        const int v = vert % kNumHexVerts;
        FaceIJK fijk = verts[v];
        const Overage overage = adjust_overage_class_ii(fijk, adj_res, false, true);

        // Class III edges may cross an icosahedron edge; the crossing point
        // becomes an extra vertex.
        if (is_class_iii(res) && vert > 0 && fijk.face != last_face &&
            last_overage != Overage::FaceEdge) {
            const int last_v = (v + 5) % kNumHexVerts;
            const Vec2d orig0 = ijk_to_hex2d(verts[last_v].coord);
            const Vec2d orig1 = ijk_to_hex2d(verts[v].coord);

            const int face2 = last_face == center.face ? fijk.face : last_face;
            Vec2d e0;
            Vec2d e1;
            face_edge(kAdjacentFaceDir[center.face][face2],
                      kMaxDimByCIIres[adj_res], e0, e1);
            const Vec2d inter = v2d_intersect(orig0, orig1, e0, e1);

            if (!v2d_almost_equals(orig0, inter) &&
                !v2d_almost_equals(orig1, inter)) {
                out.push_back(
                    vec3_to_degs(hex2d_to_vec3(inter, center.face, adj_res, true)));
            }
        }

        if (vert < kNumHexVerts) {
            const Vec2d vec = ijk_to_hex2d(fijk.coord);
            out.push_back(vec3_to_degs(hex2d_to_vec3(vec, fijk.face, adj_res, true)));
        }

        last_face = fijk.face;
        last_overage = overage;
    }
    return out;
}

std::vector<LatLng> pent_boundary(const FaceIJK& h, int res) {
    int adj_res = res;
    FaceIJK center = h;
    FaceIJK verts[kNumPentVerts];
    face_ijk_to_verts(center, adj_res, verts, kNumPentVerts);

    std::vector<LatLng> out;
    out.reserve(10);

    FaceIJK last{};
    for (int vert = 0; vert < kNumPentVerts + 1; ++vert) {
        const int v = vert % kNumPentVerts;
        FaceIJK fijk = verts[v];
        adjust_pent_vert_overage(fijk, adj_res);

        if (is_class_iii(res) && vert > 0) {
            FaceIJK tmp = fijk;
            const Vec2d orig0 = ijk_to_hex2d(last.coord);

            const int to_last = kAdjacentFaceDir[tmp.face][last.face];
            const FaceOrientIJK& orient = kFaceNeighbors[tmp.face][to_last];

            tmp.face = orient.face;
            for (int i = 0; i < orient.ccwRot60; ++i) ijk_rotate60ccw(tmp.coord);
            CoordIJK trans = orient.translate;
            ijk_scale(trans, kUnitScaleByCIIres[adj_res] * 3);
            tmp.coord = ijk_add(tmp.coord, trans);
            ijk_normalize(tmp.coord);

            const Vec2d orig1 = ijk_to_hex2d(tmp.coord);
            Vec2d e0;
            Vec2d e1;
            face_edge(kAdjacentFaceDir[tmp.face][fijk.face],
                      kMaxDimByCIIres[adj_res], e0, e1);
            const Vec2d inter = v2d_intersect(orig0, orig1, e0, e1);
            out.push_back(vec3_to_degs(hex2d_to_vec3(inter, tmp.face, adj_res, true)));
        }

        if (vert < kNumPentVerts) {
            const Vec2d vec = ijk_to_hex2d(fijk.coord);
            out.push_back(vec3_to_degs(hex2d_to_vec3(vec, fijk.face, adj_res, true)));
        }
        last = fijk;
    }
    return out;
}

// Neighbor traversal. Returns false when the move would enter the deleted
// pentagon subsequence.
bool neighbor_rotations(Cell origin, Digit dir, int& rotations, Cell& out) {
    Cell current = origin;

    rotations %= 6;
    for (int i = 0; i < rotations; ++i) dir = rotate60ccw(dir);

    int new_rotations = 0;
    const int old_bc = get_bc(current);
    const Digit old_leading = leading_nonzero_digit(current);

    int r = get_res(current) - 1;
    while (true) {
        if (r == -1) {
            set_bc(current, kBaseCellNeighbors[old_bc][dir]);
            new_rotations = kBaseCellNeighbor60CcwRots[old_bc][dir];

            if (get_bc(current) == INVALID_BASE_CELL) {
                // Moving toward the deleted k vertex of a pentagon.
                set_bc(current, kBaseCellNeighbors[old_bc][IK_AXES_DIGIT]);
                new_rotations = kBaseCellNeighbor60CcwRots[old_bc][IK_AXES_DIGIT];
                current = rotate60ccw(current);
                rotations += 1;
            }
            break;
        }
        const Digit old_digit = get_digit(current, r + 1);
        if (old_digit == INVALID_DIGIT) return false;
        Digit next_dir;
        if (is_class_iii(r + 1)) {
            set_digit(current, r + 1, kNewDigitII[old_digit][dir]);
            next_dir = kNewAdjustmentII[old_digit][dir];
        } else {
            set_digit(current, r + 1, kNewDigitIII[old_digit][dir]);
            next_dir = kNewAdjustmentIII[old_digit][dir];
        }
        if (next_dir == CENTER_DIGIT) break;
        dir = next_dir;
        --r;
    }

    const int new_bc = get_bc(current);
    if (is_base_cell_pentagon(new_bc)) {
        bool already_adjusted_k = false;

        if (leading_nonzero_digit(current) == K_AXES_DIGIT) {
            if (old_bc != new_bc) {
                if (base_cell_is_cw_offset(new_bc,
                                           kBaseCellData[old_bc].homeFijk.face)) {
                    current = rotate60cw(current);
                } else {
                    current = rotate60ccw(current);
                }
                already_adjusted_k = true;
            } else {
                if (old_leading == CENTER_DIGIT) {
                    return false;
                } else if (old_leading == JK_AXES_DIGIT) {
                    current = rotate60ccw(current);
                    rotations += 1;
                } else if (old_leading == IK_AXES_DIGIT) {
                    current = rotate60cw(current);
                    rotations += 5;
                } else {
                    return false;
                }
            }
        }

        for (int i = 0; i < new_rotations; ++i) current = rotate_pent60ccw(current);

        if (old_bc != new_bc) {
            if (is_base_cell_polar_pentagon(new_bc)) {
                if (old_bc != 118 && old_bc != 8 &&
                    leading_nonzero_digit(current) != JK_AXES_DIGIT) {
                    rotations += 1;
                }
            } else if (leading_nonzero_digit(current) == IK_AXES_DIGIT &&
                       !already_adjusted_k) {
                rotations += 1;
            }
        }
    } else {
        for (int i = 0; i < new_rotations; ++i) current = rotate60ccw(current);
    }

    rotations = (rotations + new_rotations) % 6;
    out = current;
    return true;
}

// Local IJK coordinates of h anchored at origin.
std::optional<CoordIJK> cell_to_local_ijk(Cell origin, Cell h) {
    const int res = get_res(origin);
    if (res != get_res(h)) return std::nullopt;

    const int origin_bc = get_bc(origin);
    const int bc = get_bc(h);

    Digit dir = CENTER_DIGIT;
    Digit rev_dir = CENTER_DIGIT;
    if (origin_bc != bc) {
        dir = base_cell_direction(origin_bc, bc);
        if (dir == INVALID_DIGIT) return std::nullopt;
        rev_dir = base_cell_direction(bc, origin_bc);
    }

    const bool origin_on_pent = is_base_cell_pentagon(origin_bc);
    const bool index_on_pent = is_base_cell_pentagon(bc);

    if (dir != CENTER_DIGIT) {
        const int bc_rotations = kBaseCellNeighbor60CcwRots[origin_bc][dir];
        if (index_on_pent) {
            for (int i = 0; i < bc_rotations; ++i) {
                h = rotate_pent60cw(h);
                rev_dir = rotate60cw(rev_dir);
                if (rev_dir == K_AXES_DIGIT) rev_dir = rotate60cw(rev_dir);
            }
        } else {
            for (int i = 0; i < bc_rotations; ++i) {
                h = rotate60cw(h);
                rev_dir = rotate60cw(rev_dir);
            }
        }
    }

    FaceIJK index_fijk{0, {0, 0, 0}};
    cell_to_face_ijk_initialized(h, index_fijk);

    if (dir != CENTER_DIGIT) {
        int pentagon_rotations = 0;
        int direction_rotations = 0;

        if (origin_on_pent) {
            const int lead = leading_nonzero_digit(origin);
            if (kFailedDirections[lead][dir]) return std::nullopt;
            direction_rotations = kPentagonRotations[lead][dir];
            pentagon_rotations = direction_rotations;
        } else if (index_on_pent) {
            const int lead = leading_nonzero_digit(h);
            if (kFailedDirections[lead][rev_dir]) return std::nullopt;
            pentagon_rotations = kPentagonRotations[rev_dir][lead];
        }

        if (pentagon_rotations < 0 || direction_rotations < 0) return std::nullopt;

        for (int i = 0; i < pentagon_rotations; ++i) ijk_rotate60cw(index_fijk.coord);

        CoordIJK offset{0, 0, 0};
        ijk_neighbor(offset, dir);
        for (int r = res - 1; r >= 0; --r) {
            if (is_class_iii(r + 1)) {
                down_ap7(offset);
            } else {
                down_ap7r(offset);
            }
        }
        for (int i = 0; i < direction_rotations; ++i) ijk_rotate60cw(offset);

        index_fijk.coord = ijk_add(index_fijk.coord, offset);
        ijk_normalize(index_fijk.coord);
    } else if (origin_on_pent && index_on_pent) {
        const int origin_lead = leading_nonzero_digit(origin);
        const int index_lead = leading_nonzero_digit(h);
        if (kFailedDirections[origin_lead][index_lead]) return std::nullopt;
        const int rots = kPentagonRotations[origin_lead][index_lead];
        for (int i = 0; i < rots; ++i) ijk_rotate60cw(index_fijk.coord);
    }
    return index_fijk.coord;
}

void require_valid(Cell c) {
    if (!is_valid_cell(c)) throw std::invalid_argument("invalid H3 cell: " + to_string(c));
}

}  // namespace

bool is_valid_cell(Cell h) {
    if ((h >> 56) != 0b00001000) return false;
    const int res = get_res(h);
    const int bc = get_bc(h);
    if (bc >= kNumBaseCells) return false;

    bool found_first_nonzero = false;
    for (int r = 1; r <= kMaxResolution; ++r) {
        const Digit d = get_digit(h, r);
        if (r <= res) {
            if (d == INVALID_DIGIT) return false;
            if (!found_first_nonzero && d != CENTER_DIGIT) {
                found_first_nonzero = true;
                if (is_base_cell_pentagon(bc) && d == K_AXES_DIGIT) return false;
            }
        } else if (d != INVALID_DIGIT) {
            return false;
        }
    }
    return true;
}

int resolution(Cell c) { return get_res(c); }

int base_cell(Cell c) { return get_bc(c); }

bool is_pentagon(Cell c) {
    return is_base_cell_pentagon(get_bc(c)) && leading_nonzero_digit(c) == CENTER_DIGIT;
}

Cell lat_lng_to_cell(double lat_deg, double lng_deg, int res) {
    if (res < 0 || res > kMaxResolution) {
        throw std::invalid_argument("resolution out of range");
    }
    if (!std::isfinite(lat_deg) || !std::isfinite(lng_deg)) {
        throw std::invalid_argument("non-finite coordinate");
    }
    const Vec3d v = rads_to_vec3(lat_deg * kPi180, lng_deg * kPi180);
    FaceIJK fijk{};
    Vec2d hex{};
    vec3_to_hex2d(v, res, fijk.face, hex);
    fijk.coord = hex2d_to_ijk(hex);
    const Cell out = face_ijk_to_cell(fijk, res);
    if (out == kNullCell) throw std::invalid_argument("coordinate could not be indexed");
    return out;
}

LatLng cell_to_lat_lng(Cell c) {
    require_valid(c);
    const FaceIJK fijk = cell_to_face_ijk(c);
    const Vec2d v = ijk_to_hex2d(fijk.coord);
    return vec3_to_degs(hex2d_to_vec3(v, fijk.face, get_res(c), false));
}

std::vector<LatLng> cell_to_boundary(Cell c) {
    require_valid(c);
    const FaceIJK fijk = cell_to_face_ijk(c);
    if (is_pentagon(c)) return pent_boundary(fijk, get_res(c));
    return hex_boundary(fijk, get_res(c));
}

std::optional<int> grid_distance(Cell a, Cell b) {
    if (!is_valid_cell(a) || !is_valid_cell(b)) return std::nullopt;
    const auto origin = cell_to_local_ijk(a, a);
    if (!origin) return std::nullopt;
    const auto target = cell_to_local_ijk(a, b);
    if (!target) return std::nullopt;
    return ijk_distance(*origin, *target);
}

std::vector<Cell> neighbors(Cell c) {
    require_valid(c);
    std::vector<Cell> out;
    out.reserve(6);
    for (int d = K_AXES_DIGIT; d <= IJ_AXES_DIGIT; ++d) {
        int rotations = 0;
        Cell n = kNullCell;
        if (neighbor_rotations(c, static_cast<Digit>(d), rotations, n) && n != c) {
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        }
    }
    return out;
}

std::vector<Cell> grid_disk(Cell c, int k) {
    require_valid(c);
    std::vector<Cell> all{c};
    std::unordered_set<Cell> seen{c};
    std::vector<Cell> frontier{c};
    for (int step = 0; step < k && !frontier.empty(); ++step) {
        std::vector<Cell> next;
        for (Cell f : frontier) {
            for (Cell n : neighbors(f)) {
                if (seen.insert(n).second) {
                    next.push_back(n);
                    all.push_back(n);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Cell> grid_ring(Cell c, int k) {
    require_valid(c);
    if (k <= 0) return {c};
    std::unordered_set<Cell> seen{c};
    std::vector<Cell> frontier{c};
    for (int step = 0; step < k && !frontier.empty(); ++step) {
        std::vector<Cell> next;
        for (Cell f : frontier) {
            for (Cell n : neighbors(f)) {
                if (seen.insert(n).second) next.push_back(n);
            }
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

Cell cell_to_parent(Cell c, int parent_res) {
    require_valid(c);
    const int res = get_res(c);
    if (parent_res < 0 || parent_res > res) {
        throw std::invalid_argument("parent resolution out of range");
    }
    Cell p = c;
    set_res(p, parent_res);
    for (int r = parent_res + 1; r <= res; ++r) set_digit(p, r, INVALID_DIGIT);
    return p;
}

std::string to_string(Cell c) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(c));
    return buf;
}

Cell from_string(std::string_view text) {
    if (text.empty() || text.size() > 16) return kNullCell;
    Cell v = 0;
    for (char ch : text) {
        int d;
        if (ch >= '0' && ch <= '9') {
            d = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            d = ch - 'a' + 10;
        } else if (ch >= 'A' && ch <= 'F') {
            d = ch - 'A' + 10;
        } else {
            return kNullCell;
        }
        v = (v << 4) | static_cast<Cell>(d);
    }
    return is_valid_cell(v) ? v : kNullCell;
}

}  // namespace habit::h3
