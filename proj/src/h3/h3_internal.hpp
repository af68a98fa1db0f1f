#pragma once

#include <cstdint>

namespace habit::h3::detail {

inline constexpr int kNumBaseCells = 122;
inline constexpr int kNumIcosaFaces = 20;
inline constexpr int kMaxFaceCoord = 2;
inline constexpr int INVALID_BASE_CELL = 127;

enum Digit : int {
    CENTER_DIGIT = 0,
    K_AXES_DIGIT = 1,
    J_AXES_DIGIT = 2,
    JK_AXES_DIGIT = 3,
    I_AXES_DIGIT = 4,
    IK_AXES_DIGIT = 5,
    IJ_AXES_DIGIT = 6,
    INVALID_DIGIT = 7,
};

// Quadrant selectors into kFaceNeighbors.
inline constexpr int IJ = 1;
inline constexpr int KI = 2;
inline constexpr int JK = 3;

struct CoordIJK {
    int i;
    int j;
    int k;
};

struct FaceIJK {
    int face;
    CoordIJK coord;
};

struct FaceOrientIJK {
    int face;
    CoordIJK translate;
    int ccwRot60;
};

struct BaseCellData {
    FaceIJK homeFijk;
    int isPentagon;
    int cwOffsetPent[2];
};

struct BaseCellRotation {
    int baseCell;
    int ccwRot60;
};

struct Vec2d {
    double x;
    double y;
};

struct Vec3d {
    double x;
    double y;
    double z;
};

extern const int kBaseCellNeighbors[kNumBaseCells][7];
extern const int kBaseCellNeighbor60CcwRots[kNumBaseCells][7];
extern const BaseCellRotation kFaceIjkBaseCells[kNumIcosaFaces][3][3][3];
extern const BaseCellData kBaseCellData[kNumBaseCells];
extern const Vec3d kFaceCenterPoint[kNumIcosaFaces];
extern const double kFaceAxesAzRadsCII[kNumIcosaFaces][3];
extern const FaceOrientIJK kFaceNeighbors[kNumIcosaFaces][4];
extern const int kAdjacentFaceDir[kNumIcosaFaces][kNumIcosaFaces];
extern const int kMaxDimByCIIres[17];
extern const int kUnitScaleByCIIres[17];
extern const Digit kNewDigitII[7][7];
extern const Digit kNewAdjustmentII[7][7];
extern const Digit kNewDigitIII[7][7];
extern const Digit kNewAdjustmentIII[7][7];
extern const int kPentagonRotations[7][7];
extern const int kPentagonRotationsReverse[7][7];
extern const int kPentagonRotationsReverseNonpolar[7][7];
extern const int kPentagonRotationsReversePolar[7][7];
extern const bool kFailedDirections[7][7];

}  // namespace habit::h3::detail
