#ifndef GASDYN_TYPES_HPP_
#define GASDYN_TYPES_HPP_

#include <Eigen/Core>

namespace gasdyn {

using Index = Eigen::Index;

// Spatial vectors (d <= 2) and conserved-state vectors (m <= 4) are
// stack-allocated with runtime length, so the same code paths serve
// 1D/2D and full/isentropic models without heap traffic per cell.
template <typename Scalar>
using SpatialVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, 2, 1>;

template <typename Scalar>
using StateVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;

// Cell storage: one column per cell, one row per conserved component.
template <typename Scalar>
using StateArray = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class Mode { FullEuler, Isentropic };

enum class WaveKind { Shock, Rarefaction };

enum class BoundaryKind { Transmissive, Reflective, Periodic };

// States with density or pressure at or below this are treated as vacuum
// and rejected; no flooring anywhere.
template <typename Scalar>
inline constexpr Scalar vacuum_floor = Scalar(1e-12);

}  // namespace gasdyn

#endif  // GASDYN_TYPES_HPP_
