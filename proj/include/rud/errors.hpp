#pragma once

#include <stdexcept>
#include <string>

namespace rud {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentRelations : Error { using Error::Error; };
struct NotInLattice : Error { using Error::Error; };
struct UnclassifiableElement : Error { using Error::Error; };
struct DozenSizeMismatch : Error { using Error::Error; };
struct SearchIncomplete : Error { using Error::Error; };
struct LiftNotFound : Error { using Error::Error; };
struct OrbitCountMismatch : Error { using Error::Error; };
struct CoefficientCountMismatch : Error { using Error::Error; };
struct NonIntegralHalving : Error { using Error::Error; };
struct CrossCheckMismatch : Error { using Error::Error; };
struct TruncationTooLarge : Error { using Error::Error; };
struct BoundaryEmpty : Error { using Error::Error; };

}  // namespace rud
