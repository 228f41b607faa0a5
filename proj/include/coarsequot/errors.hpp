#pragma once

#include <stdexcept>
#include <string>

namespace coarsequot {

// Base class for all workbench errors. Specific types below mirror the
// failure modes the operations can report, so callers can catch precisely.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define COARSEQUOT_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

COARSEQUOT_ERROR(UnknownVertex);
COARSEQUOT_ERROR(BudgetExceeded);
COARSEQUOT_ERROR(FamilyTooSmall);
COARSEQUOT_ERROR(EmptySubspace);
COARSEQUOT_ERROR(MissingRho);
COARSEQUOT_ERROR(DanglingConeVertex);
COARSEQUOT_ERROR(SelfProjection);
COARSEQUOT_ERROR(PreconditionBroken);
COARSEQUOT_ERROR(NotCoboundedlyCovered);
COARSEQUOT_ERROR(NotSmallCancellation);
COARSEQUOT_ERROR(ElementaryMeasure);
COARSEQUOT_ERROR(TranslationTooSmall);
COARSEQUOT_ERROR(SearchExhausted);
COARSEQUOT_ERROR(NotThroughCone);
COARSEQUOT_ERROR(OracleMismatch);
COARSEQUOT_ERROR(RelationConflict);
COARSEQUOT_ERROR(InsufficientSamples);
COARSEQUOT_ERROR(NegativeInput);
COARSEQUOT_ERROR(ParseError);
COARSEQUOT_ERROR(NotApplicable);
COARSEQUOT_ERROR(InvalidGraph);

#undef COARSEQUOT_ERROR

} // namespace coarsequot
