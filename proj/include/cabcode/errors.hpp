#ifndef CABCODE_ERRORS_HPP
#define CABCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cabcode {

// Base class for everything thrown on purpose by this library. Size-guard
// violations get their own branch so the CLI can map them to exit code 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeExceeded : Error {
    explicit SizeExceeded(const std::string& msg) : Error(msg) {}
};

#define CABCODE_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

CABCODE_DEFINE_ERROR(NonPrimeBase);
CABCODE_DEFINE_ERROR(MixedFields);
CABCODE_DEFINE_ERROR(DivisionByZero);
CABCODE_DEFINE_ERROR(ArityMismatch);
CABCODE_DEFINE_ERROR(ZeroPolynomial);
CABCODE_DEFINE_ERROR(ZeroDivisor);
CABCODE_DEFINE_ERROR(ParseError);
CABCODE_DEFINE_ERROR(InfiniteFootprint);
CABCODE_DEFINE_ERROR(BudgetExceeded);
CABCODE_DEFINE_ERROR(NotARepresentative);
CABCODE_DEFINE_ERROR(EqualDegrees);
CABCODE_DEFINE_ERROR(WeightViolation);
CABCODE_DEFINE_ERROR(TrivialPolynomial);
CABCODE_DEFINE_ERROR(NotInFootprint);
CABCODE_DEFINE_ERROR(IndexNotInSupport);
CABCODE_DEFINE_ERROR(BadV);
CABCODE_DEFINE_ERROR(ExclusionOutOfRange);
CABCODE_DEFINE_ERROR(BadRange);
CABCODE_DEFINE_ERROR(EqualIndices);
CABCODE_DEFINE_ERROR(RankDeficient);
CABCODE_DEFINE_ERROR(DependentInput);
CABCODE_DEFINE_ERROR(EmptyCode);
CABCODE_DEFINE_ERROR(SingularBasis);

#undef CABCODE_DEFINE_ERROR

} // namespace cabcode

#endif
