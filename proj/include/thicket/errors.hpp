#pragma once

#include <stdexcept>
#include <string>

namespace thicket {

// Base class for every mathematical-input error raised by the library.
// The CLI maps these to exit code 2.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

#define THICKET_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

THICKET_DEFINE_ERROR(InvalidDynkin);
THICKET_DEFINE_ERROR(NotARoot);
THICKET_DEFINE_ERROR(NotInInterval);
THICKET_DEFINE_ERROR(WrongSeries);
THICKET_DEFINE_ERROR(InvalidPartition);
THICKET_DEFINE_ERROR(Crossing);
THICKET_DEFINE_ERROR(NotInvariant);
THICKET_DEFINE_ERROR(BadDivisor);
THICKET_DEFINE_ERROR(InvalidType);
THICKET_DEFINE_ERROR(ExcludedType);
THICKET_DEFINE_ERROR(NoClosedForm);
THICKET_DEFINE_ERROR(NotAsashibaType);
THICKET_DEFINE_ERROR(WindowTooLarge);

#undef THICKET_DEFINE_ERROR

}  // namespace thicket
