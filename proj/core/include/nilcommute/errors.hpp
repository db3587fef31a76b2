#pragma once

#include <stdexcept>
#include <string>

namespace nilcommute {

// Base class for every error thrown by the library. The CLI maps these to
// exit code 2 (usage / validation), while verdict failures stay in-band.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NILCOMMUTE_ERROR(Name)                                        \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

NILCOMMUTE_ERROR(NotPrime);
NILCOMMUTE_ERROR(PrimeTooLarge);
NILCOMMUTE_ERROR(FieldMismatch);
NILCOMMUTE_ERROR(DivisionByZero);
NILCOMMUTE_ERROR(UnsupportedCharacteristic);
NILCOMMUTE_ERROR(DimensionMismatch);
NILCOMMUTE_ERROR(NotSquare);
NILCOMMUTE_ERROR(NotNilpotent);
NILCOMMUTE_ERROR(NotCommuting);
NILCOMMUTE_ERROR(NotInCentralizer);
NILCOMMUTE_ERROR(NotInvertible);
NILCOMMUTE_ERROR(BadPartition);
NILCOMMUTE_ERROR(BadShape);
NILCOMMUTE_ERROR(BadSize);
NILCOMMUTE_ERROR(BadOrders);
NILCOMMUTE_ERROR(BadFamily);
NILCOMMUTE_ERROR(ZeroParameter);
NILCOMMUTE_ERROR(CharacteristicMismatch);
NILCOMMUTE_ERROR(OmegaNotRoot);
NILCOMMUTE_ERROR(NotSelfCentralizing);
NILCOMMUTE_ERROR(NotInAlgebra);
NILCOMMUTE_ERROR(NotInN2);
NILCOMMUTE_ERROR(ConstantTerm);
NILCOMMUTE_ERROR(BadQ);
NILCOMMUTE_ERROR(RankTooHigh);
NILCOMMUTE_ERROR(ResolutionFailure);
NILCOMMUTE_ERROR(InternalError);

#undef NILCOMMUTE_ERROR

// Schema violations carry a JSON-pointer-ish path to the offending element.
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : Error("schema error at " + path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace nilcommute
