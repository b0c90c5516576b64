#ifndef FINSTAGE_ERROR_HPP
#define FINSTAGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace finstage {

// Base of every domain error. `name()` is the stable, typed identifier the
// CLI prints; `payload()` carries the key=value details.
class Error : public std::runtime_error {
public:
    Error(std::string name, std::string payload);

    const std::string& name() const noexcept { return name_; }
    const std::string& payload() const noexcept { return payload_; }

private:
    std::string name_;
    std::string payload_;
};

#define FINSTAGE_DECLARE_ERROR(Type)                                            \
    class Type : public Error {                                                 \
    public:                                                                     \
        explicit Type(std::string payload = {}) : Error(#Type, std::move(payload)) {} \
    }

FINSTAGE_DECLARE_ERROR(ZeroIndex);
FINSTAGE_DECLARE_ERROR(EmptyString);
FINSTAGE_DECLARE_ERROR(OutOfRange);
FINSTAGE_DECLARE_ERROR(DepthZero);
FINSTAGE_DECLARE_ERROR(EnumerationExhausted);
FINSTAGE_DECLARE_ERROR(EmptySet);
FINSTAGE_DECLARE_ERROR(NotEvenPositiveDistinct);
FINSTAGE_DECLARE_ERROR(BudgetExceeded);
FINSTAGE_DECLARE_ERROR(InvalidInput);
FINSTAGE_DECLARE_ERROR(Undecided);

#undef FINSTAGE_DECLARE_ERROR

// A string that ends in 0 never appears verbatim in the enumeration.
// `equivalent` is the index of the trailing-zero-trimmed string, which has the
// same value; it is empty when the string is all zeros (value 0).
class NotInImage : public Error {
public:
    explicit NotInImage(std::string equivalent);

    const std::string& equivalent() const noexcept { return equivalent_; }

private:
    std::string equivalent_;
};

} // namespace finstage

#endif
