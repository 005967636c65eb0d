#pragma once

#include <stdexcept>
#include <string>

namespace padictk {

// Base for all arithmetic-domain errors.  `code()` is the stable,
// machine-readable identifier emitted by the CLI error channel.
class MathError : public std::runtime_error {
public:
    MathError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define PADICTK_ERROR(Name)                                             \
    class Name : public MathError {                                     \
    public:                                                             \
        explicit Name(const std::string& what = #Name)                  \
            : MathError(#Name, what) {}                                 \
    }

PADICTK_ERROR(NotAUnit);
PADICTK_ERROR(NonResidue);
PADICTK_ERROR(Ramified);
PADICTK_ERROR(NotPrimitive);
PADICTK_ERROR(RamifiedEmbedding);
PADICTK_ERROR(OddCharacter);
PADICTK_ERROR(PoleAtOne);
PADICTK_ERROR(PrecisionExhausted);
PADICTK_ERROR(TrivialProjection);
PADICTK_ERROR(ConventionMismatch);
PADICTK_ERROR(ParityViolation);
PADICTK_ERROR(NotSplit);
PADICTK_ERROR(ZeroDenominator);
PADICTK_ERROR(ZeroAlpha);
PADICTK_ERROR(ZeroAtPrecision);
PADICTK_ERROR(NotFundamental);
PADICTK_ERROR(SearchExhausted);
PADICTK_ERROR(BudgetExceeded);
PADICTK_ERROR(NotRegular);

#undef PADICTK_ERROR

}  // namespace padictk
