#pragma once

#include <stdexcept>
#include <string>

namespace ckm {

// All recoverable failures carry a short machine-greppable code plus a
// human message. The CLI prints "<code>: <message>" on one stderr line.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define CKM_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& message)                \
            : Error(#Name, message) {}                           \
    }

CKM_DEFINE_ERROR(LexError);
CKM_DEFINE_ERROR(ParseError);
CKM_DEFINE_ERROR(DuplicateClass);
CKM_DEFINE_ERROR(InheritanceCycle);
CKM_DEFINE_ERROR(UnmappedClass);
CKM_DEFINE_ERROR(SchemaError);
CKM_DEFINE_ERROR(EmptyModule);
CKM_DEFINE_ERROR(EmptyInput);
CKM_DEFINE_ERROR(SingularMatrix);
CKM_DEFINE_ERROR(InsufficientRows);
CKM_DEFINE_ERROR(DomainError);
CKM_DEFINE_ERROR(MissingDefects);
CKM_DEFINE_ERROR(AllUndefined);
CKM_DEFINE_ERROR(LabelMismatch);
CKM_DEFINE_ERROR(NoDefectsInHistory);
CKM_DEFINE_ERROR(IoError);

#undef CKM_DEFINE_ERROR

} // namespace ckm
