#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ssp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SSP_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}  \
    };

SSP_DEFINE_ERROR(NondeterministicEdge)
SSP_DEFINE_ERROR(EmptyStateSet)
SSP_DEFINE_ERROR(UnusedEvent)
SSP_DEFINE_ERROR(UnknownState)
SSP_DEFINE_ERROR(UnknownEvent)
SSP_DEFINE_ERROR(InvalidIdentifier)
SSP_DEFINE_ERROR(PartialAssignment)
SSP_DEFINE_ERROR(NopNotInType)
SSP_DEFINE_ERROR(DisconnectedPath)
SSP_DEFINE_ERROR(OracleCapExceeded)
SSP_DEFINE_ERROR(WrongTypeFamily)
SSP_DEFINE_ERROR(VariableCountMismatch)
SSP_DEFINE_ERROR(DuplicateClause)
SSP_DEFINE_ERROR(SizeCapExceeded)
SSP_DEFINE_ERROR(ModelNotOneInThree)
SSP_DEFINE_ERROR(NotLoopFree)
SSP_DEFINE_ERROR(ExtensionNondeterministic)
SSP_DEFINE_ERROR(InvalidTypeSpec)
SSP_DEFINE_ERROR(InvalidAtom)

#undef SSP_DEFINE_ERROR

class UnreachableState : public Error {
public:
    explicit UnreachableState(std::vector<std::string> states)
        : Error(message(states)), states_(std::move(states)) {}
    const std::vector<std::string>& states() const noexcept { return states_; }

private:
    static std::string message(const std::vector<std::string>& states) {
        std::string out = "unreachable state(s):";
        for (const auto& s : states) out += " " + s;
        return out;
    }
    std::vector<std::string> states_;
};

class OccurrenceNotThree : public Error {
public:
    OccurrenceNotThree(std::string variable, int count)
        : Error("variable '" + variable + "' occurs in " + std::to_string(count) + " clause(s), expected 3"),
          variable_(std::move(variable)), count_(count) {}
    const std::string& variable() const noexcept { return variable_; }
    int count() const noexcept { return count_; }

private:
    std::string variable_;
    int count_;
};

class UnknownInteractionName : public Error {
public:
    explicit UnknownInteractionName(std::string token)
        : Error("unknown interaction name '" + token + "'"), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

// Parse failure in a text input; line is 1-based, 0 when not attributable to a line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace ssp
