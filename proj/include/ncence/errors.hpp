#ifndef NCENCE_ERRORS_HPP
#define NCENCE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncence {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph construction violations.
class InvalidLabel : public Error { public: using Error::Error; };
class DuplicateNode : public Error { public: using Error::Error; };
class DanglingEdge : public Error { public: using Error::Error; };
class SelfLoop : public Error { public: using Error::Error; };
class DuplicateEdge : public Error { public: using Error::Error; };

// Graph operation errors.
class EmptyOperand : public Error { public: using Error::Error; };
class UnknownNode : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };

/// Parse failure in a control expression or grammar file. `pos` is a byte
/// offset for control text and a 1-based line number for grammar files.
class SyntaxError : public Error {
public:
    SyntaxError(std::string message, std::size_t pos)
        : Error(message + " (at " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Enumeration and rewriting budgets.
class BudgetError : public Error { public: using Error::Error; };

// Control expression occurrence handles.
class StaleHandle : public Error { public: using Error::Error; };

// Derivation engine.
class NotApplicable : public Error { public: using Error::Error; };
class UnknownProduction : public Error { public: using Error::Error; };

// Closure constructions.
class NoTerminalProduction : public Error { public: using Error::Error; };

} // namespace ncence

#endif // NCENCE_ERRORS_HPP
