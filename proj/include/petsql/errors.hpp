#pragma once

#include <stdexcept>
#include <string>

namespace petsql {

// Base class for all error conditions raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// catalog
class IoError : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class TableMissing : public Error { public: using Error::Error; };
class QueryError : public Error { public: using Error::Error; };

// prompting
class MissingSample : public Error { public: using Error::Error; };

// retrieval
class UnknownDatabase : public Error { public: using Error::Error; };

// llm gateway
class AuthError : public Error { public: using Error::Error; };
class TransportError : public Error { public: using Error::Error; };
class ContextOverflow : public Error { public: using Error::Error; };

// sql analysis
class NoSqlFound : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

// consistency
class EmptyCandidates : public Error { public: using Error::Error; };

// evaluation
class LengthMismatch : public Error { public: using Error::Error; };
class DatabaseMissing : public Error { public: using Error::Error; };

} // namespace petsql
