#pragma once

#include <stdexcept>
#include <string>

namespace tropres {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Ambient dimensions of points, apices or matrices do not agree (or are empty). */
class DimensionError : public Error
{
    public:
        explicit DimensionError(const std::string& what) : Error(what) {}
};

/** A type matrix is malformed for the requested operation (e.g. an empty row). */
class InvalidTypeError : public Error
{
    public:
        explicit InvalidTypeError(const std::string& what) : Error(what) {}
};

/** A closed cell was requested for a type whose sector system has no solution. */
class InfeasibleError : public Error
{
    public:
        explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/** A configurable enumeration or search limit was exceeded. */
class ResourceLimitError : public Error
{
    public:
        explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/** A documented precondition of an operation was violated by its arguments. */
class PreconditionError : public Error
{
    public:
        explicit PreconditionError(const std::string& what) : Error(what) {}
};

/** A face poset is not the poset of a polyhedral complex (non-diamond interval). */
class InvalidComplexError : public Error
{
    public:
        explicit InvalidComplexError(const std::string& what) : Error(what) {}
};

/** Cell labels violate the (co)labeling condition. */
class LabelingError : public Error
{
    public:
        explicit LabelingError(const std::string& what) : Error(what) {}
};

/** Two independent computations of the same object disagree. */
class ConsistencyError : public Error
{
    public:
        explicit ConsistencyError(const std::string& what) : Error(what) {}
};

/** Malformed input document or command line argument. */
class InputError : public Error
{
    public:
        explicit InputError(const std::string& what) : Error(what) {}
};

}   // namespace tropres
