/**
 * errors.hpp
 * Exception types shared across the library. Each maps to a documented
 * operation error; the CLI translates them to exit codes.
 */
#ifndef GPTLAB_ERRORS_HPP
#define GPTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gptlab {

/** Feasible region is empty. */
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/** Objective or region unbounded where boundedness is required. */
struct UnboundedError : std::runtime_error {
    explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

/** A direction argument was the zero vector. */
struct ZeroDirectionError : std::invalid_argument {
    explicit ZeroDirectionError(const std::string& what) : std::invalid_argument(what) {}
};

/** A query point lies outside the body (beyond tolerance). */
struct OutsideBodyError : std::invalid_argument {
    explicit OutsideBodyError(const std::string& what) : std::invalid_argument(what) {}
};

/** Arc-body face enumeration requested for an unsupported shape family. */
struct UnsupportedFamilyError : std::invalid_argument {
    explicit UnsupportedFamilyError(const std::string& what) : std::invalid_argument(what) {}
};

/** A face/state pairing expected to be bijective failed to be. */
struct BijectionFailureError : std::runtime_error {
    explicit BijectionFailureError(const std::string& what) : std::runtime_error(what) {}
};

/** Input data failed structural validation (malformed system, bad table). */
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gptlab

#endif
