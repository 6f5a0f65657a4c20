/**
 * Shared error types and small utilities used across the library.
 */

#ifndef SDKAPPA_COMMON_HPP
#define SDKAPPA_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sdkappa {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define SDKAPPA_ERROR(Name)                                              \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(#Name, what) {}   \
    }

SDKAPPA_ERROR(CycleError);
SDKAPPA_ERROR(DuplicateLabelError);
SDKAPPA_ERROR(UnknownElement);
SDKAPPA_ERROR(CompositionMismatch);
SDKAPPA_ERROR(DegenerateChain);
SDKAPPA_ERROR(NotAChain);
SDKAPPA_ERROR(EmptyResult);
SDKAPPA_ERROR(PointNotOnPath);
SDKAPPA_ERROR(PointNotInBase);
SDKAPPA_ERROR(BadCase);
SDKAPPA_ERROR(NotCofibration);
SDKAPPA_ERROR(NotNerveMap);
SDKAPPA_ERROR(SingularInput);
SDKAPPA_ERROR(ScaleGuard);
SDKAPPA_ERROR(InternalInconsistency);
SDKAPPA_ERROR(InvalidInput);

#undef SDKAPPA_ERROR

/// FNV-1a 64-bit hash, used to fingerprint inputs in reports.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

/// Runs fn(i) for i in [0, n) on a few worker threads; results are merged by
/// index so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sdkappa

#endif  // SDKAPPA_COMMON_HPP
