#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace polyspace {

enum class Errc {
    DimensionMismatch,
    InvalidArgument,
    SingularLength,
    NotAFacet,
    DegenerateWall,
    NonGenericSegment,
    BudgetExceeded,
    AffineIndexUsed,
    WrongTotalDegree,
    DegreeOutOfRange,
    EmptyChamber,
    EmptyTarget,
    NotAdjacent,
    BaseNotInSet,
    BadPartition,
    ParseError,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library. `index_set()` carries the offending
/// subset (bitmask over 0-based indices) when one is relevant, e.g. the set
/// whose epsilon vanishes for SingularLength.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what,
          std::optional<std::uint32_t> index_set = std::nullopt)
        : std::runtime_error(what), code_(code), index_set_(index_set) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::uint32_t> index_set() const noexcept { return index_set_; }

private:
    Errc code_;
    std::optional<std::uint32_t> index_set_;
};

}  // namespace polyspace
