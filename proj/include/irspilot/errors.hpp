#pragma once

#include <stdexcept>
#include <string>

namespace irspilot {

/// Shape disagreement between operands (rows/cols mismatch, bad DFT size, ...).
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical rank below what a solve or recovery step requires.
class rank_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Geometry that admits no valid placement (circle intersection empty, d <= 0).
class geometry_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A typical-user channel too close to zero for scaling-factor ground truth.
class degenerate_channel_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Schedule construction called outside its regime or with invalid lengths.
class schedule_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Config file problems: syntax, unknown key, or range violation.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace irspilot
