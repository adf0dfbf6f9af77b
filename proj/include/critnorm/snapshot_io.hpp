#pragma once

#include <string>
#include <vector>

#include "critnorm/velocity.hpp"

namespace critnorm {

/// Unreadable, truncated or malformed snapshot files.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Binary snapshot format "CNF1", little-endian:
///   magic "CNF1" | u32 n1 n2 n3 | f64 L1 L2 L3 | f64 time | u32 ncomp |
///   ncomp complex-f64 coefficient arrays in C row-major k-order.
struct Snapshot {
    std::vector<SpectralField> components;
    double time = 0.0;

    const Grid& grid() const { return components.at(0).grid(); }
};

void write_snapshot(const std::string& path, const Snapshot& snap);
void write_snapshot(const std::string& path, const VelocityState& v);

Snapshot read_snapshot(const std::string& path);

/// Interprets a 3-component snapshot as a velocity state.
VelocityState as_velocity(const Snapshot& snap);

} // namespace critnorm
