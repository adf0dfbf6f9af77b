#include "critnorm/snapshot_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace critnorm {

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; byte swapping is not implemented");

namespace {

template <typename T> void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <typename T> T get(std::ifstream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw IoError("snapshot: truncated file");
    return v;
}

} // namespace

void write_snapshot(const std::string& path, const Snapshot& snap) {
    if (snap.components.empty()) throw ParameterError("snapshot: no components");
    const Grid& g = snap.grid();
    for (const auto& c : snap.components) require_same_grid(g, c.grid(), "write_snapshot");

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("snapshot: cannot open '" + path + "' for writing");
    os.write("CNF1", 4);
    put<std::uint32_t>(os, g.n(0));
    put<std::uint32_t>(os, g.n(1));
    put<std::uint32_t>(os, g.n(2));
    put<double>(os, g.L(0));
    put<double>(os, g.L(1));
    put<double>(os, g.L(2));
    put<double>(os, snap.time);
    put<std::uint32_t>(os, std::uint32_t(snap.components.size()));
    for (const auto& c : snap.components)
        os.write(reinterpret_cast<const char*>(c.coeffs().data()),
                 std::streamsize(sizeof(complexd) * c.coeffs().size()));
    if (!os) throw IoError("snapshot: write failed for '" + path + "'");
}

void write_snapshot(const std::string& path, const VelocityState& v) {
    Snapshot s;
    s.components = {v.v[0], v.v[1], v.v[2]};
    s.time = v.time;
    write_snapshot(path, s);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("snapshot: cannot open '" + path + "'");
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "CNF1", 4) != 0)
        throw IoError("snapshot: bad magic in '" + path + "'");
    const auto n1 = get<std::uint32_t>(is);
    const auto n2 = get<std::uint32_t>(is);
    const auto n3 = get<std::uint32_t>(is);
    const double L1 = get<double>(is);
    const double L2 = get<double>(is);
    const double L3 = get<double>(is);
    const double time = get<double>(is);
    const auto ncomp = get<std::uint32_t>(is);
    GridPtr grid = Grid::make(int(n1), int(n2), int(n3), L1, L2, L3);

    Snapshot snap;
    snap.time = time;
    for (std::uint32_t c = 0; c < ncomp; ++c) {
        SpectralField f(grid);
        is.read(reinterpret_cast<char*>(f.coeffs().data()),
                std::streamsize(sizeof(complexd) * f.coeffs().size()));
        if (!is) throw IoError("snapshot: truncated payload in '" + path + "'");
        snap.components.push_back(std::move(f));
    }
    return snap;
}

VelocityState as_velocity(const Snapshot& snap) {
    if (snap.components.size() != 3)
        throw ParameterError("snapshot: expected 3 components for a velocity state");
    return VelocityState({snap.components[0], snap.components[1], snap.components[2]}, snap.time);
}

} // namespace critnorm
