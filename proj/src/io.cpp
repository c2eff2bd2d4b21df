#include "cyl/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace cyl {

static_assert(std::endian::native == std::endian::little,
              "the CYLF format is little-endian; add byte swapping for this platform");

FieldKind kind_of(const AnyGridArray& a) {
    return std::visit([](const auto& v) { return std::decay_t<decltype(v)>::kind; }, a);
}

const CylinderGrid& grid_of(const AnyGridArray& a) {
    return std::visit([](const auto& v) -> const CylinderGrid& { return v.grid; }, a);
}

namespace {

constexpr char magic[4] = {'C', 'Y', 'L', 'F'};
constexpr std::uint32_t format_version = 1;

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw IoError("unexpected end of file");
    return v;
}

void write_payload(std::ostream& os, const AnyGridArray& a) {
    const CylinderGrid& g = grid_of(a);
    os.write(magic, 4);
    put(os, format_version);
    put(os, static_cast<std::uint32_t>(g.n_t));
    put(os, static_cast<std::uint32_t>(g.n_x));
    put(os, g.X);
    put(os, static_cast<std::uint8_t>(kind_of(a)));
    std::visit(
        [&os](const auto& arr) {
            for (const auto& v : arr.values) {
                put(os, v.real());
                put(os, v.imag());
            }
        },
        a);
}

} // namespace

void write_binary(const std::filesystem::path& path, const AnyGridArray& a) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
        write_payload(os, a);
        if (!os) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

AnyGridArray read_binary(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open '" + path.string() + "'");
    char m[4];
    is.read(m, 4);
    if (!is || std::memcmp(m, magic, 4) != 0) throw FormatError("'" + path.string() + "' is not a CYLF file");
    auto version = get<std::uint32_t>(is);
    if (version != format_version)
        throw FormatError("unsupported CYLF version " + std::to_string(version));
    auto n_t = static_cast<int>(get<std::uint32_t>(is));
    auto n_x = static_cast<int>(get<std::uint32_t>(is));
    double X = get<double>(is);
    auto kind = get<std::uint8_t>(is);
    CylinderGrid g = make_grid(n_t, n_x, X);
    std::vector<Complex> values(g.size());
    for (auto& v : values) {
        double re = get<double>(is);
        double im = get<double>(is);
        v = Complex(re, im);
    }
    switch (kind) {
        case 0: return SampledField(g, std::move(values));
        case 1: return TorusSpectrum(g, std::move(values));
        case 2: return LineSpectrum(g, std::move(values));
        case 3: return MixedSpectrum(g, std::move(values));
        default: throw FormatError("unknown kind byte " + std::to_string(kind));
    }
}

void write_csv(std::ostream& os, const AnyGridArray& a) {
    os << "row,col,re,im\n";
    os.precision(17);
    std::visit(
        [&os](const auto& arr) {
            for (int r = 0; r < arr.grid.n_t; ++r)
                for (int c = 0; c < arr.grid.n_x; ++c) {
                    const Complex& v = arr.at(r, c);
                    os << r << ',' << c << ',' << v.real() << ',' << v.imag() << '\n';
                }
        },
        a);
}

void write_csv(const std::filesystem::path& path, const AnyGridArray& a) {
    std::ostringstream buf;
    write_csv(buf, a);
    write_text_atomic(path, buf.str());
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
        os << content;
        if (!os) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace cyl
