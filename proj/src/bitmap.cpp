#include "peano/bitmap.hpp"

#include "peano/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace peano {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
int next_header_int(std::istream& in) {
    while (true) {
        int c = in.peek();
        if (c == EOF) throw error(errc::bad_input, "truncated raster header");
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value)) throw error(errc::bad_input, "malformed raster header");
    return value;
}

} // namespace

Continuum load_bitmap(std::istream& in, int threshold) {
    std::string magic;
    in >> magic;
    if (magic != "P1" && magic != "P2" && magic != "P4" && magic != "P5")
        throw error(errc::bad_input, "unsupported raster magic: " + magic);
    const bool is_pbm = (magic == "P1" || magic == "P4");
    const bool is_binary = (magic == "P4" || magic == "P5");

    const int width = next_header_int(in);
    const int height = next_header_int(in);
    if (width <= 0 || height <= 0) throw error(errc::bad_input, "empty raster dimensions");
    int maxval = 1;
    if (!is_pbm) {
        maxval = next_header_int(in);
        if (maxval <= 0 || maxval > 65535) throw error(errc::bad_input, "bad maxval");
    }

    std::vector<std::vector<char>> fg(static_cast<std::size_t>(height),
                                      std::vector<char>(static_cast<std::size_t>(width), 0));

    if (is_binary) {
        in.get(); // single whitespace after header
        if (magic == "P5") {
            const int bytes_per = maxval > 255 ? 2 : 1;
            for (int r = 0; r < height; ++r) {
                for (int c = 0; c < width; ++c) {
                    int v = 0;
                    for (int b = 0; b < bytes_per; ++b) {
                        int byte = in.get();
                        if (byte == EOF) throw error(errc::bad_input, "truncated P5 payload");
                        v = (v << 8) | byte;
                    }
                    fg[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v > threshold;
                }
            }
        } else { // P4: packed bits, rows padded to byte boundary, 1 = black = foreground
            for (int r = 0; r < height; ++r) {
                int byte = 0, bits = 0;
                for (int c = 0; c < width; ++c) {
                    if (bits == 0) {
                        byte = in.get();
                        if (byte == EOF) throw error(errc::bad_input, "truncated P4 payload");
                        bits = 8;
                    }
                    fg[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        (byte & 0x80) != 0;
                    byte <<= 1;
                    --bits;
                }
            }
        }
    } else {
        for (int r = 0; r < height; ++r) {
            for (int c = 0; c < width; ++c) {
                int v = next_header_int(in);
                fg[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    is_pbm ? (v != 0) : (v > threshold);
            }
        }
    }

    std::vector<double> xs, ys;
    std::vector<std::pair<cell_id, cell_id>> edges;
    std::vector<std::vector<cell_id>> id_at(static_cast<std::size_t>(height),
                                            std::vector<cell_id>(static_cast<std::size_t>(width), -1));
    cell_id next = 0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            if (!fg[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) continue;
            id_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next++;
            xs.push_back(c + 0.5);
            ys.push_back(r + 0.5);
        }
    }
    if (next == 0) throw error(errc::empty_input, "raster has no foreground pixels");
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            cell_id me = id_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (me < 0) continue;
            if (c + 1 < width) {
                cell_id right = id_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)];
                if (right >= 0) edges.emplace_back(me, right);
            }
            if (r + 1 < height) {
                cell_id down = id_at[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)];
                if (down >= 0) edges.emplace_back(me, down);
            }
        }
    }
    // Continuum's own connectivity check reports multi-component foregrounds.
    return Continuum(std::move(xs), std::move(ys), std::move(edges), "bitmap");
}

Continuum load_bitmap_file(const std::string& path, int threshold) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::bad_input, "cannot open raster file: " + path);
    return load_bitmap(in, threshold);
}

} // namespace peano
