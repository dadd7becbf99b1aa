#pragma once

// graph6 reader and writer (header-less records). Orders up to 62 use the
// one-character size prefix; order 63 uses the '~' + 18-bit form.

#include <string>
#include <string_view>

#include "isogame/graph.hpp"

namespace isogame {

inline std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

/// Parses one graph6 record. Trailing whitespace (a line ending) is ignored.
inline Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw MalformedGraph6("empty graph6 record");
    for (char c : text)
        if (c < 63 || c > 126)
            throw MalformedGraph6(std::string("invalid graph6 character '") + c + "'");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8) throw MalformedGraph6("truncated graph6 size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (text[i] - 63);
        pos = 8;
    } else {
        if (text.size() < 4) throw MalformedGraph6("truncated graph6 size field");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - 63);
        pos = 4;
    }
    if (n > max_order)
        throw OrderTooLarge("graph6 record has order " + std::to_string(n) + " > " +
                            std::to_string(max_order));

    const long bits = n * (n - 1) / 2;
    const long chars = (bits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != chars)
        throw MalformedGraph6("graph6 record for order " + std::to_string(n) + " needs " +
                              std::to_string(chars) + " data characters, got " +
                              std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int word = text[pos + k / 6] - 63;
            if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        const int word = text[pos + k / 6] - 63;
        if (word & ((1 << (6 - k % 6)) - 1)) throw MalformedGraph6("nonzero graph6 padding bits");
    }
    return build_graph(static_cast<int>(n), edges);
}

} // namespace isogame
