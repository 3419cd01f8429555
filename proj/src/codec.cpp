#include "gss/codec.hpp"

namespace gss {

std::vector<std::uint32_t> DigitString::flatten() const {
    std::vector<std::uint32_t> out;
    out.reserve(digit_count());
    for (std::uint8_t d : structure_digits) {
        out.push_back(d);
    }
    for (std::uint32_t d : color_digits) {
        out.push_back(d);
    }
    return out;
}

std::string DigitString::to_string() const {
    std::string s;
    for (std::uint8_t d : structure_digits) {
        s += static_cast<char>('0' + d);
    }
    for (std::size_t i = 0; i < color_digits.size(); ++i) {
        if (k > 10 && (i > 0 || !structure_digits.empty())) {
            s += '.';
        }
        s += std::to_string(color_digits[i]);
    }
    return s;
}

std::vector<std::uint32_t> digit_radices(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> radices(Graph::triangle_size(n), 2);
    if (k > 1) {
        radices.insert(radices.end(), n, k);
    }
    return radices;
}

DigitString unflatten_digits(const std::vector<std::uint32_t>& digits,
                             std::uint32_t n, std::uint32_t k) {
    const std::size_t t = Graph::triangle_size(n);
    const std::size_t expected = t + (k > 1 ? n : 0);
    if (digits.size() != expected) {
        throw CodecError("digit count does not match (n, k)");
    }
    DigitString d;
    d.n = n;
    d.k = k;
    d.structure_digits.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        if (digits[i] > 1) {
            throw CodecError("structure digit out of range");
        }
        d.structure_digits.push_back(static_cast<std::uint8_t>(digits[i]));
    }
    for (std::size_t i = t; i < digits.size(); ++i) {
        if (digits[i] >= k) {
            throw CodecError("color digit out of range");
        }
        d.color_digits.push_back(digits[i]);
    }
    return d;
}

DigitString encode_graph(const ColoredGraph& cg) {
    DigitString d;
    d.n = cg.graph.vertex_count();
    d.k = cg.coloring.palette_size();
    d.structure_digits = cg.graph.bits();
    if (d.k > 1) {
        d.color_digits = cg.coloring.colors();
    }
    return d;
}

static void check_well_formed(const DigitString& d) {
    if (d.n < 1 || d.k < 1) {
        throw CodecError("digit string needs n >= 1 and k >= 1");
    }
    if (d.structure_digits.size() != Graph::triangle_size(d.n)) {
        throw CodecError("structure digit count does not match n");
    }
    for (std::uint8_t b : d.structure_digits) {
        if (b > 1) {
            throw CodecError("structure digit out of range");
        }
    }
    if (d.k == 1) {
        if (!d.color_digits.empty()) {
            throw CodecError("color digits present but k = 1");
        }
    } else {
        if (d.color_digits.size() != d.n) {
            throw CodecError("color digit count does not match n");
        }
        for (std::uint32_t c : d.color_digits) {
            if (c >= d.k) {
                throw CodecError("color digit out of range");
            }
        }
    }
}

ColoredGraph decode_graph(const DigitString& d) {
    check_well_formed(d);
    Graph g(d.n, d.structure_digits);
    if (d.k == 1) {
        return ColoredGraph::structure_only(std::move(g));
    }
    return ColoredGraph(std::move(g), Coloring(d.k, d.color_digits));
}

BigInt digits_to_integer(const DigitString& d) {
    check_well_formed(d);
    BigInt v = 0;
    for (std::uint8_t b : d.structure_digits) {
        v = v * 2 + b;
    }
    for (std::uint32_t c : d.color_digits) {
        v = v * d.k + c;
    }
    return v;
}

DigitString integer_to_digits(const BigInt& v, std::uint32_t n, std::uint32_t k) {
    if (n < 1 || k < 1) {
        throw CodecError("digit space needs n >= 1 and k >= 1");
    }
    if (v < 0 || v >= digit_space_size(n, k)) {
        throw CodecError("value out of digit space");
    }
    DigitString d;
    d.n = n;
    d.k = k;
    BigInt rest = v;
    if (k > 1) {
        d.color_digits.resize(n);
        for (std::uint32_t i = n; i-- > 0;) {
            d.color_digits[i] = static_cast<std::uint32_t>(rest % k);
            rest /= k;
        }
    }
    const std::size_t t = Graph::triangle_size(n);
    d.structure_digits.resize(t);
    for (std::size_t i = t; i-- > 0;) {
        d.structure_digits[i] = static_cast<std::uint8_t>(rest % 2);
        rest /= 2;
    }
    return d;
}

BigInt digit_space_size(std::uint32_t n, std::uint32_t k) {
    BigInt space = gamma(n);
    if (k > 1) {
        space *= boost::multiprecision::pow(BigInt(k), n);
    }
    return space;
}

BigInt gamma(std::uint32_t n) {
    return BigInt(1) << Graph::triangle_size(n);
}

Graph number_to_graph(const BitPayload& p) {
    const std::size_t l = p.bits.size();
    std::uint32_t n = 1;
    while (Graph::triangle_size(n) < l) {
        ++n;
    }
    std::vector<std::uint8_t> bits(Graph::triangle_size(n), 0);
    std::copy(p.bits.begin(), p.bits.end(), bits.begin());
    return Graph(n, std::move(bits));
}

BitPayload graph_to_number(const Graph& g, std::size_t declared_length) {
    const auto& bits = g.bits();
    if (declared_length > bits.size()) {
        throw CodecError("declared length exceeds triangle size");
    }
    for (std::size_t i = declared_length; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            throw CodecError("padding violated: nonzero bit past declared length");
        }
    }
    return BitPayload{std::vector<std::uint8_t>(bits.begin(),
                                                bits.begin() + declared_length)};
}

} // namespace gss
