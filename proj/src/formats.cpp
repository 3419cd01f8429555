#include "gss/formats.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace gss {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            throw FormatError("missing trailing newline",
                              static_cast<int>(lines.size() + 1));
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::uint64_t parse_uint(std::string_view s, int line, const char* what) {
    std::uint64_t value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        throw FormatError(std::string("invalid ") + what, line);
    }
    return value;
}

std::string to_hex_block(std::uint64_t v) {
    static const char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

std::uint64_t from_hex_block(std::string_view s, int line) {
    std::uint64_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9') {
            v |= static_cast<std::uint64_t>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v |= static_cast<std::uint64_t>(c - 'a' + 10);
        } else {
            throw FormatError("invalid hex digit in payload", line);
        }
    }
    return v;
}

} // namespace

std::string render_gsf(const ColoredGraph& cg) {
    const DigitString d = encode_graph(cg);
    std::string out = "GSF 1 " + std::to_string(d.n) + ' ' + std::to_string(d.k) + '\n';
    for (std::uint8_t b : d.structure_digits) {
        out += static_cast<char>('0' + b);
    }
    out += '\n';
    if (d.k > 1) {
        for (std::size_t i = 0; i < d.color_digits.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(d.color_digits[i]);
        }
        out += '\n';
    }
    return out;
}

ColoredGraph parse_gsf(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) {
        throw FormatError("empty file", 1);
    }
    std::istringstream header(lines[0]);
    std::string magic;
    std::string version;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    if (!(header >> magic >> version >> n >> k) || magic != "GSF" ||
        version != "1" || !header.eof()) {
        throw FormatError("expected header 'GSF 1 <n> <k>'", 1);
    }
    if (n < 1 || k < 1) {
        throw FormatError("need n >= 1 and k >= 1", 1);
    }
    const std::size_t expected_lines = k > 1 ? 3 : 2;
    if (lines.size() != expected_lines) {
        throw FormatError("wrong number of lines for this header",
                          static_cast<int>(lines.size()));
    }
    const std::size_t t = Graph::triangle_size(n);
    if (lines[1].size() != t) {
        throw FormatError("structure line must hold exactly n(n-1)/2 bits", 2);
    }
    std::vector<std::uint8_t> bits(t);
    for (std::size_t i = 0; i < t; ++i) {
        if (lines[1][i] != '0' && lines[1][i] != '1') {
            throw FormatError("structure bits must be 0 or 1", 2);
        }
        bits[i] = static_cast<std::uint8_t>(lines[1][i] - '0');
    }
    Graph g(n, std::move(bits));
    if (k == 1) {
        return ColoredGraph::structure_only(std::move(g));
    }
    std::istringstream colors_in(lines[2]);
    std::vector<std::uint32_t> colors;
    std::string token;
    while (colors_in >> token) {
        const std::uint64_t c = parse_uint(token, 3, "color digit");
        if (c >= k) {
            throw FormatError("color digit out of palette range", 3);
        }
        colors.push_back(static_cast<std::uint32_t>(c));
    }
    if (colors.size() != n) {
        throw FormatError("expected one color digit per vertex", 3);
    }
    if (!lines[2].empty() && (lines[2].back() == ' ' || lines[2].front() == ' ')) {
        throw FormatError("no leading or trailing whitespace allowed", 3);
    }
    return ColoredGraph(std::move(g), Coloring(k, std::move(colors)));
}

std::string render_gsh(const Share& share) {
    const ShareMetadata& m = share.meta;
    std::string out;
    out += "format=GSH/1\n";
    out += std::string("scheme=") + scheme_name(m.scheme) + '\n';
    out += std::string("kind=") + secret_kind_name(m.secret.kind) + '\n';
    out += "n=" + std::to_string(m.secret.n) + '\n';
    out += "k=" + std::to_string(m.secret.k) + '\n';
    if (m.secret.kind == SecretKind::number_as_graph) {
        out += "l=" + std::to_string(m.secret.declared_length) + '\n';
    }
    out += std::string("predicate=") + predicate_name(m.predicate) + '\n';
    out += "participant=" + std::to_string(share.participant_index) + '\n';
    out += "n_participants=" + std::to_string(m.n_participants) + '\n';
    if (m.scheme == SchemeKind::shamir) {
        out += "threshold=" + std::to_string(m.threshold) + '\n';
        out += "prime=" + std::to_string(m.prime) + '\n';
        if (is_test_prime(m.prime)) {
            out += "test_prime=1\n";
        }
        out += "payload=";
        for (std::uint64_t b : share.field_blocks) {
            out += to_hex_block(b);
        }
        out += '\n';
    } else {
        out += "radices=";
        for (std::size_t i = 0; i < m.radices.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(m.radices[i]);
        }
        out += '\n';
        out += "payload=";
        for (std::size_t i = 0; i < share.digits.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(share.digits[i]);
        }
        out += '\n';
    }
    return out;
}

Share parse_gsh(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);
    std::map<std::string, std::pair<std::string, int>> kv;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line = static_cast<int>(i + 1);
        const std::size_t eq = lines[i].find('=');
        if (eq == std::string::npos) {
            throw FormatError("expected key=value", line);
        }
        const std::string key = lines[i].substr(0, eq);
        if (!kv.emplace(key, std::make_pair(lines[i].substr(eq + 1), line)).second) {
            throw FormatError("duplicate key '" + key + "'", line);
        }
    }
    auto take = [&kv](const std::string& key) -> std::pair<std::string, int> {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw FormatError("missing key '" + key + "'");
        }
        auto value = it->second;
        kv.erase(it);
        return value;
    };

    if (auto [fmt, line] = take("format"); fmt != "GSH/1") {
        throw FormatError("unsupported format '" + fmt + "'", line);
    }

    Share share;
    ShareMetadata& m = share.meta;

    {
        auto [value, line] = take("scheme");
        auto scheme = scheme_from_name(value);
        if (!scheme) {
            throw FormatError("unknown scheme '" + value + "'", line);
        }
        m.scheme = *scheme;
    }
    {
        auto [value, line] = take("kind");
        auto kind = secret_kind_from_name(value);
        if (!kind) {
            throw FormatError("unknown kind '" + value + "'", line);
        }
        m.secret.kind = *kind;
    }
    {
        auto [value, line] = take("n");
        m.secret.n = static_cast<std::uint32_t>(parse_uint(value, line, "n"));
        if (m.secret.n < 1) {
            throw FormatError("n must be at least 1", line);
        }
    }
    {
        auto [value, line] = take("k");
        m.secret.k = static_cast<std::uint32_t>(parse_uint(value, line, "k"));
        if (m.secret.k < 1) {
            throw FormatError("k must be at least 1", line);
        }
    }
    if (m.secret.kind == SecretKind::number_as_graph) {
        auto [value, line] = take("l");
        m.secret.declared_length = parse_uint(value, line, "l");
        if (m.secret.declared_length > Graph::triangle_size(m.secret.n)) {
            throw FormatError("l exceeds the triangle size for n", line);
        }
    }
    if (m.secret.kind == SecretKind::coloring && m.secret.k < 2) {
        throw FormatError("coloring shares need k >= 2");
    }
    if ((m.secret.kind == SecretKind::structure ||
         m.secret.kind == SecretKind::number_as_graph) &&
        m.secret.k != 1) {
        throw FormatError("structure-only shares need k = 1");
    }
    {
        auto [value, line] = take("predicate");
        auto predicate = predicate_from_name(value);
        if (!predicate) {
            throw FormatError("unknown predicate '" + value + "'", line);
        }
        m.predicate = *predicate;
    }
    {
        auto [value, line] = take("participant");
        share.participant_index =
            static_cast<std::uint32_t>(parse_uint(value, line, "participant"));
    }
    {
        auto [value, line] = take("n_participants");
        m.n_participants =
            static_cast<std::uint32_t>(parse_uint(value, line, "n_participants"));
    }
    if (share.participant_index < 1 ||
        share.participant_index > m.n_participants) {
        throw FormatError("participant index out of range");
    }

    if (m.scheme == SchemeKind::shamir) {
        {
            auto [value, line] = take("threshold");
            m.threshold = static_cast<std::uint32_t>(parse_uint(value, line, "threshold"));
            if (m.threshold < 1 || m.threshold > m.n_participants) {
                throw FormatError("need 1 <= threshold <= n_participants", line);
            }
        }
        {
            auto [value, line] = take("prime");
            m.prime = parse_uint(value, line, "prime");
            if (!is_supported_prime(m.prime)) {
                throw FormatError("unsupported prime", line);
            }
        }
        if (is_test_prime(m.prime)) {
            auto [value, line] = take("test_prime");
            if (value != "1") {
                throw FormatError("test_prime marker must be 1", line);
            }
        }
        auto [payload, line] = take("payload");
        const std::size_t blocks = block_count_for_space(
            descriptor_space_size(m.secret), block_bits_for_prime(m.prime));
        if (payload.size() != blocks * 16) {
            throw FormatError("payload length does not match the secret space", line);
        }
        for (std::size_t i = 0; i < blocks; ++i) {
            const std::uint64_t b =
                from_hex_block(std::string_view(payload).substr(i * 16, 16), line);
            if (b >= m.prime) {
                throw FormatError("payload block not a field element", line);
            }
            share.field_blocks.push_back(b);
        }
    } else {
        {
            auto [value, line] = take("radices");
            std::istringstream in(value);
            std::string token;
            while (std::getline(in, token, ',')) {
                m.radices.push_back(
                    static_cast<std::uint32_t>(parse_uint(token, line, "radix")));
            }
            if (m.radices != descriptor_radices(m.secret)) {
                throw FormatError("radices do not match the secret descriptor", line);
            }
        }
        auto [payload, line] = take("payload");
        std::istringstream in(payload);
        std::string token;
        while (in >> token) {
            share.digits.push_back(
                static_cast<std::uint32_t>(parse_uint(token, line, "payload digit")));
        }
        if (share.digits.size() != m.radices.size()) {
            throw FormatError("payload digit count does not match radices", line);
        }
        for (std::size_t i = 0; i < share.digits.size(); ++i) {
            if (share.digits[i] >= m.radices[i]) {
                throw FormatError("payload digit out of radix range", line);
            }
        }
    }

    if (!kv.empty()) {
        const auto& [key, value] = *kv.begin();
        throw FormatError("unknown key '" + key + "'", value.second);
    }
    return share;
}

ColoredGraph read_gsf_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gsf(buf.str());
}

Share read_gsh_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gsh(buf.str());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw FormatError("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw FormatError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace gss
