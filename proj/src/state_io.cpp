#include "groverian/state_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "groverian/errors.hpp"

namespace groverian {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

PureState parse_state(std::string_view text, bool normalize) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("state file: syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col),
                         line, col);
    }
    if (!doc.is_object()) throw ParseError("state file: top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError("state file: missing integer field \"n\"");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw ParseError("state file: missing array field \"amplitudes\"");
    }
    const auto n = doc["n"].get<long long>();
    if (n < 1 || n > kMaxQubits) {
        throw ParseError("state file: n must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    const auto& arr = doc["amplitudes"];
    Amplitudes amps;
    amps.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& a = arr[i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw ParseError("state file: amplitude " + std::to_string(i) + " is not a [re, im] pair");
        }
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    const auto expected = std::size_t{1} << n;
    if (amps.size() != expected) {
        throw ParseError("state file: expected " + std::to_string(expected) + " amplitudes for n=" +
                         std::to_string(n) + ", got " + std::to_string(amps.size()));
    }
    const int qubits = static_cast<int>(n);
    return normalize ? PureState::normalized(qubits, std::move(amps)) : PureState(qubits, std::move(amps));
}

PureState read_state_file(const std::filesystem::path& path, bool normalize) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str(), normalize);
}

std::string format_state(const PureState& state) {
    std::ostringstream out;
    out.precision(17);
    out << "{\"n\": " << state.n() << ", \"amplitudes\": [";
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i) out << ", ";
        out << '[' << state[i].real() << ", " << state[i].imag() << ']';
    }
    out << "]}\n";
    return out.str();
}

void write_state_file(const std::filesystem::path& path, const PureState& state) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write state file " + path.string());
    out << format_state(state);
}

}  // namespace groverian
