#include "symring/io.hpp"

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "symring/error.hpp"

namespace symring {

namespace {

struct Location {
    const std::string* path;
    int line;
};

[[noreturn]] void fail(const Location& at, const std::string& message) {
    throw Error(*at.path + ":" + std::to_string(at.line) + ": " + message);
}

std::string stripped(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    std::size_t begin = 0;
    while (begin < line.size() && is_space(line[begin])) ++begin;
    std::size_t end = line.size();
    while (end > begin && is_space(line[end - 1])) --end;
    return line.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        auto pos = text.find(sep, begin);
        parts.push_back(stripped(text.substr(begin, pos - begin)));
        if (pos == std::string::npos) return parts;
        begin = pos + 1;
    }
}

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

/// Delivers comment-stripped, non-blank lines together with their
/// 1-based position in the file.
class LineReader {
  public:
    explicit LineReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw Error(path + ": cannot open file");
    }

    std::optional<std::pair<int, std::string>> next() {
        for (std::string raw; std::getline(in_, raw);) {
            ++line_;
            std::string line = stripped(std::move(raw));
            if (!line.empty()) return std::pair{line_, std::move(line)};
        }
        return std::nullopt;
    }

    Location at(int line) const { return Location{&path_, line}; }

  private:
    std::string path_;
    std::ifstream in_;
    int line_ = 0;
};

int parse_int(const std::string& tok, const Location& at, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(at, "malformed " + what + " '" + tok + "'");
    }
    if (used != tok.size()) fail(at, "malformed " + what + " '" + tok + "'");
    return value;
}

Rational parse_coefficient(const std::string& tok, const Location& at) {
    try {
        return parse_rational(tok);
    } catch (const Error& e) {
        fail(at, e.what());
    }
}

/// "NUM/DEN : i1 i2 ... ir". With degree < 0 the image count is free;
/// otherwise it must match.
std::pair<Rational, Permutation> parse_term(const std::string& text, int degree,
                                            const Location& at) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail(at, "expected 'COEFF : i1 i2 ... ir'");
    const std::string coeff_text = stripped(text.substr(0, colon));
    if (coeff_text.empty()) fail(at, "missing coefficient before ':'");
    Rational coeff = parse_coefficient(coeff_text, at);
    std::vector<int> images;
    for (const auto& tok : tokens(text.substr(colon + 1)))
        images.push_back(parse_int(tok, at, "image"));
    if (images.empty()) fail(at, "missing permutation images after ':'");
    if (degree >= 0 && static_cast<int>(images.size()) != degree)
        fail(at, "expected " + std::to_string(degree) + " images, got " +
                     std::to_string(images.size()));
    try {
        return {std::move(coeff), Permutation(images)};
    } catch (const Error& e) {
        fail(at, e.what());
    }
}

/// Header fields "k=v" separated by whitespace. b0 entries may sit in the
/// b0= token comma-separated or follow it as bare integers.
struct Header {
    std::optional<int> r, d, l;
    std::optional<std::vector<int>> b0;
};

Header parse_header(const std::string& text, const Location& at) {
    Header h;
    bool in_b0 = false;
    auto set = [&](std::optional<int>& slot, const std::string& value, const std::string& key) {
        if (slot) fail(at, "duplicate field '" + key + "'");
        slot = parse_int(value, at, key);
    };
    for (const auto& tok : tokens(text)) {
        if (tok.rfind("r=", 0) == 0) {
            set(h.r, tok.substr(2), "r");
            in_b0 = false;
        } else if (tok.rfind("d=", 0) == 0) {
            set(h.d, tok.substr(2), "d");
            in_b0 = false;
        } else if (tok.rfind("l=", 0) == 0) {
            set(h.l, tok.substr(2), "l");
            in_b0 = false;
        } else if (tok.rfind("b0=", 0) == 0) {
            if (h.b0) fail(at, "duplicate field 'b0'");
            h.b0.emplace();
            for (const auto& part : split(tok.substr(3), ','))
                if (!part.empty()) h.b0->push_back(parse_int(part, at, "b0 entry"));
            in_b0 = true;
        } else if (in_b0) {
            h.b0->push_back(parse_int(tok, at, "b0 entry"));
        } else {
            fail(at, "unexpected token '" + tok + "' in header");
        }
    }
    return h;
}

ContractionSpec contraction_from_header(const Header& h, int r, const Location& at) {
    ContractionSpec spec;
    spec.r = r;
    spec.l = *h.l;
    if (h.b0) spec.b0 = *h.b0;
    if (spec.l < 1) fail(at, "l must be at least 1");
    if (2 * spec.l > r) fail(at, "2*l exceeds r");
    if (static_cast<int>(spec.b0.size()) != r - 2 * spec.l)
        fail(at, "b0 needs exactly " + std::to_string(r - 2 * spec.l) + " entries, got " +
                     std::to_string(spec.b0.size()));
    for (int v : spec.b0)
        if (v < 0) fail(at, "b0 entries are 0-based basis indices and cannot be negative");
    return spec;
}

}  // namespace

GroupRingElement read_element_file(const std::string& path) {
    LineReader reader(path);
    std::optional<GroupRingElement> element;
    while (auto entry = reader.next()) {
        const auto& [line, text] = *entry;
        auto [coeff, perm] =
            parse_term(text, element ? element->degree() : -1, reader.at(line));
        if (!element) element.emplace(GroupRingElement::zero(perm.degree()));
        element->add_term(perm, coeff);
    }
    if (!element) throw Error(path + ": no terms found");
    return *element;
}

SymmetrySpec read_symmetry_file(const std::string& path) {
    LineReader reader(path);
    auto header_entry = reader.next();
    if (!header_entry) throw Error(path + ": missing 'r=<r>' header");
    Header header = parse_header(header_entry->second, reader.at(header_entry->first));
    if (!header.r || header.d || header.l || header.b0)
        fail(reader.at(header_entry->first), "symmetry header is exactly 'r=<r>'");
    SymmetrySpec spec;
    spec.r = *header.r;
    if (spec.r < 1) fail(reader.at(header_entry->first), "r must be at least 1");
    while (auto entry = reader.next()) {
        const auto& [line, text] = *entry;
        GroupRingElement generator = GroupRingElement::zero(spec.r);
        for (const auto& part : split(text, ';')) {
            if (part.empty()) fail(reader.at(line), "empty term between ';'");
            auto [coeff, perm] = parse_term(part, spec.r, reader.at(line));
            generator.add_term(perm, coeff);
        }
        spec.generators.push_back(std::move(generator));
    }
    if (spec.generators.empty()) throw Error(path + ": no generators found");
    return spec;
}

TensorDense read_tensor_file(const std::string& path) {
    LineReader reader(path);
    auto header_entry = reader.next();
    if (!header_entry) throw Error(path + ": missing 'd=<d> r=<r>' header");
    const Location header_at = reader.at(header_entry->first);
    Header header = parse_header(header_entry->second, header_at);
    if (!header.d || !header.r || header.l || header.b0)
        fail(header_at, "tensor header is exactly 'd=<d> r=<r>'");
    const int d = *header.d, r = *header.r;
    if (d < 1) fail(header_at, "d must be at least 1");
    if (r < 0) fail(header_at, "r cannot be negative");
    constexpr std::size_t kMaxEntries = std::size_t{1} << 26;
    std::size_t count = 1;
    for (int k = 0; k < r; ++k) {
        if (count > kMaxEntries / static_cast<std::size_t>(d))
            fail(header_at, "tensor has more than " + std::to_string(kMaxEntries) + " entries");
        count *= static_cast<std::size_t>(d);
    }
    TensorDense tensor(r, d);
    std::size_t filled = 0;
    while (auto entry = reader.next()) {
        const auto& [line, text] = *entry;
        for (const auto& tok : tokens(text)) {
            if (filled == count)
                fail(reader.at(line), "more than " + std::to_string(count) + " entries");
            tensor.coordinates()[filled++] = parse_coefficient(tok, reader.at(line));
        }
    }
    if (filled != count)
        throw Error(path + ": expected " + std::to_string(count) + " entries, got " +
                    std::to_string(filled));
    return tensor;
}

MetricSignature parse_signature(const std::string& text) {
    std::vector<int> signs;
    for (const auto& part : split(text, ',')) {
        if (part == "+")
            signs.push_back(1);
        else if (part == "-")
            signs.push_back(-1);
        else
            throw Error("signature entries must be '+' or '-', got '" + part + "'");
    }
    return MetricSignature(std::move(signs));
}

Expression read_expression_file(const std::string& path) {
    LineReader reader(path);
    auto header_entry = reader.next();
    if (!header_entry) throw Error(path + ": missing 'r=<r>' header");
    const Location header_at = reader.at(header_entry->first);
    Header header = parse_header(header_entry->second, header_at);
    if (!header.r || header.d) fail(header_at, "expression header starts with 'r=<r>'");
    if (header.b0 && !header.l) fail(header_at, "b0 requires l");
    Expression tau;
    tau.r = *header.r;
    if (tau.r < 1) fail(header_at, "r must be at least 1");
    if (header.l) tau.contraction = contraction_from_header(header, tau.r, header_at);
    while (auto entry = reader.next()) {
        const auto& [line, text] = *entry;
        auto [coeff, perm] = parse_term(text, tau.r, reader.at(line));
        auto it = tau.terms.try_emplace(perm, 0).first;
        it->second += coeff;
        if (it->second == 0) tau.terms.erase(it);
    }
    return tau;
}

std::string element_lines(const GroupRingElement& a) {
    std::string out;
    for (const auto& [perm, coeff] : a.terms()) {
        out += to_string(coeff);
        out += " :";
        for (int k = 1; k <= a.degree(); ++k) out += ' ' + std::to_string(perm(k));
        out += '\n';
    }
    return out;
}

std::string expression_lines(const Expression& tau) {
    std::string out = "r=" + std::to_string(tau.r);
    if (tau.contraction) {
        out += " l=" + std::to_string(tau.contraction->l);
        if (!tau.contraction->b0.empty()) {
            out += " b0=";
            for (std::size_t k = 0; k < tau.contraction->b0.size(); ++k) {
                if (k > 0) out += ',';
                out += std::to_string(tau.contraction->b0[k]);
            }
        }
    }
    out += '\n';
    for (const auto& [perm, coeff] : tau.terms) {
        out += to_string(coeff);
        out += " :";
        for (int k = 1; k <= tau.r; ++k) out += ' ' + std::to_string(perm(k));
        out += '\n';
    }
    return out;
}

std::string identity_stanzas(const IdentityBasis& ids) {
    std::string out;
    bool first = true;
    for (const auto& vec : ids.vectors) {
        if (!first) out += '\n';
        first = false;
        for (std::size_t k = 0; k < ids.candidates.size(); ++k) {
            if (vec[k] == 0) continue;
            const Permutation& perm = ids.candidates[k];
            out += to_string(vec[k]);
            out += " :";
            for (int i = 1; i <= perm.degree(); ++i) out += ' ' + std::to_string(perm(i));
            out += '\n';
        }
    }
    return out;
}

}  // namespace symring
