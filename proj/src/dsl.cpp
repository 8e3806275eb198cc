#include "wienerarc/dsl.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "wienerarc/errors.hpp"

namespace wienerarc {

namespace {

constexpr std::size_t kMaxInput = 64 * 1024;
constexpr int kMaxDepth = 32;
constexpr double kWeightSumTolerance = 1e-12;

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(std::size_t at, const std::string& message) const {
        throw ParseError(at, message);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= src.size() || src[pos] != c) {
            fail(pos, std::string("expected '") + c + "'");
        }
        ++pos;
    }

    std::size_t ident_start = 0;
    std::string ident() {
        skip_ws();
        ident_start = pos;
        std::string word;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) {
            word += src[pos++];
        }
        if (word.empty()) fail(ident_start, "expected a measure keyword");
        return word;
    }

    // num := decimal literal | integer "/" positive-integer, optional sign.
    // The fraction is divided in long double and rounded to double once.
    double number(std::size_t* start_out = nullptr) {
        skip_ws();
        const std::size_t start = pos;
        if (start_out) *start_out = start;
        std::size_t scan = pos;
        if (scan < src.size() && (src[scan] == '+' || src[scan] == '-')) ++scan;
        std::size_t digits_begin = scan;
        while (scan < src.size() && std::isdigit(static_cast<unsigned char>(src[scan]))) ++scan;
        if (scan > digits_begin && scan < src.size() && src[scan] == '/') {
            const std::string num_text(src.substr(start, scan - start));
            const std::size_t den_start = scan + 1;
            std::size_t den_end = den_start;
            while (den_end < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[den_end]))) {
                ++den_end;
            }
            if (den_end == den_start) fail(den_start, "expected a positive integer denominator");
            const std::string den_text(src.substr(den_start, den_end - den_start));
            errno = 0;
            const long long num = std::strtoll(num_text.c_str(), nullptr, 10);
            const long long den = std::strtoll(den_text.c_str(), nullptr, 10);
            if (errno == ERANGE) fail(start, "fraction component out of range");
            if (den <= 0) fail(den_start, "denominator must be positive");
            pos = den_end;
            return static_cast<double>(static_cast<long double>(num) /
                                       static_cast<long double>(den));
        }
        // decimal literal via strtod
        const std::string text(src.substr(start, std::min(src.size() - start, std::size_t(64))));
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str()) fail(start, "expected a number");
        if (errno == ERANGE || !std::isfinite(v)) fail(start, "number out of range");
        pos = start + static_cast<std::size_t>(end - text.c_str());
        return v;
    }

    MeasureSpec spec(int depth) {
        if (depth > kMaxDepth) fail(pos, "nesting deeper than 32 levels");
        const std::string word = ident();
        const std::size_t word_at = ident_start;
        if (word == "lebesgue") return lebesgue();
        if (word == "cantor") return cantor_measure();
        if (word == "dirac") {
            expect('(');
            std::size_t at = 0;
            const double p = number(&at);
            check_position(p, at);
            expect(')');
            return dirac(p);
        }
        if (word == "atoms") return atoms_body(word_at);
        if (word == "density") return density_body(word_at);
        if (word == "mix") return mix_body(word_at, depth);
        if (word == "conv") {
            expect('(');
            MeasureSpec a = spec(depth + 1);
            expect(',');
            MeasureSpec b = spec(depth + 1);
            expect(')');
            return convolution(std::move(a), std::move(b));
        }
        if (word == "conj") {
            expect('(');
            MeasureSpec inner = spec(depth + 1);
            expect(')');
            return conjugate(std::move(inner));
        }
        fail(word_at, "unknown measure '" + word + "'");
    }

    void check_position(double p, std::size_t at) {
        if (!(p >= 0.0 && p < 1.0)) fail(at, "position must lie in [0,1)");
    }

    MeasureSpec atoms_body(std::size_t keyword_at) {
        expect('(');
        std::vector<Atom> atoms;
        double weight_sum = 0.0;
        while (true) {
            std::size_t p_at = 0, w_at = 0;
            const double p = number(&p_at);
            check_position(p, p_at);
            expect(':');
            const double w = number(&w_at);
            if (!(w > 0.0)) fail(w_at, "atom weight must be positive");
            for (const Atom& prev : atoms) {
                if (prev.position == p) fail(p_at, "duplicate atom position");
            }
            atoms.push_back(Atom{p, w});
            weight_sum += w;
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(')');
        if (std::abs(weight_sum - 1.0) > kWeightSumTolerance) {
            fail(keyword_at, "atom weights must sum to 1");
        }
        return atomic(std::move(atoms));
    }

    MeasureSpec density_body(std::size_t keyword_at) {
        (void)keyword_at;
        expect('(');
        std::vector<double> coeffs;
        double abs_sum = 0.0;
        while (true) {
            std::size_t at = 0;
            const double a = number(&at);
            abs_sum += std::abs(a);
            if (abs_sum >= 1.0) fail(at, "density needs sum |a_k| < 1");
            coeffs.push_back(a);
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(')');
        return cosine_density(std::move(coeffs));
    }

    MeasureSpec mix_body(std::size_t keyword_at, int depth) {
        expect('(');
        std::vector<double> weights;
        std::vector<MeasureSpec> parts;
        double weight_sum = 0.0;
        while (true) {
            std::size_t w_at = 0;
            const double w = number(&w_at);
            if (!(w > 0.0)) fail(w_at, "mixture weight must be positive");
            expect(':');
            parts.push_back(spec(depth + 1));
            weights.push_back(w);
            weight_sum += w;
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(')');
        if (std::abs(weight_sum - 1.0) > kWeightSumTolerance) {
            fail(keyword_at, "mixture weights must sum to 1");
        }
        return mixture(std::move(weights), std::move(parts));
    }
};

void check_text(std::string_view text) {
    if (text.size() > kMaxInput) {
        throw ParseError(kMaxInput, "input exceeds 64 KiB");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (static_cast<unsigned char>(text[i]) > 0x7f) {
            throw ParseError(i, "non-ASCII byte in input");
        }
    }
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void unparse_node(const MeasureSpec& spec, std::string& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, LebesgueMeasure>) {
                out += "lebesgue";
            } else if constexpr (std::is_same_v<T, CantorMeasure>) {
                out += "cantor";
            } else if constexpr (std::is_same_v<T, AtomicMeasure>) {
                if (node.atoms.size() == 1 && node.atoms[0].weight == 1.0) {
                    out += "dirac(";
                    append_number(out, node.atoms[0].position);
                    out += ')';
                    return;
                }
                out += "atoms(";
                for (std::size_t i = 0; i < node.atoms.size(); ++i) {
                    if (i) out += ',';
                    append_number(out, node.atoms[i].position);
                    out += ':';
                    append_number(out, node.atoms[i].weight);
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, CosineDensity>) {
                out += "density(";
                for (std::size_t i = 0; i < node.coeffs.size(); ++i) {
                    if (i) out += ',';
                    append_number(out, node.coeffs[i]);
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, Mixture>) {
                out += "mix(";
                for (std::size_t i = 0; i < node.parts.size(); ++i) {
                    if (i) out += ',';
                    append_number(out, node.weights[i]);
                    out += ':';
                    unparse_node(node.parts[i], out);
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, Convolution>) {
                out += "conv(";
                unparse_node(node.factors[0], out);
                out += ',';
                unparse_node(node.factors[1], out);
                out += ')';
            } else {
                out += "conj(";
                unparse_node(node.inner[0], out);
                out += ')';
            }
        },
        spec.node);
}

}  // namespace

MeasureSpec parse_measure(std::string_view text) {
    check_text(text);
    Parser parser{text};
    MeasureSpec spec = parser.spec(0);
    if (!parser.at_end()) {
        parser.fail(parser.pos, "trailing input after measure");
    }
    validate(spec);
    return spec;
}

std::string unparse_measure(const MeasureSpec& spec) {
    std::string out;
    unparse_node(spec, out);
    return out;
}

double parse_number(std::string_view text) {
    check_text(text);
    Parser parser{text};
    const double v = parser.number();
    if (!parser.at_end()) {
        parser.fail(parser.pos, "trailing input after number");
    }
    return v;
}

}  // namespace wienerarc
