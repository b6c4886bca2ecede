#include "binomdiv/factorial_ratio.hpp"

#include <cctype>
#include <charconv>

namespace binomdiv::ratio {

std::string to_text(const LinearForm& f) {
    std::string s;
    if (f.coeff != 0) {
        if (f.coeff == -1)
            s += '-';
        else if (f.coeff != 1)
            s += std::to_string(f.coeff);
        s += 'n';
        if (f.offset > 0)
            s += '+' + std::to_string(f.offset);
        else if (f.offset < 0)
            s += std::to_string(f.offset);
    } else {
        s = std::to_string(f.offset);
    }
    return s;
}

std::string to_text(const FactorialRatioSpec& spec) {
    auto side = [&](int sign) {
        std::string s;
        for (const auto& [form, sg] : spec.factorial_terms)
            if (sg == sign) s += (s.empty() ? "" : " ") + ("(" + to_text(form) + ")!");
        for (const auto& [form, sg] : spec.linear_terms)
            if (sg == sign) s += (s.empty() ? "" : " ") + ("[" + to_text(form) + "]");
        return s;
    };
    std::string num = side(+1);
    std::string den = side(-1);
    if (num.empty()) num = "1";
    return den.empty() ? num : num + " / " + den;
}

namespace {

i64 parse_i64(std::string_view s) {
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("ratio: bad integer '" + std::string(s) + "'");
    return value;
}

LinearForm parse_linear(std::string_view raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("ratio: empty linear form");

    auto npos = s.find('n');
    if (npos == std::string::npos) return {0, parse_i64(s)};
    if (s.find('n', npos + 1) != std::string::npos)
        throw std::invalid_argument("ratio: bad linear form '" + s + "'");

    std::string_view head = std::string_view(s).substr(0, npos);
    std::string_view tail = std::string_view(s).substr(npos + 1);
    i64 coeff;
    if (head.empty() || head == "+")
        coeff = 1;
    else if (head == "-")
        coeff = -1;
    else
        coeff = parse_i64(head);
    i64 offset = 0;
    if (!tail.empty()) {
        std::string_view magnitude = tail.substr(1);
        if ((tail[0] != '+' && tail[0] != '-') || magnitude.empty() ||
            !std::isdigit(static_cast<unsigned char>(magnitude[0])))
            throw std::invalid_argument("ratio: bad linear form '" + s + "'");
        offset = parse_i64(magnitude);
        if (tail[0] == '-') offset = -offset;
    }
    return {coeff, offset};
}

void parse_side(std::string_view side, int sign, FactorialRatioSpec& spec) {
    size_t i = 0;
    bool saw_term = false;
    auto skip_ws = [&] {
        while (i < side.size() && std::isspace(static_cast<unsigned char>(side[i]))) ++i;
    };
    for (skip_ws(); i < side.size(); skip_ws()) {
        char open = side[i];
        if (open == '1' && !saw_term && sign == +1) {
            // A bare "1" stands for an empty numerator; nothing else may follow.
            ++i;
            skip_ws();
            if (i != side.size())
                throw std::invalid_argument("ratio: unexpected text after '1' in numerator");
            return;
        }
        if (open != '(' && open != '[')
            throw std::invalid_argument(std::string("ratio: expected '(' or '[', got '") +
                                        side[i] + "'");
        char close = open == '(' ? ')' : ']';
        size_t end = side.find(close, i + 1);
        if (end == std::string_view::npos)
            throw std::invalid_argument("ratio: unterminated term in '" + std::string(side) + "'");
        LinearForm form = parse_linear(side.substr(i + 1, end - i - 1));
        i = end + 1;
        if (open == '(') {
            if (i >= side.size() || side[i] != '!')
                throw std::invalid_argument("ratio: factorial term missing '!' in '" +
                                            std::string(side) + "'");
            ++i;
            spec.fact(form, sign);
        } else {
            spec.linear(form, sign);
        }
        saw_term = true;
    }
    if (!saw_term)
        throw std::invalid_argument(sign == -1 ? "ratio: empty denominator after '/'"
                                               : "ratio: empty spec text");
}

} // namespace

FactorialRatioSpec parse_spec(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos && text.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("ratio: more than one '/' in spec text");

    FactorialRatioSpec spec;
    parse_side(slash == std::string_view::npos ? text : text.substr(0, slash), +1, spec);
    if (slash != std::string_view::npos) parse_side(text.substr(slash + 1), -1, spec);
    return spec;
}

} // namespace binomdiv::ratio
