#include "sigscope/point.hpp"

#include <numeric>
#include <sstream>

#include "sigscope/errors.hpp"

namespace sigscope {

std::vector<Letter> EPPoint::unroll(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
}

std::string EPPoint::to_string() const {
    std::ostringstream os;
    for (Letter a : prefix) os << a << ',';
    os << '(';
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (i) os << ',';
        os << period[i];
    }
    os << ')';
    return os.str();
}

EPPoint parse_point(const std::string& text) {
    EPPoint p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_number = [&]() -> Letter {
        skip_ws();
        if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
            fail(Errc::Parse, "expected a number in point literal '" + text + "'");
        Letter v = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<Letter>(text[i] - '0');
            ++i;
        }
        return v;
    };
    skip_ws();
    while (i < text.size() && text[i] != '(') {
        p.prefix.push_back(read_number());
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
        } else if (i >= text.size() || text[i] != '(') {
            fail(Errc::Parse, "expected ',' or '(' in point literal '" + text + "'");
        }
    }
    if (i >= text.size() || text[i] != '(')
        fail(Errc::Parse, "point literal '" + text + "' lacks a period");
    ++i;
    for (;;) {
        p.period.push_back(read_number());
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i >= text.size() || text[i] != ')')
        fail(Errc::Parse, "unterminated period in point literal '" + text + "'");
    ++i;
    skip_ws();
    if (i != text.size()) fail(Errc::Parse, "trailing characters in point literal '" + text + "'");
    if (p.period.empty()) fail(Errc::Parse, "point period must be nonempty");
    return p;
}

bool points_equal(const EPPoint& a, const EPPoint& b) {
    std::size_t pre = std::max(a.prefix.size(), b.prefix.size());
    std::size_t n = pre + std::lcm(a.period.size(), b.period.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i) != b.at(i)) return false;
    return true;
}

}  // namespace sigscope
