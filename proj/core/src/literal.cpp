#include "hermitian/literal.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace hermitian {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

long parse_long(std::string_view token, std::string_view whole)
{
    std::string_view t = trim(token);
    long v = 0;
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || end != t.data() + t.size())
        throw ValidationError("bad token '" + std::string(token) + "' in '" + std::string(whole) + "'");
    return v;
}

std::string_view strip(std::string_view text, char open, char close, const char *what)
{
    std::string_view t = trim(text);
    if (t.size() < 2 || t.front() != open || t.back() != close)
        throw ValidationError(std::string(what) + " literal must look like " + open + "..." +
                              close + ": '" + std::string(text) + "'");
    return trim(t.substr(1, t.size() - 2));
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    if (trim(s).empty())
        return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); i++)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

std::vector<int> ints(std::string_view body, std::string_view whole)
{
    std::vector<int> v;
    for (auto tok : split(body, ','))
        v.push_back(static_cast<int>(parse_long(tok, whole)));
    return v;
}

} // namespace

std::vector<int> parse_int_list(std::string_view text)
{
    return ints(strip(text, '[', ']', "list"), text);
}

Partition parse_partition(std::string_view text)
{
    return Partition(parse_int_list(text));
}

Frobenius parse_frobenius(std::string_view text)
{
    std::string_view body = strip(text, '(', ')', "Frobenius");
    auto halves = split(body, '|');
    if (body.find('|') == std::string_view::npos || halves.size() > 2)
        throw ValidationError("Frobenius literal needs exactly one '|': '" + std::string(text) + "'");
    std::string_view arms = body.substr(0, body.find('|'));
    std::string_view legs = body.substr(body.find('|') + 1);
    Frobenius f{ints(arms, text), ints(legs, text)};
    from_frobenius(f); /* validates */
    return f;
}

HalfInt parse_half(std::string_view token)
{
    std::string_view t = trim(token);
    auto slash = t.find('/');
    if (slash == std::string_view::npos)
        return HalfInt(parse_long(t, token));
    long den = parse_long(t.substr(slash + 1), token);
    if (den != 2)
        throw ValidationError("bad token '" + std::string(token) + "': only halves a/2 are allowed");
    return HalfInt::from_twice(parse_long(t.substr(0, slash), token));
}

Weight parse_weight(std::string_view text)
{
    std::string_view body = strip(text, '[', ']', "weight");
    Weight w;
    auto blocks = split(body, ';');
    if (blocks.size() > 2)
        throw ValidationError("weight literal has more than one ';': '" + std::string(text) + "'");
    for (std::size_t b = 0; b < blocks.size(); b++) {
        if (b == 1)
            w.split = w.size();
        for (auto tok : split(blocks[b], ','))
            w.coords.push_back(parse_half(tok));
    }
    if (blocks.size() == 1 && body.find(';') != std::string_view::npos)
        w.split = w.size();
    return w;
}

} // namespace hermitian
