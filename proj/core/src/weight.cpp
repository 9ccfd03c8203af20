#include "hermitian/weight.hpp"

#include <algorithm>

namespace hermitian {

std::int64_t HalfInt::to_int() const
{
    require(is_integer(), "expected an integer, got " + to_string());
    return twice_ / 2;
}

std::string HalfInt::to_string() const
{
    if (is_integer())
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

std::string Weight::to_string() const
{
    std::string s = "[";
    for (int i = 0; i < size(); i++) {
        if (i)
            s += (split && *split == i) ? ";" : ",";
        s += coords[i].to_string();
    }
    if (split && *split == size() && size() > 0)
        s += ";";
    return s + "]";
}

Weight make_weight(const std::vector<std::int64_t> &v, std::optional<int> split)
{
    Weight w;
    for (auto x : v)
        w.coords.emplace_back(x);
    w.split = split;
    return w;
}

Weight operator+(const Weight &a, const Weight &b)
{
    require(a.size() == b.size(), "weight length mismatch");
    Weight r = a;
    for (int i = 0; i < a.size(); i++)
        r.coords[i] += b.coords[i];
    return r;
}

Weight operator-(const Weight &a, const Weight &b)
{
    require(a.size() == b.size(), "weight length mismatch");
    Weight r = a;
    for (int i = 0; i < a.size(); i++)
        r.coords[i] -= b.coords[i];
    return r;
}

Weight dual(const Weight &w)
{
    Weight r;
    r.coords.assign(w.coords.rbegin(), w.coords.rend());
    for (auto &c : r.coords)
        c = -c;
    if (w.split)
        r.split = w.size() - *w.split;
    return r;
}

bool all_integral(const Weight &w)
{
    return std::all_of(w.coords.begin(), w.coords.end(), [](HalfInt h) { return h.is_integer(); });
}

} // namespace hermitian
